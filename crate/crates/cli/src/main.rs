use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use oddorient::cache::Verdict;
use oddorient::export::to_dot;
use oddorient::input::{load, load_graph, load_orientation, Loaded};
use oddorient::suite::{run_suite, select, SuiteOptions};
use oddorient_core::color::{is_s_wide, k_coloring};
use oddorient_core::construct::{
    find_bipartite_matching_partition, partition_orientation, schrijver4_construction, source_orientation_kneser,
    three_color_orientation, ConstructionReport, TieRule,
};
use oddorient_core::graph::Relational;
use oddorient_core::homsearch::{
    find_homomorphism_with_stats, hom_to_some_shift, joint_orientation_coloring_search, SearchConfig, ShiftWitness,
};
use oddorient_core::oddcycles::{all_shortest_odd_cycles_alternating, alternating_verdict};
use oddorient_core::{Budget, Error};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "oddorient", version, about = "Orientations without alternating odd cycles: generators, searches and the check suite")]
struct Cli {
    /// Node budget for searches.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_NODES)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as JSON, e.g. `kneser:6,2`, `myc:2-3`, `rat:7,2`.
    Gen {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a construction and print its self-checking report.
    Orient {
        #[command(subcommand)]
        construction: Construction,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Decide or check properties of an orientation or coloring.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Search for a homomorphism between two graphs or digraphs.
    Hom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Succeed only on a complete refutation.
        #[arg(long)]
        refute: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the check suite.
    Suite {
        /// Glob over item ids.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, env = "ODDORIENT_CACHE")]
        cache: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Wall-clock limit in seconds for every item, replacing the defaults.
        #[arg(long)]
        timeout: Option<u64>,
        /// List item ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Export to other formats.
    Export {
        #[command(subcommand)]
        format: ExportCmd,
    },
    /// Exploratory searches with no asserted outcome.
    Explore {
        /// Graph to map into shift graphs.
        #[arg(default_value = "kneser:8,3")]
        graph: String,
        #[arg(long, default_value_t = 5)]
        m_max: usize,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Cyclic orientation from a proper 3-coloring (found by search).
    ThreeColor { graph: String },
    /// Every vertex of KG(m(2k+1), mk) containing `j` becomes a source.
    KneserSource {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        j: u32,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Bipartite plus matching split, crossing edges from A to B.
    Partition {
        graph: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The 4-coloring of SG(2k+2, k).
    Schrijver4 {
        #[arg(long)]
        k: usize,
    },
    /// Joint orientation and coloring search with a color budget.
    Joint {
        graph: String,
        #[arg(long)]
        colors: usize,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Alternating odd cycle or value-2 coloring, whichever exists.
    Alt { input: String },
    /// Are all shortest odd cycles alternating?
    Shortest { input: String },
    /// Is the coloring s-wide?
    Wide {
        input: String,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Subcommand)]
enum ExportCmd {
    /// Graphviz DOT for a spec or any JSON document.
    Dot {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn tie(seed: Option<u64>) -> TieRule {
    seed.map_or(TieRule::SmallerFirst, TieRule::Seeded)
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn construct(c: &Construction, budget: &Budget) -> anyhow::Result<Option<ConstructionReport>> {
    Ok(match c {
        Construction::ThreeColor { graph } => {
            let g = load_graph(graph)?;
            match k_coloring(&g, 3, budget)? {
                Some(col) => Some(three_color_orientation(&g, &col)?),
                None => None,
            }
        }
        Construction::KneserSource { m, k, j, seed } => {
            Some(source_orientation_kneser(*m, *k, *j, tie(*seed), budget)?)
        }
        Construction::Partition { graph, seed } => {
            let g = load_graph(graph)?;
            match find_bipartite_matching_partition(&g, budget)? {
                Some(p) => Some(partition_orientation(&g, &p, tie(*seed), budget)?),
                None => None,
            }
        }
        Construction::Schrijver4 { k } => Some(schrijver4_construction(*k, budget)?),
        Construction::Joint { graph, colors } => {
            let g = load_graph(graph)?;
            joint_orientation_coloring_search(&g, *colors, &SearchConfig::with_budget(budget.clone()))?
        }
    })
}

fn hom(from: &str, to: &str, refute: bool, seed: Option<u64>, budget: &Budget) -> anyhow::Result<u8> {
    let cfg = SearchConfig { seed, ..SearchConfig::with_budget(budget.clone()) };
    let (src, dst) = (load(from)?, load(to)?);
    let (found, stats) = match (&src, &dst) {
        (Loaded::Digraph(a), Loaded::Digraph(b)) => run_hom(a, b, &cfg)?,
        (Loaded::Digraph(a), b) => run_directed_target(a, b, &cfg)?,
        (a, Loaded::Digraph(b)) => match a.orientation() {
            Some(o) => run_hom(o, b, &cfg)?,
            None => run_hom(&a.graph(), b, &cfg)?,
        },
        (a, b) => match (a.orientation(), b.orientation()) {
            (Some(x), Some(y)) => run_hom(x, y, &cfg)?,
            _ => run_hom(&a.graph(), &b.graph(), &cfg)?,
        },
    };
    let out = match &found {
        Some(map) => json!({"found": true, "map": map, "search": stats}),
        None => json!({"found": false, "search": stats}),
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(if found.is_some() != refute { 0 } else { EXIT_FAIL })
}

fn run_directed_target<S: Relational>(
    a: &S,
    b: &Loaded,
    cfg: &SearchConfig,
) -> anyhow::Result<(Option<serde_json::Value>, serde_json::Value)> {
    match b.orientation() {
        Some(o) => run_hom(a, o, cfg),
        None => run_hom(a, &b.graph(), cfg),
    }
}

fn run_hom<S: Relational + ?Sized, D: Relational + ?Sized>(
    src: &S,
    dst: &D,
    cfg: &SearchConfig,
) -> anyhow::Result<(Option<serde_json::Value>, serde_json::Value)> {
    let (found, stats) = find_homomorphism_with_stats(src, dst, cfg)?;
    Ok((found.map(|h| json!(h.to_label_map(src, dst))), json!(stats)))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let budget = Budget::nodes(cli.budget);
    match cli.command {
        Command::Gen { spec, output } => {
            let text = match load(&spec)? {
                Loaded::Digraph(d) => serde_json::to_string_pretty(&json!({
                    "vertices": d.labels(),
                    "arcs": d.arcs().iter().map(|&(u, v)| [&d.labels()[u], &d.labels()[v]]).collect::<Vec<_>>(),
                }))?,
                other => other.graph().to_json(),
            };
            emit(&text, output.as_ref())?;
            Ok(0)
        }
        Command::Orient { construction, output } => match construct(&construction, &budget)? {
            Some(r) => {
                emit(&r.to_json(), output.as_ref())?;
                Ok(0)
            }
            None => {
                eprintln!("no construction exists for this input (search exhausted)");
                Ok(EXIT_FAIL)
            }
        },
        Command::Check { what } => match what {
            CheckCmd::Alt { input } => {
                let o = load_orientation(&input)?;
                let cert = alternating_verdict(&o, &budget)?;
                println!("{}", serde_json::to_string_pretty(&cert.to_doc(o.base()))?);
                Ok(0)
            }
            CheckCmd::Shortest { input } => {
                let o = load_orientation(&input)?;
                let (ok, bad) = all_shortest_odd_cycles_alternating(&o, &budget)?;
                let bad = bad.map(|c| c.labels(o.base()));
                println!("{}", json!({"all_alternating": ok, "counterexample": bad}));
                Ok(if ok { 0 } else { EXIT_FAIL })
            }
            CheckCmd::Wide { input, s } => {
                let l = load(&input)?;
                let Some(c) = l.coloring() else { bail!("`{input}` has no coloring") };
                let ok = is_s_wide(&l.graph(), c, s)?;
                println!("{}", json!({"s": s, "wide": ok}));
                Ok(if ok { 0 } else { EXIT_FAIL })
            }
        },
        Command::Hom { from, to, refute, seed } => hom(&from, &to, refute, seed, &budget),
        Command::Suite { filter, jobs, cache, json, timeout, list } => {
            if list {
                for item in select(filter.as_deref())? {
                    println!("{:<28} {}", item.id, item.description);
                }
                return Ok(0);
            }
            let opts = SuiteOptions { filter, jobs, cache, timeout: timeout.map(Duration::from_secs) };
            let report = run_suite(&opts)?;
            for r in &report.records {
                let tag = match r.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                    Verdict::Timeout => "timeout",
                };
                let cached = if r.cached { " (cached)" } else { "" };
                println!("{tag:<8} {:<28} {:>8} ms{cached}  {}", r.id, r.runtime_ms, r.detail);
            }
            if let Some(path) = json {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
            }
            Ok(report.exit_code() as u8)
        }
        Command::Export { format: ExportCmd::Dot { input, output } } => {
            let l = load(&input)?;
            let g = l.graph();
            emit(&to_dot(&g, l.orientation(), l.coloring()), output.as_ref())?;
            Ok(0)
        }
        Command::Explore { graph, m_max } => {
            let g = load_graph(&graph)?;
            let cfg = SearchConfig::with_budget(budget);
            match hom_to_some_shift(&g, m_max, &cfg) {
                Ok(Some((m, h))) => println!("{}", serde_json::to_string_pretty(&ShiftWitness::new(&g, m, &h)?)?),
                Ok(None) => println!("{}", json!({"refuted_up_to": m_max})),
                Err(e @ Error::BudgetExceeded { .. }) => println!("{}", json!({"undecided": e.to_string()})),
                Err(e) => return Err(e.into()),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let timeout = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::BudgetExceeded { .. } | Error::Cancelled { .. })
            );
            eprintln!("error: {e:#}");
            ExitCode::from(if timeout { EXIT_TIMEOUT } else { EXIT_USAGE })
        }
    }
}
