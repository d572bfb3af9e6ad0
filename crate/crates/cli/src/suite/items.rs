use std::time::Duration;

use oddorient_core::color::{chromatic_number, directed_local_value, is_proper, k_coloring};
use oddorient_core::construct::{
    find_bipartite_matching_partition, mycielski_functor_map, mycielski_level_map, partition_orientation,
    schrijver4_construction, source_orientation_kneser, three_color_orientation, GraphHom, TieRule,
};
use oddorient_core::embed::{find_subgraph_embedding, is_embedding};
use oddorient_core::families::{
    clebsch, complete, generalized_mycielskian, grotzsch, iterated_mycielski, kneser, rational_complete, schrijver,
    shift_graph, wheel,
};
use oddorient_core::homsearch::{
    exhaustive_orientation_check, find_homomorphism_with_stats, joint_search_with_stats, shift_hom_from_report,
    verify_homomorphism, HomomorphismMap, SearchConfig, ShiftWitness,
};
use oddorient_core::oddcycles::{
    certify_no_alternating_odd_cycle, enumerate_shortest_odd_cycles, find_alternating_odd_cycle, is_alternating,
    odd_girth, Certificate,
};
use oddorient_core::{Budget, Graph, Result};
use serde_json::json;

use super::{Outcome, SuiteItem};
use crate::corpus::random_digraph_corpus;

const MIN: u64 = 60;

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn all_items() -> Vec<SuiteItem> {
    vec![
        SuiteItem {
            id: "families-invariants",
            description: "vertex and edge counts of KG(6,2), SG(6,2), Clebsch and Groetzsch",
            inputs: "kneser:6,2 schrijver:6,2 clebsch grotzsch",
            nodes: 1_000_000,
            timeout: secs(1),
            optional: false,
            run: families_invariants,
        },
        SuiteItem {
            id: "chromatic-kneser-schrijver",
            description: "chromatic number n-2k+2 of Kneser and Schrijver graphs",
            inputs: "(4,1) (5,2) (6,2) (7,3) (8,3)",
            nodes: 500_000_000,
            timeout: secs(5 * MIN),
            optional: false,
            run: chromatic_kneser_schrijver,
        },
        SuiteItem {
            id: "odd-girth-formula",
            description: "odd girth 2*ceil(k/(n-2k))+1 of Kneser and Schrijver graphs, n <= 12, k <= 5",
            inputs: "n<=12 k<=5 n>2k",
            nodes: 1_000_000,
            timeout: secs(MIN),
            optional: false,
            run: odd_girth_formula,
        },
        SuiteItem {
            id: "shift4-schrijver",
            description: "SG(2k+2,k) -> S_4 from the explicit 4-coloring, k = 2, 3, 4",
            inputs: "k=2,3,4",
            nodes: 50_000_000,
            timeout: secs(MIN),
            optional: false,
            run: shift4_schrijver,
        },
        SuiteItem {
            id: "shift4-kneser",
            description: "KG(2k+2,k) has no homomorphism to S_4, k = 1, 2",
            inputs: "k=1,2",
            nodes: 2_000_000_000,
            timeout: secs(10 * MIN),
            optional: false,
            run: shift4_kneser,
        },
        SuiteItem {
            id: "kneser62-shift5",
            description: "KG(6,2) has no homomorphism to S_5",
            inputs: "kneser:6,2 shift:5",
            nodes: 4_000_000_000,
            timeout: secs(30 * MIN),
            optional: false,
            run: kneser62_shift5,
        },
        SuiteItem {
            id: "mycielski-shift4",
            description: "Groetzsch value-2 report on 4 colors; M_{r1,r2}(K_2) -> S_4 for r1, r2 in {2,3}",
            inputs: "grotzsch colors=4 r in {2,3}",
            nodes: 500_000_000,
            timeout: secs(5 * MIN),
            optional: false,
            run: mycielski_shift4,
        },
        SuiteItem {
            id: "mycielski-unavoidable",
            description: "every orientation of W_5, W_7 and M_2(K_3) has an alternating odd cycle",
            inputs: "wheel:5 wheel:7 M_2(K_3)",
            nodes: 1_000_000_000,
            timeout: secs(5 * MIN),
            optional: false,
            run: mycielski_unavoidable,
        },
        SuiteItem {
            id: "rational-orientability",
            description: "every orientation of K_{7/2} has an alternating odd cycle; K_{8/3} has a value-2 orientation",
            inputs: "rat:7,2 rat:8,3",
            nodes: 1_000_000_000,
            timeout: secs(5 * MIN),
            optional: false,
            run: rational_orientability,
        },
        SuiteItem {
            id: "kneser-source-orientation",
            description: "a source element makes all shortest odd cycles of KG(m(2k+1),mk) alternating",
            inputs: "(1,1) (1,2) (1,3) (2,1) j=1",
            nodes: 1_000_000_000,
            timeout: secs(10 * MIN),
            optional: false,
            run: kneser_source_orientation,
        },
        SuiteItem {
            id: "clebsch-partition",
            description: "bipartite plus matching split of Clebsch makes every 5-cycle alternating; Groetzsch embeds",
            inputs: "clebsch grotzsch",
            nodes: 1_000_000_000,
            timeout: secs(10 * MIN),
            optional: false,
            run: clebsch_partition,
        },
        SuiteItem {
            id: "schrijver-odd-partition",
            description: "SG(8,3) and SG(12,5): matching meets each shortest odd cycle once, orientation alternates them",
            inputs: "schrijver:8,3 schrijver:12,5",
            nodes: 2_000_000_000,
            timeout: secs(30 * MIN),
            optional: false,
            run: schrijver_odd_partition,
        },
        SuiteItem {
            id: "duality-corpus",
            description: "exactly one certificate per orientation on 500 seeded random digraphs",
            inputs: "count=500 max_vertices=10 seed=42",
            nodes: 2_000_000_000,
            timeout: secs(10 * MIN),
            optional: false,
            run: duality_corpus,
        },
        SuiteItem {
            id: "rational-hom-order",
            description: "K_{p/q} -> K_{p'/q'} iff p/q <= p'/q', p <= 9, q <= 3",
            inputs: "p<=9 q<=3",
            nodes: 2_000_000_000,
            timeout: secs(10 * MIN),
            optional: false,
            run: rational_hom_order,
        },
        SuiteItem {
            id: "clebsch-unavoidable",
            description: "every orientation of Clebsch has an alternating odd cycle (joint search, 16 colors)",
            inputs: "clebsch colors=16",
            nodes: u64::MAX,
            timeout: secs(4 * 60 * MIN),
            optional: true,
            run: clebsch_unavoidable,
        },
    ]
}

fn cfg(budget: &Budget) -> SearchConfig {
    SearchConfig::with_budget(budget.clone())
}

fn is_triangle_free(g: &Graph) -> bool {
    odd_girth(g).map_or(true, |l| l > 3)
}

fn families_invariants(_: &Budget) -> Result<Outcome> {
    let kg = kneser(6, 2)?;
    let sg = schrijver(6, 2)?;
    let cl = clebsch();
    let gr = grotzsch();
    let got = json!({
        "kneser:6,2": [kg.n(), kg.m()],
        "schrijver:6,2": [sg.n(), sg.m()],
        "clebsch": [cl.n(), cl.m(), cl.is_regular(), is_triangle_free(&cl)],
        "grotzsch": [gr.n(), gr.m()],
    });
    let passed = (kg.n(), kg.m()) == (15, 45)
        && kg.m() == 3 * kg.n()
        && sg.n() == 9
        && (cl.n(), cl.m(), cl.is_regular()) == (16, 40, Some(5))
        && is_triangle_free(&cl)
        && (gr.n(), gr.m()) == (11, 20);
    Ok(Outcome::new(passed, got.to_string(), got))
}

fn chromatic_kneser_schrijver(budget: &Budget) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut passed = true;
    for (n, k) in [(4, 1), (5, 2), (6, 2), (7, 3), (8, 3)] {
        let expected = n - 2 * k + 2;
        let a = chromatic_number(&kneser(n, k)?, budget)?;
        let b = chromatic_number(&schrijver(n, k)?, budget)?;
        passed &= a == expected && b == expected;
        rows.push(json!({"n": n, "k": k, "kneser": a, "schrijver": b, "expected": expected}));
    }
    Ok(Outcome::new(passed, format!("{} parameter pairs", rows.len()), json!(rows)))
}

fn odd_girth_formula(_: &Budget) -> Result<Outcome> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 3..=12usize {
        for k in 1..=5usize {
            if n <= 2 * k {
                continue;
            }
            let expected = 2 * k.div_ceil(n - 2 * k) + 1;
            let a = odd_girth(&kneser(n, k)?);
            let b = odd_girth(&schrijver(n, k)?);
            checked += 1;
            if a != Some(expected) || b != Some(expected) {
                bad.push(json!({"n": n, "k": k, "kneser": a, "schrijver": b, "expected": expected}));
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("{checked} pairs, {} mismatches", bad.len()), json!(bad)))
}

fn shift4_schrijver(budget: &Budget) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let mut passed = true;
    for k in 2..=4 {
        let r = schrijver4_construction(k, budget)?;
        let c = r.coloring.as_ref().expect("construction colors");
        passed &= r.all_passed()
            && is_proper(&r.graph, c)?
            && c.span() == 4
            && directed_local_value(&r.orientation, c)? == 2;
        let (m, h) = shift_hom_from_report(&r)?;
        passed &= m == 4 && verify_homomorphism(&r.graph, &shift_graph(4)?, &h)?;
        witnesses.push(json!({"k": k, "witness": ShiftWitness::new(&r.graph, m, &h)?}));
    }
    Ok(Outcome::new(passed, "k = 2, 3, 4", json!(witnesses)))
}

fn refute(g: &Graph, target: &Graph, budget: &Budget) -> Result<(bool, serde_json::Value)> {
    let (found, stats) = find_homomorphism_with_stats(g, target, &cfg(budget))?;
    Ok((found.is_none() && stats.complete, json!(stats)))
}

fn shift4_kneser(budget: &Budget) -> Result<Outcome> {
    let s4 = shift_graph(4)?;
    let mut stats = Vec::new();
    let mut passed = true;
    for k in 1..=2 {
        let (ok, st) = refute(&kneser(2 * k + 2, k)?, &s4, budget)?;
        passed &= ok;
        stats.push(json!({"k": k, "search": st}));
    }
    Ok(Outcome::new(passed, "complete refutations", json!(stats)))
}

fn kneser62_shift5(budget: &Budget) -> Result<Outcome> {
    let (ok, st) = refute(&kneser(6, 2)?, &shift_graph(5)?, budget)?;
    Ok(Outcome::new(ok, "complete refutation", st))
}

/// M_{r1,r2}(K_2) -> M_{2,2}(K_2) by level collapses, then into S_4 through
/// the Groetzsch witness.
pub fn mycielski_chain(r1: usize, r2: usize, to_shift: &HomomorphismMap) -> Result<GraphHom> {
    let k2 = complete(2)?;
    let mut chain = GraphHom::identity(&iterated_mycielski(&[r1, r2])?);
    if r1 > 2 {
        chain = chain.then(&mycielski_functor_map(&mycielski_level_map(&k2, r1, 2)?, r2)?)?;
    }
    if r2 > 2 {
        chain = chain.then(&mycielski_level_map(&generalized_mycielskian(&k2, 2)?, r2, 2)?)?;
    }
    // grotzsch() is M_{2,2}(K_2) relabeled by vertex index.
    let last = GraphHom::new(iterated_mycielski(&[2, 2])?, shift_graph(4)?, to_shift.clone())?;
    chain.then(&last)
}

fn mycielski_shift4(budget: &Budget) -> Result<Outcome> {
    let g = grotzsch();
    let (report, stats) = joint_search_with_stats(&g, 4, &cfg(budget))?;
    let Some(report) = report else {
        return Ok(Outcome::new(false, "no value-2 orientation of Groetzsch on 4 colors", json!(stats)));
    };
    let c = report.coloring.as_ref().expect("joint search colors");
    let mut passed = report.all_passed() && c.span() <= 4 && directed_local_value(&report.orientation, c)? == 2;
    let (m, h) = shift_hom_from_report(&report)?;
    passed &= m == 4;
    let mut chains = Vec::new();
    for r1 in [2, 3] {
        for r2 in [2, 3] {
            let hom = mycielski_chain(r1, r2, &h)?;
            passed &= verify_homomorphism(&hom.src, &hom.dst, &hom.map)?;
            chains.push(json!({"r1": r1, "r2": r2, "vertices": hom.src.n()}));
        }
    }
    Ok(Outcome::new(
        passed,
        "Groetzsch report plus four verified chains",
        json!({"report": report.to_doc(), "chains": chains}),
    ))
}

fn every_orientation_has_cycle(g: &Graph, budget: &Budget) -> Result<bool> {
    let inner = budget.clone();
    let (all, _) = exhaustive_orientation_check(g, |o| Ok(find_alternating_odd_cycle(o, &inner)?.is_some()), true, budget)?;
    Ok(all)
}

fn mycielski_unavoidable(budget: &Budget) -> Result<Outcome> {
    let cases = [("wheel:5", wheel(5)?), ("wheel:7", wheel(7)?), ("M_2(K_3)", generalized_mycielskian(&complete(3)?, 2)?)];
    let mut rows = Vec::new();
    let mut passed = true;
    for (name, g) in cases {
        let ok = every_orientation_has_cycle(&g, budget)?;
        passed &= ok && g.m() <= 14;
        rows.push(json!({"graph": name, "edges": g.m(), "all_orientations_alternating": ok}));
    }
    Ok(Outcome::new(passed, "exhaustive sweeps", json!(rows)))
}

fn rational_orientability(budget: &Budget) -> Result<Outcome> {
    let k72 = rational_complete(7, 2)?;
    let negative = every_orientation_has_cycle(&k72, budget)?;
    let k83 = rational_complete(8, 3)?;
    let c = k_coloring(&k83, 3, budget)?;
    let positive = match &c {
        Some(c) => {
            let r = three_color_orientation(&k83, c)?;
            let cert = certify_no_alternating_odd_cycle(&r.orientation, budget)?;
            matches!(cert, Some(ref w) if Certificate::NoCycleWitness(w.clone()).verify(&r.orientation)?)
                && find_alternating_odd_cycle(&r.orientation, budget)?.is_none()
        }
        None => false,
    };
    Ok(Outcome::new(
        negative && positive && k72.m() == 14,
        format!("K_7/2 sweep {negative}, K_8/3 witness {positive}"),
        json!({"k72_edges": k72.m(), "k83_coloring": c.map(|c| c.colors().to_vec())}),
    ))
}

fn kneser_source_orientation(budget: &Budget) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut passed = true;
    for (m, k) in [(1, 1), (1, 2), (1, 3), (2, 1)] {
        let r = source_orientation_kneser(m, k, 1, TieRule::SmallerFirst, budget)?;
        let cycles = enumerate_shortest_odd_cycles(&r.graph, budget)?;
        let mut all = !cycles.is_empty();
        for c in &cycles {
            all &= is_alternating(&r.orientation, c)?;
        }
        passed &= all && r.all_passed();
        rows.push(json!({"m": m, "k": k, "shortest_odd_cycles": cycles.len(), "length": cycles.first().map(|c| c.len())}));
    }
    // The Petersen graph has exactly 12 five-cycles.
    passed &= rows[1]["shortest_odd_cycles"] == 12;
    Ok(Outcome::new(passed, "all shortest odd cycles alternating", json!(rows)))
}

/// Partition, orientation and an explicit per-cycle check.
fn partition_run(g: &Graph, budget: &Budget) -> Result<(bool, serde_json::Value)> {
    let Some(p) = find_bipartite_matching_partition(g, budget)? else {
        return Ok((false, json!("no partition")));
    };
    let r = partition_orientation(g, &p, TieRule::SmallerFirst, budget)?;
    let cycles = enumerate_shortest_odd_cycles(g, budget)?;
    let mut ok = r.all_passed() && !cycles.is_empty();
    for c in &cycles {
        let inside = c.edges().filter(|&(u, v)| p.in_a(u) == p.in_a(v)).count();
        ok &= inside == 1 && is_alternating(&r.orientation, c)?;
    }
    Ok((
        ok,
        json!({
            "vertices": g.n(),
            "matching": p.matching().len(),
            "crossing": p.crossing_count(g),
            "shortest_odd_cycles": cycles.len(),
            "partition": p.to_doc(g),
        }),
    ))
}

fn clebsch_partition(budget: &Budget) -> Result<Outcome> {
    let cl = clebsch();
    let (ok, cert) = partition_run(&cl, budget)?;
    let gr = grotzsch();
    let emb = find_subgraph_embedding(&gr, &cl, budget)?;
    let embeds = emb.as_ref().is_some_and(|m| is_embedding(&gr, &cl, m));
    Ok(Outcome::new(ok && embeds, format!("partition {ok}, embedding {embeds}"), json!({"partition": cert, "embedding": emb})))
}

fn schrijver_odd_partition(budget: &Budget) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut passed = true;
    for (n, k) in [(8, 3), (12, 5)] {
        let (ok, cert) = partition_run(&schrijver(n, k)?, budget)?;
        passed &= ok;
        rows.push(json!({"n": n, "k": k, "ok": ok, "certificate": cert}));
    }
    Ok(Outcome::new(passed, "odd k slice", json!(rows)))
}

fn duality_corpus(budget: &Budget) -> Result<Outcome> {
    let corpus = random_digraph_corpus(500, 10, 42)?;
    let (mut cycles, mut witnesses, mut bad) = (0, 0, Vec::new());
    for (i, o) in corpus.iter().enumerate() {
        let c = find_alternating_odd_cycle(o, budget)?;
        let w = certify_no_alternating_odd_cycle(o, budget)?;
        let ok = match (c, w) {
            (Some(c), None) => {
                cycles += 1;
                Certificate::FoundCycle(c).verify(o)?
            }
            (None, Some(w)) => {
                witnesses += 1;
                Certificate::NoCycleWitness(w).verify(o)?
            }
            _ => false,
        };
        if !ok {
            bad.push(i);
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        format!("{cycles} cycles, {witnesses} witnesses, {} violations", bad.len()),
        json!({"cycles": cycles, "witnesses": witnesses, "violations": bad}),
    ))
}

fn rational_hom_order(budget: &Budget) -> Result<Outcome> {
    let mut params = Vec::new();
    for q in 1..=3usize {
        for p in 2 * q..=9 {
            params.push((p, q));
        }
    }
    let graphs: Vec<Graph> = params.iter().map(|&(p, q)| rational_complete(p, q)).collect::<Result<_>>()?;
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (i, &(p, q)) in params.iter().enumerate() {
        for (j, &(p2, q2)) in params.iter().enumerate() {
            let (found, _) = find_homomorphism_with_stats(&graphs[i], &graphs[j], &cfg(budget))?;
            pairs += 1;
            if found.is_some() != (p * q2 <= p2 * q) {
                bad.push(json!([[p, q], [p2, q2]]));
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("{pairs} ordered pairs, {} mismatches", bad.len()), json!(bad)))
}

fn clebsch_unavoidable(budget: &Budget) -> Result<Outcome> {
    let (report, stats) = joint_search_with_stats(&clebsch(), 16, &cfg(budget))?;
    Ok(Outcome::new(report.is_none() && stats.complete, "joint search on 16 colors", json!(stats)))
}
