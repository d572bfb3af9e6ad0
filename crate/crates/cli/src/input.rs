//! Command-line inputs: a family spec such as `kneser:6,2`, or a path to a
//! JSON document (graph, orientation, coloring or construction report).

use std::path::Path;

use anyhow::{bail, Context};
use oddorient_core::construct::{ConstructionReport, ReportDoc};
use oddorient_core::graph::{ColoringDoc, GraphDoc, OrientationDoc};
use oddorient_core::{Budget, Coloring, Digraph, FamilySpec, Graph, Orientation};

pub enum Loaded {
    Graph(Graph),
    Digraph(Digraph),
    Orientation(Orientation),
    Colored(Graph, Coloring),
    Report(ConstructionReport),
}

impl Loaded {
    pub fn graph(&self) -> Graph {
        match self {
            Loaded::Graph(g) | Loaded::Colored(g, _) => g.clone(),
            Loaded::Digraph(d) => d.underlying(),
            Loaded::Orientation(o) => o.base().clone(),
            Loaded::Report(r) => r.graph.clone(),
        }
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            Loaded::Orientation(o) => Some(o),
            Loaded::Report(r) => Some(&r.orientation),
            _ => None,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Loaded::Colored(_, c) => Some(c),
            Loaded::Report(r) => r.coloring.as_ref(),
            _ => None,
        }
    }
}

pub fn load(arg: &str) -> anyhow::Result<Loaded> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return parse_document(&text).with_context(|| format!("parsing {arg}"));
    }
    let spec: FamilySpec = arg.parse().with_context(|| format!("`{arg}` is neither a file nor a family spec"))?;
    Ok(match spec.build_digraph() {
        Some(d) => Loaded::Digraph(d?),
        None => Loaded::Graph(spec.build()?),
    })
}

pub fn parse_document(text: &str) -> anyhow::Result<Loaded> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let has = |k: &str| value.get(k).is_some();
    Ok(if has("checks") {
        let _: ReportDoc = serde_json::from_value(value.clone())?;
        Loaded::Report(ConstructionReport::from_json(text, &Budget::default())?)
    } else if has("arcs") {
        Loaded::Orientation(serde_json::from_value::<OrientationDoc>(value)?.to_orientation()?)
    } else if has("colors") {
        let (g, c) = serde_json::from_value::<ColoringDoc>(value)?.parts()?;
        Loaded::Colored(g, c)
    } else if has("vertices") {
        Loaded::Graph(serde_json::from_value::<GraphDoc>(value)?.to_graph()?)
    } else {
        bail!("unrecognized document: expected vertices, arcs, colors or checks")
    })
}

pub fn load_graph(arg: &str) -> anyhow::Result<Graph> {
    Ok(load(arg)?.graph())
}

pub fn load_orientation(arg: &str) -> anyhow::Result<Orientation> {
    match load(arg)? {
        Loaded::Orientation(o) => Ok(o),
        Loaded::Report(r) => Ok(r.orientation),
        _ => bail!("`{arg}` does not contain an orientation"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_and_documents() {
        assert_eq!(load_graph("kneser:5,2").unwrap().n(), 10);
        assert!(matches!(load("dshift:3").unwrap(), Loaded::Digraph(_)));
        assert!(load("nonsense:1").is_err());
        let g = load_graph("cycle:5").unwrap();
        assert!(matches!(parse_document(&g.to_json()).unwrap(), Loaded::Graph(_)));
        let o = Orientation::ascending(&g);
        assert!(parse_document(&o.to_json()).unwrap().orientation().is_some());
        assert!(parse_document("{}").is_err());
    }
}
