//! Canonical graph, digraph, orientation and coloring types.
//!
//! Vertices are kept sorted by label, so a vertex index order is the label
//! order. All algorithms work on indices and only touch labels at the edges
//! of the API.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// Read access shared by undirected graphs, digraphs and orientations.
///
/// For an undirected graph the out-neighbors of a vertex are all its neighbors.
pub trait Relational {
    fn labels(&self) -> &[VertexLabel];
    fn out_adj(&self, v: usize) -> &[usize];
    fn in_adj(&self, v: usize) -> &[usize];

    fn order(&self) -> usize {
        self.labels().len()
    }

    fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels().binary_search(label).ok()
    }

    /// Every arc (u, v); undirected edges contribute both directions.
    fn arc_list(&self) -> Vec<(usize, usize)> {
        (0..self.order()).flat_map(|u| self.out_adj(u).iter().map(move |&v| (u, v))).collect()
    }
}

fn sorted_labels(vertices: Vec<VertexLabel>) -> Result<Vec<VertexLabel>> {
    let mut labels = vertices;
    if let Some(bad) = labels.iter().find(|l| !l.is_valid()) {
        return Err(Error::InvalidLabel(bad.clone()));
    }
    labels.sort();
    if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateVertex(w[0].clone()));
    }
    Ok(labels)
}

fn lookup(labels: &[VertexLabel], l: &VertexLabel) -> Result<usize> {
    labels.binary_search(l).map_err(|_| Error::UnknownEndpoint(l.clone()))
}

/// Simple undirected graph.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    /// (u, v) with u < v, sorted.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    rows: Vec<BitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// Builds a canonical graph from labels and label pairs. Repeated edges collapse.
pub fn make_graph(vertices: Vec<VertexLabel>, edges: &[(VertexLabel, VertexLabel)]) -> Result<Graph> {
    let labels = sorted_labels(vertices)?;
    let mut idx = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        let u = lookup(&labels, a)?;
        let v = lookup(&labels, b)?;
        if u == v {
            return Err(Error::SelfLoop(a.clone()));
        }
        idx.push((u, v));
    }
    Ok(Graph::from_sorted(labels, idx))
}

impl Graph {
    /// `labels` must already be sorted and unique; edge pairs are index pairs
    /// into it, in either order, without self-loops.
    pub(crate) fn from_sorted(labels: Vec<VertexLabel>, edges: Vec<(usize, usize)>) -> Graph {
        let n = labels.len();
        let set: BTreeSet<(usize, usize)> =
            edges.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![BitSet::new(n); n];
        for &(u, v) in &edges {
            debug_assert!(u != v);
            adj[u].push(v);
            adj[v].push(u);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Graph { labels, edges, adj, rows }
    }

    /// Builds a graph from arbitrary labels and an adjacency predicate over them.
    pub fn from_predicate<F>(vertices: Vec<VertexLabel>, mut adjacent: F) -> Result<Graph>
    where
        F: FnMut(&VertexLabel, &VertexLabel) -> bool,
    {
        let labels = sorted_labels(vertices)?;
        let mut edges = Vec::new();
        for u in 0..labels.len() {
            for v in u + 1..labels.len() {
                if adjacent(&labels[u], &labels[v]) {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph::from_sorted(labels, edges))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Position of edge {u, v} in `edges()`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, |a| a.len());
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*pos.get(&u)?, *pos.get(&v)?)))
            .collect();
        Graph::from_sorted(labels, edges)
    }

    /// Same graph with vertices renamed `Int(0..n)` in current label order.
    pub fn relabel_to_ints(&self) -> Graph {
        let labels = (0..self.n() as i64).map(VertexLabel::Int).collect();
        Graph::from_sorted(labels, self.edges.clone())
    }

    pub fn edge_labels(&self) -> Vec<(VertexLabel, VertexLabel)> {
        self.edges.iter().map(|&(u, v)| (self.labels[u].clone(), self.labels[v].clone())).collect()
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.labels.clone(),
            edges: self.edges.iter().map(|&(u, v)| [self.labels[u].clone(), self.labels[v].clone()]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        doc.to_graph()
    }
}

impl Relational for Graph {
    fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }
    fn out_adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
    fn in_adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

/// `{"vertices":[...],"edges":[[a,b],...]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<[VertexLabel; 2]>,
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        make_graph(self.vertices.clone(), &edges)
    }
}

/// Directed graph without loops. Opposite arc pairs are allowed.
#[derive(Clone, Debug)]
pub struct Digraph {
    labels: Vec<VertexLabel>,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.arcs == other.arcs
    }
}

impl Digraph {
    pub fn new(vertices: Vec<VertexLabel>, arcs: &[(VertexLabel, VertexLabel)]) -> Result<Digraph> {
        let labels = sorted_labels(vertices)?;
        let mut idx = Vec::with_capacity(arcs.len());
        for (a, b) in arcs {
            let u = lookup(&labels, a)?;
            let v = lookup(&labels, b)?;
            if u == v {
                return Err(Error::SelfLoop(a.clone()));
            }
            idx.push((u, v));
        }
        Ok(Digraph::from_sorted(labels, idx))
    }

    pub(crate) fn from_sorted(labels: Vec<VertexLabel>, arcs: Vec<(usize, usize)>) -> Digraph {
        let set: BTreeSet<(usize, usize)> = arcs.into_iter().collect();
        let arcs: Vec<_> = set.into_iter().collect();
        let n = labels.len();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for l in inn.iter_mut() {
            l.sort_unstable();
        }
        Digraph { labels, arcs, out, inn }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn underlying(&self) -> Graph {
        Graph::from_sorted(self.labels.clone(), self.arcs.clone())
    }
}

impl Relational for Digraph {
    fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }
    fn out_adj(&self, v: usize) -> &[usize] {
        &self.out[v]
    }
    fn in_adj(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }
}

/// One direction for every edge of a base graph.
#[derive(Clone, Debug)]
pub struct Orientation {
    base: Graph,
    /// `forward[e]` means edge (u, v) = `base.edges()[e]`, u < v, points u -> v.
    forward: Vec<bool>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl PartialEq for Orientation {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.forward == other.forward
    }
}

impl Eq for Orientation {}

/// Orients `g` with an explicit arc list holding one ordered pair per edge.
pub fn orient(g: &Graph, arcs: &[(VertexLabel, VertexLabel)]) -> Result<Orientation> {
    let mut dir: Vec<Option<bool>> = vec![None; g.m()];
    for (a, b) in arcs {
        let (u, v) = match (g.index_of(a), g.index_of(b)) {
            (Some(u), Some(v)) => (u, v),
            _ => return Err(Error::ForeignEdge(a.clone(), b.clone())),
        };
        let e = g.edge_index(u, v).ok_or_else(|| Error::ForeignEdge(a.clone(), b.clone()))?;
        let fwd = u < v;
        match dir[e] {
            Some(prev) if prev != fwd => return Err(Error::ConflictingArcs(a.clone(), b.clone())),
            _ => dir[e] = Some(fwd),
        }
    }
    let mut forward = Vec::with_capacity(g.m());
    for (e, d) in dir.into_iter().enumerate() {
        match d {
            Some(f) => forward.push(f),
            None => {
                let (u, v) = g.edges()[e];
                return Err(Error::IncompleteRule(g.label(u).clone(), g.label(v).clone()));
            }
        }
    }
    Ok(Orientation::from_forward(g.clone(), forward))
}

impl Orientation {
    pub fn from_forward(base: Graph, forward: Vec<bool>) -> Orientation {
        assert_eq!(base.m(), forward.len(), "one direction per edge");
        let n = base.n();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (&(u, v), &f) in base.edges().iter().zip(&forward) {
            let (s, t) = if f { (u, v) } else { (v, u) };
            out[s].push(t);
            inn[t].push(s);
        }
        for l in out.iter_mut().chain(inn.iter_mut()) {
            l.sort_unstable();
        }
        Orientation { base, forward, out, inn }
    }

    /// Orients edge {u, v} (u < v) as u -> v exactly when `towards_second(u, v)`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(base: &Graph, mut towards_second: F) -> Orientation {
        let forward = base.edges().iter().map(|&(u, v)| towards_second(u, v)).collect();
        Orientation::from_forward(base.clone(), forward)
    }

    /// Smaller label to larger label on every edge.
    pub fn ascending(base: &Graph) -> Orientation {
        Orientation::from_forward(base.clone(), vec![true; base.m()])
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn underlying(&self) -> &Graph {
        &self.base
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn is_arc(&self, u: usize, v: usize) -> bool {
        match self.base.edge_index(u, v) {
            Some(e) => self.forward[e] == (u < v),
            None => false,
        }
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
            .collect()
    }

    pub fn arc_labels(&self) -> Vec<[VertexLabel; 2]> {
        self.arcs().into_iter().map(|(u, v)| [self.base.label(u).clone(), self.base.label(v).clone()]).collect()
    }

    pub fn reversed(&self) -> Orientation {
        Orientation::from_forward(self.base.clone(), self.forward.iter().map(|f| !f).collect())
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_sorted(self.base.labels.clone(), self.arcs())
    }

    pub fn to_doc(&self) -> OrientationDoc {
        let g = self.base.to_doc();
        OrientationDoc { vertices: g.vertices, edges: g.edges, arcs: self.arc_labels() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("orientation serializes")
    }

    pub fn from_json(text: &str) -> Result<Orientation> {
        let doc: OrientationDoc = serde_json::from_str(text)?;
        doc.to_orientation()
    }
}

impl Relational for Orientation {
    fn labels(&self) -> &[VertexLabel] {
        &self.base.labels
    }
    fn out_adj(&self, v: usize) -> &[usize] {
        &self.out[v]
    }
    fn in_adj(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }
}

/// Graph document plus `"arcs"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrientationDoc {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<[VertexLabel; 2]>,
    pub arcs: Vec<[VertexLabel; 2]>,
}

impl OrientationDoc {
    pub fn to_orientation(&self) -> Result<Orientation> {
        let g = GraphDoc { vertices: self.vertices.clone(), edges: self.edges.clone() }.to_graph()?;
        let arcs: Vec<_> = self.arcs.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        orient(&g, &arcs)
    }
}

/// Vertex coloring aligned with a graph's vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring(colors)
    }

    pub fn constant(n: usize) -> Self {
        Coloring(vec![0; n])
    }

    pub fn from_labels<R: Relational>(g: &R, map: &BTreeMap<VertexLabel, usize>) -> Result<Coloring> {
        if map.len() != g.order() {
            return Err(Error::PartialColoring { expected: g.order(), got: map.len() });
        }
        let mut colors = vec![0; g.order()];
        for (l, &c) in map {
            let v = g.index_of(l).ok_or_else(|| Error::UnknownEndpoint(l.clone()))?;
            colors[v] = c;
        }
        Ok(Coloring(colors))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn num_colors(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    /// One past the largest color index.
    pub fn span(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    /// Renumbers colors 0, 1, ... in order of first appearance along the vertex order.
    pub fn canonical(&self) -> Coloring {
        let mut remap = HashMap::new();
        let colors = self
            .0
            .iter()
            .map(|c| {
                let next = remap.len();
                *remap.entry(*c).or_insert(next)
            })
            .collect();
        Coloring(colors)
    }

    pub(crate) fn check_total<R: Relational + ?Sized>(&self, g: &R) -> Result<()> {
        if self.0.len() != g.order() {
            return Err(Error::PartialColoring { expected: g.order(), got: self.0.len() });
        }
        Ok(())
    }

    pub fn to_label_map<R: Relational>(&self, g: &R) -> BTreeMap<String, usize> {
        g.labels().iter().zip(&self.0).map(|(l, &c)| (l.key(), c)).collect()
    }

    pub fn from_key_map<R: Relational>(g: &R, map: &BTreeMap<String, usize>) -> Result<Coloring> {
        let mut labels = BTreeMap::new();
        for (k, &c) in map {
            labels.insert(VertexLabel::from_key(k)?, c);
        }
        Coloring::from_labels(g, &labels)
    }
}

/// Graph document plus `"colors"` keyed by compact label JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<[VertexLabel; 2]>,
    pub colors: BTreeMap<String, usize>,
}

impl ColoringDoc {
    pub fn new(g: &Graph, c: &Coloring) -> Self {
        let d = g.to_doc();
        ColoringDoc { vertices: d.vertices, edges: d.edges, colors: c.to_label_map(g) }
    }

    pub fn parts(&self) -> Result<(Graph, Coloring)> {
        let g = GraphDoc { vertices: self.vertices.clone(), edges: self.edges.clone() }.to_graph()?;
        let c = Coloring::from_key_map(&g, &self.colors)?;
        Ok((g, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(n: i64) -> Vec<VertexLabel> {
        (1..=n).map(VertexLabel::Int).collect()
    }

    fn e(a: i64, b: i64) -> (VertexLabel, VertexLabel) {
        (VertexLabel::Int(a), VertexLabel::Int(b))
    }

    #[test]
    fn triangle() {
        let g = make_graph(ints(3), &[e(1, 2), e(2, 3), e(1, 3)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.is_regular(), Some(2));
    }

    #[test]
    fn isolated_vertex() {
        let g = make_graph(ints(1), &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_graph(ints(2), &[e(1, 1)]), Err(Error::SelfLoop(VertexLabel::Int(1))));
        assert_eq!(make_graph(ints(2), &[e(1, 3)]), Err(Error::UnknownEndpoint(VertexLabel::Int(3))));
        let dup = vec![VertexLabel::Int(1), VertexLabel::Int(1)];
        assert_eq!(make_graph(dup, &[]), Err(Error::DuplicateVertex(VertexLabel::Int(1))));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let g = make_graph(vec![VertexLabel::Int(3), VertexLabel::Int(1), VertexLabel::Int(2)], &[e(3, 1), e(2, 1), e(1, 2)])
            .unwrap();
        let again = make_graph(g.labels().to_vec(), &g.edge_labels()).unwrap();
        assert_eq!(g, again);
        assert_eq!(g.m(), 2);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn orient_by_rule() {
        let k3 = make_graph(ints(3), &[e(1, 2), e(2, 3), e(1, 3)]).unwrap();
        let o = orient(&k3, &[e(1, 2), e(2, 3), e(1, 3)]).unwrap();
        assert_eq!(o.out_neighbors(0), &[1, 2]);
        assert_eq!(o.in_neighbors(2), &[0, 1]);
        assert_eq!(o, Orientation::ascending(&k3));

        let err = orient(&k3, &[e(1, 2), e(2, 3)]).unwrap_err();
        assert!(matches!(err, Error::IncompleteRule(..)));
        let err = orient(&make_graph(ints(3), &[e(1, 2)]).unwrap(), &[e(1, 2), e(2, 3)]).unwrap_err();
        assert!(matches!(err, Error::ForeignEdge(..)));
        let err = orient(&k3, &[e(1, 2), e(2, 1), e(2, 3), e(1, 3)]).unwrap_err();
        assert!(matches!(err, Error::ConflictingArcs(..)));
    }

    #[test]
    fn cyclic_five_cycle() {
        let c5 = make_graph(ints(5), &[e(1, 2), e(2, 3), e(3, 4), e(4, 5), e(5, 1)]).unwrap();
        let o = orient(&c5, &[e(1, 2), e(2, 3), e(3, 4), e(4, 5), e(5, 1)]).unwrap();
        assert!((0..5).all(|v| o.out_neighbors(v).len() == 1 && o.in_neighbors(v).len() == 1));
        let back = Orientation::from_json(&o.to_json()).unwrap();
        assert_eq!(back, o);
        assert_eq!(o.reversed().reversed(), o);
    }

    #[test]
    fn canonical_coloring() {
        let c = Coloring::new(vec![4, 4, 2, 7, 2]);
        assert_eq!(c.canonical().colors(), &[0, 0, 1, 2, 1]);
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn digraph_allows_digons() {
        let d = Digraph::new(ints(2), &[e(1, 2), e(2, 1)]).unwrap();
        assert_eq!(d.arcs().len(), 2);
        assert_eq!(d.underlying().m(), 1);
    }
}
