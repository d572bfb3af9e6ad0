//! Constructive orientations and colorings, each wrapped in a report that
//! carries the checks it passed and can re-run them after a reload.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::color::{directed_local_value, is_proper, k_coloring};
use crate::error::{Error, Result};
use crate::families::{generalized_mycielskian, kneser, schrijver};
use crate::graph::{Coloring, Digraph, Graph, GraphDoc, Orientation, Relational};
use crate::homsearch::{verify_homomorphism, HomomorphismMap};
use crate::label::VertexLabel;
use crate::oddcycles::{all_shortest_odd_cycles_alternating, alternating_verdict, enumerate_shortest_odd_cycles, Certificate};

/// A named property a report asserts about itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// The orientation covers exactly the report's graph.
    Underlying,
    Proper,
    /// Every closed out-neighborhood sees at most two colors.
    ValueTwo,
    ColorsAtMost(usize),
    ShortestOddCyclesAlternating,
    NoAlternatingOddCycle,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Underlying => write!(f, "underlying"),
            Check::Proper => write!(f, "proper"),
            Check::ValueTwo => write!(f, "directed_local_value<=2"),
            Check::ColorsAtMost(k) => write!(f, "colors<={k}"),
            Check::ShortestOddCyclesAlternating => write!(f, "shortest_odd_cycles_alternating"),
            Check::NoAlternatingOddCycle => write!(f, "no_alternating_odd_cycle"),
        }
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Ok(match s {
            "underlying" => Check::Underlying,
            "proper" => Check::Proper,
            "directed_local_value<=2" => Check::ValueTwo,
            "shortest_odd_cycles_alternating" => Check::ShortestOddCyclesAlternating,
            "no_alternating_odd_cycle" => Check::NoAlternatingOddCycle,
            _ => match s.strip_prefix("colors<=").and_then(|k| k.parse().ok()) {
                Some(k) => Check::ColorsAtMost(k),
                None => return Err(Error::Format(format!("unknown check `{s}`"))),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub graph: Graph,
    /// Family spec string when the graph came from a generator.
    pub family: Option<String>,
    pub orientation: Orientation,
    pub coloring: Option<Coloring>,
    pub checks: Vec<CheckOutcome>,
}

fn evaluate(check: Check, g: &Graph, o: &Orientation, c: Option<&Coloring>, budget: &Budget) -> Result<bool> {
    let need = || c.ok_or_else(|| Error::CheckFailed(format!("{check} needs a coloring")));
    Ok(match check {
        Check::Underlying => o.base() == g,
        Check::Proper => is_proper(g, need()?)?,
        Check::ValueTwo => directed_local_value(o, need()?)? <= 2,
        Check::ColorsAtMost(k) => need()?.span() <= k,
        Check::ShortestOddCyclesAlternating => all_shortest_odd_cycles_alternating(o, budget)?.0,
        Check::NoAlternatingOddCycle => matches!(alternating_verdict(o, budget)?, Certificate::NoCycleWitness(_)),
    })
}

impl ConstructionReport {
    /// Runs every check; any failure is an error since constructions must
    /// only ever return passing reports.
    pub fn build(
        graph: Graph,
        family: Option<String>,
        orientation: Orientation,
        coloring: Option<Coloring>,
        checks: &[Check],
        budget: &Budget,
    ) -> Result<ConstructionReport> {
        let mut all = vec![Check::Underlying];
        all.extend_from_slice(checks);
        let mut outcomes = Vec::new();
        for check in all {
            if !evaluate(check, &graph, &orientation, coloring.as_ref(), budget)? {
                return Err(Error::CheckFailed(check.to_string()));
            }
            outcomes.push(CheckOutcome { name: check.to_string(), passed: true });
        }
        Ok(ConstructionReport { graph, family, orientation, coloring, checks: outcomes })
    }

    /// Re-runs each named check from scratch.
    pub fn reverify(&self, budget: &Budget) -> Result<Vec<CheckOutcome>> {
        self.checks
            .iter()
            .map(|c| {
                let check: Check = c.name.parse()?;
                let passed = evaluate(check, &self.graph, &self.orientation, self.coloring.as_ref(), budget)?;
                Ok(CheckOutcome { name: c.name.clone(), passed })
            })
            .collect()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_doc(&self) -> ReportDoc {
        ReportDoc {
            graph: self.graph.to_doc(),
            family: self.family.clone(),
            orientation: self.orientation.arc_labels(),
            coloring: self.coloring.as_ref().map(|c| c.to_label_map(&self.graph)),
            checks: self.checks.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("report serializes")
    }

    /// Parses a report and re-runs its checks; any failing check is an error.
    pub fn from_json(text: &str, budget: &Budget) -> Result<ConstructionReport> {
        let doc: ReportDoc = serde_json::from_str(text)?;
        let r = doc.to_report()?;
        for c in r.reverify(budget)? {
            if !c.passed {
                return Err(Error::CheckFailed(c.name));
            }
        }
        Ok(r)
    }
}

/// `{"graph":{..},"family":..,"orientation":[[a,b],..],"coloring":{..}|null,"checks":[..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub graph: GraphDoc,
    #[serde(default)]
    pub family: Option<String>,
    pub orientation: Vec<[VertexLabel; 2]>,
    pub coloring: Option<BTreeMap<String, usize>>,
    pub checks: Vec<CheckOutcome>,
}

impl ReportDoc {
    pub fn to_report(&self) -> Result<ConstructionReport> {
        let graph = self.graph.to_graph()?;
        let arcs: Vec<(VertexLabel, VertexLabel)> =
            self.orientation.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        let orientation = crate::graph::orient(&graph, &arcs)?;
        let coloring = match &self.coloring {
            Some(m) => Some(Coloring::from_key_map(&graph, m)?),
            None => None,
        };
        Ok(ConstructionReport { graph, family: self.family.clone(), orientation, coloring, checks: self.checks.clone() })
    }
}

/// How edges the constructions leave free get their direction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieRule {
    /// Smaller label towards larger label.
    #[default]
    SmallerFirst,
    /// Independent fair coin per free edge.
    Seeded(u64),
}

impl TieRule {
    fn chooser(self) -> impl FnMut() -> bool {
        let mut rng = match self {
            TieRule::SmallerFirst => None,
            TieRule::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        };
        move || rng.as_mut().map_or(true, |r| r.gen())
    }
}

/// Colors 0 -> 1 -> 2 -> 0 along every edge of a proper 3-coloring.
pub fn three_color_orientation(g: &Graph, c: &Coloring) -> Result<ConstructionReport> {
    if g.m() == 0 {
        return Err(Error::BadParameters("graph has no edges".into()));
    }
    if c.span() > 3 {
        return Err(Error::TooManyColors(c.span()));
    }
    if !is_proper(g, c)? {
        return Err(Error::ImproperColoring);
    }
    let o = Orientation::from_fn(g, |u, v| c.color(v) == (c.color(u) + 1) % 3);
    ConstructionReport::build(
        g.clone(),
        None,
        o,
        Some(c.clone()),
        &[Check::Proper, Check::ValueTwo, Check::ColorsAtMost(3), Check::NoAlternatingOddCycle],
        &Budget::default(),
    )
}

/// First coordinates of the labels when `target` is a directed shift graph.
fn shift_colors(target: &Digraph, hom: &HomomorphismMap) -> Option<(usize, Coloring)> {
    let pairs: Option<Vec<(i64, i64)>> = target.labels().iter().map(VertexLabel::as_pair).collect();
    let pairs = pairs?;
    let m = pairs.iter().map(|&(i, j)| i.max(j)).max()? as usize;
    Some((m, Coloring::new(hom.images().iter().map(|&x| pairs[x].0 as usize - 1).collect())))
}

/// Orients each edge along the arc its image spans in `target`; where both
/// arcs exist the smaller label points to the larger.
pub fn pullback_orientation(g: &Graph, target: &Digraph, hom: &HomomorphismMap) -> Result<ConstructionReport> {
    if hom.len() != g.n() {
        return Err(Error::PartialMap { expected: g.n(), got: hom.len() });
    }
    if hom.images().iter().any(|&x| x >= target.n()) {
        return Err(Error::NotAHomomorphism("image outside the target".into()));
    }
    let mut forward = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let (a, b) = (hom.image(u), hom.image(v));
        match (target.has_arc(a, b), target.has_arc(b, a)) {
            (true, _) => forward.push(true),
            (false, true) => forward.push(false),
            (false, false) => {
                return Err(Error::NotAHomomorphism(format!(
                    "edge {}-{} maps to a non-arc",
                    g.label(u),
                    g.label(v)
                )))
            }
        }
    }
    let o = Orientation::from_forward(g.clone(), forward);
    match shift_colors(target, hom) {
        Some((m, c)) => ConstructionReport::build(
            g.clone(),
            None,
            o,
            Some(c),
            &[Check::Proper, Check::ValueTwo, Check::ColorsAtMost(m)],
            &Budget::default(),
        ),
        None => ConstructionReport::build(g.clone(), None, o, None, &[], &Budget::default()),
    }
}

/// On KG(m(2k+1), mk) every vertex containing `j` becomes a source; the
/// rest follows `tie`.
pub fn source_orientation_kneser(m: usize, k: usize, j: u32, tie: TieRule, budget: &Budget) -> Result<ConstructionReport> {
    if m == 0 || k == 0 {
        return Err(Error::BadParameters("need m, k >= 1".into()));
    }
    let n = m * (2 * k + 1);
    if j == 0 || j as usize > n {
        return Err(Error::BadParameters(format!("element {j} outside [1, {n}]")));
    }
    let g = kneser(n, m * k)?;
    let has = |v: usize| g.label(v).as_set().expect("set label").contains(&j);
    let mut coin = tie.chooser();
    let o = Orientation::from_fn(&g, |u, v| {
        if has(u) {
            true
        } else if has(v) {
            false
        } else {
            coin()
        }
    });
    ConstructionReport::build(
        g.clone(),
        Some(format!("kneser:{n},{}", m * k)),
        o,
        None,
        &[Check::ShortestOddCyclesAlternating],
        budget,
    )
}

/// Two sides plus the edges inside a side, which must form a matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    in_a: Vec<bool>,
    matching: Vec<(usize, usize)>,
}

impl Partition {
    /// Sides are given; the matching is every edge inside a side.
    pub fn from_sides(g: &Graph, in_a: Vec<bool>) -> Result<Partition> {
        if in_a.len() != g.n() {
            return Err(Error::InvalidPartition(format!("{} sides for {} vertices", in_a.len(), g.n())));
        }
        let matching = g.edges().iter().copied().filter(|&(u, v)| in_a[u] == in_a[v]).collect();
        let p = Partition { in_a, matching };
        p.validate(g)?;
        Ok(p)
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.in_a[v]
    }

    pub fn side_a(&self) -> Vec<usize> {
        (0..self.in_a.len()).filter(|&v| self.in_a[v]).collect()
    }

    pub fn side_b(&self) -> Vec<usize> {
        (0..self.in_a.len()).filter(|&v| !self.in_a[v]).collect()
    }

    pub fn matching(&self) -> &[(usize, usize)] {
        &self.matching
    }

    pub fn crossing_count(&self, g: &Graph) -> usize {
        g.m() - self.matching.len()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPartition(m));
        if self.in_a.len() != g.n() {
            return bad("side vector length".into());
        }
        let mut touched = vec![false; g.n()];
        for &(u, v) in &self.matching {
            if !g.has_edge(u, v) {
                return bad(format!("matching pair {u}-{v} is not an edge"));
            }
            if self.in_a[u] != self.in_a[v] {
                return bad(format!("matching edge {u}-{v} crosses sides"));
            }
            if touched[u] || touched[v] {
                return bad(format!("matching edges share a vertex at {u}-{v}"));
            }
            touched[u] = true;
            touched[v] = true;
        }
        let inside = g.edges().iter().filter(|&&(u, v)| self.in_a[u] == self.in_a[v]).count();
        if inside != self.matching.len() {
            return bad("an edge inside a side is missing from the matching".into());
        }
        Ok(())
    }

    pub fn to_doc(&self, g: &Graph) -> PartitionDoc {
        let labels = |vs: Vec<usize>| vs.into_iter().map(|v| g.label(v).clone()).collect();
        PartitionDoc {
            side_a: labels(self.side_a()),
            side_b: labels(self.side_b()),
            matching: self.matching.iter().map(|&(u, v)| [g.label(u).clone(), g.label(v).clone()]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionDoc {
    pub side_a: Vec<VertexLabel>,
    pub side_b: Vec<VertexLabel>,
    pub matching: Vec<[VertexLabel; 2]>,
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    pos: Vec<usize>,
    /// Vertices that start a new component in `order`.
    root: Vec<bool>,
    /// For each vertex, (cycle, other endpoint) for cycle edges whose later
    /// endpoint in `order` is this vertex.
    closing: Vec<Vec<(usize, usize)>>,
    side: Vec<bool>,
    same: Vec<u8>,
    per_cycle: Vec<u8>,
    meter: Meter,
}

impl PartitionSearch<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let choices: &[bool] = if self.root[v] { &[true] } else { &[true, false] };
        for &s in choices {
            self.meter.tick()?;
            self.side[v] = s;
            if self.place(v, depth) {
                if self.run(depth + 1)? {
                    return Ok(true);
                }
            }
            self.unplace(v, depth);
        }
        Ok(false)
    }

    /// Applies the counters for `v`; false when a constraint breaks. Always
    /// leaves counters in a state `unplace` reverts.
    fn place(&mut self, v: usize, depth: usize) -> bool {
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            if self.pos[w] < depth && self.side[w] == self.side[v] {
                self.same[v] += 1;
                self.same[w] += 1;
                ok &= self.same[v] <= 1 && self.same[w] <= 1;
            }
        }
        for &(c, w) in &self.closing[v] {
            if self.side[w] == self.side[v] {
                self.per_cycle[c] += 1;
                ok &= self.per_cycle[c] <= 1;
            }
        }
        ok
    }

    fn unplace(&mut self, v: usize, depth: usize) {
        for &w in self.g.neighbors(v) {
            if self.pos[w] < depth && self.side[w] == self.side[v] {
                self.same[v] -= 1;
                self.same[w] -= 1;
            }
        }
        for &(c, w) in &self.closing[v] {
            if self.side[w] == self.side[v] {
                self.per_cycle[c] -= 1;
            }
        }
    }
}

/// A 2-sided partition whose inside edges form a matching hitting every
/// shortest odd cycle exactly once. `None` when no such partition exists.
pub fn find_bipartite_matching_partition(g: &Graph, budget: &Budget) -> Result<Option<Partition>> {
    let mut meter = budget.meter();
    let cycles = enumerate_shortest_odd_cycles(g, &meter.remaining())?;
    meter.charge(cycles.len() as u64)?;

    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut root = vec![false; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        root[s] = true;
        seen[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut closing = vec![Vec::new(); n];
    for (ci, c) in cycles.iter().enumerate() {
        for (u, v) in c.edges() {
            let (early, late) = if pos[u] < pos[v] { (u, v) } else { (v, u) };
            closing[late].push((ci, early));
        }
    }
    let mut s = PartitionSearch {
        g,
        order,
        pos,
        root,
        closing,
        side: vec![false; n],
        same: vec![0; n],
        per_cycle: vec![0; cycles.len()],
        meter,
    };
    if !s.run(0)? {
        return Ok(None);
    }
    // Odd cycles have an odd number of inside edges, so at most one means one.
    let p = Partition::from_sides(g, s.side)?;
    debug_assert!(cycles.iter().all(|c| c.edges().filter(|&(u, v)| p.in_a[u] == p.in_a[v]).count() == 1));
    Ok(Some(p))
}

/// Crossing edges point from side A to side B; matching edges follow `tie`.
pub fn partition_orientation(g: &Graph, p: &Partition, tie: TieRule, budget: &Budget) -> Result<ConstructionReport> {
    p.validate(g)?;
    let mut coin = tie.chooser();
    let o = Orientation::from_fn(g, |u, v| if p.in_a[u] != p.in_a[v] { p.in_a[u] } else { coin() });
    ConstructionReport::build(g.clone(), None, o, None, &[Check::ShortestOddCyclesAlternating], budget)
}

/// Orientation and 4-coloring of SG(2k+2, k) with directed local value 2.
///
/// A and B are the k-subsets of the odd and of the even elements. They span
/// a complete bipartite graph and each of their vertices has exactly one
/// neighbor in the rest U, which is 3-colored. Edges inside U follow
/// c -> c+1, and A -> B -> U -> A. B takes the fourth color and each vertex
/// of A takes the color after its U-neighbor's.
pub fn schrijver4_construction(k: usize, budget: &Budget) -> Result<ConstructionReport> {
    if k < 2 {
        return Err(Error::BadParameters("need k >= 2".into()));
    }
    let n = 2 * k + 2;
    let g = schrijver(n, k)?;
    let mismatch = |m: String| Error::StructureMismatch(m);
    let part = |odd: bool| -> Vec<usize> {
        (0..g.n()).filter(|&v| g.label(v).as_set().unwrap().iter().all(|&e| (e % 2 == 1) == odd)).collect()
    };
    let (a, b) = (part(true), part(false));
    if a.len() != k + 1 || b.len() != k + 1 {
        return Err(mismatch(format!("|A|={} |B|={}, expected {}", a.len(), b.len(), k + 1)));
    }
    let mut role = vec![2u8; g.n()];
    a.iter().for_each(|&v| role[v] = 0);
    b.iter().for_each(|&v| role[v] = 1);
    for &x in &a {
        for &y in &a {
            if g.has_edge(x, y) {
                return Err(mismatch("A is not independent".into()));
            }
        }
        for &y in &b {
            if !g.has_edge(x, y) {
                return Err(mismatch("A and B are not completely joined".into()));
            }
        }
    }
    if b.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y))) {
        return Err(mismatch("B is not independent".into()));
    }
    let outside = |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|&w| role[w] == 2).collect() };
    let mut u_neighbor = vec![usize::MAX; g.n()];
    for &v in a.iter().chain(&b) {
        match outside(v).as_slice() {
            [w] => u_neighbor[v] = *w,
            other => return Err(mismatch(format!("{} has {} neighbors outside A and B", g.label(v), other.len()))),
        }
    }

    let u: Vec<usize> = (0..g.n()).filter(|&v| role[v] == 2).collect();
    let gu = g.induced_subgraph(&u);
    let cu = k_coloring(&gu, 3, budget)?
        .ok_or_else(|| mismatch("the rest is not 3-colorable".into()))?;
    let mut colors = vec![0usize; g.n()];
    for (i, &v) in u.iter().enumerate() {
        colors[v] = cu.color(i);
    }
    for &v in &b {
        colors[v] = 3;
    }
    for &v in &a {
        colors[v] = (colors[u_neighbor[v]] + 1) % 3;
    }
    let c = Coloring::new(colors);

    let o = Orientation::from_fn(&g, |x, y| match (role[x], role[y]) {
        (2, 2) => c.color(y) == (c.color(x) + 1) % 3,
        (0, 1) | (1, 2) | (2, 0) => true,
        (1, 0) | (2, 1) | (0, 2) => false,
        _ => unreachable!("A and B are independent"),
    });
    ConstructionReport::build(
        g,
        Some(format!("schrijver:{n},{k}")),
        o,
        Some(c),
        &[Check::Proper, Check::ValueTwo, Check::ColorsAtMost(4)],
        budget,
    )
}

/// A homomorphism together with its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphHom {
    pub src: Graph,
    pub dst: Graph,
    pub map: HomomorphismMap,
}

impl GraphHom {
    /// Verifies before returning.
    pub fn new(src: Graph, dst: Graph, map: HomomorphismMap) -> Result<GraphHom> {
        if !verify_homomorphism(&src, &dst, &map)? {
            return Err(Error::NotAHomomorphism(format!("{} vertices into {}", src.n(), dst.n())));
        }
        Ok(GraphHom { src, dst, map })
    }

    pub fn identity(g: &Graph) -> GraphHom {
        GraphHom { src: g.clone(), dst: g.clone(), map: HomomorphismMap::new((0..g.n()).collect()) }
    }

    pub fn then(&self, next: &GraphHom) -> Result<GraphHom> {
        if self.dst != next.src {
            return Err(Error::NotAHomomorphism("composition across different graphs".into()));
        }
        GraphHom::new(self.src.clone(), next.dst.clone(), self.map.compose(&next.map))
    }
}

fn mycielski_image(
    src: &Graph,
    dst: &Graph,
    f: impl Fn(&VertexLabel, u32) -> VertexLabel,
) -> Result<HomomorphismMap> {
    let images = src
        .labels()
        .iter()
        .map(|l| {
            let target = match l {
                VertexLabel::Level { base, level } => f(base, *level),
                _ => VertexLabel::Apex,
            };
            dst.index_of(&target).ok_or_else(|| Error::NotAHomomorphism(format!("no image for {l}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomomorphismMap::new(images))
}

/// Level collapse M_{r_from}(g) -> M_{r_to}(g): (v, i) goes to
/// (v, max(i - (r_from - r_to), 0)) and the apex to the apex.
pub fn mycielski_level_map(g: &Graph, r_from: usize, r_to: usize) -> Result<GraphHom> {
    if r_to == 0 || r_from <= r_to {
        return Err(Error::BadParameters(format!("need r_from > r_to >= 1, got {r_from}, {r_to}")));
    }
    let src = generalized_mycielskian(g, r_from)?;
    let dst = generalized_mycielskian(g, r_to)?;
    let shift = (r_from - r_to) as u32;
    let map = mycielski_image(&src, &dst, |base, i| VertexLabel::level(base.clone(), i.saturating_sub(shift)))?;
    GraphHom::new(src, dst, map)
}

/// Lifts f: g -> h to M_r(g) -> M_r(h) levelwise, apex to apex.
pub fn mycielski_functor_map(f: &GraphHom, r: usize) -> Result<GraphHom> {
    if !verify_homomorphism(&f.src, &f.dst, &f.map)? {
        return Err(Error::NotAHomomorphism("input map".into()));
    }
    let src = generalized_mycielskian(&f.src, r)?;
    let dst = generalized_mycielskian(&f.dst, r)?;
    let map = mycielski_image(&src, &dst, |base, i| {
        let v = f.src.index_of(base).expect("base vertex");
        VertexLabel::level(f.dst.label(f.map.image(v)).clone(), i)
    })?;
    GraphHom::new(src, dst, map)
}
