//! Exact homomorphism search, exhaustive orientation sweeps and the
//! conversions between shift-graph homomorphisms and oriented colorings.
//!
//! The search is a backtracker over bitset domains with arc consistency (or
//! plain forward checking), smallest-domain-first variable order and two
//! symmetry reductions on the target: interchangeable symbols (complete
//! graphs, shift graphs) and cyclic rotations (circulants). A `None` answer
//! always means the space was exhausted; running out of budget is an error.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::budget::{Budget, Meter};
use crate::color::directed_local_value;
use crate::construct::{pullback_orientation, ConstructionReport};
use crate::error::{Error, Result};
use crate::families::{directed_shift_graph, shift_graph};
use crate::graph::{Graph, Orientation, Relational};
use crate::label::VertexLabel;

/// Total map from source vertex indices to target vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomomorphismMap(Vec<usize>);

impl HomomorphismMap {
    pub fn new(images: Vec<usize>) -> Self {
        HomomorphismMap(images)
    }

    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &HomomorphismMap) -> HomomorphismMap {
        HomomorphismMap(self.0.iter().map(|&x| then.0[x]).collect())
    }

    pub fn to_label_map<S: Relational + ?Sized, D: Relational + ?Sized>(
        &self,
        src: &S,
        dst: &D,
    ) -> BTreeMap<String, VertexLabel> {
        src.labels().iter().zip(&self.0).map(|(l, &x)| (l.key(), dst.labels()[x].clone())).collect()
    }

    pub fn from_label_map<S: Relational + ?Sized, D: Relational + ?Sized>(
        src: &S,
        dst: &D,
        map: &BTreeMap<String, VertexLabel>,
    ) -> Result<HomomorphismMap> {
        let mut images = vec![usize::MAX; src.order()];
        for (k, img) in map {
            let l = VertexLabel::from_key(k)?;
            let v = src.index_of(&l).ok_or(Error::UnknownEndpoint(l))?;
            images[v] = dst.index_of(img).ok_or_else(|| Error::UnknownEndpoint(img.clone()))?;
        }
        let got = images.iter().filter(|&&x| x != usize::MAX).count();
        if got != images.len() {
            return Err(Error::PartialMap { expected: images.len(), got });
        }
        Ok(HomomorphismMap(images))
    }
}

/// True iff every arc of `src` lands on an arc of `dst` (undirected edges
/// count as both arcs).
pub fn verify_homomorphism<S: Relational + ?Sized, D: Relational + ?Sized>(
    src: &S,
    dst: &D,
    map: &HomomorphismMap,
) -> Result<bool> {
    if map.len() != src.order() {
        return Err(Error::PartialMap { expected: src.order(), got: map.len() });
    }
    if map.0.iter().any(|&x| x >= dst.order()) {
        return Ok(false);
    }
    Ok(src.arc_list().into_iter().all(|(u, v)| dst.out_adj(map.0[u]).contains(&map.0[v])))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Propagation {
    /// Forward checking only.
    None,
    #[default]
    ArcConsistency,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Symmetry {
    /// Detect target symmetries from the labels and break them.
    #[default]
    Auto,
    Off,
}

#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    pub budget: Budget,
    /// Shuffles value order at every node when set.
    pub seed: Option<u64>,
    pub propagation: Propagation,
    pub symmetry: Symmetry,
}

impl SearchConfig {
    pub fn with_budget(budget: Budget) -> Self {
        SearchConfig { budget, ..SearchConfig::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub complete: bool,
}

enum TargetSymmetry {
    None,
    /// Every permutation of the symbol alphabet is an automorphism; each
    /// target vertex is a tuple of symbols.
    Symbols(Vec<Vec<usize>>),
    /// The automorphism group acts transitively on target vertices.
    Transitive,
}

fn label_symbols(l: &VertexLabel) -> Option<Vec<i64>> {
    match l {
        VertexLabel::Int(i) => Some(vec![*i]),
        VertexLabel::Pair(i, j) => Some(vec![*i, *j]),
        _ => None,
    }
}

fn detect_symmetry<D: Relational + ?Sized>(dst: &D) -> TargetSymmetry {
    let labels = dst.labels();
    let n = labels.len();
    if n < 2 {
        return TargetSymmetry::None;
    }
    let Some(raw) = labels.iter().map(label_symbols).collect::<Option<Vec<_>>>() else {
        return TargetSymmetry::None;
    };
    let arcs = dst.arc_list();
    let mut alphabet: Vec<i64> = raw.iter().flatten().copied().collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    let tuples: Vec<Vec<usize>> = raw
        .iter()
        .map(|t| t.iter().map(|s| alphabet.binary_search(s).unwrap()).collect())
        .collect();
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let arc_set: std::collections::HashSet<(usize, usize)> = arcs.iter().copied().collect();

    let is_auto = |perm: &dyn Fn(usize) -> Option<usize>| -> bool {
        let img: Option<Vec<usize>> = (0..n).map(perm).collect();
        match img {
            Some(img) => arcs.iter().all(|&(u, v)| arc_set.contains(&(img[u], img[v]))),
            None => false,
        }
    };

    let swaps_ok = alphabet.len() >= 2
        && (0..alphabet.len() - 1).all(|s| {
            let swap = |x: usize| {
                let t: Vec<usize> = tuples[x]
                    .iter()
                    .map(|&y| if y == s { s + 1 } else if y == s + 1 { s } else { y })
                    .collect();
                index.get(t.as_slice()).copied()
            };
            is_auto(&swap)
        });
    if swaps_ok {
        return TargetSymmetry::Symbols(tuples);
    }
    if tuples.iter().all(|t| t.len() == 1) && alphabet.len() == n {
        let rot = |x: usize| Some((x + 1) % n);
        if is_auto(&rot) {
            return TargetSymmetry::Transitive;
        }
    }
    TargetSymmetry::None
}

struct Problem {
    n_src: usize,
    n_dst: usize,
    cons: Vec<(usize, usize)>,
    cons_of: Vec<Vec<usize>>,
    degree: Vec<usize>,
    out: Vec<BitSet>,
    inn: Vec<BitSet>,
    propagation: Propagation,
    symmetry: TargetSymmetry,
}

fn is_symmetric<R: Relational + ?Sized>(r: &R) -> bool {
    (0..r.order()).all(|u| r.out_adj(u).iter().all(|&v| r.out_adj(v).contains(&u)))
}

impl Problem {
    fn new<S: Relational + ?Sized, D: Relational + ?Sized>(src: &S, dst: &D, cfg: &SearchConfig) -> Problem {
        let (n_src, n_dst) = (src.order(), dst.order());
        let both_symmetric = is_symmetric(src) && is_symmetric(dst);
        let cons: Vec<(usize, usize)> =
            src.arc_list().into_iter().filter(|&(u, v)| !both_symmetric || u < v).collect();
        let mut cons_of = vec![Vec::new(); n_src];
        for (i, &(a, b)) in cons.iter().enumerate() {
            cons_of[a].push(i);
            cons_of[b].push(i);
        }
        let degree = cons_of.iter().map(Vec::len).collect();
        let row = |adj: &[usize]| {
            let mut s = BitSet::new(n_dst);
            adj.iter().for_each(|&x| s.insert(x));
            s
        };
        let out = (0..n_dst).map(|x| row(dst.out_adj(x))).collect();
        let inn = (0..n_dst).map(|x| row(dst.in_adj(x))).collect();
        let symmetry = match cfg.symmetry {
            Symmetry::Auto => detect_symmetry(dst),
            Symmetry::Off => TargetSymmetry::None,
        };
        Problem { n_src, n_dst, cons, cons_of, degree, out, inn, propagation: cfg.propagation, symmetry }
    }

    /// Revise both ends of constraint `c`; returns which ends shrank.
    fn revise(&self, doms: &mut [BitSet], c: usize) -> (bool, bool) {
        let (a, b) = self.cons[c];
        let (da, db) = pair_mut(doms, a, b);
        let mut ra = false;
        for x in da.iter().collect::<Vec<_>>() {
            if !self.out[x].intersects(db) {
                da.remove(x);
                ra = true;
            }
        }
        let mut rb = false;
        for y in db.iter().collect::<Vec<_>>() {
            if !self.inn[y].intersects(da) {
                db.remove(y);
                rb = true;
            }
        }
        (ra, rb)
    }

    fn arc_consistency(&self, doms: &mut [BitSet], seeds: &[usize]) -> bool {
        let mut queued = vec![false; self.cons.len()];
        let mut queue = VecDeque::new();
        for &v in seeds {
            for &c in &self.cons_of[v] {
                if !queued[c] {
                    queued[c] = true;
                    queue.push_back(c);
                }
            }
        }
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            let (ra, rb) = self.revise(doms, c);
            let (a, b) = self.cons[c];
            for (shrank, v) in [(ra, a), (rb, b)] {
                if !shrank {
                    continue;
                }
                if doms[v].is_empty() {
                    return false;
                }
                for &c2 in &self.cons_of[v] {
                    if c2 != c && !queued[c2] {
                        queued[c2] = true;
                        queue.push_back(c2);
                    }
                }
            }
        }
        true
    }

    fn forward_check(&self, doms: &mut [BitSet], v: usize, x: usize) -> bool {
        for &c in &self.cons_of[v] {
            let (a, b) = self.cons[c];
            let (w, row) = if a == v { (b, &self.out[x]) } else { (a, &self.inn[x]) };
            doms[w].intersect_with(row);
            if doms[w].is_empty() {
                return false;
            }
        }
        true
    }

    /// Symbol-introduction rule: new symbols must appear in increasing order
    /// starting from `used`. Returns the new count of used symbols.
    fn admit(&self, x: usize, used: usize) -> Option<usize> {
        let TargetSymmetry::Symbols(tuples) = &self.symmetry else { return Some(used) };
        let mut next = used;
        for &s in &tuples[x] {
            if s < next {
                continue;
            }
            if s == next {
                next += 1;
            } else {
                return None;
            }
        }
        Some(next)
    }
}

fn pair_mut(doms: &mut [BitSet], a: usize, b: usize) -> (&mut BitSet, &mut BitSet) {
    assert_ne!(a, b, "constraint on a single vertex");
    if a < b {
        let (lo, hi) = doms.split_at_mut(b);
        (&mut lo[a], &mut hi[0])
    } else {
        let (lo, hi) = doms.split_at_mut(a);
        (&mut hi[0], &mut lo[b])
    }
}

struct Search<'a> {
    p: &'a Problem,
    assigned: Vec<bool>,
    meter: Meter,
    rng: Option<ChaCha8Rng>,
}

impl Search<'_> {
    fn pick(&self, doms: &[BitSet]) -> Option<usize> {
        (0..self.p.n_src)
            .filter(|&v| !self.assigned[v])
            .min_by_key(|&v| (doms[v].count(), std::cmp::Reverse(self.p.degree[v]), v))
    }

    fn run(&mut self, doms: Vec<BitSet>, depth: usize, used: usize) -> Result<Option<Vec<usize>>> {
        let Some(v) = self.pick(&doms) else {
            return Ok(Some(doms.iter().map(|d| d.first().expect("singleton domain")).collect()));
        };
        let mut values: Vec<usize> = doms[v].iter().collect();
        if depth == 0 && matches!(self.p.symmetry, TargetSymmetry::Transitive) {
            values.truncate(1);
        }
        if let Some(rng) = &mut self.rng {
            values.shuffle(rng);
        }
        for x in values {
            let Some(next_used) = self.p.admit(x, used) else { continue };
            self.meter.tick()?;
            let mut nd = doms.clone();
            nd[v].clear();
            nd[v].insert(x);
            let ok = match self.p.propagation {
                Propagation::ArcConsistency => self.p.arc_consistency(&mut nd, &[v]),
                Propagation::None => self.p.forward_check(&mut nd, v, x),
            };
            if !ok {
                continue;
            }
            self.assigned[v] = true;
            let found = self.run(nd, depth + 1, next_used)?;
            self.assigned[v] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Like [`find_homomorphism`] but also reports the node count.
pub fn find_homomorphism_with_stats<S: Relational + ?Sized, D: Relational + ?Sized>(
    src: &S,
    dst: &D,
    cfg: &SearchConfig,
) -> Result<(Option<HomomorphismMap>, SearchStats)> {
    if cfg.budget.nodes == 0 {
        return Err(Error::BadParameters("search budget must be positive".into()));
    }
    let p = Problem::new(src, dst, cfg);
    let mut search = Search {
        p: &p,
        assigned: vec![false; p.n_src],
        meter: cfg.budget.meter(),
        rng: cfg.seed.map(ChaCha8Rng::seed_from_u64),
    };
    if p.n_src == 0 {
        return Ok((Some(HomomorphismMap(Vec::new())), SearchStats { nodes: 0, complete: true }));
    }
    let mut doms = vec![BitSet::full(p.n_dst); p.n_src];
    let all: Vec<usize> = (0..p.n_src).collect();
    let consistent = p.n_dst > 0
        && match p.propagation {
            Propagation::ArcConsistency => p.arc_consistency(&mut doms, &all),
            Propagation::None => true,
        };
    let found = if consistent { search.run(doms, 0, 0)? } else { None };
    let stats = SearchStats { nodes: search.meter.used, complete: found.is_none() };
    let map = found.map(HomomorphismMap);
    if let Some(m) = &map {
        if !verify_homomorphism(src, dst, m)? {
            return Err(Error::NotAHomomorphism("search produced an invalid map".into()));
        }
    }
    Ok((map, stats))
}

/// A verified homomorphism, or `None` after a complete refutation.
pub fn find_homomorphism<S: Relational + ?Sized, D: Relational + ?Sized>(
    src: &S,
    dst: &D,
    cfg: &SearchConfig,
) -> Result<Option<HomomorphismMap>> {
    Ok(find_homomorphism_with_stats(src, dst, cfg)?.0)
}

/// Smallest `m <= m_max` with `g -> S_m`, with its witness.
pub fn hom_to_some_shift(g: &Graph, m_max: usize, cfg: &SearchConfig) -> Result<Option<(usize, HomomorphismMap)>> {
    if m_max < 2 {
        return Err(Error::BadParameters("m_max must be at least 2".into()));
    }
    let mut meter = cfg.budget.meter();
    for m in 2..=m_max {
        let target = shift_graph(m)?;
        let sub = SearchConfig { budget: meter.remaining(), ..cfg.clone() };
        let (found, stats) = find_homomorphism_with_stats(g, &target, &sub)?;
        meter.charge(stats.nodes)?;
        if let Some(h) = found {
            return Ok(Some((m, h)));
        }
    }
    Ok(None)
}

/// Reads `v -> (color(v), color of v's out-neighbors)` off a report whose
/// coloring has directed local value at most 2. Sinks use the next color.
pub fn shift_hom_from_report(r: &ConstructionReport) -> Result<(usize, HomomorphismMap)> {
    let o = &r.orientation;
    let c = r
        .coloring
        .as_ref()
        .ok_or_else(|| Error::BadParameters("report carries no coloring".into()))?;
    let value = directed_local_value(o, c)?;
    if value > 2 {
        return Err(Error::ValueNotTwo(value));
    }
    let m = c.span().max(2);
    let target = shift_graph(m)?;
    let mut images = Vec::with_capacity(o.n());
    for v in 0..o.n() {
        let own = c.color(v);
        let out = o.out_neighbors(v).first().map_or((own + 1) % m, |&w| c.color(w));
        let l = VertexLabel::pair(own as i64 + 1, out as i64 + 1);
        images.push(target.index_of(&l).expect("shift vertex"));
    }
    let h = HomomorphismMap(images);
    if !verify_homomorphism(o.base(), &target, &h)? {
        return Err(Error::NotAHomomorphism("pair map into the shift graph".into()));
    }
    Ok((m, h))
}

/// Checks `predicate` on all 2^|E| orientations. With `halve`, one edge keeps
/// its direction fixed, which is sound when the predicate is invariant under
/// reversing every arc. Returns the first failing orientation, if any.
pub fn exhaustive_orientation_check<F>(
    g: &Graph,
    mut predicate: F,
    halve: bool,
    budget: &Budget,
) -> Result<(bool, Option<Orientation>)>
where
    F: FnMut(&Orientation) -> Result<bool>,
{
    let m = g.m();
    if m > 40 {
        return Err(Error::BadParameters(format!("{m} edges is too many for an exhaustive sweep")));
    }
    let free = if halve && m > 0 { m - 1 } else { m };
    let mut meter = budget.meter();
    for mask in 0u64..(1u64 << free) {
        meter.tick()?;
        let forward = (0..m).map(|i| i < free && (mask >> i) & 1 == 1).collect();
        let o = Orientation::from_forward(g.clone(), forward);
        if !predicate(&o)? {
            return Ok((false, Some(o)));
        }
    }
    Ok((true, None))
}

/// Searches orientations and colorings with at most `color_budget` colors
/// jointly for directed local value 2, as a homomorphism into the shift graph
/// on `color_budget` symbols. `None` is a complete refutation.
pub fn joint_orientation_coloring_search(
    g: &Graph,
    color_budget: usize,
    cfg: &SearchConfig,
) -> Result<Option<ConstructionReport>> {
    joint_search_with_stats(g, color_budget, cfg).map(|(r, _)| r)
}

pub fn joint_search_with_stats(
    g: &Graph,
    color_budget: usize,
    cfg: &SearchConfig,
) -> Result<(Option<ConstructionReport>, SearchStats)> {
    if color_budget < 2 {
        return Err(Error::BadParameters("color budget must be at least 2".into()));
    }
    let target = shift_graph(color_budget)?;
    let (found, stats) = find_homomorphism_with_stats(g, &target, cfg)?;
    let Some(h) = found else { return Ok((None, stats)) };
    let directed = directed_shift_graph(color_budget)?;
    debug_assert_eq!(directed.labels(), target.labels());
    Ok((Some(pullback_orientation(g, &directed, &h)?), stats))
}

/// `{"m":4,"map":{label:pairLabel}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftWitness {
    pub m: usize,
    pub map: BTreeMap<String, VertexLabel>,
}

impl ShiftWitness {
    pub fn new(g: &Graph, m: usize, h: &HomomorphismMap) -> Result<ShiftWitness> {
        Ok(ShiftWitness { m, map: h.to_label_map(g, &shift_graph(m)?) })
    }

    /// Rebuilds and re-verifies the map against `g`.
    pub fn check(&self, g: &Graph) -> Result<bool> {
        let target = shift_graph(self.m)?;
        let h = HomomorphismMap::from_label_map(g, &target, &self.map)?;
        verify_homomorphism(g, &target, &h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clebsch, complete, cycle, grotzsch, kneser, rational_complete, schrijver};
    use crate::oddcycles::find_alternating_odd_cycle;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn verify_rejects_constant_map() {
        let k2 = complete(2).unwrap();
        assert!(!verify_homomorphism(&k2, &k2, &HomomorphismMap::new(vec![0, 0])).unwrap());
        assert_eq!(
            verify_homomorphism(&k2, &k2, &HomomorphismMap::new(vec![0])),
            Err(Error::PartialMap { expected: 2, got: 1 })
        );
    }

    #[test]
    fn shift_inclusion_is_homomorphism() {
        let (s4, s5) = (shift_graph(4).unwrap(), shift_graph(5).unwrap());
        let h = HomomorphismMap::new(s4.labels().iter().map(|l| s5.index_of(l).unwrap()).collect());
        assert!(verify_homomorphism(&s4, &s5, &h).unwrap());
    }

    #[test]
    fn schrijver_and_kneser_into_s4() {
        let s4 = shift_graph(4).unwrap();
        assert!(find_homomorphism(&schrijver(6, 2).unwrap(), &s4, &cfg()).unwrap().is_some());
        assert_eq!(find_homomorphism(&complete(4).unwrap(), &s4, &cfg()).unwrap(), None);
    }

    #[test]
    fn rational_examples() {
        let (k72, k4) = (rational_complete(7, 2).unwrap(), complete(4).unwrap());
        assert!(find_homomorphism(&k72, &k4, &cfg()).unwrap().is_some());
        assert_eq!(find_homomorphism(&k4, &k72, &cfg()).unwrap(), None);
    }

    #[test]
    fn symmetry_detection() {
        assert!(matches!(detect_symmetry(&complete(5).unwrap()), TargetSymmetry::Symbols(_)));
        assert!(matches!(detect_symmetry(&shift_graph(4).unwrap()), TargetSymmetry::Symbols(_)));
        assert!(matches!(detect_symmetry(&directed_shift_graph(4).unwrap()), TargetSymmetry::Symbols(_)));
        assert!(matches!(detect_symmetry(&cycle(7).unwrap()), TargetSymmetry::Transitive));
        assert!(matches!(detect_symmetry(&kneser(5, 2).unwrap()), TargetSymmetry::None));
    }

    #[test]
    fn symmetry_and_propagation_agree() {
        let pairs = [
            (kneser(5, 2).unwrap(), shift_graph(3).unwrap()),
            (kneser(5, 2).unwrap(), complete(3).unwrap()),
            (cycle(7).unwrap(), cycle(5).unwrap()),
            (cycle(5).unwrap(), cycle(7).unwrap()),
            (grotzsch(), complete(3).unwrap()),
        ];
        for (s, d) in &pairs {
            let mut answers = Vec::new();
            for prop in [Propagation::None, Propagation::ArcConsistency] {
                for sym in [Symmetry::Auto, Symmetry::Off] {
                    let c = SearchConfig { propagation: prop, symmetry: sym, ..cfg() };
                    answers.push(find_homomorphism(s, d, &c).unwrap().is_some());
                }
            }
            assert!(answers.windows(2).all(|w| w[0] == w[1]), "{answers:?}");
        }
    }

    #[test]
    fn seeded_search_is_reproducible() {
        let c = SearchConfig { seed: Some(7), ..cfg() };
        let (g, s) = (schrijver(6, 2).unwrap(), shift_graph(4).unwrap());
        assert_eq!(find_homomorphism(&g, &s, &c).unwrap(), find_homomorphism(&g, &s, &c).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let c = SearchConfig::with_budget(Budget::nodes(5));
        let r = find_homomorphism(&kneser(6, 2).unwrap(), &shift_graph(4).unwrap(), &c);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn smallest_shift() {
        let (m, h) = hom_to_some_shift(&grotzsch(), 6, &cfg()).unwrap().unwrap();
        assert_eq!(m, 4);
        assert!(verify_homomorphism(&grotzsch(), &shift_graph(4).unwrap(), &h).unwrap());
        assert_eq!(hom_to_some_shift(&cycle(6).unwrap(), 4, &cfg()).unwrap().unwrap().0, 2);
        assert_eq!(hom_to_some_shift(&cycle(5).unwrap(), 4, &cfg()).unwrap().unwrap().0, 3);
    }

    #[test]
    fn exhaustive_small_cases() {
        let b = Budget::default();
        let has_alt = |o: &Orientation| Ok(find_alternating_odd_cycle(o, &Budget::default())?.is_some());
        let (ok, _) = exhaustive_orientation_check(&crate::families::wheel(5).unwrap(), has_alt, true, &b).unwrap();
        assert!(ok);
        let (ok, bad) = exhaustive_orientation_check(&cycle(5).unwrap(), has_alt, true, &b).unwrap();
        assert!(!ok);
        let bad = bad.unwrap();
        assert_eq!(find_alternating_odd_cycle(&bad, &b).unwrap(), None);
    }

    #[test]
    fn joint_search_small() {
        let r = joint_orientation_coloring_search(&grotzsch(), 4, &cfg()).unwrap().unwrap();
        let c = r.coloring.as_ref().unwrap();
        assert!(directed_local_value(&r.orientation, c).unwrap() <= 2);
        assert!(c.span() <= 4);
        assert!(joint_orientation_coloring_search(&complete(4).unwrap(), 4, &cfg()).unwrap().is_none());
        let _ = clebsch();
    }

    #[test]
    fn witness_round_trip() {
        let g = grotzsch();
        let (m, h) = hom_to_some_shift(&g, 4, &cfg()).unwrap().unwrap();
        let w = ShiftWitness::new(&g, m, &h).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        assert!(text.starts_with(r#"{"m":4,"map":{"#));
        let back: ShiftWitness = serde_json::from_str(&text).unwrap();
        assert!(back.check(&g).unwrap());
    }
}
