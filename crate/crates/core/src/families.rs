//! Deterministic generators for the named graph families.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::label::VertexLabel;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameters(msg.into())
}

fn ints(n: usize) -> Vec<VertexLabel> {
    (0..n as i64).map(VertexLabel::Int).collect()
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn check_kneser(n: usize, k: usize) -> Result<()> {
    if k < 1 || n < 2 * k {
        return Err(bad(format!("need n >= 2k >= 2, got n={n}, k={k}")));
    }
    Ok(())
}

fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<u32>> {
    (1..=n as u32).combinations(k)
}

fn disjointness_graph(sets: Vec<Vec<u32>>) -> Result<Graph> {
    let labels = sets.into_iter().map(VertexLabel::Set).collect();
    Graph::from_predicate(labels, |a, b| disjoint(a.as_set().unwrap(), b.as_set().unwrap()))
}

/// k-subsets of [n], adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    check_kneser(n, k)?;
    disjointness_graph(k_subsets(n, k).collect())
}

/// No two cyclically consecutive elements of [n]; {1, n} counts as consecutive.
pub fn is_stable(set: &[u32], n: usize) -> bool {
    let n = n as u32;
    let consecutive = set.windows(2).any(|w| w[1] == w[0] + 1);
    let wraps = n > 1 && set.first() == Some(&1) && set.last() == Some(&n);
    !(consecutive || wraps)
}

/// Induced subgraph of `kneser(n, k)` on the stable k-subsets.
pub fn schrijver(n: usize, k: usize) -> Result<Graph> {
    check_kneser(n, k)?;
    disjointness_graph(k_subsets(n, k).filter(|s| is_stable(s, n)).collect())
}

/// The r-level generalized Mycielskian: levels 0..r of copies of `g`, edges
/// {(u,i),(v,j)} for uv in E(g) with |i-j| = 1 or i = j = 0, and an apex
/// joined to the top level r-1.
pub fn generalized_mycielskian(g: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(bad("Mycielskian level count must be positive"));
    }
    let mut labels = Vec::with_capacity(g.n() * r + 1);
    for v in 0..g.n() {
        for i in 0..r {
            labels.push(VertexLabel::level(g.label(v).clone(), i as u32));
        }
    }
    labels.push(VertexLabel::Apex);
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for i in 0..r {
            for j in 0..r {
                if i.abs_diff(j) == 1 || (i == 0 && j == 0) {
                    edges.push((
                        VertexLabel::level(g.label(u).clone(), i as u32),
                        VertexLabel::level(g.label(v).clone(), j as u32),
                    ));
                }
            }
        }
    }
    for v in 0..g.n() {
        edges.push((VertexLabel::Apex, VertexLabel::level(g.label(v).clone(), r as u32 - 1)));
    }
    crate::graph::make_graph(labels, &edges)
}

/// `M_{r_k}(... M_{r_1}(K_2))`: levels are applied first to last.
pub fn iterated_mycielski(levels: &[usize]) -> Result<Graph> {
    if levels.is_empty() {
        return Err(bad("need at least one Mycielskian level"));
    }
    let mut g = complete(2)?;
    for &r in levels {
        g = generalized_mycielskian(&g, r)?;
    }
    Ok(g)
}

/// Vertices 0..p, edges between a and b with q <= |a-b| <= p-q.
pub fn rational_complete(p: usize, q: usize) -> Result<Graph> {
    if q < 1 || p < 2 * q {
        return Err(bad(format!("need p >= 2q >= 2, got p={p}, q={q}")));
    }
    Graph::from_predicate(ints(p), |a, b| {
        let (VertexLabel::Int(a), VertexLabel::Int(b)) = (a, b) else { unreachable!() };
        let d = a.abs_diff(*b) as usize;
        q <= d && d <= p - q
    })
}

fn shift_labels(m: usize) -> Vec<VertexLabel> {
    let m = m as i64;
    (1..=m).flat_map(|i| (1..=m).filter(move |&j| j != i).map(move |j| VertexLabel::pair(i, j))).collect()
}

/// Symmetric shift graph: pairs (i,j), i != j, over [m]; (i,j) ~ (k,l) iff j = k or i = l.
pub fn shift_graph(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(bad("shift graph needs m >= 2"));
    }
    Graph::from_predicate(shift_labels(m), |a, b| {
        let ((i, j), (k, l)) = (a.as_pair().unwrap(), b.as_pair().unwrap());
        j == k || i == l
    })
}

/// Directed shift graph: (i,j) -> (j,k) for every k != j. For k = i this
/// gives the opposite pair between (i,j) and (j,i).
pub fn directed_shift_graph(m: usize) -> Result<Digraph> {
    if m < 2 {
        return Err(bad("shift graph needs m >= 2"));
    }
    let labels = shift_labels(m);
    let mut arcs = Vec::new();
    for a in &labels {
        let (_, j) = a.as_pair().unwrap();
        for k in 1..=m as i64 {
            if k != j {
                arcs.push((a.clone(), VertexLabel::pair(j, k)));
            }
        }
    }
    Digraph::new(labels, &arcs)
}

/// Weight-{1,4} difference graph on the 16 four-bit strings.
pub fn clebsch() -> Graph {
    Graph::from_predicate(ints(16), |a, b| {
        let (VertexLabel::Int(a), VertexLabel::Int(b)) = (a, b) else { unreachable!() };
        matches!((a ^ b).count_ones(), 1 | 4)
    })
    .expect("fixed construction")
}

/// `M_2(C_5)` renamed to `Int(0..11)` in label order.
pub fn grotzsch() -> Graph {
    iterated_mycielski(&[2, 2]).expect("fixed construction").relabel_to_ints()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    Graph::from_predicate(ints(n), |a, b| {
        let (VertexLabel::Int(a), VertexLabel::Int(b)) = (a, b) else { unreachable!() };
        let d = a.abs_diff(*b) as usize;
        d == 1 || d == n - 1
    })
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    Graph::from_predicate(ints(n), |_, _| true)
}

/// Rim `0..n` on a cycle plus hub `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    let rim = cycle(n)?;
    let hub = VertexLabel::Int(n as i64);
    let mut edges = rim.edge_labels();
    edges.extend((0..n as i64).map(|v| (VertexLabel::Int(v), hub.clone())));
    crate::graph::make_graph(ints(n + 1), &edges)
}

/// Even cycle on `0..n` plus the n/2 long diagonals.
pub fn moebius_ladder(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(bad("Moebius ladder needs an even n >= 4"));
    }
    Graph::from_predicate(ints(n), |a, b| {
        let (VertexLabel::Int(a), VertexLabel::Int(b)) = (a, b) else { unreachable!() };
        let d = a.abs_diff(*b) as usize;
        d == 1 || d == n - 1 || d == n / 2
    })
}

/// A family name plus its integer parameters, as written on the command line:
/// `kneser:n,k | schrijver:n,k | myc:r1-r2-... | rat:p,q | shift:m | dshift:m |
/// clebsch | grotzsch | wheel:n | cycle:n | complete:n | moebius:n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Kneser(usize, usize),
    Schrijver(usize, usize),
    Mycielski(Vec<usize>),
    Rational(usize, usize),
    Shift(usize),
    DirectedShift(usize),
    Clebsch,
    Grotzsch,
    Wheel(usize),
    Cycle(usize),
    Complete(usize),
    Moebius(usize),
}

impl FamilySpec {
    /// The undirected graph; for `DirectedShift` this is the underlying shift graph.
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Kneser(n, k) => kneser(*n, *k),
            FamilySpec::Schrijver(n, k) => schrijver(*n, *k),
            FamilySpec::Mycielski(levels) => iterated_mycielski(levels),
            FamilySpec::Rational(p, q) => rational_complete(*p, *q),
            FamilySpec::Shift(m) | FamilySpec::DirectedShift(m) => shift_graph(*m),
            FamilySpec::Clebsch => Ok(clebsch()),
            FamilySpec::Grotzsch => Ok(grotzsch()),
            FamilySpec::Wheel(n) => wheel(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Moebius(n) => moebius_ladder(*n),
        }
    }

    pub fn build_digraph(&self) -> Option<Result<Digraph>> {
        match self {
            FamilySpec::DirectedShift(m) => Some(directed_shift_graph(*m)),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Kneser(n, k) => write!(f, "kneser:{n},{k}"),
            FamilySpec::Schrijver(n, k) => write!(f, "schrijver:{n},{k}"),
            FamilySpec::Mycielski(levels) => write!(f, "myc:{}", levels.iter().join("-")),
            FamilySpec::Rational(p, q) => write!(f, "rat:{p},{q}"),
            FamilySpec::Shift(m) => write!(f, "shift:{m}"),
            FamilySpec::DirectedShift(m) => write!(f, "dshift:{m}"),
            FamilySpec::Clebsch => write!(f, "clebsch"),
            FamilySpec::Grotzsch => write!(f, "grotzsch"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Moebius(n) => write!(f, "moebius:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = |sep: char| -> Result<Vec<usize>> {
            args.split(sep)
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad(format!("bad number `{t}` in `{s}`"))))
                .collect()
        };
        let one = || -> Result<usize> {
            match nums(',')?.as_slice() {
                [a] => Ok(*a),
                _ => Err(bad(format!("`{tag}` takes one parameter"))),
            }
        };
        let two = || -> Result<(usize, usize)> {
            match nums(',')?.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(bad(format!("`{tag}` takes two parameters"))),
            }
        };
        let spec = match tag {
            "kneser" => two().map(|(n, k)| FamilySpec::Kneser(n, k))?,
            "schrijver" => two().map(|(n, k)| FamilySpec::Schrijver(n, k))?,
            "myc" => FamilySpec::Mycielski(nums('-')?),
            "rat" => two().map(|(p, q)| FamilySpec::Rational(p, q))?,
            "shift" => FamilySpec::Shift(one()?),
            "dshift" => FamilySpec::DirectedShift(one()?),
            "clebsch" if args.is_empty() => FamilySpec::Clebsch,
            "grotzsch" if args.is_empty() => FamilySpec::Grotzsch,
            "wheel" => FamilySpec::Wheel(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "moebius" => FamilySpec::Moebius(one()?),
            _ => return Err(bad(format!("unknown family spec `{s}`"))),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::embed::are_isomorphic;
    use crate::graph::Relational;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn kneser_counts() {
        let k2 = kneser(2, 1).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let g = kneser(6, 2).unwrap();
        assert_eq!((g.n(), g.m()), (15, 45));
        assert_eq!(g.m(), 3 * g.n());
        let p = kneser(5, 2).unwrap();
        assert_eq!((p.n(), p.is_regular()), (10, Some(3)));
        for (n, k) in [(7, 2), (7, 3), (8, 3), (9, 4), (10, 3)] {
            let g = kneser(n, k).unwrap();
            assert_eq!(g.n(), binom(n, k));
            assert_eq!(g.is_regular(), Some(binom(n - k, k)));
        }
        assert!(kneser(3, 2).is_err());
        assert!(kneser(4, 0).is_err());
    }

    /// Stable k-subsets of [n] counted by brute force over all subsets.
    fn stable_count_oracle(n: usize, k: usize) -> usize {
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == k)
            .filter(|mask| {
                (0..n).all(|i| {
                    let j = (i + 1) % n;
                    !(mask >> i & 1 == 1 && mask >> j & 1 == 1)
                })
            })
            .count()
    }

    #[test]
    fn schrijver_counts() {
        assert_eq!(schrijver(6, 2).unwrap().n(), 9);
        for k in 1..=6 {
            let g = schrijver(2 * k + 2, k).unwrap();
            assert_eq!(g.n(), (k + 1) * (k + 1), "k={k}");
            assert_eq!(g.n(), stable_count_oracle(2 * k + 2, k));
        }
        assert_eq!(schrijver(4, 1).unwrap(), kneser(4, 1).unwrap());
        assert!(are_isomorphic(&schrijver(4, 1).unwrap(), &complete(4).unwrap(), &Budget::default()).unwrap());
    }

    #[test]
    fn schrijver_is_induced_in_kneser() {
        let (s, k) = (schrijver(8, 3).unwrap(), kneser(8, 3).unwrap());
        let keep: Vec<usize> = s.labels().iter().map(|l| k.index_of(l).unwrap()).collect();
        assert_eq!(k.induced_subgraph(&keep), s);
    }

    #[test]
    fn mycielskian_shapes() {
        let b = Budget::default();
        for r in 1..=6 {
            let g = generalized_mycielskian(&complete(2).unwrap(), r).unwrap();
            assert_eq!(g.n(), 2 * r + 1);
            assert!(are_isomorphic(&g, &cycle(2 * r + 1).unwrap(), &b).unwrap(), "r={r}");
        }
        let p = kneser(5, 2).unwrap();
        let cone = generalized_mycielskian(&p, 1).unwrap();
        assert_eq!((cone.n(), cone.m()), (11, 15 + 10));
        for r in 1..=4 {
            assert_eq!(generalized_mycielskian(&p, r).unwrap().n(), r * p.n() + 1);
        }
        assert!(generalized_mycielskian(&p, 0).is_err());
    }

    #[test]
    fn iterated_shapes() {
        let b = Budget::default();
        assert!(are_isomorphic(&iterated_mycielski(&[2]).unwrap(), &cycle(5).unwrap(), &b).unwrap());
        assert!(are_isomorphic(&iterated_mycielski(&[1, 1]).unwrap(), &complete(4).unwrap(), &b).unwrap());
        assert!(are_isomorphic(&iterated_mycielski(&[2, 2]).unwrap(), &grotzsch(), &b).unwrap());
        for r in 1..=4 {
            // a one-level cone over C_{2r+1} is the wheel
            let w = iterated_mycielski(&[r, 1]).unwrap();
            assert!(are_isomorphic(&w, &wheel(2 * r + 1).unwrap(), &b).unwrap(), "r={r}");
            // the other order cones the triangle
            let m = iterated_mycielski(&[1, r]).unwrap();
            let mk3 = generalized_mycielskian(&complete(3).unwrap(), r).unwrap();
            assert!(are_isomorphic(&m, &mk3, &b).unwrap(), "r={r}");
        }
    }

    #[test]
    fn rational_shapes() {
        let b = Budget::default();
        assert!(are_isomorphic(&rational_complete(5, 2).unwrap(), &cycle(5).unwrap(), &b).unwrap());
        assert_eq!(rational_complete(6, 1).unwrap(), complete(6).unwrap());
        let g = rational_complete(7, 2).unwrap();
        assert_eq!((g.n(), g.m(), g.is_regular()), (7, 14, Some(4)));
        assert!(rational_complete(5, 3).is_err());
    }

    #[test]
    fn shift_shapes() {
        assert_eq!(shift_graph(4).unwrap().n(), 12);
        for m in 2..=6 {
            let d = directed_shift_graph(m).unwrap();
            assert!((0..d.n()).all(|v| d.out_degree(v) == m - 1));
            assert_eq!(d.underlying(), shift_graph(m).unwrap());
        }
        let d2 = directed_shift_graph(2).unwrap();
        assert_eq!(d2.arcs().len(), 2);
        assert_eq!(d2.underlying().m(), 1);
    }

    #[test]
    fn named_graphs() {
        let c = clebsch();
        assert_eq!((c.n(), c.m(), c.is_regular()), (16, 40, Some(5)));
        let g = grotzsch();
        assert_eq!((g.n(), g.m()), (11, 20));
        let w = wheel(5).unwrap();
        assert_eq!((w.n(), w.m()), (6, 10));
        let ml = moebius_ladder(8).unwrap();
        assert_eq!((ml.n(), ml.m(), ml.is_regular()), (8, 12, Some(3)));
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "kneser:6,2", "schrijver:8,3", "myc:2-3", "rat:7,2", "shift:4", "dshift:3", "clebsch", "grotzsch",
            "wheel:5", "cycle:7", "complete:4", "moebius:8",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            spec.build().unwrap();
        }
        assert!("kneser:6".parse::<FamilySpec>().is_err());
        assert!("petersen".parse::<FamilySpec>().is_err());
        assert!("myc:2-x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        for s in ["kneser:7,3", "myc:2-2", "clebsch", "shift:5"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.build().unwrap().to_json(), spec.build().unwrap().to_json());
        }
    }
}
