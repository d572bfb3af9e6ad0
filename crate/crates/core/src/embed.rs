//! Injective edge-preserving embeddings (not necessarily induced).

use crate::bitset::BitSet;
use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::graph::Graph;

struct Embedder<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    /// For each position in `order`, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: BitSet,
    meter: Meter,
}

impl Embedder<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let p = self.order[depth];
        let mut cand = match self.back[depth].first() {
            Some(&q) => self.host.row(self.image[self.order[q]]).clone(),
            None => BitSet::full(self.host.n()),
        };
        for &q in self.back[depth].iter().skip(1) {
            cand.intersect_with(self.host.row(self.image[self.order[q]]));
        }
        cand.difference_with(&self.used);
        let need = self.pattern.degree(p);
        for h in cand.iter() {
            if self.host.degree(h) < need {
                continue;
            }
            self.meter.tick()?;
            self.image[p] = h;
            self.used.insert(h);
            if self.run(depth + 1)? {
                return Ok(true);
            }
            self.used.remove(h);
        }
        Ok(false)
    }
}

/// Pattern vertices ordered so each one (after the first of its component)
/// has as many already-placed neighbors as possible.
fn connectivity_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

/// Finds an injective map `pattern -> host` sending edges to edges.
/// The result is indexed by pattern vertex and holds host vertex indices.
pub fn find_subgraph_embedding(pattern: &Graph, host: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let order = connectivity_order(pattern);
    let mut pos = vec![0; pattern.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut b: Vec<usize> = pattern.neighbors(v).iter().map(|&w| pos[w]).filter(|&j| j < i).collect();
            b.sort_unstable();
            b
        })
        .collect();
    let mut e = Embedder {
        pattern,
        host,
        order,
        back,
        image: vec![usize::MAX; pattern.n()],
        used: BitSet::new(host.n()),
        meter: budget.meter(),
    };
    if e.run(0)? {
        Ok(Some(e.image))
    } else {
        Ok(None)
    }
}

/// Checks an embedding independently of the search.
pub fn is_embedding(pattern: &Graph, host: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&h| h >= host.n()) {
        return false;
    }
    let mut seen = BitSet::new(host.n());
    for &h in map {
        if seen.contains(h) {
            return false;
        }
        seen.insert(h);
    }
    pattern.edges().iter().all(|&(u, v)| host.has_edge(map[u], map[v]))
}

/// Graph isomorphism via a bijective embedding between graphs of equal size.
pub fn are_isomorphic(a: &Graph, b: &Graph, budget: &Budget) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(find_subgraph_embedding(a, b, budget)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clebsch, complete, cycle, grotzsch, kneser};

    #[test]
    fn five_cycle_in_petersen() {
        let (c5, p) = (cycle(5).unwrap(), kneser(5, 2).unwrap());
        let m = find_subgraph_embedding(&c5, &p, &Budget::default()).unwrap().unwrap();
        assert!(is_embedding(&c5, &p, &m));
    }

    #[test]
    fn no_triangle_in_clebsch() {
        assert_eq!(find_subgraph_embedding(&complete(3).unwrap(), &clebsch(), &Budget::default()).unwrap(), None);
    }

    #[test]
    fn grotzsch_in_clebsch() {
        let (g, h) = (grotzsch(), clebsch());
        let m = find_subgraph_embedding(&g, &h, &Budget::default()).unwrap().unwrap();
        assert!(is_embedding(&g, &h, &m));
    }

    #[test]
    fn isomorphism() {
        let b = Budget::default();
        assert!(!are_isomorphic(&cycle(6).unwrap(), &complete(3).unwrap(), &b).unwrap());
        assert!(are_isomorphic(&kneser(4, 1).unwrap(), &complete(4).unwrap(), &b).unwrap());
    }
}
