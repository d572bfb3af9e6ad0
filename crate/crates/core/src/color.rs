//! Proper, local, directed-local and wide coloring evaluators, plus exact
//! chromatic and local chromatic number searches.

use crate::bitset::BitSet;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, Relational};

/// True iff no arc (edge) joins two vertices of the same color.
pub fn is_proper<R: Relational + ?Sized>(g: &R, c: &Coloring) -> Result<bool> {
    c.check_total(g)?;
    Ok((0..g.order()).all(|u| g.out_adj(u).iter().all(|&v| c.color(u) != c.color(v))))
}

fn max_closed_colors<R: Relational + ?Sized>(g: &R, c: &Coloring) -> Result<usize> {
    if !is_proper(g, c)? {
        return Err(Error::ImproperColoring);
    }
    let mut seen: Vec<usize> = Vec::new();
    let mut best = 0;
    for v in 0..g.order() {
        seen.clear();
        seen.push(c.color(v));
        seen.extend(g.out_adj(v).iter().map(|&u| c.color(u)));
        seen.sort_unstable();
        seen.dedup();
        best = best.max(seen.len());
    }
    Ok(best)
}

/// Largest number of colors in a closed neighborhood.
pub fn local_value(g: &Graph, c: &Coloring) -> Result<usize> {
    max_closed_colors(g, c)
}

/// Largest number of colors in a closed out-neighborhood.
pub fn directed_local_value<R: Relational + ?Sized>(d: &R, c: &Coloring) -> Result<usize> {
    max_closed_colors(d, c)
}

/// True iff no walk of length exactly `2s - 1` joins two (possibly equal)
/// vertices of the same color.
pub fn is_s_wide(g: &Graph, c: &Coloring, s: usize) -> Result<bool> {
    if s == 0 {
        return Err(Error::BadParameters("wideness parameter must be positive".into()));
    }
    c.check_total(g)?;
    let n = g.n();
    let steps = 2 * s - 1;
    let mut frontier = BitSet::new(n);
    let mut next = BitSet::new(n);
    for u in 0..n {
        frontier.clear();
        frontier.insert(u);
        for _ in 0..steps {
            next.clear();
            for x in frontier.iter() {
                next.union_with(g.row(x));
            }
            std::mem::swap(&mut frontier, &mut next);
            if frontier.is_empty() {
                break;
            }
        }
        if frontier.iter().any(|w| c.color(w) == c.color(u)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedily grown clique: from every start vertex, repeatedly add the
/// candidate with most neighbors among the remaining candidates.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cand = g.row(start).clone();
        while !cand.is_empty() {
            let pick = cand
                .iter()
                .max_by_key(|&v| {
                    let mut r = g.row(v).clone();
                    r.intersect_with(&cand);
                    (r.count(), std::cmp::Reverse(v))
                })
                .expect("non-empty");
            clique.push(pick);
            cand.intersect_with(g.row(pick));
        }
        if clique.len() > best.len() {
            clique.sort_unstable();
            best = clique;
        }
    }
    best
}

/// DSATUR greedy coloring; an upper bound for the chromatic number.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut sat: Vec<BitSet> = vec![BitSet::new(n.max(1)); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v].count(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let c = (0..n).find(|&c| !sat[v].contains(c)).unwrap_or(0);
        color[v] = c;
        for &w in g.neighbors(v) {
            sat[w].insert(c);
        }
    }
    Coloring::new(color)
}

/// Backtracking k-colorability with DSATUR vertex order, forward checking and
/// "new color only as the next unused index" symmetry breaking.
struct KColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// blocked[v * k + c]: number of colored neighbors of v with color c.
    blocked: Vec<u32>,
    sat: Vec<usize>,
    meter: Meter,
}

impl<'a> KColorSearch<'a> {
    fn new(g: &'a Graph, k: usize, budget: &Budget) -> Self {
        let n = g.n();
        KColorSearch {
            g,
            k,
            color: vec![usize::MAX; n],
            blocked: vec![0; n * k],
            sat: vec![0; n],
            meter: budget.meter(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for &w in self.g.neighbors(v) {
            let b = &mut self.blocked[w * self.k + c];
            *b += 1;
            if *b == 1 {
                self.sat[w] += 1;
                if self.sat[w] == self.k && self.color[w] == usize::MAX {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        for &w in self.g.neighbors(v) {
            let b = &mut self.blocked[w * self.k + c];
            *b -= 1;
            if *b == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn run(&mut self, colored: usize, used: usize) -> Result<bool> {
        let n = self.g.n();
        if colored == n {
            return Ok(true);
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex");
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.blocked[v * self.k + c] > 0 {
                continue;
            }
            self.meter.tick()?;
            let ok = self.assign(v, c);
            if ok && self.run(colored + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// A proper coloring with at most `k` colors, or `None` if none exists.
pub fn k_coloring(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Coloring>> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(vec![])));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut s = KColorSearch::new(g, k, budget);
    if s.run(0, 0)? {
        Ok(Some(Coloring::new(s.color)))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number. Budget exhaustion reports the bounds reached.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g).len();
    let upper = dsatur_greedy(g).num_colors();
    let mut meter = budget.meter();
    for k in lower..upper {
        let sub = meter.remaining();
        let mut s = KColorSearch::new(g, k, &sub);
        let found = s.run(0, 0).map_err(|e| match e {
            Error::BudgetExceeded { nodes, .. } => Error::BudgetExceeded { nodes, bounds: Some((k, upper)) },
            other => other,
        })?;
        meter.charge(s.meter.used).map_err(|_| Error::BudgetExceeded { nodes: budget.nodes, bounds: Some((k, upper)) })?;
        if found {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Search for a proper coloring whose closed neighborhoods all see at most `t` colors.
struct LocalSearch<'a> {
    g: &'a Graph,
    t: usize,
    n: usize,
    color: Vec<usize>,
    /// seen[w * n + c]: vertices of N[w] colored c.
    seen: Vec<u32>,
    distinct: Vec<usize>,
    order: Vec<usize>,
    meter: Meter,
}

impl LocalSearch<'_> {
    fn place(&mut self, v: usize, c: usize, add: bool) -> bool {
        let mut ok = true;
        let g = self.g;
        for &w in std::iter::once(&v).chain(g.neighbors(v)) {
            let s = &mut self.seen[w * self.n + c];
            if add {
                *s += 1;
                if *s == 1 {
                    self.distinct[w] += 1;
                    if self.distinct[w] > self.t {
                        ok = false;
                    }
                }
            } else {
                *s -= 1;
                if *s == 0 {
                    self.distinct[w] -= 1;
                }
            }
        }
        ok
    }

    fn run(&mut self, depth: usize, used: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for c in 0..=used.min(self.n - 1) {
            if self.g.neighbors(v).iter().any(|&w| self.color[w] == c) {
                continue;
            }
            self.meter.tick()?;
            self.color[v] = c;
            let ok = self.place(v, c, true);
            if ok && self.run(depth + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.place(v, c, false);
            self.color[v] = usize::MAX;
        }
        Ok(false)
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
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
    order
}

/// A proper coloring attaining local value at most `t`, if any.
pub fn local_coloring(g: &Graph, t: usize, budget: &Budget) -> Result<Option<Coloring>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring::new(vec![])));
    }
    let mut s = LocalSearch {
        g,
        t,
        n,
        color: vec![usize::MAX; n],
        seen: vec![0; n * n],
        distinct: vec![0; n],
        order: bfs_order(g),
        meter: budget.meter(),
    };
    if s.run(0, 0)? {
        Ok(Some(Coloring::new(s.color)))
    } else {
        Ok(None)
    }
}

/// Exact local chromatic number: the least `t` admitting a proper coloring
/// whose closed neighborhoods each see at most `t` colors.
pub fn local_chromatic_number(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let mut meter = budget.meter();
    let lower = greedy_clique(g).len().max(if g.m() > 0 { 2 } else { 1 });
    for t in lower..=g.n() {
        let sub = meter.remaining();
        let mut s = LocalSearch {
            g,
            t,
            n: g.n(),
            color: vec![usize::MAX; g.n()],
            seen: vec![0; g.n() * g.n()],
            distinct: vec![0; g.n()],
            order: bfs_order(g),
            meter: sub.meter(),
        };
        let found = s.run(0, 0).map_err(|e| match e {
            Error::BudgetExceeded { nodes, .. } => Error::BudgetExceeded { nodes, bounds: Some((t, g.n())) },
            other => other,
        })?;
        meter.charge(s.meter.used)?;
        if found {
            return Ok(t);
        }
    }
    unreachable!("n colors always give a coloring with local value at most n")
}
