//! Seeded random orientations for the duality property runs.

use oddorient_core::{make_graph, Error, Orientation, Result, VertexLabel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_CORPUS_VERTICES: usize = 12;

/// `count` orientations on 1..=max_vertices vertices. Each pair is an edge
/// with probability 1/2 and each edge gets a uniform direction.
pub fn random_digraph_corpus(count: usize, max_vertices: usize, seed: u64) -> Result<Vec<Orientation>> {
    if max_vertices == 0 || max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::BadParameters(format!(
            "max_vertices must be in 1..={MAX_CORPUS_VERTICES}, got {max_vertices}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vertices);
            let labels: Vec<VertexLabel> = (0..n as i64).map(VertexLabel::Int).collect();
            let mut edges = Vec::new();
            let mut forward = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((labels[u].clone(), labels[v].clone()));
                        forward.push(rng.gen_bool(0.5));
                    }
                }
            }
            // Edges come out in (u, v) order with u < v, which is the graph's own edge order.
            let g = make_graph(labels, &edges)?;
            Ok(Orientation::from_forward(g, forward))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_digraph_corpus(200, 10, 42).unwrap();
        let b = random_digraph_corpus(200, 10, 42).unwrap();
        assert_eq!(a.len(), 200);
        let text = |c: &[Orientation]| c.iter().map(|o| o.to_json()).collect::<Vec<_>>().join("\n");
        assert_eq!(text(&a), text(&b));
        assert_ne!(text(&a), text(&random_digraph_corpus(200, 10, 43).unwrap()));
        assert!(a.iter().all(|o| o.n() <= 10));
    }

    #[test]
    fn tiny_and_bounds() {
        let c = random_digraph_corpus(1, 3, 9).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].n() <= 3);
        assert!(random_digraph_corpus(1, 13, 0).is_err());
    }
}
