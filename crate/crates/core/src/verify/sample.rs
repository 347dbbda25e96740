use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::hypercore::{Edge, Hypergraph};

/// Shape of random hypergraphs.
///
/// Sample `i` of seed `k` uses ChaCha8 seeded with `k` on stream `i`, so any
/// sample can be regenerated on its own. It draws `n` uniformly from
/// `n_min..=n_max` and an edge count uniformly from `1..=max_edges`. Each edge
/// gets a uniform size in `2..=min(max_edge_size, n)` and a uniform vertex set
/// of that size. Duplicates are redrawn, up to a fixed budget, so the edge
/// count is a target and not a guarantee on small ground sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
}

pub fn sample_hypergraph(seed: u64, index: u64, cfg: &SamplerConfig) -> Hypergraph {
    assert!(
        2 <= cfg.n_min && cfg.n_min <= cfg.n_max && cfg.max_edges >= 1 && cfg.max_edge_size >= 2,
        "invalid sampler config {cfg:?}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let target = rng.gen_range(1..=cfg.max_edges);
    let max_size = cfg.max_edge_size.min(n);

    let mut edges: Vec<Edge> = Vec::with_capacity(target);
    let mut budget = 64 * target;
    while edges.len() < target && budget > 0 {
        budget -= 1;
        let k = rng.gen_range(2..=max_size);
        let mut e: Edge = index::sample(&mut rng, n, k).into_iter().map(|v| v + 1).collect();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, edges).expect("sampled edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    const CFG: SamplerConfig = SamplerConfig {
        n_min: 4,
        n_max: 7,
        max_edges: 8,
        max_edge_size: 3,
    };

    #[test]
    fn deterministic_and_in_range() {
        for i in 0..200 {
            let h = sample_hypergraph(7, i, &CFG);
            assert_eq!(h, sample_hypergraph(7, i, &CFG));
            assert!((4..=7).contains(&h.n()));
            assert!((1..=8).contains(&h.num_edges()));
            assert!(h.edges().iter().all(|e| (2..=3).contains(&e.len())));
        }
        assert_ne!(
            (0..20).map(|i| sample_hypergraph(1, i, &CFG)).collect::<Vec<_>>(),
            (0..20).map(|i| sample_hypergraph(2, i, &CFG)).collect::<Vec<_>>()
        );
    }
}
