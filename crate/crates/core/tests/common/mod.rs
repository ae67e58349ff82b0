#![allow(dead_code)]

use nmseq::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// 500 graphs with `n` in `2..=12` and edge probability cycling through 0.2, 0.5, 0.8.
pub fn standard_suite() -> Vec<Graph> {
    let mut r = rng(0x5eed_0001);
    let probs = [0.2, 0.5, 0.8];
    (0..500)
        .map(|i| {
            let n = r.gen_range(2..=12);
            random_graph(&mut r, n, probs[i % 3])
        })
        .collect()
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_zero_based(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &e)| e),
        )
    })
}

/// Expected iteration number: `⌈log₂ S⌉` with `S` the largest component
/// diameter, and at least one level.
pub fn expected_k(g: &Graph) -> usize {
    let s = g.all_pairs_distances().max_finite();
    nmseq::nm::ceil_log2(s.max(1)).max(1)
}
