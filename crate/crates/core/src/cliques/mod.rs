//! Maximal clique catalogs and the clique sequence.
//!
//! Enumeration strategies implement [`CliqueEnumerator`] and are looked up by
//! name through [`enumerators`]. Every strategy must return exactly the
//! maximal cliques of the graph; the catalog then buckets them by size and
//! counts, per vertex, how many maximal cliques of each size contain it.

mod bron_kerbosch;
mod nm_blocks;

use std::collections::BTreeMap;

use serde::Serialize;

pub use bron_kerbosch::BronKerbosch;
pub use nm_blocks::NmBlocks;

use crate::error::Result;
use crate::graph::Graph;
use crate::grouping;
use crate::registry::{Named, Registry};
use crate::weights::IrrSequence;

/// Default cap on the number of maximal cliques an enumeration may emit.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 1_000_000;

/// A maximal clique enumeration algorithm.
pub trait CliqueEnumerator: Named + Send + Sync {
    /// All maximal cliques as sorted vertex lists, in any order. Fails with a
    /// budget error once more than `budget` cliques have been produced.
    fn enumerate(&self, g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>>;
}

/// Registry of clique enumerators; `nm-blocks` is the default.
pub fn enumerators() -> Registry<dyn CliqueEnumerator> {
    Registry::<dyn CliqueEnumerator>::new("clique enumerator")
        .with(Box::new(NmBlocks))
        .with(Box::new(BronKerbosch))
}

/// Counts emitted cliques against a budget.
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub(crate) fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(crate::Error::budget(
                "maximal clique",
                self.limit,
                format!(" ({} cliques emitted)", self.used),
            ))
        } else {
            Ok(())
        }
    }
}

/// All maximal cliques of a graph bucketed by size, with per-vertex counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCatalog {
    n: usize,
    by_size: BTreeMap<usize, Vec<Vec<usize>>>,
    /// `counts[s-1][j]`: maximal cliques of size `s` containing vertex `j`.
    counts: Vec<Vec<u64>>,
}

impl CliqueCatalog {
    /// Builds the catalog from a list of cliques. Each clique is sorted and
    /// buckets are sorted lexicographically. Duplicates are kept, so a
    /// faulty enumerator shows up in comparisons.
    pub fn from_cliques(n: usize, cliques: Vec<Vec<usize>>) -> Self {
        let mut by_size: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for mut c in cliques {
            c.sort_unstable();
            by_size.entry(c.len()).or_default().push(c);
        }
        for bucket in by_size.values_mut() {
            bucket.sort();
        }
        let omega = by_size.keys().next_back().copied().unwrap_or(0);
        let mut counts = vec![vec![0u64; n]; omega];
        for (&size, bucket) in &by_size {
            for c in bucket {
                for &v in c {
                    counts[size - 1][v] += 1;
                }
            }
        }
        CliqueCatalog { n, by_size, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Clique number: the largest size with a nonempty bucket.
    pub fn omega(&self) -> usize {
        self.counts.len()
    }

    /// Maximal cliques of exactly `size` vertices.
    pub fn of_size(&self, size: usize) -> &[Vec<usize>] {
        self.by_size.get(&size).map_or(&[], Vec::as_slice)
    }

    /// `t_s` for `s = 1..=omega`.
    pub fn size_counts(&self) -> Vec<usize> {
        (1..=self.omega()).map(|s| self.of_size(s).len()).collect()
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// Every clique, ordered by size then lexicographically.
    pub fn all(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.by_size.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_size.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn maximal_cliques(g: &Graph) -> Result<CliqueCatalog> {
    maximal_cliques_with(g, &NmBlocks, DEFAULT_CLIQUE_BUDGET)
}

pub fn maximal_cliques_with(
    g: &Graph,
    enumerator: &dyn CliqueEnumerator,
    budget: u64,
) -> Result<CliqueCatalog> {
    Ok(CliqueCatalog::from_cliques(
        g.n(),
        enumerator.enumerate(g, budget)?,
    ))
}

/// Per-vertex weights `R` and the per-size aggregate `CS`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueSequence {
    /// `R(j) = Σ_s C[s][j] / Irr(s)`.
    pub r: Vec<f64>,
    /// `CS(s) = Σ_j C[s][j] · R(j)`, for `s = 1..=omega`.
    pub cs: Vec<f64>,
}

impl CliqueSequence {
    pub fn omega(&self) -> usize {
        self.cs.len()
    }

    pub fn from_catalog(catalog: &CliqueCatalog, irr: &IrrSequence) -> Result<Self> {
        irr.require(catalog.omega())?;
        let counts = catalog.counts();
        let r: Vec<f64> = (0..catalog.n())
            .map(|j| {
                counts
                    .iter()
                    .enumerate()
                    .fold(0.0, |acc, (s, row)| acc + row[j] as f64 / irr.get(s + 1))
            })
            .collect();
        let cs = counts
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&r)
                    .fold(0.0, |acc, (&c, &rj)| acc + c as f64 * rj)
            })
            .collect();
        Ok(CliqueSequence { r, cs })
    }
}

pub fn clique_sequence(g: &Graph, irr: &IrrSequence) -> Result<CliqueSequence> {
    CliqueSequence::from_catalog(&maximal_cliques(g)?, irr)
}

/// Equal clique numbers and `CS` vectors within `eps` componentwise.
pub fn clique_fingerprint_equal(a: &CliqueSequence, b: &CliqueSequence, eps: f64) -> bool {
    a.omega() == b.omega() && grouping::approx_eq(&a.cs, &b.cs, eps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_fn(5, |i, j| j == i + 1 || (i == 0 && j == 4))
    }

    #[test]
    fn k4_and_c5() {
        for e in enumerators().iter() {
            let k4 = maximal_cliques_with(&Graph::from_fn(4, |_, _| true), e, 100).unwrap();
            assert_eq!(k4.omega(), 4, "{}", e.name());
            assert_eq!(k4.of_size(4), &[vec![0, 1, 2, 3]]);
            assert_eq!(k4.counts()[3], vec![1; 4]);
            assert!(k4.counts()[..3]
                .iter()
                .all(|row| row.iter().all(|&c| c == 0)));

            let c = maximal_cliques_with(&c5(), e, 100).unwrap();
            assert_eq!(c.omega(), 2);
            assert_eq!(c.of_size(2).len(), 5);
            assert_eq!(c.counts()[1], vec![2; 5]);
        }
    }

    #[test]
    fn chorded_c5() {
        let mut edges: Vec<_> = c5().edges().map(|(u, v)| (u + 1, v + 1)).collect();
        edges.push((1, 3));
        let cat = maximal_cliques(&g(5, &edges)).unwrap();
        assert_eq!(cat.of_size(3), &[vec![0, 1, 2]]);
        assert_eq!(cat.of_size(2), &[vec![0, 4], vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn isolated_vertices_are_k1() {
        let cat = maximal_cliques(&g(4, &[(2, 3)])).unwrap();
        assert_eq!(cat.of_size(1), &[vec![0], vec![3]]);
        assert_eq!(cat.of_size(2), &[vec![1, 2]]);
        assert_eq!(cat.size_counts(), vec![2, 1]);
    }

    #[test]
    fn budget_is_enforced() {
        for e in enumerators().iter() {
            let err = maximal_cliques_with(&c5(), e, 3).unwrap_err();
            assert!(err.is_resource(), "{}", e.name());
        }
    }

    #[test]
    fn sequence_examples() {
        let irr = IrrSequence::first(10);
        let k3 = clique_sequence(&Graph::from_fn(3, |_, _| true), &irr).unwrap();
        let r5 = 1.0 / 5f64.sqrt();
        assert!(k3.r.iter().all(|&r| (r - r5).abs() < 1e-15));
        assert_eq!(k3.cs.len(), 3);
        assert_eq!(&k3.cs[..2], &[0.0, 0.0]);
        assert!((k3.cs[2] - 3.0 / 5f64.sqrt()).abs() < 1e-12);
        assert!((k3.cs[2] - 1.3416).abs() < 1e-4);

        let e = clique_sequence(&Graph::empty(6), &irr).unwrap();
        assert_eq!(e.cs.len(), 1);
        assert!((e.cs[0] - 6.0 / 2f64.sqrt()).abs() < 1e-12);

        let p3 = clique_sequence(&g(3, &[(1, 2), (2, 3)]), &irr).unwrap();
        assert!(!clique_fingerprint_equal(&k3, &p3, 1e-9));
        assert!(clique_fingerprint_equal(&k3, &k3.clone(), 1e-9));
    }

    #[test]
    fn short_irr_rejected() {
        let cat = maximal_cliques(&Graph::from_fn(4, |_, _| true)).unwrap();
        assert!(CliqueSequence::from_catalog(&cat, &IrrSequence::first(3)).is_err());
    }
}
