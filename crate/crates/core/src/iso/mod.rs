//! Exact isomorphism checkers.
//!
//! Checkers implement [`IsoChecker`] and are looked up by name through
//! [`checkers`]. Any witness a checker returns is verified by the caller of
//! [`check_verified`] before it is trusted.

mod refine;

pub use refine::Refine;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{self, OracleBudget};
use crate::registry::{Named, Registry};

pub trait IsoChecker: Named + Send + Sync {
    /// `Some(witness)` with `witness[v]` the image in `h` of vertex `v` of
    /// `g`, or `None` when the graphs are not isomorphic.
    fn check(&self, g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>>;
}

/// Exhaustive search over all bijections; refuses graphs above the oracle budget.
pub struct Brute;

impl Named for Brute {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn description(&self) -> &'static str {
        "exhaustive search over all n! bijections (n <= 8)"
    }
}

impl IsoChecker for Brute {
    fn check(&self, g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
        oracles::oracle_isomorphic_with(g, h, &OracleBudget::default())?;
        Ok(oracles::oracle_witness(g, h))
    }
}

/// Registry of isomorphism checkers; `refine` is the default.
pub fn checkers() -> Registry<dyn IsoChecker> {
    Registry::<dyn IsoChecker>::new("isomorphism checker")
        .with(Box::new(Refine::default()))
        .with(Box::new(Brute))
}

/// Runs `checker` and rejects any witness that fails the edge check.
pub fn check_verified(
    checker: &dyn IsoChecker,
    g: &Graph,
    h: &Graph,
) -> Result<Option<Vec<usize>>> {
    match checker.check(g, h)? {
        Some(w) if !g.maps_onto(&w, h) => Err(Error::InvalidWitness(checker.name().to_string())),
        other => Ok(other),
    }
}

/// Exact isomorphism test with the default checker; the witness is verified.
pub fn exact_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    check_verified(&Refine::default(), g, h).expect("refinement checker is infallible")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
    }

    #[test]
    fn cycle_versus_triangles() {
        let two_k3 =
            Graph::from_edge_list(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        for c in checkers().iter() {
            assert_eq!(c.check(&cycle(6), &two_k3).unwrap(), None, "{}", c.name());
            let w = check_verified(c, &cycle(6), &cycle(6)).unwrap().unwrap();
            assert!(cycle(6).maps_onto(&w, &cycle(6)));
        }
    }

    #[test]
    fn brute_respects_budget() {
        assert!(Brute
            .check(&Graph::empty(9), &Graph::empty(9))
            .unwrap_err()
            .is_resource());
    }

    #[test]
    fn relabelled_copy() {
        let g = Graph::from_edge_list(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let h = g.relabel(&perm);
        let w = exact_isomorphic(&g, &h).unwrap();
        assert!(g.maps_onto(&w, &h));
    }

    struct Liar;

    impl Named for Liar {
        fn name(&self) -> &'static str {
            "liar"
        }
    }

    impl IsoChecker for Liar {
        fn check(&self, g: &Graph, _: &Graph) -> Result<Option<Vec<usize>>> {
            Ok(Some((0..g.n()).collect()))
        }
    }

    #[test]
    fn bad_witness_is_rejected() {
        let p3 = Graph::from_edge_list(3, &[(1, 2), (2, 3)]).unwrap();
        let other = Graph::from_edge_list(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            check_verified(&Liar, &p3, &other),
            Err(Error::InvalidWitness(_))
        ));
    }
}
