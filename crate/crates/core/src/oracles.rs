//! Exhaustive reference implementations.
//!
//! These read the graph only through [`Graph::n`] and [`Graph::has_edge`] and
//! share no algorithmic code with the rest of the crate. They are slow on
//! purpose and refuse inputs above their vertex budgets.

use crate::automorphism::AutomorphismSet;
use crate::cliques::CliqueCatalog;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex counts the oracles accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub isomorphism: usize,
    pub automorphism: usize,
    pub cliques: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            isomorphism: 8,
            automorphism: 8,
            cliques: 12,
        }
    }
}

fn check(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::budget(
            what,
            max as u64,
            format!(" (graph has {n} vertices)"),
        ))
    } else {
        Ok(())
    }
}

/// Calls `f` with every permutation of `0..n` (Heap's algorithm). Stops early
/// when `f` returns `false`.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if !f(&perm) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if !f(&perm) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn preserves(g: &Graph, h: &Graph, perm: &[usize]) -> bool {
    let n = g.n();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v])))
}

pub fn oracle_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    oracle_isomorphic_with(g, h, &OracleBudget::default())
}

pub fn oracle_isomorphic_with(g: &Graph, h: &Graph, budget: &OracleBudget) -> Result<bool> {
    check("oracle isomorphism", g.n().max(h.n()), budget.isomorphism)?;
    Ok(oracle_witness(g, h).is_some())
}

/// Some adjacency-preserving bijection from `g` onto `h`, by exhaustion.
/// Callers are responsible for keeping `n` small.
pub(crate) fn oracle_witness(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() {
        return None;
    }
    let mut found = None;
    for_each_permutation(g.n(), |perm| {
        if preserves(g, h, perm) {
            found = Some(perm.to_vec());
            false
        } else {
            true
        }
    });
    found
}

pub fn oracle_automorphisms(g: &Graph) -> Result<AutomorphismSet> {
    check(
        "oracle automorphism",
        g.n(),
        OracleBudget::default().automorphism,
    )?;
    let mut perms = Vec::new();
    for_each_permutation(g.n(), |perm| {
        if preserves(g, g, perm) {
            perms.push(perm.to_vec());
        }
        true
    });
    Ok(AutomorphismSet::new(g.n(), perms))
}

pub fn oracle_maximal_cliques(g: &Graph) -> Result<CliqueCatalog> {
    let n = g.n();
    check("oracle clique", n, OracleBudget::default().cliques)?;
    let complete: Vec<bool> = (0u32..1 << n)
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            members
                .iter()
                .enumerate()
                .all(|(a, &u)| members[a + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .collect();
    let mut cliques = Vec::new();
    for mask in 1u32..1 << n {
        if !complete[mask as usize] {
            continue;
        }
        let extendable = (0..n).any(|v| mask & (1 << v) == 0 && complete[(mask | 1 << v) as usize]);
        if !extendable {
            cliques.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    Ok(CliqueCatalog::from_cliques(n, cliques))
}
