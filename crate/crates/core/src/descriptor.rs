//! Structural descriptor sequence.
//!
//! Row `i` of `NM^{l}` describes the first two BFS levels around `i` in the
//! level-`l` graph: the positive columns are level 1 and the negative
//! off-diagonal columns are level 2. Each level-1 vertex `x` yields a measure
//! `M1` and each level-2 vertex `y` a measure `M2`; both are integer counts
//! scaled by distinct irrational weights. Sorted measures are folded with
//! `1/Irr(j)` position weights, levels with `1/Irr(l)`.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::grouping;
use crate::nm::{power_sequence_with, NmBuilder, NmMatrix, ProductNm};
use crate::weights::{IrrSequence, WeightSet};

/// Integer coefficients behind the measures of one root vertex.
///
/// `m1` holds `(η_ix, |η_xx| - η_ix)` per level-1 vertex; `m2` holds
/// `(|η_iy|, p_y, |η_yy| - p_y - |η_iy|)` per level-2 vertex, where `p_y`
/// counts the level-2 neighbours of `y`. Both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootTerms {
    pub m1: Vec<(i64, i64)>,
    pub m2: Vec<(i64, i64, i64)>,
}

pub fn root_terms(m: &NmMatrix, i: usize) -> RootTerms {
    let mut m1 = m1_terms(m, i);
    let mut m2 = m2_terms(m, i);
    m1.sort_unstable();
    m2.sort_unstable();
    RootTerms { m1, m2 }
}

fn m1_terms(m: &NmMatrix, i: usize) -> Vec<(i64, i64)> {
    let n = m.n() as i64;
    m.neighbour_set(i)
        .into_iter()
        .map(|x| {
            let eta_ix = m.get(i, x);
            let within = m.degree(x) as i64 - eta_ix;
            debug_assert!(
                (1..=n - 1).contains(&eta_ix),
                "η_ix = {eta_ix} out of range"
            );
            debug_assert!(
                (0..=n - 2).contains(&within),
                "|η_xx| - η_ix = {within} out of range"
            );
            (eta_ix, within)
        })
        .collect()
}

fn m2_terms(m: &NmMatrix, i: usize) -> Vec<(i64, i64, i64)> {
    let n = m.n() as i64;
    let level2 = m.x_set(i);
    level2
        .iter()
        .map(|&y| {
            let common = m.get(i, y).abs();
            // column sum of the positive pattern of the level-2 block
            let p = level2.iter().filter(|&&z| m.get(z, y) > 0).count() as i64;
            let residual = m.degree(y) as i64 - p - common;
            debug_assert!(
                (1..=n - 2).contains(&common),
                "|η_iy| = {common} out of range"
            );
            debug_assert!((0..=n - 3).contains(&p), "p_y = {p} out of range");
            debug_assert!(
                (0..=n - 3).contains(&residual),
                "residual = {residual} out of range"
            );
            (common, p, residual)
        })
        .collect()
}

fn m1_value(w: &WeightSet, (eta_ix, within): (i64, i64)) -> f64 {
    eta_ix as f64 / w.w1 + (within as f64 + w.w3) / w.w2
}

fn m2_value(w: &WeightSet, (common, p, residual): (i64, i64, i64)) -> f64 {
    common as f64 / w.w4 + (p as f64 + w.w3) / w.w5 + (residual as f64 + w.w3) / w.w6
}

/// Level-1 measures of root `i`, ascending. Empty for an isolated vertex.
pub fn measure_m1(m: &NmMatrix, i: usize, w: &WeightSet) -> Vec<f64> {
    let values: Vec<f64> = m1_terms(m, i).into_iter().map(|t| m1_value(w, t)).collect();
    grouping::sorted(&values)
}

/// Level-2 measures of root `i`, ascending. Empty when nothing lies at level 2.
pub fn measure_m2(m: &NmMatrix, i: usize, w: &WeightSet) -> Vec<f64> {
    let values: Vec<f64> = m2_terms(m, i).into_iter().map(|t| m2_value(w, t)).collect();
    grouping::sorted(&values)
}

fn positional_sum(sorted: &[f64], irr: &IrrSequence) -> f64 {
    sorted
        .iter()
        .enumerate()
        .fold(0.0, |acc, (j, v)| acc + v / irr.get(j + 1))
}

/// `E(i)` for every vertex of one level.
pub fn structural_descriptor(m: &NmMatrix, irr: &IrrSequence, w: &WeightSet) -> Result<Vec<f64>> {
    (0..m.n())
        .map(|i| {
            let m1 = measure_m1(m, i, w);
            let m2 = measure_m2(m, i, w);
            irr.require(m1.len().max(m2.len()))?;
            Ok(positional_sum(&m1, irr) + positional_sum(&m2, irr))
        })
        .collect()
}

/// `R_G` plus the per-level rows it was summed from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DescriptorSequence {
    /// `R_G(i)` in vertex order.
    pub values: Vec<f64>,
    /// `per_level[l-1][i] = E_l(i) / Irr(l)`.
    pub per_level: Vec<Vec<f64>>,
}

impl DescriptorSequence {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Number of levels, the iteration number of the graph.
    pub fn k(&self) -> usize {
        self.per_level.len()
    }

    pub fn sorted(&self) -> Vec<f64> {
        grouping::sorted(&self.values)
    }
}

pub fn descriptor_sequence(g: &Graph, w: &WeightSet) -> DescriptorSequence {
    descriptor_sequence_with(g, w, &ProductNm)
}

pub fn descriptor_sequence_with(
    g: &Graph,
    w: &WeightSet,
    builder: &dyn NmBuilder,
) -> DescriptorSequence {
    let seq = power_sequence_with(g, builder);
    let irr = IrrSequence::for_order(g.n());
    let per_level: Vec<Vec<f64>> = seq
        .matrices()
        .iter()
        .map(|m| {
            let scale = irr.get(m.level());
            structural_descriptor(m, &irr, w)
                .expect("Irr sized for the graph order")
                .into_iter()
                .map(|e| e / scale)
                .collect()
        })
        .collect();
    let values = if per_level.len() == 1 {
        per_level[0].clone()
    } else {
        (0..g.n())
            .map(|i| per_level.iter().fold(0.0, |acc, row| acc + row[i]))
            .collect()
    };
    DescriptorSequence { values, per_level }
}

/// Whether the ascending sequences agree within `eps` entry by entry.
/// Different orders compare unequal.
pub fn sorted_equal(a: &DescriptorSequence, b: &DescriptorSequence, eps: f64) -> bool {
    a.n() == b.n() && grouping::approx_eq(&a.sorted(), &b.sorted(), eps)
}
