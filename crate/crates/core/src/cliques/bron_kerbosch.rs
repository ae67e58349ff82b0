use super::{Budget, CliqueEnumerator};
use crate::error::Result;
use crate::graph::Graph;
use crate::registry::Named;

/// Bron–Kerbosch with Tomita pivoting: the pivot maximises `|P ∩ N(u)|` over
/// `u ∈ P ∪ X`.
pub struct BronKerbosch;

impl Named for BronKerbosch {
    fn name(&self) -> &'static str {
        "bron-kerbosch"
    }

    fn description(&self) -> &'static str {
        "Bron-Kerbosch with Tomita pivot selection"
    }
}

impl CliqueEnumerator for BronKerbosch {
    fn enumerate(&self, g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        if g.n() == 0 {
            return Ok(out);
        }
        let mut budget = Budget::new(budget);
        let mut r = Vec::new();
        expand(
            g,
            &mut r,
            (0..g.n()).collect(),
            Vec::new(),
            &mut out,
            &mut budget,
        )?;
        Ok(out)
    }
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            budget.spend()?;
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .expect("P is nonempty");
    let branch: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in branch {
        let p_next = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let x_next = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        expand(g, r, p_next, x_next, out, budget)?;
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
    Ok(())
}
