//! Individualization–refinement on the disjoint union of both graphs.
//!
//! Colours are shared between the two graphs, so a colour class that has
//! different sizes on the two sides proves the current branch impossible.
//! The initial colouring is degree plus the tolerance group of the structural
//! descriptor value; colour refinement then splits classes by neighbour
//! colour multisets until stable. When a class still holds several vertices,
//! the smallest vertex of `g` in it is paired with each candidate in `h` in
//! turn, both get a fresh colour, and the search recurses.

use super::IsoChecker;
use crate::descriptor::descriptor_sequence;
use crate::error::Result;
use crate::graph::Graph;
use crate::grouping::group_scalars;
use crate::registry::Named;
use crate::weights::WeightSet;
use crate::DEFAULT_EPS;

#[derive(Clone, Debug)]
pub struct Refine {
    pub weights: WeightSet,
    pub eps: f64,
}

impl Default for Refine {
    fn default() -> Self {
        Refine {
            weights: WeightSet::default(),
            eps: DEFAULT_EPS,
        }
    }
}

impl Named for Refine {
    fn name(&self) -> &'static str {
        "refine"
    }

    fn description(&self) -> &'static str {
        "individualization-refinement seeded with degree and descriptor classes"
    }
}

impl IsoChecker for Refine {
    fn check(&self, g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
        if g.n() != h.n() || g.edge_count() != h.edge_count() {
            return Ok(None);
        }
        let n = g.n();
        if n == 0 {
            return Ok(Some(Vec::new()));
        }
        let union = Union::new(g, h);
        let dg = descriptor_sequence(g, &self.weights).values;
        let dh = descriptor_sequence(h, &self.weights).values;
        let items: Vec<(usize, f64)> = dg.iter().chain(&dh).copied().enumerate().collect();
        let mut value_class = vec![0usize; 2 * n];
        for (idx, grp) in group_scalars(&items, self.eps).into_iter().enumerate() {
            for v in grp {
                value_class[v] = idx;
            }
        }
        let keys: Vec<(usize, usize)> = (0..2 * n)
            .map(|v| (union.neighbors(v).len(), value_class[v]))
            .collect();
        let colours = relabel_by_key(&keys);
        Ok(union.search(colours))
    }
}

/// Dense colour ids in sorted key order.
fn relabel_by_key<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut distinct = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect()
}

struct Union<'a> {
    g: &'a Graph,
    h: &'a Graph,
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl<'a> Union<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let n = g.n();
        let adj = (0..n)
            .map(|v| g.neighbors(v).to_vec())
            .chain((0..n).map(|v| h.neighbors(v).iter().map(|&u| u + n).collect()))
            .collect();
        Union { g, h, n, adj }
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    fn refine(&self, mut colours: Vec<usize>) -> Vec<usize> {
        let mut classes = colours.iter().max().map_or(0, |&c| c + 1);
        loop {
            let keys: Vec<(usize, Vec<usize>)> = (0..colours.len())
                .map(|v| {
                    let mut around: Vec<usize> = self.adj[v].iter().map(|&u| colours[u]).collect();
                    around.sort_unstable();
                    (colours[v], around)
                })
                .collect();
            let next = relabel_by_key(&keys);
            let count = next.iter().max().map_or(0, |&c| c + 1);
            colours = next;
            if count == classes {
                return colours;
            }
            classes = count;
        }
    }

    fn search(&self, colours: Vec<usize>) -> Option<Vec<usize>> {
        let n = self.n;
        let colours = self.refine(colours);
        let classes = colours.iter().max().map_or(0, |&c| c + 1);
        let mut sizes = vec![(0usize, 0usize); classes];
        for (v, &c) in colours.iter().enumerate() {
            if v < n {
                sizes[c].0 += 1;
            } else {
                sizes[c].1 += 1;
            }
        }
        if sizes.iter().any(|(a, b)| a != b) {
            return None;
        }
        let target = (0..classes)
            .filter(|&c| sizes[c].0 > 1)
            .min_by_key(|&c| (sizes[c].0, c));
        let Some(cell) = target else {
            let mut witness = vec![0; n];
            for v in 0..n {
                witness[v] = (n..2 * n).find(|&w| colours[w] == colours[v])? - n;
            }
            return self.g.maps_onto(&witness, self.h).then_some(witness);
        };
        let v = (0..n).find(|&v| colours[v] == cell)?;
        for w in (n..2 * n).filter(|&w| colours[w] == cell) {
            let mut next = colours.clone();
            next[v] = classes;
            next[w] = classes;
            if let Some(found) = self.search(next) {
                return Some(found);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::oracle_isomorphic;

    #[test]
    fn agrees_with_oracle_on_small_graphs() {
        // all graphs on 4 vertices against each other
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .collect();
        let graphs: Vec<Graph> = (0u32..64)
            .map(|mask| {
                Graph::from_zero_based(
                    4,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask & (1 << b) != 0)
                        .map(|(_, &e)| e),
                )
            })
            .collect();
        for a in &graphs {
            for b in &graphs {
                let expected = oracle_isomorphic(a, b).unwrap();
                let got = Refine::default().check(a, b).unwrap();
                assert_eq!(got.is_some(), expected, "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn regular_graphs_need_branching() {
        let c8 = Graph::from_fn(8, |i, j| j == i + 1 || (i == 0 && j == 7));
        let two_c4 = Graph::from_zero_based(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        );
        assert!(Refine::default().check(&c8, &two_c4).unwrap().is_none());
        let w = Refine::default()
            .check(&two_c4, &two_c4.relabel(&[7, 2, 5, 0, 1, 3, 4, 6]))
            .unwrap();
        assert!(w.is_some());
    }
}
