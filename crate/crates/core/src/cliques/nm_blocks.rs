//! Maximal cliques by seed extension in blocks of up to three vertices.
//!
//! A work item is a triple `(seed, cands, excluded)`: `seed` is a clique,
//! `cands` are its common neighbours with labels above the seed, and
//! `excluded` are common neighbours that may not appear in any clique emitted
//! from this item but still make a candidate non-maximal if adjacent to all
//! of it. Processing an item looks at the subgraph induced by `cands` and its
//! neighbourhood matrix: for each vertex `i`, entries `deg(q) - NM(i, q)`
//! count triangles on edge `iq`, and `|NM(u2,u2)| - NM(u1, u2)` counts common
//! neighbours of `u1, u2`. Label ordering makes every maximal clique appear
//! exactly once: a clique of size `≥ 4` whose three smallest members are
//! `i < u1 < u2` is found from that triangle, either directly as a `K4` or by
//! pushing a new item seeded with the triangle.

use std::collections::VecDeque;

use super::{Budget, CliqueEnumerator};
use crate::error::Result;
use crate::graph::Graph;
use crate::nm::{NmBuilder, ProductNm};
use crate::registry::Named;

pub struct NmBlocks;

impl Named for NmBlocks {
    fn name(&self) -> &'static str {
        "nm-blocks"
    }

    fn description(&self) -> &'static str {
        "seed extension by K1..K4 blocks guided by neighbourhood-matrix triangle counts"
    }
}

impl CliqueEnumerator for NmBlocks {
    fn enumerate(&self, g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>> {
        let mut run = Run {
            g,
            out: Vec::new(),
            budget: Budget::new(budget),
            work: VecDeque::new(),
        };
        run.work.push_back(WorkItem {
            seed: Vec::new(),
            cands: (0..g.n()).collect(),
            excluded: Vec::new(),
        });
        while let Some(item) = run.work.pop_front() {
            run.expand(&item)?;
        }
        Ok(run.out)
    }
}

struct WorkItem {
    seed: Vec<usize>,
    cands: Vec<usize>,
    excluded: Vec<usize>,
}

struct Run<'g> {
    g: &'g Graph,
    out: Vec<Vec<usize>>,
    budget: Budget,
    work: VecDeque<WorkItem>,
}

impl Run<'_> {
    fn expand(&mut self, item: &WorkItem) -> Result<()> {
        let g = self.g;
        let x = &item.cands;
        debug_assert!(item
            .excluded
            .iter()
            .all(|&y| item.seed.iter().all(|&s| g.has_edge(y, s))));

        let local = g.induced(x);
        let cl = ProductNm.build(&local);
        // an excluded vertex adjacent to every member extends the clique
        let blocked = |members: &[usize]| {
            item.excluded
                .iter()
                .any(|&y| members.iter().all(|&m| g.has_edge(y, x[m])))
        };

        for i in 0..x.len() {
            let nbrs = local.neighbors(i);
            if nbrs.is_empty() {
                if !blocked(&[i]) {
                    self.emit(item, &[i])?;
                }
                continue;
            }
            let higher: Vec<usize> = nbrs.iter().copied().filter(|&q| q > i).collect();
            if higher.is_empty() {
                continue;
            }
            let triangles = |q: usize| local.degree(q) as i64 - cl.get(i, q);

            for &q in higher.iter().filter(|&&q| triangles(q) == 0) {
                if !blocked(&[i, q]) {
                    self.emit(item, &[i, q])?;
                }
            }

            let g1: Vec<usize> = higher.into_iter().filter(|&q| triangles(q) > 0).collect();
            for (a, &u1) in g1.iter().enumerate() {
                for &u2 in &g1[a + 1..] {
                    if !local.has_edge(u1, u2) {
                        continue;
                    }
                    let common = cl.get(u2, u2).abs() - cl.get(u1, u2);
                    if common <= 1 {
                        // `i` is the only common neighbour of u1 and u2
                        if !blocked(&[i, u1, u2]) {
                            self.emit(item, &[i, u1, u2])?;
                        }
                        continue;
                    }
                    let a8: Vec<usize> = local
                        .neighbors(i)
                        .iter()
                        .copied()
                        .filter(|&z| local.has_edge(z, u1) && local.has_edge(z, u2))
                        .collect();
                    let a9: Vec<usize> = a8.iter().copied().filter(|&z| z > u2).collect();
                    match a9.len() {
                        0 => {
                            if a8.is_empty() && !blocked(&[i, u1, u2]) {
                                self.emit(item, &[i, u1, u2])?;
                            }
                        }
                        1 => {
                            let t = a9[0];
                            let isolated = a8.iter().all(|&z| z == t || !local.has_edge(z, t));
                            if isolated && !blocked(&[i, u1, u2, t]) {
                                self.emit(item, &[i, u1, u2, t])?;
                            }
                        }
                        _ => self.push_child(item, [i, u1, u2], &a8, &a9),
                    }
                }
            }
        }
        Ok(())
    }

    fn emit(&mut self, item: &WorkItem, members: &[usize]) -> Result<()> {
        self.budget.spend()?;
        let mut clique = item.seed.clone();
        clique.extend(members.iter().map(|&m| item.cands[m]));
        clique.sort_unstable();
        self.out.push(clique);
        Ok(())
    }

    fn push_child(&mut self, item: &WorkItem, triangle: [usize; 3], a8: &[usize], a9: &[usize]) {
        let g = self.g;
        let x = &item.cands;
        let tri = triangle.map(|m| x[m]);
        let mut seed = item.seed.clone();
        seed.extend(tri);
        let cands: Vec<usize> = a9.iter().map(|&m| x[m]).collect();
        let mut excluded: Vec<usize> = a8
            .iter()
            .filter(|z| !a9.contains(z))
            .map(|&m| x[m])
            .collect();
        excluded.extend(
            item.excluded
                .iter()
                .copied()
                .filter(|&y| tri.iter().all(|&t| g.has_edge(y, t))),
        );
        self.work.push_back(WorkItem {
            seed,
            cands,
            excluded,
        });
    }
}
