//! Collection classification.
//!
//! Stage 1 groups graphs by vertex count and sorted descriptor sequence.
//! Graphs alone in their group are proven distinct from every other graph.
//! Stage 2 computes clique sequences for the rest and splits each stage-1
//! group by clique number and `CS`. Groups that survive both stages are
//! settled pairwise by an exact isomorphism checker.
//!
//! Indices in the report are 1-based positions in the input collection.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cliques::{maximal_cliques_with, CliqueSequence, NmBlocks, DEFAULT_CLIQUE_BUDGET};
use crate::descriptor::descriptor_sequence;
use crate::error::Result;
use crate::graph::Graph;
use crate::grouping::group_vectors;
use crate::iso::{check_verified, checkers};
use crate::weights::{IrrSequence, WeightSet};
use crate::DEFAULT_EPS;

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub weights: WeightSet,
    pub eps: f64,
    pub skip_cliques: bool,
    pub clique_budget: u64,
    /// Name of a registered isomorphism checker.
    pub checker: String,
    pub timings: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            weights: WeightSet::default(),
            eps: DEFAULT_EPS,
            skip_cliques: false,
            clique_budget: DEFAULT_CLIQUE_BUDGET,
            checker: checkers().default_strategy().name().to_string(),
            timings: true,
        }
    }
}

/// The comparison key of one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphFingerprint {
    pub n: usize,
    pub sorted_descriptor: Vec<f64>,
    pub omega: usize,
    pub cs: Vec<f64>,
}

pub fn fingerprint(g: &Graph, w: &WeightSet, clique_budget: u64) -> Result<GraphFingerprint> {
    let cs = clique_fingerprint(g, clique_budget)?;
    Ok(GraphFingerprint {
        n: g.n(),
        sorted_descriptor: descriptor_sequence(g, w).sorted(),
        omega: cs.omega(),
        cs: cs.cs,
    })
}

fn clique_fingerprint(g: &Graph, budget: u64) -> Result<CliqueSequence> {
    let catalog = maximal_cliques_with(g, &NmBlocks, budget)?;
    CliqueSequence::from_catalog(&catalog, &IrrSequence::for_order(g.n()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub a: usize,
    pub b: usize,
    /// `None` when the checker failed; see `error`.
    pub isomorphic: Option<bool>,
    /// 1-based images in `b` of the vertices of `a`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Class {
    pub id: usize,
    pub members: Vec<usize>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Unresolved {
    pub graph: usize,
    pub reason: String,
    /// Graphs it shared a stage-1 group with and was not separated from.
    pub stage1_companions: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub stage1_seconds: f64,
    pub stage2_seconds: f64,
    pub exact_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub total: usize,
    pub stage1_distinct: Vec<usize>,
    /// Distinct from every graph that completed stage 2.
    pub stage2_distinct: Vec<usize>,
    pub classes: Vec<Class>,
    pub class_sizes: Vec<usize>,
    pub unresolved: Vec<Unresolved>,
    pub exact_checks: usize,
    pub checker: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Stage1,
    Stage2,
    Exact,
    Unresolved,
}

/// One line of the per-graph summary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub graph_index: usize,
    pub stage_resolved: Stage,
    pub class_id: Option<usize>,
    /// Smallest other class member proven isomorphic to this graph.
    pub isomorphic_to: Option<usize>,
}

impl ClassificationReport {
    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut rows: Vec<SummaryRow> = (1..=self.total)
            .map(|graph_index| SummaryRow {
                graph_index,
                stage_resolved: Stage::Unresolved,
                class_id: None,
                isomorphic_to: None,
            })
            .collect();
        for &g in &self.stage1_distinct {
            rows[g - 1].stage_resolved = Stage::Stage1;
        }
        for &g in &self.stage2_distinct {
            rows[g - 1].stage_resolved = Stage::Stage2;
        }
        for class in &self.classes {
            for &g in &class.members {
                rows[g - 1].stage_resolved = Stage::Exact;
                rows[g - 1].class_id = Some(class.id);
            }
            for v in class.verdicts.iter().filter(|v| v.isomorphic == Some(true)) {
                for (x, y) in [(v.a, v.b), (v.b, v.a)] {
                    let slot = &mut rows[x - 1].isomorphic_to;
                    *slot = Some(slot.map_or(y, |s| s.min(y)));
                }
            }
        }
        rows
    }

    /// Graphs proven isomorphic, as 1-based pairs.
    pub fn isomorphic_pairs(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .flat_map(|c| &c.verdicts)
            .filter(|v| v.isomorphic == Some(true))
            .map(|v| (v.a, v.b))
            .collect()
    }
}

pub fn classify(graphs: &[Graph], cfg: &PipelineConfig) -> Result<ClassificationReport> {
    let registry = checkers();
    let checker = registry.get(&cfg.checker)?;

    let start = Instant::now();
    let sorted: Vec<Vec<f64>> = graphs
        .par_iter()
        .map(|g| descriptor_sequence(g, &cfg.weights).sorted())
        .collect();
    // vectors of different length never share a group, so this also splits by n
    let stage1 = group_vectors(&sorted, cfg.eps);
    let stage1_seconds = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let mut stage1_distinct = Vec::new();
    let mut stage2_distinct = Vec::new();
    let mut unresolved = Vec::new();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let tied: Vec<usize> = stage1
        .iter()
        .filter(|grp| grp.len() > 1)
        .flatten()
        .copied()
        .collect();
    let clique_results: Vec<Option<Result<CliqueSequence>>> = if cfg.skip_cliques {
        vec![None; graphs.len()]
    } else {
        let mut slots: Vec<Option<Result<CliqueSequence>>> = vec![None; graphs.len()];
        let computed: Vec<(usize, Result<CliqueSequence>)> = tied
            .par_iter()
            .map(|&i| (i, clique_fingerprint(&graphs[i], cfg.clique_budget)))
            .collect();
        for (i, r) in computed {
            slots[i] = Some(r);
        }
        slots
    };
    for grp in &stage1 {
        if grp.len() == 1 {
            stage1_distinct.push(grp[0]);
            continue;
        }
        if cfg.skip_cliques {
            candidates.push(grp.clone());
            continue;
        }
        let mut ok = Vec::new();
        let mut keys = Vec::new();
        for &i in grp {
            match clique_results[i]
                .as_ref()
                .expect("computed for tied graphs")
            {
                Ok(cs) => {
                    ok.push(i);
                    keys.push(cs.cs.clone());
                }
                Err(e) => unresolved.push(Unresolved {
                    graph: i + 1,
                    reason: e.to_string(),
                    stage1_companions: grp.iter().filter(|&&j| j != i).map(|j| j + 1).collect(),
                }),
            }
        }
        for sub in group_vectors(&keys, cfg.eps) {
            let members: Vec<usize> = sub.iter().map(|&k| ok[k]).collect();
            if members.len() == 1 {
                stage2_distinct.push(members[0]);
            } else {
                candidates.push(members);
            }
        }
    }
    let stage2_seconds = start.elapsed().as_secs_f64();

    let start = Instant::now();
    candidates.sort_by_key(|c| c[0]);
    let pairs: Vec<(usize, usize, usize)> = candidates
        .iter()
        .enumerate()
        .flat_map(|(c, members)| {
            members
                .iter()
                .enumerate()
                .flat_map(move |(x, &a)| members[x + 1..].iter().map(move |&b| (c, a, b)))
        })
        .collect();
    let verdicts: Vec<(usize, Verdict)> = pairs
        .par_iter()
        .map(|&(c, a, b)| {
            let verdict = match check_verified(checker, &graphs[a], &graphs[b]) {
                Ok(w) => Verdict {
                    a: a + 1,
                    b: b + 1,
                    isomorphic: Some(w.is_some()),
                    witness: w.map(|w| w.into_iter().map(|v| v + 1).collect()),
                    error: None,
                },
                Err(e) => Verdict {
                    a: a + 1,
                    b: b + 1,
                    isomorphic: None,
                    witness: None,
                    error: Some(e.to_string()),
                },
            };
            (c, verdict)
        })
        .collect();
    let exact_seconds = start.elapsed().as_secs_f64();

    let mut classes: Vec<Class> = candidates
        .iter()
        .enumerate()
        .map(|(c, members)| Class {
            id: c + 1,
            members: members.iter().map(|m| m + 1).collect(),
            verdicts: Vec::new(),
        })
        .collect();
    for (c, v) in verdicts {
        classes[c].verdicts.push(v);
    }
    stage1_distinct.iter_mut().for_each(|g| *g += 1);
    stage2_distinct.iter_mut().for_each(|g| *g += 1);
    stage1_distinct.sort_unstable();
    stage2_distinct.sort_unstable();
    unresolved.sort_by_key(|u| u.graph);

    Ok(ClassificationReport {
        total: graphs.len(),
        stage1_distinct,
        stage2_distinct,
        class_sizes: classes.iter().map(|c| c.members.len()).collect(),
        exact_checks: pairs.len(),
        classes,
        unresolved,
        checker: checker.name().to_string(),
        timings: cfg.timings.then_some(Timings {
            stage1_seconds,
            stage2_seconds,
            exact_seconds,
        }),
    })
}
