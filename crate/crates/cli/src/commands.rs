use rayon::prelude::*;
use serde::Serialize;

use nmseq::automorphism::{analyze_automorphisms, AutConfig, GroupingKey};
use nmseq::cliques::{enumerators, maximal_cliques_with, CliqueSequence};
use nmseq::descriptor::descriptor_sequence_with;
use nmseq::iso::{check_verified, checkers};
use nmseq::nm::{builders, power_sequence_with};
use nmseq::oracles::{self, OracleBudget};
use nmseq::pipeline::{classify, PipelineConfig};
use nmseq::{Graph, IrrSequence, Named, WeightSet};

use crate::input::read_graphs;
use crate::output::{self, round10_all, OutputFormat};
use crate::{Command, Failure, IoArgs, Key, Tuning};

pub fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Nm { io, builder } => nm(&io, &builder),
        Command::Descriptor {
            io,
            tuning,
            builder,
        } => descriptor(&io, &tuning, &builder),
        Command::Cliques {
            io,
            algo,
            clique_budget,
            oracle,
        } => cliques(&io, &algo, clique_budget, oracle),
        Command::Aut {
            io,
            tuning,
            key,
            cross_component,
            candidate_budget,
            clique_budget,
            oracle,
        } => {
            let cfg = AutConfig {
                weights: weights(&tuning)?,
                eps: tuning.eps,
                key: match key {
                    Key::Augmented => GroupingKey::Augmented,
                    Key::Descriptor => GroupingKey::Descriptor,
                },
                cross_component,
                candidate_budget,
                clique_budget,
            };
            aut(&io, &cfg, oracle)
        }
        Command::Classify {
            io,
            tuning,
            skip_cliques,
            checker,
            clique_budget,
            no_timings,
        } => {
            let cfg = PipelineConfig {
                weights: weights(&tuning)?,
                eps: tuning.eps,
                skip_cliques,
                clique_budget,
                checker,
                timings: !no_timings,
            };
            classify_cmd(&io, &cfg)
        }
        Command::OracleCheck { io, tuning } => oracle_check(&io, &tuning),
        Command::Strategies => strategies(),
    }
}

fn weights(t: &Tuning) -> Result<WeightSet, Failure> {
    match &t.weights {
        Some(values) => Ok(WeightSet::from_slice(values)?),
        None => Ok(WeightSet::default()),
    }
}

/// Reads the input and sizes the worker pool.
fn prepare(io: &IoArgs) -> Result<Vec<Graph>, Failure> {
    let graphs = read_graphs(&io.input, io.format)?;
    if let Some(jobs) = io.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    Ok(graphs)
}

fn emit<J: Serialize + ?Sized, C: Serialize>(
    io: &IoArgs,
    json: &J,
    rows: impl FnOnce() -> Vec<C>,
) -> Result<(), Failure> {
    let bytes = match io.output_format {
        OutputFormat::Json => output::json(json),
        OutputFormat::Csv => output::csv(&rows())?,
    };
    output::write(io.output.as_deref(), &bytes)
}

#[derive(Serialize)]
struct NmLevel {
    level: usize,
    nonzero: usize,
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct NmReport {
    graph: usize,
    n: usize,
    k: usize,
    nonzero_final: usize,
    levels: Vec<NmLevel>,
}

#[derive(Serialize)]
struct NmRow {
    graph: usize,
    level: usize,
    row: usize,
    entries: String,
}

fn nm(io: &IoArgs, builder: &str) -> Result<(), Failure> {
    let registry = builders();
    let builder = registry.get(builder)?;
    let graphs = prepare(io)?;
    let reports: Vec<NmReport> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let seq = power_sequence_with(g, builder);
            NmReport {
                graph: idx + 1,
                n: g.n(),
                k: seq.k(),
                nonzero_final: seq.nonzero_count_final(),
                levels: seq
                    .matrices()
                    .iter()
                    .map(|m| NmLevel {
                        level: m.level(),
                        nonzero: m.count_nonzero(),
                        rows: m.matrix().to_rows(),
                    })
                    .collect(),
            }
        })
        .collect();
    emit(io, &reports, || {
        reports
            .iter()
            .flat_map(|r| {
                r.levels.iter().flat_map(move |l| {
                    l.rows.iter().enumerate().map(move |(i, row)| NmRow {
                        graph: r.graph,
                        level: l.level,
                        row: i + 1,
                        entries: row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
                    })
                })
            })
            .collect()
    })
}

#[derive(Serialize)]
struct DescriptorReport {
    graph: usize,
    n: usize,
    k: usize,
    values: Vec<f64>,
    sorted: Vec<f64>,
    per_level: Vec<Vec<f64>>,
}

#[derive(Serialize)]
struct DescriptorRow {
    graph: usize,
    vertex: usize,
    value: f64,
}

fn descriptor(io: &IoArgs, tuning: &Tuning, builder: &str) -> Result<(), Failure> {
    let registry = builders();
    let builder = registry.get(builder)?;
    let w = weights(tuning)?;
    let graphs = prepare(io)?;
    let reports: Vec<DescriptorReport> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let d = descriptor_sequence_with(g, &w, builder);
            DescriptorReport {
                graph: idx + 1,
                n: g.n(),
                k: d.k(),
                values: round10_all(&d.values),
                sorted: round10_all(&d.sorted()),
                per_level: d.per_level.iter().map(|l| round10_all(l)).collect(),
            }
        })
        .collect();
    emit(io, &reports, || {
        reports
            .iter()
            .flat_map(|r| {
                r.values
                    .iter()
                    .enumerate()
                    .map(move |(v, &value)| DescriptorRow {
                        graph: r.graph,
                        vertex: v + 1,
                        value,
                    })
            })
            .collect()
    })
}

#[derive(Serialize)]
struct CliqueReport {
    graph: usize,
    n: usize,
    omega: usize,
    size_counts: Vec<usize>,
    cliques: Vec<Vec<usize>>,
    /// `counts[s-1][j-1]`: maximal cliques of size `s` containing vertex `j`.
    counts: Vec<Vec<u64>>,
    r: Vec<f64>,
    cs: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct CliqueRow {
    graph: usize,
    size: usize,
    members: String,
}

fn cliques(io: &IoArgs, algo: &str, budget: u64, oracle: bool) -> Result<(), Failure> {
    let registry = enumerators();
    let algo = registry.get(algo)?;
    let graphs = prepare(io)?;
    let reports = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| -> Result<CliqueReport, Failure> {
            let catalog = maximal_cliques_with(g, algo, budget)?;
            let cs = CliqueSequence::from_catalog(&catalog, &IrrSequence::for_order(g.n()))?;
            let oracle_agrees = (oracle && g.n() <= OracleBudget::default().cliques)
                .then(|| oracles::oracle_maximal_cliques(g).map(|o| o == catalog))
                .transpose()?;
            Ok(CliqueReport {
                graph: idx + 1,
                n: g.n(),
                omega: catalog.omega(),
                size_counts: catalog.size_counts(),
                cliques: catalog
                    .all()
                    .map(|c| c.iter().map(|v| v + 1).collect())
                    .collect(),
                counts: catalog.counts().to_vec(),
                r: round10_all(&cs.r),
                cs: round10_all(&cs.cs),
                oracle_agrees,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    emit(io, &reports, || {
        reports
            .iter()
            .flat_map(|r| {
                r.cliques.iter().map(move |c| CliqueRow {
                    graph: r.graph,
                    size: c.len(),
                    members: c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                })
            })
            .collect()
    })?;
    check_agreement(reports.iter().map(|r| (r.graph, r.oracle_agrees)))
}

fn check_agreement(results: impl Iterator<Item = (usize, Option<bool>)>) -> Result<(), Failure> {
    let bad: Vec<String> = results
        .filter(|(_, agrees)| *agrees == Some(false))
        .map(|(g, _)| g.to_string())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Disagreement(format!(
            "oracle disagrees on graphs {}",
            bad.join(", ")
        )))
    }
}

#[derive(Serialize)]
struct AutomorphismEntry {
    cycles: String,
    word: Vec<usize>,
}

#[derive(Serialize)]
struct AutReport {
    graph: usize,
    n: usize,
    components: Vec<Vec<usize>>,
    groups: Vec<Vec<usize>>,
    order: usize,
    candidates_tested: u64,
    automorphisms: Vec<AutomorphismEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct AutRow {
    graph: usize,
    automorphism: usize,
    cycles: String,
    word: String,
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn aut(io: &IoArgs, cfg: &AutConfig, oracle: bool) -> Result<(), Failure> {
    let graphs = prepare(io)?;
    let reports = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| -> Result<AutReport, Failure> {
            let a = analyze_automorphisms(g, cfg)?;
            let oracle_agrees = (oracle && g.n() <= OracleBudget::default().automorphism)
                .then(|| -> Result<bool, Failure> {
                    let o = oracles::oracle_automorphisms(g)?;
                    if cfg.cross_component {
                        return Ok(o == a.set);
                    }
                    let comps = g.components();
                    let preserving: Vec<_> = o
                        .permutations()
                        .iter()
                        .filter(|p| {
                            comps
                                .iter()
                                .all(|c| c.iter().all(|&v| c.contains(&p.apply(v))))
                        })
                        .collect();
                    Ok(preserving.len() == a.set.len()
                        && preserving.iter().all(|p| a.set.contains(p)))
                })
                .transpose()?;
            Ok(AutReport {
                graph: idx + 1,
                n: g.n(),
                components: g.components().iter().map(|c| one_based(c)).collect(),
                groups: a.groups.all_groups().map(|grp| one_based(grp)).collect(),
                order: a.set.len(),
                candidates_tested: a.candidates_tested,
                automorphisms: a
                    .set
                    .permutations()
                    .iter()
                    .map(|p| AutomorphismEntry {
                        cycles: p.cycle_notation(),
                        word: p.one_line(),
                    })
                    .collect(),
                oracle_agrees,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    emit(io, &reports, || {
        reports
            .iter()
            .flat_map(|r| {
                r.automorphisms
                    .iter()
                    .enumerate()
                    .map(move |(k, a)| AutRow {
                        graph: r.graph,
                        automorphism: k + 1,
                        cycles: a.cycles.clone(),
                        word: a
                            .word
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(" "),
                    })
            })
            .collect()
    })?;
    check_agreement(reports.iter().map(|r| (r.graph, r.oracle_agrees)))
}

fn classify_cmd(io: &IoArgs, cfg: &PipelineConfig) -> Result<(), Failure> {
    checkers().get(&cfg.checker)?;
    let graphs = prepare(io)?;
    let report = classify(&graphs, cfg)?;
    emit(io, &report, || report.summary())
}

#[derive(Serialize)]
struct OracleGraph {
    graph: usize,
    n: usize,
    cliques: Option<bool>,
    automorphisms: Option<bool>,
}

#[derive(Serialize)]
struct OraclePair {
    a: usize,
    b: usize,
    oracle: bool,
    checker: String,
    agrees: bool,
}

#[derive(Serialize)]
struct OracleReport {
    graphs: Vec<OracleGraph>,
    pairs: Vec<OraclePair>,
    all_agree: bool,
}

#[derive(Serialize)]
struct OracleRow {
    check: String,
    subject: String,
    agrees: bool,
}

/// Runs every oracle that fits its vertex budget: cliques and automorphism
/// groups per graph, and every exact checker on every pair of equal order.
fn oracle_check(io: &IoArgs, tuning: &Tuning) -> Result<(), Failure> {
    let budget = OracleBudget::default();
    let cfg = AutConfig {
        weights: weights(tuning)?,
        eps: tuning.eps,
        cross_component: true,
        ..AutConfig::default()
    };
    let graphs = prepare(io)?;
    let per_graph = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| -> Result<OracleGraph, Failure> {
            let cliques = if g.n() <= budget.cliques {
                let ours = maximal_cliques_with(g, enumerators().default_strategy(), u64::MAX)?;
                Some(ours == oracles::oracle_maximal_cliques(g)?)
            } else {
                None
            };
            let automorphisms = if g.n() <= budget.automorphism {
                Some(analyze_automorphisms(g, &cfg)?.set == oracles::oracle_automorphisms(g)?)
            } else {
                None
            };
            Ok(OracleGraph {
                graph: idx + 1,
                n: g.n(),
                cliques,
                automorphisms,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let small: Vec<usize> = (0..graphs.len())
        .filter(|&i| graphs[i].n() <= budget.isomorphism)
        .collect();
    let registry = checkers();
    let mut pairs = Vec::new();
    for (x, &a) in small.iter().enumerate() {
        for &b in small[x + 1..]
            .iter()
            .filter(|&&b| graphs[b].n() == graphs[a].n())
        {
            let truth = oracles::oracle_isomorphic(&graphs[a], &graphs[b])?;
            for checker in registry.iter() {
                let got = check_verified(checker, &graphs[a], &graphs[b])?.is_some();
                pairs.push(OraclePair {
                    a: a + 1,
                    b: b + 1,
                    oracle: truth,
                    checker: checker.name().to_string(),
                    agrees: got == truth,
                });
            }
        }
    }
    let all_agree = per_graph
        .iter()
        .all(|g| g.cliques != Some(false) && g.automorphisms != Some(false))
        && pairs.iter().all(|p| p.agrees);
    let report = OracleReport {
        graphs: per_graph,
        pairs,
        all_agree,
    };
    emit(io, &report, || {
        let mut rows = Vec::new();
        for g in &report.graphs {
            for (check, result) in [("cliques", g.cliques), ("automorphisms", g.automorphisms)] {
                if let Some(agrees) = result {
                    rows.push(OracleRow {
                        check: check.into(),
                        subject: g.graph.to_string(),
                        agrees,
                    });
                }
            }
        }
        for p in &report.pairs {
            rows.push(OracleRow {
                check: format!("isomorphism:{}", p.checker),
                subject: format!("{}-{}", p.a, p.b),
                agrees: p.agrees,
            });
        }
        rows
    })?;
    if report.all_agree {
        Ok(())
    } else {
        Err(Failure::Disagreement(
            "oracle disagreement; see report".into(),
        ))
    }
}

#[derive(Serialize)]
struct StrategyEntry {
    kind: &'static str,
    name: &'static str,
    default: bool,
    description: &'static str,
}

fn strategies() -> Result<(), Failure> {
    fn list<'a, T: ?Sized + Named + 'a>(
        kind: &'static str,
        items: impl Iterator<Item = &'a T>,
    ) -> Vec<StrategyEntry> {
        items
            .enumerate()
            .map(|(i, s)| StrategyEntry {
                kind,
                name: s.name(),
                default: i == 0,
                description: s.description(),
            })
            .collect()
    }
    let mut all = list("nm-builder", builders().iter());
    all.extend(list("clique-enumerator", enumerators().iter()));
    all.extend(list("isomorphism-checker", checkers().iter()));
    output::write(None, &output::json(&all))
}
