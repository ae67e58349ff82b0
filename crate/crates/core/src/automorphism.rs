//! Automorphism groups by descriptor-pruned search.
//!
//! Descriptor values are isomorphism invariants, so an automorphism can only
//! map a vertex to another with the same value. Vertices are grouped by value
//! (per connected component by default), only permutations that act inside
//! each group are generated, and each is tested for edge preservation.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::cliques::{maximal_cliques_with, CliqueSequence, NmBlocks, DEFAULT_CLIQUE_BUDGET};
use crate::descriptor::descriptor_sequence;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grouping::group_scalars;
use crate::weights::{IrrSequence, WeightSet};
use crate::DEFAULT_EPS;

/// Default cap on the number of candidate permutations tested.
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 10_000_000;

/// A bijection of `0..n` in one-line form: `v ↦ images[v]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Panics if `images` is not a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                i < images.len() && !seen[i],
                "not a permutation: {images:?}"
            );
            seen[i] = true;
        }
        Permutation(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Nontrivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.0[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.0[v];
            }
            out.push(cycle);
        }
        out
    }

    /// 1-based cycle notation; the identity is `()`.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let labels: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                format!("({})", labels.join(" "))
            })
            .collect()
    }

    /// 1-based one-line word.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// A set of permutations of `0..n`, kept sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismSet {
    n: usize,
    permutations: Vec<Permutation>,
}

impl AutomorphismSet {
    pub fn new(n: usize, perms: Vec<Vec<usize>>) -> Self {
        Self::from_permutations(n, perms.into_iter().map(Permutation::from_images).collect())
    }

    pub fn from_permutations(n: usize, mut permutations: Vec<Permutation>) -> Self {
        assert!(
            permutations.iter().all(|p| p.n() == n),
            "permutation size mismatch"
        );
        permutations.sort();
        permutations.dedup();
        AutomorphismSet { n, permutations }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.permutations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutations.is_empty()
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.permutations
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.permutations.binary_search(p).is_ok()
    }
}

/// Identity present, inverses present, closed under composition.
///
/// Closure is checked through a generating set: members not yet reached are
/// added as generators one at a time, and the closure of the identity under
/// right multiplication by the generators must stay inside the set. Every
/// added generator at least doubles the reached subgroup, so this costs
/// `O(|A| log² |A|)` compositions instead of `|A|²`.
pub fn verify_group(a: &AutomorphismSet) -> bool {
    let members: HashSet<&Permutation> = a.permutations.iter().collect();
    let identity = Permutation::identity(a.n);
    if !members.contains(&identity)
        || !a
            .permutations
            .iter()
            .all(|p| members.contains(&p.inverse()))
    {
        return false;
    }
    let mut generators: Vec<&Permutation> = Vec::new();
    let mut reached: HashSet<Permutation> = HashSet::from([identity.clone()]);
    for p in &a.permutations {
        if reached.contains(p) {
            continue;
        }
        generators.push(p);
        reached = HashSet::from([identity.clone()]);
        let mut frontier = vec![identity.clone()];
        while let Some(x) = frontier.pop() {
            for s in &generators {
                let y = x.compose(s);
                if !members.contains(&y) {
                    return false;
                }
                if reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    true
}

/// What vertices are grouped by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupingKey {
    /// Descriptor value plus the clique-membership weight `R`.
    #[default]
    Augmented,
    /// Descriptor value only.
    Descriptor,
}

#[derive(Clone, Debug)]
pub struct AutConfig {
    pub weights: WeightSet,
    pub eps: f64,
    pub key: GroupingKey,
    /// Group across components so that isomorphic components may be swapped.
    pub cross_component: bool,
    pub candidate_budget: u64,
    pub clique_budget: u64,
}

impl Default for AutConfig {
    fn default() -> Self {
        AutConfig {
            weights: WeightSet::default(),
            eps: DEFAULT_EPS,
            key: GroupingKey::default(),
            cross_component: false,
            candidate_budget: DEFAULT_CANDIDATE_BUDGET,
            clique_budget: DEFAULT_CLIQUE_BUDGET,
        }
    }
}

/// Vertex groups a search block may permute.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupBlock {
    pub vertices: Vec<usize>,
    /// Vertices with equal key values, ordered by smallest member.
    pub groups: Vec<Vec<usize>>,
}

impl GroupBlock {
    pub fn is_asymmetric(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateGroups {
    pub n: usize,
    /// Grouping key per vertex.
    pub values: Vec<f64>,
    /// One block per connected component, or a single block covering the
    /// whole graph when grouping across components.
    pub blocks: Vec<GroupBlock>,
}

impl CandidateGroups {
    /// Groups of every block, in block order.
    pub fn all_groups(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().flat_map(|b| &b.groups)
    }

    /// Whether `p` maps every group onto itself.
    pub fn respected_by(&self, p: &Permutation) -> bool {
        self.all_groups()
            .all(|grp| grp.iter().all(|&v| grp.contains(&p.apply(v))))
    }

    /// Number of candidates the groups generate, `Π |group|!`, or `None` on overflow.
    pub fn candidate_count(&self) -> Option<u64> {
        count_candidates(self.all_groups().map(Vec::len))
    }
}

fn count_candidates(mut sizes: impl Iterator<Item = usize>) -> Option<u64> {
    sizes.try_fold(1u64, |acc, s| {
        (2..=s as u64).try_fold(acc, |a, k| a.checked_mul(k))
    })
}

/// Per-vertex grouping values under `key`.
pub fn grouping_values(g: &Graph, cfg: &AutConfig) -> Result<Vec<f64>> {
    let mut values = descriptor_sequence(g, &cfg.weights).values;
    if cfg.key == GroupingKey::Augmented {
        let catalog = maximal_cliques_with(g, &NmBlocks, cfg.clique_budget)?;
        let cs = CliqueSequence::from_catalog(&catalog, &IrrSequence::for_order(g.n()))?;
        for (v, r) in values.iter_mut().zip(&cs.r) {
            *v += r;
        }
    }
    Ok(values)
}

pub fn candidate_groups(g: &Graph, cfg: &AutConfig) -> Result<CandidateGroups> {
    let values = grouping_values(g, cfg)?;
    let scopes = if cfg.cross_component {
        vec![(0..g.n()).collect::<Vec<_>>()]
    } else {
        g.components()
    };
    let blocks = scopes
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|vertices| {
            let items: Vec<(usize, f64)> = vertices.iter().map(|&v| (v, values[v])).collect();
            let mut groups = group_scalars(&items, cfg.eps);
            groups.sort_by_key(|grp| grp[0]);
            GroupBlock { vertices, groups }
        })
        .collect();
    Ok(CandidateGroups {
        n: g.n(),
        values,
        blocks,
    })
}

/// Lazily yields every permutation that permutes each group within itself
/// and fixes all other vertices. The identity comes first.
pub struct PermutationStream {
    n: usize,
    groups: Vec<Vec<usize>>,
    arrangements: Vec<Vec<usize>>,
    done: bool,
}

impl PermutationStream {
    /// Fails with a budget error naming the group sizes when `Π |group|!`
    /// exceeds `budget`.
    pub fn new<'a>(
        n: usize,
        groups: impl IntoIterator<Item = &'a Vec<usize>>,
        budget: u64,
    ) -> Result<Self> {
        let groups: Vec<Vec<usize>> = groups
            .into_iter()
            .filter(|grp| grp.len() > 1)
            .map(|grp| {
                let mut grp = grp.clone();
                grp.sort_unstable();
                grp
            })
            .collect();
        let count = count_candidates(groups.iter().map(Vec::len));
        if count.is_none_or(|c| c > budget) {
            let sizes: Vec<String> = groups.iter().map(|grp| grp.len().to_string()).collect();
            return Err(Error::budget(
                "candidate permutation",
                budget,
                format!(" (groups of sizes [{}])", sizes.join(", ")),
            ));
        }
        let arrangements = groups.clone();
        Ok(PermutationStream {
            n,
            groups,
            arrangements,
            done: false,
        })
    }

    fn advance(&mut self) {
        for arr in self.arrangements.iter_mut().rev() {
            if next_permutation(arr) {
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for PermutationStream {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut images: Vec<usize> = (0..self.n).collect();
        for (grp, arr) in self.groups.iter().zip(&self.arrangements) {
            for (&v, &img) in grp.iter().zip(arr) {
                images[v] = img;
            }
        }
        self.advance();
        Some(Permutation(images))
    }
}

/// Lexicographic successor in place; on the last arrangement, resets to
/// ascending order and returns `false`.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        xs.reverse();
        return false;
    };
    let j = (i + 1..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i])
        .expect("successor exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

pub fn candidate_permutations(groups: &CandidateGroups, budget: u64) -> Result<PermutationStream> {
    PermutationStream::new(groups.n, groups.all_groups(), budget)
}

/// Everything computed while searching for automorphisms.
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismAnalysis {
    pub groups: CandidateGroups,
    /// Automorphisms acting inside each block (identity elsewhere).
    pub per_block: Vec<Vec<Permutation>>,
    pub set: AutomorphismSet,
    pub candidates_tested: u64,
}

pub fn automorphism_group(g: &Graph, cfg: &AutConfig) -> Result<AutomorphismSet> {
    Ok(analyze_automorphisms(g, cfg)?.set)
}

pub fn analyze_automorphisms(g: &Graph, cfg: &AutConfig) -> Result<AutomorphismAnalysis> {
    let groups = candidate_groups(g, cfg)?;
    let mut per_block = Vec::with_capacity(groups.blocks.len());
    let mut tested = 0u64;
    for block in &groups.blocks {
        if block.is_asymmetric() {
            per_block.push(vec![Permutation::identity(g.n())]);
            continue;
        }
        let mut survivors = Vec::new();
        for candidate in PermutationStream::new(g.n(), &block.groups, cfg.candidate_budget)? {
            tested += 1;
            if g.is_automorphism(candidate.images()) {
                survivors.push(candidate);
            }
        }
        per_block.push(survivors);
    }
    let total = per_block
        .iter()
        .try_fold(1u64, |acc, list| acc.checked_mul(list.len() as u64));
    if total.is_none_or(|t| t > cfg.candidate_budget) {
        return Err(Error::budget(
            "automorphism combination",
            cfg.candidate_budget,
            " (product of per-component group orders)",
        ));
    }
    let set = AutomorphismSet::from_permutations(g.n(), combine_blocks(g.n(), &groups, &per_block));
    Ok(AutomorphismAnalysis {
        groups,
        per_block,
        set,
        candidates_tested: tested,
    })
}

/// Cartesian product of per-block automorphisms acting on disjoint vertex sets.
fn combine_blocks(
    n: usize,
    groups: &CandidateGroups,
    per_block: &[Vec<Permutation>],
) -> Vec<Permutation> {
    let mut acc = vec![Permutation::identity(n)];
    for (block, autos) in groups.blocks.iter().zip(per_block) {
        let mut next = Vec::with_capacity(acc.len() * autos.len());
        for base in &acc {
            for a in autos {
                let mut images = base.0.clone();
                for &v in &block.vertices {
                    images[v] = a.0[v];
                }
                next.push(Permutation(images));
            }
        }
        acc = next;
    }
    acc
}
