//! Greedy search for GM switching sets that raise the 2-rank, and replay of
//! recorded switching sequences.
//!
//! A search step scans every vertex subset of the configured size in
//! lexicographic order, keeps the GM sets, and scores each by its rank
//! delta. An increasing set is applied when one exists; otherwise a
//! rank-preserving set is drawn from the seeded RNG and the budget shrinks.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graphs::{check_srg, Graph, SrgParams};
use crate::product::NamedGraph;
use crate::switching::{apply_gm, gm_half_vertices, gm_switch, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Enumeration {
    /// Take the first increasing set in lexicographic order.
    Exhaustive,
    /// Take an increasing set chosen uniformly with the seeded RNG.
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub set_size: usize,
    /// Rank-preserving detours allowed since the last increase.
    pub budget_without_increase: usize,
    pub rng_seed: u64,
    pub max_rank: Option<usize>,
    pub enumeration: Enumeration,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            set_size: 4,
            budget_without_increase: 5000,
            rng_seed: 0,
            max_rank: None,
            enumeration: Enumeration::Exhaustive,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.set_size < 2 || self.set_size % 2 == 1 {
            return Err(Error::OddGmSet(self.set_size));
        }
        if self.budget_without_increase == 0 {
            return Err(Error::BadConfig("budget must be at least 1".to_string()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    TargetReached,
    BudgetExhausted,
    /// No GM set with a non-negative rank delta was left.
    SpaceExhausted,
    /// A replayed transcript ran to its last step.
    TranscriptEnd,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::TargetReached => "target_reached",
            Termination::BudgetExhausted => "budget_exhausted",
            Termination::SpaceExhausted => "space_exhausted",
            Termination::TranscriptEnd => "transcript_end",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub set: VertexSet,
    pub rank_after: usize,
    pub delta: i32,
    pub ones_in_colspace: bool,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub start_rank: usize,
    pub params: Option<SrgParams>,
    pub path: Vec<PathStep>,
    pub final_graph: Graph,
    pub final_rank: usize,
    pub terminated_by: Termination,
    pub ones_in_colspace_final: bool,
}

impl SearchReport {
    /// `start_rank` followed by the rank after every step.
    pub fn rank_sequence(&self) -> Vec<usize> {
        core::iter::once(self.start_rank)
            .chain(self.path.iter().map(|s| s.rank_after))
            .collect()
    }
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic
/// order; `false` once exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lazy stream of the GM sets of a given size, in lexicographic order.
pub struct GmSets<'g> {
    graph: &'g Graph,
    idx: Vec<usize>,
    mask: Vec<u64>,
    first_only: Option<usize>,
    done: bool,
}

impl Iterator for GmSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.next_with_half().map(|(set, _)| set)
    }
}

impl<'g> GmSets<'g> {
    fn new(graph: &'g Graph, size: usize, first_only: Option<usize>) -> Self {
        let n = graph.n();
        let start = first_only.unwrap_or(0);
        let done = size == 0 || start + size > n;
        GmSets {
            graph,
            idx: (start..start + size).collect(),
            mask: vec![0; graph.adj().stride()],
            first_only,
            done,
        }
    }

    /// Next GM set together with its half-vertices.
    pub fn next_with_half(&mut self) -> Option<(VertexSet, Vec<usize>)> {
        let n = self.graph.n();
        while !self.done {
            for &v in &self.idx {
                self.mask[v / 64] |= 1 << (v % 64);
            }
            let hit = gm_half_vertices(self.graph, &self.idx, &self.mask);
            for &v in &self.idx {
                self.mask[v / 64] = 0;
            }
            let current = self.idx.clone();
            self.done = !next_combination(&mut self.idx, n)
                || self.first_only.is_some_and(|f| self.idx[0] != f);
            if let Some(half) = hit {
                let set = VertexSet::new(current, n).expect("combination in range");
                return Some((set, half));
            }
        }
        None
    }
}

/// All GM sets of `size` vertices, lexicographically.
pub fn enumerate_gm_sets(g: &Graph, size: usize) -> Result<GmSets<'_>> {
    if size < 2 || size % 2 == 1 {
        return Err(Error::OddGmSet(size));
    }
    if size > g.n() {
        return Err(Error::ImproperSwitchingSet { size, n: g.n() });
    }
    Ok(GmSets::new(g, size, None))
}

/// A GM set with the rank change its switch causes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredSet {
    pub set: VertexSet,
    pub half: Vec<usize>,
    pub delta: i32,
}

/// Scores the GM sets whose smallest member is `first`, in lexicographic order.
pub fn score_sets_with_first(g: &Graph, size: usize, first: usize, base_rank: usize) -> Vec<ScoredSet> {
    let mut it = GmSets::new(g, size, Some(first));
    let mut out = Vec::new();
    while let Some((set, half)) = it.next_with_half() {
        let delta = if half.is_empty() {
            0
        } else {
            apply_gm(g, &set, &half).rank2() as i32 - base_rank as i32
        };
        out.push(ScoredSet { set, half, delta });
    }
    out
}

/// Produces every GM set of a graph with its rank delta, in lexicographic
/// order. Implementations may evaluate candidates concurrently but must
/// return them in order.
pub trait Scanner {
    fn scan(&self, g: &Graph, size: usize, base_rank: usize) -> Vec<ScoredSet>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SequentialScanner;

impl Scanner for SequentialScanner {
    fn scan(&self, g: &Graph, size: usize, base_rank: usize) -> Vec<ScoredSet> {
        (0..g.n())
            .flat_map(|first| score_sets_with_first(g, size, first, base_rank))
            .collect()
    }
}

pub fn search_increase(g: &Graph, cfg: &SearchConfig) -> Result<SearchReport> {
    search_increase_with(g, cfg, &SequentialScanner)
}

pub fn search_increase_with<S: Scanner + ?Sized>(
    g: &Graph,
    cfg: &SearchConfig,
    scanner: &S,
) -> Result<SearchReport> {
    cfg.validate()?;
    let params = check_srg(g).ok_or(Error::NotStronglyRegular)?;
    if cfg.set_size > g.n() {
        return Err(Error::ImproperSwitchingSet {
            size: cfg.set_size,
            n: g.n(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let start_rank = g.rank2();
    let mut graph = g.clone();
    let mut rank = start_rank;
    let mut budget = cfg.budget_without_increase;
    let mut path = Vec::new();

    let terminated_by = loop {
        if cfg.max_rank.is_some_and(|t| rank >= t) {
            break Termination::TargetReached;
        }
        let scored = scanner.scan(&graph, cfg.set_size, rank);
        let increases: Vec<&ScoredSet> = scored.iter().filter(|s| s.delta > 0).collect();
        let chosen = if !increases.is_empty() {
            budget = cfg.budget_without_increase;
            match cfg.enumeration {
                Enumeration::Exhaustive => increases[0],
                Enumeration::Random => increases[rng.gen_range(0..increases.len())],
            }
        } else {
            let preserving: Vec<&ScoredSet> = scored.iter().filter(|s| s.delta == 0).collect();
            if preserving.is_empty() {
                break Termination::SpaceExhausted;
            }
            if budget == 0 {
                break Termination::BudgetExhausted;
            }
            budget -= 1;
            preserving[rng.gen_range(0..preserving.len())]
        };
        graph = apply_gm(&graph, &chosen.set, &chosen.half);
        rank = (rank as i32 + chosen.delta) as usize;
        if check_srg(&graph) != Some(params) {
            return Err(Error::ParametersChanged {
                step: path.len() + 1,
            });
        }
        path.push(PathStep {
            set: chosen.set.clone(),
            rank_after: rank,
            delta: chosen.delta,
            ones_in_colspace: graph.ones_in_colspace(),
        });
    };

    Ok(SearchReport {
        start_rank,
        params: Some(params),
        path,
        ones_in_colspace_final: graph.ones_in_colspace(),
        final_rank: rank,
        final_graph: graph,
        terminated_by,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptStep {
    pub labels: Vec<String>,
    pub expected_rank: usize,
}

/// A start graph and the switching sets to apply to it, with the 2-rank
/// expected after each one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub start: NamedGraph,
    pub steps: Vec<TranscriptStep>,
    pub expected_final_ones_in_colspace: Option<bool>,
}

impl Transcript {
    pub const SET_SIZE: usize = 4;

    pub fn new(
        start: &str,
        steps: Vec<TranscriptStep>,
        expected_final_ones_in_colspace: Option<bool>,
    ) -> Result<Self> {
        let start = start
            .parse::<NamedGraph>()
            .map_err(|_| Error::InvalidTranscript(format!("unknown start graph {start:?}")))?;
        for (i, s) in steps.iter().enumerate() {
            if s.labels.len() != Self::SET_SIZE {
                return Err(Error::InvalidTranscript(format!(
                    "step {}: expected {} labels, found {}",
                    i + 1,
                    Self::SET_SIZE,
                    s.labels.len()
                )));
            }
            if s.expected_rank % 2 == 1 {
                return Err(Error::InvalidTranscript(format!(
                    "step {}: 2-rank {} is odd",
                    i + 1,
                    s.expected_rank
                )));
            }
        }
        Ok(Transcript {
            start,
            steps,
            expected_final_ones_in_colspace,
        })
    }
}

/// Applies every step of `t`, checking the GM condition, the expected
/// 2-rank and the SRG parameters after each one. Steps are numbered from 1.
pub fn replay(t: &Transcript) -> Result<SearchReport> {
    let start = t.start.build();
    let params = check_srg(&start);
    let start_rank = start.rank2();
    let mut graph = start;
    let mut rank = start_rank;
    let mut path = Vec::with_capacity(t.steps.len());
    for (i, step) in t.steps.iter().enumerate() {
        let no = i + 1;
        let mut members = Vec::with_capacity(step.labels.len());
        for l in &step.labels {
            members.push(graph.label_index(l).map_err(|_| Error::UnknownStepLabel {
                step: no,
                label: l.clone(),
            })?);
        }
        let set = VertexSet::new(members, graph.n()).map_err(|e| Error::InvalidStep {
            step: no,
            reason: e.to_string(),
        })?;
        graph = gm_switch(&graph, &set).map_err(|e| Error::InvalidStep {
            step: no,
            reason: e.to_string(),
        })?;
        let observed = graph.rank2();
        if observed != step.expected_rank {
            return Err(Error::RankMismatch {
                step: no,
                expected: step.expected_rank,
                observed,
            });
        }
        if params.is_some() && check_srg(&graph) != params {
            return Err(Error::ParametersChanged { step: no });
        }
        path.push(PathStep {
            set,
            rank_after: observed,
            delta: observed as i32 - rank as i32,
            ones_in_colspace: graph.ones_in_colspace(),
        });
        rank = observed;
    }
    let ones = graph.ones_in_colspace();
    if let Some(expected) = t.expected_final_ones_in_colspace {
        if expected != ones {
            return Err(Error::FinalOnesMismatch {
                expected,
                observed: ones,
            });
        }
    }
    Ok(SearchReport {
        start_rank,
        params,
        path,
        final_graph: graph,
        final_rank: rank,
        terminated_by: Termination::TranscriptEnd,
        ones_in_colspace_final: ones,
    })
}
