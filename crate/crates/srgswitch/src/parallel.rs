use rayon::prelude::*;
use srgswitch_core::search::{score_sets_with_first, ScoredSet, Scanner};
use srgswitch_core::Graph;

pub const THREADS_ENV: &str = "SRGSWITCH_THREADS";

/// Scores candidate sets on a rayon pool, one task per smallest member.
/// Results come back in the same order as the sequential scanner.
pub struct ParallelScanner {
    pool: rayon::ThreadPool,
}

impl ParallelScanner {
    /// `threads = None` lets rayon pick.
    pub fn new(threads: Option<usize>) -> Self {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(t) = threads {
            b = b.num_threads(t.max(1));
        }
        ParallelScanner {
            pool: b.build().expect("thread pool"),
        }
    }

    /// Caps the pool at `SRGSWITCH_THREADS` when it is set to a positive integer.
    pub fn from_env() -> Self {
        Self::new(
            std::env::var(THREADS_ENV)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .filter(|&t: &usize| t > 0),
        )
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Scanner for ParallelScanner {
    fn scan(&self, g: &Graph, size: usize, base_rank: usize) -> Vec<ScoredSet> {
        self.pool.install(|| {
            (0..g.n())
                .into_par_iter()
                .map(|first| score_sets_with_first(g, size, first, base_rank))
                .collect::<Vec<_>>()
                .concat()
        })
    }
}
