use super::GammaError;

pub const DEFAULT_MAX_ENUMERATION_N: usize = 5;
pub const HARD_MAX_ENUMERATION_N: usize = 8;

/// Limits and parallelism for operations that touch the whole vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphConfig {
    pub max_enumeration_n: usize,
    /// Worker threads for sharded work; `0` means the global rayon pool.
    pub parallel_workers: usize,
}

impl Default for GraphConfig {
    fn default() -> Self {
        Self {
            max_enumeration_n: DEFAULT_MAX_ENUMERATION_N,
            parallel_workers: 0,
        }
    }
}

impl GraphConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_n(mut self, max: usize) -> Result<Self, GammaError> {
        if max > HARD_MAX_ENUMERATION_N {
            return Err(GammaError::TooLarge {
                n: max,
                max: HARD_MAX_ENUMERATION_N,
            });
        }
        self.max_enumeration_n = max;
        Ok(self)
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.parallel_workers = workers;
        self
    }

    pub fn check(&self, n: usize) -> Result<(), GammaError> {
        let max = self.max_enumeration_n.min(HARD_MAX_ENUMERATION_N);
        if n > max {
            return Err(GammaError::TooLarge { n, max });
        }
        Ok(())
    }

    /// Runs `f` on a pool with the configured number of workers.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.parallel_workers == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.parallel_workers)
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(e) => {
                log::warn!(
                    "could not build a {}-thread pool ({e}); using the global pool",
                    self.parallel_workers
                );
                f()
            }
        }
    }
}
