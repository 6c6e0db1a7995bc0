//! A [`PrimeMapper`] backed by a rayon thread pool.

use artin_core::mapper::{Erased, PrimeMapper};
use rayon::prelude::*;

pub struct RayonMapper {
    pool: rayon::ThreadPool,
}

impl RayonMapper {
    /// `threads = 0` uses one thread per available core.
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(RayonMapper { pool })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl PrimeMapper for RayonMapper {
    fn map_indices(&self, n: usize, f: &(dyn Fn(usize) -> Erased + Sync)) -> Vec<Erased> {
        self.pool.install(|| (0..n).into_par_iter().map(f).collect())
    }
}
