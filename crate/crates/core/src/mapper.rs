//! Per-prime work distribution.
//!
//! Per-prime computations are independent; a [`PrimeMapper`] decides how they
//! run. Results always come back in input order, so the merge that follows is
//! deterministic regardless of the strategy.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::any::Any;

pub type Erased = Box<dyn Any + Send>;

pub trait PrimeMapper: Sync {
    /// Evaluates `f(0), .., f(n-1)` and returns the results in index order.
    fn map_indices(&self, n: usize, f: &(dyn Fn(usize) -> Erased + Sync)) -> Vec<Erased>;
}

/// Runs everything on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl PrimeMapper for Sequential {
    fn map_indices(&self, n: usize, f: &(dyn Fn(usize) -> Erased + Sync)) -> Vec<Erased> {
        (0..n).map(f).collect()
    }
}

/// Typed front end over [`PrimeMapper::map_indices`].
pub fn map_primes<T, F>(mapper: &dyn PrimeMapper, primes: &[u64], f: F) -> Vec<T>
where
    T: Send + 'static,
    F: Fn(u64) -> T + Sync,
{
    let erased = mapper.map_indices(primes.len(), &|i| Box::new(f(primes[i])) as Erased);
    erased.into_iter().map(|b| *b.downcast::<T>().expect("mapper returns the closure's own results")).collect()
}
