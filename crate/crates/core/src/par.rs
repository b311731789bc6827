//! Batch execution across independent instances.
//!
//! With the `parallel` feature (on by default) batches run on the rayon
//! thread pool; without it, or with [`Execution::Sequential`], they run in
//! order on the calling thread. Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::fatpoints::FatPointScheme;
use crate::segre::{verify_main_theorem, BoundReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can honour [`Execution::Parallel`].
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// `items.map(f)` in input order.
pub fn map_ordered<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// [`verify_main_theorem`] on every scheme.
pub fn verify_batch(exec: Execution, schemes: &[FatPointScheme]) -> Vec<Result<BoundReport>> {
    map_ordered(exec, schemes, verify_main_theorem)
}
