//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the `*_par` entry points fan out via
//! rayon when the workload is large enough; without it they alias the
//! sequential versions. Both are always available so benchmarks can compare.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many items the parallel entry points stay sequential; the
/// per-item work in this crate is coarse enough that tiny batches lose.
pub const PAR_THRESHOLD: usize = 16;

/// Sequential map-collect, kept as its own entry point for comparison.
pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
    T: Sync,
    U: Send,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
    T: Sync,
    U: Send,
{
    if items.len() < PAR_THRESHOLD {
        map_collect_seq(items, f)
    } else {
        items.par_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
    T: Sync,
    U: Send,
{
    map_collect_seq(items, f)
}
