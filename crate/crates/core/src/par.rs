//! Data-parallel loop helpers.
//!
//! With the `parallel` feature these run on the current rayon pool. Without
//! it every helper degrades to a plain sequential loop with one scratch
//! value, so the algorithms compile unchanged in both configurations.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs `f` with `threads` worker threads (0 = hardware parallelism).
///
/// In sequential builds the thread count is ignored.
pub fn install<R, F>(threads: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("failed to build thread pool");
        pool.install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

/// Number of worker threads the helpers will use right now.
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Whether the crate was built with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

/// Sums `f(scratch, i)` over `range`, giving every task its own scratch.
pub fn sum_with<S, I, F>(range: Range<usize>, init: I, f: F) -> u64
where
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map_init(init, |s, i| f(s, i)).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut s = init();
        range.map(|i| f(&mut s, i)).sum()
    }
}

/// Sums `f(i)` over `range`.
pub fn sum<F>(range: Range<usize>, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    sum_with(range, || (), |_, i| f(i))
}

/// Maps every index to a value, preserving index order in the output.
pub fn map_collect<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.map(f).collect()
    }
}

/// Calls `f(i)` for every index in `range`.
pub fn for_each<F>(range: Range<usize>, f: F)
where
    F: Fn(usize) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().for_each(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.for_each(f)
    }
}

/// Sorts a slice by key, in parallel when available. Keys must be unique
/// for the result to be deterministic.
pub fn sort_by_key<T, K, F>(items: &mut [T], key: F)
where
    T: Send,
    K: Ord,
    F: Fn(&T) -> K + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items.par_sort_unstable_by_key(key)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.sort_unstable_by_key(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_matches_sequential() {
        let total = install(4, || sum(0..1000, |i| i as u64));
        assert_eq!(total, 999 * 1000 / 2);
    }
}
