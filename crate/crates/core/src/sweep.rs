//! Data-parallel sweeps over index ranges and item lists.
//!
//! With the `parallel` feature (on by default) the dispatching functions run
//! on the rayon pool; without it they fall back to the sequential versions.
//! Both variants are always exported so they can be benchmarked side by side.
//! Results are order-stable: the reported failure is always the smallest
//! failing index, whichever variant ran.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A failing index and its description.
pub type Failure = (u64, String);

pub fn first_failure_seq<F>(range: Range<u64>, check: F) -> Option<Failure>
where
    F: Fn(u64) -> Option<String>,
{
    range.into_iter().find_map(|k| check(k).map(|e| (k, e)))
}

#[cfg(feature = "parallel")]
pub fn first_failure_par<F>(range: Range<u64>, check: F) -> Option<Failure>
where
    F: Fn(u64) -> Option<String> + Sync + Send,
{
    range.into_par_iter().find_map_first(|k| check(k).map(|e| (k, e)))
}

/// Smallest `k` in `range` for which `check` reports a problem.
pub fn first_failure<F>(range: Range<u64>, check: F) -> Option<Failure>
where
    F: Fn(u64) -> Option<String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        first_failure_par(range, check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_failure_seq(range, check)
    }
}

pub fn map_range_seq<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    range.map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_range_par<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    range.into_par_iter().map(f).collect()
}

/// Evaluates `f` on every index, preserving order.
pub fn map_range<T, F>(range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_range_par(range, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_range_seq(range, f)
    }
}

/// First item (by position) for which `check` reports a problem.
pub fn first_failing_item<T, F>(items: &[T], check: F) -> Option<(usize, String)>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().enumerate().find_map_first(|(k, t)| check(t).map(|e| (k, e)))
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().enumerate().find_map(|(k, t)| check(t).map(|e| (k, e)))
    }
}
