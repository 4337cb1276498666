//! Execution strategy for the verification loops.
//!
//! Instance spaces are flat index ranges, so the only primitive needed is
//! "find the first index with a counterexample". With the `parallel`
//! feature (on by default) the range is split across a rayon pool;
//! `find_map_first` keeps the result identical to the sequential scan, so
//! reports are byte-for-byte reproducible at any thread count. Without the
//! feature everything runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to traverse an instance space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    /// Single-threaded scan.
    Sequential,
    /// Data-parallel scan on a rayon pool; `None` uses the default thread
    /// count. Falls back to sequential when the `parallel` feature is off.
    Parallel(Option<usize>),
}

impl Default for Parallelism {
    fn default() -> Self {
        Parallelism::Parallel(None)
    }
}

/// Returns `f(i)` for the smallest index `i` in `0..count` where it is
/// `Some`, scanning according to `mode`.
pub fn find_first<T, F>(count: u64, mode: Parallelism, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match mode {
        Parallelism::Sequential => (0..count).find_map(f),
        Parallelism::Parallel(threads) => find_first_parallel(count, threads, f),
    }
}

#[cfg(feature = "parallel")]
fn find_first_parallel<T, F>(count: u64, threads: Option<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match threads {
        None => (0..count).into_par_iter().find_map_first(f),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool construction");
            pool.install(|| (0..count).into_par_iter().find_map_first(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn find_first_parallel<T, F>(count: u64, _threads: Option<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    (0..count).find_map(f)
}
