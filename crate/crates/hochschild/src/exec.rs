//! Parallel/sequential execution switch.
//!
//! Everything here degrades to plain iteration when the `parallel` feature is
//! off, so the library builds without rayon in the dependency tree. With the
//! feature on (the default), the data-parallel paths use whatever rayon pool
//! is current — tests and benches can pin a single-thread pool via
//! [`run_single_threaded`] to measure the sequential code path without
//! rebuilding.

/// Maps `f` over `items` and collects the results in input order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

/// Maps `f` over `items` and collects the results in input order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Maps `f` over indices `0..len` and collects the results in order.
#[cfg(feature = "parallel")]
pub fn map_indices<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

/// Maps `f` over indices `0..len` and collects the results in order.
#[cfg(not(feature = "parallel"))]
pub fn map_indices<U, F>(len: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..len).map(f).collect()
}

/// True when any item satisfies the predicate.
#[cfg(feature = "parallel")]
pub fn any_index<F>(len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().any(f)
}

/// True when any item satisfies the predicate.
#[cfg(not(feature = "parallel"))]
pub fn any_index<F>(len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool,
{
    (0..len).any(f)
}

/// Runs `f` inside a one-thread rayon pool, forcing the `parallel` code paths
/// to execute sequentially. Useful for apples-to-apples benchmarks.
#[cfg(feature = "parallel")]
pub fn run_single_threaded<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool")
        .install(f)
}

/// Without the `parallel` feature everything is already sequential.
#[cfg(not(feature = "parallel"))]
pub fn run_single_threaded<R>(f: impl FnOnce() -> R) -> R {
    f()
}
