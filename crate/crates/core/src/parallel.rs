//! Parallel dispatch helpers.
//!
//! With the `parallel` feature the heavy kernels fan out over rayon; without
//! it the same closures run in a plain sequential loop. Work is always
//! partitioned over disjoint output slots (never reduced across threads), so
//! results are bitwise identical in both modes and for any thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

/// Runtime switch so benches and callers can force the sequential path
/// without rebuilding. Only meaningful when the `parallel` feature is on.
static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

/// Below this many output elements the rayon spawn/sync overhead exceeds
/// the work itself.
const MIN_PARALLEL_ELEMS: usize = 4096;

pub fn set_parallel(enabled: bool) {
    PARALLEL_ENABLED.store(enabled, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    #[cfg(feature = "parallel")]
    {
        PARALLEL_ENABLED.load(Ordering::Relaxed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        false
    }
}

/// Configure the global thread pool. `0` keeps the rayon default. Must be
/// called before any parallel work; later calls are ignored by rayon.
#[cfg(feature = "parallel")]
pub fn configure_threads(n: usize) {
    if n == 0 {
        return;
    }
    if n == 1 {
        set_parallel(false);
        return;
    }
    // Ignore the error: the pool can only be built once per process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_n: usize) {}

/// Apply `f` to every `chunk`-sized slice of `data`, passing the chunk index.
/// Chunks are disjoint, so this parallelizes without any reduction.
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Send + Sync,
{
    debug_assert!(chunk > 0);
    #[cfg(feature = "parallel")]
    if parallel_enabled() && data.len() >= MIN_PARALLEL_ELEMS && data.len() / chunk >= 2 {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
        return;
    }
    for (i, c) in data.chunks_mut(chunk).enumerate() {
        f(i, c);
    }
}

/// Apply `f` to every slot of `out`, passing the slot index. Used where each
/// output cell is an independent computation (heatmap cells, gram rows).
pub(crate) fn for_each_slot_mut<T, F>(out: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut T) + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() && out.len() >= 2 {
        out.par_iter_mut().enumerate().for_each(|(i, v)| f(i, v));
        return;
    }
    for (i, v) in out.iter_mut().enumerate() {
        f(i, v);
    }
}
