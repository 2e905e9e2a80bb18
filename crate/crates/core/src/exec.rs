//! Deterministic fan-out over index ranges. The chunking is fixed by the
//! input length, and partial results are folded in chunk order, so the
//! numeric result is identical whether or not the `parallel` feature is on.

use alloc::vec::Vec;

/// Map `f` over `0..n` and fold the outputs in index order.
pub fn map_fold<T, A, M, F>(n: usize, init: A, map: M, fold: F) -> A
where
    T: Send,
    A: Send,
    M: Fn(usize) -> T + Sync,
    F: Fn(A, T) -> A + Send,
{
    let outputs = map_collect(n, map);
    outputs.into_iter().fold(init, fold)
}

/// Map `f` over `0..n`, collecting outputs in index order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, M>(n: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(map).collect()
}

/// Map `f` over `0..n`, collecting outputs in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, M>(n: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(usize) -> T + Sync,
{
    (0..n).map(map).collect()
}
