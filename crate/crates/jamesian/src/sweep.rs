//! Max-reductions and ordered maps over index ranges.
//!
//! Grid and triple sweeps are data-parallel: every index is evaluated
//! independently and results are merged by a max-reduction keyed on
//! `(value, index)` with the smaller index winning ties, so the outcome does
//! not depend on evaluation order. With the `parallel` feature (default) the
//! sweeps run on rayon; the `_seq` variants are always available and are the
//! fallback when the feature is disabled.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Non-finite residuals sort above everything so that a NaN produced by a
/// broken evaluator surfaces as the worst case instead of vanishing.
fn key(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

fn pick(a: (usize, f64), b: (usize, f64)) -> (usize, f64) {
    let (ka, kb) = (key(a.1), key(b.1));
    if kb > ka || (kb == ka && b.0 < a.0) {
        b
    } else {
        a
    }
}

/// Index and value of the maximum of `eval` over `0..n` (ties break toward
/// the smaller index). Returns `None` when `n == 0`.
pub fn scan_max_seq<F>(n: usize, eval: F) -> Option<(usize, f64)>
where
    F: Fn(usize) -> f64,
{
    (0..n).map(|i| (i, eval(i))).reduce(pick)
}

/// Parallel version of [`scan_max_seq`]; identical result by construction.
#[cfg(feature = "parallel")]
pub fn scan_max<F>(n: usize, eval: F) -> Option<(usize, f64)>
where
    F: Fn(usize) -> f64 + Send + Sync,
{
    (0..n).into_par_iter().map(|i| (i, eval(i))).reduce_with(pick)
}

#[cfg(not(feature = "parallel"))]
pub fn scan_max<F>(n: usize, eval: F) -> Option<(usize, f64)>
where
    F: Fn(usize) -> f64 + Send + Sync,
{
    scan_max_seq(n, eval)
}

/// First index in `0..n` satisfying `pred`.
pub fn find_first_seq<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool,
{
    (0..n).find(|&i| pred(i))
}

/// Parallel leftmost match; agrees with [`find_first_seq`].
#[cfg(feature = "parallel")]
pub fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Send + Sync,
{
    (0..n).into_par_iter().find_first(|&i| pred(i))
}

#[cfg(not(feature = "parallel"))]
pub fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Send + Sync,
{
    find_first_seq(n, pred)
}

/// Ordered map over `0..n`.
pub fn map_collect_seq<T, F>(n: usize, eval: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(eval).collect()
}

/// Parallel ordered map; output order matches the sequential version.
#[cfg(feature = "parallel")]
pub fn map_collect<T, F>(n: usize, eval: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    (0..n).into_par_iter().map(eval).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, F>(n: usize, eval: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    map_collect_seq(n, eval)
}
