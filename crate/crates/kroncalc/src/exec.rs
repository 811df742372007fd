//! Thin facade over the data-parallel inner loops.
//!
//! With the `parallel` feature the loops run on rayon; without it the same
//! entry points fall back to plain sequential iterators. Every reduction
//! used through this module is associative and commutative with a total
//! tie-break, so results are identical for any thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order-preserving map over an index range.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<U: Send>(len: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<U>(len: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..len).map(f).collect()
}

