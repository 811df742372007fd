//! Exact computations around Kronecker coefficients of the symmetric group.
//!
//! - [`partition`]: integer partitions with conjugate/sum/union/Durfee and
//!   constrained enumeration
//! - [`chartab`]: exact characters via the Murnaghan-Nakayama recursion,
//!   class sizes, hook-length dimensions, persistent memo cache
//! - [`symfunc`]: Kostka and skew Kostka numbers by Pieri chains,
//!   Littlewood-Richardson coefficients by lattice-word search
//! - [`kronecker`]: Kronecker coefficients by the class-wise character sum,
//!   full expansions and maximal-coefficient scanners
//! - [`bounds`]: explicit upper-bound formulas with exhaustive dominance
//!   checkers
//! - [`identities`]: numeric verification of Littlewood's identity, the
//!   triple Cauchy identity and the h/contingency-array identity
//! - [`certify`]: replayable monotonicity/conjugation lower-bound
//!   certificates and the special self-conjugate shapes
//!
//! All coefficient arithmetic is exact (big integers and big rationals);
//! no floating point is used anywhere in a verdict.

pub mod bounds;
pub mod certify;
pub mod chartab;
pub(crate) mod exec;
pub mod identities;
pub mod kronecker;
pub mod partition;
pub mod symfunc;

pub use chartab::CharStore;
pub use partition::Partition;

/// Default cap for operations that touch a full character table.
pub const DEFAULT_TABLE_MAX_N: u32 = 40;

/// Default cap for exhaustive triple scans and identity verifications.
pub const DEFAULT_SCAN_MAX_N: u32 = 14;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { inner: String, outer: String },
    #[error("feasibility guard: {what} needs n = {n} > {max} (raise the limit to override)")]
    GuardExceeded { what: String, n: u32, max: u32 },
    #[error("class sum for g({0}) is not a non-negative integer; character data is corrupt")]
    Integrality(String),
    #[error("no partition satisfies the requested constraints for n = {0}")]
    EmptyConstraintSet(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Uniform feasibility check: errors with [`Error::GuardExceeded`] when
/// `n` is over the limit.
pub fn guard(what: &str, n: u32, max: u32) -> Result<()> {
    if n > max {
        Err(Error::GuardExceeded {
            what: what.to_string(),
            n,
            max,
        })
    } else {
        Ok(())
    }
}

/// Runs `f` inside a thread pool of the given size (`None` = default pool).
///
/// Without the `parallel` feature the closure just runs on the current
/// thread and the requested size is ignored.
#[cfg(feature = "parallel")]
pub fn with_thread_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("failed to build thread pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_thread_pool<R: Send>(_threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}
