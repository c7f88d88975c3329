//! Valuated matroids, M-convex functions (valuated discrete polymatroids),
//! and valuated bimatroids, with exact verification of log-concavity and
//! ultra-log-concavity of their weighted counting sequences.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely between worker threads. Exact
//! mode works over integer valuations and big-rational weights; relaxed mode
//! admits float valuations under a relative tolerance.

pub mod bimatroid;
pub mod error;
pub mod generators;
pub mod ground;
pub mod lorentzian;
pub mod matroid;
pub mod polymatroid;
pub mod report;
pub mod sequences;
pub mod value;

mod assignment;
mod table;

pub use error::{Error, Result};
