//! Numerical laboratory for symmetric function spaces built from Orlicz functions.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod counterexample;
pub mod error;
pub mod measure;
pub mod montecarlo;
pub mod numerics;
pub mod orlicz;
pub mod report;

pub use error::{Error, Result};
pub use measure::{Ambient, StepFunction};
pub use numerics::{Grid, LogScalar, QuadConfig};
pub use orlicz::{MfrakView, OrliczFunction};
