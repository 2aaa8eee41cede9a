//! Scalar abstraction for the numeric core.
//!
//! The centrality machinery is generic over [`Real`] so it runs at `f32` or
//! `f64`; the pipeline instantiates everything at the crate-level [`crate::Scalar`]
//! alias. Statistics and file ingestion stay at `f64`, where critical-value
//! tables and p-values live.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + Sum<Self> + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + Sum<T> + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts a count, panicking only if the scalar cannot hold it.
pub fn from_usize<R: Real>(n: usize) -> R {
    R::from_usize(n).expect("count representable in scalar")
}

/// Converts an `f64` constant into the working scalar.
pub fn from_f64<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("constant representable in scalar")
}
