use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps, ToPrimitive};

/// Floating-point scalar the whole crate is generic over.
///
/// Everything downstream (graphs, eigensolves, LP, reports) works for any
/// type implementing this trait; `f64` is what the CLI and the tests use,
/// `f32` works when reduced precision is acceptable. Tolerances quoted in
/// the documentation assume `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Sum<Self>
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lift an `f64` constant into this scalar type.
    fn cast(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
