//! Scalar abstraction for mesh coordinates.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Coordinate scalar: `f32` or `f64`.
///
/// All geometric queries (areas, radii, volumes, dihedral angles) are generic
/// over this trait; the combinatorial side of the pipeline never touches it.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}
