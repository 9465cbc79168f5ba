//! Exact arithmetic kernel: dyadic rationals, general fractions, and exact
//! integer determinants. Everything here is generic over the mantissa
//! integer type so the kernel can be exercised with machine integers in
//! tests while production code instantiates it with `BigInt`.

mod det;
mod dyadic;
mod frac;

pub use det::{det_bareiss, det_bigint};
pub use dyadic::Dyadic;
pub use frac::Frac;

use std::fmt;
use std::ops::{Shl, Shr};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Integer types usable as a dyadic mantissa or matrix entry.
///
/// Implemented by anything with exact ring arithmetic, parity, sign and
/// bit shifts; in practice `i64` (kernel tests) and `BigInt` (everything
/// else).
pub trait Mantissa:
    Integer
    + Signed
    + Clone
    + fmt::Debug
    + fmt::Display
    + FromPrimitive
    + Shl<u32, Output = Self>
    + Shr<u32, Output = Self>
{
}

impl<T> Mantissa for T where
    T: Integer
        + Signed
        + Clone
        + fmt::Debug
        + fmt::Display
        + FromPrimitive
        + Shl<u32, Output = Self>
        + Shr<u32, Output = Self>
{
}
