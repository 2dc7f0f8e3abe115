//! Scalar fields the algebra is generic over.
//!
//! Exact computations run over the rationals ([`Rat`]) or the Gaussian
//! rationals ([`CRat`]); kinematics runs over `f64`. Everything downstream
//! (quaternions, split octonions, linear algebra) is generic over [`Scalar`].

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Div, Neg, Sub};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Gaussian rational: complex number with rational real and imaginary parts.
pub type CRat = Complex<Rat>;

/// A field with exact or floating-point arithmetic.
///
/// Implemented by `Rat`, `CRat`, and `f64` through the blanket impl. Division
/// must be exact for the exact types; callers never divide by zero (pivots are
/// checked before use).
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Display
    + Debug
{
    /// `n` as a field element.
    fn from_i64(n: i64) -> Self;
}

impl Scalar for Rat {
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
}

impl Scalar for CRat {
    fn from_i64(n: i64) -> Self {
        Complex::new(Rat::from_i64(n), Rat::zero())
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

/// Rational `p/q`; panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer rational `n`.
pub fn rint(n: i64) -> Rat {
    Rat::from_i64(n)
}

/// Gaussian rational `re + im*i` from integers.
pub fn crint(re: i64, im: i64) -> CRat {
    Complex::new(rint(re), rint(im))
}
