//! Exact rationals, the [`Field`] abstraction shared by the exact and numeric
//! code paths, arbitrary-precision floats, polynomials and root extraction.

mod approx;
mod laurent;
mod poly;
mod rational;
mod roots;

pub use approx::{ApproxScalar, BigFloat, DEFAULT_PRECISION};
pub use laurent::Laurent;
pub use poly::Polynomial;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use roots::{approx_roots, poly_roots, rational_roots};

use core::fmt::{Debug, Display};
use core::ops::{Add, Div, Mul, Neg, Sub};

/// A commutative field of coefficients.
///
/// Implemented by [`Rational`] (exact), [`ApproxScalar`] (complex
/// arbitrary-precision floats) and [`Laurent`] (truncated Laurent series
/// over the rationals). Constants are created with [`Field::embed`], which
/// takes the precision of `self`, so generic code threads one "like" value
/// through.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embed a rational constant with the same precision/context as `self`.
    fn embed(&self, r: &Rational) -> Self;

    /// Exact zero test. Division by a value for which this is true panics.
    fn is_zero(&self) -> bool;

    /// Zero up to the working accuracy of the field (exact zero for rationals).
    fn is_negligible(&self) -> bool;

    /// `Some(m)` if the value is exactly the integer `-m` with `m >= 0`.
    fn nonpositive_integer(&self) -> Option<u64>;

    /// Numeric image of the value.
    fn to_approx(&self, precision_bits: u32) -> ApproxScalar;

    /// Working precision in bits, or `None` for exact fields.
    fn precision(&self) -> Option<u32> {
        None
    }

    /// A square root in the field, if one is representable.
    fn sqrt(&self) -> Option<Self> {
        None
    }

    fn zero_like(&self) -> Self {
        self.embed(&Rational::from_integer(0.into()))
    }

    fn one_like(&self) -> Self {
        self.embed(&Rational::from_integer(1.into()))
    }

    fn int_like(&self, n: i64) -> Self {
        self.embed(&Rational::from_integer(n.into()))
    }

    fn frac_like(&self, p: i64, q: i64) -> Self {
        self.embed(&rat(p, q))
    }

    /// Close to `other` in the sense of [`Field::is_negligible`].
    fn near(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_negligible()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

/// Rising factorial `(c)_n = c (c+1) ... (c+n-1)`, with `(c)_0 = 1`.
pub fn pochhammer<F: Field>(c: &F, n: u64) -> F {
    let mut acc = c.one_like();
    for i in 0..n {
        acc = acc * (c.clone() + c.int_like(i as i64));
    }
    acc
}

/// `n!` in the field of `like`.
pub fn factorial<F: Field>(like: &F, n: u64) -> F {
    pochhammer(&like.one_like(), n)
}
