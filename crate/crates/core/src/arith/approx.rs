//! Binary arbitrary-precision floats on top of `num-bigint`, and the complex
//! [`ApproxScalar`] used by numeric mode.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Rational};

/// Working precision used when the caller does not choose one.
pub const DEFAULT_PRECISION: u32 = 256;

/// `mantissa * 2^exponent`, rounded to `precision` significant bits.
///
/// The mantissa is kept odd (or zero, with exponent 0), so structural
/// equality coincides with numeric equality.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mantissa: BigInt,
    exponent: i64,
    precision: u32,
}

impl BigFloat {
    pub fn zero(precision: u32) -> Self {
        BigFloat {
            mantissa: BigInt::zero(),
            exponent: 0,
            precision,
        }
    }

    pub fn from_int(n: i64, precision: u32) -> Self {
        Self::normalize(BigInt::from(n), 0, precision)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Self::normalize(self.mantissa.clone(), self.exponent, precision)
    }

    fn normalize(mut mantissa: BigInt, mut exponent: i64, precision: u32) -> Self {
        if mantissa.is_zero() {
            return Self::zero(precision);
        }
        let bits = mantissa.bits();
        if bits > precision as u64 {
            let shift = bits - precision as u64;
            let negative = mantissa.is_negative();
            let mag = mantissa.abs();
            let mut q: BigInt = &mag >> shift;
            if mag.bit(shift - 1) {
                q += 1;
            }
            mantissa = if negative { -q } else { q };
            exponent += shift as i64;
        }
        if let Some(tz) = mantissa.trailing_zeros() {
            if tz > 0 {
                mantissa >>= tz;
                exponent += tz as i64;
            }
        }
        BigFloat {
            mantissa,
            exponent,
            precision,
        }
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        if Zero::is_zero(r) {
            return Self::zero(precision);
        }
        let num = r.numer();
        let den = r.denom();
        let shift = (precision as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0);
        let q = (num << shift as usize) / den;
        Self::normalize(q, -shift, precision)
    }

    /// Exact rational value of this float.
    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            Rational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mantissa: self.mantissa.abs(),
            ..self.clone()
        }
    }

    /// Position of the leading bit: `2^(top-1) <= |x| < 2^top`.
    /// Zero gets `i64::MIN`.
    pub fn top_bit(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + self.mantissa.bits() as i64
        }
    }

    /// `x * 2^k`, exact.
    pub fn ldexp(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat {
            exponent: self.exponent + k,
            ..self.clone()
        }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let want = 2 * self.precision as i64 + 4;
        let mut shift = (want - self.mantissa.bits() as i64).max(0);
        if (self.exponent - shift).is_odd() {
            shift += 1;
        }
        let m = &self.mantissa << shift as usize;
        Self::normalize(m.sqrt(), (self.exponent - shift) / 2, self.precision)
    }

    /// Integer truncation toward zero when the value is an exact integer.
    pub fn as_exact_integer(&self) -> Option<BigInt> {
        if self.exponent >= 0 {
            Some(&self.mantissa << self.exponent as usize)
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mantissa >> shift as usize).to_f64().unwrap_or(0.0);
        let e = self.exponent + shift;
        libm::ldexp(m, e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    pub fn from_f64(v: f64, precision: u32) -> Self {
        if v == 0.0 || !v.is_finite() {
            return Self::zero(precision);
        }
        let bits = v.to_bits();
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        let m = BigInt::from(m);
        Self::normalize(if v < 0.0 { -m } else { m }, e, precision)
    }

    /// Decimal scientific notation with `digits` significant digits.
    pub fn to_sci(&self, digits: usize) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let r = self.to_rational();
        let negative = r.is_negative();
        let r = r.abs();
        let mut e10 = libm::floor(self.abs().log10_estimate()) as i64;
        let ten = BigInt::from(10);
        let scaled = |e10: i64| -> BigInt {
            let shift = digits as i64 - 1 - e10;
            let v = if shift >= 0 {
                &r * Rational::from_integer(ten.pow(shift as u32))
            } else {
                &r / Rational::from_integer(ten.pow((-shift) as u32))
            };
            v.round().to_integer()
        };
        let mut m = scaled(e10);
        let limit = ten.pow(digits as u32);
        if m >= limit {
            e10 += 1;
            m = scaled(e10);
        } else if m < ten.pow(digits as u32 - 1) {
            e10 -= 1;
            m = scaled(e10);
        }
        let s = m.to_str_radix(10);
        let (head, tail) = s.split_at(1);
        let sign = if negative { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{e10}")
        } else {
            format!("{sign}{head}.{tail}e{e10}")
        }
    }

    fn log10_estimate(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mantissa >> shift as usize).to_f64().unwrap_or(1.0).abs();
        libm::log10(m) + (self.exponent + shift) as f64 * core::f64::consts::LOG10_2
    }

    fn prec2(&self, other: &Self) -> u32 {
        self.precision.max(other.precision)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.mantissa == other.mantissa && self.exponent == other.exponent
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = self.clone() - other.clone();
        Some(match d.mantissa.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        })
    }
}

impl Add for BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: BigFloat) -> BigFloat {
        let p = self.prec2(&rhs);
        if rhs.is_zero() {
            return self.with_precision(p);
        }
        if self.is_zero() {
            return rhs.with_precision(p);
        }
        let gap = self.top_bit() - rhs.top_bit();
        let slack = p as i64 + 4;
        if gap > slack {
            return self.with_precision(p);
        }
        if -gap > slack {
            return rhs.with_precision(p);
        }
        let e = self.exponent.min(rhs.exponent);
        let m = (&self.mantissa << (self.exponent - e) as usize)
            + (&rhs.mantissa << (rhs.exponent - e) as usize);
        BigFloat::normalize(m, e, p)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            mantissa: -self.mantissa,
            ..self
        }
    }
}

impl Sub for BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: BigFloat) -> BigFloat {
        self + (-rhs)
    }
}

impl Mul for BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: BigFloat) -> BigFloat {
        let p = self.prec2(&rhs);
        BigFloat::normalize(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent, p)
    }
}

impl Div for BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: BigFloat) -> BigFloat {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let p = self.prec2(&rhs);
        if self.is_zero() {
            return BigFloat::zero(p);
        }
        let shift =
            (p as i64 + 4 + rhs.mantissa.bits() as i64 - self.mantissa.bits() as i64).max(0);
        let q = (&self.mantissa << shift as usize) / &rhs.mantissa;
        BigFloat::normalize(q, self.exponent - rhs.exponent - shift, p)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(24).max(1);
        f.write_str(&self.to_sci(digits))
    }
}

/// Complex arbitrary-precision scalar (`re + i im`), the numeric counterpart
/// of [`Rational`].
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxScalar {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl ApproxScalar {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        ApproxScalar { re, im }
    }

    pub fn real(re: BigFloat) -> Self {
        let p = re.precision();
        ApproxScalar {
            re,
            im: BigFloat::zero(p),
        }
    }

    pub fn zero(precision: u32) -> Self {
        Self::real(BigFloat::zero(precision))
    }

    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        Self::real(BigFloat::from_rational(r, precision))
    }

    pub fn from_parts(re: &Rational, im: &Rational, precision: u32) -> Self {
        ApproxScalar {
            re: BigFloat::from_rational(re, precision),
            im: BigFloat::from_rational(im, precision),
        }
    }

    pub fn precision_bits(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    pub fn conj(&self) -> Self {
        ApproxScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt()
    }

    /// Real square root of a nonnegative real value.
    pub fn sqrt_real(&self) -> Self {
        Self::real(self.re.sqrt())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `2^(-bits)` at this scalar's precision.
    pub fn eps(&self, bits: u32) -> BigFloat {
        BigFloat::from_int(1, self.precision_bits()).ldexp(-(bits as i64))
    }

    /// `|self - other| <= tol`.
    pub fn within(&self, other: &Self, tol: &BigFloat) -> bool {
        (self.clone() - other.clone()).abs() <= *tol
    }
}

impl Add for ApproxScalar {
    type Output = ApproxScalar;
    fn add(self, rhs: Self) -> Self {
        ApproxScalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ApproxScalar {
    type Output = ApproxScalar;
    fn sub(self, rhs: Self) -> Self {
        ApproxScalar {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for ApproxScalar {
    type Output = ApproxScalar;
    fn neg(self) -> Self {
        ApproxScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for ApproxScalar {
    type Output = ApproxScalar;
    fn mul(self, rhs: Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            let p = self.precision_bits().max(rhs.precision_bits());
            return ApproxScalar::real(self.re * rhs.re).with_im_precision(p);
        }
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        ApproxScalar { re, im }
    }
}

impl Div for ApproxScalar {
    type Output = ApproxScalar;
    fn div(self, rhs: Self) -> Self {
        if rhs.im.is_zero() {
            let p = self.precision_bits().max(rhs.precision_bits());
            return ApproxScalar {
                re: self.re / rhs.re.clone(),
                im: self.im / rhs.re,
            }
            .with_im_precision(p);
        }
        let den = rhs.norm_sqr();
        let re = self.re.clone() * rhs.re.clone() + self.im.clone() * rhs.im.clone();
        let im = self.im * rhs.re - self.re * rhs.im;
        ApproxScalar {
            re: re / den.clone(),
            im: im / den,
        }
    }
}

impl ApproxScalar {
    fn with_im_precision(mut self, p: u32) -> Self {
        if self.im.is_zero() {
            self.im = BigFloat::zero(p);
        }
        self
    }
}

impl fmt::Display for ApproxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(24).max(1);
        if self.im.is_zero() {
            f.write_str(&self.re.to_sci(digits))
        } else if self.im.is_negative() {
            write!(f, "{} - {}i", self.re.to_sci(digits), self.im.abs().to_sci(digits))
        } else {
            write!(f, "{} + {}i", self.re.to_sci(digits), self.im.to_sci(digits))
        }
    }
}

impl Field for ApproxScalar {
    fn embed(&self, r: &Rational) -> Self {
        ApproxScalar::from_rational(r, self.precision_bits())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_negligible(&self) -> bool {
        let tol = self.eps(self.precision_bits() / 2);
        self.abs() <= tol
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if !self.im.is_zero() {
            return None;
        }
        if self.re.is_zero() {
            return Some(0);
        }
        let n = self.re.as_exact_integer()?;
        if n.is_negative() {
            (-n).to_u64()
        } else {
            None
        }
    }

    fn to_approx(&self, precision_bits: u32) -> ApproxScalar {
        ApproxScalar {
            re: self.re.with_precision(precision_bits),
            im: self.im.with_precision(precision_bits),
        }
    }

    fn precision(&self) -> Option<u32> {
        Some(self.precision_bits())
    }

    /// Square root of a nonnegative real value.
    fn sqrt(&self) -> Option<Self> {
        (self.is_real() && !self.re.is_negative()).then(|| self.sqrt_real())
    }
}
