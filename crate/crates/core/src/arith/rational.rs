use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ApproxScalar, Field};
use crate::error::{Error, Result};

/// Exact rational scalar; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"` (optional sign, ASCII `-` or Unicode minus).
///
/// Decimal notation is rejected so that numeric input can never leak into
/// an exact computation.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim().replace('\u{2212}', "-");
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let bad = || Error::Parse(format!("`{text}` is not an exact rational of the form p or p/q"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let well_formed = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !well_formed(num, true) || !well_formed(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("`{text}` has a zero denominator")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Field for Rational {
    fn embed(&self, r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_negligible(&self) -> bool {
        Zero::is_zero(self)
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if self.is_integer() && !self.is_positive() {
            let m: BigInt = -self.numer();
            u64::try_from(m).ok()
        } else {
            None
        }
    }

    fn to_approx(&self, precision_bits: u32) -> ApproxScalar {
        ApproxScalar::from_rational(self, precision_bits)
    }

    /// Exact square root of a square rational.
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (p, q) = (self.numer().sqrt(), self.denom().sqrt());
        let r = Rational::new(p, q);
        (&r * &r == *self).then_some(r)
    }
}
