//! Truncated Laurent series in a small parameter `eps` over the rationals,
//! used to take limits such as `d -> oo` exactly (with `d = 1/eps`).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::{format_rational, ApproxScalar, Field, Rational};

/// Number of coefficients carried beyond the leading one.
const RELATIVE_TERMS: i64 = 12;
const EXACT: i64 = i64::MAX;

fn rzero() -> Rational {
    Rational::from_integer(0.into())
}

/// `eps^valuation * (c_0 + c_1 eps + ...) + O(eps^order)`.
///
/// The exact zero has `order == i64::MAX`; every other value carries at most
/// [`RELATIVE_TERMS`] coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl Laurent {
    pub fn constant(r: Rational) -> Self {
        if r.is_zero() {
            return Self::exact_zero();
        }
        let mut coeffs = vec![rzero(); RELATIVE_TERMS as usize];
        coeffs[0] = r;
        Laurent {
            valuation: 0,
            coeffs,
            order: RELATIVE_TERMS,
        }
    }

    fn exact_zero() -> Self {
        Laurent {
            valuation: EXACT,
            coeffs: Vec::new(),
            order: EXACT,
        }
    }

    /// `eps^k`.
    pub fn eps_pow(k: i64) -> Self {
        let mut c = Self::constant(Rational::from_integer(1.into()));
        c.valuation = k;
        c.order = k + RELATIVE_TERMS;
        c
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Coefficient of `eps^i`, or `None` if it lies beyond the known order.
    pub fn coefficient(&self, i: i64) -> Option<Rational> {
        if i >= self.order {
            return None;
        }
        if i < self.valuation {
            return Some(rzero());
        }
        Some(
            self.coeffs
                .get((i - self.valuation) as usize)
                .cloned()
                .unwrap_or_else(rzero),
        )
    }

    fn build(valuation: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        if order == EXACT && coeffs.iter().all(Field::is_zero) {
            return Self::exact_zero();
        }
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Laurent {
                valuation: order,
                coeffs: Vec::new(),
                order,
            },
            Some(s) => {
                coeffs.drain(..s);
                let valuation = valuation + s as i64;
                let order = order.min(valuation + RELATIVE_TERMS);
                coeffs.truncate((order - valuation) as usize);
                Laurent {
                    valuation,
                    coeffs,
                    order,
                }
            }
        }
    }

    fn is_exact_zero(&self) -> bool {
        self.order == EXACT
    }

    fn inverse(&self) -> Self {
        assert!(!self.coeffs.is_empty(), "Laurent division by zero");
        let n = self.coeffs.len();
        let c0 = self.coeffs[0].clone();
        let mut inv = vec![rzero(); n];
        inv[0] = Rational::from_integer(1.into()) / &c0;
        for i in 1..n {
            let mut s = rzero();
            for j in 1..=i {
                s += &self.coeffs[j] * &inv[i - j];
            }
            inv[i] = -s / &c0;
        }
        Laurent::build(-self.valuation, inv, -self.valuation + n as i64)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, rhs: Laurent) -> Laurent {
        if self.is_exact_zero() {
            return rhs;
        }
        if rhs.is_exact_zero() {
            return self;
        }
        let order = self.order.min(rhs.order);
        let valuation = self.valuation.min(rhs.valuation).min(order);
        let coeffs = (valuation..order)
            .map(|i| self.coefficient(i).unwrap() + rhs.coefficient(i).unwrap())
            .collect();
        Laurent::build(valuation, coeffs, order)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            ..self
        }
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return Laurent::exact_zero();
        }
        let valuation = self.valuation + rhs.valuation;
        let order = (self.order + rhs.valuation).min(rhs.order + self.valuation);
        let len = (order - valuation).max(0) as usize;
        let mut coeffs = vec![rzero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j < len {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Laurent::build(valuation, coeffs, order)
    }
}

impl Div for Laurent {
    type Output = Laurent;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Laurent) -> Laurent {
        self * rhs.inverse()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})eps^{}", format_rational(c), self.valuation + i as i64)?;
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(eps^{})", self.order)
    }
}

impl Field for Laurent {
    fn embed(&self, r: &Rational) -> Self {
        Laurent::constant(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_negligible(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if self.is_exact_zero() {
            return Some(0);
        }
        if self.valuation != 0 || self.coeffs.iter().skip(1).any(|c| !c.is_zero()) {
            return None;
        }
        self.coeffs[0].nonpositive_integer()
    }

    /// The `eps^0` coefficient, i.e. the limit value when the valuation is
    /// nonnegative.
    fn to_approx(&self, precision_bits: u32) -> ApproxScalar {
        ApproxScalar::from_rational(&self.coefficient(0).unwrap_or_else(rzero), precision_bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn limit_of_rational_function() {
        // (2d + 3)/(d - 1) -> 2 as d -> oo
        let d = Laurent::eps_pow(-1);
        let c = |r| Laurent::constant(r);
        let v = (c(rat(2, 1)) * d.clone() + c(rat(3, 1))) / (d - c(rat(1, 1)));
        assert_eq!(v.valuation(), 0);
        assert_eq!(v.coefficient(0), Some(rat(2, 1)));
        assert_eq!(v.coefficient(1), Some(rat(5, 1)));
    }

    #[test]
    fn cancellation_keeps_order() {
        let e = Laurent::eps_pow(1);
        let one = Laurent::constant(rat(1, 1));
        let v = (one.clone() + e.clone()) - one;
        assert_eq!(v.valuation(), 1);
        assert_eq!(v.coefficient(1), Some(rat(1, 1)));
        assert!(Laurent::constant(rat(0, 1)).is_zero());
    }
}
