//! Verification reports and coefficient-sequence comparison.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::{BigFloat, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// Numeric comparison at the given working precision in bits.
    Numeric(u32),
}

impl Mode {
    pub fn of<F: Field>(like: &F) -> Mode {
        match like.precision() {
            None => Mode::Exact,
            Some(bits) => Mode::Numeric(bits),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric(_) => "numeric",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub k: Option<u32>,
    pub params: Vec<(String, String)>,
    pub order: Option<usize>,
    pub mode: Mode,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
    /// Largest `|lhs − rhs|` over the compared values (numeric mode only).
    pub max_abs_diff: Option<BigFloat>,
    pub seed: Option<u64>,
    pub elapsed_ms: Option<u64>,
    /// Size parameter `N` of summation cases.
    pub big_n: Option<u64>,
    pub m: Option<u64>,
    pub variant: Option<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, mode: Mode) -> Self {
        VerificationReport {
            identity: identity.into(),
            k: None,
            params: Vec::new(),
            order: None,
            mode,
            pass: true,
            first_mismatch: None,
            max_abs_diff: None,
            seed: None,
            elapsed_ms: None,
            big_n: None,
            m: None,
            variant: None,
        }
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn with_param<F: Field>(mut self, name: &str, v: &F) -> Self {
        self.params.push((name.to_string(), v.to_string()));
        self
    }

    pub fn with_variant(mut self, v: impl Into<String>) -> Self {
        self.variant = Some(v.into());
        self
    }

    pub fn with_sizes(mut self, big_n: Option<u64>, m: Option<u64>) -> Self {
        self.big_n = big_n;
        self.m = m;
        self
    }

    /// Fold the comparison of two value sequences into the report.
    pub fn compare<F: Field>(mut self, lhs: &[F], rhs: &[F]) -> Self {
        let c = compare_values(lhs, rhs);
        self.pass = self.pass && c.pass;
        if self.first_mismatch.is_none() {
            self.first_mismatch = c.first_mismatch;
        }
        self.max_abs_diff = match (self.max_abs_diff.take(), c.max_abs_diff) {
            (Some(x), Some(y)) => Some(if x < y { y } else { x }),
            (x, y) => x.or(y),
        };
        self
    }
}

pub struct Comparison {
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
    pub max_abs_diff: Option<BigFloat>,
}

/// Relative threshold `10^(−0.15·bits)` used in numeric mode.
pub fn numeric_tolerance(bits: u32) -> BigFloat {
    let e = (bits as f64 * 0.15 * core::f64::consts::LOG2_10) as i64;
    BigFloat::from_int(1, bits).ldexp(-e)
}

/// Element-wise comparison. Exact fields require zero differences; numeric
/// ones accept `|d| ≤ tol · (1 + |lhs|)`.
pub fn compare_values<F: Field>(lhs: &[F], rhs: &[F]) -> Comparison {
    let mut out = Comparison { pass: true, first_mismatch: None, max_abs_diff: None };
    if lhs.len() != rhs.len() {
        out.pass = false;
        out.first_mismatch = Some(Mismatch {
            index: lhs.len().min(rhs.len()),
            lhs: format!("{} values", lhs.len()),
            rhs: format!("{} values", rhs.len()),
        });
        return out;
    }
    let bits = lhs.first().and_then(Field::precision);
    let tol = bits.map(numeric_tolerance);
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        let d = l.clone() - r.clone();
        let ok = match (bits, &tol) {
            (Some(bits), Some(tol)) => {
                let mag = d.to_approx(bits).abs();
                let scale = l.to_approx(bits).abs() + BigFloat::from_int(1, bits);
                let ok = mag <= tol.clone() * scale;
                out.max_abs_diff = Some(match out.max_abs_diff.take() {
                    Some(m) if m >= mag => m,
                    _ => mag,
                });
                ok
            }
            _ => d.is_zero(),
        };
        if !ok {
            out.pass = false;
            if out.first_mismatch.is_none() {
                out.first_mismatch = Some(Mismatch { index: i, lhs: l.to_string(), rhs: r.to_string() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ApproxScalar};

    #[test]
    fn exact_and_numeric() {
        let a = [rat(1, 2), rat(3, 1)];
        let b = [rat(1, 2), rat(4, 1)];
        let c = compare_values(&a, &b);
        assert!(!c.pass);
        assert_eq!(c.first_mismatch.unwrap().index, 1);
        assert!(compare_values(&a, &a).pass);

        let x = ApproxScalar::from_rational(&rat(1, 3), 256);
        let y = x.clone() + ApproxScalar::real(x.eps(200));
        let c = compare_values(core::slice::from_ref(&x), &[y]);
        assert!(c.pass);
        assert!(c.max_abs_diff.unwrap() > BigFloat::zero(256));
        let z = x.clone() + ApproxScalar::from_rational(&rat(1, 1000), 256);
        assert!(!compare_values(&[x], &[z]).pass);
    }
}
