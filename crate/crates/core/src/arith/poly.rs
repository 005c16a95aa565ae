use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::{format_rational, Field, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial in the summation index `n`, constant term first.
///
/// The coefficient vector never ends in an (exact) zero, so the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one_like(like: &F) -> Self {
        Self::constant(like.one_like())
    }

    /// `c0 + c1 n`.
    pub fn linear(c0: F, c1: F) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `n + shift`.
    pub fn n_plus(shift: F) -> Self {
        let one = shift.one_like();
        Self::linear(shift, one)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn eval(&self, v: &F) -> F {
        let mut acc = v.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * v.clone() + c.clone();
        }
        acc
    }

    /// `p(s n + t)`.
    pub fn compose_affine(&self, s: &F, t: &F) -> Self {
        let inner = Self::linear(t.clone(), s.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(n + t)`.
    pub fn shift(&self, t: &F) -> Self {
        self.compose_affine(&t.one_like(), t)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * c.int_like(i as i64))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![lead.zero_like(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd].clone() / lead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * d.clone();
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Division that must be exact; a nonzero remainder is an
    /// internal-consistency error naming `context`.
    pub fn exact_div(&self, divisor: &Self, context: &str) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::domain(alloc::format!("{context}: division by the zero polynomial")));
        }
        let (q, r) = self.div_rem(divisor);
        if r.coeffs.iter().all(|c| c.is_negligible()) {
            Ok(q)
        } else {
            Err(Error::consistency(alloc::format!(
                "{context}: division leaves a nonzero remainder"
            )))
        }
    }

    /// Rising factorial of a polynomial: `p (p+1) ... (p+j-1)`.
    pub fn pochhammer(&self, j: u64, like: &F) -> Self {
        let mut acc = Self::one_like(like);
        for i in 0..j {
            acc = &acc * &(self + &Self::constant(like.int_like(i as i64)));
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<Rational> {
    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `p = c * f_1 * f_2^2 * f_3^3 ...`.
    /// Returns the monic factors `(f_i, i)` of positive degree.
    pub fn square_free(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let mut a = self.gcd(&d);
        let mut b = self.div_rem(&a).0;
        let mut c = d.div_rem(&a).0;
        let mut i = 1;
        loop {
            let bprime = b.derivative();
            let diff = &c - &bprime;
            if diff.is_zero() {
                break;
            }
            a = b.gcd(&diff);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = diff.div_rem(&a).0;
            i += 1;
        }
        if b.degree().unwrap_or(0) > 0 {
            out.push((b.monic(), i));
        }
        out
    }

    /// Exact conversion to a numeric polynomial.
    pub fn to_approx(&self, precision_bits: u32) -> Polynomial<super::ApproxScalar> {
        self.map(|c| c.to_approx(precision_bits))
    }
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::new(out)
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

/// Human-readable form, highest degree first: `(1/6)n^2 + (5/6)n + 1`.
impl fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let body = if i > 0 && mag.is_one() {
                String::new()
            } else if mag.is_integer() {
                format_rational(&mag)
            } else {
                alloc::format!("({})", format_rational(&mag))
            };
            out.push_str(&body);
            match i {
                0 => {}
                1 => out.push('n'),
                _ => out.push_str(&alloc::format!("n^{i}")),
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&v| rat(v, 1)).collect())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
        assert_eq!(&p(&[2, 1]) * &p(&[3, 1]), p(&[6, 5, 1]));
        assert_eq!(p(&[0, 0, 1]).compose_affine(&rat(1, 1), &rat(-1, 1)), p(&[1, -2, 1]));
        assert_eq!(p(&[1, 2]).scale(&rat(1, 2)), Polynomial::new(vec![rat(1, 2), rat(1, 1)]));
    }

    #[test]
    fn evaluation_examples() {
        let q = p(&[6, 5, 1]);
        assert_eq!(q.eval(&rat(1, 1)), rat(12, 1));
        assert_eq!(q.eval(&rat(-2, 1)), rat(0, 1));
        assert_eq!(Polynomial::<Rational>::zero().eval(&rat(7, 1)), rat(0, 1));
    }

    #[test]
    fn exact_division() {
        let q = p(&[6, 5, 1]);
        assert_eq!(q.exact_div(&p(&[2, 1]), "t").unwrap(), p(&[3, 1]));
        assert!(matches!(q.exact_div(&p(&[1, 1]), "t"), Err(Error::Consistency(_))));
    }

    #[test]
    fn square_free_factors() {
        // (n+1)^2 (n+2)
        let q = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[2, 1]);
        let sf = q.square_free();
        assert_eq!(sf, vec![(p(&[2, 1]), 1), (p(&[1, 1]), 2)]);
    }

    #[test]
    fn display_form() {
        let q = Polynomial::new(vec![rat(1, 1), rat(5, 6), rat(1, 6)]);
        assert_eq!(q.to_string(), "(1/6)n^2 + (5/6)n + 1");
        assert_eq!(p(&[-3, 0, -1]).to_string(), "-n^2 - 3");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
