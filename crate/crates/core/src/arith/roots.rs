//! Numeric root extraction: square-free splitting over the rationals, an
//! Aberth–Ehrlich pass in `f64` for starting values, then Aberth refinement
//! at the requested precision.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;

use super::{ApproxScalar, BigFloat, Field, Polynomial, Rational};
use crate::error::{Error, Result};

const GUARD_BITS: u32 = 64;
const F64_ITERATIONS: usize = 800;
const REFINE_ITERATIONS: usize = 200;

/// All complex roots of an exact polynomial, with multiplicity.
///
/// Each returned root satisfies `|p(r)| / |lc(p)| < 2^(-precision_bits/2)`.
/// Roots are sorted by real part, then imaginary part; non-real roots of
/// a real polynomial come in exact conjugate pairs.
pub fn poly_roots(p: &Polynomial<Rational>, precision_bits: u32) -> Result<Vec<ApproxScalar>> {
    let degree = match p.degree() {
        None => return Err(Error::domain("poly_roots: the zero polynomial has no finite root set")),
        Some(d) => d,
    };
    if degree == 0 {
        return Ok(Vec::new());
    }
    let work = precision_bits + GUARD_BITS;
    let mut roots = Vec::with_capacity(degree);
    for (factor, multiplicity) in p.square_free() {
        let simple = refine_all(&factor.to_approx(work), work)?;
        for r in simple {
            for _ in 0..multiplicity {
                roots.push(r.clone());
            }
        }
    }
    finish(&p.to_approx(work), roots, precision_bits)
}

/// Roots of a polynomial with numeric (possibly complex) coefficients.
///
/// Intended for polynomials whose roots are simple; clustered roots converge
/// slowly and may fail the residual check.
pub fn approx_roots(
    p: &Polynomial<ApproxScalar>,
    precision_bits: u32,
) -> Result<Vec<ApproxScalar>> {
    let degree = match p.degree() {
        None => return Err(Error::domain("approx_roots: the zero polynomial has no finite root set")),
        Some(d) => d,
    };
    if degree == 0 {
        return Ok(Vec::new());
    }
    let work = precision_bits + GUARD_BITS;
    let q = p.map(|c| c.to_approx(work));
    let roots = refine_all(&q, work)?;
    finish(&q, roots, precision_bits)
}

/// The rational roots of `p`, with multiplicity, recovered exactly: each
/// numeric real root is rounded to the nearest fraction whose denominator
/// divides the integer leading coefficient and confirmed by exact evaluation.
pub fn rational_roots(p: &Polynomial<Rational>) -> Result<Vec<Rational>> {
    use num_integer::Integer;
    let mut rest = p.clone();
    let mut out = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let den_lcm = rest
        .coeffs()
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let lead = rest.leading().expect("nonconstant").clone() * Rational::from_integer(den_lcm);
    let lead = lead.to_integer();
    let lead_abs = if lead < 0.into() { -lead } else { lead };
    let approx = poly_roots(p, 128)?;
    let one = Rational::from_integer(1.into());
    for r in approx {
        if !r.is_real() {
            continue;
        }
        let scaled = r.re.to_rational() * Rational::from_integer(lead_abs.clone());
        let candidate = scaled.round() / Rational::from_integer(lead_abs.clone());
        if Field::is_zero(&rest.eval(&candidate)) {
            let linear = Polynomial::linear(-candidate.clone(), one.clone());
            rest = rest.div_rem(&linear).0;
            out.push(candidate);
        }
    }
    out.sort();
    Ok(out)
}

fn is_real_poly(p: &Polynomial<ApproxScalar>) -> bool {
    p.coeffs().iter().all(|c| c.im.is_zero())
}

fn finish(
    p: &Polynomial<ApproxScalar>,
    mut roots: Vec<ApproxScalar>,
    precision_bits: u32,
) -> Result<Vec<ApproxScalar>> {
    let work = precision_bits + GUARD_BITS;
    if is_real_poly(p) {
        pair_conjugates(&mut roots, work);
    }
    let lead = p.leading().expect("nonconstant").abs();
    let tol = BigFloat::from_int(1, work).ldexp(-((precision_bits / 2) as i64));
    for r in &roots {
        let residual = p.eval(r).abs() / lead.clone();
        if residual >= tol {
            return Err(Error::consistency(alloc::format!(
                "root {r:.12} leaves residual {residual:.6} above 2^-{}",
                precision_bits / 2
            )));
        }
    }
    let mut out: Vec<ApproxScalar> = roots.iter().map(|r| r.to_approx(precision_bits)).collect();
    out.sort_by(|x, y| match x.re.partial_cmp(&y.re) {
        Some(Ordering::Equal) | None => x.im.partial_cmp(&y.im).unwrap_or(Ordering::Equal),
        Some(o) => o,
    });
    Ok(out)
}

/// Snap nearly real roots onto the axis and force the remaining ones into
/// exact conjugate pairs.
fn pair_conjugates(roots: &mut [ApproxScalar], work: u32) {
    let snap_bits = (work - GUARD_BITS / 2) as i64;
    for r in roots.iter_mut() {
        let scale = r.re.abs().top_bit().max(0);
        if !r.im.is_zero() && r.im.top_bit() < scale - snap_bits {
            r.im = BigFloat::zero(work);
        }
    }
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] || roots[i].im.is_zero() || roots[i].im.is_negative() {
            continue;
        }
        let target = roots[i].conj();
        let partner = (0..roots.len())
            .filter(|&j| j != i && !used[j] && roots[j].im.is_negative())
            .min_by(|&a, &b| {
                let da = (roots[a].clone() - target.clone()).norm_sqr();
                let db = (roots[b].clone() - target.clone()).norm_sqr();
                da.partial_cmp(&db).unwrap_or(Ordering::Equal)
            });
        if let Some(j) = partner {
            roots[j] = target;
            used[i] = true;
            used[j] = true;
        }
    }
}

fn to_c64(z: &ApproxScalar) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

fn from_c64(z: Complex64, work: u32) -> ApproxScalar {
    ApproxScalar::new(BigFloat::from_f64(z.re, work), BigFloat::from_f64(z.im, work))
}

fn horner_c64(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Starting values on a circle whose radius is the Fujiwara bound.
fn initial_guesses(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lead = c[d];
    let mut radius: f64 = 0.0;
    for (i, a) in c.iter().enumerate().take(d) {
        let ratio = (*a / lead).norm();
        if ratio > 0.0 {
            let mut r = libm::pow(ratio, 1.0 / (d - i) as f64);
            if i == 0 {
                r = libm::pow(ratio / 2.0, 1.0 / d as f64);
            }
            radius = radius.max(r);
        }
    }
    let radius = if radius > 0.0 { radius } else { 1.0 };
    (0..d)
        .map(|k| {
            let theta = 2.0 * core::f64::consts::PI * k as f64 / d as f64 + 0.4;
            Complex64::new(radius * libm::cos(theta), radius * libm::sin(theta))
        })
        .collect()
}

fn aberth_f64(c: &[Complex64]) -> Vec<Complex64> {
    let mut z = initial_guesses(c);
    let d = z.len();
    for _ in 0..F64_ITERATIONS {
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let (p, dp) = horner_c64(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                worst = worst.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Simultaneous refinement of all roots of `p` at `work` bits.
fn refine_all(p: &Polynomial<ApproxScalar>, work: u32) -> Result<Vec<ApproxScalar>> {
    let d = p.degree().expect("nonconstant");
    if d == 1 {
        let c = p.coeffs();
        return Ok(vec![-(c[0].clone() / c[1].clone())]);
    }
    let lead = p.leading().expect("nonconstant").clone();
    let cf: Vec<Complex64> = p.coeffs().iter().map(|c| to_c64(&(c.clone() / lead.clone()))).collect();
    let mut z: Vec<ApproxScalar> = aberth_f64(&cf).into_iter().map(|v| from_c64(v, work)).collect();
    let dp = p.derivative();
    let one = ApproxScalar::from_rational(&Rational::from_integer(1.into()), work);
    let target = -2 * (work as i64 - 8);
    for _ in 0..REFINE_ITERATIONS {
        let mut converged = true;
        for i in 0..d {
            let pv = p.eval(&z[i]);
            if pv.is_zero() {
                continue;
            }
            let dv = dp.eval(&z[i]);
            if dv.is_zero() {
                converged = false;
                continue;
            }
            let ratio = pv / dv;
            let mut s = ApproxScalar::zero(work);
            for j in 0..d {
                if j != i {
                    let diff = z[i].clone() - z[j].clone();
                    if !diff.is_zero() {
                        s = s + one.clone() / diff;
                    }
                }
            }
            let denom = one.clone() - ratio.clone() * s;
            let step = if denom.is_zero() { ratio } else { ratio / denom };
            z[i] = z[i].clone() - step.clone();
            let scale = 1 + z[i].norm_sqr().top_bit().max(0);
            if step.norm_sqr().top_bit() > target + scale {
                converged = false;
            }
        }
        if converged {
            return Ok(z);
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&v| rat(v, 1)).collect())
    }

    fn close(z: &ApproxScalar, re: Rational, im: Rational, bits: i64) -> bool {
        let t = ApproxScalar::from_parts(&re, &im, z.precision_bits());
        (z.clone() - t).abs() < BigFloat::from_int(1, z.precision_bits()).ldexp(-bits)
    }

    #[test]
    fn quadratic_with_integer_roots() {
        let r = poly_roots(&p(&[6, 5, 1]), 128).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(&r[0], rat(-3, 1), rat(0, 1), 100));
        assert!(close(&r[1], rat(-2, 1), rat(0, 1), 100));
    }

    #[test]
    fn rational_roots_are_exact() {
        // (2n - 1)(3n + 2)^2 (n^2 + 2)
        let q = Polynomial::new(vec![rat(-1, 1), rat(2, 1)]);
        let r = Polynomial::new(vec![rat(2, 1), rat(3, 1)]);
        let full = &(&q * &(&r * &r)) * &p(&[2, 0, 1]);
        assert_eq!(rational_roots(&full).unwrap(), vec![rat(-2, 3), rat(-2, 3), rat(1, 2)]);
    }

    #[test]
    fn constant_and_zero() {
        assert!(poly_roots(&p(&[1]), 128).unwrap().is_empty());
        assert!(matches!(poly_roots(&p(&[]), 128), Err(Error::Domain(_))));
    }

    #[test]
    fn conjugate_pair_and_repeated_root() {
        // (n^2 + 1)(n - 1)^3
        let q = &p(&[1, 0, 1]) * &(&(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[-1, 1]));
        let r = poly_roots(&q, 256).unwrap();
        assert_eq!(r.len(), 5);
        let nonreal: Vec<_> = r.iter().filter(|z| !z.is_real()).collect();
        assert_eq!(nonreal.len(), 2);
        assert_eq!(nonreal[0].conj(), *nonreal[1]);
        assert_eq!(r.iter().filter(|z| close(z, rat(1, 1), rat(0, 1), 200)).count(), 3);
    }
}
