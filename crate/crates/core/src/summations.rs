//! Terminating summation identities: Sheppard–Andersen and Whipple
//! transformations, the `R` forms, the residue-composition pairing of a
//! transformation with its companion, the extended Whipple and Bailey sums,
//! and the extended Kummer evaluation at `x = −1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{pochhammer, ApproxScalar, BigFloat, Field, Laurent, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hyperseries::{check_lower_parameters, eval_numeric, series_coefficients, terminating_sum, WeightedSeries};
use crate::qpoly::{bold_q, p_poly, q_poly, BoldFamily, QFamily};
use crate::report::{compare_values, Mode, VerificationReport};
use crate::transforms::{Params, TransformIdentity};

fn half<F: Field>(v: &F) -> F {
    v.clone() / v.int_like(2)
}

/// Sum of a series meant to run through `n = terms`.
fn checked_sum<F: Field>(s: &WeightedSeries<F>, terms: u64) -> Result<F> {
    check_lower_parameters(s, Some(terms))?;
    terminating_sum(s)
}

fn sum<F: Field>(upper: Vec<F>, lower: Vec<F>, like: &F, terms: u64) -> Result<F> {
    checked_sum(&WeightedSeries::new(upper, lower, like), terms)
}

/// `Π(top)_n / Π(bottom)_n`, rejecting vanishing denominators.
fn poch_ratio<F: Field>(top: &[F], bottom: &[F], n: u64, like: &F) -> Result<F> {
    let num = top.iter().fold(like.one_like(), |acc, t| acc * pochhammer(t, n));
    let den = bottom.iter().fold(like.one_like(), |acc, t| acc * pochhammer(t, n));
    if den.is_zero() {
        return Err(Error::domain("Pochhammer prefactor has a vanishing denominator"));
    }
    Ok(num / den)
}

fn report<F: Field>(identity: &str, like: &F, params: &[(&str, &F)]) -> VerificationReport {
    let mut r = VerificationReport::new(identity, Mode::of(like));
    for (n, v) in params {
        r = r.with_param(n, *v);
    }
    r
}

/// `3F2[−n, A, B; D, E] = [(D−A, E−A)/(D, E)]_n 3F2[−n, A, 1−S; 1+A−D−n, 1+A−E−n]`
/// with `S = n − A − B + D + E`.
pub fn verify_sheppard<F: Field>(n: u64, a: &F, b: &F, d: &F, e: &F) -> Result<VerificationReport> {
    let one = a.one_like();
    let nn = a.int_like(n as i64);
    let s = nn.clone() - a.clone() - b.clone() + d.clone() + e.clone();
    let lhs = sum(vec![-nn.clone(), a.clone(), b.clone()], vec![d.clone(), e.clone()], a, n)?;
    let pre = poch_ratio(&[d.clone() - a.clone(), e.clone() - a.clone()], &[d.clone(), e.clone()], n, a)?;
    let rhs = pre
        * sum(
            vec![-nn.clone(), a.clone(), one.clone() - s],
            vec![one.clone() + a.clone() - d.clone() - nn.clone(), one + a.clone() - e.clone() - nn],
            a,
            n,
        )?;
    Ok(report("sheppard", a, &[("A", a), ("B", b), ("D", d), ("E", e)])
        .with_sizes(Some(n), None)
        .compare(&[lhs], &[rhs]))
}

/// Whipple's transformation of a 1-balanced terminating `4F3(1)`. `F` is
/// solved from the balance condition when not given.
pub fn verify_whipple43<F: Field>(
    n: u64,
    a: &F,
    b: &F,
    c: &F,
    d: &F,
    e: &F,
    f: Option<&F>,
) -> Result<VerificationReport> {
    let one = a.one_like();
    let nn = a.int_like(n as i64);
    let balanced = one.clone() - nn.clone() + a.clone() + b.clone() + c.clone() - d.clone() - e.clone();
    let f = match f {
        Some(f) if !f.near(&balanced) => {
            return Err(Error::domain("whipple43: parameters are not 1-balanced"));
        }
        Some(f) => f.clone(),
        None => balanced,
    };
    let lhs = sum(
        vec![-nn.clone(), a.clone(), b.clone(), c.clone()],
        vec![d.clone(), e.clone(), f.clone()],
        a,
        n,
    )?;
    let pre = poch_ratio(&[d.clone() - a.clone(), e.clone() - a.clone()], &[d.clone(), e.clone()], n, a)?;
    let rhs = pre
        * sum(
            vec![-nn.clone(), a.clone(), f.clone() - b.clone(), f.clone() - c.clone()],
            vec![
                one.clone() + a.clone() - d.clone() - nn.clone(),
                one + a.clone() - e.clone() - nn,
                f.clone(),
            ],
            a,
            n,
        )?;
    Ok(report("whipple43", a, &[("A", a), ("B", b), ("C", c), ("D", d), ("E", e), ("F", &f)])
        .with_sizes(Some(n), None)
        .compare(&[lhs], &[rhs]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RFamily {
    R2,
    R3,
}

/// The two expressions for `R(n)` and, for `R3`, the reduction of the
/// Pochhammer prefactor; both are also compared with `q_poly`.
pub fn verify_r_forms<F: Field>(
    family: RFamily,
    n: u64,
    k: u32,
    a: &F,
    b: &F,
    c: Option<&F>,
) -> Result<VerificationReport> {
    let one = a.one_like();
    let nn = a.int_like(n as i64);
    let kk = a.int_like(k as i64);
    match family {
        RFamily::R2 => {
            let c = c.ok_or_else(|| Error::Parse("R2 needs c".into()))?;
            let lower = vec![one.clone() + a.clone() - b.clone(), one.clone() + a.clone() - c.clone()];
            let first = sum(
                vec![-nn.clone(), nn.clone() + a.clone(), one.clone() - kk.clone() + a.clone() - b.clone() - c.clone()],
                lower.clone(),
                a,
                n,
            )?;
            let inner = sum(vec![-nn.clone(), nn.clone() + a.clone(), -kk], vec![b.clone(), c.clone()], a, n.min(k as u64))?;
            let pre = poch_ratio(&[b.clone(), c.clone()], &lower, n, a)?;
            let q = q_poly(&QFamily::q2(k, a.clone(), b.clone(), c.clone()))?.eval(&nn);
            Ok(report("R2", a, &[("a", a), ("b", b), ("c", c)])
                .with_k(k)
                .with_sizes(Some(n), None)
                .compare(&[first, inner], &[pre * q.clone(), q]))
        }
        RFamily::R3 => {
            let hb = half(b);
            let dl = a.frac_like(3, 4) + half(&kk) + half(a);
            let lower = vec![dl.clone() + hb.clone(), dl - hb.clone()];
            let first = sum(
                vec![-nn.clone(), half(&nn) + half(a), half(&nn) + half(&one) + half(a)],
                lower.clone(),
                a,
                n,
            )?;
            let base = a.frac_like(1, 4) - half(&kk) - half(&nn);
            let inner = sum(
                vec![-nn.clone(), half(&nn) + half(a), -kk.clone()],
                vec![base.clone() + hb.clone(), base.clone() - hb.clone()],
                a,
                n.min(k as u64),
            )?;
            let top = a.frac_like(3, 4) + half(&kk) - half(&nn);
            let pre = poch_ratio(&[top.clone() + hb.clone(), top - hb.clone()], &lower, n, a)?;
            // 4^(−n) [(1/2−k∓b)/(δ)]_n · 4^k (X)_k (Y)_k / ((1/2+b)_k (1/2−b)_k)
            let g = half(&one) - kk.clone();
            let quarter_n = a.frac_like(1, 4).pow(n as u32);
            let reduced_den = pochhammer(&(half(&one) + b.clone()), k as u64) * pochhammer(&(half(&one) - b.clone()), k as u64);
            if reduced_den.is_zero() {
                return Err(Error::domain("(1/2+b)_k (1/2−b)_k vanishes"));
            }
            let reduced = quarter_n
                * poch_ratio(&[g.clone() - b.clone(), g + b.clone()], &lower, n, a)?
                * a.int_like(4).pow(k)
                * pochhammer(&(base.clone() + hb.clone()), k as u64)
                * pochhammer(&(base - hb), k as u64)
                / reduced_den;
            let q = q_poly(&QFamily::q3(k, a.clone(), b.clone()))?.eval(&nn);
            let via_q = a.frac_like(1, 4).pow(n as u32)
                * poch_ratio(
                    &[half(&one) - a.int_like(k as i64) - b.clone(), half(&one) - a.int_like(k as i64) + b.clone()],
                    &lower,
                    n,
                    a,
                )?
                * q;
            Ok(report("R3", a, &[("a", a), ("b", b)])
                .with_k(k)
                .with_sizes(Some(n), None)
                .compare(&[first.clone(), pre.clone(), first], &[pre * inner, reduced, via_q]))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    I,
    II,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::I => "i",
            Variant::II => "ii",
        }
    }
}

/// Parameters of the finite very-well-poised sum.
#[derive(Clone, Debug, PartialEq)]
pub struct WhippleParams<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
    /// Present for variant (ii).
    pub f: Option<F>,
}

/// The unweighted very-well-poised core
/// `[a, 1+a/2, b, c, d, e, −N; a/2, 1+a−b, 1+a−c, 1+a−d, 1+a−e, 1+a+N]`.
pub fn ext_whipple_core<F: Field>(p: &WhippleParams<F>, big_n: u64) -> WeightedSeries<F> {
    let a = &p.a;
    let one = a.one_like();
    let nn = a.int_like(big_n as i64);
    let up = one.clone() + a.clone();
    WeightedSeries::new(
        vec![a.clone(), one + half(a), p.b.clone(), p.c.clone(), p.d.clone(), p.e.clone(), -nn.clone()],
        vec![
            half(a),
            up.clone() - p.b.clone(),
            up.clone() - p.c.clone(),
            up.clone() - p.d.clone(),
            up.clone() - p.e.clone(),
            up + nn,
        ],
        a,
    )
}

/// Both sides of the extended Whipple sum, as `(lhs, rhs)`.
pub fn ext_whipple_sides<F: Field>(k: u32, big_n: u64, p: &WhippleParams<F>) -> Result<(F, F)> {
    let a = &p.a;
    if half(a).nonpositive_integer().is_some() {
        return Err(Error::domain("a/2 is a nonpositive integer"));
    }
    let one = a.one_like();
    let nn = a.int_like(big_n as i64);
    let kk = a.int_like(k as i64);
    let shift = a.clone() + nn.clone();
    let mut fam = QFamily::q2(
        k,
        -a.clone() - nn.clone() - nn.clone(),
        p.d.clone() - shift.clone(),
        p.e.clone() - shift.clone(),
    );
    if let Some(f) = &p.f {
        fam = fam.with_d(f.clone() - shift);
    }
    let q = q_poly(&fam)?;
    let qn = q.eval(&nn);
    if qn.is_zero() {
        return Err(Error::domain("Q_k(N) vanishes"));
    }
    let r = q.compose_affine(&-one.clone(), &nn).scale(&(one.clone() / qn.clone()));
    let lhs = checked_sum(&ext_whipple_core(p, big_n).with_weight(r)?, big_n)?;

    let up = one.clone() + a.clone();
    let mut top = vec![up.clone(), one.clone() - kk.clone() + a.clone() - p.d.clone() - p.e.clone()];
    let mut bottom = vec![up.clone() - p.d.clone(), up.clone() - p.e.clone()];
    let mut upper = vec![up.clone() - p.b.clone() - p.c.clone(), p.d.clone(), p.e.clone(), -nn.clone()];
    let mut lower = vec![
        up.clone() - p.b.clone(),
        up.clone() - p.c.clone(),
        kk.clone() - a.clone() + p.d.clone() + p.e.clone() - nn,
    ];
    if let Some(f) = &p.f {
        top.push(one.clone() - kk.clone() + a.clone() - f.clone());
        bottom.push(up.clone() - f.clone());
        upper.push(up.clone() - f.clone());
        lower.push(one - kk + a.clone() - f.clone());
    }
    let rhs = poch_ratio(&top, &bottom, big_n, a)? / qn * sum(upper, lower, a, big_n)?;
    Ok((lhs, rhs))
}

/// The finite `7+2k F 6+2k (1)` sum with weight `Q_k(N−n)/Q_k(N)` against
/// the balanced `4F3(1)` (variant i) or `5F4(1)` (variant ii).
pub fn verify_ext_whipple<F: Field>(
    variant: Variant,
    k: u32,
    big_n: u64,
    p: &WhippleParams<F>,
) -> Result<VerificationReport> {
    match (variant, &p.f) {
        (Variant::I, Some(_)) => return Err(Error::Parse("variant i takes no f".into())),
        (Variant::II, None) => return Err(Error::Parse("variant ii needs f".into())),
        _ => {}
    }
    let (lhs, rhs) = ext_whipple_sides(k, big_n, p)?;
    let mut params = vec![("a", &p.a), ("b", &p.b), ("c", &p.c), ("d", &p.d), ("e", &p.e)];
    if let Some(f) = &p.f {
        params.push(("f", f));
    }
    Ok(report("ext_whipple", &p.a, &params)
        .with_k(k)
        .with_variant(variant.name())
        .with_sizes(Some(big_n), None)
        .compare(&[lhs], &[rhs]))
}

/// Variant (ii) at `f = 1/ε` as a Laurent series in `ε`: both sides must be
/// regular at `ε = 0` with constant terms equal to the two sides of variant (i).
pub fn verify_ext_whipple_limit(k: u32, big_n: u64, p: &WhippleParams<Rational>) -> Result<VerificationReport> {
    let lift = |r: &Rational| Laurent::constant(r.clone());
    let lp = WhippleParams {
        a: lift(&p.a),
        b: lift(&p.b),
        c: lift(&p.c),
        d: lift(&p.d),
        e: lift(&p.e),
        f: Some(Laurent::eps_pow(-1)),
    };
    let (l2, r2) = ext_whipple_sides(k, big_n, &lp)?;
    let base = WhippleParams { f: None, ..p.clone() };
    let (l1, r1) = ext_whipple_sides(k, big_n, &base)?;
    let regular = l2.valuation() >= 0 && r2.valuation() >= 0;
    let zero = Rational::from_integer(0.into());
    let c0 = |v: &Laurent| v.coefficient(0).unwrap_or_else(|| zero.clone());
    let mut r = report(
        "ext_whipple_limit",
        &p.a,
        &[("a", &p.a), ("b", &p.b), ("c", &p.c), ("d", &p.d), ("e", &p.e)],
    )
    .with_k(k)
    .with_variant("ii->i")
    .with_sizes(Some(big_n), None)
    .compare(&[c0(&l2), c0(&r2)], &[l1, r1]);
    r.pass = r.pass && regular;
    Ok(r)
}

/// Parameters of the Bailey-type sums.
#[derive(Clone, Debug, PartialEq)]
pub struct BaileyParams<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub w: F,
    /// Present for variant (ii) of the first sum.
    pub d: Option<F>,
}

/// Left-hand series of the first Bailey-type sum.
pub fn bailey1_lhs<F: Field>(k: u32, m: u64, p: &BaileyParams<F>) -> WeightedSeries<F> {
    let a = &p.a;
    let one = a.one_like();
    let mm = a.int_like(m as i64);
    let kk = a.int_like(k as i64);
    let t = half(&(a.clone() - p.w.clone() - mm.clone()));
    let mut upper = vec![
        half(a),
        half(&one) + half(a),
        one.clone() - kk.clone() + a.clone() - p.b.clone() - p.c.clone(),
        one.clone() + a.clone() - p.w.clone(),
        -mm,
    ];
    let mut lower = vec![
        one.clone() + a.clone() - p.b.clone(),
        one.clone() + a.clone() - p.c.clone(),
        half(&one) + t.clone(),
        one + t,
    ];
    if let Some(d) = &p.d {
        upper.push(d.clone() + kk);
        lower.push(d.clone());
    }
    WeightedSeries::new(upper, lower, a)
}

pub fn verify_bailey1<F: Field>(variant: Variant, k: u32, m: u64, p: &BaileyParams<F>) -> Result<VerificationReport> {
    match (variant, &p.d) {
        (Variant::I, Some(_)) => return Err(Error::Parse("variant i takes no d".into())),
        (Variant::II, None) => return Err(Error::Parse("variant ii needs d".into())),
        _ => {}
    }
    let a = &p.a;
    let one = a.one_like();
    let lhs = checked_sum(&bailey1_lhs(k, m, p), m)?;
    let mut fam = QFamily::q2(k, a.clone(), p.b.clone(), p.c.clone());
    if let Some(d) = &p.d {
        fam = fam.with_d(d.clone());
    }
    let rhs_series = WeightedSeries::new(
        vec![a.clone(), p.b.clone(), p.c.clone(), -a.int_like(m as i64)],
        vec![one.clone() + a.clone() - p.b.clone(), one + a.clone() - p.c.clone(), p.w.clone()],
        a,
    )
    .with_weight(q_poly(&fam)?)?;
    let rhs = poch_ratio(core::slice::from_ref(&p.w), &[p.w.clone() - a.clone()], m, a)? * checked_sum(&rhs_series, m)?;
    let mut params = vec![("a", a), ("b", &p.b), ("c", &p.c), ("w", &p.w)];
    if let Some(d) = &p.d {
        params.push(("d", d));
    }
    Ok(report("bailey1", a, &params)
        .with_k(k)
        .with_variant(variant.name())
        .with_sizes(None, Some(m))
        .compare(&[lhs], &[rhs]))
}

/// Left-hand series of the second Bailey-type sum, weighted by
/// `P_k(n; 1+a−w, −m)` (exempt from the `Q(0) = 1` convention).
pub fn bailey2_lhs<F: Field>(k: u32, m: u64, p: &BaileyParams<F>) -> WeightedSeries<F> {
    let a = &p.a;
    let one = a.one_like();
    let mm = a.int_like(m as i64);
    let kk = a.int_like(k as i64);
    let t = half(&(a.clone() - p.w.clone() + kk.clone() + kk.clone() - mm.clone()));
    let big_a = one.clone() + a.clone() - p.w.clone();
    WeightedSeries::new(
        vec![
            half(&one) + kk.clone() + half(a),
            one.clone() + kk.clone() + half(a),
            one.clone() - kk.clone() + a.clone() - p.b.clone() - p.c.clone(),
            big_a.clone(),
            -mm.clone(),
        ],
        vec![
            one.clone() + a.clone() - p.b.clone(),
            one.clone() + a.clone() - p.c.clone(),
            one.clone() + t.clone(),
            a.frac_like(3, 2) + t,
        ],
        a,
    )
    .with_exempt_weight(p_poly(k, &big_a, &-mm))
}

pub fn verify_bailey2<F: Field>(k: u32, m: u64, p: &BaileyParams<F>) -> Result<VerificationReport> {
    if p.d.is_some() {
        return Err(Error::Parse("bailey2 takes no d".into()));
    }
    let a = &p.a;
    let one = a.one_like();
    let kk = a.int_like(k as i64);
    let lhs = checked_sum(&bailey2_lhs(k, m, p), m)?;
    let rhs_series = WeightedSeries::new(
        vec![a.clone(), p.b.clone(), p.c.clone(), -a.int_like(m as i64)],
        vec![one.clone() + a.clone() - p.b.clone(), one.clone() + a.clone() - p.c.clone(), p.w.clone()],
        a,
    )
    .with_weight(bold_q(&BoldFamily::bq2(k, a.clone(), p.b.clone(), p.c.clone()))?)?;
    let lead = pochhammer(&(one.clone() + a.clone() - p.w.clone()), 2 * k as u64 + 1);
    let pre = lead * poch_ratio(core::slice::from_ref(&p.w), &[p.w.clone() - a.clone() - one - kk.clone() - kk], m, a)?;
    let rhs = pre * checked_sum(&rhs_series, m)?;
    Ok(report("bailey2", a, &[("a", a), ("b", &p.b), ("c", &p.c), ("w", &p.w)])
        .with_k(k)
        .with_sizes(None, Some(m))
        .compare(&[lhs], &[rhs]))
}

/// `a` of the first member of a pairing, given the companion's full
/// `(1 − x/x0)` exponent, so that `N = (1 − a − exponent)/(1+m)`.
pub fn gs_base_parameter<F: Field>(m: u32, companion_exponent: &F, big_n: u64) -> F {
    let one = companion_exponent.one_like();
    one - companion_exponent.clone() - companion_exponent.int_like((1 + m as i64) * big_n as i64)
}

/// Residue-composition pairing of a transformation with a `k = 0`
/// companion sharing the lifting map `φ_{1,m;x0}`:
/// `[x^N]{G̃ G̃_c} = (−C/x0)^N [t^N]{G G_c}`.
pub fn verify_gs_pairing<F: Field>(
    base: &TransformIdentity<F>,
    companion: &TransformIdentity<F>,
    big_n: u64,
) -> Result<VerificationReport> {
    let map = &base.lifting;
    if map.l != 1 || companion.lifting != *map {
        return Err(Error::domain("pairing needs a common lifting map with l = 1"));
    }
    let like = base.lhs.scale.clone();
    let inv = like.embed(&(Rational::from_integer(1.into()) / &map.x0));
    let [p] = base.prefactors.as_slice() else {
        return Err(Error::domain("base identity must carry the single prefactor (1 − x/x0)^a"));
    };
    if !p.slope.near(&-inv.clone()) {
        return Err(Error::domain("base prefactor is not a power of (1 − x/x0)"));
    }
    let [c1, c2] = companion.prefactors.as_slice() else {
        return Err(Error::domain("companion must carry (1 + m x/x0)^(−1) (1 − x/x0)^(a_c)"));
    };
    let m_slope = like.int_like(map.m as i64) * inv.clone();
    if !(c1.slope.near(&m_slope) && c1.exponent.near(&-like.one_like()) && c2.slope.near(&-inv)) {
        return Err(Error::domain("companion prefactors do not match the pairing (k = 0 companion required)"));
    }
    let n_num = like.one_like() - p.exponent.clone() - c2.exponent.clone();
    let expected = like.int_like((1 + map.m as i64) * big_n as i64);
    if !n_num.near(&expected) {
        return Err(Error::domain(format!(
            "N = {big_n} does not satisfy N = (1 − a − a_c)/(1 + m) for these parameters"
        )));
    }
    for id in [base, companion] {
        check_lower_parameters(&id.lhs, None)?;
        check_lower_parameters(&id.rhs, None)?;
    }
    let order = big_n as usize;
    let coeff = |s: &WeightedSeries<F>| series_coefficients(s, order);
    let rhs_prod = coeff(&base.rhs)?.mul(&coeff(&companion.rhs)?);
    let lhs_prod = coeff(&base.lhs)?.mul(&coeff(&companion.lhs)?);
    let scale = (-like.embed(&map.c_lm()) * like.embed(&(Rational::from_integer(1.into()) / &map.x0))).pow(big_n as u32);
    let lhs = rhs_prod.coeffs()[order].clone();
    let rhs = scale * lhs_prod.coeffs()[order].clone();
    let mut r = VerificationReport::new(format!("gs:{}+{}", base.name, companion.name), Mode::of(&like))
        .with_k(base.k)
        .with_sizes(Some(big_n), None);
    for (n, v) in base.params.entries() {
        r = r.with_param(n, v);
    }
    for (n, v) in companion.params.entries() {
        r = r.with_param(&format!("companion_{n}"), v);
    }
    Ok(r.compare(&[lhs], &[rhs]))
}

/// `Γ(x + s)/Γ(x)` for an integer shift `s`.
fn gamma_shift(x: &Rational, s: i64) -> Result<Rational> {
    let pole = |v: &Rational| Field::nonpositive_integer(v).is_some();
    if pole(x) || pole(&(x + Rational::from_integer(s.into()))) {
        return Err(Error::domain("a gamma argument is a nonpositive integer"));
    }
    Ok(if s >= 0 {
        pochhammer(x, s as u64)
    } else {
        let xs = x + Rational::from_integer(s.into());
        Rational::from_integer(1.into()) / pochhammer(&xs, (-s) as u64)
    })
}

/// Exact value of `(2k)!/k! Γ(1+a−b)Γ(1+k+a/2) / (Γ(1+2k+a)Γ(1+a/2−b))` for even
/// integer `a`.
pub fn kummer_ext_rhs(k: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    let r = |v: i64| Rational::from_integer(v.into());
    if !(a.is_integer() && (a / r(2)).is_integer()) {
        return Err(Error::domain("the exact Kummer value needs an even integer a"));
    }
    let ha: i64 = (a / r(2)).to_integer().try_into().map_err(|_| Error::domain("a out of range"))?;
    let fact = |n: u64| pochhammer(&r(1), n);
    let lead = fact(2 * k as u64) / fact(k as u64);
    // Γ(1+a−b)/Γ(1+a/2−b) and Γ(1+k+a/2)/Γ(1+2k+a)
    let first = gamma_shift(&(r(1) + a / r(2) - b), ha)?;
    let second = gamma_shift(&(r(1) + r(2 * k as i64) + a), -(k as i64) - ha)?;
    Ok(lead * first * second)
}

/// The weighted `2+2k F 1+2k` at `x = −1` compared against the exact gamma
/// ratio; passes when `|LHS − RHS| < 10^(−bits/10)`.
pub fn verify_kummer_ext(k: u32, a: &Rational, b: &Rational, precision_bits: u32) -> Result<VerificationReport> {
    if *b >= -Rational::from_integer(k.into()) {
        return Err(Error::domain("verify_kummer_ext needs b < −k"));
    }
    let one = Rational::from_integer(1.into());
    let c = (&one + a) / Rational::from_integer(2.into());
    let q = q_poly(&QFamily::q2(k, a.clone(), b.clone(), c))?;
    let series = WeightedSeries::new(vec![a.clone(), b.clone()], vec![&one + a - b], a).with_weight(q)?;
    let approx = series.to_approx(precision_bits);
    let tail = BigFloat::from_int(1, precision_bits).ldexp(-((precision_bits as i64 * 9) / 10));
    let x = ApproxScalar::from_rational(&-one, precision_bits);
    let lhs = eval_numeric(&approx, &x, 200_000, &tail)?;
    let rhs_exact = kummer_ext_rhs(k, a, b)?;
    let rhs = ApproxScalar::from_rational(&rhs_exact, precision_bits);
    let diff = (lhs.clone() - rhs.clone()).abs();
    let tol_exp = (precision_bits as f64 / 10.0 * core::f64::consts::LOG2_10) as i64;
    let tol = BigFloat::from_int(1, precision_bits).ldexp(-tol_exp);
    let mut r = report("kummer_ext", a, &[("a", a), ("b", b)]).with_k(k);
    r.mode = Mode::Numeric(precision_bits);
    let c = compare_values(core::slice::from_ref(&lhs), core::slice::from_ref(&rhs));
    r.pass = diff < tol;
    r.max_abs_diff = Some(diff);
    if !r.pass {
        r.first_mismatch = c.first_mismatch.or(Some(crate::report::Mismatch {
            index: 0,
            lhs: format!("{lhs}"),
            rhs: format!("{rhs}"),
        }));
    }
    Ok(r)
}

/// `Σ_{k≤K} P_k(n; A, B) t^(1+2k)/(1+2k)!` against the expansion of
/// `(1/2)[(1−t)^(−n−A)(1+t)^(−n−B) − (1−t)^(−n−B)(1+t)^(−n−A)]` through
/// `t^(2K+1)`, at each sample `n`.
pub fn verify_p_generating_function<F: Field>(
    big_k: u32,
    big_a: &F,
    big_b: &F,
    samples: &[F],
) -> Result<VerificationReport> {
    use crate::transforms::power_prefactor_series;
    let order = 2 * big_k as usize + 1;
    let one = big_a.one_like();
    let mut lhs_all = Vec::new();
    let mut rhs_all = Vec::new();
    let polys: Vec<Polynomial<F>> = (0..=big_k).map(|k| p_poly(k, big_a, big_b)).collect();
    for n in samples {
        let e_a = -(n.clone() + big_a.clone());
        let e_b = -(n.clone() + big_b.clone());
        let s = |e1: &F, e2: &F| {
            power_prefactor_series(&-one.clone(), e1, order).mul(&power_prefactor_series(&one, e2, order))
        };
        let gen = s(&e_a, &e_b).sub(&s(&e_b, &e_a)).scale(&half(&one));
        let mut fact = one.clone();
        for t in 0..=order {
            if t > 0 {
                fact = fact * one.int_like(t as i64);
            }
            let lhs = if t % 2 == 1 { polys[(t - 1) / 2].eval(n) / fact.clone() } else { one.zero_like() };
            lhs_all.push(lhs);
            rhs_all.push(gen.coeffs()[t].clone());
        }
    }
    Ok(report("p_generating_function", big_a, &[("A", big_a), ("B", big_b)])
        .with_k(big_k)
        .with_order(order)
        .compare(&lhs_all, &rhs_all))
}

/// Parameters of the pairing identities as [`Params`], for reports.
pub fn params_of<F: Field>(pairs: &[(&str, &F)]) -> Params<F> {
    pairs.iter().fold(Params::new(), |p, (n, v)| p.with(n, (*v).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn sheppard_trivial_and_saalschutz() {
        let r = verify_sheppard(0, &rat(1, 3), &rat(2, 5), &rat(7, 2), &rat(-5, 3)).unwrap();
        assert!(r.pass);
        let r = verify_sheppard(4, &rat(1, 3), &rat(2, 5), &rat(7, 2), &rat(-5, 7)).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn kummer_hand_value() {
        assert_eq!(kummer_ext_rhs(1, &rat(2, 1), &rat(-2, 1)).unwrap(), rat(2, 3));
    }

    #[test]
    fn r_forms_small() {
        assert!(verify_r_forms(RFamily::R2, 3, 1, &rat(2, 7), &rat(3, 5), Some(&rat(-4, 3))).unwrap().pass);
        assert!(verify_r_forms(RFamily::R3, 2, 1, &rat(2, 7), &rat(3, 5), None).unwrap().pass);
    }
}
