//! Generalized hypergeometric series `F[(α);(β) | Q(n) | x]` with an
//! optional polynomial weight, truncated expansion, terminating sums,
//! poisedness classification and numeric evaluation.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{
    approx_roots, poly_roots, rational_roots, ApproxScalar, BigFloat, Field,
    Polynomial, Rational,
};
use crate::error::{Error, Result};

/// An ordered parameter array; comparison as a multiset is available
/// through [`ParamArray::same_multiset`].
#[derive(Clone, Debug, PartialEq)]
pub struct ParamArray<F> {
    entries: Vec<F>,
}

impl<F: Field> ParamArray<F> {
    pub fn new(entries: Vec<F>) -> Self {
        ParamArray { entries }
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, v: F) {
        self.entries.push(v);
    }

    pub fn extend(&mut self, other: &ParamArray<F>) {
        self.entries.extend(other.entries.iter().cloned());
    }

    pub fn same_multiset(&self, other: &Self) -> bool {
        self.same_multiset_by(other, |a, b| a.near(b))
    }

    pub fn same_multiset_by(&self, other: &Self, eq: impl Fn(&F, &F) -> bool) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut pool: Vec<&F> = other.entries.iter().collect();
        for v in &self.entries {
            match pool.iter().position(|w| eq(v, w)) {
                Some(i) => {
                    pool.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }

    fn sum(&self, like: &F) -> F {
        self.entries.iter().fold(like.zero_like(), |acc, v| acc + v.clone())
    }
}

impl<F: Field> From<Vec<F>> for ParamArray<F> {
    fn from(v: Vec<F>) -> Self {
        ParamArray::new(v)
    }
}

/// `Δ(m; μ) = (μ/m, 1/m + μ/m, ..., (m-1)/m + μ/m)`.
pub fn delta_array<F: Field>(m: u32, mu: &F) -> ParamArray<F> {
    assert!(m >= 1, "delta_array needs m >= 1");
    let base = mu.clone() / mu.int_like(m as i64);
    ParamArray::new(
        (0..m)
            .map(|j| base.clone() + mu.frac_like(j as i64, m as i64))
            .collect(),
    )
}

/// Coefficients `c_0 .. c_N` of a formal power series.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, s: &F) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Cauchy product through the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![self.coeffs[0].zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries::new(
            (0..=n)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.coeffs[0].int_like(-1)))
    }
}

/// `F[(α);(β) | Q(n) | s x]`: upper and lower arrays, a weight polynomial
/// in `n` and an argument scale `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSeries<F> {
    pub upper: ParamArray<F>,
    pub lower: ParamArray<F>,
    pub weight: Polynomial<F>,
    pub scale: F,
    /// Set for weights that deliberately violate `Q(0) = 1`.
    pub normalization_exempt: bool,
}

impl<F: Field> WeightedSeries<F> {
    /// Unweighted series with unit argument scale; `like` fixes the field
    /// context (precision) of the constants.
    pub fn new(upper: Vec<F>, lower: Vec<F>, like: &F) -> Self {
        WeightedSeries {
            upper: ParamArray::new(upper),
            lower: ParamArray::new(lower),
            weight: Polynomial::one_like(like),
            scale: like.one_like(),
            normalization_exempt: false,
        }
    }

    /// Attach a weight; `Q(0) = 1` is required.
    pub fn with_weight(mut self, weight: Polynomial<F>) -> Result<Self> {
        let q0 = weight.eval(&self.scale.zero_like());
        if !q0.near(&self.scale.one_like()) {
            return Err(Error::domain(format!(
                "weight polynomial has Q(0) = {q0}, expected 1"
            )));
        }
        self.weight = weight;
        self.normalization_exempt = false;
        Ok(self)
    }

    /// Attach a weight without the `Q(0) = 1` normalization.
    pub fn with_exempt_weight(mut self, weight: Polynomial<F>) -> Self {
        self.weight = weight;
        self.normalization_exempt = true;
        self
    }

    pub fn with_scale(mut self, scale: F) -> Self {
        self.scale = scale;
        self
    }

    pub fn to_approx(&self, precision_bits: u32) -> WeightedSeries<ApproxScalar> {
        let conv = |a: &ParamArray<F>| {
            ParamArray::new(a.entries.iter().map(|v| v.to_approx(precision_bits)).collect())
        };
        WeightedSeries {
            upper: conv(&self.upper),
            lower: conv(&self.lower),
            weight: self.weight.map(|c| c.to_approx(precision_bits)),
            scale: self.scale.to_approx(precision_bits),
            normalization_exempt: self.normalization_exempt,
        }
    }

    fn like(&self) -> &F {
        &self.scale
    }

    /// Smallest `M` such that some upper parameter equals `-M`.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper.entries.iter().filter_map(Field::nonpositive_integer).min()
    }

    /// Unweighted term ratios, stopping at termination and raising
    /// [`Error::Pole`] when a lower parameter reaches a nonpositive integer
    /// first.
    fn raw_terms(&self) -> RawTerms<'_, F> {
        RawTerms {
            series: self,
            n: 0,
            current: Some(self.like().one_like()),
        }
    }
}

struct RawTerms<'a, F> {
    series: &'a WeightedSeries<F>,
    n: u64,
    current: Option<F>,
}

impl<F: Field> Iterator for RawTerms<'_, F> {
    type Item = Result<F>;

    /// Yields `Π(α)_n/(n! Π(β)_n) s^n` for `n = 0, 1, ...`; after termination
    /// the value is zero.
    fn next(&mut self) -> Option<Result<F>> {
        let s = self.series;
        let like = s.like();
        let out = match &self.current {
            Some(t) => t.clone(),
            None => return Some(Ok(like.zero_like())),
        };
        let n = like.int_like(self.n as i64);
        let mut num = s.scale.clone();
        let mut terminated = false;
        for a in &s.upper.entries {
            let f = a.clone() + n.clone();
            if f.is_zero() {
                terminated = true;
            }
            num = num * f;
        }
        if terminated {
            self.current = None;
        } else {
            let mut den = like.int_like(self.n as i64 + 1);
            for b in &s.lower.entries {
                let f = b.clone() + n.clone();
                if f.is_zero() {
                    let err = Error::Pole {
                        parameter: format!("{b}"),
                        term: self.n as usize + 1,
                    };
                    self.current = None;
                    self.n += 1;
                    return Some(Err(err));
                }
                den = den * f;
            }
            self.current = Some(out.clone() * num / den);
        }
        self.n += 1;
        Some(Ok(out))
    }
}

/// `Σ lower − Σ upper` over the parameter arrays (the weight is ignored).
pub fn parametric_excess<F: Field>(s: &WeightedSeries<F>) -> F {
    s.lower.sum(s.like()) - s.upper.sum(s.like())
}

/// Reject lower parameters `−L` with `L < terms` (every nonpositive integer
/// when `terms` is `None`). Below that bound the terms are `0/0` and the
/// series only makes sense as a limit, whatever an upper parameter does.
pub fn check_lower_parameters<F: Field>(s: &WeightedSeries<F>, terms: Option<u64>) -> Result<()> {
    for b in &s.lower.entries {
        if let Some(l) = b.nonpositive_integer() {
            if terms.is_none_or(|t| l < t) {
                return Err(Error::Pole {
                    parameter: format!("{b}"),
                    term: l as usize + 1,
                });
            }
        }
    }
    Ok(())
}

/// Exact coefficients `c_n = Π(α)_n/(n! Π(β)_n) · Q(n) · s^n`, `n ≤ order`.
pub fn series_coefficients<F: Field>(s: &WeightedSeries<F>, order: usize) -> Result<TruncatedSeries<F>> {
    let like = s.like();
    let mut out = Vec::with_capacity(order + 1);
    for (n, t) in s.raw_terms().take(order + 1).enumerate() {
        let t = t?;
        out.push(if t.is_zero() {
            t
        } else {
            t * s.weight.eval(&like.int_like(n as i64))
        });
    }
    Ok(TruncatedSeries::new(out))
}

/// Finite sum `Σ_{n≤M} c_n` of a series terminated by an upper parameter `-M`.
pub fn terminating_sum<F: Field>(s: &WeightedSeries<F>) -> Result<F> {
    let m = s
        .termination_index()
        .ok_or_else(|| Error::domain("terminating_sum: no upper parameter is a nonpositive integer"))?;
    let c = series_coefficients(s, m as usize)?;
    Ok(c.coeffs.into_iter().fold(s.like().zero_like(), |acc, v| acc + v))
}

/// `c_n ↦ (1 + n/e) c_n`, the action of `1 + e^{-1} x d/dx`.
pub fn apply_contiguity<F: Field>(t: &TruncatedSeries<F>, e: &F) -> Result<TruncatedSeries<F>> {
    if e.is_zero() {
        return Err(Error::domain("apply_contiguity: e = 0"));
    }
    Ok(TruncatedSeries::new(
        t.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.clone() * (e.one_like() + e.int_like(n as i64) / e.clone()))
            .collect(),
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PoisednessReport<F> {
    pub excess: F,
    pub well_poised: bool,
    pub nearly_poised: bool,
    /// Smallest coprime `(M, N) ≠ (1, 1)` with `M, N ≤ 4` for which the
    /// array is `(M, N)`-poised.
    pub mn_poised: Option<(u32, u32)>,
    pub very_well_poised: bool,
}

/// Poisedness with the field's own notion of equality.
pub fn classify_poisedness<F: Field>(s: &WeightedSeries<F>) -> PoisednessReport<F> {
    classify_poisedness_by(s, |a, b| a.near(b))
}

/// Poisedness of a numeric series, equality meaning `|a − b| ≤ tol`.
pub fn classify_poisedness_tol(s: &WeightedSeries<ApproxScalar>, tol: &BigFloat) -> PoisednessReport<ApproxScalar> {
    classify_poisedness_by(s, |a, b| a.within(b, tol))
}

/// Size of a maximum matching of `upper` into `lower` where `u` may pair with
/// `l` iff `eq(target(u), l)`. Edges only join value classes, so greedy
/// matching is optimal.
fn greedy_matching<F: Field>(
    upper: &[&F],
    lower: &[&F],
    target: impl Fn(&F) -> F,
    eq: &impl Fn(&F, &F) -> bool,
) -> usize {
    let mut pool: Vec<&F> = lower.to_vec();
    let mut count = 0;
    for u in upper {
        let t = target(u);
        if let Some(i) = pool.iter().position(|l| eq(&t, l)) {
            pool.swap_remove(i);
            count += 1;
        }
    }
    count
}

pub fn classify_poisedness_by<F: Field>(
    s: &WeightedSeries<F>,
    eq: impl Fn(&F, &F) -> bool,
) -> PoisednessReport<F> {
    let excess = parametric_excess(s);
    let mut report = PoisednessReport {
        excess,
        well_poised: false,
        nearly_poised: false,
        mn_poised: None,
        very_well_poised: false,
    };
    let up = &s.upper.entries;
    let lo: Vec<&F> = s.lower.entries.iter().collect();
    if up.len() != lo.len() + 1 {
        return report;
    }
    let r = lo.len();
    let like = s.like();
    let one = like.one_like();
    let two = like.int_like(2);
    let coprime = |m: u32, n: u32| num_integer::gcd(m, n) == 1;

    for i0 in 0..up.len() {
        let a0 = &up[i0];
        let rest: Vec<&F> = up.iter().enumerate().filter(|&(i, _)| i != i0).map(|(_, v)| v).collect();
        let pair_sum = one.clone() + a0.clone();

        let matched = greedy_matching(&rest, &lo, |u| pair_sum.clone() - u.clone(), &eq);
        if matched == r {
            report.well_poised = true;
            let half = a0.clone() / two.clone();
            let top = one.clone() + half.clone();
            if rest.iter().any(|u| eq(u, &top)) && lo.iter().any(|l| eq(l, &half)) {
                report.very_well_poised = true;
            }
        }
        if r >= 1 && matched + 1 == r {
            report.nearly_poised = true;
        }
        // Every a_i + b_i equal to a common value other than 1 + a0.
        if !report.nearly_poised && r >= 1 {
            for u in &rest {
                for l in &lo {
                    let common = (*u).clone() + (*l).clone();
                    if eq(&common, &pair_sum) {
                        continue;
                    }
                    if greedy_matching(&rest, &lo, |v| common.clone() - v.clone(), &eq) == r {
                        report.nearly_poised = true;
                    }
                }
            }
        }
        if report.mn_poised.is_none() {
            'search: for total in 3..=8u32 {
                for m in 1..total {
                    let n = total - m;
                    if m > 4 || n > 4 || !coprime(m, n) {
                        continue;
                    }
                    let (mf, nf) = (like.int_like(m as i64), like.int_like(n as i64));
                    let c = mf.clone() * a0.clone() + nf.clone();
                    let target = |u: &F| (c.clone() - mf.clone() * u.clone()) / nf.clone();
                    if greedy_matching(&rest, &lo, target, &eq) == r {
                        report.mn_poised = Some((m, n));
                        break 'search;
                    }
                }
            }
        }
    }
    if report.well_poised {
        report.nearly_poised = false;
    }
    report
}

fn check_normalized<F: Field>(s: &WeightedSeries<F>) -> Result<()> {
    let q0 = s.weight.eval(&s.like().zero_like());
    if !q0.near(&s.like().one_like()) {
        return Err(Error::domain(format!(
            "explicit pair form needs Q(0) = 1, found {q0}"
        )));
    }
    Ok(())
}

/// Exact explicit-pair form, available when every root of `Q` is rational:
/// weight 1 and one pair `(1+ξ, ξ)` per negated root `ξ`.
/// Returns `Ok(None)` when `Q` has an irrational root.
pub fn explicit_pair_form_exact(s: &WeightedSeries<Rational>) -> Result<Option<WeightedSeries<Rational>>> {
    check_normalized(s)?;
    let degree = s.weight.degree().unwrap_or(0);
    if degree == 0 {
        return Ok(Some(s.clone()));
    }
    let roots = rational_roots(&s.weight)?;
    if roots.len() != degree {
        return Ok(None);
    }
    let mut out = s.clone();
    let one = Rational::from_integer(1.into());
    for r in roots.into_iter().rev() {
        let xi = -r;
        if xi.nonpositive_integer().is_some() {
            return Err(Error::domain(format!("negated root {xi} of the weight is a pole")));
        }
        out.upper.push(one.clone() + xi.clone());
        out.lower.push(xi);
    }
    out.weight = Polynomial::one_like(&one);
    Ok(Some(out))
}

/// Numeric explicit-pair form: the weight is replaced by `deg Q` pairs
/// `(1+ξ_i, ξ_i)` built from numeric negated roots.
pub fn explicit_pair_form<F: Field>(
    s: &WeightedSeries<F>,
    precision_bits: u32,
) -> Result<WeightedSeries<ApproxScalar>> {
    check_normalized(s)?;
    let approx = s.to_approx(precision_bits);
    if s.weight.degree().unwrap_or(0) == 0 {
        return Ok(approx);
    }
    let roots = approx_roots(&approx.weight, precision_bits)?;
    finish_pairs(approx, roots, precision_bits)
}

/// As [`explicit_pair_form`], for exact input (multiple roots handled by
/// square-free splitting).
pub fn explicit_pair_form_rational(
    s: &WeightedSeries<Rational>,
    precision_bits: u32,
) -> Result<WeightedSeries<ApproxScalar>> {
    check_normalized(s)?;
    let approx = s.to_approx(precision_bits);
    if s.weight.degree().unwrap_or(0) == 0 {
        return Ok(approx);
    }
    let roots = poly_roots(&s.weight, precision_bits)?;
    finish_pairs(approx, roots, precision_bits)
}

fn finish_pairs(
    mut out: WeightedSeries<ApproxScalar>,
    roots: Vec<ApproxScalar>,
    precision_bits: u32,
) -> Result<WeightedSeries<ApproxScalar>> {
    let one = out.scale.one_like();
    let tol = one.eps(precision_bits / 2);
    for r in roots.into_iter().rev() {
        let xi = -r;
        if xi.im.abs() <= tol {
            let nearest = xi.re.to_rational().round();
            let snapped = ApproxScalar::from_rational(&nearest, precision_bits);
            if nearest.nonpositive_integer().is_some() && xi.within(&snapped, &tol) {
                return Err(Error::domain(format!(
                    "negated root {xi:.20} of the weight is a pole"
                )));
            }
        }
        out.upper.push(one.clone() + xi.clone());
        out.lower.push(xi);
    }
    out.weight = Polynomial::one_like(&one);
    Ok(out)
}

/// Replace every pair of pairs `(1+ξ, ξ), (2+ξ, 1+ξ)` by `(2+ξ, ξ)`.
/// Returns the new series and whether anything was merged.
pub fn merge_unit_pairs<F: Field>(s: &WeightedSeries<F>) -> (WeightedSeries<F>, bool) {
    merge_unit_pairs_by(s, |a, b| a.near(b))
}

pub fn merge_unit_pairs_by<F: Field>(
    s: &WeightedSeries<F>,
    eq: impl Fn(&F, &F) -> bool,
) -> (WeightedSeries<F>, bool) {
    let mut out = s.clone();
    let one = s.like().one_like();
    let two = s.like().int_like(2);
    let mut merged = false;
    'again: loop {
        let lo = out.lower.entries.clone();
        for (i, xi) in lo.iter().enumerate() {
            let next = xi.clone() + one.clone();
            let Some(j) = lo.iter().enumerate().position(|(j, v)| j != i && eq(v, &next)) else {
                continue;
            };
            let top = xi.clone() + two.clone();
            let up = &out.upper.entries;
            let Some(u1) = up.iter().position(|v| eq(v, &next)) else {
                continue;
            };
            if !up.iter().enumerate().any(|(k, v)| k != u1 && eq(v, &top)) {
                continue;
            }
            out.upper.entries.remove(u1);
            out.lower.entries.remove(j);
            merged = true;
            continue 'again;
        }
        break;
    }
    (out, merged)
}

/// Numeric value of the series at `x`.
///
/// Terms are summed directly until three consecutive terms fall below
/// `tail_tol · (|S| + 1)`. For real negative `x` where that fails, the
/// Cohen–Rodriguez Villegas–Zagier alternating-series transform is applied
/// with increasing length until two estimates agree.
pub fn eval_numeric(
    s: &WeightedSeries<ApproxScalar>,
    x: &ApproxScalar,
    max_terms: usize,
    tail_tol: &BigFloat,
) -> Result<ApproxScalar> {
    let scaled = s.clone().with_scale(s.scale.clone() * x.clone());
    let like = scaled.scale.clone();
    let mut sum = like.zero_like();
    let mut small = 0;
    let mut terms: Vec<ApproxScalar> = Vec::new();
    let alternating = x.im.is_zero() && x.re.is_negative();
    for (n, t) in scaled.raw_terms().take(max_terms).enumerate() {
        let t = t?;
        let term = if t.is_zero() {
            t
        } else {
            t * scaled.weight.eval(&like.int_like(n as i64))
        };
        sum = sum + term.clone();
        if alternating {
            terms.push(term.clone());
        }
        let bound = tail_tol.clone() * (sum.abs() + BigFloat::from_int(1, like.precision_bits()));
        if term.abs() <= bound {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
        if scaled.termination_index().is_some_and(|m| n as u64 > m) {
            return Ok(sum);
        }
    }
    if alternating {
        if let Some(v) = alternating_limit(&terms, tail_tol) {
            return Ok(v);
        }
    }
    Err(Error::Convergence {
        terms: max_terms,
        partial: Box::new(sum),
    })
}

/// CVZ acceleration of `Σ t_k` where the `t_k` alternate in sign.
fn alternating_limit(terms: &[ApproxScalar], tail_tol: &BigFloat) -> Option<ApproxScalar> {
    let prec = terms.first()?.precision_bits();
    let digits = -(tail_tol.top_bit() as f64) * core::f64::consts::LOG10_2;
    let base = (digits / 0.76) as usize + 8;
    let mut previous: Option<ApproxScalar> = None;
    let mut len = base;
    while len <= terms.len() {
        let v = cvz(&terms[..len], prec);
        if let Some(p) = &previous {
            let bound = tail_tol.clone() * (v.abs() + BigFloat::from_int(1, prec));
            if (v.clone() - p.clone()).abs() <= bound {
                return Some(v);
            }
        }
        previous = Some(v);
        len += 16;
    }
    None
}

fn cvz(terms: &[ApproxScalar], prec: u32) -> ApproxScalar {
    let n = terms.len() as i64;
    let one = BigFloat::from_int(1, prec);
    let root = (BigFloat::from_int(8, prec)).sqrt() + BigFloat::from_int(3, prec);
    let mut d = one.clone();
    for _ in 0..n {
        d = d * root.clone();
    }
    d = (d.clone() + one.clone() / d).ldexp(-1);
    let mut b = -one.clone();
    let mut c = -d.clone();
    let mut s = ApproxScalar::zero(prec);
    for (k, t) in terms.iter().enumerate() {
        let k = k as i64;
        c = b.clone() - c;
        // terms already carry the sign (-1)^k
        let a = if k % 2 == 0 { t.clone() } else { -t.clone() };
        s = s + a * ApproxScalar::real(c.clone());
        let num = BigFloat::from_int((k + n) * (k - n), prec);
        let den = BigFloat::from_int((2 * k + 1) * (k + 1), prec).ldexp(-1);
        b = b * num / den;
    }
    s / ApproxScalar::real(d)
}
