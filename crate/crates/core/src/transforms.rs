//! The quadratic and cubic transformations as identities between truncated
//! power series: `F[...|φ(x)]` on the left, prefactors times a weighted
//! series in `x` on the right.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{pochhammer, Field, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hyperseries::{
    check_lower_parameters, delta_array, parametric_excess, series_coefficients, terminating_sum, ParamArray, TruncatedSeries,
    WeightedSeries,
};
use crate::qpoly::{bold_q, q_poly, BoldFamily, QFamily, QTag};
use crate::report::{Mode, VerificationReport};

/// `φ(x) = C (−x/x0)^l / (1 − x/x0)^(l+m)` with `C = (l+m)^(l+m)/(l^l m^m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingMap {
    pub l: u32,
    pub m: u32,
    pub x0: Rational,
}

impl LiftingMap {
    pub fn new(l: u32, m: u32, x0: Rational) -> Result<Self> {
        if l == 0 || m == 0 || Field::is_zero(&x0) {
            return Err(Error::domain("lifting map needs l, m >= 1 and x0 != 0"));
        }
        Ok(LiftingMap { l, m, x0 })
    }

    pub fn for_tag(tag: QTag) -> Self {
        let (l, m, x0) = tag.lifting();
        LiftingMap { l, m, x0 }
    }

    pub fn c_lm(&self) -> Rational {
        let p = |b: u32, e: u32| Rational::from_integer(num_bigint::BigInt::from(b).pow(e));
        p(self.l + self.m, self.l + self.m) / (p(self.l, self.l) * p(self.m, self.m))
    }
}

/// Expansion of `φ(x)` through `x^order`.
pub fn lifting_series<F: Field>(map: &LiftingMap, like: &F, order: usize) -> TruncatedSeries<F> {
    let inv = like.embed(&(Rational::from_integer(1.into()) / &map.x0));
    let lead = like.embed(&map.c_lm()) * (-inv.clone()).pow(map.l);
    let s = (map.l + map.m) as i64;
    let mut out = vec![like.zero_like(); order + 1];
    // (1 − x/x0)^(−s) = Σ (s)_j/j! (x/x0)^j
    let mut c = lead;
    for j in 0..=order {
        let n = j + map.l as usize;
        if n > order {
            break;
        }
        out[n] = c.clone();
        c = c * like.int_like(s + j as i64) / like.int_like(j as i64 + 1) * inv.clone();
    }
    TruncatedSeries::new(out)
}

/// `outer(inner(x))` through the order of `inner`; `inner(0)` must vanish.
pub fn compose_series<F: Field>(outer: &TruncatedSeries<F>, inner: &TruncatedSeries<F>) -> Result<TruncatedSeries<F>> {
    let ic = inner.coeffs();
    if !ic[0].is_zero() {
        return Err(Error::domain("compose_series: inner series has a nonzero constant term"));
    }
    let order = inner.order();
    let oc = outer.coeffs();
    let like = ic[0].clone();
    let top = oc.len().min(order + 1);
    let mut acc = TruncatedSeries::new(vec![like.zero_like(); order + 1]);
    for j in (0..top).rev() {
        acc = acc.mul(inner);
        let mut c = acc.coeffs().to_vec();
        c[0] = c[0].clone() + oc[j].clone();
        acc = TruncatedSeries::new(c);
    }
    Ok(acc)
}

/// Binomial expansion of `(1 + slope·x)^exponent` through `x^order`.
pub fn power_prefactor_series<F: Field>(slope: &F, exponent: &F, order: usize) -> TruncatedSeries<F> {
    let mut out = Vec::with_capacity(order + 1);
    let mut c = slope.one_like();
    for j in 0..=order {
        out.push(c.clone());
        let jj = slope.int_like(j as i64);
        c = c * (exponent.clone() - jj.clone()) / (jj + slope.one_like()) * slope.clone();
    }
    TruncatedSeries::new(out)
}

/// A factor `(1 + slope·x)^exponent`.
#[derive(Clone, Debug, PartialEq)]
pub struct Prefactor<F> {
    pub slope: F,
    pub exponent: F,
}

/// Named parameter values.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Params<F> {
    entries: Vec<(String, F)>,
}

impl<F: Field> Params<F> {
    pub fn new() -> Self {
        Params { entries: Vec::new() }
    }

    pub fn with(mut self, name: &str, v: F) -> Self {
        self.set(name, v);
        self
    }

    pub fn set(&mut self, name: &str, v: F) {
        match self.entries.iter_mut().find(|(n, _)| n == name) {
            Some(e) => e.1 = v,
            None => self.entries.push((name.to_string(), v)),
        }
    }

    pub fn get(&self, name: &str) -> Result<&F> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::Parse(format!("missing parameter `{name}`")))
    }

    pub fn entries(&self) -> &[(String, F)] {
        &self.entries
    }
}

/// One theorem instance.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformIdentity<F> {
    pub name: String,
    pub k: u32,
    pub lifting: LiftingMap,
    pub params: Params<F>,
    pub lhs: WeightedSeries<F>,
    pub prefactors: Vec<Prefactor<F>>,
    pub rhs: WeightedSeries<F>,
}

impl<F: Field> TransformIdentity<F> {
    pub fn lhs_excess(&self) -> F {
        parametric_excess(&self.lhs)
    }

    /// Truncated LHS `F[...|φ(x)]`.
    pub fn lhs_series(&self, order: usize) -> Result<TruncatedSeries<F>> {
        let like = self.lhs.scale.clone();
        let inner = lifting_series(&self.lifting, &like, order);
        compose_series(&series_coefficients(&self.lhs, order)?, &inner)
    }

    /// Truncated RHS: prefactors times the weighted series.
    pub fn rhs_series(&self, order: usize) -> Result<TruncatedSeries<F>> {
        let mut acc = series_coefficients(&self.rhs, order)?;
        for p in &self.prefactors {
            acc = acc.mul(&power_prefactor_series(&p.slope, &p.exponent, order));
        }
        Ok(acc)
    }
}

/// Names accepted by [`build_identity`] with their parameter names.
pub const REGISTRY: &[(&str, &[&str])] = &[
    ("thmA2", &["a", "b", "c"]),
    ("thmA3", &["a", "b"]),
    ("thmA3p", &["a", "b"]),
    ("thmB2", &["a", "b", "c", "d"]),
    ("thmB3", &["a", "b", "d"]),
    ("thmB3p", &["a", "b", "d"]),
    ("thmC2", &["a", "b", "c"]),
    ("thmC3", &["a", "b"]),
    ("thmC3p", &["a", "b"]),
    ("niblett", &["a", "b", "c"]),
    ("linconstraint", &["b", "c"]),
    ("linconstraint2", &["b", "sign"]),
    ("curious", &["s"]),
    ("lastmin2", &["a", "b"]),
    ("lastmin3", &["a"]),
    ("rrplus", &["a", "b", "d"]),
];

/// The nine theorem families.
pub const THEOREMS: [&str; 9] = [
    "thmA2", "thmA3", "thmA3p", "thmB2", "thmB3", "thmB3p", "thmC2", "thmC3", "thmC3p",
];

pub fn identity_params(name: &str) -> Result<&'static [&'static str]> {
    REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| *p)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Identities whose `k` is fixed at 1.
fn fixed_k(name: &str) -> bool {
    matches!(name, "niblett" | "linconstraint" | "linconstraint2" | "curious")
}

fn half<F: Field>(v: &F) -> F {
    v.clone() / v.int_like(2)
}

/// Build a registry identity.
pub fn build_identity<F: Field>(name: &str, k: u32, params: &Params<F>) -> Result<TransformIdentity<F>> {
    let names = identity_params(name)?;
    for (n, _) in params.entries() {
        if !names.contains(&n.as_str()) {
            return Err(Error::Parse(format!("{name} takes no parameter `{n}`")));
        }
    }
    if fixed_k(name) && k != 1 {
        return Err(Error::domain(format!("{name} is a k = 1 specialization")));
    }
    let p = |n: &str| params.get(n).cloned();
    let id = match name {
        "thmA2" | "niblett" => a_family(name, k, QFamily::q2(k, p("a")?, p("b")?, p("c")?))?,
        "thmA3" => a_family(name, k, QFamily::q3(k, p("a")?, p("b")?))?,
        "thmA3p" => a_family(name, k, QFamily::q3p(k, p("a")?, p("b")?))?,
        "thmB2" => a_family(name, k, QFamily::q2(k, p("a")?, p("b")?, p("c")?).with_d(p("d")?))?,
        "thmB3" => a_family(name, k, QFamily::q3(k, p("a")?, p("b")?).with_d(p("d")?))?,
        "thmB3p" => a_family(name, k, QFamily::q3p(k, p("a")?, p("b")?).with_d(p("d")?))?,
        "thmC2" => c_family(name, BoldFamily::bq2(k, p("a")?, p("b")?, p("c")?))?,
        "thmC3" => c_family(name, BoldFamily::bq3(k, p("a")?, p("b")?))?,
        "thmC3p" => c_family(name, BoldFamily::bq3p(k, p("a")?, p("b")?))?,
        "linconstraint" => linconstraint(&p("b")?, &p("c")?),
        "linconstraint2" => linconstraint2(&p("b")?, &p("sign")?)?,
        "curious" => curious(&p("s")?)?,
        "lastmin2" => lastmin2(k, &p("a")?, &p("b")?, None)?,
        "rrplus" => lastmin2(k, &p("a")?, &p("b")?, Some(p("d")?))?,
        "lastmin3" => lastmin3(k, &p("a")?)?,
        _ => unreachable!("registry checked above"),
    };
    Ok(TransformIdentity {
        name: name.to_string(),
        params: params.clone(),
        ..id
    })
}

/// Upper/lower arrays `(α), (β)` accompanying `Δ(l+m; ·)` on the left.
fn lhs_extra<F: Field>(f: &QFamily<F>) -> (Vec<F>, Vec<F>) {
    let (a, b) = (&f.a, &f.b);
    let one = a.one_like();
    match f.tag {
        QTag::Q2 => {
            let c = f.c.as_ref().expect("quadratic family carries c");
            let k = a.int_like(f.k as i64);
            (
                vec![one.clone() - k + a.clone() - b.clone() - c.clone()],
                vec![one.clone() + a.clone() - b.clone(), one + a.clone() - c.clone()],
            )
        }
        QTag::Q3 | QTag::Q3p => {
            let base = a.frac_like(3, 4) + half(&a.int_like(f.k as i64)) + half(a);
            (vec![], vec![base.clone() + half(b), base - half(b)])
        }
    }
}

fn rhs_series<F: Field>(f: &QFamily<F>) -> WeightedSeries<F> {
    let (gamma, delta) = f.gamma_delta();
    let mut upper = vec![f.a.clone()];
    upper.extend(gamma);
    WeightedSeries::new(upper, delta, &f.a)
}

fn base_prefactor<F: Field>(map: &LiftingMap, exponent: F) -> Prefactor<F> {
    let slope = -exponent.embed(&(Rational::from_integer(1.into()) / &map.x0));
    Prefactor { slope, exponent }
}

fn a_family<F: Field>(name: &str, k: u32, f: QFamily<F>) -> Result<TransformIdentity<F>> {
    let map = LiftingMap::for_tag(f.tag);
    let (alpha, beta) = lhs_extra(&f);
    let mut upper = delta_array(map.l + map.m, &f.a);
    upper.extend(&ParamArray::new(alpha));
    let mut lower = beta;
    if let Some(d) = &f.d {
        upper.push(d.clone() + d.int_like(k as i64));
        lower.push(d.clone());
    }
    let lhs = WeightedSeries::new(upper.entries().to_vec(), lower, &f.a);
    let rhs = rhs_series(&f).with_weight(q_poly(&f)?)?;
    Ok(TransformIdentity {
        name: name.to_string(),
        k,
        prefactors: vec![base_prefactor(&map, f.a.clone())],
        lifting: map,
        params: Params::new(),
        lhs,
        rhs,
    })
}

fn c_family<F: Field>(name: &str, bf: BoldFamily<F>) -> Result<TransformIdentity<F>> {
    let f = QFamily {
        tag: bf.tag.base(),
        k: bf.k,
        a: bf.a.clone(),
        b: bf.b.clone(),
        c: bf.c.clone(),
        d: None,
    };
    let map = LiftingMap::for_tag(f.tag);
    let a = &f.a;
    let kk = a.int_like(bf.k as i64);
    let shifted = a.one_like() + kk.clone() * a.int_like(2) + a.clone();
    let (alpha, beta) = lhs_extra(&f);
    let mut upper = delta_array(map.l + map.m, &shifted);
    upper.extend(&ParamArray::new(alpha));
    let lhs = WeightedSeries::new(upper.entries().to_vec(), beta, a);
    let rhs = rhs_series(&f).with_weight(bold_q(&bf)?)?;
    let ratio = a.int_like(map.m as i64) / (a.int_like(map.l as i64) * a.embed(&map.x0));
    let prefactors = vec![
        Prefactor { slope: ratio, exponent: -(a.one_like() + kk * a.int_like(2)) },
        base_prefactor(&map, shifted),
    ];
    Ok(TransformIdentity {
        name: name.to_string(),
        k: bf.k,
        lifting: map,
        params: Params::new(),
        lhs,
        prefactors,
        rhs,
    })
}

fn explicit<F: Field>(
    name: &str,
    tag: QTag,
    lhs: (Vec<F>, Vec<F>),
    exponent: F,
    rhs: (Vec<F>, Vec<F>),
) -> TransformIdentity<F> {
    let map = LiftingMap::for_tag(tag);
    let like = exponent.clone();
    TransformIdentity {
        name: name.to_string(),
        k: 1,
        prefactors: vec![base_prefactor(&map, exponent)],
        lifting: map,
        params: Params::new(),
        lhs: WeightedSeries::new(lhs.0, lhs.1, &like),
        rhs: WeightedSeries::new(rhs.0, rhs.1, &like),
    }
}

fn linconstraint<F: Field>(b: &F, c: &F) -> TransformIdentity<F> {
    let one = b.one_like();
    let two = b.int_like(2);
    let s = b.clone() + c.clone();
    explicit(
        "linconstraint",
        QTag::Q2,
        (
            vec![-half(&s), half(&one) - half(&s), -(two.clone() * s.clone())],
            vec![
                one.clone() - two.clone() * b.clone() - c.clone(),
                one.clone() - b.clone() - two.clone() * c.clone(),
            ],
        ),
        -s.clone(),
        (
            vec![-s, b.clone(), c.clone(), one.clone() - b.clone(), one.clone() - c.clone()],
            vec![
                one.clone() - two.clone() * b.clone() - c.clone(),
                one - b.clone() - two * c.clone(),
                -c.clone(),
                -b.clone(),
            ],
        ),
    )
}

fn sqrt3<F: Field>(like: &F) -> Result<F> {
    like.int_like(3)
        .sqrt()
        .ok_or_else(|| Error::domain("this specialization has irrational parameters; use numeric mode"))
}

fn linconstraint2<F: Field>(b: &F, sign: &F) -> Result<TransformIdentity<F>> {
    if !(sign.near(&b.one_like()) || sign.near(&-b.one_like())) {
        return Err(Error::domain("linconstraint2 needs sign = 1 or -1"));
    }
    let r = sqrt3(b)? * sign.clone();
    let one = b.one_like();
    let f = |p: i64, q: i64| b.frac_like(p, q);
    let lower = vec![
        one.clone() + r.clone() / b.int_like(4) + half(b),
        one.clone() + r.clone() / b.int_like(4) - half(b),
    ];
    let xi1 = r.clone() / b.int_like(6) * (one.clone() - b.int_like(2) * b.clone());
    let xi2 = r.clone() / b.int_like(6) * (one.clone() + b.int_like(2) * b.clone());
    let a = f(-1, 2) + half(&r);
    let mut rhs_lower = lower.clone();
    rhs_lower.extend([xi2.clone(), xi1.clone()]);
    Ok(explicit(
        "linconstraint2",
        QTag::Q3,
        (
            vec![
                f(-1, 6) + r.clone() / b.int_like(6),
                f(1, 6) + r.clone() / b.int_like(6),
                f(1, 2) + r.clone() / b.int_like(6),
            ],
            lower,
        ),
        a.clone(),
        (
            vec![a, f(-1, 2) - b.clone(), f(-1, 2) + b.clone(), one.clone() + xi1, one + xi2],
            rhs_lower,
        ),
    ))
}

/// `a = −1/2 + √3 s`, `b = cos θ = √(1 − s²)` with `s = sin θ`.
fn curious<F: Field>(s: &F) -> Result<TransformIdentity<F>> {
    let one = s.one_like();
    let r3 = sqrt3(s)?;
    let cos = (one.clone() - s.clone() * s.clone())
        .sqrt()
        .ok_or_else(|| Error::domain("curious needs |sin θ| <= 1 with rational cos θ, or numeric mode"))?;
    let f = |p: i64, q: i64| s.frac_like(p, q);
    let t = r3.clone() / s.int_like(3) * s.clone();
    let sin_plus = half(&r3) * s.clone() + half(&cos);
    let sin_minus = half(&r3) * s.clone() - half(&cos);
    let lower = vec![one.clone() + sin_plus, one.clone() + sin_minus];
    let a = f(-1, 2) + r3 * s.clone();
    let mut rhs_lower = lower.clone();
    rhs_lower.push(f(-1, 2) + t.clone());
    Ok(explicit(
        "curious",
        QTag::Q3,
        (vec![f(-1, 6) + t.clone(), f(1, 6) + t.clone(), f(1, 2) + t.clone()], lower),
        a.clone(),
        (vec![a, f(-1, 2) - cos.clone(), f(-1, 2) + cos, f(3, 2) + t], rhs_lower),
    ))
}

/// `c = 1/2 + a/2` in the quadratic theorem (with `d`: the four-parameter one).
fn lastmin2<F: Field>(k: u32, a: &F, b: &F, d: Option<F>) -> Result<TransformIdentity<F>> {
    let one = a.one_like();
    let c = half(&one) + half(a);
    let mut f = QFamily::q2(k, a.clone(), b.clone(), c);
    let mut upper = vec![half(a), half(&one) - a.int_like(k as i64) + half(a) - b.clone()];
    let mut lower = vec![one.clone() + a.clone() - b.clone()];
    if let Some(d) = d {
        upper.push(d.clone() + d.int_like(k as i64));
        lower.push(d.clone());
        f = f.with_d(d);
    }
    let map = LiftingMap::for_tag(QTag::Q2);
    let rhs = WeightedSeries::new(vec![a.clone(), b.clone()], vec![one + a.clone() - b.clone()], a)
        .with_weight(q_poly(&f)?)?;
    Ok(TransformIdentity {
        name: String::new(),
        k,
        prefactors: vec![base_prefactor(&map, a.clone())],
        lifting: map,
        params: Params::new(),
        lhs: WeightedSeries::new(upper, lower, a),
        rhs,
    })
}

/// `b = 1/6 + k + a/3` in the first cubic theorem.
fn lastmin3<F: Field>(k: u32, a: &F) -> Result<TransformIdentity<F>> {
    let kk = a.int_like(k as i64);
    let b = a.frac_like(1, 6) + kk.clone() + a.clone() / a.int_like(3);
    let f = QFamily::q3(k, a.clone(), b);
    let lower = a.frac_like(5, 6) + kk.clone() + a.int_like(2) * a.clone() / a.int_like(3);
    let map = LiftingMap::for_tag(QTag::Q3);
    let rhs = WeightedSeries::new(
        vec![a.clone(), a.frac_like(1, 3) - a.int_like(2) * kk - a.clone() / a.int_like(3)],
        vec![lower.clone()],
        a,
    )
    .with_weight(q_poly(&f)?)?;
    Ok(TransformIdentity {
        name: String::new(),
        k,
        prefactors: vec![base_prefactor(&map, a.clone())],
        lifting: map,
        params: Params::new(),
        lhs: WeightedSeries::new(
            vec![a.clone() / a.int_like(3), a.frac_like(1, 3) + a.clone() / a.int_like(3)],
            vec![lower],
            a,
        ),
        rhs,
    })
}

fn report_for<F: Field>(name: &str, k: Option<u32>, params: &Params<F>, order: usize, like: &F) -> VerificationReport {
    let mut r = VerificationReport::new(name, Mode::of(like)).with_order(order);
    r.k = k;
    for (n, v) in params.entries() {
        r = r.with_param(n, v);
    }
    r
}

/// Compare both sides of `id` coefficient-by-coefficient through `x^order`.
pub fn verify_transform<F: Field>(id: &TransformIdentity<F>, order: usize) -> Result<VerificationReport> {
    if order == 0 {
        return Err(Error::domain("verification order must be at least 1"));
    }
    check_lower_parameters(&id.lhs, None)?;
    check_lower_parameters(&id.rhs, None)?;
    let lhs = id.lhs_series(order)?;
    let rhs = id.rhs_series(order)?;
    Ok(report_for(&id.name, Some(id.k), &id.params, order, &id.lhs.scale).compare(lhs.coeffs(), rhs.coeffs()))
}

/// Series form of the master relation: the RHS series with weight
/// `(n + L)/L · Q_k(n)`, `L = la/(l+m)`, equals `(1 + (m/l) x/x0)` times the
/// series one level down.
pub fn verify_novelty<F: Field>(f: &QFamily<F>, order: usize) -> Result<VerificationReport> {
    if f.k == 0 {
        return Err(Error::domain("verify_novelty needs k >= 1"));
    }
    if f.d.is_some() {
        return Err(Error::domain("verify_novelty covers the three-parameter families"));
    }
    let map = LiftingMap::for_tag(f.tag);
    let a = &f.a;
    let big_l = a.int_like(map.l as i64) * a.clone() / a.int_like((map.l + map.m) as i64);
    if big_l.is_zero() {
        return Err(Error::domain("verify_novelty needs a != 0"));
    }
    let k_factor = Polynomial::linear(a.one_like(), a.one_like() / big_l);
    let top = rhs_series(f).with_weight(&k_factor * &q_poly(f)?)?;
    let down = f.shifted();
    let mut bottom_upper = vec![down.a.clone()];
    bottom_upper.extend(down.gamma_delta().0);
    let bottom = WeightedSeries::new(bottom_upper, down.gamma_delta().1, a).with_weight(q_poly(&down)?)?;
    let slope = a.int_like(map.m as i64) / (a.int_like(map.l as i64) * a.embed(&map.x0));
    let lhs = series_coefficients(&top, order)?;
    let rhs = series_coefficients(&bottom, order)?.mul(&power_prefactor_series(&slope, &a.one_like(), order));
    let mut params = Params::new().with("a", f.a.clone()).with("b", f.b.clone());
    if let Some(c) = &f.c {
        params.set("c", c.clone());
    }
    Ok(report_for(&format!("novelty-{}", f.tag.name()), Some(f.k), &params, order, a)
        .compare(lhs.coeffs(), rhs.coeffs()))
}

/// `F[Δ(l+m; a), (α); (β) | φ(x)] = (1 − x/x0)^a F[a; – | R(n) | x/x0]` with
/// `R(n) = F[Δ(l; −n), Δ(m; n+a), (α); (β) | 1]`.
pub fn verify_key_lemma<F: Field>(
    map: &LiftingMap,
    a: &F,
    alpha: &ParamArray<F>,
    beta: &ParamArray<F>,
    order: usize,
) -> Result<VerificationReport> {
    if (map.l + map.m) as usize + alpha.len() != beta.len() + 1 {
        return Err(Error::domain("key lemma needs l + m + |α| = |β| + 1"));
    }
    let mut upper = delta_array(map.l + map.m, a);
    upper.extend(alpha);
    let lhs_fn = WeightedSeries::new(upper.entries().to_vec(), beta.entries().to_vec(), a);
    let lhs = compose_series(&series_coefficients(&lhs_fn, order)?, &lifting_series(map, a, order))?;

    let inv = a.embed(&(Rational::from_integer(1.into()) / &map.x0));
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = a.one_like();
    for n in 0..=order {
        if n > 0 {
            fact = fact * a.int_like(n as i64);
        }
        let nn = a.int_like(n as i64);
        let mut up = delta_array(map.l, &-nn.clone());
        up.extend(&delta_array(map.m, &(nn + a.clone())));
        up.extend(alpha);
        let r = terminating_sum(&WeightedSeries::new(up.entries().to_vec(), beta.entries().to_vec(), a))?;
        coeffs.push(pochhammer(a, n as u64) / fact.clone() * r * inv.pow(n as u32));
    }
    let rhs = TruncatedSeries::new(coeffs).mul(&power_prefactor_series(&-inv, a, order));
    let mut params = Params::new().with("a", a.clone());
    for (i, v) in alpha.entries().iter().enumerate() {
        params.set(&format!("alpha{i}"), v.clone());
    }
    for (i, v) in beta.entries().iter().enumerate() {
        params.set(&format!("beta{i}"), v.clone());
    }
    let name = format!("key-lemma({},{};{})", map.l, map.m, map.x0);
    Ok(report_for(&name, None, &params, order, a).compare(lhs.coeffs(), rhs.coeffs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn coeffs(t: &TruncatedSeries<Rational>) -> Vec<Rational> {
        t.coeffs().to_vec()
    }

    #[test]
    fn lifting_examples() {
        let q = lifting_series(&LiftingMap::for_tag(QTag::Q2), &rat(1, 1), 3);
        assert_eq!(coeffs(&q), vec![rat(0, 1), rat(-4, 1), rat(-8, 1), rat(-12, 1)]);
        let c = lifting_series(&LiftingMap::for_tag(QTag::Q3), &rat(1, 1), 2);
        assert_eq!(c.coeffs()[1], rat(-27, 1));
        let cp = lifting_series(&LiftingMap::for_tag(QTag::Q3p), &rat(1, 1), 3);
        assert_eq!(cp.coeffs()[1], rat(0, 1));
        assert_eq!(cp.coeffs()[2], rat(27, 64));
    }

    #[test]
    fn composition_and_powers() {
        let geo = TruncatedSeries::new(vec![rat(1, 1); 5]);
        let x = TruncatedSeries::new(vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(compose_series(&geo, &x).unwrap(), geo);
        assert!(compose_series(&geo, &geo).is_err());
        let p = power_prefactor_series(&rat(-1, 1), &rat(1, 2), 3);
        assert_eq!(coeffs(&p), vec![rat(1, 1), rat(-1, 2), rat(-1, 8), rat(-1, 16)]);
        assert_eq!(power_prefactor_series(&rat(8, 1), &rat(-3, 1), 1).coeffs()[1], rat(-24, 1));
    }

    #[test]
    fn unknown_and_misparameterized() {
        let p = Params::new().with("a", rat(1, 1));
        assert!(matches!(build_identity("thmZ", 0, &p), Err(Error::UnknownIdentity(_))));
        assert!(matches!(build_identity("thmA2", 0, &p), Err(Error::Parse(_))));
        let p = p.with("b", rat(1, 3)).with("c", rat(1, 5)).with("e", rat(1, 1));
        assert!(matches!(build_identity("thmA2", 0, &p), Err(Error::Parse(_))));
    }

    #[test]
    fn whipple_quadratic_instance() {
        let p = Params::new().with("a", rat(1, 1)).with("b", rat(1, 3)).with("c", rat(1, 5));
        let id = build_identity("thmA2", 0, &p).unwrap();
        assert_eq!(id.lhs_excess(), rat(1, 2));
        let r = verify_transform(&id, 12).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn companion_excess() {
        let p = Params::new().with("a", rat(2, 3)).with("b", rat(1, 3)).with("c", rat(1, 5));
        let id = build_identity("thmC2", 2, &p).unwrap();
        assert_eq!(id.lhs_excess(), rat(-5, 2));
        assert!(verify_transform(&id, 10).unwrap().pass);
    }
}
