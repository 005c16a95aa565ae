//! The weight polynomials: `Q_k` of the quadratic and two cubic families
//! (three- and four-parameter), the bold/hat families built by k-raising
//! relations, and `P_k`.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{pochhammer, poly_roots, ApproxScalar, BigFloat, Field, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QTag {
    Q2,
    Q3,
    Q3p,
}

impl QTag {
    /// Lifting data `(l, m, x0)`.
    pub fn lifting(self) -> (u32, u32, Rational) {
        match self {
            QTag::Q2 => (1, 1, Rational::from_integer(1.into())),
            QTag::Q3 => (1, 2, Rational::new(1.into(), 4.into())),
            QTag::Q3p => (2, 1, Rational::from_integer(4.into())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QTag::Q2 => "Q2",
            QTag::Q3 => "Q3",
            QTag::Q3p => "Q3p",
        }
    }
}

/// One member `Q_k(n; a; b[, c][; d])` of a weight family.
#[derive(Clone, Debug, PartialEq)]
pub struct QFamily<F> {
    pub tag: QTag,
    pub k: u32,
    pub a: F,
    pub b: F,
    /// Present exactly for the quadratic family.
    pub c: Option<F>,
    /// Present for the four-parameter variants.
    pub d: Option<F>,
}

impl<F: Field> QFamily<F> {
    pub fn q2(k: u32, a: F, b: F, c: F) -> Self {
        QFamily { tag: QTag::Q2, k, a, b, c: Some(c), d: None }
    }

    pub fn q3(k: u32, a: F, b: F) -> Self {
        QFamily { tag: QTag::Q3, k, a, b, c: None, d: None }
    }

    pub fn q3p(k: u32, a: F, b: F) -> Self {
        QFamily { tag: QTag::Q3p, k, a, b, c: None, d: None }
    }

    pub fn with_d(mut self, d: F) -> Self {
        self.d = Some(d);
        self
    }

    fn c(&self) -> &F {
        self.c.as_ref().expect("the quadratic family carries c")
    }

    fn like(&self) -> &F {
        &self.a
    }

    /// Expected degree in `n`.
    pub fn degree(&self) -> usize {
        match (self.tag, self.d.is_some()) {
            (QTag::Q2, _) | (_, false) => 2 * self.k as usize,
            (_, true) => 3 * self.k as usize,
        }
    }

    /// The companion arrays `(γ)` and `(δ)` of the right-hand series at this level.
    pub fn gamma_delta(&self) -> (Vec<F>, Vec<F>) {
        let l = self.like();
        let (a, b) = (self.a.clone(), self.b.clone());
        let k = l.int_like(self.k as i64);
        let half = l.frac_like(1, 2);
        let one = l.one_like();
        match self.tag {
            QTag::Q2 => {
                let c = self.c().clone();
                (
                    alloc::vec![b.clone(), c.clone()],
                    alloc::vec![one.clone() + a.clone() - b, one + a - c],
                )
            }
            QTag::Q3 => {
                let g = half.clone() - k.clone();
                let dl = l.frac_like(3, 4) + k / l.int_like(2) + a / l.int_like(2);
                let hb = b.clone() / l.int_like(2);
                (
                    alloc::vec![g.clone() - b.clone(), g + b],
                    alloc::vec![dl.clone() + hb.clone(), dl - hb],
                )
            }
            QTag::Q3p => {
                let g = l.frac_like(1, 4) - k.clone() / l.int_like(2) + a.clone() / l.int_like(2);
                let hb = b.clone() / l.int_like(2);
                let dl = half + k + a;
                (
                    alloc::vec![g.clone() - hb.clone(), g + hb],
                    alloc::vec![dl.clone() + b.clone(), dl - b],
                )
            }
        }
    }

    /// The family at level `k-1` with `a+1` (and `b+1, c+1` for the quadratic
    /// family; `d+1` for four-parameter variants).
    pub fn shifted(&self) -> Self {
        assert!(self.k >= 1, "no level below k = 0");
        let one = self.like().one_like();
        QFamily {
            tag: self.tag,
            k: self.k - 1,
            a: self.a.clone() + one.clone(),
            b: match self.tag {
                QTag::Q2 => self.b.clone() + one.clone(),
                _ => self.b.clone(),
            },
            c: self.c.clone().map(|c| c + one.clone()),
            d: self.d.clone().map(|d| d + one.clone()),
        }
    }
}

fn nonzero<F: Field>(v: &F, what: &str) -> Result<()> {
    if v.is_zero() {
        Err(Error::domain(format!("singular parameters: {what} vanishes")))
    } else {
        Ok(())
    }
}

/// `(c)_j` of a constant, rejected when it vanishes.
fn nonzero_poch<F: Field>(c: &F, j: u64, name: &str) -> Result<F> {
    let v = pochhammer(c, j);
    nonzero(&v, &format!("({name})_{j} with {name} = {c}"))?;
    Ok(v)
}

fn lin<F: Field>(c0: F, c1: F) -> Polynomial<F> {
    Polynomial::linear(c0, c1)
}

/// `Q_k` from its terminating hypergeometric representation.
pub fn q_poly<F: Field>(f: &QFamily<F>) -> Result<Polynomial<F>> {
    let l = f.like().clone();
    let k = f.k as u64;
    let kk = l.int_like(f.k as i64);
    let one = l.one_like();
    let zero = l.zero_like();
    let half = l.frac_like(1, 2);
    let two = l.int_like(2);
    let neg_n = lin(zero.clone(), -one.clone());
    let mut total = Polynomial::zero();
    let mut fact = one.clone();
    for j in 0..=k {
        if j > 0 {
            fact = fact * l.int_like(j as i64);
        }
        let coef = pochhammer(&-kk.clone(), j) / fact.clone();
        let mut term = neg_n.pochhammer(j, &l);
        match f.tag {
            QTag::Q2 => {
                let c = f.c();
                term = &term * &lin(f.a.clone(), one.clone()).pochhammer(j, &l);
                let den = nonzero_poch(&f.b, j, "b")? * nonzero_poch(c, j, "c")?;
                let mut coef = coef / den;
                if let Some(d) = &f.d {
                    let e = kk.clone() - one.clone() - f.a.clone() + f.b.clone() + c.clone() + d.clone();
                    coef = coef * pochhammer(&e, j) / nonzero_poch(d, j, "d")?;
                }
                term = term.scale(&coef);
            }
            QTag::Q3 => {
                // (n/2 + a/2)_j (X + j)_{k-j} (Y + j)_{k-j}
                let ha = f.a.clone() / two.clone();
                term = &term * &lin(ha.clone(), half.clone()).pochhammer(j, &l);
                let base = l.frac_like(1, 4) - kk.clone() / two.clone();
                let hb = f.b.clone() / two.clone();
                let jj = l.int_like(j as i64);
                let x = lin(base.clone() + hb.clone() + jj.clone(), -half.clone());
                let y = lin(base - hb + jj, -half.clone());
                term = &(&term * &x.pochhammer(k - j, &l)) * &y.pochhammer(k - j, &l);
                let mut coef = coef;
                if let Some(d) = &f.d {
                    let e = lin(d.clone() - ha - half.clone(), -half.clone());
                    term = &term * &e.pochhammer(j, &l);
                    coef = coef / nonzero_poch(d, j, "d")?;
                }
                term = term.scale(&coef);
            }
            QTag::Q3p => {
                // (-n/2)_j (-n/2 + 1/2)_j (A - n + j)_{k-j} (B - n + j)_{k-j}
                term = lin(zero.clone(), -half.clone()).pochhammer(j, &l);
                term = &term * &lin(half.clone(), -half.clone()).pochhammer(j, &l);
                let (pa, pb) = q3p_ab(f);
                let jj = l.int_like(j as i64);
                let x = lin(pa + jj.clone(), -one.clone());
                let y = lin(pb + jj, -one.clone());
                term = &(&term * &x.pochhammer(k - j, &l)) * &y.pochhammer(k - j, &l);
                let mut coef = coef;
                if let Some(d) = &f.d {
                    let e = lin(d.clone() - f.a.clone(), -one.clone());
                    term = &term * &e.pochhammer(j, &l);
                    coef = coef / nonzero_poch(d, j, "d")?;
                }
                term = term.scale(&coef);
            }
        }
        total = &total + &term;
    }
    let norm = match f.tag {
        QTag::Q2 => one,
        QTag::Q3 => {
            let four_k = l.int_like(4).pow(f.k);
            let p = nonzero_poch(&(half.clone() + f.b.clone()), k, "1/2+b")?
                * nonzero_poch(&(half.clone() - f.b.clone()), k, "1/2-b")?;
            four_k / p
        }
        QTag::Q3p => {
            let (pa, pb) = q3p_ab(f);
            one / (nonzero_poch(&pa, k, "3/4-k/2-a/2+b/2")? * nonzero_poch(&pb, k, "3/4-k/2-a/2-b/2")?)
        }
    };
    Ok(total.scale(&norm))
}

fn q3p_ab<F: Field>(f: &QFamily<F>) -> (F, F) {
    let l = f.like();
    let two = l.int_like(2);
    let base = l.frac_like(3, 4) - l.int_like(f.k as i64) / two.clone() - f.a.clone() / two.clone();
    let hb = f.b.clone() / two;
    (base.clone() + hb.clone(), base - hb)
}

/// `Π over the list of (n + v)`.
fn prod_shifted<F: Field>(vals: &[F], like: &F) -> Polynomial<F> {
    vals.iter().fold(Polynomial::one_like(like), |acc, v| {
        &acc * &Polynomial::n_plus(v.clone())
    })
}

/// One step of the master k-raising relation: `Q_k` from
/// `Q_{k-1,+} = q_prev`.
pub fn master_raise<F: Field>(f: &QFamily<F>, q_prev: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.k == 0 {
        return Err(Error::domain("master_raise needs k >= 1"));
    }
    let like = f.like().clone();
    let (l, m, x0) = f.tag.lifting();
    let (lf, mf) = (like.int_like(l as i64), like.int_like(m as i64));
    let x0f = like.embed(&x0);
    let big_l = lf.clone() * f.a.clone() / like.int_like((l + m) as i64);
    nonzero(&big_l, "l a/(l+m)")?;
    let (gamma, delta) = f.gamma_delta();
    let mut top: Vec<F> = alloc::vec![f.a.clone()];
    top.extend(gamma.iter().cloned());
    let pi0 = top.iter().fold(like.one_like(), |acc, v| acc * v.clone());
    nonzero(&pi0, "the product of (a, γ)")?;

    let mut bottom: Vec<F> = alloc::vec![like.zero_like()];
    bottom.extend(delta.iter().map(|d| d.clone() - like.one_like()));
    let p_up = prod_shifted(&top, &like);
    let p_down = prod_shifted(&bottom, &like);
    let prev_back = q_prev.shift(&-like.one_like());

    let (a0, a1) = match &f.d {
        None => (
            Polynomial::one_like(&like),
            Polynomial::constant(mf.clone() / (lf.clone() * x0f.clone())),
        ),
        Some(d) => {
            nonzero(d, "d")?;
            let ld = lf.clone() * d.clone();
            let a0 = lin(ld.clone(), like.one_like()).scale(&(like.one_like() / ld));
            let den = lf.clone() * x0f.clone() * d.clone();
            let a1 = lin(f.a.clone() - mf.clone() * d.clone(), like.one_like())
                .scale(&(-like.one_like() / den));
            (a0, a1)
        }
    };
    let rhs = &(&(&a0 * &p_up) * q_prev) + &(&(&a1 * &p_down) * &prev_back);
    // K Π(a,γ) = Π(a,γ) (n + L)/L
    let scaled = rhs.scale(&(big_l.clone() / pi0));
    scaled.exact_div(&Polynomial::n_plus(big_l), "master k-raising relation")
}

/// `Q_k` built by iterating [`master_raise`] from `Q_0 = 1`.
pub fn iterated_master<F: Field>(f: &QFamily<F>) -> Result<Polynomial<F>> {
    let mut chain = alloc::vec![f.clone()];
    while chain.last().unwrap().k > 0 {
        let next = chain.last().unwrap().shifted();
        chain.push(next);
    }
    let mut q = Polynomial::one_like(f.like());
    for fam in chain.iter().rev().skip(1) {
        q = master_raise(fam, &q)?;
    }
    Ok(q)
}

/// `bc (Q_k(n+1) − Q_k(n)) / (2n + a + 1)`, which equals `k Q_{k-1,+}`.
pub fn lower_q2<F: Field>(f: &QFamily<F>, q_k: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.tag != QTag::Q2 || f.d.is_some() {
        return Err(Error::domain("lower_q2 applies to the three-parameter quadratic family"));
    }
    if f.k == 0 {
        return Err(Error::domain("lower_q2 needs k >= 1"));
    }
    let like = f.like();
    let bc = f.b.clone() * f.c().clone();
    let diff = &q_k.shift(&like.one_like()) - q_k;
    let lattice_step = lin(f.a.clone() + like.one_like(), like.int_like(2));
    diff.scale(&bc).exact_div(&lattice_step, "k-lowering relation")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoldTag {
    BQ2,
    BQ3,
    BQ3p,
}

impl BoldTag {
    pub fn base(self) -> QTag {
        match self {
            BoldTag::BQ2 => QTag::Q2,
            BoldTag::BQ3 => QTag::Q3,
            BoldTag::BQ3p => QTag::Q3p,
        }
    }
}

/// A member of a bold family: `BQ2(n; a; b, c)` or `BQ3(n; a; b)`, `BQ3p(n; a; b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoldFamily<F> {
    pub tag: BoldTag,
    pub k: u32,
    pub a: F,
    pub b: F,
    pub c: Option<F>,
}

impl<F: Field> BoldFamily<F> {
    pub fn bq2(k: u32, a: F, b: F, c: F) -> Self {
        BoldFamily { tag: BoldTag::BQ2, k, a, b, c: Some(c) }
    }

    pub fn bq3(k: u32, a: F, b: F) -> Self {
        BoldFamily { tag: BoldTag::BQ3, k, a, b, c: None }
    }

    pub fn bq3p(k: u32, a: F, b: F) -> Self {
        BoldFamily { tag: BoldTag::BQ3p, k, a, b, c: None }
    }

    fn as_q(&self) -> QFamily<F> {
        QFamily {
            tag: self.tag.base(),
            k: self.k,
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: None,
        }
    }

    fn shifted(&self) -> Self {
        let q = self.as_q().shifted();
        BoldFamily { tag: self.tag, k: q.k, a: q.a, b: q.b, c: q.c }
    }
}

/// The bold polynomial. The quadratic one is `(1 + 2n/a)` times
/// [`hat_q2`]; the cubic ones iterate their raising relations from the seeds
/// `1 + 3n/a` and `1 + 3n/(2a)`.
pub fn bold_q<F: Field>(f: &BoldFamily<F>) -> Result<Polynomial<F>> {
    match f.tag {
        BoldTag::BQ2 => {
            nonzero(&f.a, "a")?;
            let hat = hat_q2(f.k, &f.a, &f.b, f.c.as_ref().expect("BQ2 carries c"))?;
            let like = &f.a;
            let factor = lin(like.one_like(), like.int_like(2) / f.a.clone());
            Ok(&factor * &hat)
        }
        _ => bold_q_master(f),
    }
}

/// Seed of a bold family at `k = 0`.
fn bold_seed<F: Field>(tag: BoldTag, a: &F) -> Result<Polynomial<F>> {
    nonzero(a, "a")?;
    let slope = match tag {
        BoldTag::BQ2 => a.int_like(2) / a.clone(),
        BoldTag::BQ3 => a.int_like(3) / a.clone(),
        BoldTag::BQ3p => a.int_like(3) / (a.int_like(2) * a.clone()),
    };
    Ok(lin(a.one_like(), slope))
}

/// One step of the bold raising relation
/// `l Π(a,γ) BQ_k = A0 Π(n+(a,γ)) BQ_{k-1,+}(n) + A1 n Π(n-1+δ) BQ_{k-1,+}(n-1)`.
pub fn bold_raise<F: Field>(f: &BoldFamily<F>, prev: &Polynomial<F>) -> Result<Polynomial<F>> {
    if f.k == 0 {
        return Err(Error::domain("bold_raise needs k >= 1"));
    }
    let like = f.a.clone();
    let q = f.as_q();
    let (l, m, x0) = q.tag.lifting();
    let (lf, mf, x0f) = (like.int_like(l as i64), like.int_like(m as i64), like.embed(&x0));
    let kk = like.int_like(f.k as i64);
    let s = kk.clone() * like.int_like(2) + f.a.clone();
    nonzero(&s, "2k + a")?;
    let (gamma, delta) = q.gamma_delta();
    let mut top = alloc::vec![f.a.clone()];
    top.extend(gamma.iter().cloned());
    let pi0 = top.iter().fold(like.one_like(), |acc, v| acc * v.clone());
    nonzero(&pi0, "the product of (a, γ)")?;
    let mut bottom = alloc::vec![like.zero_like()];
    bottom.extend(delta.iter().map(|d| d.clone() - like.one_like()));
    let lm = lf.clone() + mf.clone();
    let a0 = lin(
        like.int_like(2) * lf.clone() * kk.clone() + lf.clone() * f.a.clone(),
        lm.clone(),
    )
    .scale(&(like.one_like() / s.clone()));
    let a1 = lin(
        -(like.int_like(2) * mf.clone() * kk) + lf.clone() * f.a.clone(),
        lm,
    )
    .scale(&(mf / (lf.clone() * x0f * s)));
    let rhs = &(&(&a0 * &prod_shifted(&top, &like)) * prev)
        + &(&(&a1 * &prod_shifted(&bottom, &like)) * &prev.shift(&-like.one_like()));
    Ok(rhs.scale(&(like.one_like() / (lf * pi0))))
}

/// Bold polynomial by iterating [`bold_raise`] from the seed.
pub fn bold_q_master<F: Field>(f: &BoldFamily<F>) -> Result<Polynomial<F>> {
    let mut chain = alloc::vec![f.clone()];
    while chain.last().unwrap().k > 0 {
        let next = chain.last().unwrap().shifted();
        chain.push(next);
    }
    let bottom = chain.last().unwrap();
    let mut q = bold_seed(f.tag, &bottom.a)?;
    for fam in chain.iter().rev().skip(1) {
        q = bold_raise(fam, &q)?;
    }
    Ok(q)
}

/// `hat Q_k(n; a; b, c)` from `hat Q_0 = 1` and its raising relation
/// (division by `n + a/2` must be exact).
pub fn hat_q2<F: Field>(k: u32, a: &F, b: &F, c: &F) -> Result<Polynomial<F>> {
    let one = a.one_like();
    let half = a.frac_like(1, 2);
    let mut q = Polynomial::one_like(a);
    for level in 1..=k {
        let shift = a.int_like((k - level) as i64);
        let (a, b, c) = (a.clone() + shift.clone(), b.clone() + shift.clone(), c.clone() + shift);
        let kk = a.int_like(level as i64);
        let ha = a.clone() / a.int_like(2);
        let lead = (kk.clone() + ha.clone()) * (one.clone() + a.clone()) * b.clone() * c.clone();
        nonzero(&lead, "(k + a/2)(1 + a) b c")?;
        let up = prod_shifted(
            &[kk.clone() + ha.clone(), a.clone(), b.clone(), c.clone(), half.clone() + ha.clone()],
            &a,
        );
        let down = prod_shifted(
            &[
                ha.clone() - kk,
                a.zero_like(),
                a.clone() - b.clone(),
                a.clone() - c.clone(),
                ha.clone() - half.clone(),
            ],
            &a,
        );
        let rhs = &(&up * &q) + &(&down * &q.shift(&-one.clone()));
        q = rhs
            .scale(&(one.clone() / lead))
            .exact_div(&Polynomial::n_plus(ha), "hat k-raising relation")?;
    }
    Ok(q)
}

/// `hat Q_k(n; a; b, 1/2 − k + a/2)` in closed form,
/// `(x + n)_{2k}/(x)_{2k} · 3F2[−n, n+a, −k; b, 1+a/2; 1]` with
/// `x = 1/2 − k + a/2`, checked against the raising relation.
pub fn hat_q2_special<F: Field>(k: u32, a: &F, b: &F) -> Result<Polynomial<F>> {
    let one = a.one_like();
    let kk = a.int_like(k as i64);
    let ha = a.clone() / a.int_like(2);
    let x = a.frac_like(1, 2) - kk.clone() + ha.clone();
    let c = x.clone();
    let lower = one.clone() + ha;
    let mut sum = Polynomial::zero();
    let mut fact = one.clone();
    for j in 0..=k as u64 {
        if j > 0 {
            fact = fact * a.int_like(j as i64);
        }
        let den = nonzero_poch(b, j, "b")? * nonzero_poch(&lower, j, "1+a/2")? * fact.clone();
        let coef = pochhammer(&-kk.clone(), j) / den;
        let t = &lin(a.zero_like(), -one.clone()).pochhammer(j, a)
            * &lin(a.clone(), one.clone()).pochhammer(j, a);
        sum = &sum + &t.scale(&coef);
    }
    let pref_den = nonzero_poch(&x, 2 * k as u64, "1/2-k+a/2")?;
    let pref = Polynomial::n_plus(x.clone()).pochhammer(2 * k as u64, a).scale(&(one / pref_den));
    let closed = &pref * &sum;
    let recurrence = hat_q2(k, a, b, &c)?;
    if !poly_near(&closed, &recurrence) {
        return Err(Error::consistency(format!(
            "hat Q_{k} closed form disagrees with the raising relation"
        )));
    }
    for i in 0..2 * k as i64 {
        let xi = x.clone() + a.int_like(i);
        if !closed.eval(&-xi.clone()).is_negligible() {
            return Err(Error::consistency(format!("{xi} is not a negated root of hat Q_{k}")));
        }
    }
    Ok(closed)
}

pub(crate) fn poly_near<F: Field>(p: &Polynomial<F>, q: &Polynomial<F>) -> bool {
    (p - q).coeffs().iter().all(Field::is_negligible)
}

/// `P_k(n; A, B) = Σ_j (−1)^j C(2k+1, j) (n+B)_j (n+A)_{2k+1−j}`, a polynomial
/// of degree `k` with `P_k(n; A, B) = −P_k(n; B, A)`.
pub fn p_poly<F: Field>(k: u32, big_a: &F, big_b: &F) -> Polynomial<F> {
    let top = 2 * k as u64 + 1;
    let mut binom = big_a.one_like();
    let mut total = Polynomial::zero();
    for j in 0..=top {
        if j > 0 {
            binom = binom * big_a.int_like((top - j + 1) as i64) / big_a.int_like(j as i64);
        }
        let sign = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
        let t = &Polynomial::n_plus(big_b.clone()).pochhammer(j, big_a)
            * &Polynomial::n_plus(big_a.clone()).pochhammer(top - j, big_a);
        total = &total + &t.scale(&sign);
    }
    total
}

/// Negated roots `ξ = −r` of `q`, sorted by real part.
pub fn negated_roots(q: &Polynomial<Rational>, precision_bits: u32) -> Result<Vec<ApproxScalar>> {
    if q.degree().unwrap_or(0) == 0 {
        return Err(Error::domain("negated_roots needs a nonconstant polynomial"));
    }
    let mut out: Vec<ApproxScalar> = poly_roots(q, precision_bits)?.into_iter().map(|r| -r).collect();
    out.reverse();
    Ok(out)
}

/// As [`negated_roots`], additionally asserting that the multiset is
/// symmetric about `a/2` (the quadratic-lattice structure).
pub fn negated_roots_q2(q: &Polynomial<Rational>, a: &Rational, precision_bits: u32) -> Result<Vec<ApproxScalar>> {
    let xs = negated_roots(q, precision_bits)?;
    let af = ApproxScalar::from_rational(a, precision_bits);
    let tol = BigFloat::from_int(1, precision_bits).ldexp(-((precision_bits / 4) as i64));
    let mut pool: Vec<&ApproxScalar> = xs.iter().collect();
    for x in &xs {
        let mirror = af.clone() - x.clone();
        match pool.iter().position(|y| y.within(&mirror, &tol)) {
            Some(i) => {
                pool.swap_remove(i);
            }
            None => {
                return Err(Error::consistency(format!(
                    "negated root {x:.16} has no mirror image about a/2"
                )))
            }
        }
    }
    Ok(xs)
}

/// `p(−n − a)`; the quadratic families are fixed by this substitution.
pub fn reflect<F: Field>(p: &Polynomial<F>, a: &F) -> Polynomial<F> {
    p.compose_affine(&-a.one_like(), &-a.clone())
}
