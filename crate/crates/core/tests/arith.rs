use hyperlift_core::arith::{
    factorial, format_rational, parse_rational, pochhammer, poly_roots, rat, rational_roots, ApproxScalar, BigFloat,
    Field, Polynomial, Rational,
};
use hyperlift_core::Error;
use num_traits::Signed;
use proptest::prelude::*;

fn poly(c: &[i64]) -> Polynomial<Rational> {
    Polynomial::new(c.iter().map(|&v| rat(v, 1)).collect())
}

#[test]
fn pochhammer_values() {
    assert_eq!(pochhammer(&rat(7, 3), 0), rat(1, 1));
    assert_eq!(pochhammer(&rat(3, 1), 4), rat(360, 1));
    assert_eq!(pochhammer(&rat(-2, 1), 4), rat(0, 1));
    assert_eq!(factorial(&rat(1, 1), 5), rat(120, 1));
}

#[test]
fn polynomial_arithmetic() {
    assert_eq!(poly(&[1, 1]) + poly(&[-1, 1]), poly(&[0, 2]));
    assert_eq!(poly(&[2, 1]) * poly(&[3, 1]), poly(&[6, 5, 1]));
    assert_eq!(poly(&[0, 0, 1]).compose_affine(&rat(1, 1), &rat(-1, 1)), poly(&[1, -2, 1]));
    let p = poly(&[6, 5, 1]);
    assert_eq!(p.eval(&rat(1, 1)), rat(12, 1));
    assert_eq!(p.eval(&rat(-2, 1)), rat(0, 1));
    assert_eq!(Polynomial::<Rational>::zero().eval(&rat(7, 1)), rat(0, 1));
}

#[test]
fn exact_division_reports_remainder() {
    let q = poly(&[6, 5, 1]).exact_div(&poly(&[2, 1]), "test").unwrap();
    assert_eq!(q, poly(&[3, 1]));
    let err = poly(&[7, 5, 1]).exact_div(&poly(&[2, 1]), "test").unwrap_err();
    assert!(matches!(err, Error::Consistency(_)));
}

#[test]
fn roots_of_factored_quadratic() {
    let mut r = rational_roots(&poly(&[6, 5, 1])).unwrap();
    r.sort();
    assert_eq!(r, vec![rat(-3, 1), rat(-2, 1)]);
    assert!(poly_roots(&poly(&[1]), 128).unwrap().is_empty());
    assert!(matches!(poly_roots(&Polynomial::zero(), 128), Err(Error::Domain(_))));
}

#[test]
fn irrational_roots_numerically() {
    // n^2 - 2
    let roots = poly_roots(&poly(&[-2, 0, 1]), 256).unwrap();
    assert_eq!(roots.len(), 2);
    let tol = BigFloat::from_rational(&rat(1, 1), 256).ldexp(-200);
    for r in &roots {
        let sq = r.clone() * r.clone();
        assert!(sq.within(&ApproxScalar::from_rational(&rat(2, 1), 256), &tol));
    }
}

#[test]
fn parse_rejects_decimals() {
    assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
    assert_eq!(parse_rational(" 4 ").unwrap(), rat(4, 1));
    assert!(matches!(parse_rational("0.5"), Err(Error::Parse(_))));
    assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
}

#[test]
fn approx_matches_rational() {
    let x = rat(355, 113);
    let a = x.to_approx(200);
    assert!(a.is_real());
    assert_eq!(a.re.to_rational(), BigFloat::from_rational(&x, 200).to_rational());
    let diff = (a.re.to_rational() - x).abs();
    assert!(diff < rat(1, 1) / Rational::from_integer(num_bigint::BigInt::from(2).pow(190)));
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn small_poly() -> impl Strategy<Value = Polynomial<Rational>> {
    prop::collection::vec(small_rational(), 0..5).prop_map(Polynomial::new)
}

proptest! {
    #[test]
    fn format_parse_round_trip(r in small_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in small_poly(), q in small_poly(), x in small_rational()) {
        prop_assert_eq!((p.clone() * q.clone()).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((p.clone() + q.clone()).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn division_identity(p in small_poly(), q in small_poly()) {
        prop_assume!(!q.is_zero());
        let (quo, rem) = p.div_rem(&q);
        prop_assert_eq!(quo * q.clone() + rem.clone(), p);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
    }

    #[test]
    fn pochhammer_splits(c in small_rational(), m in 0u64..5, n in 0u64..5) {
        let shifted = c.clone() + rat(m as i64, 1);
        prop_assert_eq!(pochhammer(&c, m + n), pochhammer(&c, m) * pochhammer(&shifted, n));
    }

    #[test]
    fn rational_roots_vanish(p in small_poly()) {
        prop_assume!(!p.is_zero());
        for r in rational_roots(&p).unwrap() {
            prop_assert!(p.eval(&r).is_zero());
        }
    }
}
