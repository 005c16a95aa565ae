use hyperlift_core::arith::{rat, ApproxScalar, BigFloat, Field, Rational};
use hyperlift_core::hyperseries::{series_coefficients, ParamArray, TruncatedSeries, WeightedSeries};
use hyperlift_core::qpoly::QFamily;
use hyperlift_core::transforms::{
    build_identity, compose_series, identity_params, lifting_series, power_prefactor_series, verify_key_lemma,
    verify_novelty, verify_transform, LiftingMap, Params, REGISTRY, THEOREMS,
};
use hyperlift_core::Error;
use proptest::prelude::*;

fn r(v: i64) -> Rational {
    rat(v, 1)
}

fn abc(a: Rational, b: Rational, c: Rational) -> Params<Rational> {
    Params::new().with("a", a).with("b", b).with("c", c)
}

#[test]
fn lifting_map_expansions() {
    let q = lifting_series(&LiftingMap::new(1, 1, r(1)).unwrap(), &r(1), 5);
    assert_eq!(q.coeffs(), &[r(0), r(-4), r(-8), r(-12), r(-16), r(-20)]);

    let c1 = lifting_series(&LiftingMap::new(1, 2, rat(1, 4)).unwrap(), &r(1), 3);
    assert_eq!(c1.coeffs()[..2], [r(0), r(-27)]);

    let c2 = lifting_series(&LiftingMap::new(2, 1, r(4)).unwrap(), &r(1), 3);
    assert_eq!(c2.coeffs()[..3], [r(0), r(0), rat(27, 64)]);

    for (tag_map, l) in [(LiftingMap::new(1, 2, rat(1, 4)).unwrap(), 1), (LiftingMap::new(2, 1, r(4)).unwrap(), 2)] {
        let s = lifting_series(&tag_map, &r(1), 8);
        assert!(s.coeffs()[..l].iter().all(|c| *c == r(0)));
        assert!(s.coeffs()[l] != r(0));
    }
}

#[test]
fn binomial_prefactors() {
    assert_eq!(power_prefactor_series(&r(-1), &r(-1), 4).coeffs(), vec![r(1); 5].as_slice());
    let sqrt = power_prefactor_series(&r(-1), &rat(1, 2), 3);
    assert_eq!(sqrt.coeffs(), &[r(1), rat(-1, 2), rat(-1, 8), rat(-1, 16)]);
    assert_eq!(power_prefactor_series(&r(8), &r(-3), 1).coeffs()[1], r(-24));
}

#[test]
fn composition() {
    let inner = TruncatedSeries::new(vec![r(0), r(1), r(0), r(0), r(0)]);
    let geometric = TruncatedSeries::new(vec![r(1); 5]);
    assert_eq!(compose_series(&geometric, &inner).unwrap(), geometric);
    let constant = TruncatedSeries::new(vec![rat(3, 2), r(0), r(0), r(0), r(0)]);
    let unit = |n: usize| TruncatedSeries::new((0..=n).map(|i| if i == 0 { r(1) } else { r(0) }).collect());
    let inner2 = power_prefactor_series(&r(1), &r(-2), 4).sub(&unit(4));
    assert_eq!(compose_series(&constant, &inner2).unwrap(), constant);
    let bad_inner = TruncatedSeries::new(vec![r(1), r(1)]);
    assert!(matches!(compose_series(&geometric, &bad_inner), Err(Error::Domain(_))));
    // 1/(1−t) at t = x/(1+x) is 1 + x
    let t = power_prefactor_series(&r(1), &r(-1), 6).sub(&unit(6)).scale(&r(-1));
    let composed = compose_series(&TruncatedSeries::new(vec![r(1); 7]), &t).unwrap();
    assert_eq!(composed.coeffs(), &[r(1), r(1), r(0), r(0), r(0), r(0), r(0)]);
}

#[test]
fn registry_lookup() {
    assert_eq!(identity_params("thmA2").unwrap(), &["a", "b", "c"]);
    assert!(matches!(identity_params("thmZ9"), Err(Error::UnknownIdentity(_))));
    assert!(matches!(build_identity::<Rational>("thmZ9", 0, &Params::new()), Err(Error::UnknownIdentity(_))));
    assert_eq!(REGISTRY.len(), 16);
    assert!(THEOREMS.iter().all(|t| identity_params(t).is_ok()));
}

#[test]
fn quadratic_transformation_at_k0() {
    let id = build_identity("thmA2", 0, &abc(r(1), rat(1, 3), rat(1, 5))).unwrap();
    let report = verify_transform(&id, 12).unwrap();
    assert!(report.pass);
    assert_eq!(report.order, Some(12));
    assert_eq!(id.lhs_series(12).unwrap().coeffs().len(), 13);
}

#[test]
fn quadratic_transformation_at_k2() {
    let id = build_identity("thmA2", 2, &abc(rat(-3, 7), rat(5, 2), rat(2, 9))).unwrap();
    assert!(verify_transform(&id, 16).unwrap().pass);
}

#[test]
fn companion_prefactors_at_k0() {
    let a = rat(4, 9);
    let id = build_identity("thmC2", 0, &abc(a.clone(), rat(-1, 4), rat(7, 3))).unwrap();
    let exps: Vec<(Rational, Rational)> = id.prefactors.iter().map(|p| (p.slope.clone(), p.exponent.clone())).collect();
    assert!(exps.contains(&(r(1), r(-1))), "{exps:?}");
    assert!(exps.contains(&(r(-1), r(1) + a)), "{exps:?}");
    assert!(verify_transform(&id, 16).unwrap().pass);
}

#[test]
fn wrong_prefactor_fails_with_index() {
    let mut id = build_identity("thmA3", 1, &Params::new().with("a", rat(2, 5)).with("b", rat(-1, 3))).unwrap();
    id.prefactors[0].exponent = id.prefactors[0].exponent.clone() + rat(1, 7);
    let report = verify_transform(&id, 10).unwrap();
    assert!(!report.pass);
    assert_eq!(report.first_mismatch.unwrap().index, 1);
}

#[test]
fn specializations_agree_with_full_theorems() {
    let (a, b, d) = (rat(3, 4), rat(-2, 7), rat(5, 3));
    let c = rat(1, 2) + a.clone() / r(2);
    for k in 0..3u32 {
        let ab = Params::new().with("a", a.clone()).with("b", b.clone());
        let special = build_identity("lastmin2", k, &ab).unwrap();
        let full = build_identity("thmA2", k, &abc(a.clone(), b.clone(), c.clone())).unwrap();
        assert!(verify_transform(&special, 14).unwrap().pass);
        assert_eq!(special.rhs_series(14).unwrap(), full.rhs_series(14).unwrap(), "lastmin2 k = {k}");

        let abd = ab.clone().with("d", d.clone());
        let special = build_identity("rrplus", k, &abd).unwrap();
        let full = build_identity("thmB2", k, &abc(a.clone(), b.clone(), c.clone()).with("d", d.clone())).unwrap();
        assert!(verify_transform(&special, 14).unwrap().pass);
        assert_eq!(special.rhs_series(14).unwrap(), full.rhs_series(14).unwrap(), "rrplus k = {k}");
    }
    let niblett = build_identity("niblett", 1, &abc(rat(1, 3), rat(7, 2), rat(-5, 4))).unwrap();
    assert!(verify_transform(&niblett, 16).unwrap().pass);
}

#[test]
fn curious_specialization_numerically() {
    let bits = 256;
    let s = ApproxScalar::from_rational(&rat(1, 2), bits);
    let id = build_identity("curious", 1, &Params::new().with("s", s)).unwrap();
    let report = verify_transform(&id, 12).unwrap();
    assert!(report.pass);
    let tol = BigFloat::from_rational(&(r(1) / Field::pow(&r(10), 40)), bits);
    assert!(report.max_abs_diff.unwrap() < tol);
}

#[test]
fn novelty_relation() {
    let q2 = QFamily::q2(1, rat(2, 3), rat(-5, 4), rat(3, 7));
    assert!(verify_novelty(&q2, 12).unwrap().pass);
    let q3 = QFamily::q3(1, rat(1, 5), rat(4, 3));
    assert!(verify_novelty(&q3, 12).unwrap().pass);
    let q3p = QFamily::q3p(2, rat(-3, 5), rat(2, 9));
    assert!(verify_novelty(&q3p, 10).unwrap().pass);
    assert!(verify_novelty(&QFamily::q2(0, r(1), r(2), r(3)), 6).is_err());
}

#[test]
fn key_lemma_instances() {
    let (a, b, c) = (rat(2, 7), rat(-4, 3), rat(5, 8));
    for k in 0..3i64 {
        let alpha = ParamArray::new(vec![r(1) - r(k) + a.clone() - b.clone() - c.clone()]);
        let beta = ParamArray::new(vec![r(1) + a.clone() - b.clone(), r(1) + a.clone() - c.clone()]);
        let map = LiftingMap::new(1, 1, r(1)).unwrap();
        assert!(verify_key_lemma(&map, &a, &alpha, &beta, 12).unwrap().pass, "k = {k}");
    }
    let cubic = LiftingMap::new(1, 2, rat(1, 4)).unwrap();
    let beta = ParamArray::new(vec![b.clone(), c.clone()]);
    assert!(verify_key_lemma(&cubic, &a, &ParamArray::new(vec![]), &beta, 12).unwrap().pass);
    let flipped = LiftingMap::new(2, 1, r(4)).unwrap();
    assert!(verify_key_lemma(&flipped, &a, &ParamArray::new(vec![]), &beta, 12).unwrap().pass);

    // a = 0: both sides are the constant series 1
    let unit = LiftingMap::new(1, 1, r(1)).unwrap();
    let report = verify_key_lemma(&unit, &r(0), &ParamArray::new(vec![]), &ParamArray::new(vec![rat(3, 2)]), 8).unwrap();
    assert!(report.pass);

    let wrong_size = verify_key_lemma(&unit, &a, &ParamArray::new(vec![]), &beta, 8);
    assert!(matches!(wrong_size, Err(Error::Domain(_))));
}

#[test]
fn unweighted_left_side_excess() {
    for k in 0..4u32 {
        let id = build_identity("thmA2", k, &abc(rat(1, 3), rat(2, 5), rat(-3, 7))).unwrap();
        assert_eq!(id.lhs_excess(), rat(1, 2) + r(k as i64));
        assert_eq!(id.lhs.weight.degree(), Some(0));
    }
    // 0F0 is the exponential series
    let empty = WeightedSeries::new(vec![], vec![], &r(1));
    assert_eq!(series_coefficients(&empty, 3).unwrap().coeffs(), &[r(1), r(1), rat(1, 2), rat(1, 6)]);
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_filter_map("nonzero", |(p, q)| (p != 0).then(|| rat(p, q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn theorem_families_hold(idx in 0usize..9, k in 0u32..3, t in prop::collection::vec(rational(), 4)) {
        let name = THEOREMS[idx];
        let names = identity_params(name).unwrap();
        let p = names.iter().zip(&t).fold(Params::new(), |p, (n, v)| p.with(n, v.clone()));
        match build_identity(name, k, &p).and_then(|id| verify_transform(&id, 10)) {
            Ok(report) => prop_assert!(report.pass, "{} k = {} {:?}", name, k, report.first_mismatch),
            Err(e) => prop_assert!(e.is_singular(), "{}: {}", name, e),
        }
    }
}
