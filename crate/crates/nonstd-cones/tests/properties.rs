//! Property tests for the algebraic laws and the geometry invariants that
//! are not already pinned by the acceptance criteria.

use std::sync::Arc;

use proptest::prelude::*;

use nonstd_cones::index::{canonical_point, index_of, orthogonal_decomposition, reduce};
use nonstd_cones::selftest::Rng;
use nonstd_cones::series::parse_point;
use nonstd_cones::spectrum::{fan_reports_zero, linearity_fan, vanishes_on_cone, VCone};
use nonstd_cones::{
    Dialect, Direction, EpsSeries, FieldElement, Index, NumberFieldSpec, Rational, Term,
};

fn sqrt2() -> Arc<NumberFieldSpec> {
    NumberFieldSpec::sqrt2()
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_fe() -> impl Strategy<Value = FieldElement> {
    prop::collection::vec(arb_rational(), 2).prop_map(|coords| FieldElement::new(sqrt2(), coords))
}

fn exponent_menu(slot: usize) -> Rational {
    let menu = [
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (0, 1),
        (1, 2),
        (1, 1),
        (2, 1),
        (3, 1),
    ];
    let (n, d) = menu[slot % menu.len()];
    Rational::new(n.into(), d.into())
}

fn arb_series() -> impl Strategy<Value = EpsSeries> {
    prop::collection::vec((0usize..8, arb_fe()), 0..4).prop_map(|pairs| {
        let spec = sqrt2();
        let terms = pairs
            .into_iter()
            .map(|(slot, c)| (exponent_menu(slot), c))
            .collect();
        EpsSeries::new(&spec, terms).unwrap()
    })
}

fn arb_limited_series() -> impl Strategy<Value = EpsSeries> {
    prop::collection::vec((3usize..8, arb_fe()), 0..4).prop_map(|pairs| {
        let spec = sqrt2();
        let terms = pairs
            .into_iter()
            .map(|(slot, c)| (exponent_menu(slot), c))
            .collect();
        EpsSeries::new(&spec, terms).unwrap()
    })
}

fn arb_lgroup_term(arity: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::zero(arity)),
        (0..arity).prop_map(move |i| Term::var(arity, i).unwrap()),
    ];
    leaf.prop_recursive(3, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::sum(vec![a, b]).unwrap()),
            inner.clone().prop_map(Term::neg),
            (1i64..=3, inner.clone()).prop_map(|(k, t)| Term::int_scale(k, t)),
            inner.clone().prop_map(Term::abs),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b).unwrap()),
            (inner.clone(), inner).prop_map(|(a, b)| Term::join(a, b).unwrap()),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(a in arb_fe(), b in arb_fe(), c in arb_fe()) {
        let ab_c = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
        let a_bc = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let mul_ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let mul_a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(mul_ab_c, mul_a_bc);
        let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let right = a
            .checked_mul(&b)
            .unwrap()
            .checked_add(&a.checked_mul(&c).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.checked_mul(&inv).unwrap(), FieldElement::one(&sqrt2()));
        }
    }

    #[test]
    fn sign_is_multiplicative_and_exact(a in arb_fe(), b in arb_fe()) {
        let prod = a.checked_mul(&b).unwrap();
        prop_assert_eq!(prod.sign(), a.sign() * b.sign());
        prop_assert_eq!(a.sign() == 0, a.coords().iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn series_order_is_compatible(a in arb_series(), b in arb_series(), c in arb_series()) {
        let cmp = a.cmp_exact(&b).unwrap();
        let shifted = a.add(&c).unwrap().cmp_exact(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(cmp, shifted);
        if a.sign() >= 0 && b.sign() >= 0 {
            prop_assert!(a.mul(&b).unwrap().sign() >= 0);
        }
    }

    #[test]
    fn standard_part_is_a_homomorphism(a in arb_limited_series(), b in arb_limited_series()) {
        let st = |s: &EpsSeries| s.standard_part().unwrap();
        prop_assert_eq!(
            st(&a.add(&b).unwrap()),
            st(&a).checked_add(&st(&b)).unwrap()
        );
        prop_assert_eq!(
            st(&a.mul(&b).unwrap()),
            st(&a).checked_mul(&st(&b)).unwrap()
        );
        // Monotone.
        if a.cmp_exact(&b).unwrap() <= 0 {
            prop_assert!(st(&a).cmp_exact(&st(&b)).unwrap() <= 0);
        }
    }

    #[test]
    fn parse_render_identity(t in arb_lgroup_term(3)) {
        let rendered = t.to_string();
        let back = Term::parse_q(&rendered, 3, Dialect::LGroup).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn decomposition_invariants(pairs in prop::collection::vec(arb_series(), 2..5)) {
        prop_assume!(!pairs.iter().all(EpsSeries::is_zero));
        let n = pairs.len();
        let d = orthogonal_decomposition(&pairs).unwrap();
        prop_assert_eq!(d.reconstruct().unwrap(), pairs);
        prop_assert!(d.parts().len() <= n);
        // Leading exponents strictly increase.
        let exps: Vec<Rational> = d
            .parts()
            .iter()
            .map(|(a, _)| a.leading().unwrap().0.clone())
            .collect();
        prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        // Pairwise orthogonality of the directions.
        let dirs = d.index();
        for i in 0..dirs.len() {
            for j in (i + 1)..dirs.len() {
                prop_assert!(dirs.dirs()[i].dot(&dirs.dirs()[j]).is_zero());
            }
        }
    }

    #[test]
    fn limited_standard_part_uses_first_direction(
        pairs in prop::collection::vec(arb_limited_series(), 2..4)
    ) {
        prop_assume!(!pairs.iter().all(EpsSeries::is_zero));
        let d = orthogonal_decomposition(&pairs).unwrap();
        let (alpha1, dir1) = &d.parts()[0];
        let st_alpha = alpha1.standard_part().unwrap();
        for (j, coord) in pairs.iter().enumerate() {
            let expected = st_alpha.checked_mul(&dir1.coords()[j]).unwrap();
            prop_assert_eq!(coord.standard_part().unwrap(), expected);
        }
    }

    #[test]
    fn positive_homogeneity(
        t in arb_lgroup_term(2),
        p in prop::collection::vec(arb_fe(), 2),
        num in 0i64..=6,
        den in 1i64..=3,
    ) {
        let lambda = Rational::new(num.into(), den.into());
        let scaled: Vec<FieldElement> = p.iter().map(|c| c.scale(&lambda)).collect();
        let base = t.eval_real(&p).unwrap();
        prop_assert_eq!(t.eval_real(&scaled).unwrap(), base.scale(&lambda));
    }

    #[test]
    fn standard_part_exchange(
        t in arb_lgroup_term(2),
        p in prop::collection::vec(arb_limited_series(), 2),
    ) {
        let st_p: Vec<FieldElement> =
            p.iter().map(|s| s.standard_part().unwrap()).collect();
        prop_assert_eq!(
            t.eval_series(&p).unwrap().standard_part().unwrap(),
            t.eval_real(&st_p).unwrap()
        );
    }

    #[test]
    fn evaluation_hits_a_leaf_form(
        t in arb_lgroup_term(2),
        p in prop::collection::vec(arb_fe(), 2),
    ) {
        let spec = sqrt2();
        let v = t.eval_real(&p).unwrap();
        let forms = t.leaf_forms(&spec).unwrap();
        prop_assert!(forms.iter().any(|f| f.apply_real(&p).unwrap() == v));
    }
}

proptest! {
    // The fan is rebuilt per case; keep the corpus smaller.
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn enlargement_identity_via_fan(
        t in arb_lgroup_term(2),
        p in prop::collection::vec(arb_series(), 2),
    ) {
        prop_assume!(!p.iter().all(EpsSeries::is_zero));
        let spec = sqrt2();
        let fan = linearity_fan(&t, &spec).unwrap();
        let direct = t.eval_series(&p).unwrap().is_zero();
        prop_assert_eq!(fan_reports_zero(&fan, &p).unwrap(), direct);
    }
}

/// Sampling version of the two-dialect ideal identity: for a Z-reduced
/// index, a lattice-group term vanishes at its canonical point exactly when
/// it vanishes at the canonical points of extensions that reduce back to
/// it.
#[test]
fn lattice_ideal_matches_riesz_ideal_on_extensions() {
    let spec = sqrt2();
    let th = FieldElement::generator(&spec);
    // v = ((1, th)): rationally it spans the plane, so extensions insert
    // directions orthogonal to it inside the envelope.
    let v = Index::new(vec![Direction::new(vec![
        FieldElement::one(&spec),
        th.clone(),
    ])
    .unwrap()])
    .unwrap();
    let extensions = vec![
        v.clone(),
        Index::new(vec![
            v.dirs()[0].clone(),
            Direction::new(vec![th.neg(), FieldElement::one(&spec)]).unwrap(),
        ])
        .unwrap(),
        Index::new(vec![
            v.dirs()[0].clone(),
            Direction::new(vec![th.clone(), FieldElement::from_int(&spec, -1)]).unwrap(),
        ])
        .unwrap(),
    ];
    for w in &extensions {
        assert_eq!(reduce(w), v, "extension must reduce back");
    }
    let mut rng = Rng::new(0xAB);
    let mut interesting = 0;
    for _ in 0..40 {
        let t = rng.lgroup_term(2, 3);
        let at_v = t.eval_series(&canonical_point(&v)).unwrap().is_zero();
        for w in &extensions {
            let at_w = t.eval_series(&canonical_point(w)).unwrap().is_zero();
            assert_eq!(at_v, at_w, "term {t} disagrees between {v} and {w}");
        }
        if at_v {
            interesting += 1;
        }
    }
    assert!(interesting > 0, "the corpus should hit the ideal sometimes");
}

/// Sampling version of the cone-intersection picture: points whose index
/// truncates the given one belong to every enlarged v-cone, and a point
/// with an incomparable index escapes some radii choice.
#[test]
fn cone_is_intersection_of_enlarged_vcones() {
    let spec = NumberFieldSpec::rational();
    let v = Index::parse("[(1,0)],[(0,1)]", 2, &spec).unwrap();
    let radii_menu: Vec<Vec<Rational>> = [(1, 1), (1, 2), (2, 1), (1, 8), (3, 4)]
        .iter()
        .map(|&(a, b)| {
            vec![
                Rational::new(a.into(), 1.into()),
                Rational::new(b.into(), (a * 8).into()),
            ]
        })
        .collect();
    let inside = [
        parse_point("(1, e)", 2, &spec).unwrap(),
        parse_point("(2, e^2)", 2, &spec).unwrap(),
        parse_point("(3, 0)", 2, &spec).unwrap(),
        parse_point("(e, e^3)", 2, &spec).unwrap(),
        canonical_point(&v),
    ];
    let outside = parse_point("(e, 1)", 2, &spec).unwrap();
    assert!(!nonstd_cones::index::truncation_leq(
        &index_of(&outside).unwrap(),
        &v
    ));
    for radii in &radii_menu {
        let cone = VCone::new(v.clone(), radii.clone()).unwrap();
        for p in &inside {
            assert!(
                cone.contains_series(p).unwrap(),
                "{:?} should lie in every enlarged v-cone",
                p.iter().map(ToString::to_string).collect::<Vec<_>>()
            );
        }
    }
    let escaped = radii_menu.iter().any(|radii| {
        let cone = VCone::new(v.clone(), radii.clone()).unwrap();
        !cone.contains_series(&outside).unwrap()
    });
    assert!(escaped, "an incomparable point must fail some radii choice");
}

/// The symbolic membership oracle agrees with itself across the dialect
/// boundary on Z-reduced rational indexes.
#[test]
fn dialect_membership_agrees_on_reduced_rational_indexes() {
    let mut rng = Rng::new(0xCD);
    for _ in 0..25 {
        let v = rng.rational_index(3);
        let t = rng.lgroup_term(3, 3);
        let riesz = vanishes_on_cone(&t, &v, Dialect::Riesz).unwrap();
        let lgroup = vanishes_on_cone(&t, &v, Dialect::LGroup).unwrap();
        assert_eq!(riesz, lgroup);
    }
}
