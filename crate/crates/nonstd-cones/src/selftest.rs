//! The acceptance checks, runnable both from the `selftest` CLI verb and
//! from the integration test suite. Every check is deterministic: sampling
//! uses a fixed-seed splitmix generator.

use std::fmt;
use std::sync::Arc;

use crate::coeff::{rat, rat_int, FieldElement, NumberFieldSpec, Rational};
use crate::index::{
    envelope_of_index_prefix, extend_to_reduced, index_of, is_z_reduced, lgroup_specializes,
    orthogonal_decomposition, rational_envelope, reduce, riesz_specializes, separating_form,
    sign_at_index, truncation_leq, Direction, Index,
};
use crate::linalg;
use crate::series::EpsSeries;
use crate::spectrum::{
    appendix_suite, barycentric_grid, c_operator, c_operator_real, fan_vanishes_at, linearity_fan,
    strong_unit_check, v_operator, v_operator_real, vanishes_on_cone, variety_is_origin,
    vcone_in_variety, VCone,
};
use crate::term::{Dialect, LinearForm, Term};
use crate::Result;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.details
        )
    }
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CriterionReport> {
    vec![
        decomposition_round_trip(),
        sign_oracle_coherence(),
        closure_theorems(),
        reduction_laws(),
        worked_examples(),
        panti_cross_check(),
        galois_and_closed_sets(),
        strong_order_units(),
        appendix_checks(),
    ]
}

// ---------------------------------------------------------------------------
// Deterministic sampling.

/// Small deterministic generator used by the sampling checks; exposed so
/// integration tests can reuse the exact corpora.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn rational(&mut self) -> Rational {
        rat(self.int_in(-9, 9), self.int_in(1, 4))
    }

    pub fn field_element(&mut self, spec: &Arc<NumberFieldSpec>) -> FieldElement {
        let coords = (0..spec.degree()).map(|_| self.rational()).collect();
        FieldElement::new(Arc::clone(spec), coords)
    }

    /// A series with at most `max_terms` terms drawn from a small exponent
    /// menu; may be zero.
    pub fn series(&mut self, spec: &Arc<NumberFieldSpec>, max_terms: usize) -> EpsSeries {
        let menu = [
            rat(-2, 1),
            rat(-1, 1),
            rat(-1, 2),
            rat(0, 1),
            rat(1, 2),
            rat(1, 1),
            rat(2, 1),
            rat(3, 1),
        ];
        let count = self.below((max_terms + 1) as u64) as usize;
        let mut terms = vec![];
        for _ in 0..count {
            let q = menu[self.below(menu.len() as u64) as usize].clone();
            terms.push((q, self.field_element(spec)));
        }
        EpsSeries::new(spec, terms).expect("same field")
    }

    /// A nonzero series point with `n` coordinates.
    pub fn point(&mut self, spec: &Arc<NumberFieldSpec>, n: usize) -> Vec<EpsSeries> {
        loop {
            let p: Vec<EpsSeries> = (0..n).map(|_| self.series(spec, 4)).collect();
            if !p.iter().all(EpsSeries::is_zero) {
                return p;
            }
        }
    }

    pub fn linear_form(
        &mut self,
        spec: &Arc<NumberFieldSpec>,
        n: usize,
        integer: bool,
    ) -> LinearForm {
        loop {
            let form = if integer {
                let coeffs: Vec<i64> = (0..n).map(|_| self.int_in(-5, 5)).collect();
                LinearForm::from_ints(spec, &coeffs)
            } else {
                LinearForm::new((0..n).map(|_| self.field_element(spec)).collect())
            };
            if !form.is_zero() {
                return form;
            }
        }
    }

    /// A random lattice-group term of bounded depth.
    pub fn lgroup_term(&mut self, arity: usize, depth: usize) -> Term {
        if depth == 0 || self.below(5) == 0 {
            return match self.below(4) {
                0 => Term::zero(arity),
                _ => Term::var(arity, self.below(arity as u64) as usize).unwrap(),
            };
        }
        match self.below(6) {
            0 => Term::sum(vec![
                self.lgroup_term(arity, depth - 1),
                self.lgroup_term(arity, depth - 1),
            ])
            .unwrap(),
            1 => self.lgroup_term(arity, depth - 1).neg(),
            2 => Term::int_scale(self.int_in(1, 3), self.lgroup_term(arity, depth - 1)),
            3 => Term::abs(self.lgroup_term(arity, depth - 1)),
            4 => Term::meet(
                self.lgroup_term(arity, depth - 1),
                self.lgroup_term(arity, depth - 1),
            )
            .unwrap(),
            _ => Term::join(
                self.lgroup_term(arity, depth - 1),
                self.lgroup_term(arity, depth - 1),
            )
            .unwrap(),
        }
    }

    /// A random index: orthogonalized random field vectors, canonicalized.
    pub fn index(&mut self, spec: &Arc<NumberFieldSpec>, n: usize) -> Index {
        loop {
            let want = 1 + self.below(n as u64) as usize;
            let mut dirs: Vec<Vec<FieldElement>> = vec![];
            for _ in 0..want {
                let candidate: Vec<FieldElement> =
                    (0..n).map(|_| self.field_element(spec)).collect();
                // Project out the previous directions.
                let mut v = candidate;
                for b in &dirs {
                    let denom = linalg::fe_dot(b, b);
                    let coef = linalg::fe_dot(&v, b)
                        .checked_mul(&denom.inv().expect("nonzero"))
                        .expect("same field");
                    v = linalg::fe_sub_vec(&v, &linalg::fe_scale_vec(&coef, b));
                }
                if !linalg::fe_vec_is_zero(&v) {
                    dirs.push(v);
                }
            }
            if dirs.is_empty() {
                continue;
            }
            let dirs = dirs
                .into_iter()
                .map(|v| Direction::new(v).expect("nonzero"))
                .collect();
            return Index::new(dirs).expect("orthogonal by construction");
        }
    }

    /// A random Z-reduced index with rational entries: orthogonal rational
    /// vectors are automatically Z-reduced.
    pub fn rational_index(&mut self, n: usize) -> Index {
        let spec = NumberFieldSpec::rational();
        loop {
            let want = 1 + self.below(n as u64) as usize;
            let mut rows: Vec<Vec<Rational>> = vec![];
            for _ in 0..want {
                rows.push((0..n).map(|_| self.rational()).collect());
            }
            let ortho = linalg::gram_schmidt_rational(&rows);
            if ortho.is_empty() {
                continue;
            }
            let dirs = ortho
                .into_iter()
                .map(|v| Direction::new(linalg::rational_vec_to_fe(&spec, &v)).expect("nonzero"))
                .collect();
            return Index::new(dirs).expect("orthogonal by construction");
        }
    }
}

fn specs_under_test() -> Vec<Arc<NumberFieldSpec>> {
    vec![NumberFieldSpec::rational(), NumberFieldSpec::sqrt2()]
}

fn report(id: u32, name: &'static str, outcome: Result<(usize, usize)>) -> CriterionReport {
    match outcome {
        Ok((checked, failures)) => CriterionReport {
            id,
            name,
            passed: failures == 0,
            details: format!("{checked} checks, {failures} failures"),
        },
        Err(e) => CriterionReport {
            id,
            name,
            passed: false,
            details: format!("aborted: {e}"),
        },
    }
}

// ---------------------------------------------------------------------------
// Criterion 1.

pub fn decomposition_round_trip() -> CriterionReport {
    report(
        1,
        "decomposition round-trip",
        (|| {
            let mut rng = Rng::new(0x1001);
            let specs = specs_under_test();
            let mut checked = 0;
            let mut failures = 0;
            for i in 0..200 {
                let spec = &specs[i % specs.len()];
                let n = 1 + rng.below(4) as usize;
                let x = rng.point(spec, n);
                let d = orthogonal_decomposition(&x)?;
                checked += 1;
                // Exact reconstruction.
                if d.reconstruct()? != x {
                    failures += 1;
                    continue;
                }
                // Strictly increasing leading exponents.
                let exps: Vec<Rational> = d
                    .parts()
                    .iter()
                    .map(|(a, _)| a.leading().map(|(q, _)| q.clone()))
                    .collect::<Result<_>>()?;
                if !exps.windows(2).all(|w| w[0] < w[1]) {
                    failures += 1;
                    continue;
                }
                // Pairwise orthogonal, k <= n.
                let dirs = d.index();
                if dirs.len() > n {
                    failures += 1;
                    continue;
                }
                let mut ortho = true;
                for a in 0..dirs.len() {
                    for b in (a + 1)..dirs.len() {
                        if !dirs.dirs()[a].dot(&dirs.dirs()[b]).is_zero() {
                            ortho = false;
                        }
                    }
                }
                if !ortho {
                    failures += 1;
                    continue;
                }
                // Scaling invariance of the direction tuple.
                let tripled: Vec<EpsSeries> =
                    x.iter().map(|s| s.scale_rational(&rat_int(3))).collect();
                if index_of(&tripled)? != dirs {
                    failures += 1;
                }
            }
            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 2.

pub fn sign_oracle_coherence() -> CriterionReport {
    report(
        2,
        "sign-oracle coherence",
        (|| {
            let mut rng = Rng::new(0x2002);
            let specs = specs_under_test();
            let mut checked = 0;
            let mut failures = 0;
            for i in 0..500 {
                let spec = &specs[i % specs.len()];
                let n = 1 + rng.below(4) as usize;
                let x = rng.point(spec, n);
                let f = rng.linear_form(spec, n, false);
                let via_index = sign_at_index(&f, &index_of(&x)?, Dialect::Riesz)?;
                let direct = f.apply_series(&x)?.sign();
                checked += 1;
                if via_index != direct {
                    failures += 1;
                }
            }
            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 3.

pub fn closure_theorems() -> CriterionReport {
    report(
        3,
        "closure theorems and witnesses",
        (|| {
            let mut rng = Rng::new(0x3003);
            let specs = specs_under_test();
            let mut checked = 0;
            let mut failures = 0;
            for dialect in [Dialect::Riesz, Dialect::LGroup] {
                for i in 0..100 {
                    let spec = &specs[i % specs.len()];
                    let n = 1 + rng.below(3) as usize;
                    let x = rng.point(spec, n);
                    let y = rng.point(spec, n);
                    let specializes = match dialect {
                        Dialect::Riesz => riesz_specializes(&x, &y)?,
                        Dialect::LGroup => lgroup_specializes(&x, &y)?,
                    };
                    // Universal form-sign implication over sampled forms, with
                    // the constructed witness added when separation is claimed.
                    let mut forms: Vec<LinearForm> = (0..50)
                        .map(|_| rng.linear_form(spec, n, dialect == Dialect::LGroup))
                        .collect();
                    if !specializes {
                        let w = separating_form(&x, &y, dialect)?;
                        if dialect == Dialect::LGroup && !w.is_integer() {
                            failures += 1;
                        }
                        // Witness contract: nonnegative at y, negative at x.
                        if !(w.apply_series(&y)?.sign() >= 0 && w.apply_series(&x)?.sign() < 0) {
                            failures += 1;
                        }
                        forms.push(w);
                    }
                    let implication_holds = {
                        let mut ok = true;
                        for f in &forms {
                            let fy = f.apply_series(&y)?.sign();
                            let fx = f.apply_series(&x)?.sign();
                            if fy >= 0 && fx < 0 {
                                ok = false;
                                break;
                            }
                        }
                        ok
                    };
                    checked += 1;
                    if specializes != implication_holds {
                        failures += 1;
                    }
                }
            }
            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 4.

pub fn reduction_laws() -> CriterionReport {
    report(
        4,
        "reduction laws",
        (|| {
            let mut rng = Rng::new(0x4004);
            let specs = specs_under_test();
            let mut checked = 0;
            let mut failures = 0;
            for i in 0..200 {
                let spec = &specs[i % specs.len()];
                let n = 2 + rng.below(3) as usize;
                let v = rng.index(spec, n);
                let rv = reduce(&v);
                checked += 1;
                // Idempotence and the fixed-point characterization.
                if reduce(&rv) != rv {
                    failures += 1;
                    continue;
                }
                if is_z_reduced(&v) != (rv == v) || !is_z_reduced(&rv) {
                    failures += 1;
                    continue;
                }
                // Truncation monotonicity.
                let cut = 1 + rng.below(v.len() as u64) as usize;
                let u = v.truncate(cut)?;
                if !truncation_leq(&reduce(&u), &rv) {
                    failures += 1;
                    continue;
                }
                // Envelope preservation, prefix by prefix.
                let mut envelopes_ok = true;
                for i in 1..=v.len() {
                    let prefix = v.truncate(i)?;
                    let env_v = envelope_of_index_prefix(&prefix, i);
                    let red_prefix = reduce(&prefix);
                    let env_r = envelope_of_index_prefix(&red_prefix, red_prefix.len());
                    if env_v != env_r {
                        envelopes_ok = false;
                    }
                }
                if !envelopes_ok {
                    failures += 1;
                    continue;
                }
                // Lifting: extend the reduction by a rational direction in the
                // orthocomplement of its envelope, then rebuild an extension of
                // v reducing to it.
                let env = envelope_of_index_prefix(&rv, rv.len());
                let complement = env.orthocomplement();
                let target = if complement.dim() > 0 {
                    let extra = linalg::rational_vec_to_fe(spec, &complement.basis()[0]);
                    let mut dirs = rv.dirs().to_vec();
                    dirs.push(Direction::new(extra).expect("basis vectors are nonzero"));
                    Index::new(dirs)?
                } else {
                    rv.clone()
                };
                let w = extend_to_reduced(&v, &target)?;
                if !(truncation_leq(&v, &w) && reduce(&w) == target) {
                    failures += 1;
                }
            }
            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 5.

pub fn worked_examples() -> CriterionReport {
    report(
        5,
        "worked examples reproduced",
        (|| {
            let mut failures = 0;
            let mut checked = 0;

            // (a) The index of (1, e) is (e1, e2) and every t_k lies in the
            // prime ideal of its cone.
            let q = NumberFieldSpec::rational();
            let point = vec![
                EpsSeries::constant(FieldElement::one(&q)),
                EpsSeries::eps(&q),
            ];
            let e1e2 = Index::new(vec![
                Direction::new(vec![FieldElement::one(&q), FieldElement::zero(&q)])?,
                Direction::new(vec![FieldElement::zero(&q), FieldElement::one(&q)])?,
            ])?;
            checked += 1;
            if index_of(&point)? != e1e2 {
                failures += 1;
            }
            for k in 1..=10 {
                let t = Term::parse_q(
                    &format!("0 /\\ x0 /\\ x1 /\\ (x0 - {k}*x1)"),
                    2,
                    Dialect::LGroup,
                )?;
                checked += 1;
                if !vanishes_on_cone(&t, &e1e2, Dialect::Riesz)? {
                    failures += 1;
                }
            }

            // (b) The Riesz topology separates (1, sqrt2 + e) from the closure
            // of (1, sqrt2); the lattice-group topology does not.
            let s2 = NumberFieldSpec::sqrt2();
            let th = FieldElement::generator(&s2);
            let x = vec![
                EpsSeries::constant(FieldElement::one(&s2)),
                EpsSeries::constant(th.clone()).add(&EpsSeries::eps(&s2))?,
            ];
            let y = vec![
                EpsSeries::constant(FieldElement::one(&s2)),
                EpsSeries::constant(th.clone()),
            ];
            checked += 1;
            if riesz_specializes(&x, &y)? {
                failures += 1;
            }
            checked += 1;
            if !lgroup_specializes(&x, &y)? {
                failures += 1;
            }
            let witness = separating_form(&x, &y, Dialect::Riesz)?;
            checked += 1;
            if !(witness.apply_series(&y)?.sign() == 0 && witness.apply_series(&x)?.sign() < 0) {
                failures += 1;
            }

            // (c) The sqrt2 triple reduces to two directions ending in e3.
            let triple = Index::new(vec![
                Direction::new(vec![
                    FieldElement::one(&s2),
                    th.clone(),
                    FieldElement::zero(&s2),
                ])?,
                Direction::new(vec![
                    th.clone(),
                    FieldElement::from_int(&s2, -1),
                    FieldElement::one(&s2),
                ])?,
                Direction::new(vec![
                    th.neg(),
                    FieldElement::one(&s2),
                    FieldElement::from_int(&s2, 3),
                ])?,
            ])?;
            let reduced = reduce(&triple);
            checked += 1;
            let expected = Index::new(vec![
                Direction::new(vec![
                    FieldElement::one(&s2),
                    th.clone(),
                    FieldElement::zero(&s2),
                ])?,
                Direction::new(vec![
                    FieldElement::zero(&s2),
                    FieldElement::zero(&s2),
                    FieldElement::one(&s2),
                ])?,
            ])?;
            if reduced != expected {
                failures += 1;
            }

            // (d) The rational envelope of (1, sqrt2) is the whole plane.
            let env = rational_envelope(&[vec![FieldElement::one(&s2), th.clone()]], 2);
            checked += 1;
            if env.dim() != 2 {
                failures += 1;
            }

            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 6.

pub fn panti_cross_check() -> CriterionReport {
    report(
        6,
        "Panti cross-check (symbolic vs polyhedral)",
        (|| {
            let mut rng = Rng::new(0x6006);
            let q = NumberFieldSpec::rational();
            let mut checked = 0;
            let mut disagreements = 0;
            for arity in [2usize, 3] {
                let terms: Vec<Term> = (0..25).map(|_| rng.lgroup_term(arity, 3)).collect();
                let indexes: Vec<Index> = (0..5).map(|_| rng.rational_index(arity)).collect();
                for t in &terms {
                    let fan = linearity_fan(t, &q)?;
                    for v in &indexes {
                        checked += 1;
                        let symbolic = vanishes_on_cone(t, v, Dialect::LGroup)?;
                        let radii = vcone_in_variety(t, v, Dialect::LGroup, 12)?;
                        if symbolic != radii.is_some() {
                            disagreements += 1;
                            continue;
                        }
                        if let Some(radii) = radii {
                            // Every fan piece meeting the sampled cone interior
                            // must kill the sample.
                            let cone = VCone::new(v.clone(), radii)?;
                            let mut gens = cone.generators();
                            gens.extend(barycentric_grid(&cone.generators(), 4));
                            for sample in &gens {
                                if linalg::fe_vec_is_zero(sample) {
                                    continue;
                                }
                                if !fan_vanishes_at(&fan, sample)? {
                                    disagreements += 1;
                                    break;
                                }
                            }
                        }
                    }
                }
            }
            Ok((checked, disagreements))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 7.

pub fn galois_and_closed_sets() -> CriterionReport {
    report(
        7,
        "Galois connection and closed-set algebra",
        (|| {
            let mut rng = Rng::new(0x7007);
            let q = NumberFieldSpec::rational();
            let mut checked = 0;
            let mut failures = 0;
            for round in 0..20 {
                let n = 2 + (round % 2);
                let points: Vec<Vec<EpsSeries>> = (0..(1 + rng.below(10) as usize))
                    .map(|_| rng.point(&q, n))
                    .collect();
                let terms: Vec<Term> = (0..(1 + rng.below(10) as usize))
                    .map(|_| rng.lgroup_term(n, 3))
                    .collect();
                // Galois: T subset of C(S) iff S subset of V(T).
                let c_of_s = c_operator(&points, &terms)?;
                let t_in_c = c_of_s.len() == terms.len();
                let v_of_t = v_operator(&terms, &points)?;
                let s_in_v = v_of_t.len() == points.len();
                checked += 1;
                if t_in_c != s_in_v {
                    failures += 1;
                }
                // Pointwise closed-set identities.
                let t1 = rng.lgroup_term(n, 3);
                let t2 = rng.lgroup_term(n, 3);
                let meet_abs = Term::meet(Term::abs(t1.clone()), Term::abs(t2.clone()))?;
                let sum_abs = Term::sum(vec![Term::abs(t1.clone()), Term::abs(t2.clone())])?;
                for p in &points {
                    let v1 = t1.eval_series(p)?.is_zero();
                    let v2 = t2.eval_series(p)?.is_zero();
                    checked += 1;
                    if meet_abs.eval_series(p)?.is_zero() != (v1 || v2) {
                        failures += 1;
                    }
                    checked += 1;
                    if sum_abs.eval_series(p)?.is_zero() != (v1 && v2) {
                        failures += 1;
                    }
                }
                // Real-trace identities: real points seen as constant series.
                let real_points: Vec<Vec<FieldElement>> = (0..4)
                    .map(|_| (0..n).map(|_| rng.field_element(&q)).collect())
                    .collect();
                let embedded: Vec<Vec<EpsSeries>> = real_points
                    .iter()
                    .map(|p| p.iter().cloned().map(EpsSeries::constant).collect())
                    .collect();
                checked += 1;
                if c_operator(&embedded, &terms)? != c_operator_real(&real_points, &terms)? {
                    failures += 1;
                }
                checked += 1;
                if v_operator(&terms, &embedded)? != v_operator_real(&terms, &real_points)? {
                    failures += 1;
                }
            }
            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 8.

pub fn strong_order_units() -> CriterionReport {
    report(
        8,
        "strong order-units",
        (|| {
            let q = NumberFieldSpec::rational();
            let mut checked = 0;
            let mut failures = 0;
            let unit = Term::parse_q("|x0| + |x1|", 2, Dialect::LGroup)?;
            checked += 1;
            if !variety_is_origin(&unit, &q)? {
                failures += 1;
            }
            // Hand-computed corpus: three positives, three negatives.
            let cases: Vec<(Term, Term, bool)> = vec![
                (
                    Term::zero(2),
                    Term::parse_q("|x0| + |x1|", 2, Dialect::LGroup)?,
                    true,
                ),
                (
                    Term::parse_q("x1", 2, Dialect::LGroup)?,
                    Term::parse_q("|x0|", 2, Dialect::LGroup)?,
                    true,
                ),
                (
                    Term::zero(1),
                    Term::parse_q("|x0|", 1, Dialect::LGroup)?,
                    true,
                ),
                (
                    Term::zero(2),
                    Term::parse_q("x0 \\/ 0", 2, Dialect::LGroup)?,
                    false,
                ),
                (
                    Term::parse_q("x0 - x1", 2, Dialect::LGroup)?,
                    Term::parse_q("x0 \\/ x1 \\/ 0", 2, Dialect::LGroup)?,
                    false,
                ),
                (
                    Term::zero(3),
                    Term::parse_q("|x0| + |x1|", 3, Dialect::LGroup)?,
                    false,
                ),
            ];
            for (relator, candidate, expected) in &cases {
                checked += 1;
                if strong_unit_check(relator, candidate, &q)? != *expected {
                    failures += 1;
                }
            }
            Ok((checked, failures))
        })(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 9.

pub fn appendix_checks() -> CriterionReport {
    report(
        9,
        "appendix family at finite truncation",
        (|| {
            let mut checked = 0;
            let mut failures = 0;
            for n in [2usize, 3, 4] {
                let rep = appendix_suite(n, 16)?;
                checked += 1;
                if !rep.passed() {
                    failures += 1;
                }
            }
            Ok((checked, failures))
        })(),
    )
}
