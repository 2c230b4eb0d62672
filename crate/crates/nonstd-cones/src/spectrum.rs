//! Prime-ideal oracles and the closure operators on finite data: membership
//! of a term in the prime ideal named by an index, the order on primes,
//! the C/V operator pair, v-cones with a radius search, an independent
//! polyhedral-fan evaluator for small arities, strong-order-unit checks,
//! and the omega-generated counterexample family at finite truncation.
//!
//! The decision procedure for prime membership is symbolic evaluation at
//! the canonical point of the index. The polyhedral fan is a second,
//! independent implementation used to cross-check it at arity <= 3.

use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use serde_json::{json, Value};

use crate::coeff::{rat, rat_int, FieldElement, NumberFieldSpec, Rational};
use crate::index::{canonical_point, index_of_real, is_z_reduced, truncation_leq, Index};
use crate::linalg;
use crate::series::EpsSeries;
use crate::term::{Dialect, LinearForm, Term, TermNode};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Prime ideal handles.

/// A prime ideal of the free algebra named by its dialect and index; for
/// lattice-groups the index must be Z-reduced.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeIdealHandle {
    dialect: Dialect,
    index: Index,
}

impl PrimeIdealHandle {
    pub fn new(dialect: Dialect, index: Index) -> Result<Self> {
        if dialect == Dialect::LGroup && !is_z_reduced(&index) {
            return Err(Error::BadIndex(
                "lattice-group primes are named by Z-reduced indexes".into(),
            ));
        }
        Ok(Self { dialect, index })
    }

    pub fn dialect(&self) -> Dialect {
        self.dialect
    }

    pub fn index(&self) -> &Index {
        &self.index
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dialect": self.dialect.to_string(),
            "index": self.index.to_json(),
        })
    }
}

impl fmt::Display for PrimeIdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} prime at {}", self.dialect, self.index)
    }
}

/// Reverse-inclusion order on primes: the truncation order on indexes.
pub fn prime_leq(a: &PrimeIdealHandle, b: &PrimeIdealHandle) -> Result<bool> {
    if a.dialect != b.dialect {
        return Err(Error::DialectViolation(
            "cannot compare primes across dialects".into(),
        ));
    }
    Ok(truncation_leq(&a.index, &b.index))
}

/// The maximal ideal annihilating a nonzero real point: length-one index.
pub fn maximal_from_real_point(p: &[FieldElement], dialect: Dialect) -> Result<PrimeIdealHandle> {
    PrimeIdealHandle::new(dialect, index_of_real(p)?)
}

/// Does the term vanish on the cone of the index, i.e. does it belong to
/// the prime ideal the index names? Decided by exact evaluation at the
/// canonical point.
pub fn vanishes_on_cone(t: &Term, index: &Index, dialect: Dialect) -> Result<bool> {
    t.dialect_check(dialect)?;
    if dialect == Dialect::LGroup && !is_z_reduced(index) {
        return Err(Error::BadIndex(
            "lattice-group membership needs a Z-reduced index".into(),
        ));
    }
    Ok(t.eval_series(&canonical_point(index))?.is_zero())
}

// ---------------------------------------------------------------------------
// The C/V operator pair on finite data.

/// Indices of the terms vanishing at every point of `points`.
pub fn c_operator(points: &[Vec<EpsSeries>], terms: &[Term]) -> Result<Vec<usize>> {
    let mut out = vec![];
    'terms: for (i, t) in terms.iter().enumerate() {
        for p in points {
            if !t.eval_series(p)?.is_zero() {
                continue 'terms;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Indices of the points at which every term of `terms` vanishes.
pub fn v_operator(terms: &[Term], points: &[Vec<EpsSeries>]) -> Result<Vec<usize>> {
    let mut out = vec![];
    'points: for (i, p) in points.iter().enumerate() {
        for t in terms {
            if !t.eval_series(p)?.is_zero() {
                continue 'points;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Real-point variant of [`c_operator`].
pub fn c_operator_real(points: &[Vec<FieldElement>], terms: &[Term]) -> Result<Vec<usize>> {
    let mut out = vec![];
    'terms: for (i, t) in terms.iter().enumerate() {
        for p in points {
            if !t.eval_real(p)?.is_zero() {
                continue 'terms;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Real-point variant of [`v_operator`].
pub fn v_operator_real(terms: &[Term], points: &[Vec<FieldElement>]) -> Result<Vec<usize>> {
    let mut out = vec![];
    'points: for (i, p) in points.iter().enumerate() {
        for t in terms {
            if !t.eval_real(p)?.is_zero() {
                continue 'points;
            }
        }
        out.push(i);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// v-cones.

/// The cone positively spanned by the nested partial sums
/// `sum_{i<=j} r_i dir_i` of an index against strictly positive radii.
#[derive(Debug, Clone, PartialEq)]
pub struct VCone {
    index: Index,
    radii: Vec<Rational>,
}

impl VCone {
    pub fn new(index: Index, radii: Vec<Rational>) -> Result<Self> {
        if radii.len() != index.len() {
            return Err(Error::BadRadii);
        }
        if radii.iter().any(|r| !r.is_positive()) {
            return Err(Error::BadRadii);
        }
        Ok(Self { index, radii })
    }

    pub fn index(&self) -> &Index {
        &self.index
    }

    pub fn radii(&self) -> &[Rational] {
        &self.radii
    }

    /// The `k` generators: partial sums of the scaled directions.
    pub fn generators(&self) -> Vec<Vec<FieldElement>> {
        let spec = self.index.spec();
        let n = self.index.dim();
        let mut acc = linalg::fe_zero_vec(spec, n);
        let mut out = vec![];
        for (dir, r) in self.index.dirs().iter().zip(&self.radii) {
            let scaled: Vec<FieldElement> = dir.coords().iter().map(|c| c.scale(r)).collect();
            acc = linalg::fe_add_vec(&acc, &scaled);
            out.push(acc.clone());
        }
        out
    }

    /// Exact membership of a series point in the enlarged cone: the point
    /// must be a nonnegative series combination of the generators.
    pub fn contains_series(&self, y: &[EpsSeries]) -> Result<bool> {
        let spec = Arc::clone(self.index.spec());
        let n = self.index.dim();
        if y.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: y.len(),
            });
        }
        let gens = self.generators();
        let k = gens.len();
        // Solve the normal equations M beta = G^T y over series, with M a
        // field matrix; then verify G beta = y and beta >= 0.
        let mut m = vec![vec![FieldElement::zero(&spec); k]; k];
        for i in 0..k {
            for j in 0..k {
                m[i][j] = linalg::fe_dot(&gens[i], &gens[j]);
            }
        }
        let mut rhs: Vec<EpsSeries> = Vec::with_capacity(k);
        for gen in &gens {
            let mut acc = EpsSeries::zero(&spec);
            for (g, yj) in gen.iter().zip(y) {
                acc = acc.add(&yj.scale(g)?)?;
            }
            rhs.push(acc);
        }
        let Some(beta) = solve_field_series(&m, &rhs)? else {
            return Ok(false);
        };
        // Verify the combination reconstructs y exactly.
        for j in 0..n {
            let mut acc = EpsSeries::zero(&spec);
            for (b, gen) in beta.iter().zip(&gens) {
                acc = acc.add(&b.scale(&gen[j])?)?;
            }
            if acc != y[j] {
                return Ok(false);
            }
        }
        Ok(beta.iter().all(|b| b.sign() >= 0))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "index": self.index.to_json(),
            "radii": self.radii.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Gaussian elimination for `M x = rhs` with a field matrix and series
/// right-hand side. Returns `None` when `M` is singular.
fn solve_field_series(
    m: &[Vec<FieldElement>],
    rhs: &[EpsSeries],
) -> Result<Option<Vec<EpsSeries>>> {
    let k = m.len();
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let mut b: Vec<EpsSeries> = rhs.to_vec();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return Ok(None);
        };
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inv()?;
        for c in col..k {
            a[col][c] = a[col][c].checked_mul(&inv)?;
        }
        b[col] = b[col].scale(&inv)?;
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..k {
                    let sub = factor.checked_mul(&a[col][c])?;
                    a[r][c] = a[r][c].checked_sub(&sub)?;
                }
                let sub = b[col].scale(&factor)?;
                b[r] = b[r].sub(&sub)?;
            }
        }
    }
    Ok(Some(b))
}

/// Searches for v-cone radii `(1, r, r^2, ...)` with `r = 2^-m`, `m <=
/// m_max`, such that the term vanishes at every generator and at a rational
/// grid of their positive combinations. A successful return is a sampling
/// certificate, not a proof; `None` means the budget was exhausted.
pub fn vcone_in_variety(
    t: &Term,
    index: &Index,
    dialect: Dialect,
    m_max: u32,
) -> Result<Option<Vec<Rational>>> {
    t.dialect_check(dialect)?;
    let k = index.len();
    'radius: for m in 0..=m_max {
        let r = rat(1, 2).pow(m as i32);
        let radii: Vec<Rational> = (0..k).map(|i| r.pow(i as i32)).collect();
        let cone = VCone::new(index.clone(), radii.clone())?;
        let gens = cone.generators();
        for g in &gens {
            if !t.eval_real(g)?.is_zero() {
                continue 'radius;
            }
        }
        for sample in barycentric_grid(&gens, 8) {
            if !t.eval_real(&sample)?.is_zero() {
                continue 'radius;
            }
        }
        return Ok(Some(radii));
    }
    Ok(None)
}

/// Nonnegative rational combinations of the generators with weights summing
/// to `denom` over `denom`; exactness with bounded cost.
pub fn barycentric_grid(gens: &[Vec<FieldElement>], denom: u32) -> Vec<Vec<FieldElement>> {
    let k = gens.len();
    let mut out = vec![];
    let mut weights = vec![0u32; k];
    fn walk(
        gens: &[Vec<FieldElement>],
        weights: &mut Vec<u32>,
        slot: usize,
        remaining: u32,
        denom: u32,
        out: &mut Vec<Vec<FieldElement>>,
    ) {
        if slot + 1 == weights.len() {
            weights[slot] = remaining;
            let spec = gens[0][0].spec();
            let n = gens[0].len();
            let mut acc = linalg::fe_zero_vec(spec, n);
            for (w, g) in weights.iter().zip(gens) {
                if *w == 0 {
                    continue;
                }
                let coef = rat(*w as i64, denom as i64);
                let scaled: Vec<FieldElement> = g.iter().map(|c| c.scale(&coef)).collect();
                acc = linalg::fe_add_vec(&acc, &scaled);
            }
            out.push(acc);
            return;
        }
        for w in 0..=remaining {
            weights[slot] = w;
            walk(gens, weights, slot + 1, remaining - w, denom, out);
        }
    }
    if k > 0 {
        walk(gens, &mut weights, 0, denom, denom, &mut out);
    }
    out
}

// ---------------------------------------------------------------------------
// The polyhedral fan: an independent evaluator for small arities.

/// Sign condition a region places on a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignCond {
    Geq,
    Leq,
    Eq,
}

impl SignCond {
    fn accepts(self, sign: i8) -> bool {
        match self {
            SignCond::Geq => sign >= 0,
            SignCond::Leq => sign <= 0,
            SignCond::Eq => sign == 0,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            SignCond::Geq => ">=",
            SignCond::Leq => "<=",
            SignCond::Eq => "=",
        }
    }
}

/// One linearity region of a term: on every point satisfying the region
/// constraints the term agrees with the active linear form.
#[derive(Debug, Clone)]
pub struct FanPiece {
    region: Vec<(LinearForm, SignCond)>,
    active: LinearForm,
}

impl FanPiece {
    pub fn region(&self) -> &[(LinearForm, SignCond)] {
        &self.region
    }

    pub fn active_form(&self) -> &LinearForm {
        &self.active
    }

    /// Does the (closed) region contain the real point?
    pub fn region_contains_real(&self, p: &[FieldElement]) -> Result<bool> {
        for (form, cond) in &self.region {
            if !cond.accepts(form.apply_real(p)?.sign()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Does the enlarged region contain the series point? Signs are taken
    /// in the series order, which is the transfer of the real conditions.
    pub fn region_contains_series(&self, p: &[EpsSeries]) -> Result<bool> {
        for (form, cond) in &self.region {
            if !cond.accepts(form.apply_series(p)?.sign()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "region": self
                .region
                .iter()
                .map(|(f, c)| json!([f.to_json(), c.as_str()]))
                .collect::<Vec<_>>(),
            "active": self.active.to_json(),
        })
    }
}

impl fmt::Display for FanPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (form, cond)) in self.region.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{form} {} 0", cond.as_str())?;
        }
        write!(f, "}} -> {}", self.active)
    }
}

/// Decomposes the term into linearity regions by walking its lattice
/// structure: each meet or join splits every region pair along the sign of
/// the difference of the two active forms, which is a hyperplane of the
/// arrangement generated by pairwise differences of the leaf forms. Pieces
/// whose region meets only the origin are dropped; every surviving piece is
/// verified by exact evaluation at a nonzero sample of its region.
///
/// Guarded to arity <= 3 to keep the enumeration at desk scale.
pub fn linearity_fan(t: &Term, spec: &Arc<NumberFieldSpec>) -> Result<Vec<FanPiece>> {
    let n = t.arity();
    if n > 3 {
        return Err(Error::ArityGuard(n));
    }
    let pieces = fan_pieces(t, spec)?;
    let mut out = vec![];
    for (constraints, active) in pieces {
        let rows: Vec<Vec<FieldElement>> =
            constraints.iter().map(|f| f.coeffs().to_vec()).collect();
        let Some(sample) = linalg::cone_nonzero_point(&rows, n, spec) else {
            continue;
        };
        let direct = t.eval_real(&sample)?;
        let through_form = active.apply_real(&sample)?;
        if direct != through_form {
            return Err(Error::Invalid(
                "fan verification failed: active form disagrees with the term".into(),
            ));
        }
        out.push(FanPiece {
            region: constraints
                .into_iter()
                .map(|f| (f, SignCond::Geq))
                .collect(),
            active,
        });
    }
    Ok(out)
}

type RawPiece = (Vec<LinearForm>, LinearForm);

fn fan_pieces(t: &Term, spec: &Arc<NumberFieldSpec>) -> Result<Vec<RawPiece>> {
    let n = t.arity();
    match t.node() {
        TermNode::Var(i) => {
            let mut coeffs = linalg::fe_zero_vec(spec, n);
            coeffs[*i] = FieldElement::one(spec);
            Ok(vec![(vec![], LinearForm::new(coeffs))])
        }
        TermNode::Zero => Ok(vec![(vec![], LinearForm::zero(spec, n))]),
        TermNode::Sum(ts) => {
            let mut acc: Vec<RawPiece> = vec![(vec![], LinearForm::zero(spec, n))];
            for child in ts {
                let rhs = fan_pieces(child, spec)?;
                let mut next = vec![];
                for (ca, fa) in &acc {
                    for (cb, fb) in &rhs {
                        let mut constraints = ca.clone();
                        constraints.extend(cb.iter().cloned());
                        next.push((constraints, fa.add(fb)?));
                    }
                }
                acc = next;
            }
            Ok(acc)
        }
        TermNode::Neg(inner) => Ok(fan_pieces(inner, spec)?
            .into_iter()
            .map(|(c, f)| (c, f.neg()))
            .collect()),
        TermNode::IntScale(k, inner) => {
            let r = Rational::from_integer(k.clone());
            Ok(fan_pieces(inner, spec)?
                .into_iter()
                .map(|(c, f)| (c, f.scale_rational(&r)))
                .collect())
        }
        TermNode::FieldScale(c, inner) => {
            let c = c.lift_to(spec)?;
            fan_pieces(inner, spec)?
                .into_iter()
                .map(|(cs, f)| Ok((cs, f.scale(&c)?)))
                .collect()
        }
        TermNode::Meet(a, b) => split_lattice(a, b, spec, true),
        TermNode::Join(a, b) => split_lattice(a, b, spec, false),
    }
}

fn split_lattice(
    a: &Term,
    b: &Term,
    spec: &Arc<NumberFieldSpec>,
    is_meet: bool,
) -> Result<Vec<RawPiece>> {
    let left = fan_pieces(a, spec)?;
    let right = fan_pieces(b, spec)?;
    let mut out = vec![];
    for (ca, fa) in &left {
        for (cb, fb) in &right {
            let shared: Vec<LinearForm> = ca.iter().chain(cb.iter()).cloned().collect();
            let diff = fb.sub(fa)?; // >= 0 iff fa <= fb
                                    // Piece where fa is the extremal side.
            let mut constraints = shared.clone();
            constraints.push(if is_meet { diff.clone() } else { diff.neg() });
            out.push((constraints, fa.clone()));
            // Piece where fb is the extremal side.
            let mut constraints = shared;
            constraints.push(if is_meet { diff.neg() } else { diff });
            out.push((constraints, fb.clone()));
        }
    }
    Ok(out)
}

/// Fan-based membership of a series point in the zero set of the term:
/// some piece's enlarged region contains the point and its active form
/// kills it. Independent of direct series evaluation.
pub fn fan_reports_zero(fan: &[FanPiece], p: &[EpsSeries]) -> Result<bool> {
    for piece in fan {
        if piece.region_contains_series(p)? && piece.active_form().apply_series(p)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Fan-based test that a closed v-cone sample set lies in the zero set:
/// every piece whose region contains a sample must kill that sample.
pub fn fan_vanishes_at(fan: &[FanPiece], p: &[FieldElement]) -> Result<bool> {
    let mut seen = false;
    for piece in fan {
        if piece.region_contains_real(p)? {
            seen = true;
            if !piece.active_form().apply_real(p)?.is_zero() {
                return Ok(false);
            }
        }
    }
    debug_assert!(seen, "fan pieces must cover every point");
    Ok(seen)
}

/// Is the real zero set of the term exactly the origin? Decided piece by
/// piece: intersect each region with the kernel of its active form and
/// probe for a nonzero point.
pub fn variety_is_origin(t: &Term, spec: &Arc<NumberFieldSpec>) -> Result<bool> {
    let n = t.arity();
    if n > 3 {
        return Err(Error::ArityGuard(n));
    }
    let pieces = fan_pieces(t, spec)?;
    for (constraints, active) in pieces {
        // Substitute the kernel of the active form.
        let kernel = linalg::fe_nullspace(&[active.coeffs().to_vec()], n, spec);
        let d = kernel.len();
        if d == 0 {
            continue;
        }
        let reduced_rows: Vec<Vec<FieldElement>> = constraints
            .iter()
            .map(|f| {
                kernel
                    .iter()
                    .map(|b| linalg::fe_dot(f.coeffs(), b))
                    .collect()
            })
            .collect();
        if let Some(z) = linalg::cone_nonzero_point(&reduced_rows, d, spec) {
            // Map back; the point satisfies the region and kills the active
            // form, so the term itself must vanish there.
            let mut x = linalg::fe_zero_vec(spec, n);
            for (zi, b) in z.iter().zip(&kernel) {
                x = linalg::fe_add_vec(&x, &linalg::fe_scale_vec(zi, b));
            }
            debug_assert!(!linalg::fe_vec_is_zero(&x), "kernel basis is independent");
            if !t.eval_real(&x)?.is_zero() {
                return Err(Error::Invalid(
                    "fan bookkeeping broke: a region point misses the active kernel".into(),
                ));
            }
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the candidate generate a strong order-unit modulo the relator?
/// Reduces to the zero set of `|relator| + |candidate|` being the origin.
pub fn strong_unit_check(
    relator: &Term,
    candidate: &Term,
    spec: &Arc<NumberFieldSpec>,
) -> Result<bool> {
    let combined = Term::sum(vec![
        Term::abs(relator.clone()),
        Term::abs(candidate.clone()),
    ])?;
    variety_is_origin(&combined, spec)
}

// ---------------------------------------------------------------------------
// The appendix family: an omega-generated presentation whose nilpotents
// differ from the intersection of its maximal ideals, exercised at a finite
// variable truncation.

/// The generator terms restricted to variables `x0..=xn` (arity `n + 1`).
/// Families indexed by an unbounded integer coefficient are truncated at
/// `coeff_bound`.
pub fn appendix_terms(n: usize, coeff_bound: u32) -> Result<Vec<Term>> {
    let arity = n + 1;
    let var = |i: usize| Term::var(arity, i);
    let mut out = vec![];
    // x_i /\ 0
    for i in 0..=n {
        out.push(Term::meet(var(i)?, Term::zero(arity))?);
    }
    // x_i /\ x_j, distinct i, j >= 2
    for i in 2..=n {
        for j in 2..=n {
            if i != j {
                out.push(Term::meet(var(i)?, var(j)?)?);
            }
        }
    }
    // |x_i| /\ ((j x0 - x_i) \/ 0), i >= 2, j >= 1
    for i in 2..=n {
        for j in 1..=coeff_bound as usize {
            let jx0 = Term::int_scale(j as i64, var(0)?);
            let diff = Term::sum(vec![jx0, var(i)?.neg()])?;
            out.push(Term::meet(
                Term::abs(var(i)?),
                Term::join(diff, Term::zero(arity))?,
            )?);
        }
    }
    // |x_i| /\ |i x0 - x1|, i >= 2
    for i in 2..=n {
        let ix0 = Term::int_scale(i as i64, var(0)?);
        let diff = Term::sum(vec![ix0, var(1)?.neg()])?;
        out.push(Term::meet(Term::abs(var(i)?), Term::abs(diff))?);
    }
    // ((i x0 - x1) /\ meet_{1<k<i} (k x0 - x_k)) \/ 0, i >= 2
    for i in 2..=n {
        let ix0 = Term::int_scale(i as i64, var(0)?);
        let head = Term::sum(vec![ix0, var(1)?.neg()])?;
        let mut parts = vec![head];
        for k in 2..i {
            let kx0 = Term::int_scale(k as i64, var(0)?);
            parts.push(Term::sum(vec![kx0, var(k)?.neg()])?);
        }
        out.push(Term::join(Term::meet_all(parts)?, Term::zero(arity))?);
    }
    Ok(out)
}

/// Outcome of the appendix checks at one truncation.
#[derive(Debug, Clone)]
pub struct AppendixReport {
    pub arity: usize,
    pub term_count: usize,
    pub cone_points_checked: usize,
    pub all_vanish_on_cone_points: bool,
    pub witness_value: EpsSeries,
    pub witness_nonzero: bool,
    pub real_trace_points_checked: usize,
    pub all_vanish_on_real_trace: bool,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.all_vanish_on_cone_points && self.witness_nonzero && self.all_vanish_on_real_trace
    }

    pub fn to_json(&self) -> Value {
        json!({
            "arity": self.arity,
            "term_count": self.term_count,
            "cone_points_checked": self.cone_points_checked,
            "all_vanish_on_cone_points": self.all_vanish_on_cone_points,
            "witness_value": self.witness_value.to_string(),
            "witness_nonzero": self.witness_nonzero,
            "real_trace_points_checked": self.real_trace_points_checked,
            "all_vanish_on_real_trace": self.all_vanish_on_real_trace,
            "passed": self.passed(),
        })
    }
}

impl fmt::Display for AppendixReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "appendix family on x0..x{} ({} terms)",
            self.arity - 1,
            self.term_count
        )?;
        writeln!(
            f,
            "  sampled cone points: {} checked, all vanish: {}",
            self.cone_points_checked, self.all_vanish_on_cone_points
        )?;
        writeln!(
            f,
            "  projection x0 at (e, 1, 0, ...): {} (nonzero: {})",
            self.witness_value, self.witness_nonzero
        )?;
        write!(
            f,
            "  real trace (1/m, 1, 0, ...): {} checked, all vanish: {}",
            self.real_trace_points_checked, self.all_vanish_on_real_trace
        )
    }
}

/// Runs the appendix checks for variables `x0..=xn`: the listed terms
/// vanish on sampled points of the defining cones `C_1` and `C_m` (with an
/// unlimited coordinate `1/e` in slot `m`); the projection `x0` witnesses
/// `(e, 1, 0, ...)` outside the closure of the real trace; and every term
/// vanishes at `(1/m, 1, 0, ..., 0)` for `n < m <= m_max`.
pub fn appendix_suite(n: usize, m_max: u32) -> Result<AppendixReport> {
    if !(2..=5).contains(&n) {
        return Err(Error::Invalid(
            "the appendix suite runs for n between 2 and 5".into(),
        ));
    }
    let spec = NumberFieldSpec::rational();
    let arity = n + 1;
    let terms = appendix_terms(n, m_max)?;

    let zero = EpsSeries::zero(&spec);
    let one = EpsSeries::constant(FieldElement::one(&spec));
    let eps = EpsSeries::eps(&spec);
    let eps_sq = EpsSeries::eps_pow(&spec, rat_int(2));
    let eps_inv = EpsSeries::eps_pow(&spec, rat_int(-1));

    let mut cone_points: Vec<Vec<EpsSeries>> = vec![];
    // C_1 samples: (x0, x1, 0, ...) with x0 >= 0 < x1 and x0/x1 infinitesimal.
    let mut c1a = vec![zero.clone(); arity];
    c1a[0] = eps.clone();
    c1a[1] = one.clone();
    cone_points.push(c1a);
    let mut c1b = vec![zero.clone(); arity];
    c1b[1] = one.clone();
    cone_points.push(c1b);
    let mut c1c = vec![zero.clone(); arity];
    c1c[0] = eps_sq.clone();
    c1c[1] = EpsSeries::constant(FieldElement::from_int(&spec, 3));
    cone_points.push(c1c);
    // C_m samples for 2 <= m <= n: x1 = m*x0, x_m unlimited against x0.
    for m in 2..=n {
        let minv = FieldElement::from_rational(&spec, rat(1, m as i64));
        // (1/m, 1, 0, ..., 1/e at slot m, ...)
        let mut p = vec![zero.clone(); arity];
        p[0] = EpsSeries::constant(minv.clone());
        p[1] = one.clone();
        p[m] = eps_inv.clone();
        cone_points.push(p);
        // (e/m, e, 0, ..., 1/e at slot m, ...)
        let mut p = vec![zero.clone(); arity];
        p[0] = eps.scale(&minv)?;
        p[1] = eps.clone();
        p[m] = eps_inv.clone();
        cone_points.push(p);
        // (0, 0, ..., 1 at slot m, ...)
        let mut p = vec![zero.clone(); arity];
        p[m] = one.clone();
        cone_points.push(p);
    }
    let mut all_vanish_on_cone_points = true;
    for t in &terms {
        for p in &cone_points {
            if !t.eval_series(p)?.is_zero() {
                all_vanish_on_cone_points = false;
            }
        }
    }

    // The witness: x0 evaluated at y = (e, 1, 0, ..., 0).
    let mut y = vec![zero.clone(); arity];
    y[0] = eps.clone();
    y[1] = one.clone();
    let witness_value = Term::var(arity, 0)?.eval_series(&y)?;
    let witness_nonzero = !witness_value.is_zero();

    // Real trace: (1/m, 1, 0, ..., 0) for n < m <= m_max.
    let mut all_vanish_on_real_trace = true;
    let mut real_trace_points_checked = 0;
    for m in (n as u32 + 1)..=m_max {
        let mut p = vec![FieldElement::zero(&spec); arity];
        p[0] = FieldElement::from_rational(&spec, rat(1, m as i64));
        p[1] = FieldElement::one(&spec);
        real_trace_points_checked += 1;
        for t in &terms {
            if !t.eval_real(&p)?.is_zero() {
                all_vanish_on_real_trace = false;
            }
        }
    }

    Ok(AppendixReport {
        arity,
        term_count: terms.len(),
        cone_points_checked: cone_points.len(),
        all_vanish_on_cone_points,
        witness_value,
        witness_nonzero,
        real_trace_points_checked,
        all_vanish_on_real_trace,
    })
}
