//! The geometric core: orthogonal decomposition of hyperreal points,
//! indexes, rational envelopes and orthocomplements, Z-reduction, the
//! truncation order, specialization predicates for both Zariski topologies,
//! and constructive separating functionals.
//!
//! Directions are stored up to positive scaling with a canonical
//! representative (first nonzero coordinate of absolute value one) instead
//! of unit norm: normalization would need square roots that leave the
//! coefficient field, and every predicate used here (signs of linear forms,
//! envelopes, orthogonality, truncation) is invariant under positive
//! per-vector scaling.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::coeff::{rat_int, rational_from_json, FieldElement, NumberFieldSpec, Rational};
use crate::linalg;
use crate::series::EpsSeries;
use crate::term::{Dialect, LinearForm};
use crate::text;
use crate::{Error, Result};

// ---------------------------------------------------------------------------

/// A nonzero vector up to positive scaling, stored canonically.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    vec: Vec<FieldElement>,
}

impl Direction {
    /// Canonicalizes a nonzero vector: divides by the absolute value of its
    /// first nonzero coordinate.
    pub fn new(vec: Vec<FieldElement>) -> Result<Self> {
        let lead = vec.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let scale = lead.abs().inv()?;
        let vec = linalg::fe_scale_vec(&scale, &vec);
        Ok(Self { vec })
    }

    /// The direction of a nonzero real point.
    pub fn from_point(p: &[FieldElement]) -> Result<Self> {
        Self::new(p.to_vec())
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.vec
    }

    pub fn dim(&self) -> usize {
        self.vec.len()
    }

    pub fn spec(&self) -> &Arc<NumberFieldSpec> {
        self.vec[0].spec()
    }

    pub fn dot(&self, other: &Self) -> FieldElement {
        linalg::fe_dot(&self.vec, &other.vec)
    }

    pub fn neg(&self) -> Self {
        Self {
            vec: self.vec.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn is_antiparallel_to(&self, other: &Self) -> bool {
        self.vec == other.neg().vec
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .vec
            .iter()
            .map(|c| c.coords().iter().map(|r| r.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.vec.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ---------------------------------------------------------------------------

/// A nonempty tuple of pairwise-orthogonal directions: the combinatorial
/// fingerprint of a nonzero hyperreal point.
#[derive(Debug, Clone, PartialEq)]
pub struct Index {
    dirs: Vec<Direction>,
}

impl Index {
    pub fn new(dirs: Vec<Direction>) -> Result<Self> {
        let Some(first) = dirs.first() else {
            return Err(Error::BadIndex("an index needs at least one vector".into()));
        };
        let n = first.dim();
        if dirs.len() > n {
            return Err(Error::BadIndex(format!(
                "{} orthogonal vectors cannot fit in dimension {n}",
                dirs.len()
            )));
        }
        for d in &dirs {
            if d.dim() != n {
                return Err(Error::BadIndex("mixed vector dimensions".into()));
            }
            if d.spec() != first.spec() {
                return Err(Error::FieldMismatch);
            }
        }
        for i in 0..dirs.len() {
            for j in (i + 1)..dirs.len() {
                if !dirs[i].dot(&dirs[j]).is_zero() {
                    return Err(Error::BadIndex(format!(
                        "vectors {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        Ok(Self { dirs })
    }

    /// Parses `[(a, b, ...)], [(c, d, ...)]` over the given field.
    pub fn parse(input: &str, arity: usize, spec: &Arc<NumberFieldSpec>) -> Result<Self> {
        let vectors = text::parse_index_vectors(input, arity, spec)?;
        let dirs = vectors
            .into_iter()
            .map(Direction::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(dirs)
    }

    pub fn dirs(&self) -> &[Direction] {
        &self.dirs
    }

    /// Number of directions; always at least one.
    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn dim(&self) -> usize {
        self.dirs[0].dim()
    }

    pub fn spec(&self) -> &Arc<NumberFieldSpec> {
        self.dirs[0].spec()
    }

    /// Prefix of the first `k` directions.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.len() {
            return Err(Error::BadIndex(format!(
                "cannot truncate a length-{} index to {k}",
                self.len()
            )));
        }
        Ok(Self {
            dirs: self.dirs[..k].to_vec(),
        })
    }

    pub fn to_json(&self) -> Value {
        json!(self.dirs.iter().map(Direction::to_json).collect::<Vec<_>>())
    }

    pub fn from_json(v: &Value, spec: &Arc<NumberFieldSpec>) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Invalid("index must be a JSON array".into()))?;
        let mut dirs = vec![];
        for vec_json in arr {
            let coords = vec_json
                .as_array()
                .ok_or_else(|| Error::Invalid("index vector must be an array".into()))?
                .iter()
                .map(|cj| {
                    let coord_strings = cj
                        .as_array()
                        .ok_or_else(|| Error::Invalid("coordinate must be an array".into()))?;
                    let coords = coord_strings
                        .iter()
                        .map(rational_from_json)
                        .collect::<Result<Vec<_>>>()?;
                    Ok(FieldElement::new(Arc::clone(spec), coords))
                })
                .collect::<Result<Vec<_>>>()?;
            dirs.push(Direction::new(coords)?);
        }
        Self::new(dirs)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.dirs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{d}]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------

/// A subspace of `R^n` with a rational basis, held in reduced row echelon
/// form so equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl RationalSubspace {
    pub fn from_rows(rows: Vec<Vec<Rational>>, ambient: usize) -> Self {
        let mut basis = rows;
        linalg::rref(&mut basis);
        Self { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut basis = vec![];
        for i in 0..ambient {
            let mut row = vec![Rational::zero(); ambient];
            row[i] = Rational::one();
            basis.push(row);
        }
        Self { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// The orthogonal complement, again a rational subspace.
    pub fn orthocomplement(&self) -> Self {
        Self {
            ambient: self.ambient,
            basis: linalg::nullspace(&self.basis, self.ambient),
        }
    }

    /// Exact membership of a field vector in the real span of the basis.
    pub fn contains(&self, v: &[FieldElement]) -> bool {
        let complement = self.orthocomplement();
        complement.basis.iter().all(|w| {
            let spec = v[0].spec();
            let w_fe = linalg::rational_vec_to_fe(spec, w);
            linalg::fe_dot(&w_fe, v).is_zero()
        })
    }

    /// Orthogonal projection of a field vector onto the subspace, computed
    /// through an exact orthogonalized rational basis.
    pub fn project(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let spec = Arc::clone(v[0].spec());
        let mut out = linalg::fe_zero_vec(&spec, self.ambient);
        for b in linalg::gram_schmidt_rational(&self.basis) {
            let b_fe = linalg::rational_vec_to_fe(&spec, &b);
            let denom = linalg::dot_rational(&b, &b);
            let coef = linalg::fe_dot(&b_fe, v).scale(&(Rational::one() / denom));
            out = linalg::fe_add_vec(&out, &linalg::fe_scale_vec(&coef, &b_fe));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ambient": self.ambient,
            "basis": self
                .basis
                .iter()
                .map(|row| row.iter().map(|r| r.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "{{0}} in R^{}", self.ambient);
        }
        write!(f, "span{{")?;
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}} in R^{}", self.ambient)
    }
}

/// The smallest rational subspace containing every vector of `points`,
/// computed through the annihilator: expand each coordinate on the power
/// basis of the field, collect the rational linear system a vanishing
/// rational form must satisfy, and return the kernel of that annihilator.
pub fn rational_envelope(points: &[Vec<FieldElement>], ambient: usize) -> RationalSubspace {
    let mut annihilator_system = vec![];
    for v in points {
        let degree = v[0].spec().degree();
        for k in 0..degree {
            let row: Vec<Rational> = v.iter().map(|c| c.coords()[k].clone()).collect();
            annihilator_system.push(row);
        }
    }
    let annihilator = linalg::nullspace(&annihilator_system, ambient);
    RationalSubspace {
        ambient,
        basis: linalg::nullspace(&annihilator, ambient),
    }
}

pub fn envelope_of_index_prefix(index: &Index, len: usize) -> RationalSubspace {
    let vecs: Vec<Vec<FieldElement>> = index.dirs[..len]
        .iter()
        .map(|d| d.coords().to_vec())
        .collect();
    rational_envelope(&vecs, index.dim())
}

// ---------------------------------------------------------------------------

/// The unique orthogonal decomposition of a nonzero series point: scales
/// with strictly increasing leading exponents against pairwise-orthogonal
/// directions.
#[derive(Debug, Clone)]
pub struct Decomposition {
    parts: Vec<(EpsSeries, Direction)>,
}

impl Decomposition {
    pub fn parts(&self) -> &[(EpsSeries, Direction)] {
        &self.parts
    }

    pub fn index(&self) -> Index {
        Index {
            dirs: self.parts.iter().map(|(_, d)| d.clone()).collect(),
        }
    }

    /// Reassembles the original point, exactly.
    pub fn reconstruct(&self) -> Result<Vec<EpsSeries>> {
        let (alpha0, dir0) = &self.parts[0];
        let spec = alpha0.spec();
        let n = dir0.dim();
        let mut out = vec![EpsSeries::zero(spec); n];
        for (alpha, dir) in &self.parts {
            for (o, c) in out.iter_mut().zip(dir.coords()) {
                *o = o.add(&alpha.scale(c)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (alpha, dir)) in self.parts.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{alpha} : {dir}")?;
        }
        Ok(())
    }
}

/// Peels the leading coefficient vector off the point repeatedly: the
/// lowest exponent with a nonzero coefficient vector determines the next
/// direction, the projection onto it gives the scale, and the exact
/// orthogonal residual (whose leading exponent strictly increases) is
/// processed recursively. At most `n` rounds.
pub fn orthogonal_decomposition(x: &[EpsSeries]) -> Result<Decomposition> {
    if x.is_empty() {
        return Err(Error::ZeroPoint);
    }
    let spec = Arc::clone(x[0].spec());
    for c in x {
        if c.spec() != &spec {
            return Err(Error::FieldMismatch);
        }
    }
    if x.iter().all(EpsSeries::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let n = x.len();
    let mut residual = x.to_vec();
    let mut parts = vec![];
    while !residual.iter().all(EpsSeries::is_zero) {
        if parts.len() == n {
            return Err(Error::Invalid(
                "decomposition did not terminate within n rounds".into(),
            ));
        }
        // Lowest exponent present in any coordinate.
        let q = residual
            .iter()
            .filter_map(|s| s.leading().ok().map(|(q, _)| q.clone()))
            .min()
            .expect("residual is nonzero");
        let lead_vec: Vec<FieldElement> = residual
            .iter()
            .map(|s| {
                s.terms()
                    .iter()
                    .find(|(e, _)| *e == q)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| FieldElement::zero(&spec))
            })
            .collect();
        let scale = lead_vec
            .iter()
            .find(|c| !c.is_zero())
            .expect("leading vector is nonzero")
            .abs();
        let dir = Direction::new(lead_vec.clone())?;
        // alpha = <residual, lead> * scale / <lead, lead>, so that
        // alpha * dir equals the projection of the residual onto lead.
        let norm2 = linalg::fe_dot(&lead_vec, &lead_vec);
        let mut inner = EpsSeries::zero(&spec);
        for (s, c) in residual.iter().zip(&lead_vec) {
            inner = inner.add(&s.scale(c)?)?;
        }
        let alpha = inner.scale(&scale.checked_mul(&norm2.inv()?)?)?;
        debug_assert_eq!(alpha.sign(), 1, "scales are strictly positive");
        for (r, d) in residual.iter_mut().zip(dir.coords()) {
            *r = r.sub(&alpha.scale(d)?)?;
        }
        parts.push((alpha, dir));
    }
    Ok(Decomposition { parts })
}

/// The index of a nonzero point: the direction tuple of its decomposition.
pub fn index_of(x: &[EpsSeries]) -> Result<Index> {
    Ok(orthogonal_decomposition(x)?.index())
}

pub fn index_of_real(p: &[FieldElement]) -> Result<Index> {
    Index::new(vec![Direction::from_point(p)?])
}

// ---------------------------------------------------------------------------
// Z-reduction.

/// The Gram-Schmidt-style reduction: the first vector is kept, every later
/// vector is projected onto the orthocomplement of the rational envelope of
/// its predecessors' projections, zero projections are discarded, and the
/// survivors are canonicalized.
pub fn reduce(index: &Index) -> Index {
    let n = index.dim();
    let mut ws: Vec<Vec<FieldElement>> = vec![];
    let mut kept = vec![];
    for (i, v) in index.dirs.iter().enumerate() {
        let w = if i == 0 {
            v.coords().to_vec()
        } else {
            let env = rational_envelope(&ws, n);
            let complement = env.orthocomplement();
            complement.project(v.coords())
        };
        if !linalg::fe_vec_is_zero(&w) {
            kept.push(Direction::new(w.clone()).expect("nonzero projection"));
        }
        ws.push(w);
    }
    Index { dirs: kept }
}

/// True when each vector already lies in the orthocomplement of the
/// rational envelope of its predecessors; equivalently `reduce` fixes the
/// index.
pub fn is_z_reduced(index: &Index) -> bool {
    for i in 1..index.len() {
        let env = envelope_of_index_prefix(index, i);
        let complement = env.orthocomplement();
        if !complement.contains(index.dirs[i].coords()) {
            return false;
        }
    }
    true
}

/// The truncation (prefix) order on indexes.
pub fn truncation_leq(shorter: &Index, longer: &Index) -> bool {
    shorter.len() <= longer.len() && shorter.dirs.iter().zip(&longer.dirs).all(|(a, b)| a == b)
}

/// Builds an index extending `v` whose reduction is exactly `u`, given that
/// `u` is Z-reduced and `reduce(v) <= u`: append the tail of `u` beyond the
/// reduction of `v`.
pub fn extend_to_reduced(v: &Index, u: &Index) -> Result<Index> {
    if !is_z_reduced(u) {
        return Err(Error::BadIndex("target index is not Z-reduced".into()));
    }
    let rv = reduce(v);
    if !truncation_leq(&rv, u) {
        return Err(Error::BadIndex(
            "reduce(v) is not a truncation of the target".into(),
        ));
    }
    let mut dirs = v.dirs.clone();
    dirs.extend_from_slice(&u.dirs[rv.len()..]);
    Index::new(dirs)
}

// ---------------------------------------------------------------------------
// Specialization and separation.

/// Does `x` lie in the Riesz-Zariski closure of `y`? Holds exactly when the
/// index of `x` is a truncation of the index of `y`.
pub fn riesz_specializes(x: &[EpsSeries], y: &[EpsSeries]) -> Result<bool> {
    Ok(truncation_leq(&index_of(x)?, &index_of(y)?))
}

/// Does `x` lie in the lattice-group-Zariski closure of `y`? Holds exactly
/// when the reduced indexes are truncation-comparable.
pub fn lgroup_specializes(x: &[EpsSeries], y: &[EpsSeries]) -> Result<bool> {
    Ok(truncation_leq(
        &reduce(&index_of(x)?),
        &reduce(&index_of(y)?),
    ))
}

/// Lexicographic sign of a linear form along an index: the first direction
/// with a nonzero value decides. This equals the sign of the form at any
/// point with that index.
pub fn sign_at_index(form: &LinearForm, index: &Index, dialect: Dialect) -> Result<i8> {
    if dialect == Dialect::LGroup && !form.is_integer() {
        return Err(Error::DialectViolation(
            "lattice-group signs require integer forms".into(),
        ));
    }
    for dir in &index.dirs {
        let s = form.apply_real(dir.coords())?.sign();
        if s != 0 {
            return Ok(s);
        }
    }
    Ok(0)
}

/// The canonical point realizing an index: `dir_1 + e*dir_2 + ... +
/// e^(k-1)*dir_k`. Its index is the input.
pub fn canonical_point(index: &Index) -> Vec<EpsSeries> {
    let spec = index.spec();
    let n = index.dim();
    let mut coords = vec![];
    for j in 0..n {
        let terms: Vec<(Rational, FieldElement)> = index
            .dirs
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.coords()[j].is_zero())
            .map(|(i, d)| (rat_int(i as i64), d.coords()[j].clone()))
            .collect();
        coords.push(EpsSeries::new(spec, terms).expect("sorted distinct exponents"));
    }
    coords
}

/// A linear functional separating `x` from the closure of `y` when `x` does
/// not specialize to `y`: nonnegative at `y`, strictly negative at `x`. In
/// the Riesz dialect the form has field coefficients; in the lattice-group
/// dialect it has integer coefficients, obtained by rational rounding
/// inside the relevant rational orthocomplement.
pub fn separating_form(x: &[EpsSeries], y: &[EpsSeries], dialect: Dialect) -> Result<LinearForm> {
    let ix = index_of(x)?;
    let iy = index_of(y)?;
    match dialect {
        Dialect::Riesz => separating_form_riesz(&ix, &iy),
        Dialect::LGroup => separating_form_lgroup(&reduce(&ix), &reduce(&iy)),
    }
}

/// Riesz-dialect witness from the (plain) indexes.
pub fn separating_form_riesz(ix: &Index, iy: &Index) -> Result<LinearForm> {
    if truncation_leq(ix, iy) {
        return Err(Error::NotSeparable);
    }
    let spec = Arc::clone(ix.spec());
    let n = ix.dim();
    let prefix = common_prefix(ix, iy);
    let neg_target = &ix.dirs[prefix];
    let pos_target = if prefix < iy.len() {
        Some(&iy.dirs[prefix])
    } else {
        None
    };

    let mut rows: Vec<Vec<FieldElement>> = ix.dirs[..prefix]
        .iter()
        .map(|d| d.coords().to_vec())
        .collect();
    let mut rhs = vec![FieldElement::zero(&spec); prefix];
    rows.push(neg_target.coords().to_vec());
    rhs.push(FieldElement::from_int(&spec, -1));
    if let Some(pos) = pos_target {
        if !pos.is_antiparallel_to(neg_target) {
            rows.push(pos.coords().to_vec());
            rhs.push(FieldElement::one(&spec));
        }
    }
    let coeffs = linalg::fe_solve(&rows, &rhs).ok_or_else(|| {
        Error::Invalid("separating system is inconsistent, which contradicts orthogonality".into())
    })?;
    let form = LinearForm::new(pad_to(coeffs, n, &spec));
    debug_assert!(sign_at_index(&form, iy, Dialect::Riesz).unwrap() >= 0);
    debug_assert!(sign_at_index(&form, ix, Dialect::Riesz).unwrap() < 0);
    Ok(form)
}

/// Lattice-group witness from the reduced indexes: construct the real
/// witness inside the orthocomplement of the shared rational envelope, then
/// round its coefficients to rationals, verifying the strict signs exactly
/// and shrinking the rounding radius until they hold.
pub fn separating_form_lgroup(rx: &Index, ry: &Index) -> Result<LinearForm> {
    if truncation_leq(rx, ry) {
        return Err(Error::NotSeparable);
    }
    let spec = Arc::clone(rx.spec());
    let n = rx.dim();
    let prefix = common_prefix(rx, ry);
    let neg_target = &rx.dirs[prefix];
    let pos_target = if prefix < ry.len() {
        Some(&ry.dirs[prefix])
    } else {
        None
    };
    let env = envelope_of_index_prefix(rx, prefix);
    let complement = env.orthocomplement();
    let basis = complement.basis();

    // Solve for the witness in complement coordinates.
    let basis_fe: Vec<Vec<FieldElement>> = basis
        .iter()
        .map(|row| linalg::rational_vec_to_fe(&spec, row))
        .collect();
    let mut rows = vec![];
    let mut rhs = vec![];
    rows.push(
        basis_fe
            .iter()
            .map(|b| linalg::fe_dot(b, neg_target.coords()))
            .collect::<Vec<_>>(),
    );
    rhs.push(FieldElement::from_int(&spec, -1));
    if let Some(pos) = pos_target {
        if !pos.is_antiparallel_to(neg_target) {
            rows.push(
                basis_fe
                    .iter()
                    .map(|b| linalg::fe_dot(b, pos.coords()))
                    .collect::<Vec<_>>(),
            );
            rhs.push(FieldElement::one(&spec));
        }
    }
    let coefs = linalg::fe_solve(&rows, &rhs).ok_or_else(|| {
        Error::Invalid("witness system is inconsistent, which contradicts Z-reducedness".into())
    })?;

    // Round the combination coefficients until the exact sign checks pass.
    let mut radius = rat_int(1) / rat_int(2);
    loop {
        let mut z = vec![Rational::zero(); n];
        for (c, b) in coefs.iter().zip(basis) {
            let approx = c.rational_approx(&radius);
            for (zi, bi) in z.iter_mut().zip(b) {
                let add = &approx * bi;
                *zi = &*zi + add;
            }
        }
        let candidate = LinearForm::from_rationals(&spec, &z).clear_denominators()?;
        if !candidate.is_zero()
            && candidate.apply_real(neg_target.coords())?.sign() < 0
            && pos_target.map_or(Ok(true), |p| {
                Ok::<bool, Error>(candidate.apply_real(p.coords())?.sign() > 0)
            })?
        {
            debug_assert!(sign_at_index(&candidate, ry, Dialect::LGroup).unwrap() >= 0);
            debug_assert!(sign_at_index(&candidate, rx, Dialect::LGroup).unwrap() < 0);
            return Ok(candidate);
        }
        radius /= rat_int(2);
    }
}

fn common_prefix(a: &Index, b: &Index) -> usize {
    a.dirs
        .iter()
        .zip(&b.dirs)
        .take_while(|(x, y)| x == y)
        .count()
}

fn pad_to(mut v: Vec<FieldElement>, n: usize, spec: &Arc<NumberFieldSpec>) -> Vec<FieldElement> {
    v.resize(n, FieldElement::zero(spec));
    v
}
