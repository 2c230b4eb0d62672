//! Terms of free lattice-ordered groups and Riesz spaces: an AST over
//! variables with sums, negation, integer or field scalars, meets, and
//! joins. Every term denotes a continuous piecewise homogeneous linear
//! function, evaluated here both over real points and over series points.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::coeff::{FieldElement, NumberFieldSpec, Rational};
use crate::linalg;
use crate::series::EpsSeries;
use crate::text;
use crate::{Error, Result};

/// The two equational languages handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    /// Lattice-ordered Abelian groups: integer scalars only.
    LGroup,
    /// Riesz spaces (vector lattices): arbitrary field scalars.
    Riesz,
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dialect::LGroup => write!(f, "lgroup"),
            Dialect::Riesz => write!(f, "riesz"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TermNode {
    Var(usize),
    /// The homogeneous constant 0.
    Zero,
    /// Invariant: at least two summands.
    Sum(Vec<Term>),
    Neg(Box<Term>),
    IntScale(BigInt, Box<Term>),
    FieldScale(FieldElement, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

/// A term with a declared arity. `|t|` is sugar for `t \/ -t` and is
/// expanded at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    arity: usize,
    node: TermNode,
}

impl Term {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn node(&self) -> &TermNode {
        &self.node
    }

    pub fn var(arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::VarOutOfRange { var: i, arity });
        }
        Ok(Self {
            arity,
            node: TermNode::Var(i),
        })
    }

    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "terms need at least one variable");
        Self {
            arity,
            node: TermNode::Zero,
        }
    }

    pub fn sum(terms: Vec<Term>) -> Result<Self> {
        let mut it = terms.into_iter();
        let Some(first) = it.next() else {
            return Err(Error::Invalid("empty sum".into()));
        };
        let rest: Vec<Term> = it.collect();
        if rest.is_empty() {
            return Ok(first);
        }
        let arity = first.arity;
        let mut all = vec![first];
        for t in rest {
            if t.arity != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: t.arity,
                });
            }
            all.push(t);
        }
        Ok(Self {
            arity,
            node: TermNode::Sum(all),
        })
    }

    pub fn neg(self) -> Self {
        Self {
            arity: self.arity,
            node: TermNode::Neg(Box::new(self)),
        }
    }

    /// Integer scaling. Negative multipliers normalize to a negation so the
    /// AST matches what the grammar can produce.
    pub fn int_scale(k: impl Into<BigInt>, t: Term) -> Self {
        let k: BigInt = k.into();
        if k.is_negative() {
            return Self::int_scale(-k, t).neg();
        }
        Self {
            arity: t.arity,
            node: TermNode::IntScale(k, Box::new(t)),
        }
    }

    pub fn field_scale(c: FieldElement, t: Term) -> Self {
        Self {
            arity: t.arity,
            node: TermNode::FieldScale(c, Box::new(t)),
        }
    }

    pub fn meet(a: Term, b: Term) -> Result<Self> {
        if a.arity != b.arity {
            return Err(Error::ArityMismatch {
                expected: a.arity,
                got: b.arity,
            });
        }
        Ok(Self {
            arity: a.arity,
            node: TermNode::Meet(Box::new(a), Box::new(b)),
        })
    }

    pub fn join(a: Term, b: Term) -> Result<Self> {
        if a.arity != b.arity {
            return Err(Error::ArityMismatch {
                expected: a.arity,
                got: b.arity,
            });
        }
        Ok(Self {
            arity: a.arity,
            node: TermNode::Join(Box::new(a), Box::new(b)),
        })
    }

    /// `|t| = t \/ -t`.
    pub fn abs(t: Term) -> Self {
        let neg = t.clone().neg();
        Self::join(t, neg).expect("arities agree")
    }

    /// Right-folds a nonempty list into nested meets.
    pub fn meet_all(terms: Vec<Term>) -> Result<Self> {
        let mut it = terms.into_iter().rev();
        let Some(last) = it.next() else {
            return Err(Error::Invalid("empty meet".into()));
        };
        let mut acc = last;
        for t in it {
            acc = Self::meet(t, acc)?;
        }
        Ok(acc)
    }

    pub fn join_all(terms: Vec<Term>) -> Result<Self> {
        let mut it = terms.into_iter().rev();
        let Some(last) = it.next() else {
            return Err(Error::Invalid("empty join".into()));
        };
        let mut acc = last;
        for t in it {
            acc = Self::join(t, acc)?;
        }
        Ok(acc)
    }

    /// Parses a term in the concrete grammar, validating arity and dialect.
    /// Field scalars such as `th` are resolved in the ambient field `spec`.
    pub fn parse(
        input: &str,
        arity: usize,
        dialect: Dialect,
        spec: &Arc<NumberFieldSpec>,
    ) -> Result<Self> {
        text::parse_term(input, arity, dialect, spec, None)
    }

    /// Parses over the rationals; convenient when the term has no `th`
    /// scalars.
    pub fn parse_q(input: &str, arity: usize, dialect: Dialect) -> Result<Self> {
        Self::parse(input, arity, dialect, &NumberFieldSpec::rational())
    }

    /// Parses in lattice-group dialect while clearing rational scalars: the
    /// result is the input term multiplied by `denominator`, which must turn
    /// every scalar into an integer.
    pub fn parse_cleared(input: &str, arity: usize, denominator: &BigInt) -> Result<Self> {
        if !denominator.is_positive() {
            return Err(Error::Invalid(
                "the declared common denominator must be positive".into(),
            ));
        }
        text::parse_term(
            input,
            arity,
            Dialect::LGroup,
            &NumberFieldSpec::rational(),
            Some(denominator),
        )
    }

    /// True when the term uses no field scalars, i.e. it lives in the
    /// lattice-group language.
    pub fn is_lgroup_valid(&self) -> bool {
        match &self.node {
            TermNode::Var(_) | TermNode::Zero => true,
            TermNode::Sum(ts) => ts.iter().all(Self::is_lgroup_valid),
            TermNode::Neg(t) | TermNode::IntScale(_, t) => t.is_lgroup_valid(),
            TermNode::FieldScale(..) => false,
            TermNode::Meet(a, b) | TermNode::Join(a, b) => {
                a.is_lgroup_valid() && b.is_lgroup_valid()
            }
        }
    }

    pub fn dialect_check(&self, dialect: Dialect) -> Result<()> {
        if dialect == Dialect::LGroup && !self.is_lgroup_valid() {
            return Err(Error::DialectViolation(
                "term uses field scalars, which the lattice-group dialect forbids".into(),
            ));
        }
        Ok(())
    }

    /// `d * self` for a positive integer `d`, pushed through the lattice
    /// structure (positive scaling commutes with meet and join) and merged
    /// into existing scalars.
    pub fn scaled_by_int(&self, d: &BigInt) -> Self {
        assert!(d.is_positive(), "scaling must be by a positive integer");
        let node = match &self.node {
            TermNode::Var(i) => TermNode::IntScale(
                d.clone(),
                Box::new(Term {
                    arity: self.arity,
                    node: TermNode::Var(*i),
                }),
            ),
            TermNode::Zero => TermNode::Zero,
            TermNode::Sum(ts) => TermNode::Sum(ts.iter().map(|t| t.scaled_by_int(d)).collect()),
            TermNode::Neg(t) => TermNode::Neg(Box::new(t.scaled_by_int(d))),
            TermNode::IntScale(k, t) => TermNode::IntScale(k * d, t.clone()),
            TermNode::FieldScale(c, t) => {
                let scaled = c.scale(&Rational::from_integer(d.clone()));
                match scaled.as_rational() {
                    // Through the builder, so negative multipliers
                    // normalize to a negation as the grammar demands.
                    Some(r) if r.is_integer() => {
                        return Term::int_scale(r.to_integer(), (**t).clone())
                    }
                    _ => TermNode::FieldScale(scaled, t.clone()),
                }
            }
            TermNode::Meet(a, b) => {
                TermNode::Meet(Box::new(a.scaled_by_int(d)), Box::new(b.scaled_by_int(d)))
            }
            TermNode::Join(a, b) => {
                TermNode::Join(Box::new(a.scaled_by_int(d)), Box::new(b.scaled_by_int(d)))
            }
        };
        Term {
            arity: self.arity,
            node,
        }
    }

    /// Pointwise value at a real point, meets and joins resolved by exact
    /// sign comparison.
    pub fn eval_real(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let spec = point
            .first()
            .map(|c| Arc::clone(c.spec()))
            .ok_or(Error::ZeroPoint)?;
        for c in point {
            if c.spec() != &spec {
                return Err(Error::FieldMismatch);
            }
        }
        self.eval_real_inner(point, &spec)
    }

    fn eval_real_inner(
        &self,
        point: &[FieldElement],
        spec: &Arc<NumberFieldSpec>,
    ) -> Result<FieldElement> {
        match &self.node {
            TermNode::Var(i) => Ok(point[*i].clone()),
            TermNode::Zero => Ok(FieldElement::zero(spec)),
            TermNode::Sum(ts) => {
                let mut acc = FieldElement::zero(spec);
                for t in ts {
                    acc = acc.checked_add(&t.eval_real_inner(point, spec)?)?;
                }
                Ok(acc)
            }
            TermNode::Neg(t) => Ok(t.eval_real_inner(point, spec)?.neg()),
            TermNode::IntScale(k, t) => Ok(t
                .eval_real_inner(point, spec)?
                .scale(&Rational::from_integer(k.clone()))),
            TermNode::FieldScale(c, t) => t
                .eval_real_inner(point, spec)?
                .checked_mul(&c.lift_to(spec)?),
            TermNode::Meet(a, b) => {
                let va = a.eval_real_inner(point, spec)?;
                let vb = b.eval_real_inner(point, spec)?;
                Ok(if va.cmp_exact(&vb)? <= 0 { va } else { vb })
            }
            TermNode::Join(a, b) => {
                let va = a.eval_real_inner(point, spec)?;
                let vb = b.eval_real_inner(point, spec)?;
                Ok(if va.cmp_exact(&vb)? >= 0 { va } else { vb })
            }
        }
    }

    /// Exact series value; meets and joins are resolved by the series order.
    pub fn eval_series(&self, point: &[EpsSeries]) -> Result<EpsSeries> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let spec = point
            .first()
            .map(|c| Arc::clone(c.spec()))
            .ok_or(Error::ZeroPoint)?;
        for c in point {
            if c.spec() != &spec {
                return Err(Error::FieldMismatch);
            }
        }
        self.eval_series_inner(point, &spec)
    }

    fn eval_series_inner(
        &self,
        point: &[EpsSeries],
        spec: &Arc<NumberFieldSpec>,
    ) -> Result<EpsSeries> {
        match &self.node {
            TermNode::Var(i) => Ok(point[*i].clone()),
            TermNode::Zero => Ok(EpsSeries::zero(spec)),
            TermNode::Sum(ts) => {
                let mut acc = EpsSeries::zero(spec);
                for t in ts {
                    acc = acc.add(&t.eval_series_inner(point, spec)?)?;
                }
                Ok(acc)
            }
            TermNode::Neg(t) => Ok(t.eval_series_inner(point, spec)?.neg()),
            TermNode::IntScale(k, t) => Ok(t
                .eval_series_inner(point, spec)?
                .scale_rational(&Rational::from_integer(k.clone()))),
            TermNode::FieldScale(c, t) => {
                t.eval_series_inner(point, spec)?.scale(&c.lift_to(spec)?)
            }
            TermNode::Meet(a, b) => {
                let va = a.eval_series_inner(point, spec)?;
                let vb = b.eval_series_inner(point, spec)?;
                va.min(&vb)
            }
            TermNode::Join(a, b) => {
                let va = a.eval_series_inner(point, spec)?;
                let vb = b.eval_series_inner(point, spec)?;
                va.max(&vb)
            }
        }
    }

    /// Every linear piece candidate of the term: the compositional closure
    /// of leaf forms under sum, negation, and scaling, with meets and joins
    /// contributing the union of their sides. At every point the term value
    /// equals the value of one of these forms.
    pub fn leaf_forms(&self, spec: &Arc<NumberFieldSpec>) -> Result<Vec<LinearForm>> {
        let forms = self.leaf_forms_inner(spec)?;
        Ok(forms)
    }

    fn leaf_forms_inner(&self, spec: &Arc<NumberFieldSpec>) -> Result<Vec<LinearForm>> {
        let n = self.arity;
        match &self.node {
            TermNode::Var(i) => {
                let mut coeffs = linalg::fe_zero_vec(spec, n);
                coeffs[*i] = FieldElement::one(spec);
                Ok(vec![LinearForm::new(coeffs)])
            }
            TermNode::Zero => Ok(vec![LinearForm::zero(spec, n)]),
            TermNode::Sum(ts) => {
                let mut acc = vec![LinearForm::zero(spec, n)];
                for t in ts {
                    let next = t.leaf_forms_inner(spec)?;
                    let mut combined = vec![];
                    for a in &acc {
                        for b in &next {
                            let s = a.add(b)?;
                            if !combined.contains(&s) {
                                combined.push(s);
                            }
                        }
                    }
                    acc = combined;
                }
                Ok(acc)
            }
            TermNode::Neg(t) => Ok(dedup(t.leaf_forms_inner(spec)?.iter().map(LinearForm::neg))),
            TermNode::IntScale(k, t) => {
                let r = Rational::from_integer(k.clone());
                Ok(dedup(
                    t.leaf_forms_inner(spec)?
                        .iter()
                        .map(|f| f.scale_rational(&r)),
                ))
            }
            TermNode::FieldScale(c, t) => {
                let c = c.lift_to(spec)?;
                t.leaf_forms_inner(spec)?
                    .iter()
                    .map(|f| f.scale(&c))
                    .collect::<Result<Vec<_>>>()
                    .map(|v| dedup(v.into_iter()))
            }
            TermNode::Meet(a, b) | TermNode::Join(a, b) => {
                let mut out = a.leaf_forms_inner(spec)?;
                for f in b.leaf_forms_inner(spec)? {
                    if !out.contains(&f) {
                        out.push(f);
                    }
                }
                Ok(out)
            }
        }
    }

    /// JSON mirror of the AST.
    pub fn to_json(&self) -> Value {
        match &self.node {
            TermNode::Var(i) => json!({"var": i}),
            TermNode::Zero => json!({"zero": true}),
            TermNode::Sum(ts) => json!({"sum": ts.iter().map(Term::to_json).collect::<Vec<_>>()}),
            TermNode::Neg(t) => json!({"neg": t.to_json()}),
            TermNode::IntScale(k, t) => json!({"int_scale": k.to_string(), "term": t.to_json()}),
            TermNode::FieldScale(c, t) => json!({
                "field_scale": c.coords().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "term": t.to_json(),
            }),
            TermNode::Meet(a, b) => json!({"meet": [a.to_json(), b.to_json()]}),
            TermNode::Join(a, b) => json!({"join": [a.to_json(), b.to_json()]}),
        }
    }

    fn precedence(&self) -> u8 {
        match self.node {
            TermNode::Join(..) => 0,
            TermNode::Meet(..) => 1,
            TermNode::Sum(_) => 2,
            TermNode::Neg(_) => 3,
            TermNode::IntScale(..) | TermNode::FieldScale(..) => 4,
            TermNode::Var(_) | TermNode::Zero => 5,
        }
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min_prec {
            write!(f, "(")?;
            self.render(f, 0)?;
            return write!(f, ")");
        }
        match &self.node {
            TermNode::Var(i) => write!(f, "x{i}"),
            TermNode::Zero => write!(f, "0"),
            TermNode::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i == 0 {
                        t.render(f, 3)?;
                        continue;
                    }
                    if let TermNode::Neg(inner) = &t.node {
                        write!(f, " - ")?;
                        inner.render(f, 3)?;
                    } else {
                        write!(f, " + ")?;
                        t.render(f, 3)?;
                    }
                }
                Ok(())
            }
            TermNode::Neg(t) => {
                write!(f, "-")?;
                t.render(f, 3)
            }
            TermNode::IntScale(k, t) => {
                write!(f, "{k}*")?;
                t.render(f, 5)
            }
            TermNode::FieldScale(c, t) => {
                let txt = c.to_string();
                let plain_positive_rational = c
                    .as_rational()
                    .is_some_and(|r| r.is_positive() && !r.is_integer());
                if plain_positive_rational {
                    write!(f, "{txt}*")?;
                } else {
                    write!(f, "({txt})*")?;
                }
                t.render(f, 5)
            }
            TermNode::Meet(a, b) => {
                a.render(f, 2)?;
                write!(f, " /\\ ")?;
                b.render(f, 1)
            }
            TermNode::Join(a, b) => {
                a.render(f, 1)?;
                write!(f, " \\/ ")?;
                b.render(f, 0)
            }
        }
    }
}

fn dedup(forms: impl Iterator<Item = LinearForm>) -> Vec<LinearForm> {
    let mut out: Vec<LinearForm> = vec![];
    for f in forms {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, 0)
    }
}

// ---------------------------------------------------------------------------

/// A homogeneous linear form with field coefficients; lattice-group usage
/// requires every coefficient to be an integer.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm {
    coeffs: Vec<FieldElement>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        assert!(!coeffs.is_empty(), "forms need at least one coordinate");
        Self { coeffs }
    }

    pub fn zero(spec: &Arc<NumberFieldSpec>, n: usize) -> Self {
        Self::new(linalg::fe_zero_vec(spec, n))
    }

    pub fn from_rationals(spec: &Arc<NumberFieldSpec>, coeffs: &[Rational]) -> Self {
        Self::new(linalg::rational_vec_to_fe(spec, coeffs))
    }

    pub fn from_ints(spec: &Arc<NumberFieldSpec>, coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&k| FieldElement::from_int(spec, k))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn spec(&self) -> &Arc<NumberFieldSpec> {
        self.coeffs[0].spec()
    }

    pub fn is_zero(&self) -> bool {
        linalg::fe_vec_is_zero(&self.coeffs)
    }

    /// True when every coefficient is an integer rational.
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_integer)
    }

    pub fn apply_real(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.coeffs.len() {
            return Err(Error::ArityMismatch {
                expected: self.coeffs.len(),
                got: point.len(),
            });
        }
        let mut acc = FieldElement::zero(self.spec());
        for (c, x) in self.coeffs.iter().zip(point) {
            acc = acc.checked_add(&c.checked_mul(x)?)?;
        }
        Ok(acc)
    }

    pub fn apply_series(&self, point: &[EpsSeries]) -> Result<EpsSeries> {
        if point.len() != self.coeffs.len() {
            return Err(Error::ArityMismatch {
                expected: self.coeffs.len(),
                got: point.len(),
            });
        }
        let mut acc = EpsSeries::zero(self.spec());
        for (c, x) in self.coeffs.iter().zip(point) {
            acc = acc.add(&x.scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(FieldElement::neg).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: other.arity(),
            });
        }
        Ok(Self::new(linalg::fe_add_vec(&self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| x.checked_mul(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale(r)).collect())
    }

    /// Scales a rational-coefficient form to the smallest positive multiple
    /// with integer coefficients.
    pub fn clear_denominators(&self) -> Result<Self> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            let r = c.as_rational().ok_or_else(|| {
                Error::Invalid("cannot clear denominators of a non-rational form".into())
            })?;
            lcm = lcm.lcm(r.denom());
        }
        Ok(self.scale_rational(&Rational::from_integer(lcm)))
    }

    /// Expresses the form as a term: a sum of scaled variables.
    pub fn to_term(&self) -> Term {
        let n = self.arity();
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = Term::var(n, i).expect("index below arity");
            let part = match c.as_rational() {
                Some(r) if r.is_integer() => {
                    let k = r.to_integer();
                    if k.is_one() {
                        var
                    } else {
                        Term::int_scale(k, var)
                    }
                }
                _ => Term::field_scale(c.clone(), var),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            return Term::zero(n);
        }
        Term::sum(parts).expect("arities agree")
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .coeffs
            .iter()
            .map(|c| c.coords().iter().map(|r| r.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    fn q() -> Arc<NumberFieldSpec> {
        NumberFieldSpec::rational()
    }

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(&q(), n)
    }

    fn real_point(vals: &[i64]) -> Vec<FieldElement> {
        vals.iter().map(|&v| fe(v)).collect()
    }

    /// `0 /\ x0 /\ x1 /\ (x0 - n*x1)`.
    fn t_n(n: i64) -> Term {
        Term::parse_q(
            &format!("0 /\\ x0 /\\ x1 /\\ (x0 - {n}*x1)"),
            2,
            Dialect::LGroup,
        )
        .unwrap()
    }

    #[test]
    fn parse_meet_of_vars() {
        let t = Term::parse_q("x0 /\\ x1", 2, Dialect::LGroup).unwrap();
        assert_eq!(
            t.node,
            TermNode::Meet(
                Box::new(Term::var(2, 0).unwrap()),
                Box::new(Term::var(2, 1).unwrap())
            )
        );
    }

    #[test]
    fn parse_remark_term() {
        let t = Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - 3*x1)", 2, Dialect::LGroup).unwrap();
        // Right-folded meets.
        let expected = Term::meet_all(vec![
            Term::zero(2),
            Term::var(2, 0).unwrap(),
            Term::var(2, 1).unwrap(),
            Term::sum(vec![
                Term::var(2, 0).unwrap(),
                Term::int_scale(3, Term::var(2, 1).unwrap()).neg(),
            ])
            .unwrap(),
        ])
        .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn dialect_violation_rejected() {
        let r = Term::parse("th*x0", 1, Dialect::LGroup, &NumberFieldSpec::sqrt2());
        assert!(matches!(r, Err(Error::DialectViolation(_))), "{r:?}");
        // The same text is fine in the Riesz dialect over any field; the
        // parser resolves `th` in the ambient field chosen at evaluation.
        assert!(Term::parse("th*x0", 1, Dialect::Riesz, &NumberFieldSpec::sqrt2()).is_ok());
    }

    #[test]
    fn variable_out_of_range() {
        assert!(matches!(
            Term::parse_q("x2", 2, Dialect::LGroup),
            Err(Error::VarOutOfRange { var: 2, arity: 2 })
        ));
    }

    #[test]
    fn eval_real_examples() {
        let meet = Term::parse_q("x0 /\\ x1", 2, Dialect::LGroup).unwrap();
        assert_eq!(meet.eval_real(&real_point(&[2, 3])).unwrap(), fe(2));

        let t1 = t_n(1);
        assert_eq!(t1.eval_real(&real_point(&[2, 1])).unwrap(), fe(0));

        // Homogeneous terms vanish at the origin.
        for t in [&meet, &t1] {
            assert!(t.eval_real(&real_point(&[0, 0])).unwrap().is_zero());
        }
    }

    #[test]
    fn eval_series_examples() {
        let spec = q();
        let one = EpsSeries::constant(fe(1));
        let eps = EpsSeries::eps(&spec);
        for n in 1..6 {
            let t = t_n(n);
            let v = t.eval_series(&[one.clone(), eps.clone()]).unwrap();
            assert!(v.is_zero(), "t_{n} at (1, e) gave {v}");
        }
        // Projection picks out the coordinate.
        let x0 = Term::parse_q("x0", 3, Dialect::LGroup).unwrap();
        let p = vec![eps.clone(), one.clone(), EpsSeries::zero(&spec)];
        assert_eq!(x0.eval_series(&p).unwrap(), eps);
        // Real points embedded as constants evaluate through eval_real.
        let t1 = t_n(1);
        let embedded: Vec<EpsSeries> = real_point(&[2, 1])
            .into_iter()
            .map(EpsSeries::constant)
            .collect();
        assert_eq!(
            t1.eval_series(&embedded).unwrap(),
            EpsSeries::constant(t1.eval_real(&real_point(&[2, 1])).unwrap())
        );
    }

    #[test]
    fn leaf_forms_examples() {
        let spec = q();
        let t = Term::parse_q("x0 - 2*x1", 2, Dialect::LGroup).unwrap();
        let forms = t.leaf_forms(&spec).unwrap();
        assert_eq!(forms, vec![LinearForm::from_ints(&spec, &[1, -2])]);

        let t1 = t_n(1);
        let forms = t1.leaf_forms(&spec).unwrap();
        let expected = [
            LinearForm::from_ints(&spec, &[0, 0]),
            LinearForm::from_ints(&spec, &[1, 0]),
            LinearForm::from_ints(&spec, &[0, 1]),
            LinearForm::from_ints(&spec, &[1, -1]),
        ];
        assert_eq!(forms.len(), 4);
        for f in &expected {
            assert!(forms.contains(f));
        }

        let abs = Term::parse_q("|x0|", 1, Dialect::LGroup).unwrap();
        let forms = abs.leaf_forms(&spec).unwrap();
        assert_eq!(forms.len(), 2);
        assert!(forms.contains(&LinearForm::from_ints(&spec, &[1])));
        assert!(forms.contains(&LinearForm::from_ints(&spec, &[-1])));
    }

    #[test]
    fn positive_homogeneity_samples() {
        let t = t_n(2);
        let lambdas = [rat_int(0), rat_int(2), rat(1, 2), rat(7, 3)];
        let points = [[3, 1], [-2, 5], [1, 1], [0, -4]];
        for p in &points {
            let base = t.eval_real(&real_point(p)).unwrap();
            for l in &lambdas {
                let scaled: Vec<FieldElement> = real_point(p).iter().map(|c| c.scale(l)).collect();
                let vs = t.eval_real(&scaled).unwrap();
                assert_eq!(vs, base.scale(l));
            }
        }
    }

    #[test]
    fn standard_part_exchange() {
        // st(t(p)) = t(st(p)) for limited series points.
        let spec = q();
        let t = t_n(3);
        let p = vec![
            EpsSeries::new(&spec, vec![(rat_int(0), fe(2)), (rat_int(1), fe(-1))]).unwrap(),
            EpsSeries::new(&spec, vec![(rat_int(0), fe(1)), (rat_int(2), fe(5))]).unwrap(),
        ];
        let st_p: Vec<FieldElement> = p.iter().map(|s| s.standard_part().unwrap()).collect();
        assert_eq!(
            t.eval_series(&p).unwrap().standard_part().unwrap(),
            t.eval_real(&st_p).unwrap()
        );
    }

    #[test]
    fn piecewise_linearity_witness() {
        let spec = q();
        let t = t_n(1);
        let forms = t.leaf_forms(&spec).unwrap();
        for p in [[1, 2], [3, -1], [-5, 2], [2, 1], [0, 0]] {
            let point = real_point(&p);
            let v = t.eval_real(&point).unwrap();
            assert!(
                forms.iter().any(|f| f.apply_real(&point).unwrap() == v),
                "no active leaf form at {p:?}"
            );
        }
    }

    #[test]
    fn render_parse_roundtrip() {
        let cases = [
            ("x0 /\\ x1", 2),
            ("0 /\\ x0 /\\ x1 /\\ (x0 - 3*x1)", 2),
            ("|x0| \\/ (x1 - x0)", 2),
            ("-x0 + 2*x1 - 3*x2", 3),
            ("(x0 \\/ x1) /\\ x2", 3),
            ("1/2*x0 + th*x1", 2),
            ("(-1+th)*x0 - (1/2)*x1", 2),
            ("2*th^2*x0", 1),
            ("--x0", 1),
            ("0*x0 + 2*(x1 /\\ 0)", 2),
        ];
        let spec = NumberFieldSpec::sqrt2();
        for (txt, n) in cases {
            let t = Term::parse(txt, n, Dialect::Riesz, &spec).unwrap();
            let rendered = t.to_string();
            let back = Term::parse(&rendered, n, Dialect::Riesz, &spec).unwrap();
            assert_eq!(back, t, "render {txt:?} -> {rendered:?}");
        }
    }

    #[test]
    fn cleared_parse() {
        // (1/2)x0 - (3/2)x1 clears by 2 to x0 - 3 x1.
        let t = Term::parse_cleared("1/2*x0 - 3/2*x1", 2, &BigInt::from(2)).unwrap();
        assert!(t.is_lgroup_valid());
        let expected = Term::parse_q("x0 - 3*x1", 2, Dialect::LGroup).unwrap();
        let p = real_point(&[5, 3]);
        assert_eq!(t.eval_real(&p).unwrap(), expected.eval_real(&p).unwrap());
        // A denominator that does not clear everything is rejected.
        assert!(Term::parse_cleared("1/3*x0", 1, &BigInt::from(2)).is_err());
        // Negative rational scalars clear through the sign normalization,
        // keeping the AST inside what the grammar can print and reparse.
        let neg = Term::parse_cleared("-1/2*x0 + x1", 2, &BigInt::from(2)).unwrap();
        let rendered = neg.to_string();
        assert_eq!(Term::parse_q(&rendered, 2, Dialect::LGroup).unwrap(), neg);
        let hand = Term::field_scale(
            FieldElement::from_rational(&q(), rat(-1, 2)),
            Term::var(2, 0).unwrap(),
        )
        .scaled_by_int(&BigInt::from(2));
        assert_eq!(hand, Term::int_scale(1, Term::var(2, 0).unwrap()).neg());
        // Without clearing, rational scalars are rejected in the dialect.
        assert!(matches!(
            Term::parse_q("1/2*x0", 1, Dialect::LGroup),
            Err(Error::DialectViolation(_))
        ));
    }

    #[test]
    fn linear_form_term_view() {
        let spec = q();
        let f = LinearForm::from_ints(&spec, &[2, 0, -1]);
        let t = f.to_term();
        let p = real_point(&[3, 9, 4]);
        assert_eq!(t.eval_real(&p).unwrap(), f.apply_real(&p).unwrap());
        assert!(t.is_lgroup_valid());

        let g = LinearForm::from_rationals(&spec, &[rat(1, 2), rat(2, 3), rat_int(0)]);
        let cleared = g.clear_denominators().unwrap();
        assert!(cleared.is_integer());
        assert_eq!(cleared, LinearForm::from_ints(&spec, &[3, 4, 0]));
    }
}
