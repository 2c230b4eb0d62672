//! The computable non-Archimedean model: finite formal series in a positive
//! infinitesimal `e` with field-element coefficients and rational exponents,
//! ordered lexicographically by lowest exponent.
//!
//! Series are exact finite objects. Every operation needed elsewhere in the
//! crate (sum, negation, scaling, product, comparison) preserves finiteness,
//! so there is no truncation policy in the trusted path. General division is
//! offered only up to a caller-supplied exponent bound and flagged as
//! approximate.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::coeff::{rational_from_json, FieldElement, NumberFieldSpec, Rational};
use crate::{Error, Result};

/// Where a series sits relative to the reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesClass {
    Zero,
    Infinitesimal,
    LimitedNoninfinitesimal,
    Unlimited,
}

/// A finite formal sum `sum c_q e^q` with strictly increasing rational
/// exponents and nonzero coefficients; the empty sum is zero. Negative
/// exponents express unlimited elements such as `e^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsSeries {
    spec: Arc<NumberFieldSpec>,
    terms: Vec<(Rational, FieldElement)>,
}

impl EpsSeries {
    /// Builds a series from arbitrary (exponent, coefficient) pairs, merging
    /// duplicates and dropping zero coefficients.
    pub fn new(spec: &Arc<NumberFieldSpec>, terms: Vec<(Rational, FieldElement)>) -> Result<Self> {
        let mut sorted = terms;
        for (_, c) in &sorted {
            if c.spec() != spec {
                return Err(Error::FieldMismatch);
            }
        }
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rational, FieldElement)> = Vec::with_capacity(sorted.len());
        for (q, c) in sorted {
            match merged.last_mut() {
                Some((lq, lc)) if *lq == q => {
                    *lc = lc.checked_add(&c)?;
                }
                _ => merged.push((q, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(Self {
            spec: Arc::clone(spec),
            terms: merged,
        })
    }

    pub fn zero(spec: &Arc<NumberFieldSpec>) -> Self {
        Self {
            spec: Arc::clone(spec),
            terms: vec![],
        }
    }

    /// Embeds a field element as the constant series.
    pub fn constant(c: FieldElement) -> Self {
        let spec = Arc::clone(c.spec());
        let terms = if c.is_zero() {
            vec![]
        } else {
            vec![(Rational::zero(), c)]
        };
        Self { spec, terms }
    }

    /// The infinitesimal `e` itself.
    pub fn eps(spec: &Arc<NumberFieldSpec>) -> Self {
        Self::eps_pow(spec, Rational::one())
    }

    /// `e^q` for a rational exponent `q` (negative exponents allowed).
    pub fn eps_pow(spec: &Arc<NumberFieldSpec>, q: Rational) -> Self {
        Self {
            spec: Arc::clone(spec),
            terms: vec![(q, FieldElement::one(spec))],
        }
    }

    pub fn spec(&self) -> &Arc<NumberFieldSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &[(Rational, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        let mut out: Vec<(Rational, FieldElement)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (qa, ca) = &self.terms[i];
            let (qb, cb) = &other.terms[j];
            match qa.cmp(qb) {
                std::cmp::Ordering::Less => {
                    out.push((qa.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((qb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.checked_add(cb)?;
                    if !c.is_zero() {
                        out.push((qa.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Self {
            spec: Arc::clone(&self.spec),
            terms: out,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            spec: Arc::clone(&self.spec),
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (q.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (qa, ca) in &self.terms {
            for (qb, cb) in &other.terms {
                raw.push((qa + qb, ca.checked_mul(cb)?));
            }
        }
        Self::new(&self.spec, raw)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self> {
        if c.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Ok(Self::zero(&self.spec));
        }
        let terms = self
            .terms
            .iter()
            .map(|(q, x)| Ok((q.clone(), x.checked_mul(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            spec: Arc::clone(&self.spec),
            terms,
        })
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.spec);
        }
        Self {
            spec: Arc::clone(&self.spec),
            terms: self
                .terms
                .iter()
                .map(|(q, x)| (q.clone(), x.scale(r)))
                .collect(),
        }
    }

    /// Leading (lowest-exponent) term of a nonzero series.
    pub fn leading(&self) -> Result<(&Rational, &FieldElement)> {
        self.terms
            .first()
            .map(|(q, c)| (q, c))
            .ok_or(Error::ZeroSeries)
    }

    /// Sign in the order where `e` is positive yet smaller than every
    /// positive real: the sign of the leading coefficient.
    pub fn sign(&self) -> i8 {
        match self.terms.first() {
            None => 0,
            Some((_, c)) => c.sign(),
        }
    }

    /// Three-way comparison compatible with the non-Archimedean order.
    pub fn cmp_exact(&self, other: &Self) -> Result<i8> {
        Ok(self.sub(other)?.sign())
    }

    pub fn min(&self, other: &Self) -> Result<Self> {
        Ok(if self.cmp_exact(other)? <= 0 {
            self.clone()
        } else {
            other.clone()
        })
    }

    pub fn max(&self, other: &Self) -> Result<Self> {
        Ok(if self.cmp_exact(other)? >= 0 {
            self.clone()
        } else {
            other.clone()
        })
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn classify(&self) -> SeriesClass {
        match self.terms.first() {
            None => SeriesClass::Zero,
            Some((q, _)) => {
                if q.is_positive() {
                    SeriesClass::Infinitesimal
                } else if q.is_zero() {
                    SeriesClass::LimitedNoninfinitesimal
                } else {
                    SeriesClass::Unlimited
                }
            }
        }
    }

    pub fn is_limited(&self) -> bool {
        matches!(
            self.classify(),
            SeriesClass::Zero | SeriesClass::Infinitesimal | SeriesClass::LimitedNoninfinitesimal
        )
    }

    pub fn is_infinitesimal(&self) -> bool {
        matches!(
            self.classify(),
            SeriesClass::Zero | SeriesClass::Infinitesimal
        )
    }

    /// Standard part of a limited series: the coefficient at exponent zero.
    pub fn standard_part(&self) -> Result<FieldElement> {
        if !self.is_limited() {
            return Err(Error::Unlimited);
        }
        for (q, c) in &self.terms {
            if q.is_zero() {
                return Ok(c.clone());
            }
            if q.is_positive() {
                break;
            }
        }
        Ok(FieldElement::zero(&self.spec))
    }

    /// Approximate division: the series expansion of `self / other` truncated
    /// at exponent `bound`. The boolean is true when the expansion terminated
    /// with a zero remainder, i.e. the quotient is exact.
    pub fn div_truncated(&self, other: &Self, bound: &Rational) -> Result<(Self, bool)> {
        if other.is_zero() {
            return Err(Error::ZeroSeries);
        }
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        let (dq, dc) = other.leading()?;
        let dq = dq.clone();
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.spec);
        while let Some((rq, rc)) = rem.terms.first() {
            let tq = rq - &dq;
            if tq > *bound {
                return Ok((quot, false));
            }
            let tc = rc.checked_mul(&dinv)?;
            let t = Self {
                spec: Arc::clone(&self.spec),
                terms: vec![(tq, tc)],
            };
            quot = quot.add(&t)?;
            rem = rem.sub(&t.mul(other)?)?;
        }
        Ok((quot, true))
    }

    /// Parses the textual form `3 + 5*e + (1+th)*e^2 - e^-1`.
    pub fn parse(input: &str, spec: &Arc<NumberFieldSpec>) -> Result<Self> {
        crate::text::parse_series(input, spec)
    }

    /// JSON: a list of `{"q": exponent, "c": coefficient}` sorted by `q`,
    /// with the field recorded once.
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.spec.to_json(),
            "terms": self
                .terms
                .iter()
                .map(|(q, c)| json!({
                    "q": q.to_string(),
                    "c": c.coords().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Invalid("series must be a JSON object".into()))?;
        let spec = NumberFieldSpec::from_json(
            obj.get("field")
                .ok_or_else(|| Error::Invalid("series needs 'field'".into()))?,
        )?;
        let mut terms = vec![];
        for t in obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("series needs 'terms'".into()))?
        {
            let q = rational_from_json(
                t.get("q")
                    .ok_or_else(|| Error::Invalid("series term needs 'q'".into()))?,
            )?;
            let coords = t
                .get("c")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Invalid("series term needs 'c'".into()))?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()?;
            terms.push((q, FieldElement::new(Arc::clone(&spec), coords)));
        }
        Self::new(&spec, terms)
    }
}

/// Parses a series point `(s1, ..., sn)`.
pub fn parse_point(
    input: &str,
    arity: usize,
    spec: &Arc<NumberFieldSpec>,
) -> Result<Vec<EpsSeries>> {
    crate::text::parse_series_point(input, arity, spec)
}

/// Parses a real point `(c1, ..., cn)` with field-element coordinates.
pub fn parse_real_point(
    input: &str,
    arity: usize,
    spec: &Arc<NumberFieldSpec>,
) -> Result<Vec<FieldElement>> {
    crate::text::parse_real_point(input, arity, spec)
}

impl fmt::Display for EpsSeries {
    /// Canonical text such as `3 + 5*e + (1+th)*e^2 - e^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (q, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = if c.sign() < 0 {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_txt = coeff_text(&mag);
            if q.is_zero() {
                write!(f, "{coeff_txt}")?;
            } else {
                if coeff_txt != "1" {
                    write!(f, "{coeff_txt}*")?;
                }
                if q.is_one() {
                    write!(f, "e")?;
                } else {
                    write!(f, "e^{q}")?;
                }
            }
        }
        Ok(())
    }
}

/// Renders a nonnegative coefficient, parenthesized when it is a sum.
fn coeff_text(c: &FieldElement) -> String {
    let s = c.to_string();
    if s[1..].contains(['+', '-']) {
        format!("({s})")
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    fn q(spec: &Arc<NumberFieldSpec>, n: i64) -> FieldElement {
        FieldElement::from_int(spec, n)
    }

    fn s(spec: &Arc<NumberFieldSpec>, terms: &[(i64, i64, i64)]) -> EpsSeries {
        // (exp_num, exp_den, integer coeff)
        EpsSeries::new(
            spec,
            terms
                .iter()
                .map(|&(en, ed, c)| (rat(en, ed), q(spec, c)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn addition_merges_and_cancels() {
        let spec = NumberFieldSpec::rational();
        let a = s(&spec, &[(0, 1, 1), (1, 1, 1)]);
        let b = s(&spec, &[(1, 1, -1)]);
        assert_eq!(a.add(&b).unwrap(), s(&spec, &[(0, 1, 1)]));

        let zero = EpsSeries::zero(&spec);
        assert_eq!(zero.add(&a).unwrap(), a);

        let c = s(&spec, &[(0, 1, 3), (1, 1, 5)]);
        let d = s(&spec, &[(1, 1, 2), (2, 1, 1)]);
        assert_eq!(
            c.add(&d).unwrap(),
            s(&spec, &[(0, 1, 3), (1, 1, 7), (2, 1, 1)])
        );
    }

    #[test]
    fn products() {
        let spec = NumberFieldSpec::rational();
        let one_plus = s(&spec, &[(0, 1, 1), (1, 1, 1)]);
        let one_minus = s(&spec, &[(0, 1, 1), (1, 1, -1)]);
        assert_eq!(
            one_plus.mul(&one_minus).unwrap(),
            s(&spec, &[(0, 1, 1), (2, 1, -1)])
        );

        let eps = EpsSeries::eps(&spec);
        let eps_inv = EpsSeries::eps_pow(&spec, rat_int(-1));
        assert_eq!(eps.mul(&eps_inv).unwrap(), EpsSeries::constant(q(&spec, 1)));

        let three_eps = s(&spec, &[(0, 1, 3), (1, 1, 1)]);
        assert_eq!(
            three_eps.scale(&q(&spec, 2)).unwrap(),
            s(&spec, &[(0, 1, 6), (1, 1, 2)])
        );
    }

    #[test]
    fn comparisons() {
        let spec = NumberFieldSpec::rational();
        let eps = EpsSeries::eps(&spec);
        let one = EpsSeries::constant(q(&spec, 1));
        assert_eq!(eps.cmp_exact(&one).unwrap(), -1);

        let eps_inv = EpsSeries::eps_pow(&spec, rat_int(-1));
        let million = EpsSeries::constant(q(&spec, 1_000_000));
        assert_eq!(eps_inv.cmp_exact(&million).unwrap(), 1);

        let one_plus_eps = one.add(&eps).unwrap();
        assert_eq!(one_plus_eps.cmp_exact(&one).unwrap(), 1);
    }

    #[test]
    fn standard_parts() {
        let spec = NumberFieldSpec::rational();
        let a = s(&spec, &[(0, 1, 3), (1, 1, 5)]);
        assert_eq!(a.standard_part().unwrap(), q(&spec, 3));
        assert_eq!(EpsSeries::eps(&spec).standard_part().unwrap(), q(&spec, 0));
        // st((1+e)(2-e)) = 2 = st(1+e) * st(2-e)
        let p = s(&spec, &[(0, 1, 1), (1, 1, 1)]);
        let r = s(&spec, &[(0, 1, 2), (1, 1, -1)]);
        let prod = p.mul(&r).unwrap();
        assert_eq!(prod.standard_part().unwrap(), q(&spec, 2));
        let unlimited = EpsSeries::eps_pow(&spec, rat_int(-1));
        assert!(matches!(unlimited.standard_part(), Err(Error::Unlimited)));
    }

    #[test]
    fn classification() {
        let spec = NumberFieldSpec::rational();
        let eps_sq = EpsSeries::eps_pow(&spec, rat_int(2));
        assert_eq!(eps_sq.classify(), SeriesClass::Infinitesimal);
        let two_plus_inv = EpsSeries::constant(q(&spec, 2))
            .add(&EpsSeries::eps_pow(&spec, rat_int(-1)))
            .unwrap();
        assert_eq!(two_plus_inv.classify(), SeriesClass::Unlimited);
        let five = EpsSeries::constant(q(&spec, 5));
        assert_eq!(five.classify(), SeriesClass::LimitedNoninfinitesimal);
        assert_eq!(EpsSeries::zero(&spec).classify(), SeriesClass::Zero);
        assert!(matches!(
            EpsSeries::zero(&spec).leading(),
            Err(Error::ZeroSeries)
        ));
    }

    #[test]
    fn infinitesimal_facts() {
        let spec = NumberFieldSpec::rational();
        let e1 = EpsSeries::eps(&spec);
        let e2 = EpsSeries::eps_pow(&spec, rat(1, 2));
        assert!(e1.add(&e2).unwrap().is_infinitesimal());
        assert!(e1.mul(&e2).unwrap().is_infinitesimal());
        let limited = s(&spec, &[(0, 1, 7), (1, 1, 3)]);
        assert!(e1.mul(&limited).unwrap().is_infinitesimal());
        assert!(limited.add(&e1).unwrap().is_limited());
    }

    #[test]
    fn monotone_standard_part() {
        let spec = NumberFieldSpec::rational();
        let a = s(&spec, &[(0, 1, 2), (1, 1, 9)]);
        let b = s(&spec, &[(0, 1, 2), (1, 2, 1)]);
        let (lo, hi) = if a.cmp_exact(&b).unwrap() <= 0 {
            (&a, &b)
        } else {
            (&b, &a)
        };
        let slo = lo.standard_part().unwrap();
        let shi = hi.standard_part().unwrap();
        assert!(slo.cmp_exact(&shi).unwrap() <= 0);
    }

    #[test]
    fn division_truncated() {
        let spec = NumberFieldSpec::rational();
        let one = EpsSeries::constant(q(&spec, 1));
        let denom = s(&spec, &[(0, 1, 1), (1, 1, -1)]); // 1 - e
        let (quot, exact) = one.div_truncated(&denom, &rat_int(3)).unwrap();
        assert!(!exact);
        assert_eq!(
            quot,
            s(&spec, &[(0, 1, 1), (1, 1, 1), (2, 1, 1), (3, 1, 1)])
        );
        // e / e is exact
        let eps = EpsSeries::eps(&spec);
        let (quot, exact) = eps.div_truncated(&eps, &rat_int(0)).unwrap();
        assert!(exact);
        assert_eq!(quot, one);
    }

    #[test]
    fn display_forms() {
        let spec = NumberFieldSpec::sqrt2();
        let th = FieldElement::generator(&spec);
        let one_plus_th = FieldElement::one(&spec).checked_add(&th).unwrap();
        let series = EpsSeries::new(
            &spec,
            vec![
                (rat_int(0), FieldElement::from_int(&spec, 3)),
                (rat_int(1), FieldElement::from_int(&spec, 5)),
                (rat_int(2), one_plus_th),
                (rat_int(-1), FieldElement::from_int(&spec, -1)),
            ],
        )
        .unwrap();
        assert_eq!(series.to_string(), "-e^-1 + 3 + 5*e + (1+th)*e^2");
    }
}
