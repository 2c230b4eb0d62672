//! Exact ordered-field arithmetic for coefficients: the rationals and real
//! algebraic number fields `Q(th)` presented by a monic integer minimal
//! polynomial together with an isolating interval for one real root.
//!
//! Sign determination refines the isolating interval by bisection with
//! exact rational endpoint arithmetic until an interval evaluation of the
//! element excludes zero. There is no floating point anywhere.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers: dense ascending coefficients with no trailing
// zeros, the zero polynomial being the empty vector.

fn poly_norm(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_eval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_derivative(p: &[Rational]) -> Vec<Rational> {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect()
}

/// Quotient and remainder of `a` divided by `b` in `Q[x]`; `b` nonzero.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = poly_norm(a.to_vec());
    let b = poly_norm(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = r.last().unwrap() / &lead;
        q[dr - db] = c.clone();
        for i in 0..db {
            let sub = &c * &b[i];
            let idx = dr - db + i;
            r[idx] = &r[idx] - sub;
        }
        r.pop();
        r = poly_norm(r);
        if r.is_empty() {
            break;
        }
    }
    (poly_norm(q), r)
}

fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    poly_divmod(a, b).1
}

/// Extended gcd in `Q[x]`: returns `(g, s, t)` with `s*a + t*b = g`, and `g`
/// monic unless zero.
fn poly_xgcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0 = poly_norm(a.to_vec());
    let mut r1 = poly_norm(b.to_vec());
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![];
    let mut t0 = vec![];
    let mut t1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = Rational::one() / lead;
        for p in [&mut r0, &mut s0, &mut t0] {
            for c in p.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
    (r0, s0, t0)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    poly_norm(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].clone() + x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = &out[i] - y;
    }
    poly_norm(out)
}

/// Number of sign changes in a sequence, ignoring zeros.
fn sign_changes(vals: &[Rational]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for v in vals {
        let s = rational_sign(v);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

pub(crate) fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Counts real roots of `p` in the open interval `(lo, hi)` via a Sturm
/// chain. Requires `p(lo) != 0` and `p(hi) != 0`.
fn sturm_count(p: &[Rational], lo: &Rational, hi: &Rational) -> usize {
    let mut chain = vec![poly_norm(p.to_vec()), poly_derivative(p)];
    loop {
        let last = &chain[chain.len() - 1];
        if last.is_empty() {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let mut r = poly_rem(prev, last);
        if r.is_empty() {
            break;
        }
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        chain.push(r);
    }
    let at = |x: &Rational| -> Vec<Rational> { chain.iter().map(|q| poly_eval(q, x)).collect() };
    let vl = sign_changes(&at(lo));
    let vh = sign_changes(&at(hi));
    vl.saturating_sub(vh)
}

// ---------------------------------------------------------------------------

/// A real algebraic number field `Q(th)`, presented by a monic minimal
/// polynomial with integer coefficients and an isolating interval that
/// contains exactly one real root `th`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberFieldSpec {
    min_poly: Vec<BigInt>,
    lo: Rational,
    hi: Rational,
}

impl NumberFieldSpec {
    /// Validates and builds a field spec.
    ///
    /// The polynomial must be monic of degree >= 1. The rational-root test
    /// rejects all polynomials with a rational root when the degree exceeds
    /// one; this settles irreducibility up to degree 3. Higher degrees are
    /// accepted on the trust assumption that the polynomial is irreducible.
    /// A Sturm chain certifies that `(lo, hi)` isolates exactly one root.
    pub fn new(min_poly: Vec<BigInt>, lo: Rational, hi: Rational) -> Result<Arc<Self>> {
        if min_poly.len() < 2 {
            return Err(Error::BadMinPoly("degree must be at least 1".into()));
        }
        if !min_poly.last().is_some_and(One::is_one) {
            return Err(Error::BadMinPoly("polynomial must be monic".into()));
        }
        let degree = min_poly.len() - 1;
        if degree > 1 {
            if let Some(root) = rational_root(&min_poly) {
                return Err(Error::BadMinPoly(format!(
                    "polynomial has the rational root {root}, so it is reducible"
                )));
            }
        }
        if lo >= hi {
            return Err(Error::BadInterval("lo must be smaller than hi".into()));
        }
        let spec = Self { min_poly, lo, hi };
        let p = spec.min_poly_q();
        if poly_eval(&p, &spec.lo).is_zero() || poly_eval(&p, &spec.hi).is_zero() {
            return Err(Error::BadInterval(
                "interval endpoints must not be roots".into(),
            ));
        }
        let roots = sturm_count(&p, &spec.lo, &spec.hi);
        if roots != 1 {
            return Err(Error::BadInterval(format!(
                "interval contains {roots} roots, expected exactly one"
            )));
        }
        Ok(Arc::new(spec))
    }

    /// The field `Q` itself, presented with `th = 0`.
    pub fn rational() -> Arc<Self> {
        Self::new(vec![BigInt::zero(), BigInt::one()], rat_int(-1), rat_int(1))
            .expect("the rational preset is valid")
    }

    /// `Q(sqrt 2)`, minimal polynomial `x^2 - 2`.
    pub fn sqrt2() -> Arc<Self> {
        Self::new(
            vec![BigInt::from(-2), BigInt::zero(), BigInt::one()],
            rat(7, 5),
            rat(3, 2),
        )
        .expect("the sqrt2 preset is valid")
    }

    /// `Q(sqrt 2 + sqrt 3)`, minimal polynomial `x^4 - 10 x^2 + 1`.
    ///
    /// Inside this degree-4 field, `sqrt 2 = (th^3 - 9 th)/2` and
    /// `sqrt 3 = (11 th - th^3)/2`.
    pub fn sqrt2_sqrt3() -> Arc<Self> {
        Self::new(
            vec![
                BigInt::one(),
                BigInt::zero(),
                BigInt::from(-10),
                BigInt::zero(),
                BigInt::one(),
            ],
            rat_int(3),
            rat(13, 4),
        )
        .expect("the sqrt2_sqrt3 preset is valid")
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    pub fn isolating_interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    fn min_poly_q(&self) -> Vec<Rational> {
        self.min_poly
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }

    /// Bisects the isolating interval `steps` times, returning an enclosure
    /// of `th` of width `(hi - lo) / 2^steps`.
    fn refined_interval(&self, steps: usize) -> (Rational, Rational) {
        let p = self.min_poly_q();
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let mut sign_lo = rational_sign(&poly_eval(&p, &lo));
        let two = rat_int(2);
        for _ in 0..steps {
            let mid = (&lo + &hi) / &two;
            let sm = rational_sign(&poly_eval(&p, &mid));
            // A rational midpoint cannot be a root: the rational-root test
            // ran at construction, and degree-1 fields never refine past the
            // exact root because sign queries short-circuit there.
            debug_assert!(sm != 0, "rational midpoint root in refined_interval");
            if sm == sign_lo {
                lo = mid;
                sign_lo = sm;
            } else {
                hi = mid;
            }
        }
        (lo, hi)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "poly": self.min_poly.iter().map(json_bigint).collect::<Vec<_>>(),
            "lo": self.lo.to_string(),
            "hi": self.hi.to_string(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Arc<Self>> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Invalid("field spec must be a JSON object".into()))?;
        let poly = obj
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("field spec needs a 'poly' array".into()))?;
        let min_poly = poly
            .iter()
            .map(bigint_from_json)
            .collect::<Result<Vec<_>>>()?;
        let lo = rational_from_json(
            obj.get("lo")
                .ok_or_else(|| Error::Invalid("field spec needs 'lo'".into()))?,
        )?;
        let hi = rational_from_json(
            obj.get("hi")
                .ok_or_else(|| Error::Invalid("field spec needs 'hi'".into()))?,
        )?;
        Self::new(min_poly, lo, hi)
    }
}

fn json_bigint(c: &BigInt) -> Value {
    match c.to_string().parse::<i64>() {
        Ok(small) => json!(small),
        Err(_) => json!(c.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse::<BigInt>()
            .map_err(|e| Error::Invalid(format!("bad integer '{s}': {e}")));
    }
    Err(Error::Invalid("expected an integer".into()))
}

pub(crate) fn rational_from_json(v: &Value) -> Result<Rational> {
    if let Some(s) = v.as_str() {
        return parse_rational(s);
    }
    if let Some(i) = v.as_i64() {
        return Ok(rat_int(i));
    }
    Err(Error::Invalid("expected a rational as string".into()))
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Invalid(format!("bad rational '{s}': {e}")))
}

/// Rational-root test for a monic integer polynomial: any rational root is
/// an integer dividing the constant term.
fn rational_root(poly: &[BigInt]) -> Option<Rational> {
    let p: Vec<Rational> = poly
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    let a0 = &poly[0];
    if a0.is_zero() {
        return Some(Rational::zero());
    }
    let bound = a0.abs();
    let mut d = BigInt::one();
    while d <= bound {
        if (&bound % &d).is_zero() {
            for cand in [
                Rational::from_integer(d.clone()),
                Rational::from_integer(-d.clone()),
            ] {
                if poly_eval(&p, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
        d += 1;
    }
    None
}

// ---------------------------------------------------------------------------

/// An exact real algebraic number `sum coords[i] * th^i` in a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: Arc<NumberFieldSpec>,
    coords: Vec<Rational>,
}

impl FieldElement {
    /// Builds an element from coordinates on the power basis; longer
    /// coordinate vectors are reduced modulo the minimal polynomial.
    pub fn new(spec: Arc<NumberFieldSpec>, mut coords: Vec<Rational>) -> Self {
        let d = spec.degree();
        if coords.len() > d {
            let reduced = reduce_mod(&coords, &spec);
            coords = reduced;
        }
        coords.resize(d, Rational::zero());
        Self { spec, coords }
    }

    pub fn zero(spec: &Arc<NumberFieldSpec>) -> Self {
        Self::new(Arc::clone(spec), vec![])
    }

    pub fn one(spec: &Arc<NumberFieldSpec>) -> Self {
        Self::from_rational(spec, Rational::one())
    }

    /// The generator `th` of the field.
    pub fn generator(spec: &Arc<NumberFieldSpec>) -> Self {
        Self::new(Arc::clone(spec), vec![Rational::zero(), Rational::one()])
    }

    pub fn from_rational(spec: &Arc<NumberFieldSpec>, r: Rational) -> Self {
        Self::new(Arc::clone(spec), vec![r])
    }

    pub fn from_int(spec: &Arc<NumberFieldSpec>, n: i64) -> Self {
        Self::from_rational(spec, rat_int(n))
    }

    pub fn spec(&self) -> &Arc<NumberFieldSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational value when the element has no `th` component.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// True when the element is an integer rational.
    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(Rational::is_integer)
    }

    /// Re-expresses the element in another field. Only rational values can
    /// cross fields (the rationals embed everywhere); anything mentioning a
    /// generator stays bound to its own field.
    pub fn lift_to(&self, spec: &Arc<NumberFieldSpec>) -> Result<Self> {
        if &self.spec == spec {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(r) => Ok(Self::from_rational(spec, r.clone())),
            None => Err(Error::FieldMismatch),
        }
    }

    pub(crate) fn same_field(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            spec: Arc::clone(&self.spec),
            coords,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            spec: Arc::clone(&self.spec),
            coords,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let prod = poly_mul(&self.coords, &other.coords);
        Ok(Self::new(Arc::clone(&self.spec), prod))
    }

    /// Multiplicative inverse. Errs on zero, and reveals a reducible minimal
    /// polynomial if a nonzero element turns out to be a zero divisor.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.spec, Rational::one() / r));
        }
        let (g, s, _) = poly_xgcd(&self.coords, &self.spec.min_poly_q());
        if g.len() != 1 {
            return Err(Error::BadMinPoly(
                "nonzero element is a zero divisor; the minimal polynomial is reducible".into(),
            ));
        }
        let ginv = Rational::one() / &g[0];
        let coords = s.iter().map(|c| c * &ginv).collect();
        Ok(Self::new(Arc::clone(&self.spec), coords))
    }

    pub fn neg(&self) -> Self {
        Self {
            spec: Arc::clone(&self.spec),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            spec: Arc::clone(&self.spec),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Certified sign of the real number this element denotes.
    ///
    /// Zero is decided exactly from the coordinates; otherwise the isolating
    /// interval is bisected until an interval evaluation of the coordinate
    /// polynomial excludes zero. Termination is guaranteed because nonzero
    /// elements of a field presented by an irreducible polynomial denote
    /// nonzero reals.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return rational_sign(r);
        }
        // Degree-1 elements always have a rational value, handled above, so
        // from here on the minimal polynomial has no rational roots and the
        // bisection below never lands on one.
        let mut steps = 4;
        loop {
            let (lo, hi) = self.spec.refined_interval(steps);
            let (vlo, vhi) = interval_eval(&self.coords, &lo, &hi);
            if rational_sign(&vlo) > 0 {
                return 1;
            }
            if rational_sign(&vhi) < 0 {
                return -1;
            }
            steps *= 2;
        }
    }

    pub fn cmp_exact(&self, other: &Self) -> Result<i8> {
        Ok(self.checked_sub(other)?.sign())
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// A rational approximation within `width` of the true value, obtained
    /// from an interval enclosure. Used when rounding real witnesses to
    /// rational ones; never part of a sign decision.
    pub fn rational_approx(&self, width: &Rational) -> Rational {
        if let Some(r) = self.as_rational() {
            return r.clone();
        }
        let mut steps = 4;
        loop {
            let (lo, hi) = self.spec.refined_interval(steps);
            let (vlo, vhi) = interval_eval(&self.coords, &lo, &hi);
            if &vhi - &vlo < *width {
                return (vlo + vhi) / rat_int(2);
            }
            steps *= 2;
        }
    }

    /// Parses the textual form `1+2*th-3/2*th^3` over a known field.
    pub fn parse(input: &str, spec: &Arc<NumberFieldSpec>) -> Result<Self> {
        crate::text::parse_field_element(input, spec)
    }

    /// Parses the standalone form `1+2*th @ field(x^2-2, [7/5, 3/2])`,
    /// returning the element together with its field.
    pub fn parse_with_field(input: &str) -> Result<(Self, Arc<NumberFieldSpec>)> {
        crate::text::parse_element_with_field(input)
    }

    /// The standalone textual form, with the field spelled out.
    pub fn to_text_with_field(&self) -> String {
        let poly: Vec<String> = self
            .spec
            .min_poly()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let x_part = match k {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{k}"),
                };
                if x_part.is_empty() {
                    format!("{c:+}")
                } else if c.is_one() {
                    format!("+{x_part}")
                } else if (-c).is_one() {
                    format!("-{x_part}")
                } else {
                    format!("{c:+}*{x_part}")
                }
            })
            .collect();
        let (lo, hi) = self.spec.isolating_interval();
        format!(
            "{self} @ field({}, [{lo}, {hi}])",
            poly.join("").trim_start_matches('+')
        )
    }

    /// Canonical JSON: coordinates as strings plus the field presentation.
    pub fn to_json(&self) -> Value {
        json!({
            "coords": self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "field": self.spec.to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Invalid("field element must be a JSON object".into()))?;
        let spec = NumberFieldSpec::from_json(
            obj.get("field")
                .ok_or_else(|| Error::Invalid("field element needs 'field'".into()))?,
        )?;
        let coords = obj
            .get("coords")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("field element needs 'coords'".into()))?
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()?;
        if coords.len() > spec.degree() {
            return Err(Error::Invalid(
                "more coordinates than the field degree".into(),
            ));
        }
        Ok(Self::new(spec, coords))
    }
}

fn reduce_mod(coords: &[Rational], spec: &NumberFieldSpec) -> Vec<Rational> {
    let mut r = coords.to_vec();
    let p = spec.min_poly_q();
    let d = spec.degree();
    while r.len() > d {
        let c = r.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let k = r.len() - d;
        for i in 0..d {
            let sub = &c * &p[i];
            r[k + i] = &r[k + i] - sub;
        }
    }
    r
}

/// Interval evaluation of a polynomial over `[lo, hi]` by Horner steps with
/// interval arithmetic.
fn interval_eval(p: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut alo = Rational::zero();
    let mut ahi = Rational::zero();
    for c in p.iter().rev() {
        let products = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut min = products[0].clone();
        let mut max = products[0].clone();
        for q in &products[1..] {
            if *q < min {
                min = q.clone();
            }
            if *q > max {
                max = q.clone();
            }
        }
        alo = min + c;
        ahi = max + c;
    }
    (alo, ahi)
}

impl fmt::Display for FieldElement {
    /// Canonical text: `1+2*th-3/2*th^3`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "th")?;
                } else {
                    write!(f, "th^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(spec: &Arc<NumberFieldSpec>, coords: &[(i64, i64)]) -> FieldElement {
        FieldElement::new(
            Arc::clone(spec),
            coords.iter().map(|&(n, d)| rat(n, d)).collect(),
        )
    }

    #[test]
    fn theta_squared_is_two_in_sqrt2() {
        let spec = NumberFieldSpec::sqrt2();
        let th = FieldElement::generator(&spec);
        let sq = th.checked_mul(&th).unwrap();
        assert_eq!(sq, FieldElement::from_int(&spec, 2));
    }

    #[test]
    fn additive_identity() {
        let spec = NumberFieldSpec::sqrt2();
        let a = fe(&spec, &[(3, 2), (-1, 1)]);
        let z = FieldElement::zero(&spec);
        assert_eq!(a.checked_add(&z).unwrap(), a);
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        // Independent oracle: (1+th)(th-1) = th^2 - 1 = 1 mod (x^2 - 2).
        let spec = NumberFieldSpec::sqrt2();
        let a = fe(&spec, &[(1, 1), (1, 1)]);
        let expected = fe(&spec, &[(-1, 1), (1, 1)]);
        let product = a.checked_mul(&expected).unwrap();
        assert_eq!(product, FieldElement::one(&spec));
        assert_eq!(a.inv().unwrap(), expected);
    }

    #[test]
    fn sign_examples() {
        let spec = NumberFieldSpec::sqrt2();
        assert_eq!(FieldElement::zero(&spec).sign(), 0);
        // th - 1 > 0
        assert_eq!(fe(&spec, &[(-1, 1), (1, 1)]).sign(), 1);
        // 3 - 2 th > 0, cross-checked by 3^2 = 9 > 8 = (2 th)^2
        let a = fe(&spec, &[(3, 1), (-2, 1)]);
        assert_eq!(a.sign(), 1);
        assert!(rat_int(9) > rat_int(8));
        // th - 3/2 < 0
        assert_eq!(fe(&spec, &[(-3, 2), (1, 1)]).sign(), -1);
    }

    #[test]
    fn cmp_examples() {
        let spec = NumberFieldSpec::sqrt2();
        let th = FieldElement::generator(&spec);
        let one = FieldElement::one(&spec);
        let two = FieldElement::from_int(&spec, 2);
        assert_eq!(th.cmp_exact(&th).unwrap(), 0);
        assert_eq!(one.cmp_exact(&th).unwrap(), -1);
        let th_sq = th.checked_mul(&th).unwrap();
        assert_eq!(th_sq.cmp_exact(&two).unwrap(), 0);
    }

    #[test]
    fn zero_inversion_fails() {
        let spec = NumberFieldSpec::rational();
        assert!(matches!(
            FieldElement::zero(&spec).inv(),
            Err(Error::ZeroInversion)
        ));
    }

    #[test]
    fn mismatched_fields_fail() {
        let a = FieldElement::one(&NumberFieldSpec::rational());
        let b = FieldElement::one(&NumberFieldSpec::sqrt2());
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn reducible_poly_rejected() {
        // x^2 - 1 has the rational root 1.
        let r = NumberFieldSpec::new(
            vec![BigInt::from(-1), BigInt::zero(), BigInt::one()],
            rat(1, 2),
            rat(3, 2),
        );
        assert!(matches!(r, Err(Error::BadMinPoly(_))));
    }

    #[test]
    fn interval_with_two_roots_rejected() {
        // x^2 - 2 over [-2, 2] contains both roots.
        let r = NumberFieldSpec::new(
            vec![BigInt::from(-2), BigInt::zero(), BigInt::one()],
            rat_int(-2),
            rat_int(2),
        );
        assert!(matches!(r, Err(Error::BadInterval(_))));
    }

    #[test]
    fn degree_one_field_with_shifted_root() {
        // x - 5 presents Q with th = 5; the generator reduces to the
        // constant 5 and all arithmetic stays rational.
        let spec = NumberFieldSpec::new(
            vec![BigInt::from(-5), BigInt::one()],
            rat_int(4),
            rat_int(6),
        )
        .unwrap();
        let th = FieldElement::generator(&spec);
        assert_eq!(th, FieldElement::from_int(&spec, 5));
        assert_eq!(th.sign(), 1);
        assert_eq!(
            th.inv().unwrap(),
            FieldElement::from_rational(&spec, rat(1, 5))
        );
    }

    #[test]
    fn quartic_preset_contains_sqrt2() {
        // sqrt 2 = (th^3 - 9 th)/2 when th = sqrt 2 + sqrt 3.
        let spec = NumberFieldSpec::sqrt2_sqrt3();
        let s2 = fe(&spec, &[(0, 1), (-9, 2), (0, 1), (1, 2)]);
        let sq = s2.checked_mul(&s2).unwrap();
        assert_eq!(sq, FieldElement::from_int(&spec, 2));
        assert_eq!(s2.sign(), 1);
    }

    #[test]
    fn sign_agrees_with_refined_enclosure() {
        // Oracle: refine th to width < 10^-30 and evaluate the coordinate
        // polynomial over the tiny interval.
        let spec = NumberFieldSpec::sqrt2();
        let width = rat(1, 1_000_000_000_000_000_000) * rat(1, 1_000_000_000_000) * rat_int(1);
        let samples = [
            fe(&spec, &[(1, 1), (1, 1)]),
            fe(&spec, &[(-1, 1), (1, 1)]),
            fe(&spec, &[(3, 1), (-2, 1)]),
            fe(&spec, &[(0, 1), (-1, 3)]),
            fe(&spec, &[(10, 7), (-1, 1)]),
        ];
        for a in &samples {
            let mut steps = 8;
            let (lo, hi) = loop {
                let (lo, hi) = spec.refined_interval(steps);
                if &hi - &lo < width {
                    break (lo, hi);
                }
                steps *= 2;
            };
            let (vlo, vhi) = interval_eval(a.coords(), &lo, &hi);
            let oracle = if rational_sign(&vlo) > 0 {
                1
            } else if rational_sign(&vhi) < 0 {
                -1
            } else {
                panic!("enclosure did not separate the sample from zero");
            };
            assert_eq!(a.sign(), oracle, "sample {a}");
        }
    }

    #[test]
    fn display_roundtrip_shapes() {
        let spec = NumberFieldSpec::sqrt2();
        assert_eq!(fe(&spec, &[(1, 1), (2, 1)]).to_string(), "1+2*th");
        assert_eq!(fe(&spec, &[(-1, 2), (1, 1)]).to_string(), "-1/2+th");
        assert_eq!(FieldElement::zero(&spec).to_string(), "0");
        let quartic = NumberFieldSpec::sqrt2_sqrt3();
        assert_eq!(
            fe(&quartic, &[(0, 1), (-9, 2), (0, 1), (1, 2)]).to_string(),
            "-9/2*th+1/2*th^3"
        );
    }

    #[test]
    fn standalone_text_roundtrip() {
        let spec = NumberFieldSpec::sqrt2();
        let a = fe(&spec, &[(1, 1), (2, 1)]);
        let text = a.to_text_with_field();
        assert_eq!(text, "1+2*th @ field(x^2-2, [7/5, 3/2])");
        let (back, back_spec) = FieldElement::parse_with_field(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(back_spec, spec);
        // The quartic preset round-trips too.
        let quartic = NumberFieldSpec::sqrt2_sqrt3();
        let b = fe(&quartic, &[(0, 1), (-9, 2), (0, 1), (1, 2)]);
        let (back, _) = FieldElement::parse_with_field(&b.to_text_with_field()).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn json_roundtrip() {
        let spec = NumberFieldSpec::sqrt2();
        let a = fe(&spec, &[(1, 1), (2, 1)]);
        let j = a.to_json();
        assert_eq!(j["coords"], json!(["1", "2"]));
        assert_eq!(j["field"]["poly"], json!([-2, 0, 1]));
        let back = FieldElement::from_json(&j).unwrap();
        assert_eq!(back, a);
    }
}
