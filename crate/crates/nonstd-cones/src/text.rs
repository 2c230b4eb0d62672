//! Lexer and recursive-descent parsers for the concrete text formats: field
//! elements, field specs, series, points, index vectors, and terms.
//!
//! Grammar for terms, loosest binding first:
//!
//! ```text
//! term   := join
//! join   := meet ("\/" meet)*
//! meet   := sum ("/\" sum)*
//! sum    := signed (("+" | "-") signed)*
//! signed := "-" signed | prod
//! prod   := [scalar "*"] atom
//! atom   := var | "0" | "|" term "|" | "(" term ")"
//! var    := "x" digits
//! scalar := rational | field element (parenthesized when a sum)
//! ```
//!
//! Meets and joins are right-folded into binary nodes.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::{FieldElement, NumberFieldSpec, Rational};
use crate::series::EpsSeries;
use crate::term::{Dialect, Term};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Var(usize),
    Th,
    Eps,
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Backslash,
    Caret,
    LParen,
    RParen,
    Pipe,
    LBracket,
    RBracket,
    Comma,
    At,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut toks = vec![];
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'\\' => Tok::Backslash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'|' => Tok::Pipe,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'@' => Tok::At,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().map_err(|e| Error::Syntax {
                    pos: start,
                    msg: format!("bad integer: {e}"),
                })?;
                toks.push((Tok::Int(n), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &input[start..i];
                let tok = if let Some(rest) = word.strip_prefix('x') {
                    if !rest.is_empty() && rest.bytes().all(|c| c.is_ascii_digit()) {
                        Tok::Var(rest.parse().map_err(|e| Error::Syntax {
                            pos: start,
                            msg: format!("bad variable index: {e}"),
                        })?)
                    } else {
                        Tok::Ident(word.to_string())
                    }
                } else {
                    match word {
                        "th" => Tok::Th,
                        "e" => Tok::Eps,
                        _ => Tok::Ident(word.to_string()),
                    }
                };
                toks.push((tok, start));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character {:?}", b as char),
                })
            }
        };
        toks.push((tok, i));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self> {
        Ok(Self {
            toks: lex(input)?,
            pos: 0,
            end: input.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expect_end(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    // -- shared literals ---------------------------------------------------

    /// Unsigned integer.
    fn parse_uint(&mut self) -> Result<BigInt> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("expected an integer"))
            }
        }
    }

    /// Unsigned rational: `int ["/" int]`. Does not consume a `/` that
    /// starts the meet operator `/\`.
    fn parse_urational(&mut self) -> Result<Rational> {
        let n = self.parse_uint()?;
        if self.peek() == Some(&Tok::Slash) && matches!(self.peek2(), Some(Tok::Int(_))) {
            self.bump();
            let d = self.parse_uint()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    /// Signed rational, for series exponents.
    fn parse_srational(&mut self) -> Result<Rational> {
        if self.eat(&Tok::Minus) {
            Ok(-self.parse_urational()?)
        } else {
            self.parse_urational()
        }
    }

    /// `th` or `th^k`: the power of the field generator.
    fn parse_th_power(&mut self, spec: &Arc<NumberFieldSpec>) -> Result<FieldElement> {
        self.expect(&Tok::Th, "th")?;
        let k = if self.eat(&Tok::Caret) {
            let k = self.parse_uint()?;
            usize::try_from(&k).map_err(|_| self.err("exponent too large"))?
        } else {
            1
        };
        let mut coords = vec![Rational::zero(); k + 1];
        coords[k] = Rational::one();
        Ok(FieldElement::new(Arc::clone(spec), coords))
    }

    /// One field-element monomial: `rational`, `rational*th^k`, or `th^k`.
    fn parse_fe_monomial(&mut self, spec: &Arc<NumberFieldSpec>) -> Result<FieldElement> {
        if self.peek() == Some(&Tok::Th) {
            return self.parse_th_power(spec);
        }
        let r = self.parse_urational()?;
        if self.peek() == Some(&Tok::Star) && self.peek2() == Some(&Tok::Th) {
            self.bump();
            let th = self.parse_th_power(spec)?;
            Ok(th.scale(&r))
        } else {
            Ok(FieldElement::from_rational(spec, r))
        }
    }

    /// Signed sum of field-element monomials.
    fn parse_fe_expr(&mut self, spec: &Arc<NumberFieldSpec>) -> Result<FieldElement> {
        let mut acc = FieldElement::zero(spec);
        let mut negate = self.eat(&Tok::Minus);
        loop {
            let m = self.parse_fe_monomial(spec)?;
            let m = if negate { m.neg() } else { m };
            acc = acc.checked_add(&m)?;
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    // -- series ------------------------------------------------------------

    /// One series monomial: `coeff`, `coeff*e^q`, or `e^q`, where `coeff`
    /// is a field-element monomial or a parenthesized field expression.
    fn parse_series_monomial(
        &mut self,
        spec: &Arc<NumberFieldSpec>,
    ) -> Result<(Rational, FieldElement)> {
        let coeff = if self.eat(&Tok::LParen) {
            let c = self.parse_fe_expr(spec)?;
            self.expect(&Tok::RParen, "')'")?;
            c
        } else if self.peek() == Some(&Tok::Eps) {
            FieldElement::one(spec)
        } else {
            self.parse_fe_monomial(spec)?
        };
        if self.peek() == Some(&Tok::Eps) {
            self.bump();
            let q = if self.eat(&Tok::Caret) {
                self.parse_srational()?
            } else {
                Rational::one()
            };
            return Ok((q, coeff));
        }
        if self.eat(&Tok::Star) {
            self.expect(&Tok::Eps, "e")?;
            let q = if self.eat(&Tok::Caret) {
                self.parse_srational()?
            } else {
                Rational::one()
            };
            Ok((q, coeff))
        } else {
            Ok((Rational::zero(), coeff))
        }
    }

    fn parse_series_expr(&mut self, spec: &Arc<NumberFieldSpec>) -> Result<EpsSeries> {
        let mut terms = vec![];
        let mut negate = self.eat(&Tok::Minus);
        loop {
            let (q, c) = self.parse_series_monomial(spec)?;
            let c = if negate { c.neg() } else { c };
            terms.push((q, c));
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                return EpsSeries::new(spec, terms);
            }
        }
    }

    // -- integer polynomials in x (for field specs) -------------------------

    fn parse_poly_monomial(&mut self) -> Result<(usize, BigInt)> {
        let is_x = |t: Option<&Tok>| matches!(t, Some(Tok::Ident(s)) if s == "x");
        let coeff = if is_x(self.peek()) {
            BigInt::one()
        } else {
            let c = self.parse_uint()?;
            if self.peek() == Some(&Tok::Star) && is_x(self.peek2()) {
                self.bump();
                c
            } else {
                return Ok((0, c));
            }
        };
        self.bump(); // the x
        let k = if self.eat(&Tok::Caret) {
            let k = self.parse_uint()?;
            usize::try_from(&k).map_err(|_| self.err("exponent too large"))?
        } else {
            1
        };
        Ok((k, coeff))
    }

    fn parse_int_poly(&mut self) -> Result<Vec<BigInt>> {
        let mut coeffs: Vec<BigInt> = vec![];
        let mut negate = self.eat(&Tok::Minus);
        loop {
            let (k, c) = self.parse_poly_monomial()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += if negate { -c } else { c };
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(coeffs);
            }
        }
    }

    /// `field(<poly>, [<lo>, <hi>])`
    fn parse_field_spec(&mut self) -> Result<Arc<NumberFieldSpec>> {
        match self.bump() {
            Some(Tok::Ident(s)) if s == "field" => {}
            _ => {
                self.pos = self.pos.saturating_sub(1);
                return Err(self.err("expected 'field(...)'"));
            }
        }
        self.expect(&Tok::LParen, "'('")?;
        let poly = self.parse_int_poly()?;
        self.expect(&Tok::Comma, "','")?;
        self.expect(&Tok::LBracket, "'['")?;
        let lo = self.parse_signed_rational_literal()?;
        self.expect(&Tok::Comma, "','")?;
        let hi = self.parse_signed_rational_literal()?;
        self.expect(&Tok::RBracket, "']'")?;
        self.expect(&Tok::RParen, "')'")?;
        NumberFieldSpec::new(poly, lo, hi)
    }

    fn parse_signed_rational_literal(&mut self) -> Result<Rational> {
        if self.eat(&Tok::Minus) {
            Ok(-self.parse_urational()?)
        } else {
            self.parse_urational()
        }
    }

    // -- terms ---------------------------------------------------------------

    fn parse_join(&mut self, ctx: &TermCtx) -> Result<Term> {
        let mut items = vec![self.parse_meet(ctx)?];
        while self.peek() == Some(&Tok::Backslash) && self.peek2() == Some(&Tok::Slash) {
            self.bump();
            self.bump();
            items.push(self.parse_meet(ctx)?);
        }
        Term::join_all(items)
    }

    fn parse_meet(&mut self, ctx: &TermCtx) -> Result<Term> {
        let mut items = vec![self.parse_sum(ctx)?];
        while self.peek() == Some(&Tok::Slash) && self.peek2() == Some(&Tok::Backslash) {
            self.bump();
            self.bump();
            items.push(self.parse_sum(ctx)?);
        }
        Term::meet_all(items)
    }

    fn parse_sum(&mut self, ctx: &TermCtx) -> Result<Term> {
        let mut parts = vec![self.parse_signed(ctx)?];
        loop {
            if self.eat(&Tok::Plus) {
                parts.push(self.parse_signed(ctx)?);
            } else if self.eat(&Tok::Minus) {
                parts.push(self.parse_signed(ctx)?.neg());
            } else {
                break;
            }
        }
        Term::sum(parts)
    }

    fn parse_signed(&mut self, ctx: &TermCtx) -> Result<Term> {
        if self.eat(&Tok::Minus) {
            Ok(self.parse_signed(ctx)?.neg())
        } else {
            self.parse_prod(ctx)
        }
    }

    fn parse_prod(&mut self, ctx: &TermCtx) -> Result<Term> {
        if let Some(scalar) = self.try_scalar(ctx)? {
            let atom = self.parse_atom(ctx)?;
            return match scalar {
                Scalar::Integer(k) => Ok(Term::int_scale(k, atom)),
                Scalar::Rational(r) => {
                    if ctx.dialect == Dialect::LGroup && !ctx.clearing {
                        Err(Error::DialectViolation(format!(
                            "rational scalar {r} in lattice-group dialect; declare a common \
                             denominator to clear it"
                        )))
                    } else {
                        Ok(Term::field_scale(
                            FieldElement::from_rational(&ctx.spec, r),
                            atom,
                        ))
                    }
                }
                Scalar::Field(c) => {
                    if ctx.dialect == Dialect::LGroup {
                        Err(Error::DialectViolation(
                            "field scalar in lattice-group dialect".into(),
                        ))
                    } else {
                        Ok(Term::field_scale(c, atom))
                    }
                }
            };
        }
        self.parse_atom(ctx)
    }

    /// Attempts `scalar "*"`; rewinds and returns `None` when the input is
    /// not a scalar-times prefix.
    fn try_scalar(&mut self, ctx: &TermCtx) -> Result<Option<Scalar>> {
        let save = self.pos;
        match self.peek() {
            Some(Tok::LParen) => {
                self.bump();
                let fe = match self.parse_fe_expr(&ctx.spec) {
                    Ok(fe) => fe,
                    Err(_) => {
                        self.pos = save;
                        return Ok(None);
                    }
                };
                if self.eat(&Tok::RParen) && self.eat(&Tok::Star) {
                    Ok(Some(Scalar::Field(fe)))
                } else {
                    self.pos = save;
                    Ok(None)
                }
            }
            Some(Tok::Int(_)) => {
                let r = self.parse_urational()?;
                if !self.eat(&Tok::Star) {
                    self.pos = save;
                    return Ok(None);
                }
                if self.peek() == Some(&Tok::Th) {
                    let th = self.parse_th_power(&ctx.spec)?;
                    if !self.eat(&Tok::Star) {
                        self.pos = save;
                        return Ok(None);
                    }
                    return Ok(Some(Scalar::Field(th.scale(&r))));
                }
                if r.is_integer() {
                    Ok(Some(Scalar::Integer(r.to_integer())))
                } else {
                    Ok(Some(Scalar::Rational(r)))
                }
            }
            Some(Tok::Th) => {
                let th = match self.parse_th_power(&ctx.spec) {
                    Ok(th) => th,
                    Err(_) => {
                        self.pos = save;
                        return Ok(None);
                    }
                };
                if self.eat(&Tok::Star) {
                    Ok(Some(Scalar::Field(th)))
                } else {
                    self.pos = save;
                    Ok(None)
                }
            }
            _ => Ok(None),
        }
    }

    fn parse_atom(&mut self, ctx: &TermCtx) -> Result<Term> {
        match self.peek().cloned() {
            Some(Tok::Var(i)) => {
                self.bump();
                Term::var(ctx.arity, i)
            }
            Some(Tok::Int(n)) if n.is_zero() => {
                self.bump();
                Ok(Term::zero(ctx.arity))
            }
            Some(Tok::Pipe) => {
                self.bump();
                let inner = self.parse_join(ctx)?;
                self.expect(&Tok::Pipe, "closing '|'")?;
                Ok(Term::abs(inner))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.parse_join(ctx)?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err("expected a variable, 0, '|', or '('")),
        }
    }
}

enum Scalar {
    Integer(BigInt),
    Rational(Rational),
    Field(FieldElement),
}

struct TermCtx {
    arity: usize,
    dialect: Dialect,
    spec: Arc<NumberFieldSpec>,
    clearing: bool,
}

// ---------------------------------------------------------------------------
// Entry points.

pub(crate) fn parse_term(
    input: &str,
    arity: usize,
    dialect: Dialect,
    spec: &Arc<NumberFieldSpec>,
    clear: Option<&BigInt>,
) -> Result<Term> {
    if arity == 0 {
        return Err(Error::Invalid("terms need at least one variable".into()));
    }
    let ctx = TermCtx {
        arity,
        dialect,
        spec: Arc::clone(spec),
        clearing: clear.is_some(),
    };
    let mut p = Parser::new(input)?;
    let t = p.parse_join(&ctx)?;
    p.expect_end()?;
    match clear {
        None => Ok(t),
        Some(d) => {
            let cleared = t.scaled_by_int(d);
            if cleared.is_lgroup_valid() {
                Ok(cleared)
            } else {
                Err(Error::DialectViolation(format!(
                    "denominator {d} does not clear every scalar to an integer"
                )))
            }
        }
    }
}

pub(crate) fn parse_field_element(
    input: &str,
    spec: &Arc<NumberFieldSpec>,
) -> Result<FieldElement> {
    let mut p = Parser::new(input)?;
    let fe = p.parse_fe_expr(spec)?;
    p.expect_end()?;
    Ok(fe)
}

/// `<element> @ field(<poly>, [lo, hi])`, or a bare field spec lookup via
/// `parse_field_spec`.
pub(crate) fn parse_element_with_field(
    input: &str,
) -> Result<(FieldElement, Arc<NumberFieldSpec>)> {
    let (lhs, rhs) = input
        .split_once('@')
        .ok_or_else(|| Error::Invalid("expected '<element> @ field(...)'".into()))?;
    let spec = parse_field_spec(rhs.trim())?;
    let fe = parse_field_element(lhs.trim(), &spec)?;
    Ok((fe, spec))
}

pub(crate) fn parse_field_spec(input: &str) -> Result<Arc<NumberFieldSpec>> {
    let mut p = Parser::new(input)?;
    let spec = p.parse_field_spec()?;
    p.expect_end()?;
    Ok(spec)
}

pub(crate) fn parse_series(input: &str, spec: &Arc<NumberFieldSpec>) -> Result<EpsSeries> {
    let mut p = Parser::new(input)?;
    if p.at_end() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty series".into(),
        });
    }
    let s = p.parse_series_expr(spec)?;
    p.expect_end()?;
    Ok(s)
}

/// `(s1, ..., sn)`: a point with series coordinates.
pub(crate) fn parse_series_point(
    input: &str,
    arity: usize,
    spec: &Arc<NumberFieldSpec>,
) -> Result<Vec<EpsSeries>> {
    let mut p = Parser::new(input)?;
    p.expect(&Tok::LParen, "'('")?;
    let mut coords = vec![p.parse_series_expr(spec)?];
    while p.eat(&Tok::Comma) {
        coords.push(p.parse_series_expr(spec)?);
    }
    p.expect(&Tok::RParen, "')'")?;
    p.expect_end()?;
    if coords.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: coords.len(),
        });
    }
    Ok(coords)
}

/// `(c1, ..., cn)`: a point with field-element coordinates.
pub(crate) fn parse_real_point(
    input: &str,
    arity: usize,
    spec: &Arc<NumberFieldSpec>,
) -> Result<Vec<FieldElement>> {
    let mut p = Parser::new(input)?;
    p.expect(&Tok::LParen, "'('")?;
    let mut coords = vec![p.parse_fe_expr(spec)?];
    while p.eat(&Tok::Comma) {
        coords.push(p.parse_fe_expr(spec)?);
    }
    p.expect(&Tok::RParen, "')'")?;
    p.expect_end()?;
    if coords.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: coords.len(),
        });
    }
    Ok(coords)
}

/// `[(a, b, ...)], [(c, d, ...)], ...`: a list of direction vectors.
pub(crate) fn parse_index_vectors(
    input: &str,
    arity: usize,
    spec: &Arc<NumberFieldSpec>,
) -> Result<Vec<Vec<FieldElement>>> {
    let mut p = Parser::new(input)?;
    let mut vectors = vec![];
    loop {
        p.expect(&Tok::LBracket, "'['")?;
        p.expect(&Tok::LParen, "'('")?;
        let mut coords = vec![p.parse_fe_expr(spec)?];
        while p.eat(&Tok::Comma) {
            coords.push(p.parse_fe_expr(spec)?);
        }
        p.expect(&Tok::RParen, "')'")?;
        p.expect(&Tok::RBracket, "']'")?;
        if coords.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: coords.len(),
            });
        }
        vectors.push(coords);
        if !p.eat(&Tok::Comma) {
            break;
        }
    }
    p.expect_end()?;
    Ok(vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    #[test]
    fn field_element_texts() {
        let spec = NumberFieldSpec::sqrt2();
        let fe = parse_field_element("1+2*th", &spec).unwrap();
        assert_eq!(fe.coords(), &[rat_int(1), rat_int(2)]);
        let fe = parse_field_element("-1/2+th", &spec).unwrap();
        assert_eq!(fe.coords(), &[rat(-1, 2), rat_int(1)]);
        let fe = parse_field_element("3", &spec).unwrap();
        assert_eq!(fe.coords(), &[rat_int(3), rat_int(0)]);
        // th^2 reduces to 2 in Q(sqrt2).
        let fe = parse_field_element("th^2", &spec).unwrap();
        assert_eq!(fe.coords(), &[rat_int(2), rat_int(0)]);
    }

    #[test]
    fn element_with_field_suffix() {
        let (fe, spec) = parse_element_with_field("1+2*th @ field(x^2-2, [7/5, 3/2])").unwrap();
        assert_eq!(spec, NumberFieldSpec::sqrt2());
        assert_eq!(fe.coords(), &[rat_int(1), rat_int(2)]);
    }

    #[test]
    fn quartic_field_spec_text() {
        let spec = parse_field_spec("field(x^4-10*x^2+1, [3, 13/4])").unwrap();
        assert_eq!(spec, NumberFieldSpec::sqrt2_sqrt3());
    }

    #[test]
    fn series_texts() {
        let spec = NumberFieldSpec::sqrt2();
        let s = parse_series("3 + 5*e + (1+th)*e^2 - e^-1", &spec).unwrap();
        assert_eq!(s.terms().len(), 4);
        assert_eq!(s.to_string(), "-e^-1 + 3 + 5*e + (1+th)*e^2");
        let back = parse_series(&s.to_string(), &spec).unwrap();
        assert_eq!(back, s);

        let q = NumberFieldSpec::rational();
        assert!(parse_series("0", &q).unwrap().is_zero());
        assert_eq!(
            parse_series("e^1/2", &q).unwrap().leading().unwrap().0,
            &rat(1, 2)
        );
        assert_eq!(parse_series("-e", &q).unwrap().sign(), -1);
    }

    #[test]
    fn points_and_indexes() {
        let spec = NumberFieldSpec::rational();
        let p = parse_series_point("(1, e)", 2, &spec).unwrap();
        assert_eq!(p[0], EpsSeries::constant(FieldElement::one(&spec)));
        assert_eq!(p[1], EpsSeries::eps(&spec));

        let vs = parse_index_vectors("[(1,0)],[(0,1)]", 2, &spec).unwrap();
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0][0], FieldElement::one(&spec));
        assert!(vs[0][1].is_zero());

        assert!(parse_series_point("(1, e, 0)", 2, &spec).is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let spec = NumberFieldSpec::rational();
        let err = parse_term("x0 + ", 2, Dialect::LGroup, &spec, None).unwrap_err();
        match err {
            Error::Syntax { pos, .. } => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        let err = parse_term("x0 $ x1", 2, Dialect::LGroup, &spec, None).unwrap_err();
        match err {
            Error::Syntax { pos, .. } => assert_eq!(pos, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }
}
