//! Text syntax for ordinals, polynomials and ring specifications.
//!
//! Ordinal expressions:
//!
//! ```text
//! expr    := term (('+' | '#') term)*
//! term    := power (('*' | '.') power)*
//! power   := 'w' ['^' power] | natural | '(' expr ')' | '(' '-' expr ')' '+' term
//! ```
//!
//! `+` is the ordinal sum, `#` the natural sum, `*` the classical product
//! (`w^2*3` is three copies of `w^2`), `.` the juxtaposition product
//! (`2.w = w + w`), and `(-a)+b` left subtraction. `ω` is accepted for `w`.
//!
//! Ring specifications are factors joined by ` x ` (or `×`):
//! `Z/n`, `GF(q)[t]/(f)`, `GF(q,g)[t]/(f)` with an explicit field polynomial
//! `g` in `a`, `GF(p)[x,y]/(x,y)^2`, and the symbolic domains `Z` and
//! `GF(q)[t]`.

use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldError, GaloisField, Poly};
use crate::models::{PidFactor, RingSpec, SpecError};
use crate::ordinal::{Ordinal, OrdinalError};
use crate::ring::{square_zero_plane, Factor, FiniteRing, RingError};

/// Default bound on nested exponents and parentheses.
pub const DEFAULT_MAX_DEPTH: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("expression nesting exceeds depth {0}")]
    TooDeep(usize),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

struct OrdinalParser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    depth: usize,
    max_depth: usize,
    src: &'a str,
}

impl OrdinalParser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|(_, c)| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map(|(p, _)| *p).unwrap_or(self.src.len())
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected '{c}'")))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > self.max_depth {
            Err(ParseError::TooDeep(self.max_depth))
        } else {
            Ok(())
        }
    }

    fn expr(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('#') {
                acc = acc.natural_sum(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.std_mul(&self.power()?);
            } else if self.eat('.') {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Ordinal, ParseError> {
        let start = self.pos();
        match self.peek() {
            Some('w') | Some('ω') => {
                self.at += 1;
                if self.eat('^') {
                    self.enter()?;
                    let e = self.power()?;
                    self.depth -= 1;
                    Ok(Ordinal::omega_pow(e))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let mut n: u64 = 0;
                while let Some(d) = self.chars.get(self.at).and_then(|(_, c)| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| syntax(start, "natural number too large"))?;
                    self.at += 1;
                }
                if self.peek() == Some('^') {
                    return Err(syntax(self.pos(), "only w may be raised to a power"));
                }
                Ok(Ordinal::from(n))
            }
            Some('(') => {
                self.at += 1;
                self.enter()?;
                let out = if self.eat('-') {
                    let a = self.expr()?;
                    self.expect(')')?;
                    self.expect('+')?;
                    let b = self.term()?;
                    a.left_subtract(&b)?
                } else {
                    let x = self.expr()?;
                    self.expect(')')?;
                    x
                };
                self.depth -= 1;
                Ok(out)
            }
            Some(c) => Err(syntax(start, format!("unexpected '{c}'"))),
            None => Err(syntax(start, "unexpected end of input")),
        }
    }
}

/// Parses an ordinal expression with the default depth bound.
pub fn parse_ordinal(src: &str) -> Result<Ordinal, ParseError> {
    parse_ordinal_with_depth(src, DEFAULT_MAX_DEPTH)
}

pub fn parse_ordinal_with_depth(src: &str, max_depth: usize) -> Result<Ordinal, ParseError> {
    let mut p = OrdinalParser {
        chars: src.char_indices().collect(),
        at: 0,
        depth: 0,
        max_depth,
        src,
    };
    if p.peek().is_none() {
        return Err(syntax(0, "empty expression"));
    }
    let value = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos(), "trailing input"));
    }
    Ok(value)
}

/// Parses a polynomial in `var` over `field`. Integer coefficients are
/// reduced into the prime subfield; `{c}` gives a raw field element code.
/// Whitespace must already be removed or is ignored.
pub fn parse_poly(src: &str, var: &str, field: &GaloisField) -> Result<Poly, ParseError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut acc = Poly::zero();
    while i < bytes.len() {
        let start = i;
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(syntax(i, "expected '+' or '-'"));
        }
        let mut coeff: Option<u32> = None;
        if i < bytes.len() && bytes[i] == b'{' {
            let close = s[i..].find('}').ok_or_else(|| syntax(i, "unclosed '{'"))? + i;
            let code: u32 = s[i + 1..close]
                .parse()
                .map_err(|_| syntax(i, "bad field element code"))?;
            if code >= field.order() {
                return Err(syntax(i, format!("field element code {code} out of range")));
            }
            coeff = Some(code);
            i = close + 1;
        } else {
            let digits_end = s[i..].find(|c: char| !c.is_ascii_digit()).map_or(s.len(), |k| k + i);
            if digits_end > i {
                let n: i64 = s[i..digits_end]
                    .parse()
                    .map_err(|_| syntax(i, "coefficient too large"))?;
                coeff = Some(field.from_int(n));
                i = digits_end;
            }
        }
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut degree = 0usize;
        if s[i..].starts_with(var) {
            i += var.len();
            degree = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let end = s[i..].find(|c: char| !c.is_ascii_digit()).map_or(s.len(), |k| k + i);
                degree = s[i..end].parse().map_err(|_| syntax(i, "expected an exponent"))?;
                i = end;
            }
        } else if coeff.is_none() {
            return Err(syntax(start, format!("expected a coefficient or {var}")));
        }
        let mut c = coeff.unwrap_or(1);
        if negative {
            c = field.neg(c);
        }
        acc = acc.add(&Poly::monomial(c, degree), field);
    }
    Ok(acc)
}

/// Result of parsing a ring specification.
#[derive(Debug, Clone)]
pub enum ParsedRing {
    Finite(FiniteRing),
    Symbolic(RingSpec),
}

enum ParsedFactor {
    Finite(Factor),
    Pid(PidFactor),
}

fn parse_field(inner: &str, offset: usize) -> Result<GaloisField, ParseError> {
    let (q_text, modulus) = match inner.split_once(',') {
        Some((q, m)) => (q, Some(m)),
        None => (inner, None),
    };
    let q: u64 = q_text
        .parse()
        .map_err(|_| syntax(offset, format!("expected a field order, got {q_text:?}")))?;
    match modulus {
        None => Ok(GaloisField::new(q)?),
        Some(m) => {
            let (p, _) = crate::arith::prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
            let prime = GaloisField::new(p)?;
            let g = parse_poly(m, "a", &prime)?;
            Ok(GaloisField::with_modulus(q, g.coeffs().to_vec())?)
        }
    }
}

fn parse_factor(src: &str, offset: usize) -> Result<ParsedFactor, ParseError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "Z" || s == "ℤ" {
        return Ok(ParsedFactor::Pid(PidFactor::Integers));
    }
    if let Some(n) = s.strip_prefix("Z/") {
        let n: u64 = n
            .parse()
            .map_err(|_| syntax(offset, format!("expected a modulus after Z/, got {n:?}")))?;
        return Ok(ParsedFactor::Finite(Factor::residue(n)?));
    }
    if let Some(rest) = s.strip_prefix("GF(") {
        let close = rest.find(')').ok_or_else(|| syntax(offset, "unclosed GF("))?;
        let inner = &rest[..close];
        let tail = &rest[close + 1..];
        if tail == "[x,y]/(x,y)^2" {
            let p: u32 = inner
                .parse()
                .map_err(|_| syntax(offset, "expected a prime in GF(p)[x,y]"))?;
            if !crate::arith::is_prime(p as u64) {
                return Err(syntax(offset, format!("GF({p})[x,y]/(x,y)^2 needs a prime field")));
            }
            let ring = square_zero_plane(p)?;
            return Ok(ParsedFactor::Finite(ring.factors()[0].clone()));
        }
        let field = parse_field(inner, offset)?;
        if tail.is_empty() {
            // the field itself, as GF(q)[t]/(t)
            return Ok(ParsedFactor::Finite(Factor::poly_quotient(Arc::new(field), Poly::x())?));
        }
        let Some(after) = tail.strip_prefix("[t]") else {
            return Err(syntax(offset, format!("expected [t] after GF({inner})")));
        };
        if after.is_empty() {
            if !field.has_default_modulus() {
                return Err(syntax(
                    offset,
                    "symbolic polynomial rings use the default field presentation",
                ));
            }
            return Ok(ParsedFactor::Pid(PidFactor::Polynomials {
                q: field.order() as u64,
            }));
        }
        let poly = after
            .strip_prefix("/(")
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| syntax(offset, format!("expected /(f) after [t], got {after:?}")))?;
        let f = parse_poly(poly, "t", &field)?;
        return Ok(ParsedFactor::Finite(Factor::poly_quotient(Arc::new(field), f)?));
    }
    Err(syntax(offset, format!("unknown ring factor {s:?}")))
}

/// Splits on ` x ` / `×` separators, keeping byte offsets.
fn split_factors(src: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut k = 0;
    while k < bytes.len() {
        let (pos, c) = bytes[k];
        let spaced_x = c == 'x'
            && k > 0
            && bytes[k - 1].1.is_whitespace()
            && bytes.get(k + 1).is_some_and(|(_, n)| n.is_whitespace());
        if spaced_x || c == '×' {
            out.push((start, &src[start..pos]));
            start = pos + c.len_utf8();
        }
        k += 1;
    }
    out.push((start, &src[start..]));
    out
}

/// Parses a ring specification. Finite products give a [`FiniteRing`]; any
/// symbolic domain factor gives a [`RingSpec`] whose Artinian part records
/// the local lengths of the finite factors.
pub fn parse_ring_spec(src: &str) -> Result<ParsedRing, ParseError> {
    parse_ring_spec_with_limit(src, crate::ring::DEFAULT_MAX_SIZE)
}

pub fn parse_ring_spec_with_limit(src: &str, max_size: usize) -> Result<ParsedRing, ParseError> {
    if src.trim().is_empty() {
        return Err(syntax(0, "empty ring specification"));
    }
    let mut finite = Vec::new();
    let mut pid = Vec::new();
    for (offset, part) in split_factors(src) {
        if part.trim().is_empty() {
            return Err(syntax(offset, "empty factor"));
        }
        match parse_factor(part, offset)? {
            ParsedFactor::Finite(f) => finite.push(f),
            ParsedFactor::Pid(p) => pid.push(p),
        }
    }
    if pid.is_empty() {
        return Ok(ParsedRing::Finite(FiniteRing::new(finite)?.with_max_size(max_size)));
    }
    let lengths = if finite.is_empty() {
        Vec::new()
    } else {
        FiniteRing::new(finite)?
            .with_max_size(max_size)
            .crt_decompose()?
            .local_lengths()?
    };
    Ok(ParsedRing::Symbolic(RingSpec::new(pid, lengths)?))
}

/// Parses a specification that must describe a finite ring.
pub fn parse_finite_ring(src: &str, max_size: usize) -> Result<FiniteRing, ParseError> {
    match parse_ring_spec_with_limit(src, max_size)? {
        ParsedRing::Finite(r) => Ok(r),
        ParsedRing::Symbolic(_) => Err(syntax(0, format!("{src:?} is not a finite ring"))),
    }
}
