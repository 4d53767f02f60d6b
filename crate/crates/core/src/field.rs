//! Finite fields GF(p^k) by lookup tables, and dense polynomials over them.
//!
//! Field elements are coded as integers `0..q`: the base-`p` digits of a code
//! are the coefficients (low degree first) of a polynomial in the generator
//! `a`, reduced modulo the field's defining polynomial. For `k = 1` the code
//! is the residue itself.

use std::fmt;

use crate::arith::prime_power;

/// Fields larger than this are rejected; arithmetic is table driven.
pub const MAX_FIELD_ORDER: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrimePower(u64),
    TooLarge(u64),
    /// The supplied defining polynomial is not irreducible of degree `k`.
    ReducibleModulus {
        q: u64,
        modulus: String,
    },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrimePower(q) => write!(f, "GF({q}): {q} is not a prime power"),
            FieldError::TooLarge(q) => write!(f, "GF({q}): order exceeds {MAX_FIELD_ORDER}"),
            FieldError::ReducibleModulus { q, modulus } => {
                write!(
                    f,
                    "GF({q}): defining polynomial {modulus} is not irreducible of the right degree"
                )
            }
        }
    }
}

impl std::error::Error for FieldError {}

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic defining polynomial over GF(p), low degree first, length k+1.
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

/// Multiply two GF(p) polynomials (low first) and reduce by a monic modulus.
fn prime_poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let k = m.len() - 1;
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + p - (c * mi) % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl GaloisField {
    /// GF(q) with the least monic irreducible of degree `k` (by coefficient
    /// code, high degree first) as defining polynomial.
    pub fn new(q: u64) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let (p, k) = (p as u32, k);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..(p.pow(k)))
                .map(|low| {
                    let mut m = digits(low, p, k as usize);
                    m.push(1);
                    m
                })
                .find(|m| prime_poly_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        Ok(Self::with_modulus_unchecked(p, k, modulus))
    }

    /// GF(p^k) with an explicit monic defining polynomial over GF(p), given
    /// low degree first. Fails unless it is irreducible of degree `k`.
    pub fn with_modulus(q: u64, modulus: Vec<u32>) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let p = p as u32;
        let mut m: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        let shown = || PrimePoly(&m).to_string();
        if m.len() != k as usize + 1 || !prime_poly_irreducible(&m, p) {
            return Err(FieldError::ReducibleModulus { q, modulus: shown() });
        }
        // make monic
        let lead = m[k as usize];
        let inv = (1..p)
            .find(|x| x * lead % p == 1)
            .expect("nonzero residue mod prime is invertible");
        let m: Vec<u32> = m.iter().map(|c| c * inv % p).collect();
        Ok(Self::with_modulus_unchecked(p, k, m))
    }

    fn with_modulus_unchecked(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a, p, k as usize);
            for b in 0..q {
                let db = digits(b, p, k as usize);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p);
                mul[(a * q + b) as usize] = undigits(&prime_poly_mulmod(&da, &db, &modulus, p), p);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap()
                }
            })
            .collect();
        GaloisField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Defining polynomial over GF(p), low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// True when the defining polynomial is the default choice of [`GaloisField::new`].
    pub fn has_default_modulus(&self) -> bool {
        GaloisField::new(self.q as u64)
            .map(|f| f.modulus == self.modulus)
            .unwrap_or(false)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero element.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    /// Writes a field element; prime fields print residues, extension
    /// fields print the code in braces.
    pub fn fmt_elem(&self, a: u32) -> String {
        if self.k == 1 {
            a.to_string()
        } else {
            format!("{{{a}}}")
        }
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_default_modulus() {
            write!(f, "GF({})", self.q)
        } else {
            let m = PrimePoly(&self.modulus).to_string().replace('t', "a");
            write!(f, "GF({},{})", self.q, m)
        }
    }
}

/// Irreducibility over GF(p) by trial division with all monic polynomials of
/// degree at most half.
fn prime_poly_irreducible(m: &[u32], p: u32) -> bool {
    let f = GaloisField::with_modulus_unchecked(p, 1, vec![0, 1]);
    let poly = Poly::from_coeffs(m.to_vec());
    poly.degree().is_some_and(|d| d >= 1) && poly.is_irreducible(&f)
}

struct PrimePoly<'a>(&'a [u32]);

impl fmt::Display for PrimePoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gf = GaloisField::with_modulus_unchecked(2, 1, vec![0, 1]);
        // coefficients are printed as plain integers regardless of the field
        let poly = Poly::from_coeffs(self.0.to_vec());
        write!(f, "{}", poly.display_with(&gf, "t", &|c| c.to_string()))
    }
}

/// Dense polynomial over a [`GaloisField`], low degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly(Vec<u32>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    /// `t`.
    pub fn x() -> Self {
        Poly(vec![0, 1])
    }

    pub fn constant(c: u32) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: u32, degree: usize) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        Poly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Base-q code of the coefficient vector, low degree least significant.
    pub fn encode(&self, q: u32) -> u64 {
        self.0.iter().rev().fold(0u64, |acc, &c| acc * q as u64 + c as u64)
    }

    pub fn decode(mut code: u64, q: u32) -> Self {
        let mut v = Vec::new();
        while code > 0 {
            v.push((code % q as u64) as u32);
            code /= q as u64;
        }
        Poly(v)
    }

    pub fn add(&self, other: &Poly, f: &GaloisField) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &GaloisField) -> Poly {
        Poly(self.0.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly, f: &GaloisField) -> Poly {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, c: u32, f: &GaloisField) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &GaloisField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u32; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, e: u32, f: &GaloisField) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self, f))
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn divrem(&self, divisor: &Poly, f: &GaloisField) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.0.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - d] = c;
            for (j, &b) in divisor.0.iter().enumerate() {
                let idx = i - d + j;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Poly, f: &GaloisField) -> Poly {
        self.divrem(divisor, f).1
    }

    pub fn divides(&self, other: &Poly, f: &GaloisField) -> bool {
        other.rem(self, f).is_zero()
    }

    pub fn monic(&self, f: &GaloisField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.leading()), f)
    }

    /// All monic polynomials of exactly the given degree, in code order.
    pub fn monics_of_degree(d: usize, f: &GaloisField) -> impl Iterator<Item = Poly> + '_ {
        let q = f.order() as u64;
        let count = q.pow(d as u32);
        (0..count).map(move |low| {
            let mut v = Poly::decode(low, f.order()).0;
            v.resize(d, 0);
            v.push(1);
            Poly(v)
        })
    }

    /// Irreducibility by trial division; constants are not irreducible.
    pub fn is_irreducible(&self, f: &GaloisField) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        (1..=n / 2).all(|d| Poly::monics_of_degree(d, f).all(|g| !g.divides(self, f)))
    }

    /// Monic irreducible factors with multiplicity, in increasing code order.
    /// The leading coefficient is dropped.
    pub fn factor(&self, f: &GaloisField) -> Vec<(Poly, u32)> {
        let mut rest = self.monic(f);
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().is_some_and(|n| n >= 1) {
            if 2 * d > rest.degree().unwrap() {
                out.push((rest.clone(), 1));
                break;
            }
            for g in Poly::monics_of_degree(d, f) {
                let mut e = 0;
                while g.divides(&rest, f) {
                    rest = rest.divrem(&g, f).0;
                    e += 1;
                }
                if e > 0 {
                    out.push((g, e));
                }
            }
            d += 1;
        }
        out.sort();
        // merge a trailing factor equal to one found by trial division
        let mut merged: Vec<(Poly, u32)> = Vec::new();
        for (g, e) in out {
            match merged.last_mut() {
                Some((h, k)) if *h == g => *k += e,
                _ => merged.push((g, e)),
            }
        }
        merged
    }

    pub fn display_with<'a>(
        &'a self,
        _f: &'a GaloisField,
        var: &'a str,
        coeff: &'a dyn Fn(u32) -> String,
    ) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var, coeff }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    var: &'a str,
    coeff: &'a dyn Fn(u32) -> String,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.poly.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let cs = (self.coeff)(c);
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if c != 1 {
                        write!(f, "{cs}")?;
                    }
                    write!(f, "{}", self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl GaloisField {
    /// Polynomial in `t` with this field's coefficient notation.
    pub fn fmt_poly(&self, p: &Poly) -> String {
        let coeff = |c: u32| self.fmt_elem(c);
        p.display_with(self, "t", &coeff).to_string()
    }
}
