//! Concrete finite commutative rings.
//!
//! A [`FiniteRing`] is a product of base factors: residue rings `Z/n`,
//! polynomial quotients `GF(q)[t]/(f)`, and rings given by explicit Cayley
//! tables. Elements are coordinate vectors; each element also has a
//! canonical index in `0..size` (mixed radix, first factor most
//! significant), and zero always has index 0.
//!
//! Exhaustive operations (ideals, divisibility, lengths, decomposition) work
//! on full Cayley tables and refuse rings larger than the ring's size bound.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::arith::factorize;
use crate::field::{FieldError, GaloisField, Poly};
use crate::poset::FinitePoset;

/// Default carrier bound for exhaustive operations.
pub const DEFAULT_MAX_SIZE: usize = 512;
/// Cayley tables are never built above this size.
pub const HARD_MAX_SIZE: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("element {element} does not belong to {ring}")]
    Mismatch { element: String, ring: String },
    #[error("ring has {size} elements, above the exhaustive-search bound {limit}")]
    TooLarge { size: u64, limit: usize },
    #[error("{0} is not a principal ring")]
    NotPrincipal(String),
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("polynomial modulus must have degree >= 1")]
    ConstantModulus,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("quotient by a unit has a single element")]
    TrivialQuotient,
    #[error("invalid ring table: {0}")]
    InvalidTable(String),
    #[error("ring has no factors")]
    NoFactors,
    #[error("cannot parse element {text:?}: {reason}")]
    ElementSyntax { text: String, reason: String },
}

/// A finite commutative ring given by Cayley tables over `0..size`, with
/// zero at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFactor {
    name: String,
    names: Vec<String>,
    one: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl TableFactor {
    /// Validates the tables as a commutative ring with identity.
    ///
    /// Associativity and distributivity are checked on every triple for
    /// carriers up to 64 elements and on a fixed stride sample above that.
    pub fn new(name: impl Into<String>, names: Vec<String>, add: Vec<u32>, mul: Vec<u32>) -> Result<Self, RingError> {
        let n = names.len();
        let bad = |m: &str| Err(RingError::InvalidTable(m.to_string()));
        if n < 2 {
            return bad("carrier must have at least 2 elements");
        }
        if add.len() != n * n || mul.len() != n * n {
            return bad("table dimensions do not match the carrier");
        }
        if add.iter().chain(&mul).any(|&v| v as usize >= n) {
            return bad("table entry out of range");
        }
        let a = |i: usize, j: usize| add[i * n + j] as usize;
        let m = |i: usize, j: usize| mul[i * n + j] as usize;
        if (0..n).any(|i| a(0, i) != i) {
            return bad("index 0 is not the additive identity");
        }
        let Some(one) = (0..n).find(|&e| (0..n).all(|i| m(e, i) == i)) else {
            return bad("no multiplicative identity");
        };
        for i in 0..n {
            if !(0..n).any(|j| a(i, j) == 0) {
                return bad("missing additive inverse");
            }
            for j in 0..n {
                if a(i, j) != a(j, i) || m(i, j) != m(j, i) {
                    return bad("tables are not commutative");
                }
            }
        }
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if n <= 64 {
            Box::new((0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))))
        } else {
            Box::new((0..20_000usize).map(move |s| (s % n, (s * 7 + 3) % n, (s * 13 + 5) % n)))
        };
        for (i, j, k) in triples {
            if a(a(i, j), k) != a(i, a(j, k)) || m(m(i, j), k) != m(i, m(j, k)) {
                return bad("tables are not associative");
            }
            if m(i, a(j, k)) != a(m(i, j), m(i, k)) {
                return bad("multiplication does not distribute over addition");
            }
        }
        Ok(TableFactor {
            name: name.into(),
            names,
            one: one as u32,
            add,
            mul,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Residue { modulus: u64 },
    PolyQuotient { field: Arc<GaloisField>, modulus: Poly },
    Table(Arc<TableFactor>),
}

impl Factor {
    pub fn residue(modulus: u64) -> Result<Self, RingError> {
        if modulus < 2 {
            return Err(RingError::ModulusTooSmall(modulus));
        }
        Ok(Factor::Residue { modulus })
    }

    /// `GF(q)[t]/(f)`; `f` is made monic.
    pub fn poly_quotient(field: Arc<GaloisField>, modulus: Poly) -> Result<Self, RingError> {
        if modulus.degree().unwrap_or(0) < 1 {
            return Err(RingError::ConstantModulus);
        }
        let modulus = modulus.monic(&field);
        Ok(Factor::PolyQuotient { field, modulus })
    }

    pub fn size(&self) -> u64 {
        match self {
            Factor::Residue { modulus } => *modulus,
            Factor::PolyQuotient { field, modulus } => {
                (field.order() as u64).saturating_pow(modulus.degree().unwrap_or(0) as u32)
            }
            Factor::Table(t) => t.size() as u64,
        }
    }

    fn one(&self) -> u32 {
        match self {
            Factor::Residue { .. } | Factor::PolyQuotient { .. } => 1,
            Factor::Table(t) => t.one,
        }
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Factor::Residue { modulus } => ((a as u64 + b as u64) % modulus) as u32,
            Factor::PolyQuotient { field, .. } => {
                let q = field.order();
                let (pa, pb) = (Poly::decode(a as u64, q), Poly::decode(b as u64, q));
                pa.add(&pb, field).encode(q) as u32
            }
            Factor::Table(t) => t.add[a as usize * t.size() + b as usize],
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Factor::Residue { modulus } => ((a as u64 * b as u64) % modulus) as u32,
            Factor::PolyQuotient { field, modulus } => {
                let q = field.order();
                let (pa, pb) = (Poly::decode(a as u64, q), Poly::decode(b as u64, q));
                pa.mul(&pb, field).rem(modulus, field).encode(q) as u32
            }
            Factor::Table(t) => t.mul[a as usize * t.size() + b as usize],
        }
    }

    fn neg(&self, a: u32) -> u32 {
        match self {
            Factor::Residue { modulus } => ((modulus - a as u64) % modulus) as u32,
            Factor::PolyQuotient { field, .. } => {
                let q = field.order();
                Poly::decode(a as u64, q).neg(field).encode(q) as u32
            }
            Factor::Table(t) => {
                let n = t.size();
                (0..n as u32)
                    .find(|&j| t.add[a as usize * n + j as usize] == 0)
                    .expect("validated table")
            }
        }
    }

    fn fmt_elem(&self, a: u32) -> String {
        match self {
            Factor::Residue { .. } => a.to_string(),
            Factor::PolyQuotient { field, .. } => field.fmt_poly(&Poly::decode(a as u64, field.order())),
            Factor::Table(t) => t.names[a as usize].clone(),
        }
    }

    /// Parses a canonical or reducible element description.
    fn parse_elem(&self, text: &str) -> Result<u32, RingError> {
        let err = |reason: String| RingError::ElementSyntax {
            text: text.to_string(),
            reason,
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match self {
            Factor::Residue { modulus } => {
                let v: i128 = s.parse().map_err(|_| err("expected an integer".into()))?;
                Ok(v.rem_euclid(*modulus as i128) as u32)
            }
            Factor::PolyQuotient { field, modulus } => {
                let p = crate::syntax::parse_poly(&s, "t", field).map_err(|e| err(e.to_string()))?;
                Ok(p.rem(modulus, field).encode(field.order()) as u32)
            }
            Factor::Table(t) => {
                if let Some(i) = t.names.iter().position(|n| n.replace(' ', "") == s) {
                    return Ok(i as u32);
                }
                Err(err(format!("no element named {s} in {}", t.name)))
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Residue { modulus } => write!(f, "Z/{modulus}"),
            Factor::PolyQuotient { field, modulus } => write!(f, "{field}[t]/({})", field.fmt_poly(modulus)),
            Factor::Table(t) => write!(f, "{}", t.name),
        }
    }
}

/// An element as per-factor canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    coords: Vec<u32>,
}

impl RingElement {
    pub fn new(coords: Vec<u32>) -> Self {
        RingElement { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

/// Cayley tables over canonical indices.
#[derive(Debug)]
pub struct Tables {
    n: usize,
    one: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl Tables {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// The principal ideal `(a)` as a membership mask.
    pub fn principal_mask(&self, a: u32) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for q in 0..self.n as u32 {
            mask[self.mul(q, a) as usize] = true;
        }
        mask
    }

    pub fn is_unit(&self, a: u32) -> bool {
        (0..self.n as u32).any(|q| self.mul(q, a) == self.one)
    }

    /// `a | b`: some `q` has `q a = b`.
    pub fn divides(&self, a: u32, b: u32) -> bool {
        (0..self.n as u32).any(|q| self.mul(q, a) == b)
    }
}

/// An ideal as the sorted list of member indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: Vec<u32>,
}

impl Ideal {
    fn from_mask(mask: &[bool]) -> Self {
        Ideal {
            members: mask
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as u32)
                .collect(),
        }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: u32) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

#[derive(Debug)]
struct IdealData {
    /// Distinct principal ideals, in order of first generator.
    principal: Vec<Ideal>,
    /// Element index -> position in `principal`.
    generated: Vec<usize>,
    all: Vec<Ideal>,
    /// Longest chain from each principal ideal up to the whole ring.
    lengths: Option<Vec<u64>>,
}

#[derive(Debug, Clone)]
pub struct FiniteRing {
    factors: Vec<Factor>,
    size: u64,
    max_size: usize,
    tables: Arc<OnceLock<Tables>>,
    ideals: Arc<OnceLock<IdealData>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn new(factors: Vec<Factor>) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::NoFactors);
        }
        let mut size: u64 = 1;
        for f in &factors {
            let s = f.size();
            if s < 2 {
                return Err(RingError::ModulusTooSmall(s));
            }
            size = size
                .checked_mul(s)
                .filter(|&s| s <= u32::MAX as u64)
                .ok_or(RingError::TooLarge {
                    size: u64::MAX,
                    limit: HARD_MAX_SIZE,
                })?;
        }
        Ok(FiniteRing {
            factors,
            size,
            max_size: DEFAULT_MAX_SIZE,
            tables: Arc::new(OnceLock::new()),
            ideals: Arc::new(OnceLock::new()),
        })
    }

    pub fn residue(n: u64) -> Result<Self, RingError> {
        FiniteRing::new(vec![Factor::residue(n)?])
    }

    /// Sets the carrier bound for exhaustive operations (capped at
    /// [`HARD_MAX_SIZE`]).
    pub fn with_max_size(mut self, max_size: usize) -> Self {
        self.max_size = max_size.min(HARD_MAX_SIZE);
        self
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![0; self.factors.len()])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(self.factors.iter().map(Factor::one).collect())
    }

    fn check(&self, x: &RingElement) -> Result<(), RingError> {
        let ok = x.coords.len() == self.factors.len()
            && x.coords.iter().zip(&self.factors).all(|(&c, f)| (c as u64) < f.size());
        if ok {
            Ok(())
        } else {
            Err(RingError::Mismatch {
                element: format!("{:?}", x.coords),
                ring: self.to_string(),
            })
        }
    }

    fn zip_with(
        &self,
        x: &RingElement,
        y: &RingElement,
        op: impl Fn(&Factor, u32, u32) -> u32,
    ) -> Result<RingElement, RingError> {
        self.check(x)?;
        self.check(y)?;
        Ok(RingElement::new(
            self.factors
                .iter()
                .zip(x.coords.iter().zip(&y.coords))
                .map(|(f, (&a, &b))| op(f, a, b))
                .collect(),
        ))
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.zip_with(x, y, Factor::add)
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.zip_with(x, y, Factor::mul)
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.check(x)?;
        Ok(RingElement::new(
            self.factors.iter().zip(&x.coords).map(|(f, &a)| f.neg(a)).collect(),
        ))
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.add(x, &self.neg(y)?)
    }

    /// Canonical index of an element.
    pub fn index(&self, x: &RingElement) -> Result<u32, RingError> {
        self.check(x)?;
        Ok(self.index_unchecked(&x.coords))
    }

    fn index_unchecked(&self, coords: &[u32]) -> u32 {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&c, f)| acc * f.size() + c as u64) as u32
    }

    /// Element with the given canonical index.
    pub fn element(&self, index: u32) -> RingElement {
        let mut rest = index as u64;
        let mut coords = vec![0; self.factors.len()];
        for (slot, f) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = (rest % f.size()) as u32;
            rest /= f.size();
        }
        RingElement::new(coords)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size as u32).map(|i| self.element(i))
    }

    pub fn fmt_element(&self, x: &RingElement) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .zip(&x.coords)
            .map(|(f, &c)| f.fmt_elem(c))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(", "))
        }
    }

    pub fn fmt_index(&self, index: u32) -> String {
        self.fmt_element(&self.element(index))
    }

    /// Parses `c` for one factor or `(c1, c2, ...)` for a product.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let t = text.trim();
        let parts: Vec<&str> = if self.factors.len() == 1 {
            vec![t]
        } else {
            let inner =
                t.strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| RingError::ElementSyntax {
                        text: text.to_string(),
                        reason: format!("expected a {}-tuple in parentheses", self.factors.len()),
                    })?;
            inner.split(',').collect()
        };
        if parts.len() != self.factors.len() {
            return Err(RingError::ElementSyntax {
                text: text.to_string(),
                reason: format!("expected {} coordinates, got {}", self.factors.len(), parts.len()),
            });
        }
        let coords = self
            .factors
            .iter()
            .zip(parts)
            .map(|(f, p)| f.parse_elem(p))
            .collect::<Result<_, _>>()?;
        Ok(RingElement::new(coords))
    }

    fn require_exhaustive(&self) -> Result<(), RingError> {
        if self.size > self.max_size as u64 {
            Err(RingError::TooLarge {
                size: self.size,
                limit: self.max_size,
            })
        } else {
            Ok(())
        }
    }

    /// Cayley tables, built on first use.
    pub fn tables(&self) -> Result<&Tables, RingError> {
        self.require_exhaustive()?;
        Ok(self.tables.get_or_init(|| {
            let n = self.size as usize;
            let elems: Vec<RingElement> = self.elements().collect();
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for (i, x) in elems.iter().enumerate() {
                for (j, y) in elems.iter().enumerate().skip(i) {
                    let s = self.index_unchecked(&self.add(x, y).expect("own element").coords);
                    let p = self.index_unchecked(&self.mul(x, y).expect("own element").coords);
                    add[i * n + j] = s;
                    add[j * n + i] = s;
                    mul[i * n + j] = p;
                    mul[j * n + i] = p;
                }
            }
            let neg = elems
                .iter()
                .map(|x| self.index_unchecked(&self.neg(x).expect("own element").coords))
                .collect();
            Tables {
                n,
                one: self.index_unchecked(&self.one().coords),
                add,
                mul,
                neg,
            }
        }))
    }

    pub fn is_unit(&self, x: &RingElement) -> Result<bool, RingError> {
        let i = self.index(x)?;
        Ok(self.tables()?.is_unit(i))
    }

    /// `x | y`, decided by search over the carrier.
    pub fn divides(&self, x: &RingElement, y: &RingElement) -> Result<bool, RingError> {
        let (i, j) = (self.index(x)?, self.index(y)?);
        Ok(self.tables()?.divides(i, j))
    }

    pub fn principal_ideal(&self, x: &RingElement) -> Result<Ideal, RingError> {
        let i = self.index(x)?;
        Ok(Ideal::from_mask(&self.tables()?.principal_mask(i)))
    }

    fn ideal_data(&self) -> Result<&IdealData, RingError> {
        let t = self.tables()?;
        Ok(self.ideals.get_or_init(|| build_ideal_data(t)))
    }

    /// Every ideal, smallest first.
    pub fn all_ideals(&self) -> Result<Vec<Ideal>, RingError> {
        Ok(self.ideal_data()?.all.clone())
    }

    /// Distinct principal ideals.
    pub fn principal_ideals(&self) -> Result<Vec<Ideal>, RingError> {
        Ok(self.ideal_data()?.principal.clone())
    }

    pub fn is_principal(&self) -> Result<bool, RingError> {
        let d = self.ideal_data()?;
        Ok(d.all.len() == d.principal.len())
    }

    fn require_principal(&self) -> Result<&IdealData, RingError> {
        let d = self.ideal_data()?;
        if d.lengths.is_none() {
            return Err(RingError::NotPrincipal(self.to_string()));
        }
        Ok(d)
    }

    /// Length of the longest strictly increasing chain of ideals from `(x)`
    /// up to the whole ring.
    pub fn element_length(&self, x: &RingElement) -> Result<u64, RingError> {
        let i = self.index(x)?;
        self.element_length_index(i)
    }

    pub fn element_length_index(&self, i: u32) -> Result<u64, RingError> {
        let d = self.require_principal()?;
        Ok(d.lengths.as_ref().expect("principal")[d.generated[i as usize]])
    }

    /// Length of the ring as a module over itself.
    pub fn length(&self) -> Result<u64, RingError> {
        self.element_length_index(0)
    }

    /// `R/(b)` with projection and representative section.
    pub fn quotient(&self, b: &RingElement) -> Result<Quotient, RingError> {
        let bi = self.index(b)?;
        let t = self.tables()?;
        let n = t.size();
        if bi == 0 {
            let id: Vec<u32> = (0..n as u32).collect();
            return Ok(Quotient {
                ring: self.clone(),
                projection: id.clone(),
                section: id,
            });
        }
        if t.is_unit(bi) {
            return Err(RingError::TrivialQuotient);
        }
        let ideal = Ideal::from_mask(&t.principal_mask(bi));
        let (projection, section) = cosets(t, &ideal);
        let m = section.len();
        let mut add = vec![0; m * m];
        let mut mul = vec![0; m * m];
        for (i, &ri) in section.iter().enumerate() {
            for (j, &rj) in section.iter().enumerate() {
                add[i * m + j] = projection[t.add(ri, rj) as usize];
                mul[i * m + j] = projection[t.mul(ri, rj) as usize];
            }
        }
        let names = section.iter().map(|&r| format!("[{}]", self.fmt_index(r))).collect();
        let name = format!("({})/({})", self, self.fmt_index(bi));
        let factor = TableFactor::new(name, names, add, mul)?;
        let ring = FiniteRing::new(vec![Factor::Table(Arc::new(factor))])?.with_max_size(self.max_size);
        Ok(Quotient {
            ring,
            projection,
            section,
        })
    }

    /// Splits every factor into local factors.
    pub fn crt_decompose(&self) -> Result<CrtDecomposition, RingError> {
        self.require_principal()?;
        let mut locals: Vec<Factor> = Vec::new();
        let mut maps: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut origin = Vec::new();
        for (k, f) in self.factors.iter().enumerate() {
            let parts = split_factor(f)?;
            let mut factor_maps = Vec::new();
            for (local, map) in parts {
                locals.push(local);
                factor_maps.push(map);
                origin.push(k);
            }
            maps.push(factor_maps);
        }
        let local = FiniteRing::new(locals)?.with_max_size(self.max_size);
        let n = self.size as usize;
        let mut forward = vec![0u32; n];
        let mut backward = vec![u32::MAX; n];
        for i in 0..n as u32 {
            let x = self.element(i);
            let coords: Vec<u32> = x
                .coords
                .iter()
                .zip(&maps)
                .flat_map(|(&c, fm)| fm.iter().map(move |m| m[c as usize]))
                .collect();
            let j = local.index_unchecked(&coords);
            forward[i as usize] = j;
            backward[j as usize] = i;
        }
        debug_assert!(backward.iter().all(|&b| b != u32::MAX));
        Ok(CrtDecomposition {
            local,
            forward,
            backward,
            origin,
        })
    }

    /// Indices of the units.
    pub fn units(&self) -> Result<Vec<u32>, RingError> {
        let t = self.tables()?;
        Ok((0..t.size() as u32).filter(|&i| t.is_unit(i)).collect())
    }

    /// True when the nonunits form an ideal.
    pub fn is_local(&self) -> Result<bool, RingError> {
        let t = self.tables()?;
        let nonunits: Vec<u32> = (0..t.size() as u32).filter(|&i| !t.is_unit(i)).collect();
        let mask: Vec<bool> = (0..t.size() as u32).map(|i| !t.is_unit(i)).collect();
        Ok(nonunits
            .iter()
            .all(|&a| nonunits.iter().all(|&b| mask[t.add(a, b) as usize])))
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Labels each element with its coset; cosets are numbered by least member.
fn cosets(t: &Tables, ideal: &Ideal) -> (Vec<u32>, Vec<u32>) {
    let n = t.size();
    let mut label = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n as u32 {
        if label[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &i in ideal.members() {
            label[t.add(x, i) as usize] = id;
        }
    }
    (label, reps)
}

fn build_ideal_data(t: &Tables) -> IdealData {
    let n = t.size();
    let mut index: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut principal_masks: Vec<Vec<bool>> = Vec::new();
    let mut generated = Vec::with_capacity(n);
    for a in 0..n as u32 {
        let mask = t.principal_mask(a);
        let id = *index.entry(mask.clone()).or_insert_with(|| {
            principal_masks.push(mask);
            principal_masks.len() - 1
        });
        generated.push(id);
    }
    // close under sums with principal ideals
    let mut all: BTreeMap<Vec<bool>, ()> = principal_masks.iter().map(|m| (m.clone(), ())).collect();
    let mut queue: Vec<Vec<bool>> = principal_masks.clone();
    while let Some(ideal) = queue.pop() {
        for p in &principal_masks {
            if p.iter().zip(&ideal).all(|(&a, &b)| !a || b) {
                continue;
            }
            let mut sum = vec![false; n];
            let pm: Vec<u32> = (0..n as u32).filter(|&i| p[i as usize]).collect();
            for i in (0..n as u32).filter(|&i| ideal[i as usize]) {
                for &j in &pm {
                    sum[t.add(i, j) as usize] = true;
                }
            }
            if all.insert(sum.clone(), ()).is_none() {
                queue.push(sum);
            }
        }
    }
    let mut all: Vec<Ideal> = all.keys().map(|m| Ideal::from_mask(m)).collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let principal: Vec<Ideal> = principal_masks.iter().map(|m| Ideal::from_mask(m)).collect();
    let lengths = (all.len() == principal.len()).then(|| {
        // reverse inclusion: the whole ring is minimal
        let labels: Vec<usize> = (0..principal.len()).collect();
        let poset = FinitePoset::from_relation(labels, |&a, &b| {
            principal[a] != principal[b] && principal[b].is_subset(&principal[a])
        })
        .expect("strict inclusion is a strict order");
        poset.length_function().expect("nonempty").into_values()
    });
    IdealData {
        principal,
        generated,
        all,
        lengths,
    }
}

/// A quotient ring with its projection and a choice of representatives.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// Index in the parent ring -> index in the quotient.
    pub projection: Vec<u32>,
    /// Index in the quotient -> least representative in the parent ring.
    pub section: Vec<u32>,
}

/// A ring written as a product of local rings, with the isomorphism as
/// index maps.
#[derive(Debug, Clone)]
pub struct CrtDecomposition {
    pub local: FiniteRing,
    /// Index in the original ring -> index in `local`.
    pub forward: Vec<u32>,
    /// Index in `local` -> index in the original ring.
    pub backward: Vec<u32>,
    /// For each local factor, the original factor it came from.
    pub origin: Vec<usize>,
}

impl CrtDecomposition {
    pub fn factors(&self) -> &[Factor] {
        self.local.factors()
    }

    /// Length of each local factor.
    pub fn local_lengths(&self) -> Result<Vec<u64>, RingError> {
        self.local
            .factors()
            .iter()
            .map(|f| {
                FiniteRing::new(vec![f.clone()])?
                    .with_max_size(self.local.max_size())
                    .length()
            })
            .collect()
    }
}

/// Local pieces of one factor with coordinate maps from the factor's carrier.
fn split_factor(f: &Factor) -> Result<Vec<(Factor, Vec<u32>)>, RingError> {
    match f {
        Factor::Residue { modulus } => {
            let parts = factorize(*modulus);
            Ok(parts
                .into_iter()
                .map(|(p, k)| {
                    let pk = p.pow(k);
                    let map = (0..*modulus).map(|x| (x % pk) as u32).collect();
                    (Factor::Residue { modulus: pk }, map)
                })
                .collect())
        }
        Factor::PolyQuotient { field, modulus } => {
            let q = field.order();
            let size = f.size();
            Ok(modulus
                .factor(field)
                .into_iter()
                .map(|(g, e)| {
                    let ge = g.pow(e, field);
                    let map = (0..size)
                        .map(|x| Poly::decode(x, q).rem(&ge, field).encode(q) as u32)
                        .collect();
                    (
                        Factor::PolyQuotient {
                            field: field.clone(),
                            modulus: ge,
                        },
                        map,
                    )
                })
                .collect())
        }
        Factor::Table(t) => split_table(t),
    }
}

/// Decomposes a table ring along its primitive idempotents.
fn split_table(t: &Arc<TableFactor>) -> Result<Vec<(Factor, Vec<u32>)>, RingError> {
    let n = t.size();
    let m = |a: usize, b: usize| t.mul[a * n + b] as usize;
    let a = |x: usize, y: usize| t.add[x * n + y] as usize;
    let idempotents: Vec<usize> = (1..n).filter(|&e| m(e, e) == e).collect();
    let primitive: Vec<usize> = idempotents
        .iter()
        .copied()
        .filter(|&e| !idempotents.iter().any(|&f| f != e && m(f, e) == f))
        .collect();
    if primitive.len() == 1 {
        return Ok(vec![(Factor::Table(t.clone()), (0..n as u32).collect())]);
    }
    let mut out = Vec::new();
    for &e in &primitive {
        let mut carrier: Vec<usize> = (0..n).map(|x| m(e, x)).collect();
        carrier.sort_unstable();
        carrier.dedup();
        let pos = |x: usize| carrier.binary_search(&x).expect("closed under the component") as u32;
        let k = carrier.len();
        let mut add = vec![0; k * k];
        let mut mul = vec![0; k * k];
        for (i, &x) in carrier.iter().enumerate() {
            for (j, &y) in carrier.iter().enumerate() {
                add[i * k + j] = pos(a(x, y));
                mul[i * k + j] = pos(m(x, y));
            }
        }
        let names = carrier.iter().map(|&x| t.names[x].clone()).collect();
        let local = TableFactor::new(format!("{}*[{}]", t.name, t.names[e]), names, add, mul)?;
        let map = (0..n).map(|x| pos(m(e, x))).collect();
        out.push((Factor::Table(Arc::new(local)), map));
    }
    Ok(out)
}

/// `GF(p)[x,y]/(x,y)^2`: the local ring with basis `1, x, y` and all
/// products of `x`, `y` zero. Its maximal ideal needs two generators.
pub fn square_zero_plane(p: u32) -> Result<FiniteRing, RingError> {
    let field = GaloisField::new(p as u64)?;
    if field.degree() != 1 {
        return Err(RingError::Field(FieldError::NotPrimePower(p as u64)));
    }
    let n = (p * p * p) as usize;
    let split = |i: usize| {
        let i = i as u32;
        (i % p, (i / p) % p, i / (p * p))
    };
    let join = |(c, x, y): (u32, u32, u32)| c + x * p + y * p * p;
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for i in 0..n {
        let (c1, x1, y1) = split(i);
        for j in 0..n {
            let (c2, x2, y2) = split(j);
            add[i * n + j] = join(((c1 + c2) % p, (x1 + x2) % p, (y1 + y2) % p));
            mul[i * n + j] = join(((c1 * c2) % p, (c1 * x2 + c2 * x1) % p, (c1 * y2 + c2 * y1) % p));
        }
    }
    let names = (0..n)
        .map(|i| {
            let (c, x, y) = split(i);
            let mut terms = Vec::new();
            if c != 0 {
                terms.push(c.to_string());
            }
            for (coef, var) in [(x, "x"), (y, "y")] {
                match coef {
                    0 => {}
                    1 => terms.push(var.to_string()),
                    k => terms.push(format!("{k}{var}")),
                }
            }
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let t = TableFactor::new(format!("GF({p})[x,y]/(x,y)^2"), names, add, mul)?;
    FiniteRing::new(vec![Factor::Table(Arc::new(t))])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteRing {
        FiniteRing::residue(n).unwrap()
    }

    fn el(r: &FiniteRing, s: &str) -> RingElement {
        r.parse_element(s).unwrap()
    }

    fn gf2_quotient(coeffs: Vec<u32>) -> FiniteRing {
        let f = Arc::new(GaloisField::new(2).unwrap());
        FiniteRing::new(vec![Factor::poly_quotient(f, Poly::from_coeffs(coeffs)).unwrap()]).unwrap()
    }

    #[test]
    fn residue_arithmetic() {
        let r = z(12);
        assert_eq!(r.add(&el(&r, "7"), &el(&r, "8")).unwrap(), el(&r, "3"));
        assert_eq!(r.neg(&el(&r, "5")).unwrap(), el(&r, "7"));
    }

    #[test]
    fn polynomial_quotient_arithmetic() {
        let r = gf2_quotient(vec![1, 1, 1]);
        let t = el(&r, "t");
        assert_eq!(r.mul(&t, &t).unwrap(), el(&r, "t+1"));
        assert_eq!(r.fmt_element(&r.mul(&t, &t).unwrap()), "t+1");
        assert_eq!(r.size(), 4);
    }

    #[test]
    fn product_arithmetic() {
        let r = FiniteRing::new(vec![Factor::residue(4).unwrap(), Factor::residue(9).unwrap()]).unwrap();
        assert_eq!(r.mul(&el(&r, "(3,2)"), &el(&r, "(3,5)")).unwrap(), el(&r, "(1,1)"));
        assert_eq!(r.fmt_element(&el(&r, "(3, 2)")), "(3, 2)");
    }

    #[test]
    fn mismatched_elements_rejected() {
        let r = z(12);
        let s = FiniteRing::new(vec![Factor::residue(4).unwrap(), Factor::residue(9).unwrap()]).unwrap();
        let x = el(&s, "(1,1)");
        assert!(matches!(r.add(&x, &el(&r, "1")), Err(RingError::Mismatch { .. })));
        assert!(matches!(
            r.mul(&RingElement::new(vec![12]), &el(&r, "1")),
            Err(RingError::Mismatch { .. })
        ));
    }

    #[test]
    fn index_round_trip_and_zero_at_zero() {
        let r = FiniteRing::new(vec![Factor::residue(4).unwrap(), Factor::residue(3).unwrap()]).unwrap();
        assert_eq!(r.index(&r.zero()).unwrap(), 0);
        for i in 0..r.size() as u32 {
            assert_eq!(r.index(&r.element(i)).unwrap(), i);
        }
    }

    #[test]
    fn units_and_divisibility() {
        let r = z(12);
        assert!(r.is_unit(&el(&r, "5")).unwrap());
        assert!(!r.is_unit(&el(&r, "4")).unwrap());
        assert!(r.divides(&el(&r, "2"), &el(&r, "6")).unwrap());
        let r4 = z(4);
        assert!(!r4.divides(&el(&r4, "2"), &el(&r4, "1")).unwrap());
    }

    #[test]
    fn ideals_of_z12() {
        let r = z(12);
        assert_eq!(r.principal_ideal(&el(&r, "4")).unwrap().members(), &[0, 4, 8]);
        assert_eq!(r.all_ideals().unwrap().len(), 6);
        assert!(r.is_principal().unwrap());
    }

    #[test]
    fn square_zero_plane_is_not_principal() {
        let r = square_zero_plane(2).unwrap();
        assert_eq!(r.size(), 8);
        assert!(!r.is_principal().unwrap());
        // maximal ideal (x, y) is not generated by any single element
        let m: Vec<u32> = r
            .all_ideals()
            .unwrap()
            .into_iter()
            .find(|i| i.len() == 4)
            .unwrap()
            .members()
            .to_vec();
        for g in 0..8u32 {
            assert_ne!(r.principal_ideal(&r.element(g)).unwrap().members(), m.as_slice());
        }
        assert!(matches!(r.element_length(&r.zero()), Err(RingError::NotPrincipal(_))));
        assert!(matches!(r.crt_decompose(), Err(RingError::NotPrincipal(_))));
        assert!(r.is_local().unwrap());
    }

    #[test]
    fn size_bound_enforced() {
        let r = z(1000);
        assert!(matches!(
            r.all_ideals(),
            Err(RingError::TooLarge { size: 1000, limit: 512 })
        ));
        assert!(r.clone().with_max_size(1000).is_principal().unwrap());
    }

    #[test]
    fn quotients() {
        let q = z(8).quotient(&el(&z(8), "2")).unwrap();
        assert_eq!(q.ring.size(), 2);
        let q = z(12).quotient(&el(&z(12), "4")).unwrap();
        assert_eq!(q.ring.size(), 4);
        assert_eq!(q.section, vec![0, 1, 2, 3]);
        let r = FiniteRing::new(vec![Factor::residue(2).unwrap(), Factor::residue(3).unwrap()]).unwrap();
        let q = r.quotient(&el(&r, "(0,1)")).unwrap();
        assert_eq!(q.ring.size(), 2);
        assert!(matches!(
            z(12).quotient(&el(&z(12), "5")),
            Err(RingError::TrivialQuotient)
        ));
        assert_eq!(z(12).quotient(&z(12).zero()).unwrap().ring, z(12));
    }

    #[test]
    fn element_lengths_z12() {
        let r = z(12);
        let len = |s| r.element_length(&el(&r, s)).unwrap();
        assert_eq!(len("2"), 1);
        assert_eq!(len("4"), 2);
        assert_eq!(len("0"), 3);
        assert_eq!(len("5"), 0);
        assert_eq!(len("6"), 2);
    }

    #[test]
    fn element_lengths_prime_powers() {
        for (p, k) in [(2u64, 5u32), (3, 4), (5, 3), (7, 2)] {
            let r = z(p.pow(k));
            for a in 0..=k {
                let x = RingElement::new(vec![(p.pow(a) % p.pow(k)) as u32]);
                assert_eq!(r.element_length(&x).unwrap(), a as u64);
            }
        }
    }

    #[test]
    fn crt_examples() {
        let d = z(12).crt_decompose().unwrap();
        assert_eq!(d.local.to_string(), "Z/4 x Z/3");
        assert_eq!(d.local_lengths().unwrap(), vec![2, 1]);
        let d = gf2_quotient(vec![0, 1, 1]).crt_decompose().unwrap();
        assert_eq!(d.local.to_string(), "GF(2)[t]/(t) x GF(2)[t]/(t+1)");
        assert_eq!(d.local.size(), 4);
        let d = z(9).crt_decompose().unwrap();
        assert_eq!(d.local.to_string(), "Z/9");
    }

    #[test]
    fn table_ring_splits_along_idempotents() {
        // Z/6 presented by tables, via the quotient of Z/12 by 6
        let q = z(12).quotient(&el(&z(12), "6")).unwrap();
        let d = q.ring.crt_decompose().unwrap();
        let mut sizes: Vec<u64> = d.local.factors().iter().map(Factor::size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn invalid_tables_rejected() {
        let names = vec!["0".to_string(), "1".to_string()];
        // multiplication without identity
        let err = TableFactor::new("bad", names.clone(), vec![0, 1, 1, 0], vec![0, 0, 0, 0]).unwrap_err();
        assert!(matches!(err, RingError::InvalidTable(_)));
        assert!(TableFactor::new("gf2", names, vec![0, 1, 1, 0], vec![0, 0, 0, 1]).is_ok());
    }
}
