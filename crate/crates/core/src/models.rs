//! Bounded models of infinite principal ideal domains, and symbolic order
//! types of ring specifications.
//!
//! The integers and `GF(q)[t]` are explored through finite windows
//! (`|n| <= W`, `deg P <= D`): the level-by-level construction of the least
//! Euclidean function is run inside the window, and the window is enlarged
//! until the values on a reporting range stop changing. Agreement between
//! two consecutive windows is reported as a stabilization certificate; it is
//! evidence, not a proof.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{big_omega, is_prime, valuation};
use crate::field::{GaloisField, Poly};
use crate::ordinal::Ordinal;
use crate::ring::{FiniteRing, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("ring specification has no factors")]
    Empty,
    #[error("Artinian local lengths must be at least 1")]
    ZeroLength,
    #[error("the zero ordinal is not the order type of a nonzero ring")]
    ZeroOrdinal,
    #[error("{0} is not below w^2 and cannot be realized by a small ring")]
    NotRealizable(Ordinal),
    #[error("GF({0})[t]: field order must be a prime power")]
    BadField(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("prime set must be nonempty and contain only primes: {0:?}")]
    BadPrimeSet(Vec<u64>),
    #[error("{0} is not in the localization: its denominator is divisible by a chosen prime")]
    NotInLocalization(String),
    #[error("the value at 0 is not a natural number")]
    ZeroElement,
    #[error("window values did not stabilize after {growths} enlargements (last window {window})")]
    NoStabilization { growths: u32, window: u64 },
    #[error("window bound must be at least 2")]
    WindowTooSmall,
    #[error("bottom function took a non-finite value on a nonzero element")]
    InfiniteValue,
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// A principal ideal domain factor with order type `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PidFactor {
    Integers,
    Polynomials { q: u64 },
}

impl fmt::Display for PidFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PidFactor::Integers => write!(f, "Z"),
            PidFactor::Polynomials { q } => write!(f, "GF({q})[t]"),
        }
    }
}

impl PidFactor {
    /// Order type of the domain.
    pub fn order_type(&self) -> Ordinal {
        Ordinal::omega()
    }
}

/// A product of domains and an Artinian principal ring, the latter recorded
/// by the lengths of its local factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pid_factors: Vec<PidFactor>,
    artinian_lengths: Vec<u64>,
}

impl RingSpec {
    pub fn new(pid_factors: Vec<PidFactor>, artinian_lengths: Vec<u64>) -> Result<Self, SpecError> {
        if pid_factors.is_empty() && artinian_lengths.is_empty() {
            return Err(SpecError::Empty);
        }
        if artinian_lengths.contains(&0) {
            return Err(SpecError::ZeroLength);
        }
        for f in &pid_factors {
            if let PidFactor::Polynomials { q } = f {
                if crate::arith::prime_power(*q).is_none() {
                    return Err(SpecError::BadField(*q));
                }
            }
        }
        Ok(RingSpec {
            pid_factors,
            artinian_lengths,
        })
    }

    pub fn pid_factors(&self) -> &[PidFactor] {
        &self.pid_factors
    }

    pub fn pid_count(&self) -> usize {
        self.pid_factors.len()
    }

    pub fn artinian_lengths(&self) -> &[u64] {
        &self.artinian_lengths
    }

    /// Length of the Artinian part.
    pub fn artinian_length(&self) -> u64 {
        self.artinian_lengths.iter().sum()
    }

    /// A concrete Artinian part: `Z/2^n` for each local length `n`.
    pub fn artinian_ring(&self) -> Result<Option<FiniteRing>, RingError> {
        if self.artinian_lengths.is_empty() {
            return Ok(None);
        }
        let factors = self
            .artinian_lengths
            .iter()
            .map(|&n| {
                let m = u32::try_from(n)
                    .ok()
                    .and_then(|n| 2u64.checked_pow(n))
                    .unwrap_or(u64::MAX);
                crate::ring::Factor::residue(m)
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiniteRing::new(factors).map(Some)
    }
}

fn local_block(n: u64) -> String {
    if n <= 62 {
        format!("Z/{}", 1u64 << n)
    } else {
        format!("GF(2)[t]/(t^{n})")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pid_factors
            .iter()
            .map(|p| p.to_string())
            .chain(self.artinian_lengths.iter().map(|&n| local_block(n)))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `w * r + l(A)`: the order type of `r` domains of type `w` times an
/// Artinian principal ring of length `l(A)`.
pub fn order_type_of_spec(spec: &RingSpec) -> Ordinal {
    let r = spec.pid_count() as u64;
    let pid_part = Ordinal::sum(
        spec.pid_factors
            .iter()
            .map(|_| Ordinal::omega())
            .collect::<Vec<_>>()
            .iter(),
    );
    debug_assert!(r == 0 || pid_part.is_limit());
    debug_assert!(pid_part >= Ordinal::term(Ordinal::one(), r));
    pid_part.add(&Ordinal::from(spec.artinian_length()))
}

/// Lower and upper bounds for the order type of a product: the iterated
/// ordinal sum and the iterated natural sum.
pub fn product_bounds(es: &[Ordinal]) -> (Ordinal, Ordinal) {
    (Ordinal::sum(es), Ordinal::natural_sum_all(es))
}

/// A spec whose order type is `a`, for `0 < a < w^2`: `r` copies of
/// `GF(2)[t]` and one local Artinian block of length `n` when `a = w*r + n`.
pub fn realize_ordinal(a: &Ordinal) -> Result<RingSpec, SpecError> {
    if a.is_zero() {
        return Err(SpecError::ZeroOrdinal);
    }
    let mut r = 0;
    let mut n = 0;
    for t in a.terms() {
        match t.exponent().as_finite() {
            Some(1) => r = t.coefficient(),
            Some(0) => n = t.coefficient(),
            _ => return Err(SpecError::NotRealizable(a.clone())),
        }
    }
    let pid = vec![PidFactor::Polynomials { q: 2 }; r as usize];
    let lengths = if n > 0 { vec![n] } else { Vec::new() };
    RingSpec::new(pid, lengths)
}

/// Which domain a window explores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WindowedDomain {
    Integers,
    Polynomials { q: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowConfig {
    /// Report values for `|n| <= range` or `deg P <= range`.
    pub range: u64,
    /// First window: largest `|n|`, or largest degree.
    pub start: u64,
    /// Enlargements attempted before giving up.
    pub max_growths: u32,
}

impl WindowConfig {
    pub fn integers(range: u64) -> Self {
        WindowConfig {
            range,
            start: 64,
            max_growths: 8,
        }
    }

    /// First window: the least degree `D` with `q^D >= 256` (degree 8 over
    /// GF(2)).
    pub fn polynomials(q: u64, range: u64) -> Self {
        let mut start = 1;
        while q.saturating_pow(start as u32) < 256 {
            start += 1;
        }
        WindowConfig {
            range,
            start,
            max_growths: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowEntry {
    pub element: String,
    /// `|n|` for integers, degree for polynomials.
    pub size: u64,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationCertificate {
    /// Every window tried, in order.
    pub windows: Vec<u64>,
    /// The two consecutive windows whose reporting tables agreed.
    pub agreeing: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowedBottom {
    pub domain: String,
    pub range: u64,
    pub entries: Vec<WindowEntry>,
    pub certificate: StabilizationCertificate,
}

impl WindowedBottom {
    pub fn value_of(&self, element: &str) -> Option<u64> {
        self.entries.iter().find(|e| e.element == element).map(|e| e.value)
    }
}

/// Level-by-level least Euclidean function inside a finite window.
///
/// `elements` lists the window; `residue(c, b)` is a canonical residue code
/// of `c` modulo `b` in `0..classes(b)`. Element 0 of `elements` must be the
/// zero element. Returns `None` for elements never reached.
fn window_levels<E>(elements: &[E], classes: impl Fn(&E) -> u64, residue: impl Fn(&E, &E) -> u64) -> Vec<Option<u64>> {
    let mut values: Vec<Option<u64>> = vec![None; elements.len()];
    let mut covered: Vec<usize> = vec![0];
    let mut level = 0u64;
    loop {
        let mut fresh = Vec::new();
        for (i, b) in elements.iter().enumerate().skip(1) {
            if values[i].is_some() {
                continue;
            }
            let m = classes(b);
            if (covered.len() as u64) < m {
                continue;
            }
            let mut seen = vec![false; m as usize];
            let mut count = 0;
            for &c in &covered {
                let r = residue(&elements[c], b) as usize;
                if !seen[r] {
                    seen[r] = true;
                    count += 1;
                    if count == m {
                        break;
                    }
                }
            }
            if count == m {
                fresh.push(i);
            }
        }
        if fresh.is_empty() {
            return values;
        }
        for &i in &fresh {
            values[i] = Some(level);
        }
        covered.extend(fresh);
        level += 1;
    }
}

fn integer_window(window: u64, range: u64) -> Result<Vec<WindowEntry>, ModelError> {
    let w = window as i64;
    let mut elements: Vec<i64> = vec![0];
    for k in 1..=w {
        elements.push(k);
        elements.push(-k);
    }
    let values = window_levels(&elements, |b| b.unsigned_abs(), |c, b| c.rem_euclid(b.abs()) as u64);
    let mut out = Vec::new();
    for (n, v) in elements.iter().zip(values) {
        if *n != 0 && n.unsigned_abs() <= range {
            let value = v.ok_or(ModelError::InfiniteValue)?;
            out.push(WindowEntry {
                element: n.to_string(),
                size: n.unsigned_abs(),
                value,
            });
        }
    }
    out.sort_by_key(|e| (e.size, e.element.starts_with('-')));
    Ok(out)
}

fn polynomial_window(field: &GaloisField, degree: u64, range: u64) -> Result<Vec<WindowEntry>, ModelError> {
    let q = field.order() as u64;
    let count = q.pow(degree as u32 + 1);
    let elements: Vec<Poly> = (0..count).map(|c| Poly::decode(c, field.order())).collect();
    let values = window_levels(
        &elements,
        |b| q.pow(b.degree().unwrap_or(0) as u32),
        |c, b| c.rem(b, field).encode(field.order()),
    );
    let mut out = Vec::new();
    for (p, v) in elements.iter().zip(values) {
        if let Some(d) = p.degree() {
            if d as u64 <= range {
                out.push(WindowEntry {
                    element: field.fmt_poly(p),
                    size: d as u64,
                    value: v.ok_or(ModelError::InfiniteValue)?,
                });
            }
        }
    }
    Ok(out)
}

/// Least Euclidean function of the integers or `GF(q)[t]` on a reporting
/// range, computed in growing windows until two consecutive windows agree.
///
/// Integer windows double; polynomial windows grow by one degree (the
/// carrier grows by a factor of `q`).
pub fn windowed_bottom(domain: &WindowedDomain, config: &WindowConfig) -> Result<WindowedBottom, ModelError> {
    let first = config.start.max(config.range);
    if first < 2 && matches!(domain, WindowedDomain::Integers) {
        return Err(ModelError::WindowTooSmall);
    }
    let field = match domain {
        WindowedDomain::Polynomials { q } => Some(GaloisField::new(*q)?),
        WindowedDomain::Integers => None,
    };
    let run = |w: u64| match &field {
        None => integer_window(w, config.range),
        Some(f) => polynomial_window(f, w, config.range),
    };
    let grow = |w: u64| match domain {
        WindowedDomain::Integers => w * 2,
        WindowedDomain::Polynomials { .. } => w + 1,
    };
    let mut windows = vec![first];
    let mut previous = run(first);
    for _ in 0..config.max_growths {
        let next = grow(*windows.last().unwrap());
        windows.push(next);
        let current = run(next);
        if let (Ok(a), Ok(b)) = (&previous, &current) {
            if a == b {
                let n = windows.len();
                return Ok(WindowedBottom {
                    domain: match domain {
                        WindowedDomain::Integers => "Z".to_string(),
                        WindowedDomain::Polynomials { q } => format!("GF({q})[t]"),
                    },
                    range: config.range,
                    entries: b.clone(),
                    certificate: StabilizationCertificate {
                        agreeing: (windows[n - 2], windows[n - 1]),
                        windows,
                    },
                });
            }
        }
        previous = current;
    }
    Err(ModelError::NoStabilization {
        growths: config.max_growths,
        window: *windows.last().unwrap(),
    })
}

/// Number of prime factors of a nonzero integer, with multiplicity.
pub fn integer_length(n: i64) -> u32 {
    big_omega(n.unsigned_abs())
}

/// Number of irreducible factors of a nonzero polynomial, with multiplicity.
pub fn polynomial_length(p: &Poly, field: &GaloisField) -> u32 {
    p.factor(field).iter().map(|(_, e)| e).sum()
}

/// A reduced fraction in the localization of the integers at a finite set
/// of primes (denominators avoid those primes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i128,
    den: i128,
}

impl Fraction {
    fn reduced(num: i128, den: i128) -> Fraction {
        let g = num.gcd(&den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Fraction {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn add(self, o: Fraction) -> Fraction {
        Fraction::reduced(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    fn sub(self, o: Fraction) -> Fraction {
        Fraction::reduced(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    fn mul(self, o: Fraction) -> Fraction {
        Fraction::reduced(self.num * o.num, self.den * o.den)
    }

    fn div(self, o: Fraction) -> Fraction {
        Fraction::reduced(self.num * o.den, self.den * o.num)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The localization of the integers in which every prime outside `S` is
/// inverted; its nonassociate primes are exactly the primes of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localization {
    primes: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionWitness {
    pub quotient: Fraction,
    pub remainder: Fraction,
}

impl Localization {
    pub fn new(mut primes: Vec<u64>) -> Result<Self, ModelError> {
        primes.sort_unstable();
        primes.dedup();
        if primes.is_empty() || !primes.iter().all(|&p| is_prime(p)) {
            return Err(ModelError::BadPrimeSet(primes));
        }
        Ok(Localization { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn element(&self, num: i128, den: i128) -> Result<Fraction, ModelError> {
        if den == 0 {
            return Err(ModelError::NotInLocalization(format!("{num}/0")));
        }
        let x = Fraction::reduced(num, den);
        if self.primes.iter().any(|&p| x.den % p as i128 == 0) {
            return Err(ModelError::NotInLocalization(x.to_string()));
        }
        Ok(x)
    }

    /// Parses `n` or `n/d`.
    pub fn parse(&self, text: &str) -> Result<Fraction, ModelError> {
        let bad = || ModelError::NotInLocalization(text.to_string());
        let (n, d) = match text.trim().split_once('/') {
            Some((n, d)) => (
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => (text.trim().parse().map_err(|_| bad())?, 1),
        };
        self.element(n, d)
    }

    fn contains(&self, x: &Fraction) -> bool {
        self.primes.iter().all(|&p| x.den % p as i128 != 0)
    }

    /// Sum of the exponents of the chosen primes in the numerator.
    pub fn value(&self, x: &Fraction) -> Result<u64, ModelError> {
        if x.is_zero() {
            return Err(ModelError::ZeroElement);
        }
        let n = x.num.unsigned_abs() as u64;
        Ok(self.primes.iter().map(|&p| valuation(n, p) as u64).sum())
    }

    pub fn is_unit(&self, x: &Fraction) -> bool {
        self.value(x) == Ok(0)
    }

    /// The `S`-part of the numerator: `b` is a unit times this integer.
    fn s_part(&self, x: &Fraction) -> i128 {
        let n = x.num.unsigned_abs() as u64;
        self.primes.iter().map(|&p| (p as i128).pow(valuation(n, p))).product()
    }

    /// Division with remainder: `a = q b + r` with `r = 0` or
    /// `value(r) < value(b)`. `b` must be nonzero.
    pub fn divide(&self, a: &Fraction, b: &Fraction) -> FractionWitness {
        let modulus = self.s_part(b);
        let exact = FractionWitness {
            quotient: a.div(*b),
            remainder: Fraction { num: 0, den: 1 },
        };
        if modulus == 1 || a.is_zero() {
            return exact;
        }
        // a is congruent to the integer c modulo b
        let den_inv = mod_inverse(a.den.rem_euclid(modulus), modulus);
        let c = (a.num.rem_euclid(modulus) * den_inv).rem_euclid(modulus);
        if c == 0 {
            return exact;
        }
        let b_num = b.num.unsigned_abs() as u64;
        let mut r = c;
        loop {
            let ok = self.primes.iter().all(|&p| {
                let e = valuation(b_num, p);
                let pe = (p as i128).pow(e);
                if c % pe != 0 {
                    true
                } else {
                    // exactly e factors of p
                    (r / pe) % p as i128 != 0
                }
            });
            if ok {
                break;
            }
            r += modulus;
        }
        let remainder = Fraction { num: r, den: 1 };
        FractionWitness {
            quotient: a.sub(remainder).div(*b),
            remainder,
        }
    }

    /// Independent check of a witness.
    pub fn verify(&self, a: &Fraction, b: &Fraction, w: &FractionWitness) -> bool {
        let reconstructs = w.quotient.mul(*b).add(w.remainder) == *a;
        let small = w.remainder.is_zero() || self.value(&w.remainder).ok() < self.value(b).ok();
        reconstructs && self.contains(&w.quotient) && self.contains(&w.remainder) && small
    }

    fn sample(&self, rng: &mut ChaCha8Rng, allow_zero: bool) -> Fraction {
        if allow_zero && rng.gen_ratio(1, 20) {
            return Fraction { num: 0, den: 1 };
        }
        let coprime = |rng: &mut ChaCha8Rng, hi: i128| loop {
            let k = rng.gen_range(1..=hi);
            if self.primes.iter().all(|&p| k % p as i128 != 0) {
                return k;
            }
        };
        let mut num = coprime(rng, 60);
        for &p in &self.primes {
            num *= (p as i128).pow(rng.gen_range(0..=4));
        }
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let den = coprime(rng, 40);
        Fraction::reduced(num, den)
    }
}

fn mod_inverse(a: i128, m: i128) -> i128 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalizationReport {
    pub primes: Vec<u64>,
    pub seed: u64,
    pub samples: u64,
    pub passed: u64,
    /// Pairs where `b` divides `a` (including `b` a unit or `a = 0`).
    pub exact: u64,
    pub failures: Vec<String>,
}

impl LocalizationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.samples
    }
}

/// Randomized check that the exponent sum is a Euclidean function on the
/// localization: every sampled pair gets an independently verified witness.
pub fn check_localization_euclidean(loc: &Localization, samples: u64, seed: u64) -> LocalizationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LocalizationReport {
        primes: loc.primes.clone(),
        seed,
        samples,
        passed: 0,
        exact: 0,
        failures: Vec::new(),
    };
    for _ in 0..samples {
        let a = loc.sample(&mut rng, true);
        let b = loc.sample(&mut rng, false);
        let w = loc.divide(&a, &b);
        if loc.verify(&a, &b, &w) {
            report.passed += 1;
            if w.remainder.is_zero() {
                report.exact += 1;
            }
        } else if report.failures.len() < 10 {
            report
                .failures
                .push(format!("a = {a}, b = {b}, q = {}, r = {}", w.quotient, w.remainder));
        }
    }
    report
}

/// A pair `(b, a)` where `b` has length 1, so every admissible remainder is
/// `0` or a unit, and none of those lies in `a + (b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthWitness {
    pub domain: String,
    pub divisor: String,
    pub dividend: String,
    pub divisor_length: u32,
    /// Every `r` with `r = 0` or length 0.
    pub remainder_candidates: Vec<String>,
    /// True when no candidate is congruent to the dividend.
    pub verified: bool,
}

/// The integers are not length-Euclidean: first prime `b` and residue `a`
/// avoiding `{0, 1, -1}` modulo `b`.
pub fn check_not_l_euclidean_integers() -> LengthWitness {
    let (b, a) = (2i64..)
        .filter(|&b| is_prime(b as u64))
        .find_map(|b| (0..b).find(|&a| ![0, 1, b - 1].contains(&a)).map(|a| (b, a)))
        .expect("some prime exceeds 3");
    let candidates = [0i64, 1, -1];
    let verified = integer_length(b) == 1 && candidates.iter().all(|&r| (a - r).rem_euclid(b) != 0);
    LengthWitness {
        domain: "Z".to_string(),
        divisor: b.to_string(),
        dividend: a.to_string(),
        divisor_length: integer_length(b),
        remainder_candidates: candidates.iter().map(|r| r.to_string()).collect(),
        verified,
    }
}

/// `GF(q)[t]` is not length-Euclidean: the first irreducible `b` of degree
/// at least 2 and the residue `t`, which no constant matches modulo `b`.
pub fn check_not_l_euclidean_polys(q: u64) -> Result<LengthWitness, ModelError> {
    let field = GaloisField::new(q)?;
    let b = (2..)
        .flat_map(|d| Poly::monics_of_degree(d, &field).collect::<Vec<_>>())
        .find(|p| p.is_irreducible(&field))
        .expect("irreducible polynomials of degree 2 exist");
    let a = (0..(field.order() as u64).pow(b.degree().unwrap() as u32))
        .map(|c| Poly::decode(c, field.order()))
        .find(|p| p.degree().unwrap_or(0) >= 1)
        .expect("residues of positive degree exist");
    let candidates: Vec<Poly> = (0..field.order()).map(Poly::constant).collect();
    let length = polynomial_length(&b, &field);
    let verified = length == 1 && candidates.iter().all(|r| !a.sub(r, &field).rem(&b, &field).is_zero());
    Ok(LengthWitness {
        domain: format!("GF({q})[t]"),
        divisor: field.fmt_poly(&b),
        dividend: field.fmt_poly(&a),
        divisor_length: length,
        remainder_candidates: candidates.iter().map(|p| field.fmt_poly(p)).collect(),
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_order_types() {
        let spec = RingSpec::new(vec![PidFactor::Integers, PidFactor::Polynomials { q: 2 }], vec![3]).unwrap();
        assert_eq!(order_type_of_spec(&spec).to_string(), "w*2 + 3");
        let spec = RingSpec::new(vec![], vec![2, 3]).unwrap();
        assert_eq!(order_type_of_spec(&spec), Ordinal::from(5));
        let spec = RingSpec::new(vec![PidFactor::Integers], vec![]).unwrap();
        assert_eq!(order_type_of_spec(&spec), Ordinal::omega());
        assert_eq!(RingSpec::new(vec![], vec![]), Err(SpecError::Empty));
        assert_eq!(RingSpec::new(vec![], vec![0]), Err(SpecError::ZeroLength));
    }

    #[test]
    fn bounds_examples() {
        let w = Ordinal::omega();
        let (lo, hi) = product_bounds(&[w.clone(), w.clone()]);
        assert_eq!((lo.to_string(), hi.to_string()), ("w*2".to_string(), "w*2".to_string()));
        let (lo, hi) = product_bounds(&[Ordinal::from(3), Ordinal::from(4)]);
        assert_eq!((lo, hi), (Ordinal::from(7), Ordinal::from(7)));
        let (lo, hi) = product_bounds(&[w.successor(), w.clone()]);
        assert_eq!(
            (lo.to_string(), hi.to_string()),
            ("w*2".to_string(), "w*2 + 1".to_string())
        );
    }

    #[test]
    fn realization() {
        let a = crate::syntax::parse_ordinal("w*2 + 3").unwrap();
        let spec = realize_ordinal(&a).unwrap();
        assert_eq!(spec.to_string(), "GF(2)[t] x GF(2)[t] x Z/8");
        assert_eq!(order_type_of_spec(&spec), a);
        assert_eq!(realize_ordinal(&Ordinal::zero()), Err(SpecError::ZeroOrdinal));
        let spec = realize_ordinal(&Ordinal::from(5)).unwrap();
        assert_eq!((spec.pid_count(), spec.artinian_lengths()), (0, &[5u64][..]));
        let big = crate::syntax::parse_ordinal("w^2").unwrap();
        assert!(matches!(realize_ordinal(&big), Err(SpecError::NotRealizable(_))));
    }

    #[test]
    fn localization_values() {
        let loc = Localization::new(vec![2, 3]).unwrap();
        assert_eq!(loc.value(&loc.element(12, 5).unwrap()).unwrap(), 3);
        assert_eq!(loc.value(&loc.element(7, 5).unwrap()).unwrap(), 0);
        let two = Localization::new(vec![2]).unwrap();
        assert_eq!(two.value(&two.element(8, 1).unwrap()).unwrap(), 3);
        assert_eq!(loc.value(&loc.element(0, 1).unwrap()), Err(ModelError::ZeroElement));
        assert!(loc.element(1, 6).is_err());
        assert!(Localization::new(vec![4]).is_err());
        assert!(Localization::new(vec![]).is_err());
    }

    #[test]
    fn localization_division_edge_cases() {
        let loc = Localization::new(vec![2, 3]).unwrap();
        let a = loc.element(35, 11).unwrap();
        let unit = loc.element(7, 5).unwrap();
        let w = loc.divide(&a, &unit);
        assert!(w.remainder.is_zero() && loc.verify(&a, &unit, &w));
        let zero = loc.element(0, 1).unwrap();
        let b = loc.element(12, 1).unwrap();
        let w = loc.divide(&zero, &b);
        assert!(w.remainder.is_zero() && w.quotient.is_zero());
        // 4 mod 12: the remainder must keep fewer than three prime factors from S
        let a = loc.element(4, 1).unwrap();
        let w = loc.divide(&a, &b);
        assert!(loc.verify(&a, &b, &w), "{w:?}");
    }

    #[test]
    fn integer_not_l_euclidean() {
        let w = check_not_l_euclidean_integers();
        assert_eq!((w.divisor.as_str(), w.dividend.as_str()), ("5", "2"));
        assert!(w.verified);
    }

    #[test]
    fn polynomial_not_l_euclidean() {
        let w = check_not_l_euclidean_polys(2).unwrap();
        assert_eq!((w.divisor.as_str(), w.dividend.as_str()), ("t^2+t+1", "t"));
        assert_eq!(w.remainder_candidates, vec!["0", "1"]);
        assert!(w.verified);
        let w = check_not_l_euclidean_polys(3).unwrap();
        assert_eq!((w.divisor.as_str(), w.dividend.as_str()), ("t^2+1", "t"));
        assert_eq!(w.remainder_candidates.len(), 3);
        assert!(w.verified);
    }

    #[test]
    fn small_integer_window() {
        let out = windowed_bottom(&WindowedDomain::Integers, &WindowConfig::integers(40)).unwrap();
        assert_eq!(out.value_of("1"), Some(0));
        assert_eq!(out.value_of("-1"), Some(0));
        assert_eq!(out.value_of("7"), Some(2));
        assert_eq!(out.value_of("-8"), Some(3));
        assert_eq!(out.certificate.agreeing, (64, 128));
    }

    #[test]
    fn lengths_in_domains_are_additive() {
        for x in [2i64, -6, 9, 15, 64] {
            for y in [3i64, -10, 7, 16] {
                assert_eq!(integer_length(x * y), integer_length(x) + integer_length(y));
            }
        }
        let f = GaloisField::new(2).unwrap();
        let polys: Vec<Poly> = (2..40).map(|c| Poly::decode(c, 2)).collect();
        for x in &polys {
            for y in polys.iter().take(8) {
                assert_eq!(
                    polynomial_length(&x.mul(y, &f), &f),
                    polynomial_length(x, &f) + polynomial_length(y, &f)
                );
            }
        }
    }
}
