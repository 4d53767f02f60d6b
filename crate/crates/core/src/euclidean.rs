//! Euclidean functions on finite rings.
//!
//! A table assigns an ordinal to every nonzero element; the value at zero is
//! the supremum plus one. Elements are addressed by canonical index (zero is
//! index 0). Every table is either checked exhaustively for the division
//! property or explicitly marked unvalidated, and the transforms below
//! refuse unvalidated input.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ordinal::{Ordinal, OrdinalError};
use crate::ring::{FiniteRing, RingElement, RingError, Tables};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EuclideanError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0}")]
    NotEuclidean(Box<NotEuclideanReport>),
    #[error("division fails for a = {a}, b = {b}")]
    Invalid { a: String, b: String },
    #[error("table is not validated")]
    Unvalidated,
    #[error("table is not the bottom Euclidean function of {0}")]
    NotBottom(String),
    #[error("table has {got} entries but the ring has {expected} elements")]
    SizeMismatch { got: usize, expected: usize },
    #[error("quotient by a unit is the zero ring")]
    TrivialQuotient,
    #[error("split {split} does not divide the {factors} factors into two nonempty parts")]
    BadSplit { split: usize, factors: usize },
    #[error("{0} is not principal, so element lengths are undefined")]
    NotPrincipal(String),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
}

/// Why the level construction stopped: these elements are never reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotEuclideanReport {
    pub ring: String,
    /// Nonzero elements assigned before the construction stalled, per level.
    pub levels: Vec<Vec<String>>,
    pub stuck: Vec<String>,
}

impl fmt::Display for NotEuclideanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is not Euclidean: after {} levels no further element can be assigned; stuck: {}",
            self.ring,
            self.levels.len(),
            self.stuck.join(", ")
        )
    }
}

/// `a = q b + r` as element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisionWitness {
    pub quotient: u32,
    pub remainder: u32,
}

/// The lexicographically least pair `(a, b)` with no admissible remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanTable {
    ring: FiniteRing,
    /// Indexed by element; entry 0 holds the value at zero.
    values: Vec<Ordinal>,
    validated: bool,
}

fn value_at_zero(nonzero: &[Ordinal]) -> Ordinal {
    nonzero
        .iter()
        .max()
        .map(Ordinal::successor)
        .unwrap_or_else(Ordinal::zero)
}

/// Labels the cosets of `(b)`; returns labels and the number of cosets.
fn coset_labels(t: &Tables, b: u32) -> (Vec<u32>, u32) {
    let n = t.size();
    let ideal: Vec<u32> = {
        let mask = t.principal_mask(b);
        (0..n as u32).filter(|&i| mask[i as usize]).collect()
    };
    let mut label = vec![u32::MAX; n];
    let mut count = 0;
    for a in 0..n as u32 {
        if label[a as usize] == u32::MAX {
            for &m in &ideal {
                label[t.add(a, m) as usize] = count;
            }
            count += 1;
        }
    }
    (label, count)
}

impl EuclideanTable {
    fn build(ring: &FiniteRing, nonzero: Vec<Ordinal>) -> Result<Self, EuclideanError> {
        let n = ring.tables()?.size();
        if nonzero.len() + 1 != n {
            return Err(EuclideanError::SizeMismatch {
                got: nonzero.len() + 1,
                expected: n,
            });
        }
        let mut values = Vec::with_capacity(n);
        values.push(value_at_zero(&nonzero));
        values.extend(nonzero);
        Ok(EuclideanTable {
            ring: ring.clone(),
            values,
            validated: false,
        })
    }

    /// A table from the values of the nonzero elements in index order,
    /// checked exhaustively.
    pub fn validated(ring: &FiniteRing, nonzero: Vec<Ordinal>) -> Result<Self, EuclideanError> {
        let mut t = Self::build(ring, nonzero)?;
        if let Some(c) = t.counterexample()? {
            return Err(EuclideanError::Invalid {
                a: ring.fmt_index(c.a),
                b: ring.fmt_index(c.b),
            });
        }
        t.validated = true;
        Ok(t)
    }

    /// A table that is not checked; transforms reject it.
    pub fn unvalidated(ring: &FiniteRing, nonzero: Vec<Ordinal>) -> Result<Self, EuclideanError> {
        Self::build(ring, nonzero)
    }

    pub fn from_naturals(ring: &FiniteRing, nonzero: &[u64]) -> Result<Self, EuclideanError> {
        Self::validated(ring, nonzero.iter().map(|&v| Ordinal::from(v)).collect())
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Value of an element; index 0 gives the value at zero.
    pub fn value(&self, index: u32) -> &Ordinal {
        &self.values[index as usize]
    }

    pub fn value_of(&self, x: &RingElement) -> Result<&Ordinal, EuclideanError> {
        Ok(self.value(self.ring.index(x)?))
    }

    pub fn value_at_zero(&self) -> &Ordinal {
        &self.values[0]
    }

    /// Values of the nonzero elements in index order.
    pub fn nonzero_values(&self) -> &[Ordinal] {
        &self.values[1..]
    }

    /// Finite values of the nonzero elements, if all are finite.
    pub fn finite_values(&self) -> Option<Vec<u64>> {
        self.values[1..].iter().map(Ordinal::as_finite).collect()
    }

    fn require_validated(&self) -> Result<&Tables, EuclideanError> {
        if !self.validated {
            return Err(EuclideanError::Unvalidated);
        }
        Ok(self.ring.tables()?)
    }

    /// Admissible remainder for dividing by `b`: zero, or a smaller value.
    fn admissible(&self, r: u32, b: u32) -> bool {
        r == 0 || self.values[r as usize] < self.values[b as usize]
    }

    /// The lexicographically least `(a, b)` with no admissible remainder.
    pub fn counterexample(&self) -> Result<Option<Counterexample>, EuclideanError> {
        let t = self.ring.tables()?;
        let n = t.size() as u32;
        let mut best: Option<Counterexample> = None;
        for b in 1..n {
            let (label, count) = coset_labels(t, b);
            let mut good = vec![false; count as usize];
            for r in 0..n {
                if self.admissible(r, b) {
                    good[label[r as usize] as usize] = true;
                }
            }
            if let Some(a) = (0..n).find(|&a| !good[label[a as usize] as usize]) {
                let c = Counterexample { a, b };
                if best.is_none_or(|x| (a, b) < (x.a, x.b)) {
                    best = Some(c);
                }
            }
        }
        Ok(best)
    }

    /// First `q` in canonical order giving an admissible remainder.
    pub fn divide(&self, a: u32, b: u32) -> Result<Option<DivisionWitness>, EuclideanError> {
        let t = self.ring.tables()?;
        Ok((0..t.size() as u32).find_map(|q| {
            let r = t.sub(a, t.mul(q, b));
            self.admissible(r, b).then_some(DivisionWitness {
                quotient: q,
                remainder: r,
            })
        }))
    }

    /// Applies a strictly increasing map to every value and revalidates.
    pub fn compose(&self, f: impl Fn(&Ordinal) -> Ordinal) -> Result<Self, EuclideanError> {
        Self::validated(&self.ring, self.values[1..].iter().map(f).collect())
    }

    pub fn report(&self) -> TableReport {
        TableReport {
            ring: self.ring.to_string(),
            values: (1..self.values.len() as u32)
                .map(|i| TableEntry {
                    index: i,
                    element: self.ring.fmt_index(i),
                    value: self.values[i as usize].clone(),
                })
                .collect(),
            value_at_zero: self.values[0].clone(),
            validated: self.validated,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub index: u32,
    pub element: String,
    pub value: Ordinal,
}

/// Serializable form of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub ring: String,
    pub values: Vec<TableEntry>,
    pub value_at_zero: Ordinal,
    pub validated: bool,
}

impl fmt::Display for EuclideanTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring)?;
        for i in 1..self.values.len() as u32 {
            writeln!(f, "  {} -> {}", self.ring.fmt_index(i), self.values[i as usize])?;
        }
        write!(f, "  0 -> {}", self.values[0])?;
        if !self.validated {
            write!(f, " (unvalidated)")?;
        }
        Ok(())
    }
}

/// `a | b` with `a`, `b` nonzero.
fn divisibility(t: &Tables) -> Vec<Vec<bool>> {
    let n = t.size() as u32;
    (0..n).map(|a| t.principal_mask(a)).collect()
}

/// Whether `a = q b + r` is reachable from the table's division property;
/// returns `true` when the counterexample search finds nothing.
pub fn is_euclidean_function(t: &EuclideanTable) -> Result<Result<(), Counterexample>, EuclideanError> {
    Ok(match t.counterexample()? {
        None => Ok(()),
        Some(c) => Err(c),
    })
}

/// Least Euclidean function, built one level at a time: level `L` takes
/// every unassigned `b` whose cosets all meet zero or an element of a lower
/// level.
pub fn bottom_euclidean(ring: &FiniteRing) -> Result<EuclideanTable, EuclideanError> {
    let t = ring.tables()?;
    let n = t.size();
    let labels: Vec<(Vec<u32>, u32)> = (0..n as u32).map(|b| coset_labels(t, b)).collect();
    let mut level: Vec<Option<u64>> = vec![None; n];
    let mut reached: Vec<u32> = vec![0];
    let mut levels: Vec<Vec<u32>> = Vec::new();
    let mut remaining = n - 1;
    while remaining > 0 {
        let l = levels.len() as u64;
        let fresh: Vec<u32> = (1..n as u32)
            .filter(|&b| level[b as usize].is_none())
            .filter(|&b| {
                let (label, count) = &labels[b as usize];
                let mut hit = vec![false; *count as usize];
                let mut k = 0;
                for &r in &reached {
                    let c = label[r as usize] as usize;
                    if !hit[c] {
                        hit[c] = true;
                        k += 1;
                    }
                }
                k == *count
            })
            .collect();
        if fresh.is_empty() {
            let stuck = (1..n as u32)
                .filter(|&b| level[b as usize].is_none())
                .map(|b| ring.fmt_index(b))
                .collect();
            return Err(EuclideanError::NotEuclidean(Box::new(NotEuclideanReport {
                ring: ring.to_string(),
                levels: levels
                    .iter()
                    .map(|lv| lv.iter().map(|&i| ring.fmt_index(i)).collect())
                    .collect(),
                stuck,
            })));
        }
        for &b in &fresh {
            level[b as usize] = Some(l);
        }
        remaining -= fresh.len();
        reached.extend(&fresh);
        levels.push(fresh);
    }
    let values = level[1..]
        .iter()
        .map(|v| Ordinal::from(v.expect("all assigned")))
        .collect();
    EuclideanTable::validated(ring, values)
}

/// Order type of the ring: the value at zero of its bottom table.
pub fn order_type(t: &EuclideanTable) -> Result<Ordinal, EuclideanError> {
    let bottom = bottom_euclidean(&t.ring)?;
    if bottom.values != t.values {
        return Err(EuclideanError::NotBottom(t.ring.to_string()));
    }
    Ok(t.value_at_zero().clone())
}

/// `x -> min { t(y) : y a nonzero multiple of x }`.
pub fn isotone_minimization(t: &EuclideanTable) -> Result<EuclideanTable, EuclideanError> {
    let tables = t.require_validated()?;
    let n = tables.size() as u32;
    let values = (1..n)
        .map(|x| {
            (0..n)
                .map(|q| tables.mul(q, x))
                .filter(|&y| y != 0)
                .map(|y| t.value(y))
                .min()
                .expect("x itself is a nonzero multiple")
                .clone()
        })
        .collect();
    EuclideanTable::validated(&t.ring, values)
}

/// Divisibility weakly increases the value and strict divisibility
/// strictly increases it (on nonzero elements). Associates therefore share
/// a value.
pub fn is_isotone_euclidean(t: &EuclideanTable) -> Result<bool, EuclideanError> {
    let tables = t.ring.tables()?;
    let d = divisibility(tables);
    let n = tables.size();
    Ok((1..n).all(|a| {
        (1..n).all(|b| match (d[a][b], d[b][a]) {
            (true, true) => t.values[a] == t.values[b],
            (true, false) => t.values[a] < t.values[b],
            _ => true,
        })
    }))
}

/// Divisibility weakly increases the value (on nonzero elements).
pub fn is_weakly_isotone_euclidean(t: &EuclideanTable) -> Result<bool, EuclideanError> {
    let tables = t.ring.tables()?;
    let d = divisibility(tables);
    let n = tables.size();
    Ok((1..n).all(|a| (1..n).all(|b| !d[a][b] || t.values[a] <= t.values[b])))
}

/// Table on `R/(b)`: each nonzero class takes the least value of its lifts.
pub fn quotient_euclidean(t: &EuclideanTable, b: &RingElement) -> Result<EuclideanTable, EuclideanError> {
    t.require_validated()?;
    let quotient = match t.ring.quotient(b) {
        Err(RingError::TrivialQuotient) => return Err(EuclideanError::TrivialQuotient),
        other => other?,
    };
    let m = quotient.section.len();
    let mut best: Vec<Option<&Ordinal>> = vec![None; m];
    for (x, &class) in quotient.projection.iter().enumerate() {
        if class != 0 {
            let v = &t.values[x];
            let slot = &mut best[class as usize];
            if slot.is_none_or(|cur| v < cur) {
                *slot = Some(v);
            }
        }
    }
    let values = best[1..]
        .iter()
        .map(|v| v.expect("every class has a lift").clone())
        .collect();
    EuclideanTable::validated(&quotient.ring, values)
}

/// Which branch of the product division produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NagataCase {
    /// `y | x`: remainder zero.
    Divides,
    /// Componentwise quotient and remainder.
    Componentwise,
    /// `r1 = 0`, `y1 != 0`: quotient `(q1 - 1, q2)`, remainder `(y1, r2)`.
    ShiftFirst,
    /// `r2 = 0`, `y2 != 0`: quotient `(q1, q2 - 1)`, remainder `(r1, y2)`.
    ShiftSecond,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NagataWitness {
    pub witness: DivisionWitness,
    pub case: NagataCase,
}

/// Pair-valued function `x -> (t1(x1), t2(x2))` on `R1 x R2`, compared
/// componentwise; a zero component takes that table's value at zero.
#[derive(Debug, Clone)]
pub struct PairTable {
    ring: FiniteRing,
    first: EuclideanTable,
    second: EuclideanTable,
}

fn pair_lt(a: (&Ordinal, &Ordinal), b: (&Ordinal, &Ordinal)) -> bool {
    a.0 <= b.0 && a.1 <= b.1 && a != b
}

impl PairTable {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    fn split(&self, x: u32) -> (u32, u32) {
        let m = self.second.ring.size() as u32;
        (x / m, x % m)
    }

    fn join(&self, x1: u32, x2: u32) -> u32 {
        x1 * self.second.ring.size() as u32 + x2
    }

    /// Value of an element of the product.
    pub fn value(&self, x: u32) -> (&Ordinal, &Ordinal) {
        let (a, b) = self.split(x);
        (self.first.value(a), self.second.value(b))
    }

    /// `x_i = q_i y_i + r_i` in one factor: an exact quotient when `y_i`
    /// divides `x_i`, otherwise the table's first witness.
    fn component(t: &EuclideanTable, x: u32, y: u32) -> Result<DivisionWitness, EuclideanError> {
        let tables = t.ring.tables()?;
        if y == 0 {
            return Ok(DivisionWitness {
                quotient: 0,
                remainder: x,
            });
        }
        if let Some(q) = (0..tables.size() as u32).find(|&q| tables.mul(q, y) == x) {
            return Ok(DivisionWitness {
                quotient: q,
                remainder: 0,
            });
        }
        Ok(t.divide(x, y)?.expect("validated table"))
    }

    /// Division of `x` by nonzero `y` following the three-case analysis.
    pub fn divide(&self, x: u32, y: u32) -> Result<NagataWitness, EuclideanError> {
        let tables = self.ring.tables()?;
        if let Some(q) = (0..tables.size() as u32).find(|&q| tables.mul(q, y) == x) {
            return Ok(NagataWitness {
                witness: DivisionWitness {
                    quotient: q,
                    remainder: 0,
                },
                case: NagataCase::Divides,
            });
        }
        let (x1, x2) = self.split(x);
        let (y1, y2) = self.split(y);
        let w1 = Self::component(&self.first, x1, y1)?;
        let w2 = Self::component(&self.second, x2, y2)?;
        let (r1, r2) = (w1.remainder, w2.remainder);
        let (q, r, case) = if (r1 != 0 && r2 != 0) || (r1 == 0 && y1 == 0) || (r2 == 0 && y2 == 0) {
            ((w1.quotient, w2.quotient), (r1, r2), NagataCase::Componentwise)
        } else if r1 == 0 {
            let t1 = self.first.ring.tables()?;
            (
                (t1.sub(w1.quotient, t1.one()), w2.quotient),
                (y1, r2),
                NagataCase::ShiftFirst,
            )
        } else {
            let t2 = self.second.ring.tables()?;
            (
                (w1.quotient, t2.sub(w2.quotient, t2.one())),
                (r1, y2),
                NagataCase::ShiftSecond,
            )
        };
        Ok(NagataWitness {
            witness: DivisionWitness {
                quotient: self.join(q.0, q.1),
                remainder: self.join(r.0, r.1),
            },
            case,
        })
    }

    /// `x = q y + r`, and `r = 0` or `value(r) < value(y)` componentwise.
    pub fn check_witness(&self, x: u32, y: u32, w: &DivisionWitness) -> Result<bool, EuclideanError> {
        let t = self.ring.tables()?;
        let reconstructs = t.add(t.mul(w.quotient, y), w.remainder) == x;
        Ok(reconstructs && (w.remainder == 0 || pair_lt(self.value(w.remainder), self.value(y))))
    }

    /// Checks the witness for every `x` and nonzero `y`.
    pub fn verify_all(&self) -> Result<NagataReport, EuclideanError> {
        let n = self.ring.tables()?.size() as u32;
        let mut report = NagataReport {
            ring: self.ring.to_string(),
            pairs: 0,
            divides: 0,
            componentwise: 0,
            shift_first: 0,
            shift_second: 0,
            failures: Vec::new(),
        };
        for x in 0..n {
            for y in 1..n {
                let w = self.divide(x, y)?;
                report.pairs += 1;
                match w.case {
                    NagataCase::Divides => report.divides += 1,
                    NagataCase::Componentwise => report.componentwise += 1,
                    NagataCase::ShiftFirst => report.shift_first += 1,
                    NagataCase::ShiftSecond => report.shift_second += 1,
                }
                if !self.check_witness(x, y, &w.witness)? {
                    report.failures.push((x, y));
                }
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NagataReport {
    pub ring: String,
    pub pairs: u64,
    pub divides: u64,
    pub componentwise: u64,
    pub shift_first: u64,
    pub shift_second: u64,
    pub failures: Vec<(u32, u32)>,
}

/// Product of two validated tables on `R1 x R2`.
pub fn nagata_product(t1: &EuclideanTable, t2: &EuclideanTable) -> Result<PairTable, EuclideanError> {
    t1.require_validated()?;
    t2.require_validated()?;
    let factors = t1.ring.factors().iter().chain(t2.ring.factors()).cloned().collect();
    let ring = FiniteRing::new(factors)?.with_max_size(t1.ring.max_size().max(t2.ring.max_size()));
    Ok(PairTable {
        ring,
        first: t1.clone(),
        second: t2.clone(),
    })
}

/// Ordinal table `x -> t1(x1) # t2(x2)` (natural sum), the length function
/// of the product of the two value chains.
pub fn collapse_pair_table(pt: &PairTable) -> Result<EuclideanTable, EuclideanError> {
    let n = pt.ring.tables()?.size() as u32;
    let values = (1..n)
        .map(|x| {
            let (a, b) = pt.value(x);
            a.natural_sum(b)
        })
        .collect();
    EuclideanTable::validated(&pt.ring, values)
}

/// Which factor of a two-factor product to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// From the bottom table of `R1 x R2` (the first `split` factors form
/// `R1`), the table `y -> -t(e) + t(y')` on the kept factor, where `y'`
/// embeds `y` with the other coordinate zero and `e` embeds `1`.
pub fn residual_euclidean(t: &EuclideanTable, split: usize, keep: Side) -> Result<EuclideanTable, EuclideanError> {
    let factors = t.ring.factors();
    if split == 0 || split >= factors.len() {
        return Err(EuclideanError::BadSplit {
            split,
            factors: factors.len(),
        });
    }
    order_type(t)?;
    let (left, right) = factors.split_at(split);
    let kept = match keep {
        Side::First => left,
        Side::Second => right,
    };
    let target = FiniteRing::new(kept.to_vec())?.with_max_size(t.ring.max_size());
    let embed = |y: &RingElement| -> Result<u32, EuclideanError> {
        let other = match keep {
            Side::First => right.len(),
            Side::Second => left.len(),
        };
        let zeros = std::iter::repeat_n(0, other);
        let coords: Vec<u32> = match keep {
            Side::First => y.coords().iter().copied().chain(zeros).collect(),
            Side::Second => zeros.chain(y.coords().iter().copied()).collect(),
        };
        Ok(t.ring.index(&RingElement::new(coords))?)
    };
    let base = t.value(embed(&target.one())?).clone();
    let n = target.tables()?.size() as u32;
    let values = (1..n)
        .map(|i| Ok(base.left_subtract(t.value(embed(&target.element(i))?))?))
        .collect::<Result<Vec<_>, EuclideanError>>()?;
    EuclideanTable::validated(&target, values)
}

/// Outcome of testing whether the length function is Euclidean.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthCheck {
    pub ring: String,
    pub holds: bool,
    pub counterexample: Option<(String, String)>,
}

/// Whether `x -> length of (x)` is a Euclidean function.
pub fn check_l_euclidean(ring: &FiniteRing) -> Result<LengthCheck, EuclideanError> {
    if !ring.is_principal()? {
        return Err(EuclideanError::NotPrincipal(ring.to_string()));
    }
    let n = ring.tables()?.size() as u32;
    let values = (1..n)
        .map(|i| ring.element_length_index(i).map(Ordinal::from))
        .collect::<Result<Vec<_>, _>>()?;
    let table = EuclideanTable::unvalidated(ring, values)?;
    let c = table.counterexample()?;
    Ok(LengthCheck {
        ring: ring.to_string(),
        holds: c.is_none(),
        counterexample: c.map(|c| (ring.fmt_index(c.a), ring.fmt_index(c.b))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::square_zero_plane;
    use crate::syntax::parse_finite_ring;

    fn ring(src: &str) -> FiniteRing {
        parse_finite_ring(src, 512).unwrap()
    }

    fn naturals(t: &EuclideanTable) -> Vec<u64> {
        t.finite_values().unwrap()
    }

    #[test]
    fn division_property_examples() {
        let z4 = ring("Z/4");
        assert!(EuclideanTable::from_naturals(&z4, &[0, 1, 0]).is_ok());
        let z6 = ring("Z/6");
        let t = EuclideanTable::unvalidated(&z6, vec![Ordinal::zero(); 5]).unwrap();
        assert_eq!(is_euclidean_function(&t).unwrap(), Err(Counterexample { a: 1, b: 2 }));
        let f = ring("GF(7)");
        assert!(EuclideanTable::from_naturals(&f, &[0; 6]).is_ok());
    }

    #[test]
    fn bottom_of_z8() {
        let t = bottom_euclidean(&ring("Z/8")).unwrap();
        assert_eq!(naturals(&t), vec![0, 1, 0, 2, 0, 1, 0]);
        assert_eq!(t.value_at_zero(), &Ordinal::from(3));
        assert_eq!(order_type(&t).unwrap(), Ordinal::from(3));
    }

    #[test]
    fn bottom_of_field_and_z12() {
        let t = bottom_euclidean(&ring("GF(8)")).unwrap();
        assert!(naturals(&t).iter().all(|&v| v == 0));
        assert_eq!(order_type(&t).unwrap(), Ordinal::one());
        let t = bottom_euclidean(&ring("Z/12")).unwrap();
        assert_eq!(order_type(&t).unwrap(), Ordinal::from(3));
    }

    #[test]
    fn non_principal_fixture_stalls() {
        let r = square_zero_plane(2).unwrap();
        match bottom_euclidean(&r) {
            Err(EuclideanError::NotEuclidean(report)) => {
                assert_eq!(report.levels.len(), 1);
                assert_eq!(report.stuck.len(), 3);
            }
            other => panic!("expected a stall, got {other:?}"),
        }
    }

    #[test]
    fn order_type_rejects_other_tables() {
        let z4 = ring("Z/4");
        let t = EuclideanTable::from_naturals(&z4, &[1, 1, 0]).unwrap();
        assert!(matches!(order_type(&t), Err(EuclideanError::NotBottom(_))));
    }

    #[test]
    fn minimization_examples() {
        let z4 = ring("Z/4");
        let t = EuclideanTable::from_naturals(&z4, &[1, 1, 0]).unwrap();
        assert!(!is_isotone_euclidean(&t).unwrap());
        assert!(!is_weakly_isotone_euclidean(&t).unwrap());
        let m = isotone_minimization(&t).unwrap();
        assert_eq!(naturals(&m), vec![0, 1, 0]);
        let bottom = bottom_euclidean(&z4).unwrap();
        assert_eq!(isotone_minimization(&bottom).unwrap(), bottom);
        assert!(is_isotone_euclidean(&bottom).unwrap() && is_weakly_isotone_euclidean(&bottom).unwrap());
        let f = ring("GF(5)");
        let t = EuclideanTable::from_naturals(&f, &[3, 0, 4, 1]).unwrap();
        assert_eq!(naturals(&isotone_minimization(&t).unwrap()), vec![0; 4]);
        // every nonzero element of a field is a multiple of every other
        let t = EuclideanTable::from_naturals(&f, &[3, 1, 4, 1]).unwrap();
        assert_eq!(naturals(&isotone_minimization(&t).unwrap()), vec![1; 4]);
    }

    #[test]
    fn unvalidated_tables_are_rejected() {
        let z4 = ring("Z/4");
        let t = EuclideanTable::unvalidated(&z4, vec![Ordinal::zero(); 3]).unwrap();
        assert_eq!(isotone_minimization(&t), Err(EuclideanError::Unvalidated));
    }

    #[test]
    fn quotient_examples() {
        let z8 = ring("Z/8");
        let t = bottom_euclidean(&z8).unwrap();
        let q = quotient_euclidean(&t, &z8.parse_element("2").unwrap()).unwrap();
        assert_eq!(naturals(&q), vec![0]);
        assert_eq!(q.value_at_zero(), &Ordinal::from(1));
        let z12 = ring("Z/12");
        let t = bottom_euclidean(&z12).unwrap();
        let four = z12.parse_element("4").unwrap();
        let q = quotient_euclidean(&t, &four).unwrap();
        assert_eq!(naturals(&q), vec![0, 1, 0]);
        assert_eq!(q.value_at_zero(), t.value_of(&four).unwrap());
        assert_eq!(
            quotient_euclidean(&t, &z12.parse_element("5").unwrap()),
            Err(EuclideanError::TrivialQuotient)
        );
    }

    #[test]
    fn nagata_case_three_example() {
        let t1 = bottom_euclidean(&ring("Z/4")).unwrap();
        let t2 = bottom_euclidean(&ring("Z/9")).unwrap();
        let pt = nagata_product(&t1, &t2).unwrap();
        let r = pt.ring().clone();
        let x = r.index(&r.parse_element("(1, 3)").unwrap()).unwrap();
        let y = r.index(&r.parse_element("(2, 3)").unwrap()).unwrap();
        let w = pt.divide(x, y).unwrap();
        assert_eq!(w.case, NagataCase::ShiftSecond);
        assert_eq!(r.fmt_index(w.witness.remainder), "(1, 3)");
        assert!(pt.check_witness(x, y, &w.witness).unwrap());
        let report = pt.verify_all().unwrap();
        assert!(report.failures.is_empty());
        assert_eq!(report.pairs, 36 * 35);
    }

    #[test]
    fn collapse_on_z4_z9() {
        let t1 = bottom_euclidean(&ring("Z/4")).unwrap();
        let t2 = bottom_euclidean(&ring("Z/9")).unwrap();
        let c = collapse_pair_table(&nagata_product(&t1, &t2).unwrap()).unwrap();
        assert_eq!(c.nonzero_values().iter().max(), Some(&Ordinal::from(3)));
        assert_eq!(c.value_at_zero(), &Ordinal::from(4));
        let e = order_type(&bottom_euclidean(c.ring()).unwrap()).unwrap();
        assert_eq!(e, Ordinal::from(4));
    }

    #[test]
    fn residual_examples() {
        let r = ring("Z/2 x Z/3");
        let t = bottom_euclidean(&r).unwrap();
        let psi = residual_euclidean(&t, 1, Side::Second).unwrap();
        assert_eq!(psi, bottom_euclidean(&ring("Z/3")).unwrap());
        let r = ring("Z/4 x Z/9");
        let t = bottom_euclidean(&r).unwrap();
        for side in [Side::First, Side::Second] {
            let psi = residual_euclidean(&t, 1, side).unwrap();
            let bottom = bottom_euclidean(psi.ring()).unwrap();
            assert!(psi
                .nonzero_values()
                .iter()
                .zip(bottom.nonzero_values())
                .all(|(a, b)| a >= b));
        }
        assert!(matches!(
            residual_euclidean(&t, 2, Side::First),
            Err(EuclideanError::BadSplit { .. })
        ));
    }

    #[test]
    fn length_euclidean_examples() {
        assert!(check_l_euclidean(&ring("Z/9")).unwrap().holds);
        assert!(check_l_euclidean(&ring("GF(4)")).unwrap().holds);
        let r = square_zero_plane(2).unwrap();
        assert!(matches!(check_l_euclidean(&r), Err(EuclideanError::NotPrincipal(_))));
    }

    #[test]
    fn composition_with_increasing_maps() {
        let t = bottom_euclidean(&ring("Z/27")).unwrap();
        let shifted = t.compose(|v| v.natural_sum(&Ordinal::from(5))).unwrap();
        assert!(shifted.is_validated());
        let lifted = t.compose(|v| Ordinal::omega().add(v)).unwrap();
        assert_eq!(lifted.value_at_zero().to_string(), "w + 3");
    }
}
