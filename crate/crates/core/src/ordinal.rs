//! Ordinals below epsilon-zero in Cantor normal form.
//!
//! An [`Ordinal`] is a finite, strictly decreasing list of terms
//! `omega^exponent * coefficient`, where every exponent is itself an
//! [`Ordinal`]. The empty list is zero. Every constructor canonicalizes, so
//! structural equality is ordinal equality.
//!
//! Products follow the juxtaposition convention in which `2w = w + w`:
//! [`Ordinal::mul`]`(a, b)` is `b` repeated `a` times. The classical
//! left-to-right product (`a` repeated `b` times) is exposed as
//! [`Ordinal::std_mul`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("left subtraction -({lhs}) + ({rhs}) is undefined: {lhs} > {rhs}")]
    SubtractionUndefined { lhs: Ordinal, rhs: Ordinal },
}

/// One Cantor normal form term `omega^exponent * coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

fn checked(value: Option<u64>) -> u64 {
    value.expect("ordinal coefficient overflow")
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `omega^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient: 1,
            }],
        }
    }

    /// `omega^exponent * coefficient`.
    pub fn term(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exponent, coefficient }],
        }
    }

    /// Ordinal sum of `omega^e * c` over the given terms, in order.
    ///
    /// The input need not be canonical; dominated terms are absorbed and
    /// equal exponents merged exactly as repeated [`Ordinal::add`] would.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Ordinal, u64)>,
    {
        terms
            .into_iter()
            .fold(Ordinal::zero(), |acc, (e, c)| acc.add(&Ordinal::term(e, c)))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` when the ordinal is the natural number `n`.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// Nonzero with no finite tail.
    pub fn is_limit(&self) -> bool {
        match self.terms.last() {
            None => false,
            Some(t) => !t.exponent.is_zero(),
        }
    }

    pub fn successor(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Leading exponent; `None` for zero.
    pub fn degree(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Nesting depth of exponents: 0 for naturals, 1 below `w^w`, ...
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| {
                if t.exponent.is_zero() {
                    0
                } else {
                    1 + t.exponent.height()
                }
            })
            .max()
            .unwrap_or(0)
    }

    pub fn compare(&self, other: &Ordinal) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.exponent.compare(&b.exponent).then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Ordinal sum: a copy of `other` placed above a copy of `self`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut merged = lead.coefficient;
        for t in &self.terms {
            match t.exponent.compare(&lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => merged = checked(merged.checked_add(t.coefficient)),
                Ordering::Less => break,
            }
        }
        terms.push(Term {
            exponent: lead.exponent.clone(),
            coefficient: merged,
        });
        terms.extend(other.terms[1..].iter().cloned());
        Ordinal { terms }
    }

    /// Classical product `self * other`: `self` repeated `other` times.
    pub fn std_mul(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = self.terms.first() else {
            return Ordinal::zero();
        };
        other.terms.iter().fold(Ordinal::zero(), |acc, t| {
            let piece = if t.exponent.is_zero() {
                let mut terms = self.terms.clone();
                terms[0].coefficient = checked(lead.coefficient.checked_mul(t.coefficient));
                Ordinal { terms }
            } else {
                Ordinal::term(lead.exponent.add(&t.exponent), t.coefficient)
            };
            acc.add(&piece)
        })
    }

    /// Juxtaposition product: `other` repeated `self` times, so that
    /// `mul(2, w) = w + w` and `mul(w, 2) = w`.
    pub fn mul(&self, other: &Ordinal) -> Ordinal {
        other.std_mul(self)
    }

    /// Hessenberg natural sum: coefficient-wise addition on the merged
    /// exponent support.
    pub fn natural_sum(&self, other: &Ordinal) -> Ordinal {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.exponent.compare(&b.exponent) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    terms.push(Term {
                        exponent: a.exponent.clone(),
                        coefficient: checked(a.coefficient.checked_add(b.coefficient)),
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().cloned());
        Ordinal { terms }
    }

    /// The unique `g` with `self + g = other`; requires `self <= other`.
    pub fn left_subtract(&self, other: &Ordinal) -> Result<Ordinal, OrdinalError> {
        if self > other {
            return Err(OrdinalError::SubtractionUndefined {
                lhs: self.clone(),
                rhs: other.clone(),
            });
        }
        let split = self
            .terms
            .iter()
            .zip(&other.terms)
            .position(|(a, b)| a != b)
            .unwrap_or(self.terms.len());
        let mut rest: Vec<Term> = other.terms[split..].to_vec();
        if let (Some(a), Some(b)) = (self.terms.get(split), rest.first_mut()) {
            if a.exponent == b.exponent {
                // same exponent, so other's coefficient is the larger one
                b.coefficient -= a.coefficient;
            }
        }
        Ok(Ordinal { terms: rest })
    }

    /// Ordinal sum of a sequence, left to right.
    pub fn sum<'a, I: IntoIterator<Item = &'a Ordinal>>(items: I) -> Ordinal {
        items.into_iter().fold(Ordinal::zero(), |acc, x| acc.add(x))
    }

    /// Natural sum of a sequence.
    pub fn natural_sum_all<'a, I: IntoIterator<Item = &'a Ordinal>>(items: I) -> Ordinal {
        items.into_iter().fold(Ordinal::zero(), |acc, x| acc.natural_sum(x))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::term(Ordinal::zero(), n)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

fn fmt_exponent(e: &Ordinal, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let simple = e.as_finite().is_some()
        || (e.terms.len() == 1 && e.terms[0].coefficient == 1 && e.terms[0].exponent == Ordinal::one());
    if simple {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

/// ASCII canonical form, e.g. `w^2*3 + w + 5` or `w^(w+1)*2`.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            write!(f, "w")?;
            if t.exponent != Ordinal::one() {
                write!(f, "^")?;
                fmt_exponent(&t.exponent, f)?;
            }
            if t.coefficient != 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
