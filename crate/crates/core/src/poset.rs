//! Finite ordered sets and their length functions.
//!
//! A [`QuasiOrder`] is a finite set with a reflexive, transitive relation
//! generated by `(lower, upper)` pairs. A [`FinitePoset`] is a quasi-order
//! whose generating pairs are acyclic. The least isotone map on a finite
//! poset (its length function) assigns to each element the length of the
//! longest strict chain ending at it.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset is empty")]
    Empty,
    #[error("unknown element label in relation: {0}")]
    UnknownLabel(String),
    #[error("duplicate element label: {0}")]
    DuplicateLabel(String),
    #[error("relation has a cycle through {0}")]
    Cycle(String),
    #[error("poset has no unique top element ({0} maximal elements)")]
    NoTop(usize),
    #[error("assignment is missing element {0}")]
    PartialAssignment(String),
    #[error("empty collection of maps")]
    EmptyCollection,
    #[error("map has {got} values but the poset has {expected} elements")]
    SizeMismatch { expected: usize, got: usize },
    #[error("line {line}: expected `a < b`, got {text:?}")]
    EdgeSyntax { line: usize, text: String },
}

/// A finite quasi-ordered set.
#[derive(Debug, Clone)]
pub struct QuasiOrder<L> {
    labels: Vec<L>,
    index: HashMap<L, usize>,
    relations: Vec<(usize, usize)>,
    closure: OnceLock<Vec<Vec<bool>>>,
}

impl<L: Clone + Eq + Hash + fmt::Debug> QuasiOrder<L> {
    /// Builds the quasi-order generated by `lower <= upper` for each pair.
    pub fn new<I>(labels: Vec<L>, relations: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (L, L)>,
    {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(format!("{l:?}")));
            }
        }
        let lookup = |l: &L| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(format!("{l:?}")))
        };
        let relations = relations
            .into_iter()
            .map(|(a, b)| Ok((lookup(&a)?, lookup(&b)?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        Ok(QuasiOrder {
            labels,
            index,
            relations,
            closure: OnceLock::new(),
        })
    }

    /// Builds the quasi-order `x <= y iff le(x, y)` by testing every pair.
    pub fn from_relation(labels: Vec<L>, le: impl Fn(&L, &L) -> bool) -> Result<Self, PosetError> {
        let mut pairs = Vec::new();
        for a in &labels {
            for b in &labels {
                if a != b && le(a, b) {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        QuasiOrder::new(labels, pairs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    fn closure(&self) -> &Vec<Vec<bool>> {
        self.closure.get_or_init(|| {
            let n = self.labels.len();
            let mut le = vec![vec![false; n]; n];
            for (i, row) in le.iter_mut().enumerate() {
                row[i] = true;
            }
            for &(a, b) in &self.relations {
                le[a][b] = true;
            }
            for k in 0..n {
                let via = le[k].clone();
                for row in le.iter_mut().filter(|row| row[k]) {
                    for (x, &v) in row.iter_mut().zip(&via) {
                        *x |= v;
                    }
                }
            }
            le
        })
    }

    /// `x <= y` by index.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.closure()[x][y]
    }

    /// `x < y`: `x <= y` and not `y <= x`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.le(x, y) && !self.le(y, x)
    }

    fn values_by_index<V: Copy>(&self, f: &HashMap<L, V>) -> Result<Vec<V>, PosetError> {
        self.labels
            .iter()
            .map(|l| {
                f.get(l)
                    .copied()
                    .ok_or_else(|| PosetError::PartialAssignment(format!("{l:?}")))
            })
            .collect()
    }

    /// `x < y` implies `f(x) < f(y)`.
    pub fn is_isotone<V: Ord + Copy>(&self, f: &HashMap<L, V>) -> Result<bool, PosetError> {
        let v = self.values_by_index(f)?;
        Ok(self.all_pairs(|x, y| !self.lt(x, y) || v[x] < v[y]))
    }

    /// `x <= y` implies `f(x) <= f(y)`.
    pub fn is_weakly_isotone<V: Ord + Copy>(&self, f: &HashMap<L, V>) -> Result<bool, PosetError> {
        let v = self.values_by_index(f)?;
        Ok(self.all_pairs(|x, y| !self.le(x, y) || v[x] <= v[y]))
    }

    fn all_pairs(&self, pred: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| pred(x, y)))
    }
}

/// A finite partially ordered set.
#[derive(Debug, Clone)]
pub struct FinitePoset<L> {
    order: QuasiOrder<L>,
    topo: Vec<usize>,
}

/// A natural-valued map on a poset, indexed like the poset's labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotoneMap {
    values: Vec<u64>,
}

impl IsotoneMap {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, index: usize) -> u64 {
        self.values[index]
    }

    pub fn into_values(self) -> Vec<u64> {
        self.values
    }
}

impl<L: Clone + Eq + Hash + fmt::Debug> FinitePoset<L> {
    /// Builds the poset generated by the strict relations `lower < upper`.
    pub fn new<I>(labels: Vec<L>, covers: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (L, L)>,
    {
        let order = QuasiOrder::new(labels, covers)?;
        let topo = topological_order(order.len(), order.relations())
            .map_err(|i| PosetError::Cycle(format!("{:?}", order.labels[i])))?;
        Ok(FinitePoset { order, topo })
    }

    /// Builds the poset `x < y iff lt(x, y)`; `lt` must be a strict order.
    pub fn from_relation(labels: Vec<L>, lt: impl Fn(&L, &L) -> bool) -> Result<Self, PosetError> {
        let mut pairs = Vec::new();
        for a in &labels {
            for b in &labels {
                if lt(a, b) {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        FinitePoset::new(labels, pairs)
    }

    pub fn order(&self) -> &QuasiOrder<L> {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        self.order.labels()
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.order.index_of(label)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.order.le(x, y)
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.order.le(x, y)
    }

    /// The least isotone map: longest strict chain below each element.
    pub fn length_function(&self) -> Result<IsotoneMap, PosetError> {
        if self.is_empty() {
            return Err(PosetError::Empty);
        }
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(a, b) in self.order.relations() {
            preds[b].push(a);
        }
        let mut values = vec![0u64; self.len()];
        for &x in &self.topo {
            values[x] = preds[x].iter().map(|&p| values[p] + 1).max().unwrap_or(0);
        }
        Ok(IsotoneMap { values })
    }

    /// Indices of the maximal elements.
    pub fn maximal(&self) -> Vec<usize> {
        // acyclic, so x < y forces a generating relation out of x
        let mut has_upper = vec![false; self.len()];
        for &(a, b) in self.order.relations() {
            if a != b {
                has_upper[a] = true;
            }
        }
        (0..self.len()).filter(|&x| !has_upper[x]).collect()
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Length function evaluated at the top element.
    pub fn length(&self) -> Result<u64, PosetError> {
        if self.is_empty() {
            return Err(PosetError::Empty);
        }
        let top = self.top().ok_or_else(|| PosetError::NoTop(self.maximal().len()))?;
        Ok(self.length_function()?.value(top))
    }

    /// Cartesian product with the componentwise order.
    pub fn product<M>(&self, other: &FinitePoset<M>) -> FinitePoset<(L, M)>
    where
        M: Clone + Eq + Hash + fmt::Debug,
    {
        let labels: Vec<(L, M)> = self
            .labels()
            .iter()
            .flat_map(|a| other.labels().iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let width = other.len();
        let mut covers = Vec::new();
        for &(a, b) in self.order.relations() {
            for j in 0..width {
                covers.push((labels[a * width + j].clone(), labels[b * width + j].clone()));
            }
        }
        for &(a, b) in other.order.relations() {
            for i in 0..self.len() {
                covers.push((labels[i * width + a].clone(), labels[i * width + b].clone()));
            }
        }
        FinitePoset::new(labels, covers).expect("product of posets is a poset")
    }

    /// Induced subposet on the given indices.
    pub fn restrict(&self, keep: &[usize]) -> FinitePoset<L> {
        let labels: Vec<L> = keep.iter().map(|&i| self.labels()[i].clone()).collect();
        let pairs: Vec<(L, L)> = keep
            .iter()
            .flat_map(|&a| keep.iter().filter(move |&&b| self.lt(a, b)).map(move |&b| (a, b)))
            .map(|(a, b)| (self.labels()[a].clone(), self.labels()[b].clone()))
            .collect();
        FinitePoset::new(labels, pairs).expect("induced subposet is a poset")
    }

    /// Down-set generated by `x`: every `y <= x`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.le(y, x)).collect()
    }

    pub fn is_isotone(&self, f: &HashMap<L, u64>) -> Result<bool, PosetError> {
        self.order.is_isotone(f)
    }

    pub fn is_weakly_isotone(&self, f: &HashMap<L, u64>) -> Result<bool, PosetError> {
        self.order.is_weakly_isotone(f)
    }

    /// Index-based isotonicity check for a map given as a value vector.
    pub fn is_isotone_values(&self, values: &[u64]) -> Result<bool, PosetError> {
        if values.len() != self.len() {
            return Err(PosetError::SizeMismatch {
                expected: self.len(),
                got: values.len(),
            });
        }
        let n = self.len();
        Ok((0..n).all(|x| (0..n).all(|y| !self.lt(x, y) || values[x] < values[y])))
    }

    /// Pointwise minimum of isotone maps; the result is again isotone.
    pub fn pointwise_min(&self, maps: &[IsotoneMap]) -> Result<IsotoneMap, PosetError> {
        let first = maps.first().ok_or(PosetError::EmptyCollection)?;
        for m in maps {
            if m.values.len() != self.len() {
                return Err(PosetError::SizeMismatch {
                    expected: self.len(),
                    got: m.values.len(),
                });
            }
        }
        let values = (0..first.values.len())
            .map(|i| maps.iter().map(|m| m.values[i]).min().unwrap_or(0))
            .collect();
        Ok(IsotoneMap { values })
    }

    pub fn to_assignment(&self, map: &IsotoneMap) -> HashMap<L, u64> {
        self.labels().iter().cloned().zip(map.values.iter().copied()).collect()
    }
}

impl IsotoneMap {
    pub fn new(values: Vec<u64>) -> Self {
        IsotoneMap { values }
    }
}

/// Kahn's algorithm; `Err(i)` names an element on a cycle.
fn topological_order(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, usize> {
    let mut indegree = vec![0usize; n];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        indegree[b] += 1;
        succ[a].push(b);
    }
    let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = queue.pop() {
        order.push(x);
        for &y in &succ[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                queue.push(y);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&i| indegree[i] > 0).unwrap_or(0))
    }
}

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> FinitePoset<usize> {
    FinitePoset::new((0..n).collect(), (1..n).map(|i| (i - 1, i))).expect("chain is acyclic")
}

/// `len((m + 1) x (n + 1))` for finite `m`, `n`, computed on the product poset.
pub fn brookfield_sum_finite(m: usize, n: usize) -> u64 {
    chain(m + 1)
        .product(&chain(n + 1))
        .length()
        .expect("product of chains has a top")
}

/// Parses one `a < b` relation per line; blank lines and `#` comments skipped.
pub fn parse_edge_list(src: &str) -> Result<FinitePoset<String>, PosetError> {
    let mut labels: Vec<String> = Vec::new();
    let mut seen: HashMap<String, ()> = HashMap::new();
    let mut pairs = Vec::new();
    let mut intern = |s: &str, labels: &mut Vec<String>| {
        if seen.insert(s.to_string(), ()).is_none() {
            labels.push(s.to_string());
        }
        s.to_string()
    };
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split('<').map(str::trim).collect();
        match parts.as_slice() {
            [a] if !a.is_empty() && !a.contains(char::is_whitespace) => {
                intern(a, &mut labels);
            }
            [a, b] if !a.is_empty() && !b.is_empty() => {
                let a = intern(a, &mut labels);
                let b = intern(b, &mut labels);
                pairs.push((a, b));
            }
            _ => {
                return Err(PosetError::EdgeSyntax {
                    line: i + 1,
                    text: raw.to_string(),
                })
            }
        }
    }
    FinitePoset::new(labels, pairs)
}
