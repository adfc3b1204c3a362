//! Shared domain types: sampled functions, the tie-breaking total order on
//! samples, persistence pairs and diagrams.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{PersistenceError, Result};

/// Domain on which the sampled piecewise-linear function lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Topology {
    #[default]
    Line,
    Circle,
}

/// A sample value tagged with its position in the input array.
///
/// Ordering is lexicographic on `(value, index)`: of two equal values, the
/// one appearing later in the input counts as larger. Values are assumed
/// finite, so the order is total.
#[derive(Debug, Clone, Copy)]
pub struct OrderedValue {
    pub value: f64,
    pub index: usize,
}

impl OrderedValue {
    #[inline]
    pub fn new(value: f64, index: usize) -> Self {
        Self { value, index }
    }
}

impl PartialEq for OrderedValue {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for OrderedValue {}

impl PartialOrd for OrderedValue {
    #[inline]
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedValue {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        // `<` and `>` rather than `total_cmp` so that -0.0 and 0.0 tie.
        if self.value < other.value {
            Ordering::Less
        } else if self.value > other.value {
            Ordering::Greater
        } else {
            self.index.cmp(&other.index)
        }
    }
}

/// Compares two samples under the tie-breaking order.
///
/// Never returns `Equal` for distinct indices.
#[inline]
pub fn compare(a: OrderedValue, b: OrderedValue) -> Ordering {
    a.cmp(&b)
}

/// A validated sampled function.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSample {
    values: Vec<f64>,
    topology: Topology,
}

impl FunctionSample {
    pub fn new(values: Vec<f64>, topology: Topology) -> Result<Self> {
        validate_values(&values)?;
        Ok(Self { values, topology })
    }

    pub fn line(values: Vec<f64>) -> Result<Self> {
        Self::new(values, Topology::Line)
    }

    pub fn circle(values: Vec<f64>) -> Result<Self> {
        Self::new(values, Topology::Circle)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Persistence diagram of the sample on its own topology.
    pub fn diagram(&self) -> Diagram {
        match self.topology {
            Topology::Line => crate::line::line_diagram_unchecked(&self.values),
            Topology::Circle => crate::circle::circle_diagram_unchecked(&self.values),
        }
    }
}

/// Rejects empty input and the first non-finite value.
pub fn validate_values(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(PersistenceError::EmptySample);
    }
    match values.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(PersistenceError::NonFinite { index }),
        None => Ok(()),
    }
}

/// A point of a 0-dimensional persistence diagram.
///
/// `death_value` is `f64::INFINITY` and `death_index` is `None` for the
/// essential class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    pub birth_value: f64,
    pub death_value: f64,
    pub birth_index: usize,
    pub death_index: Option<usize>,
}

impl PersistencePair {
    pub fn finite(birth: OrderedValue, death: OrderedValue) -> Self {
        Self {
            birth_value: birth.value,
            death_value: death.value,
            birth_index: birth.index,
            death_index: Some(death.index),
        }
    }

    pub fn essential(birth: OrderedValue) -> Self {
        Self {
            birth_value: birth.value,
            death_value: f64::INFINITY,
            birth_index: birth.index,
            death_index: None,
        }
    }

    pub fn is_essential(&self) -> bool {
        self.death_index.is_none()
    }

    pub fn persistence(&self) -> f64 {
        self.death_value - self.birth_value
    }

    fn row_key(&self) -> (bool, f64, usize) {
        (self.is_essential(), self.birth_value, self.birth_index)
    }
}

impl fmt::Display for PersistencePair {
    /// One CSV row: `birth_value,death_value,birth_index,death_index`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.death_index {
            Some(death_index) => write!(
                f,
                "{},{},{},{}",
                self.birth_value, self.death_value, self.birth_index, death_index
            ),
            None => write!(f, "{},inf,{},", self.birth_value, self.birth_index),
        }
    }
}

/// How strictly [`diagram_equal`] compares pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareMode {
    ValuesOnly,
    ValuesAndIndices,
}

/// A persistence diagram, kept in canonical row order: finite pairs sorted by
/// `(birth_value, birth_index)`, essential pairs last.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagram {
    pairs: Vec<PersistencePair>,
}

impl Diagram {
    pub fn from_pairs(mut pairs: Vec<PersistencePair>) -> Self {
        pairs.sort_by(|a, b| {
            let (ea, va, ia) = a.row_key();
            let (eb, vb, ib) = b.row_key();
            ea.cmp(&eb)
                .then(va.partial_cmp(&vb).unwrap_or(Ordering::Equal))
                .then(ia.cmp(&ib))
        });
        Self { pairs }
    }

    pub fn pairs(&self) -> &[PersistencePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn finite_pairs(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| !p.is_essential())
    }

    pub fn essential_pairs(&self) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(|p| p.is_essential())
    }

    /// Renders the diagram as CSV rows, one per pair, each newline-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for pair in &self.pairs {
            out.push_str(&pair.to_string());
            out.push('\n');
        }
        out
    }
}

/// Multiset equality of two diagrams.
pub fn diagram_equal(d1: &Diagram, d2: &Diagram, mode: CompareMode) -> bool {
    if d1.len() != d2.len() {
        return false;
    }
    match mode {
        CompareMode::ValuesOnly => {
            let key = |d: &Diagram| {
                let mut v: Vec<(f64, f64)> = d
                    .pairs
                    .iter()
                    .map(|p| (p.birth_value, p.death_value))
                    .collect();
                v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
                v
            };
            key(d1) == key(d2)
        }
        CompareMode::ValuesAndIndices => {
            let key = |d: &Diagram| {
                let mut v: Vec<_> = d
                    .pairs
                    .iter()
                    .map(|p| (p.birth_value, p.death_value, p.birth_index, p.death_index))
                    .collect();
                v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
                v
            };
            key(d1) == key(d2)
        }
    }
}

/// Number of strict local minima after collapsing runs of equal consecutive
/// values. A constant function has one.
pub fn count_local_minima(values: &[f64], topology: Topology) -> usize {
    let mut runs: Vec<f64> = Vec::with_capacity(values.len());
    for &v in values {
        if runs.last() != Some(&v) {
            runs.push(v);
        }
    }
    if topology == Topology::Circle && runs.len() > 1 && runs.first() == runs.last() {
        runs.pop();
    }
    let n = runs.len();
    if n <= 1 {
        return n;
    }
    (0..n)
        .filter(|&i| {
            let here = runs[i];
            let (left, right) = match topology {
                Topology::Line => (i.checked_sub(1).map(|j| runs[j]), runs.get(i + 1).copied()),
                Topology::Circle => (Some(runs[(i + n - 1) % n]), Some(runs[(i + 1) % n])),
            };
            left.is_none_or(|l| l > here) && right.is_none_or(|r| r > here)
        })
        .count()
}

/// A broken structural property of a diagram.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StructureViolation {
    #[error("expected exactly one essential pair, found {0}")]
    EssentialCount(usize),
    #[error("essential birth {found} differs from global minimum {expected}")]
    EssentialBirth { found: f64, expected: f64 },
    #[error("expected {expected} finite pairs, found {found}")]
    FiniteCount { expected: usize, found: usize },
    #[error("pair born at index {index} does not die strictly later")]
    NonPositive { index: usize },
    #[error("index {index} appears in more than one pair")]
    ReusedIndex { index: usize },
}

/// Checks the structural invariants every diagram of `values` must satisfy.
pub fn check_structure(
    values: &[f64],
    topology: Topology,
    diagram: &Diagram,
) -> std::result::Result<(), StructureViolation> {
    let essentials: Vec<_> = diagram.essential_pairs().collect();
    if essentials.len() != 1 {
        return Err(StructureViolation::EssentialCount(essentials.len()));
    }
    let global_min = values.iter().copied().fold(f64::INFINITY, f64::min);
    if essentials[0].birth_value != global_min {
        return Err(StructureViolation::EssentialBirth {
            found: essentials[0].birth_value,
            expected: global_min,
        });
    }
    let expected = count_local_minima(values, topology).saturating_sub(1);
    let found = diagram.finite_pairs().count();
    if expected != found {
        return Err(StructureViolation::FiniteCount { expected, found });
    }
    let mut seen = std::collections::HashSet::new();
    for pair in diagram.pairs() {
        if pair.death_value <= pair.birth_value {
            return Err(StructureViolation::NonPositive {
                index: pair.birth_index,
            });
        }
        for index in std::iter::once(pair.birth_index).chain(pair.death_index) {
            if !seen.insert(index) {
                return Err(StructureViolation::ReusedIndex { index });
            }
        }
    }
    Ok(())
}
