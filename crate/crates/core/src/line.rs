//! Persistence of a sampled function on a line segment, in one streaming pass.

use crate::error::{PersistenceError, Result};
use crate::reducer::{OpCounts, PairSink, StackReducer};
use crate::types::{validate_values, Diagram, OrderedValue, PersistencePair};

/// Destination for finished persistence pairs.
pub trait DiagramSink {
    fn emit(&mut self, pair: PersistencePair);
}

impl DiagramSink for Vec<PersistencePair> {
    #[inline]
    fn emit(&mut self, pair: PersistencePair) {
        self.push(pair);
    }
}

/// Sink that keeps only a count and the total persistence; the benchmark
/// uses it so that storing pairs does not dominate the measurement.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PairTally {
    pub count: usize,
    pub total_persistence: f64,
}

impl DiagramSink for PairTally {
    #[inline]
    fn emit(&mut self, pair: PersistencePair) {
        self.count += 1;
        self.total_persistence += pair.persistence();
    }
}

/// Adapter from the reducer's `(birth, death)` callbacks to a [`DiagramSink`].
/// Drops zero-persistence pairs.
pub(crate) struct Emit<'a, S: ?Sized>(pub &'a mut S);

impl<S: DiagramSink + ?Sized> PairSink<OrderedValue> for Emit<'_, S> {
    #[inline]
    fn pair(&mut self, birth: OrderedValue, death: OrderedValue) {
        if birth.value != death.value {
            self.0.emit(PersistencePair::finite(birth, death));
        }
    }
}

/// Streaming reducer over the samples of a function on a segment.
///
/// Feed values in order with [`push`](Self::push), then call
/// [`finish`](Self::finish). Finite pairs go to the sink as soon as they are
/// found.
#[derive(Debug, Clone)]
pub struct LineReducer {
    stack: StackReducer<OrderedValue>,
    next_index: usize,
    last_value: f64,
}

impl Default for LineReducer {
    fn default() -> Self {
        Self::new()
    }
}

impl LineReducer {
    pub fn new() -> Self {
        Self {
            stack: StackReducer::bounded(),
            next_index: 0,
            last_value: f64::NAN,
        }
    }

    /// Number of samples consumed so far.
    pub fn len(&self) -> usize {
        self.next_index
    }

    pub fn is_empty(&self) -> bool {
        self.next_index == 0
    }

    pub fn counts(&self) -> OpCounts {
        self.stack.counts()
    }

    pub fn stack(&self) -> &StackReducer<OrderedValue> {
        &self.stack
    }

    #[inline]
    pub fn push<S: DiagramSink + ?Sized>(&mut self, value: f64, sink: &mut S) -> Result<()> {
        let index = self.next_index;
        if !value.is_finite() {
            return Err(PersistenceError::NonFinite { index });
        }
        self.next_index += 1;
        let v = OrderedValue::new(value, index);
        if value == self.last_value {
            // A repeat of the previous sample: it sits directly above the
            // current top in the order.
            self.stack.push_successor(v);
        } else {
            self.last_value = value;
            self.stack.push(v, &mut Emit(sink));
        }
        Ok(())
    }

    pub fn extend<S, I>(&mut self, values: I, sink: &mut S) -> Result<()>
    where
        S: DiagramSink + ?Sized,
        I: IntoIterator<Item = f64>,
    {
        values.into_iter().try_for_each(|v| self.push(v, sink))
    }

    /// Tears the stack down and returns the essential pair.
    pub fn finish<S: DiagramSink + ?Sized>(self, sink: &mut S) -> Result<PersistencePair> {
        if self.stack.is_empty() {
            return Err(PersistenceError::EmptySample);
        }
        let min = self.stack.finish(&mut Emit(sink));
        Ok(PersistencePair::essential(min))
    }
}

/// Runs the line reducer over `values`, reporting every pair to `sink`.
pub fn line_persistence<S: DiagramSink + ?Sized>(values: &[f64], sink: &mut S) -> Result<OpCounts> {
    let mut reducer = LineReducer::new();
    reducer.extend(values.iter().copied(), sink)?;
    let counts = reducer.counts();
    let essential = reducer.finish(sink)?;
    sink.emit(essential);
    Ok(counts)
}

/// 0-dimensional sublevel-set persistence diagram of the piecewise-linear
/// interpolation of `values` on a segment.
pub fn line_diagram(values: &[f64]) -> Result<Diagram> {
    validate_values(values)?;
    Ok(line_diagram_unchecked(values))
}

pub(crate) fn line_diagram_unchecked(values: &[f64]) -> Diagram {
    let mut pairs = Vec::new();
    line_persistence(values, &mut pairs).expect("validated input");
    Diagram::from_pairs(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{check_structure, Topology};

    fn rows(values: &[f64]) -> Vec<(f64, f64)> {
        line_diagram(values)
            .unwrap()
            .pairs()
            .iter()
            .map(|p| (p.birth_value, p.death_value))
            .collect()
    }

    #[test]
    fn examples() {
        let inf = f64::INFINITY;
        assert_eq!(rows(&[0.0, 2.0, 1.0, 3.0]), vec![(1.0, 2.0), (0.0, inf)]);
        assert_eq!(rows(&[1.0, 2.0, 3.0, 4.0]), vec![(1.0, inf)]);
        assert_eq!(
            rows(&[3.0, 1.0, 4.0, 1.5, 2.0, 0.0, 5.0]),
            vec![(1.0, 4.0), (1.5, 2.0), (0.0, inf)]
        );
        assert_eq!(rows(&[5.0, 5.0, 5.0]), vec![(5.0, inf)]);
    }

    #[test]
    fn plateau_indices() {
        // Minimum plateau reports its first sample, maximum plateau its last.
        let d = line_diagram(&[0.0, 5.0, 5.0, 2.0, 2.0, 7.0]).unwrap();
        let finite: Vec<_> = d.finite_pairs().copied().collect();
        assert_eq!(finite.len(), 1);
        assert_eq!(finite[0].birth_index, 3);
        assert_eq!(finite[0].death_index, Some(2));
    }

    #[test]
    fn tie_descent_yields_no_zero_pair() {
        let d = line_diagram(&[5.0, 1.0, 1.0, 0.0]).unwrap();
        assert_eq!(d.len(), 1);
        check_structure(&[5.0, 1.0, 1.0, 0.0], Topology::Line, &d).unwrap();
    }

    #[test]
    fn errors() {
        assert_eq!(line_diagram(&[]), Err(PersistenceError::EmptySample));
        assert_eq!(
            line_diagram(&[0.0, 1.0, f64::INFINITY])
                .unwrap_err()
                .to_string(),
            "non-finite value at index 2"
        );
        let reducer = LineReducer::new();
        assert!(reducer.finish(&mut Vec::new()).is_err());
    }

    #[test]
    fn streaming_reports_index_of_bad_value() {
        let mut reducer = LineReducer::new();
        let mut sink = Vec::new();
        reducer.push(1.0, &mut sink).unwrap();
        assert_eq!(
            reducer.push(f64::NAN, &mut sink),
            Err(PersistenceError::NonFinite { index: 1 })
        );
        assert_eq!(reducer.len(), 1);
    }
}
