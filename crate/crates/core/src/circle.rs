//! Persistence of a sampled function on a circle.
//!
//! The cycle is cut at its global minimum and reduced like a segment. With
//! that cut the reduced stack is narrowing and the wrap-around neighbor of
//! its top is the global minimum itself, so closing the cycle only drops a
//! trailing minimum and then pairs off terminal `(min, max)` couples until the
//! global minimum and global maximum remain.

use crate::error::Result;
use crate::line::{DiagramSink, Emit};
use crate::reducer::{PairSink, StackReducer};
use crate::types::{validate_values, Diagram, OrderedValue, PersistencePair};

/// Index of the smallest sample under the tie-breaking order.
fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v < values[best] {
            best = i;
        }
    }
    best
}

/// First pass of the circle reduction: the reduced stack of the cycle read
/// from its global minimum. Pairs found on the way go to `sink`.
pub fn cut_and_reduce<S: DiagramSink + ?Sized>(
    values: &[f64],
    sink: &mut S,
) -> StackReducer<OrderedValue> {
    let start = argmin(values);
    let mut stack = StackReducer::bounded();
    let mut emit = Emit(sink);
    for i in (start..values.len()).chain(0..start) {
        stack.push(OrderedValue::new(values[i], i), &mut emit);
    }
    stack
}

/// Reconnects the two ends of a stack produced by [`cut_and_reduce`],
/// simplifying across the junction. Returns the final global minimum and,
/// when the cycle is not constant-length-one, the global maximum.
pub fn close_cycle<S: PairSink<OrderedValue>>(
    stack: StackReducer<OrderedValue>,
    sink: &mut S,
) -> (OrderedValue, Option<OrderedValue>) {
    let mut items = stack.into_items();
    assert!(!items.is_empty(), "close_cycle on an empty stack");
    // A trailing minimum lies between its maximum and the global minimum:
    // a monotone middle across the junction.
    if items.len() >= 3 && items.len() % 2 == 1 {
        items.pop();
    }
    while items.len() > 2 {
        let max = items.pop().unwrap();
        let min = items.pop().unwrap();
        sink.pair(min, max);
    }
    (items[0], items.get(1).copied())
}

/// 0-dimensional sublevel-set persistence diagram of the piecewise-linear
/// function on a circle through the samples `values` (the last sample is
/// adjacent to the first).
pub fn circle_diagram(values: &[f64]) -> Result<Diagram> {
    validate_values(values)?;
    Ok(circle_diagram_unchecked(values))
}

pub(crate) fn circle_diagram_unchecked(values: &[f64]) -> Diagram {
    let mut pairs = Vec::new();
    let stack = cut_and_reduce(values, &mut pairs);
    let (min, _) = close_cycle(stack, &mut Emit(&mut pairs));
    pairs.push(PersistencePair::essential(min));
    Diagram::from_pairs(pairs)
}
