//! Split-and-reduce heuristic for the line case.
//!
//! Disjoint segments are reduced independently to 2-phase remnants (interior
//! segments cannot apply the end-of-segment rules), the remnants are
//! concatenated, optionally re-split at each remnant's lowest point and
//! reduced again, and the sequential reducer finishes the job. The answer is
//! always the same as [`line_diagram`](crate::line::line_diagram); only the
//! amount of sequential work changes. An already narrowing input leaves the
//! parallel phase with nothing to do.

use rayon::prelude::*;

use crate::error::Result;
use crate::line::{DiagramSink, Emit};
use crate::reducer::StackReducer;
use crate::types::{validate_values, Diagram, OrderedValue, PersistencePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelOptions {
    /// Number of segments in the first split; at least 1.
    pub segments: usize,
    /// How many times remnants are re-split at their minima before the
    /// sequential finish.
    pub resplit_rounds: usize,
}

impl ParallelOptions {
    pub fn new(segments: usize) -> Self {
        Self {
            segments,
            resplit_rounds: 1,
        }
    }
}

/// Reduces one segment to its 2-phase remnant, returning the remnant and the
/// pairs the simplifications found.
pub fn reduce_segment(values: &[OrderedValue]) -> (Vec<OrderedValue>, Vec<PersistencePair>) {
    let mut pairs = Vec::new();
    let mut stack = StackReducer::unbounded();
    let mut sink = Emit(&mut pairs);
    for &v in values {
        stack.push(v, &mut sink);
    }
    (stack.into_items(), pairs)
}

/// Position of the phase change (the lowest element) of a 2-phase remnant.
fn turning_point(remnant: &[OrderedValue]) -> usize {
    remnant
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map_or(0, |(i, _)| i)
}

/// Reduces each `bounds` window of `sequence`, keeping the remnants
/// separate and appending the found pairs in segment order.
fn reduce_pieces(
    sequence: &[OrderedValue],
    bounds: &[usize],
    pairs: &mut Vec<PersistencePair>,
) -> Vec<Vec<OrderedValue>> {
    let reduced: Vec<_> = bounds
        .par_windows(2)
        .map(|w| reduce_segment(&sequence[w[0]..w[1]]))
        .collect();
    reduced
        .into_iter()
        .map(|(rest, found)| {
            pairs.extend(found);
            rest
        })
        .collect()
}

/// Runs the heuristic and returns the pairs found in the parallel phase, the
/// pairs found by the sequential finish, and the remnant length handed to it.
pub fn parallel_line_persistence(
    values: &[f64],
    options: ParallelOptions,
) -> Result<(Vec<PersistencePair>, Vec<PersistencePair>, usize)> {
    validate_values(values)?;
    assert!(options.segments >= 1, "segments must be positive");
    let n = values.len();
    let segments = options.segments.min(n);
    let mut sequence: Vec<OrderedValue> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| OrderedValue::new(v, i))
        .collect();
    let mut parallel_pairs = Vec::new();

    if segments > 1 {
        let bounds: Vec<usize> = (0..=segments).map(|k| k * n / segments).collect();
        let mut pieces = reduce_pieces(&sequence, &bounds, &mut parallel_pairs);
        for _ in 0..options.resplit_rounds {
            let before = sequence.len();
            sequence = pieces.concat();
            if sequence.len() == before {
                break;
            }
            let mut cuts = vec![0];
            let mut offset = 0;
            for piece in &pieces {
                cuts.push(offset + turning_point(piece));
                offset += piece.len();
            }
            cuts.push(sequence.len());
            cuts.dedup();
            pieces = reduce_pieces(&sequence, &cuts, &mut parallel_pairs);
        }
        sequence = pieces.concat();
    }

    let remnant_len = sequence.len();
    let mut sequential_pairs = Vec::new();
    let mut stack = StackReducer::bounded();
    let mut sink = Emit(&mut sequential_pairs);
    for v in sequence {
        stack.push(v, &mut sink);
    }
    let min = stack.finish(&mut sink);
    sequential_pairs.push(PersistencePair::essential(min));
    Ok((parallel_pairs, sequential_pairs, remnant_len))
}

/// Same diagram as [`line_diagram`](crate::line::line_diagram), computed with
/// the split-and-reduce heuristic.
pub fn parallel_line_diagram(values: &[f64], segments: usize) -> Result<Diagram> {
    parallel_line_diagram_with(values, ParallelOptions::new(segments))
}

pub fn parallel_line_diagram_with(values: &[f64], options: ParallelOptions) -> Result<Diagram> {
    let (mut pairs, sequential, _) = parallel_line_persistence(values, options)?;
    pairs.extend(sequential);
    Ok(Diagram::from_pairs(pairs))
}

/// Sends the heuristic's pairs to `sink`.
pub fn parallel_line_into<S: DiagramSink + ?Sized>(
    values: &[f64],
    options: ParallelOptions,
    sink: &mut S,
) -> Result<()> {
    let (pairs, sequential, _) = parallel_line_persistence(values, options)?;
    pairs
        .into_iter()
        .chain(sequential)
        .for_each(|p| sink.emit(p));
    Ok(())
}
