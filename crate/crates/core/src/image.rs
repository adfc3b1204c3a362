//! Image persistence for a pair of functions `f <= g` on a segment.
//!
//! Components of the image are born at local minima of `g` and merged at
//! local maxima of `f`. Two rewrites preserve the image filtration and each
//! deletes one critical point:
//!
//! * between two consecutive minima of `g`, if the largest value of `f` on the
//!   stretch does not exceed the larger minimum, that minimum goes (`g` can be
//!   lowered there without changing anything);
//! * between two consecutive maxima of `f`, if the smallest value of `g` on the
//!   stretch is at least the smaller maximum, that maximum goes (`f` can be
//!   raised there; whatever it separated lies in the cokernel).
//!
//! Applied until neither fires, the critical points of `g` (minima) and `f`
//! (maxima) alternate and each maximum exceeds its neighboring minima: the
//! list is the extremum sequence of a single function, whose ordinary
//! persistence is the image persistence.

use std::cmp::Ordering;

use crate::error::{PersistenceError, Result};
use crate::reducer::{PairSink, StackReducer};
use crate::types::{validate_values, Diagram, OrderedValue, PersistencePair};

/// Which function a critical point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EventKind {
    /// Local maximum of `f`.
    FMax,
    /// Local minimum of `g`.
    GMin,
}

/// A critical point of `f` or `g`.
///
/// Events order by `(value, index, kind)` with `FMax` before `GMin`: at an
/// exact tie the merge in `f` is seen before the birth in `g`.
#[derive(Debug, Clone, Copy)]
pub struct CriticalEvent {
    pub kind: EventKind,
    pub value: f64,
    pub index: usize,
}

impl CriticalEvent {
    fn key(&self) -> OrderedValue {
        OrderedValue::new(self.value, self.index)
    }
}

impl PartialEq for CriticalEvent {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for CriticalEvent {}

impl PartialOrd for CriticalEvent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CriticalEvent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key()
            .cmp(&other.key())
            .then(self.kind.cmp(&other.kind))
    }
}

/// Two sampled functions on the same segment with `f <= g` pointwise.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionPair {
    f: Vec<f64>,
    g: Vec<f64>,
}

impl FunctionPair {
    pub fn new(f: Vec<f64>, g: Vec<f64>) -> Result<Self> {
        validate_pair(&f, &g)?;
        Ok(Self { f, g })
    }

    pub fn f(&self) -> &[f64] {
        &self.f
    }

    pub fn g(&self) -> &[f64] {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    fn g_event(&self, i: usize) -> CriticalEvent {
        CriticalEvent {
            kind: EventKind::GMin,
            value: self.g[i],
            index: i,
        }
    }

    fn f_event(&self, i: usize) -> CriticalEvent {
        CriticalEvent {
            kind: EventKind::FMax,
            value: self.f[i],
            index: i,
        }
    }

    /// Whether `i` is a strict local minimum of `g` under the tie-breaking
    /// order (a segment end counts when its one neighbor is larger).
    pub fn is_g_min(&self, i: usize) -> bool {
        let g = &self.g;
        (i == 0 || g[i - 1] > g[i]) && (i + 1 == g.len() || g[i] <= g[i + 1])
    }

    /// Whether `i` is an interior strict local maximum of `f`. Maxima at the
    /// ends of the segment separate nothing and are not reported.
    pub fn is_f_max(&self, i: usize) -> bool {
        let f = &self.f;
        i > 0 && i + 1 < f.len() && f[i - 1] <= f[i] && f[i] > f[i + 1]
    }

    /// Critical points in position order; a maximum of `f` precedes a minimum
    /// of `g` at the same position.
    pub fn events(&self) -> impl Iterator<Item = CriticalEvent> + '_ {
        (0..self.len()).flat_map(move |i| {
            let f_max = self.is_f_max(i).then(|| self.f_event(i));
            let g_min = self.is_g_min(i).then(|| self.g_event(i));
            f_max.into_iter().chain(g_min)
        })
    }
}

fn validate_pair(f: &[f64], g: &[f64]) -> Result<()> {
    if f.len() != g.len() {
        return Err(PersistenceError::LengthMismatch {
            f_len: f.len(),
            g_len: g.len(),
        });
    }
    validate_values(f)?;
    validate_values(g)?;
    match f.iter().zip(g).position(|(a, b)| a > b) {
        Some(index) => Err(PersistenceError::DominanceViolated { index }),
        None => Ok(()),
    }
}

/// Outcome of one rewrite step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// The critical point at this index was deleted.
    Removed(usize),
    /// Both critical points survive.
    Kept,
}

/// Decides the rewrite between two minima of `g` separated by `f`-maxima
/// whose largest is `f_max` (`None` when there is none). Returns the minimum
/// to delete.
fn minima_rule(
    left: CriticalEvent,
    right: CriticalEvent,
    f_max: Option<CriticalEvent>,
) -> Option<CriticalEvent> {
    let larger = left.max(right);
    match f_max {
        Some(m) if m > larger => None,
        _ => Some(larger),
    }
}

/// Decides the rewrite between two maxima of `f` separated by `g`-minima
/// whose smallest is `g_min` (`None` when there is none). Returns the maximum
/// to delete.
fn maxima_rule(
    left: CriticalEvent,
    right: CriticalEvent,
    g_min: Option<CriticalEvent>,
) -> Option<CriticalEvent> {
    let smaller = left.min(right);
    match g_min {
        Some(m) if m < smaller => None,
        _ => Some(smaller),
    }
}

/// The between-minima rewrite for consecutive local minima `t1 < t2` of `g`.
///
/// # Panics
/// If `t1 >= t2` or they are not consecutive local minima of `g`.
pub fn reduce_between_minima(pair: &FunctionPair, t1: usize, t2: usize) -> Reduction {
    assert!(t1 < t2 && t2 < pair.len(), "need t1 < t2 within the pair");
    assert!(
        pair.is_g_min(t1) && pair.is_g_min(t2),
        "t1 and t2 must be local minima of g"
    );
    assert!(
        (t1 + 1..t2).all(|i| !pair.is_g_min(i)),
        "t1 and t2 must be consecutive minima of g"
    );
    let f_max = (t1..=t2).map(|i| pair.f_event(i)).max();
    match minima_rule(pair.g_event(t1), pair.g_event(t2), f_max) {
        Some(e) => Reduction::Removed(e.index),
        None => Reduction::Kept,
    }
}

/// The between-maxima rewrite for consecutive interior local maxima
/// `t1 < t2` of `f`.
///
/// # Panics
/// If `t1 >= t2` or they are not consecutive local maxima of `f`.
pub fn reduce_between_maxima(pair: &FunctionPair, t1: usize, t2: usize) -> Reduction {
    assert!(t1 < t2 && t2 < pair.len(), "need t1 < t2 within the pair");
    assert!(
        pair.is_f_max(t1) && pair.is_f_max(t2),
        "t1 and t2 must be local maxima of f"
    );
    assert!(
        (t1 + 1..t2).all(|i| !pair.is_f_max(i)),
        "t1 and t2 must be consecutive maxima of f"
    );
    let g_min = (t1..=t2).map(|i| pair.g_event(i)).min();
    match maxima_rule(pair.f_event(t1), pair.f_event(t2), g_min) {
        Some(e) => Reduction::Removed(e.index),
        None => Reduction::Kept,
    }
}

/// Applies both rewrites exhaustively in one left-to-right pass.
///
/// The list is kept alternating (`GMin`, `FMax`, `GMin`, ...) and starting
/// with a minimum; every event is pushed and deleted at most once. Maxima of
/// `f` before the first or after the last surviving minimum of `g` join a
/// component that has no image class yet and are dropped.
pub fn reduce_events<I>(events: I) -> Vec<CriticalEvent>
where
    I: IntoIterator<Item = CriticalEvent>,
{
    use EventKind::{FMax, GMin};

    let mut list: Vec<CriticalEvent> = Vec::new();
    for e in events {
        loop {
            let n = list.len();
            let Some(&top) = list.last() else {
                if e.kind == GMin {
                    list.push(e);
                }
                break;
            };
            match (e.kind, top.kind) {
                (GMin, GMin) | (FMax, FMax) => {
                    let doomed = match e.kind {
                        GMin => minima_rule(top, e, None),
                        FMax => maxima_rule(top, e, None),
                    }
                    .expect("adjacent events of one kind always reduce");
                    if doomed == e {
                        break;
                    }
                    list.pop();
                }
                (GMin, FMax) => {
                    let left = list[n - 2];
                    match minima_rule(left, e, Some(top)) {
                        None => {
                            list.push(e);
                            break;
                        }
                        Some(doomed) if doomed == e => break,
                        Some(_) => {
                            // `left` goes; the maxima around it become adjacent.
                            list.remove(n - 2);
                            if n >= 4 {
                                let lower = list[n - 3].min(list[n - 2]);
                                let at = if lower == list[n - 3] { n - 3 } else { n - 2 };
                                list.remove(at);
                            } else {
                                list.clear();
                            }
                        }
                    }
                }
                (FMax, GMin) => {
                    if n < 2 {
                        list.push(e);
                        break;
                    }
                    let left = list[n - 2];
                    match maxima_rule(left, e, Some(top)) {
                        None => {
                            list.push(e);
                            break;
                        }
                        Some(doomed) if doomed == e => break,
                        Some(_) => {
                            // `left` goes; the minima around it become adjacent.
                            list.remove(n - 2);
                            let higher = list[n - 3].max(list[n - 2]);
                            let at = if higher == list[n - 3] { n - 3 } else { n - 2 };
                            list.remove(at);
                        }
                    }
                }
            }
        }
    }
    if list.last().is_some_and(|e| e.kind == FMax) {
        list.pop();
    }
    list
}

/// Checks the shape of a fully reduced list: it alternates between kinds,
/// starts and ends with a `g`-minimum, and every `f`-maximum exceeds both
/// neighbors.
pub fn is_interleaved(list: &[CriticalEvent]) -> bool {
    let alternates = list.iter().enumerate().all(|(i, e)| {
        e.kind
            == if i % 2 == 0 {
                EventKind::GMin
            } else {
                EventKind::FMax
            }
    });
    let ends_on_min = list.len() % 2 == 1;
    let peaks = list.windows(2).all(|w| match (w[0].kind, w[1].kind) {
        (EventKind::GMin, EventKind::FMax) => w[0] < w[1],
        _ => w[1] < w[0],
    });
    alternates && ends_on_min && peaks
}

struct ImageEmit<'a>(&'a mut Vec<PersistencePair>);

impl PairSink<CriticalEvent> for ImageEmit<'_> {
    fn pair(&mut self, birth: CriticalEvent, death: CriticalEvent) {
        if birth.value != death.value {
            self.0
                .push(PersistencePair::finite(birth.key(), death.key()));
        }
    }
}

/// Image persistence of `H0(g <= t) -> H0(f <= t)` for the reduced pair.
///
/// Births carry indices of `g`'s minima, deaths indices of `f`'s maxima.
pub fn image_persistence(pair: &FunctionPair) -> Diagram {
    let list = reduce_events(pair.events());
    debug_assert!(is_interleaved(&list));
    let mut pairs = Vec::new();
    let mut stack = StackReducer::bounded();
    let mut sink = ImageEmit(&mut pairs);
    for e in list {
        stack.push(e, &mut sink);
    }
    let min = stack.finish(&mut sink);
    pairs.push(PersistencePair::essential(min.key()));
    Diagram::from_pairs(pairs)
}

/// Image persistence diagram for `f <= g` given as sample arrays.
pub fn image_diagram(f: &[f64], g: &[f64]) -> Result<Diagram> {
    validate_pair(f, g)?;
    let pair = FunctionPair {
        f: f.to_vec(),
        g: g.to_vec(),
    };
    Ok(image_persistence(&pair))
}
