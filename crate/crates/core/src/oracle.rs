//! Reference implementations: sort the vertices, sweep them in increasing
//! order and track components with a union-find structure.
//!
//! Nothing here shares code with the stack reducers. The sweep costs
//! `O(n log n)` for the sort plus near-linear union-find work, which also
//! makes it the benchmark baseline.

use std::cmp::Ordering;

use crate::error::{PersistenceError, Result};
use crate::line::DiagramSink;
use crate::types::{validate_values, Diagram, OrderedValue, PersistencePair};

const INACTIVE: u32 = u32::MAX;

/// Union-find over vertex ids with union by rank and path halving. Each root
/// records the vertex that gave birth to its component, and unions keep the
/// elder birth on the surviving root.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<u32>,
    rank: Vec<u8>,
    birth: Vec<u32>,
}

impl DisjointSet {
    /// All `n` vertices start inactive.
    pub fn new(n: usize) -> Self {
        assert!(n < INACTIVE as usize, "too many vertices for the oracle");
        Self {
            parent: vec![INACTIVE; n],
            rank: vec![0; n],
            birth: vec![INACTIVE; n],
        }
    }

    pub fn is_active(&self, v: usize) -> bool {
        self.parent[v] != INACTIVE
    }

    /// Activates `v` as a singleton component with the given birth record
    /// (`None` for a component without a birth yet).
    pub fn activate(&mut self, v: usize, birth: Option<usize>) {
        self.parent[v] = v as u32;
        self.birth[v] = birth.map_or(INACTIVE, |b| b as u32);
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let grand = self.parent[self.parent[v] as usize];
            self.parent[v] = grand;
            v = grand as usize;
        }
        v
    }

    pub fn birth(&mut self, v: usize) -> Option<usize> {
        let root = self.find(v);
        match self.birth[root] {
            INACTIVE => None,
            b => Some(b as usize),
        }
    }

    pub fn set_birth(&mut self, v: usize, birth: usize) {
        let root = self.find(v);
        self.birth[root] = birth as u32;
    }

    /// Joins the components of `a` and `b`. The root keeps whichever birth
    /// `elder` prefers; returns the other (younger) birth when both sides
    /// had one, `None` otherwise or when `a` and `b` were already joined.
    pub fn union_by<F>(&mut self, a: usize, b: usize, mut elder: F) -> Option<usize>
    where
        F: FnMut(usize, usize) -> Ordering,
    {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (ba, bb) = (self.birth[ra], self.birth[rb]);
        let (kept, dead) = match (ba, bb) {
            (INACTIVE, _) => (bb, None),
            (_, INACTIVE) => (ba, None),
            _ if elder(ba as usize, bb as usize) == Ordering::Less => (ba, Some(bb as usize)),
            _ => (bb, Some(ba as usize)),
        };
        let (root, child) = if self.rank[ra] < self.rank[rb] {
            (rb, ra)
        } else {
            (ra, rb)
        };
        if self.rank[root] == self.rank[child] {
            self.rank[root] += 1;
        }
        self.parent[child] = root as u32;
        self.birth[root] = kept;
        dead
    }
}

/// Maps a finite value to an integer with the same order; `-0.0` and `0.0`
/// share a key.
fn order_key(v: f64) -> u64 {
    let bits = (v + 0.0).to_bits();
    if bits >> 63 == 1 {
        !bits
    } else {
        bits | 1 << 63
    }
}

fn sorted_vertices(values: &[f64]) -> Vec<u32> {
    // Sorting contiguous (key, index) records keeps equal values in index
    // order and avoids chasing indices during comparisons.
    let mut records: Vec<(u64, u32)> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| (order_key(v), i as u32))
        .collect();
    records.sort_unstable();
    records.iter().map(|&(_, i)| i).collect()
}

fn lower_star_sweep<S, N>(values: &[f64], neighbors: N, sink: &mut S) -> usize
where
    S: DiagramSink + ?Sized,
    N: Fn(usize) -> [Option<usize>; 2],
{
    let key = |i: usize| OrderedValue::new(values[i], i);
    let order = sorted_vertices(values);
    let mut set = DisjointSet::new(values.len());
    for &v in &order {
        let v = v as usize;
        set.activate(v, Some(v));
        for u in neighbors(v).into_iter().flatten() {
            if !set.is_active(u) {
                continue;
            }
            if let Some(dead) = set.union_by(u, v, |x, y| key(x).cmp(&key(y))) {
                if values[dead] != values[v] {
                    sink.emit(PersistencePair::finite(key(dead), key(v)));
                }
            }
        }
    }
    order[0] as usize
}

/// Runs the union-find sweep on a segment, reporting pairs to `sink`.
pub fn oracle_line_persistence<S: DiagramSink + ?Sized>(
    values: &[f64],
    sink: &mut S,
) -> Result<()> {
    validate_values(values)?;
    let n = values.len();
    let first = lower_star_sweep(
        values,
        |i| [i.checked_sub(1), (i + 1 < n).then_some(i + 1)],
        sink,
    );
    sink.emit(PersistencePair::essential(OrderedValue::new(
        values[first],
        first,
    )));
    Ok(())
}

/// Reference diagram for a function on a segment.
pub fn oracle_line(values: &[f64]) -> Result<Diagram> {
    let mut pairs = Vec::new();
    oracle_line_persistence(values, &mut pairs)?;
    Ok(Diagram::from_pairs(pairs))
}

/// Reference diagram for a function on a circle.
pub fn oracle_circle(values: &[f64]) -> Result<Diagram> {
    validate_values(values)?;
    let n = values.len();
    let mut pairs = Vec::new();
    let first = lower_star_sweep(
        values,
        |i| {
            if n == 1 {
                [None, None]
            } else {
                [Some((i + n - 1) % n), Some((i + 1) % n)]
            }
        },
        &mut pairs,
    );
    pairs.push(PersistencePair::essential(OrderedValue::new(
        values[first],
        first,
    )));
    Ok(Diagram::from_pairs(pairs))
}

/// Reference image-persistence diagram for `f <= g` on a segment.
///
/// Sweeps the activations of `f` (vertex enters the `f`-sublevel set) and of
/// `g` (vertex enters the `g`-sublevel set, marking its `f`-component as
/// carrying an image class) in one increasing order, `f` before `g` on exact
/// ties. A component's birth is the first `g`-mark it receives; merging two
/// marked components kills the younger mark.
pub fn oracle_image(f: &[f64], g: &[f64]) -> Result<Diagram> {
    validate_values(f)?;
    validate_values(g)?;
    if f.len() != g.len() {
        return Err(PersistenceError::LengthMismatch {
            f_len: f.len(),
            g_len: g.len(),
        });
    }
    if let Some(index) = (0..f.len()).find(|&i| f[i] > g[i]) {
        return Err(PersistenceError::DominanceViolated { index });
    }
    let n = f.len();

    #[derive(Clone, Copy)]
    enum Event {
        Activate(usize),
        Mark(usize),
    }
    let key = |e: &Event| match *e {
        Event::Activate(i) => (f[i], i, 0u8),
        Event::Mark(i) => (g[i], i, 1u8),
    };
    let mut events: Vec<Event> = (0..n)
        .map(Event::Activate)
        .chain((0..n).map(Event::Mark))
        .collect();
    events.sort_by(|a, b| key(a).partial_cmp(&key(b)).expect("finite values"));

    let g_key = |i: usize| OrderedValue::new(g[i], i);
    let mut set = DisjointSet::new(n);
    let mut pairs = Vec::new();
    let mut first_mark = None;
    for event in events {
        match event {
            Event::Activate(v) => {
                set.activate(v, None);
                for u in [v.checked_sub(1), (v + 1 < n).then_some(v + 1)]
                    .into_iter()
                    .flatten()
                {
                    if !set.is_active(u) {
                        continue;
                    }
                    if let Some(dead) = set.union_by(u, v, |x, y| g_key(x).cmp(&g_key(y))) {
                        if g[dead] != f[v] {
                            pairs.push(PersistencePair::finite(
                                g_key(dead),
                                OrderedValue::new(f[v], v),
                            ));
                        }
                    }
                }
            }
            Event::Mark(v) => {
                first_mark.get_or_insert(v);
                if set.birth(v).is_none() {
                    set.set_birth(v, v);
                }
            }
        }
    }
    let first = first_mark.expect("nonempty input");
    pairs.push(PersistencePair::essential(g_key(first)));
    Ok(Diagram::from_pairs(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(d: Diagram) -> Vec<(f64, f64)> {
        d.pairs()
            .iter()
            .map(|p| (p.birth_value, p.death_value))
            .collect()
    }

    const INF: f64 = f64::INFINITY;

    #[test]
    fn line_examples() {
        assert_eq!(
            rows(oracle_line(&[0.0, 2.0, 1.0, 3.0]).unwrap()),
            vec![(1.0, 2.0), (0.0, INF)]
        );
        assert_eq!(rows(oracle_line(&[7.0]).unwrap()), vec![(7.0, INF)]);
        assert_eq!(rows(oracle_line(&[2.0, 1.0]).unwrap()), vec![(1.0, INF)]);
        let d = oracle_line(&[0.0, 2.0, 1.0, 3.0]).unwrap();
        assert_eq!(d.pairs()[0].birth_index, 2);
        assert_eq!(d.pairs()[0].death_index, Some(1));
    }

    #[test]
    fn circle_examples() {
        assert_eq!(
            rows(oracle_circle(&[0.0, 3.0, 1.0, 2.0]).unwrap()),
            vec![(1.0, 2.0), (0.0, INF)]
        );
        assert_eq!(rows(oracle_circle(&[5.0]).unwrap()), vec![(5.0, INF)]);
        assert_eq!(
            rows(oracle_circle(&[1.0, 2.0, 3.0, 4.0]).unwrap()),
            vec![(1.0, INF)]
        );
        assert_eq!(rows(oracle_circle(&[4.0, 4.0]).unwrap()), vec![(4.0, INF)]);
    }

    #[test]
    fn image_examples() {
        let d = oracle_image(&[0.0, 3.0, 1.0, 2.0, 0.0], &[0.0, 5.0, 1.0, 4.0, 2.0]).unwrap();
        assert_eq!(rows(d.clone()), vec![(1.0, 3.0), (0.0, INF)]);
        assert_eq!(d.pairs()[0].birth_index, 2);
        assert_eq!(d.pairs()[0].death_index, Some(1));
        assert_eq!(
            rows(oracle_image(&[0.0; 3], &[9.0; 3]).unwrap()),
            vec![(9.0, INF)]
        );
        let f = [3.0, 1.0, 4.0, 1.5, 2.0, 0.0, 5.0];
        assert_eq!(oracle_image(&f, &f).unwrap(), oracle_line(&f).unwrap());
    }

    #[test]
    fn image_errors() {
        assert_eq!(
            oracle_image(&[0.0], &[0.0, 1.0]),
            Err(PersistenceError::LengthMismatch { f_len: 1, g_len: 2 })
        );
        assert_eq!(
            oracle_image(&[0.0, 2.0], &[0.0, 1.0]),
            Err(PersistenceError::DominanceViolated { index: 1 })
        );
    }

    #[test]
    fn ascending_input_gives_one_pair() {
        let values: Vec<f64> = (0..50).map(f64::from).collect();
        assert_eq!(oracle_line(&values).unwrap().len(), 1);
    }

    #[test]
    fn repeated_runs_are_identical() {
        let values = [2.0, 2.0, 1.0, 3.0, 1.0, 1.0, 2.0, 0.0, 2.0];
        let first = oracle_line(&values).unwrap().to_csv();
        for _ in 0..5 {
            assert_eq!(oracle_line(&values).unwrap().to_csv(), first);
        }
    }
}
