//! The pattern-reducing stack shared by the line, circle, segment and image
//! reducers.
//!
//! Values are appended one at a time. After each append the stack holds an
//! alternating sequence of local minima and maxima containing no monotone
//! triple (`123`, `321`) and no `1324` / `4231` window. In bounded mode a
//! virtual `+inf` sits below the bottom, which additionally forbids a leading
//! descent (`21`) and a leading `231`: the stack is then narrowing (minima
//! increasing, maxima decreasing) and starts with an ascent.
//!
//! Every `1324` / `4231` simplification reports its inner two elements to a
//! [`PairSink`] as `(birth, death)`, the minimum first.

/// Receives `(birth, death)` pairs as the reducer discovers them.
pub trait PairSink<T> {
    fn pair(&mut self, birth: T, death: T);
}

impl<T, F: FnMut(T, T)> PairSink<T> for F {
    #[inline]
    fn pair(&mut self, birth: T, death: T) {
        self(birth, death)
    }
}

/// Stack-size accounting, used to check the amortized bound.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub pushes: u64,
    pub pops: u64,
}

#[derive(Debug, Clone)]
pub struct StackReducer<T> {
    stack: Vec<T>,
    bounded: bool,
    counts: OpCounts,
}

impl<T: Ord + Copy> StackReducer<T> {
    /// Reducer for a whole segment: a `+inf` sentinel precedes the first value.
    pub fn bounded() -> Self {
        Self {
            stack: Vec::new(),
            bounded: true,
            counts: OpCounts::default(),
        }
    }

    /// Reducer for an interior piece whose neighbors are unknown; the result is
    /// a 2-phase (expanding then narrowing) sequence.
    pub fn unbounded() -> Self {
        Self {
            stack: Vec::new(),
            bounded: false,
            counts: OpCounts::default(),
        }
    }

    pub fn items(&self) -> &[T] {
        &self.stack
    }

    pub fn into_items(self) -> Vec<T> {
        self.stack
    }

    pub fn len(&self) -> usize {
        self.stack.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stack.is_empty()
    }

    pub fn counts(&self) -> OpCounts {
        self.counts
    }

    #[inline]
    fn pop(&mut self) -> T {
        self.counts.pops += 1;
        self.stack.pop().expect("pop on empty reducer stack")
    }

    /// Appends `v`, simplifying until the stack invariant holds again.
    ///
    /// `v` must be larger than every value already pushed that compares equal
    /// to it in value; callers guarantee this by construction of `T`.
    #[inline]
    pub fn push<S: PairSink<T>>(&mut self, v: T, sink: &mut S) {
        loop {
            let n = self.stack.len();
            if n == 0 {
                break;
            }
            let b = self.stack[n - 1];
            if n == 1 {
                // sentinel, b, v is a 321
                if self.bounded && v < b {
                    self.pop();
                    continue;
                }
                break;
            }
            let a = self.stack[n - 2];
            if (a < b) == (b < v) {
                self.pop();
                continue;
            }
            if n == 2 {
                // sentinel, a, b, v is a 4231
                if self.bounded && v < a {
                    sink.pair(a, b);
                    self.pop();
                    self.pop();
                    continue;
                }
                break;
            }
            let c = self.stack[n - 3];
            if c < b && b < a && a < v {
                // 1324
                sink.pair(b, a);
            } else if v < a && a < b && b < c {
                // 4231
                sink.pair(a, b);
            } else {
                break;
            }
            self.pop();
            self.pop();
        }
        self.counts.pushes += 1;
        self.stack.push(v);
        debug_assert!(self.top_is_reduced());
    }

    /// Appends `v` when it is the immediate successor of the current top in
    /// the order and no stored value lies between them (a repeated sample).
    ///
    /// Equivalent to [`push`](Self::push) under that precondition, without the
    /// pattern checks.
    #[inline]
    pub fn push_successor(&mut self, v: T) {
        let n = self.stack.len();
        if n >= 2 && self.stack[n - 2] < self.stack[n - 1] {
            self.stack[n - 1] = v;
        } else {
            self.counts.pushes += 1;
            self.stack.push(v);
        }
    }

    /// Line teardown: drops a trailing maximum, then pairs off the last two
    /// elements until one remains. Returns that survivor, the global minimum.
    ///
    /// # Panics
    /// If nothing was pushed.
    pub fn finish<S: PairSink<T>>(mut self, sink: &mut S) -> T {
        assert!(self.bounded, "finish requires a bounded reducer");
        assert!(!self.stack.is_empty(), "finish on an empty reducer");
        let n = self.stack.len();
        if n >= 2 && self.stack[n - 2] < self.stack[n - 1] {
            self.pop();
        }
        while self.stack.len() > 1 {
            let min = self.pop();
            let max = self.pop();
            sink.pair(min, max);
        }
        self.stack[0]
    }

    /// Checks the full stack invariant. Linear in the stack size.
    pub fn is_reduced(&self) -> bool {
        is_reduced(&self.stack, self.bounded)
    }

    fn top_is_reduced(&self) -> bool {
        let n = self.stack.len();
        let from = n.saturating_sub(4);
        is_reduced(&self.stack[from..], self.bounded && from == 0)
    }
}

/// True when `items` has no `123`, `321`, `1324` or `4231` window, and, if
/// `bounded`, neither starts with a descent nor with a `231`.
pub fn is_reduced<T: Ord>(items: &[T], bounded: bool) -> bool {
    let monotone = items.windows(3).any(|w| (w[0] < w[1]) == (w[1] < w[2]));
    let crossing = items.windows(4).any(|w| {
        (w[0] < w[2] && w[2] < w[1] && w[1] < w[3]) || (w[3] < w[1] && w[1] < w[2] && w[2] < w[0])
    });
    let bad_start = bounded
        && match items {
            [a, b, ..] if b < a => true,
            [a, b, c, ..] => c < a && a < b,
            _ => false,
        };
    !(monotone || crossing || bad_start)
}

/// True when `items` alternates between extrema, first expanding (maxima
/// increasing, minima decreasing) and then narrowing.
pub fn is_two_phase<T: Ord>(items: &[T]) -> bool {
    if items.windows(3).any(|w| (w[0] < w[1]) == (w[1] < w[2])) {
        return false;
    }
    let mut narrowing = false;
    for w in items.windows(3) {
        // w[0] and w[2] share a role; w[1] is the opposite extremum.
        let is_min_pair = w[0] < w[1];
        let expanding = if is_min_pair {
            w[2] < w[0]
        } else {
            w[0] < w[2]
        };
        if expanding && narrowing {
            return false;
        }
        if !expanding {
            narrowing = true;
        }
    }
    true
}
