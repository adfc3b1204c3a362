//! Linear-time 0-dimensional sublevel-set persistence for piecewise-linear
//! functions sampled on a segment or a circle, and image persistence for
//! pairs `f <= g` on a segment.
//!
//! The functions never build a filtered complex. Samples are pushed one by
//! one onto a stack that is kept free of a few small patterns; whenever a
//! `1324` (or `4231`) window appears, its two inner elements form a
//! persistence pair and leave the stack. Each sample is pushed once and
//! popped at most once, so the whole pass is linear.
//!
//! ```
//! use pl_persistence::{line_diagram, circle_diagram};
//!
//! let d = line_diagram(&[0.0, 2.0, 1.0, 3.0]).unwrap();
//! assert_eq!(d.to_csv(), "1,2,2,1\n0,inf,0,\n");
//!
//! let d = circle_diagram(&[0.0, 9.0, 2.0, 7.0, 4.0, 5.0]).unwrap();
//! assert_eq!(d.finite_pairs().count(), 2);
//! ```
//!
//! [`oracle`] holds independent sort + union-find implementations used to
//! cross-check every reducer.

pub mod bench;
pub mod circle;
pub mod error;
pub mod image;
pub mod io;
pub mod line;
pub mod oracle;
pub mod parallel;
pub mod reducer;
pub mod types;

pub use circle::circle_diagram;
pub use error::{PersistenceError, Result};
pub use image::{image_diagram, FunctionPair};
pub use line::{line_diagram, DiagramSink, LineReducer, PairTally};
pub use parallel::parallel_line_diagram;
pub use types::{
    compare, diagram_equal, CompareMode, Diagram, FunctionSample, OrderedValue, PersistencePair,
    Topology,
};
