//! Exact computational toolkit for the boundary geometry of Hurwitz spaces.
//!
//! The library is organised bottom-up:
//!
//! * [`exact`] — arbitrary-precision integers and rationals, integer
//!   partitions, and fraction-free exact linear algebra (Bareiss);
//! * [`perm`] — permutations of `{1, …, d}` in cycle notation, composition,
//!   conjugation, cycle types, transitivity;
//! * [`monodromy`] — enumeration of monodromy representations of branched
//!   covers of the line up to simultaneous conjugation;
//! * [`poly`] — sparse multivariate polynomials over the integers;
//! * [`formulas`] — classical enumerative formulas (Plücker, de Jonquières,
//!   Riemann–Hurwitz, adjunction, branch counts);
//! * [`curves`] — intersection vectors of one-parameter test families of
//!   admissible covers against the ten boundary divisor classes;
//! * [`matrix`] — the 10 × 10 boundary intersection matrix `M(g, d)`, its
//!   verification, and nonsingularity scans over parameter grids.
//!
//! All arithmetic is exact; no floating point enters any computation
//! (decimal renderings in reports are presentation only).
//!
//! # Example
//!
//! Enumerate the four monodromy representations of a connected degree-3
//! cover of the line with four simple branch points, up to simultaneous
//! conjugation:
//!
//! ```
//! use hurwitz_core::exact::Partition;
//! use hurwitz_core::monodromy::{enumerate_classes, EnumerationOptions, MonodromyProblem};
//!
//! let simple = Partition::new(vec![2, 1])?;
//! let problem = MonodromyProblem::new(3, vec![simple; 4])?;
//! let enumeration = enumerate_classes(&problem, &EnumerationOptions::default())?;
//! assert_eq!(enumeration.count(), 4);
//! # Ok::<(), hurwitz_core::Error>(())
//! ```

pub mod curves;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod matrix;
pub mod monodromy;
pub mod perm;
pub mod poly;

pub use error::{Error, Result};
