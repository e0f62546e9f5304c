//! Exact computation of rectilinear crossing numbers and related
//! combinatorial-geometry quantities for point sets in the plane.
//!
//! Everything runs on the field Q(sqrt 3): point coordinates, orientation
//! predicates, circular sequences, and the replacing-by-clusters
//! construction are all evaluated exactly, so every count produced here is
//! a certificate, not an approximation.
//!
//! The main entry points are:
//!
//! * [`crossings`] — two independent counters for the number of convex
//!   quadrilaterals (= crossings) of a point set,
//! * [`sequence`] — circular sequences, (<=k)-set counts, and the
//!   transposition digraphs used by the lower-bound machinery,
//! * [`bounds`] — closed-form bound calculators in exact rationals,
//! * [`construction`] — the replacing-by-clusters engine: validation, the
//!   exact crossing-count formula, and coordinate synthesis,
//! * [`doubling`] — point doubling, the iteration ledger, and bounds on the
//!   rectilinear crossing constant,
//! * [`catalog`] — embedded record point sets and construction recipes with
//!   integrity verification.

pub mod bounds;
pub mod catalog;
pub mod construction;
pub mod crossings;
pub mod digraph;
pub mod doubling;
pub mod geom;
pub mod scalar;
pub mod sequence;

pub use geom::{Point, PointSet};
pub use scalar::{Rat, Scalar};
