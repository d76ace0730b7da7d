//! Exact-arithmetic toolkit for majorization and entanglement catalysis
//! questions on finite probability (Schmidt) vectors.
//!
//! Everything is decided with arbitrary-precision rational arithmetic, so
//! majorization comparisons, catalysis predicates, and region boundaries are
//! exact rather than floating-point approximations. The crate is `no_std`
//! (with `alloc`); IO and file formats live in the companion `catalyxis`
//! binary crate.
//!
//! The main pieces:
//!
//! - [`vector`]: validated sorted probability vectors, tensor products,
//!   partial sums, majorization comparison, the violation set, the
//!   majorization distance and the maximum conversion probability.
//! - [`bounds`]: closed-form necessary conditions a catalyst must satisfy —
//!   entanglement ratio bounds, the qubit window, the dimension lower bound,
//!   and the symmetric-polynomial comparison bounds.
//! - [`metrics`]: catalyzed transformation-quality curves over a qubit
//!   catalyst parameter.
//! - [`search`]: exhaustive catalyst discovery — qubit parameter scans with
//!   exact boundary refinement and simplex grid search.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod metrics;
pub mod rational;
pub mod search;
pub mod vector;

pub use bounds::{
    check_candidate, corollary_excludes, dimension_lower_bound, elementary_symmetric, prefilter,
    qubit_window, sanders_bounds, theorem1_bounds, BoundsError, CandidateVerdict, DimensionBound,
    PrefilterReport, PrefilterVerdict, QubitWindow, SandersBounds, Theorem1Bounds,
};
pub use metrics::{curve, delta_catalyzed, is_catalyst, pmax_catalyzed, CurveSample, TransformCurve};
pub use rational::{parse_rational, to_decimal, to_f64, Extended, ParseRationalError, Rational};
pub use search::{
    empirical_min_dimension, grid_search, scan_qubit_regions, GridSearchResult, Region,
    RegionReport, SearchError, DEFAULT_CANDIDATE_LIMIT,
};
pub use vector::{
    compare, majorization_distance, pmax, violation_set, MajorizationOrder, ProbVec, ProbVecError,
    ViolationSet,
};
