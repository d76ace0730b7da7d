//! Validated probability vectors and the exact majorization machinery.
//!
//! A [`ProbVec`] models a Schmidt-coefficient vector: nonnegative rational
//! entries summing to exactly one, kept sorted in non-increasing order.
//! Comparison of two vectors pads the shorter one with zeros, matching the
//! convention that trailing zero Schmidt coefficients are physically vacuous.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Sorted probability vector with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProbVec {
    entries: Vec<Rational>,
}

/// Validation failure when constructing a [`ProbVec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbVecError {
    Empty,
    /// Entry at this (0-based, pre-sort) index is negative.
    NegativeEntry(usize),
    /// Entries do not sum to one; carries the exact deviation `sum - 1`.
    SumNotOne(Rational),
}

impl core::fmt::Display for ProbVecError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ProbVecError::Empty => write!(f, "probability vector must be nonempty"),
            ProbVecError::NegativeEntry(i) => write!(f, "entry {} is negative", i),
            ProbVecError::SumNotOne(dev) => {
                write!(f, "entries sum to 1 + ({}/{})", dev.numer(), dev.denom())
            }
        }
    }
}

impl ProbVec {
    /// Validate and canonicalize: sorts non-increasing, rejects negative
    /// entries and any exact sum other than one.
    pub fn new(raw: Vec<Rational>) -> Result<ProbVec, ProbVecError> {
        if raw.is_empty() {
            return Err(ProbVecError::Empty);
        }
        if let Some(i) = raw.iter().position(|x| x < &Rational::zero()) {
            return Err(ProbVecError::NegativeEntry(i));
        }
        let sum: Rational = raw.iter().sum();
        if !sum.is_one() {
            return Err(ProbVecError::SumNotOne(sum - Rational::one()));
        }
        let mut entries = raw;
        entries.sort_by(|a, b| b.cmp(a));
        Ok(ProbVec { entries })
    }

    /// The maximally entangled spectrum `(1/k, ..., 1/k)`.
    pub fn uniform(k: usize) -> ProbVec {
        assert!(k >= 1);
        let entry = Rational::new(1.into(), (k as i64).into());
        ProbVec {
            entries: vec![entry; k],
        }
    }

    /// Qubit spectrum `(1-t, t)` for `t` in `[0, 1/2]`.
    pub fn qubit(t: &Rational) -> ProbVec {
        assert!(
            t >= &Rational::zero() && t * Rational::from_integer(2.into()) <= Rational::one(),
            "qubit parameter must lie in [0, 1/2]"
        );
        ProbVec {
            entries: vec![Rational::one() - t, t.clone()],
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: length >= 1
    }

    /// Tensor product of spectra: all pairwise products, re-sorted.
    pub fn tensor(&self, other: &ProbVec) -> ProbVec {
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        entries.sort_by(|a, b| b.cmp(a));
        ProbVec { entries }
    }

    /// Partial sums `sum_{i<=l} p_i` for `l = 1..=len`; the last is exactly 1.
    pub fn prefix_sums(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        self.entries
            .iter()
            .map(|x| {
                acc += x;
                acc.clone()
            })
            .collect()
    }
}

/// Four-way outcome of a majorization comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorizationOrder {
    /// `p ≺ q` strictly (p is majorized by q and they differ).
    FirstMajorizedBySecond,
    /// `q ≺ p` strictly.
    SecondMajorizedByFirst,
    /// Identical after zero padding.
    Equal,
    /// Neither majorizes the other.
    Incomparable,
}

/// Partial-sum differences `sum_{i<=l}(p_i - q_i)` over the common
/// zero-padded length.
fn prefix_diffs(p: &ProbVec, q: &ProbVec) -> Vec<Rational> {
    let d = p.len().max(q.len());
    let zero = Rational::zero();
    let mut acc = Rational::zero();
    (0..d)
        .map(|i| {
            let pi = p.entries.get(i).unwrap_or(&zero);
            let qi = q.entries.get(i).unwrap_or(&zero);
            acc += pi - qi;
            acc.clone()
        })
        .collect()
}

/// Exact majorization comparison after zero padding to common length.
pub fn compare(p: &ProbVec, q: &ProbVec) -> MajorizationOrder {
    let diffs = prefix_diffs(p, q);
    let any_pos = diffs.iter().any(|x| x > &Rational::zero());
    let any_neg = diffs.iter().any(|x| x < &Rational::zero());
    match (any_pos, any_neg) {
        (false, false) => MajorizationOrder::Equal,
        (false, true) => MajorizationOrder::FirstMajorizedBySecond,
        (true, false) => MajorizationOrder::SecondMajorizedByFirst,
        (true, true) => MajorizationOrder::Incomparable,
    }
}

/// The index set `L` of majorization violations in the `p -> q` direction,
/// together with its extremes `m = min(L)` and `n = max(L)`.
///
/// Indices are 1-based as in the partial-sum criterion. `L` is empty iff
/// `p ≺ q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationSet {
    indices: Vec<usize>,
}

impl ViolationSet {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `min(L)`.
    pub fn m(&self) -> Option<usize> {
        self.indices.first().copied()
    }

    /// `max(L)`.
    pub fn n(&self) -> Option<usize> {
        self.indices.last().copied()
    }
}

/// All 1-based `l` with `sum_{i<=l}(p_i - q_i) > 0`.
pub fn violation_set(p: &ProbVec, q: &ProbVec) -> ViolationSet {
    let indices = prefix_diffs(p, q)
        .iter()
        .enumerate()
        .filter(|(_, diff)| *diff > &Rational::zero())
        .map(|(i, _)| i + 1)
        .collect();
    ViolationSet { indices }
}

/// Majorization distance `δ = 2 * max_l sum_{i<=l}(p_i - q_i)`.
///
/// Always nonnegative (the full-sum difference is zero), and zero iff
/// `p ≺ q`.
pub fn majorization_distance(p: &ProbVec, q: &ProbVec) -> Rational {
    let max = prefix_diffs(p, q)
        .into_iter()
        .max()
        .expect("vectors are nonempty");
    let max = if max < Rational::zero() {
        Rational::zero()
    } else {
        max
    };
    max * Rational::from_integer(2.into())
}

/// Maximum conversion probability `min_l E_l(p)/E_l(q)` where
/// `E_l(x) = 1 - sum_{i<l} x_i`, over `l = 1..=len` after zero padding.
///
/// Indices where both tails vanish are skipped; a zero `E_l(q)` with nonzero
/// `E_l(p)` contributes `+∞` and never attains the minimum. Equals 1 iff
/// `p ≺ q`.
pub fn pmax(p: &ProbVec, q: &ProbVec) -> Rational {
    let d = p.len().max(q.len());
    let zero = Rational::zero();
    let mut tail_p = Rational::one();
    let mut tail_q = Rational::one();
    let mut best: Option<Rational> = None;
    for l in 0..d {
        // tails currently hold E_{l+1}: 1 - sum of the first l entries
        if tail_q.is_zero() {
            if tail_p.is_zero() {
                break; // both tails stay zero from here on
            }
        } else {
            let ratio = &tail_p / &tail_q;
            best = Some(match best {
                Some(b) if b <= ratio => b,
                _ => ratio,
            });
        }
        tail_p -= p.entries.get(l).unwrap_or(&zero);
        tail_q -= q.entries.get(l).unwrap_or(&zero);
    }
    best.expect("l = 1 always contributes the ratio 1")
}
