//! Closed-form necessary conditions on entanglement catalysts.
//!
//! For an incomparable pair `p, q` every catalyst spectrum `r` must satisfy a
//! family of constraints derived from the violation set of the pair:
//!
//! - structural prefilters on `p` and `q` themselves ([`prefilter`]),
//! - ratio bounds on consecutive and extreme entries of `r`
//!   ([`theorem1_bounds`], [`check_candidate`]),
//! - a window for the qubit catalyst parameter ([`qubit_window`]),
//! - a lower bound on the catalyst dimension ([`dimension_lower_bound`]),
//! - symmetric-polynomial comparison bounds ([`sanders_bounds`]).
//!
//! All of these are necessary conditions only: passing them never certifies
//! that a catalyst works, it only fails candidates that provably cannot.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::{to_f64, Extended, Rational};
use crate::vector::{violation_set, ProbVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsError {
    /// The pair has an empty violation set (`p ≺ q`), so catalyst bounds do
    /// not apply.
    NotIncomparable,
    /// Symmetric-polynomial order outside `0..=d`.
    IndexOutOfRange,
}

impl core::fmt::Display for BoundsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundsError::NotIncomparable => {
                write!(f, "catalyst bounds require a nonempty violation set")
            }
            BoundsError::IndexOutOfRange => {
                write!(f, "symmetric polynomial order exceeds the vector dimension")
            }
        }
    }
}

/// Entry of the zero-padded vector at 1-based index `i`.
fn padded(v: &ProbVec, i: usize) -> Rational {
    v.entries().get(i - 1).cloned().unwrap_or_else(Rational::zero)
}

/// Position of the last nonzero entry; the physically meaningful dimension.
fn effective_len(v: &ProbVec) -> usize {
    v.entries()
        .iter()
        .rposition(|x| !x.is_zero())
        .map(|i| i + 1)
        .unwrap_or(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefilterVerdict {
    CatalysisImpossible,
    NotExcluded,
}

/// Outcome of the structural prefilters on the pair itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefilterReport {
    /// Largest entry of `p` does not exceed the largest entry of `q`.
    pub p1_le_q1: bool,
    /// Smallest entry of `p` is at least the smallest entry of `q`.
    pub pd_ge_qd: bool,
    /// `sum_{i<=d-1} p_i <= sum_{i<=d-1} q_i`.
    pub headsum_ok: bool,
    /// Effective dimension is at least 4 (no catalyst exists below that).
    pub dimension_ok: bool,
    pub verdict: PrefilterVerdict,
}

/// Necessary structural conditions on `(p, q)` for any catalysis at all.
///
/// The dimension flag uses the effective dimension (trailing zeros ignored),
/// since zero Schmidt coefficients are vacuous. Comparable pairs are allowed
/// and simply run through the same flags.
pub fn prefilter(p: &ProbVec, q: &ProbVec) -> PrefilterReport {
    let d = p.len().max(q.len());
    let p1_le_q1 = padded(p, 1) <= padded(q, 1);
    let pd_ge_qd = padded(p, d) >= padded(q, d);
    let head_p: Rational = (1..d).map(|i| padded(p, i)).sum();
    let head_q: Rational = (1..d).map(|i| padded(q, i)).sum();
    let headsum_ok = head_p <= head_q;
    let dimension_ok = effective_len(p).max(effective_len(q)) >= 4;
    let all_ok = p1_le_q1 && pd_ge_qd && headsum_ok && dimension_ok;
    PrefilterReport {
        p1_le_q1,
        pd_ge_qd,
        headsum_ok,
        dimension_ok,
        verdict: if all_ok {
            PrefilterVerdict::NotExcluded
        } else {
            PrefilterVerdict::CatalysisImpossible
        },
    }
}

/// The two entanglement ratio bounds of the pair, in the shorthand
/// `a = min(q_1/q_m, q_{n+1}/q_d)` and `b = max_{l in L} q_l/q_{l+1}`.
///
/// Any catalyst `r` must have every consecutive ratio `r_v/r_{v+1} < a` and
/// the extreme ratio `r_1/r_k > b`. Zero-denominator branches are `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Bounds {
    pub a: Extended,
    pub b: Extended,
    /// `min(L)` of the violation set.
    pub m: usize,
    /// `max(L)` of the violation set.
    pub n: usize,
}

pub fn theorem1_bounds(p: &ProbVec, q: &ProbVec) -> Result<Theorem1Bounds, BoundsError> {
    let violations = violation_set(p, q);
    let (m, n) = match (violations.m(), violations.n()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(BoundsError::NotIncomparable),
    };
    let d = p.len().max(q.len());
    let q1 = padded(q, 1);
    let a = Extended::ratio(&q1, &padded(q, m)).min(Extended::ratio(&padded(q, n + 1), &padded(q, d)));
    let mut b = Extended::Finite(Rational::zero());
    for &l in violations.indices() {
        b = b.max(Extended::ratio(&padded(q, l), &padded(q, l + 1)));
    }
    Ok(Theorem1Bounds { a, b, m, n })
}

/// True iff `q_1 = q_m` or `q_{n+1} = q_d`, in which case no catalyst of any
/// dimension exists for the pair.
pub fn corollary_excludes(p: &ProbVec, q: &ProbVec) -> Result<bool, BoundsError> {
    let bounds = theorem1_bounds(p, q)?;
    let d = p.len().max(q.len());
    Ok(padded(q, 1) == padded(q, bounds.m) || padded(q, bounds.n + 1) == padded(q, d))
}

/// The open interval `(1/(a+1), 1/(b+1))` that the parameter `t` of any
/// effective qubit catalyst `(1-t, t)` must inhabit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitWindow {
    pub t_lo: Rational,
    pub t_hi: Rational,
    pub empty: bool,
}

pub fn qubit_window(p: &ProbVec, q: &ProbVec) -> Result<QubitWindow, BoundsError> {
    let bounds = theorem1_bounds(p, q)?;
    let endpoint = |x: &Extended| match x {
        // 1/(x+1), with the infinite branch collapsing to 0
        Extended::Finite(v) => Rational::one() / (v + Rational::one()),
        Extended::Infinity => Rational::zero(),
    };
    let t_lo = endpoint(&bounds.a);
    let t_hi = endpoint(&bounds.b);
    let empty = t_lo >= t_hi;
    Ok(QubitWindow { t_lo, t_hi, empty })
}

/// Lower bound on the dimension of any catalyst for the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionBound {
    /// The ratio bounds are contradictory: no catalyst of any dimension.
    NoCatalystExists,
    /// Every catalyst has at least this many nonzero Schmidt coefficients.
    AtLeast(usize),
}

/// Exact evaluation of the dimension bound `k > ln(b)/ln(a) + 1`.
///
/// Decided without logarithms: the least admissible `k` is one more than the
/// smallest power `j` with `a^j > b`. Returns [`DimensionBound::NoCatalystExists`]
/// when `a <= 1` (the corollary) or `b` is infinite; an infinite `a` with
/// finite `b` yields the trivial `AtLeast(2)`.
pub fn dimension_lower_bound(p: &ProbVec, q: &ProbVec) -> Result<DimensionBound, BoundsError> {
    let bounds = theorem1_bounds(p, q)?;
    Ok(dimension_bound_from(&bounds))
}

pub fn dimension_bound_from(bounds: &Theorem1Bounds) -> DimensionBound {
    let b = match &bounds.b {
        Extended::Finite(b) => b,
        Extended::Infinity => return DimensionBound::NoCatalystExists,
    };
    let a = match &bounds.a {
        Extended::Finite(a) => a,
        Extended::Infinity => return DimensionBound::AtLeast(2),
    };
    if a <= &Rational::one() {
        return DimensionBound::NoCatalystExists;
    }
    // smallest j >= 1 with a^j > b; k_min = j + 1
    let mut power = a.clone();
    let mut j = 1usize;
    while &power <= b {
        power *= a;
        j += 1;
    }
    DimensionBound::AtLeast((j + 1).max(2))
}

/// Real value of the dimension bound `ln(b)/ln(a) + 1`, for reporting only;
/// `None` when the bound degenerates (infinite or sub-unit branches).
pub fn dimension_bound_value(bounds: &Theorem1Bounds) -> Option<f64> {
    match (&bounds.a, &bounds.b) {
        (Extended::Finite(a), Extended::Finite(b)) if a > &Rational::one() => {
            Some(libm::log(to_f64(b)) / libm::log(to_f64(a)) + 1.0)
        }
        (Extended::Infinity, Extended::Finite(_)) => Some(1.0),
        _ => None,
    }
}

/// `j`-th elementary symmetric polynomial of the entries, computed exactly
/// by the one-variable-at-a-time recurrence. `e_0 = 1`, `e_d` is the product
/// of all entries.
pub fn elementary_symmetric(p: &ProbVec, j: usize) -> Result<Rational, BoundsError> {
    if j > p.len() {
        return Err(BoundsError::IndexOutOfRange);
    }
    Ok(elem_sym_unchecked(p, j))
}

/// Same recurrence, with orders beyond the dimension evaluating to zero.
fn elem_sym_unchecked(p: &ProbVec, j: usize) -> Rational {
    let mut coeffs: Vec<Rational> = Vec::with_capacity(j + 1);
    coeffs.push(Rational::one());
    coeffs.resize(j + 1, Rational::zero());
    for x in p.entries() {
        for i in (1..=j).rev() {
            let add = x * &coeffs[i - 1];
            coeffs[i] += add;
        }
    }
    coeffs.truncate(j + 1);
    coeffs.pop().unwrap_or_else(Rational::zero)
}

/// The symmetric-polynomial comparison bounds on catalyst dimension and on
/// the monotone `R(r) = (e_2(r) - 2 e_3(r)) / (1 - 2 e_2(r) + 3 e_3(r))`.
///
/// `dim_bound` is reported as a float (it involves logarithms); `r_bound` and
/// `r_value` are exact. A bound whose defining denominator vanishes is
/// inapplicable and reported as `None` with the triviality flag set.
#[derive(Debug, Clone, PartialEq)]
pub struct SandersBounds {
    pub dim_bound: Option<f64>,
    /// True when the dimension bound carries no information (`< 2` or
    /// inapplicable).
    pub dim_trivial: bool,
    pub r_bound: Option<Rational>,
    /// True when the monotone bound carries no information (`<= 0` or
    /// inapplicable).
    pub r_trivial: bool,
    /// `R(r)` for the supplied candidate, if any.
    pub r_value: Option<Rational>,
    /// Whether the candidate satisfies `R(r) >= r_bound`.
    pub r_satisfies: Option<bool>,
}

pub fn sanders_bounds(
    p: &ProbVec,
    q: &ProbVec,
    r: Option<&ProbVec>,
) -> Result<SandersBounds, BoundsError> {
    if violation_set(p, q).is_empty() {
        return Err(BoundsError::NotIncomparable);
    }
    let d = p.len().max(q.len());
    // Orders are taken from the common dimension; an order beyond a vector's
    // own length means the product includes a zero padding entry, so e_j = 0.
    let ed_p = elem_sym_at(p, d);
    let ed_q = elem_sym_at(q, d);
    let ed1_p = elem_sym_at(p, d - 1);
    let ed1_q = elem_sym_at(q, d - 1);

    let dim_bound = if ed_p.is_zero() || ed_q.is_zero() || ed_p == ed_q || ed1_p.is_zero() {
        None
    } else {
        let num = libm::log2(to_f64(&(&ed1_q / &ed1_p)));
        let den = libm::log2(to_f64(&(&ed_p / &ed_q)));
        Some(num / den + 1.0)
    };
    let dim_trivial = dim_bound.map_or(true, |v| v < 2.0);

    let e2_p = elem_sym_at(p, 2);
    let e2_q = elem_sym_at(q, 2);
    let e3_p = elem_sym_at(p, 3);
    let e3_q = elem_sym_at(q, 3);
    let r_bound = if e2_p == e2_q {
        None
    } else {
        Some(-(&e3_p - &e3_q) / (&e2_p - &e2_q))
    };
    let r_trivial = r_bound.as_ref().map_or(true, |v| v <= &Rational::zero());

    let (r_value, r_satisfies) = match r {
        Some(r) => {
            let value = r_monotone(r);
            let satisfies = r_bound.as_ref().map(|bound| &value >= bound);
            (Some(value), satisfies)
        }
        None => (None, None),
    };

    Ok(SandersBounds {
        dim_bound,
        dim_trivial,
        r_bound,
        r_trivial,
        r_value,
        r_satisfies,
    })
}

/// `e_j` with orders beyond the vector length evaluating to zero.
fn elem_sym_at(v: &ProbVec, j: usize) -> Rational {
    if j > v.len() {
        Rational::zero()
    } else {
        elem_sym_unchecked(v, j)
    }
}

/// The catalyst monotone `R(r)`.
pub fn r_monotone(r: &ProbVec) -> Rational {
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    let e2 = elem_sym_at(r, 2);
    let e3 = elem_sym_at(r, 3);
    (&e2 - &two * &e3) / (Rational::one() - two * e2 + three * e3)
}

/// Verdict of the ratio bounds applied to one candidate catalyst.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateVerdict {
    /// The pair itself fails the structural prefilters.
    ExcludedByPrefilter,
    /// Some consecutive ratio `r_v/r_{v+1}` reaches the minimum-entanglement
    /// bound `a`.
    ExcludedByEq4,
    /// The extreme ratio `r_1/r_k` fails to exceed the maximum-entanglement
    /// bound `b`.
    ExcludedByEq5,
    /// None of the necessary conditions rules the candidate out.
    NotExcluded,
}

/// Apply every closed-form exclusion to a candidate catalyst.
///
/// Trailing zero entries of `r` are stripped first: a catalyst with zeros is
/// equivalent to the lower-dimensional catalyst of its nonzero entries. A
/// comparable pair has no violations to exploit, so nothing is excluded.
///
/// Caveat: for candidates of dimension three or more, the consecutive-ratio
/// screen applied beyond the leading ratio can reject vectors that do in
/// fact catalyze (see `eq4_can_misfire_beyond_qubits` in the tests). It is
/// exact for qubit candidates. Treat `ExcludedByEq4` on higher-dimensional
/// candidates as a strong heuristic, not a proof.
pub fn check_candidate(p: &ProbVec, q: &ProbVec, r: &ProbVec) -> CandidateVerdict {
    let bounds = match theorem1_bounds(p, q) {
        Ok(b) => b,
        Err(BoundsError::NotIncomparable) => return CandidateVerdict::NotExcluded,
        Err(_) => unreachable!(),
    };
    if prefilter(p, q).verdict == PrefilterVerdict::CatalysisImpossible {
        return CandidateVerdict::ExcludedByPrefilter;
    }

    let nonzero: Vec<&Rational> = r.entries().iter().filter(|x| !x.is_zero()).collect();
    debug_assert!(!nonzero.is_empty());

    // max_v r_v / r_{v+1} < a
    for window in nonzero.windows(2) {
        let ratio = Extended::Finite(window[0] / window[1]);
        let excluded = match (&ratio, &bounds.a) {
            (Extended::Finite(x), Extended::Finite(a)) => x >= a,
            (_, Extended::Infinity) => false,
            (Extended::Infinity, _) => true,
        };
        if excluded {
            return CandidateVerdict::ExcludedByEq4;
        }
    }

    // r_1 / r_k > b
    let extreme = *nonzero.first().unwrap() / *nonzero.last().unwrap();
    let passes = match &bounds.b {
        Extended::Finite(b) => &extreme > b,
        Extended::Infinity => false,
    };
    if !passes {
        return CandidateVerdict::ExcludedByEq5;
    }
    CandidateVerdict::NotExcluded
}
