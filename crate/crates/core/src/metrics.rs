//! Transformation-quality metrics in the presence of a catalyst.
//!
//! Attaching a catalyst spectrum `r` to both sides of a transformation turns
//! the maximum conversion probability and the majorization distance into
//! functions of `r`; for a qubit catalyst `(1-t, t)` they become curves over
//! `t in [0, 1/2]`. All three views agree exactly on where catalysis happens:
//! `is_catalyst ⇔ pmax_catalyzed = 1 ⇔ delta_catalyzed = 0`.

use alloc::vec::Vec;

use num_traits::One;

use crate::rational::Rational;
use crate::vector::{compare, majorization_distance, pmax, MajorizationOrder, ProbVec};

/// Maximum conversion probability of the catalyzed transformation,
/// `pmax(p ⊗ r, q ⊗ r)`.
pub fn pmax_catalyzed(p: &ProbVec, q: &ProbVec, r: &ProbVec) -> Rational {
    pmax(&p.tensor(r), &q.tensor(r))
}

/// Majorization distance of the catalyzed transformation,
/// `δ(p ⊗ r, q ⊗ r)`.
pub fn delta_catalyzed(p: &ProbVec, q: &ProbVec, r: &ProbVec) -> Rational {
    majorization_distance(&p.tensor(r), &q.tensor(r))
}

/// Exact catalysis predicate: `p ⊗ r ≺ q ⊗ r`.
pub fn is_catalyst(p: &ProbVec, q: &ProbVec, r: &ProbVec) -> bool {
    matches!(
        compare(&p.tensor(r), &q.tensor(r)),
        MajorizationOrder::FirstMajorizedBySecond | MajorizationOrder::Equal
    )
}

/// One evaluation point of the qubit-catalyst quality curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSample {
    pub t: Rational,
    pub pmax: Rational,
    pub delta: Rational,
    pub is_catalytic: bool,
}

/// The curves `P_max(t)` and `δ(t)` sampled on a uniform rational grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformCurve {
    pub p: ProbVec,
    pub q: ProbVec,
    pub samples: Vec<CurveSample>,
}

/// Evaluate both quality curves at `t = j / (2 (samples - 1))` for
/// `j = 0..samples`, i.e. a uniform grid over `[0, 1/2]` including both
/// endpoints, with the qubit catalyst `r = (1-t, t)`.
pub fn curve(p: &ProbVec, q: &ProbVec, samples: usize) -> TransformCurve {
    assert!(samples >= 2, "a curve needs at least two samples");
    let denom = Rational::from_integer((2 * (samples as i64 - 1)).into());
    let out = (0..samples)
        .map(|j| {
            let t = Rational::from_integer((j as i64).into()) / &denom;
            let r = ProbVec::qubit(&t);
            let pmax = pmax_catalyzed(p, q, &r);
            let delta = delta_catalyzed(p, q, &r);
            let is_catalytic = pmax.is_one();
            debug_assert_eq!(is_catalytic, num_traits::Zero::is_zero(&delta));
            CurveSample {
                t,
                pmax,
                delta,
                is_catalytic,
            }
        })
        .collect();
    TransformCurve {
        p: p.clone(),
        q: q.clone(),
        samples: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::vec::Vec;

    fn pv(entries: &[(i64, i64)]) -> ProbVec {
        ProbVec::new(entries.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    fn pair_26() -> (ProbVec, ProbVec) {
        (
            pv(&[(49, 100), (30, 100), (13, 100), (6, 100), (2, 100)]),
            pv(&[(56, 100), (25, 100), (10, 100), (8, 100), (1, 100)]),
        )
    }

    #[test]
    fn two_region_pair_metrics() {
        let (p, q) = pair_26();
        let r_02 = pv(&[(8, 10), (2, 10)]);
        let r_03 = pv(&[(7, 10), (3, 10)]);
        let r_035 = pv(&[(65, 100), (35, 100)]);

        assert_eq!(pmax_catalyzed(&p, &q, &r_02), ratio(1, 1));
        assert_eq!(delta_catalyzed(&p, &q, &r_02), ratio(0, 1));
        assert!(is_catalyst(&p, &q, &r_02));

        assert_eq!(pmax_catalyzed(&p, &q, &r_03), ratio(119, 120));
        assert_eq!(delta_catalyzed(&p, &q, &r_03), ratio(1, 500));
        assert!(!is_catalyst(&p, &q, &r_03));

        assert!(is_catalyst(&p, &q, &r_035));
    }

    #[test]
    fn trivial_catalysts_do_nothing() {
        let (p, q) = pair_26();
        // scalar catalyst reduces to the bare metrics
        let one = pv(&[(1, 1)]);
        assert_eq!(
            pmax_catalyzed(&p, &q, &one),
            crate::vector::pmax(&p, &q)
        );
        assert!(!is_catalyst(&p, &q, &ProbVec::uniform(3)));
        assert!(!is_catalyst(&p, &q, &pv(&[(1, 1), (0, 1)])));
    }

    #[test]
    fn known_catalyst_pair() {
        let p = pv(&[(4, 10), (4, 10), (1, 10), (1, 10)]);
        let q = pv(&[(5, 10), (25, 100), (25, 100), (0, 1)]);
        let r = pv(&[(6, 10), (4, 10)]);
        assert!(is_catalyst(&p, &q, &r));
        assert_eq!(delta_catalyzed(&p, &q, &r), ratio(0, 1));
    }

    #[test]
    fn curve_sampling() {
        let (p, q) = pair_26();
        let c = curve(&p, &q, 5);
        let ts: Vec<_> = c.samples.iter().map(|s| s.t.clone()).collect();
        assert_eq!(
            ts,
            [ratio(0, 1), ratio(1, 8), ratio(1, 4), ratio(3, 8), ratio(1, 2)]
        );
        // endpoints are never catalytic for an incomparable pair
        assert!(!c.samples.first().unwrap().is_catalytic);
        assert!(!c.samples.last().unwrap().is_catalytic);

        // comparable pair: catalytic everywhere
        let c = curve(&ProbVec::uniform(5), &q, 5);
        assert!(c.samples.iter().all(|s| s.is_catalytic));
    }
}
