//! Exhaustive catalyst discovery.
//!
//! Two search strategies back every other claim in the crate:
//!
//! - [`scan_qubit_regions`] samples the qubit parameter `t` on a uniform
//!   rational grid over `[0, 1/2]`, groups catalytic samples into regions,
//!   and sharpens each region boundary by bisection on the exact catalysis
//!   predicate.
//! - [`grid_search`] enumerates every sorted rational point of the
//!   `k`-simplex with denominator `N` and keeps the catalysts. It is the
//!   ground-truth oracle for the closed-form bounds.
//!
//! Region detection is sample-based: the report carries its resolution and
//! makes no claim about behaviour between samples.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::metrics::is_catalyst;
use crate::rational::Rational;
use crate::vector::ProbVec;

/// Default ceiling on enumerated grid-search candidates.
pub const DEFAULT_CANDIDATE_LIMIT: u128 = 100_000_000;

/// A closed interval of qubit parameters that tested catalytic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub lo: Rational,
    pub hi: Rational,
    /// False when the region touches the scan domain edge and the boundary
    /// was not bisected.
    pub lo_refined: bool,
    pub hi_refined: bool,
}

/// Disjoint catalysis regions found by a scan, with the scan metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport {
    pub regions: Vec<Region>,
    pub scan_resolution: usize,
    pub refine_precision: Rational,
}

/// Scan `t = j / (2 (resolution - 1))`, `j = 0..resolution`, for catalytic
/// qubit spectra `(1-t, t)` and refine each region boundary by bisection
/// until the bracket between catalytic and non-catalytic is narrower than
/// `refine_precision`.
///
/// The reported endpoints are always catalytic points; each refined boundary
/// bracket retains one catalytic and one non-catalytic side throughout.
pub fn scan_qubit_regions(
    p: &ProbVec,
    q: &ProbVec,
    resolution: usize,
    refine_precision: &Rational,
) -> RegionReport {
    assert!(resolution >= 10, "scan resolution must be at least 10");
    assert!(refine_precision > &Rational::zero());
    let denom = Rational::from_integer((2 * (resolution as i64 - 1)).into());
    let grid: Vec<Rational> = (0..resolution)
        .map(|j| Rational::from_integer((j as i64).into()) / &denom)
        .collect();
    let catalytic = |t: &Rational| is_catalyst(p, q, &ProbVec::qubit(t));
    let flags: Vec<bool> = grid.iter().map(&catalytic).collect();

    let mut regions = Vec::new();
    let mut i = 0;
    while i < resolution {
        if !flags[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i + 1 < resolution && flags[i + 1] {
            i += 1;
        }
        let end = i;
        i += 1;

        let (lo, lo_refined) = if start == 0 {
            (grid[0].clone(), false)
        } else {
            (
                bisect(&grid[start - 1], &grid[start], refine_precision, &catalytic),
                true,
            )
        };
        let (hi, hi_refined) = if end == resolution - 1 {
            (grid[end].clone(), false)
        } else {
            (
                bisect(&grid[end + 1], &grid[end], refine_precision, &catalytic),
                true,
            )
        };
        regions.push(Region {
            lo,
            hi,
            lo_refined,
            hi_refined,
        });
    }
    RegionReport {
        regions,
        scan_resolution: resolution,
        refine_precision: refine_precision.clone(),
    }
}

/// Shrink the bracket `[outside, inside]` (non-catalytic / catalytic) until
/// its width drops below `precision`; returns the catalytic endpoint.
fn bisect(
    outside: &Rational,
    inside: &Rational,
    precision: &Rational,
    catalytic: &impl Fn(&Rational) -> bool,
) -> Rational {
    let mut out = outside.clone();
    let mut inn = inside.clone();
    let two = Rational::from_integer(2.into());
    loop {
        let width = if inn > out { &inn - &out } else { &out - &inn };
        if &width < precision {
            return inn;
        }
        let mid = (&out + &inn) / &two;
        if catalytic(&mid) {
            inn = mid;
        } else {
            out = mid;
        }
    }
}

/// Grid-search failure: the candidate count exceeds the configured ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchError {
    pub candidates: u128,
    pub ceiling: u128,
}

impl core::fmt::Display for SearchError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "grid search would enumerate {} candidates, over the ceiling of {}",
            self.candidates, self.ceiling
        )
    }
}

/// All catalysts found on the sorted rational simplex grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSearchResult {
    pub k: usize,
    pub resolution: u64,
    pub catalysts_found: Vec<ProbVec>,
    /// True when the full grid was enumerated (always the case on success;
    /// hitting the ceiling is an error, never a silent truncation).
    pub exhausted: bool,
}

/// Enumerate every `r = (n_1/N, ..., n_k/N)` with
/// `n_1 >= ... >= n_k >= 0` and `sum n_i = N = resolution`, in descending
/// lexicographic order, and return those with `p ⊗ r ≺ q ⊗ r`.
///
/// Only sorted compositions are visited since catalyst spectra are
/// canonically sorted. The number of candidates is checked against `ceiling`
/// before enumeration starts.
pub fn grid_search(
    p: &ProbVec,
    q: &ProbVec,
    k: usize,
    resolution: u64,
    ceiling: u128,
) -> Result<GridSearchResult, SearchError> {
    assert!(k >= 1);
    assert!(resolution >= k as u64, "resolution must be at least k");
    let candidates = count_partitions(resolution, k);
    if candidates > ceiling {
        return Err(SearchError {
            candidates,
            ceiling,
        });
    }

    let mut catalysts_found = Vec::new();
    let mut parts: Vec<u64> = Vec::with_capacity(k);
    enumerate(resolution, k, resolution, &mut parts, &mut |parts| {
        let entries: Vec<Rational> = parts
            .iter()
            .map(|&n| Rational::new((n as i64).into(), (resolution as i64).into()))
            .collect();
        let r = ProbVec::new(entries).expect("grid points sum to one");
        if is_catalyst(p, q, &r) {
            catalysts_found.push(r);
        }
    });

    Ok(GridSearchResult {
        k,
        resolution,
        catalysts_found,
        exhausted: true,
    })
}

/// Number of partitions of `n` into at most `k` parts (saturating).
fn count_partitions(n: u64, k: usize) -> u128 {
    let n = n as usize;
    // table[j] = partitions of j into parts of size <= current bound,
    // with at most k parts handled by the standard conjugate identity:
    // partitions of n into at most k parts == partitions of n into parts <= k.
    let mut table = alloc::vec![0u128; n + 1];
    table[0] = 1;
    for part in 1..=k.min(n.max(1)) {
        for j in part..=n {
            table[j] = table[j].saturating_add(table[j - part]);
        }
    }
    table[n]
}

fn enumerate(remaining: u64, slots: usize, max_part: u64, parts: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if slots == 0 {
        debug_assert_eq!(remaining, 0);
        emit(parts);
        return;
    }
    if slots == 1 {
        if remaining <= max_part {
            parts.push(remaining);
            emit(parts);
            parts.pop();
        }
        return;
    }
    let hi = max_part.min(remaining);
    let lo = remaining.div_ceil(slots as u64);
    let mut v = hi;
    while v >= lo {
        parts.push(v);
        enumerate(remaining - v, slots - 1, v, parts, emit);
        parts.pop();
        if v == 0 {
            break;
        }
        v -= 1;
    }
}

/// Smallest catalyst dimension `k <= k_max` at which the grid search finds
/// anything, or `None` when every grid up to `k_max` is empty.
pub fn empirical_min_dimension(
    p: &ProbVec,
    q: &ProbVec,
    k_max: usize,
    resolution: u64,
    ceiling: u128,
) -> Result<Option<usize>, SearchError> {
    assert!(k_max >= 2);
    for k in 1..=k_max {
        let result = grid_search(p, q, k, resolution, ceiling)?;
        if !result.catalysts_found.is_empty() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::qubit_window;
    use crate::rational::ratio;

    fn pv(entries: &[(i64, i64)]) -> ProbVec {
        ProbVec::new(entries.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    fn pair_3b() -> (ProbVec, ProbVec) {
        (
            pv(&[(45, 100), (35, 100), (12, 100), (8, 100)]),
            pv(&[(56, 100), (21, 100), (17, 100), (6, 100)]),
        )
    }

    fn pair_26() -> (ProbVec, ProbVec) {
        (
            pv(&[(49, 100), (30, 100), (13, 100), (6, 100), (2, 100)]),
            pv(&[(56, 100), (25, 100), (10, 100), (8, 100), (1, 100)]),
        )
    }

    fn pair_3d() -> (ProbVec, ProbVec) {
        (
            pv(&[(47, 100), (38, 100), (13, 100), (2, 100)]),
            pv(&[(53, 100), (31, 100), (15, 100), (1, 100)]),
        )
    }

    #[test]
    fn single_region_inside_window() {
        let (p, q) = pair_3b();
        let report = scan_qubit_regions(&p, &q, 1000, &ratio(1, 1_000_000_000));
        assert_eq!(report.regions.len(), 1);
        let w = qubit_window(&p, &q).unwrap();
        let region = &report.regions[0];
        assert!(region.lo > w.t_lo && region.hi < w.t_hi);
        assert!(region.lo_refined && region.hi_refined);
        // matches the independently computed bracket near [0.3002, 0.3682]
        assert!(region.lo < ratio(301, 1000) && region.lo > ratio(299, 1000));
        assert!(region.hi > ratio(368, 1000) && region.hi < ratio(369, 1000));
    }

    #[test]
    fn two_regions_with_gap() {
        let (p, q) = pair_26();
        let report = scan_qubit_regions(&p, &q, 1000, &ratio(1, 1_000_000_000));
        assert_eq!(report.regions.len(), 2);
        let (first, second) = (&report.regions[0], &report.regions[1]);
        assert!(first.hi < second.lo);
        assert!(first.lo <= ratio(1, 5) && ratio(1, 5) <= first.hi);
        assert!(second.lo <= ratio(35, 100) && ratio(35, 100) <= second.hi);
        assert!(first.hi < ratio(3, 10) && ratio(3, 10) < second.lo);
    }

    #[test]
    fn no_catalysis_no_regions() {
        let p = pv(&[(45, 100), (40, 100), (15, 100)]);
        let q = pv(&[(50, 100), (30, 100), (20, 100)]);
        let report = scan_qubit_regions(&p, &q, 200, &ratio(1, 1_000_000));
        assert!(report.regions.is_empty());
    }

    #[test]
    fn grid_search_examples() {
        let (p, q) = pair_3d();
        let result = grid_search(&p, &q, 2, 100, DEFAULT_CANDIDATE_LIMIT).unwrap();
        assert!(result.catalysts_found.is_empty());
        assert!(result.exhausted);

        let (p, q) = pair_26();
        let result = grid_search(&p, &q, 2, 20, DEFAULT_CANDIDATE_LIMIT).unwrap();
        let target = pv(&[(4, 5), (1, 5)]);
        assert!(result.catalysts_found.contains(&target));

        // k = 1 only holds the scalar catalyst, which never helps
        let result = grid_search(&p, &q, 1, 20, DEFAULT_CANDIDATE_LIMIT).unwrap();
        assert!(result.catalysts_found.is_empty());
    }

    #[test]
    fn grid_search_ceiling() {
        let (p, q) = pair_26();
        let err = grid_search(&p, &q, 3, 100, 10).unwrap_err();
        assert!(err.candidates > 10);
        assert_eq!(err.ceiling, 10);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions(20, 2), 11); // n1 in 10..=20
        assert_eq!(count_partitions(4, 3), 4); // 4, 31, 22, 211
        let mut seen = 0usize;
        enumerate(20, 2, 20, &mut Vec::new(), &mut |parts| {
            assert_eq!(parts.iter().sum::<u64>(), 20);
            assert!(parts.windows(2).all(|w| w[0] >= w[1]));
            seen += 1;
        });
        assert_eq!(seen, 11);
    }

    #[test]
    fn empirical_dimension() {
        let (p, q) = pair_26();
        assert_eq!(
            empirical_min_dimension(&p, &q, 3, 20, DEFAULT_CANDIDATE_LIMIT).unwrap(),
            Some(2)
        );

        let p = pv(&[(45, 100), (40, 100), (15, 100)]);
        let q = pv(&[(50, 100), (30, 100), (20, 100)]);
        assert_eq!(
            empirical_min_dimension(&p, &q, 3, 30, DEFAULT_CANDIDATE_LIMIT).unwrap(),
            None
        );
    }
}
