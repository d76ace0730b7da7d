//! Machine-readable report documents.
//!
//! Every rational number is emitted twice: as an exact fraction string and as
//! a decimal rounded to 12 significant digits (round-half-even). Documents
//! carry a `schema_version` field and contain nothing non-deterministic, so
//! fixed inputs always produce byte-identical output.

use serde_json::{json, Value};

use catalyxis_core::rational::{to_decimal, to_fraction_string};
use catalyxis_core::{
    DimensionBound, Extended, GridSearchResult, MajorizationOrder, PrefilterReport,
    PrefilterVerdict, ProbVec, QubitWindow, Rational, RegionReport, SandersBounds,
    Theorem1Bounds, ViolationSet,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Significant digits used for every decimal rendering.
pub const DECIMAL_DIGITS: usize = 12;

pub fn rational_value(x: &Rational) -> Value {
    json!({
        "fraction": to_fraction_string(x),
        "decimal": to_decimal(x, DECIMAL_DIGITS),
    })
}

pub fn extended_value(x: &Extended) -> Value {
    match x {
        Extended::Finite(v) => rational_value(v),
        Extended::Infinity => json!({ "infinite": true }),
    }
}

fn order_name(order: MajorizationOrder) -> &'static str {
    match order {
        MajorizationOrder::Equal => "equal",
        MajorizationOrder::FirstMajorizedBySecond => "first_majorized_by_second",
        MajorizationOrder::SecondMajorizedByFirst => "second_majorized_by_first",
        MajorizationOrder::Incomparable => "incomparable",
    }
}

fn violations_value(set: &ViolationSet) -> Value {
    json!({
        "indices": set.indices(),
        "m": set.m(),
        "n": set.n(),
    })
}

fn vector_value(v: &ProbVec) -> Value {
    Value::Array(v.entries().iter().map(rational_value).collect())
}

/// `check` output: order, violation set, distance, conversion probability,
/// and the catalyzed versions when a candidate catalyst is supplied.
pub fn check_document(
    p: &ProbVec,
    q: &ProbVec,
    r: Option<&ProbVec>,
) -> Value {
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "order": order_name(catalyxis_core::compare(p, q)),
        "violations": violations_value(&catalyxis_core::violation_set(p, q)),
        "delta": rational_value(&catalyxis_core::majorization_distance(p, q)),
        "pmax": rational_value(&catalyxis_core::pmax(p, q)),
    });
    if let Some(r) = r {
        doc["catalyzed"] = json!({
            "r": vector_value(r),
            "is_catalyst": catalyxis_core::is_catalyst(p, q, r),
            "pmax": rational_value(&catalyxis_core::pmax_catalyzed(p, q, r)),
            "delta": rational_value(&catalyxis_core::delta_catalyzed(p, q, r)),
        });
    }
    doc
}

fn prefilter_value(report: &PrefilterReport) -> Value {
    json!({
        "p1_le_q1": report.p1_le_q1,
        "pd_ge_qd": report.pd_ge_qd,
        "headsum_ok": report.headsum_ok,
        "dimension_ok": report.dimension_ok,
        "catalysis_impossible": report.verdict == PrefilterVerdict::CatalysisImpossible,
    })
}

fn window_value(window: &QubitWindow) -> Value {
    json!({
        "t_lo": rational_value(&window.t_lo),
        "t_hi": rational_value(&window.t_hi),
        "empty": window.empty,
    })
}

fn dimension_value(bound: &DimensionBound, real_value: Option<f64>) -> Value {
    match bound {
        DimensionBound::NoCatalystExists => json!({
            "no_catalyst_exists": true,
            "k_min": Value::Null,
            "bound_value": Value::Null,
        }),
        DimensionBound::AtLeast(k) => json!({
            "no_catalyst_exists": false,
            "k_min": k,
            "bound_value": real_value,
        }),
    }
}

fn sanders_value(bounds: &SandersBounds) -> Value {
    json!({
        "dim_bound": bounds.dim_bound,
        "dim_trivial": bounds.dim_trivial,
        "r_bound": bounds.r_bound.as_ref().map(rational_value),
        "r_trivial": bounds.r_trivial,
        "r_value": bounds.r_value.as_ref().map(rational_value),
        "r_satisfies": bounds.r_satisfies,
    })
}

/// Full `bounds` report for an incomparable pair.
#[allow(clippy::too_many_arguments)]
pub fn bounds_document(
    prefilter: &PrefilterReport,
    theorem1: &Theorem1Bounds,
    corollary_excludes: bool,
    window: &QubitWindow,
    dimension: &DimensionBound,
    dimension_value_f64: Option<f64>,
    sanders: &SandersBounds,
    forward: &ViolationSet,
    reverse: &ViolationSet,
) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "prefilter": prefilter_value(prefilter),
        "ratio_bounds": {
            "a": extended_value(&theorem1.a),
            "b": extended_value(&theorem1.b),
            "m": theorem1.m,
            "n": theorem1.n,
        },
        "corollary_excludes": corollary_excludes,
        "qubit_window": window_value(window),
        "dimension_bound": dimension_value(dimension, dimension_value_f64),
        "sanders_bounds": sanders_value(sanders),
        "violations": violations_value(forward),
        "reverse_violations": violations_value(reverse),
    })
}

pub fn scan_document(report: &RegionReport) -> Value {
    let regions: Vec<Value> = report
        .regions
        .iter()
        .map(|r| {
            json!({
                "lo": rational_value(&r.lo),
                "hi": rational_value(&r.hi),
                "lo_refined": r.lo_refined,
                "hi_refined": r.hi_refined,
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "regions": regions,
        "region_count": report.regions.len(),
        "scan_resolution": report.scan_resolution,
        "refine_precision": rational_value(&report.refine_precision),
    })
}

pub fn search_document(result: &GridSearchResult) -> Value {
    let catalysts: Vec<Value> = result
        .catalysts_found
        .iter()
        .map(|r| {
            Value::Array(
                r.entries()
                    .iter()
                    .map(|x| Value::String(to_fraction_string(x)))
                    .collect(),
            )
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "k": result.k,
        "resolution": result.resolution,
        "catalyst_count": result.catalysts_found.len(),
        "catalysts": catalysts,
        "exhausted": result.exhausted,
    })
}

/// Render the qubit-catalyst quality curves as deterministic CSV.
pub fn curve_csv(curve: &catalyxis_core::TransformCurve) -> String {
    let mut out = String::from("t,pmax,delta,catalytic\n");
    for sample in &curve.samples {
        out.push_str(&to_decimal(&sample.t, DECIMAL_DIGITS));
        out.push(',');
        out.push_str(&to_decimal(&sample.pmax, DECIMAL_DIGITS));
        out.push(',');
        out.push_str(&to_decimal(&sample.delta, DECIMAL_DIGITS));
        out.push(',');
        out.push(if sample.is_catalytic { '1' } else { '0' });
        out.push('\n');
    }
    out
}

/// Pretty-printed JSON with a trailing newline; the single rendering used for
/// all report documents so bytes are stable.
pub fn render(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("reports are valid JSON");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use catalyxis_core::rational::ratio;

    #[test]
    fn rational_rendering() {
        let v = rational_value(&ratio(3, 11));
        assert_eq!(v["fraction"], "3/11");
        assert_eq!(v["decimal"], "0.272727272727");
    }

    #[test]
    fn curve_csv_shape() {
        let p = ProbVec::new(vec![ratio(45, 100), ratio(35, 100), ratio(12, 100), ratio(8, 100)])
            .unwrap();
        let q = ProbVec::new(vec![ratio(56, 100), ratio(21, 100), ratio(17, 100), ratio(6, 100)])
            .unwrap();
        let csv = curve_csv(&catalyxis_core::curve(&p, &q, 11));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,pmax,delta,catalytic");
        assert_eq!(lines.len(), 12);
        assert!(lines[1].starts_with("0,"));
        assert!(lines[1].ends_with(",0"));
        // t = 7/20 = 0.35 lies inside the catalytic region of this pair
        assert_eq!(lines[8], "0.350000000000,1.00000000000,0,1");
    }

    #[test]
    fn reports_round_trip_as_json() {
        let p = ProbVec::new(vec![ratio(45, 100), ratio(35, 100), ratio(12, 100), ratio(8, 100)])
            .unwrap();
        let q = ProbVec::new(vec![ratio(56, 100), ratio(21, 100), ratio(17, 100), ratio(6, 100)])
            .unwrap();
        let doc = check_document(&p, &q, None);
        let text = render(&doc);
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back["schema_version"], SCHEMA_VERSION);
        assert_eq!(back["order"], "incomparable");
    }
}
