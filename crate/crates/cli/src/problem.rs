//! Problem-file parsing: the JSON document and the flat-CSV alternative.
//!
//! Entries are decimal (or fraction) strings, never binary floats, so every
//! input parses to an exact rational. A file whose first non-whitespace byte
//! is `{` is treated as JSON; anything else is read as flat CSV with one
//! comma-separated vector per line (`p` first, then `q`).

use serde::{Deserialize, Serialize};

use catalyxis_core::rational::parse_rational;
use catalyxis_core::vector::ProbVecError;
use catalyxis_core::{ProbVec, Rational};

/// On-disk problem document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub p: Vec<String>,
    pub q: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<String>>,
}

/// Validated in-memory problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub p: ProbVec,
    pub q: ProbVec,
    pub r: Option<ProbVec>,
}

/// Parse file contents, sniffing JSON versus flat CSV.
pub fn parse_problem(contents: &str) -> Result<Problem, String> {
    let file = if contents.trim_start().starts_with('{') {
        serde_json::from_str::<ProblemFile>(contents)
            .map_err(|e| format!("invalid problem JSON: {e}"))?
    } else {
        parse_flat_csv(contents)?
    };
    validate(&file)
}

fn parse_flat_csv(contents: &str) -> Result<ProblemFile, String> {
    let lines: Vec<&str> = contents
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.len() != 2 {
        return Err(format!(
            "flat CSV input needs exactly two non-empty lines (p then q), found {}",
            lines.len()
        ));
    }
    let split = |line: &str| {
        line.split(',')
            .map(|s| s.trim().to_string())
            .collect::<Vec<_>>()
    };
    Ok(ProblemFile {
        p: split(lines[0]),
        q: split(lines[1]),
        r: None,
    })
}

/// Turn string entries into validated probability vectors, naming the
/// offending entry on failure.
pub fn validate(file: &ProblemFile) -> Result<Problem, String> {
    let p = build_vector("p", &file.p)?;
    let q = build_vector("q", &file.q)?;
    let r = match &file.r {
        Some(entries) => Some(build_vector("r", entries)?),
        None => None,
    };
    Ok(Problem { p, q, r })
}

fn build_vector(name: &str, entries: &[String]) -> Result<ProbVec, String> {
    let mut parsed: Vec<Rational> = Vec::with_capacity(entries.len());
    for (i, s) in entries.iter().enumerate() {
        let value = parse_rational(s)
            .map_err(|e| format!("{name}[{i}]: cannot parse {s:?} as an exact rational ({e})"))?;
        parsed.push(value);
    }
    ProbVec::new(parsed).map_err(|e| match e {
        ProbVecError::Empty => format!("{name} is empty"),
        ProbVecError::NegativeEntry(i) => {
            format!("{name}[{i}]: entry {:?} is negative", entries[i])
        }
        ProbVecError::SumNotOne(excess) => format!(
            "{name} does not sum to one (off by {})",
            catalyxis_core::rational::to_fraction_string(&excess)
        ),
    })
}
