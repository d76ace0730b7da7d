//! Exact rational scalars and their text representations.
//!
//! All quantities in this crate are arbitrary-precision fractions; nothing is
//! ever rounded during a decision. Decimal input like `"0.45"` is parsed to
//! the exact fraction `9/20`, and decimal output is produced by exact
//! round-half-even rendering so that emitted files are byte-stable.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision fraction, stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A ratio that may be `+∞` (a finite quantity divided by zero).
///
/// Bound ratios like `q_1/q_m` degenerate to infinity when the denominator
/// entry is zero; the bound machinery treats that as the limit of the strict
/// inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extended {
    Finite(Rational),
    Infinity,
}

impl Extended {
    /// Build from numerator/denominator, mapping a zero denominator to `+∞`.
    pub fn ratio(num: &Rational, den: &Rational) -> Extended {
        if den.is_zero() {
            Extended::Infinity
        } else {
            Extended::Finite(num / den)
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinity => None,
        }
    }

    /// Smaller of two extended values (`∞` loses to anything finite).
    pub fn min(self, other: Extended) -> Extended {
        match (self, other) {
            (Extended::Infinity, b) => b,
            (a, Extended::Infinity) => a,
            (Extended::Finite(a), Extended::Finite(b)) => {
                if a <= b {
                    Extended::Finite(a)
                } else {
                    Extended::Finite(b)
                }
            }
        }
    }

    /// Larger of two extended values.
    pub fn max(self, other: Extended) -> Extended {
        match (self, other) {
            (Extended::Infinity, _) | (_, Extended::Infinity) => Extended::Infinity,
            (Extended::Finite(a), Extended::Finite(b)) => {
                if a >= b {
                    Extended::Finite(a)
                } else {
                    Extended::Finite(b)
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Extended::Finite(x) => to_f64(x),
            Extended::Infinity => f64::INFINITY,
        }
    }
}

/// Failure to parse a rational from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    Empty,
    InvalidDigit,
    ZeroDenominator,
}

impl core::fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty numeric string"),
            ParseRationalError::InvalidDigit => write!(f, "invalid character in numeric string"),
            ParseRationalError::ZeroDenominator => write!(f, "fraction with zero denominator"),
        }
    }
}

/// Parse `"0.45"`, `".5"`, `"1"`, or `"9/20"` into an exact rational.
///
/// Decimal strings are converted without rounding: `0.45` becomes `9/20`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_bigint(num.trim())?;
        let d = parse_bigint(den.trim())?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        return Ok(Rational::new(n, d));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let numer = if digits.is_empty() {
        BigInt::zero()
    } else {
        parse_biguint(&digits)?.into()
    };
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rational::new(BigInt::from(sign) * numer, denom))
}

fn parse_bigint(s: &str) -> Result<BigInt, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    Ok(BigInt::from(sign) * BigInt::from(parse_biguint(body)?))
}

fn parse_biguint(s: &str) -> Result<BigUint, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::InvalidDigit);
    }
    s.parse::<BigUint>()
        .map_err(|_| ParseRationalError::InvalidDigit)
}

/// Approximate conversion for reporting; never used in decisions.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Overflowing magnitudes only occur through pathological inputs;
        // saturate rather than panic.
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Render `x` as a plain decimal with `sig` significant digits, rounding
/// half-to-even. The result is exact in the sense that it depends only on
/// the rational value, never on any binary float intermediate.
///
/// Zero renders as `"0"`; other values keep all `sig` digits including
/// trailing zeros, e.g. `to_decimal(&(9/20), 12) == "0.450000000000"`.
pub fn to_decimal(x: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return String::from("0");
    }
    let negative = x.is_negative();
    let x = x.abs();

    // Decimal exponent: largest e with 10^e <= x.
    let ten = BigInt::from(10u32);
    let int_part: BigInt = x.numer() / x.denom();
    let mut exp: i64;
    if !int_part.is_zero() {
        exp = (int_part.to_str_radix(10).len() as i64) - 1;
    } else {
        exp = -1;
        let mut scaled = x.numer() * &ten;
        while &scaled < x.denom() {
            scaled *= &ten;
            exp -= 1;
        }
    }

    // Scale so the value has exactly `sig` digits before the point, then
    // round half-to-even to an integer.
    let shift = sig as i64 - 1 - exp;
    let scaled = shift_pow10(&x, shift);
    let mut digits_int = round_half_even(&scaled);
    let cap = ten.pow(sig as u32);
    if digits_int >= cap {
        // Rounding carried into an extra digit (e.g. 0.999... -> 1.00...).
        digits_int /= &ten;
        exp += 1;
    }

    let digits = digits_int.to_str_radix(10);
    debug_assert_eq!(digits.len(), sig);

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= sig as i64 - 1 {
        // Pure integer with possible trailing zeros.
        out.push_str(&digits);
        for _ in 0..(exp - (sig as i64 - 1)) {
            out.push('0');
        }
    } else if exp >= 0 {
        let split = (exp + 1) as usize;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(&digits[split..]);
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}

/// `x * 10^shift` for possibly negative `shift`.
fn shift_pow10(x: &Rational, shift: i64) -> Rational {
    let p = BigInt::from(10u32).pow(shift.unsigned_abs() as u32);
    if shift >= 0 {
        x * Rational::from_integer(p)
    } else {
        x / Rational::from_integer(p)
    }
}

/// Nearest integer with ties to even, for nonnegative `y`.
fn round_half_even(y: &Rational) -> BigInt {
    let floor: BigInt = y.numer() / y.denom();
    let rem = y.numer() - &floor * y.denom();
    let twice = &rem * BigInt::from(2u32);
    match twice.cmp(y.denom()) {
        core::cmp::Ordering::Less => floor,
        core::cmp::Ordering::Greater => floor + BigInt::one(),
        core::cmp::Ordering::Equal => {
            if (&floor % BigInt::from(2u32)).is_zero() {
                floor
            } else {
                floor + BigInt::one()
            }
        }
    }
}

/// Render as an exact `numer/denom` string (just the integer when the
/// denominator is one).
pub fn to_fraction_string(x: &Rational) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    if x.denom().is_one() {
        let _ = write!(s, "{}", x.numer());
    } else {
        let _ = write!(s, "{}/{}", x.numer(), x.denom());
    }
    s
}

/// Convenience for building small rationals in tests and grids.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a list of numeric strings into rationals, reporting the offending
/// index on failure.
pub fn parse_all(strings: &[&str]) -> Result<Vec<Rational>, (usize, ParseRationalError)> {
    strings
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rational(s).map_err(|e| (i, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(parse_rational("0.45").unwrap(), ratio(9, 20));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("1").unwrap(), ratio(1, 1));
        assert_eq!(parse_rational("0.000").unwrap(), ratio(0, 1));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational("9/20").unwrap(), ratio(9, 20));
        assert_eq!(parse_rational(" 17/38 ").unwrap(), ratio(17, 38));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("0.4x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(9, 20), 12), "0.450000000000");
        assert_eq!(to_decimal(&ratio(0, 1), 12), "0");
        assert_eq!(to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&ratio(2, 3), 5), "0.66667");
        assert_eq!(to_decimal(&ratio(1, 1), 3), "1.00");
        assert_eq!(to_decimal(&ratio(20, 23), 12), "0.869565217391");
        assert_eq!(to_decimal(&ratio(1, 1000), 3), "0.00100");
        assert_eq!(to_decimal(&ratio(-3, 50), 4), "-0.06000");
        // round-half-even at the boundary digit
        assert_eq!(to_decimal(&ratio(25, 1000), 1), "0.02");
        assert_eq!(to_decimal(&ratio(35, 1000), 1), "0.04");
        // rounding carry
        assert_eq!(to_decimal(&ratio(999, 1000), 2), "1.0");
    }

    #[test]
    fn extended_ordering() {
        let a = Extended::ratio(&ratio(1, 1), &ratio(0, 1));
        assert_eq!(a, Extended::Infinity);
        let b = Extended::ratio(&ratio(3, 1), &ratio(2, 1));
        assert_eq!(
            a.clone().min(b.clone()),
            Extended::Finite(ratio(3, 2))
        );
        assert_eq!(a.max(b), Extended::Infinity);
    }

    #[test]
    fn parse_all_reports_offender() {
        let err = parse_all(&["0.5", "bogus"]).unwrap_err();
        assert_eq!(err.0, 1);
        assert_eq!(parse_all(&["0.5", "0.5"]).unwrap(), vec![ratio(1, 2), ratio(1, 2)]);
    }
}
