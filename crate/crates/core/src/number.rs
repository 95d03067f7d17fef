//! Exact rational arithmetic helpers.
//!
//! Every count and every closed form in this crate is an [`ExactNumber`]:
//! an arbitrary-precision rational kept in lowest terms. Nothing here ever
//! touches floating point.

use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

pub type ExactNumber = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}` as an exact rational")]
pub struct ParseExactError {
    pub input: String,
}

pub fn int(n: i64) -> ExactNumber {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> ExactNumber {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> ExactNumber {
    ratio(1, 2)
}

/// Canonical text form: `p` when the denominator is 1, `p/q` otherwise.
pub fn format_exact(q: &ExactNumber) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_exact(s: &str) -> Result<ExactNumber, ParseExactError> {
    let err = || ParseExactError {
        input: s.to_string(),
    };
    let t = s.trim();
    match t.split_once('/') {
        None => BigInt::from_str(t)
            .map(BigRational::from_integer)
            .map_err(|_| err()),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Returns the value as an `i64` if it is an integer that fits.
pub fn as_integer(q: &ExactNumber) -> Option<i64> {
    if !q.denom().is_one() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

pub fn is_positive(q: &ExactNumber) -> bool {
    q.is_positive()
}

/// Floor division by a positive divisor, `floor(-1/3) = -1`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_exact(&int(20)), "20");
        assert_eq!(format_exact(&ratio(25, 4)), "25/4");
        assert_eq!(format_exact(&ratio(-6, 4)), "-3/2");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "7", "-3/2", "25/4"] {
            assert_eq!(format_exact(&parse_exact(s).unwrap()), s);
        }
        assert_eq!(parse_exact("6/4").unwrap(), ratio(3, 2));
        assert!(parse_exact("1/0").is_err());
        assert!(parse_exact("x").is_err());
    }

    #[test]
    fn floor_and_ceil_follow_math_convention() {
        assert_eq!(floor_div(-1, 3), -1);
        assert_eq!(floor_div(-3, 3), -1);
        assert_eq!(floor_div(7, 2), 3);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(ceil_div(-1, 3), 0);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(-9, 2), -4);
        for a in -20..20 {
            for b in 1..5 {
                let f = (a as f64 / b as f64).floor() as i64;
                assert_eq!(floor_div(a, b), f, "{a}/{b}");
            }
        }
    }
}
