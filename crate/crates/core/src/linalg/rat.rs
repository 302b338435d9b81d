//! The ground field: arbitrary-precision rationals.
//!
//! `BigRational` already maintains the invariants we rely on (lowest
//! terms, positive denominator, exact arithmetic), so the module only
//! adds the string form used by the JSON file formats: `"p/q"` or a bare
//! integer string.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

pub type Rat = BigRational;
pub type Int = BigInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatParseError {
    #[error("empty coefficient string")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInt(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"`, or `"-p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| RatParseError::BadInt(num.to_string()))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| RatParseError::BadInt(d.to_string()))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(RatParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(n, d))
}

/// Renders in the same form `parse_rat` accepts; integers print bare.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of denominators, used to clear a rational row
/// to integers.
pub fn denom_lcm<'a>(xs: impl Iterator<Item = &'a Rat>) -> Int {
    let mut l = Int::one();
    for x in xs {
        l = num::integer::lcm(l, x.denom().abs());
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rat(" 5 ").unwrap(), rat(5));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(parse_rat(""), Err(RatParseError::Empty));
        assert!(matches!(parse_rat("x/2"), Err(RatParseError::BadInt(_))));
        assert!(matches!(
            parse_rat("1/0"),
            Err(RatParseError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn normalised_storage() {
        let r = parse_rat("2/-4").unwrap();
        assert_eq!(format_rat(&r), "-1/2");
    }
}
