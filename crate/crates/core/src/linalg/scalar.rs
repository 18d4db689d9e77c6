//! The ground field: arbitrary-precision rationals.
//!
//! `BigRational` keeps every value in lowest terms with a positive
//! denominator, so arithmetic is exact and representations are unique.

use crate::error::{Error, Result};
use num::BigInt;

pub type Scalar = num::BigRational;

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn scalar_from_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"` into an exact rational.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|e| Error::invalid(format!("bad rational {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = ratio(2, -4);
        assert_eq!(x, ratio(-1, 2));
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!(ratio(6, 3).to_string(), "2");
    }

    #[test]
    fn parse_both_forms() {
        assert_eq!(parse_scalar("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_scalar("-7").unwrap(), ratio(-7, 1));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
