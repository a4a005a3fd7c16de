//! Arbitrary-precision rationals: the scalars of the base field Q.
//!
//! `num_rational::BigRational` already maintains the invariants we
//! need (lowest terms, positive denominator, 0 = 0/1), so we use it
//! directly under the `BigRat` name and add parsing helpers.

use crate::error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

/// Shorthand constructor from an integer pair; panics on zero denominator.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

/// Shorthand constructor from an integer.
pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Parses `"-3"`, `"3/4"`, `"-3/4"`. Used by the term-list file format
/// and the expression tokenizer.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| Error::validation(format!("invalid rational literal: {s:?}")))?;
    let den: BigInt = den_s
        .parse()
        .map_err(|_| Error::validation(format!("invalid rational literal: {s:?}")))?;
    if den == BigInt::from(0) {
        return Err(Error::validation(format!(
            "invalid rational literal (zero denominator): {s:?}"
        )));
    }
    Ok(BigRat::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rat(" 6/ 8 ").unwrap(), rat(3, 4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(parse_rat("3/4").unwrap().to_string(), "3/4");
        assert_eq!(parse_rat("-4/2").unwrap().to_string(), "-2");
    }
}
