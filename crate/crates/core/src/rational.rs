//! Exact rational values and their canonical text form (`"p"` or `"p/q"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// Lowest-terms text form; integers carry no denominator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |msg: &str| Error::parse("rational", format!("{msg}: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let q: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(format_rational(&parse_rational("-2/4").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }
}
