use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n / 1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p/q` or an integer literal `p`. Leading `+` is accepted; whitespace is not.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let body = s.strip_prefix('+').unwrap_or(s);
    if body.is_empty() {
        return Err("empty rational literal".into());
    }
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("invalid numerator in {s:?}"))?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(format!("signed denominator in {s:?}"));
            }
            BigInt::from_str(d).map_err(|_| format!("invalid denominator in {s:?}"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or `p` when `q == 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("+3").unwrap(), int(3));
        assert_eq!(format_rational(&rat(10, -4)), "-5/2");
        assert_eq!(format_rational(&int(-4)), "-4");
        assert_eq!(format_rational(&zero()), "0");
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("a/b").is_err());
    }
}
