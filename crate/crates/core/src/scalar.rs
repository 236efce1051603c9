//! Exact rational scalars.
//!
//! Every quantity in this crate lives over the rationals so that rank,
//! isotropy and degeneracy are decided exactly. Floating-point input is
//! accepted only at the parsing boundary, where finite decimals are
//! converted to the rational they denote.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (maintained by `num_rational`).
pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("invalid integer part in `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `a`, `a/b`, or a finite decimal such as `-4.25` / `1e-3`,
/// converting exactly as written.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ScalarParseError::BadInteger(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ScalarParseError::BadInteger(s.to_string()))?;
        if d.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(s.to_string()));
        }
        return Ok(BigRational::new(n, d));
    }
    parse_decimal(s).ok_or_else(|| ScalarParseError::Malformed(s.to_string()))
}

/// Finite decimal with optional exponent -> exact rational.
fn parse_decimal(s: &str) -> Option<Scalar> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().ok()?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let joined = format!("{int_part}{frac_part}");
    let mut num: BigInt = if joined.is_empty() { BigInt::zero() } else { joined.parse().ok()? };
    num *= BigInt::from(sign);
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Some(if shift >= 0 {
        BigRational::from_integer(num * ten.pow(shift as u32))
    } else {
        BigRational::new(num, ten.pow((-shift) as u32))
    })
}

/// Canonical text form: `a` when integral, `a/b` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    let num = bigint_to_f64(x.numer());
    let den = bigint_to_f64(x.denom());
    num / den
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    n.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

/// `Some(r)` with `r*r == x`, if `x` is a perfect square in Q.
pub fn exact_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_scalar("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar(" 4 / -2 ").unwrap(), int(-2));
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_scalar("-4.25").unwrap(), ratio(-17, 4));
        assert_eq!(parse_scalar("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_scalar("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_scalar("2.5e2").unwrap(), int(250));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1.2.3").is_err());
    }

    #[test]
    fn canonical_formatting() {
        assert_eq!(format_scalar(&ratio(4, 2)), "2");
        assert_eq!(format_scalar(&ratio(-1, 3)), "-1/3");
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(exact_sqrt(&int(2)), None);
        assert_eq!(exact_sqrt(&int(-4)), None);
    }
}
