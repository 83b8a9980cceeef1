use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator, zero being `0/1`.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("rational `{0}` is not in lowest terms")]
    NotReduced(String),
    #[error("rational `{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("rational `{0}` is not canonical (write integers without a denominator, sign on the numerator)")]
    NotCanonical(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical wire string: `n` for integers, `p/q` otherwise.
pub fn to_canonical_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, RationalParseError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError::Malformed(whole.to_string()));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(RationalParseError::NotCanonical(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| RationalParseError::Malformed(whole.to_string()))
}

/// Strict parse of the canonical form produced by [`to_canonical_string`].
pub fn parse_canonical(s: &str) -> Result<Rational, RationalParseError> {
    match s.split_once('/') {
        None => {
            let n = parse_int(s, s)?;
            if s == "-0" {
                return Err(RationalParseError::NotCanonical(s.to_string()));
            }
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = parse_int(num, s)?;
            if den.starts_with('-') {
                return Err(RationalParseError::NotCanonical(s.to_string()));
            }
            let d = parse_int(den, s)?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            if d.is_one() || n.is_zero() {
                return Err(RationalParseError::NotCanonical(s.to_string()));
            }
            if !n.abs().gcd(&d).is_one() {
                return Err(RationalParseError::NotReduced(s.to_string()));
            }
            Ok(Rational::new_raw(n, d))
        }
    }
}
