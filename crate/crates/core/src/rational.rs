//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps values
//! reduced with a positive denominator and renders as `a/b` (or `a` when the
//! denominator is one).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num/den` as a reduced rational. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"a"`, `"-a"` or `"a/b"` with arbitrary-precision integers.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

/// Parses a comma separated list of rationals, e.g. `"1,2,-3/4"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Positive gcd of the numerators over the lcm of the denominators, so that
/// dividing every value by it leaves coprime integers. Zero for an empty or
/// all-zero input.
pub fn content<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        return Rational::zero();
    }
    Rational::new(num_gcd.abs(), den_lcm)
}

/// Lossy conversion used only for reporting and float comparisons in tests.
pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}
