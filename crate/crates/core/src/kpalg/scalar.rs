//! Exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

/// Parses `7`, `-3`, or `3/2`.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(parse("6/4"), Some(ratio(3, 2)));
        assert_eq!(parse("-2"), Some(int(-2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(ratio(3, 2).to_string(), "3/2");
        assert_eq!(int(5).to_string(), "5");
    }
}
