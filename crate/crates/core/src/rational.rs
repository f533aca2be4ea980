//! Exact rational values. Every density in the crate is a [`Rational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

pub type Rational = BigRational;

/// `num / den` in lowest terms. Panics if `den == 0`.
pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(x: i128) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Smallest integer `>= x`.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.numer().div_ceil(x.denom())
}

/// Largest integer `<= x`.
pub fn floor_int(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `ceil(x)` as a `u64`; `None` if negative or too large.
pub fn ceil_u64(x: &Rational) -> Option<u64> {
    let c = ceil_int(x);
    if c.is_negative() {
        None
    } else {
        c.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(ceil_int(&ratio(7, 2)), BigInt::from(4));
        assert_eq!(floor_int(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(ceil_int(&ratio(-7, 2)), BigInt::from(-3));
        assert_eq!(ceil_u64(&ratio(4, 2)), Some(2));
        assert_eq!(ceil_u64(&ratio(-1, 2)), Some(0));
        assert_eq!(ceil_u64(&ratio(-3, 2)), None);
        assert_eq!(ratio(6, 4), ratio(3, 2));
        assert_eq!(ratio(5, 2).to_string(), "5/2");
    }
}
