//! Scalar abstraction for interval coordinates.
//!
//! Every adjacency predicate in this crate is decided by strict comparisons
//! of coordinates, so the scalar type must be an exactly-ordered field.
//! Rational types qualify; floating point does not (no total order, and
//! rounding would silently change class membership).

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Num, Signed, ToPrimitive};

/// An exact ordered-field scalar usable as an interval coordinate.
///
/// Implemented for [`num_rational::BigRational`] (the default, overflow-free)
/// and [`num_rational::Rational64`] (faster, panics on overflow).
pub trait Coord: Num + Signed + Ord + Clone + Debug + Display + FromStr {
    /// Embeds an integer.
    fn from_int(n: i64) -> Self;

    /// The exact fraction `num / den`. Panics if `den == 0`.
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }

    /// `floor(self)` as an `i64`. Panics if the floor does not fit;
    /// coordinates that large do not arise in practice.
    fn floor_i64(&self) -> i64;

    /// Half of `self`.
    fn half(&self) -> Self {
        self.clone() / Self::from_int(2)
    }
}

impl Coord for num_rational::BigRational {
    fn from_int(n: i64) -> Self {
        Self::from_integer(n.into())
    }

    fn floor_i64(&self) -> i64 {
        self.floor()
            .to_integer()
            .to_i64()
            .expect("floor out of i64 range")
    }
}

impl Coord for num_rational::Rational64 {
    fn from_int(n: i64) -> Self {
        Self::from_integer(n)
    }

    fn floor_i64(&self) -> i64 {
        self.floor().to_integer()
    }
}

/// Parses a coordinate written as `p/q`, an integer, or a decimal like `2.5`.
///
/// The rational `FromStr` impls already accept `p/q` and plain integers;
/// decimals are expanded to an exact fraction here.
pub fn parse_coord<T: Coord>(s: &str) -> Option<T> {
    let s = s.trim();
    if let Some(dot) = s.find('.') {
        let (int_part, frac_part) = (&s[..dot], &s[dot + 1..]);
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.is_empty() && !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut value = T::zero();
        let ten = T::from_int(10);
        for b in int_digits.bytes() {
            value = value * ten.clone() + T::from_int(i64::from(b - b'0'));
        }
        let mut frac = T::zero();
        let mut den = T::one();
        for b in frac_part.bytes() {
            frac = frac * ten.clone() + T::from_int(i64::from(b - b'0'));
            den = den * ten.clone();
        }
        value = value + frac / den;
        Some(if negative { -value } else { value })
    } else {
        T::from_str(s).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn parse_forms() {
        let q: BigRational = parse_coord("3/4").unwrap();
        assert_eq!(q, BigRational::ratio(3, 4));
        let q: BigRational = parse_coord("-7").unwrap();
        assert_eq!(q, BigRational::from_int(-7));
        let q: BigRational = parse_coord("2.5").unwrap();
        assert_eq!(q, BigRational::ratio(5, 2));
        let q: Rational64 = parse_coord("-0.125").unwrap();
        assert_eq!(q, Rational64::ratio(-1, 8));
        assert!(parse_coord::<BigRational>("1.2.3").is_none());
    }

    #[test]
    fn floor_parity() {
        assert_eq!(BigRational::ratio(5, 2).floor_i64(), 2);
        assert_eq!(BigRational::ratio(-5, 2).floor_i64(), -3);
        assert_eq!(Rational64::from_int(4).floor_i64(), 4);
    }
}
