//! Exact dyadic rationals `num / 2^exp`.
//!
//! Canonical form: `num` odd, or `exp == 0` (zero is stored as `0 / 2^0`).
//! All arithmetic is exact; comparisons never go through floating point.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub};

/// An exact rational with a power-of-two denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    num: i128,
    exp: u32,
}

impl DyadicRational {
    pub const ZERO: DyadicRational = DyadicRational { num: 0, exp: 0 };
    pub const ONE: DyadicRational = DyadicRational { num: 1, exp: 0 };

    /// `num / 2^exp`, canonicalized.
    pub fn new(num: i128, exp: u32) -> Self {
        let mut d = DyadicRational { num, exp };
        d.canonicalize();
        d
    }

    /// `2^{-k}`.
    pub fn pow2_neg(k: u32) -> Self {
        DyadicRational { num: 1, exp: k }
    }

    pub fn from_integer(v: i128) -> Self {
        DyadicRational { num: v, exp: 0 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    /// Exponent of the denominator `2^exp`.
    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Exact division by `2^k`.
    pub fn div_pow2(&self, k: u32) -> Self {
        DyadicRational::new(self.num, self.exp + k)
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: u32) -> Self {
        if self.exp >= k {
            DyadicRational::new(self.num, self.exp - k)
        } else {
            DyadicRational::new(self.num << (k - self.exp), 0)
        }
    }

    pub fn scale(&self, factor: i128) -> Self {
        DyadicRational::new(self.num.checked_mul(factor).expect("dyadic overflow"), self.exp)
    }

    fn canonicalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        while self.num % 2 == 0 && self.exp > 0 {
            self.num /= 2;
            self.exp -= 1;
        }
    }
}

impl Add for DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: DyadicRational) -> DyadicRational {
        let exp = self.exp.max(rhs.exp);
        let a = self.num.checked_shl(exp - self.exp).expect("dyadic overflow");
        let b = rhs.num.checked_shl(exp - rhs.exp).expect("dyadic overflow");
        DyadicRational::new(a.checked_add(b).expect("dyadic overflow"), exp)
    }
}

impl AddAssign for DyadicRational {
    fn add_assign(&mut self, rhs: DyadicRational) {
        *self = *self + rhs;
    }
}

impl Sub for DyadicRational {
    type Output = DyadicRational;

    fn sub(self, rhs: DyadicRational) -> DyadicRational {
        self + (-rhs)
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Sum for DyadicRational {
    fn sum<I: Iterator<Item = DyadicRational>>(iter: I) -> DyadicRational {
        iter.fold(DyadicRational::ZERO, Add::add)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = self.num.checked_shl(exp - self.exp).expect("dyadic overflow");
        let b = other.num.checked_shl(exp - other.exp).expect("dyadic overflow");
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else if self.exp < 128 {
            write!(f, "{}/{}", self.num, 1u128 << self.exp)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let d = DyadicRational::new(4, 3);
        assert_eq!((d.numerator(), d.exponent()), (1, 1));
        let z = DyadicRational::new(0, 7);
        assert_eq!((z.numerator(), z.exponent()), (0, 0));
        let even_int = DyadicRational::new(8, 2);
        assert_eq!((even_int.numerator(), even_int.exponent()), (2, 0));
    }

    #[test]
    fn arithmetic_is_exact() {
        let q = DyadicRational::pow2_neg(2);
        assert_eq!(q + q, DyadicRational::pow2_neg(1));
        assert_eq!(
            q + DyadicRational::pow2_neg(1),
            DyadicRational::new(3, 2)
        );
        assert_eq!(q - q, DyadicRational::ZERO);
        let sum: DyadicRational = (0..4).map(|_| q).sum();
        assert_eq!(sum, DyadicRational::ONE);
    }

    #[test]
    fn ordering_crosses_exponents() {
        assert!(DyadicRational::new(3, 2) > DyadicRational::pow2_neg(1));
        assert!(DyadicRational::pow2_neg(5) < DyadicRational::pow2_neg(4));
        assert_eq!(
            DyadicRational::new(2, 1).cmp(&DyadicRational::ONE),
            Ordering::Equal
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(DyadicRational::pow2_neg(2).to_string(), "1/4");
        assert_eq!(DyadicRational::from_integer(3).to_string(), "3");
        assert_eq!(DyadicRational::ZERO.to_string(), "0");
        assert_eq!(DyadicRational::new(-3, 1).to_string(), "-3/2");
    }
}
