//! Rational multiples of pi, normalised into (-pi, pi].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{CoreError, CoreResult};

/// The angle `num/den * pi` with `gcd(num, den) = 1`, `den > 0` and
/// `-den < num <= den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle {
    num: i64,
    den: i64,
}

impl Angle {
    pub fn new(num: i64, den: i64) -> CoreResult<Angle> {
        if den == 0 {
            return Err(CoreError::ZeroDenominator);
        }
        Ok(Self::normalize(num as i128, den as i128))
    }

    /// Panicking constructor for literals.
    pub fn frac(num: i64, den: i64) -> Angle {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn zero() -> Angle {
        Angle { num: 0, den: 1 }
    }

    pub fn pi() -> Angle {
        Angle { num: 1, den: 1 }
    }

    pub fn half_pi() -> Angle {
        Angle { num: 1, den: 2 }
    }

    pub fn from_ratio(r: Ratio<i64>) -> Angle {
        Self::normalize(*r.numer() as i128, *r.denom() as i128)
    }

    pub fn to_ratio(self) -> Ratio<i64> {
        Ratio::new_raw(self.num, self.den)
    }

    fn normalize(mut num: i128, mut den: i128) -> Angle {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        num /= g;
        den /= g;
        let mut r = num.rem_euclid(2 * den);
        if r > den {
            r -= 2 * den;
        }
        Angle {
            num: r as i64,
            den: den as i64,
        }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }

    pub fn radians(self) -> f64 {
        std::f64::consts::PI * self.num as f64 / self.den as f64
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Angle in `pi * Z`.
    pub fn is_multiple_of_pi(self) -> bool {
        self.den == 1
    }

    /// Angle in `pi * Z + pi/2`.
    pub fn is_odd_half_pi(self) -> bool {
        self.den == 2
    }

    /// Angle in `(pi/2) * Z`, i.e. the XY-plane measurement is a Pauli.
    pub fn is_pauli_axis(self) -> bool {
        self.den <= 2
    }

    /// `k * self`.
    pub fn scale(self, k: i64) -> Angle {
        Self::normalize(self.num as i128 * k as i128, self.den as i128)
    }

    /// `self / 2`, taking the representative in (-pi, pi] first.
    pub fn half(self) -> Angle {
        Self::normalize(self.num as i128, 2 * self.den as i128)
    }
}

impl Default for Angle {
    fn default() -> Self {
        Angle::zero()
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, o: Angle) -> Angle {
        Angle::normalize(
            self.num as i128 * o.den as i128 + o.num as i128 * self.den as i128,
            self.den as i128 * o.den as i128,
        )
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, o: Angle) -> Angle {
        self + (-o)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::normalize(-(self.num as i128), self.den as i128)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (n, 1) => write!(f, "{n}pi"),
            (1, d) => write!(f, "pi/{d}"),
            (-1, d) => write!(f, "-pi/{d}"),
            (n, d) => write!(f, "{n}pi/{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_into_half_open_interval() {
        assert_eq!(Angle::frac(-1, 1), Angle::pi());
        assert_eq!(Angle::frac(3, 2), Angle::frac(-1, 2));
        assert_eq!(Angle::frac(4, 8), Angle::half_pi());
        assert_eq!(Angle::frac(2, 1), Angle::zero());
        assert_eq!(Angle::frac(1, -4), Angle::frac(-1, 4));
        assert!(Angle::new(1, 0).is_err());
    }

    #[test]
    fn classification() {
        assert!(Angle::pi().is_multiple_of_pi());
        assert!(Angle::zero().is_pauli_axis());
        assert!(Angle::frac(-1, 2).is_odd_half_pi());
        assert!(!Angle::frac(1, 4).is_pauli_axis());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Angle::half_pi() + Angle::half_pi(), Angle::pi());
        assert_eq!(Angle::pi() + Angle::pi(), Angle::zero());
        assert_eq!(-Angle::frac(1, 3), Angle::frac(5, 3));
        assert_eq!(Angle::pi().half(), Angle::half_pi());
        assert_eq!(Angle::frac(1, 4).scale(4), Angle::pi());
        assert_eq!(Angle::frac(3, 4).to_string(), "3pi/4");
    }

    proptest::proptest! {
        #[test]
        fn radians_in_range(n in -1000i64..1000, d in 1i64..64) {
            let a = Angle::frac(n, d);
            let r = a.radians();
            proptest::prop_assert!(r > -std::f64::consts::PI - 1e-12 && r <= std::f64::consts::PI + 1e-12);
            let expect = (std::f64::consts::PI * n as f64 / d as f64).rem_euclid(2.0 * std::f64::consts::PI);
            let got = r.rem_euclid(2.0 * std::f64::consts::PI);
            let diff = (expect - got).abs();
            proptest::prop_assert!(diff < 1e-9 || (diff - 2.0 * std::f64::consts::PI).abs() < 1e-9);
        }

        #[test]
        fn add_neg_is_zero(n in -100i64..100, d in 1i64..32) {
            let a = Angle::frac(n, d);
            proptest::prop_assert_eq!(a + (-a), Angle::zero());
        }
    }
}
