//! Arithmetic in Q(omega), omega a primitive cube root of unity.
//!
//! Elements are stored as `a + b*omega` with exact rational components,
//! using `omega^2 = -1 - omega`. This is all the cyclotomic arithmetic the
//! roots-of-unity binomial sums and the step-3 explicit formula need:
//! `sqrt(-3) = 1 + 2*omega` lives here too.

use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eisenstein {
    pub a: BigRational,
    pub b: BigRational,
}

impl Eisenstein {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Eisenstein { a, b }
    }

    pub fn from_int(a: i64) -> Self {
        Eisenstein::new(BigRational::from(BigInt::from(a)), BigRational::zero())
    }

    pub fn from_bigint(a: BigInt) -> Self {
        Eisenstein::new(BigRational::from(a), BigRational::zero())
    }

    pub fn zero() -> Self {
        Eisenstein::from_int(0)
    }

    pub fn one() -> Self {
        Eisenstein::from_int(1)
    }

    /// omega itself.
    pub fn omega() -> Self {
        Eisenstein::new(BigRational::zero(), BigRational::one())
    }

    /// `omega^k` for any exponent.
    pub fn omega_pow(k: usize) -> Self {
        match k % 3 {
            0 => Eisenstein::one(),
            1 => Eisenstein::omega(),
            _ => Eisenstein::new(-BigRational::one(), -BigRational::one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the omega component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational part, panicking if an omega component survived.
    pub fn expect_rational(&self, context: &str) -> BigRational {
        assert!(
            self.is_rational(),
            "internal consistency: nonzero omega component in {context}: {:?}",
            self
        );
        self.a.clone()
    }

    pub fn pow(&self, mut e: usize) -> Eisenstein {
        let mut result = Eisenstein::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, s: &BigRational) -> Eisenstein {
        Eisenstein::new(&self.a * s, &self.b * s)
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-&self.a, -&self.b)
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        let bd = &self.b * &rhs.b;
        Eisenstein::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - &bd,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = Eisenstein::omega();
        assert_eq!(w.pow(3), Eisenstein::one());
        assert_eq!(&w * &w, Eisenstein::omega_pow(2));
        // 1 + w + w^2 = 0
        let sum = &(&Eisenstein::one() + &w) + &w.pow(2);
        assert!(sum.is_zero());
    }

    #[test]
    fn sqrt_minus_three() {
        // (1 + 2w)^2 = -3
        let s = &Eisenstein::one() + &Eisenstein::omega().scale(&BigRational::from(BigInt::from(2)));
        assert_eq!(s.pow(2), Eisenstein::from_int(-3));
    }

    #[test]
    fn rational_extraction() {
        let w = Eisenstein::omega();
        let v = &w + &w.pow(2); // -1
        assert_eq!(v.expect_rational("test"), BigRational::from(BigInt::from(-1)));
    }
}
