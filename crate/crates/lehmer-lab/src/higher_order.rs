//! Higher-order generalizations `W_(r,n)^(alpha)`.
//!
//! The order-`alpha` step-`r` numbers come from the `-alpha` power of the
//! `r`-sected exponential series. The series route works for any `r >= 2`;
//! the multinomial explicit formula is implemented exactly for `r = 2`
//! (plain integers) and `r = 3` (arithmetic in Q(omega)), the two cases with
//! closed specializations: `r = 2` is Luo's higher-order Euler formula and
//! `r = 3, alpha = 1` recovers the Lehmer-Euler numbers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::exact::egf::Egf;
use crate::exact::eisenstein::Eisenstein;
use crate::exact::factorials::{binomial, factorial};

/// Raw-indexed table of `W_(r,n)^(alpha)`; entries vanish off multiples of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherWTable {
    r: usize,
    alpha: usize,
    values: Vec<BigInt>,
}

impl HigherWTable {
    pub fn step(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.alpha
    }

    /// Number of raw indices stored.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `W_(r,n)^(alpha)` by raw index `n`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Table of `W_(r,n)^(alpha)` for `n < count` via the series power
/// `(sum_l t^(rl)/(rl)!)^(-alpha)`.
pub fn w_higher_series(r: usize, alpha: usize, count: usize) -> HigherWTable {
    assert!(r >= 2 && alpha >= 1 && count >= 1);
    let sections = count.div_ceil(r);
    let series = Egf::ones(r, sections)
        .pow(-(alpha as i64))
        .expect("constant term is 1");
    let mut values = vec![BigInt::zero(); count];
    for (l, c) in series.coeffs().iter().enumerate() {
        let n = l * r;
        if n >= count {
            break;
        }
        assert!(
            c.is_integer(),
            "internal consistency: series entry {n} is not integral"
        );
        values[n] = c.to_integer();
    }
    HigherWTable { r, alpha, values }
}

/// Binomial `C(alpha + k - 1, k)` and friends with integer upper argument.
fn binom_usize(top: usize, k: usize) -> BigInt {
    binomial(top, k)
}

/// `W_(r,n)^(alpha)` for `r` in `{2, 3}` by the explicit multinomial formula
/// `sum_k (-1/r)^k C(alpha+k-1,k) C(alpha+n,n-k) sum_(i_1+..+i_r=k) k!/(i_1!..i_r!) (sum_j zeta^(j-1) i_j)^n`.
pub fn w_higher_explicit(r: usize, alpha: usize, n: usize) -> BigInt {
    assert!(alpha >= 1);
    match r {
        2 => explicit_step2(alpha, n),
        3 => explicit_step3(alpha, n),
        _ => panic!("explicit formula is implemented exactly for r = 2 and r = 3 only"),
    }
}

fn explicit_step2(alpha: usize, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    // zeta = -1, so the inner product power is (i1 - i2)^n over i1 + i2 = k
    let mut acc = BigRational::zero();
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let mut outer = BigRational::one();
    for k in 0..=n {
        let mut inner = BigInt::zero();
        for i1 in 0..=k {
            let i2 = k - i1;
            let base = BigInt::from(i1 as i64 - i2 as i64);
            let coeff = factorial(k) / (factorial(i1) * factorial(i2));
            inner += coeff * base.pow(n as u32);
        }
        let weight = binom_usize(alpha + k - 1, k) * binom_usize(alpha + n, n - k);
        acc += &outer * BigRational::from(weight * inner);
        outer *= &minus_half;
    }
    assert!(
        acc.is_integer(),
        "internal consistency: step-2 explicit value for n={n} is not integral"
    );
    acc.to_integer()
}

fn explicit_step3(alpha: usize, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = Eisenstein::zero();
    let minus_third = BigRational::new(BigInt::from(-1), BigInt::from(3));
    let mut outer = BigRational::one();
    for k in 0..=n {
        let mut inner = Eisenstein::zero();
        for i1 in 0..=k {
            for i2 in 0..=(k - i1) {
                let i3 = k - i1 - i2;
                // i1 + i2 w + i3 w^2 = (i1 - i3) + (i2 - i3) w
                let base = Eisenstein::new(
                    BigRational::from(BigInt::from(i1 as i64 - i3 as i64)),
                    BigRational::from(BigInt::from(i2 as i64 - i3 as i64)),
                );
                let coeff = factorial(k) / (factorial(i1) * factorial(i2) * factorial(i3));
                inner = &inner + &base.pow(n).scale(&BigRational::from(coeff));
            }
        }
        let weight = binom_usize(alpha + k - 1, k) * binom_usize(alpha + n, n - k);
        let scale = &outer * BigRational::from(weight);
        acc = &acc + &inner.scale(&scale);
        outer *= &minus_third;
    }
    let value = acc.expect_rational("step-3 explicit formula");
    assert!(
        value.is_integer(),
        "internal consistency: step-3 explicit value for n={n} is not integral"
    );
    value.to_integer()
}

/// Higher-order Euler numbers by Luo's formula
/// `E_n^(alpha) = sum_k (-1/2)^k C(alpha+n,n-k) C(alpha+k-1,k) sum_j C(k,j)(k-2j)^n`.
pub fn euler_higher_luo(alpha: usize, n: usize) -> BigInt {
    assert!(alpha >= 1);
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigRational::zero();
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    let mut outer = BigRational::one();
    for k in 0..=n {
        let mut inner = BigInt::zero();
        for j in 0..=k {
            let base = BigInt::from(k as i64 - 2 * j as i64);
            inner += binomial(k, j) * base.pow(n as u32);
        }
        let weight = binom_usize(alpha + n, n - k) * binom_usize(alpha + k - 1, k);
        acc += &outer * BigRational::from(weight * inner);
        outer *= &minus_half;
    }
    assert!(
        acc.is_integer(),
        "internal consistency: Luo value for n={n} is not integral"
    );
    acc.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lehmer::{euler_numbers, w_recurrence};

    #[test]
    fn series_step3_order1_is_the_w_table() {
        let higher = w_higher_series(3, 1, 19);
        let base = w_recurrence(7);
        for n in 0..19 {
            if n % 3 == 0 {
                assert_eq!(higher.get(n), base.get(n / 3));
            } else {
                assert!(higher.get(n).is_zero());
            }
        }
    }

    #[test]
    fn series_step2_order1_is_the_euler_table() {
        let higher = w_higher_series(2, 1, 13);
        let base = euler_numbers(7);
        for n in 0..13 {
            if n % 2 == 0 {
                assert_eq!(higher.get(n), base.get(n / 2));
            } else {
                assert!(higher.get(n).is_zero());
            }
        }
    }

    #[test]
    fn sech_squared_coefficient() {
        let t = w_higher_series(2, 2, 3);
        assert_eq!(*t.get(2), BigInt::from(-2));
        assert_eq!(euler_higher_luo(2, 2), BigInt::from(-2));
    }

    #[test]
    fn explicit_matches_series_for_both_steps() {
        for alpha in 1..=3 {
            let s2 = w_higher_series(2, alpha, 11);
            let s3 = w_higher_series(3, alpha, 11);
            for n in 0..11 {
                assert_eq!(w_higher_explicit(2, alpha, n), *s2.get(n), "r=2 a={alpha} n={n}");
                assert_eq!(w_higher_explicit(3, alpha, n), *s3.get(n), "r=3 a={alpha} n={n}");
            }
        }
    }

    #[test]
    fn explicit_small_values() {
        assert_eq!(w_higher_explicit(3, 1, 3), BigInt::from(-1));
        assert_eq!(w_higher_explicit(2, 1, 4), BigInt::from(5));
        assert_eq!(w_higher_explicit(2, 4, 0), BigInt::one());
        assert_eq!(w_higher_explicit(3, 4, 0), BigInt::one());
    }

    #[test]
    fn luo_reduces_to_euler_numbers_at_order_one() {
        let e = euler_numbers(5);
        assert_eq!(euler_higher_luo(1, 2), *e.get(1));
        assert_eq!(euler_higher_luo(1, 6), *e.get(3));
        assert_eq!(euler_higher_luo(1, 3), BigInt::zero());
    }

    #[test]
    fn luo_agrees_with_the_multinomial_step2_route() {
        for alpha in 1..=4 {
            for n in 0..=10 {
                assert_eq!(
                    euler_higher_luo(alpha, n),
                    w_higher_explicit(2, alpha, n),
                    "a={alpha} n={n}"
                );
            }
        }
    }

    #[test]
    fn larger_r_series_still_works() {
        let t = w_higher_series(4, 2, 9);
        assert_eq!(*t.get(0), BigInt::one());
        assert!(t.get(3).is_zero());
        // (1 + t^4/4! + ...)^(-2): coefficient of t^4/4! is -2
        assert_eq!(*t.get(4), BigInt::from(-2));
    }
}
