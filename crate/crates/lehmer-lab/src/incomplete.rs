//! Incomplete Lehmer-Euler numbers.
//!
//! Truncating the trisected exponential below (`part <= m`, "restricted") or
//! above (`part >= m`, "associated") before inverting gives the two
//! incomplete families `W_(3n, <=m)` and `W_(3n, >=m)`. Each comes with the
//! same four computation routes as the complete numbers; `m = 1` (associated)
//! and `m >= n` (restricted) reduce back to `W_(3n)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::exact::enumerate::compositions;
use crate::exact::factorials::{binomial, factorial, factorial_recip};
use crate::exact::hessenberg::LowerHessenberg;
use crate::lehmer::trudi_sum;

/// Which side of the part bound a table keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Parts at most `m`: the restricted numbers `W_(n, <=m)`.
    AtMost,
    /// Parts at least `m`: the associated numbers `W_(n, >=m)`.
    AtLeast,
}

impl Kind {
    pub fn symbol(&self) -> &'static str {
        match self {
            Kind::AtMost => "<=",
            Kind::AtLeast => ">=",
        }
    }
}

/// Trisected table of one incomplete family at a fixed bound `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompleteWTable {
    kind: Kind,
    m: usize,
    values: Vec<BigInt>,
}

impl IncompleteWTable {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn bound(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `W_(3n, kind m)` by trisected index.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    /// Raw-index accessor; zero off multiples of three.
    pub fn w(&self, raw: usize) -> BigInt {
        if raw % 3 != 0 {
            BigInt::zero()
        } else {
            self.values[raw / 3].clone()
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Restricted table by the windowed recurrence
/// `W_(3n,<=m) = -sum_(k=max(n-m,0))^(n-1) C(3n,3k) W_(3k,<=m)`.
pub fn w_le_recurrence(count: usize, m: usize) -> IncompleteWTable {
    assert!(count >= 1 && m >= 1);
    let mut values = vec![BigInt::one()];
    for n in 1..count {
        let mut acc = BigInt::zero();
        for k in n.saturating_sub(m)..n {
            acc += binomial(3 * n, 3 * k) * &values[k];
        }
        values.push(-acc);
    }
    IncompleteWTable { kind: Kind::AtMost, m, values }
}

/// Associated table: a zero block `W_3 .. W_(3m-3)` and then
/// `W_(3n,>=m) = -sum_(k=0)^(n-m) C(3n,3k) W_(3k,>=m)`.
pub fn w_ge_recurrence(count: usize, m: usize) -> IncompleteWTable {
    assert!(count >= 1 && m >= 1);
    let mut values = vec![BigInt::one()];
    for n in 1..count {
        if n < m {
            values.push(BigInt::zero());
            continue;
        }
        let mut acc = BigInt::zero();
        for (k, w) in values.iter().enumerate().take(n - m + 1) {
            acc += binomial(3 * n, 3 * k) * w;
        }
        values.push(-acc);
    }
    IncompleteWTable { kind: Kind::AtLeast, m, values }
}

fn explicit_sum(n: usize, min_part: usize, max_part: Option<usize>) -> BigInt {
    let mut acc = BigRational::zero();
    for tuple in compositions(n, min_part, max_part) {
        let mut term = BigRational::one();
        for part in &tuple {
            term *= factorial_recip(3 * part);
        }
        if tuple.len() % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    let scaled = acc * BigRational::from(factorial(3 * n));
    assert!(scaled.is_integer(), "internal consistency: incomplete explicit sum");
    scaled.to_integer()
}

/// `W_(3n,<=m)` as the signed sum over compositions with parts in `[1, m]`.
pub fn w_le_explicit(n: usize, m: usize) -> BigInt {
    assert!(n >= 1 && m >= 1);
    explicit_sum(n, 1, Some(m))
}

/// `W_(3n,>=m)` as the signed sum over compositions with parts `>= m`.
pub fn w_ge_explicit(n: usize, m: usize) -> BigInt {
    assert!(n >= 1 && m >= 1);
    if m > n {
        return BigInt::zero();
    }
    explicit_sum(n, m, None)
}

fn banded_determinant(n: usize, keep: impl Fn(usize) -> bool) -> BigInt {
    let matrix = LowerHessenberg::from_fn(n, |i, j| {
        if j == i + 1 {
            return BigRational::one();
        }
        let d = i - j + 1;
        if keep(d) {
            factorial_recip(3 * d)
        } else {
            BigRational::zero()
        }
    });
    let mut scaled = matrix.det() * BigRational::from(factorial(3 * n));
    if n % 2 == 1 {
        scaled = -scaled;
    }
    assert!(scaled.is_integer(), "internal consistency: banded determinant");
    scaled.to_integer()
}

/// Determinant route for the restricted numbers: bands deeper than `m` are zero.
pub fn w_le_determinant(n: usize, m: usize) -> BigInt {
    assert!(n >= 1 && m >= 1);
    banded_determinant(n, |d| d <= m)
}

/// Determinant route for the associated numbers: bands shallower than `m` are zero.
pub fn w_ge_determinant(n: usize, m: usize) -> BigInt {
    assert!(n >= 1 && m >= 1);
    banded_determinant(n, |d| d >= m)
}

/// Trudi route over partitions into parts `<= m`.
pub fn w_le_trudi(n: usize, m: usize) -> BigInt {
    assert!(n >= 1 && m >= 1);
    trudi_sum(n, 1, Some(m))
}

/// Trudi route over partitions into parts `>= m`.
pub fn w_ge_trudi(n: usize, m: usize) -> BigInt {
    assert!(n >= 1 && m >= 1);
    if m > n {
        return BigInt::zero();
    }
    trudi_sum(n, m, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lehmer::w_recurrence;

    #[test]
    fn restricted_recurrence_small() {
        let t = w_le_recurrence(3, 1);
        assert_eq!(t.values(), &[1, -1, 20].map(BigInt::from));
        let t2 = w_le_recurrence(3, 2);
        assert_eq!(*t2.get(2), BigInt::from(19));
    }

    #[test]
    fn restricted_wide_window_reduces_to_complete() {
        let full = w_recurrence(8);
        for m in 7..10 {
            assert_eq!(w_le_recurrence(8, m).values(), full.values());
        }
    }

    #[test]
    fn associated_recurrence_small() {
        let t = w_ge_recurrence(3, 2);
        assert_eq!(t.values(), &[1, 0, -1].map(BigInt::from));
        let t3 = w_ge_recurrence(3, 3);
        assert_eq!(t3.values(), &[1, 0, 0].map(BigInt::from));
    }

    #[test]
    fn associated_m1_reduces_to_complete() {
        let full = w_recurrence(9);
        assert_eq!(w_ge_recurrence(9, 1).values(), full.values());
    }

    #[test]
    fn explicit_routes_small() {
        assert_eq!(w_le_explicit(2, 1), BigInt::from(20));
        assert_eq!(w_ge_explicit(2, 2), BigInt::from(-1));
        let full = w_recurrence(6);
        for n in 1..6 {
            assert_eq!(w_le_explicit(n, n), *full.get(n));
            assert_eq!(w_le_explicit(n, n + 3), *full.get(n));
        }
    }

    #[test]
    fn determinant_routes_small() {
        assert_eq!(w_le_determinant(2, 1), BigInt::from(20));
        assert_eq!(w_ge_determinant(2, 2), BigInt::from(-1));
        let full = w_recurrence(7);
        for n in 1..7 {
            assert_eq!(w_le_determinant(n, n), *full.get(n));
            assert_eq!(w_ge_determinant(n, 1), *full.get(n));
        }
    }

    #[test]
    fn trudi_routes_small() {
        assert_eq!(w_le_trudi(2, 1), BigInt::from(20));
        assert_eq!(w_ge_trudi(2, 2), BigInt::from(-1));
        let le = w_le_recurrence(11, 3);
        let ge = w_ge_recurrence(11, 3);
        assert_eq!(w_le_trudi(10, 3), *le.get(10));
        assert_eq!(w_ge_trudi(10, 3), *ge.get(10));
    }

    #[test]
    fn four_route_agreement_moderate() {
        for m in 1..=4 {
            let le = w_le_recurrence(9, m);
            let ge = w_ge_recurrence(9, m);
            for n in 1..9 {
                assert_eq!(w_le_determinant(n, m), *le.get(n), "le det n={n} m={m}");
                assert_eq!(w_le_trudi(n, m), *le.get(n), "le trudi n={n} m={m}");
                assert_eq!(w_le_explicit(n, m), *le.get(n), "le explicit n={n} m={m}");
                assert_eq!(w_ge_determinant(n, m), *ge.get(n), "ge det n={n} m={m}");
                assert_eq!(w_ge_trudi(n, m), *ge.get(n), "ge trudi n={n} m={m}");
                assert_eq!(w_ge_explicit(n, m), *ge.get(n), "ge explicit n={n} m={m}");
            }
        }
    }

    #[test]
    fn zero_block_is_exact() {
        for m in 2..6 {
            let t = w_ge_recurrence(10, m);
            for n in 1..m {
                assert!(t.get(n).is_zero(), "m={m} n={n}");
            }
            assert!(!t.get(m).is_zero());
        }
    }
}
