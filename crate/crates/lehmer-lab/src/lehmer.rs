//! Lehmer-Euler numbers `W_n` and Euler numbers `E_n`.
//!
//! `W_n` is the coefficient sequence of the reciprocal trisected exponential
//! series `3 / (e^t + e^(wt) + e^(w^2 t))`; it vanishes exactly off multiples
//! of three, so tables store the trisection `W_0, W_3, W_6, ...`. The module
//! computes the same table by five independent routes (recurrence, explicit
//! composition sum, Hessenberg determinant, Trudi partition sum, and series
//! inversion) so that any bug has to reproduce itself five times to escape.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::exact::egf::Egf;
use crate::exact::enumerate::{compositions, partition_multiplicities};
use crate::exact::factorials::{binomial, factorial, factorial_recip};
use crate::exact::hessenberg::LowerHessenberg;

/// Absolute values |W_0|, |W_3|, ..., |W_30| as catalogued in OEIS A002115.
pub const OEIS_A002115: [&str; 11] = [
    "1",
    "1",
    "19",
    "1513",
    "315523",
    "136085041",
    "105261234643",
    "132705221399353",
    "254604707462013571",
    "705927677520644167681",
    "2716778010767155313771539",
];

/// Which route produced a table; verification reports name disagreeing pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    Explicit,
    Determinant,
    Trudi,
    Series,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Explicit => "explicit",
            Method::Determinant => "determinant",
            Method::Trudi => "trudi",
            Method::Series => "series",
        }
    }
}

/// Trisected table of Lehmer-Euler numbers: entry `n` holds `W_(3n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WTable {
    method: Method,
    values: Vec<BigInt>,
}

impl WTable {
    /// Wraps precomputed values. No validation beyond non-emptiness; the
    /// verification suites are exactly the place where claimed tables get
    /// cross-examined, including deliberately corrupted ones.
    pub fn from_values(method: Method, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty());
        WTable { method, values }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Number of stored (trisected) entries.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `W_(3n)` by trisected index.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    /// `W_m` by raw index: zero whenever `3` does not divide `m`.
    pub fn w(&self, m: usize) -> BigInt {
        if m % 3 != 0 {
            BigInt::zero()
        } else {
            self.values[m / 3].clone()
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Residues `W_(3n) mod modulus`, normalized to `[0, modulus)`.
    pub fn residues(&self, modulus: u64) -> Vec<u64> {
        let m = BigInt::from(modulus);
        self.values
            .iter()
            .map(|v| {
                let mut r = v % &m;
                if r.sign() == Sign::Minus {
                    r += &m;
                }
                u64::try_from(r).unwrap()
            })
            .collect()
    }
}

/// Trisected table `W_0 .. W_(3(N-1))` by the windowless recurrence
/// `W_(3n) = -sum_(k<n) C(3n, 3k) W_(3k)`.
pub fn w_recurrence(count: usize) -> WTable {
    assert!(count >= 1);
    let mut values = vec![BigInt::one()];
    for n in 1..count {
        let mut acc = BigInt::zero();
        for (k, w) in values.iter().enumerate() {
            acc += binomial(3 * n, 3 * k) * w;
        }
        values.push(-acc);
    }
    WTable::from_values(Method::Recurrence, values)
}

/// Same table via inversion of the trisected exponential series.
pub fn w_series(count: usize) -> WTable {
    assert!(count >= 1);
    let inverse = Egf::ones(3, count).invert().expect("constant term is 1");
    let values = inverse
        .integer_coeffs()
        .expect("internal consistency: series route produced a non-integral entry");
    WTable::from_values(Method::Series, values)
}

/// `W_(3n)` for `n >= 1` as the signed composition sum
/// `(3n)! sum_k (-1)^k sum_(i_1+...+i_k=n) 1/((3 i_1)! ... (3 i_k)!)`.
///
/// Enumerates all `2^(n-1)` compositions; exponential, intended for n <= ~20.
pub fn w_explicit(n: usize) -> BigInt {
    assert!(n >= 1);
    let mut acc = BigRational::zero();
    for tuple in compositions(n, 1, None) {
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
    assert!(
        scaled.is_integer(),
        "internal consistency: explicit sum for n={n} is not integral"
    );
    scaled.to_integer()
}

/// The `n x n` determinant route: reciprocal factorials down the bands,
/// ones on the superdiagonal.
pub fn w_determinant(n: usize) -> BigInt {
    assert!(n >= 1);
    let m = LowerHessenberg::from_fn(n, |i, j| {
        if j == i + 1 {
            BigRational::one()
        } else {
            factorial_recip(3 * (i - j + 1))
        }
    });
    let det = m.det();
    let mut scaled = det * BigRational::from(factorial(3 * n));
    if n % 2 == 1 {
        scaled = -scaled;
    }
    assert!(
        scaled.is_integer(),
        "internal consistency: determinant for n={n} is not integral"
    );
    scaled.to_integer()
}

/// Trudi's partition form: `W_(3n) = (3n)! sum multinomial(t) prod (-1/(3l)!)^(t_l)`
/// over multiplicity vectors with `sum l*t_l = n`.
pub fn w_trudi(n: usize) -> BigInt {
    assert!(n >= 1);
    trudi_sum(n, 1, None)
}

/// Shared kernel for the full and part-bounded Trudi sums. Accumulates
/// integer numerators over the common denominator `(3n)!`.
pub(crate) fn trudi_sum(n: usize, min_part: usize, max_part: Option<usize>) -> BigInt {
    let full = factorial(3 * n);
    let mut acc = BigInt::zero();
    for t in partition_multiplicities(n, min_part, max_part) {
        let mut pieces = 0usize;
        let mut mult_den = BigInt::one();
        let mut fact_den = BigInt::one();
        for (idx, &tl) in t.iter().enumerate() {
            if tl == 0 {
                continue;
            }
            let part = idx + 1;
            pieces += tl;
            mult_den *= factorial(tl);
            fact_den *= factorial(3 * part).pow(tl as u32);
        }
        let mult = factorial(pieces) / mult_den;
        let quotient = &full / fact_den; // exact: a multinomial with slack
        if pieces % 2 == 1 {
            acc -= mult * quotient;
        } else {
            acc += mult * quotient;
        }
    }
    acc
}

/// Checks Proposition-style inversion: the Hessenberg determinant built from
/// `W_(3d)/(3d)!` bands equals `(-1)^n/(3n)!` exactly.
pub fn inversion_det_check(n: usize, table: &WTable) -> bool {
    assert!(n >= 1 && table.len() > n);
    let m = LowerHessenberg::from_fn(n, |i, j| {
        if j == i + 1 {
            BigRational::one()
        } else {
            let d = i - j + 1;
            BigRational::new(table.get(d).clone(), factorial(3 * d))
        }
    });
    let expect = BigRational::new(
        if n % 2 == 1 { -BigInt::one() } else { BigInt::one() },
        factorial(3 * n),
    );
    m.det() == expect
}

/// Bisected table of Euler numbers: entry `n` holds `E_(2n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ETable {
    values: Vec<BigInt>,
}

impl ETable {
    pub fn from_values(values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty());
        ETable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `E_(2n)` by bisected index.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    /// `E_m` by raw index: zero at odd `m`.
    pub fn e(&self, m: usize) -> BigInt {
        if m % 2 != 0 {
            BigInt::zero()
        } else {
            self.values[m / 2].clone()
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Residues `E_(2n) mod modulus`, normalized to `[0, modulus)`.
    pub fn residues(&self, modulus: u64) -> Vec<u64> {
        let m = BigInt::from(modulus);
        self.values
            .iter()
            .map(|v| {
                let mut r = v % &m;
                if r.sign() == Sign::Minus {
                    r += &m;
                }
                u64::try_from(r).unwrap()
            })
            .collect()
    }
}

/// Euler numbers `E_0 .. E_(2(N-1))` by the bisected recurrence
/// `E_(2n) = -sum_(k<n) C(2n, 2k) E_(2k)`.
pub fn euler_numbers(count: usize) -> ETable {
    assert!(count >= 1);
    let mut values = vec![BigInt::one()];
    for n in 1..count {
        let mut acc = BigInt::zero();
        for (k, e) in values.iter().enumerate() {
            acc += binomial(2 * n, 2 * k) * e;
        }
        values.push(-acc);
    }
    ETable::from_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn recurrence_reproduces_catalogued_values() {
        let t = w_recurrence(11);
        for (n, abs) in OEIS_A002115.iter().enumerate() {
            let mut expect = BigInt::from_str(abs).unwrap();
            if n % 2 == 1 {
                expect = -expect;
            }
            assert_eq!(*t.get(n), expect, "entry {}", n);
        }
    }

    #[test]
    fn recurrence_small_values() {
        let t = w_recurrence(7);
        assert_eq!(*t.get(0), BigInt::from(1));
        assert_eq!(*t.get(1), BigInt::from(-1));
        assert_eq!(*t.get(2), BigInt::from(19));
        assert_eq!(*t.get(3), BigInt::from(-1513));
        assert_eq!(*t.get(6), BigInt::from(105261234643i64));
    }

    #[test]
    fn raw_index_accessor_vanishes_off_multiples_of_three() {
        let t = w_recurrence(3);
        assert_eq!(t.w(0), BigInt::from(1));
        assert_eq!(t.w(1), BigInt::zero());
        assert_eq!(t.w(2), BigInt::zero());
        assert_eq!(t.w(3), BigInt::from(-1));
        assert_eq!(t.w(6), BigInt::from(19));
    }

    #[test]
    fn series_route_matches_recurrence() {
        let a = w_recurrence(11);
        let b = w_series(11);
        assert_eq!(a.values(), b.values());
        assert_eq!(
            *b.get(10),
            BigInt::from_str("2716778010767155313771539").unwrap()
        );
        assert_eq!(w_series(1).values(), &[BigInt::one()]);
    }

    #[test]
    fn explicit_route_small_and_cross() {
        assert_eq!(w_explicit(1), BigInt::from(-1));
        assert_eq!(w_explicit(2), BigInt::from(19));
        let t = w_recurrence(6);
        assert_eq!(w_explicit(5), *t.get(5));
    }

    #[test]
    fn determinant_route() {
        assert_eq!(w_determinant(1), BigInt::from(-1));
        assert_eq!(w_determinant(2), BigInt::from(19));
        let t = w_recurrence(21);
        assert_eq!(w_determinant(20), *t.get(20));
    }

    #[test]
    fn trudi_route() {
        assert_eq!(w_trudi(1), BigInt::from(-1));
        assert_eq!(w_trudi(2), BigInt::from(19));
        let t = w_recurrence(13);
        assert_eq!(w_trudi(12), *t.get(12));
    }

    #[test]
    fn inversion_determinant_identity() {
        let t = w_recurrence(16);
        for n in 1..=15 {
            assert!(inversion_det_check(n, &t), "n = {}", n);
        }
    }

    #[test]
    fn euler_values() {
        let e = euler_numbers(8);
        assert_eq!(e.values()[..4], [1, -1, 5, -61].map(BigInt::from));
        assert_eq!(*e.get(4), BigInt::from(1385));
        assert_eq!(*e.get(7), BigInt::from(-199360981i64));
        assert_eq!(e.e(3), BigInt::zero());
        assert_eq!(e.e(6), BigInt::from(-61));
    }

    #[test]
    fn sign_law_holds() {
        let t = w_recurrence(40);
        for n in 0..t.len() {
            let v = t.get(n);
            assert!(!v.is_zero());
            assert_eq!(v.sign() == Sign::Minus, n % 2 == 1, "n = {}", n);
        }
    }

    #[test]
    fn residues_are_normalized() {
        let t = w_recurrence(4);
        assert_eq!(t.residues(9), vec![1, 8, 1, 8]);
        assert_eq!(t.residues(27), vec![1, 26, 19, 26]);
    }
}
