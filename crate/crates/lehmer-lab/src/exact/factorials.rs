//! Memoized factorials and the binomial/multinomial coefficients built on them.
//!
//! The factorial table is global, grow-only and append-only: concurrent
//! readers share it, and a concurrent writer racing to extend it writes the
//! same values, so the table never holds two answers for one index.

use std::sync::RwLock;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    {
        let table = FACTORIALS.read().unwrap();
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// `1/n!` as an exact rational.
pub fn factorial_recip(n: usize) -> BigRational {
    BigRational::new(BigInt::one(), factorial(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Multinomial coefficient `(p_1 + ... + p_k)! / (p_1! ... p_k!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    let mut denom = BigInt::one();
    for &p in parts {
        denom *= factorial(p);
    }
    factorial(total) / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(9, 3), BigInt::from(84));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[1, 1]), BigInt::from(2));
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        // 9!/(3!3!3!) = 362880/216
        assert_eq!(multinomial(&[3, 3, 3]), BigInt::from(1680));
        assert_eq!(multinomial(&[]), BigInt::from(1));
    }

    #[test]
    fn concurrent_reads_and_growth() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || factorial(50 + i)))
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(factorial(50) * BigInt::from(51), factorial(51));
    }
}
