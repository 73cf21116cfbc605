//! Lower Hessenberg matrices and their determinants.
//!
//! Everything at or below the first superdiagonal may be nonzero; everything
//! above it is structurally zero. The determinant of such a matrix obeys a
//! linear recurrence in the leading principal minors, which evaluates exactly
//! in O(n^2) rational multiplications with no pivoting.

use num::rational::BigRational;
use num::{One, Zero};

/// Dense storage of the lower triangle plus the first superdiagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerHessenberg {
    n: usize,
    /// Row `i` holds columns `0..=min(i+1, n-1)`.
    rows: Vec<Vec<BigRational>>,
}

impl LowerHessenberg {
    /// Builds an `n x n` matrix from an entry generator over `(row, col)`.
    /// The generator is consulted only at stored positions.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> BigRational) -> Self {
        assert!(n >= 1, "matrix must be at least 1x1");
        let rows = (0..n)
            .map(|i| (0..=(i + 1).min(n - 1)).map(|j| entry(i, j)).collect())
            .collect();
        LowerHessenberg { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at `(row, col)`; zero above the superdiagonal.
    pub fn get(&self, row: usize, col: usize) -> BigRational {
        assert!(row < self.n && col < self.n);
        if col > row + 1 {
            BigRational::zero()
        } else {
            self.rows[row][col].clone()
        }
    }

    /// Exact determinant via the minor recurrence
    /// `D_k = sum_j (-1)^(k-j) a[k][j] (prod_i s_i) D_(j-1)`
    /// where `s_i` are superdiagonal entries.
    pub fn det(&self) -> BigRational {
        let n = self.n;
        // minors[k] = determinant of the leading k x k block
        let mut minors = Vec::with_capacity(n + 1);
        minors.push(BigRational::one());
        for k in 0..n {
            let mut acc = &self.rows[k][k] * &minors[k];
            let mut super_prod = BigRational::one();
            let mut sign_flip = true;
            for j in (0..k).rev() {
                super_prod *= &self.rows[j][j + 1];
                if super_prod.is_zero() {
                    break;
                }
                let term = &self.rows[k][j] * &super_prod * &minors[j];
                if sign_flip {
                    acc -= term;
                } else {
                    acc += term;
                }
                sign_flip = !sign_flip;
            }
            minors.push(acc);
        }
        minors.pop().unwrap()
    }
}

#[cfg(test)]
pub(crate) mod naive {
    use super::*;

    /// O(n!) cofactor expansion, used only as an independent oracle.
    pub fn det(m: &LowerHessenberg) -> BigRational {
        let n = m.dim();
        let full: Vec<Vec<BigRational>> =
            (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
        cofactor(&full)
    }

    fn cofactor(a: &[Vec<BigRational>]) -> BigRational {
        let n = a.len();
        if n == 1 {
            return a[0][0].clone();
        }
        let mut acc = BigRational::zero();
        for j in 0..n {
            if a[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigRational>> = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &a[0][j] * cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorials::factorial_recip;
    use num::BigInt;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn one_by_one() {
        let m = LowerHessenberg::from_fn(1, |_, _| rat(1, 6));
        assert_eq!(m.det(), rat(1, 6));
    }

    #[test]
    fn two_by_two_lehmer_matrix() {
        // [[1/3!, 1], [1/6!, 1/3!]] has determinant 19/720
        let m = LowerHessenberg::from_fn(2, |i, j| {
            if j == i + 1 {
                BigRational::one()
            } else {
                factorial_recip(3 * (i - j + 1))
            }
        });
        assert_eq!(m.det(), rat(19, 720));
    }

    #[test]
    fn identity_like_matrix() {
        let m = LowerHessenberg::from_fn(5, |i, j| {
            if j == i || j == i + 1 {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        assert_eq!(m.det(), BigRational::one());
    }

    #[test]
    fn matches_naive_cofactor_expansion() {
        // deterministic pseudo-random small rationals
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=6 {
            let mut vals = Vec::new();
            for _ in 0..(n * (n + 3)) {
                let num = (next() % 19) as i64 - 9;
                let den = (next() % 9) as i64 + 1;
                vals.push(rat(num, den));
            }
            let mut it = vals.into_iter();
            let m = LowerHessenberg::from_fn(n, |_, _| it.next().unwrap());
            assert_eq!(m.det(), naive::det(&m), "dimension {}", n);
        }
    }
}
