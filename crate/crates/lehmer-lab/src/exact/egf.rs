//! Truncated exponential generating functions on a sectioned basis.
//!
//! An [`Egf`] with step `r` stores entries `c[l]` representing the series
//! `sum_l c[l] * t^(r*l) / (r*l)!`. Step 3 carries the trisected series whose
//! reciprocal generates the Lehmer-Euler numbers, step 2 the `cosh` bisection,
//! and step 1 is an ordinary EGF. Products convolve with `C(r*n, r*k)`
//! weights, which keeps every intermediate value of the series handled here
//! integral whenever the end result is.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::factorials::binomial;
use crate::error::Error;

/// Truncated EGF on the `t^(step*l)/(step*l)!` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Egf {
    step: usize,
    coeffs: Vec<BigRational>,
}

impl Egf {
    /// Series with the given sectioned coefficients. `step >= 1`, at least one entry.
    pub fn new(step: usize, coeffs: Vec<BigRational>) -> Self {
        assert!(step >= 1, "step must be positive");
        assert!(!coeffs.is_empty(), "series needs at least one entry");
        Egf { step, coeffs }
    }

    /// The sectioned exponential `sum_l t^(step*l)/(step*l)!`: every entry 1.
    pub fn ones(step: usize, len: usize) -> Self {
        Egf::new(step, vec![BigRational::one(); len])
    }

    /// Multiplicative identity `1` truncated to `len` entries.
    pub fn one(step: usize, len: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); len];
        coeffs[0] = BigRational::one();
        Egf::new(step, coeffs)
    }

    /// `e^(scale * t)` as a step-1 series: entry `n` is `scale^n`.
    pub fn exp(scale: &BigRational, len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut p = BigRational::one();
        for _ in 0..len {
            coeffs.push(p.clone());
            p *= scale;
        }
        Egf::new(1, coeffs)
    }

    pub fn step(&self) -> usize {
        self.step
    }

    /// Number of stored entries (the truncation order).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry `l`: the coefficient of `t^(step*l)/(step*l)!`.
    pub fn coeff(&self, l: usize) -> &BigRational {
        &self.coeffs[l]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-expresses the series on the step-1 basis, zero-filling skipped indices.
    pub fn expand(&self) -> Egf {
        if self.step == 1 {
            return self.clone();
        }
        let len = (self.coeffs.len() - 1) * self.step + 1;
        let mut coeffs = vec![BigRational::zero(); len];
        for (l, c) in self.coeffs.iter().enumerate() {
            coeffs[l * self.step] = c.clone();
        }
        Egf::new(1, coeffs)
    }

    /// Views a step-1 series on a coarser basis; `None` if any skipped entry is nonzero.
    pub fn restrict(&self, step: usize) -> Option<Egf> {
        assert_eq!(self.step, 1, "restrict starts from a step-1 series");
        let mut coeffs = Vec::with_capacity(self.coeffs.len() / step + 1);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n % step == 0 {
                coeffs.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(Egf::new(step, coeffs))
    }

    fn binom(&self, n: usize, k: usize) -> BigRational {
        BigRational::from(binomial(self.step * n, self.step * k))
    }

    /// Reciprocal series; the constant term must be nonzero.
    pub fn invert(&self) -> Result<Egf, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let a0_inv = self.coeffs[0].recip();
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(a0_inv.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for k in 0..n {
                acc += self.binom(n, k) * &out[k] * &self.coeffs[n - k];
            }
            out.push(-acc * &a0_inv);
        }
        Ok(Egf::new(self.step, out))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Result<Egf, Error> {
        if exponent == 0 {
            return Ok(Egf::one(self.step, self.coeffs.len()));
        }
        let base = if exponent < 0 { self.invert()? } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut result = Egf::one(self.step, self.coeffs.len());
        let mut power = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &power;
            }
            e >>= 1;
            if e > 0 {
                power = &power * &power;
            }
        }
        Ok(result)
    }

    /// Formal derivative of a step-1 series: a left shift on this basis.
    pub fn derivative(&self) -> Egf {
        assert_eq!(self.step, 1, "derivative is defined on step-1 series");
        if self.coeffs.len() == 1 {
            return Egf::new(1, vec![BigRational::zero()]);
        }
        Egf::new(1, self.coeffs[1..].to_vec())
    }

    /// Formal antiderivative with zero constant term: a right shift.
    pub fn integral(&self) -> Egf {
        assert_eq!(self.step, 1, "integral is defined on step-1 series");
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        Egf::new(1, coeffs)
    }

    /// Formal square root by Newton iteration `g <- (g + f/g)/2`, seeded at 1.
    /// Requires constant term 1.
    pub fn sqrt(&self) -> Result<Egf, Error> {
        assert_eq!(self.step, 1, "sqrt is defined on step-1 series");
        if !self.coeffs[0].is_one() {
            return Err(Error::BadSeriesConstant("sqrt needs constant term 1"));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut g = Egf::one(1, self.coeffs.len());
        // precision doubles per iteration; a few extra passes are harmless
        let mut iters = 1;
        while (1usize << iters) < self.coeffs.len() + 1 {
            iters += 1;
        }
        for _ in 0..=iters {
            let next = (&g + &(self * &g.invert()?)).scale(&half);
            if next == g {
                break;
            }
            g = next;
        }
        debug_assert_eq!(&g * &g, *self);
        Ok(g)
    }

    /// Formal logarithm via the antiderivative of `f'/f`. Requires constant term 1.
    pub fn log(&self) -> Result<Egf, Error> {
        assert_eq!(self.step, 1, "log is defined on step-1 series");
        if !self.coeffs[0].is_one() {
            return Err(Error::BadSeriesConstant("log needs constant term 1"));
        }
        Ok((&self.derivative() * &self.invert()?).integral())
    }

    /// Entrywise scalar multiple.
    pub fn scale(&self, s: &BigRational) -> Egf {
        Egf::new(self.step, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// The entries as exact integers; `None` if any entry has a denominator.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl Mul for &Egf {
    type Output = Egf;

    fn mul(self, rhs: &Egf) -> Egf {
        assert_eq!(self.step, rhs.step, "series steps must match");
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "series lengths must match");
        let n_max = self.coeffs.len();
        let mut out = Vec::with_capacity(n_max);
        for n in 0..n_max {
            let mut acc = BigRational::zero();
            for k in 0..=n {
                let a = &self.coeffs[k];
                let b = &rhs.coeffs[n - k];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc += self.binom(n, k) * a * b;
            }
            out.push(acc);
        }
        Egf::new(self.step, out)
    }
}

impl Add for &Egf {
    type Output = Egf;

    fn add(self, rhs: &Egf) -> Egf {
        assert_eq!(self.step, rhs.step);
        assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        Egf::new(
            self.step,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for &Egf {
    type Output = Egf;

    fn sub(self, rhs: &Egf) -> Egf {
        assert_eq!(self.step, rhs.step);
        assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        Egf::new(
            self.step,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Neg for &Egf {
    type Output = Egf;

    fn neg(self) -> Egf {
        Egf::new(self.step, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Egf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let n = l * self.step;
            write!(f, "{} t^{}/{}!", c.abs(), n, n)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn invert_trisected_ones_gives_lehmer_euler_numbers() {
        let f = Egf::ones(3, 4);
        let g = f.invert().unwrap();
        let expect = [1i64, -1, 19, -1513];
        for (l, &e) in expect.iter().enumerate() {
            assert_eq!(*g.coeff(l), rat(e));
        }
    }

    #[test]
    fn invert_identity_and_constant() {
        let id = Egf::one(3, 5);
        assert_eq!(id.invert().unwrap(), id);

        let mut coeffs = vec![BigRational::zero(); 3];
        coeffs[0] = rat(2);
        let two = Egf::new(3, coeffs);
        assert_eq!(
            *two.invert().unwrap().coeff(0),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
    }

    #[test]
    fn invert_rejects_zero_constant() {
        let mut coeffs = vec![BigRational::zero(); 3];
        coeffs[1] = rat(1);
        let f = Egf::new(3, coeffs);
        assert!(matches!(f.invert(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn pow_squares_one_plus_t() {
        // (1 + t)^2 = 1 + 2t + 2 t^2/2!
        let f = Egf::new(1, vec![rat(1), rat(1), rat(0)]);
        let sq = f.pow(2).unwrap();
        assert_eq!(sq.coeffs(), &[rat(1), rat(2), rat(2)]);
    }

    #[test]
    fn pow_zero_is_one() {
        let f = Egf::ones(2, 6);
        assert_eq!(f.pow(0).unwrap(), Egf::one(2, 6));
    }

    #[test]
    fn negative_pow_of_cosh_gives_euler_numbers() {
        let sech = Egf::ones(2, 5).pow(-1).unwrap();
        let expect = [1i64, -1, 5, -61, 1385];
        for (l, &e) in expect.iter().enumerate() {
            assert_eq!(*sech.coeff(l), rat(e));
        }
    }

    #[test]
    fn expand_restrict_round_trip() {
        let f = Egf::new(3, vec![rat(1), rat(4), rat(-7)]);
        let e = f.expand();
        assert_eq!(e.len(), 7);
        assert_eq!(e.restrict(3), Some(f));
        assert_eq!(Egf::ones(1, 4).restrict(3), None);
    }

    #[test]
    fn sqrt_and_log_are_exact() {
        // sqrt(1 + 2t + 2t^2/2! + ...) where f = (1+t)^2 in EGF form
        let f = Egf::new(1, vec![rat(1), rat(1), rat(0), rat(0)]).pow(2).unwrap();
        let g = f.sqrt().unwrap();
        assert_eq!(g.coeffs(), &[rat(1), rat(1), rat(0), rat(0)]);

        // log(e^t) = t
        let e = Egf::exp(&rat(1), 6);
        let l = e.log().unwrap();
        let mut expect = vec![BigRational::zero(); 6];
        expect[1] = rat(1);
        assert_eq!(l.coeffs(), &expect[..]);
    }
}
