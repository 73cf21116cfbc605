//! The `Delta(x,k)` polynomial sequence and central factorial numbers of both
//! kinds, with exact checks of the identities tying them to Euler numbers.
//!
//! `Delta` is defined by `Delta(x,k+1) = (x+1)(2x+1) Delta(x+1,k) - x^2 Delta(x,k)`
//! from `Delta(x,0) = 1`; its constant terms are signed Euler numbers.
//! `t(n,k)` expands central factorials into powers, `T(n,k)` powers into
//! central factorials; both satisfy two-step recurrences that the module
//! cross-checks against the defining product and basis expansions and the
//! exponential generating functions.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::exact::egf::Egf;
use crate::exact::factorials::factorial;
use crate::lehmer::{euler_numbers, ETable};
use crate::poly::{IntPoly, RatPoly};

/// `Delta(x, k)`: monic, integer coefficients, degree `2k`.
pub fn delta_poly(k: usize) -> IntPoly {
    delta_sequence(k).pop().unwrap()
}

/// `Delta(x, 0) .. Delta(x, k)` in one sweep of the recurrence.
pub fn delta_sequence(k: usize) -> Vec<IntPoly> {
    let one = BigInt::one();
    // (x+1)(2x+1) = 2x^2 + 3x + 1
    let front = IntPoly::new(vec![one.clone(), BigInt::from(3), BigInt::from(2)]);
    let x_sq = IntPoly::monomial(one.clone(), 2);
    let mut seq = vec![IntPoly::one()];
    for _ in 0..k {
        let last = seq.last().unwrap();
        let shifted = last.shift(&one);
        let next = &(&front * &shifted) - &(&x_sq * last);
        seq.push(next);
    }
    seq
}

/// Triangular table of the central factorial numbers `t(n, k)` of the first
/// kind, by the recurrence `t(n,k) = t(n-2,k-2) - ((n-2)^2/4) t(n-2,k)`.
/// Odd-index values are genuinely rational (denominators are powers of 4).
#[derive(Debug, Clone)]
pub struct CfnFirstTable {
    rows: Vec<Vec<BigRational>>,
}

impl CfnFirstTable {
    pub fn up_to(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigRational::zero(); n + 1];
            row[n] = BigRational::one();
            if n >= 2 {
                let factor = BigRational::new(
                    BigInt::from(((n - 2) * (n - 2)) as i64),
                    BigInt::from(4),
                );
                for k in 1..n {
                    if (n + k) % 2 != 0 {
                        continue;
                    }
                    let prev_lower = if k >= 2 { rows[n - 2][k - 2].clone() } else { BigRational::zero() };
                    let prev_same = if k <= n - 2 { rows[n - 2][k].clone() } else { BigRational::zero() };
                    row[k] = prev_lower - &factor * prev_same;
                }
            }
            rows.push(row);
        }
        CfnFirstTable { rows }
    }

    pub fn max_index(&self) -> usize {
        self.rows.len() - 1
    }

    /// `t(n, k)`; zero outside the triangle or at odd `n + k`.
    pub fn get(&self, n: usize, k: usize) -> BigRational {
        if k > n || (n + k) % 2 != 0 {
            return BigRational::zero();
        }
        self.rows[n][k].clone()
    }
}

/// `t(n, k)` as a one-off (builds the triangle up to `n`).
pub fn t_first(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    CfnFirstTable::up_to(n).get(n, k)
}

/// The central factorial polynomial `x (x + n/2 - 1)(x + n/2 - 2) ... (x - n/2 + 1)`
/// of degree `n`; the empty product for `n = 0`.
pub fn central_factorial_poly(n: usize) -> RatPoly {
    if n == 0 {
        return RatPoly::one();
    }
    let mut p = RatPoly::monomial(BigRational::one(), 1);
    for j in 1..n {
        let offset = BigRational::new(BigInt::from(n as i64 - 2 * j as i64), BigInt::from(2));
        // x + (n/2 - j)
        let factor = RatPoly::new(vec![offset, BigRational::one()]);
        p = &p * &factor;
    }
    p
}

/// Coefficients of the defining product for `t(n, .)`, checked entrywise
/// against the recurrence table before being returned.
pub fn t_first_via_product(n: usize) -> Vec<BigRational> {
    assert!(n >= 1);
    let p = central_factorial_poly(n);
    let table = CfnFirstTable::up_to(n);
    let coeffs: Vec<BigRational> = (0..=n).map(|k| p.coeff(k)).collect();
    for (k, c) in coeffs.iter().enumerate() {
        assert_eq!(
            *c,
            table.get(n, k),
            "internal consistency: product and recurrence for t({n},{k}) disagree"
        );
    }
    coeffs
}

/// Triangular table of the central factorial numbers `T(n, k)` of the second
/// kind, by `T(n,k) = T(n-2,k-2) + (k^2/4) T(n-2,k)`. Kept rational because
/// odd-odd entries have genuine powers of 4 below the line; the even-even
/// entries consumed by the Euler-number identity are integral.
#[derive(Debug, Clone)]
pub struct CfnSecondTable {
    rows: Vec<Vec<BigRational>>,
}

impl CfnSecondTable {
    pub fn up_to(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigRational::zero(); n + 1];
            row[n] = BigRational::one();
            if n >= 2 {
                for k in 1..n {
                    if (n + k) % 2 != 0 {
                        continue;
                    }
                    let factor = BigRational::new(BigInt::from((k * k) as i64), BigInt::from(4));
                    let prev_lower = if k >= 2 { rows[n - 2][k - 2].clone() } else { BigRational::zero() };
                    let prev_same = if k <= n - 2 { rows[n - 2][k].clone() } else { BigRational::zero() };
                    row[k] = prev_lower + factor * prev_same;
                }
            }
            rows.push(row);
        }
        CfnSecondTable { rows }
    }

    pub fn max_index(&self) -> usize {
        self.rows.len() - 1
    }

    /// `T(n, k)`; zero outside the triangle or at odd `n + k`.
    pub fn get(&self, n: usize, k: usize) -> BigRational {
        if k > n || (n + k) % 2 != 0 {
            return BigRational::zero();
        }
        self.rows[n][k].clone()
    }

    /// `T(n, k)` asserted integral (valid on the even-even entries).
    pub fn get_int(&self, n: usize, k: usize) -> BigInt {
        let v = self.get(n, k);
        assert!(
            v.is_integer(),
            "internal consistency: T({n},{k}) = {v} is not integral"
        );
        v.to_integer()
    }
}

/// `T(n, k)` as a one-off (builds the triangle up to `n`).
pub fn t_second(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    CfnSecondTable::up_to(n).get(n, k)
}

/// Checks the first-kind EGF `(2 log(x/2 + sqrt(x^2/4 + 1)))^k = k! sum t(n,k) x^n/n!`
/// through order `n <= order`.
pub fn gf_check_first(k: usize, order: usize) -> bool {
    assert!(k >= 1);
    let len = order + 1;
    // u = 1 + x^2/4 on the divided basis: entry 2 is 2!/4 = 1/2
    let mut u_coeffs = vec![BigRational::zero(); len];
    u_coeffs[0] = BigRational::one();
    if len > 2 {
        u_coeffs[2] = BigRational::new(BigInt::one(), BigInt::from(2));
    }
    let u = Egf::new(1, u_coeffs);
    let root = u.sqrt().expect("constant term is 1");
    // h = x/2 + sqrt(1 + x^2/4)
    let mut half_x = vec![BigRational::zero(); len];
    if len > 1 {
        half_x[1] = BigRational::new(BigInt::one(), BigInt::from(2));
    }
    let h = &root + &Egf::new(1, half_x);
    let series = h.log().expect("constant term is 1").scale(&BigRational::from(BigInt::from(2)));
    let powered = series.pow(k as i64).expect("positive power");

    let table = CfnFirstTable::up_to(order);
    let k_fact = BigRational::from(factorial(k));
    (0..=order).all(|n| {
        let expect = if k <= n { table.get(n, k) * &k_fact } else { BigRational::zero() };
        *powered.coeff(n) == expect
    })
}

/// Checks the second-kind EGF `(e^(x/2) - e^(-x/2))^k = k! sum T(n,k) x^n/n!`
/// through order `n <= order`.
pub fn gf_check_second(k: usize, order: usize) -> bool {
    assert!(k >= 1);
    let len = order + 1;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let series = &Egf::exp(&half, len) - &Egf::exp(&-half.clone(), len);
    let powered = series.pow(k as i64).expect("positive power");

    let table = CfnSecondTable::up_to(order);
    let k_fact = BigRational::from(factorial(k));
    (0..=order).all(|n| {
        let expect = if k <= n { table.get(n, k) * &k_fact } else { BigRational::zero() };
        *powered.coeff(n) == expect
    })
}

/// Checks the change-of-basis identity `x^n = sum_k T(n,k) x(x+k/2-1)...(x-k/2+1)`.
pub fn basis_check_second(n: usize) -> bool {
    assert!(n >= 1);
    let table = CfnSecondTable::up_to(n);
    let mut acc = RatPoly::zero();
    for k in 0..=n {
        let coeff = table.get(n, k);
        if coeff.is_zero() {
            continue;
        }
        acc = &acc + &central_factorial_poly(k).scale(&coeff);
    }
    acc == RatPoly::monomial(BigRational::one(), n)
}

/// Checks `E_(2n+2k) = sum_(j=0)^n (-1)^(j-k) (2j)! Delta(j,k) / 2^j * T(2n, 2j)`.
pub fn thm5_check(n: usize, k: usize) -> bool {
    let euler = euler_numbers(n + k + 1);
    let delta_k = delta_poly(k);
    let second = CfnSecondTable::up_to(2 * n);
    thm5_rhs(n, k, &delta_k, &second) == *euler.get(n + k)
}

fn thm5_rhs(n: usize, k: usize, delta_k: &IntPoly, second: &CfnSecondTable) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=n {
        // (2j)!/2^j is an integer
        let weight = factorial(2 * j) / BigInt::from(2).pow(j as u32);
        let term = weight * delta_k.eval(&BigInt::from(j)) * second.get_int(2 * n, 2 * j);
        if (j + k) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Checks `sum_(j=0)^n (-4)^(n-j) t(2n+1, 2j+1) Delta(x,j) = (x+1)(x+2)...(x+2n)`,
/// with every summand's cleared coefficient verified integral.
pub fn thm6_check(n: usize) -> bool {
    let first = CfnFirstTable::up_to(2 * n + 1);
    let deltas = delta_sequence(n);
    let mut acc = RatPoly::zero();
    for (j, delta) in deltas.iter().enumerate() {
        let mut scale = first.get(2 * n + 1, 2 * j + 1);
        let four_pow = BigInt::from(4).pow((n - j) as u32);
        scale *= BigRational::from(if (n - j) % 2 == 1 { -four_pow } else { four_pow });
        assert!(
            scale.is_integer(),
            "internal consistency: 4^(n-j) t(2n+1,2j+1) must clear denominators at n={n} j={j}"
        );
        acc = &acc + &RatPoly::from_int(delta).scale(&scale);
    }
    let lhs = match acc.to_int() {
        Some(p) => p,
        None => return false,
    };
    lhs == rising_product(n)
}

/// `(x+1)(x+2)...(x+2n)` as an integer polynomial; 1 for `n = 0`.
pub fn rising_product(n: usize) -> IntPoly {
    let mut p = IntPoly::one();
    for a in 1..=(2 * n) {
        p = &p * &IntPoly::new(vec![BigInt::from(a as i64), BigInt::one()]);
    }
    p
}

/// Checks the scalar reduction `sum_j 4^(n-j) t(2n+1,2j+1) E_(2j) = (-1)^n (2n)!`.
pub fn thm6_remark_check(n: usize) -> bool {
    let first = CfnFirstTable::up_to(2 * n + 1);
    let euler = euler_numbers(n + 1);
    let mut acc = BigRational::zero();
    for j in 0..=n {
        let four_pow = BigRational::from(BigInt::from(4).pow((n - j) as u32));
        acc += four_pow * first.get(2 * n + 1, 2 * j + 1) * BigRational::from(euler.get(j).clone());
    }
    let expect = if n % 2 == 1 { -factorial(2 * n) } else { factorial(2 * n) };
    acc == BigRational::from(expect)
}

/// `Delta(0, k) = (-1)^k E_(2k)` for all `k <= max_k`.
pub fn delta_constant_terms_are_euler(max_k: usize, euler: &ETable) -> bool {
    let deltas = delta_sequence(max_k);
    deltas.iter().enumerate().all(|(k, d)| {
        let signed = if k % 2 == 1 { -d.coeff(0) } else { d.coeff(0) };
        signed == *euler.get(k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(int(n), int(d))
    }

    #[test]
    fn delta_first_three() {
        assert_eq!(delta_poly(1).to_string(), "x^2+3x+1");
        assert_eq!(delta_poly(2).to_string(), "x^4+10x^3+25x^2+20x+5");
        assert_eq!(
            delta_poly(3).to_string(),
            "x^6+21x^5+140x^4+385x^3+490x^2+287x+61"
        );
    }

    #[test]
    fn delta_shape_invariants() {
        for (k, d) in delta_sequence(15).iter().enumerate() {
            assert_eq!(d.degree(), Some(2 * k));
            assert!(d.leading_coeff().unwrap().is_one());
        }
    }

    #[test]
    fn delta_constant_terms() {
        let euler = euler_numbers(13);
        assert!(delta_constant_terms_are_euler(12, &euler));
    }

    #[test]
    fn first_kind_values() {
        assert_eq!(t_first(3, 1), rat(-1, 4));
        assert_eq!(t_first(4, 2), rat(-1, 1));
        assert_eq!(t_first(5, 5), BigRational::one());
        assert_eq!(t_first(4, 1), BigRational::zero());
        assert_eq!(t_first(2, 4), BigRational::zero());
    }

    #[test]
    fn first_kind_product_expansion() {
        assert_eq!(
            t_first_via_product(3),
            vec![rat(0, 1), rat(-1, 4), rat(0, 1), rat(1, 1)]
        );
        assert_eq!(
            t_first_via_product(2),
            vec![rat(0, 1), rat(0, 1), rat(1, 1)]
        );
        // the function asserts agreement with the recurrence internally
        for n in 1..=14 {
            t_first_via_product(n);
        }
    }

    #[test]
    fn second_kind_values() {
        let table = CfnSecondTable::up_to(8);
        assert_eq!(table.get_int(4, 2), int(1));
        assert_eq!(table.get_int(6, 2), int(1));
        assert_eq!(table.get_int(6, 4), int(5));
        assert_eq!(table.get(3, 1), rat(1, 4));
        assert_eq!(table.get(5, 5), BigRational::one());
    }

    #[test]
    fn generating_function_checks() {
        assert!(gf_check_first(1, 7));
        assert!(gf_check_first(3, 9));
        assert!(gf_check_second(2, 8));
        assert!(gf_check_second(4, 10));
    }

    #[test]
    fn gf_first_low_order_coefficient() {
        // 2 asinh(x/2) = x - x^3/24 + ...; divided-basis entry 3 is -1/4 = t(3,1)
        assert!(gf_check_first(1, 5));
        assert_eq!(t_first(3, 1), rat(-1, 4));
    }

    #[test]
    fn basis_expansion_second_kind() {
        for n in 1..=10 {
            assert!(basis_check_second(n), "n = {n}");
        }
    }

    #[test]
    fn theorem5_examples() {
        assert!(thm5_check(0, 1));
        for n in 0..=6 {
            assert!(thm5_check(n, 0), "eq:lz at n={n}");
        }
        assert!(thm5_check(3, 2));
    }

    #[test]
    fn theorem6_and_remark() {
        for n in 0..=6 {
            assert!(thm6_check(n), "n = {n}");
            assert!(thm6_remark_check(n), "n = {n}");
        }
    }

    #[test]
    fn theorem6_smallest_cases_by_hand() {
        // n = 1: (-4)(-1/4) + (x^2+3x+1) = x^2+3x+2 = (x+1)(x+2)
        assert_eq!(rising_product(1).to_string(), "x^2+3x+2");
        assert!(thm6_check(1));
        // remark n = 1: 4*(-1/4)*1 + 1*(-1) = -2 = -2!
        assert!(thm6_remark_check(1));
    }
}
