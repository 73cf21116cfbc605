//! Verification suites behind `lehmer-lab verify`.
//!
//! Each suite runs a batch of named checks with wall-clock timing and
//! collects them into a [`VerificationSuiteResult`]; the overall status is
//! fail exactly when some check failed. Default bounds reproduce the full
//! published tables, so `verify all` with no flags is the complete run.

use std::time::Instant;

use num::bigint::{BigInt, Sign};
use num::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;

use crate::central_factorial as cfn;
use crate::congruence::{
    residue_cycle, rou_binomial_sum, scan_conjecture, stern_check, verify_mod27, verify_mod81_cases,
    verify_mod9, CheckStatus, CongruenceReport,
};
use crate::higher_order::{euler_higher_luo, w_higher_explicit, w_higher_series};
use crate::incomplete::{
    w_ge_determinant, w_ge_explicit, w_ge_recurrence, w_ge_trudi, w_le_determinant, w_le_explicit,
    w_le_recurrence, w_le_trudi,
};
use crate::lehmer::{
    euler_numbers, inversion_det_check, w_determinant, w_explicit, w_recurrence, w_series, w_trudi,
    OEIS_A002115,
};

/// One named check with timing.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

/// A suite's worth of checks; `passed` is false iff any check failed.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationSuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationSuiteResult {
    fn collect(suite: &str, checks: Vec<CheckOutcome>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        VerificationSuiteResult { suite: suite.to_string(), passed, checks }
    }
}

/// Optional bound overrides from the command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bounds {
    pub upto: Option<usize>,
    pub k: Option<u32>,
    pub m: Option<usize>,
    pub alpha: Option<usize>,
}

fn timed(name: &str, run: impl FnOnce() -> Result<String, String>) -> CheckOutcome {
    let start = Instant::now();
    let result = run();
    let millis = start.elapsed().as_millis();
    match result {
        Ok(detail) => CheckOutcome { name: name.to_string(), passed: true, detail, millis },
        Err(detail) => CheckOutcome { name: name.to_string(), passed: false, detail, millis },
    }
}

fn timed_report(name: &str, run: impl FnOnce() -> CongruenceReport) -> CheckOutcome {
    let start = Instant::now();
    let report = run();
    let millis = start.elapsed().as_millis();
    match report.status {
        CheckStatus::Verified => CheckOutcome {
            name: name.to_string(),
            passed: true,
            detail: format!("{} for {}", report.theorem_id, report.range_checked),
            millis,
        },
        CheckStatus::Counterexample { index, witness } => CheckOutcome {
            name: name.to_string(),
            passed: false,
            detail: format!("counterexample at index {index}: {witness}"),
            millis,
        },
    }
}

/// Value reproduction, five-method agreement, inversion determinant, sign law.
pub fn methods_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto_methods = bounds.upto.unwrap_or(60);
    let upto_explicit = 18.min(upto_methods);
    let upto_inversion = 15.min(upto_methods);
    let upto_sign = 300.max(upto_methods);
    let mut checks = Vec::new();

    checks.push(timed("catalogued-values", || {
        let table = w_recurrence(11);
        for (n, abs) in OEIS_A002115.iter().enumerate() {
            let expect = BigInt::from_str(abs).unwrap();
            let got = table.get(n).abs();
            if got != expect {
                return Err(format!("|W({})| = {got}, catalogue says {expect}", 3 * n));
            }
        }
        Ok("|W(3n)| matches the 11 catalogued values".to_string())
    }));

    let reference = w_recurrence(upto_methods + 1);

    checks.push(timed("series-agreement", || {
        let series = w_series(upto_methods + 1);
        for n in 0..=upto_methods {
            if series.get(n) != reference.get(n) {
                return Err(format!(
                    "series {} vs recurrence {} at n={n}",
                    series.get(n),
                    reference.get(n)
                ));
            }
        }
        Ok(format!("series = recurrence for n <= {upto_methods}"))
    }));

    checks.push(timed("determinant-agreement", || {
        let mismatch = (1..=upto_methods)
            .into_par_iter()
            .find_map_first(|n| (w_determinant(n) != *reference.get(n)).then_some(n));
        match mismatch {
            Some(n) => Err(format!("determinant disagrees with recurrence at n={n}")),
            None => Ok(format!("determinant = recurrence for n <= {upto_methods}")),
        }
    }));

    checks.push(timed("trudi-agreement", || {
        let mismatch = (1..=upto_methods)
            .into_par_iter()
            .find_map_first(|n| (w_trudi(n) != *reference.get(n)).then_some(n));
        match mismatch {
            Some(n) => Err(format!("trudi disagrees with recurrence at n={n}")),
            None => Ok(format!("trudi = recurrence for n <= {upto_methods}")),
        }
    }));

    checks.push(timed("explicit-agreement", || {
        let mismatch = (1..=upto_explicit)
            .into_par_iter()
            .find_map_first(|n| (w_explicit(n) != *reference.get(n)).then_some(n));
        match mismatch {
            Some(n) => Err(format!("explicit disagrees with recurrence at n={n}")),
            None => Ok(format!("explicit = recurrence for n <= {upto_explicit}")),
        }
    }));

    checks.push(timed("inversion-determinant", || {
        let table = w_recurrence(upto_inversion + 1);
        for n in 1..=upto_inversion {
            if !inversion_det_check(n, &table) {
                return Err(format!("inversion determinant fails at n={n}"));
            }
        }
        Ok(format!("det = (-1)^n/(3n)! for n <= {upto_inversion}"))
    }));

    checks.push(timed("sign-law", || {
        let table = w_recurrence(upto_sign + 1);
        for n in 0..=upto_sign {
            let v = table.get(n);
            if v.is_zero() || (v.sign() == Sign::Minus) != (n % 2 == 1) {
                return Err(format!("sign law fails at n={n}: W({}) = {v}", 3 * n));
            }
        }
        Ok(format!("(-1)^n W(3n) > 0 for n <= {upto_sign}"))
    }));

    VerificationSuiteResult::collect("methods", checks)
}

pub fn mod9_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(301);
    VerificationSuiteResult::collect(
        "mod9",
        vec![timed_report("mod9", || verify_mod9(upto))],
    )
}

pub fn mod27_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(301);
    VerificationSuiteResult::collect(
        "mod27",
        vec![timed_report("mod27", || verify_mod27(upto))],
    )
}

pub fn mod81_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(301);
    let sums_upto = bounds.m.unwrap_or(12);
    let mut checks = vec![timed_report("mod81-classes-and-sums", || {
        verify_mod81_cases(upto, sums_upto)
    })];
    checks.push(timed("rou-binomial-sums", || {
        // the dual-route assertion lives inside rou_binomial_sum
        for n in 1..=60 {
            for offset in 0..3 {
                for extra in 0..3 {
                    rou_binomial_sum(n, offset, extra);
                }
            }
        }
        Ok("direct = Eisenstein closed form for n <= 60, all offsets".to_string())
    }));
    VerificationSuiteResult::collect("mod81", checks)
}

/// Published residue cycles mod 3^2 .. 3^5, anchored after the index-0 term.
pub const CYCLE_MOD_9: [u64; 2] = [8, 1];
pub const CYCLE_MOD_27: [u64; 6] = [26, 19, 26, 1, 8, 1];
pub const CYCLE_MOD_81: [u64; 18] =
    [80, 19, 26, 28, 62, 28, 26, 19, 80, 1, 62, 55, 53, 19, 53, 55, 62, 1];
pub const CYCLE_MOD_243: [u64; 54] = [
    242, 19, 188, 109, 62, 28, 107, 19, 80, 82, 224, 217, 53, 181, 53, 217, 224, 82, 80, 19, 107,
    28, 62, 109, 188, 19, 242, 1, 224, 55, 134, 181, 215, 136, 224, 163, 161, 19, 26, 190, 62,
    190, 26, 19, 161, 163, 224, 136, 215, 181, 134, 55, 224, 1,
];

fn cycle_scan_length(k: u32) -> usize {
    // three full candidate periods of length 2*3^(k-2), plus slack
    3 * 2 * 3usize.pow(k.saturating_sub(2)) + 10
}

pub fn cycles_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let k_max = bounds.k.unwrap_or(6).max(2);
    let mut checks = Vec::new();
    let published: [(u32, &[u64]); 4] = [
        (2, &CYCLE_MOD_9),
        (3, &CYCLE_MOD_27),
        (4, &CYCLE_MOD_81),
        (5, &CYCLE_MOD_243),
    ];
    for (k, expect) in published {
        if k > k_max {
            continue;
        }
        checks.push(timed(&format!("cycle-mod-3^{k}"), || {
            let cycle = residue_cycle(k, cycle_scan_length(k))
                .map_err(|e| e.to_string())?
                .rebase(1)
                .unwrap();
            if cycle.pre_period != [1] {
                return Err(format!("pre-period {:?}, expected [1]", cycle.pre_period));
            }
            if cycle.period != expect {
                return Err(format!("period {:?}, expected {:?}", cycle.period, expect));
            }
            if !cycle.palindromic_halves() {
                return Err("period halves are not palindromic".to_string());
            }
            Ok(format!("pre-period [1], period {:?}, palindromic halves", cycle.period))
        }));
    }
    if k_max >= 6 {
        checks.push(timed("palindrome-breaks-at-3^6", || {
            let cycle = residue_cycle(6, cycle_scan_length(6))
                .map_err(|e| e.to_string())?
                .rebase(1)
                .unwrap();
            let len = cycle.period.len();
            if cycle.palindromic_halves() {
                return Err(format!("period of length {len} is unexpectedly palindromic"));
            }
            Ok(format!("period length {len}, palindromic halves fail as published"))
        }));
    }
    VerificationSuiteResult::collect("cycles", checks)
}

pub fn conjecture_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let k_max = bounds.k.unwrap_or(5);
    let mut checks = Vec::new();
    for k in 1..=k_max {
        let period = 2 * 3usize.pow(k - 1);
        let upto = bounds.upto.unwrap_or(3 * period + 10).max(3 * period);
        checks.push(timed_report(&format!("conjecture-k-{k}"), || {
            scan_conjecture(k, upto)
        }));
    }
    VerificationSuiteResult::collect("conjecture", checks)
}

pub fn stern_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let k_max = bounds.k.unwrap_or(6);
    let upto = bounds.upto.unwrap_or(101);
    let checks = (1..=k_max)
        .map(|k| timed_report(&format!("stern-k-{k}"), || stern_check(k, upto)))
        .collect();
    VerificationSuiteResult::collect("stern", checks)
}

pub fn incomplete_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(30);
    let m_max = bounds.m.unwrap_or(6);
    // the explicit route enumerates compositions; its count grows like 2^n
    // once the part bound stops biting, so wide-window cases stay at n <= 18
    let explicit_cap = 18.min(upto);
    let mut checks = Vec::new();

    let full = w_recurrence(upto + 1);

    checks.push(timed("reduction-laws", || {
        let ge1 = w_ge_recurrence(upto + 1, 1);
        if ge1.values() != full.values() {
            return Err("ge with m=1 does not reduce to the complete table".to_string());
        }
        let le_wide = w_le_recurrence(upto + 1, upto);
        if le_wide.values() != full.values() {
            return Err("le with m >= n does not reduce to the complete table".to_string());
        }
        for n in 1..=upto.min(8) {
            if w_le_explicit(n, n + 2) != *full.get(n) {
                return Err(format!("le explicit with m > n differs at n={n}"));
            }
        }
        Ok(format!("m=1 (ge) and m >= n (le) reduce to W for n <= {upto}"))
    }));

    checks.push(timed("zero-block", || {
        for m in 2..=m_max {
            let t = w_ge_recurrence(upto + 1, m);
            for n in 1..m.min(upto + 1) {
                if !t.get(n).is_zero() {
                    return Err(format!("W(3*{n}, >={m}) = {} != 0", t.get(n)));
                }
            }
            if m <= upto && t.get(m).is_zero() {
                return Err(format!("W(3*{m}, >={m}) vanishes unexpectedly"));
            }
        }
        Ok(format!("zero block exact for m <= {m_max}"))
    }));

    for m in 1..=m_max {
        checks.push(timed(&format!("four-methods-m-{m}"), || {
            let le = w_le_recurrence(upto + 1, m);
            let ge = w_ge_recurrence(upto + 1, m);
            let failure = (1..=upto).into_par_iter().find_map_first(|n| {
                if w_le_determinant(n, m) != *le.get(n) {
                    return Some(format!("le determinant at n={n}"));
                }
                if w_ge_determinant(n, m) != *ge.get(n) {
                    return Some(format!("ge determinant at n={n}"));
                }
                if w_le_trudi(n, m) != *le.get(n) {
                    return Some(format!("le trudi at n={n}"));
                }
                if w_ge_trudi(n, m) != *ge.get(n) {
                    return Some(format!("ge trudi at n={n}"));
                }
                let le_explicit_ok = m <= 2 || n <= explicit_cap;
                if le_explicit_ok && w_le_explicit(n, m) != *le.get(n) {
                    return Some(format!("le explicit at n={n}"));
                }
                let ge_explicit_ok = m >= 2 || n <= explicit_cap;
                if ge_explicit_ok && w_ge_explicit(n, m) != *ge.get(n) {
                    return Some(format!("ge explicit at n={n}"));
                }
                None
            });
            match failure {
                Some(msg) => Err(msg),
                None => Ok(format!("recurrence/explicit/determinant/trudi agree for n <= {upto}")),
            }
        }));
    }

    VerificationSuiteResult::collect("incomplete", checks)
}

pub fn higher_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(24);
    let alpha_max = bounds.alpha.unwrap_or(4);
    let mut checks = Vec::new();

    checks.push(timed("reductions", || {
        let w3 = w_higher_series(3, 1, upto + 1);
        let base_w = w_recurrence(upto / 3 + 1);
        let w2 = w_higher_series(2, 1, upto + 1);
        let base_e = euler_numbers(upto / 2 + 1);
        for n in 0..=upto {
            let expect_w = if n % 3 == 0 { base_w.get(n / 3).clone() } else { BigInt::zero() };
            if *w3.get(n) != expect_w {
                return Err(format!("step-3 order-1 differs from W at n={n}"));
            }
            let expect_e = if n % 2 == 0 { base_e.get(n / 2).clone() } else { BigInt::zero() };
            if *w2.get(n) != expect_e {
                return Err(format!("step-2 order-1 differs from E at n={n}"));
            }
        }
        Ok(format!("(3,1) = W table and (2,1) = E table for n <= {upto}"))
    }));

    for alpha in 1..=alpha_max {
        checks.push(timed(&format!("explicit-vs-series-alpha-{alpha}"), || {
            let s2 = w_higher_series(2, alpha, upto + 1);
            let s3 = w_higher_series(3, alpha, upto + 1);
            let failure = (0..=upto).into_par_iter().find_map_first(|n| {
                if w_higher_explicit(2, alpha, n) != *s2.get(n) {
                    return Some(format!("r=2 explicit vs series at n={n}"));
                }
                if w_higher_explicit(3, alpha, n) != *s3.get(n) {
                    return Some(format!("r=3 explicit vs series at n={n}"));
                }
                if euler_higher_luo(alpha, n) != *s2.get(n) {
                    return Some(format!("Luo formula vs series at n={n}"));
                }
                None
            });
            match failure {
                Some(msg) => Err(msg),
                None => Ok(format!("explicit = series = Luo for r in {{2,3}}, n <= {upto}")),
            }
        }));
    }

    checks.push(timed("vanishing-off-step", || {
        for (r, alpha) in [(2usize, 2usize), (3, 2), (3, 3)] {
            let t = w_higher_series(r, alpha, upto + 1);
            for n in 0..=upto {
                if n % r != 0 && !t.get(n).is_zero() {
                    return Err(format!("W_({r},{n})^({alpha}) nonzero off multiples of {r}"));
                }
                if n % r != 0 && !w_higher_explicit(r, alpha, n).is_zero() {
                    return Err(format!("explicit W_({r},{n})^({alpha}) nonzero"));
                }
            }
        }
        Ok("values vanish off multiples of the step, both routes".to_string())
    }));

    VerificationSuiteResult::collect("higher", checks)
}

pub fn cfn_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(14);
    let gf_k_max = bounds.k.map(|k| k as usize).unwrap_or(5);
    let mut checks = Vec::new();

    checks.push(timed("delta-displayed-polynomials", || {
        let expect = [
            "x^2+3x+1",
            "x^4+10x^3+25x^2+20x+5",
            "x^6+21x^5+140x^4+385x^3+490x^2+287x+61",
        ];
        for (k, e) in expect.iter().enumerate() {
            let got = cfn::delta_poly(k + 1).to_string();
            if got != *e {
                return Err(format!("Delta(x,{}) = {got}, expected {e}", k + 1));
            }
        }
        Ok("Delta(x,k) for k = 1, 2, 3 match coefficientwise".to_string())
    }));

    checks.push(timed("delta-shape", || {
        for (k, d) in cfn::delta_sequence(15).iter().enumerate() {
            if d.degree() != Some(2 * k) || !d.leading_coeff().unwrap().is_one() {
                return Err(format!("Delta(x,{k}) degree/leading coefficient"));
            }
        }
        Ok("Delta(x,k) monic of degree 2k for k <= 15".to_string())
    }));

    checks.push(timed("delta-constant-terms", || {
        let euler = euler_numbers(13);
        if cfn::delta_constant_terms_are_euler(12, &euler) {
            Ok("Delta(0,k) = (-1)^k E(2k) for k <= 12".to_string())
        } else {
            Err("Delta(0,k) disagrees with signed Euler numbers".to_string())
        }
    }));

    checks.push(timed("first-kind-product-vs-recurrence", || {
        for n in 1..=upto {
            // asserts agreement internally
            cfn::t_first_via_product(n);
        }
        Ok(format!("product expansion = recurrence for n <= {upto}"))
    }));

    checks.push(timed("second-kind-basis-expansion", || {
        for n in 1..=upto {
            if !cfn::basis_check_second(n) {
                return Err(format!("basis expansion fails at n={n}"));
            }
        }
        Ok(format!("x^n = sum T(n,k) central factorials for n <= {upto}"))
    }));

    checks.push(timed("gf-first-kind", || {
        for k in 1..=gf_k_max {
            if !cfn::gf_check_first(k, upto) {
                return Err(format!("first-kind EGF fails at k={k}"));
            }
        }
        Ok(format!("(2 asinh(x/2))^k matches k! t(n,k) for k <= {gf_k_max}, n <= {upto}"))
    }));

    checks.push(timed("gf-second-kind", || {
        for k in 1..=gf_k_max {
            if !cfn::gf_check_second(k, upto) {
                return Err(format!("second-kind EGF fails at k={k}"));
            }
        }
        Ok(format!("(2 sinh(x/2))^k matches k! T(n,k) for k <= {gf_k_max}, n <= {upto}"))
    }));

    VerificationSuiteResult::collect("cfn", checks)
}

pub fn thm5_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(10);
    let checks = vec![timed("euler-from-central-factorials", || {
        for n in 0..=upto {
            for k in 0..=upto {
                if !cfn::thm5_check(n, k) {
                    return Err(format!("identity fails at n={n}, k={k}"));
                }
            }
        }
        Ok(format!("E(2n+2k) expansion holds for all n, k <= {upto}"))
    })];
    VerificationSuiteResult::collect("thm5", checks)
}

pub fn thm6_suite(bounds: &Bounds) -> VerificationSuiteResult {
    let upto = bounds.upto.unwrap_or(10);
    let mut checks = Vec::new();
    checks.push(timed("rising-product-expansion", || {
        for n in 0..=upto {
            if !cfn::thm6_check(n) {
                return Err(format!("identity fails at n={n}"));
            }
        }
        Ok(format!("sum (-4)^(n-j) t(2n+1,2j+1) Delta(x,j) = (x+1)...(x+2n) for n <= {upto}"))
    }));
    checks.push(timed("scalar-remark", || {
        for n in 0..=upto {
            if !cfn::thm6_remark_check(n) {
                return Err(format!("remark fails at n={n}"));
            }
        }
        Ok(format!("sum 4^(n-j) t(2n+1,2j+1) E(2j) = (-1)^n (2n)! for n <= {upto}"))
    }));
    VerificationSuiteResult::collect("thm6", checks)
}

/// Suite names accepted by `verify`.
pub const SUITE_NAMES: [&str; 12] = [
    "all",
    "methods",
    "mod9",
    "mod27",
    "mod81",
    "cycles",
    "stern",
    "conjecture",
    "incomplete",
    "higher",
    "cfn",
    "thm5",
];

/// Runs one named suite ("thm6" is reachable via "all" and by name below).
pub fn run_suite(name: &str, bounds: &Bounds) -> Option<Vec<VerificationSuiteResult>> {
    let single = |r: VerificationSuiteResult| Some(vec![r]);
    match name {
        "all" => Some(vec![
            methods_suite(bounds),
            mod9_suite(bounds),
            mod27_suite(bounds),
            mod81_suite(bounds),
            cycles_suite(bounds),
            conjecture_suite(bounds),
            stern_suite(bounds),
            incomplete_suite(bounds),
            higher_suite(bounds),
            cfn_suite(bounds),
            thm5_suite(bounds),
            thm6_suite(bounds),
        ]),
        "methods" => single(methods_suite(bounds)),
        "mod9" => single(mod9_suite(bounds)),
        "mod27" => single(mod27_suite(bounds)),
        "mod81" => single(mod81_suite(bounds)),
        "cycles" => single(cycles_suite(bounds)),
        "conjecture" => single(conjecture_suite(bounds)),
        "stern" => single(stern_suite(bounds)),
        "incomplete" => single(incomplete_suite(bounds)),
        "higher" => single(higher_suite(bounds)),
        "cfn" => single(cfn_suite(bounds)),
        "thm5" => single(thm5_suite(bounds)),
        "thm6" => single(thm6_suite(bounds)),
        _ => None,
    }
}
