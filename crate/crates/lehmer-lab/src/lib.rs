//! Exact-arithmetic tables and congruence verification for Lehmer-Euler
//! numbers and their relatives.
//!
//! The crate computes, over arbitrary-precision integers and rationals:
//!
//! - **Lehmer-Euler numbers** `W_n` (OEIS A002115 up to sign) by five
//!   independent routes: recurrence, series inversion, Hessenberg
//!   determinant, Trudi partition sum, and the explicit composition sum
//!   ([`lehmer`]).
//! - **Euler numbers** `E_n` and their higher-order and incomplete relatives
//!   ([`lehmer`], [`higher_order`], [`incomplete`]).
//! - **Congruence scans**: residues of `W_(3n)` modulo powers of three,
//!   eventual-period detection with palindrome structure, Lucas's theorem,
//!   roots-of-unity binomial sums, Stern's two-adic equivalence, and a
//!   scanner for the `3n == 3m (mod 2*3^k) => W_(3n) == W_(3m) (mod 3^(k+1))`
//!   periodicity conjecture ([`congruence`]).
//! - **Central factorial numbers** of both kinds and the `Delta(x,k)`
//!   polynomial sequence, with exact verification of the identities
//!   connecting them to Euler numbers ([`central_factorial`]).
//!
//! Every check is exact: there is no floating point in the crate. The
//! [`cli`] module backs the `lehmer-lab` binary (`compute`, `verify`,
//! `scan`); the runnable examples under `examples/` walk through each
//! capability in library form.

pub mod central_factorial;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod exact;
pub mod higher_order;
pub mod incomplete;
pub mod lehmer;
pub mod poly;

pub use error::Error;
