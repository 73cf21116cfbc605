//! Exact arithmetic substrate shared by every table in the crate: memoized
//! factorials, sectioned exponential generating functions, lower Hessenberg
//! determinants, streaming combinatorial enumeration, and Q(omega).
//!
//! Everything here is pure and exact; there is no floating point anywhere.

pub mod egf;
pub mod eisenstein;
pub mod enumerate;
pub mod factorials;
pub mod hessenberg;

pub use egf::Egf;
pub use eisenstein::Eisenstein;
pub use enumerate::{compositions, partition_count, partition_multiplicities};
pub use factorials::{binomial, factorial, factorial_recip, multinomial};
pub use hessenberg::LowerHessenberg;
