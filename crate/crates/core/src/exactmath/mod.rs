//! Exact arithmetic: arbitrary-precision rationals, cyclotomic fields,
//! cyclotomic polynomials, and kernel computation over exact fields.
//!
//! Everything in this module is exact; there is no floating point anywhere
//! in the crate. Scalars live in one of three coefficient fields, all
//! implementing the [`Field`] context trait:
//!
//! * [`Rationals`] — the field Q, with elements [`Rat`];
//! * [`PrimeField`] — F_p for a runtime prime p, with `u64` elements;
//! * [`CycloField`] — the cyclotomic field Q(zeta_m), with elements
//!   [`CycloNum`].

mod cyclo;
mod field;
mod linalg;
mod poly;
mod rat;

pub use cyclo::CycloNum;
pub use field::{is_prime, CycloField, Field, PrimeField, Rationals};
pub(crate) use linalg::rank_of_rows;
pub use linalg::Mat;
pub use poly::{cyclotomic_polynomial, divisors, euler_phi, IntPoly};
pub use rat::{rat, rat_int, Rat};

/// Concrete instantiations of the generic matrix at the three scalar
/// domains the crate uses.
pub mod aliases {
    pub use super::rat::Rat;
    /// Matrix over Q.
    pub type QMat = super::Mat<super::Rationals>;
    /// Matrix over F_p.
    pub type FpMat = super::Mat<super::PrimeField>;
    /// Matrix over Q(zeta_m).
    pub type CycloMat = super::Mat<super::CycloField>;
}

use thiserror::Error;

/// Errors raised by exact arithmetic and linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
