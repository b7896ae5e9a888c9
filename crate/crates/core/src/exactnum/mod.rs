//! Exact arithmetic: integer Laurent polynomials in the bracket variable `A`,
//! cyclotomic integers for evaluations at roots of unity, and half-integers
//! for weights and complexity counts.

mod cyclo;
mod halfint;
mod laurent;
mod poly;

pub use cyclo::{cyclo_reduce, eval_at_root, CycloInt, CyclotomicRing};
pub use halfint::HalfInt;
pub use laurent::LaurentInt;
pub use poly::{cyclotomic_poly, IntPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("polynomial division leaves a nonzero remainder")]
    NonDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
}
