//! Exact arithmetic in the real field Q(√2,√5) and quaternions over it.
//!
//! Every element of the binary polyhedral groups 2T, 2O, 2I has coordinates in
//! this field (the octahedral cases need √2, the icosahedral ones the golden
//! ratio, hence √5), so group elements are represented exactly and element
//! identity is decidable.

mod quaternion;
mod scalar;

pub use quaternion::Quaternion;
pub use scalar::AlgebraicScalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero in Q(\u{221a}2,\u{221a}5)")]
    DivisionByZero,
}
