//! Exact arithmetic: arbitrary-precision rationals and the quadratic field ℚ(√3).
//!
//! No operation here ever produces an approximate value. Lengths that would
//! need a real square root are handled by callers through their squares.

mod qsqrt3;
mod rational;

pub use qsqrt3::{ArithOp, QSqrt3};
pub use rational::Rational;
