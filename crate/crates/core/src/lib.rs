//! Integral triangles with a 120° angle whose 120° bisector is also integral.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: exact rationals and the field ℚ(√3)
//! - [`numth`]: gcd, lowest terms, integer square roots, squarefree parts
//! - [`unitfrac`]: the equation 1/z = 1/x + 1/y, parametric and brute force
//! - [`tri120`]: 120° triples, the four parametric families, an exhaustive oracle
//! - [`bisect120`]: triples with integral bisector and the audit of the
//!   closed-form `d`/`z` characterisation
//! - [`geomkernel`]: exact coordinate construction over ℚ(√3) checking the
//!   bisector identity and Ptolemy's theorem
//! - [`cli`]: the command-line front end

pub mod bisect120;
pub mod cli;
mod error;
pub mod exactnum;
pub mod geomkernel;
pub mod numth;
pub mod tri120;
pub mod unitfrac;

pub use error::{Error, Result};
