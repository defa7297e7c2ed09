//! Exact linear algebra over the integers.
//!
//! Everything here is computed with arbitrary-precision integers
//! ([`num_bigint::BigInt`]); there is no floating point and no modular
//! shortcut, so results are exact at any size.
//!
//! The crate provides:
//!
//! - [`IntMatrix`]: a dense row-major integer matrix with a plain text format;
//! - [`determinant`]: fraction-free Bareiss elimination;
//! - [`smith_normal_form`]: invariant factors, optionally with the unimodular
//!   row/column transforms;
//! - [`minor_gcd`]: the gcd of all `k x k` minors (the k-th determinantal
//!   divisor);
//! - [`cokernel_torsion`] / [`GroupStructure`]: the torsion part of an
//!   integer matrix cokernel, i.e. a finite abelian group in invariant-factor
//!   form;
//! - [`solve_integer`] and [`adjugate`] for exact linear solves.

#![forbid(unsafe_code)]

mod det;
mod group;
mod matrix;
mod minors;
mod snf;

pub use det::{adjugate, determinant, solve_integer};
pub use group::{cokernel_torsion, GroupStructure};
pub use matrix::{IntMatrix, MatrixParseError};
pub use minors::minor_gcd;
pub use snf::{smith_normal_form, smith_normal_form_with_transforms, SnfResult};
