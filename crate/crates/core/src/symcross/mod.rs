//! Symbolic calculus in the crossed product of cylinder functions on
//! F_q((T)) by the affine group of F_q(T).

mod crossed;
mod cyl;
mod named;

pub use crossed::{check_identity, CrossedElement, Label};
pub use cyl::{affine_coset, CylFunction, CylinderSet};
pub use named::{Algebra, Named, DEFAULT_PRECISION};
