//! Exact arithmetic: integer and rational matrices, integer normal forms,
//! and the cyclotomic fields Q(zeta_n).

mod cyclo;
mod cycmat;
mod matrix;
mod normal;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycField, CycNumber, IntPoly};
pub use cycmat::{cyc_rank, CycMatrix};
pub use matrix::{IntMatrix, Mat, RatMatrix};
pub use normal::{hnf_rows, integer_kernel, integer_left_kernel, pivot_columns, snf, Snf};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
