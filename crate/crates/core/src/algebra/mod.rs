//! Exact arithmetic: rings, sparse polynomials, matrices and determinants.

pub mod desjac;
pub mod matrix;
pub mod poly;
pub mod ring;

pub use desjac::{check_desnanot_jacobi, desnanot_jacobi_sides, DjForm};
pub use matrix::{int_matrix, Matrix};
pub use poly::{MPoly, Monomial, PolyJson, TermJson, Var, NVARS};
pub use ring::{binom, factorial, pow, Ring};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
