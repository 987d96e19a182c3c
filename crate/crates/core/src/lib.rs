//! Exact enumeration of alternating sign matrices and descending plane
//! partitions with their bulk and boundary statistics, the six-vertex and
//! lattice-path models that carry them, and checks of the identities
//! between their generating functions.

pub mod algebra;
pub mod asm;
pub mod dpp;
pub mod error;
pub mod lab;
pub mod paths;
pub mod sixvertex;

pub use algebra::{BigInt, BigRational, MPoly, Matrix, Monomial, Ring, Var};
pub use asm::{enumerate_asms, Asm, AsmStats};
pub use dpp::{enumerate_dpps, Dpp, DppStats};
pub use error::{Error, Result};
pub use lab::{Caps, GenFun, ObjectKind, Outcome};
pub use paths::{enumerate_nilps, LatticePath, PathFamily, PathStats};
pub use sixvertex::{enumerate_sv, SpectralPoint, SvConfig, SvStats};
