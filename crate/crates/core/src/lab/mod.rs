//! Generating functions, determinant formulas, refined counts, and exact
//! checks of the identities relating them.

pub mod counts;
pub mod genfun;
pub mod matrices;
pub mod verify;

pub use counts::{asm_count, doubly_refined_count, refined_count, refined_counts, CountTable};
pub use genfun::{genfun_bruteforce, perm_genfun, GenFun, ObjectKind};
pub use matrices::{c_vector, k_matrix, l_matrix, l_matrix_augmented, CForm, Refinement};
pub use verify::{Caps, Outcome};
