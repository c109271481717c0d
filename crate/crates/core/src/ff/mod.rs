//! Arithmetic and factorization over prime fields.

pub mod factor;
pub(crate) mod linalg;
pub mod modpoly;

pub use factor::{count_monic_irreducibles, factor_mod_p, is_squarefree_mod_p, FactorizationModP};
pub use modpoly::ModPoly;
