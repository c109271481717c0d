//! Number fields of degree at most 7: maximal orders, elements,
//! characteristic polynomials, element indices and prime splitting.

pub(crate) mod charpoly;
pub mod field;
pub mod irreducible;
pub mod order;
pub mod splitting;

pub use field::{build_field, AlgebraicInt, NumberField, MAX_DEGREE};
pub use irreducible::is_irreducible;
pub use order::{dedekind_test, p_maximal_order, LocalOrder};
pub use splitting::SplittingType;
