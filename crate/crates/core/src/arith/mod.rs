//! Exact integer, polynomial and matrix arithmetic.

pub mod integer;
pub mod matrix;
pub mod poly;

pub use integer::{factorize, gcd_all, is_prime, valuation, vp_factorial, Valuation};
pub use matrix::{hnf, IntMatrix};
pub use poly::{poly_discriminant, poly_resultant, IntPoly};
