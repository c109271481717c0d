//! Exact computation of the index invariants `I(K)` and `i(K)` of number
//! fields of degree at most 7.
//!
//! `I(K)` is the gcd of the indices `[O_K : Z[t]]` over primitive integers
//! `t`; `i(K)` is the lcm over primitive `t` of the fixed divisor
//! `gcd_x F_t(x)` of the characteristic polynomial of `t`.

pub mod arith;
pub mod error;
pub mod families;
pub mod ff;
pub mod invariants;
pub mod nf;

pub use error::{Error, Result};
