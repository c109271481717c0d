//! Side-by-side splitting and local index data for two fields at one prime.

use indexlab_core::arith::IntPoly;
use indexlab_core::invariants::{vp_ik, vp_index_k_with, SearchConfig};
use indexlab_core::nf::{build_field, SplittingType};
use indexlab_core::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub poly: IntPoly,
    pub splitting: SplittingType,
    /// `v_p(I(K))`
    pub index: u32,
    /// `v_p(i(K))`
    pub fixed: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub p: u64,
    pub left: Side,
    pub right: Side,
}

impl Comparison {
    pub fn same_splitting(&self) -> bool {
        self.left.splitting == self.right.splitting
    }

    pub fn same_splitting_different_index(&self) -> bool {
        self.same_splitting() && self.left.index != self.right.index
    }
}

fn side(f: &IntPoly, p: u64, config: &SearchConfig) -> Result<Side> {
    let k = build_field(f)?;
    Ok(Side {
        poly: f.clone(),
        splitting: k.split_prime(p)?,
        index: vp_index_k_with(&k, p, config)?,
        fixed: vp_ik(&k, p)?,
    })
}

pub fn compare(f: &IntPoly, g: &IntPoly, p: u64, config: &SearchConfig) -> Result<Comparison> {
    if f.degree() != g.degree() {
        return Err(Error::InvalidInput(format!(
            "degrees differ: {} and {}",
            f.degree().unwrap_or(0),
            g.degree().unwrap_or(0)
        )));
    }
    Ok(Comparison { p, left: side(f, p, config)?, right: side(g, p, config)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_pair_at_two() {
        let f: IntPoly = "x^3 - x^2 - 2x - 8".parse().unwrap();
        let g: IntPoly = "x^3 + x + 1".parse().unwrap();
        let c = compare(&f, &g, 2, &SearchConfig::default()).unwrap();
        assert_eq!(c.left.index, 1);
        assert_eq!(c.right.index, 0);
        assert!(!c.same_splitting());
    }

    #[test]
    fn degree_mismatch() {
        let f: IntPoly = "x^2 + 1".parse().unwrap();
        let g: IntPoly = "x^3 + x + 1".parse().unwrap();
        assert!(matches!(compare(&f, &g, 2, &SearchConfig::default()), Err(Error::InvalidInput(_))));
    }
}
