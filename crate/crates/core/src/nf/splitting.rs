//! Decomposition of `O / pO` into local components.
//!
//! The separable part `{x : x^p = x}` of `O / pO` is spanned by the
//! primitive idempotents, one per prime above `p`. Splitting it with
//! Lagrange idempotents gives the components `e O / pO`; each has
//! dimension `e_i f_i`, and `f_i` is its dimension modulo the radical.

use std::fmt;

use super::order::{frobenius_rows, mul_residue};
use crate::ff::factor::roots_mod_p;
use crate::ff::linalg::{left_kernel, rank};
use crate::ff::modpoly::{invmod, mulmod, submod, ModPoly};

/// Multiset of `(e, f)` pairs, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    pairs: Vec<(u32, u32)>,
}

impl SplittingType {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.sort_unstable();
        SplittingType { pairs }
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Number of distinct primes above `p`.
    pub fn num_primes(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_ramified(&self) -> bool {
        self.pairs.iter().any(|&(e, _)| e > 1)
    }

    /// `sum e_i f_i`.
    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|&(e, f)| e * f).sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (e, fd)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({e},{fd})")?;
        }
        f.write_str("}")
    }
}

fn scale(v: &[u64], c: u64, p: u64) -> Vec<u64> {
    v.iter().map(|&x| mulmod(x, c, p)).collect()
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| submod(x, y, p)).collect()
}

/// Minimal polynomial of `z` inside the unital algebra `e A`.
fn min_poly(table: &[Vec<Vec<u64>>], e: &[u64], z: &[u64], p: u64) -> ModPoly {
    let mut powers = vec![e.to_vec()];
    loop {
        let next = mul_residue(table, powers.last().expect("nonempty"), z, p);
        powers.push(next);
        let kernel = left_kernel(&powers, p);
        if let Some(rel) = kernel.iter().find(|v| v.last().copied().unwrap_or(0) != 0) {
            return ModPoly::new(p, rel.clone()).monic();
        }
    }
}

/// Splitting type of `p` from a multiplication table of a `p`-maximal order.
pub(crate) fn split_from_table(table: &[Vec<Vec<u64>>], p: u64) -> SplittingType {
    let n = table.len();
    let frob = frobenius_rows(table, p, false);
    let shifted: Vec<Vec<u64>> = frob
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r[i] = submod(r[i], 1, p);
            r
        })
        .collect();
    let separable = left_kernel(&shifted, p);
    let r = separable.len();

    let mut one = vec![0u64; n];
    one[0] = 1;
    let mut idempotents = vec![one];
    'outer: while idempotents.len() < r {
        for s in &separable {
            for idx in 0..idempotents.len() {
                let e = idempotents[idx].clone();
                let z = mul_residue(table, s, &e, p);
                let mu = min_poly(table, &e, &z, p);
                if mu.degree().unwrap_or(0) < 2 {
                    continue;
                }
                let roots = roots_mod_p(&mu);
                debug_assert_eq!(roots.len(), mu.degree().unwrap_or(0));
                let pieces: Vec<Vec<u64>> = roots
                    .iter()
                    .map(|&c| {
                        let mut acc = e.clone();
                        for &d in roots.iter().filter(|&&d| d != c) {
                            let factor = sub(&z, &scale(&e, d, p), p);
                            let factor = scale(&factor, invmod(submod(c, d, p), p), p);
                            acc = mul_residue(table, &acc, &factor, p);
                        }
                        acc
                    })
                    .collect();
                idempotents.swap_remove(idx);
                idempotents.extend(pieces);
                continue 'outer;
            }
        }
        unreachable!("separable algebra basis failed to split idempotents");
    }

    let radical = left_kernel(&frobenius_rows(table, p, true), p);
    let pairs = idempotents
        .iter()
        .map(|e| {
            let component: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    let mut b = vec![0u64; n];
                    b[i] = 1;
                    mul_residue(table, e, &b, p)
                })
                .collect();
            let dim = rank(&component, p) as u32;
            let rad: Vec<Vec<u64>> = radical.iter().map(|v| mul_residue(table, e, v, p)).collect();
            let rad_dim = if rad.is_empty() { 0 } else { rank(&rad, p) as u32 };
            let f = dim - rad_dim;
            (dim / f, f)
        })
        .collect();
    SplittingType::new(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_counts() {
        let s = SplittingType::new(vec![(1, 2), (1, 1)]);
        assert_eq!(s.to_string(), "{(1,1),(1,2)}");
        assert_eq!(s.num_primes(), 2);
        assert_eq!(s.degree(), 3);
        assert!(!s.is_ramified());
        assert!(SplittingType::new(vec![(2, 1)]).is_ramified());
    }
}
