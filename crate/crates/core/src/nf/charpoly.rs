//! Division-free characteristic polynomials (Samuelson-Berkowitz).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ff::modpoly::{addmod, mulmod, submod};

/// Commutative ring operations the Berkowitz recursion needs.
pub(crate) trait Scalars {
    type T: Clone;
    fn zero(&self) -> Self::T;
    fn one(&self) -> Self::T;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn sub(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
}

pub(crate) struct Integers;

impl Scalars for Integers {
    type T = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

/// `Z / m Z` for word-sized `m`.
pub(crate) struct Residues(pub u64);

impl Scalars for Residues {
    type T = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        addmod(*a, *b, self.0)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        submod(*a, *b, self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.0)
    }
}

/// Coefficients of `det(x I - A)`, highest degree first (length `n + 1`).
pub(crate) fn berkowitz<S: Scalars>(s: &S, a: &[Vec<S::T>]) -> Vec<S::T> {
    let n = a.len();
    let mut v = vec![s.one()];
    for r in 0..n {
        // Leading (r+1)x(r+1) block: A_r = [[A_{r-1}, C], [R, a_rr]].
        // Toeplitz column: 1, -a_rr, -R C, -R A_{r-1} C, ...
        let mut col = Vec::with_capacity(r + 2);
        col.push(s.one());
        col.push(s.sub(&s.zero(), &a[r][r]));
        let mut w: Vec<S::T> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(s.zero(), |acc, j| s.add(&acc, &s.mul(&a[r][j], &w[j])));
            col.push(s.sub(&s.zero(), &rc));
            w = (0..r)
                .map(|i| (0..r).fold(s.zero(), |acc, j| s.add(&acc, &s.mul(&a[i][j], &w[j]))))
                .collect();
        }
        let next: Vec<S::T> = (0..r + 2)
            .map(|i| {
                (0..=r.min(i)).filter(|&j| j < v.len()).fold(s.zero(), |acc, j| {
                    s.add(&acc, &s.mul(&col[i - j], &v[j]))
                })
            })
            .collect();
        v = next;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn companion_matrix_recovers_polynomial() {
        // companion of x^3 - x^2 - 2x - 8
        let a = ints(&[&[0, 0, 8], &[1, 0, 2], &[0, 1, 1]]);
        let c = berkowitz(&Integers, &a);
        let expect: Vec<BigInt> = [1, -1, -2, -8].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn residues_agree_with_integers() {
        let a = ints(&[&[3, -1, 4], &[1, 5, -9], &[2, 6, 5]]);
        let exact = berkowitz(&Integers, &a);
        let m = 64u64;
        let red: Vec<Vec<u64>> = a
            .iter()
            .map(|r| r.iter().map(|x| crate::arith::integer::mod_floor_u64(x, m)).collect())
            .collect();
        let modular = berkowitz(&Residues(m), &red);
        let exact_red: Vec<u64> = exact
            .iter()
            .map(|x| crate::arith::integer::mod_floor_u64(x, m))
            .collect();
        assert_eq!(modular, exact_red);
    }
}
