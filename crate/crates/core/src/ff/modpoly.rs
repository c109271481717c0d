//! Polynomials over a prime field `F_p` with word-sized `p`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::integer::mod_floor_u64;
use crate::arith::IntPoly;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub(crate) fn submod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub(crate) fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

/// Polynomial over `F_p`, ascending residues in `[0, p)`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| mod_floor_u64(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lift to an integer polynomial with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lead(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mulmod(a, c, self.p)).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|k| addmod(self.c(k), rhs.c(k), self.p)).collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|k| submod(self.c(k), rhs.c(k), self.p)).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = addmod(out[i + j], mulmod(a, b, self.p), self.p);
            }
        }
        Self::new(self.p, out)
    }

    fn c(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.coeffs.len() < b.coeffs.len() {
            return (Self::zero(p), self.clone());
        }
        let inv = invmod(b.lead(), p);
        let db = b.deg();
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; self.coeffs.len() - db];
        for k in (0..q.len()).rev() {
            let c = mulmod(r[k + db], inv, p);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                r[k + j] = submod(r[k + j], mulmod(c, bc, p), p);
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Exact quotient; panics when `b` does not divide `self`.
    pub fn div_exact(&self, b: &Self) -> Self {
        let (q, r) = self.div_rem(b);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mulmod(c, k as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| addmod(mulmod(acc, x, self.p), c, self.p))
    }

    /// Canonical order: by degree, then lexicographically on ascending
    /// coefficients.
    pub(crate) fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int_poly())
    }
}
