//! Rational-integer helpers: valuations, gcds, primality and the prime
//! support of discriminants.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A p-adic valuation; `Infinity` is the valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    num_prime::nt_funcs::is_prime64(p)
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

/// Largest `k` with `p^k | n`.
pub fn valuation(n: &BigInt, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    Ok(valuation_unchecked(n, p))
}

pub(crate) fn valuation_unchecked(n: &BigInt, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(k);
        }
        m = q;
        k += 1;
    }
}

/// Finite valuation of a nonzero integer; zero maps to `u32::MAX`.
pub(crate) fn vp(n: &BigInt, p: u64) -> u32 {
    valuation_unchecked(n, p).finite().unwrap_or(u32::MAX)
}

/// Nonnegative gcd of a list; the empty list has gcd 0.
pub fn gcd_all(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `v_p(n!)` by Legendre's formula.
pub fn vp_factorial(n: u64, p: u64) -> u32 {
    let mut total = 0;
    let mut q = p;
    while q <= n {
        total += (n / q) as u32;
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    total
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// Complete factorization of `|n|` as sorted (prime, exponent) pairs.
pub fn factorize(n: &BigInt) -> Vec<(BigUint, u32)> {
    let m = n.magnitude().clone();
    if m.is_zero() || m.is_one() {
        return Vec::new();
    }
    let mut out = std::collections::BTreeMap::new();
    factor_into(m, &mut out);
    out.into_iter().collect()
}

fn factor_into(m: BigUint, out: &mut std::collections::BTreeMap<BigUint, u32>) {
    if m.is_one() {
        return;
    }
    if let Some(small) = m.to_u128() {
        for (p, e) in num_prime::nt_funcs::factorize128(small) {
            *out.entry(BigUint::from(p)).or_insert(0) += e as u32;
        }
        return;
    }
    if num_prime::nt_funcs::is_prime(&m, None).probably() {
        *out.entry(m).or_insert(0) += 1;
        return;
    }
    let d = pollard_brent(&m);
    let rest = &m / &d;
    factor_into(d, out);
    factor_into(rest, out);
}

/// A nontrivial divisor of a composite `n` beyond the u128 range.
fn pollard_brent(n: &BigUint) -> BigUint {
    for k in 2..=4u32 {
        let r = n.nth_root(k);
        if r.pow(k) == *n {
            return r;
        }
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..r.saturating_sub(k).min(128) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

/// Primes whose square divides `n`.
pub fn square_divisor_primes(n: &BigInt) -> Vec<BigUint> {
    factorize(n)
        .into_iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| p)
        .collect()
}

pub fn is_squarefree(n: &BigInt) -> bool {
    !n.is_zero() && square_divisor_primes(n).is_empty()
}

/// True when no odd prime square divides `n`.
pub fn free_of_odd_squares(n: &BigInt) -> bool {
    !n.is_zero()
        && factorize(n)
            .iter()
            .all(|(p, e)| *e < 2 || *p == BigUint::from(2u32))
}

/// Exact integer `k`-th root when `n` is a perfect `k`-th power.
pub fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() && k % 2 == 0 {
        return None;
    }
    let r = n.nth_root(k);
    (num_traits::pow::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Representative of `n mod m` in `[0, m)`.
pub(crate) fn mod_floor_u64(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&b(720), 2).unwrap(), Valuation::Finite(4));
        assert_eq!(valuation(&b(0), 3).unwrap(), Valuation::Infinity);
        assert_eq!(valuation(&b(-2012), 2).unwrap(), Valuation::Finite(2));
        assert_eq!(valuation(&b(12), 4), Err(Error::InvalidPrime(4)));
    }

    #[test]
    fn gcd_all_examples() {
        assert_eq!(gcd_all(&[b(-8), b(-10), b(-8), b(4)]), b(2));
        assert_eq!(gcd_all(&[]), b(0));
        assert_eq!(gcd_all(&[b(0), b(0), b(9)]), b(9));
    }

    #[test]
    fn legendre() {
        assert_eq!(vp_factorial(6, 2), 4);
        assert_eq!(vp_factorial(6, 3), 2);
        assert_eq!(vp_factorial(7, 7), 1);
        assert_eq!(vp_factorial(3, 5), 0);
    }

    #[test]
    fn square_part() {
        let ps = square_divisor_primes(&b(-2012));
        assert_eq!(ps, vec![BigUint::from(2u32)]);
        assert!(free_of_odd_squares(&b(272)));
        assert!(!free_of_odd_squares(&b(45)));
        assert!(is_squarefree(&b(-239)));
        assert_eq!(exact_root(&b(-27), 3), Some(b(-3)));
        assert_eq!(exact_root(&b(10), 2), None);
    }

    #[test]
    fn factorize_large() {
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_003u64) * BigInt::from(u64::MAX);
        let f = factorize(&(&n * &n));
        let back = f
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(BigInt::from(back), &n * &n);
        assert!(f.iter().all(|(p, _)| num_prime::nt_funcs::is_prime(p, None).probably()));
        assert!(f.contains(&(BigUint::from(1_000_003u32), 4)));
    }
}
