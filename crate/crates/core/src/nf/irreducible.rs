//! Irreducibility of monic integer polynomials of small degree.
//!
//! A degree sieve over several primes settles most inputs: a rational
//! factor of degree `d` forces `d` to be a subset sum of factor degrees
//! modulo every good prime. Whatever survives goes through Zassenhaus:
//! Hensel-lift one modular factorization past the Mignotte bound and try
//! every subset of lifted factors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::integer::is_prime;
use crate::arith::{poly_discriminant, IntPoly};
use crate::error::{Error, Result};
use crate::ff::factor::factor_modpoly;
use crate::ff::modpoly::ModPoly;

const SIEVE_PRIMES: usize = 60;

pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    let n = f.degree().ok_or_else(|| Error::InvalidDegree("zero polynomial".into()))?;
    if n == 0 {
        return Err(Error::InvalidDegree("constant polynomial".into()));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 1 {
        return Ok(true);
    }
    let disc = poly_discriminant(f)?;
    if disc.is_zero() {
        return Ok(false);
    }

    let full: u64 = ((1u64 << n) - 1) & !1;
    let mut possible = full;
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut used = 0;
    let mut p = 1u64;
    while used < SIEVE_PRIMES {
        p += 1;
        if !is_prime(p) || (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        used += 1;
        let fac = factor_modpoly(&ModPoly::from_int_poly(f, p))?;
        let mut sums = 1u64;
        for (g, _) in &fac.factors {
            sums |= sums << g.deg();
        }
        possible &= sums;
        if possible & full == 0 {
            return Ok(true);
        }
        let factors: Vec<ModPoly> = fac.factors.into_iter().map(|(g, _)| g).collect();
        if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    let (p, factors) = best.expect("sieve used at least one prime");
    Ok(!has_rational_factor(f, p, &factors))
}

/// Extended gcd over `F_p`: `(s, t)` with `s a + t b = 1` for coprime inputs.
fn xgcd(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
    let p = a.modulus();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
    let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = crate::ff::modpoly::invmod(r0.lead(), p);
    (s0.scale(inv), t0.scale(inv))
}

/// Lifts `f = g h mod p` to monic `g, h` with `f = g h mod p^k`.
fn hensel_pair(f: &IntPoly, g: &ModPoly, h: &ModPoly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (_, t) = xgcd(g, h);
    let pb = BigInt::from(p);
    let mut gl = g.to_int_poly();
    let mut hl = h.to_int_poly();
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = f - &(&gl * &hl);
        let e = ModPoly::from_int_poly(&diff.div_scalar(&pj), p);
        let a = e.mul(&t).rem(g);
        let (b, r) = e.sub(&a.mul(h)).div_rem(g);
        debug_assert!(r.is_zero());
        gl = &gl + &a.to_int_poly().scale(&pj);
        hl = &hl + &b.to_int_poly().scale(&pj);
        pj *= &pb;
    }
    (gl.mod_floor(&pj), hl.mod_floor(&pj))
}

fn hensel_all(f: &IntPoly, factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![f.mod_floor(&BigInt::from(p).pow(k))];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[ModPoly]| fs.iter().fold(ModPoly::one(p), |acc, g| acc.mul(g));
    let (g, h) = hensel_pair(f, &prod(left), &prod(right), p, k);
    let mut out = hensel_all(&g, left, p, k);
    out.extend(hensel_all(&h, right, p, k));
    out
}

fn has_rational_factor(f: &IntPoly, p: u64, factors: &[ModPoly]) -> bool {
    let r = factors.len();
    if r < 2 {
        return false;
    }
    let n = f.degree().unwrap_or(0) as u32;
    let bound = f.norm1() << (n + 1);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_all(f, factors, p, k);
    for mask in 1u32..(1 << r) - 1 {
        if mask.count_ones() as usize > r / 2 {
            continue;
        }
        let g = (0..r)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(IntPoly::constant(BigInt::one()), |acc, i| (&acc * &lifted[i]).mod_floor(&pk))
            .symmetric_mod(&pk);
        let (_, rem) = f.div_rem_monic(&g);
        if rem.is_zero() {
            return true;
        }
    }
    false
}
