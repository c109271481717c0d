//! Complete factorization over `F_p`: squarefree decomposition, then
//! trial division by enumerated irreducibles for tiny moduli, or
//! distinct-degree plus Cantor-Zassenhaus equal-degree splitting.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modpoly::ModPoly;
use crate::arith::integer::check_prime;
use crate::arith::IntPoly;
use crate::error::{Error, Result};

/// Largest modulus handled by exhaustive trial division.
const TRIAL_DIVISION_MAX_P: u64 = 7;
/// Largest degree handled by exhaustive trial division.
const TRIAL_DIVISION_MAX_DEG: usize = 8;

/// `f = unit * prod factor^exponent` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationModP {
    pub unit: u64,
    pub factors: Vec<(ModPoly, u32)>,
}

impl FactorizationModP {
    pub fn product(&self, p: u64) -> ModPoly {
        self.factors
            .iter()
            .fold(ModPoly::new(p, vec![self.unit]), |acc, (g, e)| {
                (0..*e).fold(acc, |a, _| a.mul(g))
            })
    }

    /// `(degree, exponent)` of every factor.
    pub fn shape(&self) -> Vec<(usize, u32)> {
        self.factors.iter().map(|(g, e)| (g.deg(), *e)).collect()
    }
}

pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<FactorizationModP> {
    check_prime(p)?;
    factor_modpoly(&ModPoly::from_int_poly(f, p))
}

pub(crate) fn factor_modpoly(f: &ModPoly) -> Result<FactorizationModP> {
    let p = f.modulus();
    if f.is_zero() {
        return Err(Error::ZeroModP(p));
    }
    let unit = f.lead();
    let monic = f.monic();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for g in factor_squarefree(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(FactorizationModP { unit, factors })
}

pub fn is_squarefree_mod_p(f: &IntPoly, p: u64) -> Result<bool> {
    check_prime(p)?;
    let g = ModPoly::from_int_poly(f, p);
    if g.is_zero() {
        return Err(Error::ZeroModP(p));
    }
    Ok(g.gcd(&g.derivative()).deg() == 0)
}

/// Squarefree parts with multiplicities of a monic polynomial.
pub(crate) fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if c.deg() > 0 {
        // c is a p-th power; coefficients live on multiples of p.
        let root = ModPoly::new(
            p,
            c.coeffs().iter().step_by(p as usize).copied().collect(),
        );
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * p as u32));
        }
    }
    out
}

fn factor_squarefree(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.modulus();
    if f.deg() == 0 {
        return Vec::new();
    }
    if f.deg() == 1 {
        return vec![f.clone()];
    }
    if p <= TRIAL_DIVISION_MAX_P && f.deg() <= TRIAL_DIVISION_MAX_DEG {
        return trial_division(f);
    }
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, &mut ChaCha8Rng::seed_from_u64(0x5eed ^ p), &mut out);
    }
    out
}

/// All monic polynomials of degree `d` over `F_p`.
fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = ModPoly> {
    let total = p.pow(d as u32);
    (0..total).map(move |mut k| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(k % p);
            k /= p;
        }
        coeffs.push(1);
        ModPoly::new(p, coeffs)
    })
}

/// Monic irreducibles of degree `d`, by sieving out products of smaller ones.
pub(crate) fn enumerate_irreducibles(p: u64, d: usize) -> Vec<ModPoly> {
    let smaller: Vec<ModPoly> = (1..=d / 2).flat_map(|k| enumerate_irreducibles(p, k)).collect();
    monic_of_degree(p, d)
        .filter(|g| smaller.iter().all(|h| !h.divides(g)))
        .collect()
}

fn trial_division(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.modulus();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.deg() {
        for g in enumerate_irreducibles(p, d) {
            if g.divides(&rest) {
                rest = rest.div_exact(&g);
                out.push(g);
            }
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus();
    let x = ModPoly::x(p);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d`.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    let p = f.modulus();
    loop {
        let a = ModPoly::new(p, (0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg_or_zero() == 0 {
            continue;
        }
        let candidate = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, f);
                norm = norm.mul(&t).rem(f);
            }
            norm.pow_mod((p - 1) / 2, f).sub(&ModPoly::one(p))
        };
        let g = f.gcd(&candidate);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.div_exact(&g);
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

impl ModPoly {
    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }
}

/// Roots in `F_p` of a polynomial (with multiplicity ignored).
pub(crate) fn roots_mod_p(f: &ModPoly) -> Vec<u64> {
    let p = f.modulus();
    let Ok(fac) = factor_modpoly(f) else { return Vec::new() };
    fac.factors
        .iter()
        .filter(|(g, _)| g.deg() == 1)
        .map(|(g, _)| (p - g.coeffs()[0]) % p)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            n /= q;
            if n % q == 0 {
                return 0;
            }
            result = -result;
        }
        q += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of monic irreducible polynomials of degree `f` over `F_p`.
pub fn count_monic_irreducibles(p: u64, f: u32) -> Result<BigInt> {
    check_prime(p)?;
    if f == 0 {
        return Err(Error::InvalidDegree("irreducible count needs degree >= 1".into()));
    }
    let pb = BigInt::from(p);
    let total: BigInt = (1..=f as u64)
        .filter(|d| f as u64 % d == 0)
        .map(|d| BigInt::from(mobius(d)) * num_traits::pow::pow(pb.clone(), (f as u64 / d) as usize))
        .sum();
    Ok(total / BigInt::from(f))
}
