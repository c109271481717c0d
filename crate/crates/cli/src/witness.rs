//! Search for a field of degree `n` in which a given prime `p <= n`
//! divides `i(K)`.
//!
//! The targeted phase fixes `f mod p` as a product of `p` distinct monic
//! irreducibles, so `f` is squarefree mod `p` and `p` has exactly `p`
//! primes above it. Random `p`-multiples are added until `f` is
//! irreducible over the rationals. A random coefficient box follows if
//! the targeted phase runs out of budget. Every hit is confirmed by the
//! full invariant computation.

use indexlab_core::arith::IntPoly;
use indexlab_core::arith::integer::is_prime;
use indexlab_core::ff::factor_mod_p;
use indexlab_core::invariants::{full_report_with, InvariantReport, SearchConfig};
use indexlab_core::nf::{build_field, MAX_DEGREE};
use indexlab_core::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Targeted,
    Box,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Targeted => "targeted",
            Method::Box => "box",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub poly: IntPoly,
    pub report: InvariantReport,
    /// Candidates examined, including the hit.
    pub tries: u64,
    pub method: Method,
}

const BOX_BOUND: i64 = 10;

/// First monic irreducible of degree `d` over `F_p` in lexicographic order
/// of its lower coefficients.
fn first_irreducible(p: u64, d: usize) -> IntPoly {
    let total = p.pow(d as u32);
    (0..total)
        .map(|mut code| {
            let mut c: Vec<i64> = (0..d)
                .map(|_| {
                    let r = code % p;
                    code /= p;
                    r as i64
                })
                .collect();
            c.push(1);
            IntPoly::from_i64s(&c)
        })
        .find(|g| {
            factor_mod_p(g, p).is_ok_and(|fac| fac.factors.len() == 1 && fac.factors[0].1 == 1)
        })
        .expect("irreducibles exist in every degree")
}

/// `x (x+1) ... (x+p-2) q(x)` with `q` irreducible of degree `n - p + 1`.
fn residue_pattern(n: usize, p: u64) -> IntPoly {
    let d = n + 1 - p as usize;
    let last = if d == 1 {
        IntPoly::from_i64s(&[p as i64 - 1, 1])
    } else {
        first_irreducible(p, d)
    };
    (0..p as i64 - 1).fold(last, |acc, c| &acc * &IntPoly::from_i64s(&[c, 1]))
}

fn confirm(f: &IntPoly, p: u64, config: &SearchConfig) -> Result<Option<InvariantReport>> {
    let field = match build_field(f) {
        Ok(k) => k,
        Err(Error::ReduciblePolynomial) => return Ok(None),
        Err(e) => return Err(e),
    };
    if (field.split_prime(p)?.num_primes() as u64) < p {
        return Ok(None);
    }
    let report = full_report_with(&field, config)?;
    Ok((report.i_k.is_multiple_of(&BigInt::from(p))).then_some(report))
}

pub fn search_witness(
    n: usize,
    p: u64,
    seed: u64,
    budget: u64,
    config: &SearchConfig,
) -> Result<Option<SearchOutcome>> {
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(Error::InvalidDegree(format!("degree {n} is outside 2..={MAX_DEGREE}")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if p > n as u64 {
        return Err(Error::NotApplicable(format!("p = {p} exceeds the degree {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = residue_pattern(n, p);
    let pb = BigInt::from(p);
    let targeted = budget.div_ceil(2);
    for tries in 1..=budget {
        let (f, method) = if tries <= targeted {
            let h: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-2..=2i64))).collect();
            let f = &base + &IntPoly::new(h).scale(&pb);
            (f, Method::Targeted)
        } else {
            let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-BOX_BOUND..=BOX_BOUND)).collect();
            c.push(1);
            (IntPoly::from_i64s(&c), Method::Box)
        };
        if f.coeff(0).is_zero() {
            continue;
        }
        if let Some(report) = confirm(&f, p, config)? {
            return Ok(Some(SearchOutcome { poly: f, report, tries, method }));
        }
    }
    Ok(None)
}
