//! The invariants `i(K)` and `I(K)`, their local valuations, the support
//! predicted by splitting, and elements attaining `i(K)`.
//!
//! `i(t)` is computed as `gcd(F_t(0), ..., F_t(n))`. This is exact: a
//! monic `F` of degree `n` can be written `sum c_k binom(x, k)` with
//! `c_k = Delta^k F(0)`, and each `c_k` is an integer combination of
//! `F(0..=k)`. Conversely every `F(x)` is an integer combination of the
//! `c_k`, so the ideal generated by all values is generated by `F(0..=n)`.
//! The same expansion gives `c_n = n!`, whence `i(t) | n!` and
//! `v_p(i(K)) <= v_p(n!)`.

mod local;
mod search;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::integer::{check_prime, gcd_all, primes_up_to, vp_factorial, valuation_unchecked};
use crate::arith::IntPoly;
use crate::error::Result;
use crate::nf::{AlgebraicInt, NumberField, SplittingType};
use local::{clamp_precision, Local};
use search::{max_fixed_divisor, min_index, Found};

/// Tuning for the index search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchConfig {
    /// Deepest refinement level for `v_p(I(K))`; defaults to
    /// `2 v_p(n!) + v_p(D_K) + 2`.
    pub index_cap: Option<u32>,
}

impl SearchConfig {
    /// Reads the cap override from `INDEXLAB_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var("INDEXLAB_CAP") {
            Ok(s) => s
                .trim()
                .parse()
                .map(|c| SearchConfig { index_cap: Some(c) })
                .map_err(|_| crate::Error::Parse(format!("INDEXLAB_CAP: {s}"))),
            Err(_) => Ok(SearchConfig::default()),
        }
    }
}

/// A residue class of `O_K / p^level O_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementNode {
    pub level: u32,
    pub coords_mod: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeValuations {
    /// `v_p(i(K))`
    pub fixed: u32,
    /// `v_p(I(K))`
    pub index: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub poly: IntPoly,
    pub degree: usize,
    pub field_disc: BigInt,
    pub splittings: BTreeMap<u64, SplittingType>,
    /// `i(K)`
    pub i_k: BigInt,
    /// `I(K)`
    pub index_k: BigInt,
    pub valuations: BTreeMap<u64, PrimeValuations>,
    /// Primes `p <= n` with at least `p` primes above them.
    pub support: Vec<u64>,
    pub witness: AlgebraicInt,
    pub witness_char_poly: IntPoly,
    /// Per prime, a class on which `v_p(i(t)) = v_p(i(K))`.
    pub witness_classes: BTreeMap<u64, RefinementNode>,
}

/// `gcd_x F_t(x)`.
pub fn i_theta(field: &NumberField, t: &AlgebraicInt) -> BigInt {
    let f = field.char_poly(t);
    let values: Vec<BigInt> = (0..=field.degree() as i64).map(|x| f.eval(&BigInt::from(x))).collect();
    gcd_all(&values)
}

fn fixed_search(field: &NumberField, p: u64) -> Result<Found> {
    let n = field.degree();
    let bound = vp_factorial(n as u64, p);
    let local = Local::new(field, p, bound);
    max_fixed_divisor(&local, bound)
}

fn index_search(field: &NumberField, p: u64, config: &SearchConfig) -> Result<Found> {
    let n = field.degree() as u64;
    let vd = valuation_unchecked(field.disc(), p).finite().unwrap_or(0);
    let cap = config.index_cap.unwrap_or(2 * vp_factorial(n, p) + vd + 2);
    let local = Local::new(field, p, clamp_precision(p, cap));
    min_index(&local, cap)
}

/// `v_p(i(K))`.
pub fn vp_ik(field: &NumberField, p: u64) -> Result<u32> {
    check_prime(p)?;
    if p > field.degree() as u64 {
        return Ok(0);
    }
    Ok(fixed_search(field, p)?.value)
}

/// `v_p(I(K))` with the default search cap.
pub fn vp_index_k(field: &NumberField, p: u64) -> Result<u32> {
    vp_index_k_with(field, p, &SearchConfig::default())
}

pub fn vp_index_k_with(field: &NumberField, p: u64, config: &SearchConfig) -> Result<u32> {
    check_prime(p)?;
    if p > field.degree() as u64 {
        return Ok(0);
    }
    Ok(index_search(field, p, config)?.value)
}

/// Primes `p <= n` having at least `p` distinct primes above them.
pub fn maccluer_support(field: &NumberField) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for p in primes_up_to(field.degree() as u64) {
        if field.split_prime(p)?.num_primes() as u64 >= p {
            out.push(p);
        }
    }
    Ok(out)
}

pub fn good_element(field: &NumberField) -> Result<AlgebraicInt> {
    let mut classes = BTreeMap::new();
    for p in primes_up_to(field.degree() as u64) {
        let found = fixed_search(field, p)?;
        if found.value > 0 {
            classes.insert(p, RefinementNode { level: found.level, coords_mod: found.class });
        }
    }
    let target = classes.iter().fold(BigInt::one(), |acc, (&p, node)| acc * BigInt::from(p).pow(node.level));
    Ok(assemble_witness(field, &classes, &target))
}

/// Chinese-remainder combination of the classes, nudged to be primitive.
fn assemble_witness(
    field: &NumberField,
    classes: &BTreeMap<u64, RefinementNode>,
    target: &BigInt,
) -> AlgebraicInt {
    let generator = field.generator();
    if i_theta(field, &generator) == *target {
        return generator;
    }
    let n = field.degree();
    let mut coords = vec![BigInt::zero(); n];
    let mut modulus = BigInt::one();
    for (&p, node) in classes {
        let q = BigInt::from(p).pow(node.level);
        let inv = modulus.extended_gcd(&q).x;
        for (j, c) in coords.iter_mut().enumerate() {
            let r = BigInt::from(node.coords_mod[j]);
            let diff = (&r - &*c).mod_floor(&q);
            *c += &modulus * (diff * &inv).mod_floor(&q);
        }
        modulus *= &q;
        for c in coords.iter_mut() {
            *c = c.mod_floor(&modulus);
        }
    }
    let mut t = AlgebraicInt::new(coords);
    let mut j = 1;
    while !field.is_primitive(&t) {
        t.coords[j] += &modulus;
        j = if j + 1 < n { j + 1 } else { 1 };
    }
    t
}

/// Everything about the field at the primes `p <= n`.
pub fn full_report(field: &NumberField) -> Result<InvariantReport> {
    full_report_with(field, &SearchConfig::default())
}

pub fn full_report_with(field: &NumberField, config: &SearchConfig) -> Result<InvariantReport> {
    let n = field.degree();
    let mut splittings = BTreeMap::new();
    let mut valuations = BTreeMap::new();
    let mut witness_classes = BTreeMap::new();
    let mut support = Vec::new();
    let mut i_k = BigInt::one();
    let mut index_k = BigInt::one();
    for p in primes_up_to(n as u64) {
        let split = field.split_prime(p)?;
        if split.num_primes() as u64 >= p {
            support.push(p);
        }
        splittings.insert(p, split);
        let fixed = fixed_search(field, p)?;
        let index = index_search(field, p, config)?;
        i_k *= BigInt::from(p).pow(fixed.value);
        index_k *= BigInt::from(p).pow(index.value);
        if fixed.value > 0 {
            witness_classes.insert(p, RefinementNode { level: fixed.level, coords_mod: fixed.class });
        }
        valuations.insert(p, PrimeValuations { fixed: fixed.value, index: index.value });
    }
    let witness = assemble_witness(field, &witness_classes, &i_k);
    let witness_char_poly = field.char_poly(&witness);
    Ok(InvariantReport {
        poly: field.defining_poly().clone(),
        degree: n,
        field_disc: field.disc().clone(),
        splittings,
        i_k,
        index_k,
        valuations,
        support,
        witness,
        witness_char_poly,
        witness_classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nf::build_field;

    fn field(s: &str) -> NumberField {
        build_field(&s.parse().unwrap()).unwrap()
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn i_theta_examples() {
        let k = field("x^3 - x^2 - 2*x - 8");
        assert_eq!(i_theta(&k, &k.generator()), b(2));
        let k = field("x^2 - x - 4");
        assert_eq!(i_theta(&k, &k.generator()), b(2));
        let k = field("x^3 - x + 3");
        assert_eq!(i_theta(&k, &k.generator()), b(3));
    }

    #[test]
    fn vp_ik_examples() {
        assert_eq!(vp_ik(&field("x^2 - 17"), 2).unwrap(), 1);
        let k = field("x^3 - x + 3");
        assert_eq!(vp_ik(&k, 3).unwrap(), 1);
        assert_eq!(vp_ik(&k, 5).unwrap(), 0);
        assert!(vp_ik(&k, 6).is_err());
    }

    #[test]
    fn vp_index_examples() {
        assert_eq!(vp_index_k(&field("x^3 - x^2 - 2*x - 8"), 2).unwrap(), 1);
        assert_eq!(vp_index_k(&field("x^3 - x + 3"), 3).unwrap(), 0);
        assert_eq!(vp_index_k(&field("x^2 - 17"), 2).unwrap(), 0);
    }

    #[test]
    fn support_examples() {
        assert_eq!(maccluer_support(&field("x^3 - x^2 - 2*x - 8")).unwrap(), vec![2]);
        assert!(maccluer_support(&field("x^2 - 2")).unwrap().is_empty());
        assert_eq!(maccluer_support(&field("x^3 - x + 3")).unwrap(), vec![3]);
    }

    #[test]
    fn report_examples() {
        for (s, i, big) in [("x^3 - x^2 - 2*x - 8", 2, 2), ("x^3 - 13*x + 4", 2, 2), ("x^3 - x + 3", 3, 1)] {
            let r = full_report(&field(s)).unwrap();
            assert_eq!((r.i_k.clone(), r.index_k.clone()), (b(i), b(big)), "{s}");
            let k = field(s);
            assert_eq!(i_theta(&k, &r.witness), r.i_k);
            assert!(k.is_primitive(&r.witness));
        }
    }

    #[test]
    fn good_element_examples() {
        let k = field("x^2 - 17");
        let t = good_element(&k).unwrap();
        assert_eq!(k.char_poly(&t), "x^2 - x - 4".parse().unwrap());
        let k = field("x^3 - x + 3");
        assert_eq!(good_element(&k).unwrap(), k.generator());
        let k = field("x^3 - x + 1");
        assert_eq!(good_element(&k).unwrap(), k.generator());
    }

    #[test]
    fn small_cap_is_reported() {
        let k = field("x^3 - x^2 - 2*x - 8");
        let cfg = SearchConfig { index_cap: Some(1) };
        assert!(matches!(
            vp_index_k_with(&k, 2, &cfg),
            Err(crate::Error::RefinementCapExceeded { prime: 2, .. })
        ));
    }
}
