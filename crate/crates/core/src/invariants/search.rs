//! Breadth-first refinement over residue classes of `O_K / p^m O_K`.
//!
//! Both searched quantities are integer polynomials in the coordinates of
//! `t`, so every element of a class modulo `p^m` shares their residue
//! modulo `p^m`. A class whose representative has valuation `w < m` is
//! settled: every member has valuation exactly `w`. A class with `w >= m`
//! has every member at valuation `>= m` and is split into its `p^(n-1)`
//! children. Classes are taken up to `t -> u t + c` (`u` a unit, `c` in
//! `Z`), which preserves both valuations.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::local::{canonical, Local};
use crate::error::{Error, Result};

/// Outcome of a search at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Found {
    pub value: u32,
    /// Class representative (coordinates modulo `p^level`) attaining `value`.
    pub class: Vec<u64>,
    pub level: u32,
}

fn first_level(p: u64, n: usize) -> Vec<Vec<u64>> {
    let total = p.pow(n as u32 - 1);
    (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut r = vec![0u64; n];
            for x in r.iter_mut().skip(1) {
                *x = code % p;
                code /= p;
            }
            (canonical(&r, p, 1) == r).then_some(r)
        })
        .collect()
}

fn children(parents: &[Vec<u64>], p: u64, level: u32) -> Vec<Vec<u64>> {
    let n = parents.first().map_or(0, Vec::len);
    let step = p.pow(level);
    let per = p.pow(n as u32 - 1);
    let set: BTreeSet<Vec<u64>> = parents
        .par_iter()
        .flat_map_iter(|r| {
            (0..per).map(move |mut code| {
                let mut c = r.clone();
                for x in c.iter_mut().skip(1) {
                    *x += (code % p) * step;
                    code /= p;
                }
                canonical(&c, p, level + 1)
            })
        })
        .collect();
    set.into_iter().collect()
}

/// `max_t v_p(i(t))`: classes all of whose members reach `v >= m`
/// are kept; the answer is the last level with a surviving class.
/// `F_t` is monic of degree `n`, so its fixed divisor divides `n!` and
/// survivors at level `bound = v_p(n!)` already give the maximum.
pub(crate) fn max_fixed_divisor(local: &Local, bound: u32) -> Result<Found> {
    let (p, n) = (local.p, local.n);
    let mut best = Found { value: 0, class: vec![0; n], level: 0 };
    let mut level = 1u32;
    let mut classes = first_level(p, n);
    loop {
        if level > local.k {
            return Err(Error::RefinementCapExceeded {
                prime: p,
                cap: local.k,
                detail: format!("{} classes modulo {p}^{level} still undecided", classes.len()),
            });
        }
        let mut surviving: Vec<Vec<u64>> = classes
            .into_par_iter()
            .filter(|r| local.fixed_divisor_valuation(r) >= level)
            .collect();
        surviving.sort();
        let Some(first) = surviving.first() else { return Ok(best) };
        best = Found { value: level, class: first.clone(), level };
        if level >= bound {
            return Ok(best);
        }
        classes = children(&surviving, p, level);
        level += 1;
    }
}

/// `min_t v_p(I(t))` over primitive `t`: the first level holding a settled
/// class gives the answer, since every earlier class has valuation `>= m - 1`.
pub(crate) fn min_index(local: &Local, cap: u32) -> Result<Found> {
    let p = local.p;
    let mut level = 1u32;
    let mut classes = first_level(p, local.n);
    loop {
        if level > local.k {
            return Err(Error::RefinementCapExceeded {
                prime: p,
                cap,
                detail: format!(
                    "no class settled below level {level}; {} classes undecided",
                    classes.len()
                ),
            });
        }
        let hit = classes
            .par_iter()
            .filter_map(|r| {
                let w = local.index_valuation(r);
                (w < level).then_some((w, r))
            })
            .min();
        if let Some((w, r)) = hit {
            return Ok(Found { value: w, class: r.clone(), level });
        }
        classes = children(&classes, p, level);
        level += 1;
    }
}
