//! Number fields given by a monic irreducible defining polynomial, with
//! their maximal order and integral elements in integral-basis coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::charpoly::{berkowitz, Integers};
use super::irreducible::is_irreducible;
use super::order::{dedekind_test, order_sum, reduce_table, round2, Order};
use super::splitting::{split_from_table, SplittingType};
use crate::arith::integer::{check_prime, exact_root, factorize};
use crate::arith::{poly_discriminant, IntMatrix, IntPoly};
use crate::error::{Error, Result};
use crate::ff::factor::factor_mod_p;

pub const MAX_DEGREE: usize = 7;

/// An integral element, by its coordinates over the integral basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraicInt {
    pub coords: Vec<BigInt>,
}

impl AlgebraicInt {
    pub fn new(coords: Vec<BigInt>) -> Self {
        AlgebraicInt { coords }
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        AlgebraicInt { coords: coords.iter().map(|&c| BigInt::from(c)).collect() }
    }
}

impl fmt::Display for AlgebraicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug)]
pub struct NumberField {
    poly: IntPoly,
    poly_disc: BigInt,
    order: Order,
    disc: BigInt,
    table: Vec<Vec<Vec<BigInt>>>,
    splitting_cache: RwLock<BTreeMap<u64, SplittingType>>,
}

impl Clone for NumberField {
    fn clone(&self) -> Self {
        let cache = self.splitting_cache.read().expect("cache lock").clone();
        NumberField {
            poly: self.poly.clone(),
            poly_disc: self.poly_disc.clone(),
            order: self.order.clone(),
            disc: self.disc.clone(),
            table: self.table.clone(),
            splitting_cache: RwLock::new(cache),
        }
    }
}

/// Builds the field of a monic irreducible `f` of degree at most 7.
pub fn build_field(f: &IntPoly) -> Result<NumberField> {
    let n = f.degree().ok_or_else(|| Error::InvalidDegree("zero polynomial".into()))?;
    if n == 0 {
        return Err(Error::InvalidDegree("constant polynomial".into()));
    }
    if n > MAX_DEGREE {
        return Err(Error::DegreeOutOfScope(n));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !is_irreducible(f)? {
        return Err(Error::ReduciblePolynomial);
    }
    let poly_disc = poly_discriminant(f)?;
    let mut locals = Vec::new();
    for (p, e) in factorize(&poly_disc) {
        if e < 2 {
            continue;
        }
        let p = super::order::word_prime(&BigInt::from(p))?;
        let (o, vp) = round2(f, p)?;
        if vp > 0 {
            locals.push(o);
        }
    }
    let order = if locals.is_empty() { Order::equation_order(n) } else { order_sum(&locals, n) };
    let index = order.index();
    let (disc, rem) = poly_disc.div_rem(&(&index * &index));
    debug_assert!(rem.is_zero());
    let table = order.mult_table(f);
    Ok(NumberField {
        poly: f.clone(),
        poly_disc,
        order,
        disc,
        table,
        splitting_cache: RwLock::new(BTreeMap::new()),
    })
}

impl NumberField {
    pub fn defining_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.order.degree()
    }

    /// Field discriminant `D_K`.
    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn poly_disc(&self) -> &BigInt {
        &self.poly_disc
    }

    /// `[O_K : Z[x]]` for the defining generator.
    pub fn equation_index(&self) -> BigInt {
        self.order.index()
    }

    /// Integral basis numerators over the power basis (lower Hermite form).
    pub fn basis(&self) -> IntMatrix {
        self.order.basis_matrix()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.order.den
    }

    pub(crate) fn table(&self) -> &[Vec<Vec<BigInt>>] {
        &self.table
    }

    pub fn one(&self) -> AlgebraicInt {
        self.integer(BigInt::one())
    }

    pub fn integer(&self, c: BigInt) -> AlgebraicInt {
        let mut coords = vec![BigInt::zero(); self.degree()];
        coords[0] = c;
        AlgebraicInt { coords }
    }

    /// The root of the defining polynomial.
    pub fn generator(&self) -> AlgebraicInt {
        let n = self.degree();
        let mut num = vec![BigInt::zero(); n];
        if n > 1 {
            num[1] = BigInt::one();
            self.from_power(&num, &BigInt::one()).expect("generator is integral")
        } else {
            AlgebraicInt { coords: vec![-self.poly.coeff(0)] }
        }
    }

    /// Element `(sum num_j x^j) / den`, if integral.
    pub fn from_power(&self, num: &[BigInt], den: &BigInt) -> Option<AlgebraicInt> {
        self.order.coords(num, den).map(AlgebraicInt::new)
    }

    /// Power-basis numerators over `denominator()`.
    pub fn to_power(&self, t: &AlgebraicInt) -> Vec<BigInt> {
        self.order.to_power(&t.coords)
    }

    pub fn mul(&self, a: &AlgebraicInt, b: &AlgebraicInt) -> AlgebraicInt {
        let n = self.degree();
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                let s = &a.coords[i] * &b.coords[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &s * &self.table[i][j][k];
                }
            }
        }
        AlgebraicInt { coords: out }
    }

    pub fn add(&self, a: &AlgebraicInt, b: &AlgebraicInt) -> AlgebraicInt {
        AlgebraicInt { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect() }
    }

    /// Row `i` holds the coordinates of `t * w_i`.
    pub fn mult_matrix(&self, t: &AlgebraicInt) -> Vec<Vec<BigInt>> {
        let n = self.degree();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| (0..n).map(|j| &t.coords[j] * &self.table[j][i][k]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn char_poly(&self, t: &AlgebraicInt) -> IntPoly {
        let mut c = berkowitz(&Integers, &self.mult_matrix(t));
        c.reverse();
        IntPoly::new(c)
    }

    pub fn is_primitive(&self, t: &AlgebraicInt) -> bool {
        let fp = self.char_poly(t);
        !poly_discriminant(&fp).map(|d| d.is_zero()).unwrap_or(true)
    }

    /// `I(t) = [O_K : Z[t]]`, or `None` when `t` is not primitive.
    pub fn index_of(&self, t: &AlgebraicInt) -> Option<BigInt> {
        let d = poly_discriminant(&self.char_poly(t)).ok()?;
        if d.is_zero() {
            return None;
        }
        let (q, r) = d.div_rem(&self.disc);
        debug_assert!(r.is_zero());
        let root = exact_root(&q, 2).expect("discriminant quotient is a square");
        Some(root)
    }

    /// Decomposition type of `p O_K`.
    pub fn split_prime(&self, p: u64) -> Result<SplittingType> {
        check_prime(p)?;
        if let Some(s) = self.splitting_cache.read().expect("cache lock").get(&p) {
            return Ok(s.clone());
        }
        let computed = if dedekind_test(&self.poly, p)? {
            let fac = factor_mod_p(&self.poly, p)?;
            SplittingType::new(fac.shape().into_iter().map(|(d, e)| (e, d as u32)).collect())
        } else {
            split_from_table(&reduce_table(&self.table, p), p)
        };
        let mut cache = self.splitting_cache.write().expect("cache lock");
        Ok(cache.entry(p).or_insert(computed).clone())
    }

    /// Splitting by the algebra decomposition alone, bypassing the Dedekind shortcut.
    pub fn split_prime_by_algebra(&self, p: u64) -> Result<SplittingType> {
        check_prime(p)?;
        Ok(split_from_table(&reduce_table(&self.table, p), p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(s: &str) -> NumberField {
        build_field(&s.parse().unwrap()).unwrap()
    }

    fn st(pairs: &[(u32, u32)]) -> SplittingType {
        SplittingType::new(pairs.to_vec())
    }

    #[test]
    fn build_examples() {
        let k = field("x^3 - x^2 - 2*x - 8");
        assert_eq!(k.disc(), &BigInt::from(-503));
        let k = field("x^2 - 17");
        assert_eq!(k.disc(), &BigInt::from(17));
        assert_eq!(k.denominator(), &BigInt::from(2));
        assert_eq!(k.to_power(&AlgebraicInt::from_i64s(&[0, 1])), vec![BigInt::from(1), BigInt::from(1)]);
        let k = field("x^2 - 2");
        assert_eq!(k.disc(), &BigInt::from(8));
        assert_eq!(k.denominator(), &BigInt::from(1));
    }

    #[test]
    fn build_errors() {
        let f: IntPoly = "x^2 - 4".parse().unwrap();
        assert_eq!(build_field(&f).unwrap_err(), Error::ReduciblePolynomial);
        let f: IntPoly = "x^8 + x + 1".parse().unwrap();
        assert_eq!(build_field(&f).unwrap_err(), Error::DegreeOutOfScope(8));
    }

    #[test]
    fn split_examples() {
        assert_eq!(field("x^3 - x^2 - 2*x - 8").split_prime(2).unwrap(), st(&[(1, 1), (1, 1), (1, 1)]));
        assert_eq!(field("x^2 - 17").split_prime(2).unwrap(), st(&[(1, 1), (1, 1)]));
        assert_eq!(field("x^2 - 2").split_prime(2).unwrap(), st(&[(2, 1)]));
        assert_eq!(field("x^3 - x + 3").split_prime(2).unwrap(), st(&[(1, 3)]));
        assert_eq!(field("x^3 - 2").split_prime(3).unwrap(), st(&[(3, 1)]));
        // 5 = P^2 Q in Q(cbrt 10)? x^3 - 10 is Eisenstein at 5
        assert_eq!(field("x^3 - 10").split_prime(5).unwrap(), st(&[(3, 1)]));
        assert!(field("x^2 - 17").split_prime(4).is_err());
    }

    #[test]
    fn algebra_path_agrees_with_dedekind_path() {
        for s in ["x^3 - x + 3", "x^4 - x^3 - 6*x^2 + x + 1", "x^2 + 7", "x^5 - 5*x + 12"] {
            let k = field(s);
            for p in [2, 3, 5, 7] {
                assert_eq!(k.split_prime(p).unwrap(), k.split_prime_by_algebra(p).unwrap(), "{s} at {p}");
            }
        }
    }

    #[test]
    fn char_poly_examples() {
        let k = field("x^3 - x + 3");
        let c = k.char_poly(&k.integer(BigInt::from(5)));
        assert_eq!(c, "x^3 - 15*x^2 + 75*x - 125".parse().unwrap());
        assert_eq!(k.char_poly(&k.generator()), "x^3 - x + 3".parse().unwrap());
        let k = field("x^2 - 2");
        let t = k.add(&k.generator(), &k.one());
        assert_eq!(k.char_poly(&t), "x^2 - 2*x - 1".parse().unwrap());
    }

    #[test]
    fn index_and_primitivity() {
        let k = field("x^3 - x^2 - 2*x - 8");
        assert_eq!(k.index_of(&k.generator()), Some(BigInt::from(2)));
        let k = field("x^3 - x + 3");
        assert_eq!(k.index_of(&k.generator()), Some(BigInt::from(1)));
        assert_eq!(k.index_of(&k.integer(BigInt::from(5))), None);
        assert!(k.is_primitive(&k.generator()));
        assert!(!k.is_primitive(&k.integer(BigInt::from(3))));
        let g = k.generator();
        assert!(k.is_primitive(&k.mul(&g, &g)));
    }

    #[test]
    fn stickelberger_on_small_fields() {
        for s in ["x^2 - 17", "x^2 + 5", "x^3 - x^2 - 2*x - 8", "x^3 - 16", "x^4 + 1", "x^6 - 2*x^5 - 20*x^4 - 20*x^3 + 5*x^2 + 8*x + 1"] {
            let d = field(s).disc().mod_floor(&BigInt::from(4));
            assert!(d.is_zero() || d.is_one(), "{s}");
        }
    }
}
