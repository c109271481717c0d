//! Orders of `Q[x]/(f)` as lattices over the power basis, the Dedekind
//! criterion, and Round-2 p-maximalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::matrix::{hnf_basis, lower_hnf_basis};
use crate::arith::{IntMatrix, IntPoly};
use crate::error::{Error, Result};
use crate::ff::factor::factor_mod_p;
use crate::ff::linalg::left_kernel;
use crate::ff::modpoly::{addmod, mulmod, ModPoly};

/// Multiplies two power-basis numerators modulo the monic `f`.
pub(crate) fn mul_mod_poly(a: &[BigInt], b: &[BigInt], f: &IntPoly) -> Vec<BigInt> {
    let n = f.degree().expect("nonzero modulus");
    let prod = &IntPoly::new(a.to_vec()) * &IntPoly::new(b.to_vec());
    let r = prod.rem_monic(f);
    (0..n).map(|k| r.coeff(k)).collect()
}

/// Order spanned by `basis[i] / den` over the power basis, kept in
/// lower-triangular Hermite form so that `basis[0] / den = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Order {
    pub basis: Vec<Vec<BigInt>>,
    pub den: BigInt,
}

impl Order {
    pub fn equation_order(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Order { basis, den: BigInt::one() }
    }

    /// Normalized order from generators `rows / den` (must span rank `n`).
    pub fn from_generators(rows: &[Vec<BigInt>], den: BigInt, n: usize) -> Self {
        let mut basis = lower_hnf_basis(rows, n);
        let g = basis
            .iter()
            .flatten()
            .fold(den.clone(), |g, x| g.gcd(x));
        let mut den = den;
        if !g.is_one() {
            for row in basis.iter_mut() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
            den /= &g;
        }
        Order { basis, den }
    }

    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    /// `[O : Z[x]] = den^n / det(basis)`.
    pub fn index(&self) -> BigInt {
        let n = self.degree();
        let det: BigInt = (0..n).map(|i| self.basis[i][i].clone()).product();
        num_traits::pow::pow(self.den.clone(), n) / det
    }

    pub fn rational_coords(&self, num: &[BigInt], den: &BigInt) -> Vec<BigRational> {
        let n = self.degree();
        let mut c = vec![BigRational::zero(); n];
        for j in (0..n).rev() {
            let mut acc = BigRational::new(&self.den * &num[j], den.clone());
            for (i, ci) in c.iter().enumerate().skip(j + 1) {
                acc -= ci * BigRational::from_integer(self.basis[i][j].clone());
            }
            c[j] = acc / BigRational::from_integer(self.basis[j][j].clone());
        }
        c
    }

    /// Integral coordinates of `num / den`, or `None` if it is not in the order.
    pub fn coords(&self, num: &[BigInt], den: &BigInt) -> Option<Vec<BigInt>> {
        self.rational_coords(num, den)
            .into_iter()
            .map(|q| q.is_integer().then(|| q.to_integer()))
            .collect()
    }

    /// Power-basis numerators (over `den`) of the element with coordinates `c`.
    pub fn to_power(&self, c: &[BigInt]) -> Vec<BigInt> {
        let n = self.degree();
        (0..n)
            .map(|j| (0..n).map(|i| &c[i] * &self.basis[i][j]).sum())
            .collect()
    }

    /// `table[i][j]` = coordinates of `w_i * w_j`.
    pub fn mult_table(&self, f: &IntPoly) -> Vec<Vec<Vec<BigInt>>> {
        let n = self.degree();
        let den2 = &self.den * &self.den;
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let prod = mul_mod_poly(&self.basis[i], &self.basis[j], f);
                let c = self
                    .coords(&prod, &den2)
                    .expect("order is closed under multiplication");
                table[i][j] = c.clone();
                table[j][i] = c;
            }
        }
        table
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.basis.clone()).expect("square basis")
    }
}

/// Multiplication table reduced modulo a word-sized modulus.
pub(crate) fn reduce_table(table: &[Vec<Vec<BigInt>>], m: u64) -> Vec<Vec<Vec<u64>>> {
    let mb = BigInt::from(m);
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(|x| x.mod_floor(&mb).to_u64().expect("fits")).collect())
                .collect()
        })
        .collect()
}

/// Product in `O / m O` given a reduced multiplication table.
pub(crate) fn mul_residue(table: &[Vec<Vec<u64>>], a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0u64; n];
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            if b[j] == 0 {
                continue;
            }
            let s = mulmod(a[i], b[j], m);
            for (k, o) in out.iter_mut().enumerate() {
                let t = table[i][j][k];
                if t != 0 {
                    *o = addmod(*o, mulmod(s, t, m), m);
                }
            }
        }
    }
    out
}

pub(crate) fn pow_residue(table: &[Vec<Vec<u64>>], a: &[u64], mut e: u64, m: u64) -> Vec<u64> {
    let n = a.len();
    let mut acc = vec![0u64; n];
    acc[0] = 1 % m;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_residue(table, &acc, &base, m);
        }
        base = mul_residue(table, &base, &base, m);
        e >>= 1;
    }
    acc
}

/// Matrix (rows = images of basis vectors) of `x -> x^(p^k)` on `O / p O`,
/// with `p^k >= n` so that its kernel is the radical of `p O`.
pub(crate) fn frobenius_rows(table: &[Vec<Vec<u64>>], p: u64, nilpotent: bool) -> Vec<Vec<u64>> {
    let n = table.len();
    let mut k = 1u32;
    if nilpotent {
        let mut q = p as u128;
        while q < n as u128 {
            q *= p as u128;
            k += 1;
        }
    }
    (0..n)
        .map(|i| {
            let mut v = vec![0u64; n];
            v[i] = 1;
            for _ in 0..k {
                v = pow_residue(table, &v, p, p);
            }
            v
        })
        .collect()
}

/// Solves `y * J = v` for upper-triangular nonsingular `J`; `None` if not integral.
fn solve_upper(j: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = j.len();
    let mut y: Vec<BigInt> = Vec::with_capacity(n);
    for c in 0..n {
        let mut acc = v[c].clone();
        for (k, yk) in y.iter().enumerate() {
            acc -= yk * &j[k][c];
        }
        let (q, r) = acc.div_rem(&j[c][c]);
        if !r.is_zero() {
            return None;
        }
        y.push(q);
    }
    Some(y)
}

pub(crate) fn word_prime(p: &BigInt) -> Result<u64> {
    p.to_u64()
        .filter(|&q| q < (1 << 62))
        .ok_or_else(|| Error::ModulusTooLarge(p.to_string()))
}

/// Dedekind criterion: is `Z[x]/(f)` maximal at `p`?
pub fn dedekind_test(f: &IntPoly, p: u64) -> Result<bool> {
    let fac = factor_mod_p(f, p)?;
    if fac.factors.iter().all(|(_, e)| *e == 1) {
        return Ok(true);
    }
    let g = fac
        .factors
        .iter()
        .fold(IntPoly::constant(BigInt::one()), |acc, (t, _)| &acc * &t.to_int_poly());
    let h = fac
        .factors
        .iter()
        .fold(IntPoly::constant(BigInt::one()), |acc, (t, e)| {
            &acc * &t.to_int_poly().pow(e - 1)
        });
    let pb = BigInt::from(p);
    let diff = &(&g * &h) - f;
    debug_assert!(diff.coeffs().iter().all(|c| (c % &pb).is_zero()));
    let t = diff.div_scalar(&pb);
    let tbar = ModPoly::from_int_poly(&t, p);
    let gbar = ModPoly::from_int_poly(&g, p);
    let hbar = ModPoly::from_int_poly(&h, p);
    let z = tbar.gcd(&gbar).gcd(&hbar);
    Ok(z.degree() == Some(0))
}

/// A p-maximal overorder of the equation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOrder {
    /// Lower-triangular Hermite basis over the power basis, scaled by `denominator`.
    pub basis: IntMatrix,
    pub denominator: BigInt,
    /// `v_p([O : Z[x]])`.
    pub vp_index: u32,
}

pub fn p_maximal_order(f: &IntPoly, p: u64) -> Result<LocalOrder> {
    crate::arith::integer::check_prime(p)?;
    let (order, vp_index) = round2(f, p)?;
    Ok(LocalOrder { basis: order.basis_matrix(), denominator: order.den, vp_index })
}

/// Round-2 loop: radical of `pO` via the Frobenius kernel, then its ring
/// of multipliers, until the order stops growing.
pub(crate) fn round2(f: &IntPoly, p: u64) -> Result<(Order, u32)> {
    let n = f.degree().ok_or_else(|| Error::InvalidDegree("zero polynomial".into()))?;
    let mut order = Order::equation_order(n);
    if dedekind_test(f, p)? {
        return Ok((order, 0));
    }
    let pb = BigInt::from(p);
    let mut vp_index = 0u32;
    loop {
        let table = order.mult_table(f);
        let tp = reduce_table(&table, p);

        let frob = frobenius_rows(&tp, p, true);
        let rad = left_kernel(&frob, p);
        let mut gens: Vec<Vec<BigInt>> = rad
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        gens.extend((0..n).map(|i| {
            (0..n).map(|j| if i == j { pb.clone() } else { BigInt::zero() }).collect()
        }));
        let ideal = hnf_basis(&gens, n);
        debug_assert_eq!(ideal.len(), n);

        // x in O/pO acting on I/pI.
        let action: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(n * n);
                for beta in &ideal {
                    let prod: Vec<BigInt> = (0..n)
                        .map(|k| (0..n).map(|l| &beta[l] * &table[i][l][k]).sum())
                        .collect();
                    let y = solve_upper(&ideal, &prod).expect("radical is an ideal");
                    row.extend(y.iter().map(|c| c.mod_floor(&pb).to_u64().expect("fits")));
                }
                row
            })
            .collect();
        let kernel = left_kernel(&action, p);
        if kernel.is_empty() {
            return Ok((order, vp_index));
        }
        vp_index += kernel.len() as u32;

        let mut ugens: Vec<Vec<BigInt>> = kernel
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        ugens.extend((0..n).map(|i| {
            (0..n).map(|j| if i == j { pb.clone() } else { BigInt::zero() }).collect()
        }));
        let u = hnf_basis(&ugens, n);
        let rows: Vec<Vec<BigInt>> = u.iter().map(|c| order.to_power(c)).collect();
        order = Order::from_generators(&rows, &order.den * &pb, n);
    }
}

/// Sum of orders, each given with its own denominator.
pub(crate) fn order_sum(orders: &[Order], n: usize) -> Order {
    let den = orders.iter().fold(BigInt::one(), |l, o| l.lcm(&o.den));
    let rows: Vec<Vec<BigInt>> = orders
        .iter()
        .flat_map(|o| {
            let scale = &den / &o.den;
            o.basis
                .iter()
                .map(move |r| r.iter().map(|x| x * &scale).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .collect();
    Order::from_generators(&rows, den, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn dedekind_examples() {
        assert!(!dedekind_test(&p("x^3 - x^2 - 2*x - 8"), 2).unwrap());
        assert!(dedekind_test(&p("x^3 - x + 3"), 3).unwrap());
        assert!(!dedekind_test(&p("x^2 - 17"), 2).unwrap());
        assert!(dedekind_test(&p("x^2 - 2"), 2).unwrap());
        // x^2 - 5: 5 is Eisenstein, fine at 5; at 2, (1+sqrt5)/2 is integral
        assert!(dedekind_test(&p("x^2 - 5"), 5).unwrap());
        assert!(!dedekind_test(&p("x^2 - 5"), 2).unwrap());
    }

    #[test]
    fn local_index_examples() {
        assert_eq!(p_maximal_order(&p("x^2 - 17"), 2).unwrap().vp_index, 1);
        assert_eq!(p_maximal_order(&p("x^3 - x + 3"), 3).unwrap().vp_index, 0);
        assert_eq!(p_maximal_order(&p("x^3 - x^2 - 2*x - 8"), 2).unwrap().vp_index, 1);
    }

    #[test]
    fn quadratic_basis_at_two() {
        let lo = p_maximal_order(&p("x^2 - 17"), 2).unwrap();
        assert_eq!(lo.denominator, BigInt::from(2));
        assert_eq!(lo.basis.to_rows(), vec![
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(1)],
        ]);
    }

    #[test]
    fn deep_index_gains() {
        // x^2 - 4*17 = (2 sqrt17)^2: equation order has index 4 in Z[(1+sqrt17)/2]
        let lo = p_maximal_order(&p("x^2 - 68"), 2).unwrap();
        assert_eq!(lo.vp_index, 2);
        // x^3 - 8*2 = (2 cbrt2)^3: index 2^3 * (1) in Z[cbrt 2]
        let lo = p_maximal_order(&p("x^3 - 16"), 2).unwrap();
        let o = Order { basis: lo.basis.to_rows(), den: lo.denominator.clone() };
        assert_eq!(o.index(), BigInt::from(1) << lo.vp_index);
        assert_eq!(lo.vp_index, 3);
    }
}
