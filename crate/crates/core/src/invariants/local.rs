//! Word-sized arithmetic in `O_K / p^k O_K` for the refinement search.

use crate::nf::charpoly::{berkowitz, Residues};
use crate::nf::order::{mul_residue, reduce_table};
use crate::nf::NumberField;

/// Inverse of a unit `a` modulo `m`.
pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not a unit");
    t0.rem_euclid(m as i128) as u64
}

/// Largest `k` with `p^k` representable, capped at `want`.
pub(crate) fn clamp_precision(p: u64, want: u32) -> u32 {
    let mut k = 0;
    let mut q: u64 = 1;
    while k < want {
        match q.checked_mul(p) {
            Some(next) if next < (1 << 63) => q = next,
            _ => break,
        }
        k += 1;
    }
    k
}

pub(crate) struct Local {
    pub p: u64,
    pub n: usize,
    /// Working precision: residues are exact modulo `p^k`.
    pub k: u32,
    pub modulus: u64,
    table: Vec<Vec<Vec<u64>>>,
}

impl Local {
    pub fn new(field: &NumberField, p: u64, k: u32) -> Self {
        let modulus = p.pow(k);
        Local { p, n: field.degree(), k, modulus, table: reduce_table(field.table(), modulus) }
    }

    /// `v_p(x)` for a residue, with zero mapped to `k`.
    pub fn val(&self, mut x: u64) -> u32 {
        if x == 0 {
            return self.k;
        }
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    fn mult_matrix(&self, r: &[u64]) -> Vec<Vec<u64>> {
        let n = self.n;
        let m = self.modulus;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        (0..n).fold(0u64, |acc, j| {
                            let t = self.table[j][i][k];
                            if r[j] == 0 || t == 0 {
                                acc
                            } else {
                                ((acc as u128 + r[j] as u128 * t as u128) % m as u128) as u64
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// `min_x v_p(F_r(x))`, capped at `k`.
    pub fn fixed_divisor_valuation(&self, r: &[u64]) -> u32 {
        let m = self.modulus;
        let cp = berkowitz(&Residues(m), &self.mult_matrix(r));
        let mut best = self.k;
        for x in 0..=self.n as u64 {
            let xm = x % m;
            let v = cp.iter().fold(0u64, |acc, &c| {
                ((acc as u128 * xm as u128 + c as u128) % m as u128) as u64
            });
            best = best.min(self.val(v));
            if best == 0 {
                break;
            }
        }
        best
    }

    /// `v_p([O_K : Z[r]])` from the coordinates of `1, r, ..., r^(n-1)`, capped at `k`.
    pub fn index_valuation(&self, r: &[u64]) -> u32 {
        let n = self.n;
        let m = self.modulus;
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![0u64; n];
        cur[0] = 1 % m;
        for _ in 0..n {
            let next = mul_residue(&self.table, &cur, r, m);
            rows.push(std::mem::replace(&mut cur, next));
        }
        self.det_valuation(rows)
    }

    /// Valuation of a determinant by elimination with minimal-valuation pivots.
    fn det_valuation(&self, mut a: Vec<Vec<u64>>) -> u32 {
        let n = self.n;
        let m = self.modulus;
        let mut total = 0u32;
        let mut rows: Vec<usize> = (0..n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        for _ in 0..n {
            let mut best: Option<(u32, usize, usize)> = None;
            for (ri, &i) in rows.iter().enumerate() {
                for (ci, &j) in cols.iter().enumerate() {
                    let v = self.val(a[i][j]);
                    if v < self.k && best.map_or(true, |b| v < b.0) {
                        best = Some((v, ri, ci));
                    }
                }
            }
            let Some((v, ri, ci)) = best else { return self.k };
            total += v;
            if total >= self.k {
                return self.k;
            }
            let pi = rows.swap_remove(ri);
            let pj = cols.swap_remove(ci);
            let pv = self.p.pow(v);
            let rest = m / pv;
            let unit_inv = inv_mod((a[pi][pj] / pv) % rest, rest);
            let pivot = a[pi].clone();
            for &i in &rows {
                if a[i][pj] == 0 {
                    continue;
                }
                let f = ((a[i][pj] / pv) as u128 * unit_inv as u128 % rest as u128) as u64;
                for &j in &cols {
                    let s = (f as u128 * pivot[j] as u128 % m as u128) as u64;
                    a[i][j] = if a[i][j] >= s { a[i][j] - s } else { a[i][j] + m - s };
                }
                a[i][pj] = 0;
            }
        }
        total
    }
}

/// Smallest representative of `{u r + c : u unit, c in Z}` modulo `p^m`,
/// for coordinates over a basis whose first vector is 1.
pub(crate) fn canonical(r: &[u64], p: u64, level: u32) -> Vec<u64> {
    let pm = p.pow(level);
    let mut base: Vec<u64> = r.iter().map(|&x| x % pm).collect();
    base[0] = 0;
    let Some(j) = base.iter().position(|&x| x != 0) else { return base };
    let mut e = 0;
    let mut a = base[j];
    while a % p == 0 {
        a /= p;
        e += 1;
    }
    let step = pm / p.pow(e);
    let inv = inv_mod(a % step, step);
    let mut best: Option<Vec<u64>> = None;
    for t in 0..p.pow(e) {
        let u = (inv + t * step) % pm;
        let cand: Vec<u64> =
            base.iter().map(|&x| (x as u128 * u as u128 % pm as u128) as u64).collect();
        if best.as_ref().map_or(true, |b| cand < *b) {
            best = Some(cand);
        }
    }
    best.expect("at least one unit")
}
