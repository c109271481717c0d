//! Dense integer matrices and Hermite normal forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Row-major integer matrix with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("matrix must be rectangular and nonempty".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Row-style Hermite normal form of the row lattice of `rows`.
///
/// Returns the echelon rows (zero rows dropped), the rank and, when
/// requested, the unimodular transform `U` with `U * M = [H; 0]`.
fn echelon(rows: &[Vec<BigInt>], cols: usize, track: bool) -> (Vec<Vec<BigInt>>, Option<Vec<Vec<BigInt>>>) {
    let m = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = if track {
        (0..m)
            .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect()
    } else {
        Vec::new()
    };

    fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d -= q * s;
            }
        }
    }

    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(pi) = pivot else { break };
            a.swap(r, pi);
            if track {
                u.swap(r, pi);
            }
            let mut done = true;
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (top, rest) = a.split_at_mut(i);
                axpy(&mut rest[0], &q, &top[r]);
                if track {
                    let (top, rest) = u.split_at_mut(i);
                    axpy(&mut rest[0], &q, &top[r]);
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < m && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for v in a[r].iter_mut() {
                    *v = -&*v;
                }
                if track {
                    for v in u[r].iter_mut() {
                        *v = -&*v;
                    }
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                if q.is_zero() {
                    continue;
                }
                let (top, rest) = a.split_at_mut(r);
                axpy(&mut top[i], &q, &rest[0]);
                if track {
                    let (top, rest) = u.split_at_mut(r);
                    axpy(&mut top[i], &q, &rest[0]);
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    (a, track.then_some(u))
}

/// Hermite normal form `H = U * M` of a full-row-rank matrix: upper
/// echelon, positive pivots, entries above each pivot in `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let (h, u) = echelon(&m.to_rows(), m.cols(), true);
    if h.len() < m.rows() {
        return Err(Error::RankDeficient);
    }
    Ok((IntMatrix::from_rows(h)?, IntMatrix::from_rows(u.expect("tracked"))?))
}

/// Upper Hermite basis of the lattice spanned by `rows` (any rank).
pub(crate) fn hnf_basis(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    echelon(rows, cols, false).0
}

/// Lower-triangular Hermite basis of a full-rank lattice in `Z^n`: row `i`
/// is supported on columns `0..=i`, pivots positive, entries below each
/// pivot reduced modulo it.
pub(crate) fn lower_hnf_basis(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let flipped: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().rev().cloned().collect())
        .collect();
    let h = hnf_basis(&flipped, n);
    assert_eq!(h.len(), n, "lattice must have full rank");
    h.into_iter()
        .rev()
        .map(|r| r.into_iter().rev().collect())
        .collect()
}
