//! Linear algebra over `F_p`.

use super::modpoly::{invmod, mulmod, submod};

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let m = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(pi) = (r..m).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pi);
        let inv = invmod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                if pv != 0 {
                    *v = submod(*v, mulmod(f, pv, p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a, p).len()
}

/// Basis of `{a : sum a_i * rows[i] = 0}`.
pub(crate) fn left_kernel(rows: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let m = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..m).map(|j| u64::from(i == j)));
            v
        })
        .collect();
    // Eliminate only over the original columns.
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(pi) = (r..m).find(|&i| aug[i][c] != 0) else { continue };
        aug.swap(r, pi);
        let inv = invmod(aug[r][c], p);
        for v in aug[r].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                if pv != 0 {
                    *v = submod(*v, mulmod(f, pv, p), p);
                }
            }
        }
        r += 1;
    }
    let mut kernel: Vec<Vec<u64>> = aug[r..].iter().map(|row| row[cols..].to_vec()).collect();
    rref(&mut kernel, p);
    kernel.retain(|v| v.iter().any(|&x| x != 0));
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_rank() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&rows, 7), 2);
        let k = left_kernel(&rows, 7);
        assert_eq!(k.len(), 1);
        let combo: Vec<u64> = (0..3)
            .map(|c| (0..3).map(|i| k[0][i] * rows[i][c]).sum::<u64>() % 7)
            .collect();
        assert_eq!(combo, vec![0, 0, 0]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = vec![vec![1, 1], vec![0, 1]];
        assert!(left_kernel(&rows, 2).is_empty());
    }
}
