//! Dense exact linear algebra over cyclotomic fields.

use super::CycNum;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<CycNum>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { CycNum::one() } else { CycNum::zero() }).collect())
        .collect()
}

/// Row echelon form in place; returns pivot columns and the determinant
/// factor picked up by row swaps and scalings (for square input, the
/// determinant equals that factor times 1 when full rank).
fn eliminate(a: &mut Matrix, reduce: bool) -> (Vec<usize>, CycNum) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut det = CycNum::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            det = -det;
        }
        let piv = a[r][c].clone();
        det *= &piv;
        let inv = piv.inverse().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let start = if reduce { 0 } else { r + 1 };
        for i in start..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot_row = a[r].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, det)
}

pub fn det(a: &Matrix) -> CycNum {
    let n = a.len();
    let mut m = a.clone();
    let (pivots, d) = eliminate(&mut m, false);
    if pivots.len() < n {
        CycNum::zero()
    } else {
        d
    }
}

pub fn rank(a: &Matrix) -> usize {
    let mut m = a.clone();
    eliminate(&mut m, false).0.len()
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (pivots, _) = eliminate(&mut aug, true);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::NonInvertibleMatrix);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, v: &[CycNum]) -> Vec<CycNum> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| CycNum::from_int(x)).collect()).collect()
    }

    #[test]
    fn det_rank_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&a), CycNum::from_int(18));
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&s), 1);
        assert_eq!(det(&s), CycNum::zero());
        assert!(inverse(&s).is_err());
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&swap), CycNum::from_int(-1));
    }

    #[test]
    fn cyclotomic_det() {
        let i = CycNum::zeta(4, 1);
        let a = vec![vec![i.clone(), CycNum::one()], vec![CycNum::one(), i.clone()]];
        // i·i − 1 = −2
        assert_eq!(det(&a), CycNum::from_int(-2));
    }
}
