//! The three equivalent forms of the Desnanot–Jacobi identity, evaluated
//! exactly on a concrete matrix. Indices are 0-based; in the minor
//! notation the deleted rows are listed first, then deleted columns.

use super::matrix::Matrix;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DjForm {
    /// Square `n x n` matrix, rows `i1 < i2`, columns `j1 < j2`:
    /// `det M * det M^{i1 i2}_{j1 j2} = M^{i1}_{j1} M^{i2}_{j2} - M^{i1}_{j2} M^{i2}_{j1}`.
    Classic { rows: [usize; 2], cols: [usize; 2] },
    /// `(n+2) x n` matrix, rows `k1 < k2 < k3 < k4`:
    /// `N^{k1k2} N^{k3k4} - N^{k1k3} N^{k2k4} + N^{k1k4} N^{k2k3} = 0`.
    TwoColumn { rows: [usize; 4] },
    /// `(n+1) x n` matrix, rows `k1 < k2 < k3` and a column `l`:
    /// `P^{k1} P^{k2k3}_l - P^{k2} P^{k1k3}_l + P^{k3} P^{k1k2}_l = 0`.
    Mixed { rows: [usize; 3], col: usize },
}

fn strictly_increasing(idx: &[usize]) -> bool {
    idx.windows(2).all(|w| w[0] < w[1])
}

fn minor_det<S: Ring>(m: &Matrix<S>, rows: &[usize], cols: &[usize]) -> Result<S> {
    m.minor(rows, cols)?.det()
}

/// Left and right sides of the chosen form. For the two vanishing forms the
/// right side is zero.
pub fn desnanot_jacobi_sides<S: Ring>(m: &Matrix<S>, form: &DjForm) -> Result<(S, S)> {
    let (r, c) = (m.rows(), m.cols());
    match *form {
        DjForm::Classic { rows, cols } => {
            if r != c {
                return Err(Error::NonSquare { rows: r, cols: c });
            }
            if !strictly_increasing(&rows) || !strictly_increasing(&cols) || rows[1] >= r || cols[1] >= c {
                return Err(Error::InvalidArgument(format!("classic indices {rows:?}, {cols:?}")));
            }
            let [i1, i2] = rows;
            let [j1, j2] = cols;
            let lhs = m.det()?.mul(&minor_det(m, &rows, &cols)?);
            let rhs = minor_det(m, &[i1], &[j1])?
                .mul(&minor_det(m, &[i2], &[j2])?)
                .sub(&minor_det(m, &[i1], &[j2])?.mul(&minor_det(m, &[i2], &[j1])?));
            Ok((lhs, rhs))
        }
        DjForm::TwoColumn { rows } => {
            if r != c + 2 {
                return Err(Error::Shape(format!("two-column form needs (n+2) x n, got {r}x{c}")));
            }
            if !strictly_increasing(&rows) || rows[3] >= r {
                return Err(Error::InvalidArgument(format!("two-column indices {rows:?}")));
            }
            let [k1, k2, k3, k4] = rows;
            let d = |a: usize, b: usize| minor_det(m, &[a, b], &[]);
            let lhs = d(k1, k2)?.mul(&d(k3, k4)?).sub(&d(k1, k3)?.mul(&d(k2, k4)?)).add(&d(k1, k4)?.mul(&d(k2, k3)?));
            Ok((lhs, S::zero()))
        }
        DjForm::Mixed { rows, col } => {
            if r != c + 1 {
                return Err(Error::Shape(format!("mixed form needs (n+1) x n, got {r}x{c}")));
            }
            if !strictly_increasing(&rows) || rows[2] >= r || col >= c {
                return Err(Error::InvalidArgument(format!("mixed indices {rows:?}, column {col}")));
            }
            let [k1, k2, k3] = rows;
            let one = |a: usize| minor_det(m, &[a], &[]);
            let two = |a: usize, b: usize| minor_det(m, &[a, b], &[col]);
            let lhs = one(k1)?.mul(&two(k2, k3)?).sub(&one(k2)?.mul(&two(k1, k3)?)).add(&one(k3)?.mul(&two(k1, k2)?));
            Ok((lhs, S::zero()))
        }
    }
}

/// Whether the chosen form holds exactly for `m`.
pub fn check_desnanot_jacobi<S: Ring>(m: &Matrix<S>, form: &DjForm) -> Result<bool> {
    let (lhs, rhs) = desnanot_jacobi_sides(m, form)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::int_matrix;
    use num_bigint::BigInt;

    #[test]
    fn classic_on_two_by_two() {
        let m = int_matrix(&[&[3, -1], &[4, 9]]);
        let form = DjForm::Classic { rows: [0, 1], cols: [0, 1] };
        let (l, r) = desnanot_jacobi_sides(&m, &form).unwrap();
        assert_eq!(l, BigInt::from(31));
        assert_eq!(r, BigInt::from(31));
    }

    #[test]
    fn two_column_on_five_by_three() {
        let m = int_matrix(&[&[1, 4, -2], &[0, 3, 5], &[7, -1, 2], &[2, 2, 2], &[-3, 0, 6]]);
        assert!(check_desnanot_jacobi(&m, &DjForm::TwoColumn { rows: [0, 1, 2, 3] }).unwrap());
        assert!(check_desnanot_jacobi(&m, &DjForm::TwoColumn { rows: [0, 2, 3, 4] }).unwrap());
    }

    #[test]
    fn mixed_on_four_by_three() {
        let m = int_matrix(&[&[1, 4, -2], &[0, 3, 5], &[7, -1, 2], &[-3, 0, 6]]);
        for col in 0..3 {
            assert!(check_desnanot_jacobi(&m, &DjForm::Mixed { rows: [0, 1, 3], col }).unwrap());
        }
    }

    #[test]
    fn shape_violations() {
        let sq = int_matrix(&[&[1, 2], &[3, 4]]);
        assert!(check_desnanot_jacobi(&sq, &DjForm::TwoColumn { rows: [0, 1, 2, 3] }).is_err());
        assert!(check_desnanot_jacobi(&sq, &DjForm::Classic { rows: [1, 0], cols: [0, 1] }).is_err());
        let tall = int_matrix(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert!(check_desnanot_jacobi(&tall, &DjForm::Mixed { rows: [0, 1, 2], col: 2 }).is_err());
        assert!(check_desnanot_jacobi(&tall, &DjForm::Classic { rows: [0, 1], cols: [0, 1] }).is_err());
    }
}
