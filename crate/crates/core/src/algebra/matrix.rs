//! Dense matrices over a [`Ring`] with exact determinants.

use std::fmt;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[S]> = self.entries.chunks(self.cols.max(1)).take(self.rows).collect();
        f.debug_struct("Matrix").field("rows", &self.rows).field("cols", &self.cols).field("entries", &rows).finish()
    }
}

impl<S: Ring> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<T: Ring>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Keep the listed rows and columns, in the order given.
    pub fn select(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Result<Self> {
        check_indices(keep_rows, self.rows)?;
        check_indices(keep_cols, self.cols)?;
        Ok(Matrix::from_fn(keep_rows.len(), keep_cols.len(), |i, j| self.get(keep_rows[i], keep_cols[j]).clone()))
    }

    /// Delete the listed rows and columns, preserving the order of the rest.
    pub fn minor(&self, del_rows: &[usize], del_cols: &[usize]) -> Result<Self> {
        check_indices(del_rows, self.rows)?;
        check_indices(del_cols, self.cols)?;
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !del_rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !del_cols.contains(j)).collect();
        self.select(&keep_r, &keep_c)
    }

    pub fn mul(&self, other: &Matrix<S>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(S::zero(), |acc, k| acc.add(&self.get(i, k).mul(other.get(k, j))))
        }))
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Fraction-free (Bareiss) elimination. Every division is exact; a
    /// failed division means the ring arithmetic is broken and is reported
    /// as [`Error::InexactDivision`].
    pub fn det(&self) -> Result<S> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(S::one());
        }
        let mut a: Vec<Vec<S>> = self.to_rows();
        let mut negate = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(S::zero()),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                for j in k + 1..n {
                    let num = row[j].mul(&pivot_row[k]).sub(&row[k].mul(&pivot_row[j]));
                    row[j] = num.div_exact(&prev).ok_or(Error::InexactDivision)?;
                }
                row[k] = S::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Laplace expansion along the first row. Exponential; used as an
    /// oracle for small matrices.
    pub fn det_cofactor(&self) -> Result<S> {
        let n = self.require_square()?;
        let cols: Vec<usize> = (0..n).collect();
        Ok(self.laplace(0, &cols))
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> S {
        if cols.is_empty() {
            return S::one();
        }
        let mut acc = S::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e.mul(&self.laplace(row + 1, &rest));
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

fn check_indices(idx: &[usize], len: usize) -> Result<()> {
    match idx.iter().find(|&&i| i >= len) {
        Some(&index) => Err(Error::IndexOutOfRange { index, len }),
        None => Ok(()),
    }
}

impl<S: Ring + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Integer matrix from small literals.
pub fn int_matrix(rows: &[&[i64]]) -> Matrix<num_bigint::BigInt> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| num_bigint::BigInt::from(v)).collect()).collect())
        .expect("rectangular literal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{MPoly, Var};
    use num_bigint::BigInt;

    #[test]
    fn one_by_one() {
        let m = int_matrix(&[&[-7]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-7));
    }

    #[test]
    fn two_by_two_polynomial() {
        let x = MPoly::var(Var::X);
        let y = MPoly::var(Var::Y);
        let m = Matrix::from_rows(vec![vec![x.clone(), y.clone()], vec![MPoly::one(), MPoly::one()]]).unwrap();
        assert_eq!(m.det().unwrap(), x - y);
        assert_eq!(m.det_cofactor().unwrap(), m.det().unwrap());
    }

    #[test]
    fn pivoting_needed() {
        let m = int_matrix(&[&[0, 2, 1], &[3, 0, 4], &[1, 1, 0]]);
        assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
        assert_eq!(m.det().unwrap(), BigInt::from(11));
        let singular = int_matrix(&[&[0, 2], &[0, 5]]);
        assert_eq!(singular.det().unwrap(), BigInt::from(0));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = int_matrix(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.det(), Err(Error::NonSquare { rows: 2, cols: 3 })));
        assert!(m.det_cofactor().is_err());
    }

    #[test]
    fn empty_determinant_is_one() {
        let m: Matrix<BigInt> = Matrix::identity(0);
        assert_eq!(m.det().unwrap(), BigInt::from(1));
    }

    #[test]
    fn minors() {
        let id: Matrix<BigInt> = Matrix::identity(3);
        assert_eq!(id.minor(&[], &[]).unwrap(), id);
        assert_eq!(id.minor(&[0], &[0]).unwrap(), Matrix::identity(2));
        let m = Matrix::from_fn(5, 3, |i, j| BigInt::from(10 * i + j));
        let bottom = m.minor(&[0, 1], &[]).unwrap();
        assert_eq!(bottom, Matrix::from_fn(3, 3, |i, j| BigInt::from(10 * (i + 2) + j)));
        assert!(matches!(m.minor(&[5], &[]), Err(Error::IndexOutOfRange { index: 5, len: 5 })));
    }

    #[test]
    fn transpose_and_product() {
        let a = int_matrix(&[&[1, 2], &[3, 4], &[5, 6]]);
        let at = a.transpose();
        assert_eq!(at.rows(), 2);
        let g = at.mul(&a).unwrap();
        assert_eq!(g, int_matrix(&[&[35, 44], &[44, 56]]));
        assert!(a.mul(&a).is_err());
    }
}
