//! The determinant matrices whose determinants give the generating
//! functions, and the boundary column sums they are built from.

use crate::algebra::{binom, MPoly, Matrix, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refinement {
    /// One boundary variable, written as `z1`.
    Singly,
    /// Two boundary variables `z1`, `z2`.
    Doubly,
}

fn need_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("determinant formulas need n >= 2, got {n}")));
    }
    Ok(())
}

fn xy(coef: num_bigint::BigInt, k: i64, i: i64, extra: &[(Var, u16)]) -> MPoly {
    let mut pairs = vec![(Var::X, k as u16), (Var::Y, (i - k) as u16)];
    pairs.extend_from_slice(extra);
    MPoly::monomial(coef, &pairs)
}

/// `sum_k binom(i-1, i-k) binom(j+1, k) x^k y^(i-k)`: the bulk entries.
pub fn bulk_entry(i: usize, j: usize) -> MPoly {
    let (i, j) = (i as i64, j as i64);
    (0..=i.min(j + 1)).fold(MPoly::zero(), |acc, k| &acc + &xy(binom(i - 1, i - k) * binom(j + 1, k), k, i, &[]))
}

/// `C_n(x, y, z)_i = sum_{k, l} binom(i-1, i-k) binom(n-l-2, k-l) x^k y^(i-k) z^(l+1)`.
pub fn c_one(n: usize, i: usize, z: Var) -> MPoly {
    let (n, i) = (n as i64, i as i64);
    let mut out = MPoly::zero();
    for k in 0..=i {
        for l in 0..=k {
            let c = binom(i - 1, i - k) * binom(n - l - 2, k - l);
            out = &out + &xy(c, k, i, &[(z, (l + 1) as u16)]);
        }
    }
    out
}

/// `C_n(x, y, za, zb)_i = sum_{k, l, m} binom(i-1, i-k) binom(n-l-2, k-l) x^k y^(i-k) za^m zb^(l-m)`.
pub fn c_two(n: usize, i: usize, za: Var, zb: Var) -> MPoly {
    let (n, i) = (n as i64, i as i64);
    let mut out = MPoly::zero();
    for k in 0..=i {
        for l in 0..=k {
            let c = binom(i - 1, i - k) * binom(n - l - 2, k - l);
            for m in 0..=l {
                out = &out + &xy(c.clone(), k, i, &[(za, m as u16), (zb, (l - m) as u16)]);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CForm {
    /// `C_n(x, y, z)` in the given variable.
    OneZ(Var),
    /// `C_n(x, y, z1, z2)`.
    TwoZ,
}

pub fn c_vector(n: usize, form: CForm) -> Result<Vec<MPoly>> {
    need_two(n)?;
    Ok((0..n)
        .map(|i| match form {
            CForm::OneZ(z) => c_one(n, i, z),
            CForm::TwoZ => c_two(n, i, Var::Z1, Var::Z2),
        })
        .collect())
}

fn delta(cond: bool) -> MPoly {
    if cond {
        MPoly::one()
    } else {
        MPoly::zero()
    }
}

/// The `n x n` matrix whose determinant is the singly or doubly refined
/// generating function.
pub fn k_matrix(n: usize, refined: Refinement) -> Result<Matrix<MPoly>> {
    need_two(n)?;
    let (nn, z) = (n as i64, Var::Z1);
    Ok(Matrix::from_fn(n, n, |i, j| {
        let body = match refined {
            Refinement::Doubly if j + 3 <= n => bulk_entry(i, j),
            Refinement::Doubly if j + 2 == n => c_one(n, i, Var::Z2),
            Refinement::Doubly => c_two(n, i, Var::Z1, Var::Z2),
            Refinement::Singly if j + 2 <= n => bulk_entry(i, j),
            Refinement::Singly => {
                let ii = i as i64;
                let mut out = MPoly::zero();
                for k in 0..=ii {
                    for l in 0..=k {
                        let c = binom(ii - 1, ii - k) * binom(nn - l - 1, k - l);
                        out = &out + &xy(c, k, ii, &[(z, l as u16)]);
                    }
                }
                out
            }
        };
        &body - &delta(i == j + 1)
    }))
}

/// The matrix obtained from the doubly refined one by column operations;
/// its determinant is `(z2 - z1) Z_n(x, y, z1, z2)`.
pub fn l_matrix(n: usize) -> Result<Matrix<MPoly>> {
    need_two(n)?;
    Ok(Matrix::from_fn(n, n, |i, j| {
        if j + 3 <= n {
            &bulk_entry(i, j) - &delta(i == j + 1)
        } else {
            let z = if j + 2 == n { Var::Z1 } else { Var::Z2 };
            &c_one(n, i, z) - &delta(i + 1 == n)
        }
    }))
}

/// `n x (n+2)` extension of [`l_matrix`] with two further columns in `z3`, `z4`.
pub fn l_matrix_augmented(n: usize) -> Result<Matrix<MPoly>> {
    need_two(n)?;
    let l = l_matrix(n)?;
    Ok(Matrix::from_fn(n, n + 2, |i, j| {
        if j < n {
            l.get(i, j).clone()
        } else {
            let z = if j == n { Var::Z3 } else { Var::Z4 };
            &c_one(n, i, z) - &delta(i + 1 == n)
        }
    }))
}
