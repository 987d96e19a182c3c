//! Closed forms for the total, singly refined and doubly refined counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{factorial, Matrix};
use crate::error::{Error, Result};

/// `A_n = prod_{i=0}^{n-1} (3i+1)! / (n+i)!`.
pub fn asm_count(n: usize) -> BigInt {
    let mut r = BigRational::one();
    for i in 0..n as u64 {
        r *= BigRational::new(factorial(3 * i + 1), factorial(n as u64 + i));
    }
    debug_assert!(r.is_integer());
    r.to_integer()
}

/// `A_{n,k}`, zero outside `0 <= k <= n-1`.
pub fn refined_count(n: usize, k: i64) -> BigInt {
    if n == 0 || k < 0 || k >= n as i64 {
        return BigInt::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let mut r = BigRational::new(
        factorial(n + k - 1) * factorial(2 * n - k - 2),
        factorial(2 * n - 2) * factorial(k) * factorial(n - k - 1),
    );
    for l in 0..n.saturating_sub(1) {
        r *= BigRational::new(factorial(3 * l + 1), factorial(n + l - 1));
    }
    debug_assert!(r.is_integer());
    r.to_integer()
}

/// `A_{n,i,j}` from the solved recursion, with exact division by `A_{n-1}`.
pub fn doubly_refined_count(n: usize, i: i64, j: i64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument("doubly refined counts need n >= 2".into()));
    }
    let ni = n as i64;
    if i < 0 || j < 0 || i >= ni || j >= ni {
        return Ok(BigInt::zero());
    }
    let a = |k: i64| refined_count(n, k);
    let b = |k: i64| refined_count(n - 1, k);
    let mut sum = BigInt::zero();
    for k in 0..=i.min(ni - j - 1) {
        sum += a(i - k) * b(j + k) - a(i - k - 1) * b(j + k) - b(i - k - 1) * a(j + k + 1) + b(i - k - 1) * a(j + k);
    }
    let (q, r) = sum.div_rem(&asm_count(n - 1));
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub a_n: BigInt,
    pub a_nk: Vec<BigInt>,
    pub a_nij: Matrix<BigInt>,
}

impl CountTable {
    /// Counts as decimal strings, `{"n", "a_n", "a_nk", "a_nij"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let s = |v: &BigInt| serde_json::Value::String(v.to_string());
        serde_json::json!({
            "n": self.n,
            "a_n": s(&self.a_n),
            "a_nk": self.a_nk.iter().map(s).collect::<Vec<_>>(),
            "a_nij": self.a_nij.to_rows().iter().map(|r| r.iter().map(s).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Whether the recursion linking `A_{n,i,j}`, `A_{n,k}` and `A_{n-1,k}`
/// holds at `(i, j)`; indices outside the table read as zero.
pub fn recursion_holds(n: usize, i: i64, j: i64) -> Result<bool> {
    let d = |a: i64, b: i64| doubly_refined_count(n, a, b);
    let a = |k: i64| refined_count(n, k);
    let b = |k: i64| refined_count(n - 1, k);
    let lhs = (d(i - 1, j)? - d(i, j - 1)?) * asm_count(n - 1);
    let rhs = a(i - 1) * b(j - 1) - a(i) * b(j - 1) - b(i - 1) * a(j - 1) + b(i - 1) * a(j);
    Ok(lhs == rhs)
}

/// All three levels of counts, with their internal consistency checked.
pub fn refined_counts(n: usize) -> Result<CountTable> {
    if n < 2 {
        return Err(Error::InvalidArgument("refined counts need n >= 2".into()));
    }
    let a_n = asm_count(n);
    let a_nk: Vec<BigInt> = (0..n as i64).map(|k| refined_count(n, k)).collect();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n as i64 {
        rows.push((0..n as i64).map(|j| doubly_refined_count(n, i, j)).collect::<Result<Vec<_>>>()?);
    }
    let a_nij = Matrix::from_rows(rows)?;
    let table = CountTable { n, a_n, a_nk, a_nij };
    let fail = |what: &str| Err(Error::InvalidArgument(format!("count table for n = {n}: {what}")));
    if table.a_nk.iter().sum::<BigInt>() != table.a_n {
        return fail("singly refined counts do not sum to A_n");
    }
    if table.a_nij.entries().iter().sum::<BigInt>() != table.a_n {
        return fail("doubly refined counts do not sum to A_n");
    }
    if table.a_nij != table.a_nij.transpose() {
        return fail("doubly refined table is not symmetric");
    }
    for i in 0..=n as i64 {
        for j in 0..=n as i64 {
            if !recursion_holds(n, i, j)? {
                return fail("recursion fails");
            }
        }
    }
    Ok(table)
}

/// `(-1)^{n(n+1)/2 + 1} A_{n-1}^{n-3}`, the predicted determinant of the
/// doubly refined table, for `n >= 3`.
pub fn doubly_refined_det_prediction(n: usize) -> BigInt {
    assert!(n >= 3, "prediction stated for n >= 3");
    let sign = if (n * (n + 1) / 2 + 1).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    sign * num_traits::pow(asm_count(n - 1), n - 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals() {
        let known = [1u64, 1, 2, 7, 42, 429, 7436, 218348, 10850216];
        for (n, &v) in known.iter().enumerate() {
            assert_eq!(asm_count(n), BigInt::from(v), "n={n}");
        }
    }

    #[test]
    fn order_three() {
        let t = refined_counts(3).unwrap();
        assert_eq!(t.a_n, BigInt::from(7));
        assert_eq!(t.a_nk, vec![BigInt::from(2), BigInt::from(3), BigInt::from(2)]);
        assert_eq!(t.a_nij, crate::algebra::int_matrix(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]));
        assert_eq!(t.a_nij.det().unwrap(), BigInt::from(-1));
        assert_eq!(doubly_refined_det_prediction(3), BigInt::from(-1));
    }

    #[test]
    fn tables_are_consistent() {
        for n in 2..=8 {
            refined_counts(n).unwrap();
        }
    }
}
