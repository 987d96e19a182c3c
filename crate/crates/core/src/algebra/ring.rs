use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with exact division where the quotient exists.
///
/// Implemented for the three scalar domains matrices are built over:
/// [`BigInt`], [`BigRational`] and [`MPoly`](super::MPoly).
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// `self / other` if `other` divides `self` exactly in this ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// `x^e` by repeated squaring.
pub fn pow<R: Ring>(base: &R, mut e: u32) -> R {
    let mut acc = R::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        e >>= 1;
        if e > 0 {
            b = b.mul(&b);
        }
    }
    acc
}

/// Binomial coefficient with the conventions used by the path-sum formulas:
/// `binom(m, r) = 0` for `r < 0`, `binom(m, 0) = 1` for every integer `m`
/// (including `m = -1`), and `binom(m, r) = 0` for `0 <= m < r`.
///
/// # Panics
///
/// Panics for `m < 0` and `r > 0`; none of the formulas in this crate reach
/// that case.
pub fn binom(m: i64, r: i64) -> BigInt {
    if r < 0 {
        return <BigInt as Zero>::zero();
    }
    if r == 0 {
        return <BigInt as One>::one();
    }
    assert!(m >= 0, "binom({m}, {r}): negative upper index with positive r");
    if r > m {
        return <BigInt as Zero>::zero();
    }
    let r = r.min(m - r);
    let mut acc = <BigInt as One>::one();
    for k in 0..r {
        acc = acc * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    acc
}

/// `k!` as a big integer.
pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(<BigInt as One>::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom(-1, 0), BigInt::from(1));
        assert_eq!(binom(5, -1), BigInt::from(0));
        assert_eq!(binom(3, 4), BigInt::from(0));
        assert_eq!(binom(0, 0), BigInt::from(1));
        assert_eq!(binom(10, 3), BigInt::from(120));
        assert_eq!(binom(10, 7), BigInt::from(120));
    }

    #[test]
    #[should_panic]
    fn negative_upper_index_is_rejected() {
        binom(-2, 1);
    }

    #[test]
    fn pascal_rule() {
        for m in 1..20 {
            for r in 1..=m {
                assert_eq!(binom(m, r), binom(m - 1, r - 1) + binom(m - 1, r));
            }
        }
    }

    #[test]
    fn integer_exact_division() {
        let a = BigInt::from(42);
        assert_eq!(a.div_exact(&BigInt::from(6)), Some(BigInt::from(7)));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(a.div_exact(&BigInt::from(0)), None);
        assert_eq!(pow(&BigInt::from(3), 5), BigInt::from(243));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
