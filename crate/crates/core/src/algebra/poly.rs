//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! Variables come from a fixed, globally ordered alphabet
//! `x, y, z1, z2, z3, z4`, so two polynomials built independently compare
//! structurally. Terms are kept in a `BTreeMap` keyed by exponent vector
//! under the graded-lexicographic order, which makes the serialized term
//! list canonical without a separate sort.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ring;
use crate::error::{Error, Result};

pub const NVARS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z1,
    Z2,
    Z3,
    Z4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z1, Var::Z2, Var::Z3, Var::Z4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z1 => "z1",
            Var::Z2 => "z2",
            Var::Z3 => "z3",
            Var::Z4 => "z4",
        }
    }

    pub fn from_name(name: &str) -> Result<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The boundary variable `z_k` for `k` in `1..=4`.
    pub fn z(k: usize) -> Var {
        match k {
            1 => Var::Z1,
            2 => Var::Z2,
            3 => Var::Z3,
            4 => Var::Z4,
            _ => panic!("no boundary variable z{k}"),
        }
    }

    fn bit(self) -> u8 {
        1 << self.index()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the full variable alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn from_pairs(pairs: &[(Var, u16)]) -> Self {
        let mut e = [0u16; NVARS];
        for &(v, k) in pairs {
            e[v.index()] += k;
        }
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Monomial(e)
    }

    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(e))
    }

    fn support_mask(&self) -> u8 {
        Var::ALL.iter().filter(|v| self.exp(**v) > 0).fold(0, |m, v| m | v.bit())
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then exponents compared in
    /// variable order `x, y, z1, ...`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x, y, z1..z4` with integer coefficients.
///
/// `vars` records the variables the polynomial is declared over; it only
/// affects serialization. Equality compares terms alone.
#[derive(Clone, Debug, Default)]
pub struct MPoly {
    vars: u8,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MPoly::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(1, Monomial::from_pairs(&[(v, 1)]))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.vars = m.support_mask();
            p.terms.insert(m, c);
        }
        p
    }

    /// Single term `c * prod(v^k)`.
    pub fn monomial(c: impl Into<BigInt>, pairs: &[(Var, u16)]) -> Self {
        MPoly::term(c, Monomial::from_pairs(pairs))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = MPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Declare additional variables (for serialization).
    pub fn with_vars(mut self, vars: &[Var]) -> Self {
        for v in vars {
            self.vars |= v.bit();
        }
        self
    }

    /// Declared variables in canonical order.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.vars & v.bit() != 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        self.vars |= m.support_mask();
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly { vars: self.vars, terms: BTreeMap::new() };
        }
        MPoly { vars: self.vars, terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> MPoly {
        let mut out = MPoly { vars: self.vars | m.support_mask(), terms: BTreeMap::new() };
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect();
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        ring::pow(self, e).with_mask(self.vars)
    }

    fn with_mask(mut self, mask: u8) -> Self {
        self.vars |= mask;
        self
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly { vars: self.vars, terms: BTreeMap::new() };
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.divide(&dm)?;
            let (c, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            for (dm_k, dc_k) in &d.terms {
                rem.add_term(dm_k.mul(&m), -(dc_k * &c));
            }
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Divide out the gcd of the coefficients (sign normalized so the
    /// leading coefficient is positive). Returns the content and the
    /// primitive part.
    pub fn primitive(&self) -> (BigInt, MPoly) {
        let Some((_, lc)) = self.leading_term() else {
            return (BigInt::zero(), self.clone());
        };
        let mut g = self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c));
        if lc.is_negative() {
            g = -g;
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c / &g)).collect();
        (g, MPoly { vars: self.vars, terms })
    }

    /// Exact rational value at `point`; every variable with a nonzero
    /// exponent must be assigned.
    pub fn eval(&self, point: &HashMap<Var, BigRational>) -> Result<BigRational> {
        let mut cache: HashMap<(Var, u16), BigRational> = HashMap::new();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let base = point.get(&v).ok_or(Error::MissingVariable(v.name()))?;
                let pw = cache.entry((v, e)).or_insert_with(|| ring::pow(base, e as u32));
                t *= &*pw;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Simultaneous substitution `v -> sub[v]`; variables not listed are
    /// left alone.
    pub fn substitute(&self, sub: &[(Var, MPoly)]) -> MPoly {
        let mut table: [Option<&MPoly>; NVARS] = [None; NVARS];
        for (v, p) in sub {
            table[v.index()] = Some(p);
        }
        let mut mask = self.vars;
        for (v, p) in sub {
            if self.vars & v.bit() != 0 {
                mask = (mask & !v.bit()) | p.vars;
            }
        }
        let mut powers: HashMap<(usize, u16), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = m.0;
            let mut t = MPoly::constant(c.clone());
            for (i, slot) in table.iter().enumerate() {
                let e = m.0[i];
                if let (Some(p), true) = (slot, e > 0) {
                    kept[i] = 0;
                    let pw = powers.entry((i, e)).or_insert_with(|| ring::pow(*p, e as u32));
                    t = &t * &*pw;
                }
            }
            out = &out + &t.mul_term(&Monomial(kept), &BigInt::one());
        }
        out.vars = mask | out.support_mask();
        out
    }

    fn support_mask(&self) -> u8 {
        self.terms.keys().fold(0, |m, k| m | k.support_mask())
    }

    /// Apply `f` to every exponent vector. `f` must be injective on the
    /// support, otherwise colliding terms are summed.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> MPoly {
        let mut out = MPoly { vars: self.vars, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Exchange two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> MPoly {
        self.map_monomials(|m| {
            let mut e = m.0;
            e.swap(a.index(), b.index());
            Monomial(e)
        })
    }

    pub fn to_json(&self) -> PolyJson {
        let vars =
            Var::ALL.into_iter().filter(|v| (self.vars | self.support_mask()) & v.bit() != 0).collect::<Vec<_>>();
        PolyJson {
            vars: vars.iter().map(|v| v.name().to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { c: c.to_string(), e: vars.iter().map(|v| m.exp(*v)).collect() })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<MPoly> {
        let vars = j.vars.iter().map(|s| Var::from_name(s)).collect::<Result<Vec<_>>>()?;
        let mut p = MPoly::zero().with_vars(&vars);
        for t in &j.terms {
            if t.e.len() != vars.len() {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} for {} variables",
                    t.e.len(),
                    vars.len()
                )));
            }
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.c)))?;
            let mut e = [0u16; NVARS];
            for (v, k) in vars.iter().zip(&t.e) {
                e[v.index()] += k;
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }
}

/// Wire form: `{"vars": [...], "terms": [{"c": "<decimal>", "e": [...]}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u16>,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mut factors = Vec::new();
            if !a.is_one() || *m == Monomial::ONE {
                factors.push(a.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl ring::Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
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
        MPoly::div_exact(self, other)
    }
    fn from_i64(v: i64) -> Self {
        MPoly::constant(v)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        big.vars |= small.vars;
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out.vars |= rhs.vars;
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MPoly { vars: self.vars | rhs.vars, terms }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { vars: self.vars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<i64> for MPoly {
    fn from(v: i64) -> Self {
        MPoly::constant(v)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}
