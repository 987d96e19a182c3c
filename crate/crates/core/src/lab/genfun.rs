//! Generating functions `sum x^nu y^mu z1^rho1 z2^rho2` over ASMs and DPPs,
//! built by enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, Monomial, PolyJson, Var};
use crate::asm::{enumerate_asms, AsmStats};
use crate::dpp::enumerate_dpps;
use crate::error::{Error, Result};

/// Default largest order for enumeration-backed generating functions.
pub const ENUMERATION_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectKind {
    Asm,
    Dpp,
}

impl ObjectKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Asm => "ASM",
            ObjectKind::Dpp => "DPP",
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "asm" => Ok(ObjectKind::Asm),
            "dpp" => Ok(ObjectKind::Dpp),
            other => Err(Error::Parse(format!("unknown object kind `{other}`"))),
        }
    }
}

impl Serialize for ObjectKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ObjectKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn stat_monomial(nu: u32, mu: u32, r1: u32, r2: u32) -> Monomial {
    Monomial::from_pairs(&[(Var::X, nu as u16), (Var::Y, mu as u16), (Var::Z1, r1 as u16), (Var::Z2, r2 as u16)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFun {
    pub kind: ObjectKind,
    pub n: usize,
    pub poly: MPoly,
}

/// Serialized form: the polynomial JSON with a `kind` and `n` header.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenFunJson {
    pub kind: ObjectKind,
    pub n: usize,
    #[serde(flatten)]
    pub poly: PolyJson,
}

impl GenFun {
    pub fn to_json(&self) -> GenFunJson {
        GenFunJson { kind: self.kind, n: self.n, poly: self.poly.to_json() }
    }

    pub fn from_json(j: &GenFunJson) -> Result<GenFun> {
        Ok(GenFun { kind: j.kind, n: j.n, poly: MPoly::from_json(&j.poly)? })
    }
}

impl Serialize for GenFun {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenFun {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GenFun::from_json(&GenFunJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what: "enumeration", n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(())
}

fn four_vars(p: MPoly) -> MPoly {
    p.with_vars(&[Var::X, Var::Y, Var::Z1, Var::Z2])
}

pub fn asm_genfun(n: usize, cap: usize) -> Result<MPoly> {
    check_cap(n, cap)?;
    Ok(four_vars(MPoly::from_terms(enumerate_asms(n).map(|a| {
        let s = a.stats();
        (stat_monomial(s.nu, s.mu, s.rho1, s.rho2), 1.into())
    }))))
}

pub fn dpp_genfun(n: usize, cap: usize) -> Result<MPoly> {
    check_cap(n, cap)?;
    Ok(four_vars(MPoly::from_terms(enumerate_dpps(n as u32).map(|d| {
        let s = d.stats();
        (stat_monomial(s.nu, s.mu, s.rho1, s.rho2), 1.into())
    }))))
}

pub fn genfun_bruteforce(kind: ObjectKind, n: usize, cap: usize) -> Result<GenFun> {
    let poly = match kind {
        ObjectKind::Asm => asm_genfun(n, cap)?,
        ObjectKind::Dpp => dpp_genfun(n, cap)?,
    };
    Ok(GenFun { kind, n, poly })
}

/// Boundary statistic `rho_k` (1-based) of an ASM.
fn rho(s: &AsmStats, k: usize) -> u32 {
    match k {
        1 => s.rho1,
        2 => s.rho2,
        3 => s.rho3,
        4 => s.rho4,
        _ => panic!("boundary statistic index {k} outside 1..=4"),
    }
}

/// `sum x^nu y^mu z1^rho_i z2^rho_j` over `ASM(n)`, for `i != j` in `1..=4`.
pub fn boundary_genfun(n: usize, i: usize, j: usize, cap: usize) -> Result<MPoly> {
    if i == j || !(1..=4).contains(&i) || !(1..=4).contains(&j) {
        return Err(Error::InvalidArgument(format!("boundary pair ({i}, {j})")));
    }
    check_cap(n, cap)?;
    Ok(four_vars(MPoly::from_terms(enumerate_asms(n).map(|a| {
        let s = a.stats();
        (stat_monomial(s.nu, s.mu, rho(&s, i), rho(&s, j)), 1.into())
    }))))
}

/// The three-statistic function `Z(x, y, z) = Z(x, y, z, 1)`, written in `x, y, z1`.
pub fn singly_refined(z: &MPoly) -> MPoly {
    z.substitute(&[(Var::Z2, MPoly::one())])
}

/// Rewrite a function of `(z1, z2)` as one of `(a, b)`, simultaneously.
pub fn rename_pair(z: &MPoly, a: &MPoly, b: &MPoly) -> MPoly {
    z.substitute(&[(Var::Z1, a.clone()), (Var::Z2, b.clone())])
}

/// Reflect every exponent vector `(p, m, k1, k2)` to
/// `(n(n-1)/2 - p - m, m, n-1-k1, n-1-k2)`; `None` if some exponent would
/// become negative.
pub fn star_reflect(z: &MPoly, n: usize) -> Option<MPoly> {
    let top = (n * (n - 1) / 2) as i64;
    let side = n as i64 - 1;
    let mut ok = true;
    let out = z.map_monomials(|m| {
        let (p, mu) = (m.exp(Var::X) as i64, m.exp(Var::Y) as i64);
        let (k1, k2) = (m.exp(Var::Z1) as i64, m.exp(Var::Z2) as i64);
        let e = [top - p - mu, mu, side - k1, side - k2];
        if e.iter().any(|&v| v < 0) {
            ok = false;
            return *m;
        }
        Monomial::from_pairs(&[
            (Var::X, e[0] as u16),
            (Var::Y, e[1] as u16),
            (Var::Z1, e[2] as u16),
            (Var::Z2, e[3] as u16),
        ])
    });
    ok.then_some(out)
}

/// `[k]_x = 1 + x + ... + x^{k-1}`.
pub fn q_integer(k: usize) -> MPoly {
    MPoly::from_terms((0..k).map(|e| (Monomial::from_pairs(&[(Var::X, e as u16)]), 1.into())))
}

/// `[k]_x! = [k]_x [k-1]_x ... [1]_x`, with `[0]_x! = 1`.
pub fn q_factorial(k: usize) -> MPoly {
    (1..=k).fold(MPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// Closed form of the generating function restricted to permutation
/// matrices (`y = 0`).
pub fn perm_genfun(n: usize) -> Result<MPoly> {
    if n < 2 {
        return Err(Error::InvalidArgument("the closed form needs n >= 2".into()));
    }
    let mut sum = MPoly::zero();
    for i in 0..n {
        for j in i + 1..n {
            let a = Monomial::from_pairs(&[
                (Var::X, (n + i - j - 1) as u16),
                (Var::Z1, i as u16),
                (Var::Z2, (n - j - 1) as u16),
            ]);
            let b = Monomial::from_pairs(&[
                (Var::X, (n - i + j - 2) as u16),
                (Var::Z1, (n - i - 1) as u16),
                (Var::Z2, j as u16),
            ]);
            sum = &sum + &MPoly::from_terms([(a, 1.into()), (b, 1.into())]);
        }
    }
    Ok(four_vars(&q_factorial(n - 2) * &sum))
}

#[cfg(test)]
pub(crate) fn z3() -> MPoly {
    let m =
        |p: u16, q: u16, a: u16, b: u16| MPoly::monomial(1, &[(Var::X, p), (Var::Y, q), (Var::Z1, a), (Var::Z2, b)]);
    [m(0, 0, 0, 0), m(3, 0, 2, 2), m(1, 0, 0, 1), m(2, 0, 2, 1), m(1, 0, 1, 0), m(2, 0, 1, 2), m(1, 1, 1, 1)]
        .iter()
        .fold(MPoly::zero(), |acc, t| &acc + t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_both_kinds() {
        assert_eq!(asm_genfun(3, 6).unwrap(), z3());
        assert_eq!(dpp_genfun(3, 6).unwrap(), z3());
        assert_eq!(asm_genfun(1, 6).unwrap(), MPoly::one());
        assert_eq!(dpp_genfun(1, 6).unwrap(), MPoly::one());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(asm_genfun(7, 6), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn reflection_permutes_terms() {
        assert_eq!(star_reflect(&z3(), 3).unwrap(), z3());
        let m = MPoly::monomial(1, &[(Var::X, 4)]);
        assert!(star_reflect(&m, 3).is_none());
    }

    #[test]
    fn permutation_closed_form() {
        let xz = MPoly::monomial(1, &[(Var::X, 1), (Var::Z1, 1), (Var::Z2, 1)]);
        assert_eq!(perm_genfun(2).unwrap(), &MPoly::one() + &xz);
        let y0 = z3().substitute(&[(Var::Y, MPoly::zero())]);
        assert_eq!(perm_genfun(3).unwrap(), y0);
    }

    #[test]
    fn adjacent_boundary_order_two() {
        let xz = MPoly::monomial(1, &[(Var::X, 1), (Var::Z1, 1), (Var::Z2, 1)]);
        assert_eq!(boundary_genfun(2, 1, 3, 6).unwrap(), &MPoly::one() + &xz);
        assert_eq!(boundary_genfun(2, 2, 4, 6).unwrap(), &MPoly::one() + &xz);
    }

    #[test]
    fn json_header() {
        let g = genfun_bruteforce(ObjectKind::Asm, 2, 6).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with(r#"{"kind":"ASM","n":2,"vars":["x","y","z1","z2"],"terms":"#), "{s}");
        assert_eq!(serde_json::from_str::<GenFun>(&s).unwrap(), g);
    }
}
