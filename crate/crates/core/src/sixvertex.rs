//! Six-vertex configurations with domain-wall boundary conditions, their
//! bijection with ASMs, and exact partition-function evaluation.
//!
//! Edge orientations are encoded as bits: `0` for an up or right arrow,
//! `1` for a down or left arrow. Under the bijection a horizontal edge
//! carries a partial row sum and a vertical edge a partial column sum.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, Matrix, Var};
use crate::asm::Asm;
use crate::error::{Error, Result};

/// Edge bits `(north, south, west, east)` of each vertex type, indexed by
/// `type - 1`.
pub const VERTEX_EDGES: [(u8, u8, u8, u8); 6] =
    [(0, 0, 0, 0), (1, 1, 1, 1), (0, 0, 1, 1), (1, 1, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0)];

fn vertex_type(north: u8, south: u8, west: u8, east: u8) -> Option<u8> {
    VERTEX_EDGES.iter().position(|&e| e == (north, south, west, east)).map(|k| k as u8 + 1)
}

/// A grid of vertex types `1..=6`, row-major, satisfying the boundary
/// conditions and agreeing on every shared edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SvConfig {
    n: usize,
    types: Vec<u8>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SvStats {
    pub nu: u32,
    pub mu: u32,
    pub rho1: u32,
    pub rho2: u32,
}

impl SvConfig {
    pub fn new(types: &[Vec<u8>]) -> Result<SvConfig> {
        let n = types.len();
        if n == 0 {
            return Err(Error::InvalidSvConfig("empty grid".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in types.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidSvConfig(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, &t) in row.iter().enumerate() {
                if !(1..=6).contains(&t) {
                    return Err(Error::InvalidSvConfig(format!("vertex ({i}, {j}) has type {t}")));
                }
                flat.push(t);
            }
        }
        let c = SvConfig { n, types: flat };
        c.check_edges()?;
        Ok(c)
    }

    fn edges(&self, i: usize, j: usize) -> (u8, u8, u8, u8) {
        VERTEX_EDGES[self.get(i, j) as usize - 1]
    }

    fn check_edges(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let (no, so, we, ea) = self.edges(i, j);
                let north = if i == 0 { 0 } else { self.edges(i - 1, j).1 };
                let west = if j == 0 { 0 } else { self.edges(i, j - 1).3 };
                if no != north || we != west {
                    return Err(Error::InvalidSvConfig(format!("vertex ({i}, {j}) disagrees with a neighbour")));
                }
                if (i == n - 1 && so != 1) || (j == n - 1 && ea != 1) {
                    return Err(Error::InvalidSvConfig(format!("vertex ({i}, {j}) violates the domain-wall boundary")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.types[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.types.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    /// Orientation bit of the vertical edge below row `k` (`k = 0` is the
    /// top boundary, `k = n` the bottom one) in column `j`.
    pub fn vertical_edge(&self, k: usize, j: usize) -> u8 {
        if k == 0 {
            0
        } else {
            self.edges(k - 1, j).1
        }
    }

    /// Orientation bit of the horizontal edge right of column `k` (`k = 0`
    /// is the left boundary) in row `i`.
    pub fn horizontal_edge(&self, i: usize, k: usize) -> u8 {
        if k == 0 {
            0
        } else {
            self.edges(i, k - 1).3
        }
    }

    /// Totals `N_(k)` for `k = 1..=6` (index `k - 1`).
    pub fn type_counts(&self) -> [u32; 6] {
        let mut c = [0u32; 6];
        for &t in &self.types {
            c[t as usize - 1] += 1;
        }
        c
    }

    /// Per-row counts `N^i_(k)`.
    pub fn row_type_counts(&self, i: usize) -> [u32; 6] {
        let mut c = [0u32; 6];
        for &t in &self.types[i * self.n..(i + 1) * self.n] {
            c[t as usize - 1] += 1;
        }
        c
    }

    pub fn stats(&self) -> SvStats {
        let total = self.type_counts();
        SvStats {
            nu: total[0],
            mu: total[5],
            rho1: self.row_type_counts(0)[0],
            rho2: self.row_type_counts(self.n - 1)[1],
        }
    }

    pub fn from_asm(a: &Asm) -> SvConfig {
        let n = a.n();
        let mut col = vec![0u8; n];
        let mut types = Vec::with_capacity(n * n);
        for i in 0..n {
            let mut run = 0u8;
            for (j, c) in col.iter_mut().enumerate() {
                let v = a.get(i, j);
                let east = (run as i8 + v) as u8;
                let south = (*c as i8 + v) as u8;
                types.push(vertex_type(*c, south, run, east).expect("ASM partial sums are 0 or 1"));
                run = east;
                *c = south;
            }
        }
        SvConfig { n, types }
    }

    pub fn to_asm(&self) -> Asm {
        let rows: Vec<Vec<i64>> = self
            .to_rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|t| match t {
                        5 => 1,
                        6 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Asm::new(&rows).expect("consistent configuration maps to an ASM")
    }

    pub fn to_json(&self) -> SvJson {
        SvJson { n: self.n, types: self.to_rows() }
    }
}

impl fmt::Debug for SvConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SvConfig{:?}", self.to_rows())
    }
}

/// Wire form `{"n": 3, "types": [[...], ...]}` with entries `1..=6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SvJson {
    pub n: usize,
    pub types: Vec<Vec<u8>>,
}

impl Serialize for SvConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SvConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SvJson::deserialize(d)?;
        if j.types.len() != j.n {
            return Err(serde::de::Error::custom(format!("n = {} but {} rows", j.n, j.types.len())));
        }
        SvConfig::new(&j.types).map_err(serde::de::Error::custom)
    }
}

pub fn asm_to_sv(a: &Asm) -> SvConfig {
    SvConfig::from_asm(a)
}

pub fn sv_to_asm(c: &SvConfig) -> Asm {
    c.to_asm()
}

/// All configurations by a direct search over vertex types, independent
/// of the ASM bijection. At each vertex the north and west bits are fixed;
/// only when they agree is there a choice (types 1/5 or 2/6).
pub fn enumerate_sv(n: usize) -> Vec<SvConfig> {
    fn go(n: usize, pos: usize, south: &mut Vec<u8>, east: u8, types: &mut Vec<u8>, out: &mut Vec<SvConfig>) {
        if pos == n * n {
            out.push(SvConfig { n, types: types.clone() });
            return;
        }
        let (i, j) = (pos / n, pos % n);
        let north = south[j];
        let west = if j == 0 { 0 } else { east };
        for (k, &(no, so, we, ea)) in VERTEX_EDGES.iter().enumerate() {
            if no != north || we != west {
                continue;
            }
            if (j == n - 1 && ea != 1) || (i == n - 1 && so != 1) {
                continue;
            }
            let saved = south[j];
            south[j] = so;
            types.push(k as u8 + 1);
            go(n, pos + 1, south, ea, types, out);
            types.pop();
            south[j] = saved;
        }
    }
    assert!(n >= 1, "enumerate_sv: n must be positive");
    let mut out = Vec::new();
    go(n, 0, &mut vec![0; n], 0, &mut Vec::with_capacity(n * n), &mut out);
    out
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `a(u, v) = u q - v / q`.
pub fn weight_a(u: &BigRational, v: &BigRational, qq: &BigRational) -> BigRational {
    u * qq - v / qq
}

/// `b(u, v) = u / q - v q`.
pub fn weight_b(u: &BigRational, v: &BigRational, qq: &BigRational) -> BigRational {
    u / qq - v * qq
}

/// `c(u, v) = (q^2 - q^-2) sqrt(u) sqrt(v)`, taking the square roots as given.
pub fn weight_c(u_sqrt: &BigRational, v_sqrt: &BigRational, qq: &BigRational) -> BigRational {
    let q2 = qq * qq;
    (&q2 - q2.recip()) * u_sqrt * v_sqrt
}

/// Spectral parameters stored through their square roots, `u_i = us_i^2`
/// and `v_j = vs_j^2`, so every weight is rational.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralPoint {
    pub q: BigRational,
    pub u_sqrt: Vec<BigRational>,
    pub v_sqrt: Vec<BigRational>,
}

impl SpectralPoint {
    pub fn new(q: BigRational, u_sqrt: Vec<BigRational>, v_sqrt: Vec<BigRational>) -> Result<Self> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::Degenerate(format!("q = {q}")));
        }
        if u_sqrt.len() != v_sqrt.len() {
            return Err(Error::Shape(format!("{} row and {} column parameters", u_sqrt.len(), v_sqrt.len())));
        }
        if u_sqrt.iter().chain(&v_sqrt).any(Zero::is_zero) {
            return Err(Error::Degenerate("zero spectral parameter".into()));
        }
        Ok(SpectralPoint { q, u_sqrt, v_sqrt })
    }

    pub fn n(&self) -> usize {
        self.u_sqrt.len()
    }

    pub fn u(&self, i: usize) -> BigRational {
        &self.u_sqrt[i] * &self.u_sqrt[i]
    }

    pub fn v(&self, j: usize) -> BigRational {
        &self.v_sqrt[j] * &self.v_sqrt[j]
    }

    pub fn a(&self, i: usize, j: usize) -> BigRational {
        weight_a(&self.u(i), &self.v(j), &self.q)
    }

    pub fn b(&self, i: usize, j: usize) -> BigRational {
        weight_b(&self.u(i), &self.v(j), &self.q)
    }

    pub fn c(&self, i: usize, j: usize) -> BigRational {
        weight_c(&self.u_sqrt[i], &self.v_sqrt[j], &self.q)
    }

    /// Weight of vertex type `t` at `(i, j)`.
    pub fn weight(&self, t: u8, i: usize, j: usize) -> BigRational {
        match t {
            1 | 2 => self.a(i, j),
            3 | 4 => self.b(i, j),
            _ => self.c(i, j),
        }
    }

    /// Whether this point satisfies the preconditions of the determinant
    /// formula: distinct `u`s, distinct `v`s, nonvanishing `a` and `b`.
    pub fn is_generic(&self) -> bool {
        let n = self.n();
        let distinct = |vals: Vec<BigRational>| (0..n).all(|i| (i + 1..n).all(|j| vals[i] != vals[j]));
        distinct((0..n).map(|i| self.u(i)).collect())
            && distinct((0..n).map(|j| self.v(j)).collect())
            && (0..n).all(|i| (0..n).all(|j| !self.a(i, j).is_zero() && !self.b(i, j).is_zero()))
    }
}

/// A nonzero rational `±p/q` with `p, q` in `1..=50`.
pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(1..=50);
    let den: i64 = rng.gen_range(1..=50);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    BigRational::new(BigInt::from(sign * num), BigInt::from(den))
}

/// Rejection-sample a generic spectral point of order `n`.
pub fn random_point<R: Rng>(n: usize, rng: &mut R) -> SpectralPoint {
    loop {
        let qq = random_rational(rng);
        let us = (0..n).map(|_| random_rational(rng)).collect();
        let vs = (0..n).map(|_| random_rational(rng)).collect();
        if let Ok(p) = SpectralPoint::new(qq, us, vs) {
            if p.is_generic() {
                return p;
            }
        }
    }
}

/// Default largest order for brute-force partition functions.
pub const SV_BRUTE_FORCE_CAP: usize = 5;

/// `Z^SV_n` as the sum over all configurations of the product of vertex
/// weights.
pub fn sv_partition_function(pt: &SpectralPoint, cap: usize) -> Result<BigRational> {
    let n = pt.n();
    if n > cap {
        return Err(Error::CapExceeded { what: "six-vertex partition function", n, cap });
    }
    if n == 0 {
        return Ok(BigRational::one());
    }
    let mut w: HashMap<(u8, usize, usize), BigRational> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            for t in 1..=6u8 {
                w.insert((t, i, j), pt.weight(t, i, j));
            }
        }
    }
    let mut total = BigRational::zero();
    for c in enumerate_sv(n) {
        let mut prod = BigRational::one();
        for i in 0..n {
            for j in 0..n {
                prod *= &w[&(c.get(i, j), i, j)];
            }
        }
        total += prod;
    }
    Ok(total)
}

/// Right side of the Izergin–Korepin formula:
/// `prod a b / prod_{i<j} (u_i - u_j)(v_j - v_i) * det(c / (a b))`.
pub fn ik_determinant(pt: &SpectralPoint) -> Result<BigRational> {
    let n = pt.n();
    if !pt.is_generic() {
        return Err(Error::Degenerate("coincident spectral parameters or vanishing a/b weights".into()));
    }
    let mut num = BigRational::one();
    for i in 0..n {
        for j in 0..n {
            num *= pt.a(i, j) * pt.b(i, j);
        }
    }
    let mut den = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            den *= (pt.u(i) - pt.u(j)) * (pt.v(j) - pt.v(i));
        }
    }
    let m = Matrix::from_fn(n, n, |i, j| pt.c(i, j) / (pt.a(i, j) * pt.b(i, j)));
    Ok(num / den * m.det()?)
}

/// Square roots of the parameters `r, s, t, w` and the global `q` for the
/// specialization `u = (s, r, ..., r, t)`, `v = (w, ..., w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryParams {
    pub q: BigRational,
    pub r: BigRational,
    pub s: BigRational,
    pub t: BigRational,
    pub w: BigRational,
}

impl BoundaryParams {
    pub fn from_ints(qq: i64, r: i64, s: i64, t: i64, w: i64) -> Self {
        BoundaryParams { q: q(qq), r: q(r), s: q(s), t: q(t), w: q(w) }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        loop {
            let p = BoundaryParams {
                q: random_rational(rng),
                r: random_rational(rng),
                s: random_rational(rng),
                t: random_rational(rng),
                w: random_rational(rng),
            };
            if p.check().is_ok() {
                return p;
            }
        }
    }

    fn sq(v: &BigRational) -> BigRational {
        v * v
    }

    fn a(&self, us: &BigRational) -> BigRational {
        weight_a(&Self::sq(us), &Self::sq(&self.w), &self.q)
    }

    fn b(&self, us: &BigRational) -> BigRational {
        weight_b(&Self::sq(us), &Self::sq(&self.w), &self.q)
    }

    fn c(&self, us: &BigRational) -> BigRational {
        weight_c(us, &self.w, &self.q)
    }

    fn check(&self) -> Result<()> {
        if self.q.is_zero() || self.q.abs().is_one() {
            return Err(Error::Degenerate(format!("q = {}", self.q)));
        }
        if [&self.r, &self.s, &self.t, &self.w].into_iter().any(Zero::is_zero) {
            return Err(Error::Degenerate("zero parameter".into()));
        }
        if self.a(&self.r).is_zero() || [&self.r, &self.s, &self.t].into_iter().any(|p| self.b(p).is_zero()) {
            return Err(Error::Degenerate("a(r,w), b(r,w), b(s,w) or b(t,w) vanishes".into()));
        }
        Ok(())
    }

    /// The point `u = (s, r, ..., r, t)`, `v = (w, ..., w)` of order `n`.
    pub fn spectral_point(&self, n: usize) -> Result<SpectralPoint> {
        let mut us = vec![self.r.clone(); n];
        us[0] = self.s.clone();
        us[n - 1] = self.t.clone();
        SpectralPoint::new(self.q.clone(), us, vec![self.w.clone(); n])
    }

    /// `(x, y, z1, z2)` at which the generating function is evaluated.
    pub fn xyz(&self) -> HashMap<Var, BigRational> {
        let (ar, br, cr) = (self.a(&self.r), self.b(&self.r), self.c(&self.r));
        let x = Self::sq(&(&ar / &br));
        let y = Self::sq(&(&cr / &br));
        let z1 = self.a(&self.s) * &br / (&ar * self.b(&self.s));
        let z2 = self.a(&self.t) * &br / (&ar * self.b(&self.t));
        HashMap::from([(Var::X, x), (Var::Y, y), (Var::Z1, z1), (Var::Z2, z2)])
    }

    /// `b_r^{(n-1)(n-2)} (b_s b_t)^{n-1} c_r^{n-2} c_s c_t`.
    pub fn prefactor(&self, n: usize) -> BigRational {
        let pw = |v: BigRational, e: usize| crate::algebra::pow(&v, e as u32);
        pw(self.b(&self.r), (n - 1) * (n - 2))
            * pw(self.b(&self.s) * self.b(&self.t), n - 1)
            * pw(self.c(&self.r), n - 2)
            * self.c(&self.s)
            * self.c(&self.t)
    }
}

/// Both sides of the boundary specialization relating `Z^SV_n` to the ASM
/// generating function `zasm`: `(brute-force sum, prefactor * Z(x, y, z1, z2))`.
pub fn zczasm_sides(n: usize, p: &BoundaryParams, zasm: &MPoly, cap: usize) -> Result<(BigRational, BigRational)> {
    if n < 2 {
        return Err(Error::InvalidArgument("the specialization needs n >= 2".into()));
    }
    p.check()?;
    let lhs = sv_partition_function(&p.spectral_point(n)?, cap)?;
    let rhs = p.prefactor(n) * zasm.eval(&p.xyz())?;
    Ok((lhs, rhs))
}

pub fn verify_zczasm(n: usize, p: &BoundaryParams, zasm: &MPoly, cap: usize) -> Result<bool> {
    let (l, r) = zczasm_sides(n, p, zasm, cap)?;
    Ok(l == r)
}

/// Checks `u_i - u_j = a_r b_i b_j / (b_r (q^-2 - q^2) w) * (z_i - z_j)` for
/// two row parameters given by their square roots.
pub fn check_uz(p: &BoundaryParams, ui_sqrt: &BigRational, uj_sqrt: &BigRational) -> Result<bool> {
    p.check()?;
    let (ar, br) = (p.a(&p.r), p.b(&p.r));
    let (bi, bj) = (p.b(ui_sqrt), p.b(uj_sqrt));
    if bi.is_zero() || bj.is_zero() {
        return Err(Error::Degenerate("b(u, w) vanishes".into()));
    }
    let zi = p.a(ui_sqrt) * &br / (&ar * &bi);
    let zj = p.a(uj_sqrt) * &br / (&ar * &bj);
    let q2 = &p.q * &p.q;
    let w = BoundaryParams::sq(&p.w);
    let lhs = BoundaryParams::sq(ui_sqrt) - BoundaryParams::sq(uj_sqrt);
    let rhs = ar * bi * bj / (br * (q2.recip() - q2) * w) * (zi - zj);
    Ok(lhs == rhs)
}

/// Left side of the three-term bilinear relation among partition
/// functions with two of `n + 2` row parameters omitted; it vanishes
/// identically.
pub fn zbazin_residual(
    qq: &BigRational,
    u_sqrt: &[BigRational],
    v_sqrt: &[BigRational],
    k: [usize; 4],
    cap: usize,
) -> Result<BigRational> {
    let n = v_sqrt.len();
    if u_sqrt.len() != n + 2 || !k.windows(2).all(|w| w[0] < w[1]) || k[3] >= n + 2 {
        return Err(Error::InvalidArgument("need n + 2 row parameters and k1 < k2 < k3 < k4".into()));
    }
    let u = |i: usize| &u_sqrt[i] * &u_sqrt[i];
    let z = |a: usize, b: usize| -> Result<BigRational> {
        let us: Vec<BigRational> = (0..n + 2).filter(|&i| i != a && i != b).map(|i| u_sqrt[i].clone()).collect();
        sv_partition_function(&SpectralPoint::new(qq.clone(), us, v_sqrt.to_vec())?, cap)
    };
    let [k1, k2, k3, k4] = k;
    Ok((u(k1) - u(k2)) * (u(k3) - u(k4)) * z(k1, k2)? * z(k3, k4)?
        - (u(k1) - u(k3)) * (u(k2) - u(k4)) * z(k1, k3)? * z(k2, k4)?
        + (u(k1) - u(k4)) * (u(k2) - u(k3)) * z(k1, k4)? * z(k2, k3)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::enumerate_asms;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn order_one() {
        let c = asm_to_sv(&Asm::identity(1));
        assert_eq!(c.to_rows(), vec![vec![5]]);
        assert_eq!(c.stats(), SvStats::default());
        assert_eq!(enumerate_sv(1), vec![c]);
    }

    #[test]
    fn diagonal_type_five_is_identity() {
        let c = SvConfig::new(&[vec![5, 3], vec![4, 5]]).unwrap();
        assert_eq!(c.to_asm(), Asm::identity(2));
        assert!(SvConfig::new(&[vec![5, 1], vec![1, 5]]).is_err());
        assert!(SvConfig::new(&[vec![7]]).is_err());
        assert!(SvConfig::new(&[vec![1]]).is_err());
    }

    #[test]
    fn bijection_and_vertex_relations() {
        for n in 1..=5 {
            let direct = enumerate_sv(n);
            let asms: Vec<Asm> = enumerate_asms(n).collect();
            assert_eq!(direct.len(), asms.len());
            let mut images: Vec<Vec<Vec<u8>>> = asms.iter().map(|a| asm_to_sv(a).to_rows()).collect();
            let mut found: Vec<Vec<Vec<u8>>> = direct.iter().map(SvConfig::to_rows).collect();
            images.sort();
            found.sort();
            assert_eq!(images, found);
            for a in &asms {
                let c = asm_to_sv(a);
                assert!(c.check_edges().is_ok());
                assert_eq!(&c.to_asm(), a);
                let s = a.stats();
                assert_eq!(c.stats(), SvStats { nu: s.nu, mu: s.mu, rho1: s.rho1, rho2: s.rho2 });
                let t = c.type_counts();
                let nn = n as u32;
                assert_eq!(t[0], t[1]);
                assert_eq!(t[2], t[3]);
                assert_eq!(t[4], t[5] + nn);
                assert_eq!(t.iter().sum::<u32>(), nn * nn);
                let first = c.row_type_counts(0);
                let last = c.row_type_counts(n - 1);
                assert_eq!((first[1], first[3], first[5]), (0, 0, 0));
                assert_eq!((last[0], last[2], last[5]), (0, 0, 0));
                assert_eq!((first[4], last[4]), (1, 1));
                for i in 0..n {
                    assert_eq!(c.row_type_counts(i).iter().sum::<u32>(), nn);
                }
            }
        }
    }

    #[test]
    fn partition_function_of_order_one() {
        let p = SpectralPoint::new(q(2), vec![q(3)], vec![q(5)]).unwrap();
        let z = sv_partition_function(&p, 5).unwrap();
        assert_eq!(z, (q(4) - q(4).recip()) * q(15));
        assert_eq!(ik_determinant(&p).unwrap(), z);
    }

    #[test]
    fn izergin_korepin_small_example() {
        let p = SpectralPoint::new(q(2), vec![q(1), q(2)], vec![q(3), q(5)]).unwrap();
        assert_eq!(ik_determinant(&p).unwrap(), sv_partition_function(&p, 5).unwrap());
    }

    #[test]
    fn izergin_korepin_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=3 {
            for _ in 0..5 {
                let p = random_point(n, &mut rng);
                assert_eq!(ik_determinant(&p).unwrap(), sv_partition_function(&p, 5).unwrap());
            }
        }
    }

    #[test]
    fn symmetric_in_row_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = random_point(3, &mut rng);
        let mut swapped = p.clone();
        swapped.u_sqrt.swap(0, 1);
        assert_eq!(sv_partition_function(&p, 5).unwrap(), sv_partition_function(&swapped, 5).unwrap());
    }

    #[test]
    fn coincident_parameters_rejected() {
        let p = SpectralPoint::new(q(2), vec![q(1), q(-1)], vec![q(3), q(5)]).unwrap();
        assert!(ik_determinant(&p).is_err());
        assert!(SpectralPoint::new(q(1), vec![q(1)], vec![q(1)]).is_err());
        let p = SpectralPoint::new(q(2), vec![q(1); 6], vec![q(3); 6]).unwrap();
        assert!(matches!(sv_partition_function(&p, 5), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn specialization_order_two() {
        // Z_2 = 1 + x z1 z2
        let z2 = MPoly::one() + MPoly::monomial(1, &[(Var::X, 1), (Var::Z1, 1), (Var::Z2, 1)]);
        let p = BoundaryParams::from_ints(2, 1, 3, 5, 7);
        assert!(verify_zczasm(2, &p, &z2, 5).unwrap());
    }

    #[test]
    fn uz_relation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let p = BoundaryParams::random(&mut rng);
            let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
            if let Ok(ok) = check_uz(&p, &a, &b) {
                assert!(ok);
            }
        }
    }

    #[test]
    fn bilinear_relation_order_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let qq = q(3);
        let us: Vec<BigRational> = (0..5).map(|_| random_rational(&mut rng)).collect();
        let vs: Vec<BigRational> = (0..3).map(|_| random_rational(&mut rng)).collect();
        assert!(zbazin_residual(&qq, &us, &vs, [0, 1, 2, 3], 5).unwrap().is_zero());
        assert!(zbazin_residual(&qq, &us, &vs, [0, 2, 3, 4], 5).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let c = asm_to_sv(&Asm::identity(3));
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":3,"types":[[5,3,3],[4,5,3],[4,4,5]]}"#);
        assert_eq!(serde_json::from_str::<SvConfig>(&s).unwrap(), c);
        assert!(serde_json::from_str::<SvConfig>(r#"{"n":1,"types":[[1]]}"#).is_err());
    }
}
