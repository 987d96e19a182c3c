//! Nonintersecting lattice paths on the `n x n` grid with rightward and
//! downward edges, their bijection with DPPs, and weighted path sums.
//!
//! Grid points are `(column, row)` with row 0 at the bottom.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{binom, MPoly, Matrix, Monomial, Var};
use crate::dpp::{enumerate_dpps, Dpp};
use crate::error::{Error, Result};

pub type Point = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Down,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::Right => 'R',
            Step::Down => 'D',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: Point,
    steps: Vec<Step>,
}

impl LatticePath {
    /// A path that stays inside the `n x n` grid.
    pub fn new(n: usize, start: Point, steps: Vec<Step>) -> Result<LatticePath> {
        let p = LatticePath { start, steps };
        if start.0 >= n || start.1 >= n {
            return Err(Error::InvalidPathFamily(format!("start {start:?} outside the grid")));
        }
        let (mut c, mut r) = start;
        for s in &p.steps {
            match s {
                Step::Right if c + 1 < n => c += 1,
                Step::Down if r > 0 => r -= 1,
                _ => return Err(Error::InvalidPathFamily(format!("path from {start:?} leaves the grid"))),
            }
        }
        Ok(p)
    }

    /// Parse a step word such as `"RRDD"`.
    pub fn parse(n: usize, start: Point, word: &str) -> Result<LatticePath> {
        let steps = word
            .chars()
            .map(|ch| match ch {
                'R' => Ok(Step::Right),
                'D' => Ok(Step::Down),
                other => Err(Error::Parse(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::new(n, start, steps)
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Every vertex visited, starting point included.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut c, mut r) = self.start;
        out.push((c, r));
        for s in &self.steps {
            match s {
                Step::Right => c += 1,
                Step::Down => r -= 1,
            }
            out.push((c, r));
        }
        out
    }

    pub fn end(&self) -> Point {
        *self.points().last().expect("a path has at least one point")
    }

    /// Left endpoints of the rightward steps, in order.
    pub fn right_steps(&self) -> Vec<Point> {
        let pts = self.points();
        self.steps.iter().zip(&pts).filter(|(s, _)| **s == Step::Right).map(|(_, &p)| p).collect()
    }

    pub fn weight(&self, n: usize) -> MPoly {
        let mut m = Monomial::ONE;
        for (c, r) in self.right_steps() {
            m = m.mul(&edge_monomial(n, c, r));
        }
        MPoly::term(1, m)
    }
}

/// Weight of the rightward edge from `(c, r)`: `x z1` in the top row,
/// `x z2` in the row below it, otherwise `x` on or above the diagonal
/// `c <= r` and `y` below it.
pub fn edge_monomial(n: usize, c: usize, r: usize) -> Monomial {
    if r + 1 == n {
        Monomial::from_pairs(&[(Var::X, 1), (Var::Z1, 1)])
    } else if r + 2 == n {
        Monomial::from_pairs(&[(Var::X, 1), (Var::Z2, 1)])
    } else if c <= r {
        Monomial::from_pairs(&[(Var::X, 1)])
    } else {
        Monomial::from_pairs(&[(Var::Y, 1)])
    }
}

pub fn edge_weight(n: usize, c: usize, r: usize) -> MPoly {
    MPoly::term(1, edge_monomial(n, c, r))
}

/// A family of nonintersecting paths of the shape that encodes a DPP:
/// path `i` runs from `(0, lambda_{i-1} - 1)` to `(lambda_i, 0)` with
/// `n = lambda_0 > lambda_1 > ... > lambda_{t+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathFamily {
    n: usize,
    paths: Vec<LatticePath>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathStats {
    pub nu: u32,
    pub mu: u32,
    pub rho1: u32,
    pub rho2: u32,
}

/// Whether no two paths share a vertex.
pub fn nonintersecting(paths: &[LatticePath]) -> bool {
    let mut seen = HashSet::new();
    paths.iter().all(|p| p.points().into_iter().all(|pt| seen.insert(pt)))
}

impl PathFamily {
    pub fn new(n: usize, paths: Vec<LatticePath>) -> Result<PathFamily> {
        if n == 0 || paths.is_empty() || paths.len() > n {
            return Err(Error::InvalidPathFamily(format!("{} paths for n = {n}", paths.len())));
        }
        let mut lambda_prev = n;
        for (i, p) in paths.iter().enumerate() {
            let (sc, sr) = p.start;
            if sc != 0 || sr + 1 != lambda_prev {
                return Err(Error::InvalidPathFamily(format!(
                    "path {} starts at {:?}, expected (0, {})",
                    i + 1,
                    p.start,
                    lambda_prev - 1
                )));
            }
            let (ec, er) = p.end();
            if er != 0 || ec >= lambda_prev {
                return Err(Error::InvalidPathFamily(format!("path {} ends at {:?}", i + 1, (ec, er))));
            }
            let last = i + 1 == paths.len();
            if last != (ec == 0) {
                return Err(Error::InvalidPathFamily(format!(
                    "exactly the last path must end at (0, 0); path {} ends at column {ec}",
                    i + 1
                )));
            }
            lambda_prev = ec;
        }
        if !nonintersecting(&paths) {
            return Err(Error::InvalidPathFamily("paths intersect".into()));
        }
        Ok(PathFamily { n, paths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn stats(&self) -> PathStats {
        let n = self.n;
        let mut s = PathStats::default();
        for p in &self.paths {
            for (c, r) in p.right_steps() {
                if c <= r {
                    s.nu += 1;
                } else {
                    s.mu += 1;
                }
                if r + 1 == n {
                    s.rho1 += 1;
                }
                if r + 2 == n {
                    s.rho2 += 1;
                }
            }
            if n >= 2 && p.start == (0, n - 2) {
                s.rho2 += 1;
            }
        }
        s
    }

    /// Product of path weights times the extra `z2` for a path starting
    /// at `(0, n - 2)`; equals `x^nu y^mu z1^rho1 z2^rho2`.
    pub fn weight(&self) -> MPoly {
        let s = self.stats();
        MPoly::monomial(
            1,
            &[(Var::X, s.nu as u16), (Var::Y, s.mu as u16), (Var::Z1, s.rho1 as u16), (Var::Z2, s.rho2 as u16)],
        )
    }

    pub fn from_dpp(d: &Dpp) -> PathFamily {
        let n = d.order() as usize;
        let t = d.num_rows();
        let mut paths = Vec::with_capacity(t + 1);
        let mut top = n - 1;
        for row in d.rows() {
            let mut steps = Vec::new();
            let mut r = top;
            for &part in row {
                let h = part as usize - 1;
                steps.extend(std::iter::repeat_n(Step::Down, r - h));
                steps.push(Step::Right);
                r = h;
            }
            steps.extend(std::iter::repeat_n(Step::Down, r));
            paths.push(LatticePath { start: (0, top), steps });
            top = row.len() - 1;
        }
        paths.push(LatticePath { start: (0, top), steps: vec![Step::Down; top] });
        PathFamily::new(n, paths).expect("a DPP maps to a valid family")
    }

    pub fn to_dpp(&self) -> Dpp {
        let rows: Vec<Vec<u32>> = self
            .paths
            .iter()
            .map(|p| p.right_steps().into_iter().map(|(_, r)| r as u32 + 1).collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        Dpp::new(self.n as u32, rows).expect("a valid family maps to a DPP")
    }

    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            n: self.n,
            paths: self.paths.iter().map(|p| PathJson { start: [p.start.0, p.start.1], steps: p.word() }).collect(),
        }
    }

    pub fn from_json(j: &FamilyJson) -> Result<PathFamily> {
        let paths = j
            .paths
            .iter()
            .map(|p| LatticePath::parse(j.n, (p.start[0], p.start[1]), &p.steps))
            .collect::<Result<Vec<_>>>()?;
        PathFamily::new(j.n, paths)
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.paths.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "({},{}) {}", p.start.0, p.start.1, p.word())?;
        }
        Ok(())
    }
}

/// Wire form `{"n": 3, "paths": [{"start": [0, 2], "steps": "RRDD"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub n: usize,
    pub paths: Vec<PathJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub start: [usize; 2],
    pub steps: String,
}

impl Serialize for PathFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PathFamily::from_json(&FamilyJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub fn dpp_to_nilp(d: &Dpp) -> PathFamily {
    PathFamily::from_dpp(d)
}

pub fn nilp_to_dpp(p: &PathFamily) -> Dpp {
    p.to_dpp()
}

/// `NILP(n)` as the image of `DPP(n)`, each family re-validated.
pub fn enumerate_nilps(n: usize) -> impl Iterator<Item = PathFamily> {
    enumerate_dpps(n as u32).map(move |d| {
        let f = PathFamily::from_dpp(&d);
        PathFamily::new(n, f.paths.clone()).expect("image family is nonintersecting")
    })
}

/// Sum of weights of all paths from `(0, j)` to `(i, 0)`, by dynamic
/// programming over the grid.
pub fn path_weight_sum_bruteforce(n: usize, j: usize, i: usize) -> MPoly {
    assert!(i < n && j < n, "endpoints outside the grid");
    // table[r][c] = weight sum from (c, r) to (i, 0), for c <= i
    let mut table = vec![vec![MPoly::zero(); i + 1]; j + 1];
    for r in 0..=j {
        for c in (0..=i).rev() {
            let v = if r == 0 && c == i {
                MPoly::one()
            } else {
                let mut acc = MPoly::zero();
                if c < i {
                    acc = &acc + &(&edge_weight(n, c, r) * &table[r][c + 1]);
                }
                if r > 0 {
                    acc = &acc + &table[r - 1][c];
                }
                acc
            };
            table[r][c] = v;
        }
    }
    table[j][0].clone()
}

/// Every path from `start` to `end`, listed explicitly.
pub fn all_paths(n: usize, start: Point, end: Point) -> Vec<LatticePath> {
    fn go(c: usize, r: usize, end: Point, cur: &mut Vec<Step>, start: Point, out: &mut Vec<LatticePath>) {
        if (c, r) == end {
            out.push(LatticePath { start, steps: cur.clone() });
            return;
        }
        if c < end.0 {
            cur.push(Step::Right);
            go(c + 1, r, end, cur, start, out);
            cur.pop();
        }
        if r > end.1 {
            cur.push(Step::Down);
            go(c, r - 1, end, cur, start, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if start.0 <= end.0 && start.1 >= end.1 && end.0 < n && start.1 < n {
        go(start.0, start.1, end, &mut Vec::new(), start, &mut out);
    }
    out
}

/// Path sum from `(0, j)` to `(i, 0)` by listing every path.
pub fn path_weight_sum_listed(n: usize, j: usize, i: usize) -> MPoly {
    all_paths(n, (0, j), (i, 0)).iter().fold(MPoly::zero(), |acc, p| &acc + &p.weight(n))
}

fn xy_term(coef: num_bigint::BigInt, k: usize, i: usize, extra: &[(Var, u16)]) -> MPoly {
    let mut pairs = vec![(Var::X, k as u16), (Var::Y, (i - k) as u16)];
    pairs.extend_from_slice(extra);
    MPoly::monomial(coef, &pairs)
}

/// The closed binomial sums for the path weight from `(0, j)` to `(i, 0)`,
/// split by whether `j` is in one of the two top rows.
pub fn path_weight_sum_closed(n: usize, j: usize, i: usize) -> MPoly {
    assert!(n >= 1 && i < n && j < n, "endpoints outside the grid");
    let (n, j, i) = (n as i64, j as i64, i as i64);
    let mut out = MPoly::zero();
    if j <= n - 3 {
        for k in 0..=i.min(j + 1) {
            let c = binom(i - 1, i - k) * binom(j + 1, k);
            out = &out + &xy_term(c, k as usize, i as usize, &[]);
        }
    } else if j == n - 2 {
        for k in 0..=i {
            for l in 0..=k {
                let c = binom(i - 1, i - k) * binom(n - l - 2, k - l);
                out = &out + &xy_term(c, k as usize, i as usize, &[(Var::Z2, l as u16)]);
            }
        }
    } else {
        for k in 0..=i {
            for l in 0..=k {
                let c = binom(i - 1, i - k) * binom(n - l - 2, k - l);
                for m in 0..=l {
                    let extra = [(Var::Z1, m as u16), (Var::Z2, (l - m) as u16)];
                    out = &out + &xy_term(c.clone(), k as usize, i as usize, &extra);
                }
            }
        }
    }
    out
}

/// One endpoint configuration in the decomposition of `NILP(n)`: the
/// strictly decreasing row lengths `lambda_1 > ... > lambda_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoints {
    pub n: usize,
    pub lambdas: Vec<usize>,
}

impl Endpoints {
    pub fn starts(&self) -> Vec<Point> {
        std::iter::once(self.n - 1).chain(self.lambdas.iter().map(|&l| l - 1)).map(|r| (0, r)).collect()
    }

    pub fn ends(&self) -> Vec<Point> {
        self.lambdas.iter().copied().chain(std::iter::once(0)).map(|c| (c, 0)).collect()
    }
}

/// All strictly decreasing sequences `n - 1 >= lambda_1 > ... > lambda_t >= 1`.
pub fn all_endpoints(n: usize) -> Vec<Endpoints> {
    let mut out = Vec::new();
    let m = n.saturating_sub(1);
    for mask in 0u32..(1 << m) {
        let lambdas: Vec<usize> = (1..=m).rev().filter(|&l| mask >> (l - 1) & 1 == 1).collect();
        out.push(Endpoints { n, lambdas });
    }
    out
}

/// Determinant of single-path weight sums for the given endpoints.
pub fn lgv_determinant(e: &Endpoints) -> Result<MPoly> {
    let (s, t) = (e.starts(), e.ends());
    let m = Matrix::from_fn(s.len(), t.len(), |a, b| path_weight_sum_bruteforce(e.n, s[a].1, t[b].0));
    m.det()
}

/// Sum over nonintersecting families with the given endpoints of the
/// product of path weights, by listing every tuple of paths.
pub fn family_sum_bruteforce(e: &Endpoints) -> MPoly {
    let n = e.n;
    let choices: Vec<Vec<LatticePath>> =
        e.starts().into_iter().zip(e.ends()).map(|(s, t)| all_paths(n, s, t)).collect();
    let mut total = MPoly::zero();
    let mut chosen: Vec<LatticePath> = Vec::new();
    fn go(k: usize, choices: &[Vec<LatticePath>], chosen: &mut Vec<LatticePath>, n: usize, total: &mut MPoly) {
        if k == choices.len() {
            if nonintersecting(chosen) {
                let w = chosen.iter().fold(MPoly::one(), |acc, p| &acc * &p.weight(n));
                *total = &*total + &w;
            }
            return;
        }
        for p in &choices[k] {
            chosen.push(p.clone());
            go(k + 1, choices, chosen, n, total);
            chosen.pop();
        }
    }
    go(0, &choices, &mut chosen, n, &mut total);
    total
}

/// Reassemble the DPP generating function as a sum over endpoint
/// configurations of LGV determinants, with the `z2` correction for a path
/// starting in row `n - 2`.
pub fn dpp_genfun_lgv(n: usize) -> Result<MPoly> {
    let mut total = MPoly::zero();
    for e in all_endpoints(n) {
        let mut d = lgv_determinant(&e)?;
        if n >= 2 && e.lambdas.first() == Some(&(n - 1)) {
            d = &d * &MPoly::var(Var::Z2);
        }
        total = &total + &d;
    }
    Ok(total)
}
