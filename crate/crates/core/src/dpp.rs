//! Descending plane partitions: validation, enumeration, statistics and the
//! two symmetry operations.
//!
//! Parts are addressed 1-based as `D_{ij}`, where row `i` occupies columns
//! `i ..= i + len_i - 1`. The serialized form is a plain list of rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dpp {
    n: u32,
    rows: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DppStats {
    /// Nonspecial parts, `D_{ij} > j - i`.
    pub nu: u32,
    /// Special parts, `D_{ij} <= j - i`.
    pub mu: u32,
    /// Number of `n`s.
    pub rho1: u32,
    /// Number of `(n-1)`s, plus one if the first row has length `n - 1`.
    pub rho2: u32,
    /// Number of `(n-1)`s in the first row.
    pub rho3: u32,
}

impl Dpp {
    pub fn empty(n: u32) -> Dpp {
        Dpp { n, rows: Vec::new() }
    }

    /// Validate rows of parts against the order bound `n`.
    pub fn new(n: u32, rows: Vec<Vec<u32>>) -> Result<Dpp> {
        for (i, row) in rows.iter().enumerate() {
            let i1 = i + 1;
            if row.is_empty() {
                return Err(Error::InvalidDpp(format!("row {i1} is empty")));
            }
            if let Some(&p) = row.iter().find(|&&p| p == 0 || p > n) {
                return Err(Error::InvalidDpp(format!("part {p} in row {i1} is outside 1..={n}")));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidDpp(format!("row {i1} is not weakly decreasing")));
            }
            let len = row.len() as u32;
            if row[0] <= len {
                return Err(Error::InvalidDpp(format!(
                    "row {i1}: first part {} is not greater than the row length {len}",
                    row[0]
                )));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if above.len() < row[0] as usize {
                    return Err(Error::InvalidDpp(format!(
                        "row {i1}: first part {} exceeds the length {} of the row above",
                        row[0],
                        above.len()
                    )));
                }
                // part p of this row sits under part p + 1 of the row above
                for (p, &v) in row.iter().enumerate() {
                    if above.get(p + 1).is_some_and(|&a| v >= a) {
                        return Err(Error::InvalidDpp(format!(
                            "column {}: {v} is not less than the part {} above it",
                            i1 + p,
                            above[p + 1]
                        )));
                    }
                }
            }
        }
        Ok(Dpp { n, rows })
    }

    /// Parse `"6 6 6 5 2 / 4 4 1 / 3"`; an empty string or `"empty"` is the
    /// empty array.
    pub fn parse(n: u32, s: &str) -> Result<Dpp> {
        let s = s.trim();
        if s.is_empty() || s == "empty" {
            return Ok(Dpp::empty(n));
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|p| p.parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{p}`"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Dpp::new(n, rows)
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of rows `t`.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row length `lambda_i` (1-based); 0 past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.rows.get(i.wrapping_sub(1)).map_or(0, Vec::len)
    }

    /// `D_{ij}` with 1-based indices, if that part exists.
    pub fn part(&self, i: usize, j: usize) -> Option<u32> {
        if i == 0 || j < i {
            return None;
        }
        self.rows.get(i - 1)?.get(j - i).copied()
    }

    pub fn num_parts(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn stats(&self) -> DppStats {
        let n = self.n;
        let mut s = DppStats::default();
        for (i, row) in self.rows.iter().enumerate() {
            for (offset, &p) in row.iter().enumerate() {
                // offset = j - i
                if p as usize > offset {
                    s.nu += 1;
                } else {
                    s.mu += 1;
                }
                if p == n {
                    debug_assert_eq!(i, 0, "n appears outside the first row");
                    s.rho1 += 1;
                }
                if n >= 2 && p == n - 1 {
                    debug_assert!(i <= 1, "n-1 appears below the second row");
                    s.rho2 += 1;
                    if i == 0 {
                        s.rho3 += 1;
                    }
                }
            }
        }
        if n >= 2 && self.row_len(1) == (n - 1) as usize {
            s.rho2 += 1;
        }
        s
    }

    /// The reflection operation, from the three-case description: for
    /// `1 <= i <= j <= n-1`, with `r = n - j`, `c = n - i`,
    ///
    /// * `D_{rc}` special: `D*_{ij} = j - i + 1 - D_{rc}`;
    /// * `D_{rc}` absent: `D*_{ij} = n + 1 - i - #{k : n + 2 - i - D_{k,n-j} <= k <= n - j}`,
    ///   counting only rows `k` where `D_{k,n-j}` exists;
    /// * `D_{rc}` nonspecial: `D*_{ij}` absent.
    pub fn star(&self) -> Dpp {
        let n = self.n as usize;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for i in 1..n {
            let mut row = Vec::new();
            for j in i..n {
                let (r, c) = (n - j, n - i);
                let value = match self.part(r, c) {
                    Some(p) if p as usize <= j - i => Some((j - i + 1 - p as usize) as u32),
                    Some(_) => None,
                    None => {
                        let hits = (1..=n - j)
                            .filter(|&k| {
                                self.part(k, n - j).is_some_and(|d| n as i64 + 2 - i as i64 - d as i64 <= k as i64)
                            })
                            .count();
                        Some((n + 1 - i - hits) as u32)
                    }
                };
                match value {
                    Some(v) => row.push(v),
                    None => break,
                }
            }
            if row.is_empty() {
                break;
            }
            rows.push(row);
        }
        Dpp::new(self.n, rows).expect("reflection of a valid DPP is a valid DPP")
    }

    /// The rotation-like operation: the leading `n`s and `(n-1)`s of the
    /// first row become `rho2` copies of `n` followed by
    /// `rho1 + rho3 - rho2` copies of `n - 1`.
    pub fn dagger(&self) -> Dpp {
        if self.rows.is_empty() || self.n < 2 {
            return self.clone();
        }
        let n = self.n;
        let s = self.stats();
        let tail_len = (s.rho1 + s.rho3) as usize;
        let fill = (s.rho1 + s.rho3) as i64 - s.rho2 as i64;
        assert!(fill >= 0, "dagger: negative fill for {self}");
        let mut first: Vec<u32> = Vec::with_capacity(self.rows[0].len());
        first.extend(std::iter::repeat_n(n, s.rho2 as usize));
        first.extend(std::iter::repeat_n(n - 1, fill as usize));
        first.extend_from_slice(&self.rows[0][tail_len..]);
        let mut rows = self.rows.clone();
        if first.is_empty() {
            rows.clear();
        } else {
            rows[0] = first;
        }
        Dpp::new(n, rows).expect("dagger of a valid DPP is a valid DPP")
    }

    pub fn to_json(&self) -> DppJson {
        DppJson { n: self.n, rows: self.rows.clone() }
    }
}

impl fmt::Display for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("empty");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

impl fmt::Debug for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dpp(n={}, {})", self.n, self)
    }
}

/// Wire form `{"n": 6, "rows": [[6,6,6,5,2],[4,4,1],[3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DppJson {
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
}

impl Serialize for Dpp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Dpp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DppJson::deserialize(d)?;
        Dpp::new(j.n, j.rows).map_err(serde::de::Error::custom)
    }
}

/// Rows that may follow `rows` (or start the array when it is empty),
/// sorted lexicographically.
fn next_rows(n: u32, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let above = rows.last();
    let bound = above.map_or(n, |a| a.len() as u32);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn extend(first: u32, above: Option<&Vec<u32>>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() as u32 + 1 >= first {
            return;
        }
        let p = cur.len();
        let mut top = cur[p - 1];
        if let Some(a) = above {
            top = top.min(a[p + 1] - 1);
        }
        for v in 1..=top {
            cur.push(v);
            extend(first, above, cur, out);
            cur.pop();
        }
    }
    for first in 2..=bound {
        if let Some(a) = above {
            if first >= a[1] {
                continue;
            }
        }
        cur.push(first);
        extend(first, above, &mut cur, &mut out);
        cur.pop();
    }
    out.sort();
    out
}

/// Depth-first stream of `DPP(n)` in pre-order: an array is emitted before
/// its extensions by further rows.
pub struct DppIter {
    n: u32,
    rows: Vec<Vec<u32>>,
    stack: Vec<(Vec<Vec<u32>>, usize)>,
    started: bool,
}

impl Iterator for DppIter {
    type Item = Dpp;

    fn next(&mut self) -> Option<Dpp> {
        if !self.started {
            self.started = true;
            self.stack.push((next_rows(self.n, &[]), 0));
            return Some(Dpp::empty(self.n));
        }
        loop {
            let depth = self.stack.len();
            let (cands, idx) = self.stack.last_mut()?;
            if *idx >= cands.len() {
                self.stack.pop();
                continue;
            }
            let row = cands[*idx].clone();
            *idx += 1;
            self.rows.truncate(depth - 1);
            self.rows.push(row);
            let follow = next_rows(self.n, &self.rows);
            self.stack.push((follow, 0));
            return Some(Dpp { n: self.n, rows: self.rows.clone() });
        }
    }
}

/// Every DPP with parts at most `n`, each exactly once.
pub fn enumerate_dpps(n: u32) -> DppIter {
    assert!(n >= 1, "enumerate_dpps: n must be positive");
    DppIter { n, rows: Vec::new(), stack: Vec::new(), started: false }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u32, s: &str) -> Dpp {
        Dpp::parse(n, s).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Dpp::new(4, vec![]).is_ok());
        assert!(Dpp::parse(6, "6 6 6 5 2 / 4 4 1 / 3").is_ok());
        assert!(Dpp::parse(3, "2 2").is_err());
        assert!(Dpp::parse(3, "4").is_err());
        assert!(Dpp::parse(5, "3 4").is_err());
        assert!(Dpp::parse(5, "5 3 / 2").is_ok());
    }

    #[test]
    fn rejects_each_condition() {
        // weak row decrease
        assert!(Dpp::new(5, vec![vec![4, 2, 3]]).is_err());
        // strict column decrease: D22 = 3 under D12 = 3
        assert!(Dpp::new(5, vec![vec![5, 3, 3], vec![3]]).is_err());
        // lambda_1 >= D22 fails
        assert!(Dpp::new(5, vec![vec![5, 5], vec![3]]).is_err());
        // part > n
        assert!(Dpp::new(3, vec![vec![4]]).is_err());
        assert!(Dpp::new(3, vec![vec![0]]).is_err());
    }

    #[test]
    fn example_statistics() {
        let s = d(6, "6 6 6 5 2 / 4 4 1 / 3").stats();
        assert_eq!((s.nu, s.mu, s.rho1, s.rho2), (7, 2, 3, 2));
        assert_eq!(Dpp::empty(3).stats(), DppStats::default());
        let s = d(3, "3 1").stats();
        assert_eq!((s.nu, s.mu, s.rho1, s.rho2, s.rho3), (1, 1, 1, 1, 0));
    }

    #[test]
    fn order_one_and_three() {
        let one: Vec<Dpp> = enumerate_dpps(1).collect();
        assert_eq!(one, vec![Dpp::empty(1)]);
        let mut three: Vec<Dpp> = enumerate_dpps(3).collect();
        let mut listed: Vec<Dpp> = ["", "3 3 / 2", "2", "3 3", "3", "3 2", "3 1"].iter().map(|s| d(3, s)).collect();
        three.sort();
        listed.sort();
        assert_eq!(three, listed);
    }

    #[test]
    fn counts_match_the_product_formula() {
        for (n, c) in [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429), (6, 7436)] {
            assert_eq!(enumerate_dpps(n).count(), c, "n = {n}");
        }
    }

    #[test]
    fn enumerated_arrays_are_valid_and_distinct() {
        let all: Vec<Dpp> = enumerate_dpps(5).collect();
        let set: std::collections::HashSet<&Dpp> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        for x in &all {
            assert_eq!(&Dpp::new(5, x.rows.clone()).unwrap(), x);
            let s = x.stats();
            assert_eq!((s.nu + s.mu) as usize, x.num_parts());
            assert!(s.nu as usize >= x.num_rows());
        }
    }

    #[test]
    fn star_of_empty() {
        assert_eq!(Dpp::empty(3).star(), d(3, "3 3 / 2"));
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(Dpp::empty(3).dagger(), Dpp::empty(3));
        assert_eq!(d(3, "3 1").dagger(), d(3, "3 1"));
        assert_eq!(d(3, "3 3").dagger(), d(3, "3 2"));
    }

    #[test]
    fn symmetry_laws() {
        for n in 1..=5u32 {
            let half = n * (n - 1) / 2;
            for x in enumerate_dpps(n) {
                let s = x.stats();
                let st = x.star();
                assert_eq!(st.star(), x, "star is not an involution at {x}");
                let t = st.stats();
                assert_eq!(t.nu, half - s.nu - s.mu, "{x}");
                assert_eq!(t.mu, s.mu, "{x}");
                assert_eq!(t.rho1, n - 1 - s.rho1, "{x}");
                assert_eq!(t.rho2, n - 1 - s.rho2, "{x}");
                let dg = x.dagger();
                assert_eq!(dg.dagger(), x);
                let u = dg.stats();
                assert_eq!((u.nu, u.mu, u.rho1, u.rho2), (s.nu, s.mu, s.rho2, s.rho1));
            }
        }
    }

    #[test]
    fn dagger_fixed_points() {
        for n in 1..=6u32 {
            for x in enumerate_dpps(n) {
                let s = x.stats();
                assert_eq!(x.dagger() == x, s.rho1 == s.rho2, "{x}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let x = d(6, "6 6 6 5 2 / 4 4 1 / 3");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":6,"rows":[[6,6,6,5,2],[4,4,1],[3]]}"#);
        assert_eq!(serde_json::from_str::<Dpp>(&s).unwrap(), x);
        assert_eq!(serde_json::to_string(&Dpp::empty(4)).unwrap(), r#"{"n":4,"rows":[]}"#);
        assert!(serde_json::from_str::<Dpp>(r#"{"n":3,"rows":[[2,2]]}"#).is_err());
    }
}
