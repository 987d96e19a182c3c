//! Alternating sign matrices: validation, enumeration, statistics and the
//! two symmetry operations (vertical reflection and half-turn rotation).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square matrix over `{-1, 0, 1}` with unit line sums and alternating
/// nonzero entries along every row and column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

/// The bulk statistics `nu`, `mu` and the four boundary statistics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AsmStats {
    pub nu: u32,
    pub mu: u32,
    /// Zeros left of the 1 in the first row.
    pub rho1: u32,
    /// Zeros right of the 1 in the last row.
    pub rho2: u32,
    /// Zeros above the 1 in the first column.
    pub rho3: u32,
    /// Zeros below the 1 in the last column.
    pub rho4: u32,
}

impl Asm {
    /// Validate a square integer array.
    pub fn new(rows: &[Vec<i64>]) -> Result<Asm> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidAsm("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAsm(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(Error::InvalidAsm(format!("entry ({i}, {j}) = {v} is not in {{-1, 0, 1}}")));
                }
                entries.push(v as i8);
            }
        }
        let a = Asm { n, entries };
        a.check_lines()?;
        Ok(a)
    }

    fn check_lines(&self) -> Result<()> {
        let n = self.n;
        for (line, what) in [(false, "row"), (true, "column")] {
            for k in 0..n {
                let mut partial = 0i32;
                for l in 0..n {
                    let v = if line { self.get(l, k) } else { self.get(k, l) } as i32;
                    partial += v;
                    if !(0..=1).contains(&partial) {
                        return Err(Error::InvalidAsm(format!(
                            "{what} {k}: nonzero entries do not alternate starting with 1"
                        )));
                    }
                }
                if partial != 1 {
                    return Err(Error::InvalidAsm(format!("{what} {k} sums to {partial}")));
                }
            }
        }
        Ok(())
    }

    pub fn identity(n: usize) -> Asm {
        Asm::from_permutation(&(0..n).collect::<Vec<_>>())
    }

    /// Permutation matrix with a 1 at `(i, perm[i])`.
    pub fn from_permutation(perm: &[usize]) -> Asm {
        let n = perm.len();
        let mut entries = vec![0i8; n * n];
        for (i, &p) in perm.iter().enumerate() {
            entries[i * n + p] = 1;
        }
        let a = Asm { n, entries };
        debug_assert!(a.check_lines().is_ok(), "not a permutation: {perm:?}");
        a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).iter().map(|&v| v as i64).collect()).collect()
    }

    fn one_in_row(&self, i: usize) -> usize {
        self.row(i).iter().position(|&v| v == 1).expect("boundary row has a 1")
    }

    fn one_in_col(&self, j: usize) -> usize {
        (0..self.n).find(|&i| self.get(i, j) == 1).expect("boundary column has a 1")
    }

    pub fn minus_ones(&self) -> u32 {
        self.entries.iter().filter(|&&v| v == -1).count() as u32
    }

    pub fn is_permutation(&self) -> bool {
        self.minus_ones() == 0
    }

    /// Generalized inversion number `sum_{i < i', j' <= j} A_ij A_i'j'`,
    /// via a running sum of the entries strictly below and weakly left.
    pub fn nu(&self) -> u32 {
        let n = self.n;
        // below[j] = sum of A[i'][j'] for i' > current row, j' <= j
        let mut below = vec![0i64; n];
        let mut total = 0i64;
        for i in (0..n).rev() {
            total += below.iter().enumerate().map(|(j, b)| self.get(i, j) as i64 * b).sum::<i64>();
            let mut run = 0i64;
            for (j, b) in below.iter_mut().enumerate() {
                run += self.get(i, j) as i64;
                *b += run;
            }
        }
        u32::try_from(total).expect("nu is nonnegative")
    }

    pub fn stats(&self) -> AsmStats {
        let n = self.n;
        AsmStats {
            nu: self.nu(),
            mu: self.minus_ones(),
            rho1: self.one_in_row(0) as u32,
            rho2: (n - 1 - self.one_in_row(n - 1)) as u32,
            rho3: self.one_in_col(0) as u32,
            rho4: (n - 1 - self.one_in_col(n - 1)) as u32,
        }
    }

    /// Reflection in a vertical line: `A*_{ij} = A_{i, n-1-j}`.
    pub fn star(&self) -> Asm {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            entries.extend(self.row(i).iter().rev());
        }
        Asm { n, entries }
    }

    /// Rotation by a half turn: `A†_{ij} = A_{n-1-i, n-1-j}`.
    pub fn dagger(&self) -> Asm {
        let mut entries = self.entries.clone();
        entries.reverse();
        Asm { n: self.n, entries }
    }

    pub fn to_json(&self) -> AsmJson {
        AsmJson { n: self.n, rows: self.to_rows() }
    }

    pub fn from_json(j: &AsmJson) -> Result<Asm> {
        if j.rows.len() != j.n {
            return Err(Error::InvalidAsm(format!("n = {} but {} rows given", j.n, j.rows.len())));
        }
        Asm::new(&j.rows)
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Asm{:?}", self.to_rows())
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let cells: Vec<String> = self.row(i).iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Wire form `{"n": 3, "rows": [[0,1,0],[1,-1,1],[0,1,0]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsmJson {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl Serialize for Asm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Asm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Asm::from_json(&AsmJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// One admissible row for a given column partial-sum state.
#[derive(Clone, Debug)]
struct RowChoice {
    entries: Vec<i8>,
    next: u32,
}

/// Rows that keep every column partial sum in `{0, 1}` and whose own
/// partial sums alternate `0, 1`, ending at 1. Emitted in lexicographic
/// order with `-1 < 0 < 1`.
fn admissible_rows(n: usize, state: u32) -> Vec<RowChoice> {
    fn go(n: usize, state: u32, j: usize, run: i8, cur: &mut Vec<i8>, out: &mut Vec<RowChoice>) {
        if j == n {
            if run == 1 {
                let mut next = state;
                for (k, &e) in cur.iter().enumerate() {
                    match e {
                        1 => next |= 1 << k,
                        -1 => next &= !(1 << k),
                        _ => {}
                    }
                }
                out.push(RowChoice { entries: cur.clone(), next });
            }
            return;
        }
        let col = (state >> j) & 1 == 1;
        for e in [-1i8, 0, 1] {
            let r = run + e;
            let ok_col = match e {
                -1 => col,
                1 => !col,
                _ => true,
            };
            if ok_col && (0..=1).contains(&r) {
                cur.push(e);
                go(n, state, j + 1, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, state, 0, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Depth-first stream of `ASM(n)`, ordered lexicographically by rows.
pub struct AsmIter {
    n: usize,
    table: Vec<Option<Vec<RowChoice>>>,
    /// `(state before row k, index of the next candidate to try)`.
    stack: Vec<(u32, usize)>,
}

impl AsmIter {
    fn candidates(&mut self, state: u32) -> usize {
        let n = self.n;
        self.table[state as usize].get_or_insert_with(|| admissible_rows(n, state)).len()
    }

    fn current(&self) -> Asm {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for &(state, next) in &self.stack {
            let row = &self.table[state as usize].as_ref().expect("visited")[next - 1];
            entries.extend_from_slice(&row.entries);
        }
        Asm { n: self.n, entries }
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        let full = if self.n >= 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        while let Some(&(state, idx)) = self.stack.last() {
            if idx >= self.candidates(state) {
                self.stack.pop();
                continue;
            }
            self.stack.last_mut().expect("nonempty").1 += 1;
            let next = self.table[state as usize].as_ref().expect("filled")[idx].next;
            if self.stack.len() == self.n {
                if next == full {
                    return Some(self.current());
                }
            } else {
                self.stack.push((next, 0));
            }
        }
        None
    }
}

/// Every `n x n` ASM exactly once, in lexicographic row order.
///
/// # Panics
///
/// Panics for `n = 0` or `n > 20` (the state table has `2^n` slots).
pub fn enumerate_asms(n: usize) -> AsmIter {
    assert!((1..=20).contains(&n), "enumerate_asms: n = {n} out of range");
    AsmIter { n, table: vec![None; 1 << n], stack: vec![(0, 0)] }
}

/// `|ASM(n)|` by a transfer sum over column partial-sum states, without
/// materializing matrices.
pub fn count_asms(n: usize) -> u128 {
    assert!((1..=20).contains(&n), "count_asms: n = {n} out of range");
    let mut ways = vec![0u128; 1 << n];
    ways[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; 1 << n];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for c in admissible_rows(n, s as u32) {
                next[c.next as usize] += w;
            }
        }
        ways = next;
    }
    ways[(1 << n) - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example6() -> Asm {
        Asm::new(&[
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, -1, 1, 0],
            vec![1, -1, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, -1, 0, 1],
            vec![0, 0, 0, 1, 0, 0],
        ])
        .unwrap()
    }

    fn nu_naive(a: &Asm) -> i64 {
        let n = a.n();
        let mut s = 0i64;
        for i in 0..n {
            for ip in i + 1..n {
                for j in 0..n {
                    for jp in 0..=j {
                        s += a.get(i, j) as i64 * a.get(ip, jp) as i64;
                    }
                }
            }
        }
        s
    }

    fn nu_alternative(a: &Asm) -> i64 {
        let n = a.n();
        let mut s = 0i64;
        for i in 0..n {
            for ip in i..n {
                for j in 0..n {
                    for jp in 0..j {
                        s += a.get(i, j) as i64 * a.get(ip, jp) as i64;
                    }
                }
            }
        }
        s
    }

    fn inversions(perm: &[usize]) -> u32 {
        let mut c = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn validation() {
        assert!(Asm::new(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).is_ok());
        example6();
        assert!(Asm::new(&[vec![1, 0], vec![1, 0]]).is_err());
        assert!(Asm::new(&[vec![1, 0], vec![0]]).is_err());
        assert!(Asm::new(&[vec![2, -1], vec![-1, 2]]).is_err());
        // sums fine, alternation broken
        assert!(Asm::new(&[vec![0, 1, 0], vec![1, 0, 0], vec![-1, 0, 1],]).is_err());
        assert!(Asm::new(&[]).is_err());
    }

    #[test]
    fn statistics_of_the_six_by_six_example() {
        let s = example6().stats();
        assert_eq!((s.nu, s.mu, s.rho1, s.rho2), (5, 3, 3, 2));
    }

    #[test]
    fn identity_and_antidiagonal() {
        for n in 1..6 {
            let s = Asm::identity(n).stats();
            assert_eq!(s, AsmStats::default());
        }
        let anti = Asm::from_permutation(&[2, 1, 0]);
        let s = anti.stats();
        assert_eq!((s.nu, s.mu, s.rho1, s.rho2), (3, 0, 2, 2));
        assert_eq!(Asm::identity(3).star(), anti);
        assert_eq!(Asm::identity(4).dagger(), Asm::identity(4));
    }

    #[test]
    fn order_one() {
        let all: Vec<Asm> = enumerate_asms(1).collect();
        assert_eq!(all, vec![Asm::identity(1)]);
    }

    #[test]
    fn order_three_matches_listing() {
        let all: Vec<Asm> = enumerate_asms(3).collect();
        let listed = [
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]],
            vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]],
            vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]],
        ];
        let mut expected: Vec<Asm> = listed.iter().map(|r| Asm::new(r).unwrap()).collect();
        assert_eq!(all.len(), 7);
        let mut got = all.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let all: Vec<Vec<Vec<i64>>> = enumerate_asms(4).map(|a| a.to_rows()).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn counts() {
        let expected = [1u128, 2, 7, 42, 429, 7436];
        for (k, &c) in expected.iter().enumerate() {
            assert_eq!(count_asms(k + 1), c);
            assert_eq!(enumerate_asms(k + 1).count() as u128, c);
        }
        assert_eq!(count_asms(7), 218_348);
    }

    #[test]
    fn nu_formulas_agree() {
        for n in 1..=5 {
            for a in enumerate_asms(n) {
                let nu = a.nu() as i64;
                assert_eq!(nu, nu_naive(&a));
                assert_eq!(nu, nu_alternative(&a));
            }
        }
    }

    #[test]
    fn permutation_matrices_count_inversions() {
        for a in enumerate_asms(5).filter(Asm::is_permutation) {
            let perm: Vec<usize> = (0..5).map(|i| a.one_in_row(i)).collect();
            assert_eq!(a.nu(), inversions(&perm));
        }
    }

    #[test]
    fn symmetry_laws() {
        for n in 1..=5 {
            let half = (n * (n - 1) / 2) as u32;
            let m = (n - 1) as u32;
            for a in enumerate_asms(n) {
                let s = a.stats();
                let st = a.star();
                let dg = a.dagger();
                assert!(st.check_lines().is_ok() && dg.check_lines().is_ok());
                assert_eq!(st.star(), a);
                assert_eq!(dg.dagger(), a);
                let t = st.stats();
                assert_eq!(t.nu, half - s.nu - s.mu);
                assert_eq!(t.mu, s.mu);
                assert_eq!(t.rho1, m - s.rho1);
                assert_eq!(t.rho2, m - s.rho2);
                let d = dg.stats();
                assert_eq!((d.nu, d.mu, d.rho1, d.rho2), (s.nu, s.mu, s.rho2, s.rho1));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a = example6();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with(r#"{"n":6,"rows":[[0,0,0,1,0,0]"#));
        let back: Asm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Asm>(r#"{"n":2,"rows":[[1,0],[1,0]]}"#).is_err());
        assert!(serde_json::from_str::<Asm>(r#"{"n":3,"rows":[[1,0],[0,1]]}"#).is_err());
    }
}
