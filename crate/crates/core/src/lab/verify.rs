//! One check per identity: an exact formula compared with an independent
//! computation, usually by enumeration.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{check_desnanot_jacobi, desnanot_jacobi_sides, DjForm, MPoly, Matrix, Monomial, Ring, Var};
use crate::asm::{enumerate_asms, Asm};
use crate::dpp::{enumerate_dpps, Dpp};
use crate::error::{Error, Result};
use crate::lab::counts::{asm_count, doubly_refined_det_prediction, refined_count, refined_counts};
use crate::lab::genfun::{
    asm_genfun, boundary_genfun, dpp_genfun, genfun_bruteforce, perm_genfun, rename_pair, singly_refined, star_reflect,
    ObjectKind,
};
use crate::lab::matrices::{c_one, c_two, k_matrix, l_matrix, l_matrix_augmented, Refinement};
use crate::paths::{
    all_endpoints, dpp_genfun_lgv, family_sum_bruteforce, lgv_determinant, path_weight_sum_bruteforce,
    path_weight_sum_closed, path_weight_sum_listed,
};
use crate::sixvertex::{
    check_uz, ik_determinant, random_point, random_rational, sv_partition_function, zczasm_sides, BoundaryParams,
};

/// Size limits for the checks. Enumeration-backed checks stop at
/// `enumeration`, pure formula checks at `formula`, six-vertex brute force
/// at `sv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub enumeration: usize,
    pub formula: usize,
    pub sv: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { enumeration: 6, formula: 8, sv: 5 }
    }
}

impl Caps {
    fn enumeration(&self, n: usize) -> Result<()> {
        cap("enumeration", n, self.enumeration)
    }

    fn formula(&self, n: usize) -> Result<()> {
        cap("formula check", n, self.formula)
    }
}

fn cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

fn at_least_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("this check needs n >= 2, got {n}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Outcome {
    /// Every case agreed; `cases` counts the comparisons made.
    Pass { cases: usize },
    /// The first disagreement found.
    Fail { detail: String },
}

impl Outcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass { .. })
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass { cases } => write!(f, "pass ({cases} cases)"),
            Outcome::Fail { detail } => write!(f, "fail: {detail}"),
        }
    }
}

/// Counts comparisons and records the first failure.
#[derive(Default)]
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, what: &str, lhs: &T, rhs: &T) {
        self.check(lhs == rhs, || format!("{what}: {lhs} != {rhs}"));
    }

    fn done(self) -> Outcome {
        match self.failure {
            None => Outcome::Pass { cases: self.cases },
            Some(detail) => Outcome::Fail { detail },
        }
    }
}

fn z(k: usize) -> MPoly {
    MPoly::var(Var::z(k))
}

fn genfun(kind: ObjectKind, n: usize, caps: &Caps) -> Result<MPoly> {
    Ok(genfun_bruteforce(kind, n, caps.enumeration)?.poly)
}

const KINDS: [ObjectKind; 2] = [ObjectKind::Asm, ObjectKind::Dpp];

/// ASM and DPP generating functions agree, and equal the determinant for `n >= 2`.
pub fn verify_theorem1(n: usize, caps: &Caps) -> Result<Outcome> {
    caps.enumeration(n)?;
    let mut t = Tally::default();
    let a = asm_genfun(n, caps.enumeration)?;
    let d = dpp_genfun(n, caps.enumeration)?;
    t.eq(&format!("n={n}: ASM vs DPP"), &a, &d);
    if n >= 2 {
        let k = k_matrix(n, Refinement::Doubly)?.det()?;
        t.eq(&format!("n={n}: ASM vs det K"), &a, &k);
    } else {
        t.eq("n=1: Z", &a, &MPoly::one());
    }
    Ok(t.done())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem2Form {
    /// Three-term relation with the order `n-1` function.
    Propeq1,
    /// Vanishing three-term bilinear relation in `z1..z4`.
    Propeq2,
}

/// `Z(x, y, v, 1)` written in the variable `v`.
fn singly_in(zn: &MPoly, v: Var) -> MPoly {
    zn.substitute(&[(Var::Z1, MPoly::var(v)), (Var::Z2, MPoly::one())])
}

/// Both sides of the relation between the order `n` function `zn` and the
/// order `n-1` function `zn1`.
pub fn propeq1_sides(zn: &MPoly, zn1: &MPoly) -> (MPoly, MPoly) {
    let one = MPoly::one();
    let (z1, z2) = (z(1), z(2));
    let zn1_at_one = zn1.substitute(&[(Var::Z1, one.clone()), (Var::Z2, one.clone())]);
    let lhs = &(&(&z1 - &z2) * zn) * &zn1_at_one;
    let first = &(&(&(&z1 - &one) * &z2) * &singly_in(zn, Var::Z1)) * &singly_in(zn1, Var::Z2);
    let second = &(&(&z1 * &(&z2 - &one)) * &singly_in(zn1, Var::Z1)) * &singly_in(zn, Var::Z2);
    (lhs, &first - &second)
}

/// Left side of the bilinear relation, which should vanish.
pub fn propeq2_lhs(zn: &MPoly) -> MPoly {
    let term = |a: usize, b: usize, c: usize, d: usize| {
        let f = &(&z(a) - &z(b)) * &(&z(c) - &z(d));
        &(&f * &rename_pair(zn, &z(a), &z(b))) * &rename_pair(zn, &z(c), &z(d))
    };
    &(&term(1, 2, 3, 4) - &term(1, 3, 2, 4)) + &term(1, 4, 2, 3)
}

pub fn verify_theorem2(n: usize, form: Theorem2Form, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.enumeration(n)?;
    let mut t = Tally::default();
    for kind in KINDS {
        let zn = genfun(kind, n, caps)?;
        match form {
            Theorem2Form::Propeq1 => {
                let zn1 = genfun(kind, n - 1, caps)?;
                let (l, r) = propeq1_sides(&zn, &zn1);
                t.eq(&format!("{kind} n={n}"), &l, &r);
            }
            Theorem2Form::Propeq2 => {
                let l = propeq2_lhs(&zn);
                t.eq(&format!("{kind} n={n}"), &l, &MPoly::zero());
            }
        }
    }
    Ok(t.done())
}

/// The bilinear relation for DPPs obtained from the two-column
/// condensation identity on the transposed augmented matrix: each of the
/// six maximal minors is `(zb - za) Z(za, zb)`, and the identity holds.
pub fn verify_propeq2_condensation(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.enumeration(n)?;
    let zn = genfun(ObjectKind::Dpp, n, caps)?;
    let m = l_matrix_augmented(n)?.transpose();
    let rows = [n - 2, n - 1, n, n + 1];
    let mut t = Tally::default();
    for a in 0..4 {
        for b in a + 1..4 {
            let minor = m.minor(&[rows[a], rows[b]], &[])?.det()?;
            let rest: Vec<usize> = (0..4).filter(|&k| k != a && k != b).map(|k| k + 1).collect();
            let expect = &(&z(rest[1]) - &z(rest[0])) * &rename_pair(&zn, &z(rest[0]), &z(rest[1]));
            t.eq(&format!("n={n}: minor deleting z{} z{}", a + 1, b + 1), &minor, &expect);
        }
    }
    let (l, r) = desnanot_jacobi_sides(&m, &DjForm::TwoColumn { rows })?;
    t.eq(&format!("n={n}: condensation"), &l, &r);
    t.eq(&format!("n={n}: relation"), &l, &propeq2_lhs(&zn));
    Ok(t.done())
}

/// Determinant of the doubly refined matrix against enumeration (when
/// within the enumeration cap), against the singly refined matrix at
/// `z2 = 1`, and its `z1 <-> z2` symmetry.
pub fn verify_det_k(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.formula(n)?;
    let mut t = Tally::default();
    let k = k_matrix(n, Refinement::Doubly)?;
    let det = k.det()?;
    let singly = k_matrix(n, Refinement::Singly)?;
    t.check(k.map(singly_refined) == singly, || format!("n={n}: K(z2=1) differs from singly refined K"));
    t.eq(&format!("n={n}: singly det"), &singly.det()?, &singly_refined(&det));
    t.eq(&format!("n={n}: z1<->z2"), &det.swap_vars(Var::Z1, Var::Z2), &det);
    if n <= caps.enumeration {
        t.eq(&format!("n={n}: det K vs ASM"), &det, &asm_genfun(n, caps.enumeration)?);
        t.eq(&format!("n={n}: det K vs DPP"), &det, &dpp_genfun(n, caps.enumeration)?);
    }
    Ok(t.done())
}

/// `det L_n = (z2 - z1) Z_n`, with `Z_n` from enumeration when possible and
/// from the doubly refined determinant otherwise.
pub fn verify_det_l(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.formula(n)?;
    let zn = if n <= caps.enumeration {
        dpp_genfun(n, caps.enumeration)?
    } else {
        k_matrix(n, Refinement::Doubly)?.det()?
    };
    let mut t = Tally::default();
    let l = l_matrix(n)?.det()?;
    t.eq(&format!("n={n}"), &l, &(&(&z(2) - &z(1)) * &zn));
    Ok(t.done())
}

/// `(z1 - z2) C(z1, z2)_i = C(z1)_i - C(z2)_i`, and the two boundary
/// columns agree with the path sums they count.
pub fn verify_ceq(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.formula(n)?;
    let mut t = Tally::default();
    for i in 0..n {
        let two = c_two(n, i, Var::Z1, Var::Z2);
        let lhs = &(&z(1) - &z(2)) * &two;
        let rhs = &c_one(n, i, Var::Z1) - &c_one(n, i, Var::Z2);
        t.eq(&format!("n={n} i={i}"), &lhs, &rhs);
        t.eq(&format!("n={n} i={i}: top row sum"), &two, &path_weight_sum_bruteforce(n, n - 1, i));
        t.eq(
            &format!("n={n} i={i}: second row sum"),
            &c_one(n, i, Var::Z2),
            &(&path_weight_sum_bruteforce(n, n - 2, i) * &z(2)),
        );
    }
    Ok(t.done())
}

/// Brute-force partition function against the determinant formula at
/// seeded random generic points.
pub fn verify_ik(n: usize, points: usize, seed: u64, caps: &Caps) -> Result<Outcome> {
    cap("six-vertex brute force", n, caps.sv)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for k in 0..points {
        let p = random_point(n, &mut rng);
        let lhs = sv_partition_function(&p, caps.sv)?;
        let rhs = ik_determinant(&p)?;
        t.eq(&format!("n={n} point {k}"), &lhs, &rhs);
    }
    Ok(t.done())
}

/// Partition function at the boundary specialization against the ASM
/// generating function, plus the `u - z` relation at each point.
pub fn verify_zczasm(n: usize, points: usize, seed: u64, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    cap("six-vertex brute force", n, caps.sv)?;
    let zasm = asm_genfun(n, caps.enumeration)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for k in 0..points {
        let p = BoundaryParams::random(&mut rng);
        let (lhs, rhs) = zczasm_sides(n, &p, &zasm, caps.sv)?;
        t.eq(&format!("n={n} point {k}"), &lhs, &rhs);
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        match check_uz(&p, &a, &b) {
            Ok(ok) => t.check(ok, || format!("n={n} point {k}: u-z relation")),
            Err(Error::Degenerate(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(t.done())
}

/// LGV determinants against family sums for every endpoint configuration,
/// and the reassembled generating function against enumeration.
pub fn verify_lgv(n: usize, caps: &Caps) -> Result<Outcome> {
    caps.enumeration(n)?;
    let mut t = Tally::default();
    if n <= 4 {
        for e in all_endpoints(n) {
            t.eq(&format!("n={n} {:?}", e.lambdas), &lgv_determinant(&e)?, &family_sum_bruteforce(&e));
        }
    }
    t.eq(&format!("n={n}: reassembly"), &dpp_genfun_lgv(n)?, &dpp_genfun(n, caps.enumeration)?);
    Ok(t.done())
}

/// Closed path sums against the grid recursion for all endpoints, and
/// against explicit path listing for `n <= 3`.
pub fn verify_dppwp(n: usize, caps: &Caps) -> Result<Outcome> {
    caps.formula(n)?;
    let mut t = Tally::default();
    for j in 0..n {
        for i in 0..n {
            let dp = path_weight_sum_bruteforce(n, j, i);
            t.eq(&format!("n={n} j={j} i={i}"), &path_weight_sum_closed(n, j, i), &dp);
            if n <= 3 {
                t.eq(&format!("n={n} j={j} i={i}: listing"), &path_weight_sum_listed(n, j, i), &dp);
            }
        }
    }
    Ok(t.done())
}

fn three_statistic<I: Iterator<Item = (u32, u32, u32)>>(it: I) -> MPoly {
    MPoly::from_terms(it.map(|(a, b, c)| {
        (Monomial::from_pairs(&[(Var::X, a as u16), (Var::Y, b as u16), (Var::Z1, c as u16)]), 1.into())
    }))
}

/// The boundary specializations `z2 = 1`, `z2 = 0`, `z1 = 0`, `z1 = z2 = 0`
/// and `z1 <-> z2` symmetry, for both kinds.
pub fn verify_specializations(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.enumeration(n)?;
    let mut t = Tally::default();
    for kind in KINDS {
        let zn = genfun(kind, n, caps)?;
        let prev = singly_refined(&genfun(kind, n - 1, caps)?);
        let direct = match kind {
            ObjectKind::Asm => three_statistic(enumerate_asms(n).map(|a| {
                let s = a.stats();
                (s.nu, s.mu, s.rho1)
            })),
            ObjectKind::Dpp => three_statistic(enumerate_dpps(n as u32).map(|d| {
                let s = d.stats();
                (s.nu, s.mu, s.rho1)
            })),
        };
        t.eq(&format!("{kind} n={n}: z2=1"), &singly_refined(&zn), &direct);
        t.eq(&format!("{kind} n={n}: z2=0"), &zn.substitute(&[(Var::Z2, MPoly::zero())]), &prev);
        t.eq(&format!("{kind} n={n}: z1=0"), &zn.substitute(&[(Var::Z1, MPoly::zero()), (Var::Z2, z(1))]), &prev);
        if n >= 3 {
            let both = zn.substitute(&[(Var::Z1, MPoly::zero()), (Var::Z2, MPoly::zero())]);
            let two_back = genfun(kind, n - 2, caps)?.substitute(&[(Var::Z1, MPoly::one()), (Var::Z2, MPoly::one())]);
            t.eq(&format!("{kind} n={n}: z1=z2=0"), &both, &two_back);
        }
        t.eq(&format!("{kind} n={n}: z1<->z2"), &zn.swap_vars(Var::Z1, Var::Z2), &zn);
    }
    Ok(t.done())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Four(u32, u32, u32, u32);

impl fmt::Display for Four {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0, self.1, self.2, self.3)
    }
}

fn asm4(a: &Asm) -> Four {
    let s = a.stats();
    Four(s.nu, s.mu, s.rho1, s.rho2)
}

fn dpp4(d: &Dpp) -> Four {
    let s = d.stats();
    Four(s.nu, s.mu, s.rho1, s.rho2)
}

fn star_law(n: usize, s: Four) -> Four {
    let n = n as u32;
    Four(n * (n - 1) / 2 - s.0 - s.1, s.1, n - 1 - s.2, n - 1 - s.3)
}

/// Elementwise laws for both operations on both families, the functional
/// equation, `z1 <-> z2` symmetry, and the single-element classes.
pub fn verify_symmetry_laws(n: usize, caps: &Caps) -> Result<Outcome> {
    caps.enumeration(n)?;
    let mut t = Tally::default();
    let single = |k: u32| {
        let n = n as u32;
        Four(k * (k + 1) / 2, k * (n - k - 1), k, k)
    };
    let mut asm_single = vec![0usize; n];
    for a in enumerate_asms(n) {
        let (s, st, dg) = (asm4(&a), a.star(), a.dagger());
        t.check(st.star() == a && dg.dagger() == a, || format!("ASM {a:?}: not an involution"));
        t.eq(&format!("ASM {a:?} star"), &asm4(&st), &star_law(n, s));
        t.eq(&format!("ASM {a:?} dagger"), &asm4(&dg), &Four(s.0, s.1, s.3, s.2));
        if let Some(k) = (0..n).find(|&k| s == single(k as u32)) {
            asm_single[k] += 1;
        }
    }
    let mut dpp_single = vec![0usize; n];
    for d in enumerate_dpps(n as u32) {
        let (s, st, dg) = (dpp4(&d), d.star(), d.dagger());
        t.check(st.star() == d && dg.dagger() == d, || format!("DPP {d}: not an involution"));
        t.eq(&format!("DPP {d} star"), &dpp4(&st), &star_law(n, s));
        t.eq(&format!("DPP {d} dagger"), &dpp4(&dg), &Four(s.0, s.1, s.3, s.2));
        if let Some(k) = (0..n).find(|&k| s == single(k as u32)) {
            dpp_single[k] += 1;
        }
    }
    for k in 0..n {
        t.check(asm_single[k] == 1 && dpp_single[k] == 1, || {
            format!("n={n} k={k}: {} ASMs and {} DPPs in the single-element class", asm_single[k], dpp_single[k])
        });
    }
    for kind in KINDS {
        let zn = genfun(kind, n, caps)?;
        t.eq(&format!("{kind} n={n}: z1<->z2"), &zn.swap_vars(Var::Z1, Var::Z2), &zn);
        match star_reflect(&zn, n) {
            Some(r) => t.eq(&format!("{kind} n={n}: functional equation"), &r, &zn),
            None => t.check(false, || format!("{kind} n={n}: exponent out of range under reflection")),
        }
    }
    Ok(t.done())
}

/// For odd `n`, the statistics of reflection-invariant ASMs and DPPs agree
/// as multisets.
pub fn verify_star_invariant_equality(n: usize, caps: &Caps) -> Result<Outcome> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("n must be odd, got {n}")));
    }
    caps.enumeration(n)?;
    let mut a: Vec<(u32, u32, u32, u32)> =
        enumerate_asms(n).filter(|a| &a.star() == a).map(|a| asm4(&a)).map(|s| (s.0, s.1, s.2, s.3)).collect();
    let mut d: Vec<(u32, u32, u32, u32)> =
        enumerate_dpps(n as u32).filter(|d| &d.star() == d).map(|d| dpp4(&d)).map(|s| (s.0, s.1, s.2, s.3)).collect();
    a.sort_unstable();
    d.sort_unstable();
    let mut t = Tally::default();
    t.check(a == d, || format!("n={n}: ASM invariants {a:?} vs DPP invariants {d:?}"));
    Ok(t.done())
}

/// Relations among the generating functions for pairs of boundary
/// statistics of ASMs.
pub fn verify_boundary_relations(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.enumeration(n)?;
    let mut g = HashMap::new();
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j {
                g.insert((i, j), boundary_genfun(n, i, j, caps.enumeration)?);
            }
        }
    }
    let mut t = Tally::default();
    for i in 1..=4 {
        for j in i + 1..=4 {
            t.eq(&format!("n={n}: Z^{i}{j} vs Z^{j}{i}"), &g[&(i, j)], &g[&(j, i)]);
        }
    }
    let zasm = asm_genfun(n, caps.enumeration)?;
    t.eq(&format!("n={n}: Z^12"), &g[&(1, 2)], &zasm);
    t.eq(&format!("n={n}: Z^34"), &g[&(3, 4)], &zasm);
    t.eq(&format!("n={n}: Z^13 vs Z^24"), &g[&(1, 3)], &g[&(2, 4)]);
    for other in [(1, 4), (2, 3)] {
        let detail = format!("n={n}: Z^13 vs reflected Z^{}{}", other.0, other.1);
        match star_reflect(&g[&other], n) {
            Some(r) => t.eq(&detail, &g[&(1, 3)], &r),
            None => t.check(false, || detail),
        }
    }
    Ok(t.done())
}

/// Closed-form counts against enumeration of both families, the
/// recursion, and the determinant of the doubly refined table.
pub fn verify_refined(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.enumeration(n)?;
    let table = refined_counts(n)?;
    let mut t = Tally::default();
    let asms: Vec<Asm> = enumerate_asms(n).collect();
    let dpps: Vec<Dpp> = enumerate_dpps(n as u32).collect();
    t.eq(&format!("n={n}: A_n vs ASMs"), &table.a_n, &BigInt::from(asms.len()));
    t.eq(&format!("n={n}: A_n vs DPPs"), &table.a_n, &BigInt::from(dpps.len()));
    let mut by_rho = vec![[0usize; 6]; n];
    for a in &asms {
        let s = a.stats();
        for (slot, r) in [s.rho1, s.rho2, s.rho3, s.rho4].into_iter().enumerate() {
            by_rho[r as usize][slot] += 1;
        }
    }
    for d in &dpps {
        let s = d.stats();
        by_rho[s.rho1 as usize][4] += 1;
        by_rho[s.rho2 as usize][5] += 1;
    }
    for (k, counts) in by_rho.iter().enumerate() {
        for (slot, &c) in counts.iter().enumerate() {
            t.eq(&format!("n={n} k={k} statistic #{slot}"), &table.a_nk[k], &BigInt::from(c));
        }
    }
    let gf = asm_genfun(n, caps.enumeration)?;
    let at_one = gf.substitute(&[(Var::X, MPoly::one()), (Var::Y, MPoly::one())]);
    for i in 0..n {
        for j in 0..n {
            let m = Monomial::from_pairs(&[(Var::Z1, i as u16), (Var::Z2, j as u16)]);
            t.eq(&format!("n={n} A_({i},{j})"), table.a_nij.get(i, j), &at_one.coeff(&m));
        }
    }
    if n >= 3 {
        t.eq(&format!("n={n}: det"), &table.a_nij.det()?, &doubly_refined_det_prediction(n));
    }
    t.eq(&format!("n={n}: A_(n,0)"), &refined_count(n, 0), &asm_count(n - 1));
    Ok(t.done())
}

/// The closed form for permutation matrices against the `y = 0` slice.
pub fn verify_perm(n: usize, caps: &Caps) -> Result<Outcome> {
    at_least_two(n)?;
    caps.enumeration(n)?;
    let slice = asm_genfun(n, caps.enumeration)?.substitute(&[(Var::Y, MPoly::zero())]);
    let closed = perm_genfun(n)?;
    let mut t = Tally::default();
    t.eq(&format!("n={n}"), &closed, &slice);
    let at_one = closed.substitute(&[(Var::X, MPoly::one()), (Var::Z1, MPoly::one()), (Var::Z2, MPoly::one())]);
    let fact = (1..=n as u64).fold(BigInt::from(1), |a, k| a * k);
    t.eq(&format!("n={n}: count"), &at_one.coeff(&Monomial::ONE), &fact);
    Ok(t.done())
}

/// Random integer matrix with entries in `-5..=5`.
pub fn random_int_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Matrix<BigInt> {
    Matrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-5i64..=5)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DjKind {
    Classic,
    TwoColumn,
    Mixed,
}

fn sorted_sample<R: Rng>(rng: &mut R, range: usize, k: usize) -> Vec<usize> {
    let mut v = rand::seq::index::sample(rng, range, k).into_vec();
    v.sort_unstable();
    v
}

/// Each form of the condensation identity on `trials` random integer
/// matrices of order `2..=6`, with random row and column choices.
pub fn verify_dj(kind: DjKind, trials: usize, seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for k in 0..trials {
        let n = rng.gen_range(2..=6usize);
        let (m, form) = match kind {
            DjKind::Classic => {
                let r = sorted_sample(&mut rng, n, 2);
                let c = sorted_sample(&mut rng, n, 2);
                (random_int_matrix(n, n, &mut rng), DjForm::Classic { rows: [r[0], r[1]], cols: [c[0], c[1]] })
            }
            DjKind::TwoColumn => {
                let r = sorted_sample(&mut rng, n + 2, 4);
                (random_int_matrix(n + 2, n, &mut rng), DjForm::TwoColumn { rows: [r[0], r[1], r[2], r[3]] })
            }
            DjKind::Mixed => {
                let r = sorted_sample(&mut rng, n + 1, 3);
                let col = rng.gen_range(0..n);
                (random_int_matrix(n + 1, n, &mut rng), DjForm::Mixed { rows: [r[0], r[1], r[2]], col })
            }
        };
        let ok = check_desnanot_jacobi(&m, &form)?;
        t.check(ok, || format!("trial {k}: {form:?} fails on {m:?}"));
    }
    Ok(t.done())
}

/// Both sides of `det(M - [i = j+1]) = sum_S det M[{0} + S, (S-1) + {n-1}]`.
pub fn det_subset_sides<S: Ring>(m: &Matrix<S>) -> Result<(S, S)> {
    let n = m.rows();
    if !m.is_square() || n == 0 {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let shifted =
        Matrix::from_fn(n, n, |i, j| if i == j + 1 { m.get(i, j).sub(&S::one()) } else { m.get(i, j).clone() });
    let lhs = shifted.det()?;
    let mut rhs = S::zero();
    for mask in 0u32..(1 << (n - 1)) {
        let s: Vec<usize> = (1..n).filter(|&k| mask >> (k - 1) & 1 == 1).collect();
        let rows: Vec<usize> = std::iter::once(0).chain(s.iter().copied()).collect();
        let cols: Vec<usize> = s.iter().map(|&k| k - 1).chain(std::iter::once(n - 1)).collect();
        rhs = rhs.add(&m.select(&rows, &cols)?.det()?);
    }
    Ok((lhs, rhs))
}

pub fn verify_det_subset(trials: usize, n: usize, seed: u64) -> Result<Outcome> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(format!("matrix order must be in 1..=6, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for k in 0..trials {
        let m = random_int_matrix(n, n, &mut rng);
        let (l, r) = det_subset_sides(&m)?;
        t.eq(&format!("trial {k}"), &l, &r);
    }
    Ok(t.done())
}
