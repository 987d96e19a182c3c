//! The fixed registry of verification checks and how each one is run over
//! a range of orders.

use std::time::Instant;

use clap::ValueEnum;
use refine_core::lab::verify::{self, DjKind, Theorem2Form};
use refine_core::{Caps, Outcome, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "theorem2-propeq1")]
    Theorem2Propeq1,
    #[value(name = "theorem2-propeq2")]
    Theorem2Propeq2,
    #[value(name = "det-k")]
    DetK,
    #[value(name = "det-l")]
    DetL,
    #[value(name = "ceq")]
    Ceq,
    #[value(name = "ik")]
    Ik,
    #[value(name = "zczasm")]
    Zczasm,
    #[value(name = "lgv")]
    Lgv,
    #[value(name = "dppwp")]
    Dppwp,
    #[value(name = "symmetry")]
    Symmetry,
    #[value(name = "star-invariant")]
    StarInvariant,
    #[value(name = "boundary")]
    Boundary,
    #[value(name = "refined")]
    Refined,
    #[value(name = "perm")]
    Perm,
    #[value(name = "dj")]
    Dj,
    #[value(name = "det-subset")]
    DetSubset,
    /// Every check above.
    #[value(name = "all")]
    All,
}

pub const REGISTRY: [Check; 17] = [
    Check::Theorem1,
    Check::Theorem2Propeq1,
    Check::Theorem2Propeq2,
    Check::DetK,
    Check::DetL,
    Check::Ceq,
    Check::Ik,
    Check::Zczasm,
    Check::Lgv,
    Check::Dppwp,
    Check::Symmetry,
    Check::StarInvariant,
    Check::Boundary,
    Check::Refined,
    Check::Perm,
    Check::Dj,
    Check::DetSubset,
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Theorem2Propeq1 => "theorem2-propeq1",
            Check::Theorem2Propeq2 => "theorem2-propeq2",
            Check::DetK => "det-k",
            Check::DetL => "det-l",
            Check::Ceq => "ceq",
            Check::Ik => "ik",
            Check::Zczasm => "zczasm",
            Check::Lgv => "lgv",
            Check::Dppwp => "dppwp",
            Check::Symmetry => "symmetry",
            Check::StarInvariant => "star-invariant",
            Check::Boundary => "boundary",
            Check::Refined => "refined",
            Check::Perm => "perm",
            Check::Dj => "dj",
            Check::DetSubset => "det-subset",
            Check::All => "all",
        }
    }

    /// Whether the check is stated for order `n`.
    pub fn applies(self, n: usize) -> bool {
        match self {
            Check::Theorem1 | Check::Ik | Check::Lgv | Check::Dppwp | Check::Symmetry => n >= 1,
            Check::StarInvariant => n % 2 == 1,
            Check::Dj => n == 1,
            Check::DetSubset => (1..=6).contains(&n),
            _ => n >= 2,
        }
    }

    /// Largest order the check can run at under `caps`.
    pub fn max_order(self, caps: &Caps) -> usize {
        match self {
            Check::Ik | Check::Zczasm => caps.sv,
            Check::DetSubset => 6,
            Check::DetK | Check::DetL | Check::Ceq | Check::Dppwp => caps.formula,
            _ => caps.enumeration,
        }
    }

    fn default_points(self) -> usize {
        match self {
            Check::Ik => 20,
            Check::Zczasm => 10,
            Check::Dj => 500,
            Check::DetSubset => 20,
            _ => 0,
        }
    }

    /// Run at order `n`. For `dj` the order is ignored and `points` is the
    /// number of matrices per form; for `det-subset` it is the number of
    /// matrices of order `n`.
    pub fn run(self, n: usize, seed: u64, points: Option<usize>, caps: &Caps) -> Result<Outcome> {
        let points = points.unwrap_or(self.default_points());
        match self {
            Check::Theorem1 => verify::verify_theorem1(n, caps),
            Check::Theorem2Propeq1 => verify::verify_theorem2(n, Theorem2Form::Propeq1, caps),
            Check::Theorem2Propeq2 => both(verify::verify_theorem2(n, Theorem2Form::Propeq2, caps), || {
                verify::verify_propeq2_condensation(n, caps)
            }),
            Check::DetK => verify::verify_det_k(n, caps),
            Check::DetL => verify::verify_det_l(n, caps),
            Check::Ceq => verify::verify_ceq(n, caps),
            Check::Ik => verify::verify_ik(n, points, seed, caps),
            Check::Zczasm => verify::verify_zczasm(n, points, seed, caps),
            Check::Lgv => verify::verify_lgv(n, caps),
            Check::Dppwp => verify::verify_dppwp(n, caps),
            Check::Symmetry => {
                let laws = verify::verify_symmetry_laws(n, caps);
                if n >= 2 {
                    both(laws, || verify::verify_specializations(n, caps))
                } else {
                    laws
                }
            }
            Check::StarInvariant => verify::verify_star_invariant_equality(n, caps),
            Check::Boundary => verify::verify_boundary_relations(n, caps),
            Check::Refined => verify::verify_refined(n, caps),
            Check::Perm => verify::verify_perm(n, caps),
            Check::Dj => {
                let mut cases = 0;
                for (k, kind) in [DjKind::Classic, DjKind::TwoColumn, DjKind::Mixed].into_iter().enumerate() {
                    match verify::verify_dj(kind, points, seed.wrapping_add(k as u64))? {
                        Outcome::Pass { cases: c } => cases += c,
                        fail => return Ok(fail),
                    }
                }
                Ok(Outcome::Pass { cases })
            }
            Check::DetSubset => verify::verify_det_subset(points, n, seed),
            Check::All => unreachable!("`all` is expanded before running"),
        }
    }
}

fn both(first: Result<Outcome>, second: impl FnOnce() -> Result<Outcome>) -> Result<Outcome> {
    match first? {
        Outcome::Pass { cases } => match second()? {
            Outcome::Pass { cases: more } => Ok(Outcome::Pass { cases: cases + more }),
            fail => Ok(fail),
        },
        fail => Ok(fail),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: &'static str,
    /// Order checked; absent for `dj`, which draws its own sizes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub verdict: &'static str,
    pub cases: usize,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn line(&self) -> String {
        let n = self.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let mut s = format!("{} {}{n}: {} cases", self.verdict.to_uppercase(), self.check, self.cases);
        if !self.details.is_empty() {
            s.push_str(&format!(" ({})", self.details));
        }
        if let Some(ms) = self.elapsed_ms {
            s.push_str(&format!(" [{ms} ms]"));
        }
        s
    }
}

/// Run a check and wrap the result; errors propagate.
pub fn report(check: Check, n: usize, seed: u64, points: Option<usize>, caps: &Caps, timings: bool) -> Result<Report> {
    let start = Instant::now();
    let outcome = check.run(n, seed, points, caps)?;
    let elapsed_ms = timings.then(|| start.elapsed().as_millis());
    let (verdict, cases, details) = match outcome {
        Outcome::Pass { cases } => ("pass", cases, String::new()),
        Outcome::Fail { detail } => ("fail", 0, detail),
    };
    let n = (check != Check::Dj).then_some(n);
    Ok(Report { check: check.name(), n, verdict, cases, details, elapsed_ms })
}
