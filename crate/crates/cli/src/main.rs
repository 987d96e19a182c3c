mod cache;
mod checks;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use refine_core::lab::counts::{refined_count, refined_counts};
use refine_core::lab::genfun::genfun_bruteforce;
use refine_core::paths::PathFamily;
use refine_core::sixvertex::{enumerate_sv, SvConfig};
use refine_core::{enumerate_asms, enumerate_dpps, enumerate_nilps, Asm, Caps, Dpp, Error, ObjectKind};
use serde::Serialize;
use serde_json::Value;

use checks::{Check, REGISTRY};

/// `println!` that exits quietly if the reader has gone away.
macro_rules! out {
    ($($arg:tt)*) => {{
        let mut stdout = std::io::stdout().lock();
        if writeln!(stdout, $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

#[derive(Parser)]
#[command(name = "refine", version, about = "Refined enumeration of ASMs and DPPs, with exact identity checks")]
struct Cli {
    /// Largest order for which objects are enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().enumeration)]
    enum_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CountObject {
    Asm,
    Dpp,
    Sv,
    Nilp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Asm,
    Dpp,
}

impl From<Kind> for ObjectKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Asm => ObjectKind::Asm,
            Kind::Dpp => ObjectKind::Dpp,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Sv,
    Nilp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Ank,
    Anij,
}

#[derive(Subcommand)]
enum Command {
    /// Count objects of order n by enumeration.
    Count {
        #[arg(long, value_enum)]
        object: CountObject,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Write the generating function of order n as JSON.
    Genfun {
        #[arg(long, value_enum)]
        object: Kind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Statistics of the object (or array of objects) in a JSON file.
    Stats {
        #[arg(long, value_enum)]
        object: Kind,
        #[arg(long)]
        input: PathBuf,
    },
    /// Apply the bijection ASM -> six-vertex or DPP -> path family.
    Biject {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long)]
        input: PathBuf,
    },
    /// Singly or doubly refined counts from the closed forms.
    Table {
        #[arg(long, value_enum)]
        what: TableKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Run a check from the registry, or all of them.
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// Check a single order.
        #[arg(long, conflicts_with = "max_n", value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        /// Check every applicable order up to this one, within each check's cap.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random points (ik, zczasm) or random matrices (dj, det-subset).
        #[arg(long)]
        points: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Include elapsed milliseconds in reports.
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    /// A verification or cross-check disagreed.
    Mismatch,
    /// Bad input, cap exceeded, I/O.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps { enumeration: cli.enum_cap, ..Caps::default() };
    let result = match cli.command {
        Command::Count { object, n, json } => count(object, n as usize, json, &caps),
        Command::Genfun { object, n, out, no_cache } => {
            genfun(object.into(), n as usize, out.as_deref(), !no_cache, &caps)
        }
        Command::Stats { object, input } => stats(object, &input),
        Command::Biject { from, to, input } => biject(from, to, &input),
        Command::Table { what, n, csv } => table(what, n as usize, csv),
        Command::Verify { check, n, max_n, seed, points, json, timings } => {
            verify(check, n.map(|n| n as usize), max_n as usize, seed, points, json, timings, &caps)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("refine: {msg}");
            ExitCode::from(2)
        }
    }
}

fn enum_cap(n: usize, caps: &Caps) -> Outcome {
    if n > caps.enumeration {
        return Err(Error::CapExceeded { what: "enumeration", n, cap: caps.enumeration }.into());
    }
    Ok(())
}

fn count(object: CountObject, n: usize, json: bool, caps: &Caps) -> Outcome {
    enum_cap(n, caps)?;
    let (count, other, paired) = match object {
        CountObject::Asm | CountObject::Sv => {
            let a = enumerate_asms(n).count();
            let s = enumerate_sv(n).len();
            if object == CountObject::Asm {
                (a, s, "sv")
            } else {
                (s, a, "asm")
            }
        }
        CountObject::Dpp | CountObject::Nilp => {
            let d = enumerate_dpps(n as u32).count();
            let p = enumerate_nilps(n).count();
            if object == CountObject::Dpp {
                (d, p, "nilp")
            } else {
                (p, d, "dpp")
            }
        }
    };
    let name = object.to_possible_value().expect("named").get_name().to_string();
    if json {
        out!("{}", serde_json::json!({ "object": name, "n": n, "count": count }));
    } else {
        out!("{count}");
    }
    if count != other {
        eprintln!("refine: {name} count {count} differs from {paired} count {other}");
        return Err(Failure::Mismatch);
    }
    Ok(())
}

fn genfun(kind: ObjectKind, n: usize, out: Option<&Path>, use_cache: bool, caps: &Caps) -> Outcome {
    let cached = if use_cache { cache::load(kind, n) } else { None };
    let g = match cached {
        Some(g) => g,
        None => {
            let g = genfun_bruteforce(kind, n, caps.enumeration)?;
            if use_cache {
                if let Err(e) = cache::store(&g) {
                    eprintln!("refine: cache not written: {e}");
                }
            }
            g
        }
    };
    let text = serde_json::to_string(&g)? + "\n";
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parse a file holding one object or an array of them, apply `f` to each,
/// and print the results in the same shape.
fn each_object<T, U, F>(input: &Path, f: F) -> Outcome
where
    T: serde::de::DeserializeOwned,
    U: Serialize,
    F: Fn(&T) -> U,
{
    let text = fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
    let value: Value = serde_json::from_str(&text)?;
    let out = match value {
        Value::Array(items) => {
            let items: Vec<T> = items.into_iter().map(serde_json::from_value).collect::<Result<_, _>>()?;
            serde_json::to_string(&items.iter().map(f).collect::<Vec<_>>())?
        }
        v => serde_json::to_string(&f(&serde_json::from_value(v)?))?,
    };
    out!("{out}");
    Ok(())
}

fn stats(object: Kind, input: &Path) -> Outcome {
    match object {
        Kind::Asm => each_object(input, |a: &Asm| a.stats()),
        Kind::Dpp => each_object(input, |d: &Dpp| d.stats()),
    }
}

fn biject(from: Kind, to: Target, input: &Path) -> Outcome {
    match (from, to) {
        (Kind::Asm, Target::Sv) => each_object(input, SvConfig::from_asm),
        (Kind::Dpp, Target::Nilp) => each_object(input, PathFamily::from_dpp),
        _ => Err(Failure::Usage("available bijections are asm -> sv and dpp -> nilp".into())),
    }
}

fn table(what: TableKind, n: usize, csv_out: bool) -> Outcome {
    let rows: Vec<Vec<String>> = match what {
        TableKind::Ank => (0..n).map(|k| vec![k.to_string(), refined_count(n, k as i64).to_string()]).collect(),
        TableKind::Anij => {
            let t = refined_counts(n)?;
            let mut rows = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    rows.push(vec![i.to_string(), j.to_string(), t.a_nij.get(i, j).to_string()]);
                }
            }
            rows
        }
    };
    if csv_out {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        let header: &[&str] = match what {
            TableKind::Ank => &["k", "count"],
            TableKind::Anij => &["i", "j", "count"],
        };
        let csv_err = |e: csv::Error| Failure::Usage(e.to_string());
        w.write_record(header).map_err(csv_err)?;
        for r in &rows {
            w.write_record(r).map_err(csv_err)?;
        }
        w.flush()?;
    } else {
        let value = match what {
            TableKind::Ank => serde_json::json!({
                "n": n,
                "a_nk": rows.iter().map(|r| r[1].clone()).collect::<Vec<_>>(),
            }),
            TableKind::Anij => {
                let mut v = refined_counts(n)?.to_json();
                if let Value::Object(m) = &mut v {
                    m.remove("a_nk");
                }
                v
            }
        };
        out!("{value}");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    check: Check,
    n: Option<usize>,
    max_n: usize,
    seed: u64,
    points: Option<usize>,
    json: bool,
    timings: bool,
    caps: &Caps,
) -> Outcome {
    let selected: Vec<Check> = if check == Check::All { REGISTRY.to_vec() } else { vec![check] };
    let mut reports = Vec::new();
    for c in selected {
        let orders: Vec<usize> = match (c, n) {
            (Check::Dj, _) => vec![1],
            (_, Some(n)) if check != Check::All => vec![n],
            (_, Some(n)) => vec![n].into_iter().filter(|&n| c.applies(n)).collect(),
            (_, None) => (1..=max_n.min(c.max_order(caps))).filter(|&n| c.applies(n)).collect(),
        };
        if orders.is_empty() && check != Check::All {
            return Err(Failure::Usage(format!("no order up to {max_n} applies to {}", c.name())));
        }
        for order in orders {
            let r = checks::report(c, order, seed, points, caps, timings)?;
            if !json {
                out!("{}", r.line());
            }
            reports.push(r);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if json {
        out!("{}", serde_json::to_string(&reports)?);
    } else {
        out!("{} of {} passed", reports.len() - failed, reports.len());
    }
    if failed > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}
