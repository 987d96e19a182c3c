use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn refine(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_refine")).args(args).env("REFINE_CACHE_DIR", cache).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counts() {
    let dir = tempfile::tempdir().unwrap();
    let o = refine(dir.path(), &["count", "--object", "asm", "--n", "3"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "7"));
    let o = refine(dir.path(), &["count", "--object", "dpp", "--n", "1"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = refine(dir.path(), &["count", "--object", "asm", "--n", "6", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 7436);
    for object in ["sv", "nilp"] {
        let o = refine(dir.path(), &["count", "--object", object, "--n", "4"]);
        assert_eq!(stdout(&o).trim(), "42", "{object}");
    }
}

#[test]
fn cap_and_usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(refine(dir.path(), &["count", "--object", "asm", "--n", "7"]).status.code(), Some(2));
    assert_eq!(refine(dir.path(), &["count", "--object", "asm", "--n", "0"]).status.code(), Some(2));
    assert_eq!(refine(dir.path(), &["verify", "bogus-name"]).status.code(), Some(2));
    assert_eq!(refine(dir.path(), &["verify", "star-invariant", "--n", "2"]).status.code(), Some(2));
    let o = refine(dir.path(), &["--enum-cap", "7", "count", "--object", "asm", "--n", "7"]);
    assert_eq!(stdout(&o).trim(), "218348");
}

#[test]
fn genfun_files_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let (a, b, d) = (dir.path().join("a.json"), dir.path().join("b.json"), dir.path().join("d.json"));
    let run = |kind: &str, out: &Path, extra: &[&str]| {
        let mut args = vec!["genfun", "--object", kind, "--n", "3", "--out", out.to_str().unwrap()];
        args.extend_from_slice(extra);
        assert_eq!(refine(&cache, &args).status.code(), Some(0));
        fs::read_to_string(out).unwrap()
    };
    let first = run("asm", &a, &[]);
    assert!(cache.join("genfun-v1-asm-3.json").exists());
    let second = run("asm", &b, &[]);
    assert_eq!(first, second);
    assert_eq!(run("asm", &b, &["--no-cache"]), first);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["kind"], "ASM");
    assert_eq!(v["terms"].as_array().unwrap().len(), 7);
    let dpp = run("dpp", &d, &[]);
    assert_eq!(dpp.replacen("\"DPP\"", "\"ASM\"", 1), first);
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("genfun-v1-asm-2.json"), "{not json").unwrap();
    let o = refine(dir.path(), &["genfun", "--object", "asm", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with(r#"{"kind":"ASM","n":2,"#));
    let again = fs::read_to_string(dir.path().join("genfun-v1-asm-2.json")).unwrap();
    assert_eq!(again, stdout(&o));
}

#[test]
fn stats_and_bijections() {
    let dir = tempfile::tempdir().unwrap();
    let asm = dir.path().join("asm.json");
    fs::write(&asm, r#"{"n":3,"rows":[[0,1,0],[1,-1,1],[0,1,0]]}"#).unwrap();
    let o = refine(dir.path(), &["stats", "--object", "asm", "--input", asm.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["nu"].clone(), v["mu"].clone()), (1.into(), 1.into()));
    let o = refine(dir.path(), &["biject", "--from", "asm", "--to", "sv", "--input", asm.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["types"][1][1], 6);

    let dpps = dir.path().join("dpps.json");
    fs::write(&dpps, r#"[{"n":3,"rows":[[3,1]]},{"n":3,"rows":[]}]"#).unwrap();
    let o = refine(dir.path(), &["stats", "--object", "dpp", "--input", dpps.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["rho2"], 1);
    assert_eq!(v[1]["nu"], 0);
    let o = refine(dir.path(), &["biject", "--from", "dpp", "--to", "nilp", "--input", dpps.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["paths"][0]["steps"], "RDDR");
    assert_eq!(v[1]["paths"].as_array().unwrap().len(), 1);

    let o = refine(dir.path(), &["biject", "--from", "asm", "--to", "nilp", "--input", asm.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    fs::write(&asm, r#"{"n":2,"rows":[[1,1],[0,0]]}"#).unwrap();
    let o = refine(dir.path(), &["stats", "--object", "asm", "--input", asm.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = refine(dir.path(), &["table", "--what", "ank", "--n", "4", "--csv"]);
    assert_eq!(stdout(&o), "k,count\n0,7\n1,14\n2,14\n3,7\n");
    let o = refine(dir.path(), &["table", "--what", "anij", "--n", "3"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["a_n"], "7");
    assert_eq!(v["a_nij"][0], serde_json::json!(["1", "1", "0"]));
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = refine(dir.path(), &["verify", "theorem1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS theorem1 n=3"));
    let o = refine(dir.path(), &["verify", "ik", "--n", "3", "--points", "20", "--seed", "7", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["verdict"], "pass");
    assert_eq!(v[0]["cases"], 20);
    assert!(v[0].get("elapsed_ms").is_none());
    let o = refine(dir.path(), &["verify", "dj", "--points", "5", "--timings", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v[0]["elapsed_ms"].is_u64());
}

#[test]
fn verify_all_covers_the_registry_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = refine(dir.path(), &["verify", "all", "--max-n", "4", "--json"]);
    let b = refine(dir.path(), &["verify", "all", "--max-n", "4", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let names: std::collections::BTreeSet<&str> =
        v.as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 17);
    assert!(v.as_array().unwrap().iter().all(|r| r["verdict"] == "pass"));
}
