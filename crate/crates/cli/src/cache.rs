//! On-disk cache of generating functions, keyed by kind, order and format
//! version.

use std::fs;
use std::path::PathBuf;

use refine_core::{GenFun, ObjectKind};

const FORMAT_VERSION: u32 = 1;

/// `$REFINE_CACHE_DIR`, else the platform cache directory plus `refine`.
pub fn dir() -> Option<PathBuf> {
    match std::env::var_os("REFINE_CACHE_DIR") {
        Some(d) if !d.is_empty() => Some(PathBuf::from(d)),
        _ => dirs::cache_dir().map(|d| d.join("refine")),
    }
}

fn path(kind: ObjectKind, n: usize) -> Option<PathBuf> {
    let kind = kind.name().to_ascii_lowercase();
    dir().map(|d| d.join(format!("genfun-v{FORMAT_VERSION}-{kind}-{n}.json")))
}

/// A cached entry whose header matches; anything unreadable is a miss.
pub fn load(kind: ObjectKind, n: usize) -> Option<GenFun> {
    let text = fs::read_to_string(path(kind, n)?).ok()?;
    let g: GenFun = serde_json::from_str(&text).ok()?;
    (g.kind == kind && g.n == n).then_some(g)
}

pub fn store(g: &GenFun) -> std::io::Result<()> {
    let p = path(g.kind, g.n).ok_or_else(|| std::io::Error::other("no cache directory"))?;
    if let Some(parent) = p.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = p.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(g)? + "\n")?;
    fs::rename(tmp, p)
}
