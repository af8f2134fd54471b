//! JSON report pieces shared by the subcommands.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use lmc_core::lifting::{good_count_lower_bound, rate_lower_bound, redundancy_upper_bound, CodeParams, ParamsSummary};
use serde::Serialize;
use serde_json::{json, Value};

/// PRNG recorded in every report that consumed randomness.
pub const PRNG_NAME: &str = "chacha8";

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The bound is negative (lower bounds) and therefore says nothing.
    Vacuous,
    /// No measured value to compare against.
    Unchecked,
    /// The formula assumes `s = r`.
    NotApplicable,
}

#[derive(Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub formula: &'static str,
    pub value: f64,
    pub measured: Option<f64>,
    pub vacuous: bool,
    pub status: Status,
}

fn lower(
    name: &'static str,
    source: &'static str,
    formula: &'static str,
    value: f64,
    measured: Option<f64>,
) -> BoundEntry {
    let vacuous = value < 0.0;
    let status = match measured {
        _ if vacuous => Status::Vacuous,
        None => Status::Unchecked,
        Some(m) if m >= value => Status::Pass,
        Some(_) => Status::Fail,
    };
    BoundEntry {
        name,
        source,
        formula,
        value,
        measured,
        vacuous,
        status,
    }
}

/// Bounds for `p`, compared against a measured good-monomial count if known.
pub fn bounds(p: &CodeParams, good_count: Option<usize>) -> Vec<BoundEntry> {
    let n = p.type_r_count() as f64;
    let rate = good_count.map(|k| k as f64 / n);
    let redundancy_applies = p.s() == p.r();
    let measured_redundancy = good_count.map(|k| p.length() as f64 - k as f64 / p.symbol_width() as f64);
    let red_value = redundancy_upper_bound(p);
    let red_status = match measured_redundancy {
        _ if !redundancy_applies => Status::NotApplicable,
        None => Status::Unchecked,
        Some(m) if m <= red_value => Status::Pass,
        Some(_) => Status::Fail,
    };
    vec![
        lower(
            "good_count_lower_bound",
            "good-count bound",
            "C(r+1,2)*4^l - 3*r*s^log2(4/3)*3^l",
            good_count_lower_bound(p),
            good_count.map(|k| k as f64),
        ),
        lower(
            "rate_lower_bound",
            "rate bound",
            "1 - 6/r * s^log2(4/3) * q^log2(3/4)",
            rate_lower_bound(p),
            rate,
        ),
        BoundEntry {
            name: "redundancy_upper_bound",
            source: "redundancy bound",
            formula: "3*r^log2(8/3)*q^log2(3) / C(r+1,2)   (symbols, s = r)",
            value: red_value,
            measured: measured_redundancy,
            vacuous: false,
            status: red_status,
        },
    ]
}

pub fn params_json(p: &CodeParams) -> Value {
    let ParamsSummary {
        ell,
        ell_r,
        ell_s,
        q,
        r,
        s,
        d,
        t,
        length,
        symbol_width,
    } = p.summary();
    json!({
        "ell": ell, "ell_r": ell_r, "ell_s": ell_s,
        "q": q, "r": r, "s": s, "d": d, "t": t,
        "length": length,
        "symbol_width": symbol_width,
        "alphabet_bits": symbol_width * ell as usize,
        "type_r_monomials": p.type_r_count(),
        "repairable": ell_s >= ell_r,
    })
}

pub fn threads_json() -> Value {
    json!(rayon::current_num_threads())
}

pub fn print(report: &Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out)?;
    Ok(())
}

/// Writes `bytes` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating temp file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file().set_permissions(std::fs::Permissions::from_mode(0o644))?;
    }
    tmp.persist(path)
        .with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

pub fn millis(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}
