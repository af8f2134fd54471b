mod report;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lmc_core::codec::{encode, point_index, Codeword, Message, MessageDecoder, Point};
use lmc_core::lifting::{code_dimension_exact, enumerate_good, CodeParams, Mode, MAX_EXACT_DIMENSION_Q};
use lmc_core::repair::repair_erasures_logged;
use lmc_core::verify::{self, Suite};
use lmc_core::FieldElem;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use report::{bounds, millis, params_json, print, threads_json, write_atomic, PRNG_NAME};

/// Oracle enumeration refuses more than this many monomial-line checks.
const ORACLE_BUDGET: u128 = 1 << 30;

#[derive(Parser)]
#[command(name = "lmc", version, about = "Bivariate lifted multiplicity codes over GF(2^l)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print derived parameters and bounds.
    Params(ParamArgs),
    /// Enumerate good monomials and compare with the bounds.
    Good(GoodArgs),
    /// Encode a message into an LMC1 codeword file.
    Encode(EncodeArgs),
    /// Recover the message from an LMC1 codeword file.
    Decode(DecodeArgs),
    /// Repair erased symbols of an LMC1 codeword file.
    Repair(RepairArgs),
    /// Run the built-in verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// q = 2^ell
    #[arg(long)]
    ell: u32,
    /// r = 2^ell_r
    #[arg(long = "ell-r")]
    ell_r: u32,
    /// s = 2^ell_s (default: ell_r, i.e. s = r)
    #[arg(long = "ell-s")]
    ell_s: Option<u32>,
}

impl ParamArgs {
    fn build(&self) -> Result<CodeParams> {
        Ok(CodeParams::new(self.ell, self.ell_r, self.ell_s.unwrap_or(self.ell_r))?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Oracle,
    Fast,
    Both,
}

#[derive(Args)]
struct GoodArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    /// Include the good monomials (graded-lex) in the report.
    #[arg(long)]
    list: bool,
    /// Also compute the exact code dimension (q <= 16).
    #[arg(long)]
    dimension: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisMode {
    Oracle,
    Fast,
}

impl From<BasisMode> for Mode {
    fn from(m: BasisMode) -> Mode {
        match m {
            BasisMode::Oracle => Mode::Oracle,
            BasisMode::Fast => Mode::Fast,
        }
    }
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Message file: little-endian field elements, one per good monomial.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    msg: Option<PathBuf>,
    /// Encode a random message drawn from this seed.
    #[arg(long)]
    random: Option<u64>,
    /// Good-monomial basis (must match at decode time).
    #[arg(long, value_enum, default_value = "fast")]
    basis: BasisMode,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "fast")]
    basis: BasisMode,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RepairArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Erased points as "x,y;x,y;..."
    #[arg(long, group = "erasures")]
    erase: Option<String>,
    /// Erase this many distinct random points (needs --seed).
    #[arg(long = "erase-random", group = "erasures", requires = "seed")]
    erase_random: Option<usize>,
    /// File of "x,y" pairs separated by newlines or ';'.
    #[arg(long = "erase-file", group = "erasures")]
    erase_file: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Recover with every clean group and require agreement.
    #[arg(long = "cross-check")]
    cross_check: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = ["all", "field", "poly", "lifting", "repair", "dual"])]
    suite: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let result = match cli.cmd {
        Cmd::Params(a) => cmd_params(&a),
        Cmd::Good(a) => cmd_good(&a),
        Cmd::Encode(a) => cmd_encode(&a),
        Cmd::Decode(a) => cmd_decode(&a),
        Cmd::Repair(a) => cmd_repair(&a),
        Cmd::Verify(a) => cmd_verify(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Caps the global rayon pool at `LMC_THREADS`.
fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("LMC_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .with_context(|| format!("LMC_THREADS={v:?} is not a number"))?;
        ensure!(n > 0, "LMC_THREADS must be positive");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn cmd_params(a: &ParamArgs) -> Result<ExitCode> {
    let p = a.build()?;
    print(&json!({
        "command": "params",
        "params": params_json(&p),
        "bounds": bounds(&p, None),
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_good(a: &GoodArgs) -> Result<ExitCode> {
    let p = a.params.build()?;
    let mut timings = serde_json::Map::new();
    let mut counts = serde_json::Map::new();
    let mut listed = None;

    let fast = if matches!(a.mode, ModeArg::Fast | ModeArg::Both) {
        let t = Instant::now();
        let gs = enumerate_good(&p, Mode::Fast);
        timings.insert("fast".into(), json!(millis(t.elapsed())));
        counts.insert("fast".into(), json!(gs.len()));
        Some(gs)
    } else {
        None
    };
    let oracle = if matches!(a.mode, ModeArg::Oracle | ModeArg::Both) {
        let checks = p.type_r_count() as u128 * p.length() as u128;
        ensure!(
            checks <= ORACLE_BUDGET,
            "oracle enumeration needs {checks} monomial-line checks, over the budget of 2^30; use --mode fast"
        );
        let t = Instant::now();
        let gs = enumerate_good(&p, Mode::Oracle);
        timings.insert("oracle".into(), json!(millis(t.elapsed())));
        counts.insert("oracle".into(), json!(gs.len()));
        Some(gs)
    } else {
        None
    };
    if let (Some(f), Some(o)) = (&fast, &oracle) {
        ensure!(
            f.monomials().iter().all(|&m| o.contains(m)),
            "internal error: fast certifier accepted a monomial the oracle rejects"
        );
    }
    // The oracle count is exact; the fast count is a certified lower bound.
    let best = oracle.as_ref().or(fast.as_ref()).expect("at least one mode ran");
    if a.list {
        listed = Some(best.monomials().iter().map(|m| [m.a, m.b]).collect::<Vec<_>>());
    }
    let dimension = if a.dimension {
        ensure!(
            p.q() <= MAX_EXACT_DIMENSION_Q,
            "exact dimension is limited to q <= {MAX_EXACT_DIMENSION_Q}"
        );
        let t = Instant::now();
        let dim = code_dimension_exact(&p)?;
        timings.insert("dimension".into(), json!(millis(t.elapsed())));
        Some(dim)
    } else {
        None
    };
    print(&json!({
        "command": "good",
        "params": params_json(&p),
        "counts": counts,
        "measured_rate": best.len() as f64 / p.type_r_count() as f64,
        "rate_from": best.mode(),
        "dimension": dimension,
        "bounds": bounds(&p, Some(best.len())),
        "monomials": listed,
        "threads": threads_json(),
        "timings_ms": timings,
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_encode(a: &EncodeArgs) -> Result<ExitCode> {
    let p = a.params.build()?;
    let f = p.field();
    let t = Instant::now();
    let gs = enumerate_good(&p, a.basis.into());
    let msg = match (&a.msg, a.random) {
        (Some(path), _) => {
            let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let m = Message::from_bytes(f, &bytes)?;
            ensure!(
                m.len() == gs.len(),
                "message has {} elements, the code has dimension {} ({} bytes)",
                m.len(),
                gs.len(),
                gs.len() * f.elem_bytes()
            );
            m
        }
        (None, Some(seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Message::new(
                (0..gs.len())
                    .map(|_| FieldElem(rng.gen_range(0..f.order()) as u16))
                    .collect(),
            )
        }
        (None, None) => bail!("one of --msg or --random is required"),
    };
    let cw = encode(&msg, &gs, &p)?;
    let bytes = cw.to_bytes(&p);
    write_atomic(&a.out, &bytes)?;
    print(&json!({
        "command": "encode",
        "params": params_json(&p),
        "basis": Mode::from(a.basis),
        "message_elements": msg.len(),
        "prng": a.random.map(|seed| json!({ "name": PRNG_NAME, "seed": seed })),
        "out": a.out,
        "bytes": bytes.len(),
        "threads": threads_json(),
        "timings_ms": { "encode": millis(t.elapsed()) },
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn read_codeword(path: &Path) -> Result<(CodeParams, Codeword)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    Codeword::from_bytes(&bytes).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_decode(a: &DecodeArgs) -> Result<ExitCode> {
    let (p, cw) = read_codeword(&a.input)?;
    let t = Instant::now();
    let gs = enumerate_good(&p, a.basis.into());
    let msg = MessageDecoder::new(&gs, &p)?.recover(&cw)?;
    write_atomic(&a.out, &msg.to_bytes(p.field()))?;
    print(&json!({
        "command": "decode",
        "params": params_json(&p),
        "basis": Mode::from(a.basis),
        "message_elements": msg.len(),
        "out": a.out,
        "timings_ms": { "decode": millis(t.elapsed()) },
    }))?;
    Ok(ExitCode::SUCCESS)
}

/// Parses `"x,y;x,y"` (newlines also separate), checking range and duplicates.
fn parse_points(spec: &str, q: usize) -> Result<BTreeSet<Point>> {
    let mut out = BTreeSet::new();
    for item in spec.split([';', '\n']).map(str::trim).filter(|s| !s.is_empty()) {
        let (x, y) = item
            .split_once(',')
            .with_context(|| format!("erasure {item:?} is not of the form x,y"))?;
        let parse = |v: &str| -> Result<u16> {
            let n: usize = v.trim().parse().with_context(|| format!("bad coordinate {v:?}"))?;
            ensure!(n < q, "coordinate {n} outside [0, {q})");
            Ok(n as u16)
        };
        let pt = (FieldElem(parse(x)?), FieldElem(parse(y)?));
        ensure!(out.insert(pt), "duplicate erasure {item}");
    }
    Ok(out)
}

fn cmd_repair(a: &RepairArgs) -> Result<ExitCode> {
    let (p, cw) = read_codeword(&a.input)?;
    let q = p.q();
    let erased = match (&a.erase, a.erase_random, &a.erase_file) {
        (Some(s), _, _) => parse_points(s, q)?,
        (_, Some(n), _) => {
            ensure!(n <= p.length(), "cannot erase {n} of {} points", p.length());
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed.expect("clap enforces --seed"));
            sample(&mut rng, p.length(), n)
                .into_iter()
                .map(|i| lmc_core::codec::index_point(q, i))
                .collect()
        }
        (_, _, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_points(&text, q)?
        }
        _ => BTreeSet::new(),
    };
    // Out-of-band erasures: blank the listed symbols so stale data cannot leak in.
    let mut damaged = cw.clone();
    for &pt in &erased {
        damaged.set_symbol(pt, lmc_core::Symbol::zero(p.symbol_width()));
    }
    let t = Instant::now();
    let (fixed, log) = repair_erasures_logged(&damaged, &erased, &p, a.cross_check)?;
    let elapsed = t.elapsed();
    write_atomic(&a.out, &fixed.to_bytes(&p))?;
    let mut points: Vec<_> = erased.iter().map(|&pt| point_index(q, pt)).collect();
    points.sort_unstable();
    print(&json!({
        "command": "repair",
        "params": params_json(&p),
        "erasures": erased.len(),
        "capacity": p.t() - 1,
        "prng": a.erase_random.map(|_| json!({ "name": PRNG_NAME, "seed": a.seed })),
        "cross_check": a.cross_check,
        "repairs": log,
        "unchanged_outside_erasures": fixed.symbols().iter().enumerate()
            .all(|(i, s)| points.binary_search(&i).is_ok() || s == &cw.symbols()[i]),
        "out": a.out,
        "threads": threads_json(),
        "timings_ms": { "repair": millis(elapsed) },
    }))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: &VerifyArgs) -> Result<ExitCode> {
    let suite: Suite = a.suite.parse()?;
    let t = Instant::now();
    let checks = verify::run(suite);
    let passed = checks.iter().all(|c| c.passed);
    print(&json!({
        "command": "verify",
        "suite": suite,
        "passed": passed,
        "checks": checks,
        "timings_ms": { "verify": millis(t.elapsed()) },
    }))?;
    if let Some(first) = checks.iter().find(|c| !c.passed) {
        eprintln!("error: check {}/{} failed: {}", first.suite, first.name, first.detail);
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}
