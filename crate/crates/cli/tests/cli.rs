use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmc"))
        .args(args)
        .output()
        .expect("spawn lmc")
}

fn json_ok(args: &[&str]) -> Value {
    let out = lmc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

#[test]
fn params_report() {
    let r = json_ok(&["params", "--ell", "3", "--ell-r", "1"]);
    let pr = &r["params"];
    assert_eq!(
        (pr["q"].as_u64(), pr["r"].as_u64(), pr["t"].as_u64()),
        (Some(8), Some(2), Some(4))
    );
    assert_eq!(
        (pr["length"].as_u64(), pr["symbol_width"].as_u64()),
        (Some(64), Some(3))
    );
    let r = json_ok(&["params", "--ell", "4", "--ell-r", "1"]);
    let b = &r["bounds"][0];
    assert_eq!(b["name"], "good_count_lower_bound");
    assert_eq!(b["value"].as_f64(), Some(120.0));
    assert!(r["bounds"].as_array().unwrap().iter().all(|b| b["source"].is_string()));
}

#[test]
fn vacuous_bounds_are_flagged() {
    let r = json_ok(&["params", "--ell", "3", "--ell-r", "1"]);
    let b = &r["bounds"][0];
    assert_eq!(b["vacuous"], true);
    assert_eq!(b["status"], "vacuous");
}

#[test]
fn invalid_params_rejected() {
    let out = lmc(&["params", "--ell", "2", "--ell-r", "2"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("ell_r"));
}

#[test]
fn good_counts_and_list() {
    let r = json_ok(&["good", "--ell", "4", "--ell-r", "1", "--list"]);
    let (fast, oracle) = (
        r["counts"]["fast"].as_u64().unwrap(),
        r["counts"]["oracle"].as_u64().unwrap(),
    );
    assert!(fast <= oracle && oracle >= 120);
    let list = r["monomials"].as_array().unwrap();
    assert_eq!(list.len() as u64, oracle);
    let degs: Vec<u64> = list
        .iter()
        .map(|m| m[0].as_u64().unwrap() + m[1].as_u64().unwrap())
        .collect();
    assert!(degs.windows(2).all(|w| w[0] <= w[1]), "graded order");
}

#[test]
fn oracle_budget_guard() {
    let out = lmc(&["good", "--ell", "9", "--ell-r", "1", "--mode", "oracle"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn encode_decode_roundtrip_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, m) = (p(dir.path(), "a.lmc"), p(dir.path(), "b.lmc"), p(dir.path(), "a.msg"));
    let r = json_ok(&["encode", "--ell", "3", "--ell-r", "1", "--random", "42", "--out", &a]);
    assert_eq!(r["prng"]["name"], "chacha8");
    assert_eq!(r["prng"]["seed"], 42);
    json_ok(&["encode", "--ell", "3", "--ell-r", "1", "--random", "42", "--out", &b]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    json_ok(&["decode", "--in", &a, "--out", &m]);
    json_ok(&["encode", "--ell", "3", "--ell-r", "1", "--msg", &m, "--out", &b]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn zero_message_gives_zero_codeword() {
    let dir = tempfile::tempdir().unwrap();
    let r = json_ok(&["good", "--ell", "3", "--ell-r", "1", "--mode", "fast"]);
    let k = r["counts"]["fast"].as_u64().unwrap() as usize;
    let (msg, out) = (p(dir.path(), "zero.msg"), p(dir.path(), "zero.lmc"));
    std::fs::write(&msg, vec![0u8; k]).unwrap();
    json_ok(&["encode", "--ell", "3", "--ell-r", "1", "--msg", &msg, "--out", &out]);
    let bytes = std::fs::read(&out).unwrap();
    assert_eq!(bytes.len(), 8 + 64 * 3);
    assert_eq!(&bytes[..8], b"LMC1\x03\x01\x01\x00");
    assert!(bytes[8..].iter().all(|&b| b == 0));

    std::fs::write(&msg, vec![0u8; k - 1]).unwrap();
    let bad = lmc(&["encode", "--ell", "3", "--ell-r", "1", "--msg", &msg, "--out", &out]);
    assert!(!bad.status.success());
}

#[test]
fn repair_cases() {
    let dir = tempfile::tempdir().unwrap();
    let (a, out) = (p(dir.path(), "a.lmc"), p(dir.path(), "r.lmc"));
    json_ok(&["encode", "--ell", "3", "--ell-r", "1", "--random", "5", "--out", &a]);

    json_ok(&["repair", "--in", &a, "--out", &out]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&out).unwrap());

    let r = json_ok(&[
        "repair",
        "--in",
        &a,
        "--erase-random",
        "3",
        "--seed",
        "9",
        "--cross-check",
        "--out",
        &out,
    ]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&out).unwrap());
    let repairs = r["repairs"].as_array().unwrap();
    assert_eq!(repairs.len(), 3);
    assert!(repairs.iter().all(|x| x["agreeing_groups"].as_u64().unwrap() >= 1));
    assert_eq!(r["prng"]["seed"], 9);

    let r = json_ok(&["repair", "--in", &a, "--erase", "0,0;0,1;5,3", "--out", &out]);
    assert_eq!(r["erasures"], 3);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&out).unwrap());

    let list = p(dir.path(), "erase.txt");
    std::fs::write(&list, "1,2\n3,4\n").unwrap();
    json_ok(&["repair", "--in", &a, "--erase-file", &list, "--out", &out]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&out).unwrap());

    let too_many = lmc(&["repair", "--in", &a, "--erase", "0,0;1,1;2,2;3,3", "--out", &out]);
    assert!(!too_many.status.success());
    assert!(String::from_utf8_lossy(&too_many.stderr).contains("capacity"));

    for bad in ["8,0", "1,1;1,1", "1"] {
        assert!(
            !lmc(&["repair", "--in", &a, "--erase", bad, "--out", &out])
                .status
                .success(),
            "{bad}"
        );
    }
}

#[test]
fn cross_check_detects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let (a, out) = (p(dir.path(), "a.lmc"), p(dir.path(), "r.lmc"));
    json_ok(&["encode", "--ell", "3", "--ell-r", "1", "--random", "5", "--out", &a]);
    let mut bytes = std::fs::read(&a).unwrap();
    // Corrupt a first-order slot of (2, 5). A value-only error would go
    // unnoticed here: its interpolated error term is a square, whose
    // derivative vanishes in characteristic 2, and (2, 5) is not on the
    // first line of its group.
    bytes[8 + (2 * 8 + 5) * 3 + 1] ^= 1;
    std::fs::write(&a, &bytes).unwrap();
    let r = lmc(&["repair", "--in", &a, "--erase", "0,0", "--cross-check", "--out", &out]);
    assert!(!r.status.success());
    assert!(String::from_utf8_lossy(&r.stderr).contains("codeword"));
}

#[test]
fn verify_suites() {
    for suite in ["field", "poly", "lifting", "repair", "dual"] {
        let r = json_ok(&["verify", "--suite", suite]);
        assert_eq!(r["passed"], true);
        assert!(r["checks"].as_array().unwrap().iter().all(|c| c["suite"] == suite));
    }
    assert!(!lmc(&["verify", "--suite", "bogus"]).status.success());
}

#[test]
fn thread_cap_is_reported() {
    let out = Command::new(env!("CARGO_BIN_EXE_lmc"))
        .args(["good", "--ell", "3", "--ell-r", "1", "--mode", "fast"])
        .env("LMC_THREADS", "1")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["threads"], 1);
    let bad = Command::new(env!("CARGO_BIN_EXE_lmc"))
        .args(["verify"])
        .env("LMC_THREADS", "zero")
        .output()
        .unwrap();
    assert!(!bad.status.success());
}
