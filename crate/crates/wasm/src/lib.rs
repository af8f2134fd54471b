//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; the pure `*_json` functions carry the
//! logic so they can be tested natively.

use std::collections::BTreeSet;

use lmc_core::codec::{encode, index_point, Message, Symbol};
use lmc_core::lifting::{
    enumerate_good, good_count_lower_bound, is_good_fast, is_good_oracle, rate_lower_bound, redundancy_upper_bound,
    type_r_monomials, CodeParams, FastVerdict, Mode,
};
use lmc_core::repair::{make_repair_plan, repair_erasures_logged};
use lmc_core::FieldElem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest field the grid view classifies with the exact oracle.
pub const GRID_MAX_ELL: u32 = 5;
/// Largest field the repair demo encodes.
pub const DEMO_MAX_ELL: u32 = 5;

type Res = Result<Value, String>;

fn params(ell: u32, ell_r: u32, ell_s: u32) -> Result<CodeParams, String> {
    CodeParams::new(ell, ell_r, ell_s).map_err(|e| e.to_string())
}

pub fn params_json(ell: u32, ell_r: u32, ell_s: u32) -> Res {
    let p = params(ell, ell_r, ell_s)?;
    Ok(json!({
        "params": p.summary(),
        "alphabet_bits": p.symbol_width() * ell as usize,
        "bounds": {
            "good_count_lower_bound": good_count_lower_bound(&p),
            "rate_lower_bound": rate_lower_bound(&p),
            "redundancy_upper_bound": redundancy_upper_bound(&p),
        },
    }))
}

/// Classification of every type-r monomial: `"good"` (fast certificate),
/// `"oracle"` (good, found only by the oracle) or `"bad"`.
pub fn grid_json(ell: u32, ell_r: u32, ell_s: u32) -> Res {
    if ell > GRID_MAX_ELL {
        return Err(format!("grid view is limited to ell <= {GRID_MAX_ELL}"));
    }
    let p = params(ell, ell_r, ell_s)?;
    let mut cells = Vec::new();
    let (mut fast, mut oracle) = (0, 0);
    for m in type_r_monomials(&p) {
        let certified = is_good_fast(m, &p).map_err(|e| e.to_string())? == FastVerdict::CertifiedGood;
        let good = certified || is_good_oracle(m, &p).map_err(|e| e.to_string())?;
        fast += certified as usize;
        oracle += good as usize;
        let class = match (certified, good) {
            (true, _) => "good",
            (false, true) => "oracle",
            _ => "bad",
        };
        cells.push(json!([m.a, m.b, class]));
    }
    Ok(json!({
        "params": p.summary(),
        "extent": p.q() * p.r(),
        "fast_count": fast,
        "oracle_count": oracle,
        "bound": good_count_lower_bound(&p),
        "cells": cells,
    }))
}

/// Encodes a seeded random message, erases `points`, and repairs them.
pub fn repair_demo_json(ell: u32, ell_r: u32, seed: u64, points: &[(u16, u16)]) -> Res {
    if ell > DEMO_MAX_ELL {
        return Err(format!("demo is limited to ell <= {DEMO_MAX_ELL}"));
    }
    let p = params(ell, ell_r, ell_r)?;
    let q = p.q();
    let f = p.field();
    let mut erased = BTreeSet::new();
    for &(x, y) in points {
        if x as usize >= q || y as usize >= q {
            return Err(format!("point ({x}, {y}) outside the {q}x{q} grid"));
        }
        erased.insert((FieldElem(x), FieldElem(y)));
    }
    let gs = enumerate_good(&p, Mode::Fast);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let msg = Message::new(
        (0..gs.len())
            .map(|_| FieldElem(rng.gen_range(0..f.order()) as u16))
            .collect(),
    );
    let cw = encode(&msg, &gs, &p).map_err(|e| e.to_string())?;
    let mut damaged = cw.clone();
    for &pt in &erased {
        damaged.set_symbol(pt, Symbol::zero(p.symbol_width()));
    }
    let (fixed, log) = repair_erasures_logged(&damaged, &erased, &p, true).map_err(|e| e.to_string())?;
    // Lines used for each erased point, so the page can draw them.
    let groups: Vec<Value> = log
        .iter()
        .map(|entry| {
            let pt = (FieldElem(entry.point.0), FieldElem(entry.point.1));
            let plan = make_repair_plan(pt, &p);
            let support: Vec<_> = plan.groups()[entry.group]
                .support(f, pt)
                .into_iter()
                .map(|(x, y)| [x.value(), y.value()])
                .collect();
            json!({ "point": entry.point, "group": entry.group, "agreeing_groups": entry.agreeing_groups, "support": support })
        })
        .collect();
    let values: Vec<_> = (0..p.length())
        .map(|i| cw.symbol(index_point(q, i)).as_slice()[0].value())
        .collect();
    Ok(json!({
        "params": p.summary(),
        "prng": { "name": "chacha8", "seed": seed },
        "message_elements": gs.len(),
        "values": values,
        "repairs": groups,
        "exact": fixed == cw,
    }))
}

fn to_js(r: Res) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn params_report(ell: u32, ell_r: u32, ell_s: u32) -> Result<String, JsValue> {
    to_js(params_json(ell, ell_r, ell_s))
}

#[wasm_bindgen]
pub fn good_grid(ell: u32, ell_r: u32, ell_s: u32) -> Result<String, JsValue> {
    to_js(grid_json(ell, ell_r, ell_s))
}

/// `coords` is a flat list `[x0, y0, x1, y1, ...]`.
#[wasm_bindgen]
pub fn repair_demo(ell: u32, ell_r: u32, seed: u64, coords: Vec<u16>) -> Result<String, JsValue> {
    let points: Vec<_> = coords.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    to_js(repair_demo_json(ell, ell_r, seed, &points))
}
