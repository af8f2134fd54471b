//! Self-check suites runnable from the CLI: small exhaustive checks that
//! compare fast paths with definitional oracles.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;

use crate::codec::{encode, index_point, recover_message, Message};
use crate::dualcheck::{dual_span_dim, lucas_support_size};
use crate::error::{Error, Result};
use crate::gf::{binom_mod2, FieldContext, FieldElem};
use crate::lifting::{
    code_dimension_exact, enumerate_good, is_good_fast, is_good_oracle, is_in_code, type_r_monomials, CodeParams,
    FastVerdict, Mode, Monomial,
};
use crate::poly::{hasse_bi, hasse_uni, reduce_canonical, BiPoly, MultiIndex, UniPoly};
use crate::repair::{make_repair_plan, recover_symbol, repair_erasures};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Field,
    Poly,
    Lifting,
    Repair,
    Dual,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "field" => Suite::Field,
            "poly" => Suite::Poly,
            "lifting" => Suite::Lifting,
            "repair" => Suite::Repair,
            "dual" => Suite::Dual,
            "all" => Suite::All,
            other => return Err(Error::InvalidParams(format!("unknown suite '{other}'"))),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &'static str, name: &'static str, r: Result<String, String>) -> Check {
    match r {
        Ok(detail) => Check {
            suite,
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            suite,
            name,
            passed: false,
            detail,
        },
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

pub fn run(suite: Suite) -> Vec<Check> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Field {
        out.extend(field_checks());
    }
    if all || suite == Suite::Poly {
        out.extend(poly_checks());
    }
    if all || suite == Suite::Lifting {
        out.extend(lifting_checks());
    }
    if all || suite == Suite::Repair {
        out.extend(repair_checks());
    }
    if all || suite == Suite::Dual {
        out.extend(dual_checks());
    }
    out
}

fn field_checks() -> Vec<Check> {
    let inverses = (|| {
        for ell in 1..=8 {
            let f = FieldContext::new(ell).map_err(err_str)?;
            for x in f.elements().skip(1) {
                if f.mul(x, f.inv(x).map_err(err_str)?) != FieldElem::ONE {
                    return Err(format!("x * x^-1 != 1 for x = {} in GF(2^{ell})", x.value()));
                }
            }
        }
        Ok("x * x^-1 = 1 for all nonzero x, l = 1..8".into())
    })();
    let generator = (|| {
        for ell in 1..=16 {
            let f = FieldContext::new(ell).map_err(err_str)?;
            let g = f.generator();
            let n = (f.order() - 1) as u64;
            let distinct: BTreeSet<u16> = (0..n).map(|k| f.pow(g, k).value()).collect();
            if distinct.len() as u64 != n {
                return Err(format!("generator of GF(2^{ell}) has order < {n}"));
            }
        }
        Ok("generator has full multiplicative order, l = 1..16".into())
    })();
    let lucas = (|| {
        let mut row = vec![1u8];
        for a in 0..128u64 {
            for (b, &v) in row.iter().enumerate() {
                if binom_mod2(a, b as u64) != v {
                    return Err(format!("C({a},{b}) mod 2 mismatch"));
                }
            }
            let mut next = vec![1u8; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] ^ row[k];
            }
            row = next;
        }
        Ok("bitmask rule agrees with Pascal's triangle for a < 128".into())
    })();
    vec![
        check("field", "inverse", inverses),
        check("field", "generator", generator),
        check("field", "binom_mod2", lucas),
    ]
}

fn poly_checks() -> Vec<Check> {
    let reduction = (|| {
        let f = FieldContext::new(3).map_err(err_str)?;
        for r in [1usize, 2, 4] {
            let modulus = UniPoly::frobenius_minus_identity(8).pow(&f, r as u32);
            for deg in 0..3 * 8 * r {
                let m = UniPoly::monomial(FieldElem::ONE, deg);
                let red = reduce_canonical(&m, 8, r);
                if red.degree().unwrap_or(0) >= 8 * r {
                    return Err(format!("X^{deg} reduced to degree >= qr for r = {r}"));
                }
                // X^deg - red must be divisible by (X^q - X)^r.
                let mut rem = m.add(&red).into_coeffs();
                let mc = modulus.coeffs();
                let md = mc.len() - 1;
                while rem.len() > md {
                    let top = *rem.last().unwrap();
                    let shift = rem.len() - 1 - md;
                    if !top.is_zero() {
                        for (k, &c) in mc.iter().enumerate() {
                            rem[shift + k] += f.mul(top, c);
                        }
                    }
                    rem.pop();
                }
                if rem.iter().any(|c| !c.is_zero()) {
                    return Err(format!("X^{deg} - reduce(X^{deg}) not divisible, r = {r}"));
                }
            }
        }
        Ok("canonical reduction matches long division at q = 8, r in {1,2,4}".into())
    })();
    let hasse = (|| {
        let p = BiPoly::from_terms([((3, 2), FieldElem(2)), ((1, 1), FieldElem(3)), ((0, 4), FieldElem(1))]);
        // Pure-order derivatives commute: D^(1,0) D^(0,1) = D^(1,1).
        let lhs = hasse_bi(&hasse_bi(&p, MultiIndex::new(1, 0)), MultiIndex::new(0, 1));
        let rhs = hasse_bi(&p, MultiIndex::new(1, 1));
        if lhs != rhs {
            return Err("D^(1,0) D^(0,1) != D^(1,1)".into());
        }
        Ok("mixed Hasse derivative composes as expected".into())
    })();
    let frobenius = (|| {
        for ell in [2u32, 3] {
            let f = FieldContext::new(ell).map_err(err_str)?;
            let q = f.order();
            let base = UniPoly::frobenius_minus_identity(q);
            for r in [1u32, 2, 4] {
                let pr = base.pow(&f, r);
                for i in 0..q {
                    let want = if i as u32 <= r {
                        base.pow(&f, r - i as u32)
                            .scale(&f, FieldElem(binom_mod2(r as u64, i as u64) as u16))
                    } else {
                        UniPoly::zero()
                    };
                    if hasse_uni(&pr, i) != want {
                        return Err(format!("D^{i} (X^{q} - X)^{r} mismatch"));
                    }
                }
            }
        }
        Ok("D^i (X^q - X)^r = C(r,i) (X^q - X)^(r-i), q in {4,8}, r in {1,2,4}".into())
    })();
    vec![
        check("poly", "reduction", reduction),
        check("poly", "hasse", hasse),
        check("poly", "frobenius_derivatives", frobenius),
    ]
}

fn lifting_checks() -> Vec<Check> {
    let fast_sound = (|| {
        let mut certified = 0usize;
        for ell in 2..=3 {
            for ell_r in 0..ell {
                for ell_s in 0..=ell {
                    let p = CodeParams::new(ell, ell_r, ell_s).map_err(err_str)?;
                    for m in type_r_monomials(&p) {
                        if is_good_fast(m, &p).map_err(err_str)? == FastVerdict::CertifiedGood {
                            certified += 1;
                            if !is_good_oracle(m, &p).map_err(err_str)? {
                                return Err(format!(
                                    "fast certifier accepted bad X^{}Y^{} at {:?}",
                                    m.a,
                                    m.b,
                                    p.summary()
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(format!("{certified} fast certificates confirmed by the oracle"))
    })();
    let dimension = (|| {
        let p = CodeParams::new(2, 1, 1).map_err(err_str)?;
        let good = enumerate_good(&p, Mode::Oracle).len();
        let dim = code_dimension_exact(&p).map_err(err_str)?;
        if dim < good {
            return Err(format!("dimension {dim} < good count {good}"));
        }
        Ok(format!("q=4 r=2 s=2: {good} good monomials, dimension {dim}"))
    })();
    let bad_pair = (|| {
        let p = CodeParams::new(3, 1, 0).map_err(err_str)?;
        let bad = |a, b| is_good_oracle(Monomial::new(a, b), &p).map(|g| !g).map_err(err_str);
        let sum = BiPoly::from_terms([((14, 1), FieldElem::ONE), ((7, 8), FieldElem::ONE)]);
        let in_code = is_in_code(&sum, &p).map_err(err_str)?;
        let good = enumerate_good(&p, Mode::Oracle).len();
        let dim = code_dimension_exact(&p).map_err(err_str)?;
        let detail = format!("q=8 r=2 d=15: X^14Y + X^7Y^8 in code = {in_code}, dimension {dim} vs good {good}");
        if bad(14, 1)? && bad(7, 8)? && in_code && dim > good {
            Ok(detail)
        } else {
            Err(detail)
        }
    })();
    vec![
        check("lifting", "fast_soundness", fast_sound),
        check("lifting", "dimension", dimension),
        check("lifting", "bad_pair_sum", bad_pair),
    ]
}

fn repair_checks() -> Vec<Check> {
    let roundtrip = (|| {
        let p = CodeParams::new(3, 1, 1).map_err(err_str)?;
        let gs = enumerate_good(&p, Mode::Fast);
        let msg = Message::new((0..gs.len()).map(|k| FieldElem(((k * 5 + 3) % 8) as u16)).collect());
        let cw = encode(&msg, &gs, &p).map_err(err_str)?;
        if recover_message(&cw, &gs, &p).map_err(err_str)? != msg {
            return Err("decode(encode(m)) != m".into());
        }
        let none = BTreeSet::new();
        for idx in 0..p.length() {
            let pt = index_point(p.q(), idx);
            let plan = make_repair_plan(pt, &p);
            for g in plan.groups() {
                let sym = recover_symbol(&cw, &none, pt, g, &p).map_err(err_str)?;
                if &sym != cw.symbol(pt) {
                    return Err(format!("group failed at ({}, {})", pt.0.value(), pt.1.value()));
                }
            }
        }
        let erased: BTreeSet<_> = [
            (FieldElem(1), FieldElem(2)),
            (FieldElem(5), FieldElem(0)),
            (FieldElem(7), FieldElem(7)),
        ]
        .into_iter()
        .collect();
        let mut damaged = cw.clone();
        for &pt in &erased {
            damaged.set_symbol(pt, crate::codec::Symbol::zero(p.symbol_width()));
        }
        let fixed = repair_erasures(&damaged, &erased, &p).map_err(err_str)?;
        if fixed != cw {
            return Err("multi-erasure repair mismatch".into());
        }
        Ok(format!(
            "q=8 r=2: every group repairs every point; 3 erasures repaired; k = {}",
            gs.len()
        ))
    })();
    vec![check("repair", "roundtrip", roundtrip)]
}

fn dual_checks() -> Vec<Check> {
    let span = (|| {
        let mut dims = Vec::new();
        for ell in 1..=4 {
            let f = FieldContext::new(ell).map_err(err_str)?;
            let dim = dual_span_dim(&f).map_err(err_str)?;
            let bound = lucas_support_size(f.order());
            if dim > bound {
                return Err(format!("l = {ell}: span {dim} > {bound}"));
            }
            dims.push(format!("l={ell}: {dim} <= {bound}"));
        }
        Ok(dims.join(", "))
    })();
    vec![check("dual", "span_dimension", span)]
}
