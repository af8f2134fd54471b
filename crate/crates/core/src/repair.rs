//! Local repair through disjoint groups of lines.
//!
//! The `q` non-vertical lines through a point `(γ, δ)` are split into `q/r`
//! groups of `r` lines with distinct slopes. Given the symbols on one group
//! (target excluded), each line's restriction is recovered by Hermite
//! interpolation from its `q − 1` other points, and the target's derivative
//! vector follows from one small Vandermonde solve per derivative order.
//!
//! Repair needs every line restriction to be equivalent to a polynomial of
//! degree at most `rq − r − 1`, i.e. `d ≤ rq − r` (`s ≥ r`).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::codec::{Codeword, Point, Symbol};
use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElem};
use crate::lifting::CodeParams;
use crate::linalg::Matrix;
use crate::poly::{MultiIndex, UniPoly};

/// The line `L(T) = (T, αT + β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Line {
    pub alpha: FieldElem,
    pub beta: FieldElem,
}

impl Line {
    pub fn new(alpha: FieldElem, beta: FieldElem) -> Self {
        Line { alpha, beta }
    }

    pub fn at(&self, f: &FieldContext, t: FieldElem) -> Point {
        (t, f.mul(self.alpha, t) + self.beta)
    }

    pub fn contains(&self, f: &FieldContext, (x, y): Point) -> bool {
        y == f.mul(self.alpha, x) + self.beta
    }
}

/// `r` lines through one point with pairwise distinct slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairGroup {
    lines: Vec<Line>,
}

impl RepairGroup {
    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    /// Points read by this group when repairing `target`.
    pub fn support(&self, f: &FieldContext, target: Point) -> Vec<Point> {
        self.lines
            .iter()
            .flat_map(|l| f.elements().filter(move |&t| t != target.0).map(move |t| l.at(f, t)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairPlan {
    target: Point,
    groups: Vec<RepairGroup>,
}

impl RepairPlan {
    pub fn target(&self) -> Point {
        self.target
    }

    pub fn groups(&self) -> &[RepairGroup] {
        &self.groups
    }
}

/// The `q` lines `(α, δ − αγ)` through `(γ, δ)`, by ascending `α`.
pub fn lines_through(pt: Point, p: &CodeParams) -> Vec<Line> {
    let f = p.field();
    let (gamma, delta) = pt;
    f.elements()
        .map(|alpha| Line::new(alpha, delta + f.mul(alpha, gamma)))
        .collect()
}

/// Consecutive chunks of `r` lines in slope order.
pub fn make_repair_plan(pt: Point, p: &CodeParams) -> RepairPlan {
    let groups = lines_through(pt, p)
        .chunks(p.r())
        .map(|c| RepairGroup { lines: c.to_vec() })
        .collect();
    RepairPlan { target: pt, groups }
}

/// Order-`i` derivative along direction `(1, α)`:
/// `Σ_{i1+i2=i} sym[(i1, i2)] · α^{i2}`.
pub fn line_deriv_at(f: &FieldContext, sym: &Symbol, alpha: FieldElem, i: usize, r: usize) -> Result<FieldElem> {
    if i >= r {
        return Err(Error::OrderTooHigh { order: i, r });
    }
    Ok((0..=i).fold(FieldElem::ZERO, |acc, i2| {
        acc + f.mul(sym.get(MultiIndex::new(i - i2, i2)), f.pow(alpha, i2 as u64))
    }))
}

/// Interpolation node: a position and its Hasse derivatives of orders `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteNode {
    pub x: FieldElem,
    pub derivs: Vec<FieldElem>,
}

/// The unique polynomial of degree below `Σ m_k` whose Hasse derivatives
/// match every node, by confluent Newton divided differences.
pub fn hermite_interpolate(f: &FieldContext, nodes: &[HermiteNode]) -> Result<UniPoly> {
    let xs: BTreeSet<_> = nodes.iter().map(|n| n.x).collect();
    if xs.len() != nodes.len() {
        return Err(Error::SingularSystem);
    }
    // Each node repeated by its multiplicity, kept contiguous.
    let z: Vec<(FieldElem, usize)> = nodes
        .iter()
        .enumerate()
        .flat_map(|(k, n)| std::iter::repeat_n((n.x, k), n.derivs.len()))
        .collect();
    let len = z.len();
    let mut dd: Vec<FieldElem> = z.iter().map(|&(_, k)| nodes[k].derivs[0]).collect();
    for j in 1..len {
        for k in (j..len).rev() {
            let (zk, node) = z[k];
            let zkj = z[k - j].0;
            dd[k] = if zk == zkj {
                nodes[node].derivs[j]
            } else {
                f.div(dd[k] + dd[k - 1], zk + zkj)?
            };
        }
    }
    // Newton form to monomial basis by Horner on polynomials.
    let mut coeffs: Vec<FieldElem> = Vec::with_capacity(len);
    for k in (0..len).rev() {
        // coeffs ← coeffs · (T − z_k) + dd[k]
        let zk = z[k].0;
        coeffs.insert(0, FieldElem::ZERO);
        for m in 0..coeffs.len() - 1 {
            let shifted = f.mul(coeffs[m + 1], zk);
            coeffs[m] += shifted;
        }
        coeffs[0] += dd[k];
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

fn require_repairable(p: &CodeParams) -> Result<()> {
    if p.ell_s() < p.ell_r() {
        return Err(Error::InvalidParams(format!(
            "repair needs d <= rq - r, i.e. ell_s >= ell_r (got ell_s = {}, ell_r = {})",
            p.ell_s(),
            p.ell_r()
        )));
    }
    Ok(())
}

/// Restores the symbol at `pt` from the symbols on `group`'s lines.
pub fn recover_symbol(
    cw: &Codeword,
    erased: &BTreeSet<Point>,
    pt: Point,
    group: &RepairGroup,
    p: &CodeParams,
) -> Result<Symbol> {
    require_repairable(p)?;
    let f = p.field();
    let r = p.r();
    let gamma = pt.0;
    let lines = group.lines();
    if lines.len() < r || lines.iter().any(|l| !l.contains(f, pt)) {
        return Err(Error::InvalidParams(
            "repair group does not pass through the target".into(),
        ));
    }

    // line_derivs[k][i] = P_{L_k}^{(i)}(γ)
    let mut line_derivs = Vec::with_capacity(r);
    for line in lines {
        let mut nodes = Vec::with_capacity(p.q() - 1);
        for t in f.elements().filter(|&t| t != gamma) {
            let y = line.at(f, t);
            if erased.contains(&y) {
                return Err(Error::MissingData {
                    x: y.0.value(),
                    y: y.1.value(),
                });
            }
            let sym = cw.symbol(y);
            let derivs = (0..r)
                .map(|i| line_deriv_at(f, sym, line.alpha, i, r))
                .collect::<Result<Vec<_>>>()?;
            nodes.push(HermiteNode { x: t, derivs });
        }
        let restricted = hermite_interpolate(f, &nodes)?;
        line_derivs.push((0..r).map(|i| restricted.hasse(i).eval(f, gamma)).collect::<Vec<_>>());
    }

    let mut out = Symbol::zero(p.symbol_width());
    for i in 0..r {
        // Σ_j α_k^j P^{(i−j, j)}(γ, δ) = P_{L_k}^{(i)}(γ), k = 0..=i
        let vandermonde = Matrix::from_rows(
            lines[..=i]
                .iter()
                .map(|l| (0..=i).map(|j| f.pow(l.alpha, j as u64)).collect())
                .collect(),
        );
        let rhs: Vec<_> = line_derivs[..=i].iter().map(|d| d[i]).collect();
        let sol = vandermonde.solve(f, &rhs)?;
        for (j, v) in sol.into_iter().enumerate() {
            out.set(MultiIndex::new(i - j, j), v);
        }
    }
    Ok(out)
}

/// Index of the first group in `plan` whose support avoids `erased`.
pub fn first_clean_group(plan: &RepairPlan, erased: &BTreeSet<Point>, p: &CodeParams) -> Option<usize> {
    let f = p.field();
    plan.groups()
        .iter()
        .position(|g| g.support(f, plan.target()).iter().all(|pt| !erased.contains(pt)))
}

/// Per-point record of a repair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairLog {
    pub point: (u16, u16),
    pub group: usize,
    /// Number of clean groups that agreed, when cross-checking.
    pub agreeing_groups: Option<usize>,
}

/// Recovers with every clean group and fails if any two disagree.
pub fn cross_check_symbol(
    cw: &Codeword,
    erased: &BTreeSet<Point>,
    pt: Point,
    p: &CodeParams,
) -> Result<(Symbol, usize)> {
    let plan = make_repair_plan(pt, p);
    let f = p.field();
    let mut first: Option<Symbol> = None;
    let mut agree = 0;
    for g in plan.groups() {
        if g.support(f, pt).iter().any(|x| erased.contains(x)) {
            continue;
        }
        let s = recover_symbol(cw, erased, pt, g, p)?;
        match &first {
            None => first = Some(s),
            Some(prev) if *prev != s => {
                return Err(Error::NotACodeword {
                    x: pt.0.value(),
                    y: pt.1.value(),
                })
            }
            Some(_) => {}
        }
        agree += 1;
    }
    first.map(|s| (s, agree)).ok_or(Error::NoCleanGroup {
        x: pt.0.value(),
        y: pt.1.value(),
    })
}

/// Repairs up to `t − 1` erased symbols, logging the group used for each.
///
/// Each erased point uses the first group (in plan order) whose lines avoid
/// every other erased point. An erasure off the target's column lies on
/// exactly one line through the target and column-mates lie on none, so at
/// most `t − 2` of the `t` groups are ever blocked.
pub fn repair_erasures_logged(
    cw: &Codeword,
    erased: &BTreeSet<Point>,
    p: &CodeParams,
    cross_check: bool,
) -> Result<(Codeword, Vec<RepairLog>)> {
    require_repairable(p)?;
    if erased.len() >= p.t() {
        return Err(Error::TooManyErasures {
            erased: erased.len(),
            capacity: p.t() - 1,
        });
    }
    let mut out = cw.clone();
    let mut log = Vec::with_capacity(erased.len());
    for &pt in erased {
        let plan = make_repair_plan(pt, p);
        let mut others = erased.clone();
        others.remove(&pt);
        let group = first_clean_group(&plan, &others, p).ok_or(Error::NoCleanGroup {
            x: pt.0.value(),
            y: pt.1.value(),
        })?;
        let (sym, agreeing) = if cross_check {
            let (s, n) = cross_check_symbol(cw, erased, pt, p)?;
            (s, Some(n))
        } else {
            (recover_symbol(cw, erased, pt, &plan.groups()[group], p)?, None)
        };
        out.set_symbol(pt, sym);
        log.push(RepairLog {
            point: (pt.0.value(), pt.1.value()),
            group,
            agreeing_groups: agreeing,
        });
    }
    Ok((out, log))
}

pub fn repair_erasures(cw: &Codeword, erased: &BTreeSet<Point>, p: &CodeParams) -> Result<Codeword> {
    repair_erasures_logged(cw, erased, p, false).map(|(c, _)| c)
}
