//! Line-indicator dual codewords of the bivariate lifted parity-check code.
//!
//! Each non-vertical line contributes the 0/1 indicator of its `q` points.
//! That indicator is the evaluation of `∏_{β ≠ β_L} (α_L X + β − Y)`, whose
//! support only contains `X^a Y^b` with `a + b ≤ q − 1` and `C(a+b, a)` odd,
//! so the span of all indicators has dimension at most `3^ℓ`.

use crate::error::{Error, Result};
use crate::gf::{binom_odd, FieldContext, FieldElem};
use crate::linalg::Matrix;
use crate::poly::BiPoly;
use crate::repair::Line;

/// Indicator vector over `F_q²`, row-major by `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualCodeword(Vec<FieldElem>);

impl DualCodeword {
    pub fn as_slice(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }
}

pub fn dual_codeword(f: &FieldContext, line: &Line) -> DualCodeword {
    let q = f.order();
    let mut v = vec![FieldElem::ZERO; q * q];
    for t in f.elements() {
        let (x, y) = line.at(f, t);
        v[x.value() as usize * q + y.value() as usize] = FieldElem::ONE;
    }
    DualCodeword(v)
}

/// `∏_{β ≠ β_L} (α_L X + β + Y)` (signs vanish in characteristic 2).
pub fn line_indicator_poly(f: &FieldContext, line: &Line) -> BiPoly {
    f.elements()
        .filter(|&b| b != line.beta)
        .fold(BiPoly::constant(FieldElem::ONE), |acc, b| {
            let factor = BiPoly::from_terms([((1, 0), line.alpha), ((0, 0), b), ((0, 1), FieldElem::ONE)]);
            acc.mul(f, &factor)
        })
}

/// Exponents allowed in an indicator polynomial.
pub fn in_lucas_support(a: u32, b: u32, q: usize) -> bool {
    ((a + b) as usize) < q && binom_odd((a + b) as u64, a as u64)
}

/// Number of pairs in [`in_lucas_support`], which is `3^ℓ`.
pub fn lucas_support_size(q: usize) -> usize {
    (0..q as u32)
        .flat_map(|a| (0..q as u32).map(move |b| (a, b)))
        .filter(|&(a, b)| in_lucas_support(a, b, q))
        .count()
}

pub const MAX_DUAL_Q: usize = 64;

/// Rank over `F_q` of all `q²` line indicators.
pub fn dual_span_dim(f: &FieldContext) -> Result<usize> {
    let q = f.order();
    if q > MAX_DUAL_Q {
        return Err(Error::Budget(format!(
            "dual span limited to q <= {MAX_DUAL_Q}, got q = {q}"
        )));
    }
    let rows = f
        .elements()
        .flat_map(|a| f.elements().map(move |b| Line::new(a, b)))
        .map(|l| dual_codeword(f, &l).0)
        .collect();
    Ok(Matrix::from_rows(rows).rank(f))
}
