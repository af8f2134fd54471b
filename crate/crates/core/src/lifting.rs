//! Code construction: type-r monomials, good-monomial classification, the
//! exact code dimension, and the closed-form rate/redundancy bounds.
//!
//! A monomial `X^a Y^b` is *good* for `(q, r, d)` when it is type-r and its
//! restriction to every non-vertical line `(T, αT + β)` is equivalent up to
//! order `r` to a polynomial of degree below `d`. Two classifiers are offered:
//!
//! * [`is_good_oracle`] checks all `q²` lines exactly;
//! * [`is_good_fast`] applies a Lucas-theorem criterion on the base-q digits of
//!   the exponents. It is a certifier: it only ever answers "good" or "unknown".
//!
//! Good monomials span a subcode of the lifted code, which can be strictly
//! smaller; [`code_dimension_exact`] measures the full code by rank.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{leq2, FieldContext, FieldElem};
use crate::linalg::Matrix;
use crate::poly::{add_monomial_restriction, reduce_in_place, restrict_to_line, BiPoly};
use crate::repair::Line;

/// Parameters `q = 2^ℓ`, `r = 2^{ℓ_r}`, `s = 2^{ℓ_s}`, `d = rq − s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    ell: u32,
    ell_r: u32,
    ell_s: u32,
    field: Arc<FieldContext>,
}

/// Plain-data view of [`CodeParams`] for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsSummary {
    pub ell: u32,
    pub ell_r: u32,
    pub ell_s: u32,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub d: usize,
    pub t: usize,
    pub length: usize,
    pub symbol_width: usize,
}

impl CodeParams {
    /// Validates `1 ≤ ℓ ≤ 16`, `0 ≤ ℓ_r < ℓ` (so `t = q/r ≥ 2`) and `0 ≤ ℓ_s ≤ ℓ`.
    pub fn new(ell: u32, ell_r: u32, ell_s: u32) -> Result<Self> {
        let field = FieldContext::new(ell)?;
        if ell_r >= ell {
            return Err(Error::InvalidParams(format!(
                "ell_r = {ell_r} must be below ell = {ell} so that q/r >= 2"
            )));
        }
        if ell_s > ell {
            return Err(Error::InvalidParams(format!(
                "ell_s = {ell_s} must not exceed ell = {ell}"
            )));
        }
        Ok(CodeParams {
            ell,
            ell_r,
            ell_s,
            field: Arc::new(field),
        })
    }

    /// Default `s = r`, the regime with `q/r` disjoint repair groups.
    pub fn with_default_s(ell: u32, ell_r: u32) -> Result<Self> {
        CodeParams::new(ell, ell_r, ell_r)
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn ell_r(&self) -> u32 {
        self.ell_r
    }

    pub fn ell_s(&self) -> u32 {
        self.ell_s
    }

    pub fn q(&self) -> usize {
        1 << self.ell
    }

    pub fn r(&self) -> usize {
        1 << self.ell_r
    }

    pub fn s(&self) -> usize {
        1 << self.ell_s
    }

    pub fn d(&self) -> usize {
        self.r() * self.q() - self.s()
    }

    /// Number of disjoint repair groups, `q/r`.
    pub fn t(&self) -> usize {
        self.q() / self.r()
    }

    /// Code length `N = q²`.
    pub fn length(&self) -> usize {
        self.q() * self.q()
    }

    /// `C(r+1, 2)` field elements per symbol.
    pub fn symbol_width(&self) -> usize {
        let r = self.r();
        r * (r + 1) / 2
    }

    /// Number of type-r monomials, `C(r+1,2) q²`.
    pub fn type_r_count(&self) -> usize {
        self.symbol_width() * self.length()
    }

    pub fn summary(&self) -> ParamsSummary {
        ParamsSummary {
            ell: self.ell,
            ell_r: self.ell_r,
            ell_s: self.ell_s,
            q: self.q(),
            r: self.r(),
            s: self.s(),
            d: self.d(),
            t: self.t(),
            length: self.length(),
            symbol_width: self.symbol_width(),
        }
    }
}

/// `X^a Y^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub fn new(a: u32, b: u32) -> Self {
        Monomial { a, b }
    }

    /// Base-q digits `(a0, a1, b0, b1)` with `a = a0·q + a1`, `b = b0·q + b1`.
    pub fn digits(self, q: usize) -> (u32, u32, u32, u32) {
        let q = q as u32;
        (self.a / q, self.a % q, self.b / q, self.b % q)
    }

    pub fn as_poly(self) -> BiPoly {
        BiPoly::monomial(self.a, self.b, FieldElem::ONE)
    }

    /// Graded-lex key: total degree, then `a`.
    fn order_key(self) -> (u32, u32) {
        (self.a + self.b, self.a)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Oracle,
    Fast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FastVerdict {
    CertifiedGood,
    Unknown,
}

/// Good monomials in graded-lex order, tagged with the classifier used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodSet {
    monomials: Vec<Monomial>,
    mode: Mode,
}

impl GoodSet {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.monomials.binary_search(&m).is_ok()
    }
}

/// `⌊a/q⌋ + ⌊b/q⌋ ≤ r − 1`.
pub fn is_type_r(m: Monomial, p: &CodeParams) -> bool {
    let (a0, _, b0, _) = m.digits(p.q());
    ((a0 + b0) as usize) < p.r()
}

fn require_type_r(m: Monomial, p: &CodeParams) -> Result<()> {
    if is_type_r(m, p) {
        Ok(())
    } else {
        Err(Error::NotTypeR { a: m.a, b: m.b })
    }
}

/// All type-r monomials in graded-lex order.
pub fn type_r_monomials(p: &CodeParams) -> Vec<Monomial> {
    let rq = (p.r() * p.q()) as u32;
    let mut out: Vec<_> = (0..rq)
        .flat_map(|a| (0..rq).map(move |b| Monomial::new(a, b)))
        .filter(|&m| is_type_r(m, p))
        .collect();
    out.sort();
    out
}

/// Whether any coefficient at index `d..` survives reduction mod `(T^q − T)^r`.
fn reduced_degree_below(coeffs: &mut [FieldElem], p: &CodeParams) -> bool {
    reduce_in_place(coeffs, p.q(), p.r());
    let top = coeffs.len().min(p.q() * p.r());
    coeffs.len() <= p.d() || coeffs[p.d()..top].iter().all(|c| c.is_zero())
}

/// Exact classifier: checks the reduced restriction along all `q²` lines.
pub fn is_good_oracle(m: Monomial, p: &CodeParams) -> Result<bool> {
    require_type_r(m, p)?;
    let f = p.field();
    let len = (m.a + m.b) as usize + 1;
    let mut scratch = vec![FieldElem::ZERO; len];
    for alpha in f.elements() {
        for beta in f.elements() {
            scratch.fill(FieldElem::ZERO);
            add_monomial_restriction(f, m.a, m.b, FieldElem::ONE, alpha, beta, &mut scratch);
            if !reduced_degree_below(&mut scratch, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lucas-criterion certifier. Never returns `CertifiedGood` for a bad monomial.
///
/// A monomial is certified when its total degree is already below `d`, or when
/// the reduction window `a + b − (qr − r) < qr − s` holds and either
/// * `a0 + b0 < r − 1`, excluding `a0 + b0 = r − 2` with `a1 + b1 ≥ 2q − s`, or
/// * `a0 + b0 = r − 1` and no `s' ∈ [1, s]` has `q − s' − a1 ≤₂^ℓ b1`.
pub fn is_good_fast(m: Monomial, p: &CodeParams) -> Result<FastVerdict> {
    require_type_r(m, p)?;
    let (q, r, s) = (p.q() as i64, p.r() as i64, p.s() as i64);
    let (a, b) = (m.a as i64, m.b as i64);
    if a + b < p.d() as i64 {
        return Ok(FastVerdict::CertifiedGood);
    }
    // Coefficients of T^c for c in [qr − s, qr) must be untouched by reduction.
    if a + b + r + s >= 2 * q * r {
        return Ok(FastVerdict::Unknown);
    }
    let (a0, a1, b0, b1) = m.digits(p.q());
    let (top, a1, b1) = ((a0 + b0) as i64, a1 as i64, b1 as i64);
    let certified = if top < r - 1 {
        !(top == r - 2 && a1 + b1 >= 2 * q - s)
    } else {
        !(1..=s).any(|sp| leq2(q - sp - a1, b1, p.ell()))
    };
    Ok(if certified {
        FastVerdict::CertifiedGood
    } else {
        FastVerdict::Unknown
    })
}

fn classify(m: Monomial, p: &CodeParams, mode: Mode) -> bool {
    match mode {
        Mode::Oracle => is_good_oracle(m, p).expect("type-r by construction"),
        Mode::Fast => is_good_fast(m, p).expect("type-r by construction") == FastVerdict::CertifiedGood,
    }
}

/// Every type-r monomial passing the chosen classifier, in graded-lex order.
pub fn enumerate_good(p: &CodeParams, mode: Mode) -> GoodSet {
    let candidates = type_r_monomials(p);
    #[cfg(feature = "parallel")]
    let keep: Vec<bool> = {
        use rayon::prelude::*;
        candidates.par_iter().map(|&m| classify(m, p, mode)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let keep: Vec<bool> = candidates.iter().map(|&m| classify(m, p, mode)).collect();
    let monomials = candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(m, k)| k.then_some(m))
        .collect();
    GoodSet { monomials, mode }
}

/// Rough count of field operations for an oracle enumeration:
/// (type-r monomials) × (lines) × (restriction length).
pub fn oracle_cost(p: &CodeParams) -> u128 {
    p.type_r_count() as u128 * p.length() as u128 * ((p.r() + 1) * p.q()) as u128
}

/// `C(r+1,2)·4^ℓ − 3 r s^{log2(4/3)} 3^ℓ`.
pub fn good_count_lower_bound(p: &CodeParams) -> f64 {
    let (r, s, ell) = (p.r() as f64, p.s() as f64, p.ell() as i32);
    p.symbol_width() as f64 * 4f64.powi(ell) - 3.0 * r * s.powf((4.0f64 / 3.0).log2()) * 3f64.powi(ell)
}

/// `1 − 6 r^{-1} s^{log2(4/3)} q^{log2(3/4)}`.
pub fn rate_lower_bound(p: &CodeParams) -> f64 {
    let (q, r, s) = (p.q() as f64, p.r() as f64, p.s() as f64);
    1.0 - 6.0 / r * s.powf((4.0f64 / 3.0).log2()) * q.powf((3.0f64 / 4.0).log2())
}

/// `3 r^{log2(8/3)} q^{log2 3} / C(r+1,2)`, the symbol redundancy for `s = r`.
pub fn redundancy_upper_bound(p: &CodeParams) -> f64 {
    let (q, r) = (p.q() as f64, p.r() as f64);
    3.0 * r.powf((8.0f64 / 3.0).log2()) * q.powf(3f64.log2()) / p.symbol_width() as f64
}

/// Pairs `(a1, b1) ∈ [0, q)²` with `q − s' − a1 ≤₂^ℓ b1` for some `s' ∈ [1, s]`,
/// counted by brute force, together with the bound `2·3^ℓ·(4/3)^{ℓ_s}`.
pub fn count_leq2_pairs(ell: u32, ell_s: u32) -> (u64, f64) {
    assert!(ell_s <= ell, "ell_s must not exceed ell");
    let q = 1i64 << ell;
    let s = 1i64 << ell_s;
    let mut count = 0u64;
    for a1 in 0..q {
        for b1 in 0..q {
            if (1..=s).any(|sp| leq2(q - sp - a1, b1, ell)) {
                count += 1;
            }
        }
    }
    let bound = 2.0 * 3f64.powi(ell as i32) * (4.0f64 / 3.0).powi(ell_s as i32);
    (count, bound)
}

/// Coefficients of `T^d .. T^{rq−1}` in the reduced restriction of `m` to
/// `line`, written into `out`.
fn high_coefficients(m: Monomial, line: &Line, p: &CodeParams, out: &mut [FieldElem]) {
    let len = ((m.a + m.b) as usize + 1).max(p.q() * p.r());
    let mut scratch = vec![FieldElem::ZERO; len];
    add_monomial_restriction(p.field(), m.a, m.b, FieldElem::ONE, line.alpha, line.beta, &mut scratch);
    reduce_in_place(&mut scratch, p.q(), p.r());
    out.copy_from_slice(&scratch[p.d()..p.q() * p.r()]);
}

/// Constraint matrix of the lifted code on the type-r basis: one row per
/// line and per degree in `[d, rq)`, one column per type-r monomial.
fn constraint_matrix(p: &CodeParams, basis: &[Monomial]) -> Matrix {
    let f = p.field();
    let band = p.s();
    let lines: Vec<Line> = f
        .elements()
        .flat_map(|a| f.elements().map(move |b| Line::new(a, b)))
        .collect();
    let mut m = Matrix::zeros(lines.len() * band, basis.len());
    let mut col = vec![FieldElem::ZERO; band];
    for (c, &mono) in basis.iter().enumerate() {
        for (li, line) in lines.iter().enumerate() {
            high_coefficients(mono, line, p, &mut col);
            for (k, &v) in col.iter().enumerate() {
                m.set(li * band + k, c, v);
            }
        }
    }
    m
}

/// Largest field for which [`code_dimension_exact`] runs.
pub const MAX_EXACT_DIMENSION_Q: usize = 16;

/// `F_q`-dimension of the full lifted multiplicity code, as the nullity of the
/// line constraints on the type-r polynomials.
pub fn code_dimension_exact(p: &CodeParams) -> Result<usize> {
    if p.q() > MAX_EXACT_DIMENSION_Q {
        return Err(Error::Budget(format!(
            "exact dimension limited to q <= {MAX_EXACT_DIMENSION_Q}, got q = {}",
            p.q()
        )));
    }
    let basis = type_r_monomials(p);
    let rank = constraint_matrix(p, &basis).rank(p.field());
    Ok(basis.len() - rank)
}

/// Whether `poly` (spanned by type-r monomials) restricts to a polynomial
/// equivalent to one of degree below `d` on every line.
pub fn is_in_code(poly: &BiPoly, p: &CodeParams) -> Result<bool> {
    for ((a, b), _) in poly.terms() {
        require_type_r(Monomial::new(a, b), p)?;
    }
    let f = p.field();
    for alpha in f.elements() {
        for beta in f.elements() {
            let mut coeffs = restrict_to_line(f, poly, &Line::new(alpha, beta)).into_coeffs();
            if !reduced_degree_below(&mut coeffs, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(ell: u32, ell_r: u32, ell_s: u32) -> CodeParams {
        CodeParams::new(ell, ell_r, ell_s).unwrap()
    }

    #[test]
    fn derived_parameters() {
        let p = params(3, 1, 1);
        assert_eq!((p.q(), p.r(), p.s(), p.d(), p.t()), (8, 2, 2, 14, 4));
        assert_eq!((p.length(), p.symbol_width(), p.type_r_count()), (64, 3, 192));
        assert!(CodeParams::new(2, 2, 1).is_err());
        assert!(CodeParams::new(3, 1, 4).is_err());
        assert!(CodeParams::new(0, 0, 0).is_err());
    }

    #[test]
    fn type_r_examples() {
        let p = params(3, 1, 1);
        assert!(is_type_r(Monomial::new(0, 0), &p));
        assert!(!is_type_r(Monomial::new(15, 8), &p));
        assert!(is_type_r(Monomial::new(14, 1), &p));
        assert_eq!(type_r_monomials(&p).len(), p.type_r_count());
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![
            Monomial::new(2, 0),
            Monomial::new(0, 1),
            Monomial::new(1, 1),
            Monomial::new(0, 2),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Monomial::new(0, 1),
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0)
            ]
        );
    }

    #[test]
    fn oracle_examples() {
        // d = 15 needs s = 1.
        let p = params(3, 1, 0);
        assert_eq!(p.d(), 15);
        assert!(is_good_oracle(Monomial::new(0, 0), &p).unwrap());
        assert!(!is_good_oracle(Monomial::new(14, 1), &p).unwrap());
        assert!(!is_good_oracle(Monomial::new(7, 8), &p).unwrap());
        assert!(matches!(
            is_good_oracle(Monomial::new(15, 8), &p),
            Err(Error::NotTypeR { .. })
        ));
    }

    #[test]
    fn fast_examples() {
        let p = params(3, 1, 1);
        assert_eq!(
            is_good_fast(Monomial::new(0, 0), &p).unwrap(),
            FastVerdict::CertifiedGood
        );
        assert_eq!(is_good_fast(Monomial::new(14, 1), &p).unwrap(), FastVerdict::Unknown);
        // a0 + b0 = 0 and a1 + b1 < 2q − s
        assert_eq!(
            is_good_fast(Monomial::new(7, 6), &p).unwrap(),
            FastVerdict::CertifiedGood
        );
        assert!(is_good_fast(Monomial::new(8, 8), &p).is_err());
    }

    #[test]
    fn fast_is_sound_exhaustively() {
        for ell in [2u32, 3] {
            for ell_r in 0..ell {
                for ell_s in 0..=ell {
                    let p = params(ell, ell_r, ell_s);
                    for m in type_r_monomials(&p) {
                        if is_good_fast(m, &p).unwrap() == FastVerdict::CertifiedGood {
                            assert!(is_good_oracle(m, &p).unwrap(), "{m:?} {:?}", p.summary());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fast_set_is_subset_of_oracle_set() {
        let p = params(3, 1, 1);
        let fast = enumerate_good(&p, Mode::Fast);
        let oracle = enumerate_good(&p, Mode::Oracle);
        assert!(fast.len() <= oracle.len());
        assert!(fast.monomials().iter().all(|&m| oracle.contains(m)));
        assert!(oracle.monomials().windows(2).all(|w| w[0] < w[1]));
    }

    /// Goodness straight from the definition: compare every Hasse derivative of
    /// order < r at every point with those of the truncated candidate.
    fn good_by_definition(m: Monomial, p: &CodeParams) -> bool {
        use crate::poly::{reduce_canonical, UniPoly};
        let f = p.field();
        for alpha in f.elements() {
            for beta in f.elements() {
                let full = restrict_to_line(f, &m.as_poly(), &Line::new(alpha, beta));
                let canon = reduce_canonical(&full, p.q(), p.r());
                let low = UniPoly::from_coeffs(canon.coeffs().iter().take(p.d()).copied().collect());
                for i in 0..p.r() {
                    for x in f.elements() {
                        if full.hasse(i).eval(f, x) != low.hasse(i).eval(f, x) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn lifted_reed_solomon_count_recount() {
        // r = 1, d = q − 1.
        for ell in [2u32, 3] {
            let p = params(ell, 0, 0);
            let good = enumerate_good(&p, Mode::Oracle);
            let recount = type_r_monomials(&p)
                .into_iter()
                .filter(|&m| good_by_definition(m, &p))
                .count();
            assert_eq!(good.len(), recount);
        }
    }

    #[test]
    fn oracle_agrees_with_definition_at_q4() {
        for (ell_r, ell_s) in [(1, 0), (1, 1), (1, 2)] {
            let p = params(2, ell_r, ell_s);
            for m in type_r_monomials(&p) {
                assert_eq!(is_good_oracle(m, &p).unwrap(), good_by_definition(m, &p), "{m:?}");
            }
        }
    }

    #[test]
    fn good_count_bound_examples() {
        assert!((good_count_lower_bound(&params(4, 1, 1)) - 120.0).abs() < 1e-9);
        assert!((good_count_lower_bound(&params(3, 1, 1)) + 24.0).abs() < 1e-9);
        let big = params(10, 1, 1);
        let want = 3.0 * 4f64.powi(10) - 6.0 * (4.0 / 3.0) * 3f64.powi(10);
        assert!((good_count_lower_bound(&big) - want).abs() < 1e-6);
    }

    #[test]
    fn rate_bound_examples() {
        let big = params(10, 1, 1);
        let want = 1.0 - 4.0 * 0.75f64.powi(10);
        assert!((rate_lower_bound(&big) - want).abs() < 1e-12);
        assert!((rate_lower_bound(&big) - 0.7748).abs() < 1e-4);
        assert!(rate_lower_bound(&params(4, 1, 1)) < 0.0);
    }

    #[test]
    fn leq2_pair_counts() {
        let (c, b) = count_leq2_pairs(3, 1);
        assert!((b - 72.0).abs() < 1e-9);
        assert!(c as f64 <= b);
        let (c, b) = count_leq2_pairs(4, 2);
        assert!((b - 288.0).abs() < 1e-9);
        assert!(c as f64 <= b);
        for ell in 1..=6 {
            let (c, b) = count_leq2_pairs(ell, ell);
            assert!(c <= 1 << (2 * ell));
            assert!(b >= (1u64 << (2 * ell)) as f64);
        }
    }

    #[test]
    fn membership_examples() {
        let p = params(3, 1, 0);
        assert!(is_in_code(&BiPoly::zero(), &p).unwrap());
        let x14y = Monomial::new(14, 1).as_poly();
        let x7y8 = Monomial::new(7, 8).as_poly();
        assert!(!is_in_code(&x14y, &p).unwrap());
        assert!(!is_in_code(&x7y8, &p).unwrap());
        assert!(is_in_code(&x14y.add(&x7y8), &p).unwrap());
        let good = enumerate_good(&p, Mode::Oracle);
        for &m in good.monomials().iter().step_by(7) {
            assert!(is_in_code(&m.as_poly(), &p).unwrap());
        }
        assert!(is_in_code(&Monomial::new(16, 0).as_poly(), &p).is_err());
    }

    #[test]
    fn good_monomials_satisfy_all_constraints() {
        for (ell, ell_r, ell_s) in [(2, 1, 1), (3, 1, 1), (3, 1, 0)] {
            let p = params(ell, ell_r, ell_s);
            let good = enumerate_good(&p, Mode::Oracle);
            let m = constraint_matrix(&p, good.monomials());
            assert!((0..m.rows()).all(|r| m.row(r).iter().all(|c| c.is_zero())));
        }
    }

    #[test]
    fn dimension_at_least_good_count() {
        for (ell, ell_r, ell_s) in [(2, 1, 1), (2, 1, 0), (3, 1, 1)] {
            let p = params(ell, ell_r, ell_s);
            let dim = code_dimension_exact(&p).unwrap();
            assert!(dim >= enumerate_good(&p, Mode::Oracle).len());
        }
        assert!(code_dimension_exact(&params(5, 1, 1)).is_err());
    }

    #[test]
    fn lifted_reed_solomon_dimension_equals_good_count() {
        // For r = 1 the lifted code is spanned by its good monomials.
        for ell in [2u32, 3] {
            for ell_s in 0..ell {
                let p = params(ell, 0, ell_s);
                assert_eq!(
                    code_dimension_exact(&p).unwrap(),
                    enumerate_good(&p, Mode::Oracle).len(),
                    "{:?}",
                    p.summary()
                );
            }
        }
    }
}
