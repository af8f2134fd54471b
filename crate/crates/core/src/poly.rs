//! Univariate and bivariate polynomials over GF(2^ℓ).
//!
//! Univariate polynomials are dense (line restrictions fill in quickly),
//! bivariate polynomials are sparse maps from exponent pairs to coefficients.
//! Characteristic 2 means subtraction is addition, and every binomial
//! coefficient that shows up (Hasse derivatives, binomial expansion along a
//! line) is 0 or 1 by Lucas's theorem, so no scalar multiples are needed.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::codec::{deriv_indices, Symbol};
use crate::gf::{binom_odd, FieldContext, FieldElem};
use crate::repair::Line;

/// Dense univariate polynomial, coefficient `k` multiplies `T^k`.
///
/// Trailing zeros are trimmed so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::monomial(FieldElem::ONE, 0)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `c · T^deg`.
    pub fn monomial(c: FieldElem, deg: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; deg + 1];
        coeffs[deg] = c;
        UniPoly::from_coeffs(coeffs)
    }

    /// `T^q + T`, which equals `T^q − T` in characteristic 2.
    pub fn frobenius_minus_identity(q: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; q + 1];
        coeffs[q] = FieldElem::ONE;
        coeffs[1] += FieldElem::ONE;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElem> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, f: &FieldContext, c: FieldElem) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, f: &FieldContext, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += f.mul(a, b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, f: &FieldContext, mut k: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            k >>= 1;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &FieldContext, x: FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| f.mul(acc, x) + c)
    }

    /// The `i`-th Hasse derivative.
    pub fn hasse(&self, i: usize) -> UniPoly {
        hasse_uni(self, i)
    }
}

/// `i`-th Hasse derivative: `[T^k] P^{(i)} = C(k+i, i) · [T^{k+i}] P`.
pub fn hasse_uni(p: &UniPoly, i: usize) -> UniPoly {
    if i == 0 {
        return p.clone();
    }
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .skip(i)
        .map(|(k, &c)| {
            if binom_odd(k as u64, i as u64) {
                c
            } else {
                FieldElem::ZERO
            }
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// Derivative index `(i, j)`: `i` in X, `j` in Y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex {
    pub i: usize,
    pub j: usize,
}

impl MultiIndex {
    pub fn new(i: usize, j: usize) -> Self {
        MultiIndex { i, j }
    }

    pub fn wt(self) -> usize {
        self.i + self.j
    }
}

/// Sparse bivariate polynomial keyed by exponent pair `(a, b)` of `X^a Y^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), FieldElem>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: FieldElem) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: FieldElem) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), FieldElem)>>(terms: I) -> Self {
        let mut p = BiPoly::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    /// Adds `c · X^a Y^b`, dropping the entry if it cancels.
    pub fn add_term(&mut self, a: u32, b: u32, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> FieldElem {
        self.terms.get(&(a, b)).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), FieldElem)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn mul(&self, f: &FieldContext, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term(a1 + a2, b1 + b2, f.mul(c1, c2));
            }
        }
        out
    }

    pub fn eval(&self, f: &FieldContext, x: FieldElem, y: FieldElem) -> FieldElem {
        eval_bi(f, self, (x, y))
    }
}

/// Hasse derivative in both variables:
/// `[X^a Y^b] P^{(i,j)} = C(a+i, i) C(b+j, j) [X^{a+i} Y^{b+j}] P`.
pub fn hasse_bi(p: &BiPoly, idx: MultiIndex) -> BiPoly {
    let (i, j) = (idx.i as u32, idx.j as u32);
    let mut out = BiPoly::zero();
    for ((a, b), c) in p.terms() {
        if a >= i && b >= j && binom_odd(a as u64, i as u64) && binom_odd(b as u64, j as u64) {
            out.add_term(a - i, b - j, c);
        }
    }
    out
}

pub fn eval_bi(f: &FieldContext, p: &BiPoly, (x, y): (FieldElem, FieldElem)) -> FieldElem {
    p.terms().fold(FieldElem::ZERO, |acc, ((a, b), c)| {
        acc + f.mul(c, f.mul(f.pow(x, a as u64), f.pow(y, b as u64)))
    })
}

/// All Hasse derivatives of weight below `r` at one point, in symbol order.
pub fn eval_derivs(f: &FieldContext, p: &BiPoly, (x, y): (FieldElem, FieldElem), r: usize) -> Symbol {
    let idx = deriv_indices(r);
    let mut out = vec![FieldElem::ZERO; idx.len()];
    for ((a, b), c) in p.terms() {
        for (slot, m) in out.iter_mut().zip(&idx) {
            let (i, j) = (m.i as u32, m.j as u32);
            if a >= i && b >= j && binom_odd(a as u64, i as u64) && binom_odd(b as u64, j as u64) {
                let v = f.mul(f.pow(x, (a - i) as u64), f.pow(y, (b - j) as u64));
                *slot += f.mul(c, v);
            }
        }
    }
    Symbol::new(out)
}

/// `P(T, αT + β)` expanded with the binomial theorem mod 2.
pub fn restrict_to_line(f: &FieldContext, p: &BiPoly, line: &Line) -> UniPoly {
    let Some(deg) = p.total_degree() else {
        return UniPoly::zero();
    };
    let mut coeffs = vec![FieldElem::ZERO; deg as usize + 1];
    for ((a, b), c) in p.terms() {
        add_monomial_restriction(f, a, b, c, line.alpha, line.beta, &mut coeffs);
    }
    UniPoly::from_coeffs(coeffs)
}

/// Accumulates `c · T^a (αT + β)^b` into `out`; only `i ≤₂ b` survive in
/// `Σ C(b,i) α^i β^{b-i} T^{a+i}`.
pub(crate) fn add_monomial_restriction(
    f: &FieldContext,
    a: u32,
    b: u32,
    c: FieldElem,
    alpha: FieldElem,
    beta: FieldElem,
    out: &mut [FieldElem],
) {
    let mut i = b;
    loop {
        let term = f.mul(f.pow(alpha, i as u64), f.pow(beta, (b - i) as u64));
        out[(a + i) as usize] += f.mul(c, term);
        if i == 0 {
            break;
        }
        i = (i - 1) & b;
    }
}

/// Reduces coefficients in place modulo `(T^q − T)^r = T^{qr} + T^r`
/// (r a power of 2), leaving every coefficient at index ≥ qr zero.
pub(crate) fn reduce_in_place(coeffs: &mut [FieldElem], q: usize, r: usize) {
    let qr = q * r;
    for k in (qr..coeffs.len()).rev() {
        let c = std::mem::take(&mut coeffs[k]);
        if !c.is_zero() {
            coeffs[k - qr + r] += c;
        }
    }
}

/// Unique representative of degree < rq that is equivalent to `a` up to order `r`.
///
/// # Panics
/// If `r` is not a power of 2.
pub fn reduce_canonical(a: &UniPoly, q: usize, r: usize) -> UniPoly {
    assert!(r.is_power_of_two(), "reduction requires r a power of two, got {r}");
    let mut coeffs = a.coeffs.clone();
    reduce_in_place(&mut coeffs, q, r);
    coeffs.truncate(q * r);
    UniPoly::from_coeffs(coeffs)
}

/// `A ≡_r B`, i.e. `(T^q − T)^r` divides `A − B`.
pub fn equiv_up_to_order(a: &UniPoly, b: &UniPoly, q: usize, r: usize) -> bool {
    reduce_canonical(&a.add(b), q, r).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(ell: u32) -> FieldContext {
        FieldContext::new(ell).unwrap()
    }

    fn x_pow(k: usize) -> UniPoly {
        UniPoly::monomial(FieldElem::ONE, k)
    }

    /// Remainder of `a` modulo `(T^q − T)^r` by schoolbook long division,
    /// valid for any `r`.
    fn long_division_remainder(f: &FieldContext, a: &UniPoly, q: usize, r: u32) -> UniPoly {
        let m = UniPoly::frobenius_minus_identity(q).pow(f, r);
        let dm = m.degree().unwrap();
        let lead_inv = f.inv(m.coeff(dm)).unwrap();
        let mut rem = a.coeffs().to_vec();
        while rem.len() > dm {
            let top = rem.len() - 1;
            let c = f.mul(rem[top], lead_inv);
            for (k, &mc) in m.coeffs().iter().enumerate() {
                rem[top - dm + k] += f.mul(c, mc);
            }
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        UniPoly::from_coeffs(rem)
    }

    /// Hasse derivative straight from the definition: coefficient of `Z^i`
    /// in `P(X + Z)`, expanding each `(X+Z)^k` with exact binomials mod 2
    /// computed from Pascal's triangle.
    fn hasse_by_definition(p: &UniPoly, i: usize) -> UniPoly {
        let n = p.coeffs().len();
        let mut pascal = vec![vec![0u8; n + 1]; n + 1];
        for k in 0..=n {
            pascal[k][0] = 1;
            for m in 1..=k {
                pascal[k][m] = (pascal[k - 1][m - 1] + pascal[k - 1][m]) % 2;
            }
        }
        let mut out = vec![FieldElem::ZERO; n];
        for (k, &c) in p.coeffs().iter().enumerate() {
            if k >= i && pascal[k][i] == 1 {
                out[k - i] += c;
            }
        }
        UniPoly::from_coeffs(out)
    }

    fn arb_poly(ell: u32, max_len: usize) -> impl Strategy<Value = UniPoly> {
        let q = 1u16 << ell;
        prop::collection::vec(0..q, 0..max_len)
            .prop_map(|v| UniPoly::from_coeffs(v.into_iter().map(FieldElem).collect()))
    }

    #[test]
    fn hasse_uni_examples() {
        let p = UniPoly::from_coeffs(vec![FieldElem(3), FieldElem(1), FieldElem(7)]);
        assert_eq!(hasse_uni(&p, 0), p);
        assert_eq!(hasse_uni(&x_pow(3), 2), x_pow(1));
        assert!(hasse_uni(&x_pow(2), 1).is_zero());
    }

    #[test]
    fn hasse_bi_examples() {
        let p = BiPoly::from_terms([((3, 1), FieldElem(2)), ((0, 4), FieldElem(5))]);
        assert_eq!(hasse_bi(&p, MultiIndex::new(0, 0)), p);
        let xy = BiPoly::monomial(1, 1, FieldElem::ONE);
        assert_eq!(hasse_bi(&xy, MultiIndex::new(1, 1)), BiPoly::constant(FieldElem::ONE));
        for q in [2u32, 4, 8, 16] {
            let m = BiPoly::monomial(q, 1, FieldElem::ONE);
            assert!(hasse_bi(&m, MultiIndex::new(1, 0)).is_empty());
        }
    }

    #[test]
    fn eval_derivs_examples() {
        let f = gf(3);
        let pt = (FieldElem(3), FieldElem(6));
        let z = eval_derivs(&f, &BiPoly::zero(), pt, 3);
        assert!(z.as_slice().iter().all(|c| c.is_zero()));
        let c = eval_derivs(&f, &BiPoly::constant(FieldElem(5)), pt, 2);
        assert_eq!(c.as_slice(), &[FieldElem(5), FieldElem::ZERO, FieldElem::ZERO]);
        // X·Y: order is (0,0), (0,1), (1,0); ∂_Y(XY) = X, ∂_X(XY) = Y.
        let xy = BiPoly::monomial(1, 1, FieldElem::ONE);
        let s = eval_derivs(&f, &xy, pt, 2);
        assert_eq!(s.as_slice(), &[f.mul(pt.0, pt.1), pt.0, pt.1]);
    }

    #[test]
    fn eval_derivs_match_hasse_then_eval() {
        let f = gf(3);
        let p = BiPoly::from_terms([
            ((5, 3), FieldElem(2)),
            ((7, 9), FieldElem(1)),
            ((12, 2), FieldElem(6)),
            ((1, 0), FieldElem(3)),
        ]);
        for x in f.elements() {
            for y in [FieldElem(0), FieldElem(4), FieldElem(7)] {
                let s = eval_derivs(&f, &p, (x, y), 4);
                for (k, m) in deriv_indices(4).into_iter().enumerate() {
                    assert_eq!(s.as_slice()[k], eval_bi(&f, &hasse_bi(&p, m), (x, y)));
                }
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let f = gf(3);
        let m = BiPoly::monomial(5, 6, FieldElem::ONE);
        let horiz = Line::new(FieldElem(0), FieldElem(1));
        assert_eq!(restrict_to_line(&f, &m, &horiz), x_pow(5));
        let diag = Line::new(FieldElem(1), FieldElem(0));
        let m = BiPoly::monomial(14, 1, FieldElem::ONE);
        assert_eq!(restrict_to_line(&f, &m, &diag), x_pow(15));
        let (a, b) = (FieldElem(5), FieldElem(3));
        let y = BiPoly::monomial(0, 1, FieldElem::ONE);
        assert_eq!(
            restrict_to_line(&f, &y, &Line::new(a, b)),
            UniPoly::from_coeffs(vec![b, a])
        );
    }

    #[test]
    fn restrict_agrees_with_pointwise_evaluation() {
        let f = gf(3);
        let p = BiPoly::from_terms([((3, 5), FieldElem(2)), ((9, 6), FieldElem(1)), ((0, 13), FieldElem(7))]);
        for alpha in f.elements() {
            for beta in f.elements() {
                let line = Line::new(alpha, beta);
                let pl = restrict_to_line(&f, &p, &line);
                for t in f.elements() {
                    let y = f.mul(alpha, t) + beta;
                    assert_eq!(pl.eval(&f, t), eval_bi(&f, &p, (t, y)));
                }
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let f = gf(2);
        let small = UniPoly::from_coeffs(vec![FieldElem(1), FieldElem(0), FieldElem(3)]);
        assert_eq!(reduce_canonical(&small, 4, 2), small);
        assert_eq!(reduce_canonical(&x_pow(9), 4, 2), x_pow(3));
        let m = UniPoly::frobenius_minus_identity(4).pow(&f, 2);
        assert!(reduce_canonical(&m, 4, 2).is_zero());
    }

    #[test]
    fn equiv_examples() {
        let f = gf(3);
        let a = UniPoly::from_coeffs(vec![FieldElem(3), FieldElem(0), FieldElem(5)]);
        assert!(equiv_up_to_order(&a, &a, 8, 2));
        let m = UniPoly::frobenius_minus_identity(8).pow(&f, 2);
        assert!(equiv_up_to_order(&a.add(&m), &a, 8, 2));
        assert!(equiv_up_to_order(&x_pow(16), &x_pow(2), 8, 2));
        assert!(!equiv_up_to_order(&x_pow(16), &x_pow(1), 8, 2));
    }

    #[test]
    fn hasse_of_frobenius_power() {
        for ell in [2u32, 3] {
            let f = gf(ell);
            let q = 1usize << ell;
            let base = UniPoly::frobenius_minus_identity(q);
            for r in [1u32, 2, 4] {
                let p = base.pow(&f, r);
                for i in 0..q {
                    let got = hasse_uni(&p, i);
                    let want = if i <= r as usize {
                        if binom_odd(r as u64, i as u64) {
                            base.pow(&f, r - i as u32)
                        } else {
                            UniPoly::zero()
                        }
                    } else {
                        UniPoly::zero()
                    };
                    assert_eq!(got, want, "q={q} r={r} i={i}");
                }
            }
        }
    }

    #[test]
    fn reduction_preserves_low_order_derivatives() {
        // q = 4, r = 2: every polynomial with coefficients in {0, 1, 2} up to
        // degree 10 taken from a fixed enumeration.
        let f = gf(2);
        for seed in 0u32..729 {
            let mut s = seed;
            let coeffs: Vec<_> = (0..11)
                .map(|_| {
                    let c = s % 3;
                    s /= 3;
                    FieldElem(c as u16 + (seed % 2) as u16)
                })
                .collect();
            let a = UniPoly::from_coeffs(coeffs);
            let b = reduce_canonical(&a, 4, 2);
            assert!(b.degree().is_none_or(|d| d < 8));
            for i in 0..2 {
                for x in f.elements() {
                    assert_eq!(a.hasse(i).eval(&f, x), b.hasse(i).eval(&f, x));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn hasse_matches_definition(p in arb_poly(3, 40), i in 0usize..24) {
            prop_assert_eq!(hasse_uni(&p, i), hasse_by_definition(&p, i));
        }

        #[test]
        fn hasse_is_additive(p in arb_poly(3, 21), q in arb_poly(3, 21), i in 0usize..21) {
            prop_assert_eq!(hasse_uni(&p.add(&q), i), hasse_uni(&p, i).add(&hasse_uni(&q, i)));
        }

        #[test]
        fn hasse_product_rule(p in arb_poly(3, 21), q in arb_poly(3, 21), i in 0usize..21) {
            let f = gf(3);
            let lhs = hasse_uni(&p.mul(&f, &q), i);
            let rhs = (0..=i).fold(UniPoly::zero(), |acc, e| {
                acc.add(&hasse_uni(&p, e).mul(&f, &hasse_uni(&q, i - e)))
            });
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduce_matches_long_division(p in arb_poly(3, 60), lr in 0u32..3) {
            let f = gf(3);
            let r = 1usize << lr;
            prop_assert_eq!(reduce_canonical(&p, 8, r), long_division_remainder(&f, &p, 8, r as u32));
        }

        #[test]
        fn reduce_keeps_coefficient_window(p in arb_poly(3, 40), lr in 0u32..3) {
            let (q, r) = (8usize, 1usize << lr);
            let b = reduce_canonical(&p, q, r);
            if let Some(deg) = p.degree() {
                let lo = (deg as i64 - (q * r - r) as i64 + 1).max(0) as usize;
                for a in lo..q * r {
                    prop_assert_eq!(p.coeff(a), b.coeff(a));
                }
            }
        }
    }
}
