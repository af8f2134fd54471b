//! The order-r evaluation map and message encoding over the good-monomial basis.
//!
//! A codeword holds one [`Symbol`] per point of `F_q²`. Points are ordered
//! row-major by integer value, `index = x·q + y`. Each symbol lists the Hasse
//! derivatives `P^{(i,j)}(x, y)` with `i + j < r`, by ascending weight and then
//! ascending `i`.
//!
//! On disk (`LMC1`), everything is little-endian:
//!
//! ```text
//! "LMC1" | ℓ | ℓ_r | ℓ_s | 0 | q² symbols × C(r+1,2) elements × ⌈ℓ/8⌉ bytes
//! ```

use crate::error::{Error, Result};
use crate::gf::{FieldContext, FieldElem};
use crate::lifting::{is_type_r, CodeParams, GoodSet, Monomial};
use crate::linalg::{LeftInverse, Matrix};
use crate::poly::{eval_derivs, BiPoly, MultiIndex};

pub const MAGIC: &[u8; 4] = b"LMC1";
pub const HEADER_LEN: usize = 8;

pub type Point = (FieldElem, FieldElem);

/// Derivative indices of weight `< r`: ascending weight, then ascending `i`.
pub fn deriv_indices(r: usize) -> Vec<MultiIndex> {
    (0..r)
        .flat_map(|w| (0..=w).map(move |i| MultiIndex::new(i, w - i)))
        .collect()
}

/// Position of `(i, j)` in [`deriv_indices`].
pub fn deriv_slot(idx: MultiIndex) -> usize {
    let w = idx.wt();
    w * (w + 1) / 2 + idx.i
}

pub fn point_index(q: usize, (x, y): Point) -> usize {
    x.value() as usize * q + y.value() as usize
}

pub fn index_point(q: usize, idx: usize) -> Point {
    (FieldElem((idx / q) as u16), FieldElem((idx % q) as u16))
}

/// Derivative vector `P^{(<r)}` at one point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Symbol(Vec<FieldElem>);

impl Symbol {
    pub fn new(derivs: Vec<FieldElem>) -> Self {
        Symbol(derivs)
    }

    pub fn zero(width: usize) -> Self {
        Symbol(vec![FieldElem::ZERO; width])
    }

    pub fn as_slice(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn get(&self, idx: MultiIndex) -> FieldElem {
        self.0[deriv_slot(idx)]
    }

    pub fn set(&mut self, idx: MultiIndex, v: FieldElem) {
        let k = deriv_slot(idx);
        self.0[k] = v;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Symbol) -> Symbol {
        Symbol(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }
}

/// `q²` symbols in row-major point order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    q: usize,
    symbols: Vec<Symbol>,
}

impl Codeword {
    pub fn new(q: usize, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.len() != q * q {
            return Err(Error::LengthMismatch {
                expected: q * q,
                got: symbols.len(),
            });
        }
        Ok(Codeword { q, symbols })
    }

    pub fn zero(p: &CodeParams) -> Self {
        Codeword {
            q: p.q(),
            symbols: vec![Symbol::zero(p.symbol_width()); p.length()],
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, pt: Point) -> &Symbol {
        &self.symbols[point_index(self.q, pt)]
    }

    pub fn set_symbol(&mut self, pt: Point, sym: Symbol) {
        let i = point_index(self.q, pt);
        self.symbols[i] = sym;
    }

    pub fn add(&self, other: &Codeword) -> Codeword {
        Codeword {
            q: self.q,
            symbols: self.symbols.iter().zip(&other.symbols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// All field elements, symbol by symbol.
    pub fn flat(&self) -> Vec<FieldElem> {
        self.symbols.iter().flat_map(|s| s.0.iter().copied()).collect()
    }

    fn check_shape(&self, p: &CodeParams) -> Result<()> {
        if self.q != p.q() {
            return Err(Error::LengthMismatch {
                expected: p.length(),
                got: self.symbols.len(),
            });
        }
        if let Some(bad) = self.symbols.iter().find(|s| s.len() != p.symbol_width()) {
            return Err(Error::LengthMismatch {
                expected: p.symbol_width(),
                got: bad.len(),
            });
        }
        Ok(())
    }

    /// LMC1 bytes.
    pub fn to_bytes(&self, p: &CodeParams) -> Vec<u8> {
        let f = p.field();
        let mut out = Vec::with_capacity(HEADER_LEN + p.length() * p.symbol_width() * f.elem_bytes());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&[p.ell() as u8, p.ell_r() as u8, p.ell_s() as u8, 0]);
        for sym in &self.symbols {
            for &e in sym.as_slice() {
                f.write_elem(e, &mut out);
            }
        }
        out
    }

    /// Parses LMC1 bytes, returning the parameters recorded in the header.
    pub fn from_bytes(bytes: &[u8]) -> Result<(CodeParams, Codeword)> {
        if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
            return Err(Error::Format("missing LMC1 header".into()));
        }
        if bytes[7] != 0 {
            return Err(Error::Format("reserved header byte must be 0".into()));
        }
        let p = CodeParams::new(bytes[4] as u32, bytes[5] as u32, bytes[6] as u32)?;
        let f = p.field();
        let eb = f.elem_bytes();
        let width = p.symbol_width();
        let body = &bytes[HEADER_LEN..];
        let expected = p.length() * width * eb;
        if body.len() != expected {
            return Err(Error::LengthMismatch {
                expected: HEADER_LEN + expected,
                got: bytes.len(),
            });
        }
        let symbols = body
            .chunks_exact(width * eb)
            .map(|chunk| {
                chunk
                    .chunks_exact(eb)
                    .map(|b| f.read_elem(b))
                    .collect::<Result<Vec<_>>>()
                    .map(Symbol)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((p.clone(), Codeword { q: p.q(), symbols }))
    }
}

/// Coefficients on the good-monomial basis, in [`GoodSet`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Message(Vec<FieldElem>);

impl Message {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        Message(coeffs)
    }

    pub fn zero(len: usize) -> Self {
        Message(vec![FieldElem::ZERO; len])
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Message) -> Message {
        Message(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Raw message bytes: one ⌈ℓ/8⌉-byte little-endian integer per coefficient.
    pub fn to_bytes(&self, f: &FieldContext) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.0.len() * f.elem_bytes());
        for &c in &self.0 {
            f.write_elem(c, &mut out);
        }
        out
    }

    pub fn from_bytes(f: &FieldContext, bytes: &[u8]) -> Result<Self> {
        let eb = f.elem_bytes();
        if !bytes.len().is_multiple_of(eb) {
            return Err(Error::Format(format!(
                "message length {} is not a multiple of {eb} bytes",
                bytes.len()
            )));
        }
        bytes
            .chunks_exact(eb)
            .map(|b| f.read_elem(b))
            .collect::<Result<Vec<_>>>()
            .map(Message)
    }
}

/// `eval_{q,r}(P)`: every derivative of weight `< r` at every point.
pub fn eval_map(poly: &BiPoly, p: &CodeParams) -> Result<Codeword> {
    for ((a, b), _) in poly.terms() {
        if !is_type_r(Monomial::new(a, b), p) {
            return Err(Error::NotTypeR { a, b });
        }
    }
    let f = p.field();
    let q = p.q();
    let eval_at = |idx: usize| eval_derivs(f, poly, index_point(q, idx), p.r());
    #[cfg(feature = "parallel")]
    let symbols = {
        use rayon::prelude::*;
        (0..q * q).into_par_iter().map(eval_at).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let symbols = (0..q * q).map(eval_at).collect();
    Ok(Codeword { q, symbols })
}

/// `Σ msg_k · M_k` for the monomials of `gs`.
pub fn message_poly(msg: &Message, gs: &GoodSet) -> Result<BiPoly> {
    if msg.len() != gs.len() {
        return Err(Error::LengthMismatch {
            expected: gs.len(),
            got: msg.len(),
        });
    }
    Ok(BiPoly::from_terms(
        gs.monomials().iter().zip(msg.coeffs()).map(|(m, &c)| ((m.a, m.b), c)),
    ))
}

pub fn encode(msg: &Message, gs: &GoodSet, p: &CodeParams) -> Result<Codeword> {
    eval_map(&message_poly(msg, gs)?, p)
}

/// Columns are the flattened evaluations of each basis monomial.
pub fn evaluation_matrix(monomials: &[Monomial], p: &CodeParams) -> Result<Matrix> {
    let rows = p.length() * p.symbol_width();
    let mut m = Matrix::zeros(rows, monomials.len());
    for (c, mono) in monomials.iter().enumerate() {
        let cw = eval_map(&mono.as_poly(), p)?;
        for (r, v) in cw.flat().into_iter().enumerate() {
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// Inverts [`encode`] on its image; build once per `(params, good set)`.
#[derive(Clone, Debug)]
pub struct MessageDecoder {
    params: CodeParams,
    matrix: Matrix,
    left_inverse: LeftInverse,
}

impl MessageDecoder {
    pub fn new(gs: &GoodSet, p: &CodeParams) -> Result<Self> {
        let matrix = evaluation_matrix(gs.monomials(), p)?;
        let left_inverse = LeftInverse::new(p.field(), &matrix)?;
        Ok(MessageDecoder {
            params: p.clone(),
            matrix,
            left_inverse,
        })
    }

    pub fn recover(&self, cw: &Codeword) -> Result<Message> {
        cw.check_shape(&self.params)?;
        let f = self.params.field();
        let y = cw.flat();
        let x = self.left_inverse.apply(f, &y);
        if self.matrix.mul_vec(f, &x) != y {
            return Err(Error::NotInImage);
        }
        Ok(Message(x))
    }
}

/// One-shot decode; prefer [`MessageDecoder`] when decoding repeatedly.
pub fn recover_message(cw: &Codeword, gs: &GoodSet, p: &CodeParams) -> Result<Message> {
    MessageDecoder::new(gs, p)?.recover(cw)
}

/// Every field element as ℓ bits, least significant first, in symbol order.
pub fn binary_expand(cw: &Codeword, p: &CodeParams) -> Vec<bool> {
    let ell = p.ell();
    cw.symbols
        .iter()
        .flat_map(|s| s.0.iter())
        .flat_map(|e| (0..ell).map(move |k| (e.value() >> k) & 1 == 1))
        .collect()
}
