//! Arithmetic in the binary extension field GF(2^ℓ), 1 ≤ ℓ ≤ 16.
//!
//! Elements are stored as the coefficient bitmask of a polynomial over GF(2)
//! reduced modulo a fixed irreducible polynomial of degree ℓ. The modulus for
//! each ℓ is the lexicographically least irreducible polynomial of that degree,
//! so encodings are reproducible across runs.
//!
//! Multiplication, inversion and powers go through log/antilog tables built
//! once per [`FieldContext`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_ELL: u32 = 16;

/// Lexicographically least irreducible polynomial of each degree 1..=16.
const MODULI: [u32; 16] = [
    0x2, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
];

/// An element of GF(2^ℓ) as its coefficient bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(pub u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// Addition in characteristic 2 is XOR.
impl std::ops::Add for FieldElem {
    type Output = FieldElem;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElem {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElem) {
        self.0 ^= rhs.0;
    }
}

/// Immutable description of GF(2^ℓ) together with its log tables.
#[derive(Clone)]
pub struct FieldContext {
    ell: u32,
    modulus: u32,
    generator: u16,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[k] = g^k` for `k` in `0..2(q-1)` so sums of two logs index directly.
    exp: Vec<u16>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("ell", &self.ell)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.ell == other.ell && self.modulus == other.modulus
    }
}

impl Eq for FieldContext {}

/// Carry-less product of two bitmask polynomials reduced by `modulus`.
fn slow_mul(mut a: u32, mut b: u32, modulus: u32, ell: u32) -> u32 {
    let mut acc = 0u32;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a >> ell) & 1 != 0 {
            a ^= modulus;
        }
    }
    acc
}

fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
pub fn is_irreducible(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let n = poly_degree(p);
    for d in 1..=n / 2 {
        for g in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(p, g) == 0 {
                return false;
            }
        }
    }
    true
}

impl FieldContext {
    /// Build GF(2^ℓ) with the tabulated modulus for `ell`.
    pub fn new(ell: u32) -> Result<Self> {
        if !(1..=MAX_ELL).contains(&ell) {
            return Err(Error::InvalidField(ell));
        }
        let modulus = MODULI[ell as usize - 1];
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let q = 1u32 << ell;
        let order = q - 1;

        // Smallest element of full multiplicative order.
        let generator = (1..q)
            .find(|&g| {
                let mut x = 1u32;
                for k in 1..=order {
                    x = slow_mul(x, g, modulus, ell);
                    if x == 1 {
                        return k == order;
                    }
                }
                false
            })
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u16; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..order {
            exp[k as usize] = x as u16;
            log[x as usize] = k;
            x = slow_mul(x, generator, modulus, ell);
        }
        for k in order..2 * order {
            exp[k as usize] = exp[(k - order) as usize];
        }

        Ok(FieldContext {
            ell,
            modulus,
            generator: generator as u16,
            log,
            exp,
        })
    }

    #[inline]
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Field size q = 2^ℓ.
    #[inline]
    pub fn order(&self) -> usize {
        1usize << self.ell
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generator(&self) -> FieldElem {
        FieldElem(self.generator)
    }

    /// Element with the given integer value, rejecting values outside the field.
    pub fn elem(&self, value: u32) -> Result<FieldElem> {
        if value as usize >= self.order() {
            return Err(Error::ElementOutOfRange {
                value,
                order: self.order(),
            });
        }
        Ok(FieldElem(value as u16))
    }

    /// All field elements in ascending integer order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(|v| FieldElem(v as u16))
    }

    #[inline]
    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        x + y
    }

    #[inline]
    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        if x.is_zero() || y.is_zero() {
            return FieldElem::ZERO;
        }
        let k = self.log[x.0 as usize] + self.log[y.0 as usize];
        FieldElem(self.exp[k as usize])
    }

    /// Multiplicative inverse; `inv(0)` is a domain error.
    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let order = self.order() as u32 - 1;
        let k = (order - self.log[x.0 as usize]) % order;
        Ok(FieldElem(self.exp[k as usize]))
    }

    pub fn div(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^k` with the convention `0^0 = 1`.
    pub fn pow(&self, x: FieldElem, k: u64) -> FieldElem {
        if k == 0 {
            return FieldElem::ONE;
        }
        if x.is_zero() {
            return FieldElem::ZERO;
        }
        let order = self.order() as u64 - 1;
        let e = (self.log[x.0 as usize] as u64 * (k % order)) % order;
        FieldElem(self.exp[e as usize])
    }

    /// `log_g(x)` for nonzero `x`.
    pub fn log(&self, x: FieldElem) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.0 as usize])
    }

    /// `g^k`.
    pub fn antilog(&self, k: u64) -> FieldElem {
        let order = self.order() as u64 - 1;
        FieldElem(self.exp[(k % order) as usize])
    }

    /// Number of bytes per serialized element, ⌈ℓ/8⌉.
    pub fn elem_bytes(&self) -> usize {
        self.ell.div_ceil(8) as usize
    }

    /// Append `x` as a little-endian integer of [`Self::elem_bytes`] bytes.
    pub fn write_elem(&self, x: FieldElem, out: &mut Vec<u8>) {
        let bytes = x.0.to_le_bytes();
        out.extend_from_slice(&bytes[..self.elem_bytes()]);
    }

    /// Inverse of [`Self::write_elem`].
    pub fn read_elem(&self, bytes: &[u8]) -> Result<FieldElem> {
        let mut buf = [0u8; 2];
        let n = self.elem_bytes();
        if bytes.len() < n {
            return Err(Error::Format("truncated field element".into()));
        }
        buf[..n].copy_from_slice(&bytes[..n]);
        self.elem(u16::from_le_bytes(buf) as u32)
    }
}

/// Binary dominance `a ≤₂^ℓ b`: every bit of `a mod 2^ℓ` is at most the
/// corresponding bit of `b mod 2^ℓ`. Negative inputs are reduced mod 2^ℓ.
pub fn leq2(a: i64, b: i64, ell: u32) -> bool {
    let m = 1i64 << ell;
    let a = a.rem_euclid(m);
    let b = b.rem_euclid(m);
    a & !b == 0
}

/// `C(a, b) mod 2` by Lucas's theorem: odd iff `b ≤₂ a`.
#[inline]
pub fn binom_mod2(a: u64, b: u64) -> u8 {
    u8::from(b <= a && b & !a == 0)
}

/// `C(a, b)` is odd.
#[inline]
pub fn binom_odd(a: u64, b: u64) -> bool {
    binom_mod2(a, b) == 1
}
