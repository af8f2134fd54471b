use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field exponent {0} outside supported range 1..=16")]
    InvalidField(u32),
    #[error("modulus {0:#x} is not irreducible")]
    ReducibleModulus(u32),
    #[error("value {value} is not an element of a field of order {order}")]
    ElementOutOfRange { value: u32, order: usize },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("invalid code parameters: {0}")]
    InvalidParams(String),
    #[error("monomial X^{a}Y^{b} is not type-r")]
    NotTypeR { a: u32, b: u32 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("codeword is not in the image of the encoder")]
    NotInImage,
    #[error("linear system is singular or inconsistent")]
    SingularSystem,
    #[error("symbol at ({x}, {y}) needed for repair is erased")]
    MissingData { x: u16, y: u16 },
    #[error("{erased} erasures exceed the repair capacity of {capacity}")]
    TooManyErasures { erased: usize, capacity: usize },
    #[error("no repair group of ({x}, {y}) avoids the other erasures")]
    NoCleanGroup { x: u16, y: u16 },
    #[error("repair groups disagree at ({x}, {y}): input is not a codeword")]
    NotACodeword { x: u16, y: u16 },
    #[error("derivative order {order} must be below r = {r}")]
    OrderTooHigh { order: usize, r: usize },
    #[error("computation exceeds budget: {0}")]
    Budget(String),
    #[error("malformed input: {0}")]
    Format(String),
}
