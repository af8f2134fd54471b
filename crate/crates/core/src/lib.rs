//! Bivariate lifted multiplicity codes over GF(2^ℓ).
//!
//! A codeword stores, at every point of `F_q²`, all Hasse derivatives of
//! order `< r` of a polynomial whose restriction to every line lies in a
//! univariate multiplicity code. Erased symbols are repaired from disjoint
//! groups of lines through the erased point.

pub mod codec;
pub mod dualcheck;
pub mod error;
pub mod gf;
pub mod lifting;
pub mod linalg;
pub mod poly;
pub mod repair;
pub mod verify;

pub use codec::{encode, recover_message, Codeword, Message, Point, Symbol};
pub use error::{Error, Result};
pub use gf::{FieldContext, FieldElem};
pub use lifting::{enumerate_good, CodeParams, GoodSet, Mode, Monomial};
pub use repair::{make_repair_plan, repair_erasures, Line, RepairPlan};
