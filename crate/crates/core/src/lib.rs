//! Macaulay binomial calculus, Hilbert functions forcing the weak/strong
//! Lefschetz and maximal rank properties, and exact rank tests of those
//! properties on explicit graded artinian algebras over `QQ` and `GF(p)`.

pub mod classification;
pub mod error;
pub mod field;
pub mod hp_bounds;
pub mod lefschetz;
pub mod linalg;
pub mod macaulay;
pub mod ring;
pub mod sweep;

pub use crate::error::{Error, Result};
pub use crate::field::FieldSpec;
pub use crate::macaulay::HilbertFunction;
