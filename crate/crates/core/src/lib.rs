//! Finite-model toolkit for monadic NM-algebras and monadic NM-logic.
//!
//! Algebras are small (at most 64 elements, in practice a dozen), so every
//! law is checked exhaustively over all element tuples.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod filter;
pub mod format;
pub mod logic;
pub mod monadic;
pub mod properties;
pub mod quantifier;
pub mod rational;
pub mod report;
pub mod set;

pub use algebra::{validate_nm, Elem, FiniteNmAlgebra, NmTables};
pub use error::{Error, Result};
pub use quantifier::{MonadicNmAlgebra, QuantifierMap};
pub use set::ElementSet;
