//! Construction and exact parameter analysis of negacyclic and cyclic BCH
//! codes over odd-characteristic fields, with closed-form dimension,
//! distance and weight formulas checked against brute-force oracles.

pub mod arith;
pub mod closed_forms;
pub mod codes;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod harness;

pub use error::{Error, Result};
pub use field::{build_field, FieldElement, FieldTable, Polynomial, PrimePower};
