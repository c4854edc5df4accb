//! Exact symbolic engine for the quantum coordinate superalgebras of the quantum
//! queer superalgebra `U_q(q_n)`, their braided product and its invariants.

pub mod actions;
pub mod cache;
pub mod error;
pub mod graded;
pub mod howe;
pub mod invariants;
pub mod linalg;
pub mod par;
pub mod qfield;
pub mod relset;
pub mod supertensor;

pub use error::{Error, Result};
