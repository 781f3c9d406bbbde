//! Exact computations in the Motzkin algebra `M_k(x)`.
//!
//! The crate covers the diagram basis and its multiplication, the cell
//! modules indexed by Motzkin paths together with their Gram matrices and
//! determinants, and the action of `M_k(1 - q - q^-1)` on `V^{(x)k}` where
//! `V = V(0) + V(1)` for quantum `gl_2`.

pub mod algebra;
pub mod cellmod;
pub mod combinatorics;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod scalars;
pub mod schurweyl;

pub use error::{Error, Result};
