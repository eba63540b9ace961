//! Exact symbolic engine for the quantum double-torus Hopf algebra
//! `A(DT²_q)` and its parent `A(U_{q⁻¹,q}(2))`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod galois;
pub mod gns;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
