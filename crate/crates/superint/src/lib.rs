//! Exact symbolic computation for multivariate orthogonal polynomial ensembles.
//!
//! The crate constructs multivariate Hermite, shifted Jacobi, Meixner-Pollaczek
//! and Wilson polynomial families from their single-variable expansion data,
//! computes ensemble expectation values exactly through normalized moment
//! functionals and determinant identities, and verifies the closed-form
//! expectation (superintegrability) formulas for each family. Everything runs
//! over exact Gaussian-rational arithmetic; no floating point anywhere.

pub mod algebra;
pub mod partitions;
pub mod symfun;
pub mod detquotient;
pub mod models;
pub mod operators;
