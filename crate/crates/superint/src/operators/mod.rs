//! Differential and difference operators in power-sum and eigenvalue-variable
//! form, operator exponentials, and eigen-equation checkers.

mod checks;
mod ps;
mod xops;

pub use checks::{
    crosscheck_ps_vs_x, differentiation_check, eigencheck, pieri_check, CheckOutcome, EigenOutcome,
};
pub use ps::{
    euler_weighted, f1, f2, jacobi_ps_combo, l0, w0, w2, w2_beta, JacobiReading, PsOperator,
    PsTerm, W0Reading,
};
pub use xops::{apply_x, vandermonde_pair_apply, XOperator};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpError {
    #[error("operator does not strictly lower degree; exponential would not terminate")]
    NonNilpotentGrading,
    #[error("singular terms failed to cancel; result is not a polynomial")]
    NonPolynomialResult,
    #[error("operator was built with degree cap {cap} but was applied at degree {got}")]
    DegreeCapExceeded { cap: u32, got: u32 },
}
