//! Exact arithmetic substrate: Gaussian rationals, multivariate parameter
//! polynomials, partially factored rational functions, and deterministic
//! rational specialization.

mod display;
mod gaussian;
mod linalg;
mod poly;
mod scalar;
mod specialize;

pub use gaussian::{binomial, double_factorial_odd, factorial, rat, ratio, GRat, Rat};
pub use linalg::{det, Ring};
pub use poly::{Monomial, Param, ParamPoly};
pub use scalar::{frac_equal, pochhammer, EvalError, ParamScalar};
pub use specialize::{equal_by_specialization, Specializer};
