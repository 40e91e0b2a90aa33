//! Operators acting directly on polynomials in the eigenvalue variables
//! `x_1..x_N`: second-order Calogero-type differential operators (with the
//! singular two-body terms cancelled by exact division) and the
//! Meixner-Pollaczek shift-difference operator.

use super::OpError;
use crate::algebra::{GRat, Param, ParamPoly, ParamScalar};

/// A symbolic operator on functions of the eigenvalue variables.
#[derive(Clone)]
pub enum XOperator {
    /// `sum_i d^2/dx_i^2 - 2 beta sum_{i!=j} (x_i-x_j)^{-1} d/dx_j
    ///  - sum_i x_i d/dx_i`; eigenvalue `-|R|` on the Gaussian family.
    GaussCalogero { beta: ParamScalar },
    /// The pure two-body-plus-Laplacian part of the above (no Euler term).
    GaussLowering { beta: ParamScalar },
    /// Minus the log-gas operator of the shifted Jacobi ensemble:
    /// `-[sum_i x_i(1-x_i) d_i^2 + sum_i ((1+u)-(2+u+v)x_i) d_i
    ///    + 2 sum_{i!=j} x_i(1-x_i)(x_i-x_j)^{-1} d_i]`.
    JacobiEnsemble { u: ParamScalar, v: ParamScalar },
    /// `sum_i x_i d/dx_i`.
    Euler,
    /// `sum_i d/dx_i`.
    TotalDerivative,
    /// The multivariate Meixner-Pollaczek difference operator; phases through
    /// `w = e^{-i phi}`. With `n_prefactor` the printed overall factor `N` is
    /// kept.
    MpDifference {
        lambda: ParamScalar,
        w: ParamScalar,
        n_prefactor: bool,
    },
}

/// Apply the two-body kernel `sum_{i<j} (g_i - g_j) / (x_i - x_j)` where
/// `g_i = weight_i * d f/dx_i`; exact polynomial division, erroring when the
/// singular parts fail to cancel.
pub fn vandermonde_pair_apply(
    grads: &[ParamPoly],
    xs: &[Param],
) -> Result<ParamPoly, OpError> {
    let n = xs.len();
    let mut acc = ParamPoly::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = grads[i].sub(&grads[j]);
            let den = ParamPoly::var(xs[i]).sub(&ParamPoly::var(xs[j]));
            let q = diff.div_exact(&den).ok_or(OpError::NonPolynomialResult)?;
            acc = acc.add(&q);
        }
    }
    Ok(acc)
}

fn shift_poly(f: &ParamPoly, x: Param, delta: GRat) -> ParamPoly {
    f.subst(
        x,
        &ParamPoly::var(x).add(&ParamPoly::constant(delta)),
    )
}

/// Apply an eigenvalue-variable operator to a polynomial in the given
/// variables. The input must be free of denominators in the `x`-variables.
pub fn apply_x(op: &XOperator, f: &ParamScalar, xs: &[Param]) -> Result<ParamScalar, OpError> {
    match op {
        XOperator::GaussCalogero { beta } => {
            let lowered = apply_x(&XOperator::GaussLowering { beta: beta.clone() }, f, xs)?;
            let euler = apply_x(&XOperator::Euler, f, xs)?;
            Ok(lowered.sub(&euler))
        }
        XOperator::GaussLowering { beta } => {
            let poly = f.reduce().to_poly().ok_or(OpError::NonPolynomialResult)?;
            let grads: Vec<ParamPoly> = xs.iter().map(|&x| poly.differentiate(x)).collect();
            let mut laplacian = ParamPoly::zero();
            for (i, &x) in xs.iter().enumerate() {
                laplacian = laplacian.add(&grads[i].differentiate(x));
            }
            // -2 beta sum_{i!=j} (x_i-x_j)^{-1} d_j f
            //   = -2 beta sum_{i<j} (d_j f - d_i f)/(x_i - x_j)
            //   = +2 beta sum_{i<j} (d_i f - d_j f)/(x_i - x_j)
            let pair = vandermonde_pair_apply(&grads, xs)?;
            Ok(ParamScalar::from_poly(laplacian).add(
                &ParamScalar::int(2)
                    .mul(beta)
                    .mul(&ParamScalar::from_poly(pair)),
            ))
        }
        XOperator::JacobiEnsemble { u, v } => {
            let poly = f.reduce().to_poly().ok_or(OpError::NonPolynomialResult)?;
            let grads: Vec<ParamPoly> = xs.iter().map(|&x| poly.differentiate(x)).collect();
            let one = ParamPoly::one();
            let sigma: Vec<ParamPoly> = xs
                .iter()
                .map(|&x| {
                    let xv = ParamPoly::var(x);
                    xv.mul(&one.sub(&xv))
                })
                .collect();
            let mut second = ParamScalar::zero();
            for (i, &x) in xs.iter().enumerate() {
                second = second.add(&ParamScalar::from_poly(
                    sigma[i].mul(&grads[i].differentiate(x)),
                ));
            }
            let mut first = ParamScalar::zero();
            let upv2 = u.add(v).add(&ParamScalar::int(2));
            let u1 = u.add(&ParamScalar::one());
            for (i, &x) in xs.iter().enumerate() {
                let drift = u1.sub(&upv2.mul(&ParamScalar::var(x)));
                first = first.add(&drift.mul(&ParamScalar::from_poly(grads[i].clone())));
            }
            let weighted: Vec<ParamPoly> = grads
                .iter()
                .zip(sigma.iter())
                .map(|(g, s)| g.mul(s))
                .collect();
            let pair = vandermonde_pair_apply(&weighted, xs)?;
            let total = second
                .add(&first)
                .add(&ParamScalar::int(2).mul(&ParamScalar::from_poly(pair)));
            Ok(total.neg())
        }
        XOperator::Euler => {
            let poly = f.reduce().to_poly().ok_or(OpError::NonPolynomialResult)?;
            let mut acc = ParamPoly::zero();
            for &x in xs {
                acc = acc.add(&ParamPoly::var(x).mul(&poly.differentiate(x)));
            }
            Ok(ParamScalar::from_poly(acc))
        }
        XOperator::TotalDerivative => {
            let poly = f.reduce().to_poly().ok_or(OpError::NonPolynomialResult)?;
            let mut acc = ParamPoly::zero();
            for &x in xs {
                acc = acc.add(&poly.differentiate(x));
            }
            Ok(ParamScalar::from_poly(acc))
        }
        XOperator::MpDifference {
            lambda,
            w,
            n_prefactor,
        } => {
            let poly = f.reduce().to_poly().ok_or(OpError::NonPolynomialResult)?;
            let i_unit = ParamScalar::imaginary_unit();
            let mut acc = ParamScalar::zero();
            for (j, &xj) in xs.iter().enumerate() {
                let xjv = ParamScalar::var(xj);
                let up = ParamScalar::from_poly(shift_poly(&poly, xj, GRat::i()))
                    .sub(&ParamScalar::from_poly(poly.clone()));
                let dn = ParamScalar::from_poly(shift_poly(&poly, xj, -GRat::i()))
                    .sub(&ParamScalar::from_poly(poly.clone()));
                let mut pref_up = ParamScalar::one();
                let mut pref_dn = ParamScalar::one();
                for (k, &xk) in xs.iter().enumerate() {
                    if k == j {
                        continue;
                    }
                    let xkv = ParamScalar::var(xk);
                    let diff_jk = xjv.sub(&xkv);
                    pref_up = pref_up.mul(&diff_jk.add(&i_unit)).div(&diff_jk);
                    let diff_kj = xkv.sub(&xjv);
                    pref_dn = pref_dn.mul(&diff_kj.add(&i_unit)).div(&diff_kj);
                }
                // e^{i phi} = 1/w, e^{-i phi} = w
                let t_up = w
                    .recip()
                    .mul(&lambda.sub(&i_unit.mul(&xjv)))
                    .mul(&pref_up)
                    .mul(&up);
                let t_dn = w
                    .mul(&lambda.add(&i_unit.mul(&xjv)))
                    .mul(&pref_dn)
                    .mul(&dn);
                acc = acc.add(&t_up).sub(&t_dn);
            }
            if *n_prefactor {
                acc = acc.mul(&ParamScalar::int(xs.len() as i64));
            }
            let reduced = acc.reduce();
            // the shift prefactors must have cancelled
            for &x in xs {
                if reduced
                    .den_factors()
                    .keys()
                    .any(|fct| fct.degree_in(x) > 0)
                {
                    return Err(OpError::NonPolynomialResult);
                }
            }
            Ok(reduced)
        }
    }
}
