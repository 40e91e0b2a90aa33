//! Eigen-equation checkers, the power-sum/eigenvalue-variable cross-check,
//! and the box-addition (Pieri) and differentiation rules for the multivariate
//! Gaussian family.

use super::ps::{jacobi_ps_combo, JacobiReading, PsOperator};
use super::xops::{apply_x, XOperator};
use super::OpError;
use crate::algebra::{frac_equal, Monomial, Param, ParamPoly, ParamScalar};
use crate::detquotient::{multivariate, multivariate_at};
use crate::models::{Model, ModelId};
use crate::partitions::{contents, partitions_up_to, Partition};
use crate::symfun::{schur, SymPoly};

/// Generic verdict carrier for operator identities.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub ok: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(detail: impl Into<String>) -> Self {
        CheckOutcome {
            ok: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        CheckOutcome {
            ok: false,
            detail: detail.into(),
        }
    }
}

/// Result of an eigen-equation probe.
#[derive(Clone, Debug)]
pub struct EigenOutcome {
    /// Which operator (or printed reading) was applied.
    pub label: String,
    pub is_eigenfunction: bool,
    /// The computed eigenvalue when the input is an eigenfunction.
    pub eigenvalue: Option<ParamScalar>,
    /// The closed-form eigenvalue expression under test.
    pub claimed: ParamScalar,
    pub matches_claim: bool,
}

fn x_params(n: usize) -> Vec<Param> {
    (1..=n).map(|i| Param::named(&format!("x{}", i))).collect()
}

/// Split every monomial into its `x`-part and the rest; return the leading
/// `x`-part and its coefficient polynomial in the remaining parameters.
fn x_leading(p: &ParamPoly, xs: &[Param]) -> (Monomial, ParamPoly) {
    let mut best: Option<Monomial> = None;
    let mut groups: std::collections::BTreeMap<Monomial, ParamPoly> =
        std::collections::BTreeMap::new();
    for (m, c) in p.terms() {
        let mut x_part = Monomial::one();
        let mut rest = Monomial::one();
        for &(q, e) in m.pows() {
            let piece = {
                let mut mm = Monomial::one();
                for _ in 0..e {
                    mm = mm.mul(&Monomial::var(q));
                }
                mm
            };
            if xs.contains(&q) {
                x_part = x_part.mul(&piece);
            } else {
                rest = rest.mul(&piece);
            }
        }
        groups
            .entry(x_part.clone())
            .or_insert_with(ParamPoly::zero);
        let entry = groups.get_mut(&x_part).unwrap();
        *entry = entry.add(&ParamPoly::from_terms([(rest, c.clone())]));
        match &best {
            Some(b) if *b >= x_part => {}
            _ => best = Some(x_part),
        }
    }
    let lead = best.unwrap_or_else(Monomial::one);
    let coeff = groups.remove(&lead).unwrap_or_else(ParamPoly::zero);
    (lead, coeff)
}

/// Decide whether `result = c * f` for an `x`-independent scalar `c`; returns
/// the verdict, the extracted eigenvalue, and whether it matches `claimed`.
fn eigen_verdict(
    result: &ParamScalar,
    f: &ParamScalar,
    claimed: &ParamScalar,
    xs: &[Param],
) -> (bool, Option<ParamScalar>, bool) {
    assert!(!f.is_zero(), "eigen probe on the zero function");
    if result.equals(&f.mul(claimed)) {
        return (true, Some(claimed.clone()), true);
    }
    if result.is_zero() {
        return (true, Some(ParamScalar::zero()), claimed.is_zero());
    }
    let (fp, rp) = match (f.reduce().to_poly(), result.reduce().to_poly()) {
        (Some(a), Some(b)) => (a, b),
        _ => return (false, None, false),
    };
    let (mf, cf) = x_leading(&fp, xs);
    let (mr, cr) = x_leading(&rp, xs);
    if mf != mr {
        return (false, None, false);
    }
    let c = ParamScalar::from_poly(cr).div(&ParamScalar::from_poly(cf));
    if result.equals(&f.mul(&c)) {
        (true, Some(c), false)
    } else {
        (false, None, false)
    }
}

/// The multivariate Gaussian family member as a symmetric function over
/// Schur polynomials; identically zero when the shape needs more rows than
/// variables.
pub fn hermite_sympoly(r: &Partition, n: usize) -> SymPoly {
    if r.len() > n {
        return SymPoly::zero().with_nvars(Some(n));
    }
    let fam = crate::models::gaussian_model().family();
    multivariate(&fam, r, n)
        .expect("shape fits")
        .as_schur_sympoly()
}

/// Probe the model's eigen-equation on the determinant-built multivariate
/// polynomial at shape `R` with `N` variables.
pub fn eigencheck(model: &Model, r: &Partition, n: usize) -> Result<EigenOutcome, OpError> {
    let xs = x_params(n);
    let xvals: Vec<ParamScalar> = xs.iter().map(|&x| ParamScalar::var(x)).collect();
    match model.id() {
        ModelId::GaussianHermite => {
            let fam = model.family();
            let f = multivariate_at(&fam, r, &xvals).map_err(|_| OpError::NonPolynomialResult)?;
            let claimed = ParamScalar::int(-(r.size() as i64));
            let op = XOperator::GaussCalogero {
                beta: ParamScalar::one(),
            };
            let result = apply_x(&op, &f, &xs)?;
            let (is_eigen, eigenvalue, matches) = eigen_verdict(&result, &f, &claimed, &xs);
            Ok(EigenOutcome {
                label: "gauss-calogero".into(),
                is_eigenfunction: is_eigen,
                eigenvalue,
                matches_claim: matches,
                claimed,
            })
        }
        ModelId::SelbergJacobi => {
            let (u, v) = match model {
                Model::Jacobi { u, v } => (u.clone(), v.clone()),
                _ => unreachable!(),
            };
            // claimed eigenvalue: (u+v)|R| + 2 sum_{(i,j) in R} (N + j - i)
            let content_sum: i64 = contents(r).iter().map(|(_, c)| c).sum();
            let claimed = u
                .add(&v)
                .mul(&ParamScalar::int(r.size() as i64))
                .add(&ParamScalar::int(
                    2 * (n as i64 * r.size() as i64 + content_sum),
                ));
            let fam = model.family();
            let f_sym = multivariate(&fam, r, n)
                .map_err(|_| OpError::NonPolynomialResult)?
                .as_schur_sympoly();
            let f_x = f_sym.eval_x(&xvals).expect("arity matches");
            // sweep the printed readings, then the derived combination
            let cap = (r.size() + 2).max(4);
            for reading in [
                JacobiReading::PrintedFirstDerivative,
                JacobiReading::PrintedSecondDerivative,
                JacobiReading::Derived,
            ] {
                let op = jacobi_ps_combo(reading, &u, &v, cap);
                let result = op.apply(&f_sym, &ParamScalar::int(n as i64))?;
                let result_x = result.eval_x(&xvals).expect("arity matches");
                let (is_eigen, eigenvalue, matches) =
                    eigen_verdict(&result_x, &f_x, &claimed, &xs);
                if is_eigen {
                    return Ok(EigenOutcome {
                        label: format!("{:?}", reading),
                        is_eigenfunction: true,
                        eigenvalue,
                        matches_claim: matches,
                        claimed,
                    });
                }
            }
            // no reading worked in the power-sum transcription; report against
            // the eigenvalue-variable operator directly
            let op = XOperator::JacobiEnsemble {
                u: u.clone(),
                v: v.clone(),
            };
            let result = apply_x(&op, &f_x, &xs)?;
            let (is_eigen, eigenvalue, matches) = eigen_verdict(&result, &f_x, &claimed, &xs);
            Ok(EigenOutcome {
                label: "jacobi-ensemble-x".into(),
                is_eigenfunction: is_eigen,
                eigenvalue,
                matches_claim: matches,
                claimed,
            })
        }
        ModelId::MeixnerPollaczek => {
            let (lambda, w) = match model {
                Model::MeixnerPollaczek { lambda, w, .. } => (
                    lambda.clone(),
                    w.clone().expect("eigencheck needs the phase parameter"),
                ),
                _ => unreachable!(),
            };
            let fam = model.family();
            let f = multivariate_at(&fam, r, &xvals).map_err(|_| OpError::NonPolynomialResult)?;
            // 2 i |R| sin(phi) = |R| (1 - w^2)/w
            let claimed = ParamScalar::int(r.size() as i64)
                .mul(&ParamScalar::one().sub(&w.mul(&w)))
                .div(&w);
            for n_prefactor in [true, false] {
                let op = XOperator::MpDifference {
                    lambda: lambda.clone(),
                    w: w.clone(),
                    n_prefactor,
                };
                let result = apply_x(&op, &f, &xs)?;
                let (is_eigen, eigenvalue, matches) = eigen_verdict(&result, &f, &claimed, &xs);
                if is_eigen {
                    return Ok(EigenOutcome {
                        label: if n_prefactor {
                            "mp-difference-with-N".into()
                        } else {
                            "mp-difference".into()
                        },
                        is_eigenfunction: true,
                        eigenvalue,
                        matches_claim: matches,
                        claimed,
                    });
                }
            }
            Ok(EigenOutcome {
                label: "mp-difference".into(),
                is_eigenfunction: false,
                eigenvalue: None,
                matches_claim: false,
                claimed,
            })
        }
        ModelId::Wilson => panic!("no multivariate eigen-equation is defined for this model"),
    }
}

/// Validate a power-sum transcription against its eigenvalue-variable form on
/// every Schur function up to the given degree.
pub fn crosscheck_ps_vs_x(
    op_ps: &PsOperator,
    op_x: &XOperator,
    n: usize,
    max_degree: u32,
) -> Result<CheckOutcome, OpError> {
    let xs = x_params(n);
    let xvals: Vec<ParamScalar> = xs.iter().map(|&x| ParamScalar::var(x)).collect();
    let n_value = ParamScalar::int(n as i64);
    for r in partitions_up_to(max_degree, Some(n)) {
        let s = schur(&r);
        let via_ps = op_ps.apply(&s, &n_value)?.eval_x(&xvals).expect("arity");
        let direct = apply_x(op_x, &s.eval_x(&xvals).expect("arity"), &xs)?;
        if !frac_equal(&via_ps, &direct) {
            return Ok(CheckOutcome::fail(format!(
                "mismatch on shape [{}] at N={}",
                r, n
            )));
        }
    }
    Ok(CheckOutcome::pass(format!(
        "agree on all |R| <= {} at N={}",
        max_degree, n
    )))
}

/// Box-addition rule for the multivariate Gaussian family:
/// `p_1 H_R = sum_{R+box} H_{R+box} + sum_{R-box} (N + j - i) H_{R-box}`,
/// with added boxes that would need more than `N` rows dropped.
pub fn pieri_check(r: &Partition, n: usize) -> CheckOutcome {
    let lhs = hermite_sympoly(r, n).mul_power_sum(1);
    let mut rhs = SymPoly::zero();
    for (shape, _, _) in r.with_box_added(Some(n)) {
        rhs = rhs.add(&hermite_sympoly(&shape, n));
    }
    for (shape, i, j) in r.with_box_removed() {
        let coeff = ParamScalar::int(n as i64 + j as i64 - i as i64);
        rhs = rhs.add(&hermite_sympoly(&shape, n).scale(&coeff));
    }
    if lhs.equals(&rhs) {
        CheckOutcome::pass(format!("box rule holds at R=[{}], N={}", r, n))
    } else {
        CheckOutcome::fail(format!("box rule fails at R=[{}], N={}", r, n))
    }
}

/// Differentiation rule:
/// `sum_i d/dx_i H_R = sum_{R-box} (N + j - i) H_{R-box}`.
pub fn differentiation_check(r: &Partition, n: usize) -> CheckOutcome {
    let h = hermite_sympoly(r, n);
    let cap = r.size().max(1);
    let op = super::ps::f1(cap);
    let lhs = op
        .apply(&h, &ParamScalar::int(n as i64))
        .expect("degree within cap");
    let mut rhs = SymPoly::zero();
    for (shape, i, j) in r.with_box_removed() {
        let coeff = ParamScalar::int(n as i64 + j as i64 - i as i64);
        rhs = rhs.add(&hermite_sympoly(&shape, n).scale(&coeff));
    }
    if lhs.equals(&rhs) {
        CheckOutcome::pass(format!("derivative rule holds at R=[{}], N={}", r, n))
    } else {
        CheckOutcome::fail(format!("derivative rule fails at R=[{}], N={}", r, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::operators::ps::{l0, w2};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn gaussian_eigencheck_small() {
        let model = models::gaussian_model();
        // empty shape: eigenvalue 0
        let out = eigencheck(&model, &Partition::empty(), 2).unwrap();
        assert!(out.is_eigenfunction && out.matches_claim);
        // [2] at N=2: eigenvalue -2
        let out = eigencheck(&model, &part("2"), 2).unwrap();
        assert!(out.is_eigenfunction && out.matches_claim);
        assert!(out.eigenvalue.unwrap().equals(&ParamScalar::int(-2)));
    }

    #[test]
    fn w2_crosschecks_against_x_form() {
        let op = w2(4);
        let xop = XOperator::GaussLowering {
            beta: ParamScalar::one(),
        };
        let out = crosscheck_ps_vs_x(&op, &xop, 2, 4).unwrap();
        assert!(out.ok, "{}", out.detail);
    }

    #[test]
    fn l0_crosschecks_euler() {
        let out = crosscheck_ps_vs_x(&l0(4), &XOperator::Euler, 3, 4).unwrap();
        assert!(out.ok, "{}", out.detail);
    }

    #[test]
    fn w2_beta_crosschecks_at_beta_one() {
        let op = super::super::ps::w2_beta(&ParamScalar::one(), 4);
        let xop = XOperator::GaussLowering {
            beta: ParamScalar::one(),
        };
        let out = crosscheck_ps_vs_x(&op, &xop, 2, 4).unwrap();
        assert!(out.ok, "{}", out.detail);
    }

    #[test]
    fn pieri_small_cases() {
        // p_1 H_[1] = H_[2] + H_[1,1] + 2 H_empty at N=2
        let out = pieri_check(&part("1"), 2);
        assert!(out.ok, "{}", out.detail);
        // p_1 = H_[1] at any N
        let out = pieri_check(&Partition::empty(), 3);
        assert!(out.ok, "{}", out.detail);
        let out = pieri_check(&part("2"), 2);
        assert!(out.ok, "{}", out.detail);
    }

    #[test]
    fn differentiation_single_box() {
        // sum d/dx_i H_[1] = N
        for n in 1..=3 {
            let out = differentiation_check(&part("1"), n);
            assert!(out.ok, "{}", out.detail);
        }
    }

    #[test]
    fn mp_empty_shape_eigenvalue_zero() {
        let model = models::mp_model_symbolic();
        let out = eigencheck(&model, &Partition::empty(), 2).unwrap();
        assert!(out.is_eigenfunction && out.matches_claim, "{:?}", out.label);
    }
}
