//! Operators on the power-sum algebra: finite sums of normal-ordered terms
//! (a monomial in the `p_k` times a monomial in the `d/dp_k`), generated up to
//! a degree cap so that the formally infinite sums act exactly on any
//! polynomial of bounded degree. Index 0 in a creation monomial stands for
//! `p_0` and multiplies by the number of variables.

use super::OpError;
use crate::algebra::{rat, GRat, ParamScalar};
use crate::partitions::Partition;
use crate::symfun::SymPoly;

/// One normal-ordered term: `coeff * prod p_{create} * prod d/dp_{annihilate}`.
#[derive(Clone, Debug)]
pub struct PsTerm {
    pub coeff: ParamScalar,
    /// Power-sum indices created; 0 is allowed and contributes a factor `N`.
    pub create: Vec<u32>,
    /// Power-sum indices annihilated; all at least 1.
    pub annihilate: Vec<u32>,
}

impl PsTerm {
    fn shift(&self) -> i64 {
        let up: i64 = self.create.iter().map(|&k| k as i64).sum();
        let down: i64 = self.annihilate.iter().map(|&k| k as i64).sum();
        up - down
    }
}

/// A power-sum operator with terms generated up to an annihilation-degree cap.
#[derive(Clone)]
pub struct PsOperator {
    pub name: String,
    terms: Vec<PsTerm>,
    /// Uniform graded degree shift, when every term agrees (verified at
    /// construction); `None` for experimental mixed-shift readings.
    shift: Option<i64>,
    cap: u32,
}

impl PsOperator {
    pub fn new(name: impl Into<String>, terms: Vec<PsTerm>, cap: u32) -> Self {
        let mut shift = None;
        let mut uniform = true;
        for t in &terms {
            assert!(
                t.annihilate.iter().all(|&k| k >= 1),
                "cannot differentiate by p_0"
            );
            match shift {
                None => shift = Some(t.shift()),
                Some(s) if s != t.shift() => uniform = false,
                _ => {}
            }
        }
        PsOperator {
            name: name.into(),
            terms,
            shift: if uniform { shift } else { None },
            cap,
        }
    }

    pub fn shift(&self) -> Option<i64> {
        self.shift
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> &[PsTerm] {
        &self.terms
    }

    /// Sum of two operators generated with the same cap.
    pub fn add(&self, rhs: &PsOperator) -> PsOperator {
        assert_eq!(self.cap, rhs.cap, "operator caps differ");
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        PsOperator::new(format!("{}+{}", self.name, rhs.name), terms, self.cap)
    }

    pub fn scale(&self, c: &ParamScalar) -> PsOperator {
        PsOperator {
            name: self.name.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| PsTerm {
                    coeff: t.coeff.mul(c),
                    create: t.create.clone(),
                    annihilate: t.annihilate.clone(),
                })
                .collect(),
            shift: self.shift,
            cap: self.cap,
        }
    }

    /// Exact application; `p_0` is replaced by `n_value`.
    pub fn apply(&self, f: &SymPoly, n_value: &ParamScalar) -> Result<SymPoly, OpError> {
        if f.degree() > self.cap {
            return Err(OpError::DegreeCapExceeded {
                cap: self.cap,
                got: f.degree(),
            });
        }
        let mut out = SymPoly::zero().with_nvars(f.nvars());
        for (lam, c) in f.terms() {
            for t in &self.terms {
                let mut coeff = c.mul(&t.coeff);
                // apply the derivatives in sequence
                let mut parts: Vec<u32> = lam.parts().to_vec();
                let mut ok = true;
                for &k in &t.annihilate {
                    let m = parts.iter().filter(|&&p| p == k).count();
                    if m == 0 {
                        ok = false;
                        break;
                    }
                    coeff = coeff.mul(&ParamScalar::from_grat(GRat::from_rat(rat(m as i64))));
                    let pos = parts.iter().position(|&p| p == k).unwrap();
                    parts.remove(pos);
                }
                if !ok {
                    continue;
                }
                for &k in &t.create {
                    if k == 0 {
                        coeff = coeff.mul(n_value);
                    } else {
                        parts.push(k);
                    }
                }
                out.add_term(Partition::from_unsorted(parts), coeff);
            }
        }
        Ok(out)
    }

    /// `sum_k scale^k op^k f / k!`; terminates because the operator strictly
    /// lowers degree.
    pub fn exp_apply(
        &self,
        scale: &ParamScalar,
        f: &SymPoly,
        n_value: &ParamScalar,
    ) -> Result<SymPoly, OpError> {
        match self.shift {
            Some(s) if s < 0 => {}
            _ => return Err(OpError::NonNilpotentGrading),
        }
        let mut total = f.clone();
        let mut current = f.clone();
        let mut k: i64 = 0;
        while !current.is_zero() {
            k += 1;
            current = self.apply(&current, n_value)?;
            if current.is_zero() {
                break;
            }
            let factor = scale.div(&ParamScalar::int(k));
            current = current.scale(&factor);
            total = total.add(&current);
        }
        Ok(total)
    }
}

/// `W_2 = sum_{n,k>=1} nk p_{n+k-2} d_n d_k
///       + sum_{n,k>=0} (n+k+2) p_n p_k d_{n+k+2}`, degree shift -2.
pub fn w2(cap: u32) -> PsOperator {
    w2_beta(&ParamScalar::one(), cap)
}

/// Beta-deformed lowering operator: the beta-independent double-derivative
/// part, the two-body part weighted by beta, and a `(1-beta)` one-body
/// correction (reduces to `w2` at beta = 1).
pub fn w2_beta(beta: &ParamScalar, cap: u32) -> PsOperator {
    let mut terms = Vec::new();
    for n in 1..=cap {
        for k in 1..=cap {
            if n + k > cap {
                continue;
            }
            terms.push(PsTerm {
                coeff: ParamScalar::int((n * k) as i64),
                create: vec![n + k - 2],
                annihilate: vec![n, k],
            });
        }
    }
    for n in 0..cap {
        for k in 0..cap {
            let target = n + k + 2;
            if target > cap {
                continue;
            }
            terms.push(PsTerm {
                coeff: ParamScalar::int(target as i64).mul(beta),
                create: vec![n, k],
                annihilate: vec![target],
            });
        }
    }
    let one_minus_beta = ParamScalar::one().sub(beta);
    if !one_minus_beta.is_zero() {
        for k in 2..=cap {
            terms.push(PsTerm {
                coeff: ParamScalar::int((k * (k - 1)) as i64).mul(&one_minus_beta),
                create: vec![k - 2],
                annihilate: vec![k],
            });
        }
    }
    PsOperator::new("w2", terms, cap)
}

/// Grading operator `l_0 = sum p_n d_n`.
pub fn l0(cap: u32) -> PsOperator {
    let terms = (1..=cap)
        .map(|n| PsTerm {
            coeff: ParamScalar::one(),
            create: vec![n],
            annihilate: vec![n],
        })
        .collect();
    PsOperator::new("l0", terms, cap)
}

/// Weighted grading operator `sum n p_n d_n`.
pub fn euler_weighted(cap: u32) -> PsOperator {
    let terms = (1..=cap)
        .map(|n| PsTerm {
            coeff: ParamScalar::int(n as i64),
            create: vec![n],
            annihilate: vec![n],
        })
        .collect();
    PsOperator::new("euler2", terms, cap)
}

/// `F_1 = sum_{n>=0} (n+1) p_n d_{n+1}`, the power-sum form of
/// `sum_i d/dx_i`. Degree shift -1.
pub fn f1(cap: u32) -> PsOperator {
    let terms = (0..cap)
        .map(|n| PsTerm {
            coeff: ParamScalar::int((n + 1) as i64),
            create: vec![n],
            annihilate: vec![n + 1],
        })
        .collect();
    PsOperator::new("f1", terms, cap)
}

/// `F_2 = sum_{n,m>=0} (n+m+1) p_n p_m d_{n+m+1}
///       + sum_{n,m>=1} nm p_{n+m-1} d_n d_m`, degree shift -1.
pub fn f2(cap: u32) -> PsOperator {
    let mut terms = Vec::new();
    for n in 0..=cap {
        for m in 0..=cap {
            let target = n + m + 1;
            if target > cap {
                continue;
            }
            terms.push(PsTerm {
                coeff: ParamScalar::int(target as i64),
                create: vec![n, m],
                annihilate: vec![target],
            });
        }
    }
    for n in 1..=cap {
        for m in 1..=cap {
            if n + m > cap + 1 {
                continue;
            }
            terms.push(PsTerm {
                coeff: ParamScalar::int((n * m) as i64),
                create: vec![n + m - 1],
                annihilate: vec![n, m],
            });
        }
    }
    PsOperator::new("f2", terms, cap)
}

/// The two printed readings of the ambiguous second-derivative symbol in the
/// degree-preserving operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum W0Reading {
    /// `d/dp_{n+m}` (first derivative).
    FirstDerivative,
    /// `d^2/dp_{n+m}^2` (iterated derivative by the same index).
    SecondDerivative,
}

/// `W_0 = sum_{n,m>=0} (n+m) p_n p_m D_{n+m} + sum_{n,m>=1} nm p_{n+m} d_n d_m`
/// where `D` is the selected reading.
pub fn w0(reading: W0Reading, cap: u32) -> PsOperator {
    let mut terms = Vec::new();
    for n in 0..=cap {
        for m in 0..=cap {
            let s = n + m;
            if s == 0 || s > cap {
                continue;
            }
            let annihilate = match reading {
                W0Reading::FirstDerivative => vec![s],
                W0Reading::SecondDerivative => vec![s, s],
            };
            terms.push(PsTerm {
                coeff: ParamScalar::int(s as i64),
                create: vec![n, m],
                annihilate,
            });
        }
    }
    for n in 1..=cap {
        for m in 1..=cap {
            if n + m > cap {
                continue;
            }
            terms.push(PsTerm {
                coeff: ParamScalar::int((n * m) as i64),
                create: vec![n + m],
                annihilate: vec![n, m],
            });
        }
    }
    PsOperator::new("w0", terms, cap)
}

/// Readings of the degree-preserving combination claimed to have the
/// multivariate Jacobi polynomials as eigenfunctions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiReading {
    /// As printed, with `W_0`'s ambiguous symbol read as a first derivative:
    /// `W_0 + (2+u+v) l_0 + 2 F_2 - (u+1) F_1`.
    PrintedFirstDerivative,
    /// As printed, second-derivative reading.
    PrintedSecondDerivative,
    /// Derived from the eigenvalue-variable operator of the log-gas measure:
    /// `W_0 + (2+u+v) l_0 - F_2 - u F_1 - 2 sum_k k p_k d_k`.
    Derived,
}

/// Build the selected reading of the Jacobi operator combination.
pub fn jacobi_ps_combo(
    reading: JacobiReading,
    u: &ParamScalar,
    v: &ParamScalar,
    cap: u32,
) -> PsOperator {
    let upv2 = u.add(v).add(&ParamScalar::int(2));
    match reading {
        JacobiReading::PrintedFirstDerivative | JacobiReading::PrintedSecondDerivative => {
            let w0_reading = if reading == JacobiReading::PrintedFirstDerivative {
                W0Reading::FirstDerivative
            } else {
                W0Reading::SecondDerivative
            };
            let mut op = w0(w0_reading, cap).add(&l0(cap).scale(&upv2));
            op = op.add(&f2(cap).scale(&ParamScalar::int(2)));
            op = op.add(&f1(cap).scale(&u.add(&ParamScalar::one()).neg()));
            op.name = "jacobi-printed".to_string();
            op
        }
        JacobiReading::Derived => {
            let mut op = w0(W0Reading::FirstDerivative, cap).add(&l0(cap).scale(&upv2));
            op = op.add(&f2(cap).scale(&ParamScalar::int(-1)));
            op = op.add(&f1(cap).scale(&u.neg()));
            op = op.add(&euler_weighted(cap).scale(&ParamScalar::int(-2)));
            op.name = "jacobi-derived".to_string();
            op
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::schur;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn w2_examples() {
        let n = ParamScalar::named("N");
        let op = w2(6);
        assert_eq!(op.shift(), Some(-2));
        // W2 S_[1] = 0 (no degree -1 image)
        let out = op.apply(&schur(&part("1")), &n).unwrap();
        assert!(out.is_zero());
        // W2 S_[2] = N(N+1)
        let out = op.apply(&schur(&part("2")), &n).unwrap();
        let expect = SymPoly::constant(n.mul(&n.add(&ParamScalar::one())));
        assert!(out.equals(&expect));
    }

    #[test]
    fn l0_is_grading() {
        let n = ParamScalar::named("N");
        let op = l0(6);
        let out = op.apply(&schur(&part("2")), &n).unwrap();
        assert!(out.equals(&schur(&part("2")).scale(&ParamScalar::int(2))));
    }

    #[test]
    fn exp_w2_reproduces_hermite_constants() {
        let nsym = ParamScalar::named("N");
        let op = w2(6);
        let scale = ParamScalar::from_ratio(-1, 2);
        // exp(-W2/2) S_[2] = S_[2] - N(N+1)/2
        let out = op.exp_apply(&scale, &schur(&part("2")), &nsym).unwrap();
        let expect = schur(&part("2")).sub(&SymPoly::constant(
            nsym.mul(&nsym.add(&ParamScalar::one()))
                .div(&ParamScalar::int(2)),
        ));
        assert!(out.equals(&expect));
        // exp(-W2/2) S_[1,1] = S_[1,1] + N(N-1)/2
        let out = op.exp_apply(&scale, &schur(&part("1,1")), &nsym).unwrap();
        let expect = schur(&part("1,1")).add(&SymPoly::constant(
            nsym.mul(&nsym.sub(&ParamScalar::one()))
                .div(&ParamScalar::int(2)),
        ));
        assert!(out.equals(&expect));
        // exp on the constant is the identity
        let one = SymPoly::one();
        assert!(op.exp_apply(&scale, &one, &nsym).unwrap().equals(&one));
    }

    #[test]
    fn exponential_requires_lowering() {
        let n = ParamScalar::named("N");
        assert!(matches!(
            l0(4).exp_apply(&ParamScalar::one(), &schur(&part("1")), &n),
            Err(OpError::NonNilpotentGrading)
        ));
    }

    #[test]
    fn f1_lowers_single_row() {
        // F1 S_[1] = p_0 = N
        let n = ParamScalar::named("N");
        let out = f1(4).apply(&schur(&part("1")), &n).unwrap();
        assert!(out.equals(&SymPoly::constant(n)));
    }

    #[test]
    fn w2_beta_reduces_at_beta_one() {
        let n = ParamScalar::named("N");
        let beta_one = w2_beta(&ParamScalar::int(1), 5);
        let plain = w2(5);
        for r in crate::partitions::partitions_up_to(5, None) {
            let a = beta_one.apply(&schur(&r), &n).unwrap();
            let b = plain.apply(&schur(&r), &n).unwrap();
            assert!(a.equals(&b), "{:?}", r);
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let n = ParamScalar::named("N");
        let op = w2(2);
        assert!(matches!(
            op.apply(&schur(&part("3")), &n),
            Err(OpError::DegreeCapExceeded { .. })
        ));
    }
}
