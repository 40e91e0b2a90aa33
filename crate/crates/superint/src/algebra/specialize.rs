//! Deterministic rational specialization for exact identity testing.
//!
//! A [`Specializer`] assigns each parameter an exact rational drawn from a
//! seeded stream. The same seed always yields the same assignment. Denominators
//! registered beforehand are guaranteed not to vanish at the assignment; on a
//! collision the whole assignment is redrawn.

use super::gaussian::{GRat, Rat};
use super::poly::{Param, ParamPoly};
use super::scalar::{EvalError, ParamScalar};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub struct Specializer {
    seed: u64,
    round: u64,
    params: Vec<Param>,
    registered: Vec<ParamPoly>,
    assignments: BTreeMap<Param, GRat>,
}

impl Specializer {
    pub fn new(seed: u64, params: &[Param]) -> Self {
        let mut sorted: Vec<Param> = params.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut s = Specializer {
            seed,
            round: 0,
            params: sorted,
            registered: Vec::new(),
            assignments: BTreeMap::new(),
        };
        s.draw();
        s
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn assignments(&self) -> &BTreeMap<Param, GRat> {
        &self.assignments
    }

    fn draw(&mut self) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ self.round.wrapping_mul(0x9e3779b97f4a7c15));
        let mut used: Vec<Rat> = Vec::new();
        let mut assignments = BTreeMap::new();
        for &p in &self.params {
            loop {
                // Positive rationals with spread numerators; large enough to
                // clear the small integer shifts that appear in denominators.
                let num: i64 = rng.gen_range(101..100_000);
                let den: i64 = rng.gen_range(1..=97);
                let v = Rat::new(BigInt::from(num), BigInt::from(den));
                if !used.contains(&v) {
                    used.push(v.clone());
                    assignments.insert(p, GRat::from_rat(v));
                    break;
                }
            }
        }
        self.assignments = assignments;
    }

    /// Register a denominator that the assignment must not annihilate.
    pub fn register_denominator(&mut self, den: &ParamPoly) {
        self.registered.push(den.clone());
        self.ensure_consistent();
    }

    fn ensure_consistent(&mut self) {
        for _ in 0..1000 {
            let bad = self.registered.iter().any(|f| {
                matches!(f.eval(&self.assignments), Ok(v) if v.is_zero())
            });
            if !bad {
                return;
            }
            self.round += 1;
            self.draw();
        }
        panic!("could not find a specialization avoiding all registered denominators");
    }

    /// Advance to the next deterministic assignment for the same seed.
    pub fn resample(&mut self) {
        self.round += 1;
        self.draw();
        self.ensure_consistent();
    }

    /// Exact evaluation of a scalar at the current assignment.
    pub fn specialize(&self, x: &ParamScalar) -> Result<GRat, EvalError> {
        x.eval(&self.assignments)
    }
}

/// Decide `lhs = rhs` by deterministic specialization.
///
/// Uses `max(rounds, D+1)` distinct assignments where `D` bounds the total
/// degree of the cross-multiplied difference, so agreement at every point is a
/// proof, not just evidence. Assignments that annihilate a denominator are
/// skipped by resampling.
pub fn equal_by_specialization(
    lhs: &ParamScalar,
    rhs: &ParamScalar,
    seed: u64,
    rounds: u32,
) -> bool {
    let mut params: Vec<Param> = lhs.vars().into_iter().collect();
    params.extend(rhs.vars());
    if params.is_empty() {
        return lhs.equals(rhs);
    }
    let degree_bound = lhs.degree_bound() + rhs.degree_bound() + 1;
    let total = (rounds.max(degree_bound + 1)).min(512);
    let mut spec = Specializer::new(seed, &params);
    let mut done = 0;
    let mut attempts = 0;
    while done < total {
        attempts += 1;
        if attempts > 4 * total + 100 {
            panic!("specialization kept hitting denominator zeros");
        }
        match (spec.specialize(lhs), spec.specialize(rhs)) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    return false;
                }
                done += 1;
            }
            _ => {}
        }
        spec.resample();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_assignment() {
        let u = Param::named("u");
        let lam = Param::named("lambda");
        let a = Specializer::new(7, &[u, lam]);
        let b = Specializer::new(7, &[lam, u]);
        assert_eq!(a.assignments(), b.assignments());
        let x = ParamScalar::var(u).mul(&ParamScalar::var(lam));
        assert_eq!(a.specialize(&x).unwrap(), b.specialize(&x).unwrap());
    }

    #[test]
    fn denominator_vanishing_reported() {
        let u = Param::named("u");
        let one = ParamScalar::one();
        let x = one.div(&one.sub(&ParamScalar::var(u)));
        let mut assign = BTreeMap::new();
        assign.insert(u, GRat::one());
        assert_eq!(x.eval(&assign), Err(EvalError::DenominatorVanished));
    }

    #[test]
    fn specialization_decides_identities() {
        let u = ParamScalar::named("u");
        let one = ParamScalar::one();
        let lhs = one.div(&one.sub(&u)).sub(&one);
        let rhs = u.div(&one.sub(&u));
        assert!(equal_by_specialization(&lhs, &rhs, 42, 7));
        assert!(!equal_by_specialization(&lhs, &rhs.add(&one), 42, 7));
    }
}
