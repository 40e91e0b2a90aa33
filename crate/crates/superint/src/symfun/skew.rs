//! Skew symmetric functions via the two-alphabet (coproduct) expansion
//! `p_k -> p_k + q_k` and pairing against the dual basis in the second
//! alphabet.

use super::jack::{jack, jack_norm, JackParams};
use super::{schur, SymPoly, SymfunError};
use crate::algebra::{binomial, GRat, ParamScalar};
use crate::partitions::Partition;
use std::collections::BTreeMap;

/// Expand `f(p + q)` and group by the second-alphabet index: the result maps a
/// partition `mu` to the symmetric function multiplying `q_mu`.
pub fn two_alphabet(f: &SymPoly) -> BTreeMap<Partition, SymPoly> {
    let mut out: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    for (l, c) in f.terms() {
        // distinct part values with multiplicities
        let mut mults: Vec<(u32, u32)> = Vec::new();
        for &p in l.parts() {
            match mults.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => mults.push((p, 1)),
            }
        }
        // for each part value choose how many copies stay in the p alphabet
        fn go(
            mults: &[(u32, u32)],
            p_parts: &mut Vec<u32>,
            q_parts: &mut Vec<u32>,
            coeff: GRat,
            c: &ParamScalar,
            out: &mut BTreeMap<Partition, SymPoly>,
        ) {
            if mults.is_empty() {
                let key = Partition::from_unsorted(q_parts.iter().copied());
                let term = Partition::from_unsorted(p_parts.iter().copied());
                out.entry(key)
                    .or_insert_with(SymPoly::zero)
                    .add_term(term, c.mul(&ParamScalar::from_grat(coeff)));
                return;
            }
            let (v, m) = mults[0];
            for k in 0..=m {
                let ways = binomial(m, k);
                for _ in 0..k {
                    p_parts.push(v);
                }
                for _ in 0..(m - k) {
                    q_parts.push(v);
                }
                go(
                    &mults[1..],
                    p_parts,
                    q_parts,
                    &coeff * &GRat::from_rat(ways),
                    c,
                    out,
                );
                for _ in 0..k {
                    p_parts.pop();
                }
                for _ in 0..(m - k) {
                    q_parts.pop();
                }
            }
        }
        go(
            &mults,
            &mut Vec::new(),
            &mut Vec::new(),
            GRat::one(),
            c,
            &mut out,
        );
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Skew Schur function `S_{R/Q}` in the power-sum basis.
pub fn skew_schur(r: &Partition, q: &Partition) -> Result<SymPoly, SymfunError> {
    if !r.contains(q) {
        return Err(SymfunError::NotContained);
    }
    if q.is_empty() {
        return Ok(schur(r));
    }
    if q == r {
        return Ok(SymPoly::one());
    }
    let split = two_alphabet(&schur(r));
    let sq = schur(q);
    let mut out = SymPoly::zero();
    for (mu, g) in &split {
        if mu.size() != q.size() {
            continue;
        }
        // <p_mu, S_Q> = z_mu * (coefficient of p_mu in S_Q)
        let pairing = sq
            .coeff(mu)
            .mul(&ParamScalar::from_grat(GRat::from_rat(mu.zee())));
        if pairing.is_zero() {
            continue;
        }
        out = out.add(&g.scale(&pairing));
    }
    Ok(out)
}

/// Skew Jack polynomial `P_{R/Q}` in the convention
/// `P_R(x, y) = sum_Q P_{R/Q}(x) P_Q(y)`.
pub fn skew_jack(r: &Partition, q: &Partition, jp: &JackParams) -> Result<SymPoly, SymfunError> {
    if !r.contains(q) {
        return Err(SymfunError::NotContained);
    }
    if q.is_empty() {
        return Ok(jack(r, jp));
    }
    if q == r {
        return Ok(SymPoly::one());
    }
    let alpha = jp.alpha();
    let split = two_alphabet(&jack(r, jp));
    // dual basis element: P_Q / <P_Q, P_Q>_alpha
    let pq = jack(q, jp);
    let norm = jack_norm(q, jp);
    let mut out = SymPoly::zero();
    for (mu, g) in &split {
        if mu.size() != q.size() {
            continue;
        }
        let mut pairing = pq
            .coeff(mu)
            .mul(&ParamScalar::from_grat(GRat::from_rat(mu.zee())))
            .mul(&alpha.pow(mu.len() as i64));
        if pairing.is_zero() {
            continue;
        }
        pairing = pairing.div(&norm);
        out = out.add(&g.scale(&pairing));
    }
    Ok(out)
}
