//! Jack polynomials (P-normalization) by Gram-Schmidt against the
//! alpha-deformed power-sum pairing, processed in a linear extension of
//! dominance order so the result is triangular over monomial symmetric
//! functions.

use super::{hall_pair, SymPoly};
use crate::algebra::{rat, GRat, ParamScalar, Rat};
use crate::partitions::{partitions_of, Partition};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::sync::Mutex;

/// Jack deformation parameter `beta` with derived `alpha = 1/beta`.
#[derive(Clone)]
pub struct JackParams {
    beta: ParamScalar,
}

impl JackParams {
    pub fn new(beta: ParamScalar) -> Self {
        assert!(!beta.is_zero(), "beta must be nonzero");
        JackParams { beta }
    }

    pub fn symbolic() -> Self {
        Self::new(ParamScalar::named("beta"))
    }

    pub fn beta(&self) -> &ParamScalar {
        &self.beta
    }

    pub fn alpha(&self) -> ParamScalar {
        self.beta.recip()
    }

    fn cache_key(&self) -> String {
        self.beta.to_string()
    }
}

/// Monomial symmetric functions of degree `n` expressed over power sums,
/// by inverting the expansion of `p_lambda` over `m_mu`.
fn monomials_in_power_sums(n: u32) -> BTreeMap<Partition, SymPoly> {
    static CACHE: Lazy<Mutex<BTreeMap<u32, BTreeMap<Partition, SymPoly>>>> =
        Lazy::new(|| Mutex::new(BTreeMap::new()));
    if let Some(m) = CACHE.lock().unwrap().get(&n) {
        return m.clone();
    }
    let parts = partitions_of(n);
    // expansion of p_lambda over monomial symmetric functions
    let p_in_m: Vec<BTreeMap<Partition, Rat>> = parts.iter().map(power_sum_in_monomials).collect();
    // The canonical partition order descends in dominance, so the matrix
    // (rows lambda, columns mu with a nonzero only when mu dominates lambda)
    // is triangular with respect to the list index; invert by substitution.
    let mut m_in_p: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    for (k, lam) in parts.iter().enumerate() {
        let mut rhs = SymPoly::term(lam.clone(), ParamScalar::one());
        let mut diag = Rat::from_integer(1.into());
        for (mu, c) in &p_in_m[k] {
            if mu == lam {
                diag = c.clone();
                continue;
            }
            let known = m_in_p
                .get(mu)
                .expect("dominance triangularity violated in p-to-m expansion");
            rhs = rhs.sub(&known.scale(&ParamScalar::from_grat(GRat::from_rat(c.clone()))));
        }
        let inv = ParamScalar::from_grat(GRat::from_rat(rat(1) / diag));
        m_in_p.insert(lam.clone(), rhs.scale(&inv));
    }
    CACHE.lock().unwrap().insert(n, m_in_p.clone());
    m_in_p
}

/// Expansion of `p_lambda` over monomial symmetric functions (integer
/// coefficients): multiply in one power sum at a time, using
/// `m_mu * p_k = sum_nu mult_{s+k}(nu) m_nu` over distinct parts `s` of `mu`
/// (including `s = 0` for a new part).
fn power_sum_in_monomials(lam: &Partition) -> BTreeMap<Partition, Rat> {
    let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
    acc.insert(Partition::empty(), Rat::from_integer(1.into()));
    for &k in lam.parts() {
        let mut next: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (mu, c) in &acc {
            let mut distinct: Vec<u32> = mu.parts().to_vec();
            distinct.dedup();
            distinct.push(0);
            for &s in &distinct {
                let mut parts: Vec<u32> = mu.parts().to_vec();
                if s > 0 {
                    let pos = parts.iter().position(|&p| p == s).unwrap();
                    parts[pos] = s + k;
                } else {
                    parts.push(k);
                }
                let nu = Partition::from_unsorted(parts);
                let mult = nu.parts().iter().filter(|&&p| p == s + k).count() as i64;
                let add = c * rat(mult);
                *next.entry(nu).or_insert_with(|| rat(0)) += add;
            }
        }
        acc = next;
    }
    acc.retain(|_, c| *c != rat(0));
    acc
}

struct JackLevel {
    in_p: BTreeMap<Partition, SymPoly>,
    in_m: BTreeMap<Partition, BTreeMap<Partition, ParamScalar>>,
    norms: BTreeMap<Partition, ParamScalar>,
}

fn jack_level(n: u32, jp: &JackParams) -> &'static JackLevel {
    static CACHE: Lazy<Mutex<BTreeMap<(u32, String), &'static JackLevel>>> =
        Lazy::new(|| Mutex::new(BTreeMap::new()));
    let key = (n, jp.cache_key());
    let mut cache = CACHE.lock().unwrap();
    if let Some(level) = cache.get(&key) {
        return level;
    }
    let alpha = jp.alpha();
    let m_in_p = monomials_in_power_sums(n);
    let parts = partitions_of(n);
    let mut in_p: BTreeMap<Partition, SymPoly> = BTreeMap::new();
    let mut in_m: BTreeMap<Partition, BTreeMap<Partition, ParamScalar>> = BTreeMap::new();
    let mut norms: BTreeMap<Partition, ParamScalar> = BTreeMap::new();
    // ascending dominance: reverse of the canonical order
    for lam in parts.iter().rev() {
        let mut f = m_in_p[lam].clone();
        let mut coords: BTreeMap<Partition, ParamScalar> = BTreeMap::new();
        coords.insert(lam.clone(), ParamScalar::one());
        for (mu, p_mu) in &in_p {
            let overlap = hall_pair(&f, p_mu, Some(&alpha));
            if overlap.is_zero() {
                continue;
            }
            let ratio = overlap.div(&norms[mu]);
            f = f.sub(&p_mu.scale(&ratio));
            for (nu, c) in &in_m[mu] {
                let delta = ratio.mul(c).neg();
                let entry = coords.entry(nu.clone()).or_insert_with(ParamScalar::zero);
                *entry = entry.add(&delta);
            }
        }
        coords.retain(|_, c| !c.is_zero());
        let norm = hall_pair(&f, &f, Some(&alpha));
        norms.insert(lam.clone(), norm);
        in_m.insert(lam.clone(), coords);
        in_p.insert(lam.clone(), f);
    }
    let level: &'static JackLevel = Box::leak(Box::new(JackLevel { in_p, in_m, norms }));
    cache.insert(key, level);
    level
}

/// Jack polynomial `P_R` in the power-sum basis (monomial-leading coefficient 1).
pub fn jack(r: &Partition, jp: &JackParams) -> SymPoly {
    if r.is_empty() {
        return SymPoly::one();
    }
    jack_level(r.size(), jp).in_p[r].clone()
}

/// Jack polynomial expansion over monomial symmetric functions.
pub fn jack_in_monomials(r: &Partition, jp: &JackParams) -> BTreeMap<Partition, ParamScalar> {
    if r.is_empty() {
        let mut out = BTreeMap::new();
        out.insert(Partition::empty(), ParamScalar::one());
        return out;
    }
    jack_level(r.size(), jp).in_m[r].clone()
}

/// Squared norm `<P_R, P_R>` under the alpha-deformed pairing.
pub fn jack_norm(r: &Partition, jp: &JackParams) -> ParamScalar {
    if r.is_empty() {
        return ParamScalar::one();
    }
    jack_level(r.size(), jp).norms[r].clone()
}
