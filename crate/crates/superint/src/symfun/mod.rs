//! Symmetric functions in the power-sum basis: Schur and skew Schur functions,
//! special-point evaluations, and Jack polynomials with their skew versions.

mod jack;
mod skew;

pub use jack::{jack, jack_in_monomials, jack_norm, JackParams};
pub use skew::{skew_jack, skew_schur, two_alphabet};

use crate::algebra::{det, rat, GRat, ParamScalar, Rat, Ring};
use crate::partitions::{partitions_of, Partition};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymfunError {
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("symmetric function over {expected} variables evaluated at {got} values")]
    ArityMismatch { expected: usize, got: usize },
}

/// A symmetric function written over power sums: a finite sum of terms
/// `c_lambda * p_lambda` with exact scalar coefficients. The optional `nvars`
/// pins the function to a concrete number of variables (`p_0 = N` has already
/// been substituted wherever an operator produced it).
#[derive(Clone)]
pub struct SymPoly {
    terms: BTreeMap<Partition, ParamScalar>,
    nvars: Option<usize>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly {
            terms: BTreeMap::new(),
            nvars: None,
        }
    }

    pub fn one() -> Self {
        Self::constant(ParamScalar::one())
    }

    pub fn constant(c: ParamScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Partition::empty(), c);
        }
        SymPoly {
            terms,
            nvars: None,
        }
    }

    pub fn power_sum(k: u32) -> Self {
        assert!(k >= 1, "p_0 is not a basis element; substitute N directly");
        Self::term(Partition::new(vec![k]), ParamScalar::one())
    }

    pub fn term(index: Partition, c: ParamScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        SymPoly {
            terms,
            nvars: None,
        }
    }

    pub fn nvars(&self) -> Option<usize> {
        self.nvars
    }

    pub fn with_nvars(mut self, n: Option<usize>) -> Self {
        self.nvars = n;
        self
    }

    fn join_nvars(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixing symmetric functions over different variable counts");
                Some(x)
            }
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &Partition) -> ParamScalar {
        self.terms.get(index).cloned().unwrap_or_else(ParamScalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    /// Maximum graded degree (`|lambda|`) present.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, index: Partition, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.nvars = Self::join_nvars(self.nvars, rhs.nvars);
        for (l, c) in rhs.terms.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SymPoly) -> SymPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.neg()))
                .collect(),
            nvars: self.nvars,
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero().with_nvars(self.nvars);
        }
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(l, k)| (l.clone(), k.mul(c)))
                .collect(),
            nvars: self.nvars,
        }
    }

    pub fn mul(&self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero().with_nvars(Self::join_nvars(self.nvars, rhs.nvars));
        for (a, ca) in self.terms.iter() {
            for (b, cb) in rhs.terms.iter() {
                let merged = Partition::from_unsorted(
                    a.parts().iter().chain(b.parts().iter()).copied(),
                );
                out.add_term(merged, ca.mul(cb));
            }
        }
        out
    }

    /// Multiply by a single power sum `p_k`.
    pub fn mul_power_sum(&self, k: u32) -> SymPoly {
        self.mul(&SymPoly::power_sum(k))
    }

    /// The degree-`d` homogeneous component.
    pub fn component(&self, d: u32) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
            nvars: self.nvars,
        }
    }

    pub fn equals(&self, rhs: &SymPoly) -> bool {
        self.sub(rhs).is_zero()
    }

    /// Substitute `p_k -> delta_{k,s}`.
    pub fn eval_delta(&self, s: u32) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for (l, c) in self.terms.iter() {
            if l.parts().iter().all(|&p| p == s) {
                acc = acc.add(c);
            }
        }
        acc
    }

    /// Substitute `p_k -> z` for every `k >= 1`.
    pub fn eval_all_equal(&self, z: &ParamScalar) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for (l, c) in self.terms.iter() {
            acc = acc.add(&c.mul(&z.pow(l.len() as i64)));
        }
        acc
    }

    /// Substitute `p_k -> sum_i x_i^k` for concrete values (or symbols) `x_i`.
    pub fn eval_x(&self, xs: &[ParamScalar]) -> Result<ParamScalar, SymfunError> {
        if let Some(n) = self.nvars {
            if n != xs.len() {
                return Err(SymfunError::ArityMismatch {
                    expected: n,
                    got: xs.len(),
                });
            }
        }
        let maxk = self
            .terms
            .keys()
            .flat_map(|l| l.parts().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        // power_sums[k] = p_k at the given values
        let mut power_sums = vec![ParamScalar::zero(); maxk + 1];
        let mut powers: Vec<ParamScalar> = xs.to_vec();
        for k in 1..=maxk {
            let mut s = ParamScalar::zero();
            for (i, x) in xs.iter().enumerate() {
                if k > 1 {
                    powers[i] = powers[i].mul(x);
                }
                s = s.add(&powers[i]);
            }
            power_sums[k] = s;
        }
        let mut acc = ParamScalar::zero();
        for (l, c) in self.terms.iter() {
            let mut v = c.clone();
            for &p in l.parts() {
                v = v.mul(&power_sums[p as usize]);
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }
}

impl Ring for SymPoly {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("({})*p[{}]", c, l))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Evaluation locus for [`eval_special`].
pub enum Locus {
    /// `p_k = delta_{k,s}`
    Delta(u32),
    /// `p_k = z` for all `k`
    AllEqual(ParamScalar),
    /// `p_k = sum x_i^k`
    XValues(Vec<ParamScalar>),
}

/// Evaluate a symmetric function at one of the standard special loci.
pub fn eval_special(f: &SymPoly, locus: &Locus) -> Result<ParamScalar, SymfunError> {
    match locus {
        Locus::Delta(s) => Ok(f.eval_delta(*s)),
        Locus::AllEqual(z) => Ok(f.eval_all_equal(z)),
        Locus::XValues(xs) => f.eval_x(xs),
    }
}

/// Complete homogeneous symmetric function `h_n` over power sums:
/// `h_n = sum_{lambda |- n} p_lambda / z_lambda`.
pub fn complete_homogeneous(n: i64) -> SymPoly {
    if n < 0 {
        return SymPoly::zero();
    }
    if n == 0 {
        return SymPoly::one();
    }
    static CACHE: Lazy<Mutex<BTreeMap<u32, SymPoly>>> = Lazy::new(|| Mutex::new(BTreeMap::new()));
    let n = n as u32;
    if let Some(h) = CACHE.lock().unwrap().get(&n) {
        return h.clone();
    }
    let mut out = SymPoly::zero();
    for l in partitions_of(n) {
        let z: Rat = l.zee();
        out.add_term(l, ParamScalar::from_grat(GRat::from_rat(rat(1) / z)));
    }
    CACHE.lock().unwrap().insert(n, out.clone());
    out
}

/// Schur function in the power-sum basis, by the Jacobi-Trudi determinant
/// `S_R = det(h_{R_i - i + j})`.
pub fn schur(r: &Partition) -> SymPoly {
    static CACHE: Lazy<Mutex<BTreeMap<Partition, SymPoly>>> =
        Lazy::new(|| Mutex::new(BTreeMap::new()));
    if let Some(s) = CACHE.lock().unwrap().get(r) {
        return s.clone();
    }
    let out = skew_schur_jacobi_trudi(r, &Partition::empty());
    CACHE.lock().unwrap().insert(r.clone(), out.clone());
    out
}

/// Skew Schur function via the Jacobi-Trudi determinant
/// `S_{R/Q} = det(h_{R_i - Q_j - i + j})`. Returns zero when `Q` is not
/// contained in `R`.
pub(crate) fn skew_schur_jacobi_trudi(r: &Partition, q: &Partition) -> SymPoly {
    let l = r.len();
    if l == 0 {
        return if q.is_empty() {
            SymPoly::one()
        } else {
            SymPoly::zero()
        };
    }
    det(l, |i, j| {
        complete_homogeneous(r.part(i) as i64 - q.part(j) as i64 - i as i64 + j as i64)
    })
}

/// Hall inner product `<p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}`.
/// Pass `None` for the undeformed (`alpha = 1`) pairing.
pub fn hall_pair(f: &SymPoly, g: &SymPoly, alpha: Option<&ParamScalar>) -> ParamScalar {
    let mut acc = ParamScalar::zero();
    for (l, cf) in f.terms() {
        let cg = g.coeff(l);
        if cg.is_zero() {
            continue;
        }
        let mut v = cf.mul(&cg).mul(&ParamScalar::from_grat(GRat::from_rat(l.zee())));
        if let Some(a) = alpha {
            v = v.mul(&a.pow(l.len() as i64));
        }
        acc = acc.add(&v);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac_equal;
    use crate::partitions::{hooks, partitions_up_to, xi};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn half() -> ParamScalar {
        ParamScalar::from_ratio(1, 2)
    }

    #[test]
    fn schur_textbook_cases() {
        // S_[2] = (p1^2 + p2)/2
        let s2 = schur(&part("2"));
        assert!(s2.coeff(&part("1,1")).equals(&half()));
        assert!(s2.coeff(&part("2")).equals(&half()));
        // S_[1,1] = (p1^2 - p2)/2
        let s11 = schur(&part("1,1"));
        assert!(s11.coeff(&part("1,1")).equals(&half()));
        assert!(s11.coeff(&part("2")).equals(&half().neg()));
        // S_[2,1] = (p1^3 - p3)/3
        let s21 = schur(&part("2,1"));
        assert!(s21.coeff(&part("1,1,1")).equals(&ParamScalar::from_ratio(1, 3)));
        assert!(s21.coeff(&part("3")).equals(&ParamScalar::from_ratio(-1, 3)));
        assert!(s21.coeff(&part("2,1")).is_zero());
    }

    #[test]
    fn delta_evaluations() {
        assert!(schur(&part("2")).eval_delta(2).equals(&half()));
        assert!(schur(&part("1,1")).eval_delta(2).equals(&half().neg()));
        // only the p2^2 term survives in S_[4]
        assert!(schur(&part("4")).eval_delta(2).equals(&ParamScalar::from_ratio(1, 8)));
    }

    #[test]
    fn all_equal_evaluation_matches_content_formula() {
        let z = ParamScalar::named("z");
        for r in partitions_up_to(8, None) {
            let lhs = schur(&r).eval_all_equal(&z);
            let rhs = schur(&r).eval_delta(1).mul(&xi(&r, &z));
            assert!(frac_equal(&lhs, &rhs), "failed for {:?}", r);
        }
    }

    #[test]
    fn delta_one_is_inverse_hook_product() {
        for r in partitions_up_to(8, None) {
            let v = schur(&r).eval_delta(1);
            let hook_prod: i64 = hooks(&r).iter().map(|&h| h as i64).product();
            assert!(v.equals(&ParamScalar::from_ratio(1, hook_prod)), "{:?}", r);
        }
    }

    #[test]
    fn hook_formula_for_delta_s_magnitudes() {
        use crate::partitions::bracket;
        for s in [1u32, 2, 3] {
            for r in partitions_up_to(8, None) {
                let v = schur(&r).eval_delta(s);
                if v.is_zero() {
                    continue;
                }
                let denom: i64 = hooks(&r).iter().map(|&h| bracket(h as i64, s, 0)).product();
                let expect = ParamScalar::from_ratio(1, denom);
                assert!(
                    v.equals(&expect) || v.neg().equals(&expect),
                    "shape {:?} s={} value {}",
                    r,
                    s,
                    v
                );
            }
        }
    }

    #[test]
    fn schur_vanishes_with_too_few_variables() {
        let x = ParamScalar::named("x1");
        let y = ParamScalar::named("x2");
        let v = schur(&part("2,1,1")).eval_x(&[x, y]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn schur_at_x_values_matches_bialternant_case() {
        // S_[2](x, y) = x^2 + xy + y^2
        let x = ParamScalar::named("x1");
        let y = ParamScalar::named("x2");
        let v = schur(&part("2")).eval_x(&[x.clone(), y.clone()]).unwrap();
        let expect = x.pow(2).add(&x.mul(&y)).add(&y.pow(2));
        assert!(frac_equal(&v, &expect));
    }

    #[test]
    fn arity_mismatch_reported() {
        let f = SymPoly::power_sum(2).with_nvars(Some(3));
        let err = f.eval_x(&[ParamScalar::int(1)]).unwrap_err();
        assert_eq!(err, SymfunError::ArityMismatch { expected: 3, got: 1 });
    }

    #[test]
    fn hall_pairing_orthonormal_on_schur() {
        let s2 = schur(&part("2"));
        let s11 = schur(&part("1,1"));
        assert!(hall_pair(&s2, &s11, None).is_zero());
        assert!(hall_pair(&s2, &s2, None).is_one());
        assert!(hall_pair(&s11, &s11, None).is_one());
        // <p2, p2> = 2 undeformed, 2 alpha deformed
        let p2 = SymPoly::power_sum(2);
        assert!(hall_pair(&p2, &p2, None).equals(&ParamScalar::int(2)));
        let alpha = ParamScalar::named("alpha");
        assert!(hall_pair(&p2, &p2, Some(&alpha)).equals(&ParamScalar::int(2).mul(&alpha)));
    }

    #[test]
    fn schur_orthonormality_panel() {
        for r in partitions_up_to(5, None) {
            for q in partitions_up_to(5, None) {
                if r.size() != q.size() {
                    continue;
                }
                let v = hall_pair(&schur(&r), &schur(&q), None);
                if r == q {
                    assert!(v.is_one(), "norm of {:?}", r);
                } else {
                    assert!(v.is_zero(), "pair {:?} {:?}", r, q);
                }
            }
        }
    }
}
