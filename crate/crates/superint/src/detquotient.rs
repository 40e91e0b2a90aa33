//! Determinant-over-Vandermonde constructions for multivariate orthogonal
//! polynomial families.
//!
//! A [`Family`] packages single-variable data: the coefficients of the family
//! members over a graded base basis, the base basis's own expansion over
//! monomials in the base variable `t`, and a normalized moment functional on
//! the base basis. From these, the module computes
//!
//! * expansion coefficients of the multivariate family members over the
//!   multivariate base functions (and the inverse), via determinant minors of
//!   the single-variable coefficient matrix;
//! * exact normalized expectations through the Andreief identity,
//!   `<det f_j(t_i) / Delta> = det L(f_j t^{N-k}) / det M0`, which reduces
//!   every `N`-fold average against the squared Vandermonde to an `N x N`
//!   determinant of generalized moments.

use crate::algebra::{det, ParamScalar};
use crate::partitions::{subpartitions, Partition};
use std::collections::BTreeMap;
use std::sync::Mutex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetError {
    #[error("shape has more rows than variables")]
    ShapeTooLong,
    #[error("family diagonal coefficient vanishes at degree {0}; cannot invert")]
    NonInvertibleDiagonal(usize),
    #[error("normalization determinant vanishes")]
    SingularNormalization,
    #[error("expansion coefficient is zero")]
    ZeroCoefficient,
}

/// The base variable the family lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseVar {
    /// Ordinary families: `t = x`.
    X,
    /// Even families rewritten in `t = x^2`.
    XSquared,
}

type CoeffFn = Box<dyn Fn(usize, usize) -> ParamScalar + Send + Sync>;
type MomentFn = Box<dyn Fn(usize) -> ParamScalar + Send + Sync>;

#[derive(Default)]
struct Caches {
    coeff: BTreeMap<(usize, usize), ParamScalar>,
    inv_coeff: BTreeMap<(usize, usize), ParamScalar>,
    inv_depth: usize,
    basis_t: BTreeMap<usize, Vec<ParamScalar>>,
    moment_t: BTreeMap<usize, ParamScalar>,
}

/// A graded single-variable polynomial family with its base basis and
/// normalized moment functional.
pub struct Family {
    name: String,
    base: BaseVar,
    monic: bool,
    /// `P_n = sum_m coeff(n, m) theta_m`, zero for `m > n`.
    coeff: CoeffFn,
    /// `theta_m = sum_s basis_coeff(m, s) t^s`, zero for `s > m`.
    basis_coeff: CoeffFn,
    /// `L~(theta_m)` with `L~(theta_0) = L~(1) = 1`.
    moment: MomentFn,
    /// Whether the base basis is plain monomials (then the multivariate base
    /// functions are Schur polynomials).
    monomial_basis: bool,
    caches: Mutex<Caches>,
}

impl Family {
    pub fn new(
        name: impl Into<String>,
        base: BaseVar,
        monic: bool,
        monomial_basis: bool,
        coeff: CoeffFn,
        basis_coeff: CoeffFn,
        moment: MomentFn,
    ) -> Self {
        Family {
            name: name.into(),
            base,
            monic,
            coeff,
            basis_coeff,
            moment,
            monomial_basis,
            caches: Mutex::new(Caches::default()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> BaseVar {
        self.base
    }

    pub fn is_monic(&self) -> bool {
        self.monic
    }

    pub fn has_monomial_basis(&self) -> bool {
        self.monomial_basis
    }

    /// `P_n`'s coefficient on `theta_m` (cached).
    pub fn coeff(&self, n: usize, m: usize) -> ParamScalar {
        if m > n {
            return ParamScalar::zero();
        }
        {
            let caches = self.caches.lock().unwrap();
            if let Some(c) = caches.coeff.get(&(n, m)) {
                return c.clone();
            }
        }
        let c = (self.coeff)(n, m);
        self.caches.lock().unwrap().coeff.insert((n, m), c.clone());
        c
    }

    /// Inverse coefficients: `theta_n = sum_m inv_coeff(n, m) P_m`, by
    /// triangular back-substitution of the coefficient matrix.
    pub fn inv_coeff(&self, n: usize, m: usize) -> Result<ParamScalar, DetError> {
        if m > n {
            return Ok(ParamScalar::zero());
        }
        self.ensure_inverse(n)?;
        Ok(self.caches.lock().unwrap().inv_coeff[&(n, m)].clone())
    }

    fn ensure_inverse(&self, depth: usize) -> Result<(), DetError> {
        let current = self.caches.lock().unwrap().inv_depth;
        if current > depth {
            return Ok(());
        }
        let mut inv: BTreeMap<(usize, usize), ParamScalar> =
            self.caches.lock().unwrap().inv_coeff.clone();
        for n in 0..=depth {
            if inv.contains_key(&(n, n)) {
                continue;
            }
            let diag = self.coeff(n, n);
            if diag.is_zero() {
                return Err(DetError::NonInvertibleDiagonal(n));
            }
            inv.insert((n, n), diag.recip());
            // d_{n,m} = -(sum_{k>m} d_{n,k} c_{k,m}) / c_{m,m}
            for m in (0..n).rev() {
                let mut acc = ParamScalar::zero();
                for k in (m + 1)..=n {
                    let d = inv[&(n, k)].clone();
                    if d.is_zero() {
                        continue;
                    }
                    let c = self.coeff(k, m);
                    if c.is_zero() {
                        continue;
                    }
                    acc = acc.add(&d.mul(&c));
                }
                let cm = self.coeff(m, m);
                if cm.is_zero() {
                    return Err(DetError::NonInvertibleDiagonal(m));
                }
                inv.insert((n, m), acc.div(&cm).neg());
            }
        }
        let mut caches = self.caches.lock().unwrap();
        caches.inv_coeff = inv;
        caches.inv_depth = depth + 1;
        Ok(())
    }

    /// `theta_m` as a dense coefficient vector over `t^s`.
    pub fn basis_in_t(&self, m: usize) -> Vec<ParamScalar> {
        {
            let caches = self.caches.lock().unwrap();
            if let Some(v) = caches.basis_t.get(&m) {
                return v.clone();
            }
        }
        let v: Vec<ParamScalar> = (0..=m).map(|s| (self.basis_coeff)(m, s)).collect();
        assert!(
            !v[m].is_zero(),
            "base basis must be graded triangular with nonzero diagonal"
        );
        self.caches.lock().unwrap().basis_t.insert(m, v.clone());
        v
    }

    /// `P_n` as a dense coefficient vector over `t^s`.
    pub fn family_in_t(&self, n: usize) -> Vec<ParamScalar> {
        let mut out = vec![ParamScalar::zero(); n + 1];
        for m in 0..=n {
            let c = self.coeff(n, m);
            if c.is_zero() {
                continue;
            }
            for (s, b) in self.basis_in_t(m).iter().enumerate() {
                if !b.is_zero() {
                    out[s] = out[s].add(&c.mul(b));
                }
            }
        }
        out
    }

    /// `L~(theta_m)` (cached by the closure itself being cheap; kept direct).
    pub fn moment(&self, m: usize) -> ParamScalar {
        (self.moment)(m)
    }

    /// Extend the moment functional linearly to any polynomial in `t`, by
    /// converting to the base basis from the top degree down.
    pub fn moment_of_t_poly(&self, coeffs: &[ParamScalar]) -> ParamScalar {
        {
            // memoize the pure powers L~(t^s), the common building block
        }
        let mut rem: Vec<ParamScalar> = coeffs.to_vec();
        let mut total = ParamScalar::zero();
        for m in (0..rem.len()).rev() {
            if rem[m].is_zero() {
                continue;
            }
            let theta = self.basis_in_t(m);
            let b = rem[m].div(&theta[m]);
            for (s, ts) in theta.iter().enumerate() {
                rem[s] = rem[s].sub(&b.mul(ts));
            }
            total = total.add(&b.mul(&self.moment(m)));
        }
        total
    }

    /// `L~(t^s)` (cached).
    pub fn moment_of_power(&self, s: usize) -> ParamScalar {
        {
            let caches = self.caches.lock().unwrap();
            if let Some(v) = caches.moment_t.get(&s) {
                return v.clone();
            }
        }
        let mut coeffs = vec![ParamScalar::zero(); s + 1];
        coeffs[s] = ParamScalar::one();
        let v = self.moment_of_t_poly(&coeffs);
        self.caches.lock().unwrap().moment_t.insert(s, v.clone());
        v
    }
}

/// Expansion of one multivariate family member over the multivariate base
/// functions (or vice versa for the inverse direction).
#[derive(Clone, Debug)]
pub struct MultiExpansion {
    pub shape: Partition,
    pub nvars: usize,
    pub coeffs: BTreeMap<Partition, ParamScalar>,
}

impl MultiExpansion {
    pub fn coeff(&self, q: &Partition) -> ParamScalar {
        self.coeffs
            .get(q)
            .cloned()
            .unwrap_or_else(ParamScalar::zero)
    }

    /// Realize over Schur functions in the power-sum basis. Only meaningful
    /// when the underlying base basis is plain monomials.
    pub fn as_schur_sympoly(&self) -> crate::symfun::SymPoly {
        let mut out = crate::symfun::SymPoly::zero();
        for (q, c) in &self.coeffs {
            out = out.add(&crate::symfun::schur(q).scale(c));
        }
        out.with_nvars(Some(self.nvars))
    }
}

/// Shifted row degrees `lambda_j = R_j + N - j`, `j = 1..N` (strictly decreasing).
pub fn shifted_degrees(r: &Partition, n: usize) -> Result<Vec<usize>, DetError> {
    if r.len() > n {
        return Err(DetError::ShapeTooLong);
    }
    Ok((1..=n)
        .map(|j| r.part(j - 1) as usize + n - j)
        .collect())
}

/// Expansion of the multivariate family member `P_R` over the multivariate
/// base functions `Theta_Q`: coefficient at `Q` is the determinant minor
/// `det_{j,k} c_{lambda_j, mu_k}`.
pub fn multivariate(family: &Family, r: &Partition, n: usize) -> Result<MultiExpansion, DetError> {
    let lambdas = shifted_degrees(r, n)?;
    let mut coeffs = BTreeMap::new();
    for q in subpartitions(r) {
        let mus = shifted_degrees(&q, n)?;
        let c = det(n, |j, k| family.coeff(lambdas[j], mus[k]));
        if !c.is_zero() {
            coeffs.insert(q, c);
        }
    }
    Ok(MultiExpansion {
        shape: r.clone(),
        nvars: n,
        coeffs,
    })
}

/// Expansion of the multivariate base function `Theta_R` over the multivariate
/// family members, by triangular inversion of the single-variable coefficient
/// matrix followed by the same determinant-minor formula.
pub fn inverse_expansion(
    family: &Family,
    r: &Partition,
    n: usize,
) -> Result<MultiExpansion, DetError> {
    let lambdas = shifted_degrees(r, n)?;
    family.ensure_inverse(lambdas[0])?;
    let mut coeffs = BTreeMap::new();
    for q in subpartitions(r) {
        let mus = shifted_degrees(&q, n)?;
        let mut entries = vec![vec![ParamScalar::zero(); n]; n];
        for (j, &lj) in lambdas.iter().enumerate() {
            for (k, &mk) in mus.iter().enumerate() {
                entries[j][k] = family.inv_coeff(lj, mk)?;
            }
        }
        let c = det(n, |j, k| entries[j][k].clone());
        if !c.is_zero() {
            coeffs.insert(q, c);
        }
    }
    Ok(MultiExpansion {
        shape: r.clone(),
        nvars: n,
        coeffs,
    })
}

/// Multiply two dense `t`-coefficient vectors.
fn convolve(a: &[ParamScalar], b: &[ParamScalar]) -> Vec<ParamScalar> {
    let mut out = vec![ParamScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn t_power(s: usize) -> Vec<ParamScalar> {
    let mut v = vec![ParamScalar::zero(); s + 1];
    v[s] = ParamScalar::one();
    v
}

/// Normalized Andreief pairing: `det(L~(f_j * g_k)) / det(M0)` where `M0` is
/// the pure-monomial reference matrix. Equals the normalized expectation of
/// `det(f_j(t_i)) det(g_k(t_i)) / Delta(t)^2` under the product measure.
fn andreief_pair(
    family: &Family,
    fs: &[Vec<ParamScalar>],
    gs: &[Vec<ParamScalar>],
) -> Result<ParamScalar, DetError> {
    let n = fs.len();
    assert_eq!(n, gs.len());
    let mut entries = vec![vec![ParamScalar::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            entries[j][k] = family.moment_of_t_poly(&convolve(&fs[j], &gs[k]));
        }
    }
    let numer = det(n, |j, k| entries[j][k].clone());
    let mut ref_entries = vec![vec![ParamScalar::zero(); n]; n];
    for j in 0..n {
        for k in 0..n {
            ref_entries[j][k] = family.moment_of_power(2 * n - 2 - j - k);
        }
    }
    let denom = det(n, |j, k| ref_entries[j][k].clone());
    if denom.is_zero() {
        return Err(DetError::SingularNormalization);
    }
    Ok(numer.div(&denom))
}

/// Normalized expectation of the multivariate base function `Theta_R`.
pub fn andreief_expectation(
    family: &Family,
    r: &Partition,
    n: usize,
) -> Result<ParamScalar, DetError> {
    let lambdas = shifted_degrees(r, n)?;
    let fs: Vec<Vec<ParamScalar>> = lambdas.iter().map(|&l| family.basis_in_t(l)).collect();
    let gs: Vec<Vec<ParamScalar>> = (1..=n).map(|k| t_power(n - k)).collect();
    andreief_pair(family, &fs, &gs)
}

/// Normalized expectation `<Theta^F_R * P^G_Q>`; both families must share the
/// base variable and the moment functional.
pub fn andreief_bilinear(
    f_family: &Family,
    g_family: &Family,
    r: &Partition,
    q: &Partition,
    n: usize,
) -> Result<ParamScalar, DetError> {
    let lambdas = shifted_degrees(r, n)?;
    let mus = shifted_degrees(q, n)?;
    let fs: Vec<Vec<ParamScalar>> = lambdas.iter().map(|&l| f_family.basis_in_t(l)).collect();
    let gs: Vec<Vec<ParamScalar>> = mus.iter().map(|&m| g_family.family_in_t(m)).collect();
    andreief_pair(f_family, &fs, &gs)
}

/// Outcome of an orthogonality probe for a pair of multivariate family members.
#[derive(Clone, Debug)]
pub struct Orthogonality {
    pub pair_value: ParamScalar,
    /// True when `R != Q` and the pairing vanished.
    pub orthogonal: bool,
    /// The squared norm when `R = Q`.
    pub norm: Option<ParamScalar>,
}

/// Pair `P_R` with `P_Q` under the family's measure via the Andreief identity.
pub fn orthogonality_check(
    family: &Family,
    r: &Partition,
    q: &Partition,
    n: usize,
) -> Result<Orthogonality, DetError> {
    let lambdas = shifted_degrees(r, n)?;
    let mus = shifted_degrees(q, n)?;
    let fs: Vec<Vec<ParamScalar>> = lambdas.iter().map(|&l| family.family_in_t(l)).collect();
    let gs: Vec<Vec<ParamScalar>> = mus.iter().map(|&m| family.family_in_t(m)).collect();
    let value = andreief_pair(family, &fs, &gs)?;
    if r == q {
        Ok(Orthogonality {
            pair_value: value.clone(),
            orthogonal: false,
            norm: Some(value),
        })
    } else {
        Ok(Orthogonality {
            orthogonal: value.is_zero(),
            pair_value: value,
            norm: None,
        })
    }
}

/// Realize the multivariate family member in explicit variables:
/// `det(P_{lambda_j}(t_i)) / Delta(t)` at the given `t` values (typically
/// fresh symbols). Exact polynomial division by the Vandermonde.
pub fn multivariate_at(
    family: &Family,
    r: &Partition,
    ts: &[ParamScalar],
) -> Result<ParamScalar, DetError> {
    let n = ts.len();
    let lambdas = shifted_degrees(r, n)?;
    let polys: Vec<Vec<ParamScalar>> = lambdas.iter().map(|&l| family.family_in_t(l)).collect();
    alternant_over_vandermonde(&polys, ts)
}

/// Same as [`multivariate_at`] but for the base functions `Theta_R`.
pub fn theta_multivariate_at(
    family: &Family,
    r: &Partition,
    ts: &[ParamScalar],
) -> Result<ParamScalar, DetError> {
    let n = ts.len();
    let lambdas = shifted_degrees(r, n)?;
    let polys: Vec<Vec<ParamScalar>> = lambdas.iter().map(|&l| family.basis_in_t(l)).collect();
    alternant_over_vandermonde(&polys, ts)
}

fn eval_t_poly(coeffs: &[ParamScalar], t: &ParamScalar) -> ParamScalar {
    let mut acc = ParamScalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(t).add(c);
    }
    acc
}

/// `det(p_j(t_i)) / prod_{i<j}(t_i - t_j)`; the division is exact because the
/// alternant vanishes whenever two arguments coincide.
fn alternant_over_vandermonde(
    polys: &[Vec<ParamScalar>],
    ts: &[ParamScalar],
) -> Result<ParamScalar, DetError> {
    let n = ts.len();
    if n == 0 {
        return Ok(ParamScalar::one());
    }
    let alternant = det(n, |i, j| eval_t_poly(&polys[j], &ts[i]));
    let mut vandermonde = ParamScalar::one();
    for i in 0..n {
        for j in (i + 1)..n {
            vandermonde = vandermonde.mul(&ts[i].sub(&ts[j]));
        }
    }
    Ok(alternant.div(&vandermonde).reduce())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{double_factorial_odd, frac_equal, GRat};
    use crate::models;
    use crate::partitions::partitions_up_to;
    use crate::symfun::schur;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_family_reproduces_schur() {
        let fam = models::monomial_observable(models::gaussian_model().moments());
        for n in 1..=3usize {
            for r in partitions_up_to(4, Some(n)) {
                let exp = multivariate(&fam, &r, n).unwrap();
                assert_eq!(exp.coeffs.len(), 1, "R={:?} N={}", r, n);
                assert!(exp.coeff(&r).is_one());
            }
        }
    }

    #[test]
    fn hermite_two_by_two_expansion() {
        let fam = models::gaussian_model().family();
        // N=2, R=[2]: H_[2] = S_[2] - 3
        let exp = multivariate(&fam, &part("2"), 2).unwrap();
        assert!(exp.coeff(&part("2")).is_one());
        assert!(exp.coeff(&Partition::empty()).equals(&ParamScalar::int(-3)));
        assert_eq!(exp.coeffs.len(), 2);
        // N=1, R=[2]: plain H_2 = x^2 - 1
        let exp = multivariate(&fam, &part("2"), 1).unwrap();
        assert!(exp.coeff(&part("2")).is_one());
        assert!(exp.coeff(&Partition::empty()).equals(&ParamScalar::int(-1)));
        // inverse: S_[2] = H_[2] + 3 at N=2
        let inv = inverse_expansion(&fam, &part("2"), 2).unwrap();
        assert!(inv.coeff(&part("2")).is_one());
        assert!(inv.coeff(&Partition::empty()).equals(&ParamScalar::int(3)));
        // degree-1 fixed point
        let inv = inverse_expansion(&fam, &part("1"), 3).unwrap();
        assert_eq!(inv.coeffs.len(), 1);
        assert!(inv.coeff(&part("1")).is_one());
    }

    #[test]
    fn inverse_pair_identity() {
        // sum_P C_RP Cv_PQ = delta_RQ
        let models: Vec<Family> = vec![
            models::gaussian_model().family(),
            models::selberg_model_symbolic().family(),
            models::mp_model_symbolic().family(),
            models::wilson_model_symbolic().family(),
        ];
        for fam in &models {
            for n in 1..=2usize {
                for r in partitions_up_to(3, Some(n)) {
                    let fwd = multivariate(&fam, &r, n).unwrap();
                    let mut total: BTreeMap<Partition, ParamScalar> = BTreeMap::new();
                    for (p, c) in &fwd.coeffs {
                        let back = inverse_expansion(&fam, p, n).unwrap();
                        for (q, d) in &back.coeffs {
                            let entry = total.entry(q.clone()).or_insert_with(ParamScalar::zero);
                            *entry = entry.add(&c.mul(d));
                        }
                    }
                    for (q, v) in &total {
                        if q == &r {
                            assert!(v.is_one(), "family {} R={:?}", fam.name(), r);
                        } else {
                            assert!(v.is_zero(), "family {} R={:?} Q={:?}", fam.name(), r, q);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gaussian_expectation_examples() {
        let fam = models::monomial_observable(models::gaussian_model().moments());
        // <S_[2]> at N=2 equals 3 = N(N+1)/2
        let v = andreief_expectation(&fam, &part("2"), 2).unwrap();
        assert!(v.equals(&ParamScalar::int(3)));
        // empty shape normalizes to 1
        let v = andreief_expectation(&fam, &Partition::empty(), 3).unwrap();
        assert!(v.is_one());
        // <S_[1,1]> at N=2 equals -1
        let v = andreief_expectation(&fam, &part("1,1"), 2).unwrap();
        assert!(v.equals(&ParamScalar::int(-1)));
    }

    #[test]
    fn beta_moment_example() {
        let fam = models::monomial_observable(models::selberg_model_symbolic().moments());
        let u = ParamScalar::named("u");
        let v = ParamScalar::named("v");
        let got = andreief_expectation(&fam, &part("1"), 1).unwrap();
        let expect = u
            .add(&ParamScalar::one())
            .div(&u.add(&v).add(&ParamScalar::int(2)));
        assert!(frac_equal(&got, &expect));
    }

    #[test]
    fn bilinear_oracle_examples() {
        let gauss = models::gaussian_model();
        let mono = models::monomial_observable(gauss.moments());
        let herm = gauss.family();
        // <x H_1> = <x^2> = 1 at N=1
        let v = andreief_bilinear(&mono, &herm, &part("1"), &part("1"), 1).unwrap();
        assert!(v.is_one());
        // <H_empty H_empty> = 1
        let v = andreief_bilinear(&herm, &herm, &Partition::empty(), &Partition::empty(), 2)
            .unwrap();
        assert!(v.is_one());
        // <S_[2] H_empty> = <S_[2]> = 3 at N=2: the two oracles agree
        let v = andreief_bilinear(&mono, &herm, &part("2"), &Partition::empty(), 2).unwrap();
        assert!(v.equals(&ParamScalar::int(3)));
    }

    #[test]
    fn hermite_orthogonality_via_andreief() {
        let herm = models::gaussian_model().family();
        let v = orthogonality_check(&herm, &part("2"), &part("1,1"), 2).unwrap();
        assert!(v.orthogonal);
        let v = orthogonality_check(&herm, &part("1"), &part("1"), 1).unwrap();
        assert!(v.norm.unwrap().is_one());
        // all equal-size distinct pairs vanish
        for r in partitions_up_to(4, Some(2)) {
            for q in partitions_up_to(4, Some(2)) {
                if r == q || r.size() != q.size() {
                    continue;
                }
                let v = orthogonality_check(&herm, &r, &q, 2).unwrap();
                assert!(v.orthogonal, "pair {:?} {:?}", r, q);
            }
        }
    }

    #[test]
    fn moment_consistency_between_oracles() {
        // <Theta_R> computed by Andreief equals the Theta-over-family inverse
        // expansion coefficient at the empty shape times <P_empty-part>, i.e.
        // the inverse-route expectation.
        for (fam, obs) in [
            (
                models::gaussian_model().family(),
                models::monomial_observable(models::gaussian_model().moments()),
            ),
            (
                models::selberg_model_symbolic().family(),
                models::monomial_observable(models::selberg_model_symbolic().moments()),
            ),
        ] {
            for n in 1..=3usize {
                for r in partitions_up_to(3, Some(n)) {
                    let direct = andreief_expectation(&obs, &r, n).unwrap();
                    let inv = inverse_expansion(&fam, &r, n).unwrap();
                    // <Theta_R> = Cv_{R,empty} * <P_empty> and <P_empty> = 1
                    // for monic families (the reference normalization).
                    let via_inverse = inv.coeff(&Partition::empty());
                    assert!(
                        frac_equal(&direct, &via_inverse),
                        "family {} R={:?} N={}",
                        fam.name(),
                        r,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn wilson_base_is_monic_in_y() {
        let fam = models::wilson_model_symbolic().family();
        for n in 0..=8usize {
            let theta = fam.basis_in_t(n);
            assert!(theta[n].is_one(), "theta_{} diagonal", n);
        }
    }

    #[test]
    fn gaussian_moments_from_conversion() {
        let fam = models::gaussian_model().family();
        for k in 0..6usize {
            let even = fam.moment_of_power(2 * k);
            assert!(even.equals(&ParamScalar::from_grat(GRat::from_rat(
                double_factorial_odd(k as u32)
            ))));
            let odd = fam.moment_of_power(2 * k + 1);
            assert!(odd.is_zero());
        }
    }

    #[test]
    fn staircase_realization_matches_expansion() {
        // det/Delta realization agrees with the Schur expansion evaluated at x
        let fam = models::gaussian_model().family();
        let xs: Vec<ParamScalar> = (1..=2).map(|i| ParamScalar::named(&format!("x{}", i))).collect();
        let r = part("2,1");
        let direct = multivariate_at(&fam, &r, &xs).unwrap();
        let exp = multivariate(&fam, &r, 2).unwrap();
        let mut via = ParamScalar::zero();
        for (q, c) in &exp.coeffs {
            via = via.add(&schur(q).eval_x(&xs).unwrap().mul(c));
        }
        assert!(frac_equal(&direct, &via));
    }
}
