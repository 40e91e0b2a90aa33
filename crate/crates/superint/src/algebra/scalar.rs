//! Exact rational functions in formal parameters.
//!
//! A [`ParamScalar`] is a fraction of [`ParamPoly`]s kept in partially factored
//! form: an overall Gaussian-rational scalar times a multiset of monic
//! numerator factors over a multiset of monic denominator factors. Products and
//! quotients are multiset operations; sums expand only the non-shared residue,
//! then try to cancel denominator factors by exact division. Equality is decided
//! by cross-multiplication (no polynomial GCD is ever required).

use super::gaussian::GRat;
use super::poly::{Param, ParamPoly};
use std::collections::BTreeMap;
use std::fmt;

type Factors = BTreeMap<ParamPoly, u32>;

fn factors_mul(a: &Factors, b: &Factors) -> Factors {
    let mut out = a.clone();
    for (f, m) in b {
        *out.entry(f.clone()).or_insert(0) += m;
    }
    out
}

/// Multiset minimum (gcd of the factored parts).
fn factors_min(a: &Factors, b: &Factors) -> Factors {
    let mut out = Factors::new();
    for (f, m) in a {
        if let Some(n) = b.get(f) {
            out.insert(f.clone(), *m.min(n));
        }
    }
    out
}

/// Multiset maximum (lcm of the factored parts).
fn factors_max(a: &Factors, b: &Factors) -> Factors {
    let mut out = a.clone();
    for (f, m) in b {
        let e = out.entry(f.clone()).or_insert(0);
        *e = (*e).max(*m);
    }
    out
}

/// Multiset difference `a - b`; requires `b <= a`.
fn factors_sub(a: &Factors, b: &Factors) -> Factors {
    let mut out = a.clone();
    for (f, m) in b {
        match out.get_mut(f) {
            Some(e) if *e > *m => *e -= m,
            Some(e) if *e == *m => {
                out.remove(f);
            }
            _ => panic!("multiset difference underflow"),
        }
    }
    out
}

fn factors_expand(fs: &Factors) -> ParamPoly {
    let mut acc = ParamPoly::one();
    for (f, m) in fs {
        for _ in 0..*m {
            acc = acc.mul(f);
        }
    }
    acc
}

/// Split a polynomial into (leading coefficient, monic part).
/// Returns `(c, None)` for constants.
fn normalize(f: ParamPoly) -> (GRat, Option<ParamPoly>) {
    if f.is_zero() {
        return (GRat::zero(), None);
    }
    if f.is_constant() {
        return (f.constant_term(), None);
    }
    let lc = f.leading().1.clone();
    if lc.is_one() {
        (lc, Some(f))
    } else {
        let monic = f.scale(&lc.inv());
        (lc, Some(monic))
    }
}

/// Exact scalar: a fraction of multivariate parameter polynomials.
#[derive(Clone)]
pub struct ParamScalar {
    scalar: GRat,
    num: Factors,
    den: Factors,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            scalar: GRat::zero(),
            num: Factors::new(),
            den: Factors::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_grat(GRat::one())
    }

    pub fn from_grat(c: GRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamScalar {
            scalar: c,
            num: Factors::new(),
            den: Factors::new(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from_grat(GRat::from_int(n))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_grat(GRat::from_ratio(p, q))
    }

    pub fn imaginary_unit() -> Self {
        Self::from_grat(GRat::i())
    }

    pub fn var(p: Param) -> Self {
        Self::from_poly(ParamPoly::var(p))
    }

    pub fn named(name: &str) -> Self {
        Self::var(Param::named(name))
    }

    pub fn from_poly(f: ParamPoly) -> Self {
        let (c, monic) = normalize(f);
        if c.is_zero() {
            return Self::zero();
        }
        let mut num = Factors::new();
        if let Some(m) = monic {
            num.insert(m, 1);
        }
        ParamScalar {
            scalar: c,
            num,
            den: Factors::new(),
        }
    }

    /// Build directly from a numerator and denominator polynomial.
    pub fn from_frac(num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_poly(num).div(&Self::from_poly(den))
    }

    fn repair(mut self) -> Self {
        // Cancel factors present in both num and den, then retry exact division
        // of composite numerator factors against denominator factors.
        let common = factors_min(&self.num, &self.den);
        if !common.is_empty() {
            self.num = factors_sub(&self.num, &common);
            self.den = factors_sub(&self.den, &common);
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.num.is_empty() && self.den.is_empty()
    }

    pub fn mul(&self, rhs: &ParamScalar) -> ParamScalar {
        if self.is_zero() || rhs.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar {
            scalar: &self.scalar * &rhs.scalar,
            num: factors_mul(&self.num, &rhs.num),
            den: factors_mul(&self.den, &rhs.den),
        }
        .repair()
    }

    pub fn div(&self, rhs: &ParamScalar) -> ParamScalar {
        self.mul(&rhs.recip())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> ParamScalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        ParamScalar {
            scalar: self.scalar.inv(),
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn neg(&self) -> ParamScalar {
        if self.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar {
            scalar: -&self.scalar,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &ParamScalar) -> ParamScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let shared_num = factors_min(&self.num, &rhs.num);
        let lcd = factors_max(&self.den, &rhs.den);
        let left = factors_expand(&factors_sub(&self.num, &shared_num))
            .mul(&factors_expand(&factors_sub(&lcd, &self.den)))
            .scale(&self.scalar);
        let right = factors_expand(&factors_sub(&rhs.num, &shared_num))
            .mul(&factors_expand(&factors_sub(&lcd, &rhs.den)))
            .scale(&rhs.scalar);
        let bracket = left.add(&right);
        let (mut c, monic) = normalize(bracket);
        if c.is_zero() {
            return ParamScalar::zero();
        }
        let mut num = shared_num;
        let mut den = lcd;
        if let Some(mut f) = monic {
            // Try to cancel the expanded residue against denominator factors.
            let keys: Vec<ParamPoly> = den.keys().cloned().collect();
            for d in keys {
                while den.get(&d).copied().unwrap_or(0) > 0 {
                    if f.is_constant() {
                        break;
                    }
                    match f.div_exact(&d) {
                        Some(q) => {
                            let (qc, qm) = normalize(q);
                            c = &c * &qc;
                            match qm {
                                Some(m) => f = m,
                                None => f = ParamPoly::one(),
                            }
                            let e = den.get_mut(&d).unwrap();
                            *e -= 1;
                            if *e == 0 {
                                den.remove(&d);
                            }
                        }
                        None => break,
                    }
                }
            }
            if !f.is_constant() {
                *num.entry(f).or_insert(0) += 1;
            } else {
                c = &c * &f.constant_term();
            }
        }
        if c.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar {
            scalar: c,
            num,
            den,
        }
        .repair()
    }

    pub fn sub(&self, rhs: &ParamScalar) -> ParamScalar {
        self.add(&rhs.neg())
    }

    pub fn pow(&self, e: i64) -> ParamScalar {
        if e < 0 {
            return self.recip().pow(-e);
        }
        let mut out = ParamScalar::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// True when the value is a polynomial (empty denominator).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The value as a single expanded polynomial, if the denominator is trivial.
    pub fn to_poly(&self) -> Option<ParamPoly> {
        if !self.den.is_empty() {
            return None;
        }
        Some(self.expand_num())
    }

    /// Numerator (including the scalar) as one expanded polynomial.
    pub fn expand_num(&self) -> ParamPoly {
        factors_expand(&self.num).scale(&self.scalar)
    }

    /// Denominator as one expanded polynomial (1 when trivial).
    pub fn expand_den(&self) -> ParamPoly {
        factors_expand(&self.den)
    }

    pub fn num_factors(&self) -> &Factors {
        &self.num
    }

    pub fn den_factors(&self) -> &Factors {
        &self.den
    }

    pub fn scalar_part(&self) -> &GRat {
        &self.scalar
    }

    /// Exact equality of the represented rational functions.
    pub fn equals(&self, rhs: &ParamScalar) -> bool {
        if self.scalar == rhs.scalar && self.num == rhs.num && self.den == rhs.den {
            return true;
        }
        self.sub(rhs).is_zero()
    }

    /// Every parameter occurring anywhere in the fraction.
    pub fn vars(&self) -> std::collections::BTreeSet<Param> {
        let mut out = std::collections::BTreeSet::new();
        for f in self.num.keys().chain(self.den.keys()) {
            out.extend(f.vars());
        }
        out
    }

    /// Upper bound for the total degree of numerator and denominator.
    pub fn degree_bound(&self) -> u32 {
        let d = |fs: &Factors| -> u32 { fs.iter().map(|(f, m)| f.total_degree() * m).sum() };
        d(&self.num).max(d(&self.den))
    }

    /// Retry exact-division cancellation of the whole (expanded) numerator
    /// against every denominator factor. Used after constructions that are
    /// known to be polynomial but arrive as a formal quotient, e.g. an
    /// alternant divided by the Vandermonde.
    pub fn reduce(&self) -> ParamScalar {
        if self.is_zero() || self.den.is_empty() || self.num.is_empty() {
            return self.clone();
        }
        let mut f = factors_expand(&self.num);
        let mut c = self.scalar.clone();
        let mut den = self.den.clone();
        let keys: Vec<ParamPoly> = den.keys().cloned().collect();
        for d in keys {
            while den.get(&d).copied().unwrap_or(0) > 0 {
                if f.is_constant() {
                    break;
                }
                match f.div_exact(&d) {
                    Some(q) => {
                        let (qc, qm) = normalize(q);
                        c = &c * &qc;
                        f = qm.unwrap_or_else(ParamPoly::one);
                        let e = den.get_mut(&d).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            den.remove(&d);
                        }
                    }
                    None => break,
                }
            }
        }
        let mut num = Factors::new();
        if !f.is_constant() {
            num.insert(f, 1);
        } else {
            c = &c * &f.constant_term();
        }
        if c.is_zero() {
            return ParamScalar::zero();
        }
        ParamScalar {
            scalar: c,
            num,
            den,
        }
    }

    /// Substitute a polynomial for a parameter throughout.
    pub fn subst_poly(&self, p: Param, value: &ParamPoly) -> ParamScalar {
        if self.is_zero() {
            return ParamScalar::zero();
        }
        let mut out = ParamScalar::from_grat(self.scalar.clone());
        for (f, m) in &self.num {
            out = out.mul(&ParamScalar::from_poly(f.subst(p, value)).pow(*m as i64));
        }
        for (f, m) in &self.den {
            let sub = ParamScalar::from_poly(f.subst(p, value));
            assert!(!sub.is_zero(), "substitution annihilates a denominator");
            out = out.div(&sub.pow(*m as i64));
        }
        out
    }

    /// Evaluate at a full assignment of parameters.
    pub fn eval(&self, assign: &BTreeMap<Param, GRat>) -> Result<GRat, EvalError> {
        if self.is_zero() {
            return Ok(GRat::zero());
        }
        let mut v = self.scalar.clone();
        for (f, m) in &self.num {
            let x = f.eval(assign).map_err(EvalError::UnknownParameter)?;
            v = &v * &x.pow(*m as i64);
        }
        for (f, m) in &self.den {
            let x = f.eval(assign).map_err(EvalError::UnknownParameter)?;
            if x.is_zero() {
                return Err(EvalError::DenominatorVanished);
            }
            v = &v * &x.pow(-(*m as i64));
        }
        Ok(v)
    }
}

/// Errors from evaluating a [`ParamScalar`] at a point.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("denominator vanished at the assignment")]
    DenominatorVanished,
    #[error("no value assigned for parameter {0:?}")]
    UnknownParameter(Param),
}

/// Cross-multiplication equality of two exact scalars.
pub fn frac_equal(x: &ParamScalar, y: &ParamScalar) -> bool {
    x.equals(y)
}

/// Ascending Pochhammer product `x (x+1) ... (x+n-1)`; 1 when `n = 0`.
pub fn pochhammer(x: &ParamScalar, n: u32) -> ParamScalar {
    let mut acc = ParamScalar::one();
    for k in 0..n {
        acc = acc.mul(&x.add(&ParamScalar::int(k as i64)));
    }
    acc
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::display::scalar_string(self))
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> ParamScalar {
        ParamScalar::named(name)
    }

    #[test]
    fn pochhammer_values() {
        let z = v("z");
        assert!(pochhammer(&z, 0).is_one());
        let p3 = pochhammer(&z, 3);
        let expect = z
            .mul(&z.add(&ParamScalar::int(1)))
            .mul(&z.add(&ParamScalar::int(2)));
        assert!(p3.equals(&expect));
        // Splitting law (x)_{m+n} = (x)_m (x+m)_n
        for m in 0..4u32 {
            for n in 0..4u32 {
                let lhs = pochhammer(&z, m + n);
                let rhs = pochhammer(&z, m).mul(&pochhammer(&z.add(&ParamScalar::int(m as i64)), n));
                assert!(lhs.equals(&rhs), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn fraction_equality_by_cross_multiplication() {
        let u = v("u");
        let one = ParamScalar::one();
        // 1/(1-u) written two ways
        let a = one.div(&one.sub(&u));
        let b = u.div(&u.mul(&one.sub(&u)));
        assert!(a.equals(&b));
        let z = v("z");
        let c = z.add(&one).div(&z);
        let d = z.div(&z.add(&one));
        assert!(!c.equals(&d));
    }

    #[test]
    fn addition_cancels_factored_denominators() {
        let u = v("u");
        let one = ParamScalar::one();
        // u/(1-u) + 1 = 1/(1-u)
        let lhs = u.div(&one.sub(&u)).add(&one);
        let rhs = one.div(&one.sub(&u));
        assert!(lhs.equals(&rhs));
        // and the denominators stay factored rather than expanded
        assert_eq!(lhs.den_factors().len(), 1);
    }

    #[test]
    fn subtraction_to_zero() {
        let a = v("a");
        let b = v("b");
        let x = a.add(&b).pow(3).div(&a.sub(&b));
        assert!(x.sub(&x.clone()).is_zero());
    }

    #[test]
    fn residue_cancellation_in_sums() {
        let z = v("z");
        let one = ParamScalar::one();
        // 1/z - 1/(z+1) = 1/(z(z+1))
        let lhs = one.div(&z).sub(&one.div(&z.add(&one)));
        let rhs = one.div(&z.mul(&z.add(&one)));
        assert!(lhs.equals(&rhs));
    }
}
