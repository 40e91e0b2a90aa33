//! Multivariate polynomials over Gaussian rationals in named formal parameters.
//!
//! Parameters are interned process-wide; a [`Monomial`] is a sorted sparse
//! exponent vector. [`ParamPoly`] stores terms in a `BTreeMap` keyed by a graded
//! lexicographic monomial order, so leading terms and iteration order are
//! deterministic.

use super::gaussian::GRat;
use once_cell::sync::Lazy;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::RwLock;

struct Registry {
    names: Vec<String>,
    by_name: HashMap<String, u32>,
}

static REGISTRY: Lazy<RwLock<Registry>> = Lazy::new(|| {
    RwLock::new(Registry {
        names: Vec::new(),
        by_name: HashMap::new(),
    })
});

/// An interned formal parameter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Param(u32);

impl Param {
    /// Interns `name` (or returns the existing parameter of that name).
    pub fn named(name: &str) -> Param {
        {
            let reg = REGISTRY.read().unwrap();
            if let Some(&id) = reg.by_name.get(name) {
                return Param(id);
            }
        }
        let mut reg = REGISTRY.write().unwrap();
        if let Some(&id) = reg.by_name.get(name) {
            return Param(id);
        }
        let id = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.by_name.insert(name.to_string(), id);
        Param(id)
    }

    pub fn name(&self) -> String {
        REGISTRY.read().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A power product of parameters; exponents positive, sorted by parameter id.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pows: Vec<(Param, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(p: Param) -> Self {
        Monomial { pows: vec![(p, 1)] }
    }

    pub fn is_one(&self) -> bool {
        self.pows.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.pows.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.pows
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn pows(&self) -> &[(Param, u32)] {
        &self.pows
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.pows.len() + rhs.pows.len());
        let (mut i, mut j) = (0, 0);
        while i < self.pows.len() && j < rhs.pows.len() {
            match self.pows[i].0.cmp(&rhs.pows[j].0) {
                Ordering::Less => {
                    out.push(self.pows[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(rhs.pows[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.pows[i].0, self.pows[i].1 + rhs.pows[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.pows[i..]);
        out.extend_from_slice(&rhs.pows[j..]);
        Monomial { pows: out }
    }

    /// Exact monomial quotient, or `None` when an exponent would go negative.
    pub fn div(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.pows.len());
        let mut j = 0;
        for &(p, e) in &self.pows {
            let mut rem = e;
            while j < rhs.pows.len() && rhs.pows[j].0 < p {
                return None; // divisor has a variable we lack
            }
            if j < rhs.pows.len() && rhs.pows[j].0 == p {
                if rhs.pows[j].1 > e {
                    return None;
                }
                rem = e - rhs.pows[j].1;
                j += 1;
            }
            if rem > 0 {
                out.push((p, rem));
            }
        }
        if j < rhs.pows.len() {
            return None;
        }
        Some(Monomial { pows: out })
    }
}

/// Graded lexicographic order (total degree first, then exponents by parameter id).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let (mut i, mut j) = (0, 0);
                loop {
                    match (self.pows.get(i), other.pows.get(j)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(&(p, e)), Some(&(q, f))) => match p.cmp(&q) {
                            // Earlier variable present only on one side: that side
                            // is "more lexicographic", rank it higher.
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Equal => match e.cmp(&f) {
                                Ordering::Equal => {
                                    i += 1;
                                    j += 1;
                                }
                                ord => return ord,
                            },
                        },
                    }
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .pows
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.name()
                } else {
                    format!("{}^{}", p.name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Multivariate polynomial with Gaussian-rational coefficients.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, GRat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(GRat::one())
    }

    pub fn constant(c: GRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        ParamPoly { terms }
    }

    pub fn var(p: Param) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(p), GRat::one());
        ParamPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, GRat)>) -> Self {
        let mut out = ParamPoly::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant term.
    pub fn constant_term(&self) -> GRat {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(GRat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GRat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, p: Param) -> u32 {
        self.terms.keys().map(|m| m.degree_in(p)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Param> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for &(p, _) in m.pows() {
                out.insert(p);
            }
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: GRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading (monomial, coefficient) in the graded lex order. Panics on zero.
    pub fn leading(&self) -> (&Monomial, &GRat) {
        self.terms
            .iter()
            .next_back()
            .expect("leading term of zero polynomial")
    }

    pub fn add(&self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &GRat) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        // Multiply the smaller operand into the larger one.
        let (a, b) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ma, ca) in a.terms.iter() {
            for (mb, cb) in b.terms.iter() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * g`, or `None` when not divisible.
    pub fn div_exact(&self, g: &ParamPoly) -> Option<ParamPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        let (gm, gc) = {
            let (m, c) = g.leading();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&gm)?;
            let qc = &rc / &gc;
            // rem -= (qm, qc) * g
            for (m, c) in g.terms.iter() {
                rem.add_term(qm.mul(m), -&(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Evaluate at an assignment of every occurring parameter.
    pub fn eval(&self, assign: &BTreeMap<Param, GRat>) -> Result<GRat, Param> {
        let mut total = GRat::zero();
        for (m, c) in self.terms.iter() {
            let mut v = c.clone();
            for &(p, e) in m.pows() {
                let x = assign.get(&p).ok_or(p)?;
                v = &v * &x.pow(e as i64);
            }
            total += &v;
        }
        Ok(total)
    }

    /// Substitute a polynomial for one parameter.
    pub fn subst(&self, p: Param, value: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.degree_in(p);
            let rest = Monomial {
                pows: m.pows().iter().cloned().filter(|&(q, _)| q != p).collect(),
            };
            let base = ParamPoly::from_terms([(rest, c.clone())]);
            out = out.add(&base.mul(&value.pow(e)));
        }
        out
    }

    /// Shift one parameter: `p -> p + c`.
    pub fn shift(&self, p: Param, c: &GRat) -> ParamPoly {
        let repl = ParamPoly::var(p).add(&ParamPoly::constant(c.clone()));
        self.subst(p, &repl)
    }

    /// Partial derivative with respect to one parameter.
    pub fn differentiate(&self, p: Param) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.degree_in(p);
            if e == 0 {
                continue;
            }
            let reduced = Monomial {
                pows: m
                    .pows()
                    .iter()
                    .filter_map(|&(q, k)| {
                        if q == p {
                            if k > 1 {
                                Some((q, k - 1))
                            } else {
                                None
                            }
                        } else {
                            Some((q, k))
                        }
                    })
                    .collect(),
            };
            out.add_term(reduced, c * &GRat::from_int(e as i64));
        }
        out
    }

    /// Coefficients as a dense univariate polynomial in `p`; the entries are
    /// polynomials in the remaining parameters.
    pub fn coeffs_in(&self, p: Param) -> Vec<ParamPoly> {
        let d = self.degree_in(p) as usize;
        let mut out = vec![ParamPoly::zero(); d + 1];
        for (m, c) in self.terms.iter() {
            let e = m.degree_in(p) as usize;
            let rest = Monomial {
                pows: m.pows().iter().cloned().filter(|&(q, _)| q != p).collect(),
            };
            out[e].add_term(rest, c.clone());
        }
        out
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::display::poly_string(self))
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gaussian::rat;

    fn p(name: &str) -> ParamPoly {
        ParamPoly::var(Param::named(name))
    }

    #[test]
    fn arithmetic_basics() {
        let u = p("u");
        let v = p("v");
        let s = u.add(&v);
        let prod = s.mul(&s);
        // (u+v)^2 = u^2 + 2uv + v^2
        let mut expect = u.mul(&u);
        expect = expect.add(&u.mul(&v).scale(&GRat::from_int(2)));
        expect = expect.add(&v.mul(&v));
        assert_eq!(prod, expect);
    }

    #[test]
    fn exact_division() {
        let u = p("u");
        let v = p("v");
        let a = u.add(&v); // u+v
        let b = u.sub(&v).add(&ParamPoly::one()); // u-v+1
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(prod.add(&ParamPoly::one()).div_exact(&a).is_none());
    }

    #[test]
    fn substitution_shift() {
        let x = Param::named("x");
        let f = ParamPoly::var(x).pow(2); // x^2
        let g = f.shift(x, &GRat::from_int(1)); // (x+1)^2
        let expect = ParamPoly::var(x)
            .pow(2)
            .add(&ParamPoly::var(x).scale(&GRat::from_int(2)))
            .add(&ParamPoly::one());
        assert_eq!(g, expect);
    }

    #[test]
    fn eval_homomorphism() {
        let u = Param::named("u");
        let v = Param::named("v");
        let f = ParamPoly::var(u).mul(&ParamPoly::var(v)).add(&ParamPoly::one());
        let mut assign = BTreeMap::new();
        assign.insert(u, GRat::from_ratio(1, 2));
        assign.insert(v, GRat::from_int(4));
        assert_eq!(f.eval(&assign).unwrap(), GRat::from_rat(rat(3)));
    }
}
