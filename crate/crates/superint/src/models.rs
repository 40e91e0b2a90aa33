//! Concrete family data: Hermite, shifted Jacobi, Meixner-Pollaczek, and
//! Wilson. Single-variable expansion coefficients, base bases, normalized
//! moment functionals, closed-form expectation targets, and the single-variable
//! differential/difference/Rodrigues identities.
//!
//! Conventions fixed here:
//! * Hermite polynomials are probabilist (`weight e^{-x^2/2}`, monic,
//!   `H'' - x H' + n H = 0`).
//! * Meixner-Pollaczek phases run through `w = e^{-i phi}`, so `u = w^2`
//!   and every stray half-power of `u` stays exact.
//! * Wilson objects live in the even variable `y = x^2`; the base functions
//!   `theta_n(y) = prod_k ((a+k)^2 + y)` are monic in `y`.

use crate::algebra::{factorial, frac_equal, pochhammer, rat, GRat, Param, ParamPoly, ParamScalar};
use crate::detquotient::{BaseVar, Family};
use crate::partitions::{xi, Partition};
use crate::symfun::schur;
use std::sync::Arc;

/// Identifies one of the four concrete measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelId {
    GaussianHermite,
    SelbergJacobi,
    MeixnerPollaczek,
    Wilson,
}

impl ModelId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModelId::GaussianHermite => "gaussian-hermite",
            ModelId::SelbergJacobi => "selberg-jacobi",
            ModelId::MeixnerPollaczek => "meixner-pollaczek",
            ModelId::Wilson => "wilson",
        }
    }
}

/// A measure with its parameter values (exact scalars, symbolic or concrete).
#[derive(Clone)]
pub enum Model {
    Gaussian,
    Jacobi {
        u: ParamScalar,
        v: ParamScalar,
    },
    MeixnerPollaczek {
        lambda: ParamScalar,
        u: ParamScalar,
        /// `w` with `w^2 = u`; present only when the phase bookkeeping is
        /// consistent (symbolic `u`). Required for the polynomial family
        /// itself, not for moments or base functions.
        w: Option<ParamScalar>,
        moments: MpMomentConvention,
    },
    Wilson {
        a: ParamScalar,
        b: ParamScalar,
        c: ParamScalar,
        d: ParamScalar,
    },
}

pub fn gaussian_model() -> Model {
    Model::Gaussian
}

pub fn selberg_model(u: ParamScalar, v: ParamScalar) -> Model {
    Model::Jacobi { u, v }
}

pub fn selberg_model_symbolic() -> Model {
    selberg_model(ParamScalar::named("u"), ParamScalar::named("v"))
}

/// Which value the Meixner-Pollaczek moment functional takes on the base
/// functions. The printed moment formula and the printed inversion formula
/// disagree by a factor `u^n`; only one of them makes the `q_n` orthogonal
/// under the functional. Both are implemented; the verification lab
/// adjudicates per identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MpMomentConvention {
    /// `L~(theta_n) = (-1)^n (u/(u-1))^n (2 lambda)_n`, the moment formula as
    /// printed. Violates `L~(q_n) = 0`.
    PaperMoments,
    /// `L~(theta_n) = (2 lambda)_n / (1-u)^n`, the unique functional with
    /// `L~(1) = 1` that is orthogonal to every `q_n`, `n >= 1`; consistent
    /// with the printed inversion formula.
    OrthogonalityConsistent,
}

pub fn mp_model(
    lambda: ParamScalar,
    u: ParamScalar,
    w: Option<ParamScalar>,
    moments: MpMomentConvention,
) -> Model {
    Model::MeixnerPollaczek {
        lambda,
        u,
        w,
        moments,
    }
}

/// Symbolic Meixner-Pollaczek model: parameters `lambda` and `w`, with
/// `u = w^2` substituted everywhere `u` occurs.
pub fn mp_model_symbolic() -> Model {
    mp_model_symbolic_with(MpMomentConvention::PaperMoments)
}

pub fn mp_model_symbolic_with(moments: MpMomentConvention) -> Model {
    let w = ParamScalar::named("w");
    Model::MeixnerPollaczek {
        lambda: ParamScalar::named("lambda"),
        u: w.mul(&w),
        w: Some(w),
        moments,
    }
}

/// Symbolic Meixner-Pollaczek model in `u` alone (moments and base functions
/// only; no polynomial family).
pub fn mp_model_in_u(moments: MpMomentConvention) -> Model {
    Model::MeixnerPollaczek {
        lambda: ParamScalar::named("lambda"),
        u: ParamScalar::named("u"),
        w: None,
        moments,
    }
}

pub fn wilson_model(
    a: ParamScalar,
    b: ParamScalar,
    c: ParamScalar,
    d: ParamScalar,
) -> Model {
    Model::Wilson { a, b, c, d }
}

pub fn wilson_model_symbolic() -> Model {
    wilson_model(
        ParamScalar::named("a"),
        ParamScalar::named("b"),
        ParamScalar::named("c"),
        ParamScalar::named("d"),
    )
}

impl Model {
    pub fn id(&self) -> ModelId {
        match self {
            Model::Gaussian => ModelId::GaussianHermite,
            Model::Jacobi { .. } => ModelId::SelbergJacobi,
            Model::MeixnerPollaczek { .. } => ModelId::MeixnerPollaczek,
            Model::Wilson { .. } => ModelId::Wilson,
        }
    }

    /// `z = a + b + c + d` for the Wilson model.
    pub fn wilson_z(&self) -> ParamScalar {
        match self {
            Model::Wilson { a, b, c, d } => a.add(b).add(c).add(d),
            _ => panic!("wilson_z on a non-Wilson model"),
        }
    }

    /// The orthogonal polynomial family over its base basis, with the model's
    /// normalized moment functional attached.
    pub fn family(&self) -> Family {
        match self {
            Model::Gaussian => Family::new(
                "gaussian-hermite",
                BaseVar::X,
                true,
                true,
                Box::new(|n, m| hermite_coeff(n, m)),
                Box::new(identity_basis),
                Box::new(gaussian_moment),
            ),
            Model::Jacobi { u, v } => {
                let (u1, v1) = (u.clone(), v.clone());
                let (u2, v2) = (u.clone(), v.clone());
                Family::new(
                    "selberg-jacobi",
                    BaseVar::X,
                    true,
                    true,
                    Box::new(move |n, m| jacobi_coeff(n, m, &u1, &v1)),
                    Box::new(identity_basis),
                    Box::new(move |m| beta_moment(m, &u2, &v2)),
                )
            }
            Model::MeixnerPollaczek {
                lambda,
                u,
                w,
                moments,
            } => {
                let (l1, w1) = (lambda.clone(), w.clone());
                let l2 = lambda.clone();
                let (l3, u3, conv3) = (lambda.clone(), u.clone(), *moments);
                Family::new(
                    "meixner-pollaczek",
                    BaseVar::X,
                    false,
                    false,
                    Box::new(move |n, m| {
                        let w = w1
                            .as_ref()
                            .expect("Meixner-Pollaczek family coefficients need the phase parameter w");
                        mp_coeff(n, m, &l1, w)
                    }),
                    Box::new(move |m, s| mp_theta_coeff(m, s, &l2)),
                    Box::new(move |m| mp_moment(m, &l3, &u3, conv3)),
                )
            }
            Model::Wilson { a, b, c, d } => {
                let quad1 = (a.clone(), b.clone(), c.clone(), d.clone());
                let a2 = a.clone();
                let quad3 = (a.clone(), b.clone(), c.clone(), d.clone());
                Family::new(
                    "wilson",
                    BaseVar::XSquared,
                    false,
                    false,
                    Box::new(move |n, m| {
                        wilson_coeff(n, m, &quad1.0, &quad1.1, &quad1.2, &quad1.3, true)
                    }),
                    Box::new(move |m, s| wilson_theta_coeff(m, s, &a2)),
                    Box::new(move |m| wilson_moment(m, &quad3.0, &quad3.1, &quad3.2, &quad3.3)),
                )
            }
        }
    }

    /// The normalized moment functional alone (values on the model's base
    /// basis), for callers that only need expectations.
    pub fn moments(&self) -> Moments {
        let model = self.clone();
        Moments {
            monomial_basis: matches!(self, Model::Gaussian | Model::Jacobi { .. }),
            eval: Arc::new(move |m| match &model {
                Model::Gaussian => gaussian_moment(m),
                Model::Jacobi { u, v } => beta_moment(m, u, v),
                Model::MeixnerPollaczek {
                    lambda, u, moments, ..
                } => mp_moment(m, lambda, u, *moments),
                Model::Wilson { a, b, c, d } => wilson_moment(m, a, b, c, d),
            }),
        }
    }
}

/// A normalized moment functional `L~` given by its values on a graded basis;
/// `L~(1) = 1`.
#[derive(Clone)]
pub struct Moments {
    pub monomial_basis: bool,
    eval: Arc<dyn Fn(usize) -> ParamScalar + Send + Sync>,
}

impl Moments {
    pub fn value(&self, m: usize) -> ParamScalar {
        (self.eval)(m)
    }
}

/// A family whose members are plain monomials `t^n`, carrying a given moment
/// functional: the multivariate members are Schur polynomials of the `t`s.
pub fn monomial_observable(moments: Moments) -> Family {
    assert!(
        moments.monomial_basis,
        "monomial observable needs monomial-basis moments"
    );
    let eval = moments.eval.clone();
    Family::new(
        "monomials",
        BaseVar::X,
        true,
        true,
        Box::new(identity_basis),
        Box::new(identity_basis),
        Box::new(move |m| eval(m)),
    )
}

fn identity_basis(m: usize, s: usize) -> ParamScalar {
    if m == s {
        ParamScalar::one()
    } else {
        ParamScalar::zero()
    }
}

/// Monic (probabilist) Hermite coefficient of `x^m` in `H_n`:
/// `(-1/2)^k n! / (k! m!)` with `k = (n-m)/2`, zero on parity mismatch.
pub fn hermite_coeff(n: usize, m: usize) -> ParamScalar {
    if m > n || (n - m) % 2 != 0 {
        return ParamScalar::zero();
    }
    let k = ((n - m) / 2) as u32;
    let c = rat(-1) / rat(2);
    let mut v = GRat::from_rat(c).pow(k as i64);
    v = &v * &GRat::from_rat(factorial(n as u32) / (factorial(k) * factorial(m as u32)));
    ParamScalar::from_grat(v)
}

/// Shifted Jacobi coefficient of `x^m` in `j_n`:
/// `(-1)^{n-m} C(n,m) (1+u+m)_{n-m} / (1+u+v+m+n)_{n-m}`.
pub fn jacobi_coeff(n: usize, m: usize, u: &ParamScalar, v: &ParamScalar) -> ParamScalar {
    if m > n {
        return ParamScalar::zero();
    }
    let k = (n - m) as u32;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let binom = crate::algebra::binomial(n as u32, m as u32);
    let shift = |c: i64| ParamScalar::int(c);
    let numer = pochhammer(&u.add(&shift(1 + m as i64)), k);
    let denom = pochhammer(&u.add(v).add(&shift(1 + (m + n) as i64)), k);
    ParamScalar::from_grat(GRat::from_rat(binom))
        .mul(&ParamScalar::int(sign))
        .mul(&numer)
        .div(&denom)
}

/// Meixner-Pollaczek coefficient of `theta_m = (lambda + ix)_m` in `q_n`,
/// with the phase tracked through `w = e^{-i phi}` (`u = w^2`):
/// `w^{-n} (2 lambda)_n (-n)_m (1 - w^2)^m / (n! (2 lambda)_m m!)`.
pub fn mp_coeff(n: usize, m: usize, lambda: &ParamScalar, w: &ParamScalar) -> ParamScalar {
    if m > n {
        return ParamScalar::zero();
    }
    let two_lambda = lambda.add(lambda);
    let falling = pochhammer(&ParamScalar::int(-(n as i64)), m as u32);
    let one_minus_u = ParamScalar::one().sub(&w.mul(w));
    pochhammer(&two_lambda, n as u32)
        .mul(&falling)
        .mul(&one_minus_u.pow(m as i64))
        .div(&w.pow(n as i64))
        .div(&ParamScalar::from_grat(GRat::from_rat(
            factorial(n as u32) * factorial(m as u32),
        )))
        .div(&pochhammer(&two_lambda, m as u32))
}

/// Coefficient of `x^s` in `theta_m(x | lambda) = (lambda + ix)_m`.
pub fn mp_theta_coeff(m: usize, s: usize, lambda: &ParamScalar) -> ParamScalar {
    if s > m {
        return ParamScalar::zero();
    }
    let mut coeffs = vec![ParamScalar::one()];
    let i_unit = ParamScalar::imaginary_unit();
    for k in 0..m as i64 {
        let shift = lambda.add(&ParamScalar::int(k));
        let mut next = vec![ParamScalar::zero(); coeffs.len() + 1];
        for (deg, c) in coeffs.iter().enumerate() {
            next[deg] = next[deg].add(&c.mul(&shift));
            next[deg + 1] = next[deg + 1].add(&c.mul(&i_unit));
        }
        coeffs = next;
    }
    coeffs[s].clone()
}

/// Wilson coefficient of `theta_m` in `W_n` (or the normalized
/// `W_n / (z+n-1)_n` when `normalized`):
/// `(-n)_m (n+z-1)_m (a+b+m)_{n-m} (a+c+m)_{n-m} (a+d+m)_{n-m} / m!`.
pub fn wilson_coeff(
    n: usize,
    m: usize,
    a: &ParamScalar,
    b: &ParamScalar,
    c: &ParamScalar,
    d: &ParamScalar,
    normalized: bool,
) -> ParamScalar {
    if m > n {
        return ParamScalar::zero();
    }
    let z = a.add(b).add(c).add(d);
    let k = (n - m) as u32;
    let mut v = pochhammer(&ParamScalar::int(-(n as i64)), m as u32)
        .mul(&pochhammer(&z.add(&ParamScalar::int(n as i64 - 1)), m as u32))
        .div(&ParamScalar::from_grat(GRat::from_rat(factorial(m as u32))));
    for pair in [a.add(b), a.add(c), a.add(d)] {
        v = v.mul(&pochhammer(&pair.add(&ParamScalar::int(m as i64)), k));
    }
    if normalized {
        v = v.div(&pochhammer(&z.add(&ParamScalar::int(n as i64 - 1)), n as u32));
    }
    v
}

/// Coefficient of `y^s` in `theta_m(y | a) = prod_{k<m} ((a+k)^2 + y)`.
pub fn wilson_theta_coeff(m: usize, s: usize, a: &ParamScalar) -> ParamScalar {
    if s > m {
        return ParamScalar::zero();
    }
    let mut coeffs = vec![ParamScalar::one()];
    for k in 0..m as i64 {
        let sq = a.add(&ParamScalar::int(k)).pow(2);
        let mut next = vec![ParamScalar::zero(); coeffs.len() + 1];
        for (deg, c) in coeffs.iter().enumerate() {
            next[deg] = next[deg].add(&c.mul(&sq));
            next[deg + 1] = next[deg + 1].add(c);
        }
        coeffs = next;
    }
    coeffs[s].clone()
}

/// Gaussian moments on monomials: `L~(x^{2k}) = (2k-1)!!`, odd powers vanish.
pub fn gaussian_moment(m: usize) -> ParamScalar {
    if m % 2 == 1 {
        return ParamScalar::zero();
    }
    ParamScalar::from_grat(GRat::from_rat(crate::algebra::double_factorial_odd(
        (m / 2) as u32,
    )))
}

/// Beta moments on monomials: `L~(x^n) = (u+1)_n / (u+v+2)_n`.
pub fn beta_moment(m: usize, u: &ParamScalar, v: &ParamScalar) -> ParamScalar {
    pochhammer(&u.add(&ParamScalar::one()), m as u32)
        .div(&pochhammer(&u.add(v).add(&ParamScalar::int(2)), m as u32))
}

/// Meixner-Pollaczek moments on its base functions, in the chosen convention:
/// per box either `u/(1-u)` (printed moment formula, after folding the
/// `(-1)^n`) or `1/(1-u)` (the orthogonality-consistent functional).
pub fn mp_moment(
    m: usize,
    lambda: &ParamScalar,
    u: &ParamScalar,
    convention: MpMomentConvention,
) -> ParamScalar {
    let per_box = match convention {
        // (-1)^n (u/(u-1))^n = (u/(1-u))^n
        MpMomentConvention::PaperMoments => u.div(&ParamScalar::one().sub(u)),
        MpMomentConvention::OrthogonalityConsistent => {
            ParamScalar::one().div(&ParamScalar::one().sub(u))
        }
    };
    pochhammer(&lambda.add(lambda), m as u32).mul(&per_box.pow(m as i64))
}

/// Wilson moments on its base functions:
/// `L~(theta_n) = (a+b)_n (a+c)_n (a+d)_n / (z)_n`.
pub fn wilson_moment(
    m: usize,
    a: &ParamScalar,
    b: &ParamScalar,
    c: &ParamScalar,
    d: &ParamScalar,
) -> ParamScalar {
    let z = a.add(b).add(c).add(d);
    pochhammer(&a.add(b), m as u32)
        .mul(&pochhammer(&a.add(c), m as u32))
        .mul(&pochhammer(&a.add(d), m as u32))
        .div(&pochhammer(&z, m as u32))
}

/// Numerator shift used inside the Wilson closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WilsonShift {
    /// `N`, as printed.
    PaperN,
    /// `N - 1`, forced by the single-variable reduction.
    NMinusOne,
}

impl WilsonShift {
    pub fn offset(&self, n: usize) -> i64 {
        match self {
            WilsonShift::PaperN => n as i64,
            WilsonShift::NMinusOne => n as i64 - 1,
        }
    }
}

/// Per-box factor variants printed for the Meixner-Pollaczek closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MpBox {
    /// `u/(u-1)`, first printed line.
    UOverUMinusOne,
    /// `1/(1-u)`, second printed line.
    OneOverOneMinusU,
    /// `u/(1-u)`, the sign-corrected factor.
    UOverOneMinusU,
}

impl MpBox {
    pub fn value(&self, u: &ParamScalar) -> ParamScalar {
        let one = ParamScalar::one();
        match self {
            MpBox::UOverUMinusOne => u.div(&u.sub(&one)),
            MpBox::OneOverOneMinusU => one.div(&one.sub(u)),
            MpBox::UOverOneMinusU => u.div(&one.sub(u)),
        }
    }
}

/// Global sign variants for the Meixner-Pollaczek closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MpSign {
    /// `(-1)^{N(N+7)/4}` read as `(-1)^{floor(N(N+7)/4)}` (the printed
    /// exponent is not an integer for every `N`).
    PaperFloor,
    Plus,
    Minus,
    /// `i^{N(N-1)/2}`, the constant value of the empty-shape base function.
    PowI,
    /// `(-i)^{N(N-1)/2}`.
    PowIConj,
    /// `(-1)^{N(N-1)/2}`.
    MinusOnePow,
}

impl MpSign {
    pub fn value(&self, n: usize) -> GRat {
        let n = n as i64;
        match self {
            MpSign::PaperFloor => {
                if (n * (n + 7) / 4) % 2 == 0 {
                    GRat::one()
                } else {
                    -GRat::one()
                }
            }
            MpSign::Plus => GRat::one(),
            MpSign::Minus => -GRat::one(),
            MpSign::PowI => GRat::i_pow(n * (n - 1) / 2),
            MpSign::PowIConj => GRat::i_pow(-(n * (n - 1) / 2)),
            MpSign::MinusOnePow => {
                if (n * (n - 1) / 2) % 2 == 0 {
                    GRat::one()
                } else {
                    -GRat::one()
                }
            }
        }
    }
}

/// Convention flags selecting a concrete reading of a closed-form expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub wilson_shift: WilsonShift,
    pub mp_sign: MpSign,
    pub mp_box: MpBox,
    /// Include the `S_R{delta_{k,1}}` prefactor in the MP formula (present in
    /// the first printed line, absent from the second).
    pub mp_delta1: bool,
}

impl ClosedForm {
    /// The readings exactly as printed.
    pub fn paper_literal() -> Self {
        ClosedForm {
            wilson_shift: WilsonShift::PaperN,
            mp_sign: MpSign::PaperFloor,
            mp_box: MpBox::UOverUMinusOne,
            mp_delta1: true,
        }
    }

    /// The conventions that survive the oracle panel (see the convention
    /// resolver in the lab module).
    pub fn resolved() -> Self {
        ClosedForm {
            wilson_shift: WilsonShift::NMinusOne,
            mp_sign: MpSign::PowI,
            mp_box: MpBox::UOverOneMinusU,
            mp_delta1: true,
        }
    }
}

/// Evaluate the model's closed-form expectation target for `<Theta_R>` at a
/// concrete number of variables.
pub fn closed_form_expectation(
    model: &Model,
    cf: &ClosedForm,
    r: &Partition,
    n: usize,
) -> ParamScalar {
    let n_scalar = ParamScalar::int(n as i64);
    match model {
        Model::Gaussian => schur(r).eval_delta(2).mul(&xi(r, &n_scalar)),
        Model::Jacobi { u, v } => {
            let s1 = xi(r, &n_scalar);
            let s2 = xi(r, &u.add(&n_scalar));
            let s3 = xi(r, &u.add(v).add(&ParamScalar::int(2 * n as i64)));
            schur(r).eval_delta(1).mul(&s1).mul(&s2).div(&s3)
        }
        Model::MeixnerPollaczek { lambda, u, .. } => {
            let mut v = ParamScalar::from_grat(cf.mp_sign.value(n));
            if cf.mp_delta1 {
                v = v.mul(&schur(r).eval_delta(1));
            }
            let shifted = lambda
                .add(lambda)
                .add(&n_scalar)
                .sub(&ParamScalar::one());
            v.mul(&xi(r, &n_scalar))
                .mul(&xi(r, &shifted))
                .mul(&cf.mp_box.value(u).pow(r.size() as i64))
        }
        Model::Wilson { a, b, c, d } => {
            let shift = ParamScalar::int(cf.wilson_shift.offset(n));
            let z = a.add(b).add(c).add(d);
            let mut v = schur(r).eval_all_equal(&n_scalar);
            for pair in [a.add(b), a.add(c), a.add(d)] {
                v = v.mul(&xi(r, &pair.add(&shift)));
            }
            v.div(&xi(r, &z.add(&ParamScalar::int(2 * (n as i64 - 1)))))
        }
    }
}

/// `q_n` (Meixner-Pollaczek) as an explicit polynomial in the parameter `x`.
pub fn mp_polynomial_in_x(n: usize, lambda: &ParamScalar, w: &ParamScalar, x: Param) -> ParamScalar {
    let xv = ParamScalar::var(x);
    let mut acc = ParamScalar::zero();
    for m in 0..=n {
        let c = mp_coeff(n, m, lambda, w);
        if c.is_zero() {
            continue;
        }
        let mut theta = ParamScalar::zero();
        for s in 0..=m {
            theta = theta.add(&mp_theta_coeff(m, s, lambda).mul(&xv.pow(s as i64)));
        }
        acc = acc.add(&c.mul(&theta));
    }
    acc
}

/// Unnormalized Wilson polynomial `W_n` as a polynomial in `x` (via `y = x^2`).
pub fn wilson_polynomial_in_x(
    n: usize,
    a: &ParamScalar,
    b: &ParamScalar,
    c: &ParamScalar,
    d: &ParamScalar,
    x: Param,
) -> ParamScalar {
    let y = ParamScalar::var(x).pow(2);
    let mut acc = ParamScalar::zero();
    for m in 0..=n {
        let coeff = wilson_coeff(n, m, a, b, c, d, false);
        if coeff.is_zero() {
            continue;
        }
        let mut theta = ParamScalar::zero();
        for s in 0..=m {
            theta = theta.add(&wilson_theta_coeff(m, s, a).mul(&y.pow(s as i64)));
        }
        acc = acc.add(&coeff.mul(&theta));
    }
    acc
}

/// Hermite `H_n` as a polynomial in `x`.
pub fn hermite_polynomial_in_x(n: usize, x: Param) -> ParamScalar {
    let xv = ParamScalar::var(x);
    let mut acc = ParamScalar::zero();
    for m in 0..=n {
        let c = hermite_coeff(n, m);
        if !c.is_zero() {
            acc = acc.add(&c.mul(&xv.pow(m as i64)));
        }
    }
    acc
}

/// Shifted Jacobi `j_n` as a polynomial in `x`.
pub fn jacobi_polynomial_in_x(
    n: usize,
    u: &ParamScalar,
    v: &ParamScalar,
    x: Param,
) -> ParamScalar {
    let xv = ParamScalar::var(x);
    let mut acc = ParamScalar::zero();
    for m in 0..=n {
        let c = jacobi_coeff(n, m, u, v);
        if !c.is_zero() {
            acc = acc.add(&c.mul(&xv.pow(m as i64)));
        }
    }
    acc
}

fn shift_x(f: &ParamScalar, x: Param, delta: GRat) -> ParamScalar {
    let repl = ParamPoly::var(x).add(&ParamPoly::constant(delta));
    f.subst_poly(x, &repl)
}

/// Probabilist Hermite differential equation `H'' - x H' + n H = 0`, checked
/// as an exact polynomial identity.
pub fn hermite_ode_holds(n: usize) -> bool {
    let x = Param::named("x");
    let h = hermite_polynomial_in_x(n, x);
    let poly = h.to_poly().unwrap();
    let d1 = poly.differentiate(x);
    let d2 = d1.differentiate(x);
    let lhs = ParamScalar::from_poly(d2)
        .sub(&ParamScalar::var(x).mul(&ParamScalar::from_poly(d1)))
        .add(&ParamScalar::int(n as i64).mul(&h));
    lhs.is_zero()
}

/// Single-variable Rodrigues check:
/// `e^{x^2/2} d^n/dx^n e^{-x^2/2} = (-1)^n H_n(x)`.
pub fn hermite_rodrigues_holds(n: usize) -> bool {
    let x = Param::named("x");
    // d/dx (f e^{-x^2/2}) = (f' - x f) e^{-x^2/2}
    let mut f = ParamPoly::one();
    for _ in 0..n {
        f = f.differentiate(x).sub(&ParamPoly::var(x).mul(&f));
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let expect = hermite_polynomial_in_x(n, x).mul(&ParamScalar::int(sign));
    ParamScalar::from_poly(f).equals(&expect)
}

/// Meixner-Pollaczek difference equation, exact in `x` over `Q(i)(lambda, w)`:
/// `w (ix+lambda)[q_n(x) - q_n(x-i)] + w^{-1} (ix-lambda)[q_n(x) - q_n(x+i)]
///  = n (1-w^2)/w q_n(x)`.
pub fn mp_difference_holds(n: usize) -> bool {
    let x = Param::named("x");
    let lambda = ParamScalar::named("lambda");
    let w = ParamScalar::named("w");
    let q = mp_polynomial_in_x(n, &lambda, &w, x);
    let i = ParamScalar::imaginary_unit();
    let ix = i.mul(&ParamScalar::var(x));
    let q_dn = shift_x(&q, x, -GRat::i());
    let q_up = shift_x(&q, x, GRat::i());
    let lhs = w
        .mul(&ix.add(&lambda))
        .mul(&q.sub(&q_dn))
        .add(&w.recip().mul(&ix.sub(&lambda)).mul(&q.sub(&q_up)));
    let rhs = ParamScalar::int(n as i64)
        .mul(&ParamScalar::one().sub(&w.mul(&w)))
        .div(&w)
        .mul(&q);
    lhs.equals(&rhs)
}

/// Wilson difference equation with the printed `B(x)`, `D(x)`:
/// `B(x)(W_n(x+i) - W_n(x)) + D(x)(W_n(x-i) - W_n(x)) = n(n-1+z) W_n(x)`.
pub fn wilson_difference_holds(n: usize) -> bool {
    let x = Param::named("x");
    let (a, b, c, d) = (
        ParamScalar::named("a"),
        ParamScalar::named("b"),
        ParamScalar::named("c"),
        ParamScalar::named("d"),
    );
    let z = a.add(&b).add(&c).add(&d);
    let wn = wilson_polynomial_in_x(n, &a, &b, &c, &d, x);
    let i = ParamScalar::imaginary_unit();
    let ix = i.mul(&ParamScalar::var(x));
    let one = ParamScalar::one();
    let two_ix = ix.add(&ix);
    let b_x = a
        .sub(&ix)
        .mul(&b.sub(&ix))
        .mul(&c.sub(&ix))
        .mul(&d.sub(&ix))
        .div(&two_ix.mul(&two_ix.sub(&one)));
    let d_x = a
        .add(&ix)
        .mul(&b.add(&ix))
        .mul(&c.add(&ix))
        .mul(&d.add(&ix))
        .div(&two_ix.mul(&two_ix.add(&one)));
    let w_up = shift_x(&wn, x, GRat::i());
    let w_dn = shift_x(&wn, x, -GRat::i());
    let lhs = b_x.mul(&w_up.sub(&wn)).add(&d_x.mul(&w_dn.sub(&wn)));
    let rhs = ParamScalar::int(n as i64)
        .mul(&ParamScalar::int(n as i64 - 1).add(&z))
        .mul(&wn);
    lhs.equals(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::equal_by_specialization;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hermite_coefficients() {
        assert!(hermite_coeff(2, 0).equals(&ParamScalar::int(-1)));
        assert!(hermite_coeff(3, 1).equals(&ParamScalar::int(-3)));
        for n in 0..=8 {
            assert!(hermite_coeff(n, n).is_one());
        }
        assert!(hermite_coeff(3, 2).is_zero());
    }

    #[test]
    fn jacobi_coefficients() {
        let u = ParamScalar::named("u");
        let v = ParamScalar::named("v");
        let one = ParamScalar::one();
        assert!(jacobi_coeff(1, 1, &u, &v).is_one());
        let c10 = jacobi_coeff(1, 0, &u, &v);
        let expect = one
            .add(&u)
            .div(&u.add(&v).add(&ParamScalar::int(2)))
            .neg();
        assert!(frac_equal(&c10, &expect));
        let c21 = jacobi_coeff(2, 1, &u, &v);
        let expect = ParamScalar::int(-2)
            .mul(&u.add(&ParamScalar::int(2)))
            .div(&u.add(&v).add(&ParamScalar::int(4)));
        assert!(frac_equal(&c21, &expect));
    }

    #[test]
    fn mp_inversion_at_degree_one() {
        // theta_1 = (2 lambda q_0 - w q_1)/(1 - w^2)
        let lambda = ParamScalar::named("lambda");
        let w = ParamScalar::named("w");
        let one = ParamScalar::one();
        assert!(mp_coeff(0, 0, &lambda, &w).is_one());
        let c10 = mp_coeff(1, 0, &lambda, &w);
        let c11 = mp_coeff(1, 1, &lambda, &w);
        // q_1 = c10 + c11 theta_1, so theta_1 = (q_1 - c10)/c11; match against
        // the closed form.
        let two_lambda = lambda.add(&lambda);
        assert!(frac_equal(&c10, &two_lambda.div(&w)));
        assert!(frac_equal(&c11, &one.sub(&w.mul(&w)).div(&w).neg()));
    }

    #[test]
    fn wilson_degree_one_and_diagonal() {
        let (a, b, c, d) = (
            ParamScalar::named("a"),
            ParamScalar::named("b"),
            ParamScalar::named("c"),
            ParamScalar::named("d"),
        );
        let z = a.add(&b).add(&c).add(&d);
        // W_1 = (a+b)(a+c)(a+d) - z theta_1
        let c0 = wilson_coeff(1, 0, &a, &b, &c, &d, false);
        let expect = a.add(&b).mul(&a.add(&c)).mul(&a.add(&d));
        assert!(frac_equal(&c0, &expect));
        let c1 = wilson_coeff(1, 1, &a, &b, &c, &d, false);
        assert!(frac_equal(&c1, &z.neg()));
        // normalized diagonal is (-1)^n
        for n in 0..5 {
            let diag = wilson_coeff(n, n, &a, &b, &c, &d, true);
            let sign = ParamScalar::int(if n % 2 == 0 { 1 } else { -1 });
            assert!(frac_equal(&diag, &sign), "n={}", n);
        }
    }

    #[test]
    fn moment_values() {
        // gaussian x^4 -> 3
        assert!(gaussian_moment(4).equals(&ParamScalar::int(3)));
        // wilson theta_1
        let (a, b, c, d) = (
            ParamScalar::named("a"),
            ParamScalar::named("b"),
            ParamScalar::named("c"),
            ParamScalar::named("d"),
        );
        let z = a.add(&b).add(&c).add(&d);
        let got = wilson_moment(1, &a, &b, &c, &d);
        let expect = a.add(&b).mul(&a.add(&c)).mul(&a.add(&d)).div(&z);
        assert!(frac_equal(&got, &expect));
        // MP theta_1 = 2 lambda u / (1-u) under the printed moment formula
        let lambda = ParamScalar::named("lambda");
        let u = ParamScalar::named("u");
        let got = mp_moment(1, &lambda, &u, MpMomentConvention::PaperMoments);
        let expect = lambda
            .add(&lambda)
            .mul(&u)
            .div(&ParamScalar::one().sub(&u));
        assert!(frac_equal(&got, &expect));
    }

    #[test]
    fn first_orthogonality_every_family() {
        // L~(P_n) = 0 for 1 <= n <= 6 in every model (the MP functional must
        // be the orthogonality-consistent one for this to have a chance).
        let models = [
            gaussian_model(),
            selberg_model_symbolic(),
            mp_model_symbolic_with(MpMomentConvention::OrthogonalityConsistent),
            wilson_model_symbolic(),
        ];
        for model in &models {
            let fam = model.family();
            for n in 1..=6usize {
                let mut v = ParamScalar::zero();
                for m in 0..=n {
                    let c = fam.coeff(n, m);
                    if !c.is_zero() {
                        v = v.add(&c.mul(&fam.moment(m)));
                    }
                }
                assert!(v.is_zero(), "model {} degree {}", fam.name(), n);
            }
        }
    }

    #[test]
    fn mp_moment_conventions_differ_by_u_power() {
        // The printed moment formula fails first orthogonality by exactly the
        // factor u^n on theta_n; the consistent functional is the printed
        // value divided by u^n.
        let lambda = ParamScalar::named("lambda");
        let u = ParamScalar::named("u");
        for n in 0..=5usize {
            let paper = mp_moment(n, &lambda, &u, MpMomentConvention::PaperMoments);
            let consistent = mp_moment(n, &lambda, &u, MpMomentConvention::OrthogonalityConsistent);
            assert!(frac_equal(&paper, &consistent.mul(&u.pow(n as i64))));
        }
        // and the paper functional is NOT orthogonal to q_1
        let fam = mp_model_symbolic().family();
        let v = fam
            .coeff(1, 0)
            .mul(&fam.moment(0))
            .add(&fam.coeff(1, 1).mul(&fam.moment(1)));
        assert!(!v.is_zero());
    }

    #[test]
    fn jacobi_moment_cancellation() {
        // L~(j_1) = 0 exactly: (u+1)/(u+v+2) - (1+u)/(u+v+2) = 0
        let model = selberg_model_symbolic();
        let fam = model.family();
        let v = fam
            .coeff(1, 0)
            .mul(&fam.moment(0))
            .add(&fam.coeff(1, 1).mul(&fam.moment(1)));
        assert!(v.is_zero());
    }

    #[test]
    fn hermite_ode_and_rodrigues() {
        for n in 0..=6 {
            assert!(hermite_ode_holds(n), "ODE at n={}", n);
            assert!(hermite_rodrigues_holds(n), "Rodrigues at n={}", n);
        }
    }

    #[test]
    fn mp_difference_equation() {
        for n in 0..=6 {
            assert!(mp_difference_holds(n), "n={}", n);
        }
    }

    #[test]
    fn wilson_difference_equation() {
        for n in 0..=5 {
            assert!(wilson_difference_holds(n), "n={}", n);
        }
    }

    #[test]
    fn closed_form_examples() {
        // gaussian [4]: N(N+1)(N+2)(N+3)/8, at N=1 equals 3
        let cf = ClosedForm::resolved();
        let v = closed_form_expectation(&gaussian_model(), &cf, &part("4"), 1);
        assert!(v.equals(&ParamScalar::int(3)));
        // selberg [1] at N=1: (u+1)/(u+v+2)
        let model = selberg_model_symbolic();
        let v = closed_form_expectation(&model, &cf, &part("1"), 1);
        let u = ParamScalar::named("u");
        let vv = ParamScalar::named("v");
        let expect = u
            .add(&ParamScalar::one())
            .div(&u.add(&vv).add(&ParamScalar::int(2)));
        assert!(frac_equal(&v, &expect));
        // wilson [1] at N=1 with the resolved shift reproduces the moment
        let wm = wilson_model_symbolic();
        let v = closed_form_expectation(&wm, &cf, &part("1"), 1);
        let (a, b, c, d) = (
            ParamScalar::named("a"),
            ParamScalar::named("b"),
            ParamScalar::named("c"),
            ParamScalar::named("d"),
        );
        let expect = wilson_moment(1, &a, &b, &c, &d);
        assert!(frac_equal(&v, &expect));
        // the paper-literal shift does not
        let v = closed_form_expectation(&wm, &ClosedForm::paper_literal(), &part("1"), 1);
        assert!(!frac_equal(&v, &expect));
    }

    #[test]
    fn pochhammer_gamma_ratio_consistency() {
        // (2 lambda)_1 matches Gamma(n + 2 lambda)/Gamma(2 lambda) at n = 1
        let lambda = ParamScalar::named("lambda");
        let two_lambda = lambda.add(&lambda);
        let p = pochhammer(&two_lambda, 1);
        assert!(frac_equal(&p, &two_lambda));
        // and the splitting law matches the recursive Gamma ratio shape
        assert!(equal_by_specialization(
            &pochhammer(&two_lambda, 4),
            &pochhammer(&two_lambda, 2).mul(&pochhammer(&two_lambda.add(&ParamScalar::int(2)), 2)),
            11,
            7,
        ));
    }
}
