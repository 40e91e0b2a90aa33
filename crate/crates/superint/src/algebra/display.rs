//! Canonical text rendering for polynomials and scalars.
//!
//! Output is deterministic: terms are ordered by descending total degree and
//! then by the name-lexicographic form of the monomial, factors by degree and
//! rendered text. Factored denominators print factored, e.g.
//! `(a+b)(a+c)(a+d)/(a+b+c+d)`.

use super::gaussian::GRat;
use super::poly::{Monomial, ParamPoly};
use super::scalar::ParamScalar;
use num_traits::{One, Signed, Zero};

fn rat_string(r: &num_rational::BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coefficient rendered for use as a multiplicative prefix.
fn coeff_string(c: &GRat) -> String {
    if c.is_real() {
        rat_string(&c.re)
    } else if c.re.is_zero() {
        if c.im.is_one() {
            "i".to_string()
        } else if (-c.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", rat_string(&c.im))
        }
    } else {
        let im = if c.im.is_one() {
            "+i".to_string()
        } else if (-c.im.clone()).is_one() {
            "-i".to_string()
        } else if c.im.is_negative() {
            format!("{}*i", rat_string(&c.im))
        } else {
            format!("+{}*i", rat_string(&c.im))
        };
        format!("({}{})", rat_string(&c.re), im)
    }
}

fn monomial_string(m: &Monomial) -> String {
    let mut named: Vec<(String, u32)> = m.pows().iter().map(|&(p, e)| (p.name(), e)).collect();
    named.sort();
    named
        .into_iter()
        .map(|(n, e)| if e == 1 { n } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn poly_string(f: &ParamPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut rendered: Vec<(u32, String, &GRat)> = f
        .terms()
        .map(|(m, c)| (m.total_degree(), monomial_string(m), c))
        .collect();
    rendered.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut out = String::new();
    for (i, (_, mono, c)) in rendered.iter().enumerate() {
        let (sign_neg, mag) = if c.is_real() && c.re.is_negative() {
            (true, -(*c).clone())
        } else {
            (false, (*c).clone())
        };
        let piece = if mono.is_empty() {
            coeff_string(&mag)
        } else if mag.is_one() {
            mono.clone()
        } else {
            format!("{}*{}", coeff_string(&mag), mono)
        };
        if i == 0 {
            if sign_neg {
                out.push('-');
            }
            out.push_str(&piece);
        } else if sign_neg {
            out.push_str(" - ");
            out.push_str(&piece);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

/// Render a factor, parenthesizing multi-term polynomials.
fn factor_string(f: &ParamPoly, mult: u32) -> String {
    let body = poly_string(f);
    let base = if f.num_terms() > 1 {
        format!("({body})")
    } else {
        body
    };
    if mult == 1 {
        base
    } else {
        format!("{base}^{mult}")
    }
}

fn join_pieces(pieces: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in pieces.iter().enumerate() {
        if i > 0 {
            let prev_close = out.ends_with(')');
            let this_open = p.starts_with('(');
            if !(prev_close && this_open) {
                out.push('*');
            }
        }
        out.push_str(p);
    }
    out
}

pub(crate) fn scalar_string(x: &ParamScalar) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut num_pieces: Vec<String> = Vec::new();
    let c = x.scalar_part();
    let sorted_factors = |fs: &std::collections::BTreeMap<ParamPoly, u32>| -> Vec<String> {
        let mut v: Vec<(u32, String)> = fs
            .iter()
            .map(|(f, m)| (f.total_degree(), factor_string(f, *m)))
            .collect();
        v.sort();
        v.into_iter().map(|(_, s)| s).collect()
    };
    let num_factors = sorted_factors(x.num_factors());
    let den_factors = sorted_factors(x.den_factors());
    if num_factors.is_empty() {
        num_pieces.push(coeff_string(c));
    } else {
        if c.is_real() && c.re == num_rational::BigRational::from_integer((-1).into()) {
            num_pieces.push("-1".to_string());
        } else if !c.is_one() {
            num_pieces.push(coeff_string(c));
        }
        num_pieces.extend(num_factors);
        // fold a bare "-1" prefix into a minus sign
        if num_pieces[0] == "-1" && num_pieces.len() > 1 {
            num_pieces.remove(0);
            let joined = join_pieces(&num_pieces);
            let num_str = format!("-{joined}");
            return finish(num_str, den_factors);
        }
    }
    finish(join_pieces(&num_pieces), den_factors)
}

fn finish(num_str: String, den_factors: Vec<String>) -> String {
    if den_factors.is_empty() {
        num_str
    } else if den_factors.len() == 1 {
        format!("{num_str}/{}", den_factors[0])
    } else {
        format!("{num_str}/({})", join_pieces(&den_factors))
    }
}
