//! Bounded irreducibility testing over the rationals.
//!
//! Bivariate inputs are mapped to one variable by the Kronecker substitution
//! `b -> a^D` with `D` larger than the degree in `a`; the image is factored
//! completely and every sub-product of its factors is mapped back and tried
//! as a divisor. Exponential in the number of univariate factors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::factor::{self, ZPoly};
use crate::algebra::scalar::denominator_lcm;
use crate::algebra::{Monomial, Var};
use crate::error::{Error, Result};
use crate::{QPoly, Rat};

pub const DEFAULT_DEGREE_BOUND: u32 = 8;

fn integer_coeffs(p: &QPoly) -> QPoly {
    let l = denominator_lcm(p.terms().map(|(_, c)| c));
    p.scale(&Rat::from_integer(l))
}

fn to_dense(p: &QPoly, v: Var) -> ZPoly {
    let d = p.degree_in(v).unwrap_or(0) as usize;
    let mut out = vec![BigInt::zero(); d + 1];
    for (m, c) in p.terms() {
        out[m.exp(v) as usize] = c.to_integer();
    }
    factor::ztrim(out)
}

fn from_dense(a: &[BigInt], v: Var) -> QPoly {
    QPoly::from_terms(
        a.iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(v, i as u32), Rat::from_integer(c.clone()))),
    )
}

/// Irreducible factors over Q of a univariate polynomial, each normalized to
/// a primitive integer polynomial with positive leading coefficient, with
/// multiplicities. Constants have no factors.
pub fn factor_univariate(p: &QPoly) -> Result<Vec<(QPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = p.vars();
    if vars.len() > 1 {
        return Err(Error::NotUnivariate);
    }
    let Some(&v) = vars.iter().next() else {
        return Ok(Vec::new());
    };
    let (_, fs) = factor::factor(&to_dense(&integer_coeffs(p), v));
    Ok(fs
        .into_iter()
        .map(|(f, e)| (from_dense(&f, v), e))
        .collect())
}

/// Whether `p` (in at most two variables, total degree at most
/// `degree_bound`) is irreducible over Q. Constants are not irreducible.
pub fn kronecker_irreducible(p: &QPoly, degree_bound: u32) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.total_degree().unwrap_or(0);
    if degree > degree_bound {
        return Err(Error::DegreeBoundExceeded {
            degree,
            bound: degree_bound,
        });
    }
    let vars: Vec<Var> = p.vars().into_iter().collect();
    match vars.len() {
        0 => Ok(false),
        1 => {
            let fs = factor_univariate(p)?;
            Ok(fs.len() == 1 && fs[0].1 == 1)
        }
        2 => Ok(bivariate_irreducible(p, vars[0], vars[1])),
        _ => Err(Error::InvalidArgument(
            "irreducibility test handles at most two variables".into(),
        )),
    }
}

fn bivariate_irreducible(p: &QPoly, a: Var, b: Var) -> bool {
    let p = integer_coeffs(p);
    let d = p.degree_in(a).unwrap_or(0) + 1;
    let mut image = vec![
        BigInt::zero();
        (p.degree_in(a).unwrap_or(0) + d * p.degree_in(b).unwrap_or(0)) as usize
            + 1
    ];
    for (m, c) in p.terms() {
        image[(m.exp(a) + d * m.exp(b)) as usize] += c.to_integer();
    }
    let image = factor::ztrim(image);
    let (_, factors) = factor::factor(&image);
    let total_degree = image.len() - 1;
    let full_degree = p.total_degree().unwrap_or(0);

    let pull_back = |f: &ZPoly| -> QPoly {
        QPoly::from_terms(f.iter().enumerate().map(|(e, c)| {
            let e = e as u32;
            let mut m = Monomial::one();
            m = m.with_exp(a, e % d).with_exp(b, e / d);
            (m, Rat::from_integer(c.clone()))
        }))
    };

    // Enumerate sub-multisets whose image degree is at most half of the total;
    // one of any factor pair qualifies.
    let mut counts = vec![0u32; factors.len()];
    loop {
        let mut i = 0;
        loop {
            if i == factors.len() {
                return true;
            }
            if counts[i] < factors[i].1 {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
        let deg: usize = counts
            .iter()
            .zip(&factors)
            .map(|(&k, (f, _))| k as usize * (f.len() - 1))
            .sum();
        if deg == 0 || 2 * deg > total_degree {
            continue;
        }
        let mut prod: ZPoly = vec![BigInt::one()];
        for (&k, (f, _)) in counts.iter().zip(&factors) {
            for _ in 0..k {
                prod = factor::zmul(&prod, f);
            }
        }
        let cand = pull_back(&prod);
        let cd = cand.total_degree().unwrap_or(0);
        if cd == 0 || cd >= full_degree {
            continue;
        }
        if p.div_exact(&cand).is_some() {
            return false;
        }
    }
}
