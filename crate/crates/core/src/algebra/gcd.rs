//! Multivariate gcd by primitive remainder sequences on the recursive view,
//! and squarefree parts.

use super::poly::{MultiPoly, Var};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A polynomial in a distinguished variable with coefficients in the other
/// variables, low degree first, no trailing zeros.
pub(crate) type RecPoly<K> = Vec<MultiPoly<K>>;

pub(crate) fn rec_trim<K: Scalar>(mut a: RecPoly<K>) -> RecPoly<K> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a = q·b + r`.
pub(crate) fn pseudo_remainder<K: Scalar>(a: &[MultiPoly<K>], b: &[MultiPoly<K>]) -> RecPoly<K> {
    let db = b.len() - 1;
    if a.len() <= db {
        return a.to_vec();
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0usize;
    let delta = a.len() - 1 - db;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: RecPoly<K> = r.iter().map(|c| c * lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[shift + i] = &next[shift + i] - &(&lr * bc);
        }
        r = rec_trim(next);
        steps += 1;
    }
    let missing = delta + 1 - steps;
    if missing > 0 {
        let factor = lb.pow(missing as u32);
        r = r.iter().map(|c| c * &factor).collect();
    }
    r
}

fn first_var<K: Scalar>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> Option<Var> {
    Var::ALL
        .iter()
        .copied()
        .find(|&v| p.contains_var(v) || q.contains_var(v))
}

fn content<K: Scalar>(coeffs: &[MultiPoly<K>]) -> MultiPoly<K> {
    let mut g = MultiPoly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() {
            c.clone()
        } else {
            gcd_raw(&g, c)
        };
        if g.is_constant() && !g.is_zero() {
            return MultiPoly::one();
        }
    }
    g
}

fn divide_all<K: Scalar>(coeffs: &[MultiPoly<K>], d: &MultiPoly<K>) -> RecPoly<K> {
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

/// Primitive part with the scalar of the leading coefficient made 1. Without
/// the scaling, remainders over a field grow without bound in size.
fn primitive_part<K: Scalar>(coeffs: &[MultiPoly<K>], cont: &MultiPoly<K>) -> RecPoly<K> {
    let a = divide_all(coeffs, cont);
    match a.last().and_then(|c| c.lex_leading()).map(|(_, c)| c.inv()) {
        Some(Some(inv)) => a.iter().map(|c| c.scale(&inv)).collect(),
        _ => a,
    }
}

/// gcd up to a nonzero scalar.
fn gcd_raw<K: Scalar>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> MultiPoly<K> {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    if p == q {
        return p.clone();
    }
    let var = first_var(p, q).expect("nonconstant input has a variable");
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let cont_p = content(&pc);
    let cont_q = content(&qc);
    let cont = gcd_raw(&cont_p, &cont_q);
    let mut a = primitive_part(&pc, &cont_p);
    let mut b = primitive_part(&qc, &cont_q);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            // b is a nonzero element of the coefficient ring, primitive: a unit.
            return cont;
        }
        let r = pseudo_remainder(&a, &b);
        a = b;
        b = if r.is_empty() {
            r
        } else {
            let c = content(&r);
            primitive_part(&r, &c)
        };
    }
    let g = MultiPoly::from_coefficients(var, &a);
    &cont * &g
}

/// Greatest common divisor, normalized so its lex-leading coefficient is 1.
/// `gcd(0, q)` is the normalized `q`; `gcd(0, 0)` is zero.
pub fn gcd<K: Scalar>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> MultiPoly<K> {
    if p.is_zero() {
        return q.normalize();
    }
    if q.is_zero() {
        return p.normalize();
    }
    gcd_raw(p, q).normalize()
}

/// Product of the distinct irreducible factors of `p`, normalized.
pub fn squarefree_part<K: Scalar>(p: &MultiPoly<K>) -> Result<MultiPoly<K>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(MultiPoly::one());
    }
    let mut g = p.clone();
    for v in p.vars() {
        g = gcd_raw(&g, &p.derivative(v));
        if g.is_constant() {
            break;
        }
    }
    let s = p
        .div_exact(&g)
        .ok_or_else(|| Error::Internal("gcd does not divide its input".into()))?;
    Ok(s.normalize())
}
