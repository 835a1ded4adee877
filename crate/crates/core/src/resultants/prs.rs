use crate::algebra::gcd::{pseudo_remainder, rec_trim, RecPoly};
use crate::algebra::{MultiPoly, Scalar, Var};
use crate::error::{Error, Result};

fn div<K: Scalar>(a: &MultiPoly<K>, b: &MultiPoly<K>) -> MultiPoly<K> {
    a.div_exact(b)
        .expect("subresultant division is exact over an integral domain")
}

/// Resultant of `f` and `g` with respect to `var`, by the subresultant
/// remainder sequence.
///
/// Degree conventions: if `deg f = 0` the result is `f^deg g` (and
/// symmetrically), so two `var`-free inputs give 1.
pub fn resultant<K: Scalar>(f: &MultiPoly<K>, g: &MultiPoly<K>, var: Var) -> Result<MultiPoly<K>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a: RecPoly<K> = f.coefficients_in(var);
    let mut b: RecPoly<K> = g.coefficients_in(var);
    let (da, db) = (a.len() - 1, b.len() - 1);
    if da == 0 {
        return Ok(f.pow(db as u32));
    }
    if db == 0 {
        return Ok(g.pow(da as u32));
    }
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    let mut gg = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let (deg_a, deg_b) = (a.len() - 1, b.len() - 1);
        let delta = (deg_a - deg_b) as u32;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            negate = !negate;
        }
        let r = rec_trim(pseudo_remainder(&a, &b));
        a = b;
        if r.is_empty() {
            return Ok(MultiPoly::zero());
        }
        let d = &gg * &h.pow(delta);
        b = r.iter().map(|c| div(c, &d)).collect();
        gg = a.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => div(&gg.pow(delta), &h.pow(delta - 1)),
        };
        if b.len() == 1 {
            break;
        }
    }
    let deg_a = (a.len() - 1) as u32;
    let lb = &b[0];
    let res = if deg_a == 1 {
        lb.clone()
    } else {
        div(&lb.pow(deg_a), &h.pow(deg_a - 1))
    };
    Ok(if negate { -res } else { res })
}

/// Discriminant `(-1)^(d(d-1)/2) · Res(f, ∂f) / lc(f)` for `f` whose leading
/// coefficient in `var` is a nonzero constant.
pub fn discriminant<K: Scalar>(f: &MultiPoly<K>, var: Var) -> Result<MultiPoly<K>> {
    let (d, lc) = f.degree_and_lead(var)?;
    if d == 0 {
        return Err(Error::DegenerateInput(format!(
            "discriminant needs positive degree in {}",
            var
        )));
    }
    let lc = lc
        .constant_value()
        .ok_or_else(|| Error::UnsupportedLeadingCoefficient(var.to_string()))?;
    let res = resultant(f, &f.derivative(var), var)?;
    let inv = lc.inv().expect("leading coefficient is nonzero");
    let out = res.scale(&inv);
    Ok(if (d * (d - 1) / 2) % 2 == 1 {
        -out
    } else {
        out
    })
}
