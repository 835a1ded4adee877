use crate::algebra::{gcd, squarefree_part, Var};
use crate::error::{Error, Result};
use crate::maps::{parametric_resultant, PolyMap2};
use crate::resultants::resultant;
use crate::{QPoly, Rat};

/// Defining polynomials in `v` of the critical values over the line `u = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalClassification {
    /// `deg_x R`.
    pub n: u32,
    /// Squarefree; roots are values where two roots `x` of `R(x, c, v)`
    /// collide while staying finite. Factors shared with `second_kind_poly`
    /// are removed.
    pub first_kind_poly: QPoly,
    /// `r_top(c, v)`; roots are values where a root `x` escapes to infinity.
    pub second_kind_poly: QPoly,
    /// `r_top(c, v)` vanishes identically.
    pub degenerate_flag: bool,
}

/// Classification from a resultant `R(x, u, v)` directly.
pub fn classify_resultant(r: &QPoly, c: &Rat) -> Result<CriticalClassification> {
    let n = r.degree_in(Var::X).unwrap_or(0);
    if r.is_zero() || n == 0 {
        return Err(Error::DegenerateResultant);
    }
    let at_c = |f: &QPoly| f.evaluate(&[(Var::U, c.clone())]);
    let second = at_c(&r.coeff_of(Var::X, n));
    let rc = at_c(r);
    let degenerate = second.is_zero();
    let first = if rc.is_zero() {
        QPoly::zero()
    } else if rc.degree_in(Var::X).unwrap_or(0) == 0 {
        QPoly::one()
    } else {
        let disc = resultant(&rc, &rc.derivative(Var::X), Var::X)?;
        if disc.is_zero() {
            QPoly::zero()
        } else {
            let mut first = squarefree_part(&disc)?;
            if !degenerate {
                loop {
                    let g = gcd(&first, &second);
                    if g.is_constant() {
                        break;
                    }
                    first = first.div_exact(&g).expect("gcd divides");
                }
            }
            first.normalize()
        }
    };
    Ok(CriticalClassification {
        n,
        first_kind_poly: first,
        second_kind_poly: second,
        degenerate_flag: degenerate,
    })
}

/// Critical values of `v ↦ x` over the fiber `p = c` of a map in monic form,
/// using the specialization `R(x, c, v)` of its parametric resultant.
pub fn classify_critical_values(f: &PolyMap2<Rat>, c: &Rat) -> Result<CriticalClassification> {
    let data = parametric_resultant(f)?;
    classify_resultant(&data.r, c)
}
