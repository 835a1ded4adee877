//! Numeric roots of exact univariate polynomials.
//!
//! The polynomial is first split into irreducible factors over Q, so every
//! factor handed to the Aberth iteration has simple roots; roots are then
//! repeated according to multiplicity.

use num_complex::Complex;
use num_traits::{Float, ToPrimitive};

use crate::error::{Error, Result};
use crate::resultants::factor_univariate;
use crate::QPoly;

const MAX_ITERATIONS: usize = 500;

fn to_float<F: Float>(r: &crate::Rat) -> F {
    F::from(r.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan)
}

fn horner<F: Float>(a: &[F], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::new(F::zero(), F::zero());
    let mut dp = p;
    for c in a.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex::new(*c, F::zero());
    }
    (p, dp)
}

/// Roots of a squarefree polynomial (coefficients low degree first) by the
/// Aberth–Ehrlich iteration.
fn aberth<F: Float>(a: &[F]) -> Vec<Complex<F>> {
    let n = a.len() - 1;
    let lead = a[n];
    let monic: Vec<F> = a.iter().map(|c| *c / lead).collect();
    let radius = F::one() + monic[..n].iter().fold(F::zero(), |m, c| m.max(c.abs()));
    let two_pi = F::from(std::f64::consts::TAU).unwrap();
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let angle = two_pi * F::from(k).unwrap() / F::from(n).unwrap() + F::from(0.4).unwrap();
            Complex::from_polar(radius * F::from(0.5).unwrap(), angle)
        })
        .collect();
    let eps = F::epsilon() * F::from(16).unwrap();
    for _ in 0..MAX_ITERATIONS {
        let mut moved = F::zero();
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == F::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut sum = Complex::new(F::zero(), F::zero());
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    sum = sum + (z[i] - zj).inv();
                }
            }
            let step = ratio / (Complex::new(F::one(), F::zero()) - ratio * sum);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] = z[i] - step;
                moved = moved.max(step.norm() / (F::one() + z[i].norm()));
            }
        }
        if moved < eps {
            break;
        }
    }
    // a few Newton steps to polish
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *zi);
            if dp.norm() > F::zero() {
                *zi = *zi - p / dp;
            }
        }
    }
    z
}

/// Decimal digits a float type resolves.
fn digits<F: Float>() -> u32 {
    let eps = F::epsilon().to_f64().unwrap_or(1e-16);
    (-eps.log10()).floor() as u32
}

/// All complex roots of a univariate rational polynomial with multiplicity,
/// computed in the float type `F`; `precision` decimal digits must not exceed
/// what `F` resolves.
pub fn complex_roots_in<F: Float>(p: &QPoly, precision: u32) -> Result<Vec<Complex<F>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.vars().len() > 1 {
        return Err(Error::NotUnivariate);
    }
    if precision > digits::<F>() {
        return Err(Error::PrecisionUnsupported(precision));
    }
    let Some(&var) = p.vars().iter().next() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for (factor, mult) in factor_univariate(p)? {
        let coeffs: Vec<F> = factor
            .coefficients_in(var)
            .iter()
            .map(|c| to_float(&c.constant_value().unwrap_or_default()))
            .collect();
        for z in aberth(&coeffs) {
            for _ in 0..mult {
                out.push(z);
            }
        }
    }
    out.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(out)
}

/// [`complex_roots_in`] with `f64`.
pub fn complex_roots(p: &QPoly, precision: u32) -> Result<Vec<Complex<f64>>> {
    complex_roots_in::<f64>(p, precision)
}

/// `|p(z)|` evaluated in floating point.
pub fn residual(p: &QPoly, z: Complex<f64>) -> f64 {
    let Some(&var) = p.vars().iter().next() else {
        return p
            .constant_value()
            .and_then(|c| c.to_f64())
            .unwrap_or(0.0)
            .abs();
    };
    let coeffs: Vec<f64> = p
        .coefficients_in(var)
        .iter()
        .map(|c| to_float(&c.constant_value().unwrap_or_default()))
        .collect();
    horner(&coeffs, z).0.norm()
}
