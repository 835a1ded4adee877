//! Newton–Puiseux expansion of a fiber `p = c` at infinity.
//!
//! With `X = 1/x` and `y = Y/X`, the fiber becomes `H(X, Y) = 0` where
//! `H = X^m (p(1/X, Y/X) - c)` is monic of degree `m` in `Y`, so every branch
//! at infinity is a root `Y(X)` near `X = 0`. Roots are computed with rational
//! Newton polygon steps `X = xi^v T^q`, `Y = T^p (xi^u + Y')`: a `q`-th root of
//! an edge root is never taken, the parametrization absorbs it instead.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::laurent::Laurent;
use crate::algebra::dense;
use crate::algebra::scalar::rat_nth_root;
use crate::algebra::{AlgNum, Modulus, Monomial, Scalar, Var};
use crate::error::{Error, Result};
use crate::resultants::factor_univariate;
use crate::{AlgPoly, QPoly, Rat};

/// One conjugacy class of branches of `p = c` at infinity, parametrized by
/// `x = x_scale · t^m`, `y = Σ b_e t^e`.
///
/// `m` is the ramification index of the represented place. `ramification`
/// counts how many of the `deg p` roots `y(x)` the class accounts for: `m`
/// times the degree of the coefficient field, times a multiplicity when the
/// fiber is not reduced. These counts sum to `deg p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxBranch {
    pub m: u32,
    pub x_scale: AlgNum,
    /// Nonzero coefficients of `y`, highest exponent first.
    pub coeffs: Vec<(i64, AlgNum)>,
    /// `y` is known modulo `O(t^-order)`.
    pub order: u32,
    pub field: Option<Arc<Modulus>>,
    pub ramification: u32,
    /// `y` is the full (finite) series.
    pub exact: bool,
    /// `false` when several roots still agree to the requested order and the
    /// class was not separated.
    pub resolved: bool,
}

impl PuiseuxBranch {
    pub fn x_series(&self) -> Laurent<AlgNum> {
        Laurent::monomial(self.x_scale.clone(), self.m as i64)
    }

    pub fn y_series(&self) -> Laurent<AlgNum> {
        let floor = if self.exact {
            None
        } else {
            Some(-(self.order as i64))
        };
        Laurent::from_terms(self.coeffs.iter().cloned(), floor)
    }

    /// `p(x(t), y(t)) - c`.
    pub fn residual(&self, p: &QPoly, c: &Rat) -> Laurent<AlgNum> {
        let shifted = p - &QPoly::constant(c.clone());
        Laurent::evaluate(&shifted.embed(), &self.x_series(), &self.y_series())
    }

    /// Exponents above this bound must vanish in [`residual`](Self::residual).
    pub fn residual_threshold(&self, deg_p: u32) -> i64 {
        (deg_p as i64 - 1) * self.m as i64 - self.order as i64
    }
}

fn powi(x: &AlgNum, k: i64) -> AlgNum {
    if k >= 0 {
        x.powu(k as u32)
    } else {
        x.inv().expect("edge roots are nonzero").powu((-k) as u32)
    }
}

/// `u q - v p = 1` with `0 <= v < q`.
fn bezout(p: i64, q: i64) -> (i64, i64) {
    let e = q.extended_gcd(&p);
    debug_assert_eq!(e.gcd, 1);
    let v = (-e.y).rem_euclid(q);
    ((1 + v * p) / q, v)
}

fn local_equation(p: &QPoly, c: &Rat) -> AlgPoly {
    let m = p.total_degree().unwrap_or(0);
    let shifted = p - &QPoly::constant(c.clone());
    AlgPoly::from_terms(shifted.terms().map(|(mono, a)| {
        let (i, j) = (mono.exp(Var::X), mono.exp(Var::Y));
        let mono = Monomial::var(Var::T, m - i - j).with_exp(Var::Y, j);
        (mono, AlgNum::rational(a.clone()))
    }))
}

/// Lowest `T`-exponent of each `Y^j` coefficient.
fn orders(f: &AlgPoly) -> Vec<Option<u32>> {
    let d = f.degree_in(Var::Y).unwrap_or(0) as usize;
    let mut out = vec![None; d + 1];
    for (m, _) in f.terms() {
        let (i, j) = (m.exp(Var::T), m.exp(Var::Y) as usize);
        out[j] = Some(out[j].map_or(i, |o: u32| o.min(i)));
    }
    out
}

struct Root {
    xi: AlgNum,
    degree: u32,
    field: Option<Arc<Modulus>>,
}

/// Roots of `phi` (low degree first) grouped by irreducible factor, adjoining
/// at most one extension to `field`.
fn edge_roots(phi: &[AlgNum], field: &Option<Arc<Modulus>>) -> Result<Vec<Root>> {
    let mut out = Vec::new();
    for (g, _) in dense::squarefree_decomposition(phi) {
        if g.len() == 2 {
            out.push(Root {
                xi: -g[0].clone(),
                degree: 1,
                field: field.clone(),
            });
            continue;
        }
        let rational: Option<Vec<Rat>> = g.iter().map(|a| a.as_rat()).collect();
        let Some(rational) = rational else {
            return Err(Error::UnsupportedTower);
        };
        let poly = QPoly::from_terms(
            rational
                .iter()
                .enumerate()
                .map(|(k, a)| (Monomial::var(Var::Z, k as u32), a.clone())),
        );
        for (f, _) in factor_univariate(&poly)? {
            let coeffs = f.coefficients_in(Var::Z);
            let coeffs: Vec<Rat> = coeffs
                .iter()
                .map(|c| c.constant_value().unwrap_or_default())
                .collect();
            if coeffs.len() == 2 {
                out.push(Root {
                    xi: AlgNum::rational(-coeffs[0].clone() / coeffs[1].clone()),
                    degree: 1,
                    field: field.clone(),
                });
            } else if field.is_some() {
                return Err(Error::UnsupportedTower);
            } else {
                let modulus = Modulus::new(coeffs)?;
                out.push(Root {
                    xi: AlgNum::generator(&modulus),
                    degree: modulus.degree() as u32,
                    field: Some(modulus),
                });
            }
        }
    }
    Ok(out)
}

/// State of one path through the Newton polygon tree. The original root is
/// `Y_0 = A(S) + c S^s Y_k(S)` with `X = lambda S^e`, and `Y_k` is a root of
/// `f(S, Y_k)` vanishing at `S = 0`.
#[derive(Clone)]
struct Frame {
    f: AlgPoly,
    a: Vec<AlgNum>,
    c: AlgNum,
    s: u32,
    lambda: AlgNum,
    e: u32,
    weight: u32,
    field: Option<Arc<Modulus>>,
}

impl Frame {
    fn step(&self, root: &Root, p: u32, q: u32, l: u32) -> Frame {
        let (u, v) = bezout(p as i64, q as i64);
        let xi = &root.xi;
        let t = AlgPoly::var(Var::T);
        let new_t = t.pow(q).scale(&powi(xi, v));
        let new_y = &t.pow(p) * &(&AlgPoly::constant(powi(xi, u)) + &AlgPoly::var(Var::Y));
        let g = self.f.substitute(&[(Var::T, new_t), (Var::Y, new_y)]);
        let f = AlgPoly::from_terms(g.terms().map(|(m, c)| {
            let i = m.exp(Var::T);
            debug_assert!(i >= l);
            (m.with_exp(Var::T, i - l), c.clone())
        }));
        let s = self.s as i64;
        let len = (q * self.s + p) as usize + 1;
        let mut a = vec![AlgNum::zero(); len.max(q as usize * self.a.len())];
        for (j, aj) in self.a.iter().enumerate() {
            if !aj.is_zero() {
                a[q as usize * j] = aj.clone() * powi(xi, v * j as i64);
            }
        }
        let k = (q * self.s + p) as usize;
        a[k] = a[k].clone() + self.c.clone() * powi(xi, v * s + u);
        Frame {
            f,
            a: dense::trim(a),
            c: self.c.clone() * powi(xi, v * s),
            s: q * self.s + p,
            lambda: self.lambda.clone() * powi(xi, v * self.e as i64),
            e: q * self.e,
            weight: self.weight * q * root.degree,
            field: root.field.clone(),
        }
    }
}

fn coeff_at(f: &AlgPoly, i: u32, j: u32) -> AlgNum {
    f.coeff(&Monomial::var(Var::T, i).with_exp(Var::Y, j))
}

/// Lower-left Newton polygon edges `(p, q, l, phi)` between `(0, i_0)` and
/// `(mult, 0)` in `(j, i)` coordinates.
fn edges(f: &AlgPoly, ords: &[Option<u32>], mult: usize) -> Vec<(u32, u32, u32, Vec<AlgNum>)> {
    let pts: Vec<(i64, i64)> = (0..=mult)
        .filter_map(|j| ords[j].map(|i| (j as i64, i as i64)))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (pt.1 - o.1) - (a.1 - o.1) * (pt.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull.windows(2)
        .map(|w| {
            let ((ja, ia), (jb, ib)) = (w[0], w[1]);
            let (num, den) = (ia - ib, jb - ja);
            let g = num.gcd(&den);
            let (p, q) = ((num / g) as u32, (den / g) as u32);
            let l = q * ia as u32 + p * ja as u32;
            let phi: Vec<AlgNum> = (ja..=jb)
                .step_by(q as usize)
                .map(|j| {
                    let i = (l as i64 - p as i64 * j) / q as i64;
                    coeff_at(f, i as u32, j as u32)
                })
                .collect();
            (p, q, l, phi)
        })
        .collect()
}

fn series_mul(a: &[AlgNum], b: &[AlgNum], n: usize) -> Vec<AlgNum> {
    let mut out = vec![AlgNum::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
    }
    out
}

fn series_inv(a: &[AlgNum], n: usize) -> Vec<AlgNum> {
    let a0 = a[0].inv().expect("unit series");
    let mut b = vec![a0.clone()];
    for k in 1..n {
        let mut acc = AlgNum::zero();
        for i in 1..=k.min(a.len() - 1) {
            acc = acc + a[i].clone() * b[k - i].clone();
        }
        b.push(-(acc * a0.clone()));
    }
    b
}

/// The root of `f(S, Y)` with `Y(0) = 0` modulo `S^n`, for `f_Y(0, 0) != 0`.
fn solve_simple(f: &AlgPoly, n: usize) -> Vec<AlgNum> {
    let rows: Vec<Vec<AlgNum>> = f
        .coefficients_in(Var::Y)
        .iter()
        .map(|c| {
            let mut v = vec![AlgNum::zero(); n];
            for (m, a) in c.terms() {
                let i = m.exp(Var::T) as usize;
                if i < n {
                    v[i] = a.clone();
                }
            }
            v
        })
        .collect();
    let mut y = vec![AlgNum::zero(); n];
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        let mut val = vec![AlgNum::zero(); prec];
        let mut der = vec![AlgNum::zero(); prec];
        for row in rows.iter().rev() {
            der = series_mul(&der, &y, prec);
            for k in 0..prec {
                der[k] = der[k].clone() + val[k].clone();
            }
            val = series_mul(&val, &y, prec);
            for k in 0..prec {
                val[k] = val[k].clone() + row[k].clone();
            }
        }
        let delta = series_mul(&val, &series_inv(&der, prec), prec);
        for k in 0..prec {
            y[k] = y[k].clone() - delta[k].clone();
        }
    }
    y
}

fn satisfies_exactly(f: &AlgPoly, y: &[AlgNum]) -> bool {
    let poly = AlgPoly::from_terms(
        y.iter()
            .enumerate()
            .map(|(k, a)| (Monomial::var(Var::T, k as u32), a.clone())),
    );
    f.substitute(&[(Var::Y, poly)]).is_zero()
}

struct Expander {
    order: u32,
    out: Vec<PuiseuxBranch>,
}

impl Expander {
    /// Number of coefficients of `Y_0` that determine `y` to the order.
    fn needed(&self, frame: &Frame) -> usize {
        (frame.e + self.order) as usize
    }

    fn emit(&mut self, frame: &Frame, y0: Vec<AlgNum>, weight: u32, exact: bool, resolved: bool) {
        let e = frame.e as i64;
        let keep = if exact {
            y0.len()
        } else {
            self.needed(frame).min(y0.len())
        };
        let inv_lambda = frame.lambda.inv().expect("nonzero scale");
        let root = inv_lambda
            .as_rat()
            .and_then(|r| rat_nth_root(&r, frame.e))
            .map(AlgNum::rational);
        let (x_scale, coeffs) = match root {
            Some(mu) => (
                AlgNum::one(),
                (0..keep)
                    .map(|j| (e - j as i64, y0[j].clone() * mu.powu(j as u32)))
                    .collect::<Vec<_>>(),
            ),
            None => (
                inv_lambda.clone(),
                (0..keep)
                    .map(|j| (e - j as i64, y0[j].clone() * inv_lambda.clone()))
                    .collect(),
            ),
        };
        self.out.push(PuiseuxBranch {
            m: frame.e,
            x_scale,
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            order: self.order,
            field: frame.field.clone(),
            ramification: weight,
            exact,
            resolved,
        });
    }

    fn run(&mut self, mut frame: Frame, level: u32) -> Result<()> {
        let ords = orders(&frame.f);
        let jmin = ords
            .iter()
            .position(|o| o.is_some())
            .expect("nonzero equation");
        if jmin > 0 {
            self.emit(
                &frame,
                frame.a.clone(),
                frame.weight * jmin as u32,
                true,
                true,
            );
            frame.f = AlgPoly::from_terms(
                frame
                    .f
                    .terms()
                    .map(|(m, c)| (m.with_exp(Var::Y, m.exp(Var::Y) - jmin as u32), c.clone())),
            );
        }
        let ords = orders(&frame.f);
        if level == 0 {
            let phi: Vec<AlgNum> = (0..ords.len() as u32)
                .map(|j| coeff_at(&frame.f, 0, j))
                .collect();
            for root in edge_roots(&phi, &frame.field)? {
                let next = frame.step(&root, 0, 1, 0);
                self.run(next, level + 1)?;
            }
            return Ok(());
        }
        let mult = ords
            .iter()
            .position(|o| *o == Some(0))
            .expect("a root of multiplicity at least one at the origin");
        if mult == 0 {
            return Ok(());
        }
        if mult == 1 {
            return self.leaf(&frame);
        }
        if frame.s as usize + 1 >= self.needed(&frame) {
            self.emit(
                &frame,
                frame.a.clone(),
                frame.weight * mult as u32,
                false,
                false,
            );
            return Ok(());
        }
        for (p, q, l, phi) in edges(&frame.f, &ords, mult) {
            for root in edge_roots(&phi, &frame.field)? {
                let next = frame.step(&root, p, q, l);
                self.run(next, level + 1)?;
            }
        }
        Ok(())
    }

    fn leaf(&mut self, frame: &Frame) -> Result<()> {
        let total = self.needed(frame);
        let n = total.saturating_sub(frame.s as usize).max(1);
        let yk = dense::trim(solve_simple(&frame.f, n));
        let exact = yk.len() * 2 <= n && satisfies_exactly(&frame.f, &yk);
        let mut y0 = frame.a.clone();
        let len = (frame.s as usize + yk.len()).max(y0.len());
        y0.resize(len, AlgNum::zero());
        for (k, a) in yk.iter().enumerate() {
            let i = frame.s as usize + k;
            y0[i] = y0[i].clone() + frame.c.clone() * a.clone();
        }
        self.emit(frame, y0, frame.weight, exact, true);
        Ok(())
    }
}

/// Branches of `p(x, y) = c` at infinity, `y` known modulo `O(t^-order)`.
///
/// `p` must have the form `y^deg + lower terms in y`.
pub fn expand_at_infinity(p: &QPoly, c: &Rat, order: u32) -> Result<Vec<PuiseuxBranch>> {
    if order < 1 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if !crate::maps::is_monic_in_y(p) || !p.only_vars(&[Var::X, Var::Y]) {
        return Err(Error::NotMonic(p.to_string()));
    }
    let frame = Frame {
        f: local_equation(p, c),
        a: Vec::new(),
        c: AlgNum::one(),
        s: 0,
        lambda: AlgNum::one(),
        e: 1,
        weight: 1,
        field: None,
    };
    let mut ex = Expander {
        order,
        out: Vec::new(),
    };
    ex.run(frame, 0)?;
    debug_assert_eq!(
        ex.out.iter().map(|b| b.ramification).sum::<u32>(),
        p.total_degree().unwrap_or(0)
    );
    Ok(ex.out)
}
