//! Polynomial maps of the plane: Jacobians, composition, normalization to the
//! monic-in-`y` form, the parametric resultant `Res_y(p - u, q - v)` and the
//! resultant criterion for invertibility.

use crate::algebra::{MultiPoly, Scalar, Var};
use crate::error::{Error, Result};
use crate::resultants::resultant;

/// A map `(x, y) -> (p, q)` with `p`, `q` nonzero polynomials in `x`, `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap2<K: Scalar> {
    p: MultiPoly<K>,
    q: MultiPoly<K>,
}

impl<K: Scalar> PolyMap2<K> {
    pub fn new(p: MultiPoly<K>, q: MultiPoly<K>) -> Result<Self> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        for c in [&p, &q] {
            if !c.only_vars(&[Var::X, Var::Y]) {
                return Err(Error::InvalidArgument(format!(
                    "map components must only involve x and y, got {}",
                    c
                )));
            }
        }
        Ok(PolyMap2 { p, q })
    }

    pub fn identity() -> Self {
        PolyMap2 {
            p: MultiPoly::var(Var::X),
            q: MultiPoly::var(Var::Y),
        }
    }

    pub fn p(&self) -> &MultiPoly<K> {
        &self.p
    }

    pub fn q(&self) -> &MultiPoly<K> {
        &self.q
    }

    pub fn degree(&self) -> u32 {
        self.p
            .total_degree()
            .unwrap_or(0)
            .max(self.q.total_degree().unwrap_or(0))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Pulls a polynomial in `u`, `v` back along the map.
    pub fn pull_back(&self, g: &MultiPoly<K>) -> MultiPoly<K> {
        g.substitute(&[(Var::U, self.p.clone()), (Var::V, self.q.clone())])
    }

    fn in_monic_form(&self) -> bool {
        is_monic_in_y(&self.p)
    }
}

impl<K: Scalar> std::fmt::Display for PolyMap2<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `y`-degree equal to the total degree with `y^d` coefficient 1.
pub(crate) fn is_monic_in_y<K: Scalar>(p: &MultiPoly<K>) -> bool {
    let Some(d) = p.total_degree() else {
        return false;
    };
    p.degree_in(Var::Y) == Some(d) && p.coeff(&crate::Monomial::var(Var::Y, d)).is_one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianReport<K: Scalar> {
    pub jac: MultiPoly<K>,
    pub is_keller: bool,
}

pub fn jacobian<K: Scalar>(f: &PolyMap2<K>) -> JacobianReport<K> {
    let (x, y) = (Var::X, Var::Y);
    let jac =
        &(&f.p.derivative(x) * &f.q.derivative(y)) - &(&f.p.derivative(y) * &f.q.derivative(x));
    let is_keller = jac.is_constant() && !jac.is_zero();
    JacobianReport { jac, is_keller }
}

/// `(F ∘ G)(x, y) = F(G(x, y))`.
pub fn compose<K: Scalar>(f: &PolyMap2<K>, g: &PolyMap2<K>) -> PolyMap2<K> {
    let sub = [(Var::X, g.p.clone()), (Var::Y, g.q.clone())];
    PolyMap2 {
        p: f.p.substitute(&sub),
        q: f.q.substitute(&sub),
    }
}

/// Source shear `(x, y) -> (x + t·y, y)` followed by dividing the components
/// by `target_scale`'s reciprocals, i.e. `p' = scale.0 · p(x + t y, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationCertificate<K: Scalar> {
    pub shear: u32,
    pub target_scale: (K, K),
}

impl<K: Scalar> NormalizationCertificate<K> {
    pub fn is_trivial(&self) -> bool {
        self.shear == 0 && self.target_scale.0.is_one() && self.target_scale.1.is_one()
    }

    fn shear_map(&self) -> PolyMap2<K> {
        let t = MultiPoly::constant(K::from_int(self.shear as i64));
        PolyMap2 {
            p: &MultiPoly::var(Var::X) + &(&t * &MultiPoly::var(Var::Y)),
            q: MultiPoly::var(Var::Y),
        }
    }

    /// Applies the certificate to `f`.
    pub fn apply(&self, f: &PolyMap2<K>) -> PolyMap2<K> {
        let sheared = compose(f, &self.shear_map());
        PolyMap2 {
            p: sheared.p.scale(&self.target_scale.0),
            q: sheared.q.scale(&self.target_scale.1),
        }
    }

    /// Given an inverse `(g1', g2')` of the normalized map, the inverse of the
    /// original map in its own target coordinates.
    pub fn transport_inverse(
        &self,
        g1: &MultiPoly<K>,
        g2: &MultiPoly<K>,
    ) -> (MultiPoly<K>, MultiPoly<K>) {
        let scaled = [
            (Var::U, MultiPoly::var(Var::U).scale(&self.target_scale.0)),
            (Var::V, MultiPoly::var(Var::V).scale(&self.target_scale.1)),
        ];
        let (a, b) = (g1.substitute(&scaled), g2.substitute(&scaled));
        let t = K::from_int(self.shear as i64);
        (&a + &b.scale(&t), b)
    }
}

fn top_form<K: Scalar>(p: &MultiPoly<K>) -> (u32, MultiPoly<K>) {
    let d = p.total_degree().unwrap_or(0);
    let top = MultiPoly::from_terms(
        p.terms()
            .filter(|(m, _)| m.total_degree() == d)
            .map(|(m, c)| (*m, c.clone())),
    );
    (d, top)
}

fn top_at<K: Scalar>(top: &MultiPoly<K>, t: u32) -> K {
    top.evaluate(&[(Var::X, K::from_int(t as i64)), (Var::Y, K::one())])
        .constant_value()
        .unwrap_or_else(K::zero)
}

/// Brings both components to the form `y^deg + lower terms in y` with the
/// smallest non-negative shear.
pub fn monicize<K: Scalar>(f: &PolyMap2<K>) -> Result<(PolyMap2<K>, NormalizationCertificate<K>)> {
    if f.p.is_constant() || f.q.is_constant() {
        return Err(Error::DegenerateMap);
    }
    let (_, tp) = top_form(&f.p);
    let (_, tq) = top_form(&f.q);
    let mut t = 0u32;
    loop {
        let (a, b) = (top_at(&tp, t), top_at(&tq, t));
        if !a.is_zero() && !b.is_zero() {
            let cert = NormalizationCertificate {
                shear: t,
                target_scale: (a.inv().expect("nonzero"), b.inv().expect("nonzero")),
            };
            let g = cert.apply(f);
            debug_assert!(is_monic_in_y(&g.p) && is_monic_in_y(&g.q));
            return Ok((g, cert));
        }
        t += 1;
    }
}

/// `Res_y(p - u, q - v) = r_top · x^n + ... + r_zero`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantData<K: Scalar> {
    pub r: MultiPoly<K>,
    pub n: u32,
    pub r_top: MultiPoly<K>,
    pub r_zero: MultiPoly<K>,
}

impl<K: Scalar> ResultantData<K> {
    pub fn from_resultant(r: MultiPoly<K>) -> Self {
        let n = r.degree_in(Var::X).unwrap_or(0);
        ResultantData {
            n,
            r_top: r.coeff_of(Var::X, n),
            r_zero: r.coeff_of(Var::X, 0),
            r,
        }
    }
}

fn shifted<K: Scalar>(f: &PolyMap2<K>) -> (MultiPoly<K>, MultiPoly<K>) {
    (
        &f.p - &MultiPoly::var(Var::U),
        &f.q - &MultiPoly::var(Var::V),
    )
}

fn require_monic<K: Scalar>(f: &PolyMap2<K>) -> Result<()> {
    if f.in_monic_form() {
        Ok(())
    } else {
        Err(Error::NotMonic(f.p.to_string()))
    }
}

/// The parametric resultant of a map whose first component is monic in `y`.
pub fn parametric_resultant<K: Scalar>(f: &PolyMap2<K>) -> Result<ResultantData<K>> {
    require_monic(f)?;
    let (a, b) = shifted(f);
    Ok(ResultantData::from_resultant(resultant(&a, &b, Var::Y)?))
}

/// `n >= 1` and `r_zero != 0`.
pub fn sakkalis_check<K: Scalar>(d: &ResultantData<K>) -> bool {
    d.n >= 1 && !d.r_zero.is_zero()
}

pub fn geometric_degree<K: Scalar>(f: &PolyMap2<K>) -> Result<u32> {
    Ok(parametric_resultant(f)?.n)
}

/// The leading coefficient `r_top(u, v)`; the map fails to be proper exactly
/// over its zero set.
pub fn nonproper_set<K: Scalar>(f: &PolyMap2<K>) -> Result<MultiPoly<K>> {
    Ok(parametric_resultant(f)?.r_top)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseCertificate<K: Scalar> {
    pub g1: MultiPoly<K>,
    pub g2: MultiPoly<K>,
    pub lambda1: K,
    pub lambda2: K,
}

impl<K: Scalar> InverseCertificate<K> {
    pub fn as_map(&self) -> PolyMap2<K> {
        let back = [
            (Var::U, MultiPoly::var(Var::X)),
            (Var::V, MultiPoly::var(Var::Y)),
        ];
        PolyMap2 {
            p: self.g1.substitute(&back),
            q: self.g2.substitute(&back),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResultantSide {
    /// `Res_y(p - u, q - v)` is not `λ (x - g1)`.
    EliminateY,
    /// `Res_x(p - u, q - v)` is not `λ (y - g2)`.
    EliminateX,
}

impl std::fmt::Display for ResultantSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ResultantSide::EliminateY => "Res_y",
            ResultantSide::EliminateX => "Res_x",
        })
    }
}

/// Why a map was not certified invertible. `n` and `r_top` refer to the
/// monic normalization of the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotInvertible<K: Scalar> {
    pub n: u32,
    pub r_top: MultiPoly<K>,
    pub failed: Vec<ResultantSide>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inversion<K: Scalar> {
    Invertible(InverseCertificate<K>),
    NotInvertible(NotInvertible<K>),
}

impl<K: Scalar> Inversion<K> {
    pub fn certificate(&self) -> Option<&InverseCertificate<K>> {
        match self {
            Inversion::Invertible(c) => Some(c),
            Inversion::NotInvertible(_) => None,
        }
    }
}

/// `r = λ (w - g)` with `λ` a nonzero constant and `g` free of `w`.
fn linear_solution<K: Scalar>(r: &MultiPoly<K>, w: Var) -> Option<(K, MultiPoly<K>)> {
    if r.degree_in(w) != Some(1) {
        return None;
    }
    let lambda = r.coeff_of(w, 1).constant_value()?;
    let g = r.coeff_of(w, 0).scale(&-lambda.inv()?);
    Some((lambda, g))
}

fn invert_by_resultants<K: Scalar>(
    f: &PolyMap2<K>,
) -> Result<std::result::Result<InverseCertificate<K>, Vec<ResultantSide>>> {
    let (a, b) = shifted(f);
    let ry = linear_solution(&resultant(&a, &b, Var::Y)?, Var::X);
    let rx = linear_solution(&resultant(&a, &b, Var::X)?, Var::Y);
    Ok(match (ry, rx) {
        (Some((lambda1, g1)), Some((lambda2, g2))) => Ok(InverseCertificate {
            g1,
            g2,
            lambda1,
            lambda2,
        }),
        (ry, rx) => {
            let mut failed = Vec::new();
            if ry.is_none() {
                failed.push(ResultantSide::EliminateY);
            }
            if rx.is_none() {
                failed.push(ResultantSide::EliminateX);
            }
            Err(failed)
        }
    })
}

/// Decides invertibility by the resultant criterion on the monic
/// normalization and returns the inverse in the original coordinates,
/// verified by composing both ways.
pub fn invert<K: Scalar>(f: &PolyMap2<K>) -> Result<Inversion<K>> {
    let (g, cert) = monicize(f)?;
    let data = parametric_resultant(&g)?;
    let local = match invert_by_resultants(&g)? {
        Ok(c) => c,
        Err(failed) => {
            return Ok(Inversion::NotInvertible(NotInvertible {
                n: data.n,
                r_top: data.r_top,
                failed,
            }))
        }
    };
    let (g1, g2) = cert.transport_inverse(&local.g1, &local.g2);
    // The criterion is coordinate free, so the original map satisfies it too;
    // its constants are the ones reported.
    let original = invert_by_resultants(f)?.map_err(|sides| {
        Error::Internal(format!(
            "normalized map is invertible but {:?} fails on {}",
            sides, f
        ))
    })?;
    if original.g1 != g1 || original.g2 != g2 {
        return Err(Error::Internal(format!(
            "transported inverse disagrees with direct inverse of {}",
            f
        )));
    }
    let inv = original.as_map();
    let id = PolyMap2::identity();
    if compose(f, &inv) != id || compose(&inv, f) != id {
        return Err(Error::Internal(format!(
            "inverse certificate of {} does not compose to the identity",
            f
        )));
    }
    Ok(Inversion::Invertible(original))
}
