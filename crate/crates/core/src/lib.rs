//! Exact analysis of polynomial maps `(p, q)` of the plane.
//!
//! The toolkit decides invertibility through resultants, exposes the
//! power-of-irreducible structure of parametric resultants, expands fibers
//! `p = c` at infinity as Puiseux series and pushes those branches through
//! `q` to locate the asymptotic (non-properness) set.
//!
//! All algebra is generic over an exact [`Scalar`] field; the concrete
//! aliases below cover the rationals and one simple algebraic extension.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod maps;
pub mod puiseux;
pub mod resultants;

pub use algebra::{AlgNum, Modulus, Monomial, MultiPoly, Rat, Scalar, Var};
pub use error::{Error, Result};

/// Polynomials with rational coefficients.
pub type QPoly = MultiPoly<Rat>;
/// Polynomials over a simple algebraic extension of the rationals.
pub type AlgPoly = MultiPoly<AlgNum>;
