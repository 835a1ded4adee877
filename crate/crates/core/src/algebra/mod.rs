//! Exact scalar fields and sparse multivariate polynomial arithmetic.

pub mod algnum;
pub mod dense;
pub mod gcd;
pub mod poly;
pub mod scalar;

pub use algnum::{AlgNum, Modulus};
pub use gcd::{gcd, squarefree_part};
pub use poly::{poly_arith, ArithOp, Monomial, MultiPoly, Var};
pub use scalar::{rat, ratio, Rat, Scalar};
