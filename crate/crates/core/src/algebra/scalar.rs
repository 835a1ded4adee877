//! Exact coefficient fields.
//!
//! Everything above this layer is written against [`Scalar`]; the two
//! implementations are the rationals and a single simple algebraic extension
//! (see [`super::algnum`]).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rat = BigRational;

/// An exact field usable as polynomial coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero (or a zero divisor).
    fn inv(&self) -> Option<Self>;

    fn from_rat(r: &Rat) -> Self;

    /// The value as a rational, if it is one.
    fn as_rat(&self) -> Option<Rat>;

    /// Whether two values may be combined. Always true for a single field.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    /// Whether `Display` output must be parenthesised when used as a factor.
    fn needs_parens(&self) -> bool {
        false
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

impl Scalar for Rat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact `q`-th root of a rational, if one exists (sign-aware for odd `q`).
pub fn rat_nth_root(r: &Rat, q: u32) -> Option<Rat> {
    if q == 1 {
        return Some(r.clone());
    }
    if r.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let num = int_nth_root(&r.numer().abs(), q)?;
    let den = int_nth_root(r.denom(), q)?;
    let root = Rat::new(num, den);
    Some(if r.is_negative() { -root } else { root })
}

fn int_nth_root(n: &BigInt, q: u32) -> Option<BigInt> {
    let root = n.nth_root(q);
    if num_traits::Pow::pow(&root, q) == *n {
        Some(root)
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
