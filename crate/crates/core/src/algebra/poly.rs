//! Sparse multivariate polynomials over a fixed seven-variable universe.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Rat, Scalar};
use crate::error::{Error, Result};

pub const NVARS: usize = 7;

/// The variable universe, in the fixed order used for lex comparisons and
/// gcd recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    U = 2,
    V = 3,
    T = 4,
    S = 5,
    Z = 6,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::U, Var::V, Var::T, Var::S, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "u", "v", "t", "s", "z"][self.index()]
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector. Ordered graded-lexicographically (total degree first,
/// then lex with `x > y > u > ...`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = other.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        Monomial(m)
    }

    pub fn with_exp(&self, v: Var, e: u32) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arithmetic operations accepted by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Exact sparse polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<K> {
    terms: BTreeMap<Monomial, K>,
}

impl<K: Scalar> MultiPoly<K> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(K::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(K::one(), Monomial::var(v, 1))
    }

    pub fn monomial(c: K, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<K> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one()))
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in `v`, `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Whether only variables in `allowed` occur.
    pub fn only_vars(&self, allowed: &[Var]) -> bool {
        self.vars().iter().all(|v| allowed.contains(v))
    }

    /// Leading term in pure lex order `x > y > u > v > t > s > z`.
    pub fn lex_leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().max_by(|a, b| a.0 .0.cmp(&b.0 .0))
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k.clone() * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k.clone() * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c.clone() * &K::from_int(e as i64));
            }
        }
        out
    }

    /// Simultaneous substitution of variables by polynomials, by nested
    /// Horner evaluation so only products with the replacements are formed.
    pub fn substitute(&self, assignments: &[(Var, MultiPoly<K>)]) -> Self {
        let mut replace: Vec<(Var, &MultiPoly<K>)> = Vec::new();
        for (v, p) in assignments {
            replace.retain(|(w, _)| w != v);
            replace.push((*v, p));
        }
        self.horner(&replace)
    }

    fn horner(&self, replace: &[(Var, &MultiPoly<K>)]) -> Self {
        let Some(((v, r), rest)) = replace.split_first() else {
            return self.clone();
        };
        if self.degree_in(*v).unwrap_or(0) == 0 {
            return self.horner(rest);
        }
        let coeffs = self.coefficients_in(*v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &acc * *r + c.horner(rest);
        }
        acc
    }

    /// Evaluates the given variables at scalars.
    pub fn evaluate(&self, assignments: &[(Var, K)]) -> Self {
        let subs: Vec<(Var, MultiPoly<K>)> = assignments
            .iter()
            .map(|(v, c)| (*v, Self::constant(c.clone())))
            .collect();
        self.substitute(&subs)
    }

    /// Degree in `v` and the coefficient of its top power.
    pub fn degree_and_lead(&self, v: Var) -> Result<(u32, MultiPoly<K>)> {
        let d = self.degree_in(v).ok_or(Error::ZeroPolynomial)?;
        Ok((d, self.coeff_of(v, d)))
    }

    /// Coefficient of `v^k`, a polynomial free of `v`.
    pub fn coeff_of(&self, v: Var, k: u32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Recursive view: coefficients of `v^0, v^1, ...`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let Some(d) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(); d as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize]
                .terms
                .insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Inverse of [`Self::coefficients_in`]; the coefficients must be free of `v`.
    pub fn from_coefficients(v: Var, coeffs: &[Self]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, val) in &c.terms {
                out.add_term(m.with_exp(v, m.exp(v) + k as u32), val.clone());
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading()?;
        let (lm, lc_inv) = (*lm, lc.inv()?);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let qm = lm.quotient_of(rm);
            let qc = rc.clone() * &lc_inv;
            rem = rem - d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Divides by the lex-leading coefficient, so that term becomes 1.
    pub fn normalize(&self) -> Self {
        match self.lex_leading() {
            None => Self::zero(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Whether all coefficients live in mutually compatible fields.
    pub fn coefficients_compatible_with(&self, other: &Self) -> bool {
        let mut all = self.terms.values().chain(other.terms.values());
        match all.next() {
            None => true,
            Some(first) => {
                let mut all = self.terms.values().chain(other.terms.values());
                all.all(|c| c.compatible(first))
            }
        }
    }
}

impl MultiPoly<Rat> {
    /// Embeds a rational polynomial in a larger coefficient field.
    pub fn embed<L: Scalar>(&self) -> MultiPoly<L> {
        self.map_coeffs(|c| L::from_rat(c))
    }
}

/// Checked ring arithmetic: refuses operands from different extension fields.
pub fn poly_arith<K: Scalar>(
    p: &MultiPoly<K>,
    q: &MultiPoly<K>,
    op: ArithOp,
) -> Result<MultiPoly<K>> {
    if !p.coefficients_compatible_with(q) {
        return Err(Error::IncompatibleField);
    }
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
        ArithOp::Neg => -p,
    })
}

impl<'a, K: Scalar> Add<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.clone() + rhs.clone()
    }
}

impl<K: Scalar> Add for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m, c) in small.terms {
            big.add_term(m, c);
        }
        big
    }
}

impl<'a, K: Scalar> Sub<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.clone() - rhs.clone()
    }
}

impl<K: Scalar> Sub for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        self + (-rhs)
    }
}

impl<K: Scalar> Neg for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        MultiPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Scalar> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        -self.clone()
    }
}

impl<'a, K: Scalar> Mul<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut acc: HashMap<Monomial, K> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let prod = ca.clone() * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e = e.clone() + &prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<K: Scalar> Mul for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
        &self * &rhs
    }
}

impl<K: Scalar> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

/// Prints terms in descending graded-lex order, e.g. `y^2 - x`, `1/2*x*y - 3`.
impl<K: Scalar> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut coeff = c.to_string();
            let mut negative = false;
            if c.needs_parens() {
                coeff = format!("({})", coeff);
            } else if let Some(rest) = coeff.strip_prefix('-') {
                negative = true;
                coeff = rest.to_string();
            }
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || coeff != "1" {
                factors.push(coeff);
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
