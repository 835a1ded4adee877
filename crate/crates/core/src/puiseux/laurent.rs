use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{MultiPoly, Scalar, Var};

/// A Laurent series in `t` known exactly above a floor: every exponent
/// `> floor` is correct, exponents `<= floor` are unknown. `floor = None`
/// means the series is an exact Laurent polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent<K: Scalar> {
    terms: BTreeMap<i64, K>,
    floor: Option<i64>,
}

impl<K: Scalar> Laurent<K> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
            floor: None,
        }
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: K, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms, floor: None }
    }

    /// Builds a series from `(exponent, coefficient)` pairs, dropping any at or
    /// below `floor`.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, K)>, floor: Option<i64>) -> Self {
        let mut out = Laurent {
            terms: BTreeMap::new(),
            floor,
        };
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: K) {
        if c.is_zero() || self.floor.is_some_and(|f| e <= f) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn is_exact(&self) -> bool {
        self.floor.is_none()
    }

    /// Whether the coefficient of `t^e` is determined.
    pub fn is_known(&self, e: i64) -> bool {
        self.floor.is_none_or(|f| e > f)
    }

    pub fn coeff(&self, e: i64) -> K {
        self.terms.get(&e).cloned().unwrap_or_else(K::zero)
    }

    /// Known nonzero terms, highest exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &K)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn is_known_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest known exponent with a nonzero coefficient.
    pub fn lead_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// An upper bound for the true leading exponent, `None` for exact zero.
    fn lead_bound(&self) -> Option<i64> {
        self.lead_exponent().or(self.floor)
    }

    pub fn truncate(&self, floor: i64) -> Self {
        let floor = self.floor.map_or(floor, |f| f.max(floor));
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone())), Some(floor))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.clone() * c.clone()))
                .collect(),
            floor: self.floor,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let floor = match (self.floor, other.floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let mut out = Laurent {
            terms: BTreeMap::new(),
            floor,
        };
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = |a: &Self, b: &Self| match (a.floor, b.lead_bound()) {
            (Some(f), Some(l)) => Some(f + l),
            _ => None,
        };
        let floor = match (bound(self, other), bound(other, self)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let mut out = Laurent {
            terms: BTreeMap::new(),
            floor,
        };
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                out.add_term(ea + eb, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(K::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `f(x(t), y(t))` for `f` in `x`, `y`.
    pub fn evaluate(f: &MultiPoly<K>, x: &Self, y: &Self) -> Self {
        let dx = f.degree_in(Var::X).unwrap_or(0) as usize;
        let dy = f.degree_in(Var::Y).unwrap_or(0) as usize;
        let mut xp = vec![Self::constant(K::one())];
        for i in 0..dx {
            xp.push(xp[i].mul(x));
        }
        let mut yp = vec![Self::constant(K::one())];
        for j in 0..dy {
            yp.push(yp[j].mul(y));
        }
        f.terms().fold(Self::zero(), |acc, (m, c)| {
            let term = xp[m.exp(Var::X) as usize].mul(&yp[m.exp(Var::Y) as usize]);
            acc.add(&term.scale(c))
        })
    }
}

impl<K: Scalar> fmt::Display for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.needs_parens() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "{}", c)?;
            }
            match e {
                0 => {}
                1 => f.write_str("*t")?,
                _ => write!(f, "*t^{}", e)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        if let Some(fl) = self.floor {
            write!(f, " + O(t^{})", fl)?;
        }
        Ok(())
    }
}

impl<K: Scalar> fmt::Debug for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
