#![allow(dead_code)]

use planemap::{Monomial, QPoly, Rat, Var};
use proptest::prelude::*;

pub fn x() -> QPoly {
    QPoly::var(Var::X)
}
pub fn y() -> QPoly {
    QPoly::var(Var::Y)
}
pub fn u() -> QPoly {
    QPoly::var(Var::U)
}
pub fn v() -> QPoly {
    QPoly::var(Var::V)
}
pub fn t() -> QPoly {
    QPoly::var(Var::T)
}
pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Small rationals, mostly integers.
pub fn small_rat() -> impl Strategy<Value = Rat> {
    prop_oneof![
        4 => (-5i64..=5).prop_map(int),
        1 => ((-5i64..=5), (2i64..=3)).prop_map(|(n, d)| frac(n, d)),
    ]
}

pub fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| *r != int(0))
}

fn build(vars: &[Var], terms: Vec<(Vec<u32>, Rat)>) -> QPoly {
    QPoly::from_terms(terms.into_iter().map(|(exps, c)| {
        let mut m = Monomial::one();
        for (v, e) in vars.iter().zip(exps) {
            m = m.mul(&Monomial::var(*v, e));
        }
        (m, c)
    }))
}

/// Polynomials in `vars` with every exponent at most `max_exp`.
pub fn poly(vars: &'static [Var], max_exp: u32, max_terms: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, vars.len()), small_rat()),
        0..=max_terms,
    )
    .prop_map(move |terms| build(vars, terms))
}

pub fn nonzero_poly(
    vars: &'static [Var],
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = QPoly> {
    poly(vars, max_exp, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// `y^d + sum_{j<d} c_j(x) y^j` with `deg c_j <= d - j`, so the total degree
/// is `d` and `y^d` carries it.
pub fn monic_in_y(max_d: u32) -> impl Strategy<Value = QPoly> {
    (1..=max_d).prop_flat_map(|d| {
        prop::collection::vec(
            prop::collection::vec(small_rat(), (d + 1) as usize),
            d as usize,
        )
        .prop_map(move |rows| {
            let mut p = y().pow(d);
            for (j, row) in rows.into_iter().enumerate() {
                for (i, c) in row.into_iter().enumerate().take(d as usize - j + 1) {
                    p = &p + &(&x().pow(i as u32) * &y().pow(j as u32)).scale(&c);
                }
            }
            p
        })
    })
}

/// Univariate polynomial in `var` of exact degree `1..=max_d`.
pub fn univariate(var: Var, max_d: u32) -> impl Strategy<Value = QPoly> {
    (1..=max_d).prop_flat_map(move |d| {
        (
            prop::collection::vec(small_rat(), d as usize),
            nonzero_rat(),
        )
            .prop_map(move |(low, lead)| {
                let w = QPoly::var(var);
                let mut p = w.pow(d).scale(&lead);
                for (k, c) in low.into_iter().enumerate() {
                    p = &p + &w.pow(k as u32).scale(&c);
                }
                p
            })
    })
}

pub fn monic_univariate(var: Var, max_d: u32) -> impl Strategy<Value = QPoly> {
    (1..=max_d).prop_flat_map(move |d| {
        prop::collection::vec(small_rat(), d as usize).prop_map(move |low| {
            let w = QPoly::var(var);
            let mut p = w.pow(d);
            for (k, c) in low.into_iter().enumerate() {
                p = &p + &w.pow(k as u32).scale(&c);
            }
            p
        })
    })
}

pub mod random {
    use super::*;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    pub fn rat(rng: &mut ChaCha8Rng) -> Rat {
        let n = rng.gen_range(-5i64..=5);
        if rng.gen_bool(0.2) {
            frac(n, rng.gen_range(2i64..=4))
        } else {
            int(n)
        }
    }

    pub fn nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
        loop {
            let r = rat(rng);
            if r != int(0) {
                return r;
            }
        }
    }

    /// `sum_{j <= d} c_j(x) y^j` with `deg c_j <= xdeg` and `c_d` a nonzero
    /// constant. With `monic`, `c_d = 1` and `deg c_j <= d - j`, so `y^d`
    /// carries the total degree.
    pub fn poly_in_y(rng: &mut ChaCha8Rng, d: u32, xdeg: u32, monic: bool) -> QPoly {
        let mut p = if monic {
            y().pow(d)
        } else {
            y().pow(d).scale(&nonzero_rat(rng))
        };
        for j in 0..d {
            let top = if monic { xdeg.min(d - j) } else { xdeg };
            for i in 0..=top {
                if rng.gen_bool(0.6) {
                    p = &p + &(&x().pow(i) * &y().pow(j)).scale(&rat(rng));
                }
            }
        }
        p
    }

    /// Univariate in `var` of exact degree `d`.
    pub fn univariate(rng: &mut ChaCha8Rng, var: Var, d: u32, monic: bool) -> QPoly {
        let w = QPoly::var(var);
        let mut p = if monic {
            w.pow(d)
        } else {
            w.pow(d).scale(&nonzero_rat(rng))
        };
        for k in 0..d {
            p = &p + &w.pow(k).scale(&rat(rng));
        }
        p
    }

    /// A polynomial in `x, y, u, v` with up to `terms` terms of degree at most 3 in each.
    pub fn poly4(rng: &mut ChaCha8Rng, terms: usize) -> QPoly {
        let vars = [Var::X, Var::Y, Var::U, Var::V];
        QPoly::from_terms((0..rng.gen_range(0..=terms)).map(|_| {
            let mut m = Monomial::one();
            for v in vars {
                m = m.mul(&Monomial::var(v, rng.gen_range(0..=3)));
            }
            (m, rat(rng))
        }))
    }
}
