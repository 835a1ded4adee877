//! Dense univariate polynomials over a field, coefficients stored low degree first.
//!
//! Small helper layer shared by the extension-field arithmetic, the Newton
//! polygon edge polynomials and the numeric root finder.

use super::scalar::Scalar;

pub fn trim<K: Scalar>(mut a: Vec<K>) -> Vec<K> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Degree, `None` for the zero polynomial.
pub fn degree<K: Scalar>(a: &[K]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn add<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => K::zero(),
        })
        .collect();
    trim(out)
}

pub fn sub<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let neg: Vec<K> = b.iter().map(|c| -c.clone()).collect();
    add(a, &neg)
}

pub fn mul<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![K::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    trim(out)
}

pub fn scale<K: Scalar>(a: &[K], c: &K) -> Vec<K> {
    trim(a.iter().map(|x| x.clone() * c).collect())
}

/// Quotient and remainder; panics if `b` is zero or its leading coefficient
/// is not invertible.
pub fn divrem<K: Scalar>(a: &[K], b: &[K]) -> (Vec<K>, Vec<K>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lc_inv = b[db].inv().expect("leading coefficient not invertible");
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![K::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = rem[dr].clone() * &lc_inv;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            rem[shift + i] = rem[shift + i].clone() - &(c.clone() * bc);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn make_monic<K: Scalar>(a: &[K]) -> Vec<K> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = a[d].inv().expect("leading coefficient not invertible");
            scale(a, &inv)
        }
    }
}

/// Monic gcd.
pub fn gcd<K: Scalar>(a: &[K], b: &[K]) -> Vec<K> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Returns `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd<K: Scalar>(a: &[K], b: &[K]) -> (Vec<K>, Vec<K>, Vec<K>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![K::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![K::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = r0[d].inv().expect("nonzero field element");
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

pub fn derivative<K: Scalar>(a: &[K]) -> Vec<K> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * &K::from_int(i as i64))
            .collect(),
    )
}

pub fn eval<K: Scalar>(a: &[K], x: &K) -> K {
    a.iter().rev().fold(K::zero(), |acc, c| acc * x + c)
}

/// Squarefree decomposition: pairs `(factor, multiplicity)` with monic
/// squarefree, pairwise coprime factors (Yun's algorithm, characteristic zero).
pub fn squarefree_decomposition<K: Scalar>(a: &[K]) -> Vec<(Vec<K>, usize)> {
    let mut out = Vec::new();
    if degree(a).unwrap_or(0) == 0 {
        return out;
    }
    let f = make_monic(a);
    let df = derivative(&f);
    let mut g = gcd(&f, &df);
    let mut w = divrem(&f, &g).0;
    let mut mult = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(&w, &g);
        let z = divrem(&w, &y).0;
        if degree(&z).unwrap_or(0) > 0 {
            out.push((z, mult));
        }
        g = divrem(&g, &y).0;
        w = y;
        mult += 1;
    }
    out
}
