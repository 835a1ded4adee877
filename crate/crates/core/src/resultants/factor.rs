//! Factorization of univariate integer polynomials.
//!
//! Berlekamp factorization modulo a small prime, linear Hensel lifting and
//! exhaustive recombination of the lifted factors. Recombination is
//! exponential in the number of modular factors, which is fine at the
//! degrees this toolkit works with.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::dense;
use crate::algebra::scalar::Rat;

/// Integer polynomial, low degree first, no trailing zeros.
pub type ZPoly = Vec<BigInt>;

pub fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> ZPoly {
    let a = ztrim(a.to_vec());
    let Some(lc) = a.last() else {
        return a;
    };
    let mut c = content(&a);
    if lc.is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

fn to_rat(a: &[BigInt]) -> Vec<Rat> {
    a.iter().map(|c| Rat::from_integer(c.clone())).collect()
}

/// Clears denominators and returns the primitive integer polynomial.
pub fn from_rat(a: &[Rat]) -> ZPoly {
    let l = crate::algebra::scalar::denominator_lcm(a.iter());
    let ints: ZPoly = a
        .iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect();
    primitive(&ints)
}

/// Exact quotient `a / b` over the integers, if it exists.
pub fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let (lb, la) = (b.last()?, a.last()?);
    if !(la % lb).is_zero() {
        return None;
    }
    if !b[0].is_zero() && !a[0].is_zero() && !(&a[0] % &b[0]).is_zero() {
        return None;
    }
    let (q, r) = dense::divrem(&to_rat(a), &to_rat(b));
    if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.into_iter().map(|c| c.to_integer()).collect())
}

// ---- arithmetic modulo a small prime ------------------------------------

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_from(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(
        a.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced residue"))
            .collect(),
    )
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a % p, p - 2, p)
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let b = fp_trim(b.to_vec());
    let db = b.len() - 1;
    let inv = fp_inv(b[db], p);
    let mut r = fp_trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * inv % p;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
        }
        q[shift] = c;
        r = fp_trim(r);
    }
    (fp_trim(q), r)
}

fn fp_monic(a: &[u64], p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = fp_inv(lc, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut x, mut y) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    while !y.is_empty() {
        let r = fp_divrem(&x, &y, p).1;
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// `(s, t)` with `s·a + t·b = 1`, for coprime inputs.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (fp_trim(a.to_vec()), fp_trim(b.to_vec()));
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "Bezout inputs must be coprime");
    let inv = fp_inv(r0[0], p);
    let scale = |v: Fp| fp_trim(v.into_iter().map(|c| c * inv % p).collect());
    (scale(s0), scale(t0))
}

fn fp_derivative(a: &[u64], p: u64) -> Fp {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fp {
    let mut acc: Fp = vec![1];
    let mut b = fp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_divrem(&fp_mul(&acc, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    acc
}

/// Null space of an `n × n` matrix over `F_p` (row-major), as basis vectors.
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = fp_inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[i][fc]) % p;
            }
            v
        })
        .collect()
}

/// Berlekamp factorization of a monic squarefree polynomial over `F_p`.
fn berlekamp(g: &[u64], p: u64) -> Vec<Fp> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.to_vec()];
    }
    let xp = fp_powmod(&[0, 1], p, g, p);
    let mut q_rows: Vec<Fp> = Vec::with_capacity(n);
    let mut cur: Fp = vec![1];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        q_rows.push(row);
        cur = fp_divrem(&fp_mul(&cur, &xp, p), g, p).1;
    }
    // (Q - I)^T
    let mut a = vec![vec![0u64; n]; n];
    for (i, row) in q_rows.iter().enumerate() {
        for (j, &val) in row.iter().enumerate() {
            let entry = if i == j { (val + p - 1) % p } else { val };
            a[j][i] = entry;
        }
    }
    let basis = nullspace(a, p);
    let r = basis.len();
    let mut factors: Vec<Fp> = vec![g.to_vec()];
    for v in basis.iter() {
        if factors.len() == r {
            break;
        }
        let v = fp_trim(v.clone());
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if h.len() <= 2 {
                next.push(h);
                continue;
            }
            let mut pieces = Vec::new();
            for s in 0..p {
                let shifted = fp_sub(&v, &[s], p);
                let d = fp_gcd(&h, &shifted, p);
                if d.len() > 1 {
                    pieces.push(d);
                }
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Picks a prime keeping `g` squarefree with the same degree, preferring the
/// one with fewest modular factors among the first few candidates.
fn choose_prime(g: &[BigInt]) -> (u64, Vec<Fp>) {
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        let gp = fp_from(g, p);
        if gp.len() != g.len() {
            continue;
        }
        let d = fp_derivative(&gp, p);
        if d.is_empty() || fp_gcd(&gp, &d, p).len() != 1 {
            continue;
        }
        let factors = berlekamp(&fp_monic(&gp, p), p);
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best.expect("some prime keeps a squarefree polynomial squarefree")
}

fn modp(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn lift_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ a·b (mod p)` (all monic) to a factorization modulo `p^k`.
fn hensel_pair(f: &[BigInt], a: &[u64], b: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (_, t) = fp_bezout(a, b, p);
    let pb = BigInt::from(p);
    let mut big_a = lift_fp(a);
    let mut big_b = lift_fp(b);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let diff: ZPoly = {
            let prod = zmul(&big_a, &big_b);
            let n = f.len().max(prod.len());
            (0..n)
                .map(|i| {
                    let x = f.get(i).cloned().unwrap_or_default();
                    let y = prod.get(i).cloned().unwrap_or_default();
                    (x - y).mod_floor(&next)
                })
                .collect()
        };
        let e: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let e = fp_from(&e, p);
        let alpha = fp_divrem(&fp_mul(&t, &e, p), a, p).1;
        let rest = fp_sub(&e, &fp_mul(&alpha, b, p), p);
        let (beta, rem) = fp_divrem(&rest, a, p);
        debug_assert!(rem.is_empty());
        let add_scaled = |x: &ZPoly, d: &Fp| -> ZPoly {
            let n = x.len().max(d.len());
            (0..n)
                .map(|i| {
                    let xi = x.get(i).cloned().unwrap_or_default();
                    let di = d.get(i).copied().unwrap_or(0);
                    xi + &pj * BigInt::from(di)
                })
                .collect()
        };
        big_a = add_scaled(&big_a, &alpha);
        big_b = add_scaled(&big_b, &beta);
        pj = next;
    }
    (modp(&big_a, &pj), modp(&big_b, &pj))
}

fn hensel_all(f: &[BigInt], factors: &[Fp], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let rest = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, g| fp_mul(&acc, g, p));
    let (a, b) = hensel_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![a];
    out.extend(hensel_all(&b, &factors[1..], p, k));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Irreducible factors of a primitive squarefree polynomial of degree ≥ 1.
fn zassenhaus(g: &[BigInt]) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.to_vec()];
    }
    let (p, modular) = choose_prime(g);
    if modular.len() == 1 {
        return vec![g.to_vec()];
    }
    let lc = g[n].clone();
    let norm2: BigInt = g.iter().map(|c| c * c).sum();
    let bound = (norm2.sqrt() + 1u32) * (BigInt::one() << n) * lc.abs() * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lc_inv = lc
        .modinv(&modulus)
        .expect("leading coefficient is a unit modulo p^k");
    let monic_target = modp(&g.iter().map(|c| c * &lc_inv).collect::<ZPoly>(), &modulus);
    let mut lifted = hensel_all(&monic_target, &modular, p, k);

    let mut f = g.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let lcf = f.last().expect("nonzero").clone();
            let prod = subset
                .iter()
                .fold(vec![lcf], |acc, &i| modp(&zmul(&acc, &lifted[i]), &modulus));
            let cand = primitive(&symmetric(&prod, &modulus));
            if let Some(q) = zdiv_exact(&f, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = q;
                let mut i = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&i);
                    i += 1;
                    keep
                });
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive(&f));
    }
    found
}

/// Complete factorization over the integers: `a = unit_content · ∏ f_i^e_i`
/// with each `f_i` primitive, irreducible, positive leading coefficient.
/// Factors are sorted by degree, then coefficients, for determinism.
pub fn factor(a: &[BigInt]) -> (BigInt, Vec<(ZPoly, u32)>) {
    let a = ztrim(a.to_vec());
    assert!(!a.is_empty(), "cannot factor the zero polynomial");
    let pp = primitive(&a);
    let unit_content = a.last().expect("nonzero") / pp.last().expect("nonzero");
    let mut out: Vec<(ZPoly, u32)> = Vec::new();
    let shift = pp.iter().position(|c| !c.is_zero()).expect("nonzero");
    if shift > 0 {
        out.push((vec![BigInt::zero(), BigInt::one()], shift as u32));
    }
    let rest: ZPoly = pp[shift..].to_vec();
    for (sq, mult) in dense::squarefree_decomposition(&to_rat(&rest)) {
        for f in zassenhaus(&from_rat(&sq)) {
            out.push((f, mult as u32));
        }
    }
    out.sort_by(|x, y| {
        x.0.len()
            .cmp(&y.0.len())
            .then_with(|| x.0.cmp(&y.0))
            .then(x.1.cmp(&y.1))
    });
    (unit_content, out)
}
