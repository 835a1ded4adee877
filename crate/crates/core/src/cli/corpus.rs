//! Seeded random tame automorphisms.
//!
//! Each map is a composition of elementary maps `(x, y + f(x))`, the swap
//! `(y, x)` and unimodular integer linear maps. Compositions whose degree
//! exceeds the bound are discarded and redrawn.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::parse::parse_polynomial;
use crate::algebra::Var;
use crate::error::{Error, Result};
use crate::maps::{compose, PolyMap2};
use crate::{QPoly, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub count: usize,
    pub depth: usize,
    pub height: i64,
    pub max_degree: u32,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            count: 100,
            depth: 5,
            height: 3,
            max_degree: 16,
            seed: 0,
        }
    }
}

fn nonzero(rng: &mut ChaCha8Rng, height: i64) -> i64 {
    loop {
        let c = rng.gen_range(-height..=height);
        if c != 0 {
            return c;
        }
    }
}

fn elementary(rng: &mut ChaCha8Rng, height: i64) -> PolyMap2<Rat> {
    let deg = rng.gen_range(1..=3u32);
    let x = QPoly::var(Var::X);
    let mut f = x
        .pow(deg)
        .scale(&Rat::from_integer(nonzero(rng, height).into()));
    for k in 0..deg {
        let c = rng.gen_range(-height..=height);
        f = &f + &x.pow(k).scale(&Rat::from_integer(c.into()));
    }
    PolyMap2::new(x, &QPoly::var(Var::Y) + &f).expect("nonzero components")
}

fn swap() -> PolyMap2<Rat> {
    PolyMap2::new(QPoly::var(Var::Y), QPoly::var(Var::X)).expect("nonzero components")
}

fn linear(rng: &mut ChaCha8Rng, height: i64) -> PolyMap2<Rat> {
    let (x, y) = (QPoly::var(Var::X), QPoly::var(Var::Y));
    loop {
        let [a, b, c, d] = [0; 4].map(|_| rng.gen_range(-height..=height));
        if (a * d - b * c).abs() != 1 {
            continue;
        }
        let comb = |s: i64, t: i64| {
            &x.scale(&Rat::from_integer(s.into())) + &y.scale(&Rat::from_integer(t.into()))
        };
        return PolyMap2::new(comb(a, b), comb(c, d)).expect("unimodular rows are nonzero");
    }
}

/// One random automorphism of degree at most `max_degree`.
pub fn random_automorphism(rng: &mut ChaCha8Rng, cfg: &CorpusConfig) -> PolyMap2<Rat> {
    loop {
        let depth = rng.gen_range(cfg.depth.div_ceil(2)..=cfg.depth).max(1);
        let mut f = PolyMap2::identity();
        for _ in 0..depth {
            let g = match rng.gen_range(0..4) {
                0 | 1 => elementary(rng, cfg.height),
                2 => swap(),
                _ => linear(rng, cfg.height),
            };
            f = compose(&f, &g);
            if f.degree() > cfg.max_degree {
                break;
            }
        }
        if f.degree() <= cfg.max_degree && f.degree() >= 1 {
            return f;
        }
    }
}

pub fn generate(cfg: &CorpusConfig) -> Vec<PolyMap2<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.count)
        .map(|_| random_automorphism(&mut rng, cfg))
        .collect()
}

/// One `p ; q` line per map.
pub fn render(maps: &[PolyMap2<Rat>]) -> String {
    maps.iter()
        .map(|f| format!("{} ; {}\n", f.p(), f.q()))
        .collect()
}

pub fn parse_map(line: &str) -> Result<PolyMap2<Rat>> {
    let (p, q) = line
        .split_once(';')
        .ok_or_else(|| Error::InvalidArgument(format!("expected 'p ; q', got '{}'", line)))?;
    PolyMap2::new(parse_polynomial(p)?, parse_polynomial(q)?)
}

/// Reads a corpus file body, skipping blank lines and `#` comments.
pub fn parse_corpus(text: &str) -> Result<Vec<PolyMap2<Rat>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_map)
        .collect()
}
