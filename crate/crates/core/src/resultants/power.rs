use crate::algebra::{squarefree_part, MultiPoly, Scalar};
use crate::error::{Error, Result};

/// `alpha · base^exponent`, with `base` squarefree and normalized
/// (lex-leading coefficient 1). Only the product is canonical; `alpha` is
/// whatever the normalization of `base` forces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerStructure<K: Scalar> {
    pub alpha: K,
    pub base: MultiPoly<K>,
    pub exponent: u32,
}

impl<K: Scalar> PowerStructure<K> {
    pub fn expand(&self) -> MultiPoly<K> {
        self.base.pow(self.exponent).scale(&self.alpha)
    }
}

/// Writes `r` as a scalar times a power of its squarefree part.
pub fn power_structure<K: Scalar>(r: &MultiPoly<K>) -> Result<PowerStructure<K>> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if r.is_constant() {
        return Err(Error::DegenerateInput(
            "power structure of a constant".into(),
        ));
    }
    let base = squarefree_part(r)?;
    let (dr, db) = (
        r.total_degree().unwrap_or(0),
        base.total_degree().unwrap_or(0),
    );
    if db == 0 || dr % db != 0 {
        return Err(Error::NotAPrimePower);
    }
    let exponent = dr / db;
    let power = base.pow(exponent);
    let (_, lead) = r.lex_leading().expect("nonzero");
    let alpha = lead.clone();
    if power.scale(&alpha) != *r {
        return Err(Error::NotAPrimePower);
    }
    Ok(PowerStructure {
        alpha,
        base,
        exponent,
    })
}
