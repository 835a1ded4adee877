use crate::algebra::{MultiPoly, Scalar, Var};
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` with respect to `var`.
///
/// The first `deg g` rows hold the coefficients of `f` (top degree first),
/// each shifted one column right of the previous; the last `deg f` rows do
/// the same for `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix<K: Scalar> {
    pub entries: Vec<Vec<MultiPoly<K>>>,
    pub var: Var,
}

pub fn sylvester_matrix<K: Scalar>(
    f: &MultiPoly<K>,
    g: &MultiPoly<K>,
    var: Var,
) -> Result<SylvesterMatrix<K>> {
    let df = f.degree_in(var).ok_or(Error::ZeroPolynomial)? as usize;
    let dg = g.degree_in(var).ok_or(Error::ZeroPolynomial)? as usize;
    let n = df + dg;
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let mut entries = vec![vec![MultiPoly::zero(); n]; n];
    for i in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            entries[i][i + k] = c.clone();
        }
    }
    for i in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            entries[dg + i][i + k] = c.clone();
        }
    }
    Ok(SylvesterMatrix { entries, var })
}

impl<K: Scalar> SylvesterMatrix<K> {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Determinant by cofactor expansion along rows, memoised over the set of
    /// remaining columns. Independent of the remainder-sequence resultant and
    /// used to cross-check it; cost grows like `n·2^n`.
    pub fn determinant_cofactor(&self) -> MultiPoly<K> {
        let n = self.dim();
        assert!(n <= 20, "cofactor expansion limited to small matrices");
        let mut memo: Vec<Option<MultiPoly<K>>> = vec![None; 1 << n];
        memo[0] = Some(MultiPoly::one());
        // Minor on the last popcount(mask) rows and the columns in `mask`,
        // built bottom-up by increasing popcount.
        let mut masks: Vec<usize> = (1..(1usize << n)).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let k = mask.count_ones() as usize;
            let row = n - k;
            let mut acc = MultiPoly::zero();
            let mut sign_pos = true;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = &self.entries[row][col];
                if !entry.is_zero() {
                    let minor = memo[mask & !(1 << col)]
                        .as_ref()
                        .expect("smaller minors computed first");
                    if !minor.is_zero() {
                        let term = entry * minor;
                        acc = if sign_pos { acc + term } else { acc - term };
                    }
                }
                sign_pos = !sign_pos;
            }
            memo[mask] = Some(acc);
        }
        memo[(1 << n) - 1].take().expect("full minor")
    }
}
