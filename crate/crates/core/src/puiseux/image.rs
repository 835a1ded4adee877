use std::fmt;

use super::expand::{expand_at_infinity, PuiseuxBranch};
use super::laurent::Laurent;
use num_traits::Zero;

use crate::algebra::AlgNum;
use crate::error::{Error, Result};
use crate::maps::PolyMap2;
use crate::{QPoly, Rat};

/// `w(t) = q(x(t), y(t))` along a branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchImage {
    /// Known nonzero terms, highest exponent first.
    pub series: Vec<(i64, AlgNum)>,
    /// Exponents at or below this are unknown; `None` when `w` is exact.
    pub floor: Option<i64>,
    pub bounded: bool,
    /// Coefficient of `t^0`, for bounded images.
    pub b0: Option<AlgNum>,
    /// Coefficient of `t^-1`, for bounded images.
    pub b1: Option<AlgNum>,
}

/// Pushes a branch through `q`. Boundedness needs every exponent down to
/// `t^-1` unless a positive power is already visible.
pub fn branch_image(q: &QPoly, branch: &PuiseuxBranch) -> Result<BranchImage> {
    let w = Laurent::evaluate(&q.embed(), &branch.x_series(), &branch.y_series());
    let series: Vec<(i64, AlgNum)> = w.terms().map(|(e, c)| (e, c.clone())).collect();
    if series.iter().any(|(e, _)| *e > 0) {
        return Ok(BranchImage {
            series,
            floor: w.floor(),
            bounded: false,
            b0: None,
            b1: None,
        });
    }
    if !w.is_known(-1) {
        let floor = w.floor().expect("inexact series has a floor");
        return Err(Error::InsufficientOrder {
            needed: (branch.order as i64 + floor + 2) as usize,
        });
    }
    Ok(BranchImage {
        b0: Some(w.coeff(0)),
        b1: Some(w.coeff(-1)),
        series,
        floor: w.floor(),
        bounded: true,
    })
}

/// What the first Laurent coefficient says about a bounded branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapStatus {
    /// `b1 != 0`: `w` is a local coordinate at infinity and `1/x` is a power
    /// series in `w - b0`.
    Regular,
    /// `b1 = 0`: the branch-point question stays undecided.
    GapOpen,
}

impl GapStatus {
    pub fn describe(self) -> &'static str {
        match self {
            GapStatus::Regular => {
                "b1 != 0: 1/x(w) = sum gamma_l (w - b0)^l is a regular reparametrization"
            }
            GapStatus::GapOpen => {
                "b1 = 0: gap open, w'(infinity) vanishes and nothing is concluded about a branch point"
            }
        }
    }
}

impl fmt::Display for GapStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GapStatus::Regular => "regular",
            GapStatus::GapOpen => "gap open",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeEntry {
    pub branch: PuiseuxBranch,
    pub image: BranchImage,
}

impl ProbeEntry {
    pub fn b0(&self) -> &AlgNum {
        self.image.b0.as_ref().expect("probe entries are bounded")
    }

    pub fn b1(&self) -> &AlgNum {
        self.image.b1.as_ref().expect("probe entries are bounded")
    }

    pub fn gap_status(&self) -> GapStatus {
        if self.b1().is_zero() {
            GapStatus::GapOpen
        } else {
            GapStatus::Regular
        }
    }
}

/// Bounded branches of the fiber `p = c`: each gives a point `(c, b0)` of
/// the non-properness set approached along a curve escaping to infinity.
pub fn kraus_probe(f: &PolyMap2<Rat>, c: &Rat, order: u32) -> Result<Vec<ProbeEntry>> {
    let mut out = Vec::new();
    for branch in expand_at_infinity(f.p(), c, order)? {
        let image = branch_image(f.q(), &branch)?;
        if image.bounded {
            out.push(ProbeEntry { branch, image });
        }
    }
    Ok(out)
}

/// Whether `F` restricted to `p = c` is proper.
pub fn proper_on_fiber(f: &PolyMap2<Rat>, c: &Rat, order: u32) -> Result<bool> {
    Ok(kraus_probe(f, c, order)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;
    use crate::maps::monicize;
    use crate::Var;

    fn x() -> QPoly {
        QPoly::var(Var::X)
    }
    fn y() -> QPoly {
        QPoly::var(Var::Y)
    }
    fn q(n: i64) -> AlgNum {
        AlgNum::rational(rat(n))
    }
    fn map(p: QPoly, q: QPoly) -> PolyMap2<Rat> {
        PolyMap2::new(p, q).unwrap()
    }

    #[test]
    fn image_examples() {
        let b = &expand_at_infinity(&y(), &rat(5), 4).unwrap()[0];
        let w = branch_image(&(&x() + &y().pow(2)), b).unwrap();
        assert!(!w.bounded);
        assert_eq!(w.series, vec![(1, q(1)), (0, q(25))]);

        let b = &expand_at_infinity(&y(), &rat(0), 4).unwrap()[0];
        let w = branch_image(&(&x() * &y()), b).unwrap();
        assert!(w.bounded);
        assert_eq!((w.b0, w.b1), (Some(q(0)), Some(q(0))));

        let b = &expand_at_infinity(&(&y().pow(2) - &x()), &rat(0), 4).unwrap()[0];
        let w = branch_image(&y(), b).unwrap();
        assert!(!w.bounded);
        assert_eq!(w.series, vec![(1, q(1))]);
    }

    #[test]
    fn insufficient_order_reports_requirement() {
        // w = y^2 - x is the constant 1 on the fiber, up to the truncation of y
        let p = &y().pow(2) - &x();
        let qq = p.clone();
        let b = &expand_at_infinity(&p, &rat(1), 1).unwrap()[0];
        let needed = match branch_image(&qq, b) {
            Err(Error::InsufficientOrder { needed }) => needed,
            other => panic!("{:?}", other),
        };
        let b = &expand_at_infinity(&p, &rat(1), needed as u32).unwrap()[0];
        assert_eq!(needed, 3);
        let w = branch_image(&qq, b).unwrap();
        assert_eq!((w.b0, w.b1), (Some(q(1)), Some(q(0))));
        let b = &expand_at_infinity(&p, &rat(1), needed as u32 - 1).unwrap()[0];
        assert!(branch_image(&qq, b).is_err());
    }

    #[test]
    fn probe_examples() {
        let proper = map(y(), &x() + &y().pow(2));
        for c in [-2, 0, 3] {
            assert!(kraus_probe(&proper, &rat(c), 8).unwrap().is_empty());
            assert!(proper_on_fiber(&proper, &rat(c), 8).unwrap());
        }
        let jelonek = map(y(), &(&x() * &y()) + &x());
        let hits = kraus_probe(&jelonek, &rat(-1), 8).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!((hits[0].b0(), hits[0].b1()), (&q(0), &q(0)));
        assert_eq!(hits[0].gap_status(), GapStatus::GapOpen);
        assert!(hits[0].gap_status().describe().contains("gap open"));
        assert!(!proper_on_fiber(&jelonek, &rat(-1), 8).unwrap());
        assert!(kraus_probe(&jelonek, &rat(0), 8).unwrap().is_empty());

        let (id, _) = monicize(&PolyMap2::identity()).unwrap();
        assert!(proper_on_fiber(&id, &rat(0), 4).unwrap());
    }

    #[test]
    fn regular_bounded_branch() {
        // on y = -x + ..., q = x + y stays bounded
        let f = map(&y().pow(2) - &x().pow(2), &x() + &y());
        for c in [0, 1, 4] {
            let hits = kraus_probe(&f, &rat(c), 8).unwrap();
            assert_eq!(hits.len(), 1, "c = {}", c);
            assert_eq!(hits[0].b0(), &q(0));
            let expected = crate::algebra::scalar::ratio(-c, 2);
            assert_eq!(hits[0].b1(), &AlgNum::rational(expected));
        }
    }
}
