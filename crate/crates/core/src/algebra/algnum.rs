//! Elements of a simple algebraic extension `Q[z]/(mu)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::dense;
use super::scalar::{Rat, Scalar};
use crate::error::{Error, Result};

/// Monic defining polynomial of an extension, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus(Vec<Rat>);

impl Modulus {
    pub fn new(coeffs: Vec<Rat>) -> Result<Arc<Self>> {
        let coeffs = dense::trim(coeffs);
        match dense::degree(&coeffs) {
            None | Some(0) => Err(Error::DegenerateInput(
                "extension modulus must have degree at least 1".into(),
            )),
            Some(_) => Ok(Arc::new(Modulus(dense::make_monic(&coeffs)))),
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.0))
    }
}

/// A value `c_0 + c_1 z + ... ` reduced modulo the modulus.
///
/// Values without a modulus are plain rationals and mix freely with any
/// extension. Two values carrying different moduli never mix: operators
/// panic, [`Scalar::compatible`] reports `false`.
#[derive(Clone)]
pub struct AlgNum {
    coeffs: Vec<Rat>,
    modulus: Option<Arc<Modulus>>,
}

impl AlgNum {
    pub fn rational(r: Rat) -> Self {
        AlgNum {
            coeffs: dense::trim(vec![r]),
            modulus: None,
        }
    }

    /// The class of `z` in `Q[z]/(modulus)`.
    pub fn generator(modulus: &Arc<Modulus>) -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()], modulus)
    }

    pub fn from_coeffs(coeffs: Vec<Rat>, modulus: &Arc<Modulus>) -> Self {
        let (_, r) = dense::divrem(&coeffs, modulus.coeffs());
        AlgNum {
            coeffs: r,
            modulus: Some(modulus.clone()),
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn modulus(&self) -> Option<&Arc<Modulus>> {
        self.modulus.as_ref()
    }

    fn join(&self, other: &Self) -> Option<Arc<Modulus>> {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b) || a == b,
                    "arithmetic across different algebraic extensions"
                );
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn with(coeffs: Vec<Rat>, modulus: Option<Arc<Modulus>>) -> Self {
        let coeffs = match &modulus {
            Some(m) => dense::divrem(&coeffs, m.coeffs()).1,
            None => dense::trim(coeffs),
        };
        AlgNum { coeffs, modulus }
    }
}

impl From<Rat> for AlgNum {
    fn from(r: Rat) -> Self {
        AlgNum::rational(r)
    }
}

impl PartialEq for AlgNum {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for AlgNum {}

impl Hash for AlgNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            Some(m) if self.coeffs.len() > 1 => write!(f, "AlgNum({} mod {})", self, m),
            _ => write!(f, "AlgNum({})", self),
        }
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.coeffs))
    }
}

/// Renders a dense polynomial in `z`, highest degree first.
fn render(coeffs: &[Rat]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Rat::zero();
        let mag = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let power = match i {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{}", i),
        };
        if power.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{}*{}", mag, power));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Zero for AlgNum {
    fn zero() -> Self {
        AlgNum {
            coeffs: Vec::new(),
            modulus: None,
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for AlgNum {
    fn one() -> Self {
        AlgNum::rational(Rat::one())
    }
}

impl<'a> Add<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: &'a AlgNum) -> AlgNum {
        let m = self.join(rhs);
        AlgNum::with(dense::add(&self.coeffs, &rhs.coeffs), m)
    }
}

impl<'a> Sub<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: &'a AlgNum) -> AlgNum {
        let m = self.join(rhs);
        AlgNum::with(dense::sub(&self.coeffs, &rhs.coeffs), m)
    }
}

impl<'a> Mul<&'a AlgNum> for AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: &'a AlgNum) -> AlgNum {
        let m = self.join(rhs);
        AlgNum::with(dense::mul(&self.coeffs, &rhs.coeffs), m)
    }
}

impl Add for AlgNum {
    type Output = AlgNum;
    fn add(self, rhs: AlgNum) -> AlgNum {
        self + &rhs
    }
}

impl Sub for AlgNum {
    type Output = AlgNum;
    fn sub(self, rhs: AlgNum) -> AlgNum {
        self - &rhs
    }
}

impl Mul for AlgNum {
    type Output = AlgNum;
    fn mul(self, rhs: AlgNum) -> AlgNum {
        self * &rhs
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for AlgNum {
    type Output = AlgNum;
    fn div(self, rhs: AlgNum) -> AlgNum {
        let inv = rhs
            .inv()
            .expect("division by a non-invertible algebraic number");
        self * inv
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            modulus: self.modulus,
        }
    }
}

impl Scalar for AlgNum {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.modulus {
            None => Some(AlgNum::rational(self.coeffs[0].recip())),
            Some(m) => {
                let (g, s, _) = dense::ext_gcd(&self.coeffs, m.coeffs());
                if g.len() != 1 {
                    return None;
                }
                Some(AlgNum::with(s, Some(m.clone())))
            }
        }
    }

    fn from_rat(r: &Rat) -> Self {
        AlgNum::rational(r.clone())
    }

    fn as_rat(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => true,
        }
    }

    fn needs_parens(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};

    fn gaussian() -> Arc<Modulus> {
        Modulus::new(vec![rat(1), rat(0), rat(1)]).unwrap()
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = AlgNum::generator(&gaussian());
        assert_eq!(i.clone() * &i, AlgNum::rational(rat(-1)));
    }

    #[test]
    fn inverse_of_i_is_minus_i() {
        let i = AlgNum::generator(&gaussian());
        assert_eq!(i.inv().unwrap(), -i);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Modulus::new(vec![rat(-2), rat(0), rat(0), rat(1)]).unwrap();
        let a = AlgNum::from_coeffs(vec![rat(1), ratio(1, 3), rat(2)], &m);
        assert_eq!(a.clone() * &a.inv().unwrap(), AlgNum::one());
    }

    #[test]
    fn zero_divisors_have_no_inverse() {
        // z^2 - 1 = (z - 1)(z + 1)
        let m = Modulus::new(vec![rat(-1), rat(0), rat(1)]).unwrap();
        let a = AlgNum::from_coeffs(vec![rat(-1), rat(1)], &m);
        assert!(a.inv().is_none());
    }

    #[test]
    fn rendering() {
        let m = gaussian();
        let a = AlgNum::from_coeffs(vec![rat(3), ratio(-1, 2)], &m);
        assert_eq!(a.to_string(), "-1/2*z + 3");
        assert!(a.needs_parens());
        assert_eq!(m.to_string(), "z^2 + 1");
    }

    #[test]
    fn modulus_must_be_nonconstant() {
        assert!(Modulus::new(vec![rat(3)]).is_err());
    }
}
