use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rat, UPoly};
use crate::error::{Error, Result};

/// Reduced rational function `num / den` with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RFunc {
    num: UPoly,
    den: UPoly,
}

impl RFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument(
                "rational function with zero denominator".into(),
            ));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RFunc { num, den }
    }

    pub fn zero() -> Self {
        RFunc {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    pub fn from_poly(p: UPoly) -> Self {
        RFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    pub fn pow(&self, e: u32) -> Self {
        RFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, at: &Rat) -> Option<Rat> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }
}

impl fmt::Display for RFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RFunc({self})")
    }
}

impl Add<&RFunc> for &RFunc {
    type Output = RFunc;
    fn add(self, rhs: &RFunc) -> RFunc {
        if self.den == rhs.den {
            return RFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RFunc> for &RFunc {
    type Output = RFunc;
    fn sub(self, rhs: &RFunc) -> RFunc {
        self + &(-rhs)
    }
}

impl Mul<&RFunc> for &RFunc {
    type Output = RFunc;
    fn mul(self, rhs: &RFunc) -> RFunc {
        RFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RFunc {
    type Output = RFunc;
    fn neg(self) -> RFunc {
        RFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_differentiates() {
        // (x^2 - 1)/(2x - 2) = (x + 1)/2
        let f = RFunc::new(UPoly::from_ints(&[-1, 0, 1]), UPoly::from_ints(&[-2, 2])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(
            f.num(),
            &UPoly::from_coeffs(vec![super::super::ratio(1, 2), super::super::ratio(1, 2)])
        );
        // d/dx 1/x = -1/x^2
        let inv = RFunc::new(UPoly::one(), UPoly::x()).unwrap();
        let d = inv.derivative();
        assert_eq!(d.num(), &UPoly::from_ints(&[-1]));
        assert_eq!(d.den(), &UPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(RFunc::new(UPoly::one(), UPoly::zero()).is_err());
    }
}
