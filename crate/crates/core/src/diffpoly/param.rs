use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{MPoly, Monomial};
use crate::arith::{RFunc, Rat, UPoly};

/// Polynomial in `x` with coefficients in `Q[c_0, ..., c_{k-1}]`, stored by
/// parameter monomial: `sum_m m(c) * p_m(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, UPoly>,
}

impl ParamPoly {
    pub fn zero(nvars: usize) -> Self {
        ParamPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_upoly(nvars: usize, p: UPoly) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(Monomial::one(nvars), p);
        out
    }

    /// `m(c) * p(x)`
    pub fn from_mpoly_times(m: &MPoly, p: &UPoly) -> Self {
        let mut out = Self::zero(m.nvars());
        for (mono, c) in m.terms() {
            out.add_term(mono.clone(), p.scale(c));
        }
        out
    }

    /// The unknown `c_i` times `p(x)`.
    pub fn unknown_times(nvars: usize, i: usize, p: UPoly) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(Monomial::var(nvars, i), p);
        out
    }

    fn add_term(&mut self, m: Monomial, p: UPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(q) => {
                *q = &*q + &p;
                if q.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, p);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, UPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_parameter_free(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.terms.values().map(UPoly::deg).max()
    }

    pub fn mul_upoly(&self, p: &UPoly) -> Self {
        if p.is_zero() {
            return Self::zero(self.nvars);
        }
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, q)| (m.clone(), q * p)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        ParamPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q.scale(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::from_upoly(self.nvars, UPoly::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// d/dx
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, q) in &self.terms {
            out.add_term(m.clone(), q.derivative());
        }
        out
    }

    /// Monic gcd of all `x`-polynomial coefficients; zero for the zero polynomial.
    pub fn content(&self) -> UPoly {
        self.terms.values().fold(UPoly::zero(), |g, q| g.gcd(q))
    }

    pub fn exact_div_upoly(&self, d: &UPoly) -> Self {
        ParamPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q.exact_div(d)))
                .collect(),
        }
    }

    /// Coefficients of `x^0, x^1, ...` as polynomials in the unknowns.
    pub fn x_coefficients(&self) -> Vec<MPoly> {
        let Some(deg) = self.x_degree() else {
            return Vec::new();
        };
        let mut out = vec![MPoly::zero(self.nvars); deg + 1];
        for (m, q) in &self.terms {
            for (k, c) in q.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out[k].add_term(m.clone(), c.clone());
                }
            }
        }
        out
    }

    /// Substitutes rational values for every unknown.
    pub fn specialize(&self, point: &[Rat]) -> UPoly {
        let mut out = UPoly::zero();
        for (m, q) in &self.terms {
            let v = MPoly::term(m.clone(), Rat::one()).eval(point);
            out = &out + &q.scale(&v);
        }
        out
    }

    /// Substitutes a polynomial in the unknowns for every unknown.
    pub fn substitute_all(&self, values: &[MPoly]) -> ParamPoly {
        let nvars = values.first().map(MPoly::nvars).unwrap_or(self.nvars);
        let mut out = ParamPoly::zero(nvars);
        for (m, q) in &self.terms {
            let mut coeff = MPoly::one(nvars);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    coeff = &coeff * &values[i].pow(e);
                }
            }
            out = &out + &ParamPoly::from_mpoly_times(&coeff, q);
        }
        out
    }
}

impl Add<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.add_term(m.clone(), q.clone());
        }
        out
    }
}

impl Sub<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &(-rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }
}

impl Mul<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nvars);
        for (m1, q1) in &self.terms {
            for (m2, q2) in &rhs.terms {
                out.add_term(m1.mul(m2), q1 * q2);
            }
        }
        out
    }
}

/// `num / den` with a parameter-free monic denominator sharing no factor
/// with the parameter-free content of the numerator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamRFunc {
    num: ParamPoly,
    den: UPoly,
}

impl ParamRFunc {
    pub fn new(num: ParamPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return ParamRFunc {
                num,
                den: UPoly::one(),
            };
        }
        let g = num.content().gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div_upoly(&g), den.exact_div(&g))
        };
        let lc = den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        ParamRFunc { num, den }
    }

    pub fn zero(nvars: usize) -> Self {
        ParamRFunc {
            num: ParamPoly::zero(nvars),
            den: UPoly::one(),
        }
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        ParamRFunc {
            num,
            den: UPoly::one(),
        }
    }

    pub fn from_rfunc(nvars: usize, f: &RFunc) -> Self {
        ParamRFunc {
            num: ParamPoly::from_upoly(nvars, f.num().clone()),
            den: f.den().clone(),
        }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn derivative(&self) -> Self {
        let n = &self.num.derivative().mul_upoly(&self.den)
            - &self.num.mul_upoly(&self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    pub fn specialize(&self, point: &[Rat]) -> RFunc {
        RFunc::new(self.num.specialize(point), self.den.clone()).expect("denominator is nonzero")
    }

    /// Equal as rational functions over `Q(c)(x)`.
    pub fn equivalent(&self, other: &ParamRFunc) -> bool {
        self.num.mul_upoly(&other.den) == other.num.mul_upoly(&self.den)
    }
}

impl Add<&ParamRFunc> for &ParamRFunc {
    type Output = ParamRFunc;
    fn add(self, rhs: &ParamRFunc) -> ParamRFunc {
        if self.den == rhs.den {
            return ParamRFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.exact_div(&g);
        let b = self.den.exact_div(&g);
        let num = &self.num.mul_upoly(&a) + &rhs.num.mul_upoly(&b);
        ParamRFunc::new(num, &self.den * &a)
    }
}

impl Sub<&ParamRFunc> for &ParamRFunc {
    type Output = ParamRFunc;
    fn sub(self, rhs: &ParamRFunc) -> ParamRFunc {
        self + &ParamRFunc {
            num: -&rhs.num,
            den: rhs.den.clone(),
        }
    }
}

impl Mul<&ParamRFunc> for &ParamRFunc {
    type Output = ParamRFunc;
    fn mul(self, rhs: &ParamRFunc) -> ParamRFunc {
        ParamRFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}
