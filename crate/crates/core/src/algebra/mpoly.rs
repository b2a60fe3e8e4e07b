use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rat, Rat, UPoly};

/// Exponent tuple over a fixed, ordered variable list. The derived `Ord` is
/// lexicographic with variable 0 largest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; requires `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    fn with_exponent(&self, var: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[var] = e;
        Monomial(v)
    }

    fn fmt_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

/// Sparse multivariate polynomial over the rationals in lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        self.is_constant()
            .then(|| self.terms.values().next().unwrap().clone())
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// A variable dividing every term, with the cofactor. Zero and constants
    /// have none.
    pub fn variable_factor(&self) -> Option<(usize, MPoly)> {
        if self.is_zero() {
            return None;
        }
        let v = (0..self.nvars).find(|&v| self.terms.keys().all(|m| m.exponent(v) > 0))?;
        let u = Monomial::var(self.nvars, v);
        Some((
            v,
            MPoly::from_terms(
                self.nvars,
                self.terms
                    .iter()
                    .map(|(m, c)| (u.quotient_of(m), c.clone())),
            ),
        ))
    }

    /// Variables that occur with a positive exponent.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    out.insert(i);
                }
            }
        }
        out
    }

    /// Coefficient of `var^k`, as a polynomial free of `var`.
    pub fn coeff_in(&self, var: usize, k: u32) -> MPoly {
        MPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == k)
                .map(|(m, c)| (m.with_exponent(var, 0), c.clone())),
        )
    }

    /// Substitutes `var := value`.
    pub fn substitute(&self, var: usize, value: &MPoly) -> MPoly {
        if self.degree_in(var) == 0 {
            return self.clone();
        }
        let mut powers = vec![MPoly::one(self.nvars)];
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let rest = m.with_exponent(var, 0);
            out = &out + &powers[e].mul_term(&rest, c);
        }
        out
    }

    /// Value at a full rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// The polynomial as a univariate one in `var`, if no other variable occurs.
    pub fn as_univariate(&self, var: usize) -> Option<UPoly> {
        if self.variables().iter().any(|&v| v != var) {
            return None;
        }
        let mut coeffs = vec![Rat::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Some(UPoly::from_coeffs(coeffs))
    }

    pub fn from_univariate(nvars: usize, var: usize, p: &UPoly) -> MPoly {
        MPoly::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[var] = k as u32;
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Renames variables: variable `i` becomes `map[i]` in a ring of `nvars`.
    pub fn remap(&self, map: &[usize], nvars: usize) -> MPoly {
        MPoly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.exponents().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Rendering with descending terms, e.g. `t1^2 - 2*t1*t2 + 3`.
    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.fmt_with(names);
            if mono.is_empty() {
                out.push_str(&fmt_rat(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rat(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn default_names(&self) -> Vec<String> {
        (0..self.nvars).map(|i| format!("c{i}")).collect()
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self.fmt_with(&self.default_names()))
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn lex_leading_term() {
        // x^2 + x*y^5 + y^7 with x > y: leading x^2
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let f = &(&x.pow(2) + &(&x * &y.pow(5))) + &y.pow(7);
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[2, 0]);
    }

    #[test]
    fn substitution_and_rendering() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let f = &(&x * &y) - &MPoly::one(2);
        let g = f.substitute(0, &(&y + &MPoly::constant(2, rat(1))));
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(g.fmt_with(&names), "b^2 + b - 1");
        assert_eq!(g.as_univariate(1).unwrap(), UPoly::from_ints(&[-1, 1, 1]));
    }

    #[test]
    fn variable_factor() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let f = &(&x * &y) + &y.pow(2);
        assert_eq!(f.variable_factor(), Some((1, &x + &y)));
        assert_eq!((&x + &y).variable_factor(), None);
        assert_eq!(MPoly::one(2).variable_factor(), None);
    }
}
