//! Differential polynomials `F(y) = sum f_I y^i0 (y')^i1 ... (y^(n))^in`
//! with polynomial coefficients, their exponent statistics, and symbolic
//! substitution of parameterized rational functions.

mod eval;
mod param;

pub use eval::evaluate;
pub use param::{ParamPoly, ParamRFunc};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{RFunc, Rat, UPoly};
use crate::error::{Error, Result};

/// Exponent vector `I = (i0, ..., in)`: the powers of `y, y', ..., y^(n)`.
///
/// Ordered by comparing the highest derivative first, so the largest key
/// of a differential polynomial is its "leading" monomial in the ranking
/// `y^(n) > ... > y' > y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(Vec<u32>);

/// `(||I||, [||I||_0, ..., ||I||_n], ||I||_inf)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpNorms {
    pub norm: u32,
    pub partials: Vec<u32>,
    pub inf_norm: u32,
}

impl ExpVec {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(
            !entries.is_empty(),
            "exponent vector needs at least one entry"
        );
        ExpVec(entries)
    }

    pub fn zero(order: usize) -> Self {
        ExpVec(vec![0; order + 1])
    }

    /// `y^(k)` to the first power, in a vector for derivatives up to `order`.
    pub fn unit(order: usize, k: usize) -> Self {
        let mut e = vec![0; order + 1];
        e[k] = 1;
        ExpVec(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `||I||_r = i_r + ... + i_n`
    pub fn partial(&self, r: usize) -> u32 {
        self.0.iter().skip(r).sum()
    }

    /// `||I|| = ||I||_0`
    pub fn norm(&self) -> u32 {
        self.partial(0)
    }

    /// `||I||_inf = i1 + 2 i2 + ... + n in`
    pub fn inf_norm(&self) -> u32 {
        self.0.iter().enumerate().map(|(k, &e)| k as u32 * e).sum()
    }

    pub fn norms(&self) -> ExpNorms {
        ExpNorms {
            norm: self.norm(),
            partials: (0..self.0.len()).map(|r| self.partial(r)).collect(),
            inf_norm: self.inf_norm(),
        }
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.len(), other.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Highest derivative with a positive exponent.
    pub fn highest_derivative(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn resized(&self, order: usize) -> ExpVec {
        let mut e = self.0.clone();
        e.resize(order + 1, 0);
        ExpVec(e)
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Normalized differential polynomial of order `n`: every key has length
/// `n + 1`, every coefficient is a nonzero polynomial, the coefficients
/// share no common factor in `Q[x]`, their integer content is 1, and the
/// coefficient at the largest key has a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffPoly {
    order: usize,
    terms: BTreeMap<ExpVec, UPoly>,
}

/// `E(F)`, `d(F)` and `D(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Supports {
    pub e: Vec<ExpVec>,
    pub d: u32,
    pub top: Vec<ExpVec>,
}

impl Supports {
    /// `E(F) \ D(F)`
    pub fn lower(&self) -> impl Iterator<Item = &ExpVec> {
        self.e.iter().filter(move |i| i.norm() < self.d)
    }
}

impl DiffPoly {
    /// Clears denominators and normalizes. Keys may have any length; the
    /// order is recomputed as the highest derivative actually present.
    pub fn normalize(raw: impl IntoIterator<Item = (ExpVec, RFunc)>) -> Result<DiffPoly> {
        let mut acc: BTreeMap<Vec<u32>, RFunc> = BTreeMap::new();
        for (k, c) in raw {
            let mut key = k.0;
            while key.len() > 1 && key.last() == Some(&0) {
                key.pop();
            }
            let entry = acc.entry(key).or_insert_with(RFunc::zero);
            *entry = &*entry + &c;
        }
        acc.retain(|_, c| !c.is_zero());
        if acc.is_empty() {
            return Err(Error::DegenerateEquation);
        }
        if acc.keys().all(|k| k.iter().all(|&e| e == 0)) {
            return Err(Error::NotDifferentialEquation);
        }
        let order = acc
            .keys()
            .filter_map(|k| k.iter().rposition(|&e| e > 0))
            .max()
            .unwrap_or(0);

        let den_lcm = acc.values().fold(UPoly::one(), |l, c| {
            let g = l.gcd(c.den());
            &l * &c.den().exact_div(&g)
        });
        let mut terms: BTreeMap<ExpVec, UPoly> = acc
            .into_iter()
            .map(|(k, c)| {
                let poly = (c.num() * &den_lcm).exact_div(c.den());
                (ExpVec(k).resized(order), poly)
            })
            .collect();

        let common = terms.values().fold(UPoly::zero(), |g, c| g.gcd(c));
        if !common.is_one() {
            for c in terms.values_mut() {
                *c = c.exact_div(&common);
            }
        }

        // integer content and sign
        let den = terms.values().fold(BigInt::one(), |l, c| {
            crate::arith::lcm_big(&l, &c.denominator_lcm())
        });
        let num = terms
            .values()
            .flat_map(|c| c.coeffs().iter())
            .fold(BigInt::zero(), |g, c| {
                g.gcd(&(c * Rat::from_integer(den.clone())).to_integer())
            });
        let mut scale = Rat::new(den, num);
        let (_, lead) = terms.iter().next_back().unwrap();
        if lead.leading().is_negative() {
            scale = -scale;
        }
        if !scale.is_one() {
            for c in terms.values_mut() {
                *c = c.scale(&scale);
            }
        }
        Ok(DiffPoly { order, terms })
    }

    /// Normalizes polynomial-coefficient terms.
    pub fn from_poly_terms(raw: impl IntoIterator<Item = (ExpVec, UPoly)>) -> Result<DiffPoly> {
        Self::normalize(raw.into_iter().map(|(k, c)| (k, RFunc::from_poly(c))))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<ExpVec, UPoly> {
        &self.terms
    }

    pub fn coeff(&self, i: &ExpVec) -> Option<&UPoly> {
        self.terms.get(i)
    }

    /// `d(F)`
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(ExpVec::norm).max().unwrap_or(0)
    }

    pub fn supports(&self) -> Supports {
        let e: Vec<ExpVec> = self.terms.keys().cloned().collect();
        let d = self.total_degree();
        let top = e.iter().filter(|i| i.norm() == d).cloned().collect();
        Supports { e, d, top }
    }

    pub fn is_linear(&self) -> bool {
        self.total_degree() == 1
    }
}

impl fmt::Debug for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffPoly(order {}, {{", self.order)?;
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k:?} -> {c}")?;
        }
        write!(f, "}})")
    }
}
