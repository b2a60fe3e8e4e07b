//! Newton data, indicial polynomials and order bounds at the places of
//! `Q(x)`, plus the dominance order on exponent vectors and the resulting
//! classification of an equation.

mod classify;
mod order;

pub use classify::{classify, Classification, PoleCandidate};
pub use order::{compare_gg, d_totally_ordered, greatest_element, Dominance};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    fmt_rat, integer_roots, is_irreducible, lowest_coeff_at_factor, ord_at_factor,
    poly_ord_at_infinity, rat, Rat, UPoly,
};
use crate::diffpoly::{DiffPoly, ExpVec};
use crate::error::{Error, Result};

/// A place of `Q(x)`: the roots of a monic irreducible polynomial, or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Factor(UPoly),
    Infinity,
}

impl Point {
    /// `x - x0`
    pub fn finite(x0: &Rat) -> Point {
        Point::Factor(UPoly::linear_root(x0))
    }

    /// Checks irreducibility and makes the factor monic.
    pub fn factor(p: &UPoly) -> Result<Point> {
        if p.is_constant() {
            return Err(Error::InvalidArgument(
                "a place needs a nonconstant polynomial".into(),
            ));
        }
        if !is_irreducible(p)? {
            return Err(Error::InvalidArgument(format!(
                "{p} is not irreducible over Q"
            )));
        }
        Ok(Point::Factor(p.monic()))
    }

    /// Number of coordinates of a residue at this place.
    fn residue_dim(&self) -> usize {
        match self {
            Point::Factor(p) => p.deg(),
            Point::Infinity => 1,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Factor(p) => write!(f, "{p}"),
            Point::Infinity => write!(f, "infinity"),
        }
    }
}

/// Polynomial in `t` with coefficients in `Q[x]/(p)`, stored by coordinates:
/// `P(t) = sum_j P_j(t) a^j` where `a` is the class of `x`. Places of degree
/// one (rational points, infinity) have a single component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicialPoly {
    components: Vec<UPoly>,
}

impl IndicialPoly {
    pub fn components(&self) -> &[UPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(UPoly::is_zero)
    }

    /// The polynomial itself when all coefficients are rational.
    pub fn as_rational(&self) -> Option<&UPoly> {
        match self.components.as_slice() {
            [p] => Some(p),
            [p, rest @ ..] if rest.iter().all(UPoly::is_zero) => Some(p),
            _ => None,
        }
    }

    /// Positive integers that are roots of every component, ascending.
    pub fn positive_integer_roots(&self) -> Result<Vec<BigInt>> {
        let g = self.components.iter().fold(UPoly::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(Error::ZeroIndicial);
        }
        Ok(integer_roots(&g)?
            .into_iter()
            .filter(|r| r.is_positive())
            .collect())
    }

    /// Renders in `t`; coefficients outside `Q` are written as polynomials
    /// in `x` taken modulo the place.
    pub fn fmt_var(&self, var: &str) -> String {
        if let Some(p) = self.as_rational() {
            return p.fmt_var(var);
        }
        let deg = self
            .components
            .iter()
            .filter_map(UPoly::degree)
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for k in (0..=deg).rev() {
            let coeff = UPoly::from_coeffs(self.components.iter().map(|c| c.coeff(k)).collect());
            if coeff.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let part = if coeff.is_constant() {
                let c = coeff.coeff(0);
                match k {
                    0 => fmt_rat(&c),
                    _ if c.is_one() => power,
                    _ if (-&c).is_one() => format!("-{power}"),
                    _ => format!("{}*{power}", fmt_rat(&c)),
                }
            } else if k == 0 {
                format!("({})", coeff.fmt_var("x"))
            } else {
                format!("({})*{power}", coeff.fmt_var("x"))
            };
            match part.strip_prefix('-') {
                Some(rest) if !out.is_empty() => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                _ => {
                    if !out.is_empty() {
                        out.push_str(" + ");
                    }
                    out.push_str(&part);
                }
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl fmt::Display for IndicialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("t"))
    }
}

/// `m`, `M`, the indicial polynomial and the b-bound at one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicialData {
    pub point: Point,
    pub m: i64,
    pub big_m: Vec<ExpVec>,
    pub indicial: IndicialPoly,
    pub b: Option<Rat>,
}

impl IndicialData {
    pub fn compute(f: &DiffPoly, pt: &Point) -> Result<IndicialData> {
        let (m, big_m) = newton_data(f, pt)?;
        let indicial = indicial_from_m(f, pt, &big_m)?;
        let b = b_from_m(f, pt, m)?;
        Ok(IndicialData {
            point: pt.clone(),
            m,
            big_m,
            indicial,
            b,
        })
    }

    /// `max(largest positive integer root of P, floor(b), 0)`
    pub fn order_bound(&self) -> Result<u64> {
        let roots = self.indicial.positive_integer_roots()?;
        let mut bound = roots.last().cloned().unwrap_or_else(BigInt::zero);
        if let Some(b) = &self.b {
            bound = bound.max(b.floor().to_integer());
        }
        Ok(bound.max(BigInt::zero()).to_u64().unwrap_or(u64::MAX))
    }
}

fn ord_at(f: &UPoly, pt: &Point) -> Result<i64> {
    match pt {
        Point::Factor(p) => ord_at_factor(f, p),
        Point::Infinity => poly_ord_at_infinity(f),
    }
}

/// Weight of a term in the Newton data: `ord f_I + ||I||_inf` at finite
/// places, `ord f_I - ||I||_inf` at infinity.
fn weight(f: &UPoly, i: &ExpVec, pt: &Point) -> Result<i64> {
    let o = ord_at(f, pt)?;
    let inf = i.inf_norm() as i64;
    Ok(match pt {
        Point::Factor(_) => o + inf,
        Point::Infinity => o - inf,
    })
}

/// `m` and the set `M` of exponents in `D(F)` attaining it.
pub fn newton_data(f: &DiffPoly, pt: &Point) -> Result<(i64, Vec<ExpVec>)> {
    let d = f.total_degree();
    let mut best: Option<i64> = None;
    let mut set = Vec::new();
    for (i, c) in f.terms().iter().filter(|(i, _)| i.norm() == d) {
        let w = weight(c, i, pt)?;
        match best {
            Some(b) if w < b => {}
            Some(b) if w == b => set.push(i.clone()),
            _ => {
                best = Some(w);
                set = vec![i.clone()];
            }
        }
    }
    Ok((best.expect("normalized polynomial has terms"), set))
}

pub fn indicial_polynomial(f: &DiffPoly, pt: &Point) -> Result<IndicialPoly> {
    let (_, big_m) = newton_data(f, pt)?;
    indicial_from_m(f, pt, &big_m)
}

fn indicial_from_m(f: &DiffPoly, pt: &Point, big_m: &[ExpVec]) -> Result<IndicialPoly> {
    let dim = pt.residue_dim();
    let mut components = vec![UPoly::zero(); dim];
    for i in big_m {
        let coeff = &f.terms()[i];
        let lowest: Vec<Rat> = match pt {
            Point::Factor(p) => lowest_coeff_at_factor(coeff, p)?.coordinates(),
            Point::Infinity => vec![coeff.leading()],
        };
        let mut shape = UPoly::one();
        for r in 0..f.order() {
            let e = i.partial(r + 1);
            if e == 0 {
                continue;
            }
            // (-t - r) at finite places, (t - r) at infinity
            let factor = match pt {
                Point::Factor(_) => UPoly::from_coeffs(vec![-rat(r as i64), rat(-1)]),
                Point::Infinity => UPoly::from_coeffs(vec![-rat(r as i64), rat(1)]),
            };
            shape = &shape * &factor.pow(e);
        }
        for (j, a) in lowest.iter().enumerate() {
            if !a.is_zero() {
                components[j] = &components[j] + &shape.scale(a);
            }
        }
    }
    Ok(IndicialPoly { components })
}

/// The b-bound; `None` when every term has maximal total degree.
pub fn b_bound(f: &DiffPoly, pt: &Point) -> Result<Option<Rat>> {
    let (m, _) = newton_data(f, pt)?;
    b_from_m(f, pt, m)
}

fn b_from_m(f: &DiffPoly, pt: &Point, m: i64) -> Result<Option<Rat>> {
    let d = f.total_degree();
    let mut best: Option<Rat> = None;
    for (i, c) in f.terms().iter().filter(|(i, _)| i.norm() < d) {
        let w = weight(c, i, pt)?;
        let v = Rat::new(BigInt::from(w - m), BigInt::from(d - i.norm()));
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
    }
    Ok(best)
}

/// Largest positive integer root of `P` (0 if none).
pub fn integer_root_bound(p: &IndicialPoly) -> Result<BigInt> {
    Ok(p.positive_integer_roots()?
        .pop()
        .unwrap_or_else(BigInt::zero))
}

/// Bound on the order of any Laurent series solution at `pt`.
pub fn laurent_order_bound(f: &DiffPoly, pt: &Point) -> Result<u64> {
    IndicialData::compute(f, pt)?.order_bound()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn dp(terms: &[(&[u32], &[i64])]) -> DiffPoly {
        DiffPoly::from_poly_terms(
            terms
                .iter()
                .map(|(e, c)| (ExpVec::new(e.to_vec()), UPoly::from_ints(c))),
        )
        .unwrap()
    }

    fn e(v: &[u32]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    pub(crate) fn kamke() -> DiffPoly {
        // y^2 y''^2 - 2 y y'^2 y'' + y'^4 - y''^2 - y'^2
        dp(&[
            (&[2, 0, 2], &[1]),
            (&[1, 2, 1], &[-2]),
            (&[0, 4, 0], &[1]),
            (&[0, 0, 2], &[-1]),
            (&[0, 2, 0], &[-1]),
        ])
    }

    pub(crate) fn euler() -> DiffPoly {
        dp(&[
            (&[0, 0, 1], &[0, 0, 1]),
            (&[0, 1, 0], &[0, 1]),
            (&[1, 0, 0], &[-1]),
        ])
    }

    pub(crate) fn section_four() -> DiffPoly {
        dp(&[
            (&[0, 0, 2], &[0, 0, 1, -2, 1]),
            (&[0, 1, 1], &[0, 0, -4, 4]),
            (&[1, 0, 1], &[0, 4, -4]),
            (&[0, 2, 0], &[0, 0, 4]),
            (&[1, 1, 0], &[0, -8]),
            (&[2, 0, 0], &[4]),
            (&[0, 0, 1], &[2, -2]),
        ])
    }

    #[test]
    fn kamke_at_infinity() {
        let f = kamke();
        let (m, big_m) = newton_data(&f, &Point::Infinity).unwrap();
        assert_eq!(m, -4);
        assert_eq!(big_m.len(), 3);
        let p = indicial_polynomial(&f, &Point::Infinity).unwrap();
        assert_eq!(p.as_rational(), Some(&UPoly::from_ints(&[0, 0, 1])));
        assert_eq!(b_bound(&f, &Point::Infinity).unwrap(), Some(rat(1)));
        assert_eq!(laurent_order_bound(&f, &Point::Infinity).unwrap(), 1);
    }

    #[test]
    fn euler_at_zero() {
        let f = euler();
        let zero = Point::finite(&rat(0));
        let (m, big_m) = newton_data(&f, &zero).unwrap();
        assert_eq!((m, big_m.len()), (0, 3));
        let p = indicial_polynomial(&f, &zero).unwrap();
        assert_eq!(p.as_rational(), Some(&UPoly::from_ints(&[-1, 0, 1])));
        assert_eq!(b_bound(&f, &zero).unwrap(), None);
        assert_eq!(laurent_order_bound(&f, &zero).unwrap(), 1);
    }

    #[test]
    fn first_order_linear_at_infinity() {
        let f = dp(&[(&[0, 1], &[1]), (&[1, 0], &[-1])]);
        let (m, big_m) = newton_data(&f, &Point::Infinity).unwrap();
        assert_eq!((m, big_m), (0, vec![e(&[1, 0])]));
        assert_eq!(b_bound(&f, &Point::Infinity).unwrap(), None);
    }

    #[test]
    fn critical_example_has_zero_indicial() {
        let f = dp(&[
            (&[1, 0, 1], &[0, 1]),
            (&[0, 2, 0], &[0, -1]),
            (&[1, 1, 0], &[1]),
        ]);
        assert!(indicial_polynomial(&f, &Point::Infinity).unwrap().is_zero());
        assert_eq!(
            laurent_order_bound(&f, &Point::Infinity),
            Err(Error::ZeroIndicial)
        );
    }

    #[test]
    fn section_four_bounds() {
        let f = section_four();
        let at = |pt: Point| laurent_order_bound(&f, &pt).unwrap();
        assert_eq!(at(Point::finite(&rat(0))), 0);
        assert_eq!(at(Point::finite(&rat(1))), 1);
        assert_eq!(at(Point::Infinity), 1);
        let p0 = indicial_polynomial(&f, &Point::finite(&rat(0))).unwrap();
        assert_eq!(p0.as_rational(), Some(&UPoly::from_ints(&[0, 0, 1, 2, 1])));
        let p1 = indicial_polynomial(&f, &Point::finite(&rat(1))).unwrap();
        assert_eq!(p1.as_rational(), Some(&UPoly::from_ints(&[0, 0, 1, -2, 1])));
        assert_eq!(b_bound(&f, &Point::finite(&rat(0))).unwrap(), Some(rat(0)));
        assert_eq!(b_bound(&f, &Point::finite(&rat(1))).unwrap(), Some(rat(-1)));
        assert_eq!(b_bound(&f, &Point::Infinity).unwrap(), Some(rat(-1)));
    }

    #[test]
    fn integer_root_bounds() {
        let p = |c: &[i64]| IndicialPoly {
            components: vec![UPoly::from_ints(c)],
        };
        assert_eq!(integer_root_bound(&p(&[-1, 0, 1])).unwrap(), BigInt::one());
        assert_eq!(integer_root_bound(&p(&[0, 0, 1])).unwrap(), BigInt::zero());
        assert_eq!(integer_root_bound(&p(&[-1])).unwrap(), BigInt::zero());
        assert_eq!(integer_root_bound(&p(&[])), Err(Error::ZeroIndicial));
    }

    #[test]
    fn algebraic_place_uses_coordinate_gcd() {
        // (x^2 + 1) y' - 2 x y at x^2 + 1
        let f = dp(&[(&[0, 1], &[1, 0, 1]), (&[1, 0], &[0, -2])]);
        let pt = Point::factor(&UPoly::from_ints(&[1, 0, 1])).unwrap();
        let data = IndicialData::compute(&f, &pt).unwrap();
        assert_eq!(data.m, 0);
        // P = 2a * (-t) - 2a
        assert_eq!(
            data.indicial.components(),
            &[UPoly::zero(), UPoly::from_ints(&[-2, -2])]
        );
        assert_eq!(data.order_bound().unwrap(), 0);
        let g = dp(&[(&[0, 1], &[1, 0, 1]), (&[1, 0], &[0, 2])]);
        let data = IndicialData::compute(&g, &pt).unwrap();
        assert_eq!(
            data.indicial.components(),
            &[UPoly::zero(), UPoly::from_ints(&[2, -2])]
        );
        assert_eq!(data.order_bound().unwrap(), 1);
        assert!(Point::factor(&UPoly::from_ints(&[-1, 0, 1])).is_err());
    }
}
