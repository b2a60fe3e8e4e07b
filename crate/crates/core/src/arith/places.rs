//! Orders and lowest coefficients at finite places (monic irreducible
//! factors) and at infinity.

use super::{RFunc, Rat, Residue, UPoly};
use crate::error::{Error, Result};

/// Multiplicity of `p` in `f`, together with the cofactor `f / p^mu`.
fn strip_factor(f: &UPoly, p: &UPoly) -> (usize, UPoly) {
    let mut mu = 0;
    let mut rest = f.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return (mu, rest);
        }
        rest = q;
        mu += 1;
    }
}

/// `-mu` where `p^mu` exactly divides `f`.
pub fn ord_at_factor(f: &UPoly, p: &UPoly) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    if p.is_constant() {
        return Err(Error::InvalidArgument(
            "place must be a nonconstant polynomial".into(),
        ));
    }
    Ok(-(strip_factor(f, p).0 as i64))
}

/// Leading coefficient of the expansion in `x - a` at a root `a` of `p`,
/// as `(f / p^mu) * p'^mu mod p`.
pub fn lowest_coeff_at_factor(f: &UPoly, p: &UPoly) -> Result<Residue> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    let (mu, rest) = strip_factor(f, p);
    let slope = Residue::new(&p.derivative(), p);
    Ok((0..mu).fold(Residue::new(&rest, p), |acc, _| acc.mul(&slope)))
}

/// `deg(num) - deg(den)`.
pub fn ord_at_infinity(f: &RFunc) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    Ok(f.num().deg() as i64 - f.den().deg() as i64)
}

pub fn poly_ord_at_infinity(f: &UPoly) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    Ok(f.deg() as i64)
}

/// Ratio of leading coefficients.
pub fn lowest_coeff_at_infinity(f: &RFunc) -> Result<Rat> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    Ok(f.num().leading() / f.den().leading())
}
