//! Exact arithmetic over the rationals: univariate polynomials, rational
//! functions, residues modulo irreducible polynomials, factorization and
//! valuations at places of the rational function field.
//!
//! Sign conventions for orders follow the Laurent-series convention used
//! throughout the crate: a series starting at `(x - x0)^m` has order `-m`,
//! so a pole of multiplicity `k` has order `k` and a zero of multiplicity `k`
//! has order `-k`. At infinity a polynomial of degree `d` has order `d`.

mod factor;
mod modp;
mod places;
mod residue;
mod rfunc;
mod upoly;

pub use factor::{
    factor_irreducible, integer_roots, is_irreducible, rational_roots, squarefree_factorization,
    Factorization, DEFAULT_FACTOR_DEGREE_CAP,
};
pub use places::{
    lowest_coeff_at_factor, lowest_coeff_at_infinity, ord_at_factor, ord_at_infinity,
    poly_ord_at_infinity,
};
pub use residue::Residue;
pub use rfunc::RFunc;
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number in canonical form.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text for a rational: `3`, `-1/2`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.lcm(b).abs()
}
