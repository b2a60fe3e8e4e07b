use std::fmt;

use super::{Rat, UPoly};

/// Element of `Q[x]/(p)` for a monic irreducible `p`.
///
/// For `p = x - x0` this is just the scalar `value(x0)`; for higher-degree
/// moduli it represents a value at a root of `p` without naming the root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    modulus: UPoly,
    value: UPoly,
}

impl Residue {
    pub fn new(value: &UPoly, modulus: &UPoly) -> Self {
        debug_assert!(modulus.is_monic());
        Residue {
            modulus: modulus.clone(),
            value: value.rem(modulus),
        }
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn value(&self) -> &UPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The scalar value when the modulus is linear.
    pub fn as_rational(&self) -> Option<Rat> {
        self.value.is_constant().then(|| self.value.coeff(0))
    }

    pub fn add(&self, other: &Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue::new(&(&self.value + &other.value), &self.modulus)
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        debug_assert_eq!(self.modulus, other.modulus);
        Residue::new(&(&self.value * &other.value), &self.modulus)
    }

    /// Coordinates with respect to the power basis `1, a, a^2, ...` where `a`
    /// is the class of `x`; always `deg(modulus)` entries.
    pub fn coordinates(&self) -> Vec<Rat> {
        (0..self.modulus.deg())
            .map(|j| self.value.coeff(j))
            .collect()
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.deg() == 1 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} mod ({})", self.value, self.modulus)
        }
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Residue({self})")
    }
}
