use crate::diffpoly::{DiffPoly, ExpVec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    FirstDominates,
    SecondDominates,
    Equal,
    Incomparable,
}

fn key(i: &ExpVec) -> (u32, u32) {
    (i.norm(), i.norm() + i.inf_norm())
}

fn dominates(a: (u32, u32), b: (u32, u32)) -> bool {
    a.0 >= b.0 && a.1 > b.1
}

/// `I >> J` iff `||I|| >= ||J||` and `||I|| + ||I||_inf > ||J|| + ||J||_inf`.
pub fn compare_gg(i: &ExpVec, j: &ExpVec) -> Result<Dominance> {
    if i.len() != j.len() {
        return Err(Error::LengthMismatch(i.len(), j.len()));
    }
    if i == j {
        return Ok(Dominance::Equal);
    }
    let (a, b) = (key(i), key(j));
    Ok(if dominates(a, b) {
        Dominance::FirstDominates
    } else if dominates(b, a) {
        Dominance::SecondDominates
    } else {
        Dominance::Incomparable
    })
}

/// The element of `E(F)` dominating every other one, if any.
pub fn greatest_element(f: &DiffPoly) -> Option<ExpVec> {
    let keys: Vec<&ExpVec> = f.terms().keys().collect();
    keys.iter()
        .find(|i| keys.iter().all(|j| i == &j || dominates(key(i), key(j))))
        .map(|i| (*i).clone())
}

/// Whether `D(F)` is a chain under `>>`.
pub fn d_totally_ordered(f: &DiffPoly) -> bool {
    let top = f.supports().top;
    top.iter().enumerate().all(|(a, i)| {
        top[a + 1..].iter().all(|j| {
            compare_gg(i, j)
                .map(|c| c != Dominance::Incomparable)
                .unwrap_or(false)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::tests::{euler, kamke, section_four};
    use crate::arith::UPoly;

    fn e(v: &[u32]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    #[test]
    fn comparisons() {
        assert_eq!(
            compare_gg(&e(&[0, 0, 2]), &e(&[0, 1, 1])).unwrap(),
            Dominance::FirstDominates
        );
        assert_eq!(
            compare_gg(&e(&[0, 1, 1]), &e(&[0, 0, 2])).unwrap(),
            Dominance::SecondDominates
        );
        assert_eq!(
            compare_gg(&e(&[2, 0]), &e(&[0, 1])).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(
            compare_gg(&e(&[1, 1]), &e(&[1, 1])).unwrap(),
            Dominance::Equal
        );
        // same statistics, different tuples
        assert_eq!(
            compare_gg(&e(&[1, 0, 1]), &e(&[0, 2, 0])).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(
            compare_gg(&e(&[1]), &e(&[1, 0])),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn greatest_elements() {
        assert_eq!(greatest_element(&section_four()), Some(e(&[0, 0, 2])));
        assert_eq!(greatest_element(&kamke()), None);
        assert_eq!(greatest_element(&euler()), Some(e(&[0, 0, 1])));
        let not_complete = DiffPoly::from_poly_terms(vec![
            (e(&[1, 0, 0, 1]), UPoly::from_ints(&[0, 0, 0, 1])),
            (e(&[1, 0, 1, 0]), UPoly::x()),
            (e(&[0, 2, 0, 0]), UPoly::from_ints(&[0, -1])),
            (e(&[1, 1, 0, 0]), UPoly::one()),
        ])
        .unwrap();
        assert_eq!(greatest_element(&not_complete), Some(e(&[1, 0, 0, 1])));
    }

    #[test]
    fn chains() {
        assert!(!d_totally_ordered(&section_four()));
        assert!(!d_totally_ordered(&kamke()));
        assert!(d_totally_ordered(&euler()));
    }
}
