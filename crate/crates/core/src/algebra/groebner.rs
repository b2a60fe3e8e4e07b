//! Buchberger's algorithm for reduced lex Gröbner bases.

use std::collections::BTreeSet;

use crate::error::{CapKind, Error, Result};

use super::mpoly::{MPoly, Monomial};

pub const DEFAULT_REDUCTION_BUDGET: usize = 1_000_000;

/// Reduced Gröbner basis: every element monic, sorted by ascending leading
/// monomial. `{1}` for the unit ideal, empty for the zero ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<MPoly>,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[MPoly] {
        &self.polys
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn normal_form(&self, f: &MPoly) -> MPoly {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` with monic scaling.
pub fn s_polynomial(f: &MPoly, g: &MPoly) -> MPoly {
    let (mf, cf) = f.leading().expect("S-polynomial of zero");
    let (mg, cg) = g.leading().expect("S-polynomial of zero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &cf.recip());
    let b = g.mul_term(&mg.quotient_of(&l), &cg.recip());
    &a - &b
}

struct Reducer {
    steps: usize,
    cap: usize,
}

impl Reducer {
    fn reduce(&mut self, f: &MPoly, basis: &[MPoly]) -> Result<MPoly> {
        let mut p = f.clone();
        let mut rem = MPoly::zero(f.nvars());
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let divisor = basis
                .iter()
                .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
            match divisor {
                Some(g) => {
                    self.steps += 1;
                    if self.steps > self.cap {
                        return Err(Error::Cap(CapKind::GroebnerSteps { cap: self.cap }));
                    }
                    let (lm, lc) = g.leading().unwrap();
                    let factor = &c / lc;
                    p = &p - &g.mul_term(&lm.quotient_of(&m), &factor);
                }
                None => {
                    rem.add_term(m.clone(), c.clone());
                    p.add_term(m, -c);
                }
            }
        }
        Ok(rem)
    }
}

/// Full remainder of `f` modulo the basis.
pub fn normal_form(f: &MPoly, basis: &GroebnerBasis) -> MPoly {
    let mut r = Reducer {
        steps: 0,
        cap: usize::MAX,
    };
    r.reduce(f, &basis.polys)
        .expect("unbounded reduction cannot hit a cap")
}

pub fn buchberger(gens: &[MPoly]) -> Result<GroebnerBasis> {
    buchberger_with_budget(gens, DEFAULT_REDUCTION_BUDGET)
}

pub fn buchberger_with_budget(gens: &[MPoly], cap: usize) -> Result<GroebnerBasis> {
    let nvars = gens.first().map(MPoly::nvars).unwrap_or(0);
    let mut reducer = Reducer { steps: 0, cap };
    let mut basis: Vec<MPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return Ok(unit(nvars));
        }
        let m = g.monic();
        if !basis.contains(&m) {
            basis.push(m);
        }
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while let Some(pair) = select_pair(&basis, &pending) {
        pending.remove(&pair);
        let (i, j) = pair;
        let (mi, mj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if mi.coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj);
        if chain_criterion(&basis, &pending, i, j, &l) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reducer.reduce(&s, &basis)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit(nvars));
        }
        let k = basis.len();
        basis.push(r.monic());
        for i in 0..k {
            pending.insert((i, k));
        }
    }
    Ok(GroebnerBasis {
        nvars,
        polys: interreduce(basis, &mut reducer)?,
    })
}

fn unit(nvars: usize) -> GroebnerBasis {
    GroebnerBasis {
        nvars,
        polys: vec![MPoly::one(nvars)],
    }
}

/// The pair whose lcm has the smallest total degree, ties broken by lex.
fn select_pair(basis: &[MPoly], pending: &BTreeSet<(usize, usize)>) -> Option<(usize, usize)> {
    pending
        .iter()
        .min_by_key(|&&(i, j)| {
            let l = pair_lcm(basis, i, j);
            (l.total_degree(), l, (i, j))
        })
        .copied()
}

fn pair_lcm(basis: &[MPoly], i: usize, j: usize) -> Monomial {
    basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap())
}

/// Buchberger's second criterion: skip `(i, j)` when some `k` has a leading
/// monomial dividing the lcm and both `(i, k)` and `(j, k)` are already done.
fn chain_criterion(
    basis: &[MPoly],
    pending: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
    l: &Monomial,
) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_monomial().unwrap().divides(l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn interreduce(basis: Vec<MPoly>, reducer: &mut Reducer) -> Result<Vec<MPoly>> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<MPoly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in sorted {
        let lm = g.leading_monomial().unwrap().clone();
        if minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&lm))
        {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reducer.reduce(&minimal[i], &others)?;
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn xy() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn circle_and_hyperbola() {
        let (x, y) = xy();
        let one = MPoly::one(2);
        let f = &(&x.pow(2) + &y.pow(2)) - &one;
        let g = &(&x * &y) - &one;
        let gb = buchberger(&[f, g]).unwrap();
        let expected_1 = &(&x + &y.pow(3)) - &y;
        let expected_2 = &(&y.pow(4) - &y.pow(2)) + &one;
        assert_eq!(gb.polys(), &[expected_2, expected_1]);
    }

    #[test]
    fn trivial_and_inconsistent() {
        let (x, _) = xy();
        let one = MPoly::one(2);
        let gb = buchberger(&[&x - &one]).unwrap();
        assert_eq!(gb.polys(), &[&x - &one]);
        let gb = buchberger(&[x.clone(), &x + &one]).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn normal_forms() {
        let (x, y) = xy();
        let one = MPoly::one(2);
        let g = &(&x * &y) - &one;
        let gb = buchberger(std::slice::from_ref(&g)).unwrap();
        assert!(gb.normal_form(&g).is_zero());
        let quartic = buchberger(&[&(&y.pow(4) - &y.pow(2)) + &one]).unwrap();
        assert_eq!(quartic.normal_form(&y.pow(4)), &y.pow(2) - &one);
        let lin = buchberger(&[&x - &one]).unwrap();
        assert_eq!(lin.normal_form(&one), MPoly::constant(2, rat(1)));
    }

    #[test]
    fn budget_is_enforced() {
        let (x, y) = xy();
        let one = MPoly::one(2);
        let f = &(&x.pow(2) + &y.pow(2)) - &one;
        let g = &(&x * &y) - &one;
        assert!(matches!(
            buchberger_with_budget(&[f, g], 1),
            Err(Error::Cap(_))
        ));
    }
}
