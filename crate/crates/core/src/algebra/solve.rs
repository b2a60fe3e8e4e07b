//! Triangular extraction of rational solution families from a lex basis.
//!
//! Variables are processed from the smallest (last in the order) upward.
//! A variable whose elimination ideal is zero stays a free parameter; one
//! with a univariate eliminant is branched over its rational roots; one that
//! appears linearly with a constant coefficient is solved for. A basis
//! element divisible by an unknown `u` splits the branch into `u = 0` and the
//! cofactor. Anything else (irrational roots, parametric leading
//! coefficients) is returned as a constrained family carrying its residual
//! basis.

use crate::arith::{factor_irreducible, Rat};
use crate::error::Result;

use super::groebner::{buchberger_with_budget, DEFAULT_REDUCTION_BUDGET};
use super::mpoly::MPoly;

/// One branch of the solution set. `values[i]` is the value of unknown `i`
/// as a polynomial in the unknowns listed in `params`; a parameter `p`
/// has `values[p] = p` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub values: Vec<MPoly>,
    pub params: Vec<usize>,
    /// Reduced basis the parameters must satisfy; empty for explicit families.
    pub constraints: Vec<MPoly>,
}

impl Family {
    pub fn is_explicit(&self) -> bool {
        self.constraints.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveOutcome {
    pub families: Vec<Family>,
    pub constrained: Vec<Family>,
    pub inconsistent: bool,
}

impl SolveOutcome {
    /// Explicit families followed by constrained ones.
    pub fn all(&self) -> impl Iterator<Item = &Family> {
        self.families.iter().chain(&self.constrained)
    }
}

/// Solves `gens = 0` over the rationals. `order` lists the variables from
/// largest to smallest in the lex order used for elimination.
pub fn solve_system(gens: &[MPoly], order: &[usize]) -> Result<SolveOutcome> {
    solve_system_with_budget(gens, order, DEFAULT_REDUCTION_BUDGET)
}

pub fn solve_system_with_budget(
    gens: &[MPoly],
    order: &[usize],
    budget: usize,
) -> Result<SolveOutcome> {
    let nvars = order.len();
    // position k in the solver ring holds original variable order[k]
    let mut to_solver = vec![0; nvars];
    for (k, &v) in order.iter().enumerate() {
        to_solver[v] = k;
    }
    let gens: Vec<MPoly> = gens.iter().map(|g| g.remap(&to_solver, nvars)).collect();
    let mut solver = Solver {
        nvars,
        budget,
        outcome: SolveOutcome::default(),
    };
    let values = (0..nvars).map(|i| MPoly::var(nvars, i)).collect();
    solver.branch(gens, values, (0..nvars).collect())?;
    if solver.outcome.families.is_empty() && solver.outcome.constrained.is_empty() {
        solver.outcome.inconsistent = true;
        return Ok(solver.outcome);
    }

    let back = |f: &Family| Family {
        values: (0..nvars)
            .map(|v| f.values[to_solver[v]].remap(order, nvars))
            .collect(),
        params: {
            let mut p: Vec<usize> = f.params.iter().map(|&k| order[k]).collect();
            p.sort_unstable();
            p
        },
        constraints: f
            .constraints
            .iter()
            .map(|c| c.remap(order, nvars))
            .collect(),
    };
    let out = &solver.outcome;
    Ok(SolveOutcome {
        families: out.families.iter().map(back).collect(),
        constrained: out.constrained.iter().map(back).collect(),
        inconsistent: false,
    })
}

struct Solver {
    nvars: usize,
    budget: usize,
    outcome: SolveOutcome,
}

impl Solver {
    fn branch(
        &mut self,
        gens: Vec<MPoly>,
        values: Vec<MPoly>,
        unassigned: Vec<usize>,
    ) -> Result<()> {
        let gens: Vec<MPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.iter().any(MPoly::is_constant) {
            return Ok(());
        }
        if self.shortcut(&gens, &values, &unassigned)? {
            return Ok(());
        }
        let gb = buchberger_with_budget(&gens, self.budget)?;
        if gb.is_unit() {
            return Ok(());
        }
        let polys = gb.polys();
        let mut free: Vec<usize> = Vec::new();
        for &v in unassigned.iter().rev() {
            let elim: Vec<&MPoly> = polys
                .iter()
                .filter(|g| {
                    let vars = g.variables();
                    vars.contains(&v) && vars.iter().all(|u| *u == v || free.contains(u))
                })
                .collect();
            if elim.is_empty() {
                free.push(v);
                continue;
            }
            let rest: Vec<usize> = unassigned.iter().copied().filter(|&u| u != v).collect();
            if let Some(eliminant) = elim.iter().find_map(|g| g.as_univariate(v)) {
                let fac = factor_irreducible(&eliminant)?;
                let mut roots: Vec<Rat> = fac
                    .factors
                    .iter()
                    .filter(|(p, _)| p.deg() == 1)
                    .map(|(p, _)| -p.coeff(0))
                    .collect();
                roots.sort();
                for r in roots {
                    let value = MPoly::constant(self.nvars, r);
                    self.assign(polys, &values, v, &value, rest.clone())?;
                }
                for (p, _) in fac.factors.iter().filter(|(p, _)| p.deg() > 1) {
                    let mut with_factor = polys.to_vec();
                    with_factor.push(MPoly::from_univariate(self.nvars, v, p));
                    let residual = buchberger_with_budget(&with_factor, self.budget)?;
                    if !residual.is_unit() {
                        self.emit_constrained(
                            values.clone(),
                            &unassigned,
                            residual.polys().to_vec(),
                        );
                    }
                }
                return Ok(());
            }
            let linear = elim
                .iter()
                .find(|g| g.degree_in(v) == 1 && g.coeff_in(v, 1).is_constant());
            if let Some(g) = linear {
                let lc = g.coeff_in(v, 1).constant_value().unwrap();
                let value = g.coeff_in(v, 0).scale(&-lc.recip());
                return self.assign(polys, &values, v, &value, rest);
            }
            // the cofactor is not in the ideal since the basis is reduced,
            // so both branches make progress
            if let Some((u, cofactor)) = polys.iter().find_map(|g| g.variable_factor()) {
                let others: Vec<usize> = unassigned.iter().copied().filter(|&w| w != u).collect();
                self.assign(polys, &values, u, &MPoly::zero(self.nvars), others)?;
                let mut with_cofactor = polys.to_vec();
                with_cofactor.push(cofactor);
                return self.branch(with_cofactor, values, unassigned);
            }
            self.emit_constrained(values, &unassigned, polys.to_vec());
            return Ok(());
        }
        debug_assert!(polys.is_empty());
        let mut params = unassigned;
        params.sort_unstable();
        self.outcome.families.push(Family {
            values,
            params,
            constraints: Vec::new(),
        });
        Ok(())
    }

    /// Moves that need no basis: branching on a univariate generator that
    /// splits into rational roots, eliminating the largest variable that
    /// occurs linearly with a constant coefficient, or splitting off a
    /// variable factor. Returns whether the branch was handled.
    fn shortcut(&mut self, gens: &[MPoly], values: &[MPoly], unassigned: &[usize]) -> Result<bool> {
        let rest = |v: usize| {
            unassigned
                .iter()
                .copied()
                .filter(|&u| u != v)
                .collect::<Vec<_>>()
        };
        for g in gens {
            let vars = g.variables();
            if vars.len() != 1 {
                continue;
            }
            let v = *vars.first().unwrap();
            let fac = factor_irreducible(&g.as_univariate(v).unwrap())?;
            if fac.factors.iter().any(|(p, _)| p.deg() > 1) {
                continue;
            }
            let mut roots: Vec<Rat> = fac.factors.iter().map(|(p, _)| -p.coeff(0)).collect();
            roots.sort();
            for r in roots {
                self.assign(gens, values, v, &MPoly::constant(self.nvars, r), rest(v))?;
            }
            return Ok(true);
        }
        let mut vars: Vec<usize> = unassigned.to_vec();
        vars.sort_unstable();
        for v in vars {
            let linear = gens
                .iter()
                .find(|g| g.degree_in(v) == 1 && g.coeff_in(v, 1).is_constant());
            if let Some(g) = linear {
                let lc = g.coeff_in(v, 1).constant_value().unwrap();
                let value = g.coeff_in(v, 0).scale(&-lc.recip());
                self.assign(gens, values, v, &value, rest(v))?;
                return Ok(true);
            }
        }
        // g = u^k h: the zeros of g are u = 0 together with the zeros of h
        for (i, g) in gens.iter().enumerate() {
            let Some((u, mut h)) = g.variable_factor() else {
                continue;
            };
            while let Some((_, next)) = h.variable_factor().filter(|(w, _)| *w == u) {
                h = next;
            }
            self.assign(gens, values, u, &MPoly::zero(self.nvars), rest(u))?;
            let mut replaced = gens.to_vec();
            replaced[i] = h;
            self.branch(replaced, values.to_vec(), unassigned.to_vec())?;
            return Ok(true);
        }
        Ok(false)
    }

    fn assign(
        &mut self,
        polys: &[MPoly],
        values: &[MPoly],
        v: usize,
        value: &MPoly,
        rest: Vec<usize>,
    ) -> Result<()> {
        let gens: Vec<MPoly> = polys.iter().map(|g| g.substitute(v, value)).collect();
        let values: Vec<MPoly> = values.iter().map(|f| f.substitute(v, value)).collect();
        self.branch(gens, values, rest)
    }

    fn emit_constrained(
        &mut self,
        values: Vec<MPoly>,
        unassigned: &[usize],
        constraints: Vec<MPoly>,
    ) {
        let mut params = unassigned.to_vec();
        params.sort_unstable();
        self.outcome.constrained.push(Family {
            values,
            params,
            constraints,
        });
    }
}
