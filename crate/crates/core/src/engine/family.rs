use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{buchberger, solve_system, MPoly};
use crate::arith::{RFunc, UPoly};
use crate::diffpoly::{evaluate, DiffPoly, ParamRFunc};
use crate::error::Result;

use super::ansatz::{Ansatz, Slot};

/// One parameterized branch of the solution set: the ansatz with each
/// unknown replaced by a polynomial in the free unknowns, plus the residual
/// constraints those must satisfy (empty for explicit families).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    ansatz: Ansatz,
    values: Vec<MPoly>,
    params: Vec<usize>,
    constraints: Vec<MPoly>,
    names: Vec<String>,
    pub verified: bool,
}

enum Piece<'a> {
    Block {
        term: usize,
        pole_order: u64,
        numerator: Vec<(usize, &'a MPoly)>,
    },
    Poly(Vec<(usize, &'a MPoly)>),
}

impl SolutionFamily {
    pub(crate) fn new(
        ansatz: Ansatz,
        values: Vec<MPoly>,
        params: Vec<usize>,
        constraints: Vec<MPoly>,
    ) -> Self {
        let mut fam = SolutionFamily {
            ansatz,
            values,
            params,
            constraints,
            names: Vec::new(),
            verified: false,
        };
        fam.names = fam.assign_names();
        fam
    }

    pub fn is_explicit(&self) -> bool {
        self.constraints.is_empty()
    }

    /// The family as a rational function whose parameters are the free unknowns.
    pub fn expr(&self) -> ParamRFunc {
        self.ansatz.instantiate(&self.values)
    }

    pub fn constraints(&self) -> &[MPoly] {
        &self.constraints
    }

    pub fn values(&self) -> &[MPoly] {
        &self.values
    }

    pub fn ansatz(&self) -> &Ansatz {
        &self.ansatz
    }

    /// `t1, t2, ...` in order of first use.
    pub fn parameter_names(&self) -> Vec<String> {
        let mut used: Vec<(usize, &String)> = self
            .params
            .iter()
            .filter(|&&p| self.appears(p))
            .map(|&p| (self.name_index(p), &self.names[p]))
            .collect();
        used.sort();
        used.into_iter().map(|(_, n)| n.clone()).collect()
    }

    fn appears(&self, var: usize) -> bool {
        self.values
            .iter()
            .chain(&self.constraints)
            .any(|v| v.variables().contains(&var))
    }

    fn name_index(&self, var: usize) -> usize {
        self.names[var]
            .trim_start_matches('t')
            .parse()
            .unwrap_or(usize::MAX)
    }

    pub fn constraint_strings(&self) -> Vec<String> {
        self.constraints
            .iter()
            .map(|c| c.fmt_with(&self.names))
            .collect()
    }

    fn pieces(&self) -> Vec<Piece<'_>> {
        let mut blocks: BTreeMap<(usize, u64), Vec<(usize, &MPoly)>> = BTreeMap::new();
        let mut poly: Vec<(usize, &MPoly)> = Vec::new();
        for (slot, v) in self.ansatz.slots().into_iter().zip(&self.values) {
            if v.is_zero() {
                continue;
            }
            match slot {
                Slot::Pole {
                    term,
                    pole_order,
                    power,
                } => blocks
                    .entry((term, pole_order))
                    .or_default()
                    .push((power, v)),
                Slot::Poly { power } => poly.push((power, v)),
            }
        }
        let mut out: Vec<Piece<'_>> = blocks
            .into_iter()
            .map(|((term, pole_order), mut numerator)| {
                numerator.reverse();
                Piece::Block {
                    term,
                    pole_order,
                    numerator,
                }
            })
            .collect();
        if !poly.is_empty() {
            poly.reverse();
            out.push(Piece::Poly(poly));
        }
        out
    }

    fn assign_names(&self) -> Vec<String> {
        let mut order: Vec<usize> = Vec::new();
        let mut visit = |p: &MPoly| {
            for (m, _) in p.terms().rev() {
                for (var, &e) in m.exponents().iter().enumerate() {
                    if e > 0 && !order.contains(&var) {
                        order.push(var);
                    }
                }
            }
        };
        for piece in self.pieces() {
            let coeffs = match &piece {
                Piece::Block { numerator, .. } => numerator,
                Piece::Poly(c) => c,
            };
            for (_, c) in coeffs {
                visit(c);
            }
        }
        for c in &self.constraints {
            visit(c);
        }
        for &p in &self.params {
            if !order.contains(&p) {
                order.push(p);
            }
        }
        let mut names: Vec<String> = (0..self.values.len()).map(|i| format!("c{i}")).collect();
        for (k, &var) in order.iter().enumerate() {
            names[var] = format!("t{}", k + 1);
        }
        names
    }

    /// Partial-fraction rendering: pole blocks first, then the polynomial
    /// part by descending degree, e.g. `1/(x - 1) + t1*x`.
    pub fn render(&self) -> String {
        let mut chunks: Vec<String> = Vec::new();
        for piece in self.pieces() {
            match piece {
                Piece::Block {
                    term,
                    pole_order,
                    numerator,
                } => {
                    let den = power_string(&self.ansatz.pole_terms[term].factor, pole_order);
                    let num = poly_string(&numerator, &self.names);
                    let single =
                        numerator.len() == 1 && numerator[0].1.len() == 1 && !num.contains('/');
                    if single {
                        chunks.push(format!("{num}/{den}"));
                    } else {
                        chunks.push(format!("({num})/{den}"));
                    }
                }
                Piece::Poly(coeffs) => chunks.push(poly_string(&coeffs, &self.names)),
            }
        }
        join_signed(&chunks)
    }

    /// Whether `F(expr)` vanishes modulo the constraint ideal.
    pub fn verify(&self, f: &DiffPoly) -> Result<bool> {
        let value = evaluate(f, &self.expr());
        if value.is_zero() {
            return Ok(true);
        }
        if self.constraints.is_empty() {
            return Ok(false);
        }
        let basis = buchberger(&self.constraints)?;
        Ok(value
            .num()
            .x_coefficients()
            .iter()
            .all(|c| basis.normal_form(c).is_zero()))
    }

    /// Whether some choice of the parameters (satisfying the constraints)
    /// turns the family into `z0`.
    pub fn specializes_to(&self, z0: &RFunc) -> Result<bool> {
        let gens = self.match_equations(z0);
        if gens.is_empty() {
            return Ok(true);
        }
        Ok(!buchberger(&gens)?.is_unit())
    }

    /// Like `specializes_to`, but the parameters must be rational.
    pub(crate) fn covers_rational(&self, z0: &RFunc) -> Result<bool> {
        let gens = self.match_equations(z0);
        let order: Vec<usize> = (0..self.values.len()).collect();
        Ok(!solve_system(&gens, &order)?.families.is_empty())
    }

    /// Equations on the unknowns for `expr = z0`, with the constraints.
    fn match_equations(&self, z0: &RFunc) -> Vec<MPoly> {
        let expr = self.expr();
        let target = ParamRFunc::from_rfunc(expr.nvars(), z0);
        let diff = &expr.num().mul_upoly(target.den()) - &target.num().mul_upoly(expr.den());
        let mut gens: Vec<MPoly> = diff
            .x_coefficients()
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        gens.extend(self.constraints.iter().cloned());
        gens
    }
}

fn power_string(p: &UPoly, e: u64) -> String {
    let base = p.fmt_var("x");
    let atom = p.term_count() == 1 && p.leading().is_one();
    match (atom, e) {
        (true, 1) => base,
        (true, _) => format!("{base}^{e}"),
        (false, 1) => format!("({base})"),
        (false, _) => format!("({base})^{e}"),
    }
}

/// `sum c_k x^k` with multivariate coefficients, terms given by descending power.
fn poly_string(coeffs: &[(usize, &MPoly)], names: &[String]) -> String {
    let chunks: Vec<String> = coeffs
        .iter()
        .map(|(k, c)| {
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let s = c.fmt_with(names);
            if power.is_empty() {
                s
            } else if c.len() > 1 {
                format!("({s})*{power}")
            } else if s == "1" {
                power
            } else if s == "-1" {
                format!("-{power}")
            } else {
                format!("{s}*{power}")
            }
        })
        .collect();
    join_signed(&chunks)
}

fn join_signed(chunks: &[String]) -> String {
    let mut out = String::new();
    for c in chunks {
        if out.is_empty() {
            out.push_str(c);
        } else if let Some(rest) = c.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(c);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
