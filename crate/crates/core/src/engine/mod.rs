//! Polynomial and rational solutions: bounds, ansatz, system extraction,
//! solving and verification of every returned family.

mod ansatz;
mod family;

pub use ansatz::{extract_system, Ansatz, PoleTerm, Slot};
pub use family::SolutionFamily;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::algebra::solve_system_with_budget;
use crate::algebra::DEFAULT_REDUCTION_BUDGET;
use crate::analysis::{classify, Classification, Point};
use crate::arith::{Rat, UPoly};
use crate::diffpoly::DiffPoly;
use crate::error::{CapKind, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_unknowns: usize,
    pub max_bound: u64,
    /// Order used at places whose indicial polynomial vanishes.
    pub order_cap: Option<u64>,
    pub groebner_budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_unknowns: 64,
            max_bound: 50,
            order_cap: None,
            groebner_budget: DEFAULT_REDUCTION_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Polynomial,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    Critical,
    NotMaximallyComparable,
    ZeroIndicialAtFactor(UPoly),
    ZeroIndicialAtInfinity,
    OrderCapApplied(u64),
    ConstrainedBranches(usize),
}

impl Diagnostic {
    /// Whether the diagnostic voids the completeness claim.
    pub fn is_structural(&self) -> bool {
        !matches!(self, Diagnostic::ConstrainedBranches(_))
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Critical => write!(f, "Critical"),
            Diagnostic::NotMaximallyComparable => write!(f, "NotMaximallyComparable"),
            Diagnostic::ZeroIndicialAtFactor(p) => write!(f, "ZeroIndicialAtFactor({p})"),
            Diagnostic::ZeroIndicialAtInfinity => write!(f, "ZeroIndicialAtInfinity"),
            Diagnostic::OrderCapApplied(k) => write!(f, "OrderCapApplied({k})"),
            Diagnostic::ConstrainedBranches(n) => write!(f, "ConstrainedBranches({n})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub mode: Mode,
    pub classification: Classification,
    /// Bound used at each place of the ansatz.
    pub bounds: Vec<(Point, u64)>,
    pub families: Vec<SolutionFamily>,
    pub diagnostics: Vec<Diagnostic>,
    pub complete: bool,
}

/// `max(r1, r2, 0)` from the indicial polynomial and b-bound at infinity.
pub fn poly_degree_bound(f: &DiffPoly) -> Result<u64> {
    let c = classify(f)?;
    c.infinity_bound.ok_or(Error::CriticalEquation)
}

fn check_bound(value: u64, opts: &SolveOptions) -> Result<u64> {
    if value > opts.max_bound {
        return Err(Error::Cap(CapKind::Bound {
            value,
            cap: opts.max_bound,
        }));
    }
    Ok(value)
}

pub fn polynomial_solutions(f: &DiffPoly, opts: &SolveOptions) -> Result<SolveReport> {
    let classification = classify(f)?;
    let mut diagnostics = Vec::new();
    let degree = match classification.infinity_bound {
        Some(n) => Some(n),
        None => {
            diagnostics.push(Diagnostic::Critical);
            opts.order_cap
                .inspect(|&k| diagnostics.push(Diagnostic::OrderCapApplied(k)))
        }
    };
    finish(
        f,
        Mode::Polynomial,
        classification,
        Vec::new(),
        degree,
        diagnostics,
        opts,
    )
}

pub fn rational_solutions(f: &DiffPoly, opts: &SolveOptions) -> Result<SolveReport> {
    let classification = classify(f)?;
    let mut diagnostics = Vec::new();
    if !classification.maximally_comparable {
        diagnostics.push(Diagnostic::NotMaximallyComparable);
        return finish(
            f,
            Mode::Rational,
            classification,
            Vec::new(),
            None,
            diagnostics,
            opts,
        );
    }
    let mut cap_used = false;
    let mut poles = Vec::new();
    let mut blocked = false;
    for cand in &classification.pole_candidates {
        let order = match cand.order_bound {
            Some(b) => Some(b),
            None => {
                diagnostics.push(Diagnostic::ZeroIndicialAtFactor(cand.factor.clone()));
                cap_used |= opts.order_cap.is_some();
                opts.order_cap
            }
        };
        match order {
            Some(r) => poles.push(PoleTerm {
                factor: cand.factor.clone(),
                order: r,
            }),
            None => blocked = true,
        }
    }
    let degree = match classification.infinity_bound {
        Some(n) => Some(n),
        None => {
            diagnostics.push(Diagnostic::ZeroIndicialAtInfinity);
            cap_used |= opts.order_cap.is_some();
            opts.order_cap
        }
    };
    if cap_used {
        diagnostics.push(Diagnostic::OrderCapApplied(opts.order_cap.unwrap()));
    }
    let degree = if blocked { None } else { degree };
    finish(
        f,
        Mode::Rational,
        classification,
        poles,
        degree,
        diagnostics,
        opts,
    )
}

fn finish(
    f: &DiffPoly,
    mode: Mode,
    classification: Classification,
    poles: Vec<PoleTerm>,
    degree: Option<u64>,
    mut diagnostics: Vec<Diagnostic>,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    let mut bounds = Vec::new();
    let mut families = Vec::new();
    if let Some(n) = degree {
        for p in &poles {
            check_bound(p.order, opts)?;
            bounds.push((Point::Factor(p.factor.clone()), p.order));
        }
        bounds.push((Point::Infinity, check_bound(n, opts)?));
        let ansatz = Ansatz {
            pole_terms: poles.into_iter().filter(|p| p.order > 0).collect(),
            degree: n,
        };
        families = solve_with_ansatz(f, &ansatz, opts)?;
        let constrained = families.iter().filter(|fam| !fam.is_explicit()).count();
        if constrained > 0 {
            diagnostics.push(Diagnostic::ConstrainedBranches(constrained));
        }
    }
    let complete = degree.is_some() && !diagnostics.iter().any(Diagnostic::is_structural);
    Ok(SolveReport {
        mode,
        classification,
        bounds,
        families,
        diagnostics,
        complete,
    })
}

/// Solves with an explicitly sized ansatz; every family is verified.
pub fn solve_with_ansatz(
    f: &DiffPoly,
    ansatz: &Ansatz,
    opts: &SolveOptions,
) -> Result<Vec<SolutionFamily>> {
    let n = ansatz.unknown_count();
    if n > opts.max_unknowns {
        return Err(Error::Cap(CapKind::AnsatzUnknowns {
            count: n,
            cap: opts.max_unknowns,
        }));
    }
    let gens = extract_system(f, ansatz);
    let order: Vec<usize> = (0..n).collect();
    let outcome = solve_system_with_budget(&gens, &order, opts.groebner_budget)?;
    let mut out = Vec::new();
    for fam in outcome.all() {
        let mut sol = SolutionFamily::new(
            ansatz.clone(),
            fam.values.clone(),
            fam.params.clone(),
            fam.constraints.clone(),
        );
        if !sol.verify(f)? {
            return Err(Error::VerificationFailed(sol.render()));
        }
        sol.verified = true;
        out.push(sol);
    }
    prune(out)
}

/// Drops repeated families and parameter-free solutions that another family
/// already reaches with rational parameters.
fn prune(families: Vec<SolutionFamily>) -> Result<Vec<SolutionFamily>> {
    let mut seen = BTreeSet::new();
    let unique: Vec<SolutionFamily> = families
        .into_iter()
        .filter(|fam| seen.insert((fam.render(), fam.constraint_strings())))
        .collect();
    let mut out = Vec::new();
    for (i, fam) in unique.iter().enumerate() {
        if fam.is_explicit() && fam.parameter_names().is_empty() {
            let z = fam
                .expr()
                .specialize(&vec![Rat::zero(); fam.values().len()]);
            let mut covered = false;
            for (j, other) in unique.iter().enumerate() {
                if j != i && !other.parameter_names().is_empty() && other.covers_rational(&z)? {
                    covered = true;
                    break;
                }
            }
            if covered {
                continue;
            }
        }
        out.push(fam.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::tests::{dp, euler, kamke, section_four};
    use crate::arith::{rat, RFunc};

    fn rendered(r: &SolveReport) -> Vec<String> {
        r.families.iter().map(SolutionFamily::render).collect()
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(poly_degree_bound(&kamke()).unwrap(), 1);
        assert_eq!(
            poly_degree_bound(&dp(&[(&[0, 0, 1], &[1]), (&[1, 0, 0], &[0, -1])])).unwrap(),
            0
        );
        assert_eq!(poly_degree_bound(&dp(&[(&[0, 0, 1], &[1])])).unwrap(), 1);
        let critical = dp(&[
            (&[1, 0, 1], &[0, 1]),
            (&[0, 2, 0], &[0, -1]),
            (&[1, 1, 0], &[1]),
        ]);
        assert_eq!(poly_degree_bound(&critical), Err(Error::CriticalEquation));
    }

    #[test]
    fn kamke_polynomial_solutions() {
        let r = polynomial_solutions(&kamke(), &SolveOptions::default()).unwrap();
        assert!(r.complete);
        let mut got = rendered(&r);
        got.sort();
        assert_eq!(got, vec!["-x + t1", "t1", "x + t1"]);
        assert!(r
            .families
            .iter()
            .all(|f| f.verified && f.parameter_names() == ["t1"]));
    }

    #[test]
    fn exponential_equation_has_only_zero() {
        let f = dp(&[(&[0, 1], &[1]), (&[1, 0], &[-1])]);
        let r = polynomial_solutions(&f, &SolveOptions::default()).unwrap();
        assert_eq!(rendered(&r), vec!["0"]);
    }

    #[test]
    fn critical_equation_is_refused() {
        let f = dp(&[
            (&[1, 0, 1], &[0, 1]),
            (&[0, 2, 0], &[0, -1]),
            (&[1, 1, 0], &[1]),
        ]);
        let r = polynomial_solutions(&f, &SolveOptions::default()).unwrap();
        assert!(!r.complete);
        assert_eq!(r.diagnostics, vec![Diagnostic::Critical]);
        assert!(r.families.is_empty());
    }

    #[test]
    fn worked_example_rational_solutions() {
        let r = rational_solutions(&section_four(), &SolveOptions::default()).unwrap();
        assert!(r.complete, "{:?}", r.diagnostics);
        assert_eq!(rendered(&r), vec!["t1*x", "1/(x - 1) + t1*x"]);
    }

    #[test]
    fn euler_rational_solutions() {
        let r = rational_solutions(&euler(), &SolveOptions::default()).unwrap();
        assert_eq!(rendered(&r), vec!["t1/x + t2*x"]);
        let fam = &r.families[0];
        let z0 = RFunc::new(UPoly::from_ints(&[3, 0, 2]), UPoly::x()).unwrap();
        assert!(fam.specializes_to(&z0).unwrap());
        let not = RFunc::from_poly(UPoly::from_ints(&[0, 0, 1]));
        assert!(!fam.specializes_to(&not).unwrap());
    }

    #[test]
    fn not_complete_example_is_flagged() {
        let f = dp(&[
            (&[1, 0, 0, 1], &[0, 0, 0, 1]),
            (&[1, 0, 1, 0], &[0, 1]),
            (&[0, 2, 0, 0], &[0, -1]),
            (&[1, 1, 0, 0], &[1]),
        ]);
        let r = rational_solutions(&f, &SolveOptions::default()).unwrap();
        assert!(!r.complete);
        assert_eq!(
            r.diagnostics[0],
            Diagnostic::ZeroIndicialAtFactor(UPoly::x())
        );
        assert!(r.families.is_empty());
        let capped = rational_solutions(
            &f,
            &SolveOptions {
                order_cap: Some(1),
                ..SolveOptions::default()
            },
        )
        .unwrap();
        assert!(!capped.complete);
        assert!(capped.diagnostics.contains(&Diagnostic::OrderCapApplied(1)));
        assert!(capped.families.iter().all(|fam| fam.verified));
    }

    #[test]
    fn verify_rejects_non_solutions() {
        let f = dp(&[(&[0, 1], &[1]), (&[1, 0], &[-1])]);
        let a = Ansatz::polynomial(1);
        let n = a.unknown_count();
        let x = SolutionFamily::new(
            a,
            vec![
                crate::algebra::MPoly::zero(n),
                crate::algebra::MPoly::constant(n, rat(1)),
            ],
            vec![],
            vec![],
        );
        assert!(!x.verify(&f).unwrap());
    }

    #[test]
    fn caps_are_enforced() {
        let opts = SolveOptions {
            max_unknowns: 1,
            ..SolveOptions::default()
        };
        assert!(matches!(
            polynomial_solutions(&kamke(), &opts),
            Err(Error::Cap(CapKind::AnsatzUnknowns { .. }))
        ));
        let opts = SolveOptions {
            max_bound: 0,
            ..SolveOptions::default()
        };
        assert!(matches!(
            polynomial_solutions(&kamke(), &opts),
            Err(Error::Cap(CapKind::Bound { .. }))
        ));
    }
}
