//! Multivariate polynomials in the ansatz unknowns, lex Gröbner bases and
//! triangular solving of the extracted algebraic systems.

mod groebner;
mod mpoly;
mod solve;

pub use groebner::{
    buchberger, buchberger_with_budget, normal_form, s_polynomial, GroebnerBasis,
    DEFAULT_REDUCTION_BUDGET,
};
pub use mpoly::{MPoly, Monomial};
pub use solve::{solve_system, solve_system_with_budget, Family, SolveOutcome};
