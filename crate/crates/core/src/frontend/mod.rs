//! Text and JSON front end: the equation language, canonical printing and
//! report serialization.

mod json;
mod parse;
mod render;
mod report;

pub use json::{
    to_json, AnalysisJson, ClassificationJson, FamilyJson, PoleCandidateJson, SolutionJson,
};
pub use parse::{parse_equation, parse_rat, parse_raw, parse_upoly};
pub use render::{derivative_name, monomial_string, render_diffpoly};
pub use report::{render_analysis, render_classification, render_report};
