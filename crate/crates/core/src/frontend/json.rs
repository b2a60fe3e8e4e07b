use serde::{Deserialize, Serialize};

use crate::analysis::{Classification, IndicialData};
use crate::arith::fmt_rat;
use crate::diffpoly::DiffPoly;
use crate::engine::SolveReport;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleCandidateJson {
    pub factor: String,
    pub order_bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationJson {
    pub order: usize,
    pub total_degree: u32,
    pub noncritical: bool,
    pub indicial_infinity: String,
    pub maximally_comparable: bool,
    pub greatest_exponent: Option<Vec<u32>>,
    pub highest_coefficient: Option<String>,
    pub completely: Option<bool>,
    pub pole_candidates: Vec<PoleCandidateJson>,
    pub d_totally_ordered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub expr: String,
    pub parameters: Vec<String>,
    pub constraints: Vec<String>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionJson {
    pub complete: bool,
    pub families: Vec<FamilyJson>,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisJson {
    pub point: String,
    pub support: Vec<Vec<u32>>,
    pub total_degree: u32,
    pub top_support: Vec<Vec<u32>>,
    pub m: i64,
    pub m_set: Vec<Vec<u32>>,
    pub indicial: String,
    pub b: Option<String>,
    pub order_bound: Option<u64>,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        ClassificationJson {
            order: c.order,
            total_degree: c.total_degree,
            noncritical: c.noncritical,
            indicial_infinity: c.infinity.indicial.to_string(),
            maximally_comparable: c.maximally_comparable,
            greatest_exponent: c.greatest.as_ref().map(|i| i.entries().to_vec()),
            highest_coefficient: c.highest_coefficient.as_ref().map(|p| p.to_string()),
            completely: c.completely,
            pole_candidates: c
                .pole_candidates
                .iter()
                .map(|p| PoleCandidateJson {
                    factor: p.factor.to_string(),
                    order_bound: p.order_bound,
                })
                .collect(),
            d_totally_ordered: c.d_totally_ordered,
        }
    }
}

impl From<&SolveReport> for SolutionJson {
    fn from(r: &SolveReport) -> Self {
        SolutionJson {
            complete: r.complete,
            families: r
                .families
                .iter()
                .map(|f| FamilyJson {
                    expr: f.render(),
                    parameters: f.parameter_names(),
                    constraints: f.constraint_strings(),
                    verified: f.verified,
                })
                .collect(),
            diagnostics: r.diagnostics.iter().map(|d| d.to_string()).collect(),
        }
    }
}

impl AnalysisJson {
    pub fn new(f: &DiffPoly, data: &IndicialData) -> Result<Self> {
        let sup = f.supports();
        let order_bound = match data.order_bound() {
            Ok(b) => Some(b),
            Err(Error::ZeroIndicial) => None,
            Err(e) => return Err(e),
        };
        Ok(AnalysisJson {
            point: data.point.to_string(),
            support: sup.e.iter().rev().map(|i| i.entries().to_vec()).collect(),
            total_degree: sup.d,
            top_support: sup.top.iter().rev().map(|i| i.entries().to_vec()).collect(),
            m: data.m,
            m_set: data
                .big_m
                .iter()
                .rev()
                .map(|i| i.entries().to_vec())
                .collect(),
            indicial: data.indicial.to_string(),
            b: data.b.as_ref().map(fmt_rat),
            order_bound,
        })
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
