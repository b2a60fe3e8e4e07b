use crate::arith::{factor_irreducible, UPoly};
use crate::diffpoly::{DiffPoly, ExpVec};
use crate::error::{Error, Result};

use super::order::{d_totally_ordered, greatest_element};
use super::{IndicialData, Point};

/// An irreducible factor of the highest coefficient, where rational
/// solutions may have poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleCandidate {
    pub factor: UPoly,
    pub multiplicity: u32,
    pub data: IndicialData,
    /// `None` when the indicial polynomial vanishes.
    pub order_bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub order: usize,
    pub total_degree: u32,
    pub noncritical: bool,
    pub infinity: IndicialData,
    pub infinity_bound: Option<u64>,
    pub greatest: Option<ExpVec>,
    pub highest_coefficient: Option<UPoly>,
    pub maximally_comparable: bool,
    pub completely: Option<bool>,
    pub d_totally_ordered: bool,
    pub pole_candidates: Vec<PoleCandidate>,
}

fn bound_or_none(data: &IndicialData) -> Result<Option<u64>> {
    match data.order_bound() {
        Ok(b) => Ok(Some(b)),
        Err(Error::ZeroIndicial) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn classify(f: &DiffPoly) -> Result<Classification> {
    let infinity = IndicialData::compute(f, &Point::Infinity)?;
    let infinity_bound = bound_or_none(&infinity)?;
    let greatest = greatest_element(f);
    let highest_coefficient = greatest.as_ref().map(|i| f.terms()[i].clone());
    let mut pole_candidates = Vec::new();
    if let Some(h) = &highest_coefficient {
        for (p, mult) in factor_irreducible(h)?.factors {
            let data = IndicialData::compute(f, &Point::Factor(p.clone()))?;
            let order_bound = bound_or_none(&data)?;
            pole_candidates.push(PoleCandidate {
                factor: p,
                multiplicity: mult,
                data,
                order_bound,
            });
        }
    }
    let maximally_comparable = greatest.is_some();
    let completely =
        maximally_comparable.then(|| pole_candidates.iter().all(|c| !c.data.indicial.is_zero()));
    Ok(Classification {
        order: f.order(),
        total_degree: f.total_degree(),
        noncritical: !infinity.indicial.is_zero(),
        infinity,
        infinity_bound,
        greatest,
        highest_coefficient,
        maximally_comparable,
        completely,
        d_totally_ordered: d_totally_ordered(f),
        pole_candidates,
    })
}
