use crate::algebra::MPoly;
use crate::arith::UPoly;
use crate::diffpoly::{evaluate, DiffPoly, ParamPoly, ParamRFunc};

/// Pole factor `p` with order cap `r`: blocks `a_j(x) / p^j` for `j = 1..=r`,
/// each numerator of degree below `deg p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub factor: UPoly,
    pub order: u64,
}

/// Candidate solution with unknown coefficients. Unknowns are numbered
/// block by block, pole coefficients first (`x^0` up within a block), then
/// the polynomial part `c_0, ..., c_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ansatz {
    pub pole_terms: Vec<PoleTerm>,
    pub degree: u64,
}

/// Where one unknown sits in the ansatz.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// Coefficient of `x^power` in the numerator over `factor^pole_order`.
    Pole {
        term: usize,
        pole_order: u64,
        power: usize,
    },
    Poly {
        power: usize,
    },
}

impl Ansatz {
    pub fn polynomial(degree: u64) -> Self {
        Ansatz {
            pole_terms: Vec::new(),
            degree,
        }
    }

    pub fn unknown_count(&self) -> usize {
        let poles: u64 = self
            .pole_terms
            .iter()
            .map(|p| p.order * p.factor.deg() as u64)
            .sum();
        (poles + self.degree + 1) as usize
    }

    pub fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::with_capacity(self.unknown_count());
        for (term, p) in self.pole_terms.iter().enumerate() {
            for pole_order in 1..=p.order {
                for power in 0..p.factor.deg() {
                    out.push(Slot::Pole {
                        term,
                        pole_order,
                        power,
                    });
                }
            }
        }
        for power in 0..=self.degree as usize {
            out.push(Slot::Poly { power });
        }
        out
    }

    /// `prod p_i^{r_i}`
    pub fn denominator(&self) -> UPoly {
        self.pole_terms
            .iter()
            .fold(UPoly::one(), |acc, p| &acc * &p.factor.pow(p.order as u32))
    }

    /// The `x`-polynomial multiplying each unknown once everything is put
    /// over [`Ansatz::denominator`].
    pub fn basis(&self) -> Vec<UPoly> {
        let den = self.denominator();
        self.slots()
            .into_iter()
            .map(|slot| match slot {
                Slot::Pole {
                    term,
                    pole_order,
                    power,
                } => {
                    let p = &self.pole_terms[term].factor;
                    den.exact_div(&p.pow(pole_order as u32)).shift(power)
                }
                Slot::Poly { power } => den.shift(power),
            })
            .collect()
    }

    /// The ansatz with the unknowns replaced by `values`.
    pub fn instantiate(&self, values: &[MPoly]) -> ParamRFunc {
        let nvars = values.first().map(MPoly::nvars).unwrap_or(0);
        let num = self
            .basis()
            .iter()
            .zip(values)
            .fold(ParamPoly::zero(nvars), |acc, (b, v)| {
                &acc + &ParamPoly::from_mpoly_times(v, b)
            });
        ParamRFunc::new(num, self.denominator())
    }

    pub fn expr(&self) -> ParamRFunc {
        let n = self.unknown_count();
        let values: Vec<MPoly> = (0..n).map(|i| MPoly::var(n, i)).collect();
        self.instantiate(&values)
    }
}

/// The `x`-coefficients of the numerator of `F(z)`.
pub fn extract_system(f: &DiffPoly, ansatz: &Ansatz) -> Vec<MPoly> {
    let value = evaluate(f, &ansatz.expr());
    value
        .num()
        .x_coefficients()
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect()
}
