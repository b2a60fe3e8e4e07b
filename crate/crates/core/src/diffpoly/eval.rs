use crate::arith::UPoly;

use super::param::{ParamPoly, ParamRFunc};
use super::DiffPoly;

/// `F(z)` with the unknowns of `z` kept symbolic.
///
/// Writing `z = N / B` and `R` for the squarefree part of `B`, every
/// derivative has the shape `z^(k) = N_k / (B R^k)` with
/// `N_{k+1} = N_k' R - N_k (B' R / B + k R')`, so the whole sum lives over
/// the single denominator `B^d R^M` and no intermediate gcds are needed.
pub fn evaluate(f: &DiffPoly, z: &ParamRFunc) -> ParamRFunc {
    let nvars = z.nvars();
    let b = z.den();
    let r = b.exact_div(&b.gcd(&b.derivative()));
    let w = (&b.derivative() * &r).exact_div(b);
    let r_prime = r.derivative();

    let n = f.order();
    let mut ders: Vec<ParamPoly> = vec![z.num().clone()];
    for k in 0..n {
        let nk = &ders[k];
        let shift = &w + &r_prime.scale(&crate::arith::rat(k as i64));
        let next = &nk.derivative().mul_upoly(&r) - &nk.mul_upoly(&shift);
        ders.push(next);
    }

    let d = f.total_degree();
    let m = f.terms().keys().map(|i| i.inf_norm()).max().unwrap_or(0);
    let mut powers: Vec<Vec<ParamPoly>> = ders
        .iter()
        .map(|p| vec![ParamPoly::from_upoly(nvars, UPoly::one()), p.clone()])
        .collect();
    let b_pows = pow_table(b, d);
    let r_pows = pow_table(&r, m);

    let mut num = ParamPoly::zero(nvars);
    for (i, coeff) in f.terms() {
        let mut term = ParamPoly::from_upoly(nvars, coeff * &b_pows[(d - i.norm()) as usize]);
        term = term.mul_upoly(&r_pows[(m - i.inf_norm()) as usize]);
        for (k, &e) in i.entries().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let table = &mut powers[k];
            while table.len() <= e as usize {
                let next = table.last().unwrap() * &ders[k];
                table.push(next);
            }
            term = &term * &table[e as usize];
        }
        num = &num + &term;
    }
    ParamRFunc::new(num, &b_pows[d as usize] * &r_pows[m as usize])
}

fn pow_table(p: &UPoly, max: u32) -> Vec<UPoly> {
    let mut out = vec![UPoly::one()];
    for _ in 0..max {
        out.push(out.last().unwrap() * p);
    }
    out
}
