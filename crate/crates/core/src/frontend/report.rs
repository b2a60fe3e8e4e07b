use std::fmt::Write;

use crate::analysis::{Classification, IndicialData};
use crate::arith::fmt_rat;
use crate::diffpoly::{DiffPoly, ExpVec};
use crate::engine::{Mode, SolveReport};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exps<'a>(it: impl Iterator<Item = &'a ExpVec>) -> String {
    it.map(|i| format!("{i:?}")).collect::<Vec<_>>().join(" ")
}

pub fn render_classification(c: &Classification) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "order: {}", c.order);
    let _ = writeln!(s, "total degree: {}", c.total_degree);
    let _ = writeln!(s, "noncritical: {}", yes_no(c.noncritical));
    let _ = writeln!(
        s,
        "indicial polynomial at infinity: {}",
        c.infinity.indicial
    );
    match c.infinity_bound {
        Some(b) => {
            let _ = writeln!(s, "degree bound at infinity: {b}");
        }
        None => {
            let _ = writeln!(s, "degree bound at infinity: none");
        }
    }
    let _ = writeln!(
        s,
        "maximally comparable: {}",
        yes_no(c.maximally_comparable)
    );
    if let (Some(g), Some(h)) = (&c.greatest, &c.highest_coefficient) {
        let _ = writeln!(s, "greatest exponent: {g:?}");
        let _ = writeln!(s, "highest coefficient: {h}");
    }
    if let Some(complete) = c.completely {
        let _ = writeln!(s, "completely maximally comparable: {}", yes_no(complete));
    }
    let _ = writeln!(s, "D(F) totally ordered: {}", yes_no(c.d_totally_ordered));
    if !c.pole_candidates.is_empty() {
        let _ = writeln!(s, "pole candidates:");
        for p in &c.pole_candidates {
            let bound = p
                .order_bound
                .map_or("none (indicial polynomial vanishes)".to_string(), |b| {
                    b.to_string()
                });
            let _ = writeln!(
                s,
                "  {}: indicial {}, order bound {bound}",
                p.factor, p.data.indicial
            );
        }
    }
    s
}

pub fn render_analysis(f: &DiffPoly, data: &IndicialData) -> String {
    let sup = f.supports();
    let mut s = String::new();
    let _ = writeln!(s, "place: {}", data.point);
    let _ = writeln!(s, "E(F): {}", exps(sup.e.iter().rev()));
    let _ = writeln!(s, "d(F): {}", sup.d);
    let _ = writeln!(s, "D(F): {}", exps(sup.top.iter().rev()));
    let _ = writeln!(s, "m: {}", data.m);
    let _ = writeln!(s, "M: {}", exps(data.big_m.iter().rev()));
    let _ = writeln!(s, "indicial polynomial: {}", data.indicial);
    let _ = writeln!(
        s,
        "b: {}",
        data.b.as_ref().map_or("none".to_string(), fmt_rat)
    );
    match data.order_bound() {
        Ok(b) => {
            let _ = writeln!(s, "order bound: {b}");
        }
        Err(_) => {
            let _ = writeln!(s, "order bound: none (indicial polynomial vanishes)");
        }
    }
    s
}

pub fn render_report(r: &SolveReport) -> String {
    let mut s = String::new();
    let mode = match r.mode {
        Mode::Polynomial => "polynomial",
        Mode::Rational => "rational",
    };
    let _ = writeln!(s, "mode: {mode}");
    if !r.bounds.is_empty() {
        let bounds: Vec<String> = r.bounds.iter().map(|(p, b)| format!("{p}: {b}")).collect();
        let _ = writeln!(s, "bounds: {}", bounds.join(", "));
    }
    let _ = writeln!(s, "families:");
    if r.families.is_empty() {
        let _ = writeln!(s, "  (none)");
    }
    for f in &r.families {
        let _ = write!(s, "  {}", f.render());
        let constraints = f.constraint_strings();
        if !constraints.is_empty() {
            let _ = write!(s, "  where {} = 0", constraints.join(" = 0, "));
        }
        let _ = writeln!(s);
    }
    let diags: Vec<String> = r.diagnostics.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(
        s,
        "diagnostics: {}",
        if diags.is_empty() {
            "none".to_string()
        } else {
            diags.join(", ")
        }
    );
    let _ = writeln!(s, "complete: {}", yes_no(r.complete));
    s
}
