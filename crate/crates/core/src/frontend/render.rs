use num_traits::Signed;

use crate::arith::UPoly;
use crate::diffpoly::{DiffPoly, ExpVec};

/// `y`, `y'`, `y''`, `y'''`, then `D(y,k)`.
pub fn derivative_name(k: usize) -> String {
    if k <= 3 {
        format!("y{}", "'".repeat(k))
    } else {
        format!("D(y,{k})")
    }
}

/// `y*y'^2*D(y,4)`; empty for the zero vector.
pub fn monomial_string(i: &ExpVec) -> String {
    i.entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| {
            if e == 1 {
                derivative_name(k)
            } else {
                format!("{}^{e}", derivative_name(k))
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Text form accepted back by the parser, largest exponent first:
/// `x^2*y'' + x*y' - y`.
pub fn render_diffpoly(f: &DiffPoly) -> String {
    let mut out = String::new();
    for (i, c) in f.terms().iter().rev() {
        let negative = c.leading().is_negative();
        let c = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term_string(&c, i));
    }
    out
}

fn term_string(c: &UPoly, i: &ExpVec) -> String {
    let mono = monomial_string(i);
    let coeff = c.fmt_var("x");
    if mono.is_empty() {
        return if c.term_count() > 1 {
            format!("({coeff})")
        } else {
            coeff
        };
    }
    if c.is_one() {
        mono
    } else if c.term_count() > 1 {
        format!("({coeff})*{mono}")
    } else if c.is_constant() && (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{coeff}*{mono}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_equation;

    #[test]
    fn renders_examples() {
        let f = parse_equation("x^2*y'' + x*y' - y = 0").unwrap();
        assert_eq!(render_diffpoly(&f), "x^2*y'' + x*y' - y");
        let g = parse_equation("x*y*y'' - x*y'^2 + y*y'").unwrap();
        assert_eq!(render_diffpoly(&g), "x*y*y'' - x*y'^2 + y*y'");
        let h = parse_equation("(x^2 - 1)*D(y,5)^2 - 1/2*y + 3*x").unwrap();
        assert_eq!(render_diffpoly(&h), "(2*x^2 - 2)*D(y,5)^2 - y + 6*x");
        assert_eq!(parse_equation(&render_diffpoly(&h)).unwrap(), h);
    }
}
