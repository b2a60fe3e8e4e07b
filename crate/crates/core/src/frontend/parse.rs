//! Lexer and recursive-descent parser for equations such as
//! `x^2*y'' + x*y' - y = 0`, lowered straight to coefficient maps.
//!
//! ```text
//! equation := expr ("=" expr)?
//! expr     := term (("+" | "-") term)*
//! term     := unary (("*" | "/") unary)*
//! unary    := "-" unary | factor
//! factor   := base ("^" NAT)?
//! base     := NAT | "x" | yterm | "(" expr ")"
//! yterm    := "y" "'"* | "D" "(" "y" "," NAT ")"
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{RFunc, Rat, UPoly};
use crate::diffpoly::{DiffPoly, ExpVec};
use crate::error::{Error, ParseError, Result};

/// Largest derivative order and exponent accepted from text.
const MAX_SMALL: u32 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    X,
    Y,
    D,
    Prime,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eq,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>, hint: Option<&str>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
        hint: hint.map(String::from),
    }
}

fn lex(text: &str) -> std::result::Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, cl) = (line, col);
        let single = match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {
                col += 1;
                i += 1;
                continue;
            }
            '\'' | '\u{2032}' => Some(Tok::Prime),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token {
                tok,
                line: l,
                column: cl,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                tok: Tok::Nat(digits.parse().unwrap()),
                line: l,
                column: cl,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            col += i - start;
            let tok = match word.as_str() {
                "x" => Tok::X,
                "y" => Tok::Y,
                "D" => Tok::D,
                _ => {
                    return Err(err(
                        l,
                        cl,
                        format!("unknown symbol `{word}`"),
                        Some("only x, y and D(y,k) are allowed; instantiate parameters with rational values"),
                    ))
                }
            };
            out.push(Token {
                tok,
                line: l,
                column: cl,
            });
            continue;
        }
        return Err(err(l, cl, format!("unexpected character `{c}`"), None));
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

/// Sum of `coefficient * y^I` with keys trimmed of trailing zeros.
#[derive(Clone, Debug, Default)]
struct Poly(BTreeMap<Vec<u32>, RFunc>);

impl Poly {
    fn constant(c: RFunc) -> Poly {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(vec![0], c);
        }
        Poly(m)
    }

    fn y_derivative(k: usize) -> Poly {
        let mut key = vec![0; k + 1];
        key[k] = 1;
        Poly(BTreeMap::from([(key, RFunc::one())]))
    }

    fn add_term(&mut self, key: Vec<u32>, c: RFunc) {
        let entry = self.0.entry(key.clone()).or_insert_with(RFunc::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    fn add(mut self, other: Poly) -> Poly {
        for (k, c) in other.0 {
            self.add_term(k, c);
        }
        self
    }

    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|(k, c)| (k, -&c)).collect())
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (k1, c1) in &self.0 {
            for (k2, c2) in &other.0 {
                let n = k1.len().max(k2.len());
                let mut key: Vec<u32> = (0..n)
                    .map(|i| k1.get(i).unwrap_or(&0) + k2.get(i).unwrap_or(&0))
                    .collect();
                while key.len() > 1 && key.last() == Some(&0) {
                    key.pop();
                }
                out.add_term(key, c1 * c2);
            }
        }
        out
    }

    /// The value if no `y` occurs.
    fn y_free(&self) -> Option<RFunc> {
        match self.0.len() {
            0 => Some(RFunc::zero()),
            1 => self.0.get(&vec![0]).cloned(),
            _ => None,
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>, hint: Option<&str>) -> PResult<T> {
        let t = self.peek();
        Err(err(t.line, t.column, message, hint))
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<Token> {
        if self.peek().tok == tok {
            Ok(self.next())
        } else {
            self.fail(
                format!("expected {what}, found {}", describe(&self.peek().tok)),
                None,
            )
        }
    }

    fn equation(&mut self) -> PResult<Poly> {
        let lhs = self.expr()?;
        let value = if self.peek().tok == Tok::Eq {
            self.next();
            let rhs = self.expr()?;
            lhs.add(rhs.neg())
        } else {
            lhs
        };
        if self.peek().tok != Tok::End {
            return self.fail(format!("unexpected {}", describe(&self.peek().tok)), None);
        }
        Ok(value)
    }

    fn expr(&mut self) -> PResult<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    let at = self.next();
                    let rhs = self.unary()?;
                    let Some(d) = rhs.y_free() else {
                        return Err(err(
                            at.line,
                            at.column,
                            "denominator depends on y",
                            Some("only y-free denominators are allowed"),
                        ));
                    };
                    let Ok(inv) = d.recip() else {
                        return Err(err(at.line, at.column, "division by zero", None));
                    };
                    acc = acc.mul(&Poly::constant(inv));
                }
                Tok::X | Tok::Y | Tok::D | Tok::LParen | Tok::Nat(_) => {
                    return self.fail(
                        "missing operator",
                        Some("multiplication must be written with an explicit `*`"),
                    );
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<Poly> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(self.unary()?.neg());
        }
        self.factor()
    }

    fn factor(&mut self) -> PResult<Poly> {
        let is_y = matches!(self.peek().tok, Tok::Y | Tok::D);
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.peek().clone();
        match &t.tok {
            Tok::Nat(n) => {
                self.next();
                let e =
                    small(n).ok_or_else(|| err(t.line, t.column, "exponent too large", None))?;
                let mut out = Poly::constant(RFunc::one());
                for _ in 0..e {
                    out = out.mul(&base);
                }
                Ok(out)
            }
            Tok::LParen if is_y => self.fail(
                "`y^(k)` is ambiguous",
                Some("write the k-th derivative as D(y,k), or a power as y^k"),
            ),
            _ => self.fail("exponent must be a nonnegative integer literal", None),
        }
    }

    fn base(&mut self) -> PResult<Poly> {
        let t = self.next();
        match t.tok {
            Tok::Nat(n) => Ok(Poly::constant(RFunc::constant(Rat::from_integer(n)))),
            Tok::X => Ok(Poly::constant(RFunc::from_poly(UPoly::x()))),
            Tok::Y => {
                let mut k = 0;
                while self.peek().tok == Tok::Prime {
                    self.next();
                    k += 1;
                }
                Ok(Poly::y_derivative(k))
            }
            Tok::D => {
                self.expect(Tok::LParen, "`(` after D")?;
                self.expect(Tok::Y, "`y` in D(y,k)")?;
                self.expect(Tok::Comma, "`,` in D(y,k)")?;
                let nt = self.next();
                let Tok::Nat(n) = nt.tok else {
                    return Err(err(
                        nt.line,
                        nt.column,
                        "expected a derivative order in D(y,k)",
                        None,
                    ));
                };
                let k = small(&n)
                    .ok_or_else(|| err(nt.line, nt.column, "derivative order too large", None))?;
                self.expect(Tok::RParen, "`)` closing D(y,k)")?;
                Ok(Poly::y_derivative(k as usize))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Prime => Err(err(t.line, t.column, "prime must follow y", None)),
            other => Err(err(
                t.line,
                t.column,
                format!("expected an operand, found {}", describe(&other)),
                None,
            )),
        }
    }
}

fn small(n: &BigInt) -> Option<u32> {
    n.to_u32().filter(|&v| v <= MAX_SMALL)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Nat(n) => format!("number `{n}`"),
        Tok::X => "`x`".into(),
        Tok::Y => "`y`".into(),
        Tok::D => "`D`".into(),
        Tok::Prime => "`'`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Eq => "`=`".into(),
        Tok::End => "end of input".into(),
    }
}

/// The raw coefficient map `I -> f_I` of `lhs - rhs`, before normalization.
pub fn parse_raw(text: &str) -> Result<Vec<(ExpVec, RFunc)>> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let poly = p.equation()?;
    Ok(poly
        .0
        .into_iter()
        .map(|(k, c)| (ExpVec::new(k), c))
        .collect())
}

/// Parses and normalizes an equation.
pub fn parse_equation(text: &str) -> Result<DiffPoly> {
    let raw = parse_raw(text)?;
    DiffPoly::normalize(raw)
}

/// Parses a polynomial in `x` alone, e.g. `x^2 + 1`.
pub fn parse_upoly(text: &str) -> Result<UPoly> {
    let raw = parse_raw(text)?;
    let mut out = UPoly::zero();
    for (k, c) in raw {
        if !k.is_zero() || !c.is_polynomial() {
            return Err(Error::InvalidArgument(format!(
                "`{text}` is not a polynomial in x"
            )));
        }
        out = &out + c.num();
    }
    Ok(out)
}

/// Parses a rational number such as `-3/4`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let p = parse_upoly(text)?;
    if !p.is_constant() {
        return Err(Error::InvalidArgument(format!(
            "`{text}` is not a rational number"
        )));
    }
    Ok(if p.is_zero() { Rat::zero() } else { p.coeff(0) })
}
