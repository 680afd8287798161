//! Expression grammar shared by the CLI and presentation files.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? int)?
//! atom   := ident | int | '(' expr ')'
//! ```
//!
//! `p`, `q`, `h1`, `h2` are scalars; every other identifier is a generator.
//! Unicode spellings (`ξ`, `β`, `∂ₓ`, `h₁`, ...) are accepted as aliases.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{AlgebraElement, Letter, Word};
use crate::error::{Error, Result};
use crate::scalars::GrassmannScalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Int(BigInt),
    Ident(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i32),
}

impl Ast {
    fn precedence(&self) -> u8 {
        match self {
            Ast::Add(..) | Ast::Sub(..) => 1,
            Ast::Mul(..) | Ast::Div(..) => 2,
            Ast::Neg(..) => 3,
            Ast::Pow(..) => 4,
            Ast::Int(_) | Ast::Ident(_) => 5,
        }
    }

    /// Number of summands at the top level.
    pub fn summands(&self) -> usize {
        match self {
            Ast::Add(l, _) | Ast::Sub(l, _) => l.summands() + 1,
            _ => 1,
        }
    }
}

impl fmt::Display for Ast {
    /// Minimal parenthesization that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, a: &Ast, need: bool| {
            if need {
                write!(f, "({a})")
            } else {
                write!(f, "{a}")
            }
        };
        match self {
            Ast::Int(n) => write!(f, "{n}"),
            Ast::Ident(s) => f.write_str(s),
            Ast::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, a.precedence() < 3)
            }
            Ast::Add(l, r) | Ast::Sub(l, r) | Ast::Mul(l, r) | Ast::Div(l, r) => {
                let (op, prec) = match self {
                    Ast::Add(..) => (" + ", 1),
                    Ast::Sub(..) => (" - ", 1),
                    Ast::Mul(..) => ("*", 2),
                    _ => ("/", 2),
                };
                wrap(f, l, l.precedence() < prec)?;
                f.write_str(op)?;
                wrap(f, r, r.precedence() <= prec)
            }
            Ast::Pow(b, n) => {
                wrap(f, b, b.precedence() < 5)?;
                write!(f, "^{n}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn canonical_ident(raw: &str) -> String {
    let s = match raw {
        "ξ" => "xi",
        "η" => "eta",
        "β" => "beta",
        "γ" => "gamma",
        "φ" | "ϕ" => "phi",
        "∂x" | "∂ₓ" | "∂_x" => "dx",
        "∂ξ" | "∂_ξ" | "∂xi" => "dxi",
        "∂φ" | "∂_φ" | "∂phi" => "dphi",
        "∂u" | "∂_u" => "du",
        "h₁" => "h1",
        "h₂" => "h2",
        other => other,
    };
    s.replace('′', "'")
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '′' || c == '∂'
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let n: BigInt = text[i..end].parse().expect("digits");
            out.push((i, Tok::Int(n)));
        } else if is_ident_char(c) {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if is_ident_char(d) {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((i, Tok::Ident(canonical_ident(&text[i..end]))));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            chars.next();
        } else {
            return Err(Error::Syntax {
                offset: i,
                expected: vec!["operator, identifier, number or parenthesis".into()],
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat('-') {
            Ok(Ast::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let n: i32 = n.try_into().map_err(|_| self.error(&["small exponent"]))?;
                Ok(Ast::Pow(Box::new(base), if negative { -n } else { n }))
            }
            _ => Err(self.error(&["integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Ast::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Ast::Ident(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error(&["')'"]));
                }
                Ok(e)
            }
            _ => Err(self.error(&["identifier", "number", "'('", "'-'"])),
        }
    }
}

/// Parses `text` into an AST. Errors carry the byte offset of the
/// offending token (or the end of input).
pub fn parse(text: &str) -> Result<Ast> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

fn scalar_ident(name: &str) -> Option<GrassmannScalar> {
    match name {
        "p" => Some(GrassmannScalar::p()),
        "q" => Some(GrassmannScalar::q()),
        "h1" => Some(GrassmannScalar::h1()),
        "h2" => Some(GrassmannScalar::h2()),
        _ => None,
    }
}

/// Evaluates an AST. Identifiers other than the four scalars must be
/// registered generators; if `allowed` is given they must also belong to it.
pub fn evaluate(ast: &Ast, allowed: Option<&[Letter]>) -> Result<AlgebraElement> {
    let gen = |name: &str| -> Result<Letter> {
        let l = Letter::lookup(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        if let Some(allowed) = allowed {
            if !allowed.contains(&l) {
                return Err(Error::UnknownGenerator(name.to_string()));
            }
        }
        Ok(l)
    };
    Ok(match ast {
        Ast::Int(n) => AlgebraElement::scalar(GrassmannScalar::from_rational(
            BigRational::from_integer(n.clone()),
        )),
        Ast::Ident(name) => match scalar_ident(name) {
            Some(s) => AlgebraElement::scalar(s),
            None => AlgebraElement::gen(gen(name)?),
        },
        Ast::Neg(a) => evaluate(a, allowed)?.neg(),
        Ast::Add(l, r) => evaluate(l, allowed)?.add(&evaluate(r, allowed)?),
        Ast::Sub(l, r) => evaluate(l, allowed)?.sub(&evaluate(r, allowed)?),
        Ast::Mul(l, r) => evaluate(l, allowed)?.mul(&evaluate(r, allowed)?),
        Ast::Div(l, r) => {
            let d = evaluate(r, allowed)?;
            let inv = d
                .as_scalar()
                .and_then(|s| s.inverse())
                .ok_or_else(|| Error::NotInvertible(r.to_string()))?;
            evaluate(l, allowed)?.scale_right(&inv)
        }
        Ast::Pow(b, n) => {
            let base = evaluate(b, allowed)?;
            if *n >= 0 {
                base.pow(*n as u32)
            } else if let Some(s) = base.as_scalar() {
                AlgebraElement::scalar(
                    s.pow(*n)
                        .ok_or_else(|| Error::NotInvertible(b.to_string()))?,
                )
            } else if let Ast::Ident(name) = b.as_ref() {
                // a^-1 spells the formal inverse generator `ainv`, when declared
                let inv = gen(&format!("{name}inv"))?;
                AlgebraElement::word(Word(vec![inv; n.unsigned_abs() as usize]))
            } else {
                return Err(Error::NotInvertible(b.to_string()));
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, allowed: Option<&[Letter]>) -> Result<AlgebraElement> {
    evaluate(&parse(text)?, allowed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement as E;

    #[test]
    fn three_summands() {
        let a = parse("x*xi - xi*x - h1*x^2").unwrap();
        assert_eq!(a.summands(), 3);
    }

    #[test]
    fn trailing_operator_is_reported_at_end() {
        match parse("x*") {
            Err(Error::Syntax { offset, expected }) => {
                assert_eq!(offset, 2);
                assert!(expected.iter().any(|e| e == "identifier"));
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        let a = parse("a - b - c").unwrap();
        assert_eq!(a.to_string(), "a - b - c");
        let b = parse("a - (b - c)").unwrap();
        assert_eq!(b.to_string(), "a - (b - c)");
        assert_eq!(
            parse("-x^2").unwrap(),
            Ast::Neg(Box::new(Ast::Pow(Box::new(Ast::Ident("x".into())), 2)))
        );
        assert_eq!(parse("2*x^2*y").unwrap().to_string(), "2*x^2*y");
    }

    #[test]
    fn evaluates_last_relation_without_h1h2_term() {
        let e = parse_element("a*d - d*a - (h1*beta + h2*gamma)*(a - d)", None).unwrap();
        assert_eq!(e.len(), 6);
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(
            parse_element("ξ*x", None).unwrap(),
            E::monomial(&["xi", "x"])
        );
        assert_eq!(
            parse_element("∂ₓ*x", None).unwrap(),
            E::monomial(&["dx", "x"])
        );
        assert_eq!(
            parse_element("h₁", None).unwrap(),
            E::scalar(GrassmannScalar::h1())
        );
    }

    #[test]
    fn scalar_division_and_inverse_generators() {
        let e = parse_element("(q - p^-1) + h1*h2/(p-1)", None).unwrap();
        assert!(e.as_scalar().is_some());
        assert_eq!(parse_element("d^-1", None).unwrap(), E::named("dinv"));
        assert!(parse_element("x/xi", None).is_err());
    }

    #[test]
    fn rejects_foreign_generators() {
        let allowed = [Letter::named("x"), Letter::named("xi")];
        assert!(parse_element("x*eta", Some(&allowed)).is_err());
    }
}
