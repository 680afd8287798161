//! Declarative presentation files and matrix literals.
//!
//! ```text
//! # comment
//! presentation A_h1
//! generators x:even xi:odd
//! flags assume_h1h2_zero
//! relation xi*x = x*xi - h1*x^2
//! rule xi^2 -> -h1*x*xi
//! ```
//!
//! `relation` lines are oriented automatically, `rule` lines are taken as
//! written. Generator order on the `generators` line is the normal order.

use std::fmt::Write as _;

use crate::algebra::{AlgebraElement, Letter, Presentation, Rule, Word};
use crate::error::{Error, Result};
use crate::rmatrix::GradedMatrix;
use crate::Parity;

use super::parser::{parse, parse_element, Ast};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn with_line(line: usize, e: Error) -> Error {
    match e {
        Error::Syntax { offset, expected } => format_err(
            line,
            format!(
                "syntax error at byte {offset}: expected {}",
                expected.join(" or ")
            ),
        ),
        other => format_err(line, other.to_string()),
    }
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name: Option<String> = None;
    let mut generators: Vec<Letter> = Vec::new();
    let mut flag = false;
    let mut rules: Vec<Rule> = Vec::new();
    let mut relations: Vec<AlgebraElement> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match keyword {
            "presentation" => {
                if rest.is_empty() {
                    return Err(format_err(line, "missing presentation name"));
                }
                name = Some(rest.to_string());
            }
            "generators" => {
                for decl in rest.split_whitespace() {
                    let (g, parity) = decl.split_once(':').ok_or_else(|| {
                        format_err(line, format!("expected name:parity, got `{decl}`"))
                    })?;
                    let parity = match parity {
                        "even" => Parity::Even,
                        "odd" => Parity::Odd,
                        other => return Err(format_err(line, format!("unknown parity `{other}`"))),
                    };
                    let l = Letter::intern(g, parity).map_err(|e| with_line(line, e))?;
                    generators.push(l);
                }
            }
            "flags" => {
                for f in rest.split_whitespace() {
                    match f {
                        "assume_h1h2_zero" => flag = true,
                        other => return Err(format_err(line, format!("unknown flag `{other}`"))),
                    }
                }
            }
            "relation" => {
                let rel = match rest.split_once('=') {
                    Some((l, r)) => {
                        let lhs =
                            parse_element(l, Some(&generators)).map_err(|e| with_line(line, e))?;
                        let rhs =
                            parse_element(r, Some(&generators)).map_err(|e| with_line(line, e))?;
                        lhs.sub(&rhs)
                    }
                    None => {
                        parse_element(rest, Some(&generators)).map_err(|e| with_line(line, e))?
                    }
                };
                relations.push(rel);
            }
            "rule" => {
                let (l, r) = rest
                    .split_once("->")
                    .ok_or_else(|| format_err(line, "rule needs `lhs -> rhs`"))?;
                let lhs = parse_element(l, Some(&generators)).map_err(|e| with_line(line, e))?;
                let word = match lhs.terms().next() {
                    Some((w, s)) if lhs.len() == 1 && s.is_one() => w.clone(),
                    _ => {
                        return Err(format_err(
                            line,
                            "rule left-hand side must be a single word",
                        ))
                    }
                };
                let rhs = parse_element(r, Some(&generators)).map_err(|e| with_line(line, e))?;
                rules.push(Rule::new(word, rhs));
            }
            other => return Err(format_err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| format_err(0, "missing `presentation` line"))?;
    if !relations.is_empty() {
        let mut all = relations;
        all.extend(rules.iter().map(Rule::relation));
        return Presentation::from_relations(name, generators, &all, flag);
    }
    Presentation::new(name, generators, rules, flag)
}

/// Renders a presentation as a file that [`parse_presentation`] reads back
/// to the same rules.
pub fn export_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "presentation {}", p.name());
    let gens: Vec<String> = p
        .generators()
        .iter()
        .map(|g| format!("{}:{}", g.name(), g.parity()))
        .collect();
    let _ = writeln!(out, "generators {}", gens.join(" "));
    if p.assume_h1h2_zero() {
        let _ = writeln!(out, "flags assume_h1h2_zero");
    }
    for r in p.rules() {
        let _ = writeln!(out, "rule {r}");
    }
    out
}

/// Parses a matrix literal such as `[[1, 0], [h1/(p-1), 1]]`. Rows are
/// graded `even, odd, even, ...`.
pub fn parse_matrix(text: &str) -> Result<GradedMatrix> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Syntax {
            offset: 0,
            expected: vec!["'['".into()],
        })?;
    let mut rows: Vec<Vec<AlgebraElement>> = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut cells: Vec<AlgebraElement> = Vec::new();
    let offset0 = text.find('[').unwrap_or(0) + 1;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => {
                depth += 1;
                if depth == 1 {
                    start = i + 1;
                    cells.clear();
                }
            }
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 1 => {
                cells.push(parse_cell(&inner[start..i], offset0 + start)?);
                start = i + 1;
            }
            ']' => {
                if depth == 1 {
                    cells.push(parse_cell(&inner[start..i], offset0 + start)?);
                    rows.push(std::mem::take(&mut cells));
                }
                depth = depth.saturating_sub(1);
            }
            _ => {}
        }
    }
    if rows.is_empty() {
        return Err(Error::Dimension("empty matrix literal".into()));
    }
    GradedMatrix::from_rows(rows)
}

fn parse_cell(text: &str, offset: usize) -> Result<AlgebraElement> {
    let ast: Ast = parse(text).map_err(|e| match e {
        Error::Syntax {
            offset: o,
            expected,
        } => Error::Syntax {
            offset: offset + o,
            expected,
        },
        other => other,
    })?;
    super::parser::evaluate(&ast, None)
}

/// A word from its display text, e.g. `x^2*xi`.
pub fn parse_word(text: &str) -> Result<Word> {
    let e = parse_element(text, None)?;
    let word = match e.terms().next() {
        Some((w, s)) if e.len() == 1 && s.is_one() => Some(w.clone()),
        _ => None,
    };
    word.ok_or_else(|| Error::Syntax {
        offset: 0,
        expected: vec!["a single word".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_H1: &str = "\
# h1-deformed superplane
presentation A_h1
generators x:even xi:odd
relation x*xi = xi*x + h1*x^2
relation xi^2 = -h1*x*xi
";

    #[test]
    fn orients_relations() {
        let p = parse_presentation(A_H1).unwrap();
        let xi_x = parse_word("xi*x").unwrap();
        assert_eq!(p.rule_for(&xi_x).unwrap().rhs.to_string(), "x*xi - h1*x^2");
    }

    #[test]
    fn export_round_trip() {
        let p = parse_presentation(A_H1).unwrap();
        let text = export_presentation(&p);
        let q = parse_presentation(&text).unwrap();
        assert_eq!(p.rules(), q.rules());
        assert_eq!(p.generators(), q.generators());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "presentation P\ngenerators x:even\nrelation x*\n";
        match parse_presentation(bad) {
            Err(Error::Format { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn matrix_literal() {
        let g = parse_matrix("[[1, 0], [h1/(p-1), 1]]").unwrap();
        assert_eq!(g.dim(), 2);
        assert_eq!(g.get(1, 0).to_string(), "1/(p - 1)*h1");
    }
}
