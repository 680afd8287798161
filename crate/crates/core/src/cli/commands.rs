//! Text front ends for the non-suite subcommands. Each returns the text to
//! print; the binary only maps results to exit codes.

use std::fmt::Write as _;
use std::path::Path;

use crate::algebra::{Presentation, Strategy};
use crate::calculus::{self, Family};
use crate::contraction::{self, ContractionMatrix, Kronecker};
use crate::error::{Error, Result};
use crate::presentations;
use crate::scalars::Var;

use super::format::{export_presentation, parse_matrix, parse_presentation};
use super::parser::parse_element;

/// A built-in name, or a path to a presentation file.
pub fn load_presentation(name_or_path: &str) -> Result<Presentation> {
    match presentations::builtin(name_or_path) {
        Err(Error::UnknownPresentation(_)) if Path::new(name_or_path).is_file() => {
            parse_presentation(&std::fs::read_to_string(name_or_path)?)
        }
        other => other,
    }
}

/// Normal form of `expr` in a presentation.
pub fn reduce_cmd(
    expr: &str,
    presentation: &str,
    strategy: Strategy,
    assume_h1h2_zero: bool,
) -> Result<String> {
    let mut p = load_presentation(presentation)?;
    if assume_h1h2_zero {
        p = p.with_h1h2_zero()?;
    }
    let e = parse_element(expr, None)?;
    Ok(p.normal_form_with(&e, strategy)?.to_string())
}

/// `g_h1`, `g_h2`, `g_h1h2`, `I`, or a matrix literal.
pub fn contraction_matrix(spec: &str) -> Result<ContractionMatrix> {
    match spec {
        "g_h1" => Ok(ContractionMatrix::g_h1()),
        "g_h2" => Ok(ContractionMatrix::g_h2()),
        "g_h1h2" => Ok(ContractionMatrix::g_h1h2()),
        "I" => Ok(ContractionMatrix::identity()),
        literal => ContractionMatrix::new(parse_matrix(literal)?),
    }
}

/// Limit order such as `p,q`.
pub fn parse_limits(text: &str) -> Result<Vec<Var>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| match s.trim() {
            "p" => Ok(Var::P),
            "q" => Ok(Var::Q),
            other => Err(Error::Syntax {
                offset: 0,
                expected: vec![format!("p or q, got `{other}`")],
            }),
        })
        .collect()
}

/// Contracts a built-in object. Planes and `GL_pq` print oriented rules,
/// `Rpq` prints the limiting matrix.
pub fn contract_cmd(
    object: &str,
    g: Option<&str>,
    limits: Option<&str>,
    ungraded: bool,
) -> Result<String> {
    let default_g = match object {
        "A_p" => "g_h1",
        "Astar_q" | "Lambda_q" => "g_h2",
        _ => "g_h1h2",
    };
    let g = contraction_matrix(g.unwrap_or(default_g))?;
    let default_limits = match object {
        "A_p" => "p",
        "Astar_q" | "Lambda_q" => "q",
        "Rpq" => "q,p",
        _ => "p,q",
    };
    let limits = parse_limits(limits.unwrap_or(default_limits))?;
    match object {
        "Rpq" => {
            let conv = if ungraded {
                Kronecker::Ungraded
            } else {
                Kronecker::Graded
            };
            Ok(contraction::contract_rmatrix_with(&g, conv, &limits)?.to_string())
        }
        "GL_pq" => Ok(export_presentation(&contraction::contract_supergroup_with(
            &g,
            &limits,
            "contracted",
        )?)),
        plane => {
            let source = presentations::builtin(plane)?;
            Ok(export_presentation(&contraction::contract_plane(
                &source,
                &g,
                &limits,
                "contracted",
            )?))
        }
    }
}

/// Derived relations of a calculus family next to the printed ones.
pub fn expand_cmd(family: &str) -> Result<String> {
    let family: Family = family.parse()?;
    let derived = calculus::expand_index_equation(family);
    let (got, want) = calculus::oriented_pair(family, &derived)?;
    let mut out = String::new();
    let _ = writeln!(out, "# {family}: derived");
    for r in got.rules() {
        let _ = writeln!(out, "{r}");
    }
    let _ = writeln!(out, "# {family}: printed");
    for r in want.rules() {
        let _ = writeln!(out, "{r}");
    }
    let mut diff = Vec::new();
    for r in want.rules() {
        match got.rule_for(&r.lhs) {
            Some(g) if g == r => {}
            Some(g) => diff.push(format!("- {r}\n+ {g}")),
            None => diff.push(format!("- {r}")),
        }
    }
    for r in got.rules() {
        if want.rule_for(&r.lhs).is_none() {
            diff.push(format!("+ {r}"));
        }
    }
    let _ = writeln!(out, "# diff");
    if diff.is_empty() {
        let _ = writeln!(out, "(none)");
    }
    for d in diff {
        let _ = writeln!(out, "{d}");
    }
    Ok(out)
}

pub fn export_cmd(presentation: &str) -> Result<String> {
    Ok(export_presentation(&load_presentation(presentation)?))
}
