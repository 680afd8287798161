//! Covariant differential calculus on the h-deformed superplane, with
//! `h1·h2 = 0` throughout.
//!
//! Generators, in normal order: coordinates `x, xi`, differentials `phi, u`,
//! derivatives `dx, dxi` (with respect to `x, xi`) and `dphi, du` (with
//! respect to `phi, u`). Every relation family is expanded from an `R̂`
//! matrix; the printed relations are kept only as expected values.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    critical_words, resolve, AlgebraElement, Letter, Presentation, Strategy, Word,
};
use crate::cli::parser::parse_element;
use crate::error::{Error, Result};
use crate::presentations;
use crate::report::VerificationReport;
use crate::rmatrix::{self, GradedMatrix};
use crate::scalars::{GrassmannScalar, OddParam};

/// A family of index equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `UⁱUʲ = (R̂_{h1})^{ij}_{kl} UᵏUˡ`.
    Coords,
    /// `V̂ⁱV̂ʲ = −(R̂_{h2})^{ij}_{kl} V̂ᵏV̂ˡ`.
    Duals,
    /// `∂_j Uⁱ = δⁱ_j + R̂^{ik}_{jl} Uˡ ∂_k`.
    DerivCoord,
    /// `∂̂_j V̂ⁱ = R̂^{ik}_{jl} V̂ˡ ∂̂_k`.
    DerivDual,
    /// `Uⁱ V̂ʲ = R̂^{ij}_{kl} V̂ᵏ Uˡ`.
    Mixed,
    /// `∂_i ∂_j = R̂ ∂_k ∂_l`, index placement per [`IndexSlots`].
    DerivDeriv,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Coords,
        Family::Duals,
        Family::DerivCoord,
        Family::DerivDual,
        Family::Mixed,
        Family::DerivDeriv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Coords => "coords",
            Family::Duals => "duals",
            Family::DerivCoord => "deriv_coord",
            Family::DerivDual => "deriv_dual",
            Family::Mixed => "mixed",
            Family::DerivDeriv => "deriv_deriv",
        }
    }

    /// The relations as printed, in presentation-file syntax.
    pub fn printed(self) -> &'static [&'static str] {
        match self {
            Family::Coords => &["x*xi = xi*x + h1*x^2", "xi^2 = -h1*x*xi"],
            Family::Duals => &["phi^2 = h2*phi*u", "u*phi + phi*u = -h2*u^2"],
            Family::DerivCoord => &[
                "dx*x = 1 + x*dx + h1*x*dxi - h2*xi*dx",
                "dx*xi = xi*dx - h1*(x*dx + xi*dxi)",
                "dxi*x = x*dxi + h2*(x*dx + xi*dxi)",
                "dxi*xi = 1 - xi*dxi - h1*x*dxi + h2*xi*dx",
            ],
            Family::DerivDual => &[
                "dphi*phi = phi*dphi + h1*phi*du - h2*u*dphi",
                "dphi*u = u*dphi - h1*(phi*dphi + u*du)",
                "du*phi = phi*du + h2*(phi*dphi + u*du)",
                "du*u = -u*du - h1*phi*du + h2*u*dphi",
            ],
            Family::Mixed => &[
                "x*phi = phi*x + h2*(u*x - phi*xi)",
                "x*u = u*x + h1*phi*x + h2*u*xi",
                "xi*phi = phi*xi - h1*phi*x + h2*u*xi",
                "xi*u = -u*xi - h1*(phi*xi + u*x)",
            ],
            Family::DerivDeriv => &["dx*dxi = dxi*dx - h2*dx^2", "dxi^2 = h2*dxi*dx"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Placement of the four summation indices `(i, j, k, l)` in the slots
/// `R̂^{r₁r₂}_{c₁c₂}` of the derivative–derivative equation: entry `n` says
/// which of `i, j, k, l` (0..4) sits in slot `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexSlots(pub [usize; 4]);

impl IndexSlots {
    /// `∂_i∂_j = R̂^{lk}_{ji} ∂_k∂_l`, the pattern as printed.
    pub const AS_PRINTED: IndexSlots = IndexSlots([3, 2, 1, 0]);
    /// `∂_i∂_j = R̂^{kl}_{ij} ∂_k∂_l`: both index pairs in natural order.
    pub const NATURAL: IndexSlots = IndexSlots([2, 3, 0, 1]);

    /// All 24 placements.
    pub fn all() -> Vec<IndexSlots> {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let s = [a, b, c, d];
                        let mut seen = [false; 4];
                        s.iter().for_each(|&x| seen[x] = true);
                        if seen.iter().all(|&x| x) {
                            out.push(IndexSlots(s));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IndexSlots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = ['i', 'j', 'k', 'l'];
        let s = self.0;
        write!(f, "R^{}{}_{}{}", n[s[0]], n[s[1]], n[s[2]], n[s[3]])
    }
}

/// The index convention used for [`Family::DerivDeriv`]. The pattern as
/// printed yields `+h2` in the `dx*dxi` relation where the printed result
/// has `−h2`; reversing both index pairs reproduces the printed result.
/// [`deriv_deriv_conventions`] re-derives this.
pub const DERIV_DERIV_SLOTS: IndexSlots = IndexSlots::NATURAL;

const COORDS: [&str; 2] = ["x", "xi"];
const DIFFS: [&str; 2] = ["phi", "u"];
const DERIVS: [&str; 2] = ["dx", "dxi"];
const DUAL_DERIVS: [&str; 2] = ["dphi", "du"];

/// Generator order `x < xi < phi < u < dx < dxi < dphi < du`.
pub fn generators() -> Vec<Letter> {
    COORDS
        .iter()
        .chain(&DIFFS)
        .chain(&DERIVS)
        .chain(&DUAL_DERIVS)
        .map(|n| Letter::named(n))
        .collect()
}

fn h1h2_zero(m: GradedMatrix) -> GradedMatrix {
    m.map_scalars(GrassmannScalar::without_h1h2)
}

/// `R̂_{h1,h2} = P·R_{h1,h2}` with `h1h2 = 0`.
pub fn rhat() -> GradedMatrix {
    h1h2_zero(rmatrix::rhat(&rmatrix::r_h1h2()).expect("4x4"))
}

fn entry(m: &GradedMatrix, r: (usize, usize), c: (usize, usize)) -> GrassmannScalar {
    m.get(2 * r.0 + r.1, 2 * c.0 + c.1)
        .as_scalar()
        .expect("scalar R-matrix")
}

fn pair(a: &str, b: &str) -> Word {
    Word(vec![Letter::named(a), Letter::named(b)])
}

fn idx4() -> impl Iterator<Item = (usize, usize)> {
    (0..4).map(|n| (n >> 1, n & 1))
}

/// `lhs − Σ_{k,l} coeff(k,l)·word(k,l)`, with `constant` added to the right side.
fn relation(
    lhs: Word,
    constant: i64,
    coeff: impl Fn(usize, usize) -> GrassmannScalar,
    word: impl Fn(usize, usize) -> Word,
) -> AlgebraElement {
    let mut e = AlgebraElement::word(lhs).sub(&AlgebraElement::int(constant));
    for (k, l) in idx4() {
        e = e.sub(&AlgebraElement::term(coeff(k, l), word(k, l)));
    }
    e
}

/// Expands a family with the default matrices and conventions.
pub fn expand_index_equation(family: Family) -> Vec<AlgebraElement> {
    expand_with(family, &rhat(), DERIV_DERIV_SLOTS)
}

/// Expands a family with an explicit `R̂` and derivative index placement.
/// `coords` and `duals` always use `R̂_{h1}` and `−R̂_{h2}`.
pub fn expand_with(family: Family, r: &GradedMatrix, slots: IndexSlots) -> Vec<AlgebraElement> {
    let out: Vec<AlgebraElement> = match family {
        Family::Coords => {
            let m = h1h2_zero(rmatrix::rhat(&rmatrix::r_h1()).expect("4x4"));
            expand_quadratic(&m, &COORDS, false)
        }
        Family::Duals => {
            let m = h1h2_zero(rmatrix::rhat(&rmatrix::r_h2()).expect("4x4"));
            expand_quadratic(&m, &DIFFS, true)
        }
        Family::DerivCoord => expand_derivative(r, &COORDS, &DERIVS, 1, false),
        Family::DerivDual => expand_derivative(r, &DIFFS, &DUAL_DERIVS, 0, false),
        Family::Mixed => idx4()
            .map(|(i, j)| {
                relation(
                    pair(COORDS[i], DIFFS[j]),
                    0,
                    |k, l| entry(r, (i, j), (k, l)),
                    |k, l| pair(DIFFS[k], COORDS[l]),
                )
            })
            .collect(),
        Family::DerivDeriv => idx4()
            .map(|(i, j)| {
                relation(
                    pair(DERIVS[i], DERIVS[j]),
                    0,
                    |k, l| {
                        let v = [i, j, k, l];
                        let s = slots.0;
                        entry(r, (v[s[0]], v[s[1]]), (v[s[2]], v[s[3]]))
                    },
                    |k, l| pair(DERIVS[k], DERIVS[l]),
                )
            })
            .collect(),
    };
    out.into_iter().filter(|e| !e.is_zero()).collect()
}

/// `GᵢGⱼ = ±R̂^{ij}_{kl} GₖGₗ`.
fn expand_quadratic(m: &GradedMatrix, g: &[&str; 2], negate: bool) -> Vec<AlgebraElement> {
    idx4()
        .map(|(i, j)| {
            relation(
                pair(g[i], g[j]),
                0,
                |k, l| {
                    let s = entry(m, (i, j), (k, l));
                    if negate {
                        s.neg()
                    } else {
                        s
                    }
                },
                |k, l| pair(g[k], g[l]),
            )
        })
        .collect()
}

/// `∂_j Uⁱ = δ·δⁱ_j + R̂^{ik}_{jl} Uˡ ∂_k`, optionally with the sign
/// `(−1)^{j(i+k+l+1)}` on each term.
fn expand_derivative(
    r: &GradedMatrix,
    u: &[&str; 2],
    d: &[&str; 2],
    delta: i64,
    signed: bool,
) -> Vec<AlgebraElement> {
    idx4()
        .map(|(i, j)| {
            relation(
                pair(d[j], u[i]),
                if i == j { delta } else { 0 },
                |k, l| {
                    let s = entry(r, (i, k), (j, l));
                    if signed && (j * (i + k + l + 1)) % 2 == 1 {
                        s.neg()
                    } else {
                        s
                    }
                },
                |k, l| pair(u[l], d[k]),
            )
        })
        .collect()
}

/// The derivative–coordinate family with the sign `(−1)^{j(i+k+l+1)}`:
/// odd coefficients are read as standing to the right of an odd `∂_j`.
/// This flips every `h` term of the `dxi` relations.
pub fn signed_deriv_coord() -> Vec<AlgebraElement> {
    expand_derivative(&rhat(), &COORDS, &DERIVS, 1, true)
}

/// The combined system with [`signed_deriv_coord`] in place of the printed
/// derivative–coordinate relations. Diagnostic: it shows which reading of
/// the index equation is consistent with the coordinate relations.
pub fn signed_reading_report(max_degree: usize) -> Result<VerificationReport> {
    let mut rels = Vec::new();
    for f in Family::ALL {
        if f == Family::DerivCoord {
            rels.extend(signed_deriv_coord());
        } else {
            rels.extend(expand_index_equation(f));
        }
    }
    let p = Presentation::from_relations("Calc_h1h2 (signed)", generators(), &rels, true)?;
    let mut r = combined_confluence(&p, max_degree)?;
    r.identity = format!("signed derivative reading: {}", r.identity);
    let (signed, _) = oriented_pair(Family::DerivCoord, &signed_deriv_coord())?;
    let (_, printed) = oriented_pair(Family::DerivCoord, &[])?;
    for rule in signed.rules() {
        if printed.rule_for(&rule.lhs) != Some(rule) {
            r.note(format!("differs from the printed relation: {rule}"));
        }
    }
    Ok(r)
}

fn family_generators(family: Family) -> Vec<Letter> {
    let names: Vec<&str> = match family {
        Family::Coords => COORDS.to_vec(),
        Family::Duals => DIFFS.to_vec(),
        Family::DerivCoord => [COORDS, DERIVS].concat(),
        Family::DerivDual => [DIFFS, DUAL_DERIVS].concat(),
        Family::Mixed => [COORDS, DIFFS].concat(),
        Family::DerivDeriv => DERIVS.to_vec(),
    };
    names.iter().map(|n| Letter::named(n)).collect()
}

fn parse_relation(text: &str) -> Result<AlgebraElement> {
    match text.split_once('=') {
        Some((l, r)) => Ok(parse_element(l, None)?.sub(&parse_element(r, None)?)),
        None => parse_element(text, None),
    }
}

/// The printed relations of a family as elements `lhs − rhs`.
pub fn printed_relations(family: Family) -> Result<Vec<AlgebraElement>> {
    family.printed().iter().map(|t| parse_relation(t)).collect()
}

/// Both relation sets brought to reduced echelon form over the family's
/// generators.
pub fn oriented_pair(
    family: Family,
    derived: &[AlgebraElement],
) -> Result<(Presentation, Presentation)> {
    let gens = family_generators(family);
    let got =
        Presentation::from_relations(format!("{family} (derived)"), gens.clone(), derived, true)?;
    let want = Presentation::from_relations(
        format!("{family} (printed)"),
        gens,
        &printed_relations(family)?,
        true,
    )?;
    Ok((got, want))
}

fn compare_rules(
    report: &mut VerificationReport,
    label: &str,
    got: &Presentation,
    want: &Presentation,
) {
    for rule in want.rules() {
        let residue = match got.rule_for(&rule.lhs) {
            Some(r) => r.rhs.sub(&rule.rhs),
            None => rule.relation(),
        };
        report.push(format!("{label}: {}", rule.lhs), residue);
    }
    for rule in got.rules() {
        if want.rule_for(&rule.lhs).is_none() {
            report.push(format!("{label}: extra {}", rule.lhs), rule.relation());
        }
    }
}

/// Derived versus printed, rule by rule after orientation.
pub fn family_report(family: Family) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(format!("{family} expands to the printed relations"));
    let (got, want) = oriented_pair(family, &expand_index_equation(family))?;
    compare_rules(&mut r, family.name(), &got, &want);
    if family == Family::DerivDual {
        r.note("dphi*phi and du*u carry no constant term, unlike dx*x and dxi*xi: the dual equation has no delta");
    }
    if family == Family::DerivDeriv {
        r.note(format!("index placement {DERIV_DERIV_SLOTS}"));
    }
    Ok(r)
}

/// Every placement of the derivative indices that lands on the printed
/// derivative relations, and whether the printed placement does.
pub fn deriv_deriv_conventions() -> Result<(Vec<IndexSlots>, bool)> {
    let r = rhat();
    let mut matching = Vec::new();
    for slots in IndexSlots::all() {
        let derived = expand_with(Family::DerivDeriv, &r, slots);
        let (got, want) = match oriented_pair(Family::DerivDeriv, &derived) {
            Ok(pair) => pair,
            Err(_) => continue,
        };
        if got.rules() == want.rules() {
            matching.push(slots);
        }
    }
    let printed = matching.contains(&IndexSlots::AS_PRINTED);
    Ok((matching, printed))
}

/// The index-convention search as a report: passes when the convention in
/// use is among the matching ones. The outcome for the printed pattern is a
/// note.
pub fn deriv_deriv_convention_report() -> Result<VerificationReport> {
    let mut r = VerificationReport::new("derivative index convention");
    let (matching, printed) = deriv_deriv_conventions()?;
    let names: Vec<String> = matching.iter().map(|s| s.to_string()).collect();
    r.note(format!(
        "placements reproducing the printed relations: {}",
        names.join(", ")
    ));
    if !printed {
        let derived = expand_with(Family::DerivDeriv, &rhat(), IndexSlots::AS_PRINTED);
        let (got, _) = oriented_pair(Family::DerivDeriv, &derived)?;
        let rules: Vec<String> = got.rules().iter().map(|x| x.to_string()).collect();
        r.note(format!(
            "printed placement {} gives {} instead",
            IndexSlots::AS_PRINTED,
            rules.join("; ")
        ));
    }
    let ok = if matching.contains(&DERIV_DERIV_SLOTS) {
        AlgebraElement::zero()
    } else {
        AlgebraElement::one()
    };
    r.push(
        format!("{DERIV_DERIV_SLOTS} reproduces the printed relations"),
        ok,
    );
    Ok(r)
}

/// All families combined, `h1h2 = 0`.
pub fn calculus_presentation() -> Result<Presentation> {
    let mut rels = Vec::new();
    for f in Family::ALL {
        rels.extend(expand_index_equation(f));
    }
    Presentation::from_relations("Calc_h1h2", generators(), &rels, true)
}

/// Sectors with no printed relation between them.
fn unconstrained(w: &Word) -> bool {
    let has = |names: &[&str]| {
        w.letters()
            .iter()
            .any(|l| names.contains(&l.name().as_str()))
    };
    let derivs = has(&DERIVS);
    let dual_derivs = has(&DUAL_DERIVS);
    let coords = has(&COORDS);
    let diffs = has(&DIFFS);
    (derivs && (diffs || dual_derivs)) || (dual_derivs && coords)
}

/// Overlap resolution for the combined system, split into ambiguities
/// fixed by the printed relations (must resolve) and ambiguities that mix
/// sectors the relations leave unrelated (recorded only).
pub fn combined_confluence(p: &Presentation, max_degree: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(format!(
        "confluence of {} up to degree {max_degree}",
        p.name()
    ));
    let mut open = Vec::new();
    for amb in critical_words(p) {
        if amb.word.len() > max_degree {
            continue;
        }
        let diff = resolve(p, &amb)?;
        if unconstrained(&amb.word) {
            if !diff.is_zero() {
                open.push(format!("{} -> {diff}", amb.word));
            }
            continue;
        }
        r.push(amb.word.to_string(), diff);
    }
    if open.is_empty() {
        r.note("no unconstrained overlap leaves a residue");
    }
    for o in open {
        r.note(format!("unconstrained: {o}"));
    }
    Ok(r)
}

/// `∂·(relation)` reduced with leftmost-first and rightmost-first rewriting.
pub fn leibniz_report(p: &Presentation) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("derivatives through coordinate relations");
    for d in DERIVS {
        for rel in presentations::a_h1().relations() {
            let e = AlgebraElement::named(d).mul(&rel);
            for (label, s) in [
                ("leftmost", Strategy::Leftmost),
                ("rightmost", Strategy::Rightmost),
            ] {
                r.push(format!("{d}*({rel}) {label}"), p.normal_form_with(&e, s)?);
            }
        }
    }
    Ok(r)
}

/// Words in `x, xi` reduce in the combined system exactly as in the
/// coordinate algebra alone.
pub fn conservativity_report(p: &Presentation, max_degree: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("coordinate subalgebra is unchanged");
    let coords = presentations::a_h1();
    for w in crate::algebra::all_words(coords.generators(), max_degree) {
        let e = AlgebraElement::word(w.clone());
        r.push(
            w.to_string(),
            p.normal_form(&e)?.sub(&coords.normal_form(&e)?),
        );
    }
    Ok(r)
}

/// `h1 = h2 = 0` gives the undeformed superplane calculus.
pub fn classical_report(p: &Presentation) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("undeformed limit");
    let c = p.specialize("classical", |s| s.kill(OddParam::H1).kill(OddParam::H2))?;
    for text in [
        "dx*x - (1 + x*dx)",
        "dxi*xi - (1 - xi*dxi)",
        "dx*xi - xi*dx",
        "dxi*x - x*dxi",
        "dxi*dx - dx*dxi",
        "dxi^2",
        "xi*x - x*xi",
        "xi^2",
    ] {
        r.push(text, c.normal_form(&parse_element(text, None)?)?);
    }
    Ok(r)
}

/// Each coordinate-type family also follows from `R̂_{h1,h2}`.
pub fn single_matrix_report() -> Result<VerificationReport> {
    let mut r = VerificationReport::new("coordinate families from the two-parameter matrix");
    let m = rhat();
    let quad = [
        (Family::Coords, expand_quadratic(&m, &COORDS, false)),
        (Family::Duals, expand_quadratic(&m, &DIFFS, true)),
    ];
    for (family, rels) in quad {
        let rels: Vec<_> = rels.into_iter().filter(|e| !e.is_zero()).collect();
        let gens = family_generators(family);
        let got = Presentation::from_relations(family.name(), gens.clone(), &rels, true)?;
        let want =
            Presentation::from_relations(family.name(), gens, &printed_relations(family)?, true)?;
        for (label, a, b) in [
            ("derived in printed", &rels, &want),
            ("printed in derived", &want.relations(), &got),
        ] {
            for rel in a.iter() {
                r.push(format!("{family} {label}: {rel}"), b.normal_form(rel)?);
            }
        }
    }
    Ok(r)
}

/// Every rule of the combined system is parity homogeneous.
pub fn parity_report(p: &Presentation) -> VerificationReport {
    let mut r = VerificationReport::new("calculus rules are homogeneous");
    for rule in p.rules() {
        let ok = rule.relation().parity().is_some() || rule.relation().is_zero();
        r.push(
            rule.lhs.to_string(),
            if ok {
                AlgebraElement::zero()
            } else {
                rule.relation()
            },
        );
    }
    r
}

/// The whole calculus battery.
pub fn calculus_consistency(max_degree: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for f in Family::ALL {
        out.push(family_report(f)?);
    }
    out.push(deriv_deriv_convention_report()?);
    out.push(single_matrix_report()?);
    let p = calculus_presentation()?;
    out.push(parity_report(&p));
    out.push(combined_confluence(&p, max_degree)?);
    out.push(leibniz_report(&p)?);
    out.push(signed_reading_report(max_degree)?);
    out.push(conservativity_report(&p, max_degree.max(3))?);
    out.push(classical_report(&p)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!(matches!(
            "nope".parse::<Family>(),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn twenty_four_placements() {
        assert_eq!(IndexSlots::all().len(), 24);
    }

    #[test]
    fn dx_x_has_unit_term() {
        let rels = expand_index_equation(Family::DerivCoord);
        let want = parse_relation("dx*x = 1 + x*dx + h1*x*dxi - h2*xi*dx").unwrap();
        assert!(rels.contains(&want));
    }
}
