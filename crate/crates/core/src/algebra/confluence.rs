//! Local confluence evidence for a presentation: every overlap ambiguity of
//! two left-hand sides, and every redex of every word up to a length bound,
//! must lead to the same irreducible form.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::report::VerificationReport;

use super::element::{AlgebraElement, Word};
use super::presentation::{all_words, Presentation};

/// An ambiguity: a word with two distinct redexes `(pos, rule)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ambiguity {
    pub word: Word,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// Overlap and inclusion ambiguities between all pairs of rules.
pub fn critical_words(p: &Presentation) -> Vec<Ambiguity> {
    let mut out = BTreeSet::new();
    let rules = p.rules();
    for (i, ri) in rules.iter().enumerate() {
        for (j, rj) in rules.iter().enumerate() {
            let u = ri.lhs.letters();
            let v = rj.lhs.letters();
            // proper overlap: a nonempty proper suffix of u equals a prefix of v
            for k in 1..u.len().min(v.len()) {
                if u[u.len() - k..] == v[..k] {
                    let mut w = u.to_vec();
                    w.extend_from_slice(&v[k..]);
                    out.insert(Ambiguity {
                        word: Word(w),
                        first: (0, i),
                        second: (u.len() - k, j),
                    });
                }
            }
            // inclusion: v strictly inside u
            if i != j && v.len() < u.len() {
                for pos in 0..=u.len() - v.len() {
                    if u[pos..pos + v.len()] == *v {
                        out.insert(Ambiguity {
                            word: Word(u.to_vec()),
                            first: (0, i),
                            second: (pos, j),
                        });
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Resolves one ambiguity: the difference of the two normal forms.
pub fn resolve(p: &Presentation, amb: &Ambiguity) -> Result<AlgebraElement> {
    let left = p.normal_form(&p.rewrite_at(&amb.word, amb.first.0, amb.first.1))?;
    let right = p.normal_form(&p.rewrite_at(&amb.word, amb.second.0, amb.second.1))?;
    Ok(left.sub(&right))
}

/// Checks all critical pairs, then every word of length `≤ max_word_len`:
/// each single rewrite step followed by a normal form must agree.
pub fn confluence_check(p: &Presentation, max_word_len: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("confluence of {}", p.name()));
    for amb in critical_words(p) {
        let diff = resolve(p, &amb)?;
        report.push(amb.word.to_string(), diff);
    }
    let words = all_words(p.generators(), max_word_len.max(3));
    let mut divergent = 0usize;
    for w in words {
        let redexes = p.redexes(&w);
        if redexes.len() < 2 {
            continue;
        }
        let mut forms = Vec::with_capacity(redexes.len());
        for (pos, rule) in redexes {
            forms.push(p.normal_form(&p.rewrite_at(&w, pos, rule))?);
        }
        for f in &forms[1..] {
            let diff = forms[0].sub(f);
            if !diff.is_zero() {
                divergent += 1;
                report.push(format!("word {w}"), diff);
            }
        }
    }
    report.note(format!(
        "{} critical words; {} divergent rewrites among words of length <= {}",
        critical_words(p).len(),
        divergent,
        max_word_len.max(3)
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Letter, Rule};

    #[test]
    fn free_presentation_is_vacuously_confluent() {
        let p = Presentation::free("free", vec![Letter::named("x"), Letter::named("xi")]);
        let r = confluence_check(&p, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 0);
    }

    #[test]
    fn detects_non_confluent_system() {
        // y*x -> x and x*y -> y disagree on x*y*x: x versus x^2
        let x = Letter::named("x");
        let y = Letter::named("y");
        let rules = vec![
            Rule::new(Word(vec![y, x]), AlgebraElement::gen(x)),
            Rule::new(Word(vec![x, y]), AlgebraElement::gen(y)),
        ];
        let p = Presentation::new("bad", vec![x, y], rules, false).unwrap();
        let r = confluence_check(&p, 3).unwrap();
        assert!(!r.passed);
        assert!(r.residues.iter().any(|res| res.location == "x*y*x"));
    }
}
