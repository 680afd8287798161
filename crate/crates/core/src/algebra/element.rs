use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::scalars::{render_coefficient, Basis, GrassmannScalar};
use crate::Parity;

use super::letters::Letter;

/// A monomial in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn parity(&self) -> Parity {
        parity_of(&self.0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

pub(crate) fn parity_of(letters: &[Letter]) -> Parity {
    Parity::from_bit(letters.iter().filter(|l| l.parity().is_odd()).count() % 2 == 1)
}

impl Ord for Word {
    /// Length first, then lexicographic by interned id.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// `x*xi`, `x^2*xi`; the unit word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let name = self.0[i].name();
            if j - i == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Finite sum of `scalar · word` with scalars written on the left.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, GrassmannScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::scalar(GrassmannScalar::one())
    }

    pub fn scalar(s: GrassmannScalar) -> Self {
        AlgebraElement::term(s, Word::unit())
    }

    pub fn int(n: i64) -> Self {
        AlgebraElement::scalar(GrassmannScalar::from_int(n))
    }

    pub fn word(w: Word) -> Self {
        AlgebraElement::term(GrassmannScalar::one(), w)
    }

    pub fn gen(l: Letter) -> Self {
        AlgebraElement::word(Word::letter(l))
    }

    /// Generator by name; panics if unregistered. Meant for built-ins.
    pub fn named(name: &str) -> Self {
        AlgebraElement::gen(Letter::named(name))
    }

    /// Product of named generators, e.g. `monomial(&["a", "beta"])`.
    pub fn monomial(names: &[&str]) -> Self {
        AlgebraElement::word(Word(names.iter().map(|n| Letter::named(n)).collect()))
    }

    pub fn term(s: GrassmannScalar, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(w, s);
        }
        AlgebraElement { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, GrassmannScalar)>) -> Self {
        let mut e = AlgebraElement::zero();
        for (w, s) in it {
            e.add_term(w, &s);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &GrassmannScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, GrassmannScalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> GrassmannScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The scalar if the element has no generator content.
    pub fn as_scalar(&self) -> Option<GrassmannScalar> {
        match self.terms.len() {
            0 => Some(GrassmannScalar::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.terms.keys().flat_map(|w| w.0.iter().copied())
    }

    pub fn add_term(&mut self, w: Word, s: &GrassmannScalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                v.add_assign(s);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, s.clone());
            }
        }
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, s) in &o.terms {
            out.add_term(w.clone(), s);
        }
        out
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (w, s) in &o.terms {
            out.add_term(w.clone(), &s.neg());
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(w, s)| (w.clone(), s.neg()))
                .collect(),
        }
    }

    /// `s · self`.
    pub fn scale(&self, s: &GrassmannScalar) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), s.mul(c))))
    }

    /// `self · s`, moving `s` to the left across each word.
    pub fn scale_right(&self, s: &GrassmannScalar) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(&s.crossed(w.parity())))),
        )
    }

    /// Graded product: `(s w)(t v) = s · t' · wv` where `t'` is `t` moved
    /// across `w` (odd components of `t` pick up `(-1)^{|w|}`).
    pub fn mul(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w1, s1) in &self.terms {
            let parity = w1.parity();
            for (w2, s2) in &o.terms {
                let c = s1.mul(&s2.crossed(parity));
                out.add_term(w1.concat(w2), &c);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `[self, o] = self·o − o·self` (plain commutator).
    pub fn commutator(&self, o: &AlgebraElement) -> AlgebraElement {
        self.mul(o).sub(&o.mul(self))
    }

    /// Total parity if homogeneous (word parity plus scalar parity).
    pub fn parity(&self) -> Option<Parity> {
        let mut found = None;
        for (w, s) in &self.terms {
            for (b, _) in s.components() {
                let p = w.parity() + b.parity();
                match found {
                    None => found = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn map_scalars(&self, f: impl Fn(&GrassmannScalar) -> GrassmannScalar) -> AlgebraElement {
        AlgebraElement::from_terms(self.terms.iter().map(|(w, s)| (w.clone(), f(s))))
    }

    pub fn try_map_scalars(
        &self,
        f: impl Fn(&GrassmannScalar) -> Result<GrassmannScalar>,
    ) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (w, s) in &self.terms {
            out.add_term(w.clone(), &f(s)?);
        }
        Ok(out)
    }

    /// Applies the graded algebra map sending each letter to `image(letter)`.
    /// Images must have the parity of the letter they replace.
    pub fn substitute(&self, image: &impl Fn(Letter) -> AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, s) in &self.terms {
            let mut acc = AlgebraElement::scalar(s.clone());
            for &l in &w.0 {
                acc = acc.mul(&image(l));
            }
            out = out.add(&acc);
        }
        out
    }

    /// Expanded `(basis, word, coefficient)` triples in canonical print order.
    fn print_terms(&self) -> Vec<(Basis, &Word, &crate::scalars::RatFunc)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .flat_map(|(w, s)| s.components().map(move |(b, r)| (b, w, r)))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
        v
    }
}

impl fmt::Display for AlgebraElement {
    /// Canonical rendering: one summand per exterior basis word and
    /// generator word, ordered by exterior degree and then by word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.print_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, w, r)) in terms.into_iter().enumerate() {
            let coeff = render_coefficient(r, b);
            let (negative, coeff) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            let text = if w.is_empty() {
                coeff
            } else if coeff == "1" {
                w.to_string()
            } else {
                format!("{coeff}*{w}")
            };
            match (k, negative) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h1() -> AlgebraElement {
        AlgebraElement::scalar(GrassmannScalar::h1())
    }

    fn h2() -> AlgebraElement {
        AlgebraElement::scalar(GrassmannScalar::h2())
    }

    fn g(n: &str) -> AlgebraElement {
        AlgebraElement::named(n)
    }

    #[test]
    fn odd_scalar_crossing_odd_generator() {
        let xi = g("xi");
        assert_eq!(xi.mul(&h1()), h1().mul(&xi).neg());
        assert_eq!(g("x").mul(&h2()), h2().mul(&g("x")));
    }

    #[test]
    fn sign_rule_once() {
        // (h1 β)(h2 γ) = h1 (−h2) βγ = −h1h2 βγ
        let lhs = h1().mul(&g("beta")).mul(&h2().mul(&g("gamma")));
        let expected = AlgebraElement::term(
            GrassmannScalar::h1().mul(&GrassmannScalar::h2()).neg(),
            Word(vec![Letter::named("beta"), Letter::named("gamma")]),
        );
        assert_eq!(lhs, expected);
    }

    #[test]
    fn display_canonical() {
        let e = g("x").mul(&g("xi")).sub(&h1().mul(&g("x").pow(2)));
        assert_eq!(e.to_string(), "x*xi - h1*x^2");
        assert_eq!(AlgebraElement::zero().to_string(), "0");
        assert_eq!(AlgebraElement::one().to_string(), "1");
    }

    #[test]
    fn parity_of_mixed_terms() {
        let e = g("beta").add(&h1().mul(&g("a")));
        assert_eq!(e.parity(), Some(Parity::Odd));
        assert_eq!(g("beta").add(&g("a")).parity(), None);
    }
}
