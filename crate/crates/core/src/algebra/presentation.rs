use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::GrassmannScalar;

use super::element::{parity_of, AlgebraElement, Word};
use super::letters::Letter;

/// Default bound on rewrite steps per normal-form computation.
pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// Reads `SUPERRTT_MAX_STEPS`, falling back to [`DEFAULT_MAX_STEPS`].
pub fn max_steps() -> usize {
    std::env::var("SUPERRTT_MAX_STEPS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_STEPS)
}

/// Which redex is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Oriented relation `lhs -> rhs`.
#[derive(Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: AlgebraElement,
}

impl Rule {
    pub fn new(lhs: Word, rhs: AlgebraElement) -> Rule {
        Rule { lhs, rhs }
    }

    /// `lhs − rhs`, the relation this rule encodes.
    pub fn relation(&self) -> AlgebraElement {
        AlgebraElement::word(self.lhs.clone()).sub(&self.rhs)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

type RuleKey = (Letter, Option<Letter>);

/// A finitely presented graded algebra: ordered generators plus oriented
/// rewrite rules with left-hand sides of length at most two.
#[derive(Clone)]
pub struct Presentation {
    name: String,
    generators: Vec<Letter>,
    rank: HashMap<Letter, usize>,
    rules: Vec<Rule>,
    index: HashMap<RuleKey, usize>,
    assume_h1h2_zero: bool,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .field("rules", &self.rules)
            .field("assume_h1h2_zero", &self.assume_h1h2_zero)
            .finish()
    }
}

impl Presentation {
    /// Validates and indexes already oriented rules.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Letter>,
        rules: Vec<Rule>,
        assume_h1h2_zero: bool,
    ) -> Result<Presentation> {
        let rank: HashMap<Letter, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, l)| (*l, i))
            .collect();
        if rank.len() != generators.len() {
            return Err(Error::Format {
                line: 0,
                message: "duplicate generator".into(),
            });
        }
        let mut index = HashMap::new();
        let mut cleaned = Vec::with_capacity(rules.len());
        for mut rule in rules {
            if rule.lhs.is_empty() || rule.lhs.len() > 2 {
                return Err(Error::Orientation {
                    relation: rule.to_string(),
                    reason: "left-hand side must have length 1 or 2".into(),
                });
            }
            for l in rule
                .lhs
                .letters()
                .iter()
                .chain(rule.rhs.letters().collect::<Vec<_>>().iter())
            {
                if !rank.contains_key(l) {
                    return Err(Error::UnknownGenerator(l.name()));
                }
            }
            if assume_h1h2_zero {
                rule.rhs = rule.rhs.map_scalars(GrassmannScalar::without_h1h2);
            }
            if rule.relation().parity().is_none() {
                return Err(Error::Inhomogeneous(rule.to_string()));
            }
            let key = rule_key(&rule.lhs);
            if index.insert(key, cleaned.len()).is_some() {
                return Err(Error::Orientation {
                    relation: rule.to_string(),
                    reason: "duplicate left-hand side".into(),
                });
            }
            cleaned.push(rule);
        }
        Ok(Presentation {
            name: name.into(),
            generators,
            rank,
            rules: cleaned,
            index,
            assume_h1h2_zero,
        })
    }

    /// The free graded algebra on `generators`.
    pub fn free(name: impl Into<String>, generators: Vec<Letter>) -> Presentation {
        Presentation::new(name, generators, Vec::new(), false).expect("free presentation")
    }

    /// Orients relations (each meaning `relation = 0`) by unit-pivot
    /// Gaussian elimination; see [`orient`].
    pub fn from_relations(
        name: impl Into<String>,
        generators: Vec<Letter>,
        relations: &[AlgebraElement],
        assume_h1h2_zero: bool,
    ) -> Result<Presentation> {
        let rank: HashMap<Letter, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, l)| (*l, i))
            .collect();
        let rules = orient(&rank, relations, assume_h1h2_zero)?;
        Presentation::new(name, generators, rules, assume_h1h2_zero)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Presentation {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Letter] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn assume_h1h2_zero(&self) -> bool {
        self.assume_h1h2_zero
    }

    /// Copy with the flag set and every rule reduced modulo `h1h2`.
    pub fn with_h1h2_zero(&self) -> Result<Presentation> {
        Presentation::new(
            self.name.clone(),
            self.generators.clone(),
            self.rules.clone(),
            true,
        )
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&Rule> {
        self.index.get(&rule_key(lhs)).map(|&i| &self.rules[i])
    }

    /// Relations `lhs − rhs` of every rule.
    pub fn relations(&self) -> Vec<AlgebraElement> {
        self.rules.iter().map(Rule::relation).collect()
    }

    pub fn contains_generator(&self, l: Letter) -> bool {
        self.rank.contains_key(&l)
    }

    /// Degree-lexicographic comparison using this presentation's generator
    /// order. Unknown letters sort after known ones.
    pub fn word_cmp(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let ra = a
                .letters()
                .iter()
                .map(|l| self.rank.get(l).copied().unwrap_or(usize::MAX));
            let rb = b
                .letters()
                .iter()
                .map(|l| self.rank.get(l).copied().unwrap_or(usize::MAX));
            ra.cmp(rb)
        })
    }

    /// New presentation over the same generators whose relations are the
    /// images of these relations under `f`, re-oriented.
    pub fn specialize(
        &self,
        name: impl Into<String>,
        f: impl Fn(&GrassmannScalar) -> GrassmannScalar,
    ) -> Result<Presentation> {
        let rels: Vec<_> = self.relations().iter().map(|r| r.map_scalars(&f)).collect();
        Presentation::from_relations(name, self.generators.clone(), &rels, self.assume_h1h2_zero)
    }

    /// Same generators, rules replaced by the orientation of `relations`.
    pub fn with_relations(
        &self,
        name: impl Into<String>,
        relations: &[AlgebraElement],
    ) -> Result<Presentation> {
        Presentation::from_relations(
            name,
            self.generators.clone(),
            relations,
            self.assume_h1h2_zero,
        )
    }

    /// Leftmost redex in `letters`, if any.
    fn find_redex(&self, letters: &[Letter], strategy: Strategy) -> Option<(usize, usize)> {
        let probe = |pos: usize| -> Option<(usize, usize)> {
            if pos + 1 < letters.len() {
                if let Some(&r) = self.index.get(&(letters[pos], Some(letters[pos + 1]))) {
                    return Some((pos, r));
                }
            }
            self.index.get(&(letters[pos], None)).map(|&r| (pos, r))
        };
        match strategy {
            Strategy::Leftmost => (0..letters.len()).find_map(probe),
            Strategy::Rightmost => (0..letters.len()).rev().find_map(probe),
        }
    }

    /// Every `(position, rule index)` at which some rule applies.
    pub fn redexes(&self, w: &Word) -> Vec<(usize, usize)> {
        let letters = w.letters();
        let mut out = Vec::new();
        for pos in 0..letters.len() {
            if let Some(&r) = self.index.get(&(letters[pos], None)) {
                out.push((pos, r));
            }
            if pos + 1 < letters.len() {
                if let Some(&r) = self.index.get(&(letters[pos], Some(letters[pos + 1]))) {
                    out.push((pos, r));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w.letters(), Strategy::Leftmost).is_none()
    }

    /// Applies rule `rule` at `pos` of `s · w`, returning the expanded sum.
    fn rewrite_into(
        &self,
        s: &GrassmannScalar,
        w: &Word,
        pos: usize,
        rule: usize,
        out: &mut BTreeMap<Word, GrassmannScalar>,
    ) {
        let rule = &self.rules[rule];
        let letters = w.letters();
        let prefix = &letters[..pos];
        let suffix = &letters[pos + rule.lhs.len()..];
        let prefix_parity = parity_of(prefix);
        for (rw, c) in rule.rhs.terms() {
            let mut coeff = s.mul(&c.crossed(prefix_parity));
            if self.assume_h1h2_zero {
                coeff = coeff.without_h1h2();
            }
            if coeff.is_zero() {
                continue;
            }
            let mut v = Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
            v.extend_from_slice(prefix);
            v.extend_from_slice(rw.letters());
            v.extend_from_slice(suffix);
            add_into(out, Word(v), coeff);
        }
    }

    /// One rewrite step of the word `w` at a given redex.
    pub fn rewrite_at(&self, w: &Word, pos: usize, rule: usize) -> AlgebraElement {
        let mut out = BTreeMap::new();
        self.rewrite_into(&GrassmannScalar::one(), w, pos, rule, &mut out);
        AlgebraElement::from_terms(out)
    }

    pub fn normal_form(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        self.normal_form_with(e, Strategy::Leftmost)
    }

    /// Rewrites to an irreducible element. Fails with
    /// [`Error::NonTerminating`] once the step bound is exceeded.
    pub fn normal_form_with(
        &self,
        e: &AlgebraElement,
        strategy: Strategy,
    ) -> Result<AlgebraElement> {
        let limit = max_steps();
        let mut pending: BTreeMap<Word, GrassmannScalar> = BTreeMap::new();
        for (w, s) in e.terms() {
            let s = if self.assume_h1h2_zero {
                s.without_h1h2()
            } else {
                s.clone()
            };
            add_into(&mut pending, w.clone(), s);
        }
        let mut out = AlgebraElement::zero();
        let mut steps = 0usize;
        while let Some((w, s)) = pending.pop_last() {
            match self.find_redex(w.letters(), strategy) {
                None => out.add_term(w, &s),
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > limit {
                        return Err(Error::NonTerminating { steps: limit });
                    }
                    self.rewrite_into(&s, &w, pos, rule, &mut pending);
                }
            }
        }
        Ok(out)
    }

    pub fn reduces_to_zero(&self, e: &AlgebraElement) -> Result<bool> {
        Ok(self.normal_form(e)?.is_zero())
    }
}

fn rule_key(lhs: &Word) -> RuleKey {
    let l = lhs.letters();
    (l[0], l.get(1).copied())
}

pub(crate) fn add_into(map: &mut BTreeMap<Word, GrassmannScalar>, w: Word, s: GrassmannScalar) {
    if s.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(v) => {
            v.add_assign(&s);
            if v.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, s);
        }
    }
}

/// Turns relations into rules by reduced row echelon form over the ground
/// ring. The pivot of a row is its largest word (degree-lex in `rank`) whose
/// coefficient is a unit; rows are normalized so the pivot has coefficient 1
/// and each pivot word is eliminated from every other row. Larger words may
/// survive in a row only with nilpotent coefficients.
pub fn orient(
    rank: &HashMap<Letter, usize>,
    relations: &[AlgebraElement],
    assume_h1h2_zero: bool,
) -> Result<Vec<Rule>> {
    let cmp = |a: &Word, b: &Word| {
        a.len().cmp(&b.len()).then_with(|| {
            let ra = a
                .letters()
                .iter()
                .map(|l| rank.get(l).copied().unwrap_or(usize::MAX));
            let rb = b
                .letters()
                .iter()
                .map(|l| rank.get(l).copied().unwrap_or(usize::MAX));
            ra.cmp(rb)
        })
    };
    let trunc = |e: AlgebraElement| {
        if assume_h1h2_zero {
            e.map_scalars(GrassmannScalar::without_h1h2)
        } else {
            e
        }
    };
    let mut rows: Vec<(Word, AlgebraElement)> = Vec::new();
    for rel in relations {
        if rel.parity().is_none() {
            return Err(Error::Inhomogeneous(rel.to_string()));
        }
    }
    // rows without a unit coefficient wait until later pivots can reduce them
    let mut pending: Vec<AlgebraElement> = relations.iter().map(|r| trunc(r.clone())).collect();
    loop {
        let before = rows.len();
        let mut stuck = Vec::new();
        for rel in pending {
            let mut r = rel;
            for (pivot, row) in &rows {
                let c = r.coefficient(pivot);
                if !c.is_zero() {
                    r = trunc(r.sub(&row.scale(&c)));
                }
            }
            if r.is_zero() {
                continue;
            }
            let pivot = r
                .terms()
                .filter(|(_, s)| s.is_unit())
                .map(|(w, _)| w.clone())
                .max_by(|a, b| cmp(a, b));
            let Some(pivot) = pivot else {
                stuck.push(r);
                continue;
            };
            let inv = r.coefficient(&pivot).inverse().expect("unit pivot");
            let r = trunc(r.scale(&inv));
            for (_, row) in rows.iter_mut() {
                let c = row.coefficient(&pivot);
                if !c.is_zero() {
                    *row = trunc(row.sub(&r.scale(&c)));
                }
            }
            rows.push((pivot, r));
        }
        if stuck.is_empty() {
            break;
        }
        if rows.len() == before {
            return Err(Error::Orientation {
                relation: stuck[0].to_string(),
                reason: "no word has an invertible coefficient".into(),
            });
        }
        pending = stuck;
    }
    Ok(rows
        .into_iter()
        .map(|(pivot, row)| {
            let rhs = AlgebraElement::word(pivot.clone()).sub(&row);
            Rule::new(pivot, rhs)
        })
        .collect())
}

/// Whether two presentations over the same generators define the same
/// two-sided ideal: every relation of each reduces to zero in the other, and
/// normal forms of all words up to `probe_degree` are congruent.
pub fn ideals_equal(p1: &Presentation, p2: &Presentation, probe_degree: usize) -> Result<bool> {
    Ok(ideal_differences(p1, p2, probe_degree)?.is_empty())
}

/// The witnesses against ideal equality (empty iff the ideals agree).
pub fn ideal_differences(
    p1: &Presentation,
    p2: &Presentation,
    probe_degree: usize,
) -> Result<Vec<(String, AlgebraElement)>> {
    let mut diffs = Vec::new();
    for (a, b, tag) in [(p1, p2, "1->2"), (p2, p1, "2->1")] {
        for rule in a.rules() {
            let r = b.normal_form(&rule.relation())?;
            if !r.is_zero() {
                diffs.push((format!("{tag}: {}", rule.lhs), r));
            }
        }
    }
    let mut gens = p1.generators().to_vec();
    for g in p2.generators() {
        if !gens.contains(g) {
            gens.push(*g);
        }
    }
    for w in all_words(&gens, probe_degree) {
        let e = AlgebraElement::word(w.clone());
        let n1 = p1.normal_form(&e)?;
        let n2 = p2.normal_form(&e)?;
        if n1 != n2 {
            let r = p2.normal_form(&n1.sub(&n2))?;
            if !r.is_zero() || !p1.normal_form(&n1.sub(&n2))?.is_zero() {
                diffs.push((format!("probe {w}"), n1.sub(&n2)));
            }
        }
    }
    Ok(diffs)
}

/// All words of length `1..=max_len` over `gens`.
pub fn all_words(gens: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * gens.len());
        for w in &layer {
            for g in gens {
                let mut v = w.letters().to_vec();
                v.push(*g);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
