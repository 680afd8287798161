//! Exact polynomials in the two commuting indeterminates `p`, `q` over ℚ.
//!
//! Bivariate GCDs are computed recursively, viewing a polynomial as an
//! element of `ℚ[q][p]` and running a primitive pseudo-remainder sequence in
//! `p` with contents taken in the Euclidean domain `ℚ[q]`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One of the two even central indeterminates of the ground ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    P,
    Q,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "q",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent pair `(deg_p, deg_q)`.
pub type Monomial = (u32, u32);

/// Sparse polynomial in `p`, `q`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

/// Graded-lex key: total degree first, then the `p` exponent.
fn grlex(m: &Monomial) -> (u32, u32, u32) {
    (m.0 + m.1, m.0, m.1)
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        let m = match v {
            Var::P => (1, 0),
            Var::Q => (0, 1),
        };
        terms.insert(m, BigRational::one());
        Poly { terms }
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial has no `p`, `q` dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under graded-lex order with `p > q`.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by_key(|(m, _)| grlex(m))
            .map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, -v)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Poly { terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, *m, -c);
        }
        Poly { terms }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut terms, (m1.0 + m2.0, m1.1 + m2.1), c1 * c2);
            }
        }
        Poly { terms }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| match v {
                Var::P => m.0,
                Var::Q => m.1,
            })
            .max()
            .unwrap_or(0)
    }

    /// Substitute `v = value`, leaving a polynomial in the other indeterminate.
    pub fn eval(&self, v: Var, value: &BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, keep) = match v {
                Var::P => (m.0, (0, m.1)),
                Var::Q => (m.1, (m.0, 0)),
            };
            let factor = pow_rat(value, e);
            add_term(&mut terms, keep, c * factor);
        }
        Poly { terms }
    }

    /// Greatest common divisor, normalized so the grlex leading coefficient is 1.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let g = RecPoly::from_poly(self)
            .gcd(&RecPoly::from_poly(other))
            .to_poly();
        g.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        RecPoly::from_poly(self)
            .div_exact(&RecPoly::from_poly(divisor))
            .map(|r| r.to_poly())
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(&m);
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for Poly {
    /// Terms in descending grlex order, e.g. `p^2*q - 3*p + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ms: Vec<_> = self.terms.iter().collect();
        ms.sort_by_key(|(m, _)| std::cmp::Reverse(grlex(m)));
        for (k, (m, c)) in ms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (m.0 == 0 && m.1 == 0) {
                let mut s = String::new();
                if abs.denom().is_one() {
                    s.push_str(&abs.numer().to_string());
                } else {
                    s.push_str(&format!("{}/{}", abs.numer(), abs.denom()));
                }
                factors.push(s);
            }
            for (v, e) in [("p", m.0), ("q", m.1)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Dense univariate polynomial over ℚ (coefficients low to high, trimmed).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct UPoly(Vec<BigRational>);

impl UPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lc(&self) -> &BigRational {
        self.0.last().expect("lc of zero polynomial")
    }

    fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = o.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            v.push(a + b);
        }
        UPoly(v).trim()
    }

    fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly(v).trim()
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (UPoly::default(), r);
        }
        let mut q = vec![BigRational::zero(); r.0.len() - d.0.len() + 1];
        let lc_inv = d.lc().recip();
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let shift = r.0.len() - d.0.len();
            let t = r.lc() * &lc_inv;
            for (i, c) in d.0.iter().enumerate() {
                r.0[i + shift] -= &t * c;
            }
            q[shift] = t;
            r = r.trim();
        }
        (UPoly(q).trim(), r)
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().recip();
        UPoly(self.0.iter().map(|c| c * &inv).collect())
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// A polynomial in `p` whose coefficients are univariate polynomials in `q`.
#[derive(Clone, Debug, Default)]
struct RecPoly(Vec<UPoly>);

impl RecPoly {
    fn from_poly(poly: &Poly) -> RecPoly {
        let dp = poly.degree_in(Var::P) as usize;
        let dq = poly.degree_in(Var::Q) as usize;
        if poly.is_zero() {
            return RecPoly::default();
        }
        let mut v = vec![vec![BigRational::zero(); dq + 1]; dp + 1];
        for (m, c) in poly.terms() {
            v[m.0 as usize][m.1 as usize] = c.clone();
        }
        RecPoly(v.into_iter().map(|c| UPoly(c).trim()).collect()).trim()
    }

    fn to_poly(&self) -> Poly {
        let mut terms = BTreeMap::new();
        for (i, c) in self.0.iter().enumerate() {
            for (j, v) in c.0.iter().enumerate() {
                if !v.is_zero() {
                    terms.insert((i as u32, j as u32), v.clone());
                }
            }
        }
        Poly { terms }
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.0.last().expect("lc of zero polynomial")
    }

    fn content(&self) -> UPoly {
        let mut g = UPoly::default();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    fn map(&self, f: impl Fn(&UPoly) -> UPoly) -> RecPoly {
        RecPoly(self.0.iter().map(f).collect()).trim()
    }

    fn primitive_part(&self) -> RecPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.map(|x| {
            let (q, r) = x.divrem(&c);
            debug_assert!(r.is_zero());
            q
        })
    }

    fn pseudo_rem(&self, b: &RecPoly) -> RecPoly {
        let mut a = self.clone();
        let lb = b.lc().clone();
        while !a.is_zero() && a.deg() >= b.deg() {
            let shift = a.deg() - b.deg();
            let la = a.lc().clone();
            let mut next = a.map(|c| c.mul(&lb));
            for (i, c) in b.0.iter().enumerate() {
                let t = c.mul(&la);
                if next.0.len() <= i + shift {
                    next.0.resize(i + shift + 1, UPoly::default());
                }
                next.0[i + shift] = next.0[i + shift].sub(&t);
            }
            a = next.trim();
        }
        a
    }

    fn gcd(&self, other: &RecPoly) -> RecPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().map(|x| x.mul(&c))
    }

    fn div_exact(&self, d: &RecPoly) -> Option<RecPoly> {
        if d.is_zero() {
            return None;
        }
        let mut r = self.clone();
        if r.is_zero() {
            return Some(RecPoly::default());
        }
        if r.deg() < d.deg() {
            return None;
        }
        let mut q = vec![UPoly::default(); r.deg() - d.deg() + 1];
        while !r.is_zero() {
            if r.deg() < d.deg() {
                return None;
            }
            let shift = r.deg() - d.deg();
            let (t, rem) = r.lc().divrem(d.lc());
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.0.iter().enumerate() {
                r.0[i + shift] = r.0[i + shift].sub(&c.mul(&t));
            }
            q[shift] = t;
            r = r.trim();
        }
        Some(RecPoly(q).trim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p() -> Poly {
        Poly::var(Var::P)
    }

    fn q() -> Poly {
        Poly::var(Var::Q)
    }

    #[test]
    fn gcd_recovers_common_factor() {
        // (p - 1)(p + q) and (p - 1)(q - 2)
        let pm1 = p().sub(&Poly::one());
        let a = pm1.mul(&p().add(&q()));
        let b = pm1.mul(&q().sub(&Poly::constant(int(2))));
        assert_eq!(a.gcd(&b), pm1);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = p().mul(&q()).add(&Poly::one());
        let b = p().sub(&q());
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn exact_division() {
        let a = p().pow(2).sub(&q().pow(2));
        let b = p().sub(&q());
        assert_eq!(a.div_exact(&b).unwrap(), p().add(&q()));
        assert!(p().add(&Poly::one()).div_exact(&q()).is_none());
    }

    #[test]
    fn display_grlex() {
        let a = p()
            .pow(2)
            .mul(&q())
            .sub(&p().scale(&int(3)))
            .add(&Poly::one());
        assert_eq!(a.to_string(), "p^2*q - 3*p + 1");
    }

    #[test]
    fn eval_leaves_other_variable() {
        let a = p().mul(&q()).add(&p());
        let e = a.eval(Var::P, &int(2));
        assert_eq!(e, q().scale(&int(2)).add(&Poly::constant(int(2))));
    }
}
