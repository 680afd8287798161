//! The coefficient super-ring `Frac(ℚ[p,q]) ⊗ Λ(h1, h2)`.
//!
//! A [`GrassmannScalar`] stores one rational function per exterior basis word
//! `1, h1, h2, h1h2`. Basis words are bitmasks (bit 0 = `h1`, bit 1 = `h2`),
//! so repeated generators cannot be represented and `h2·h1` is folded into
//! the `h1h2` slot with a sign.

pub mod poly;
pub mod ratfunc;

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

pub use poly::{Poly, Var};
pub use ratfunc::RatFunc;

use crate::error::Result;
use crate::Parity;

/// Exterior basis word as a bitmask over `{h1, h2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis(u8);

impl Basis {
    pub const ONE: Basis = Basis(0);
    pub const H1: Basis = Basis(1);
    pub const H2: Basis = Basis(2);
    pub const H1H2: Basis = Basis(3);
    pub const ALL: [Basis; 4] = [Basis::ONE, Basis::H1, Basis::H2, Basis::H1H2];

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn parity(self) -> Parity {
        Parity::from_bit(self.0.count_ones() & 1 == 1)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, other: Basis) -> bool {
        self.0 & other.0 == other.0
    }

    /// Exterior product of basis words: `None` if a generator repeats,
    /// otherwise the sorted word and the reordering sign.
    pub fn product(self, other: Basis) -> Option<(Basis, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // the only transposition possible is h2 (left) past h1 (right)
        let negative = self.0 & 2 != 0 && other.0 & 1 != 0;
        Some((Basis(self.0 | other.0), negative))
    }

    pub fn name(self) -> &'static str {
        match self.0 {
            0 => "1",
            1 => "h1",
            2 => "h2",
            _ => "h1*h2",
        }
    }
}

/// One of the two odd deformation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddParam {
    H1,
    H2,
}

impl OddParam {
    fn basis(self) -> Basis {
        match self {
            OddParam::H1 => Basis::H1,
            OddParam::H2 => Basis::H2,
        }
    }
}

/// Element of the ground super-ring.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GrassmannScalar {
    components: [RatFunc; 4],
}

impl GrassmannScalar {
    pub fn zero() -> Self {
        GrassmannScalar::default()
    }

    pub fn one() -> Self {
        GrassmannScalar::from_ratfunc(RatFunc::one())
    }

    pub fn from_int(n: i64) -> Self {
        GrassmannScalar::from_ratfunc(RatFunc::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        GrassmannScalar::from_ratfunc(RatFunc::from_rational(c))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        GrassmannScalar::component(Basis::ONE, r)
    }

    pub fn var(v: Var) -> Self {
        GrassmannScalar::from_ratfunc(RatFunc::var(v))
    }

    pub fn p() -> Self {
        GrassmannScalar::var(Var::P)
    }

    pub fn q() -> Self {
        GrassmannScalar::var(Var::Q)
    }

    pub fn h1() -> Self {
        GrassmannScalar::component(Basis::H1, RatFunc::one())
    }

    pub fn h2() -> Self {
        GrassmannScalar::component(Basis::H2, RatFunc::one())
    }

    pub fn param(h: OddParam) -> Self {
        GrassmannScalar::component(h.basis(), RatFunc::one())
    }

    pub fn component(b: Basis, r: RatFunc) -> Self {
        let mut s = GrassmannScalar::zero();
        s.components[b.index()] = r;
        s
    }

    pub fn get(&self, b: Basis) -> &RatFunc {
        &self.components[b.index()]
    }

    /// Nonzero components in basis order.
    pub fn components(&self) -> impl Iterator<Item = (Basis, &RatFunc)> {
        Basis::ALL
            .into_iter()
            .map(move |b| (b, &self.components[b.index()]))
            .filter(|(_, r)| !r.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RatFunc::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.components[0].is_one() && self.components[1..].iter().all(RatFunc::is_zero)
    }

    /// The `Λ`-degree-zero component.
    pub fn body(&self) -> &RatFunc {
        &self.components[0]
    }

    /// Invertible exactly when the body is nonzero.
    pub fn is_unit(&self) -> bool {
        !self.components[0].is_zero()
    }

    /// Smallest exterior degree among the nonzero components.
    pub fn min_degree(&self) -> Option<u32> {
        self.components().map(|(b, _)| b.degree()).min()
    }

    /// The parity if the scalar is homogeneous (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (b, _) in self.components() {
            match found {
                None => found = Some(b.parity()),
                Some(p) if p != b.parity() => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn is_rational_constant(&self) -> Option<BigRational> {
        if self.components[1..].iter().any(|r| !r.is_zero()) {
            return None;
        }
        self.components[0].as_constant()
    }

    pub fn add(&self, o: &GrassmannScalar) -> GrassmannScalar {
        GrassmannScalar {
            components: std::array::from_fn(|i| self.components[i].add(&o.components[i])),
        }
    }

    pub fn sub(&self, o: &GrassmannScalar) -> GrassmannScalar {
        GrassmannScalar {
            components: std::array::from_fn(|i| self.components[i].sub(&o.components[i])),
        }
    }

    pub fn neg(&self) -> GrassmannScalar {
        GrassmannScalar {
            components: std::array::from_fn(|i| self.components[i].neg()),
        }
    }

    pub fn add_assign(&mut self, o: &GrassmannScalar) {
        for i in 0..4 {
            if !o.components[i].is_zero() {
                self.components[i] = self.components[i].add(&o.components[i]);
            }
        }
    }

    pub fn mul(&self, o: &GrassmannScalar) -> GrassmannScalar {
        let mut out = GrassmannScalar::zero();
        for (b1, r1) in self.components() {
            for (b2, r2) in o.components() {
                if let Some((b, negative)) = b1.product(b2) {
                    let mut t = r1.mul(r2);
                    if negative {
                        t = t.neg();
                    }
                    let slot = &mut out.components[b.index()];
                    *slot = slot.add(&t);
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &RatFunc) -> GrassmannScalar {
        GrassmannScalar {
            components: std::array::from_fn(|i| self.components[i].mul(r)),
        }
    }

    /// `(even, odd)` parts; their sum is `self`.
    pub fn parity_split(&self) -> (GrassmannScalar, GrassmannScalar) {
        let mut even = GrassmannScalar::zero();
        let mut odd = GrassmannScalar::zero();
        for (b, r) in self.components() {
            match b.parity() {
                Parity::Even => even.components[b.index()] = r.clone(),
                Parity::Odd => odd.components[b.index()] = r.clone(),
            }
        }
        (even, odd)
    }

    /// The scalar as seen after moving it across something of parity
    /// `across`: odd components flip sign when `across` is odd.
    pub fn crossed(&self, across: Parity) -> GrassmannScalar {
        if across == Parity::Even {
            return self.clone();
        }
        let mut out = self.clone();
        for b in [Basis::H1, Basis::H2] {
            out.components[b.index()] = out.components[b.index()].neg();
        }
        out
    }

    /// Two-sided inverse; `None` when the body is zero.
    pub fn inverse(&self) -> Option<GrassmannScalar> {
        let body_inv = self.components[0].recip()?;
        // s = b(1 + m) with m nilpotent, m^3 = 0 in Λ(h1, h2)
        let mut m = self.clone();
        m.components[0] = RatFunc::zero();
        let m = m.scale(&body_inv);
        let m2 = m.mul(&m);
        let series = GrassmannScalar::one().sub(&m).add(&m2);
        Some(series.scale(&body_inv))
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, n: i32) -> Option<GrassmannScalar> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = GrassmannScalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    /// Exact evaluation `var = value` of every component.
    pub fn limit_at(&self, var: Var, value: &BigRational) -> Result<GrassmannScalar> {
        let mut out = GrassmannScalar::zero();
        for (b, r) in self.components() {
            out.components[b.index()] = r.limit_at(var, value)?;
        }
        Ok(out)
    }

    /// Sets an odd parameter to zero.
    pub fn kill(&self, h: OddParam) -> GrassmannScalar {
        let mut out = self.clone();
        for b in Basis::ALL {
            if b.contains(h.basis()) {
                out.components[b.index()] = RatFunc::zero();
            }
        }
        out
    }

    /// Quotient by `h1h2 = 0`.
    pub fn without_h1h2(&self) -> GrassmannScalar {
        let mut out = self.clone();
        out.components[3] = RatFunc::zero();
        out
    }
}

impl fmt::Display for GrassmannScalar {
    /// Renders as a sum over basis words, e.g. `3 + h1`, `(q - 1)/(p) * h1*h2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (b, r) in self.components() {
            let text = render_coefficient(r, b);
            if first {
                f.write_str(&text)?;
                first = false;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {text}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrassmannScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrassmannScalar({self})")
    }
}

/// Renders `r · basis` as one parseable product (a leading `-` when the
/// coefficient is a negated single monomial).
pub(crate) fn render_coefficient(r: &RatFunc, b: Basis) -> String {
    let mut factors = render_ratfunc_factors(r);
    let mut negative = false;
    if let Some(first) = factors.first_mut() {
        if let Some(rest) = first.strip_prefix('-') {
            negative = true;
            *first = rest.to_string();
        }
    }
    if factors.len() == 1 && factors[0] == "1" && b != Basis::ONE {
        factors.clear();
    }
    if b != Basis::ONE {
        factors.push(b.name().to_string());
    }
    let body = factors.join("*");
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Product factors for a rational function. A single-monomial numerator is
/// rendered bare (possibly with a leading `-`), anything else is wrapped in
/// parentheses; a non-trivial denominator is appended as `/(...)`.
pub(crate) fn render_ratfunc_factors(r: &RatFunc) -> Vec<String> {
    let num = r.numer();
    let mut out = Vec::new();
    let num_text = if num.num_terms() == 1 {
        num.to_string()
    } else {
        format!("({num})")
    };
    if r.is_polynomial() {
        out.push(num_text);
    } else {
        out.push(format!("{num_text}/({})", r.denom()));
    }
    out
}

impl One for GrassmannScalar {
    fn one() -> Self {
        GrassmannScalar::one()
    }
}

impl std::ops::Mul for GrassmannScalar {
    type Output = GrassmannScalar;

    fn mul(self, rhs: GrassmannScalar) -> GrassmannScalar {
        GrassmannScalar::mul(&self, &rhs)
    }
}
