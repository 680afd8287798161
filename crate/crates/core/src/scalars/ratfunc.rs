//! Rational functions in `p`, `q` kept in lowest terms.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Poly, Var};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and the denominator's grlex leading
/// coefficient equal to 1. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Builds `num / den` in canonical form. Panics on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.as_constant().is_some() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.add(&o.num));
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&o.num));
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<RatFunc> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, n: i32) -> Option<RatFunc> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    /// Evaluates `var = value` in the reduced form.
    pub fn limit_at(&self, var: Var, value: &BigRational) -> Result<RatFunc> {
        let den = self.den.eval(var, value);
        if den.is_zero() {
            return Err(Error::Pole {
                var,
                value: value.clone(),
                expr: self.to_string(),
            });
        }
        Ok(RatFunc::new(self.num.eval(var, value), den))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::add(&self, &rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> RatFunc {
        RatFunc::var(Var::P)
    }

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }

    fn one() -> RatFunc {
        RatFunc::one()
    }

    #[test]
    fn sum_of_simple_poles() {
        // 1/(p-1) + 1/(q-1) = (p+q-2)/((p-1)(q-1)), reduced by hand
        let a = p().sub(&one()).recip().unwrap();
        let b = q().sub(&one()).recip().unwrap();
        let s = a.add(&b);
        let expected_num = p().add(&q()).sub(&RatFunc::from_int(2));
        let expected_den = p().sub(&one()).mul(&q().sub(&one()));
        assert_eq!(s, expected_num.mul(&expected_den.recip().unwrap()));
        assert_eq!(s.numer(), expected_num.numer());
        assert_eq!(s.denom(), expected_den.numer());
    }

    #[test]
    fn cancellation_before_evaluation() {
        let pm1 = p().sub(&one());
        let r = pm1.mul(&pm1.recip().unwrap());
        assert!(r.is_one());
        let v = BigRational::one();
        assert!(r.limit_at(Var::P, &v).unwrap().is_one());
        assert!(matches!(
            pm1.recip().unwrap().limit_at(Var::P, &v),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let r = RatFunc::new(
            Poly::one(),
            Poly::var(Var::P).scale(&BigRational::from_integer(2.into())),
        );
        assert!(r.denom().leading().unwrap().1.is_one());
        assert_eq!(r.to_string(), "1/2/(p)");
    }
}
