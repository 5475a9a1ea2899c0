use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::ffield::{Field, FqElem};

use super::poly::Poly;

/// Element of F_q(T) in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly, f: &Field) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::Zero("denominator of a rational function"));
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = num.gcd(&den, f);
        let (num, _) = num.divrem(&g, f)?;
        let (den, _) = den.divrem(&g, f)?;
        let lc = f.inv(den.leading())?;
        Ok(RationalFunction { num: num.scale(lc, f), den: den.scale(lc, f) })
    }

    pub fn zero() -> RationalFunction {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RationalFunction {
        RationalFunction::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: FqElem) -> RationalFunction {
        RationalFunction::from_poly(Poly::constant(c))
    }

    /// T^k for any integer k.
    pub fn t_pow(k: i64) -> RationalFunction {
        if k >= 0 {
            RationalFunction::from_poly(Poly::monomial(FqElem::ONE, k as usize))
        } else {
            RationalFunction { num: Poly::one(), den: Poly::monomial(FqElem::ONE, (-k) as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// T-adic valuation ord_T; `None` for zero.
    pub fn ord_t(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.ord_t() as i64 - self.den.ord_t() as i64)
    }

    pub fn mul(&self, o: &RationalFunction, f: &Field) -> RationalFunction {
        RationalFunction::new(self.num.mul(&o.num, f), self.den.mul(&o.den, f), f).unwrap()
    }

    pub fn add(&self, o: &RationalFunction, f: &Field) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(self.num.add(&o.num, f), self.den.clone(), f).unwrap();
        }
        let num = self.num.mul(&o.den, f).add(&o.num.mul(&self.den, f), f);
        RationalFunction::new(num, self.den.mul(&o.den, f), f).unwrap()
    }

    pub fn neg(&self, f: &Field) -> RationalFunction {
        RationalFunction { num: self.num.neg(f), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RationalFunction, f: &Field) -> RationalFunction {
        self.add(&o.neg(f), f)
    }

    pub fn inv(&self, f: &Field) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::Zero("inverse of the zero rational function"));
        }
        RationalFunction::new(self.den.clone(), self.num.clone(), f)
    }

    pub fn div(&self, o: &RationalFunction, f: &Field) -> Result<RationalFunction> {
        Ok(self.mul(&o.inv(f)?, f))
    }

    pub fn pow(&self, k: i64, f: &Field) -> Result<RationalFunction> {
        let base = if k < 0 { self.inv(f)? } else { self.clone() };
        Ok((0..k.unsigned_abs()).fold(RationalFunction::one(), |acc, _| acc.mul(&base, f)))
    }

    /// deg(num) - deg(den); `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    pub fn display<'a>(&'a self, f: &'a Field) -> RatDisplay<'a> {
        RatDisplay { r: self, field: f }
    }
}

/// The ring involution T -> 1/T.
pub fn sigma(r: &RationalFunction, f: &Field) -> RationalFunction {
    if r.is_zero() {
        return RationalFunction::zero();
    }
    // a(1/T) = T^{-deg a} rev(a)
    let dn = r.num.degree().unwrap();
    let dd = r.den.degree().unwrap();
    let num = r.num.reversed().shift_up(dd.saturating_sub(dn));
    let den = r.den.reversed().shift_up(dn.saturating_sub(dd));
    RationalFunction::new(num, den, f).unwrap()
}

/// The infinite absolute value |a/b| = q^{deg a - deg b}.
pub fn val_inf(r: &RationalFunction, f: &Field) -> Result<BigRational> {
    let d = r.degree().ok_or(Error::Zero("absolute value of 0"))?;
    let q = BigRational::from_integer(f.q().into());
    Ok(if d >= 0 { Pow::pow(q, d as u64) } else { BigRational::one() / Pow::pow(q, (-d) as u64) })
}

/// Transports a label pair (a, b) of v^a t_b to the adelic picture.
pub fn transport_label(a: &RationalFunction, b: &RationalFunction, f: &Field) -> (RationalFunction, RationalFunction) {
    (sigma(a, f), sigma(b, f))
}

pub struct RatDisplay<'a> {
    r: &'a RationalFunction,
    field: &'a Field,
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.den.is_one() {
            write!(out, "{}", self.r.num.display(self.field))
        } else {
            write!(out, "({})/({})", self.r.num.display(self.field), self.r.den.display(self.field))
        }
    }
}
