use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Field, FqElem};

use super::poly::Poly;
use super::ratfunc::RationalFunction;

/// Truncated Laurent series sum_{i >= v} a_i T^i, known modulo T^{v + N}
/// where N = number of stored coefficients (the relative precision).
///
/// A nonzero series has `coeffs[0] != 0`. The zero series stores no
/// coefficients and `val` is then its absolute precision.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentSeries {
    val: i64,
    coeffs: Vec<FqElem>,
}

impl LaurentSeries {
    /// Zero known modulo T^abs_prec.
    pub fn zero(abs_prec: i64) -> LaurentSeries {
        LaurentSeries { val: abs_prec, coeffs: Vec::new() }
    }

    /// Builds from coefficients starting at T^start; leading zeros are absorbed.
    pub fn from_coeffs(start: i64, coeffs: Vec<FqElem>) -> LaurentSeries {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => LaurentSeries::zero(start + coeffs.len() as i64),
            Some(k) => LaurentSeries { val: start + k as i64, coeffs: coeffs[k..].to_vec() },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Exponent below which all coefficients are known.
    pub fn abs_precision(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    /// Coefficient of T^i; errors if i is beyond the known range.
    pub fn coeff(&self, i: i64) -> Result<FqElem> {
        if i >= self.abs_precision() {
            return Err(Error::PrecisionExhausted { needed: i + 1, available: self.abs_precision() });
        }
        if i < self.val {
            return Ok(FqElem::ZERO);
        }
        Ok(self.coeffs[(i - self.val) as usize])
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// Drops everything at or above T^abs.
    pub fn truncate_abs(&self, abs: i64) -> LaurentSeries {
        if abs >= self.abs_precision() {
            return self.clone();
        }
        if abs <= self.val || self.is_zero() {
            return LaurentSeries::zero(abs);
        }
        LaurentSeries { val: self.val, coeffs: self.coeffs[..(abs - self.val) as usize].to_vec() }
    }

    pub fn add(&self, o: &LaurentSeries, f: &Field) -> LaurentSeries {
        let abs = self.abs_precision().min(o.abs_precision());
        let start = self.val.min(o.val).min(abs);
        let c = (start..abs)
            .map(|i| f.add(self.coeff(i).unwrap(), o.coeff(i).unwrap()))
            .collect();
        LaurentSeries::from_coeffs(start, c)
    }

    pub fn neg(&self, f: &Field) -> LaurentSeries {
        LaurentSeries { val: self.val, coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn sub(&self, o: &LaurentSeries, f: &Field) -> LaurentSeries {
        self.add(&o.neg(f), f)
    }

    pub fn mul(&self, o: &LaurentSeries, f: &Field) -> LaurentSeries {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => return LaurentSeries::zero(self.val + o.val),
            (true, false) => return LaurentSeries::zero(self.val + o.val),
            (false, true) => return LaurentSeries::zero(self.val + o.val),
            _ => {}
        }
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut c = vec![FqElem::ZERO; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            for (j, &b) in o.coeffs.iter().take(n - i).enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        LaurentSeries { val: self.val + o.val, coeffs: c }
    }

    /// Multiplicative inverse at the same relative precision.
    pub fn inv(&self, f: &Field) -> Result<LaurentSeries> {
        if self.is_zero() {
            return Err(Error::Zero("inverse of the zero series"));
        }
        let w = &self.coeffs;
        let inv0 = f.inv(w[0])?;
        let mut c: Vec<FqElem> = Vec::with_capacity(w.len());
        for k in 0..w.len() {
            let mut s = if k == 0 { FqElem::ONE } else { FqElem::ZERO };
            for j in 1..=k {
                s = f.sub(s, f.mul(w[j], c[k - j]));
            }
            c.push(f.mul(s, inv0));
        }
        Ok(LaurentSeries { val: -self.val, coeffs: c })
    }

    pub fn display<'a>(&'a self, f: &'a Field) -> LaurentDisplay<'a> {
        LaurentDisplay { s: self, field: f }
    }
}

/// T-adic expansion of r with N coefficients from its valuation on.
/// The zero function expands to the zero series known modulo T^N.
pub fn laurent_expand(r: &RationalFunction, n: usize, f: &Field) -> Result<LaurentSeries> {
    if n == 0 {
        return Err(Error::InvalidParameter("Laurent precision must be at least 1".into()));
    }
    if r.is_zero() {
        return Ok(LaurentSeries::zero(n as i64));
    }
    let (a, b) = (r.num(), r.den());
    let (va, vb) = (a.ord_t(), b.ord_t());
    let a0 = a.shift_down(va);
    let b0 = b.shift_down(vb);
    let num = LaurentSeries { val: 0, coeffs: (0..n).map(|i| a0.coeff(i)).collect() };
    let den = LaurentSeries { val: 0, coeffs: (0..n).map(|i| b0.coeff(i)).collect() };
    let s = num.mul(&den.inv(f)?, f);
    Ok(LaurentSeries { val: va as i64 - vb as i64, coeffs: s.coeffs })
}

/// Series of a polynomial, exact up to T^abs.
pub fn poly_series(p: &Poly, abs: i64) -> LaurentSeries {
    LaurentSeries::from_coeffs(0, (0..abs.max(0) as usize).map(|i| p.coeff(i)).collect())
}

pub struct LaurentDisplay<'a> {
    s: &'a LaurentSeries,
    field: &'a Field,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.s.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let e = self.s.val + i as i64;
            let cs = self.field.fmt_elem(c);
            match e {
                0 => write!(out, "{cs}")?,
                _ if c == FqElem::ONE => write!(out, "T^{e}")?,
                _ => write!(out, "{cs}*T^{e}")?,
            }
        }
        if first {
            write!(out, "0")?;
        }
        write!(out, " + O(T^{})", self.s.abs_precision())
    }
}
