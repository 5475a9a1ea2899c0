use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Field, FqElem};

/// Polynomial in F_q[T], coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Poly {
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(FqElem::ONE)
    }

    pub fn constant(c: FqElem) -> Poly {
        Poly::new(vec![c])
    }

    /// The indeterminate T.
    pub fn t() -> Poly {
        Poly::monomial(FqElem::ONE, 1)
    }

    pub fn monomial(c: FqElem, k: usize) -> Poly {
        let mut v = vec![FqElem::ZERO; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn new(mut coeffs: Vec<FqElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds from small integers reduced into the prime field.
    pub fn from_ints(f: &Field, c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&k| f.from_int(k)).collect())
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [FqElem::ONE]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn constant_term(&self) -> FqElem {
        self.coeff(0)
    }

    /// Order of vanishing at T = 0 (0 for the zero polynomial).
    pub fn ord_t(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Lowest nonzero coefficient.
    pub fn lowest(&self) -> FqElem {
        self.coeffs.iter().copied().find(|c| !c.is_zero()).unwrap_or(FqElem::ZERO)
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Poly::new(self.coeffs.iter().skip(k).copied().collect())
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![FqElem::ZERO; k];
        v.extend_from_slice(&self.coeffs);
        Poly { coeffs: v }
    }

    /// Coefficients in reverse order: T^deg * a(1/T).
    pub fn reversed(&self) -> Poly {
        Poly::new(self.coeffs.iter().rev().copied().collect())
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: FqElem, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: u32, f: &Field) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self, f))
    }

    /// Euclidean division: `self = q * d + r` with deg r < deg d.
    pub fn divrem(&self, d: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::Zero("polynomial division by 0"))?;
        let inv_lc = f.inv(d.leading())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![FqElem::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv_lc);
            if c.is_zero() {
                continue;
            }
            for (j, &m) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, m));
            }
            q[k] = c;
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn divides(&self, other: &Poly, f: &Field) -> bool {
        !self.is_zero() && other.divrem(self, f).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f.inv(self.leading()).unwrap(), f)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b, f).unwrap();
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn eval(&self, x: FqElem, f: &Field) -> FqElem {
        self.coeffs.iter().rev().fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn display<'a>(&'a self, f: &'a Field) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, field: f }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    field: &'a Field,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            let cs = self.field.fmt_elem(c);
            let cs = if self.field.degree() > 1 && cs.contains('+') { format!("({cs})") } else { cs };
            match (i, c == FqElem::ONE) {
                (0, _) => write!(out, "{cs}")?,
                (1, true) => write!(out, "T")?,
                (1, false) => write!(out, "{cs}T")?,
                (_, true) => write!(out, "T^{i}")?,
                (_, false) => write!(out, "{cs}T^{i}")?,
            }
        }
        Ok(())
    }
}
