//! The cyclotomic field Q(zeta_n), realized as Q[x] / Phi_n(x).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;

/// Integer polynomial, lowest degree first, no trailing zeros.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

#[cfg(test)]
fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn int_poly_div_exact(num: &[BigInt], monic: &[BigInt]) -> IntPoly {
    let d = monic.len() - 1;
    assert!(monic[d].is_one(), "divisor must be monic");
    let mut rem: IntPoly = num.to_vec();
    if rem.len() <= d {
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for k in (0..quot.len()).rev() {
        let c = rem[k + d].clone();
        if c.is_zero() {
            continue;
        }
        for (j, m) in monic.iter().enumerate() {
            rem[k + j] -= &c * m;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(&mut quot);
    quot
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}

/// The n-th cyclotomic polynomial, as the exact quotient of x^n - 1 by
/// Phi_d over all proper divisors d of n.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut p: IntPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            p = int_poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

struct FieldData {
    conductor: u64,
    /// Phi_n, monic, lowest degree first.
    modulus: IntPoly,
    /// zeta^k reduced, for k in 0..n.
    powers: Vec<Vec<BigRational>>,
}

/// Shared context for Q(zeta_n). Cheap to clone.
#[derive(Clone)]
pub struct CycField(Arc<FieldData>);

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.0.conductor == other.0.conductor
    }
}
impl Eq for CycField {}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.conductor)
    }
}

impl CycField {
    pub fn new(conductor: u64) -> Self {
        let modulus = cyclotomic_polynomial(conductor);
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut cur = vec![BigRational::zero(); deg];
        cur[0] = BigRational::one();
        for _ in 0..conductor {
            powers.push(cur.clone());
            cur = times_x(&cur, &modulus);
        }
        CycField(Arc::new(FieldData { conductor, modulus, powers }))
    }

    pub fn conductor(&self) -> u64 {
        self.0.conductor
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber { field: self.clone(), coeffs: vec![BigRational::zero(); self.degree()] }
    }

    pub fn one(&self) -> CycNumber {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, k: i64) -> CycNumber {
        self.from_rational(BigRational::from_integer(k.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> CycNumber {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    /// zeta_n^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycNumber {
        let n = self.0.conductor as i64;
        let idx = k.rem_euclid(n) as usize;
        CycNumber { field: self.clone(), coeffs: self.0.powers[idx].clone() }
    }

    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> CycNumber {
        assert_eq!(coeffs.len(), self.degree(), "coefficient vector has the wrong length");
        CycNumber { field: self.clone(), coeffs }
    }
}

/// Multiply a reduced residue by x and reduce modulo the monic modulus.
fn times_x(v: &[BigRational], modulus: &[BigInt]) -> Vec<BigRational> {
    let deg = v.len();
    let mut out = vec![BigRational::zero(); deg];
    let top = v[deg - 1].clone();
    for i in (1..deg).rev() {
        out[i] = v[i - 1].clone();
    }
    if !top.is_zero() {
        for (i, m) in modulus.iter().take(deg).enumerate() {
            out[i] -= &top * BigRational::from_integer(m.clone());
        }
    }
    out
}

/// Element of Q(zeta_n): coefficient vector of length deg Phi_n.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNumber {
    field: CycField,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, r: &BigRational) -> CycNumber {
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conj(&self) -> CycNumber {
        let mut out = self.field.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = &self.field.0.powers[(self.field.0.conductor as usize - k) % self.field.0.conductor as usize];
            for (o, x) in out.coeffs.iter_mut().zip(img) {
                *o += c * x;
            }
        }
        out
    }

    /// Matrix of multiplication by `self` on the power basis.
    fn mul_matrix(&self) -> RatMatrix {
        let deg = self.field.degree();
        let mut cols = Vec::with_capacity(deg);
        let mut cur = self.coeffs.clone();
        for _ in 0..deg {
            cols.push(cur.clone());
            cur = times_x(&cur, &self.field.0.modulus);
        }
        RatMatrix::from_cols(deg, &cols)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<CycNumber> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(self.field.from_rational(r.recip()));
        }
        let mut e0 = vec![BigRational::zero(); self.field.degree()];
        e0[0] = BigRational::one();
        let x = self.mul_matrix().solve(&e0)?;
        Some(self.field.from_coeffs(x))
    }

    fn assert_same_field(&self, other: &CycNumber) {
        assert_eq!(self.field.conductor(), other.field.conductor(), "mixing cyclotomic fields");
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &'a CycNumber) -> CycNumber {
        self.assert_same_field(rhs);
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &'a CycNumber) -> CycNumber {
        self.assert_same_field(rhs);
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Neg for &'a CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &'a CycNumber) -> CycNumber {
        self.assert_same_field(rhs);
        if let Some(r) = self.as_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(&r);
        }
        let deg = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let modulus = &self.field.0.modulus;
        for k in (deg..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[k], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, m) in modulus.iter().take(deg).enumerate() {
                prod[k - deg + j] -= &c * BigRational::from_integer(m.clone());
            }
        }
        prod.truncate(deg);
        CycNumber { field: self.field.clone(), coeffs: prod }
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(zeta_{})", self, self.field.conductor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
    }

    #[test]
    fn degree_is_totient_and_product_is_x_n_minus_1() {
        for n in 1..=30u64 {
            let phi = cyclotomic_polynomial(n);
            assert_eq!(phi.len() as u64 - 1, euler_phi(n));
            let mut prod = ints(&[1]);
            for d in divisors(n) {
                prod = int_poly_mul(&prod, &cyclotomic_polynomial(d));
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn zeta_has_the_right_order() {
        for n in 1..=16 {
            let k = CycField::new(n);
            let z = k.zeta_pow(1);
            let mut p = k.one();
            for _ in 0..n {
                p = &p * &z;
            }
            assert!(p.is_one());
            assert_eq!(k.zeta_pow(-1), z.conj());
            assert!((&z * &z.conj()).is_one());
        }
    }

    #[test]
    fn inverse_in_q_zeta_5() {
        let k = CycField::new(5);
        let a = &k.from_int(2) + &k.zeta_pow(1);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert!(k.zero().inv().is_none());
    }

    #[test]
    fn conductor_one_and_two_are_rational() {
        let k1 = CycField::new(1);
        assert!(k1.zeta_pow(1).is_one());
        let k2 = CycField::new(2);
        assert_eq!(k2.zeta_pow(1), k2.from_int(-1));
    }
}
