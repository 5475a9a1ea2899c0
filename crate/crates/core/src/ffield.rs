//! The finite field F_q, q = p^n, and the character group of F_q^x with
//! exact values in Q(zeta_{q-1}).
//!
//! Elements are identified with their canonical index: the coefficient
//! vector (c_0, ..., c_{n-1}) over F_p read as the base-p integer
//! c_0 + c_1 p + ... + c_{n-1} p^{n-1}. Ordering by index is lexicographic
//! from the highest-degree coefficient down.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{CycField, CycNumber};

/// Largest field this crate will tabulate.
pub const MAX_FIELD_SIZE: u64 = 1024;

/// Element of F_q, by canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqElem(pub u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Splits q = p^n, or fails if q is not a prime power.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut n = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    if r != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, n))
}

struct FieldData {
    p: u64,
    n: u32,
    q: u64,
    /// Monic modulus over F_p, lowest degree first, length n + 1.
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    /// exp[k] = g^k for k in 0..q-1.
    exp: Vec<u32>,
    /// log[x] for nonzero x.
    log: Vec<u32>,
    generator: FqElem,
    cyc: CycField,
}

/// F_q together with its canonical modulus, generator and character field.
/// Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.q == other.0.q && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} (modulus {:?})", self.0.q, self.0.modulus)
    }
}

fn digits(mut x: u64, p: u64, n: u32) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo a monic polynomial over F_p (lowest first).
fn poly_rem_fp(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let d = m.len() - 1;
    let mut r = a.to_vec();
    for k in (d..r.len()).rev() {
        let c = r[k] % p;
        if c == 0 {
            continue;
        }
        for j in 0..=d {
            r[k - d + j] = (r[k - d + j] + p * p - c * m[j] % p) % p;
        }
    }
    r.truncate(d);
    r.resize(d, 0);
    r
}

fn poly_mul_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Monic irreducibility over F_p by trial division with every monic
/// polynomial of degree 1..=deg/2.
fn is_irreducible_fp(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d as u32);
            g.push(1);
            if poly_rem_fp(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// F_{p^n} with the lexicographically smallest monic irreducible modulus
    /// (coefficients compared from degree n-1 down to 0).
    pub fn new(p: u64, n: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("field degree must be at least 1".into()));
        }
        let q = p.checked_pow(n).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(Error::FieldTooLarge(p.saturating_pow(n)))?;
        let modulus = (0..q)
            .map(|low| {
                let mut f = digits(low, p, n);
                f.push(1);
                f
            })
            .find(|f| n == 1 || is_irreducible_fp(f, p))
            .ok_or(Error::NoModulus(p, n))?;

        let qs = q as usize;
        let elems: Vec<Vec<u64>> = (0..q).map(|x| digits(x, p, n)).collect();
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        let mut neg = vec![0u32; qs];
        for a in 0..qs {
            let neg_digits: Vec<u64> = elems[a].iter().map(|&d| (p - d) % p).collect();
            neg[a] = undigits(&neg_digits, p) as u32;
            for b in 0..qs {
                let s: Vec<u64> = elems[a].iter().zip(&elems[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = undigits(&s, p) as u32;
                let prod = poly_rem_fp(&poly_mul_fp(&elems[a], &elems[b], p), &modulus, p);
                mul[a * qs + b] = undigits(&prod, p) as u32;
            }
        }
        let order = |x: usize| -> usize {
            let mut k = 1;
            let mut cur = x;
            while cur != 1 {
                cur = mul[cur * qs + x] as usize;
                k += 1;
            }
            k
        };
        let generator = (1..qs).find(|&x| order(x) == qs - 1).expect("F_q^x is cyclic");
        let mut exp = Vec::with_capacity(qs - 1);
        let mut log = vec![0u32; qs];
        let mut cur = 1usize;
        for k in 0..qs - 1 {
            exp.push(cur as u32);
            log[cur] = k as u32;
            cur = mul[cur * qs + generator] as usize;
        }
        Ok(Field(Arc::new(FieldData {
            p,
            n,
            q,
            modulus,
            add,
            mul,
            neg,
            exp,
            log,
            generator: FqElem(generator as u32),
            cyc: CycField::new(q - 1),
        })))
    }

    /// Builds F_q from q, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, n) = prime_power(q)?;
        Field::new(p, n)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.n
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Character values live in Q(zeta_{q-1}).
    pub fn cyc(&self) -> &CycField {
        &self.0.cyc
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.0.q as u32).map(FqElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FqElem> {
        (1..self.0.q as u32).map(FqElem)
    }

    pub fn coeffs(&self, x: FqElem) -> Vec<u64> {
        digits(x.0 as u64, self.0.p, self.0.n)
    }

    pub fn from_coeffs(&self, c: &[u64]) -> FqElem {
        assert!(c.len() <= self.0.n as usize, "too many coefficients");
        FqElem(undigits(&c.iter().map(|x| x % self.0.p).collect::<Vec<_>>(), self.0.p) as u32)
    }

    /// Image of the integer k under Z -> F_p -> F_q.
    pub fn from_int(&self, k: i64) -> FqElem {
        FqElem(k.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.0.add[a.index() * self.0.q as usize + b.index()])
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        FqElem(self.0.neg[a.index()])
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.0.mul[a.index() * self.0.q as usize + b.index()])
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::Zero("inverse of 0 in F_q"));
        }
        let k = self.0.log[a.index()] as usize;
        let qm1 = self.0.q as usize - 1;
        Ok(FqElem(self.0.exp[(qm1 - k) % qm1]))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Canonical generator of F_q^x: the smallest element of order q - 1.
    pub fn mult_generator(&self) -> FqElem {
        self.0.generator
    }

    /// Discrete logarithm with respect to [`Field::mult_generator`].
    pub fn log(&self, a: FqElem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::Zero("discrete log of 0"));
        }
        Ok(self.0.log[a.index()])
    }

    /// g^k for the canonical generator g.
    pub fn exp(&self, k: i64) -> FqElem {
        let qm1 = self.0.q as i64 - 1;
        FqElem(self.0.exp[k.rem_euclid(qm1) as usize])
    }

    pub fn pow(&self, a: FqElem, k: u64) -> FqElem {
        let mut r = FqElem::ONE;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    /// All characters of F_q^x, trivial first.
    pub fn characters(&self) -> impl Iterator<Item = Character> {
        let m = self.0.q - 1;
        (0..m).map(move |j| Character { index: j as u32, modulus: m as u32 })
    }

    pub fn character(&self, j: i64) -> Character {
        let m = self.0.q as i64 - 1;
        Character { index: j.rem_euclid(m) as u32, modulus: m as u32 }
    }

    /// chi_j(g^k) = zeta_{q-1}^{jk}.
    pub fn char_value(&self, chi: Character, b: FqElem) -> Result<CycNumber> {
        assert_eq!(chi.modulus as u64, self.0.q - 1, "character of a different field");
        let k = self.log(b)? as i64;
        Ok(self.0.cyc.zeta_pow(chi.index as i64 * k))
    }

    pub fn fmt_elem(&self, x: FqElem) -> String {
        if self.0.n == 1 {
            return x.0.to_string();
        }
        let c = self.coeffs(x);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| match (i, d) {
                (0, d) => d.to_string(),
                (1, 1) => "x".to_string(),
                (1, d) => format!("{d}x"),
                (i, 1) => format!("x^{i}"),
                (i, d) => format!("{d}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// Character chi_j of F_q^x; `index` j in Z/(q-1), j = 0 is trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    pub index: u32,
    /// q - 1
    pub modulus: u32,
}

impl Character {
    pub fn is_trivial(self) -> bool {
        self.index == 0
    }

    pub fn conj(self) -> Character {
        Character { index: (self.modulus - self.index) % self.modulus, modulus: self.modulus }
    }

    /// Pointwise product of characters.
    pub fn mul(self, other: Character) -> Character {
        assert_eq!(self.modulus, other.modulus);
        Character { index: (self.index + other.index) % self.modulus, modulus: self.modulus }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{}", self.index)
    }
}
