use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{CycField, CycNumber};
use crate::ffield::{Field, FqElem};
use crate::funcfield::{laurent_expand, Poly, RationalFunction};

/// The ball center + T^level * F_q[[T]]. The center is stored as its
/// nonzero terms (exponent, coefficient), exponents increasing and < level.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CylinderSet {
    level: i64,
    center: Vec<(i64, FqElem)>,
}

impl CylinderSet {
    /// T^level * F_q[[T]].
    pub fn ball(level: i64) -> CylinderSet {
        CylinderSet { level, center: Vec::new() }
    }

    /// center + T^level F_q[[T]]; terms at or above the level are dropped.
    pub fn new(level: i64, terms: impl IntoIterator<Item = (i64, FqElem)>) -> CylinderSet {
        let mut m: BTreeMap<i64, FqElem> = BTreeMap::new();
        for (e, c) in terms {
            if e < level && !c.is_zero() {
                m.insert(e, c);
            }
        }
        CylinderSet { level, center: m.into_iter().collect() }
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn center(&self) -> &[(i64, FqElem)] {
        &self.center
    }

    /// Coefficient of T^e in the canonical center.
    pub fn digit(&self, e: i64) -> FqElem {
        self.center.iter().find(|&&(x, _)| x == e).map_or(FqElem::ZERO, |&(_, c)| c)
    }

    /// Smallest exponent at which the ball is not all of T^e F_q[[T]].
    fn floor(&self) -> i64 {
        self.center.first().map_or(self.level, |&(e, _)| e.min(self.level))
    }

    pub fn contains(&self, other: &CylinderSet) -> bool {
        other.level >= self.level && self.agrees_below(other, self.level)
    }

    pub fn contains_point(&self, terms: &[(i64, FqElem)]) -> bool {
        let lo = self.floor().min(terms.iter().map(|t| t.0).min().unwrap_or(self.level));
        (lo..self.level).all(|e| {
            let x = terms.iter().filter(|t| t.0 == e).map(|t| t.1).next().unwrap_or(FqElem::ZERO);
            x == self.digit(e)
        })
    }

    fn agrees_below(&self, other: &CylinderSet, k: i64) -> bool {
        let a = self.center.iter().filter(|t| t.0 < k);
        let b = other.center.iter().filter(|t| t.0 < k);
        a.eq(b)
    }

    /// Intersection, which for balls is empty or the smaller one.
    pub fn intersect(&self, other: &CylinderSet) -> Option<CylinderSet> {
        let k = self.level.min(other.level);
        if !self.agrees_below(other, k) {
            return None;
        }
        Some(if self.level >= other.level { self.clone() } else { other.clone() })
    }

    fn center_function(&self, f: &Field) -> RationalFunction {
        let Some(&(lo, _)) = self.center.first() else {
            return RationalFunction::zero();
        };
        let hi = self.center.last().unwrap().0;
        let mut c = vec![FqElem::ZERO; (hi - lo + 1) as usize];
        for &(e, x) in &self.center {
            c[(e - lo) as usize] = x;
        }
        RationalFunction::from_poly(Poly::new(c)).mul(&RationalFunction::t_pow(lo), f)
    }

    pub fn display<'a>(&'a self, f: &'a Field) -> CylDisplay<'a> {
        CylDisplay { x: self, field: f }
    }
}

/// The coset b*X + a. Fails if canonicalizing the new center needs more
/// than `prec` Laurent coefficients.
pub fn affine_coset(
    x: &CylinderSet,
    a: &RationalFunction,
    b: &RationalFunction,
    f: &Field,
    prec: usize,
) -> Result<CylinderSet> {
    let kb = b.ord_t().ok_or(Error::Zero("multiplier of an affine map"))?;
    let level = x.level + kb;
    let r = b.mul(&x.center_function(f), f).add(a, f);
    let Some(v) = r.ord_t().filter(|&v| v < level) else {
        return Ok(CylinderSet::ball(level));
    };
    let needed = level - v;
    if needed > prec as i64 {
        return Err(Error::PrecisionExhausted { needed, available: prec as i64 });
    }
    let s = laurent_expand(&r, needed as usize, f)?;
    let terms = s.coeffs().iter().enumerate().map(|(i, &c)| (v + i as i64, c));
    Ok(CylinderSet::new(level, terms))
}

/// c + sum of values on disjoint balls, in canonical form: the balls are
/// the maximal ones on which the compactly supported part is a nonzero
/// constant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CylFunction {
    constant: CycNumber,
    atoms: BTreeMap<CylinderSet, CycNumber>,
}

impl CylFunction {
    pub fn zero(k: &CycField) -> CylFunction {
        CylFunction { constant: k.zero(), atoms: BTreeMap::new() }
    }

    pub fn constant(c: CycNumber) -> CylFunction {
        CylFunction { constant: c, atoms: BTreeMap::new() }
    }

    pub fn indicator(x: CylinderSet, k: &CycField) -> CylFunction {
        let mut atoms = BTreeMap::new();
        atoms.insert(x, k.one());
        CylFunction { constant: k.zero(), atoms }
    }

    /// Canonicalizes an arbitrary (possibly overlapping) sum of atoms.
    pub fn from_atoms(f: &Field, constant: CycNumber, atoms: Vec<(CylinderSet, CycNumber)>) -> CylFunction {
        let k = constant.field().clone();
        let atoms: Vec<_> = atoms.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if atoms.is_empty() {
            return CylFunction { constant, atoms: BTreeMap::new() };
        }
        let root = atoms.iter().map(|(x, _)| x.floor()).min().unwrap();
        let mut trie = Node::default();
        for (x, v) in atoms {
            let mut node = &mut trie;
            for e in root..x.level {
                node = node.children.entry(x.digit(e).0).or_default();
            }
            node.value = Some(match node.value.take() {
                Some(w) => &w + &v,
                None => v,
            });
        }
        let mut out = BTreeMap::new();
        let mut path = Vec::new();
        match canon(&trie, &k.zero(), root, &mut path, f.q() as u32, &mut out) {
            Outcome::Const(v) if !v.is_zero() => {
                out.insert(CylinderSet::ball(root), v);
            }
            _ => {}
        }
        CylFunction { constant, atoms: out }
    }

    pub fn constant_part(&self) -> &CycNumber {
        &self.constant
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&CylinderSet, &CycNumber)> {
        self.atoms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.atoms.is_empty()
    }

    pub fn cyc(&self) -> &CycField {
        self.constant.field()
    }

    pub fn eval(&self, point: &[(i64, FqElem)]) -> CycNumber {
        let mut v = self.constant.clone();
        for (x, c) in &self.atoms {
            if x.contains_point(point) {
                v = &v + c;
            }
        }
        v
    }

    pub fn add(&self, o: &CylFunction, f: &Field) -> CylFunction {
        let atoms = self.atoms.iter().chain(&o.atoms).map(|(x, v)| (x.clone(), v.clone())).collect();
        CylFunction::from_atoms(f, &self.constant + &o.constant, atoms)
    }

    pub fn neg(&self) -> CylFunction {
        CylFunction { constant: -&self.constant, atoms: self.atoms.iter().map(|(x, v)| (x.clone(), -v)).collect() }
    }

    pub fn scale(&self, c: &CycNumber) -> CylFunction {
        if c.is_zero() {
            return CylFunction::zero(self.cyc());
        }
        CylFunction {
            constant: &self.constant * c,
            atoms: self.atoms.iter().map(|(x, v)| (x.clone(), v * c)).collect(),
        }
    }

    /// Pointwise product.
    pub fn mul(&self, o: &CylFunction, f: &Field) -> CylFunction {
        let mut atoms = Vec::new();
        for (x, v) in &self.atoms {
            if !o.constant.is_zero() {
                atoms.push((x.clone(), v * &o.constant));
            }
            for (y, w) in &o.atoms {
                if let Some(z) = x.intersect(y) {
                    atoms.push((z, v * w));
                }
            }
        }
        if !self.constant.is_zero() {
            atoms.extend(o.atoms.iter().map(|(y, w)| (y.clone(), &self.constant * w)));
        }
        CylFunction::from_atoms(f, &self.constant * &o.constant, atoms)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> CylFunction {
        CylFunction {
            constant: self.constant.conj(),
            atoms: self.atoms.iter().map(|(x, v)| (x.clone(), v.conj())).collect(),
        }
    }

    /// g(b^{-1}(. - a)): every ball X is replaced by bX + a.
    pub fn transport(&self, a: &RationalFunction, b: &RationalFunction, f: &Field, prec: usize) -> Result<CylFunction> {
        if a.is_zero() && b.is_one() {
            return Ok(self.clone());
        }
        // affine bijections map disjoint maximal balls to disjoint maximal balls
        let mut atoms = BTreeMap::new();
        for (x, v) in &self.atoms {
            atoms.insert(affine_coset(x, a, b, f, prec)?, v.clone());
        }
        Ok(CylFunction { constant: self.constant.clone(), atoms })
    }

    pub fn display<'a>(&'a self, f: &'a Field) -> CylFnDisplay<'a> {
        CylFnDisplay { g: self, field: f }
    }
}

#[derive(Default)]
struct Node {
    value: Option<CycNumber>,
    children: BTreeMap<u32, Node>,
}

enum Outcome {
    Const(CycNumber),
    Mixed,
}

fn canon(
    node: &Node,
    above: &CycNumber,
    level: i64,
    path: &mut Vec<(i64, FqElem)>,
    q: u32,
    out: &mut BTreeMap<CylinderSet, CycNumber>,
) -> Outcome {
    let acc = match &node.value {
        Some(v) => above + v,
        None => above.clone(),
    };
    if node.children.is_empty() {
        return Outcome::Const(acc);
    }
    let mut results = Vec::with_capacity(q as usize);
    for d in 0..q {
        let r = match node.children.get(&d) {
            Some(child) => {
                path.push((level, FqElem(d)));
                let r = canon(child, &acc, level + 1, path, q, out);
                path.pop();
                r
            }
            None => Outcome::Const(acc.clone()),
        };
        results.push(r);
    }
    if let Outcome::Const(first) = &results[0] {
        if results.iter().all(|r| matches!(r, Outcome::Const(v) if v == first)) {
            return Outcome::Const(first.clone());
        }
    }
    for (d, r) in results.into_iter().enumerate() {
        if let Outcome::Const(v) = r {
            if !v.is_zero() {
                let terms = path.iter().copied().chain([(level, FqElem(d as u32))]);
                out.insert(CylinderSet::new(level + 1, terms), v);
            }
        }
    }
    Outcome::Mixed
}

pub struct CylDisplay<'a> {
    x: &'a CylinderSet,
    field: &'a Field,
}

impl fmt::Display for CylDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(e, c) in &self.x.center {
            write!(out, "{}*T^{} + ", self.field.fmt_elem(c), e)?;
        }
        write!(out, "T^{}*O", self.x.level)
    }
}

pub struct CylFnDisplay<'a> {
    g: &'a CylFunction,
    field: &'a Field,
}

impl fmt::Display for CylFnDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.g.constant.is_zero() {
            parts.push(format!("({})", self.g.constant));
        }
        for (x, v) in &self.g.atoms {
            parts.push(format!("({})*1[{}]", v, x.display(self.field)));
        }
        if parts.is_empty() {
            write!(out, "0")
        } else {
            write!(out, "{}", parts.join(" + "))
        }
    }
}
