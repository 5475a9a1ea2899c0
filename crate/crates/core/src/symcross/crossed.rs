use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::CycNumber;
use crate::ffield::Field;
use crate::funcfield::RationalFunction;

use super::cyl::CylFunction;

pub type Label = (RationalFunction, RationalFunction);

/// Finite sum of f * v^a * t_b in the unitalized crossed product; the
/// formal unit is the constant part of the coefficient at (0, 1).
#[derive(Clone, Debug)]
pub struct CrossedElement {
    field: Field,
    prec: usize,
    terms: BTreeMap<Label, CylFunction>,
}

impl PartialEq for CrossedElement {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.terms == o.terms
    }
}

impl CrossedElement {
    pub fn zero(f: &Field, prec: usize) -> CrossedElement {
        CrossedElement { field: f.clone(), prec, terms: BTreeMap::new() }
    }

    /// g * v^a * t_b.
    pub fn monomial(f: &Field, prec: usize, g: CylFunction, a: RationalFunction, b: RationalFunction) -> Result<CrossedElement> {
        if b.is_zero() {
            return Err(Error::Zero("t_b with b = 0"));
        }
        let mut x = CrossedElement::zero(f, prec);
        x.accumulate((a, b), g);
        Ok(x)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(mut self, prec: usize) -> CrossedElement {
        self.prec = prec;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &CylFunction)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, key: Label, g: CylFunction) {
        if g.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(h) => h.add(&g, &self.field),
            None => g,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    fn check_field(&self, o: &CrossedElement) {
        assert_eq!(self.field, o.field, "elements over different fields");
    }

    pub fn add(&self, o: &CrossedElement) -> CrossedElement {
        self.check_field(o);
        let mut out = self.clone();
        out.prec = self.prec.min(o.prec);
        for (k, g) in &o.terms {
            out.accumulate(k.clone(), g.clone());
        }
        out
    }

    pub fn neg(&self) -> CrossedElement {
        let terms = self.terms.iter().map(|(k, g)| (k.clone(), g.neg())).collect();
        CrossedElement { field: self.field.clone(), prec: self.prec, terms }
    }

    pub fn sub(&self, o: &CrossedElement) -> CrossedElement {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &CycNumber) -> CrossedElement {
        let mut out = CrossedElement::zero(&self.field, self.prec);
        for (k, g) in &self.terms {
            out.accumulate(k.clone(), g.scale(c));
        }
        out
    }

    /// (f v^a t_b)(g v^a' t_b') = f g(b^{-1}(. - a)) v^{a + b a'} t_{b b'}.
    pub fn mul(&self, o: &CrossedElement) -> Result<CrossedElement> {
        self.check_field(o);
        let f = &self.field;
        let prec = self.prec.min(o.prec);
        let mut out = CrossedElement::zero(f, prec);
        for ((a, b), g) in &self.terms {
            for ((a2, b2), h) in &o.terms {
                let moved = h.transport(a, b, f, prec)?;
                let coeff = g.mul(&moved, f);
                let key = (a.add(&b.mul(a2, f), f), b.mul(b2, f));
                out.accumulate(key, coeff);
            }
        }
        Ok(out)
    }

    /// (f v^a t_b)^* = conj(f)(b . + a) v^{-a/b} t_{1/b}.
    pub fn star(&self) -> Result<CrossedElement> {
        let f = &self.field;
        let mut out = CrossedElement::zero(f, self.prec);
        for ((a, b), g) in &self.terms {
            let binv = b.inv(f)?;
            let na = a.mul(&binv, f).neg(f);
            let moved = g.conj().transport(&na, &binv, f, self.prec)?;
            out.accumulate((na, binv), moved);
        }
        Ok(out)
    }

    /// Conjugation by t_d: f v^a t_b -> f(d^{-1} .) v^{da} t_b.
    pub fn mu(&self, d: &RationalFunction) -> Result<CrossedElement> {
        let f = &self.field;
        if d.is_zero() {
            return Err(Error::Zero("mu_d with d = 0"));
        }
        let mut out = CrossedElement::zero(f, self.prec);
        for ((a, b), g) in &self.terms {
            let moved = g.transport(&RationalFunction::zero(), d, f, self.prec)?;
            out.accumulate((d.mul(a, f), b.clone()), moved);
        }
        Ok(out)
    }

    pub fn display(&self) -> CrossedDisplay<'_> {
        CrossedDisplay { x: self }
    }
}

/// Equality of canonical forms, with the first differing term on failure.
pub fn check_identity(lhs: &CrossedElement, rhs: &CrossedElement) -> std::result::Result<(), String> {
    if lhs.field != rhs.field {
        return Err("elements over different fields".into());
    }
    let f = &lhs.field;
    let keys: std::collections::BTreeSet<&Label> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
    for k in keys {
        let (l, r) = (lhs.terms.get(k), rhs.terms.get(k));
        if l != r {
            let show = |g: Option<&CylFunction>| g.map_or("0".to_string(), |g| g.display(f).to_string());
            return Err(format!(
                "coefficient of v^[{}] t_[{}] differs: {} vs {}",
                k.0.display(f),
                k.1.display(f),
                show(l),
                show(r)
            ));
        }
    }
    Ok(())
}

pub struct CrossedDisplay<'a> {
    x: &'a CrossedElement,
}

impl fmt::Display for CrossedDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.x.field;
        if self.x.terms.is_empty() {
            return write!(out, "0");
        }
        let parts: Vec<String> = self
            .x
            .terms
            .iter()
            .map(|((a, b), g)| format!("[{}] v^[{}] t_[{}]", g.display(f), a.display(f), b.display(f)))
            .collect();
        write!(out, "{}", parts.join(" + "))
    }
}
