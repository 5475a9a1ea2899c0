use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactla::CycNumber;
use crate::ffield::{Character, Field, FqElem};
use crate::funcfield::{IrreducibleTable, RationalFunction};

use super::crossed::CrossedElement;
use super::cyl::{CylFunction, CylinderSet};

pub const DEFAULT_PRECISION: usize = 8;

/// Elements that appear in the computation, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Unit,
    /// 1_n, the indicator of T^n F_q[[T]]
    OneN(i64),
    /// p_chi
    P(u32),
    /// 1 * p_chi
    OneP(u32),
    /// x_{chi bar}
    X(u32),
    /// w_chi
    W(u32),
    /// (1 * p_chi, t(m))
    OneT { chi: u32, m: usize },
}

/// Builder bound to one field and precision.
pub struct Algebra {
    field: Field,
    prec: usize,
    table: IrreducibleTable,
}

impl Algebra {
    pub fn new(field: &Field, prec: usize) -> Algebra {
        Algebra { field: field.clone(), prec, table: IrreducibleTable::new(field) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// f_i with 1-based index.
    pub fn irreducible(&mut self, i: usize) -> Result<RationalFunction> {
        Ok(RationalFunction::from_poly(self.table.get(i)?))
    }

    fn mono(&self, g: CylFunction, a: RationalFunction, b: RationalFunction) -> CrossedElement {
        CrossedElement::monomial(&self.field, self.prec, g, a, b).expect("nonzero multiplier")
    }

    fn character(&self, chi: u32) -> Result<Character> {
        let n = self.field.q() as u32 - 1;
        if chi >= n {
            return Err(Error::InvalidParameter(format!("character index {chi} out of range 0..{n}")));
        }
        Ok(self.field.character(chi as i64))
    }

    pub fn scalar(&self, c: CycNumber) -> CrossedElement {
        self.mono(CylFunction::constant(c), RationalFunction::zero(), RationalFunction::one())
    }

    pub fn unit(&self) -> CrossedElement {
        self.scalar(self.field.cyc().one())
    }

    pub fn function(&self, g: CylFunction) -> CrossedElement {
        self.mono(g, RationalFunction::zero(), RationalFunction::one())
    }

    pub fn indicator(&self, x: CylinderSet) -> CrossedElement {
        self.function(CylFunction::indicator(x, self.field.cyc()))
    }

    pub fn one_n(&self, n: i64) -> CrossedElement {
        self.indicator(CylinderSet::ball(n))
    }

    pub fn v(&self, a: RationalFunction) -> CrossedElement {
        self.mono(CylFunction::constant(self.field.cyc().one()), a, RationalFunction::one())
    }

    pub fn t(&self, b: RationalFunction) -> Result<CrossedElement> {
        CrossedElement::monomial(&self.field, self.prec, CylFunction::constant(self.field.cyc().one()), RationalFunction::zero(), b)
    }

    /// (1/(q-1)) sum_b chi(b) t_b.
    pub fn p(&self, chi: u32) -> Result<CrossedElement> {
        let c = self.character(chi)?;
        let f = &self.field;
        let w = BigRational::new(1.into(), (f.q() - 1).into());
        let mut out = CrossedElement::zero(f, self.prec);
        for b in f.nonzero() {
            let coeff = f.char_value(c, b)?.scale(&w);
            out = out.add(&self.mono(CylFunction::constant(coeff), RationalFunction::zero(), RationalFunction::constant(b)));
        }
        Ok(out)
    }

    pub fn one_p(&self, chi: u32) -> Result<CrossedElement> {
        self.one_n(0).mul(&self.p(chi)?)
    }

    /// sum_b conj(chi)(b) 1[b + T F_q[[T]]].
    pub fn x_bar(&self, chi: u32) -> Result<CrossedElement> {
        let c = self.character(chi)?;
        let f = &self.field;
        let atoms = f
            .nonzero()
            .map(|b| Ok((CylinderSet::new(1, [(0, b)]), f.char_value(c, b)?.conj())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.function(CylFunction::from_atoms(f, f.cyc().zero(), atoms)))
    }

    /// t_T (1 p_1) + x_{chi bar} p_chi + (1 p_chi) t_T^* + (1 - 1 p_1 - 1 p_chi).
    pub fn w(&self, chi: u32) -> Result<CrossedElement> {
        let tt = self.t(RationalFunction::t_pow(1))?;
        let tt_star = self.t(RationalFunction::t_pow(-1))?;
        let p1 = self.one_p(0)?;
        let pc = self.one_p(chi)?;
        let a = tt.mul(&p1)?;
        let b = self.x_bar(chi)?.mul(&self.p(chi)?)?;
        let c = pc.mul(&tt_star)?;
        let d = self.unit().sub(&p1).sub(&pc);
        Ok(a.add(&b).add(&c).add(&d))
    }

    /// t(m) (1 p_chi) + (1 - 1 p_chi).
    pub fn one_t(&mut self, chi: u32, m: usize) -> Result<CrossedElement> {
        let fm = self.irreducible(m)?;
        let pc = self.one_p(chi)?;
        Ok(self.t(fm)?.mul(&pc)?.add(&self.unit().sub(&pc)))
    }

    /// p_chi (sum_b psi(b) v^{b T^n} 1_{n+1} v^{-b T^n}).
    pub fn mvn_isometry(&self, chi: u32, psi: u32, n: i64) -> Result<CrossedElement> {
        let ps = self.character(psi)?;
        let f = &self.field;
        let atoms = f
            .nonzero()
            .map(|b| Ok((CylinderSet::new(n + 1, [(n, b)]), f.char_value(ps, b)?)))
            .collect::<Result<Vec<_>>>()?;
        let s = self.function(CylFunction::from_atoms(f, f.cyc().zero(), atoms));
        self.p(chi)?.mul(&s)
    }

    pub fn build(&mut self, name: Named) -> Result<CrossedElement> {
        match name {
            Named::Unit => Ok(self.unit()),
            Named::OneN(n) => Ok(self.one_n(n)),
            Named::P(c) => self.p(c),
            Named::OneP(c) => self.one_p(c),
            Named::X(c) => self.x_bar(c),
            Named::W(c) => self.w(c),
            Named::OneT { chi, m } => self.one_t(chi, m),
        }
    }

    /// b + T F_q[[T]] for a nonzero constant b.
    pub fn unit_coset(&self, b: FqElem) -> CylinderSet {
        CylinderSet::new(1, [(0, b)])
    }
}
