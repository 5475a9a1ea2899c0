use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::{Field, FqElem};

use super::poly::Poly;
use super::ratfunc::RationalFunction;

/// Irreducible polynomials with constant term 1, in canonical order
/// (degree, then coefficients compared from the top down). Grown lazily.
#[derive(Clone, Debug)]
pub struct IrreducibleTable {
    field: Field,
    complete_degree: usize,
    list: Vec<Poly>,
    index: HashMap<Poly, usize>,
}

impl IrreducibleTable {
    pub fn new(f: &Field) -> IrreducibleTable {
        IrreducibleTable { field: f.clone(), complete_degree: 0, list: Vec::new(), index: HashMap::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Makes sure every irreducible of degree <= d is listed.
    pub fn ensure_degree(&mut self, d: usize) {
        while self.complete_degree < d {
            let deg = self.complete_degree + 1;
            for p in candidates(&self.field, deg) {
                if self.is_irreducible_by_table(&p, deg) {
                    self.index.insert(p.clone(), self.list.len());
                    self.list.push(p);
                }
            }
            self.complete_degree = deg;
        }
    }

    fn is_irreducible_by_table(&self, p: &Poly, deg: usize) -> bool {
        let f = &self.field;
        self.list
            .iter()
            .take_while(|g| 2 * g.degree().unwrap() <= deg)
            .all(|g| !g.divides(p, f))
    }

    /// Makes sure at least m irreducibles are listed.
    pub fn ensure_count(&mut self, m: usize) {
        while self.list.len() < m {
            self.ensure_degree(self.complete_degree + 1);
        }
    }

    pub fn first(&mut self, m: usize) -> Vec<Poly> {
        self.ensure_count(m);
        self.list[..m].to_vec()
    }

    /// f_i with 1-based i.
    pub fn get(&mut self, i: usize) -> Result<Poly> {
        if i == 0 {
            return Err(Error::InvalidParameter("irreducible indices start at 1".into()));
        }
        self.ensure_count(i);
        Ok(self.list[i - 1].clone())
    }

    /// 1-based index of a normalized irreducible.
    pub fn index_of(&mut self, p: &Poly) -> Option<usize> {
        self.ensure_degree(p.degree()?);
        self.index.get(p).map(|&i| i + 1)
    }

    pub fn listed(&self) -> &[Poly] {
        &self.list
    }
}

// Degree-d polynomials with constant term 1 in canonical order.
fn candidates(f: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = f.q() as usize;
    let mid = q.pow(d as u32 - 1);
    (0..(q - 1) * mid).map(move |idx| {
        let mut c = vec![FqElem::ZERO; d + 1];
        c[0] = FqElem::ONE;
        c[d] = FqElem((1 + idx / mid) as u32);
        let mut rest = idx % mid;
        for i in 1..d {
            // c_1 is the least significant digit, c_{d-1} the most
            c[i] = FqElem((rest % q) as u32);
            rest /= q;
        }
        Poly::new(c)
    })
}

/// First m irreducible polynomials with constant term 1.
pub fn irreducibles_normalized(f: &Field, m: usize) -> Vec<Poly> {
    IrreducibleTable::new(f).first(m)
}

/// r = unit * T^t_exponent * prod f_i^{e_i}.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GammaFactorization {
    pub unit: u32,
    pub t_exponent: i64,
    /// (1-based irreducible index, nonzero exponent), sorted by index.
    pub factors: Vec<(usize, i64)>,
}

impl GammaFactorization {
    pub fn unit_elem(&self) -> FqElem {
        FqElem(self.unit)
    }

    pub fn exponent_of(&self, i: usize) -> i64 {
        self.factors.iter().find(|&&(j, _)| j == i).map_or(0, |&(_, e)| e)
    }

    pub fn reassemble(&self, table: &mut IrreducibleTable) -> Result<RationalFunction> {
        let f = table.field().clone();
        let mut r = RationalFunction::constant(self.unit_elem()).mul(&RationalFunction::t_pow(self.t_exponent), &f);
        for &(i, e) in &self.factors {
            let p = RationalFunction::from_poly(table.get(i)?);
            r = r.mul(&p.pow(e, &f)?, &f);
        }
        Ok(r)
    }
}

pub fn gamma_factorize(r: &RationalFunction, f: &Field) -> Result<GammaFactorization> {
    gamma_factorize_with(r, &mut IrreducibleTable::new(f))
}

pub fn gamma_factorize_with(r: &RationalFunction, table: &mut IrreducibleTable) -> Result<GammaFactorization> {
    if r.is_zero() {
        return Err(Error::Zero("Gamma-factorization of 0"));
    }
    let f = table.field().clone();
    let unit = f.div(r.num().lowest(), r.den().lowest())?;
    let t_exponent = r.ord_t().unwrap();
    let mut exps: BTreeMap<usize, i64> = BTreeMap::new();
    for (p, sign) in [(r.num(), 1i64), (r.den(), -1i64)] {
        let core = p.shift_down(p.ord_t());
        let core = core.scale(f.inv(core.constant_term())?, &f);
        for (i, e) in factor_normalized(&core, table)? {
            *exps.entry(i).or_insert(0) += sign * e;
        }
    }
    exps.retain(|_, e| *e != 0);
    Ok(GammaFactorization { unit: unit.0, t_exponent, factors: exps.into_iter().collect() })
}

// Factors a polynomial with constant term 1 over the table by trial division.
fn factor_normalized(p: &Poly, table: &mut IrreducibleTable) -> Result<Vec<(usize, i64)>> {
    let f = table.field().clone();
    let mut rest = p.clone();
    let mut out = Vec::new();
    let mut i = 0;
    while rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        table.ensure_degree(d);
        let g = table.listed()[i].clone();
        if 2 * g.degree().unwrap() > d {
            // what remains is itself irreducible
            let idx = table.index_of(&rest).expect("normalized irreducible is listed");
            out.push((idx, 1));
            break;
        }
        let mut e = 0;
        loop {
            let (qt, rm) = rest.divrem(&g, &f)?;
            if !rm.is_zero() {
                break;
            }
            rest = qt;
            e += 1;
        }
        if e > 0 {
            out.push((i + 1, e));
        }
        i += 1;
    }
    Ok(out)
}
