use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::cyclo::{CycField, CycNumber};

/// Matrix over Q(zeta_n). Stored sparsely by rows; all entries share the
/// matrix's field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    field: CycField,
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, CycNumber>>,
}

impl CycMatrix {
    pub fn zeros(field: &CycField, rows: usize, cols: usize) -> Self {
        CycMatrix { field: field.clone(), rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(field: &CycField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i].insert(i, field.one());
        }
        m
    }

    /// Dense constructor; every entry must belong to `field`.
    pub fn from_rows(field: &CycField, rows: Vec<Vec<CycNumber>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Permutation-like matrix sending basis vector `j` to `weight(j) * e_{target(j)}`.
    pub fn monomial(field: &CycField, n: usize, mut f: impl FnMut(usize) -> (usize, CycNumber)) -> Self {
        let mut m = Self::zeros(field, n, n);
        for j in 0..n {
            let (i, w) = f(j);
            m.set(i, j, w);
        }
        m
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> CycNumber {
        self.data[i].get(&j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycNumber) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert_eq!(x.field(), &self.field, "entry from a different cyclotomic field");
        if x.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, x);
        }
    }

    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &CycNumber)> {
        self.data[i].iter().map(|(&j, x)| (j, x))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn scale(&self, c: &CycNumber) -> CycMatrix {
        let mut out = Self::zeros(&self.field, self.rows, self.cols);
        if c.is_zero() {
            return out;
        }
        for (i, row) in self.data.iter().enumerate() {
            for (&j, x) in row {
                out.data[i].insert(j, x * c);
            }
        }
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> CycMatrix {
        self.scale(&self.field.from_rational(r.clone()))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CycMatrix {
        let mut out = Self::zeros(&self.field, self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, x) in row {
                out.data[j].insert(i, x.conj());
            }
        }
        out
    }

    pub fn trace(&self) -> CycNumber {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            if let Some(x) = self.data[i].get(&i) {
                t = &t + x;
            }
        }
        t
    }

    pub fn is_idempotent(&self) -> bool {
        self.rows == self.cols && &(self * self) == self
    }

    /// Rank over Q(zeta_n).
    pub fn rank(&self) -> usize {
        cyc_rank(self)
    }
}

impl<'a> Mul<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &'a CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.field, rhs.field, "mixing cyclotomic fields");
        let mut out = CycMatrix::zeros(&self.field, self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, CycNumber> = BTreeMap::new();
            for (&k, a) in row {
                for (&j, b) in &rhs.data[k] {
                    let p = a * b;
                    match acc.get_mut(&j) {
                        Some(x) => *x = &*x + &p,
                        None => {
                            acc.insert(j, p);
                        }
                    }
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.data[i] = acc;
        }
        out
    }
}

fn combine(a: &CycMatrix, b: &CycMatrix, sign: bool) -> CycMatrix {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "dimension mismatch");
    assert_eq!(a.field, b.field, "mixing cyclotomic fields");
    let mut out = a.clone();
    for (i, row) in b.data.iter().enumerate() {
        for (&j, x) in row {
            let cur = out.get(i, j);
            let v = if sign { &cur + x } else { &cur - x };
            out.set(i, j, v);
        }
    }
    out
}

impl<'a> Add<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn add(self, rhs: &'a CycMatrix) -> CycMatrix {
        combine(self, rhs, true)
    }
}

impl<'a> Sub<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn sub(self, rhs: &'a CycMatrix) -> CycMatrix {
        combine(self, rhs, false)
    }
}

impl<'a> Neg for &'a CycMatrix {
    type Output = CycMatrix;
    fn neg(self) -> CycMatrix {
        self.scale(&self.field.from_int(-1))
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                writeln!(f, "  ({i}, {j}) = {x}")?;
            }
        }
        Ok(())
    }
}

/// Rank by Gaussian elimination on sparse rows with exact zero tests.
/// Each incoming row is reduced against the pivots found so far; a row
/// that survives becomes a new pivot, normalized to leading coefficient 1.
pub fn cyc_rank(m: &CycMatrix) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, CycNumber>> = HashMap::new();
    for row in &m.data {
        let mut r = row.clone();
        while let Some((&lead, lead_val)) = r.iter().next() {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = lead_val.clone();
                    for (&j, x) in p {
                        let prod = &factor * x;
                        let v = match r.get(&j) {
                            Some(cur) => cur - &prod,
                            None => -&prod,
                        };
                        if v.is_zero() {
                            r.remove(&j);
                        } else {
                            r.insert(j, v);
                        }
                    }
                    debug_assert!(!r.contains_key(&lead));
                }
                None => {
                    let inv = lead_val.inv().expect("nonzero entry is invertible");
                    let normalized = r.iter().map(|(&j, x)| (j, x * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}
