use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactla::{hnf_rows, integer_left_kernel, snf, IntMatrix, RatMatrix};

/// Finitely generated subgroup of Q^dim: (1/den) times the Z-span of `rows`,
/// stored in Hermite form with den reduced, so equal lattices compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    dim: usize,
    den: BigInt,
    rows: Vec<Vec<BigInt>>,
}

/// Z^free_rank + sum Z/t_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

pub(crate) fn lcm_of_dens<'a>(v: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    v.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub(crate) fn scale_to_int(v: &[BigRational], d: &BigInt) -> Vec<BigInt> {
    v.iter().map(|x| (x * BigRational::from_integer(d.clone())).to_integer()).collect()
}

/// Rows of an integer matrix whose Z-span together with `sub` is Z^r, given
/// that the row span of `sub` is saturated.
pub(crate) fn complete_basis(sub: &[Vec<BigInt>], r: usize) -> Vec<Vec<BigInt>> {
    if sub.is_empty() {
        return (0..r).map(|i| (0..r).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    }
    let s = IntMatrix::from_rows(sub.to_vec());
    let f = snf(&s);
    debug_assert!(f.invariant_factors().iter().all(|d| d.is_one()), "sublattice not saturated");
    let vinv = f.v.to_rational().inverse().and_then(|m| m.to_integer()).expect("unimodular");
    (f.rank()..r).map(|i| vinv.row_vec(i)).collect()
}

impl Lattice {
    pub fn zero(dim: usize) -> Lattice {
        Lattice { dim, den: BigInt::one(), rows: Vec::new() }
    }

    /// Z^dim.
    pub fn standard(dim: usize) -> Lattice {
        Lattice::from_int_rows(dim, (0..dim).map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect()).collect())
    }

    pub fn from_int_rows(dim: usize, rows: Vec<Vec<BigInt>>) -> Lattice {
        Lattice::build(dim, BigInt::one(), rows)
    }

    pub fn from_rows(dim: usize, rows: &[Vec<BigRational>]) -> Lattice {
        let den = lcm_of_dens(rows.iter().flatten());
        let ints = rows.iter().map(|r| scale_to_int(r, &den)).collect();
        Lattice::build(dim, den, ints)
    }

    fn build(dim: usize, den: BigInt, rows: Vec<Vec<BigInt>>) -> Lattice {
        let rows = hnf_rows(&rows, dim);
        let g = rows.iter().flatten().fold(den.clone(), |acc, x| acc.gcd(x));
        if g.is_one() || g.is_zero() {
            return Lattice { dim, den, rows };
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect();
        Lattice { dim, den: den / &g, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| BigRational::new(x.clone(), self.den.clone())).collect())
            .collect()
    }

    fn scaled(&self, d: &BigInt) -> Vec<Vec<BigInt>> {
        let k = d / &self.den;
        self.rows.iter().map(|r| r.iter().map(|x| x * &k).collect()).collect()
    }

    pub fn sum(&self, o: &Lattice) -> Lattice {
        let d = self.den.lcm(&o.den);
        let mut rows = self.scaled(&d);
        rows.extend(o.scaled(&d));
        Lattice::build(self.dim, d, rows)
    }

    pub fn intersect(&self, o: &Lattice) -> Lattice {
        if self.rows.is_empty() || o.rows.is_empty() {
            return Lattice::zero(self.dim);
        }
        let d = self.den.lcm(&o.den);
        let a = self.scaled(&d);
        let mut stacked = a.clone();
        stacked.extend(o.scaled(&d));
        let ker = integer_left_kernel(&IntMatrix::from_rows(stacked));
        let rows = ker
            .iter()
            .map(|x| (0..self.dim).map(|j| (0..a.len()).map(|i| &x[i] * &a[i][j]).sum()).collect())
            .collect();
        Lattice::build(self.dim, d, rows)
    }

    /// Integer coordinates of v in the stored basis.
    pub fn coords(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        if v.iter().all(Zero::is_zero) {
            return Some(vec![BigInt::zero(); self.rank()]);
        }
        if self.rows.is_empty() {
            return None;
        }
        let m = RatMatrix::from_cols(self.dim, &self.basis());
        let c = m.solve(v)?;
        c.iter().all(|x| x.is_integer()).then(|| c.iter().map(|x| x.to_integer()).collect())
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, o: &Lattice) -> bool {
        o.basis().iter().all(|v| self.contains(v))
    }

    /// Invariants of self / sub; `None` if sub is not contained in self.
    pub fn quotient(&self, sub: &Lattice) -> Option<QuotientInvariants> {
        let rel: Vec<Vec<BigInt>> = sub.basis().iter().map(|v| self.coords(v)).collect::<Option<_>>()?;
        if rel.is_empty() {
            return Some(QuotientInvariants { free_rank: self.rank(), torsion: Vec::new() });
        }
        let f = snf(&IntMatrix::from_rows(rel));
        let inv = f.invariant_factors();
        Some(QuotientInvariants {
            free_rank: self.rank() - inv.len(),
            torsion: inv.into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect(),
        })
    }
}
