use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{hnf_rows, pivot_columns, snf, IntMatrix, RatMatrix};
use crate::ffield::prime_power;

use super::group::{kernel_cols, q_power, FracGroup};
use super::lattice::complete_basis;

/// Highest level accepted by the level embeddings.
pub const MAX_LEVEL: usize = 64;

/// The system Z^n -A-> Z^n -A-> ...
#[derive(Clone, Debug)]
pub struct ColimitTower {
    a: IntMatrix,
    q: u64,
}

impl ColimitTower {
    pub fn new(a: IntMatrix, q: u64) -> Result<ColimitTower> {
        let (p, _) = prime_power(q)?;
        if a.rows() != a.cols() {
            return Err(Error::DimensionMismatch { expected: a.rows(), got: a.cols() });
        }
        let det = a.determinant().abs();
        if det.is_zero() || !is_p_power(&det, p) {
            return Err(Error::UnsupportedTower(format!("|det| = {det} is not a power of {p}")));
        }
        Ok(ColimitTower { a, q })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }
}

fn is_p_power(d: &BigInt, p: u64) -> bool {
    let p = BigInt::from(p);
    let mut d = d.clone();
    while (&d % &p).is_zero() {
        d /= &p;
    }
    d.is_one()
}

fn p_valuation(d: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut d = d.abs();
    let mut k = 0;
    while !d.is_zero() && (&d % &p).is_zero() {
        d /= &p;
        k += 1;
    }
    k
}

/// Colimit realized as the union of A^{-k} Z^n inside Q^n (level 0 is Z^n).
#[derive(Clone, Debug)]
pub struct Colimit {
    tower: ColimitTower,
    group: FracGroup,
    a_inv: RatMatrix,
    /// divisible directions found from the growth of the invariant factors of A^k
    pub growth_rank: usize,
    pub growth_stabilized_at: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColimitSummary {
    pub divisible_rank: usize,
    pub lattice_rank: usize,
    pub divisible_generators: Vec<Vec<String>>,
    pub lattice_generators: Vec<Vec<String>>,
}

pub fn colimit_structure(t: &ColimitTower, window: usize, cap: usize) -> Result<Colimit> {
    let n = t.rank();
    let (p, _) = prime_power(t.q)?;
    let a = t.a.to_rational();
    let det = t.a.determinant();
    // generalized eigenspaces for the rational eigenvalues +-p^j, j >= 1
    let mut w_basis: Vec<Vec<BigRational>> = Vec::new();
    let mut used = BigRational::one();
    for j in 1..=p_valuation(&det, p) {
        for sign in [1i64, -1] {
            let lambda = BigRational::from_integer(BigInt::from(p).pow(j) * sign);
            let shifted = &a - &RatMatrix::identity(n).map(|x| x * &lambda);
            let mut pw = RatMatrix::identity(n);
            for _ in 0..n {
                pw = &pw * &shifted;
            }
            let space = pw.nullspace();
            for _ in 0..space.len() {
                used *= &lambda;
            }
            w_basis.extend(space);
        }
    }
    let rest = BigRational::from_integer(det.clone()) / used;
    if rest.abs() != BigRational::one() {
        return Err(Error::UnsupportedTower(format!(
            "eigenvalues divisible by {p} are not all rational (remaining determinant {rest})"
        )));
    }
    // Z^n meets W, in Hermite form
    let div_rows: Vec<Vec<BigInt>> = if w_basis.is_empty() {
        Vec::new()
    } else {
        let perp = RatMatrix::from_rows(w_basis.clone()).nullspace();
        let perp = if perp.is_empty() { RatMatrix::zeros(0, n) } else { RatMatrix::from_rows(perp) };
        hnf_rows(&kernel_cols(&perp), n)
    };
    let pivots = pivot_columns(&div_rows);
    let comp: Vec<Vec<BigInt>> = if div_rows.iter().zip(&pivots).all(|(r, &c)| r[c].is_one()) {
        (0..n).filter(|c| !pivots.contains(c)).map(|c| (0..n).map(|k| BigInt::from(i64::from(k == c))).collect()).collect()
    } else {
        complete_basis(&div_rows, n)
    };
    let to_q = |v: &Vec<BigInt>| v.iter().map(|x| BigRational::from_integer(x.clone())).collect::<Vec<_>>();
    let group = FracGroup::new(n, t.q, div_rows.iter().map(to_q).collect(), comp.iter().map(to_q).collect())?;
    let a_inv = a.inverse().expect("nonzero determinant");

    // A^{-1} maps the group into itself, so every A^{-k} Z^n lies in it
    for j in 0..n {
        if !group.contains(&a_inv.col_vec(j)) {
            return Err(Error::UnsupportedTower("A^{-1} Z^n is not contained in the candidate group".into()));
        }
    }
    // q^{-k} d lies in some A^{-m} Z^n
    for d in group.divisible_generators() {
        for k in 1..=window as i64 {
            let mut v: Vec<BigRational> = d.iter().map(|x| x * q_power(t.q, -k)).collect();
            let mut hit = false;
            for _ in 0..=cap {
                if v.iter().all(|x| x.is_integer()) {
                    hit = true;
                    break;
                }
                v = a.mul_vec(&v);
            }
            if !hit {
                return Err(Error::StabilizationCap { cap, what: "divisible generator not reached by the tower".into() });
            }
        }
    }
    // number of invariant factors of A^k that keep growing
    let mut counts: Vec<usize> = Vec::new();
    let mut pw = t.a.clone();
    let mut prev = snf(&pw).invariant_factors();
    let mut settled = None;
    for k in 1..=cap {
        pw = &pw * &t.a;
        let cur = snf(&pw).invariant_factors();
        counts.push(cur.iter().zip(&prev).filter(|(x, y)| x != y).count());
        prev = cur;
        if counts.len() >= window && counts[counts.len() - window..].windows(2).all(|w| w[0] == w[1]) {
            settled = Some(k + 1 - window);
            break;
        }
    }
    let at = settled.ok_or_else(|| Error::StabilizationCap { cap, what: "invariant factors of A^k".into() })?;
    let growth_rank = *counts.last().unwrap();
    if growth_rank != group.divisible_generators().len() {
        return Err(Error::UnsupportedTower(format!(
            "growth rank {growth_rank} disagrees with divisible rank {}",
            group.divisible_generators().len()
        )));
    }
    Ok(Colimit { tower: t.clone(), group, a_inv, growth_rank, growth_stabilized_at: at })
}

impl Colimit {
    pub fn group(&self) -> &FracGroup {
        &self.group
    }

    pub fn tower(&self) -> &ColimitTower {
        &self.tower
    }

    /// iota_k(v) = A^{-k} v in the ambient Q^n.
    pub fn iota_ambient(&self, k: usize, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if k > MAX_LEVEL {
            return Err(Error::InvalidParameter(format!("level {k} beyond the supported range 0..={MAX_LEVEL}")));
        }
        let mut x = v.to_vec();
        for _ in 0..k {
            x = self.a_inv.mul_vec(&x);
        }
        Ok(x)
    }

    /// Generator coordinates of iota_k(v).
    pub fn iota_coords(&self, k: usize, v: &[BigRational]) -> Result<Vec<BigRational>> {
        let x = self.iota_ambient(k, v)?;
        self.group.coordinates(&x).ok_or_else(|| Error::InvalidParameter("vector outside the colimit span".into()))
    }

    /// Generator coordinates of the image of the i-th level-k basis vector.
    pub fn iota_image(&self, k: usize, i: usize) -> Result<Vec<BigRational>> {
        let n = self.tower.rank();
        if i >= n {
            return Err(Error::InvalidParameter(format!("basis index {i} out of range")));
        }
        let e: Vec<BigRational> = (0..n).map(|j| BigRational::from_integer(i64::from(i == j).into())).collect();
        self.iota_coords(k, &e)
    }

    pub fn summary(&self) -> ColimitSummary {
        let show = |v: &[Vec<BigRational>]| v.iter().map(|g| g.iter().map(ToString::to_string).collect()).collect();
        let (d, l) = self.group.max_divisible();
        ColimitSummary {
            divisible_rank: d,
            lattice_rank: l,
            divisible_generators: show(self.group.divisible_generators()),
            lattice_generators: show(self.group.lattice_generators()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn i_plus_j(q: u64) -> IntMatrix {
        let n = (q - 1) as usize;
        IntMatrix::from_rows((0..n).map(|i| (0..n).map(|j| BigInt::from(1 + i64::from(i == j))).collect()).collect())
    }

    fn colim(a: IntMatrix, q: u64) -> Colimit {
        colimit_structure(&ColimitTower::new(a, q).unwrap(), 3, 12).unwrap()
    }

    #[test]
    fn scalar_towers() {
        let c = colim(IntMatrix::from_i64_rows(&[[2]]), 2);
        assert_eq!(c.group().max_divisible(), (1, 0));
        let c = colim(IntMatrix::identity(3), 5);
        assert_eq!(c.group().max_divisible(), (0, 3));
        assert!(ColimitTower::new(IntMatrix::from_i64_rows(&[[6]]), 2).is_err());
    }

    #[test]
    fn two_by_two_example() {
        let c = colim(IntMatrix::from_i64_rows(&[[2, 1], [1, 2]]), 3);
        assert_eq!(c.group().max_divisible(), (1, 1));
        assert_eq!(c.group().divisible_generators()[0], vec![rat(1), rat(1)]);
        assert_eq!(c.growth_rank, 1);
    }

    #[test]
    fn irrational_eigenvalue_is_rejected() {
        // char poly x^2 - 2x - 2 has no rational roots, det -2
        let t = ColimitTower::new(IntMatrix::from_i64_rows(&[[1, 1], [3, 1]]), 2).unwrap();
        assert!(matches!(colimit_structure(&t, 3, 12), Err(Error::UnsupportedTower(_))));
    }

    #[test]
    fn connecting_tower_structure() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let c = colim(i_plus_j(q), q);
            assert_eq!(c.group().max_divisible(), (1, q as usize - 2), "q = {q}");
            let n = (q - 1) as usize;
            assert_eq!(c.group().divisible_generators()[0], vec![rat(1); n]);
        }
    }

    #[test]
    fn level_images() {
        for q in [3u64, 4, 5] {
            let c = colim(i_plus_j(q), q);
            let n = (q - 1) as usize;
            let qi = q as i64;
            for k in 0..5u32 {
                let qk = qi.pow(k);
                let top = c.iota_coords(k as usize, &vec![rat(1); n]).unwrap();
                let mut want = vec![rat(0); n];
                want[0] = ratio(1, qk);
                assert_eq!(top, want);
                for chi in 1..n {
                    let img = c.iota_image(k as usize, chi).unwrap();
                    let mut want = vec![rat(0); n];
                    want[0] = ratio(-(qk - 1), qk * (qi - 1));
                    want[chi] = rat(1);
                    assert_eq!(img, want);
                }
            }
        }
    }

    #[test]
    fn level_cap() {
        let c = colim(i_plus_j(3), 3);
        assert!(c.iota_image(MAX_LEVEL, 0).is_ok());
        assert!(c.iota_image(MAX_LEVEL + 1, 0).is_err());
    }
}
