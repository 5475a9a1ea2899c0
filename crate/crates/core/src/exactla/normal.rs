//! Smith and Hermite normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`snf`]: `u * m * v == s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries d_1 | d_2 | ...
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).take_while(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        if m[(src, j)].is_zero() {
            continue;
        }
        let v = &m[(dst, j)] + k * &m[(src, j)];
        m[(dst, j)] = v;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        if m[(i, src)].is_zero() {
            continue;
        }
        let v = &m[(i, dst)] + k * &m[(i, src)];
        m[(i, dst)] = v;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let v = -&m[(i, j)];
        m[(i, j)] = v;
    }
}

/// Smith normal form by elementary operations, always pivoting on the
/// entry of least absolute value in the active submatrix.
pub fn snf(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some(b) => s[(i, j)].abs() < s[b].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Snf { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let k = -(&s[(i, t)] / &s[(t, t)]);
                row_axpy(&mut s, i, t, &k);
                row_axpy(&mut u, i, t, &k);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let k = -(&s[(t, j)] / &s[(t, t)]);
                col_axpy(&mut s, j, t, &k);
                col_axpy(&mut v, j, t, &k);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility chain: fold an offending row into the pivot row
            let pivot = s[(t, t)].clone();
            let offending = (t + 1..r).find(|&i| (t + 1..c).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    row_axpy(&mut s, t, i, &BigInt::one());
                    row_axpy(&mut u, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
    }
    Snf { u, s, v }
}

/// Basis (as columns) of the integer right kernel {x in Z^n : m x = 0}.
/// The basis is saturated: it spans the kernel over Z, not just over Q.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let f = snf(m);
    let rank = f.rank();
    (rank..m.cols()).map(|j| f.v.col_vec(j)).collect()
}

/// Basis of the integer left kernel {y : y m = 0}.
pub fn integer_left_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let f = snf(m);
    let rank = f.rank();
    (rank..m.rows()).map(|i| f.u.row_vec(i)).collect()
}

/// Row-style Hermite normal form: the returned rows are an echelon basis of
/// the Z-span of the input rows, with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hnf_rows(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..dim {
        loop {
            let nonzero: Vec<usize> = (0..work.len()).filter(|&i| !work[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| work[i][col].abs()).unwrap();
            let pivot_row = work[p].clone();
            for &i in &nonzero {
                if i == p {
                    continue;
                }
                let k = &work[i][col] / &pivot_row[col];
                for j in col..dim {
                    let v = &work[i][j] - &k * &pivot_row[j];
                    work[i][j] = v;
                }
            }
        }
        if let Some(i) = (0..work.len()).find(|&i| !work[i][col].is_zero()) {
            let mut row = work.swap_remove(i);
            if row[col].is_negative() {
                row.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(row);
            pivot_cols.push(col);
        }
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // reduce entries above pivots
    for k in 0..out.len() {
        let col = pivot_cols[k];
        let pivot_row = out[k].clone();
        for i in 0..k {
            let q = out[i][col].div_floor(&pivot_row[col]);
            if q.is_zero() {
                continue;
            }
            for j in col..dim {
                let v = &out[i][j] - &q * &pivot_row[j];
                out[i][j] = v;
            }
        }
    }
    out
}

/// Pivot column of each row of an echelon basis.
pub fn pivot_columns(echelon: &[Vec<BigInt>]) -> Vec<usize> {
    echelon.iter().map(|r| r.iter().position(|x| !x.is_zero()).expect("zero row in echelon basis")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_contract(m: &IntMatrix) {
        let f = snf(m);
        assert_eq!(&(&f.u * m) * &f.v, f.s);
        assert!(f.u.is_unimodular());
        assert!(f.v.is_unimodular());
        let d = f.invariant_factors();
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        for i in 0..f.s.rows() {
            for j in 0..f.s.cols() {
                if i != j {
                    assert!(f.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_of_connecting_matrix() {
        let m = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]);
        let f = snf(&m);
        assert_eq!(f.s, IntMatrix::from_i64_rows(&[&[1, 0], &[0, 3]]));
        check_contract(&m);
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = IntMatrix::identity(2);
        let f = snf(&id);
        assert_eq!(f.s, id);
        assert_eq!(f.u, id);
        assert_eq!(f.v, id);
        let z = IntMatrix::zeros(1, 1);
        assert_eq!(snf(&z).s, z);
    }

    #[test]
    fn snf_needs_divisibility_fix() {
        // diag(2, 3) is diagonal but not in Smith form
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let f = snf(&m);
        assert_eq!(f.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
        check_contract(&m);
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMatrix::from_i64_rows(&[&[4, 6, 8], &[2, 4, 10]]);
        check_contract(&m);
        let m = m.transpose();
        check_contract(&m);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y = 0 over Z: kernel generated by (-2, 1), not 2*(-2,1)
        let m = IntMatrix::from_i64_rows(&[&[1, 2]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(&v[0] + &v[1] * BigInt::from(2), BigInt::zero());
        assert!(v[1].abs().is_one());
    }

    #[test]
    fn hnf_is_canonical() {
        let a = vec![vec![BigInt::from(2), BigInt::from(4)], vec![BigInt::from(0), BigInt::from(3)]];
        let b = vec![vec![BigInt::from(2), BigInt::from(1)], vec![BigInt::from(2), BigInt::from(4)]];
        assert_eq!(hnf_rows(&a, 2), hnf_rows(&b, 2));
        assert_eq!(hnf_rows(&a, 2), vec![vec![BigInt::from(2), BigInt::from(1)], vec![BigInt::from(0), BigInt::from(3)]]);
    }
}
