use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{integer_kernel, integer_left_kernel, IntMatrix, RatMatrix};
use crate::ffield::prime_power;

use super::lattice::{complete_basis, lcm_of_dens, scale_to_int, Lattice};

pub const DEFAULT_WINDOW: usize = 3;
pub const DEFAULT_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenKind {
    Divisible,
    Lattice,
}

/// sum_i Z[1/q] d_i + sum_j Z l_j inside Q^dim, with the d_i, l_j linearly
/// independent. Divisible generators come first.
#[derive(Clone, Debug, PartialEq)]
pub struct FracGroup {
    dim: usize,
    q: u64,
    p: u64,
    gens: Vec<Vec<BigRational>>,
    n_div: usize,
}

pub(crate) fn q_power(q: u64, k: i64) -> BigRational {
    let b = BigRational::from_integer(q.into());
    if k >= 0 {
        Pow::pow(b, k as u64)
    } else {
        BigRational::one() / Pow::pow(b, (-k) as u64)
    }
}

/// True if x lies in Z[1/p].
pub fn in_localization(x: &BigRational, p: u64) -> bool {
    let mut d = x.denom().clone();
    let p = BigInt::from(p);
    while (&d % &p).is_zero() {
        d /= &p;
    }
    d.is_one()
}

impl FracGroup {
    pub fn new(dim: usize, q: u64, divisible: Vec<Vec<BigRational>>, lattice: Vec<Vec<BigRational>>) -> Result<FracGroup> {
        let (p, _) = prime_power(q)?;
        let n_div = divisible.len();
        let gens: Vec<Vec<BigRational>> = divisible.into_iter().chain(lattice).collect();
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
        }
        if !gens.is_empty() && RatMatrix::from_rows(gens.clone()).rank() < gens.len() {
            return Err(Error::InvalidParameter("generators are linearly dependent".into()));
        }
        Ok(FracGroup { dim, q, p, gens, n_div })
    }

    /// Z^dim.
    pub fn standard(dim: usize, q: u64) -> Result<FracGroup> {
        let e = (0..dim).map(|i| (0..dim).map(|j| BigRational::from_integer(i64::from(i == j).into())).collect()).collect();
        FracGroup::new(dim, q, Vec::new(), e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Vec<BigRational>, GenKind)> {
        self.gens.iter().enumerate().map(|(i, g)| (g, if i < self.n_div { GenKind::Divisible } else { GenKind::Lattice }))
    }

    pub fn divisible_generators(&self) -> &[Vec<BigRational>] {
        &self.gens[..self.n_div]
    }

    pub fn lattice_generators(&self) -> &[Vec<BigRational>] {
        &self.gens[self.n_div..]
    }

    /// (rank of the maximal q-divisible subgroup, rank of the quotient by it).
    pub fn max_divisible(&self) -> (usize, usize) {
        (self.n_div, self.gens.len() - self.n_div)
    }

    fn gen_matrix(&self) -> RatMatrix {
        RatMatrix::from_cols(self.dim, &self.gens)
    }

    /// Coordinates of x with respect to the generators, if x is in their span.
    pub fn coordinates(&self, x: &[BigRational]) -> Option<Vec<BigRational>> {
        if x.len() != self.dim {
            return None;
        }
        if self.gens.is_empty() {
            return x.iter().all(Zero::is_zero).then(Vec::new);
        }
        self.gen_matrix().solve(x)
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.coordinates(x).is_some_and(|c| self.coords_admissible(&c))
    }

    fn coords_admissible(&self, c: &[BigRational]) -> bool {
        c[..self.n_div].iter().all(|x| in_localization(x, self.p)) && c[self.n_div..].iter().all(|x| x.is_integer())
    }

    /// x lies in the maximal divisible subgroup.
    pub fn contains_divisible(&self, x: &[BigRational]) -> bool {
        self.coordinates(x).is_some_and(|c| {
            c[..self.n_div].iter().all(|x| in_localization(x, self.p)) && c[self.n_div..].iter().all(Zero::is_zero)
        })
    }

    /// Same subgroup of Q^dim.
    pub fn same_group(&self, o: &FracGroup) -> bool {
        let inside = |a: &FracGroup, b: &FracGroup| {
            a.divisible_generators().iter().all(|g| b.contains_divisible(g)) && a.lattice_generators().iter().all(|g| b.contains(g))
        };
        self.dim == o.dim && self.q == o.q && inside(self, o) && inside(o, self)
    }

    /// The level-j lattice sum q^{-j} Z d_i + sum Z l_j.
    pub fn level(&self, j: i64) -> Lattice {
        let s = q_power(self.q, -j);
        let rows: Vec<Vec<BigRational>> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| if i < self.n_div { g.iter().map(|x| x * &s).collect() } else { g.clone() })
            .collect();
        Lattice::from_rows(self.dim, &rows)
    }

    fn ambient(&self, c: &[BigRational]) -> Vec<BigRational> {
        (0..self.dim).map(|k| self.gens.iter().zip(c).map(|(g, x)| &g[k] * x).sum()).collect()
    }
}

/// Homomorphism given by a rational matrix of size target.dim x source.dim.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FracGroup,
    target: FracGroup,
    matrix: RatMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CokernelReport {
    pub divisible_rank: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub stabilized_at: usize,
}

impl CokernelReport {
    pub fn is_free(&self) -> bool {
        self.divisible_rank == 0 && self.torsion.is_empty()
    }
}

fn stable_window<T: PartialEq>(seq: &[T], window: usize) -> bool {
    seq.len() >= window && seq[seq.len() - window..].windows(2).all(|w| w[0] == w[1])
}

impl GroupHom {
    pub fn new(source: FracGroup, target: FracGroup, matrix: RatMatrix) -> Result<GroupHom> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::DimensionMismatch { expected: target.dim, got: matrix.rows() });
        }
        for (g, kind) in source.generators() {
            let img = matrix.mul_vec(g);
            let ok = match kind {
                GenKind::Divisible => target.contains_divisible(&img),
                GenKind::Lattice => target.contains(&img),
            };
            if !ok {
                let shown: Vec<String> = g.iter().map(ToString::to_string).collect();
                return Err(Error::NotAHomomorphism(format!("generator ({})", shown.join(", "))));
            }
        }
        Ok(GroupHom { source, target, matrix })
    }

    /// Homomorphism given by its matrix in generator coordinates; the source
    /// generators must span Q^dim.
    pub fn from_coordinates(source: FracGroup, target: FracGroup, coords: &RatMatrix) -> Result<GroupHom> {
        if source.rank() != source.dim {
            return Err(Error::InvalidParameter("source generators do not span the ambient space".into()));
        }
        if coords.rows() != target.rank() || coords.cols() != source.rank() {
            return Err(Error::DimensionMismatch { expected: target.rank(), got: coords.rows() });
        }
        let src_inv = source.gen_matrix().inverse().expect("independent generators");
        let m = &(&target.gen_matrix() * coords) * &src_inv;
        GroupHom::new(source, target, m)
    }

    pub fn identity(g: &FracGroup) -> GroupHom {
        GroupHom { source: g.clone(), target: g.clone(), matrix: RatMatrix::identity(g.dim) }
    }

    pub fn source(&self) -> &FracGroup {
        &self.source
    }

    pub fn target(&self) -> &FracGroup {
        &self.target
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.matrix.mul_vec(x)
    }

    /// self - other (same source and target).
    pub fn sub(&self, o: &GroupHom) -> Result<GroupHom> {
        GroupHom::new(self.source.clone(), self.target.clone(), &self.matrix - &o.matrix)
    }

    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        GroupHom::new(first.source.clone(), self.target.clone(), &self.matrix * &first.matrix)
    }

    /// Matrix in generator coordinates (target coords of images of source generators).
    pub fn coordinate_matrix(&self) -> RatMatrix {
        let cols: Vec<Vec<BigRational>> = self
            .source
            .gens
            .iter()
            .map(|g| self.target.coordinates(&self.matrix.mul_vec(g)).expect("validated"))
            .collect();
        RatMatrix::from_cols(self.target.rank(), &cols)
    }

    pub fn image_rank(&self) -> usize {
        if self.source.rank() == 0 {
            return 0;
        }
        self.coordinate_matrix().rank()
    }

    /// The subgroup {x in source : f(x) = 0}.
    pub fn kernel(&self, window: usize, cap: usize) -> Result<FracGroup> {
        let src = &self.source;
        let (a, n) = (src.n_div, src.rank());
        let b = n - a;
        if n == 0 {
            return FracGroup::new(src.dim, src.q, Vec::new(), Vec::new());
        }
        // kernel in source generator coordinates
        let c = &self.matrix * &src.gen_matrix();
        // divisible part: Z^a meets the kernel of the divisible columns
        let div_cols: Vec<usize> = (0..a).collect();
        let div_basis: Vec<Vec<BigRational>> = if a == 0 {
            Vec::new()
        } else {
            kernel_cols(&c.select_cols(&div_cols))
                .into_iter()
                .map(|k| k.into_iter().map(BigRational::from_integer).chain((0..b).map(|_| BigRational::zero())).collect())
                .collect()
        };
        // level lattices K_j = D_j (Z^n meets ker(C D_j)), projected to lattice coordinates
        let mut projections: Vec<Lattice> = Vec::new();
        for j in 0..=cap {
            let s = q_power(src.q, -(j as i64));
            let d: Vec<BigRational> = (0..n).map(|i| if i < a { s.clone() } else { BigRational::one() }).collect();
            let cd = RatMatrix::from_rows(
                (0..c.rows()).map(|r| (0..n).map(|k| &c[(r, k)] * &d[k]).collect()).collect(),
            );
            let kj: Vec<Vec<BigRational>> = kernel_cols(&cd)
                .into_iter()
                .map(|col| col.into_iter().zip(&d).map(|(x, s)| BigRational::from_integer(x) * s).collect())
                .collect();
            let proj: Vec<Vec<BigRational>> = kj.iter().map(|v| v[a..].to_vec()).collect();
            projections.push(Lattice::from_rows(b, &proj));
            if stable_window(&projections, window) {
                return self.assemble_kernel(div_basis, kj, a);
            }
        }
        Err(Error::StabilizationCap { cap, what: "kernel level lattices".into() })
    }

    fn assemble_kernel(&self, div_basis: Vec<Vec<BigRational>>, kj: Vec<Vec<BigRational>>, a: usize) -> Result<FracGroup> {
        let src = &self.source;
        let r = kj.len();
        let proj: Vec<Vec<BigInt>> = kj.iter().map(|v| v[a..].iter().map(|x| x.to_integer()).collect()).collect();
        let lattice_gens: Vec<Vec<BigRational>> = if r == 0 {
            Vec::new()
        } else {
            let b = src.rank() - a;
            let comp = if b == 0 { Vec::new() } else { complete_basis(&integer_left_kernel(&IntMatrix::from_rows(proj)), r) };
            comp.iter()
                .map(|x| (0..src.rank()).map(|k| x.iter().zip(&kj).map(|(c, v)| BigRational::from_integer(c.clone()) * &v[k]).sum()).collect())
                .collect()
        };
        let div: Vec<Vec<BigRational>> = div_basis.iter().map(|c| src.ambient(c)).collect();
        let lat: Vec<Vec<BigRational>> = lattice_gens.iter().map(|c| src.ambient(c)).collect();
        FracGroup::new(src.dim, src.q, div, lat)
    }

    /// True if the images of `candidates` (vectors of the target) form a basis
    /// of a free cokernel.
    pub fn is_cokernel_basis(&self, candidates: &[Vec<BigRational>], window: usize, cap: usize) -> Result<bool> {
        let cok = self.cokernel(window, cap)?;
        if !cok.is_free() || cok.free_rank != candidates.len() {
            return Ok(false);
        }
        if candidates.iter().any(|c| !self.target.contains(c)) {
            return Ok(false);
        }
        // (x, c) -> f(x) + sum c_i candidate_i must be onto
        let (d, r) = (self.source.dim, candidates.len());
        let pad = |g: &Vec<BigRational>| g.iter().cloned().chain((0..r).map(|_| BigRational::zero())).collect::<Vec<_>>();
        let unit = |i: usize| (0..d + r).map(|k| BigRational::from_integer(i64::from(k == d + i).into())).collect::<Vec<_>>();
        let src = &self.source;
        let div = src.divisible_generators().iter().map(pad).collect();
        let lat = src.lattice_generators().iter().map(pad).chain((0..r).map(unit)).collect();
        let big = FracGroup::new(d + r, src.q, div, lat)?;
        let rows = (0..self.target.dim)
            .map(|i| (0..d).map(|j| self.matrix[(i, j)].clone()).chain(candidates.iter().map(|c| c[i].clone())).collect())
            .collect();
        let onto = GroupHom::new(big, self.target.clone(), RatMatrix::from_rows(rows))?.cokernel(window, cap)?;
        Ok(onto.divisible_rank == 0 && onto.free_rank == 0 && onto.torsion.is_empty())
    }

    /// target / f(source), as divisible rank, free rank and torsion.
    pub fn cokernel(&self, window: usize, cap: usize) -> Result<CokernelReport> {
        let tgt = &self.target;
        let (a, n) = (tgt.n_div, tgt.rank());
        let ys: Vec<Vec<BigRational>> = if self.source.rank() == 0 {
            Vec::new()
        } else {
            let m = self.coordinate_matrix();
            (0..m.cols()).map(|j| m.col_vec(j)).collect()
        };
        let span_rank = |extra: &[Vec<BigRational>]| {
            let rows: Vec<Vec<BigRational>> = ys.iter().chain(extra).cloned().collect();
            if rows.is_empty() { 0 } else { RatMatrix::from_rows(rows).rank() }
        };
        let r_img = span_rank(&[]);
        let unit = |i: usize| (0..n).map(|k| BigRational::from_integer(i64::from(k == i).into())).collect::<Vec<_>>();
        let div_units: Vec<Vec<BigRational>> = (0..a).map(unit).collect();
        let divisible_rank = span_rank(&div_units) - r_img;
        let free_rank = n - r_img - divisible_rank;
        if r_img == 0 {
            return Ok(CokernelReport { divisible_rank, free_rank, torsion: Vec::new(), stabilized_at: 0 });
        }
        // torsion: (H_j meets span f) / (H_j meets f(source)) along the level lattices
        let perp = RatMatrix::from_rows(ys.clone()).nullspace();
        let level = |j: i64| -> Vec<BigRational> { (0..n).map(|i| if i < a { q_power(tgt.q, -j) } else { BigRational::one() }).collect() };
        let src_a = self.source.n_div;
        let mut history: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..=cap {
            let dj = level(j as i64);
            let hj = Lattice::from_rows(n, &diag_rows(&dj));
            let span_part = if perp.is_empty() {
                hj.clone()
            } else {
                let cons: Vec<Vec<BigRational>> = perp.iter().map(|u| u.iter().zip(&dj).map(|(x, s)| x * s).collect()).collect();
                let ker = kernel_cols(&RatMatrix::from_rows(cons));
                let rows: Vec<Vec<BigRational>> =
                    ker.into_iter().map(|col| col.into_iter().zip(&dj).map(|(x, s)| BigRational::from_integer(x) * s).collect()).collect();
                Lattice::from_rows(n, &rows)
            };
            // ascending chain f(L_k) meets H_j
            let mut chain: Vec<Lattice> = Vec::new();
            let mut found = None;
            for k in 0..=cap {
                let s = q_power(self.source.q, -(k as i64));
                let gens: Vec<Vec<BigRational>> = ys
                    .iter()
                    .enumerate()
                    .map(|(i, y)| if i < src_a { y.iter().map(|x| x * &s).collect() } else { y.clone() })
                    .collect();
                chain.push(Lattice::from_rows(n, &gens).intersect(&hj));
                if stable_window(&chain, window) {
                    found = chain.last().cloned();
                    break;
                }
            }
            let inter = found.ok_or_else(|| Error::StabilizationCap { cap, what: format!("image meets level {j}") })?;
            let qi = span_part.quotient(&inter).expect("image part lies in the span part");
            history.push(qi.torsion);
            if stable_window(&history, window) {
                return Ok(CokernelReport { divisible_rank, free_rank, torsion: history.pop().unwrap(), stabilized_at: j + 1 - window });
            }
        }
        Err(Error::StabilizationCap { cap, what: "cokernel torsion".into() })
    }
}

fn diag_rows(d: &[BigRational]) -> Vec<Vec<BigRational>> {
    (0..d.len()).map(|i| (0..d.len()).map(|k| if k == i { d[i].clone() } else { BigRational::zero() }).collect()).collect()
}

/// Clears denominators row by row (the kernel is unchanged).
fn int_rows(m: &RatMatrix) -> IntMatrix {
    let rows = m.row_vecs().iter().map(|r| scale_to_int(r, &lcm_of_dens(r.iter()))).collect();
    IntMatrix::from_rows(rows)
}

/// Saturated basis of {x in Z^cols : m x = 0}; all of Z^cols if m has no rows.
pub(crate) fn kernel_cols(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    if m.rows() == 0 {
        return (0..m.cols()).map(|i| (0..m.cols()).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    }
    integer_kernel(&int_rows(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn v(x: &[i64]) -> Vec<BigRational> {
        x.iter().map(|&k| rat(k)).collect()
    }

    // Z[1/q] ones + Z e_1 + ... + Z e_{q-2} in Q^{q-1}
    fn tower_group(q: u64) -> FracGroup {
        let n = (q - 1) as usize;
        let ones = vec![rat(1); n];
        let lat = (1..n).map(|c| (0..n).map(|k| rat(i64::from(k == c))).collect()).collect();
        FracGroup::new(n, q, vec![ones], lat).unwrap()
    }

    // generator coordinates
    fn mu_t(q: u64) -> RatMatrix {
        let n = (q - 1) as usize;
        let qi = q as i64;
        RatMatrix::from_rows(
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| match (r, c) {
                            (0, 0) => ratio(1, qi),
                            (0, _) => ratio(-1, qi),
                            _ => rat(i64::from(r == c)),
                        })
                        .collect()
                })
                .collect(),
        )
    }

    #[test]
    fn membership() {
        let g = tower_group(3);
        assert!(g.contains(&[ratio(1, 9), ratio(1, 9)]));
        assert!(g.contains(&[ratio(1, 3), ratio(4, 3)]));
        assert!(!g.contains(&[ratio(1, 3), rat(0)]));
        assert!(!g.contains(&[ratio(1, 2), ratio(1, 2)]));
        assert!(g.contains_divisible(&[ratio(5, 27), ratio(5, 27)]));
        assert!(!g.contains_divisible(&[rat(0), rat(1)]));
        assert!(in_localization(&ratio(7, 8), 2));
        assert!(!in_localization(&ratio(1, 6), 2));
    }

    #[test]
    fn same_group_under_base_change() {
        let g = tower_group(4);
        let h = FracGroup::new(3, 4, vec![v(&[-2, -2, -2])], vec![v(&[1, 2, 1]), v(&[1, 1, 2])]).unwrap();
        assert!(g.same_group(&h));
        assert_eq!(h.max_divisible(), (1, 2));
        let k = FracGroup::new(3, 4, vec![v(&[1, 1, 1])], vec![v(&[0, 2, 0]), v(&[0, 0, 1])]).unwrap();
        assert!(!g.same_group(&k));
    }

    #[test]
    fn homomorphism_validation() {
        let z = FracGroup::standard(1, 2).unwrap();
        let zq = FracGroup::new(1, 2, vec![v(&[1])], Vec::new()).unwrap();
        let half = RatMatrix::from_rows(vec![vec![ratio(1, 2)]]);
        assert!(GroupHom::new(z.clone(), z.clone(), half.clone()).is_err());
        assert!(GroupHom::new(zq.clone(), zq.clone(), half).is_ok());
        // a divisible group has no nonzero map to Z
        assert!(GroupHom::new(zq, z, RatMatrix::identity(1)).is_err());
    }

    #[test]
    fn kernel_and_cokernel_of_one_minus_mu() {
        for q in [3u64, 4, 5, 7] {
            let g = tower_group(q);
            let mu = GroupHom::from_coordinates(g.clone(), g.clone(), &mu_t(q)).unwrap();
            let f = GroupHom::identity(&g).sub(&mu).unwrap();
            let ker = f.kernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap();
            assert_eq!(ker.max_divisible(), (0, q as usize - 2));
            let n = (q - 1) as usize;
            for chi in 1..n {
                let mut b = vec![rat(1); n];
                b.iter_mut().skip(1).for_each(|x| *x = rat(-1));
                b[chi] = rat(-2);
                // generator coordinates to ambient
                let amb: Vec<BigRational> =
                    (0..n).map(|k| b[0].clone() + if k > 0 { b[k].clone() } else { rat(0) }).collect();
                assert!(ker.contains(&amb));
            }
            let cok = f.cokernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap();
            assert_eq!((cok.divisible_rank, cok.free_rank), (0, q as usize - 2));
            assert!(cok.is_free());
        }
    }

    #[test]
    fn mu_is_bijective() {
        let g = tower_group(5);
        let mu = GroupHom::from_coordinates(g.clone(), g.clone(), &mu_t(5)).unwrap();
        assert_eq!(mu.kernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap().rank(), 0);
        let cok = mu.cokernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap();
        assert_eq!((cok.divisible_rank, cok.free_rank, cok.torsion.len()), (0, 0, 0));
    }

    #[test]
    fn multiplication_by_q_on_z() {
        let z = FracGroup::standard(2, 3).unwrap();
        let m = RatMatrix::from_rows(vec![v(&[3, 0]), v(&[0, 1])]);
        let f = GroupHom::new(z.clone(), z, m).unwrap();
        assert_eq!(f.kernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap().rank(), 0);
        let cok = f.cokernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap();
        assert_eq!(cok.torsion, vec![BigInt::from(3)]);
        assert_eq!(cok.free_rank, 0);
    }

    #[test]
    fn zero_and_identity_maps() {
        let g = tower_group(3);
        let zero = GroupHom::new(g.clone(), g.clone(), RatMatrix::zeros(2, 2)).unwrap();
        assert!(zero.kernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap().same_group(&g));
        let cok = zero.cokernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap();
        assert_eq!((cok.divisible_rank, cok.free_rank), (1, 1));
        let id = GroupHom::identity(&g);
        assert_eq!(id.kernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap().rank(), 0);
        assert_eq!(id.cokernel(DEFAULT_WINDOW, DEFAULT_CAP).unwrap().free_rank, 0);
    }

    #[test]
    fn coordinate_constructor_round_trips() {
        let g = tower_group(4);
        let mu = GroupHom::from_coordinates(g.clone(), g.clone(), &mu_t(4)).unwrap();
        assert_eq!(mu.coordinate_matrix(), mu_t(4));
        let again = GroupHom::new(g.clone(), g, mu.matrix().clone()).unwrap();
        assert_eq!(again.coordinate_matrix(), mu_t(4));
    }

    #[test]
    fn cokernel_bases() {
        let g = tower_group(4);
        let mu = GroupHom::from_coordinates(g.clone(), g.clone(), &mu_t(4)).unwrap();
        let f = GroupHom::identity(&g).sub(&mu).unwrap();
        let (e1, e2) = (v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert!(f.is_cokernel_basis(&[e1.clone(), e2.clone()], DEFAULT_WINDOW, DEFAULT_CAP).unwrap());
        assert!(f.is_cokernel_basis(&[v(&[1, 2, 1]), e2.clone()], DEFAULT_WINDOW, DEFAULT_CAP).unwrap());
        assert!(!f.is_cokernel_basis(&[v(&[0, 2, 0]), e2.clone()], DEFAULT_WINDOW, DEFAULT_CAP).unwrap());
        assert!(!f.is_cokernel_basis(&[e1], DEFAULT_WINDOW, DEFAULT_CAP).unwrap());
    }
}
