use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::abgrp::{colimit_structure, ColimitTower, FracGroup, GroupHom, Lattice};
use crate::error::{Error, Result};
use crate::exactla::{integer_kernel, snf, IntMatrix, RatMatrix};
use crate::finmodel::{induced_iota_matrix, DEFAULT_SIZE_CAP};

use super::symbol::{boundary, Base, WedgeSymbol};

/// K_* of one level of the tower.
#[derive(Clone, Debug)]
pub enum GradedKGroup {
    /// Level -1: K_0 is a colimit group with named generators and K_1 = 0.
    Base { q: u64, k0: FracGroup, names: Vec<String> },
    /// Levels >= 0: free groups with ledger bases.
    Free { q: u64, level: usize, k0: Vec<WedgeSymbol>, k1: Vec<WedgeSymbol> },
}

impl GradedKGroup {
    pub fn q(&self) -> u64 {
        match self {
            GradedKGroup::Base { q, .. } | GradedKGroup::Free { q, .. } => *q,
        }
    }

    /// -1 for the base level.
    pub fn level(&self) -> i64 {
        match self {
            GradedKGroup::Base { .. } => -1,
            GradedKGroup::Free { level, .. } => *level as i64,
        }
    }

    /// (rank K_0, rank K_1).
    pub fn ranks(&self) -> (usize, usize) {
        match self {
            GradedKGroup::Base { k0, .. } => (k0.rank(), 0),
            GradedKGroup::Free { k0, k1, .. } => (k0.len(), k1.len()),
        }
    }

    pub fn ledger(&self, degree: usize) -> &[WedgeSymbol] {
        match (self, degree) {
            (GradedKGroup::Free { k0, .. }, 0) => k0,
            (GradedKGroup::Free { k1, .. }, _) => k1,
            _ => &[],
        }
    }

    fn check(&self) -> Result<()> {
        if let GradedKGroup::Free { k0, k1, .. } = self {
            for (deg, syms) in [(0u8, k0), (1, k1)] {
                if let Some(s) = syms.iter().find(|s| s.parity() != deg) {
                    return Err(Error::InvalidParameter(format!("{s} sits in degree {deg}")));
                }
                let mut keys: Vec<_> = syms.iter().map(WedgeSymbol::key).collect();
                keys.sort();
                if keys.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidParameter(format!("duplicate symbol in degree {deg}")));
                }
            }
        }
        Ok(())
    }
}

/// Action of the generating automorphism on K_*.
#[derive(Clone, Debug)]
pub enum Induced {
    OnBase(GroupHom),
    /// Integer matrices in the ledger bases of K_0 and K_1.
    OnFree { k0: IntMatrix, k1: IntMatrix },
}

fn one(n: usize) -> Vec<BigRational> {
    vec![BigRational::one(); n]
}

fn unit(n: usize, i: usize) -> Vec<BigRational> {
    (0..n).map(|k| BigRational::from_integer(i64::from(k == i).into())).collect()
}

/// (mu_T)_* on Z[1/q] (1,...,1) + sum_chi Z e_chi, in those generator coordinates.
pub fn mu_t_star(q: u64) -> Result<GroupHom> {
    let g = colimit_group(q)?;
    let n = (q - 1) as usize;
    let inv_q = BigRational::new(BigInt::one(), BigInt::from(q));
    let rows = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| match (r, c) {
                    (0, 0) => inv_q.clone(),
                    (0, _) => -inv_q.clone(),
                    _ => BigRational::from_integer(i64::from(r == c).into()),
                })
                .collect()
        })
        .collect();
    GroupHom::from_coordinates(g.clone(), g, &RatMatrix::from_rows(rows))
}

fn colimit_group(q: u64) -> Result<FracGroup> {
    let n = q.checked_sub(1).filter(|&n| n >= 1).ok_or(Error::InvalidParameter("q must be at least 2".into()))? as usize;
    FracGroup::new(n, q, vec![one(n)], (1..n).map(|c| unit(n, c)).collect())
}

fn base_names(q: u64) -> Vec<String> {
    std::iter::once("[1]".to_string()).chain((1..q - 1).map(|j| format!("[1.p_chi{j}]"))).collect()
}

/// One Pimsner-Voiculescu step: K_*(A) -> K_*(A x_alpha Z).
pub fn pv_step(k: &GradedKGroup, alpha: &Induced, window: usize, cap: usize) -> Result<GradedKGroup> {
    match (k, alpha) {
        (GradedKGroup::Base { q, k0, .. }, Induced::OnBase(a)) => base_step(*q, k0, a, window, cap),
        (GradedKGroup::Free { q, level, k0, k1 }, Induced::OnFree { k0: a0, k1: a1 }) => {
            let m = *level as u32 + 1;
            let (keep0, lift1) = (cokernel_symbols(k0, a0)?, kernel_symbols(k1, a1, m)?);
            let (keep1, lift0) = (cokernel_symbols(k1, a1)?, kernel_symbols(k0, a0, m)?);
            let out = GradedKGroup::Free {
                q: *q,
                level: *level + 1,
                k0: keep0.into_iter().chain(lift1).collect(),
                k1: keep1.into_iter().chain(lift0).collect(),
            };
            out.check()?;
            Ok(out)
        }
        _ => Err(Error::UnsupportedAction("induced map does not match the level".into())),
    }
}

// K_0(A_0) = coker(id - mu) with symbols P(chi); K_1(A_0) = ker(id - mu) with symbols W(chi),
// where the boundary of W(chi) is [1.p_1] - [1.p_chi].
fn base_step(q: u64, k0: &FracGroup, alpha: &GroupHom, window: usize, cap: usize) -> Result<GradedKGroup> {
    let n = k0.dim();
    let d = GroupHom::identity(k0).sub(alpha)?;
    let ker = d.kernel(window, cap)?;
    if ker.max_divisible().0 != 0 {
        return Err(Error::NotFree("kernel of id - alpha".into()));
    }
    let ones = one(n);
    let amb = |c: &[BigRational]| -> Vec<BigRational> {
        (0..n).map(|k| &ones[k] * &c[0] + if k > 0 { c[k].clone() } else { BigRational::zero() }).collect()
    };
    let chis: Vec<usize> = (1..n).collect();
    let boundaries: Vec<Vec<BigRational>> = chis
        .iter()
        .map(|&chi| {
            let mut c = vec![BigRational::from_integer((-1).into()); n];
            c[0] = BigRational::one();
            c[chi] = BigRational::from_integer((-2).into());
            amb(&c)
        })
        .collect();
    let claimed = FracGroup::new(n, q, Vec::new(), boundaries)?;
    if !claimed.same_group(&ker) {
        return Err(Error::UnsupportedAction("boundaries of w_chi do not span ker(id - alpha)".into()));
    }
    let projections: Vec<Vec<BigRational>> = chis.iter().map(|&chi| unit(n, chi)).collect();
    if !d.is_cokernel_basis(&projections, window, cap)? {
        return Err(Error::UnsupportedAction("classes 1.p_chi are not a basis of coker(id - alpha)".into()));
    }
    let sym = |b: fn(u32) -> Base| chis.iter().map(|&c| WedgeSymbol::plain(b(c as u32))).collect();
    let out = GradedKGroup::Free { q, level: 0, k0: sym(Base::P), k1: sym(Base::W) };
    out.check()?;
    Ok(out)
}

// ledger symbols whose classes form a basis of coker(id - a)
fn cokernel_symbols(syms: &[WedgeSymbol], a: &IntMatrix) -> Result<Vec<WedgeSymbol>> {
    let r = syms.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let d = &IntMatrix::identity(r) - a;
    if d.is_zero() {
        return Ok(syms.to_vec());
    }
    let f = snf(&d);
    if f.invariant_factors().iter().any(|x| !x.abs().is_one()) {
        return Err(Error::NotFree("coker(id - alpha) has torsion".into()));
    }
    let image: Vec<Vec<BigInt>> = (0..r).map(|j| d.col_vec(j)).collect();
    let int_unit = |i: usize| (0..r).map(|k| BigInt::from(i64::from(k == i))).collect::<Vec<_>>();
    let mut chosen: Vec<usize> = Vec::new();
    let mut span_rank = f.rank();
    for i in 0..r {
        let mut rows: Vec<Vec<BigInt>> = image.clone();
        rows.extend(chosen.iter().chain([&i]).map(|&c| int_unit(c)));
        let rk = IntMatrix::from_rows(rows).to_rational().rank();
        if rk > span_rank {
            chosen.push(i);
            span_rank = rk;
        }
    }
    let mut rows = image;
    rows.extend(chosen.iter().map(|&c| int_unit(c)));
    if Lattice::from_int_rows(r, rows) != Lattice::standard(r) {
        return Err(Error::NotFree("no ledger symbols give a basis of coker(id - alpha)".into()));
    }
    Ok(chosen.into_iter().map(|i| syms[i].clone()).collect())
}

// ker(id - a) lifted along the boundary: a kernel class x gets the symbol of x with t(m) appended
fn kernel_symbols(syms: &[WedgeSymbol], a: &IntMatrix, m: u32) -> Result<Vec<WedgeSymbol>> {
    let r = syms.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let d = &IntMatrix::identity(r) - a;
    let basis = if d.is_zero() {
        (0..r).map(|i| (0..r).map(|k| BigInt::from(i64::from(k == i))).collect()).collect()
    } else {
        integer_kernel(&d)
    };
    let mut out = Vec::new();
    for v in basis {
        let nz: Vec<usize> = (0..r).filter(|&k| !v[k].is_zero()).collect();
        if nz.len() != 1 || !v[nz[0]].abs().is_one() {
            return Err(Error::UnsupportedAction("kernel generator is not a single ledger symbol".into()));
        }
        let base = if v[nz[0]].is_negative() { syms[nz[0]].negated() } else { syms[nz[0]].clone() };
        let lifted = base.with_index(m).ok_or_else(|| Error::InvalidParameter(format!("{base} already carries t({m})")))?;
        if boundary(&lifted, m).as_ref() != Some(&base) {
            return Err(Error::UnsupportedAction(format!("boundary of {lifted} is not {base}")));
        }
        out.push(lifted);
    }
    Ok(out)
}

/// Where the level -1 connecting matrix came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConnectingSource {
    /// Brute force from the finite level models.
    FiniteModel,
    /// The matrix I + J, used when the finite model exceeds the size cap.
    Formula,
}

#[derive(Clone, Debug)]
pub struct TowerRun {
    pub q: u64,
    pub levels: Vec<GradedKGroup>,
    pub connecting: IntMatrix,
    pub connecting_source: ConnectingSource,
}

impl TowerRun {
    pub fn top(&self) -> &GradedKGroup {
        self.levels.last().expect("tower has at least the base level")
    }

    pub fn level(&self, m: i64) -> Option<&GradedKGroup> {
        self.levels.get((m + 1) as usize)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TowerOptions {
    pub window: usize,
    pub cap: usize,
    pub size_cap: usize,
}

impl Default for TowerOptions {
    fn default() -> Self {
        TowerOptions { window: crate::abgrp::DEFAULT_WINDOW, cap: crate::abgrp::DEFAULT_CAP, size_cap: DEFAULT_SIZE_CAP }
    }
}

fn all_ones_plus_identity(n: usize) -> IntMatrix {
    IntMatrix::from_rows((0..n).map(|i| (0..n).map(|j| BigInt::from(1 + i64::from(i == j))).collect()).collect())
}

/// K_*(A_{-1}), K_*(A_0), ..., K_*(A_m).
pub fn tower(q: u64, m: usize, opts: TowerOptions) -> Result<TowerRun> {
    let n = (q.checked_sub(1).filter(|&n| n >= 1).ok_or(Error::InvalidParameter("q must be at least 2".into()))?) as usize;
    let (connecting, connecting_source) = match induced_iota_matrix(q, 1, opts.size_cap) {
        Ok(a) => (a, ConnectingSource::FiniteModel),
        Err(Error::SizeCapExceeded { .. }) => (all_ones_plus_identity(n), ConnectingSource::Formula),
        Err(e) => return Err(e),
    };
    let colim = colimit_structure(&ColimitTower::new(connecting.clone(), q)?, opts.window, opts.cap)?;
    let expected = colimit_group(q)?;
    if !colim.group().same_group(&expected) || colim.group().generators().ne(expected.generators()) {
        return Err(Error::UnsupportedTower("colimit is not presented on (1,...,1) and the e_chi".into()));
    }
    let mut levels = vec![GradedKGroup::Base { q, k0: colim.group().clone(), names: base_names(q) }];
    let mu = Induced::OnBase(mu_t_star(q)?);
    levels.push(pv_step(&levels[0], &mu, opts.window, opts.cap)?);
    for _ in 0..m {
        let last = levels.last().unwrap();
        let (r0, r1) = last.ranks();
        let id = Induced::OnFree { k0: IntMatrix::identity(r0), k1: IntMatrix::identity(r1) };
        levels.push(pv_step(last, &id, opts.window, opts.cap)?);
    }
    Ok(TowerRun { q, levels, connecting, connecting_source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    #[test]
    fn mu_t_on_named_vectors() {
        let mu = mu_t_star(5).unwrap();
        let top = |k: u32| -> Vec<BigRational> { vec![ratio(1, 5i64.pow(k)); 4] };
        assert_eq!(mu.apply(&top(2)), top(3));
        // 1.p_chi maps to 1_1.p_chi = e_chi + c_1 (1,...,1), c_1 = (1/q - 1)/(q - 1)
        let img = mu.apply(&unit(4, 2));
        let c1 = ratio(-1, 5);
        assert_eq!(img, vec![c1.clone(), c1.clone(), c1.clone() + rat(1), c1]);
        assert_eq!(mu.kernel(3, 12).unwrap().rank(), 0);
    }

    #[test]
    fn level_zero() {
        let run = tower(5, 0, TowerOptions::default()).unwrap();
        assert_eq!(run.connecting_source, ConnectingSource::FiniteModel);
        let top = run.top();
        assert_eq!(top.level(), 0);
        assert_eq!(top.ranks(), (3, 3));
        assert!(top.ledger(0).iter().all(|s| matches!(s.base, Base::P(_)) && s.indices.is_empty()));
        assert!(top.ledger(1).iter().all(|s| matches!(s.base, Base::W(_))));
    }

    #[test]
    fn identity_steps_double() {
        let run = tower(3, 2, TowerOptions::default()).unwrap();
        assert_eq!(run.top().ranks(), (4, 4));
        assert_eq!(run.level(1).unwrap().ranks(), (2, 2));
        let names: Vec<String> = run.top().ledger(0).iter().map(ToString::to_string).collect();
        assert_eq!(names, ["[1.p_chi1]", "[w_chi1, t(1)]", "[w_chi1, t(2)]", "[1.p_chi1, t(1), t(2)]"]);
    }

    #[test]
    fn q_two_vanishes() {
        let run = tower(2, 4, TowerOptions::default()).unwrap();
        assert_eq!(run.level(-1).unwrap().ranks(), (1, 0));
        assert!(run.levels[1..].iter().all(|l| l.ranks() == (0, 0)));
    }

    #[test]
    fn free_step_with_nontrivial_action() {
        let k = GradedKGroup::Free {
            q: 4,
            level: 0,
            k0: vec![WedgeSymbol::plain(Base::P(1)), WedgeSymbol::plain(Base::P(2))],
            k1: vec![],
        };
        // swapping the two generators: coker rank 1, kernel spanned by e1 + e2 (not a single symbol)
        let swap = IntMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
        let alpha = Induced::OnFree { k0: swap, k1: IntMatrix::identity(0) };
        assert!(matches!(pv_step(&k, &alpha, 3, 12), Err(Error::UnsupportedAction(_))));
        let alpha = Induced::OnFree { k0: IntMatrix::from_i64_rows(&[[1, 0], [1, 1]]), k1: IntMatrix::identity(0) };
        let out = pv_step(&k, &alpha, 3, 12).unwrap();
        assert_eq!(out.ranks(), (1, 1));
        assert_eq!(out.ledger(1)[0].to_string(), "[1.p_chi2, t(1)]");
    }

    #[test]
    fn zero_group_step() {
        let k = GradedKGroup::Free { q: 2, level: 3, k0: vec![], k1: vec![] };
        let id = Induced::OnFree { k0: IntMatrix::identity(0), k1: IntMatrix::identity(0) };
        assert_eq!(pv_step(&k, &id, 3, 12).unwrap().ranks(), (0, 0));
    }
}
