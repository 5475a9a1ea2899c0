use kfq::exactla::CycMatrix;
use kfq::ffield::FqElem;
use kfq::finmodel::{build_model, LevelModel};
use proptest::prelude::*;

fn model() -> LevelModel {
    build_model(3, 2, 512).unwrap()
}

// v^a e_j p_chi v^{-a}
fn piece(m: &LevelModel, a: [u32; 2], j: usize, chi: u32) -> CycMatrix {
    let f = m.field();
    let a = [FqElem(a[0]), FqElem(a[1])];
    let na = [f.neg(a[0]), f.neg(a[1])];
    let p = &m.e(j) * &m.p(f.character(chi as i64)).unwrap();
    &(&m.v(&a) * &p) * &m.v(&na)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn class_is_additive(a in 0u32..3, b in 0u32..3, chi in 0u32..2, psi in 0u32..2) {
        let m = model();
        // two disjoint cosets of T^2, or one coset split by characters
        let (x, y) = if a != b {
            (piece(&m, [a, 0], 2, chi), piece(&m, [b, 0], 2, psi))
        } else {
            (piece(&m, [a, 1], 1, 0), piece(&m, [a, 1], 1, 1))
        };
        prop_assume!((&x * &y).is_zero());
        let cx = m.k0_class(&x).unwrap().0;
        let cy = m.k0_class(&y).unwrap().0;
        let cs = m.k0_class(&(&x + &y)).unwrap().0;
        prop_assert_eq!(cs, cx.iter().zip(&cy).map(|(u, v)| u + v).collect::<Vec<_>>());
    }

    #[test]
    fn class_is_conjugation_invariant(
        a in 0u32..3, j in 1usize..=2, chi in 0u32..2,
        word in prop::collection::vec((any::<bool>(), 0u32..3, 0u32..3), 1..4),
    ) {
        let m = model();
        let p = piece(&m, [a, 0], j, chi);
        let mut u = m.identity();
        for (is_v, d0, d1) in word {
            let g = if is_v { m.v(&[FqElem(d0), FqElem(d1)]) } else { m.t(FqElem(1 + d0 % 2)).unwrap() };
            u = &u * &g;
        }
        let conj = &(&u * &p) * &u.adjoint();
        prop_assert_eq!(m.k0_class(&conj).unwrap(), m.k0_class(&p).unwrap());
    }
}

#[test]
fn k1_vanishes_structurally() {
    assert_eq!(model().k1_rank(), 0);
}
