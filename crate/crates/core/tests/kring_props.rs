use kfq::exactla::BigInt;
use kfq::kring::{closed_form, compare, ring_product, KClass};
use kfq::pvengine::{tower, TowerOptions};
use proptest::prelude::*;

// random basis class of the closed form with q <= 5 and words in T, f_1..f_5
fn basis_class() -> impl Strategy<Value = KClass> {
    (1u32..4, prop::collection::btree_set(0u32..=5, 0..=4))
        .prop_map(|(chi, w)| KClass::basis(chi, &w.into_iter().collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graded_commutative(x in basis_class(), y in basis_class()) {
        let (dx, dy) = (x.degree().unwrap(), y.degree().unwrap());
        let sign = BigInt::from(if dx * dy % 2 == 1 { -1 } else { 1 });
        prop_assert_eq!(ring_product(&x, &y), ring_product(&y, &x).scale(&sign));
    }

    #[test]
    fn associative(x in basis_class(), y in basis_class(), z in basis_class()) {
        prop_assert_eq!(ring_product(&ring_product(&x, &y), &z), ring_product(&x, &ring_product(&y, &z)));
    }

    #[test]
    fn distributive(x in basis_class(), y in basis_class(), z in basis_class()) {
        prop_assert_eq!(ring_product(&x, &y.add(&z)), ring_product(&x, &y).add(&ring_product(&x, &z)));
    }
}

#[test]
fn tower_matches_closed_form() {
    for q in [2u64, 3, 4, 5] {
        let run = tower(q, 8, TowerOptions::default()).unwrap();
        for m in 0..=8usize {
            let r = compare(run.level(m as i64).unwrap(), &closed_form(q, m).unwrap());
            assert!(r.success, "q = {q}, m = {m}: {r:?}");
            let want = (q as usize - 2) << m;
            assert_eq!(r.ranks, [(want, want), (want, want)]);
        }
    }
}
