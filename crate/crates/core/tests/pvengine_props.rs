use kfq::pvengine::{boundary, tower, Base, TowerOptions, WedgeSymbol};
use proptest::prelude::*;

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn rank_law_through_level_eight() {
    for q in [2u64, 3, 4, 5] {
        let run = tower(q, 8, TowerOptions::default()).unwrap();
        for m in 1..=8i64 {
            let (a0, a1) = run.level(m - 1).unwrap().ranks();
            let (b0, b1) = run.level(m).unwrap().ranks();
            assert_eq!((b0, b1), (a0 + a1, a0 + a1), "q = {q}, m = {m}");
        }
    }
}

#[test]
fn ledger_counts_by_base_parity() {
    let q = 4u64;
    let run = tower(q, 6, TowerOptions::default()).unwrap();
    for m in 0..=6usize {
        let lvl = run.level(m as i64).unwrap();
        let even: usize = (0..=m).step_by(2).map(|k| binom(m, k)).sum();
        let odd: usize = (1..=m).step_by(2).map(|k| binom(m, k)).sum();
        let k0 = lvl.ledger(0);
        let p_count = k0.iter().filter(|s| matches!(s.base, Base::P(_))).count();
        let w_count = k0.len() - p_count;
        assert_eq!(p_count, (q as usize - 2) * even);
        assert_eq!(w_count, (q as usize - 2) * odd);
        assert_eq!(k0.len(), (q as usize - 2) << m);
    }
}

proptest! {
    #[test]
    fn boundary_undoes_appending(chi in 1u32..8, is_w: bool, raw in prop::collection::btree_set(1u32..10, 0..5), extra in 0u32..4) {
        let idx: Vec<u32> = raw.into_iter().collect();
        let m = idx.last().copied().unwrap_or(0) + 1 + extra;
        let base = if is_w { Base::W(chi) } else { Base::P(chi) };
        let s = WedgeSymbol::new(base, idx, 1).unwrap();
        let lifted = s.with_index(m).unwrap();
        prop_assert_eq!(boundary(&lifted, m), Some(s.clone()));
        prop_assert_eq!(lifted.parity(), 1 - s.parity());
        prop_assert_eq!(boundary(&s, m), None);
    }
}
