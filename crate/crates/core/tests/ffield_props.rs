use kfq::ffield::{Field, FqElem};
use proptest::prelude::*;

fn prime_power() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // sum_b chi(b) conj(psi(b)) = (q - 1) [chi = psi]
    #[test]
    fn character_orthogonality(q in prime_power(), i in 0i64..16, j in 0i64..16) {
        let f = Field::with_order(q).unwrap();
        let (chi, psi) = (f.character(i), f.character(j));
        let k = f.cyc();
        let mut total = k.zero();
        for b in f.nonzero() {
            let term = &f.char_value(chi, b).unwrap() * &f.char_value(psi, b).unwrap().conj();
            total = &total + &term;
        }
        let want = if chi == psi { k.from_int(q as i64 - 1) } else { k.zero() };
        prop_assert_eq!(total, want);
    }

    #[test]
    fn characters_are_multiplicative(q in prime_power(), i in 0i64..16, a in 1u32..16, b in 1u32..16) {
        let f = Field::with_order(q).unwrap();
        let (a, b) = (FqElem(a % (q as u32 - 1) + 1), FqElem(b % (q as u32 - 1) + 1));
        let chi = f.character(i);
        let lhs = f.char_value(chi, f.mul(a, b)).unwrap();
        let rhs = &f.char_value(chi, a).unwrap() * &f.char_value(chi, b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
