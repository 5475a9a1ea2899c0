use kfq::ffield::{Field, FqElem};
use kfq::funcfield::{gamma_factorize_with, laurent_expand, sigma, val_inf, IrreducibleTable, Poly, RationalFunction};
use proptest::prelude::*;

fn field(q: u64) -> Field {
    Field::with_order(q).unwrap()
}

fn poly_strategy(q: u32, maxlen: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..q, 1..=maxlen)
}

fn to_poly(c: &[u32]) -> Poly {
    Poly::new(c.iter().map(|&x| FqElem(x)).collect())
}

fn nonzero_rf(f: &Field, n: &[u32], d: &[u32]) -> Option<RationalFunction> {
    let (n, d) = (to_poly(n), to_poly(d));
    if n.is_zero() || d.is_zero() {
        return None;
    }
    RationalFunction::new(n, d, f).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factor_then_reassemble(q in prop::sample::select(vec![2u64, 3, 4, 5]), n in poly_strategy(5, 6), d in poly_strategy(5, 6)) {
        let f = field(q);
        let n: Vec<u32> = n.into_iter().map(|x| x % q as u32).collect();
        let d: Vec<u32> = d.into_iter().map(|x| x % q as u32).collect();
        if let Some(r) = nonzero_rf(&f, &n, &d) {
            let mut t = IrreducibleTable::new(&f);
            let g = gamma_factorize_with(&r, &mut t).unwrap();
            prop_assert_eq!(g.reassemble(&mut t).unwrap(), r);
        }
    }

    #[test]
    fn exponents_are_additive(a in poly_strategy(3, 5), b in poly_strategy(3, 5), c in poly_strategy(3, 5), d in poly_strategy(3, 5)) {
        let f = field(3);
        if let (Some(r), Some(s)) = (nonzero_rf(&f, &a, &b), nonzero_rf(&f, &c, &d)) {
            let mut t = IrreducibleTable::new(&f);
            let gr = gamma_factorize_with(&r, &mut t).unwrap();
            let gs = gamma_factorize_with(&s, &mut t).unwrap();
            let grs = gamma_factorize_with(&r.mul(&s, &f), &mut t).unwrap();
            prop_assert_eq!(grs.t_exponent, gr.t_exponent + gs.t_exponent);
            for i in 1..=t.listed().len() {
                prop_assert_eq!(grs.exponent_of(i), gr.exponent_of(i) + gs.exponent_of(i));
            }
        }
    }

    #[test]
    fn val_inf_multiplicative(a in poly_strategy(5, 5), b in poly_strategy(5, 5), c in poly_strategy(5, 5), d in poly_strategy(5, 5)) {
        let f = field(5);
        if let (Some(r), Some(s)) = (nonzero_rf(&f, &a, &b), nonzero_rf(&f, &c, &d)) {
            let lhs = val_inf(&r.mul(&s, &f), &f).unwrap();
            prop_assert_eq!(lhs, val_inf(&r, &f).unwrap() * val_inf(&s, &f).unwrap());
        }
    }

    #[test]
    fn expansion_is_multiplicative(a in poly_strategy(4, 4), b in poly_strategy(4, 4), c in poly_strategy(4, 4), d in poly_strategy(4, 4)) {
        let f = field(4);
        if let (Some(r), Some(s)) = (nonzero_rf(&f, &a, &b), nonzero_rf(&f, &c, &d)) {
            let n = 7;
            let lhs = laurent_expand(&r.mul(&s, &f), n, &f).unwrap();
            let rhs = laurent_expand(&r, n, &f).unwrap().mul(&laurent_expand(&s, n, &f).unwrap(), &f);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn expansion_times_denominator(a in poly_strategy(3, 5), b in poly_strategy(3, 5)) {
        let f = field(3);
        if let Some(r) = nonzero_rf(&f, &a, &b) {
            let n = 8;
            let s = laurent_expand(&r, n, &f).unwrap();
            let den = laurent_expand(&RationalFunction::from_poly(r.den().clone()), n, &f).unwrap();
            let num = laurent_expand(&RationalFunction::from_poly(r.num().clone()), n, &f).unwrap();
            prop_assert_eq!(s.mul(&den, &f), num);
        }
    }

    #[test]
    fn sigma_involution(a in poly_strategy(7, 5), b in poly_strategy(7, 5)) {
        let f = field(7);
        if let Some(r) = nonzero_rf(&f, &a, &b) {
            prop_assert_eq!(sigma(&sigma(&r, &f), &f), r);
        }
    }
}

#[test]
fn irreducibles_are_power_series_units() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = field(q);
        let mut t = IrreducibleTable::new(&f);
        for p in t.first(12) {
            let s = laurent_expand(&RationalFunction::new(Poly::one(), p, &f).unwrap(), 6, &f).unwrap();
            assert_eq!(s.valuation(), Some(0));
        }
    }
}
