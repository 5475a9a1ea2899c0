//! Arithmetic in F_q[T], F_q(T) and truncated F_q((T)).

mod gamma;
mod laurent;
mod poly;
mod ratfunc;

pub use gamma::{gamma_factorize, gamma_factorize_with, irreducibles_normalized, GammaFactorization, IrreducibleTable};
pub use laurent::{laurent_expand, poly_series, LaurentSeries};
pub use poly::Poly;
pub use ratfunc::{sigma, transport_label, val_inf, RationalFunction};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{Field, FqElem};
    use num_rational::BigRational;
    use num_traits::One;

    fn rf(f: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(f, n), Poly::from_ints(f, d), f).unwrap()
    }

    #[test]
    fn first_irreducibles_q2() {
        let f = Field::with_order(2).unwrap();
        let got = irreducibles_normalized(&f, 3);
        let want = [vec![1, 1], vec![1, 1, 1], vec![1, 1, 0, 1]];
        for (g, w) in got.iter().zip(want) {
            assert_eq!(g, &Poly::from_ints(&f, &w));
        }
    }

    #[test]
    fn degree_one_q3() {
        let f = Field::with_order(3).unwrap();
        let got = irreducibles_normalized(&f, 2);
        assert_eq!(got, vec![Poly::from_ints(&f, &[1, 1]), Poly::from_ints(&f, &[1, 2])]);
    }

    // number of monic irreducibles of degree d: (1/d) sum_{e | d} mu(e) q^{d/e}
    fn necklace(q: i64, d: u32) -> i64 {
        fn mu(n: u32) -> i64 {
            let (mut n, mut r, mut p) = (n, 1, 2);
            while p * p <= n {
                if n % p == 0 {
                    n /= p;
                    if n % p == 0 {
                        return 0;
                    }
                    r = -r;
                }
                p += 1;
            }
            if n > 1 {
                r = -r;
            }
            r
        }
        (1..=d).filter(|e| d % e == 0).map(|e| mu(e) * q.pow(d / e)).sum::<i64>() / d as i64
    }

    #[test]
    fn counts_match_necklace_formula() {
        for q in [2u64, 3, 4, 5] {
            let f = Field::with_order(q).unwrap();
            let mut t = IrreducibleTable::new(&f);
            let maxd = if q == 2 { 6 } else { 3 };
            t.ensure_degree(maxd);
            for d in 1..=maxd {
                let n = t.listed().iter().filter(|p| p.degree() == Some(d)).count() as i64;
                // T is excluded when d = 1
                let want = necklace(q as i64, d as u32) - i64::from(d == 1);
                assert_eq!(n, want, "q={q} d={d}");
            }
            assert!(t.listed().iter().all(|p| p.constant_term() == FqElem::ONE));
        }
    }

    #[test]
    fn gamma_examples() {
        let f = Field::with_order(2).unwrap();
        // T^2 (1+T) / (1+T+T^2)
        let r = rf(&f, &[0, 0, 1, 1], &[1, 1, 1]);
        let g = gamma_factorize(&r, &f).unwrap();
        assert_eq!((g.unit, g.t_exponent), (1, 2));
        assert_eq!(g.factors, vec![(1, 1), (2, -1)]);

        let g = gamma_factorize(&RationalFunction::one(), &f).unwrap();
        assert_eq!((g.unit, g.t_exponent, g.factors.len()), (1, 0, 0));

        let f3 = Field::with_order(3).unwrap();
        let g = gamma_factorize(&rf(&f3, &[0, 2], &[1]), &f3).unwrap();
        assert_eq!((g.unit, g.t_exponent), (2, 1));
        assert!(gamma_factorize(&RationalFunction::zero(), &f3).is_err());
    }

    #[test]
    fn gamma_repeated_and_reassembled() {
        let f = Field::with_order(3).unwrap();
        let mut t = IrreducibleTable::new(&f);
        let f1 = t.get(1).unwrap();
        let f3 = t.get(3).unwrap();
        let num = f1.pow(3, &f).mul(&f3, &f).scale(f.from_int(2), &f);
        let r = RationalFunction::new(num, Poly::t().pow(2, &f), &f).unwrap();
        let g = gamma_factorize_with(&r, &mut t).unwrap();
        assert_eq!(g.factors, vec![(1, 3), (3, 1)]);
        assert_eq!(g.t_exponent, -2);
        assert_eq!(g.reassemble(&mut t).unwrap(), r);
    }

    #[test]
    fn laurent_examples() {
        let f = Field::with_order(2).unwrap();
        let s = laurent_expand(&rf(&f, &[1], &[1, 1]), 4, &f).unwrap();
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.coeffs(), &[FqElem::ONE; 4]);

        let s = laurent_expand(&RationalFunction::t_pow(-3), 1, &f).unwrap();
        assert_eq!((s.valuation(), s.coeffs()), (Some(-3), &[FqElem::ONE][..]));

        let f3 = Field::with_order(3).unwrap();
        let s = laurent_expand(&rf(&f3, &[1], &[1, 1]), 3, &f3).unwrap();
        assert_eq!(s.coeffs(), &[FqElem(1), FqElem(2), FqElem(1)]);

        let z = laurent_expand(&RationalFunction::zero(), 5, &f).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.abs_precision(), 5);
    }

    #[test]
    fn precision_is_the_minimum() {
        let f = Field::with_order(3).unwrap();
        let a = laurent_expand(&rf(&f, &[1], &[1, 1]), 3, &f).unwrap();
        let b = laurent_expand(&rf(&f, &[2, 1], &[1, 0, 1]), 6, &f).unwrap();
        assert_eq!(a.mul(&b, &f).precision(), 3);
        assert_eq!(a.add(&b, &f).abs_precision(), 3);
        assert!(a.coeff(3).is_err());
    }

    #[test]
    fn sigma_examples() {
        let f = Field::with_order(5).unwrap();
        let t = RationalFunction::t_pow(1);
        assert_eq!(sigma(&t, &f), RationalFunction::t_pow(-1));
        assert_eq!(sigma(&rf(&f, &[1, 1], &[1]), &f), rf(&f, &[1, 1], &[0, 1]));
        let r = rf(&f, &[3, 0, 2, 1], &[0, 4, 1]);
        assert_eq!(sigma(&sigma(&r, &f), &f), r);
    }

    #[test]
    fn val_inf_examples() {
        let f = Field::with_order(7).unwrap();
        let q = BigRational::from_integer(7.into());
        assert_eq!(val_inf(&RationalFunction::t_pow(1), &f).unwrap(), q);
        assert_eq!(val_inf(&RationalFunction::one(), &f).unwrap(), BigRational::one());
        assert_eq!(val_inf(&rf(&f, &[1, 0, 1], &[0, 0, 0, 1]), &f).unwrap(), BigRational::one() / q);
    }

    #[test]
    fn display_forms() {
        let f = Field::with_order(3).unwrap();
        assert_eq!(Poly::from_ints(&f, &[1, 2, 0, 1]).display(&f).to_string(), "1+2T+T^3");
        assert_eq!(rf(&f, &[1], &[1, 1]).display(&f).to_string(), "(1)/(1+T)");
    }
}
