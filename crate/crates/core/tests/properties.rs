use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use lmnzeta::combinat::lie_dims;
use lmnzeta::exactalg::{DenomFactor, Exp, LaurentPoly, RationalFunction};
use lmnzeta::igusa::{igusa_permutation, igusa_subset, IgusaData};
use lmnzeta::zetas::reduced_ideal_zeta;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, -4i64..=6, 0i64..=6), 0..6).prop_map(LaurentPoly::from_terms)
}

fn factor() -> impl Strategy<Value = DenomFactor> {
    (-3i64..=8, 1u32..=4, 1u32..=2).prop_map(|(a, b, m)| DenomFactor::new(a, b, m).unwrap())
}

fn rational() -> impl Strategy<Value = RationalFunction> {
    (poly(), prop::collection::vec(factor(), 0..4)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Cauchy product of two `t`-series truncated at `k`.
fn cauchy(x: &[LaurentPoly], y: &[LaurentPoly]) -> Vec<LaurentPoly> {
    (0..x.len())
        .map(|k| {
            let mut c = LaurentPoly::zero();
            for i in 0..=k {
                c += &(&x[i] * &y[k - i]);
            }
            c
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invert_vars_is_an_involution(x in rational()) {
        prop_assert!(x.invert_vars().invert_vars().equals(&x));
    }

    #[test]
    fn invert_vars_agrees_with_evaluation(x in rational(), q in 2i64..=5, t in 2i64..=7) {
        let (q, t) = (BigRational::from_integer(q.into()), BigRational::from_integer(t.into()));
        let direct = x.eval(&q.recip(), &t.recip());
        prop_assert_eq!(x.invert_vars().eval(&q, &t), direct);
    }

    #[test]
    fn series_of_product_is_cauchy_product(x in rational(), y in rational()) {
        let k = 6;
        let sx = x.series_coeffs(k).unwrap();
        let sy = y.series_coeffs(k).unwrap();
        prop_assert_eq!(x.mul(&y).series_coeffs(k).unwrap(), cauchy(&sx, &sy));
    }

    #[test]
    fn series_coefficients_are_t_free(x in rational()) {
        prop_assert!(x.series_coeffs(5).unwrap().iter().all(LaurentPoly::is_t_free));
    }

    #[test]
    fn igusa_forms_agree(
        y in (-3i64..=3, 0i64..=2),
        x in prop::collection::vec((-5i64..=20, 1i64..=12), 1..=4),
    ) {
        let d = IgusaData::new(Exp::new(y.0, y.1), x.into_iter().map(|(a, b)| Exp::new(a, b)).collect()).unwrap();
        prop_assert!(igusa_subset(&d).equals(&igusa_permutation(&d)));
    }

    #[test]
    fn json_round_trip(x in rational()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        prop_assert!(back.equals(&x));
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn reduced_residue(m in 1u32..=3, n in 1u32..=3) {
        // (1 - Y)^h W(Y) at Y = 1, computed by expanding every factor.
        let red = reduced_ideal_zeta(m, n);
        let h = lie_dims(m, n).h as u32;
        let lifted = red.function.mul_poly(&LaurentPoly::one_minus(0, 1).pow(h));
        let one = BigRational::from_integer(BigInt::from(1));
        let mut den = LaurentPoly::one();
        for f in lifted.den() {
            den = &den * &f.poly();
        }
        let mut num = lifted.num().clone();
        while den.eval(&one, &one) == BigRational::from_integer(BigInt::from(0)) {
            num = num.div_one_minus_t().unwrap();
            den = den.div_one_minus_t().unwrap();
        }
        prop_assert_eq!(num.eval(&one, &one) / den.eval(&one, &one), red.mu);
    }
}
