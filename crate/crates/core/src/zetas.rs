//! Closed forms for the zeta functions of `L_{m,n}` and their invariants.
//!
//! All bivariate objects are rational functions in `q` and `t = q^-s`;
//! `s` itself only appears in the univariate topological forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, e_count, lie_dims, LieDims};
use crate::error::Result;
use crate::exactalg::{DenomFactor, Exp, LaurentPoly, RationalFunction, SRational};
use crate::igusa::{igusa_permutation, igusa_reduced, igusa_topological, IgusaData};

/// Exponents `a_i`, `b_i` (`i = 0..n-1`) of the monomials `q^{a_i - s b_i}`
/// fed into the Igusa factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalData {
    pub m: u32,
    pub n: u32,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl NumericalData {
    /// `X_j = q^{a_{n-j}} t^{b_{n-j}}` for `j = 1..n`: the tuple is passed
    /// from index `n-1` down to `0`.
    pub fn igusa_x(&self) -> Vec<Exp> {
        (1..=self.n as usize)
            .map(|j| {
                let i = self.n as usize - j;
                Exp::new(self.a[i], self.b[i])
            })
            .collect()
    }

    /// Same `b_i`, with the `q`-exponent replaced by `i(n-i)`.
    pub fn graded_igusa_x(&self) -> Vec<Exp> {
        let n = self.n as i64;
        (1..=n)
            .map(|j| {
                let i = n - j;
                Exp::new(i * (n - i), self.b[i as usize])
            })
            .collect()
    }
}

/// `a_i = (n-i)(i+d)`, `b_i = n - i + e(m,n) + sum_{j=i+1}^n e(m,j)`.
pub fn numerical_data(m: u32, n: u32) -> NumericalData {
    let dims = lie_dims(m, n);
    let d = dims.d as i64;
    let e = dims.e as i64;
    let ni = n as i64;
    let a: Vec<i64> = (0..ni).map(|i| (ni - i) * (i + d)).collect();
    let b: Vec<i64> = (0..ni)
        .map(|i| {
            let tail: i64 = ((i + 1) as u32..=n).map(|j| e_count(m, j) as i64).sum();
            ni - i + e + tail
        })
        .collect();
    assert_eq!(a[0], ni * d, "a_0 must equal n d");
    assert_eq!(b[0], dims.h as i64, "b_0 must equal h");
    NumericalData { m, n, a, b }
}

/// `1 / prod_{i=0}^{d-1} (1 - q^i t)`.
pub fn abelian_zeta(d: u64) -> RationalFunction {
    assert!(d >= 1, "rank must be positive");
    RationalFunction::reciprocal_of((0..d as i64).map(|i| DenomFactor::simple(i, 1)))
}

fn q_inverse() -> Exp {
    Exp::new(-1, 0)
}

/// `zeta_{o^d}(s) * I_n(q^-1; (q^{a_i} t^{b_i})_{i=n-1..0})`.
pub fn ideal_zeta(m: u32, n: u32) -> RationalFunction {
    let data = numerical_data(m, n);
    let igusa = IgusaData::new(q_inverse(), data.igusa_x()).expect("b_i >= 1");
    abelian_zeta(lie_dims(m, n).d).mul(&igusa_permutation(&igusa))
}

/// `zeta_{o^d}(s) * I_n(q^-1; (q^{i(n-i)} t^{b_i})_{i=n-1..0})`.
pub fn graded_ideal_zeta(m: u32, n: u32) -> RationalFunction {
    let data = numerical_data(m, n);
    let igusa = IgusaData::new(q_inverse(), data.graded_igusa_x()).expect("b_i >= 1");
    abelian_zeta(lie_dims(m, n).d).mul(&igusa_permutation(&igusa))
}

#[derive(Clone, Debug)]
pub struct RepZeta {
    /// `(1 - t^e) / (1 - q^n t^e)`.
    pub local: RationalFunction,
    /// `s e / (s e - n)`.
    pub topological: SRational,
}

pub fn rep_zeta(m: u32, n: u32) -> RepZeta {
    let e = e_count(m, n);
    let local = RationalFunction::new(
        LaurentPoly::one_minus(0, e as i64),
        [DenomFactor::simple(n as i64, e as u32)],
    )
    .expect("valid factor");
    let topological = SRational::new(BigRational::one(), vec![(e as i64, 0)], vec![(e as i64, n as i64)]);
    RepZeta { local, topological }
}

/// `n! / (prod_{j<d} (s - j) * prod_i (b_i s - a_i))`.
pub fn topological_ideal_zeta(m: u32, n: u32) -> SRational {
    let dims = lie_dims(m, n);
    let data = numerical_data(m, n);
    let igusa = igusa_topological(n as usize, &data.a, &data.b).expect("n entries");
    let mut den: Vec<(i64, i64)> = (0..dims.d as i64).map(|j| (1, j)).collect();
    den.extend(igusa.den);
    SRational::new(igusa.coeff, igusa.num, den)
}

#[derive(Clone, Debug)]
pub struct ReducedZeta {
    /// Rational function in `Y`, stored with `t` standing for `Y`.
    pub function: RationalFunction,
    pub mu: BigRational,
}

/// `sum_w prod_{j in Des(w)} Y^{b_{n-j}} / ((1-Y)^d prod_i (1 - Y^{b_i}))`
/// and `mu = n! / prod_i b_i`.
pub fn reduced_ideal_zeta(m: u32, n: u32) -> ReducedZeta {
    let dims = lie_dims(m, n);
    let data = numerical_data(m, n);
    let b_rev: Vec<u32> = (1..=n as usize).map(|j| data.b[n as usize - j] as u32).collect();
    let igusa = igusa_reduced(n as usize, &b_rev).expect("n positive entries");
    let function = igusa.mul(
        &RationalFunction::new(
            LaurentPoly::one(),
            [DenomFactor::new(0, 1, dims.d as u32).expect("d >= 1")],
        )
        .expect("valid factor"),
    );
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let prod_b: BigInt = data.b.iter().map(|&b| BigInt::from(b)).product();
    let mu = BigRational::new(fact, prod_b);

    // Every factor is (1 - Y^b)^k = (1-Y)^k (1 + .. + Y^{b-1})^k, so the
    // pole at Y = 1 has order h and leading coefficient num(1) / prod b^k.
    let den = function.den();
    let order: u64 = den.iter().map(|f| f.mult as u64).sum();
    assert_eq!(order, dims.h, "pole of order h at Y = 1");
    let at_one = function.num().eval_t1().coeff(Exp::ZERO);
    let scale: BigInt = den.iter().map(|f| BigInt::from(f.b).pow(f.mult)).product();
    assert_eq!(
        BigRational::new(at_one, scale),
        mu,
        "(1-Y)^h Z_red(Y) at Y=1 must equal mu"
    );
    let h_fact: BigInt = (1..=dims.h).map(BigInt::from).product();
    assert!((&mu * BigRational::from_integer(h_fact)).is_integer());
    ReducedZeta { function, mu }
}

/// Abscissa of convergence `alpha = d` and the continuation bound `beta`.
///
/// `beta` is the largest `(a_i - 1)/b_i` over `i = 1..n-1`: the `i = 0`
/// factor `1/(1 - q^{dn - hs})` is a translate of a Dedekind zeta function
/// and continues everywhere. For `n = 1` there is no such index and the
/// single `i = 0` ratio is reported.
pub fn analytic_invariants(m: u32, n: u32) -> (u64, BigRational) {
    let dims = lie_dims(m, n);
    let data = numerical_data(m, n);
    let range = if n == 1 { 0..1 } else { 1..n as usize };
    let beta = range
        .map(|i| BigRational::new(BigInt::from(data.a[i] - 1), BigInt::from(data.b[i])))
        .max()
        .expect("nonempty index range");
    (dims.d, beta)
}

/// `zeta(q^-1, t^-1) == (-1)^h q^{C(h,2)} t^{d+h} zeta(q, t)`.
pub fn check_functional_equation(m: u32, n: u32) -> bool {
    let dims = lie_dims(m, n);
    let z = ideal_zeta(m, n);
    let sign = if dims.h.is_multiple_of(2) { 1 } else { -1 };
    let factor = LaurentPoly::term(sign, binomial(dims.h, 2) as i64, (dims.d + dims.h) as i64);
    z.invert_vars().equals(&z.mul_poly(&factor))
}

/// Ratios at `s = 0` (`t = 1`): ideal over `zeta_{o^h}` must be `1`, and
/// graded over `zeta_{o^d} zeta_{o^n}` must be the constant `n/h`.
pub fn check_zero_behaviour(m: u32, n: u32) -> Result<(bool, bool)> {
    let dims = lie_dims(m, n);
    let pad = ideal_zeta(m, n).div(&abelian_zeta(dims.h))?.limit_t1()?;
    let pad_ok = pad.as_constant() == Some(BigRational::one());

    let both = abelian_zeta(dims.d).mul(&abelian_zeta(n as u64));
    let graded = graded_ideal_zeta(m, n).div(&both)?.limit_t1()?;
    let target = BigRational::new(BigInt::from(n), BigInt::from(dims.h));
    let graded_ok = graded.as_constant() == Some(target);
    Ok((pad_ok, graded_ok))
}

/// Everything computed for one pair `(m, n)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZetaReport {
    pub dims: LieDims,
    pub data: NumericalData,
    pub ideal: RationalFunction,
    pub graded: RationalFunction,
    pub rep_local: RationalFunction,
    #[serde(with = "srational_json")]
    pub topological: SRational,
    #[serde(with = "srational_json")]
    pub rep_topological: SRational,
    /// Rational function in `Y`, with `t` standing for `Y`.
    pub reduced: RationalFunction,
    #[serde(with = "ratio_json")]
    pub mu: BigRational,
    pub alpha: u64,
    #[serde(with = "ratio_json")]
    pub beta: BigRational,
}

impl PartialEq for ZetaReport {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims
            && self.data == other.data
            && self.ideal == other.ideal
            && self.graded == other.graded
            && self.rep_local == other.rep_local
            && self.topological == other.topological
            && self.rep_topological == other.rep_topological
            && self.reduced == other.reduced
            && self.mu == other.mu
            && self.alpha == other.alpha
            && self.beta == other.beta
    }
}

pub fn zeta_report(m: u32, n: u32) -> ZetaReport {
    let rep = rep_zeta(m, n);
    let reduced = reduced_ideal_zeta(m, n);
    let (alpha, beta) = analytic_invariants(m, n);
    let report = ZetaReport {
        dims: lie_dims(m, n),
        data: numerical_data(m, n),
        ideal: ideal_zeta(m, n),
        graded: graded_ideal_zeta(m, n),
        rep_local: rep.local,
        topological: topological_ideal_zeta(m, n),
        rep_topological: rep.topological,
        reduced: reduced.function,
        mu: reduced.mu,
        alpha,
        beta,
    };
    debug_assert!(report.mu.is_positive());
    debug_assert_eq!(report.alpha, report.dims.d);
    report
}

/// Reports for many pairs, one task per pair.
pub fn zeta_reports(pairs: &[(u32, u32)]) -> Vec<ZetaReport> {
    pairs.par_iter().map(|&(m, n)| zeta_report(m, n)).collect()
}

pub(crate) mod ratio_json {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactalg::{fmt_ratio, parse_ratio};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

mod srational_json {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::exactalg::SRational;

    #[derive(Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Record {
        #[serde(with = "super::ratio_json")]
        coeff: BigRational,
        num: Vec<(i64, i64)>,
        den: Vec<(i64, i64)>,
    }

    pub fn serialize<S: Serializer>(r: &SRational, s: S) -> Result<S::Ok, S::Error> {
        Record {
            coeff: r.coeff.clone(),
            num: r.num.clone(),
            den: r.den.clone(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SRational, D::Error> {
        let r = Record::deserialize(d)?;
        if r.den.iter().any(|&(m, c)| m == 0 && c == 0) {
            return Err(serde::de::Error::custom("zero factor in denominator"));
        }
        Ok(SRational::new(r.coeff, r.num, r.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn numerical_data_examples() {
        let d = numerical_data(2, 3);
        assert_eq!((d.a.clone(), d.b.clone()), (vec![27, 20, 11], vec![12, 10, 7]));
        for m in 1..5 {
            let d = numerical_data(m, 1);
            assert_eq!((d.a, d.b), (vec![2], vec![3]));
        }
        let d = numerical_data(1, 2);
        assert_eq!((d.a, d.b), (vec![6, 4], vec![5, 3]));
    }

    #[test]
    fn abelian_coefficients() {
        assert!(abelian_zeta(1).equals(&RationalFunction::reciprocal_of([DenomFactor::simple(0, 1)])));
        let c = abelian_zeta(3).series_coeffs(2).unwrap();
        assert_eq!(
            c[2],
            LaurentPoly::from_terms([(1, 0, 0), (1, 1, 0), (2, 2, 0), (1, 3, 0), (1, 4, 0)])
        );
    }

    #[test]
    fn heisenberg_ideal_zeta() {
        let expected = RationalFunction::reciprocal_of([
            DenomFactor::simple(0, 1),
            DenomFactor::simple(1, 1),
            DenomFactor::simple(2, 3),
        ]);
        for m in [1, 2, 3, 5] {
            assert!(ideal_zeta(m, 1).equals(&expected));
        }
    }

    #[test]
    fn grenham_one_two() {
        let expected = RationalFunction::new(
            LaurentPoly::from_terms([(1, 0, 0), (1, 3, 3)]),
            [
                DenomFactor::simple(0, 1),
                DenomFactor::simple(1, 1),
                DenomFactor::simple(2, 1),
                DenomFactor::simple(4, 3),
                DenomFactor::simple(6, 5),
            ],
        )
        .unwrap();
        let z = ideal_zeta(1, 2);
        assert!(z.equals(&expected));
        let c = z.series_coeffs(1).unwrap();
        assert_eq!(c[1], LaurentPoly::from_terms([(1, 0, 0), (1, 1, 0), (1, 2, 0)]));
    }

    #[test]
    fn n_two_specialization() {
        for m in 1..=5u32 {
            let d = numerical_data(m, 2);
            let k = 2 * m as i64 + 1;
            assert_eq!(d.a, vec![2 * k, k + 1]);
            assert_eq!(d.b, vec![k + 2, k]);
            let x = IgusaData::new(q_inverse(), d.igusa_x()).unwrap();
            let num = igusa_permutation(&x).num().clone();
            assert_eq!(num, LaurentPoly::from_terms([(1, 0, 0), (1, k, k)]));
        }
    }

    #[test]
    fn graded_forms() {
        let expected = RationalFunction::reciprocal_of([
            DenomFactor::simple(0, 1),
            DenomFactor::simple(1, 1),
            DenomFactor::simple(0, 3),
        ]);
        assert!(graded_ideal_zeta(3, 1).equals(&expected));
        let g = graded_ideal_zeta(1, 2);
        let expected = RationalFunction::new(
            LaurentPoly::from_terms([(1, 0, 0), (1, 0, 3)]),
            [
                DenomFactor::simple(0, 1),
                DenomFactor::simple(1, 1),
                DenomFactor::simple(2, 1),
                DenomFactor::simple(1, 3),
                DenomFactor::simple(0, 5),
            ],
        )
        .unwrap();
        assert!(g.equals(&expected));
        assert!(graded_ideal_zeta(2, 3).series_coeffs(0).unwrap()[0].is_one());
    }

    #[test]
    fn representation_zeta() {
        let z = rep_zeta(4, 1);
        let expected = RationalFunction::new(LaurentPoly::one_minus(0, 1), [DenomFactor::simple(1, 1)]).unwrap();
        assert!(z.local.equals(&expected));
        let z = rep_zeta(1, 2);
        let expected = RationalFunction::new(LaurentPoly::one_minus(0, 1), [DenomFactor::simple(2, 1)]).unwrap();
        assert!(z.local.equals(&expected));
        let z = rep_zeta(2, 3);
        assert!(z
            .topological
            .equals(&SRational::new(r(1, 1), vec![(1, 0)], vec![(1, 1)])));
    }

    #[test]
    fn topological_examples() {
        let t = topological_ideal_zeta(2, 3);
        let mut den: Vec<(i64, i64)> = (0..9).map(|i| (1, i)).collect();
        den.extend([(4, 9), (1, 2), (7, 11)]);
        assert!(t.equals(&SRational::new(r(1, 5), vec![], den)));
        let t = topological_ideal_zeta(3, 1);
        assert!(t.equals(&SRational::new(r(1, 1), vec![], vec![(1, 0), (1, 1), (3, 2)])));
        for m in 1..=5 {
            for n in 1..=5 {
                assert_eq!(topological_ideal_zeta(m, n).degree(), Some(-(lie_dims(m, n).h as i64)));
            }
        }
    }

    #[test]
    fn reduced_examples() {
        let z = reduced_ideal_zeta(2, 3);
        let expected = RationalFunction::new(
            LaurentPoly::from_terms([(1, 0, 0), (2, 0, 7), (2, 0, 10), (1, 0, 17)]),
            [
                DenomFactor::new(0, 1, 9).unwrap(),
                DenomFactor::simple(0, 7),
                DenomFactor::simple(0, 10),
                DenomFactor::simple(0, 12),
            ],
        )
        .unwrap();
        assert!(z.function.equals(&expected));
        assert_eq!(z.mu, r(1, 140));
        let z = reduced_ideal_zeta(2, 1);
        assert!(z.function.equals(&RationalFunction::reciprocal_of([
            DenomFactor::new(0, 1, 2).unwrap(),
            DenomFactor::simple(0, 3),
        ])));
        assert_eq!(z.mu, r(1, 3));
    }

    #[test]
    fn reduced_degree() {
        for m in 1..=5 {
            for n in 1..=5 {
                let dims = lie_dims(m, n);
                let f = reduced_ideal_zeta(m, n).function;
                let num_deg = f.num().t_range().unwrap().1;
                let den_deg: i64 = f.den().iter().map(|x| x.b as i64 * x.mult as i64).sum();
                assert_eq!(num_deg - den_deg, -((dims.d + dims.h) as i64));
            }
        }
    }

    #[test]
    fn invariants() {
        let (alpha, beta) = analytic_invariants(2, 3);
        assert_eq!((alpha, beta), (9, r(19, 10)));
        assert_eq!(analytic_invariants(7, 1).0, 2);
    }

    #[test]
    fn functional_equations() {
        assert!(check_functional_equation(1, 1));
        assert!(check_functional_equation(2, 3));
        assert!(check_functional_equation(1, 2));
    }

    #[test]
    fn functional_equation_detects_wrong_monomial() {
        let z = ideal_zeta(1, 2);
        let wrong = LaurentPoly::term(-1, 10, 7);
        assert!(!z.invert_vars().equals(&z.mul_poly(&wrong)));
    }

    #[test]
    fn zero_behaviour() {
        assert_eq!(check_zero_behaviour(1, 1).unwrap(), (true, true));
        assert_eq!(check_zero_behaviour(2, 3).unwrap(), (true, true));
    }

    #[test]
    fn graded_ratio_for_heisenberg_is_one_third() {
        let both = abelian_zeta(2).mul(&abelian_zeta(1));
        let lim = graded_ideal_zeta(1, 1).div(&both).unwrap().limit_t1().unwrap();
        assert_eq!(lim.as_constant(), Some(r(1, 3)));
    }

    #[test]
    fn report_json_round_trip() {
        let rep = zeta_report(2, 2);
        let s = serde_json::to_string(&rep).unwrap();
        let back: ZetaReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rep);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
