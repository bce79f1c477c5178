//! Igusa functions of degree `n`.
//!
//! `I_n(Y; X_1..X_n)` has two equivalent presentations: a sum over subsets
//! of `[n]` weighted by Gaussian multinomials, and a sum over `S_n`
//! weighted by `Y^length` and the descent monomials. Both are built here
//! and compared in the tests; the zeta functions use the permutation form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::combinat::{gaussian_multinomial, permutations_with_stats};
use crate::error::{Error, Result};
use crate::exactalg::{DenomFactor, Exp, LaurentPoly, RationalFunction, SRational};

/// Arguments of `I_n(Y; X)`: `Y` and each `X_j` are monomials `q^a t^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaData {
    y: Exp,
    x: Vec<Exp>,
}

impl IgusaData {
    pub fn new(y: Exp, x: Vec<Exp>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::InvalidArgument("Igusa data needs n >= 1".into()));
        }
        for e in &x {
            if e.t < 0 || *e == Exp::ZERO {
                return Err(Error::InvalidArgument(format!(
                    "X = q^{} t^{} cannot head a denominator factor",
                    e.q, e.t
                )));
            }
        }
        Ok(IgusaData { y, x })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn y(&self) -> Exp {
        self.y
    }

    pub fn x(&self) -> &[Exp] {
        &self.x
    }

    fn denominator(&self) -> Vec<DenomFactor> {
        self.x.iter().map(|e| DenomFactor::simple(e.q, e.t as u32)).collect()
    }
}

fn one_minus(e: Exp) -> LaurentPoly {
    LaurentPoly::one_minus(e.q, e.t)
}

/// `sum_{I ⊆ [n]} binom(n; I)_Y prod_{i in I} X_i/(1 - X_i)` over the common
/// denominator `prod_i (1 - X_i)`.
pub fn igusa_subset(data: &IgusaData) -> RationalFunction {
    let n = data.n();
    let mut num = LaurentPoly::zero();
    for mask in 0u64..1 << n {
        let subset: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u32 + 1).collect();
        let weight = gaussian_multinomial(n as u32, &subset)
            .expect("subset of [n]")
            .substitute(data.y);
        let mut term = weight;
        for (i, &x) in data.x.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term = term.mul_monomial(x);
            } else {
                term = &term * &one_minus(x);
            }
        }
        num += &term;
    }
    RationalFunction::new(num, data.denominator()).expect("validated data")
}

/// `sum_{w in S_n} Y^{l(w)} prod_{j in Des(w)} X_j / prod_i (1 - X_i)`.
pub fn igusa_permutation(data: &IgusaData) -> RationalFunction {
    let mut num = LaurentPoly::zero();
    for s in permutations_with_stats(data.n()) {
        let ell = s.length as i64;
        let mut exp = Exp::new(data.y.q * ell, data.y.t * ell);
        for j in s.descents.iter() {
            exp = exp + data.x[j - 1];
        }
        num.add_term(exp, BigInt::one());
    }
    RationalFunction::new(num, data.denominator()).expect("validated data")
}

/// The middle presentation
/// `1/(1 - X_n) * sum_{I ⊆ [n-1]} binom(n; I)_Y prod_{i in I} X_i/(1 - X_i)`,
/// assembled with rational-function addition. Only used as a cross-check.
pub fn igusa_factored_last(data: &IgusaData) -> RationalFunction {
    let n = data.n();
    let mut sum = RationalFunction::from_poly(LaurentPoly::zero());
    for mask in 0u64..1 << (n - 1) {
        let subset: Vec<u32> = (0..n - 1)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i as u32 + 1)
            .collect();
        let weight = gaussian_multinomial(n as u32, &subset)
            .expect("subset of [n]")
            .substitute(data.y);
        let mut term = RationalFunction::from_poly(weight);
        for &i in &subset {
            let x = data.x[i as usize - 1];
            let ratio = RationalFunction::new(LaurentPoly::monomial(x.q, x.t), [DenomFactor::simple(x.q, x.t as u32)])
                .expect("validated data");
            term = term.mul(&ratio);
        }
        sum = sum.add(&term);
    }
    let last = data.x[n - 1];
    sum.mul(&RationalFunction::reciprocal_of([DenomFactor::simple(
        last.q,
        last.t as u32,
    )]))
}

/// `n! / prod_i (b_i s - a_i)`.
pub fn igusa_topological(n: usize, a: &[i64], b: &[i64]) -> Result<SRational> {
    if a.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.len(),
        });
    }
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    Ok(SRational::new(
        BigRational::from_integer(fact),
        vec![],
        b.iter().zip(a).map(|(&bi, &ai)| (bi, ai)).collect(),
    ))
}

/// `sum_{w in S_n} prod_{j in Des(w)} Y^{b_j} / prod_i (1 - Y^{b_i})`.
///
/// The result is a rational function in one variable; it is returned as a
/// [`RationalFunction`] in which `t` plays the role of `Y`.
pub fn igusa_reduced(n: usize, b: &[u32]) -> Result<RationalFunction> {
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    if b.contains(&0) {
        return Err(Error::InvalidArgument("reduced Igusa function needs b_i >= 1".into()));
    }
    let mut num = LaurentPoly::zero();
    for s in permutations_with_stats(n) {
        let deg: i64 = s.descents.iter().map(|j| b[j - 1] as i64).sum();
        num.add_term(Exp::new(0, deg), BigInt::one());
    }
    RationalFunction::new(num, b.iter().map(|&bi| DenomFactor::simple(0, bi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qinv() -> Exp {
        Exp::new(-1, 0)
    }

    #[test]
    fn degree_one() {
        let d = IgusaData::new(qinv(), vec![Exp::new(2, 3)]).unwrap();
        let expected = RationalFunction::reciprocal_of([DenomFactor::simple(2, 3)]);
        assert!(igusa_subset(&d).equals(&expected));
        assert!(igusa_permutation(&d).equals(&expected));
    }

    #[test]
    fn degree_two_by_hand() {
        let (x1, x2) = (Exp::new(4, 3), Exp::new(6, 5));
        let d = IgusaData::new(qinv(), vec![x1, x2]).unwrap();
        let num = &LaurentPoly::one() + &LaurentPoly::monomial(x1.q - 1, x1.t);
        let expected = RationalFunction::new(num, [DenomFactor::simple(4, 3), DenomFactor::simple(6, 5)]).unwrap();
        assert!(igusa_subset(&d).equals(&expected));
        assert!(igusa_permutation(&d).equals(&expected));
        assert!(igusa_factored_last(&d).equals(&expected));
    }

    #[test]
    fn example_two_three_numerator() {
        let d = IgusaData::new(qinv(), vec![Exp::new(11, 7), Exp::new(20, 10), Exp::new(27, 12)]).unwrap();
        let z = igusa_permutation(&d);
        let expected_num =
            LaurentPoly::from_terms([(1, 0, 0), (1, 9, 7), (1, 10, 7), (1, 18, 10), (1, 19, 10), (1, 28, 17)]);
        assert_eq!(z.num(), &expected_num);
        assert!(igusa_subset(&d).equals(&z));
    }

    #[test]
    fn rejects_degenerate_data() {
        assert!(IgusaData::new(qinv(), vec![]).is_err());
        assert!(IgusaData::new(qinv(), vec![Exp::new(0, 0)]).is_err());
        assert!(IgusaData::new(qinv(), vec![Exp::new(1, -1)]).is_err());
    }

    #[test]
    fn topological_forms() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let t = igusa_topological(1, &[0], &[1]).unwrap();
        assert!(t.equals(&SRational::new(r(1, 1), vec![], vec![(1, 0)])));
        let t = igusa_topological(2, &[4, 6], &[3, 5]).unwrap();
        assert!(t.equals(&SRational::new(r(2, 1), vec![], vec![(3, 4), (5, 6)])));
        assert_eq!(t.degree(), Some(-2));
        assert_eq!(t.leading_ratio(), r(2, 15));
        assert!(igusa_topological(2, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn reduced_forms() {
        let r = igusa_reduced(1, &[3]).unwrap();
        assert!(r.equals(&RationalFunction::reciprocal_of([DenomFactor::simple(0, 3)])));
        let r = igusa_reduced(2, &[3, 5]).unwrap();
        let expected = RationalFunction::new(
            LaurentPoly::from_terms([(1, 0, 0), (1, 0, 3)]),
            [DenomFactor::simple(0, 3), DenomFactor::simple(0, 5)],
        )
        .unwrap();
        assert!(r.equals(&expected));
        let r = igusa_reduced(3, &[7, 10, 12]).unwrap();
        assert_eq!(
            r.num(),
            &LaurentPoly::from_terms([(1, 0, 0), (2, 0, 7), (2, 0, 10), (1, 0, 17)])
        );
    }

    #[test]
    fn reduced_residue_is_factorial_over_product() {
        let b = [3u32, 5, 7];
        let r = igusa_reduced(3, &b).unwrap();
        let scaled = r.mul_poly(&LaurentPoly::one_minus(0, 1).pow(3));
        let mu = scaled.limit_t1().unwrap().as_constant().unwrap();
        assert_eq!(mu, BigRational::new(6.into(), 105.into()));
    }
}
