//! Integer Laurent polynomials in the two formal variables `q` and `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair of a monomial `q^q t^t`.
///
/// Field order matters: the derived ordering is lexicographic on `(t, q)`,
/// which is the canonical term order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exp {
    pub t: i64,
    pub q: i64,
}

impl Exp {
    pub const ZERO: Exp = Exp { t: 0, q: 0 };

    pub fn new(q: i64, t: i64) -> Self {
        Exp { t, q }
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, rhs: Exp) -> Exp {
        Exp {
            t: self.t + rhs.t,
            q: self.q + rhs.q,
        }
    }
}

impl Neg for Exp {
    type Output = Exp;
    fn neg(self) -> Exp {
        Exp { t: -self.t, q: -self.q }
    }
}

/// A finite sum of terms `c q^a t^b` with nonzero integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::term(c, 0, 0)
    }

    /// `q^q_exp t^t_exp`.
    pub fn monomial(q_exp: i64, t_exp: i64) -> Self {
        Self::term(1, q_exp, t_exp)
    }

    pub fn term<C: Into<BigInt>>(c: C, q_exp: i64, t_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Exp::new(q_exp, t_exp), c.into());
        p
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(q_exp: i64, t_exp: i64) -> Self {
        Self::one() - Self::monomial(q_exp, t_exp)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i64, i64)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, qe, te) in terms {
            p.add_term(Exp::new(qe, te), c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(Exp::ZERO).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (lexicographic on `(t, q)`).
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: Exp) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// The single term, if the polynomial is a monomial times a coefficient.
    pub fn as_term(&self) -> Option<(Exp, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Smallest and largest exponent of `t`, or `None` for zero.
    pub fn t_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?.t;
        let hi = self.terms.keys().next_back()?.t;
        Some((lo, hi))
    }

    /// Smallest and largest exponent of `q`, or `None` for zero.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.q).min()?;
        let hi = self.terms.keys().map(|e| e.q).max()?;
        Some((lo, hi))
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|e| e.t == 0)
    }

    pub fn is_q_free(&self) -> bool {
        self.terms.keys().all(|e| e.q == 0)
    }

    /// Coefficient of `t^k`, a Laurent polynomial in `q` alone.
    pub fn t_coeff(&self, k: i64) -> LaurentPoly {
        let lo = Exp { t: k, q: i64::MIN };
        let hi = Exp { t: k, q: i64::MAX };
        LaurentPoly {
            terms: self.terms.range(lo..=hi).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Drops every term with `t`-exponent above `k`.
    pub fn truncate_t(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.t <= k)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exp: Exp) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e + exp, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution `q -> q^-1`, `t -> t^-1`.
    pub fn invert_vars(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    /// Substitutes `t = 1`.
    pub fn eval_t1(&self) -> LaurentPoly {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(Exp::new(e.q, 0), c.clone());
        }
        out
    }

    /// Substitutes `q = 1`.
    pub fn eval_q1(&self) -> LaurentPoly {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(Exp::new(0, e.t), c.clone());
        }
        out
    }

    /// Swaps the roles of `q` and `t`.
    pub fn swap_vars(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp::new(e.t, e.q), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at concrete rational values of `q` and `t`.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| BigRational::from_integer(c.clone()) * rpow(q, e.q) * rpow(t, e.t))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Evaluates a `t`-free polynomial at the integer `q`, requiring an
    /// integer result.
    pub fn eval_q_integer(&self, q: &BigInt) -> Option<BigInt> {
        let v = self.eval(&BigRational::from_integer(q.clone()), &BigRational::one());
        v.is_integer().then(|| v.to_integer())
    }

    /// Exact division by `1 - t`; `None` when the remainder is nonzero.
    ///
    /// Each fixed power of `q` is a Laurent polynomial in `t`, divided by
    /// synthetic division from the lowest `t`-degree upward.
    pub fn div_one_minus_t(&self) -> Option<LaurentPoly> {
        let mut by_q: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            by_q.entry(e.q).or_default().insert(e.t, c.clone());
        }
        let mut out = Self::zero();
        for (qe, series) in by_q {
            let lo = *series.keys().next().unwrap();
            let hi = *series.keys().next_back().unwrap();
            // f = (1 - t) g  <=>  g_k = f_k + g_{k-1}
            let mut running = BigInt::zero();
            for k in lo..=hi {
                if let Some(c) = series.get(&k) {
                    running += c;
                }
                if k < hi {
                    out.add_term(Exp::new(qe, k), running.clone());
                }
            }
            if !running.is_zero() {
                return None;
            }
        }
        Some(out)
    }
}

pub(crate) fn rpow(base: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, var: char, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        e if e < 0 => write!(f, "{var}^({e})"),
        e => write!(f, "{var}^{e}"),
    }
}

/// Writes `q^a t^b` in the plain-text style (`q^2 t^3`, `q t`, `t`, `1`).
pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, exp: Exp) -> fmt::Result {
    if exp == Exp::ZERO {
        return write!(f, "1");
    }
    fmt_power(f, 'q', exp.q)?;
    if exp.q != 0 && exp.t != 0 {
        write!(f, " ")?;
    }
    fmt_power(f, 't', exp.t)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, "-")?,
                (_, false) => write!(f, "+")?,
            }
            if *e == Exp::ZERO {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
                fmt_monomial(f, *e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(c, q, t)| (c, q, t)))
    }

    #[test]
    fn difference_of_squares() {
        let a = LaurentPoly::one_minus(1, 1);
        let b = p(&[(1, 0, 0), (1, 1, 1)]);
        assert_eq!(&a * &b, LaurentPoly::one_minus(2, 2));
    }

    #[test]
    fn identity_and_negative_exponents() {
        let a = p(&[(1, 0, 0), (1, -1, -1)]);
        assert_eq!(&a * &LaurentPoly::one(), a);
        assert_eq!(&a * &LaurentPoly::monomial(1, 1), p(&[(1, 1, 1), (1, 0, 0)]));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = p(&[(2, 3, 1)]);
        let b = p(&[(-2, 3, 1)]);
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).len(), 0);
    }

    #[test]
    fn canonical_order_is_t_then_q() {
        let a = p(&[(1, 5, 0), (1, 0, 2), (1, 1, 1), (1, -2, 1)]);
        let exps: Vec<_> = a.terms().map(|(e, _)| (e.t, e.q)).collect();
        assert_eq!(exps, vec![(0, 5), (1, -2), (1, 1), (2, 0)]);
    }

    #[test]
    fn division_by_one_minus_t() {
        let f = LaurentPoly::one_minus(0, 3);
        let g = f.div_one_minus_t().unwrap();
        assert_eq!(g, p(&[(1, 0, 0), (1, 0, 1), (1, 0, 2)]));
        assert!(LaurentPoly::one_minus(1, 1).div_one_minus_t().is_none());
        let h = &LaurentPoly::one_minus(0, 1) * &p(&[(3, 2, -1), (1, -1, 4)]);
        assert_eq!(h.div_one_minus_t().unwrap(), p(&[(3, 2, -1), (1, -1, 4)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(1, 0, 0), (-1, 1, 1)]).to_string(), "1-q t");
        assert_eq!(p(&[(2, 2, 3), (-3, -1, 0)]).to_string(), "-3 q^(-1)+2 q^2 t^3");
    }
}
