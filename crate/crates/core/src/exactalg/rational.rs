//! Rational functions in `q` and `t` with factored denominators.
//!
//! Every zeta function produced by this crate has a denominator that is a
//! product of binomials `1 - q^a t^b`. Keeping the denominator as a
//! multiset of such factors avoids any need for polynomial gcds: equality
//! is decided by cross-multiplication, and the only cancellation ever
//! performed is multiset cancellation or exact division by `1 - t`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{fmt_monomial, Exp, LaurentPoly};
use crate::error::{Error, Result};

/// The factor `(1 - q^a t^b)^mult`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenomFactor {
    pub a: i64,
    pub b: u32,
    pub mult: u32,
}

impl DenomFactor {
    pub fn new(a: i64, b: u32, mult: u32) -> Result<Self> {
        if (a == 0 && b == 0) || mult == 0 {
            return Err(Error::InvalidFactor { a, b, mult });
        }
        Ok(DenomFactor { a, b, mult })
    }

    /// `(1 - q^a t^b)`, multiplicity one.
    pub fn simple(a: i64, b: u32) -> Self {
        Self::new(a, b, 1).expect("(a, b) must not be (0, 0)")
    }

    /// `1 - q^a t^b` (ignoring multiplicity).
    pub fn base_poly(&self) -> LaurentPoly {
        LaurentPoly::one_minus(self.a, self.b as i64)
    }

    /// `(1 - q^a t^b)^mult`, expanded.
    pub fn poly(&self) -> LaurentPoly {
        self.base_poly().pow(self.mult)
    }

    fn key(&self) -> (u32, i64) {
        (self.b, self.a)
    }
}

/// Sorted, merged multiset of denominator factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
struct FactorSet(BTreeMap<(u32, i64), u32>);

impl FactorSet {
    fn from_factors<I: IntoIterator<Item = DenomFactor>>(it: I) -> Self {
        let mut set = FactorSet::default();
        for f in it {
            set.insert(f);
        }
        set
    }

    fn insert(&mut self, f: DenomFactor) {
        *self.0.entry(f.key()).or_insert(0) += f.mult;
    }

    fn iter(&self) -> impl Iterator<Item = DenomFactor> + '_ {
        self.0.iter().map(|(&(b, a), &mult)| DenomFactor { a, b, mult })
    }

    fn product(&self) -> LaurentPoly {
        self.iter().fold(LaurentPoly::one(), |acc, f| &acc * &f.poly())
    }

    /// Factors of `self` not covered by `other`, as an expanded product.
    fn excess_over(&self, other: &FactorSet) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for f in self.iter() {
            let have = other.0.get(&f.key()).copied().unwrap_or(0);
            if f.mult > have {
                acc = &acc * &f.base_poly().pow(f.mult - have);
            }
        }
        acc
    }

    fn lcm(&self, other: &FactorSet) -> FactorSet {
        let mut out = self.clone();
        for (k, &m) in &other.0 {
            let e = out.0.entry(*k).or_insert(0);
            *e = (*e).max(m);
        }
        out
    }
}

/// A rational function `num / prod (1 - q^a t^b)^mult`.
///
/// Equality is mathematical (cross-multiplication), not structural.
#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: FactorSet,
}

impl RationalFunction {
    pub fn new<I: IntoIterator<Item = DenomFactor>>(num: LaurentPoly, den: I) -> Result<Self> {
        let mut set = FactorSet::default();
        for f in den {
            DenomFactor::new(f.a, f.b, f.mult)?;
            set.insert(f);
        }
        Ok(RationalFunction { num, den: set })
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalFunction {
            num,
            den: FactorSet::default(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// `1 / prod factors`.
    pub fn reciprocal_of<I: IntoIterator<Item = DenomFactor>>(factors: I) -> Self {
        RationalFunction {
            num: LaurentPoly::one(),
            den: FactorSet::from_factors(factors),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator factors ordered by `(b, a)`.
    pub fn den(&self) -> Vec<DenomFactor> {
        self.den.iter().collect()
    }

    /// The expanded denominator polynomial.
    pub fn den_poly(&self) -> LaurentPoly {
        self.den.product()
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        let mut den = self.den.clone();
        for f in other.den.iter() {
            den.insert(f);
        }
        RationalFunction {
            num: &self.num * &other.num,
            den,
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFunction {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let den = self.den.lcm(&other.den);
        let num = &(&self.num * &den.excess_over(&self.den)) + &(&other.num * &den.excess_over(&other.den));
        RationalFunction { num, den }
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Divides by `other`, whose numerator must be `±q^a t^b`.
    ///
    /// Shared denominator factors cancel as a multiset; the remaining
    /// factors of `other` move into the numerator expanded.
    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        let (exp, c) = other.num.as_term().ok_or(Error::NonMonomialDivisor)?;
        if !c.abs().is_one() {
            return Err(Error::NonMonomialDivisor);
        }
        let sign = c.clone();
        let mut den = FactorSet::default();
        for f in self.den.iter() {
            let shared = other.den.0.get(&f.key()).copied().unwrap_or(0);
            if f.mult > shared {
                den.insert(DenomFactor {
                    mult: f.mult - shared,
                    ..f
                });
            }
        }
        let num = (&self.num * &other.den.excess_over(&self.den))
            .mul_monomial(-exp)
            .scale(&sign);
        Ok(RationalFunction { num, den })
    }

    /// Mathematical equality: `x.num * prod y.den == y.num * prod x.den`.
    ///
    /// Only the factors not shared by both sides are expanded.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        let lhs = &self.num * &other.den.excess_over(&self.den);
        let rhs = &other.num * &self.den.excess_over(&other.den);
        lhs == rhs
    }

    /// Substitutes `q -> q^-1` and `t -> t^-1`, restoring the factored
    /// shape through `1/(1 - q^-a t^-b) = -q^a t^b / (1 - q^a t^b)`.
    pub fn invert_vars(&self) -> RationalFunction {
        let mut shift = Exp::ZERO;
        let mut sign_odd = false;
        for f in self.den.iter() {
            let m = f.mult as i64;
            shift = shift + Exp::new(f.a * m, f.b as i64 * m);
            sign_odd ^= f.mult % 2 == 1;
        }
        let mut num = self.num.invert_vars().mul_monomial(shift);
        if sign_odd {
            num = -num;
        }
        RationalFunction {
            num,
            den: self.den.clone(),
        }
    }

    /// Coefficients `c_0..=c_k` of the expansion in powers of `t`, each a
    /// Laurent polynomial in `q`.
    pub fn series_coeffs(&self, k: usize) -> Result<Vec<LaurentPoly>> {
        for f in self.den.iter() {
            if f.b == 0 {
                return Err(Error::NotExpandable { a: f.a, b: f.b });
            }
        }
        if let Some((lo, _)) = self.num.t_range() {
            if lo < 0 {
                return Err(Error::NegativeTExponent(lo));
            }
        }
        let mut coeffs: Vec<LaurentPoly> = (0..=k as i64)
            .map(|j| self.num.t_coeff(j).mul_monomial(Exp::new(0, -j)))
            .collect();
        // g = f / (1 - x) with x = q^a t^b satisfies g_j = f_j + q^a g_{j-b}.
        for f in self.den.iter() {
            let b = f.b as usize;
            let step = Exp::new(f.a, 0);
            for _ in 0..f.mult {
                for j in b..=k {
                    let prev = coeffs[j - b].mul_monomial(step);
                    coeffs[j] += &prev;
                }
            }
        }
        Ok(coeffs)
    }

    /// Exact limit as `t -> 1`, a rational function of `q`.
    ///
    /// Every factor `1 - t^b` (the only ones vanishing at `t = 1`) is
    /// written as `(1 - t)(1 + t + ... + t^(b-1))`; the numerator is then
    /// divided by `1 - t` as often as the pole order requires.
    pub fn limit_t1(&self) -> Result<QRational> {
        let pole: u32 = self.den.iter().filter(|f| f.a == 0).map(|f| f.mult).sum();
        let mut num = self.num.clone();
        let mut removed = 0;
        while removed < pole && !num.is_zero() {
            match num.div_one_minus_t() {
                Some(next) => {
                    num = next;
                    removed += 1;
                }
                None => break,
            }
        }
        if num.is_zero() {
            return Ok(QRational::zero());
        }
        if removed < pole {
            return Err(Error::PoleAtT1 { order: pole - removed });
        }
        let mut den_const = BigInt::one();
        let mut den = FactorSet::default();
        for f in self.den.iter() {
            if f.a == 0 {
                den_const *= num_traits::pow(BigInt::from(f.b), f.mult as usize);
            } else {
                den.insert(DenomFactor {
                    a: f.a,
                    b: 0,
                    mult: f.mult,
                });
            }
        }
        Ok(QRational {
            num: num.eval_t1(),
            den_const,
            den,
        })
    }

    /// Evaluates at concrete rational `q` and `t`; `None` at a pole.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let d = self.den_poly().eval(q, t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q, t) / d)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<_> = self.den.iter().collect();
        fmt_quotient(f, &self.num, &den, |f, fac| {
            write!(f, "(1-")?;
            fmt_monomial(f, Exp::new(fac.a, fac.b as i64))?;
            write!(f, ")")
        })
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// Plain-text `num/den` with the conventions `1/(1-t)`, `(1-t)/(1-q t)`,
/// `1/((1-t)(1-q t))`.
pub(crate) fn fmt_quotient<F>(
    f: &mut fmt::Formatter<'_>,
    num: &LaurentPoly,
    den: &[DenomFactor],
    mut factor: F,
) -> fmt::Result
where
    F: FnMut(&mut fmt::Formatter<'_>, &DenomFactor) -> fmt::Result,
{
    if num.len() > 1 && !den.is_empty() {
        write!(f, "({num})")?;
    } else {
        write!(f, "{num}")?;
    }
    if den.is_empty() {
        return Ok(());
    }
    write!(f, "/")?;
    let wrap = den.len() > 1 || den[0].mult > 1;
    if wrap {
        write!(f, "(")?;
    }
    for fac in den {
        factor(f, fac)?;
        if fac.mult > 1 {
            write!(f, "^{}", fac.mult)?;
        }
    }
    if wrap {
        write!(f, ")")?;
    }
    Ok(())
}

/// A rational function of `q` alone: `num / (c * prod (1 - q^a)^mult)`
/// with a positive integer constant `c`. Produced by
/// [`RationalFunction::limit_t1`].
#[derive(Clone)]
pub struct QRational {
    num: LaurentPoly,
    den_const: BigInt,
    den: FactorSet,
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            num: LaurentPoly::zero(),
            den_const: BigInt::one(),
            den: FactorSet::default(),
        }
    }

    pub fn from_constant(c: &BigRational) -> Self {
        QRational {
            num: LaurentPoly::constant(c.numer().clone()),
            den_const: c.denom().clone(),
            den: FactorSet::default(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_const(&self) -> &BigInt {
        &self.den_const
    }

    pub fn den(&self) -> Vec<DenomFactor> {
        self.den.iter().collect()
    }

    fn den_poly(&self) -> LaurentPoly {
        self.den.product().scale(&self.den_const)
    }

    pub fn equals(&self, other: &QRational) -> bool {
        &self.num * &other.den_poly() == &other.num * &self.den_poly()
    }

    /// The value, if it does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        let d = self.den_poly();
        let (ne, nc) = self.num.terms().last()?;
        let (de, dc) = d.terms().last()?;
        if ne != de {
            return None;
        }
        let c = BigRational::new(nc.clone(), dc.clone());
        let lhs = self.num.scale(c.denom());
        let rhs = d.scale(c.numer());
        (lhs == rhs).then_some(c)
    }

    /// Evaluates at a rational `q`; `None` at a pole.
    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let one = BigRational::one();
        let d = self.den_poly().eval(q, &one);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q, &one) / d)
    }
}

impl PartialEq for QRational {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{}", fmt_ratio(&c));
        }
        let den: Vec<_> = self.den.iter().collect();
        if self.den_const.is_one() {
            fmt_quotient(f, &self.num, &den, |f, fac| {
                write!(f, "(1-")?;
                fmt_monomial(f, Exp::new(fac.a, 0))?;
                write!(f, ")")
            })
        } else {
            let num = if self.num.len() > 1 {
                format!("({})", self.num)
            } else {
                self.num.to_string()
            };
            write!(f, "{num}/({}", self.den_const)?;
            for fac in &den {
                write!(f, "(1-")?;
                fmt_monomial(f, Exp::new(fac.a, 0))?;
                write!(f, ")")?;
                if fac.mult > 1 {
                    write!(f, "^{}", fac.mult)?;
                }
            }
            write!(f, ")")
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}

/// `"num/den"` in lowest terms with positive denominator.
pub fn fmt_ratio(r: &BigRational) -> String {
    let g = r.numer().gcd(r.denom());
    let (mut n, mut d) = (r.numer() / &g, r.denom() / &g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    format!("{n}/{d}")
}

/// Parses `"num/den"` (or a bare integer).
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::Json(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
