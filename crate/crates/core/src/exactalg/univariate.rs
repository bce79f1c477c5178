//! Univariate rational functions in `s` with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `s` over the rationals, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SPoly(Vec<BigRational>);

impl SPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SPoly(coeffs)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `slope * s - intercept`.
    pub fn linear(slope: i64, intercept: i64) -> Self {
        Self::new(vec![
            BigRational::from_integer((-intercept).into()),
            BigRational::from_integer(slope.into()),
        ])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn mul(&self, other: &SPoly) -> SPoly {
        if self.is_zero() || other.is_zero() {
            return SPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SPoly::new(out)
    }

    pub fn eval(&self, s: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * s + c)
    }
}

/// `coeff * prod (slope s - intercept) / prod (slope s - intercept)`.
///
/// The factored shape is what the closed forms produce and what gets
/// rendered; equality and degree go through the expanded polynomials.
#[derive(Clone, Debug)]
pub struct SRational {
    pub coeff: BigRational,
    pub num: Vec<(i64, i64)>,
    pub den: Vec<(i64, i64)>,
}

impl SRational {
    pub fn new(coeff: BigRational, num: Vec<(i64, i64)>, den: Vec<(i64, i64)>) -> Self {
        SRational { coeff, num, den }
    }

    fn product(factors: &[(i64, i64)]) -> SPoly {
        factors
            .iter()
            .fold(SPoly::constant(BigRational::one()), |acc, &(m, c)| {
                acc.mul(&SPoly::linear(m, c))
            })
    }

    pub fn num_poly(&self) -> SPoly {
        Self::product(&self.num).mul(&SPoly::constant(self.coeff.clone()))
    }

    pub fn den_poly(&self) -> SPoly {
        Self::product(&self.den)
    }

    pub fn equals(&self, other: &SRational) -> bool {
        self.num_poly().mul(&other.den_poly()) == other.num_poly().mul(&self.den_poly())
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        let n = self.num_poly().degree()? as i64;
        Some(n - self.den_poly().degree().expect("nonzero denominator") as i64)
    }

    /// Limit of `s^(-degree) * f(s)` as `s -> infinity`.
    pub fn leading_ratio(&self) -> BigRational {
        self.num_poly().leading() / self.den_poly().leading()
    }

    pub fn eval(&self, s: &BigRational) -> Option<BigRational> {
        let d = self.den_poly().eval(s);
        (!d.is_zero()).then(|| self.num_poly().eval(s) / d)
    }

    /// Writes every factor with a positive slope and coprime coefficients,
    /// folding the extracted constants into `coeff`.
    pub fn normalized(&self) -> SRational {
        let mut coeff = self.coeff.clone();
        let mut fix = |factors: &[(i64, i64)], up: bool| -> Vec<(i64, i64)> {
            factors
                .iter()
                .map(|&(m, c)| {
                    let g = num_integer::gcd(m, c).abs().max(1);
                    let g = if m < 0 { -g } else { g };
                    let k = BigRational::from_integer(BigInt::from(g));
                    if up {
                        coeff *= &k;
                    } else {
                        coeff /= &k;
                    }
                    (m / g, c / g)
                })
                .collect()
        };
        let num = fix(&self.num, true);
        let den = fix(&self.den, false);
        SRational { coeff, num, den }
    }
}

impl PartialEq for SRational {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

fn fmt_linear(m: i64, c: i64) -> String {
    let s = match m {
        1 => "s".to_string(),
        -1 => "-s".to_string(),
        0 => String::new(),
        m => format!("{m}s"),
    };
    match (m, c) {
        (0, c) => format!("{}", -c),
        (_, 0) => s,
        (_, c) if c > 0 => format!("{s}-{c}"),
        (_, c) => format!("{s}+{}", -c),
    }
}

fn fmt_factor(m: i64, c: i64) -> String {
    if m == 1 && c == 0 {
        "s".to_string()
    } else {
        format!("({})", fmt_linear(m, c))
    }
}

impl fmt::Display for SRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        let (cn, cd) = (n.coeff.numer().clone(), n.coeff.denom().clone());
        let mut top = String::new();
        if n.num.is_empty() || !cn.abs().is_one() {
            top.push_str(&cn.abs().to_string());
        }
        for &(m, c) in &n.num {
            top.push_str(&fmt_factor(m, c));
        }
        if cn.is_negative() {
            top.insert(0, '-');
        }
        if n.den.is_empty() && cd.is_one() {
            return write!(f, "{top}");
        }
        let mut bottom = String::new();
        if !cd.is_one() {
            bottom.push_str(&cd.to_string());
        }
        for &(m, c) in &n.den {
            bottom.push_str(&fmt_factor(m, c));
        }
        let single = n.den.len() == 1 && cd.is_one();
        if single {
            write!(f, "{top}/{bottom}")
        } else {
            write!(f, "{top}/({bottom})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = SRational::new(r(2, 1), vec![], vec![(3, 4), (5, 6)]);
        let b = SRational::new(r(1, 1), vec![], vec![(5, 6), (3, 4)]);
        assert!(!a.equals(&b));
        let c = SRational::new(r(4, 1), vec![], vec![(6, 8), (5, 6)]);
        assert!(a.equals(&c));
    }

    #[test]
    fn degree_and_leading_ratio() {
        let a = SRational::new(r(6, 1), vec![], vec![(12, 27), (10, 20), (7, 11)]);
        assert_eq!(a.degree(), Some(-3));
        assert_eq!(a.leading_ratio(), r(6, 840));
        let rep = SRational::new(r(1, 1), vec![(3, 0)], vec![(3, 3)]);
        assert_eq!(rep.degree(), Some(0));
        assert!(rep.equals(&SRational::new(r(1, 1), vec![(1, 0)], vec![(1, 1)])));
    }

    #[test]
    fn display_normalizes() {
        let a = SRational::new(r(6, 1), vec![], vec![(12, 27), (10, 20), (7, 11)]);
        assert_eq!(a.to_string(), "1/(5(4s-9)(s-2)(7s-11))");
        let rep = SRational::new(r(1, 1), vec![(3, 0)], vec![(3, 3)]);
        assert_eq!(rep.to_string(), "s/(s-1)");
        assert_eq!(SRational::new(r(1, 1), vec![], vec![(1, 0)]).to_string(), "1/s");
    }
}
