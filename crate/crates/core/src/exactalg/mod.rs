//! Exact arithmetic: bivariate Laurent polynomials, factored rational
//! functions in `q` and `t = q^-s`, and univariate rational functions in `s`.

mod json;
mod laurent;
mod rational;
mod univariate;

pub use laurent::{Exp, LaurentPoly};
pub use rational::{fmt_ratio, parse_ratio, DenomFactor, QRational, RationalFunction};
pub use univariate::{SPoly, SRational};
