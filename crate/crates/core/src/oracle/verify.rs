//! Coefficient-by-coefficient comparison of closed forms with enumeration.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::hnf::enumeration_estimate;
use super::ideals::{count_graded_ideals, count_ideals};
use crate::combinat::lie_dims;
use crate::error::{Error, Result};
use crate::liering::build_structure;
use crate::zetas::{graded_ideal_zeta, ideal_zeta};

/// Default bound on the estimated number of enumerated lattices.
pub const DEFAULT_CEILING: f64 = 1e8;

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub k: u32,
    pub formula: u128,
    pub oracle: u128,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// `p^{K (h - 1)}`.
pub fn verify_estimate(m: u32, n: u32, p: i64, upto: u32) -> f64 {
    enumeration_estimate(lie_dims(m, n).h as usize, p, upto)
}

/// Series coefficients `0..=upto` of the ideal or graded zeta function at `q = p`.
pub fn formula_counts(m: u32, n: u32, p: i64, upto: u32, graded: bool) -> Result<Vec<BigInt>> {
    let z = if graded {
        graded_ideal_zeta(m, n)
    } else {
        ideal_zeta(m, n)
    };
    let q = BigInt::from(p);
    z.series_coeffs(upto as usize)?
        .iter()
        .map(|c| {
            c.eval_q_integer(&q)
                .ok_or_else(|| Error::InvalidArgument("coefficient is not a polynomial in q".into()))
        })
        .collect()
}

pub fn verify_dirichlet(m: u32, n: u32, p: i64, upto: u32, graded: bool, ceiling: f64) -> Result<Vec<VerifyRecord>> {
    let estimate = verify_estimate(m, n, p, upto);
    if estimate > ceiling {
        return Err(Error::CeilingExceeded { estimate, ceiling });
    }
    let s = build_structure(m, n);
    let formula = formula_counts(m, n, p, upto, graded)?;
    Ok(formula
        .into_iter()
        .enumerate()
        .map(|(k, f)| {
            let k = k as u32;
            let oracle = if graded {
                count_graded_ideals(&s, p, k)
            } else {
                count_ideals(&s, p, k)
            };
            let formula: u128 = f.try_into().unwrap_or(u128::MAX);
            VerifyRecord {
                k,
                formula,
                oracle,
                matches: formula == oracle,
            }
        })
        .collect())
}
