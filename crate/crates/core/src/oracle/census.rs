//! Maximal sublattices of `Z^n` classified by elementary-divisor type.
//!
//! A sublattice is maximal when it is not contained in `p Z^n`, i.e. its
//! smallest elementary divisor is `1`. With valuations `0 = ν_1 <= .. <= ν_n`
//! its type is `I = {ι : ν_{ι+1} > ν_ι}` with `r_ι = ν_{ι+1} - ν_ι`, and its
//! index is `p^w` with `w = sum r_ι (n - ι)`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::hnf::hnf_with_diagonal;
use super::snf::snf_valuations;
use crate::combinat::{compositions_revlex, gaussian_multinomial};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticeType {
    /// Strictly increasing subset of `[n-1]`.
    pub i: Vec<usize>,
    /// `r_ι >= 1` for each `ι` in `i`.
    pub r: Vec<u32>,
}

impl LatticeType {
    pub fn new(i: Vec<usize>, r: Vec<u32>) -> Option<Self> {
        let ok = i.len() == r.len()
            && i.windows(2).all(|w| w[0] < w[1])
            && i.first().is_none_or(|&x| x >= 1)
            && r.iter().all(|&x| x >= 1);
        ok.then_some(LatticeType { i, r })
    }

    pub fn trivial() -> Self {
        LatticeType { i: vec![], r: vec![] }
    }

    /// Reads the type off ascending valuations with `ν_1 = 0`.
    pub fn from_valuations(v: &[u32]) -> Self {
        let mut i = Vec::new();
        let mut r = Vec::new();
        for (pos, w) in v.windows(2).enumerate() {
            if w[1] > w[0] {
                i.push(pos + 1);
                r.push(w[1] - w[0]);
            }
        }
        LatticeType { i, r }
    }

    /// `r = sum r_ι`, the largest valuation.
    pub fn total(&self) -> u32 {
        self.r.iter().sum()
    }

    /// `w = sum r_ι (n - ι)`.
    pub fn w(&self, n: usize) -> u32 {
        self.i.iter().zip(&self.r).map(|(&i, &r)| r * (n - i) as u32).sum()
    }

    /// `r_ι`, zero when `ι` is not in `I`.
    pub fn r_at(&self, iota: usize) -> u32 {
        self.i.iter().position(|&x| x == iota).map_or(0, |k| self.r[k])
    }

    /// Every type on `[n-1]` with all `r_ι <= rmax`.
    pub fn all(n: usize, rmax: u32) -> Vec<LatticeType> {
        let mut out = vec![LatticeType::trivial()];
        for size in 1..n {
            for i in (1..n).combinations(size) {
                for r in (0..size).map(|_| 1..=rmax).multi_cartesian_product() {
                    out.push(LatticeType { i: i.clone(), r });
                }
            }
        }
        out
    }
}

impl fmt::Display for LatticeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}}, r=({}))", self.i.iter().join(","), self.r.iter().join(","))
    }
}

/// `binom(n, I)_{q^-1} q^{sum r_ι ι (n - ι)}` at `q = p`.
pub fn census_expected(n: usize, ty: &LatticeType, p: i64) -> BigInt {
    let subset: Vec<u32> = ty.i.iter().map(|&x| x as u32).collect();
    let poly = gaussian_multinomial(n as u32, &subset).expect("subset of [n-1]");
    let e: u32 = ty.i.iter().zip(&ty.r).map(|(&i, &r)| r * (i * (n - i)) as u32).sum();
    let mut total = BigInt::from(0);
    for (j, c) in poly.coeffs().iter().enumerate() {
        let j = j as u32;
        assert!(j <= e, "q-exponent must stay nonnegative");
        total += c * BigInt::from(p).pow(e - j);
    }
    total
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    /// Counts by type, truncated to `r_ι <= rmax`.
    pub counts: BTreeMap<LatticeType, u64>,
    /// Maximal lattices of each index exponent, all types.
    pub maximal_by_index: BTreeMap<u32, u64>,
    /// Maximal lattices found by the direct `Λ ⊄ p Z^n` test.
    pub maximal_direct: BTreeMap<u32, u64>,
}

/// Classifies every maximal sublattice of `Z^n` of index at most
/// `p^{rmax n (n-1) / 2}`, the largest `w` of a type with `r_ι <= rmax`.
pub fn maximal_lattice_census(n: usize, p: i64, rmax: u32) -> Census {
    assert!(n >= 1 && rmax >= 1);
    let kmax = rmax * (n * (n - 1) / 2) as u32;
    let jobs: Vec<Vec<u32>> = (0..=kmax)
        .flat_map(|k| compositions_revlex(k, n))
        .map(|c| c.entries().to_vec())
        .collect();
    let partial: Vec<(BTreeMap<LatticeType, u64>, BTreeMap<u32, u64>, BTreeMap<u32, u64>)> = jobs
        .into_par_iter()
        .map(|exps| {
            let k: u32 = exps.iter().sum();
            let mut types = BTreeMap::new();
            let mut by_index = BTreeMap::new();
            let mut direct = BTreeMap::new();
            for lat in hnf_with_diagonal(p, exps) {
                let not_in_pz = lat.rows().iter().flatten().any(|&x| x % p != 0);
                if not_in_pz {
                    *direct.entry(k).or_insert(0) += 1;
                }
                let v = snf_valuations(lat.rows(), p);
                assert_eq!(v.zero_divisors, 0, "finite index");
                if v.valuations[0] != 0 {
                    continue;
                }
                *by_index.entry(k).or_insert(0) += 1;
                let ty = LatticeType::from_valuations(&v.valuations);
                if ty.r.iter().all(|&r| r <= rmax) {
                    *types.entry(ty).or_insert(0) += 1;
                }
            }
            (types, by_index, direct)
        })
        .collect();
    let mut census = Census {
        counts: BTreeMap::new(),
        maximal_by_index: BTreeMap::new(),
        maximal_direct: BTreeMap::new(),
    };
    for (t, b, d) in partial {
        for (ty, c) in t {
            *census.counts.entry(ty).or_insert(0) += c;
        }
        for (k, c) in b {
            *census.maximal_by_index.entry(k).or_insert(0) += c;
        }
        for (k, c) in d {
            *census.maximal_direct.entry(k).or_insert(0) += c;
        }
    }
    census
}

/// Runs the census and compares every type with `r_ι <= rmax` against
/// [`census_expected`], and the SNF maximality test against the direct one.
pub fn check_census(n: usize, p: i64, rmax: u32) -> bool {
    let census = maximal_lattice_census(n, p, rmax);
    let types_ok = LatticeType::all(n, rmax).iter().all(|ty| {
        let found = census.counts.get(ty).copied().unwrap_or(0);
        BigInt::from(found) == census_expected(n, ty, p)
    });
    let no_extra = census.counts.len() == LatticeType::all(n, rmax).len();
    types_ok && no_extra && census.maximal_by_index == census.maximal_direct
}
