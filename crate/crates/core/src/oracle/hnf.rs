//! Hermite normal forms of finite `p`-power index sublattices of `Z^dim`.
//!
//! A basis is stored by rows: row `i` has diagonal entry `p^{k_i}`, zeros to
//! the left, and entry `(i, j)` for `j > i` in `[0, p^{k_j})`. The lattice is
//! the row span.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinat::compositions_revlex;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HnfBasis {
    p: i64,
    exps: Vec<u32>,
    rows: Vec<Vec<i64>>,
}

impl HnfBasis {
    /// Validates shape, triangularity and the reduction of every entry.
    pub fn new(p: i64, rows: Vec<Vec<i64>>) -> Option<Self> {
        let dim = rows.len();
        let mut exps = Vec::with_capacity(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim || row[..i].iter().any(|&x| x != 0) {
                return None;
            }
            exps.push(p_exponent(row[i], p)?);
        }
        for (i, row) in rows.iter().enumerate() {
            for j in i + 1..dim {
                if row[j] < 0 || row[j] >= rows[j][j] {
                    return None;
                }
            }
        }
        Some(HnfBasis { p, exps, rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn prime(&self) -> i64 {
        self.p
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `(k_1, ..., k_dim)`.
    pub fn diagonal_exponents(&self) -> &[u32] {
        &self.exps
    }

    /// `log_p` of the index.
    pub fn index_exponent(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Membership by reduction against the rows.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim(), "vector length");
        let mut v = v.to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let pivot = row[i];
            if v[i].rem_euclid(pivot) != 0 {
                return false;
            }
            let c = v[i] / pivot;
            if c != 0 {
                for j in i..v.len() {
                    v[j] -= c * row[j];
                }
            }
        }
        true
    }
}

fn p_exponent(mut x: i64, p: i64) -> Option<u32> {
    if x <= 0 {
        return None;
    }
    let mut k = 0;
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    (x == 1).then_some(k)
}

/// Number of bases sharing the diagonal `exps`: `prod_j p^{k_j (j-1)}`.
fn residues_for(p: i64, exps: &[u32]) -> BigInt {
    exps.iter()
        .enumerate()
        .map(|(j, &k)| BigInt::from(p).pow(k * j as u32))
        .product()
}

/// Bases with a fixed diagonal, decoded from a mixed-radix counter.
pub fn hnf_with_diagonal(p: i64, exps: Vec<u32>) -> impl Iterator<Item = HnfBasis> {
    let dim = exps.len();
    let moduli: Vec<i64> = exps.iter().map(|&k| p.pow(k)).collect();
    let total: u64 = residues_for(p, &exps)
        .try_into()
        .expect("diagonal class too large to enumerate");
    (0..total).map(move |mut code| {
        let mut rows = vec![vec![0i64; dim]; dim];
        for j in 0..dim {
            rows[j][j] = moduli[j];
            let mj = moduli[j] as u64;
            for row in rows.iter_mut().take(j) {
                row[j] = (code % mj) as i64;
                code /= mj;
            }
        }
        HnfBasis {
            p,
            exps: exps.clone(),
            rows,
        }
    })
}

/// Every index-`p^k` sublattice of `Z^dim`, each exactly once.
pub fn hnf_enumerate(dim: usize, p: i64, k: u32) -> impl Iterator<Item = HnfBasis> {
    compositions_revlex(k, dim)
        .into_iter()
        .flat_map(move |c| hnf_with_diagonal(p, c.entries().to_vec()))
}

/// The number of bases [`hnf_enumerate`] yields, summed over diagonals
/// without materializing them.
pub fn hnf_count(dim: usize, p: i64, k: u32) -> BigInt {
    compositions_revlex(k, dim)
        .iter()
        .map(|c| residues_for(p, c.entries()))
        .fold(BigInt::zero(), |a, b| a + b)
}

/// Counts bases satisfying `pred`, one parallel task per diagonal.
pub fn hnf_count_where<F>(dim: usize, p: i64, k: u32, pred: F) -> u64
where
    F: Fn(&HnfBasis) -> bool + Sync,
{
    compositions_revlex(k, dim)
        .into_par_iter()
        .map(|c| hnf_with_diagonal(p, c.entries().to_vec()).filter(|b| pred(b)).count() as u64)
        .sum()
}

/// `p^{k (dim - 1)}`, the size estimate used by the resource guard.
pub fn enumeration_estimate(dim: usize, p: i64, k: u32) -> f64 {
    (p as f64).powf(k as f64 * (dim as f64 - 1.0))
}
