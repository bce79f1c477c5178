//! Counting ideals and graded ideals of index `p^k` by enumeration.
//!
//! The basis is ordered so that the `n` central vectors come last. In an
//! upper-triangular basis the last `n` rows then span `M = Λ ∩ Z`, the first
//! `d` rows project onto `Λ̄ ≤ Z^d`, and the central parts of the first `d`
//! rows are free residues modulo `M` (`p^{k_M}` choices each). Every bracket
//! lands in `Z` and depends only on the projection, so `Λ` is an ideal iff
//! `[w, λ̄] ∈ M` for every generator `w` and every row `λ̄` of `Λ̄`. That test
//! involves one row at a time, so for a fixed diagonal of `Λ̄` the admissible
//! rows are counted separately and multiplied.
//!
//! [`count_ideals_naive`] enumerates full bases of `Z^h` instead and serves as
//! the reference for the factored count.

use rayon::prelude::*;

use super::hnf::{hnf_enumerate, HnfBasis};
use crate::combinat::compositions_revlex;
use crate::liering::LieStructure;

/// `[w_i, v]` for every generator `w_i` among the first `d`, as vectors of
/// centre coordinates.
struct Brackets {
    table: Vec<Vec<Vec<i64>>>,
    d: usize,
    n: usize,
}

impl Brackets {
    fn new(s: &LieStructure) -> Self {
        Brackets {
            table: s.bracket_table(),
            d: s.rank_abelian(),
            n: s.rank_centre(),
        }
    }

    /// Whether `[w_i, v] ∈ m` for all `i`; `v` has the `d` abelian coordinates.
    fn all_in(&self, v: &[i64], m: &HnfBasis) -> bool {
        let mut out = vec![0i64; self.n];
        (0..self.d).all(|i| {
            out.iter_mut().for_each(|x| *x = 0);
            for (j, &vj) in v.iter().enumerate() {
                if vj != 0 {
                    for (o, &c) in out.iter_mut().zip(&self.table[i][j]) {
                        *o += c * vj;
                    }
                }
            }
            m.contains(&out)
        })
    }
}

/// Number of rows `(0, .., 0, p^{k_i}, c_{i+1}, .., c_d)` with
/// `0 <= c_j < p^{k_j}` whose brackets lie in `m`.
fn admissible_rows(br: &Brackets, p: i64, exps: &[u32], i: usize, m: &HnfBasis) -> u64 {
    let d = exps.len();
    let moduli: Vec<i64> = exps.iter().map(|&k| p.pow(k)).collect();
    let total: u64 = moduli[i + 1..].iter().map(|&x| x as u64).product();
    let mut row = vec![0i64; d];
    row[i] = moduli[i];
    let mut count = 0;
    for mut code in 0..total {
        for j in i + 1..d {
            row[j] = (code % moduli[j] as u64) as i64;
            code /= moduli[j] as u64;
        }
        if br.all_in(&row, m) {
            count += 1;
        }
    }
    count
}

/// `sum_{k1 + k2 = k} sum_{M ≤ Z^n, index p^{k2}} weight(k2) #{Λ̄ : [L, Λ̄] ⊆ M}`.
fn factored_count(s: &LieStructure, p: i64, k: u32, free_residues: bool) -> u128 {
    let br = Brackets::new(s);
    let (d, n) = (br.d, br.n);
    let mut jobs: Vec<(HnfBasis, Vec<u32>)> = Vec::new();
    for k2 in 0..=k {
        for m in hnf_enumerate(n, p, k2) {
            for c in compositions_revlex(k - k2, d) {
                jobs.push((m.clone(), c.entries().to_vec()));
            }
        }
    }
    jobs.par_iter()
        .map(|(m, exps)| {
            let mut total: u128 = 1;
            for i in 0..d {
                total *= admissible_rows(&br, p, exps, i, m) as u128;
                if total == 0 {
                    return 0;
                }
            }
            if free_residues {
                total *= (p as u128).pow(d as u32 * m.index_exponent());
            }
            total
        })
        .sum()
}

/// Ideals of index `p^k` in `L ⊗ Z_p`, with `L` given by its structure
/// constants over `Z^h`.
pub fn count_ideals(s: &LieStructure, p: i64, k: u32) -> u128 {
    factored_count(s, p, k, true)
}

/// Pairs `(Λ₁ ≤ Z^d, Λ₂ ≤ Z^n)` with index product `p^k` and `[L, Λ₁] ⊆ Λ₂`.
pub fn count_graded_ideals(s: &LieStructure, p: i64, k: u32) -> u128 {
    factored_count(s, p, k, false)
}

/// Full enumeration of bases of `Z^h`, testing `[w, λ] ∈ Λ` for every
/// basis generator `w` and every row `λ`.
pub fn count_ideals_naive(s: &LieStructure, p: i64, k: u32) -> u64 {
    let br = Brackets::new(s);
    let (d, h) = (br.d, br.d + br.n);
    let ideal = |lat: &HnfBasis| {
        lat.rows().iter().all(|row| {
            (0..d).all(|i| {
                let mut v = vec![0i64; h];
                for j in 0..d {
                    for (c, &t) in br.table[i][j].iter().enumerate() {
                        v[d + c] += t * row[j];
                    }
                }
                lat.contains(&v)
            })
        })
    };
    super::hnf::hnf_count_where(h, p, k, ideal)
}

/// Pairs of bases enumerated independently, for cross-checking.
pub fn count_graded_ideals_naive(s: &LieStructure, p: i64, k: u32) -> u64 {
    let br = Brackets::new(s);
    let (d, n) = (br.d, br.n);
    let mut total = 0;
    for k2 in 0..=k {
        let ms: Vec<HnfBasis> = hnf_enumerate(n, p, k2).collect();
        for lam in hnf_enumerate(d, p, k - k2) {
            total += ms
                .iter()
                .filter(|m| lam.rows().iter().all(|row| br.all_in(row, m)))
                .count() as u64;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liering::build_structure;

    #[test]
    fn heisenberg_small() {
        let s = build_structure(1, 1);
        assert_eq!(count_ideals(&s, 2, 0), 1);
        assert_eq!(count_ideals(&s, 2, 1), 3);
        assert_eq!(count_graded_ideals(&s, 2, 1), 3);
        assert_eq!(count_graded_ideals(&s, 2, 0), 1);
        // 1 + q + 2q^2 + q^3 at q = 2.
        assert_eq!(count_ideals(&s, 2, 3), 19);
    }

    #[test]
    fn one_two_small() {
        let s = build_structure(1, 2);
        assert_eq!(count_ideals(&s, 2, 1), 7);
        assert_eq!(count_ideals(&s, 2, 2), 35);
    }

    #[test]
    fn factored_matches_naive() {
        for (m, n, p, kmax) in [(1, 1, 2, 4), (1, 1, 3, 3), (1, 2, 2, 3), (2, 1, 2, 2)] {
            let s = build_structure(m, n);
            for k in 0..=kmax {
                assert_eq!(
                    count_ideals(&s, p, k),
                    count_ideals_naive(&s, p, k) as u128,
                    "({m},{n}) p={p} k={k}"
                );
                assert_eq!(
                    count_graded_ideals(&s, p, k),
                    count_graded_ideals_naive(&s, p, k) as u128,
                    "graded ({m},{n}) p={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn abelian_structure_counts_all_sublattices() {
        let s = build_structure(1, 2).abelianized();
        for k in 0..=3 {
            let all = super::super::hnf::hnf_count(5, 2, k);
            assert_eq!(num_bigint::BigInt::from(count_ideals(&s, 2, k)), all);
        }
    }
}
