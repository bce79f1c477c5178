//! Congruence-kernel indices and the shape of the commutator matrix at
//! primitive points, both computed through elementary divisors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::census::LatticeType;
use super::snf::snf_valuations;
use crate::combinat::{e_count, lie_dims};
use crate::liering::full_commutator_matrix;

/// `n x n` matrix with zeros above the antidiagonal, unit antidiagonal and
/// free entries below, all reduced modulo `p^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntidiagonalRep {
    pub n: usize,
    pub modulus: i64,
    pub alpha: Vec<Vec<i64>>,
}

impl AntidiagonalRep {
    pub fn sample<R: Rng>(n: usize, p: i64, precision: u32, rng: &mut R) -> Self {
        let modulus = p.pow(precision);
        let mut alpha = vec![vec![0i64; n]; n];
        for (i, row) in alpha.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if i + j + 1 == n {
                    *x = loop {
                        let u = rng.gen_range(0..modulus);
                        if u % p != 0 {
                            break u;
                        }
                    };
                } else if i + j + 1 > n {
                    *x = rng.gen_range(0..modulus);
                }
            }
        }
        AntidiagonalRep { n, modulus, alpha }
    }

    /// Column `j` (0-based).
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.alpha.iter().map(|row| row[j]).collect()
    }

    pub fn antidiagonal_units(&self, p: i64) -> bool {
        (0..self.n).all(|i| self.alpha[i][self.n - 1 - i] % p != 0)
    }
}

/// `sum_{ι in I} r_ι (e(m,n) + sum_{j=ι+1}^n e(m,j))`.
pub fn congruence_index_formula(m: u32, n: u32, ty: &LatticeType) -> u32 {
    let e = e_count(m, n) as u32;
    ty.i.iter()
        .zip(&ty.r)
        .map(|(&iota, &r)| {
            let tail: u32 = (iota as u32 + 1..=n).map(|j| e_count(m, j) as u32).sum();
            r * (e + tail)
        })
        .sum()
}

/// `log_p` of the index of `{g : g C ≡ 0 mod p^r}`, where `C` concatenates
/// the column blocks `p^{sum_{ι >= j} r_ι} M(α^{(j)})` for `j = 1..n`.
pub fn congruence_index(m: u32, n: u32, ty: &LatticeType, alpha: &AntidiagonalRep, p: i64) -> u32 {
    let dims = lie_dims(m, n);
    let d = dims.d as usize;
    let n = n as usize;
    let r = ty.total();
    let forms = full_commutator_matrix(m, n as u32);
    let mut c = vec![Vec::with_capacity(d * n); d];
    for j in 1..=n {
        let shift: u32 = (j..n).map(|iota| ty.r_at(iota)).sum();
        let scale = p.pow(shift);
        let block = forms.specialize(&alpha.column(j - 1), None).expect("n entries");
        for (row, brow) in c.iter_mut().zip(block) {
            row.extend(brow.into_iter().map(|x| x * scale));
        }
    }
    let snf = snf_valuations(&c, p);
    snf.valuations.iter().map(|&v| r.saturating_sub(v)).sum()
}

/// Samples `α₀` at precision `r + 2` and compares the SNF-computed index
/// exponent with [`congruence_index_formula`].
pub fn congruence_index_check(m: u32, n: u32, ty: &LatticeType, p: i64, seed: u64) -> bool {
    assert!(n >= 2, "congruence check needs n >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alpha = AntidiagonalRep::sample(n as usize, p, ty.total() + 2, &mut rng);
    debug_assert!(alpha.antidiagonal_units(p));
    congruence_index(m, n, ty, &alpha, p) == congruence_index_formula(m, n, ty)
}

/// A random type on `[n-1]` with every `r_ι` in `1..=rmax`.
pub fn random_type<R: Rng>(n: usize, rmax: u32, rng: &mut R) -> LatticeType {
    let mut i = Vec::new();
    let mut r = Vec::new();
    for iota in 1..n {
        if rng.gen_bool(0.5) {
            i.push(iota);
            r.push(rng.gen_range(1..=rmax));
        }
    }
    LatticeType::new(i, r).expect("increasing by construction")
}

/// Runs `trials` checks with types and `α₀` drawn from one seeded stream.
pub fn congruence_trials(m: u32, n: u32, p: i64, rmax: u32, trials: usize, seed: u64) -> Vec<(LatticeType, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let ty = random_type(n as usize, rmax, &mut rng);
            let ok = congruence_index_check(m, n, &ty, p, rng.gen());
            (ty, ok)
        })
        .collect()
}

/// Samples a primitive `y mod p^N` and checks that `M_{m,n}(y)` has `2e`
/// unit elementary divisors and `f - e` divisors that vanish modulo `p^N`.
pub fn rep_matrix_check(m: u32, n: u32, p: i64, big_n: u32, seed: u64) -> bool {
    assert!(big_n >= 1);
    let dims = lie_dims(m, n);
    let modulus = p.pow(big_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y: Vec<i64> = loop {
        let y: Vec<i64> = (0..n).map(|_| rng.gen_range(0..modulus)).collect();
        if y.iter().any(|x| x % p != 0) {
            break y;
        }
    };
    let mat = full_commutator_matrix(m, n).specialize(&y, None).expect("n entries");
    let snf = snf_valuations(&mat, p);
    let zeros = snf.valuations.iter().filter(|&&v| v == 0).count();
    let high = snf.valuations.iter().filter(|&&v| v >= big_n).count() + snf.zero_divisors;
    zeros == 2 * dims.e as usize && high == (dims.f - dims.e) as usize
}
