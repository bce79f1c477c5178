//! Permutation statistics, Gaussian binomials and multinomials, and the
//! reverse-lexicographically ordered composition sets `E(m,n)`, `F(m,n)`.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Exp, LaurentPoly};

/// A permutation of `[n]` in one-line notation (values `1..=n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!(
                    "{one_line:?} is not a permutation of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> u32 {
        let w = &self.0;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[j] < w[i] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `{ i in [n-1] : w(i+1) < w(i) }`.
    pub fn descents(&self) -> Descents {
        let mut bits = 0u64;
        for (i, pair) in self.0.windows(2).enumerate() {
            if pair[1] < pair[0] {
                bits |= 1 << (i + 1);
            }
        }
        Descents(bits)
    }
}

/// A subset of `[n-1]` stored as a bitset (bit `i` for position `i`).
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Descents(u64);

impl Descents {
    pub fn from_positions(positions: &[usize]) -> Self {
        Descents(positions.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Positions in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..64).filter(|&i| self.contains(i))
    }
}

#[derive(Clone, Debug)]
pub struct PermStats {
    pub perm: Permutation,
    pub length: u32,
    pub descents: Descents,
}

/// All `n!` permutations of `[n]` in lexicographic order with their
/// length and descent set.
pub fn permutations_with_stats(n: usize) -> impl Iterator<Item = PermStats> {
    assert!((1..64).contains(&n), "n must lie in 1..64");
    (1..=n).permutations(n).map(|w| {
        let perm = Permutation(w);
        PermStats {
            length: perm.length(),
            descents: perm.descents(),
            perm,
        }
    })
}

/// Dense integer polynomial in one variable `Y`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `1 - Y^k`.
    pub fn one_minus_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] -= 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder of division by a polynomial with unit
    /// leading coefficient.
    pub fn div_rem(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let lead = divisor.0.last().expect("division by zero polynomial");
        assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
        let dd = divisor.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (IntPoly::default(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.0.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn eval(&self, y: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
    }

    /// Substitutes `Y = q^a t^b` and returns the resulting Laurent polynomial.
    pub fn substitute(&self, y: Exp) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.0.iter().enumerate() {
            let k = k as i64;
            out.add_term(Exp::new(y.q * k, y.t * k), c.clone());
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if k == 1 {
                        write!(f, "Y")?;
                    } else {
                        write!(f, "Y^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `prod_{i=a-b+1}^{a} (1 - Y^i) / prod_{i=1}^{b} (1 - Y^i)`, checked to
/// divide exactly.
pub fn gaussian_binomial(a: u32, b: u32) -> Result<IntPoly> {
    if a < b {
        return Err(Error::GaussianArgs { a, b });
    }
    let num = (a - b + 1..=a).fold(IntPoly::one(), |acc, i| acc.mul(&IntPoly::one_minus_power(i as usize)));
    let den = (1..=b).fold(IntPoly::one(), |acc, i| acc.mul(&IntPoly::one_minus_power(i as usize)));
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "gaussian binomial ({a} choose {b}) left a remainder");
    Ok(q)
}

/// `binom(n; I)_Y = binom(n, i_l) binom(i_l, i_{l-1}) ... binom(i_2, i_1)`
/// for `I = {i_1 < ... < i_l}` a subset of `[n]`.
pub fn gaussian_multinomial(n: u32, subset: &[u32]) -> Result<IntPoly> {
    let mut chain: Vec<u32> = subset.to_vec();
    chain.sort_unstable();
    chain.dedup();
    if chain.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::InvalidArgument(format!("{subset:?} is not a subset of [{n}]")));
    }
    let mut acc = IntPoly::one();
    let mut top = n;
    for &i in chain.iter().rev() {
        acc = acc.mul(&gaussian_binomial(top, i)?);
        top = i;
    }
    Ok(acc)
}

/// A vector in `N_0^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Some(i)` (1-based) if `other - self` is the `i`-th standard basis
    /// vector.
    pub fn unit_step_to(&self, other: &Composition) -> Option<usize> {
        if self.0.len() != other.0.len() {
            return None;
        }
        let mut hit = None;
        for (i, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            match *b as i64 - *a as i64 {
                0 => {}
                1 if hit.is_none() => hit = Some(i + 1),
                _ => return None,
            }
        }
        hit
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All vectors of `N_0^n` with the given sum, largest-lex first.
pub fn compositions_revlex(total: u32, n: usize) -> Vec<Composition> {
    fn go(total: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            prefix.push(total);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    go(total, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `C(a, b)` as a `u64`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        0
    } else {
        num_integer::binomial(a, b)
    }
}

/// `e(m,n) = #E(m,n) = C(n+m-2, n-1)`; zero when `m = 0` or `n = 0`.
pub fn e_count(m: u32, n: u32) -> u64 {
    if m == 0 || n == 0 {
        return 0;
    }
    binomial((n + m - 2) as u64, (n - 1) as u64)
}

/// `f(m,n) = #F(m,n) = C(n+m-1, n-1)`.
pub fn f_count(m: u32, n: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    binomial((n + m - 1) as u64, (n - 1) as u64)
}

/// Ranks of the pieces of `L_{m,n}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieDims {
    pub m: u32,
    pub n: u32,
    pub e: u64,
    pub f: u64,
    pub d: u64,
    pub h: u64,
}

pub fn lie_dims(m: u32, n: u32) -> LieDims {
    assert!(m >= 1 && n >= 1, "m and n must be positive");
    let e = e_count(m, n);
    let f = f_count(m, n);
    assert!(aux_identities_hold(m, n), "binomial identities fail at ({m},{n})");
    LieDims {
        m,
        n,
        e,
        f,
        d: e + f,
        h: e + f + n as u64,
    }
}

/// The three binomial identities that make the recursive commutator
/// matrix have the right shape (vacuous for `n = 1`).
pub fn aux_identities_hold(m: u32, n: u32) -> bool {
    if n < 2 {
        return true;
    }
    let first = (1..=m).map(|j| e_count(j, n - 1)).sum::<u64>() == e_count(m, n);
    let second = e_count(m, n) + f_count(m, n - 1) == f_count(m, n);
    let third = (1..=n).map(|j| e_count(m, j)).sum::<u64>() == f_count(m, n);
    first && second && third
}
