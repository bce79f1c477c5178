//! `p`-adic valuations of elementary divisors.
//!
//! Elimination runs over `Z_(p)`: every integer prime to `p` is a unit, so
//! rows and columns may be scaled by such integers and common unit content
//! may be divided out. Only valuations are reported.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfValuations {
    /// Valuations of the nonzero elementary divisors, ascending.
    pub valuations: Vec<u32>,
    /// `min(rows, cols)` minus the rank.
    pub zero_divisors: usize,
}

fn valuation(x: &BigInt, p: &BigInt) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let mut x = x.abs();
    let mut k = 0;
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return Some(k);
        }
        x = q;
        k += 1;
    }
}

/// Strips the prime-to-`p` part of the content of a row.
fn strip_unit_content(row: &mut [BigInt], p: &BigInt) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return;
    }
    while (&g % p).is_zero() {
        g /= p;
    }
    if !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

pub fn snf_valuations(mat: &[Vec<i64>], p: i64) -> SnfValuations {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let big_p = BigInt::from(p);
    let mut a: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut row_alive: Vec<usize> = (0..rows).collect();
    let mut col_alive: Vec<usize> = (0..cols).collect();
    let mut valuations = Vec::new();

    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for (ri, &r) in row_alive.iter().enumerate() {
            for (ci, &c) in col_alive.iter().enumerate() {
                if let Some(v) = valuation(&a[r][c], &big_p) {
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, ri, ci));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((k, ri, ci)) = best else { break };
        let (pr, pc) = (row_alive.swap_remove(ri), col_alive.swap_remove(ci));
        let pk = big_p.pow(k);
        let unit = &a[pr][pc] / &pk;

        // Clear the pivot column: row_r <- u row_r - (b / p^k) row_pr.
        for &r in &row_alive {
            if a[r][pc].is_zero() {
                continue;
            }
            let factor = &a[r][pc] / &pk;
            for &c in col_alive.iter().chain([pc].iter()) {
                let v = &unit * &a[r][c] - &factor * &a[pr][c];
                a[r][c] = v;
            }
            debug_assert!(a[r][pc].is_zero());
            let mut live: Vec<BigInt> = col_alive.iter().map(|&c| a[r][c].clone()).collect();
            strip_unit_content(&mut live, &big_p);
            for (&c, x) in col_alive.iter().zip(live) {
                a[r][c] = x;
            }
        }
        // Clearing the rest of the pivot row by column operations only
        // rescales remaining columns by the unit, so the row is dropped.
        valuations.push(k);
    }
    valuations.sort_unstable();
    SnfValuations {
        zero_divisors: rows.min(cols) - valuations.len(),
        valuations,
    }
}
