//! The Lie rings `L_{m,n}` and their commutator matrices.
//!
//! The ordered basis is `(x_e)_{e in E}, (y_f)_{f in F}, z_1..z_n` with `E`
//! and `F` in reverse-lexicographic order, generated once by
//! [`compositions_revlex`]. The rectangular block `B_{m,n}(Y)` is built
//! twice: directly from the bracket relations and from the block-bidiagonal
//! recursion in `n`. The two must agree entrywise.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{compositions_revlex, e_count, f_count, lie_dims, Composition, LieDims};
use crate::error::{Error, Result};

/// Structure constants of `L_{m,n}`.
///
/// The only nonzero brackets are `[x_e, y_f] = z_k` where `f - e` is the
/// `k`-th standard basis vector.
#[derive(Clone, Debug)]
pub struct LieStructure {
    dims: LieDims,
    basis_x: Vec<Composition>,
    basis_y: Vec<Composition>,
    /// `(x index, y index) -> k` (1-based centre index).
    brackets: BTreeMap<(usize, usize), usize>,
}

impl LieStructure {
    pub fn dims(&self) -> LieDims {
        self.dims
    }

    pub fn basis_x(&self) -> &[Composition] {
        &self.basis_x
    }

    pub fn basis_y(&self) -> &[Composition] {
        &self.basis_y
    }

    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.brackets.iter().map(|(&(x, y), &k)| (x, y, k))
    }

    pub fn bracket_count(&self) -> usize {
        self.brackets.len()
    }

    /// Rank of the abelianization, `d(m,n)`.
    pub fn rank_abelian(&self) -> usize {
        self.dims.d as usize
    }

    /// Rank of the centre, `n`.
    pub fn rank_centre(&self) -> usize {
        self.dims.n as usize
    }

    /// Same ranks and basis, all brackets zero.
    pub fn abelianized(&self) -> LieStructure {
        LieStructure {
            brackets: BTreeMap::new(),
            ..self.clone()
        }
    }

    /// Brackets among the first `d` basis vectors as a dense table:
    /// `table[i][j][k]` is the coefficient of `z_{k+1}` in `[w_i, w_j]`.
    pub fn bracket_table(&self) -> Vec<Vec<Vec<i64>>> {
        let d = self.rank_abelian();
        let e = self.dims.e as usize;
        let n = self.rank_centre();
        let mut table = vec![vec![vec![0i64; n]; d]; d];
        for (x, y, k) in self.brackets() {
            table[x][e + y][k - 1] += 1;
            table[e + y][x][k - 1] -= 1;
        }
        table
    }
}

pub fn build_structure(m: u32, n: u32) -> LieStructure {
    let dims = lie_dims(m, n);
    let basis_x = compositions_revlex(m - 1, n as usize);
    let basis_y = compositions_revlex(m, n as usize);
    let mut brackets = BTreeMap::new();
    for (xi, e) in basis_x.iter().enumerate() {
        for (yi, f) in basis_y.iter().enumerate() {
            if let Some(k) = e.unit_step_to(f) {
                brackets.insert((xi, yi), k);
            }
        }
    }
    LieStructure {
        dims,
        basis_x,
        basis_y,
        brackets,
    }
}

/// A matrix of integer linear forms in `Y_1..Y_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormMatrix {
    rows: usize,
    cols: usize,
    vars: usize,
    entries: BTreeMap<(usize, usize), Vec<i64>>,
}

impl LinearFormMatrix {
    pub fn zeros(rows: usize, cols: usize, vars: usize) -> Self {
        LinearFormMatrix {
            rows,
            cols,
            vars,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Coefficient vector at `(i, j)`; `None` for a zero entry.
    pub fn get(&self, i: usize, j: usize) -> Option<&[i64]> {
        self.entries.get(&(i, j)).map(Vec::as_slice)
    }

    /// Adds `coeff * Y_{var+1}` to entry `(i, j)`.
    pub fn add_var(&mut self, i: usize, j: usize, var: usize, coeff: i64) {
        assert!(i < self.rows && j < self.cols && var < self.vars);
        let slot = self.entries.entry((i, j)).or_insert_with(|| vec![0; self.vars]);
        slot[var] += coeff;
        if slot.iter().all(|&c| c == 0) {
            self.entries.remove(&(i, j));
        }
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = ((usize, usize), &[i64])> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn transpose(&self) -> LinearFormMatrix {
        LinearFormMatrix {
            rows: self.cols,
            cols: self.rows,
            vars: self.vars,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`,
    /// scaled by `sign` and with variable `v` of `block` mapped to `v + var_shift`.
    fn place(&mut self, block: &LinearFormMatrix, r0: usize, c0: usize, var_shift: usize, sign: i64) {
        for (&(i, j), v) in &block.entries {
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    self.add_var(r0 + i, c0 + j, k + var_shift, sign * c);
                }
            }
        }
    }

    /// Evaluates `Y_k <- y_k`, optionally reducing into `[0, modulus)`.
    pub fn specialize(&self, y: &[i64], modulus: Option<i64>) -> Result<Vec<Vec<i64>>> {
        if y.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                got: y.len(),
            });
        }
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            let mut s: i64 = v.iter().zip(y).map(|(c, y)| c * y).sum();
            if let Some(p) = modulus {
                s = s.rem_euclid(p);
            }
            out[i][j] = s;
        }
        Ok(out)
    }
}

fn fmt_form(v: Option<&[i64]>) -> String {
    let Some(v) = v else {
        return "0".to_string();
    };
    let mut s = String::new();
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("Y{}", k + 1));
    }
    s
}

impl fmt::Display for LinearFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| fmt_form(self.get(i, j))).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
            .collect();
        for row in &cells {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                write!(f, " {:>w$}", c, w = widths[j])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// `B_{m,n}(Y)` read off the bracket relations: rows indexed by `F`,
/// columns by `E`, entry `Y_k` when `[x_e, y_f] = z_k`.
pub fn b_matrix_direct(s: &LieStructure) -> LinearFormMatrix {
    let mut b = LinearFormMatrix::zeros(s.basis_y.len(), s.basis_x.len(), s.rank_centre());
    for (x, y, k) in s.brackets() {
        b.add_var(y, x, k - 1, 1);
    }
    b
}

/// `B_{m,n}(Y)` from the recursion: `B_{m,1} = (Y_1)`, and for `n >= 2`
/// column block `j` holds `S_{e(j,n-1)}(Y_1)` on top of `B_{j,n-1}(Y_2..Y_n)`,
/// starting at row `sum_{r<j} e(r,n-1)`.
pub fn b_matrix_recursive(m: u32, n: u32) -> LinearFormMatrix {
    assert!(m >= 1 && n >= 1, "m and n must be positive");
    recursive_block(m, n)
}

fn recursive_block(m: u32, n: u32) -> LinearFormMatrix {
    let vars = n as usize;
    if n == 1 {
        let mut b = LinearFormMatrix::zeros(1, 1, 1);
        b.add_var(0, 0, 0, 1);
        return b;
    }
    let mut b = LinearFormMatrix::zeros(f_count(m, n) as usize, e_count(m, n) as usize, vars);
    let (mut row, mut col) = (0usize, 0usize);
    for j in 1..=m {
        let width = e_count(j, n - 1) as usize;
        for i in 0..width {
            b.add_var(row + i, col + i, 0, 1);
        }
        let lower = recursive_block(j, n - 1);
        b.place(&lower, row + width, col, 1, 1);
        row += width;
        col += width;
    }
    b
}

/// `M_{m,n}(Y)`: the `d x d` antisymmetric matrix with `-B^T` in the
/// upper-right block and `B` in the lower-left block.
pub fn full_commutator_matrix(m: u32, n: u32) -> LinearFormMatrix {
    let dims = lie_dims(m, n);
    let (e, d) = (dims.e as usize, dims.d as usize);
    let b = b_matrix_recursive(m, n);
    let mut out = LinearFormMatrix::zeros(d, d, n as usize);
    out.place(&b, e, 0, 0, 1);
    out.place(&b.transpose(), 0, e, 0, -1);
    out
}

/// Rank over `F_p` by Gaussian elimination on residues.
pub fn rank_mod_p(mat: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = mat
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_inverse(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let factor = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - factor * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse of a unit modulo the prime `p`.
pub(crate) fn mod_inverse(a: i64, p: i64) -> i64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible modulo {p}");
    t.rem_euclid(p)
}

/// Whether `B_{m,n}(y)` has rank `e(m,n)` over `F_p` for every nonzero
/// `y in F_p^n`.
pub fn full_rank_over_fp(m: u32, n: u32, p: i64) -> bool {
    let b = b_matrix_recursive(m, n);
    let e = e_count(m, n) as usize;
    let total = (p as u64).pow(n);
    (1..total).all(|mut code| {
        let y: Vec<i64> = (0..n)
            .map(|_| {
                let v = (code % p as u64) as i64;
                code /= p as u64;
                v
            })
            .collect();
        rank_mod_p(&b.specialize(&y, Some(p)).expect("n variables"), p) == e
    })
}
