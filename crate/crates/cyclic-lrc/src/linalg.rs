//! Dense linear algebra over a finite field context.
//!
//! Matrices store element codes row-major and remember their field id. On top
//! of the usual kernel (rref, rank, null space, inverse, solve) this module
//! provides the two minimum-distance engines used everywhere else:
//!
//! * `min_weight_scan`: walks every nonzero codeword of a generator matrix in
//!   reflected Gray-code order, so consecutive messages differ in one digit
//!   and each codeword costs one row-addition instead of a full k x n
//!   multiply. Chunks split by the top message digit run in parallel.
//! * `min_weight_by_supports`: finds the smallest linearly dependent set of
//!   parity-check columns. Exact and independent of the codeword count, so it
//!   stays cheap when the code has too many words to enumerate but has few
//!   checks, which is exactly the shape of a repair group.

use rayon::prelude::*;

use crate::field::{FieldCtx, FieldId};
use crate::{Error, Result};

/// Outcome of `solve`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Solve {
    Unique(Vec<u32>),
    /// Consistent but with free variables.
    Underdetermined,
    Inconsistent,
}

/// Result of a full codeword scan.
#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub min_weight: usize,
    /// counts[w] = number of codewords of weight w (including the zero word).
    pub distribution: Option<Vec<u64>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: FieldId,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: ctx.id(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(ctx: &FieldCtx, rows: &[Vec<u64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                data.push(ctx.elem(v).code());
            }
        }
        Matrix {
            field: ctx.id(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub(crate) fn from_code_rows(field: FieldId, cols: usize, rows: Vec<Vec<u32>>) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in &rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix {
            field,
            rows: r,
            cols,
            data,
        }
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn expect_ctx(&self, ctx: &FieldCtx) {
        assert_eq!(
            self.field,
            ctx.id(),
            "matrix over {} used with context {}",
            self.field,
            ctx.id()
        );
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![0u32; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c));
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row vector times matrix: x (len rows) -> x * M (len cols).
    pub fn vec_mul(&self, ctx: &FieldCtx, x: &[u32]) -> Vec<u32> {
        self.expect_ctx(ctx);
        assert_eq!(x.len(), self.rows, "vector length mismatch");
        let mut out = vec![0u32; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0 {
                continue;
            }
            let row = self.row(r);
            for (o, &m) in out.iter_mut().zip(row) {
                *o = ctx.addc(*o, ctx.mulc(xr, m));
            }
        }
        out
    }

    /// Matrix times column vector: M * v (len cols) -> len rows.
    pub fn mat_vec(&self, ctx: &FieldCtx, v: &[u32]) -> Vec<u32> {
        self.expect_ctx(ctx);
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = 0u32;
                for (&m, &vi) in row.iter().zip(v) {
                    if m != 0 && vi != 0 {
                        acc = ctx.addc(acc, ctx.mulc(m, vi));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mat_mul(&self, ctx: &FieldCtx, other: &Matrix) -> Matrix {
        self.expect_ctx(ctx);
        other.expect_ctx(ctx);
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(ctx, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = ctx.addc(out.get(r, c), ctx.mulc(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Reduced row echelon form; returns the pivot column indices in order.
    pub fn rref(&self, ctx: &FieldCtx) -> (Matrix, Vec<usize>) {
        self.expect_ctx(ctx);
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let tmp = m.get(row, c);
                    m.set(row, c, m.get(p, c));
                    m.set(p, c, tmp);
                }
            }
            let inv = ctx.invc(m.get(row, col));
            for c in 0..m.cols {
                m.set(row, c, ctx.mulc(m.get(row, c), inv));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let f = m.get(r, col);
                    for c in 0..m.cols {
                        let v = ctx.subc(m.get(r, c), ctx.mulc(f, m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        self.rref(ctx).1.len()
    }

    /// Basis of the right null space {v : M v = 0}, returned as the rows of
    /// an (cols - rank) x cols matrix. Deterministic: free variables in
    /// increasing column order, each set to 1 in its own basis vector.
    pub fn null_space(&self, ctx: &FieldCtx) -> Matrix {
        let (r, pivots) = self.rref(ctx);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u32; self.cols];
            v[fc] = 1;
            for (prow, &pc) in pivots.iter().enumerate() {
                // pivot variable = -(coefficient of the free column)
                v[pc] = ctx.negc(r.get(prow, fc));
            }
            rows.push(v);
        }
        Matrix::from_code_rows(self.field, self.cols, rows)
    }

    /// Inverse of a square matrix; None if singular.
    pub fn invert(&self, ctx: &FieldCtx) -> Option<Matrix> {
        self.expect_ctx(ctx);
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let aug = self.augment_identity(ctx);
        let (r, pivots) = aug.rref(ctx);
        if pivots.len() < self.rows || pivots.iter().any(|&p| p >= self.rows) {
            return None;
        }
        let cols: Vec<usize> = (self.rows..2 * self.rows).collect();
        Some(r.select_columns(&cols))
    }

    fn augment_identity(&self, ctx: &FieldCtx) -> Matrix {
        let mut out = Matrix::zeros(ctx, self.rows, 2 * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            out.set(r, self.cols + r, 1);
        }
        out
    }

    /// Solve M x = b. Inconsistency wins over underdetermination.
    pub fn solve(&self, ctx: &FieldCtx, b: &[u32]) -> Solve {
        self.expect_ctx(ctx);
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Matrix::zeros(ctx, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let (r, pivots) = aug.rref(ctx);
        if pivots.contains(&self.cols) {
            return Solve::Inconsistent;
        }
        if pivots.len() < self.cols {
            return Solve::Underdetermined;
        }
        let mut x = vec![0u32; self.cols];
        for (prow, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(prow, self.cols);
        }
        Solve::Unique(x)
    }
}

pub fn weight(word: &[u32]) -> usize {
    word.iter().filter(|&&c| c != 0).count()
}

/// Sum of C(len, w) for w = 1..=wmax, the column-subset count the support
/// method enumerates; saturates instead of overflowing.
pub(crate) fn subset_work(len: usize, wmax: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for w in 1..=wmax.min(len) {
        binom = binom.saturating_mul((len - w + 1) as u128) / w as u128;
        total = total.saturating_add(binom);
        if total > u128::MAX / 2 {
            break;
        }
    }
    total
}

/// q^e <= cap, computed without overflowing.
pub(crate) fn pow_fits(q: u64, e: usize, cap: u64) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc *= q as u128;
        if acc > cap as u128 {
            return false;
        }
    }
    true
}

/// All q^k codewords of the row space, message digits in lexicographic order
/// (digit j scales row j). Recomputes each word; meant for small spaces.
pub fn codewords<'a>(
    ctx: &'a FieldCtx,
    gen: &'a Matrix,
) -> impl Iterator<Item = Vec<u32>> + 'a {
    let k = gen.rows();
    let q = ctx.q();
    let total = (0..k).fold(1u64, |acc, _| acc * q);
    (0..total).map(move |m| {
        let mut digits = vec![0u32; k];
        let mut t = m;
        for d in digits.iter_mut() {
            *d = (t % q) as u32;
            t /= q;
        }
        gen.vec_mul(ctx, &digits)
    })
}

/// Minimum nonzero weight of the row space of `gen`, by Gray-code enumeration
/// of one message per scalar class. Scaling a message scales the codeword, so
/// weight is class-invariant and only messages whose lowest nonzero digit is 1
/// need visiting: (q^k - 1) / (q - 1) words instead of q^k. The reported
/// distribution still counts all q^k messages. Errors if the codeword count
/// q^k exceeds `cap`.
pub fn min_weight_scan(
    ctx: &FieldCtx,
    gen: &Matrix,
    cap: u64,
    want_distribution: bool,
) -> Result<ScanOutcome> {
    gen.expect_ctx(ctx);
    let k = gen.rows();
    let n = gen.cols();
    assert!(k >= 1, "scan needs at least one generator row");
    let q = ctx.q();
    let total: u128 = (0..k).fold(1u128, |acc, _| acc * q as u128);
    if total > cap as u128 {
        return Err(Error::SearchSpaceTooLarge {
            size: total,
            cap: cap as u128,
        });
    }

    // Per-row transition tables: step_up[j][v] = (elem(v+1) - elem(v)) * row_j,
    // step_dn[j][v] = the negation. One row-addition per visited codeword.
    let build_tables = |j: usize| -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
        let row = gen.row(j);
        let mut up = Vec::with_capacity((q - 1) as usize);
        let mut dn = Vec::with_capacity((q - 1) as usize);
        for v in 0..(q - 1) as u32 {
            let s = ctx.subc(v + 1, v);
            let su: Vec<u32> = row.iter().map(|&m| ctx.mulc(s, m)).collect();
            let sd: Vec<u32> = su.iter().map(|&m| ctx.negc(m)).collect();
            up.push(su);
            dn.push(sd);
        }
        (up, dn)
    };
    let tables: Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)> = (0..k).map(build_tables).collect();

    // One job per (class leader digit, value of the top free digit): digits
    // below `lead` are zero, digit `lead` is one, and fixing digit k-1 at `t`
    // splits each walk into q independent chunks for the reduction.
    let mut jobs: Vec<(usize, u32)> = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            jobs.extend((0..q as u32).map(|t| (lead, t)));
        } else {
            jobs.push((lead, 0));
        }
    }

    let qm1 = (q - 1) as u64;
    let run = |&(lead, t): &(usize, u32)| -> (usize, Option<Vec<u64>>) {
        let mut start = gen.row(lead).to_vec();
        let dims = if lead + 1 < k { k - lead - 2 } else { 0 };
        if t > 0 {
            for (c, &m) in start.iter_mut().zip(gen.row(k - 1)) {
                *c = ctx.addc(*c, ctx.mulc(t, m));
            }
        }
        let mut min_w = usize::MAX;
        let mut dist = want_distribution.then(|| vec![0u64; n + 1]);
        gray_walk(ctx, &start, dims, q, &tables[lead + 1..], |w| {
            if w > 0 && w < min_w {
                min_w = w;
            }
            if let Some(d) = dist.as_mut() {
                d[w] += qm1;
            }
        });
        (min_w, dist)
    };

    let merge = |a: (usize, Option<Vec<u64>>), b: (usize, Option<Vec<u64>>)| {
        let min_w = a.0.min(b.0);
        let dist = match (a.1, b.1) {
            (Some(mut x), Some(y)) => {
                for (xi, yi) in x.iter_mut().zip(y) {
                    *xi += yi;
                }
                Some(x)
            }
            _ => None,
        };
        (min_w, dist)
    };

    let empty = || (usize::MAX, want_distribution.then(|| vec![0u64; n + 1]));
    let parallel = total >= 1 << 14 && jobs.len() > 1;
    let (min_weight, mut distribution) = if parallel {
        jobs.par_iter().map(run).reduce(empty, merge)
    } else {
        jobs.iter().map(run).fold(empty(), merge)
    };

    if let Some(d) = distribution.as_mut() {
        d[0] += 1; // the zero message is the one class with no leader digit
    }
    assert_ne!(min_weight, usize::MAX, "nonzero codeword must exist");
    Ok(ScanOutcome {
        min_weight,
        distribution,
    })
}

/// Walk the reflected mixed-radix Gray code over the first `dims` digits of
/// the message, starting from `start`. Calls `visit` with the weight of every
/// visited word, including `start` itself.
fn gray_walk<F: FnMut(usize)>(
    ctx: &FieldCtx,
    start: &[u32],
    dims: usize,
    q: u64,
    tables: &[(Vec<Vec<u32>>, Vec<Vec<u32>>)],
    mut visit: F,
) {
    let mut word = start.to_vec();
    let mut w = weight(&word);
    visit(w);
    if dims == 0 {
        return;
    }
    let qm1 = (q - 1) as u32;
    let mut a = vec![0u32; dims];
    let mut o = vec![1i8; dims];
    let mut f: Vec<usize> = (0..=dims).collect();
    loop {
        let j = f[0];
        f[0] = 0;
        if j == dims {
            break;
        }
        let old = a[j];
        let dir = o[j];
        let new = if dir == 1 { old + 1 } else { old - 1 };
        a[j] = new;
        let delta = if dir == 1 {
            &tables[j].0[old as usize]
        } else {
            &tables[j].1[new as usize]
        };
        for (cell, &d) in word.iter_mut().zip(delta) {
            if d != 0 {
                let nv = ctx.addc(*cell, d);
                if *cell != 0 {
                    w -= 1;
                }
                if nv != 0 {
                    w += 1;
                }
                *cell = nv;
            }
        }
        if a[j] == 0 || a[j] == qm1 {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        visit(w);
    }
}

/// Advance to the next w-combination of {0..n} in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let w = idx.len();
    let mut i = w;
    while i > 0 {
        i -= 1;
        if idx[i] < n - w + i {
            idx[i] += 1;
            for j in i + 1..w {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum distance of {x : H x = 0} as the size of the smallest linearly
/// dependent set of columns of H. Returns cols + 1 when the kernel is trivial
/// (no nonzero codeword). Cost grows with the number of checks, not the
/// number of codewords.
pub fn min_weight_by_supports(ctx: &FieldCtx, h: &Matrix) -> usize {
    let n = h.cols();
    let r = h.rank(ctx);
    if r == 0 {
        return 1;
    }
    if r == n {
        return n + 1;
    }
    for w in 1..=r + 1 {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            if h.select_columns(&idx).rank(ctx) < w {
                return w;
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    r + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn rref_rank_and_pivots() {
        let f = FieldCtx::new(7, 1).unwrap();
        let m = Matrix::from_rows(
            &f,
            &[vec![1, 2, 3, 4], vec![2, 4, 6, 2], vec![0, 0, 1, 1]],
        );
        let (r, pivots) = m.rref(&f);
        assert_eq!(pivots, vec![0, 2, 3]);
        assert_eq!(m.rank(&f), 3);
        // pivot columns are unit vectors
        for (row, &pc) in pivots.iter().enumerate() {
            for rr in 0..r.rows() {
                assert_eq!(r.get(rr, pc), u32::from(rr == row));
            }
        }
    }

    #[test]
    fn null_space_is_orthogonal_and_full() {
        let f = FieldCtx::new(2, 3).unwrap();
        let m = Matrix::from_rows(&f, &[vec![1, 0, 2, 5, 1], vec![0, 1, 3, 3, 0]]);
        let ns = m.null_space(&f);
        assert_eq!(ns.rows(), 3);
        for r in 0..ns.rows() {
            let v = ns.row(r).to_vec();
            assert!(m.mat_vec(&f, &v).iter().all(|&c| c == 0));
        }
        assert_eq!(ns.rank(&f), 3);
        // stacking recovers the whole space
        let full = m.vstack(&ns);
        assert_eq!(full.rank(&f), 5);
    }

    #[test]
    fn invert_round_trip() {
        let f = FieldCtx::new(13, 1).unwrap();
        let m = Matrix::from_rows(&f, &[vec![2, 3, 0], vec![1, 1, 4], vec![0, 5, 6]]);
        let inv = m.invert(&f).unwrap();
        assert_eq!(m.mat_mul(&f, &inv), Matrix::identity(&f, 3));
        assert_eq!(inv.mat_mul(&f, &m), Matrix::identity(&f, 3));
        let singular = Matrix::from_rows(&f, &[vec![1, 2], vec![2, 4]]);
        assert!(singular.invert(&f).is_none());
    }

    #[test]
    fn solve_all_three_outcomes() {
        let f = FieldCtx::new(5, 1).unwrap();
        let m = Matrix::from_rows(&f, &[vec![1, 1], vec![1, 2], vec![2, 3]]);
        // unique: x = (1, 3) gives b = (4, 2, 1) mod 5
        match m.solve(&f, &[4, 2, 1]) {
            Solve::Unique(x) => assert_eq!(x, vec![1, 3]),
            other => panic!("expected unique, got {other:?}"),
        }
        assert_eq!(m.solve(&f, &[4, 2, 2]), Solve::Inconsistent);
        let wide = Matrix::from_rows(&f, &[vec![1, 1, 1]]);
        assert_eq!(wide.solve(&f, &[3]), Solve::Underdetermined);
        // inconsistency wins over underdetermination
        let both = Matrix::from_rows(&f, &[vec![1, 1, 1], vec![2, 2, 2]]);
        assert_eq!(both.solve(&f, &[1, 3]), Solve::Inconsistent);
    }

    #[test]
    fn vec_mul_and_mat_vec_agree_with_mat_mul() {
        let f = FieldCtx::new(3, 2).unwrap();
        let m = Matrix::from_rows(&f, &[vec![1, 2, 3], vec![4, 5, 6]]);
        let x = vec![7u32, 8];
        let as_mat = Matrix::from_code_rows(f.id(), 2, vec![x.clone()]);
        assert_eq!(m.vec_mul(&f, &x), as_mat.mat_mul(&f, &m).row(0).to_vec());
        let v = vec![1u32, 0, 8];
        let vt = m.transpose();
        assert_eq!(m.mat_vec(&f, &v), vt.vec_mul(&f, &v));
    }

    fn naive_min_weight(ctx: &FieldCtx, gen: &Matrix) -> (usize, Vec<u64>) {
        let n = gen.cols();
        let mut min_w = usize::MAX;
        let mut dist = vec![0u64; n + 1];
        for word in codewords(ctx, gen) {
            let w = weight(&word);
            dist[w] += 1;
            if w > 0 && w < min_w {
                min_w = w;
            }
        }
        (min_w, dist)
    }

    #[test]
    fn scan_matches_naive_enumeration() {
        let cases: &[(u64, u32, Vec<Vec<u64>>)] = &[
            (7, 1, vec![vec![1, 0, 2, 3, 5], vec![0, 1, 6, 1, 4]]),
            (
                3,
                1,
                vec![
                    vec![1, 0, 0, 1, 2, 1],
                    vec![0, 1, 0, 2, 2, 0],
                    vec![0, 0, 1, 1, 1, 2],
                ],
            ),
            (2, 3, vec![vec![1, 3, 5, 7, 2, 4], vec![6, 1, 0, 2, 3, 1]]),
            (13, 1, vec![vec![1, 12, 3, 0], vec![5, 1, 1, 7]]),
        ];
        for (p, m, rows) in cases {
            let f = FieldCtx::new(*p, *m).unwrap();
            let gen = Matrix::from_rows(&f, rows);
            let (naive_w, naive_dist) = naive_min_weight(&f, &gen);
            let out = min_weight_scan(&f, &gen, 10_000_000, true).unwrap();
            assert_eq!(out.min_weight, naive_w);
            assert_eq!(out.distribution.unwrap(), naive_dist);
        }
    }

    #[test]
    fn scan_parallel_path_matches_naive() {
        // 5^7 = 78125 >= 2^14 forces the parallel path
        let f = FieldCtx::new(5, 1).unwrap();
        // identity block guarantees rank 7; tail columns are arbitrary
        let rows: Vec<Vec<u64>> = (0..7u64)
            .map(|j| {
                let mut row: Vec<u64> = (0..7).map(|c| u64::from(c == j)).collect();
                row.extend((0..4u64).map(|c| (3 * j * c + j + c + 1) % 5));
                row
            })
            .collect();
        let gen = Matrix::from_rows(&f, &rows);
        assert_eq!(gen.rank(&f), 7);
        let (naive_w, naive_dist) = naive_min_weight(&f, &gen);
        let out = min_weight_scan(&f, &gen, 10_000_000, true).unwrap();
        assert_eq!(out.min_weight, naive_w);
        let dist = out.distribution.unwrap();
        assert_eq!(dist, naive_dist);
        assert_eq!(dist.iter().sum::<u64>(), 78125);
        assert_eq!(dist[0], 1);
    }

    #[test]
    fn scan_rejects_oversized_spaces() {
        let f = FieldCtx::new(13, 1).unwrap();
        let gen = Matrix::identity(&f, 8);
        let err = min_weight_scan(&f, &gen, 10_000_000, false).unwrap_err();
        assert!(matches!(
            err,
            Error::SearchSpaceTooLarge { size, cap }
                if size == 13u128.pow(8) && cap == 10_000_000
        ));
    }

    #[test]
    fn supports_method_matches_scan() {
        let f = FieldCtx::new(2, 3).unwrap();
        let gen = Matrix::from_rows(&f, &[vec![1, 0, 0, 1, 4, 2], vec![0, 1, 0, 3, 1, 1], vec![0, 0, 1, 1, 1, 5]]);
        let h = gen.null_space(&f);
        let d_scan = min_weight_scan(&f, &gen, 10_000_000, false)
            .unwrap()
            .min_weight;
        // codewords of the row space of gen are the kernel of h
        let d_sup = min_weight_by_supports(&f, &h);
        assert_eq!(d_scan, d_sup);
    }

    #[test]
    fn supports_method_edge_cases() {
        let f = FieldCtx::new(7, 1).unwrap();
        // rank 0 check matrix: whole space, distance 1
        let z = Matrix::zeros(&f, 2, 5);
        assert_eq!(min_weight_by_supports(&f, &z), 1);
        // full-rank square check matrix: only the zero word, convention n + 1
        let id = Matrix::identity(&f, 4);
        assert_eq!(min_weight_by_supports(&f, &id), 5);
        // single parity check over all coordinates: distance 2
        let one = Matrix::from_rows(&f, &[vec![1, 1, 1, 1]]);
        assert_eq!(min_weight_by_supports(&f, &one), 2);
        // repetition-code checks: distance n
        let rep = Matrix::from_rows(&f, &[vec![1, 6, 0], vec![0, 1, 6]]);
        assert_eq!(min_weight_by_supports(&f, &rep), 3);
    }

    #[test]
    fn codeword_iterator_counts_and_order() {
        let f = FieldCtx::new(3, 1).unwrap();
        let gen = Matrix::from_rows(&f, &[vec![1, 0, 1], vec![0, 1, 2]]);
        let words: Vec<Vec<u32>> = codewords(&f, &gen).collect();
        assert_eq!(words.len(), 9);
        assert_eq!(words[0], vec![0, 0, 0]);
        assert_eq!(words[1], vec![1, 0, 1]); // message (1,0)
        assert_eq!(words[3], vec![0, 1, 2]); // message (0,1)
        // all distinct
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
    }
}
