//! Dense linear algebra over GF(2).
//!
//! # Representation
//!
//! [`BitVec`] packs coordinates into `u64` words, least significant bit
//! first. [`BitMatrix`] is a row-major list of equal-length rows and acts
//! on column vectors: `m.apply(v)` has length `m.rows()`.
//!
//! # Canonical bases
//!
//! Everything downstream renders reports that must be reproducible byte
//! for byte, so the elimination routines are deterministic: pivots are
//! chosen left to right, ties broken by lowest row index, and
//! [`BitMatrix::kernel_basis`] orders its output by ascending free
//! column. No randomized pivoting anywhere.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

// ===== Vectors =====

/// Packed GF(2) vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// Vector with ones exactly at `indices`.
    #[must_use]
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Parses from a slice of 0/1 entries.
    #[must_use]
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            assert!(b <= 1, "entry {i} is {b}, expected 0 or 1");
            v.set(i, b == 1);
        }
        v
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    #[must_use]
    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the coordinatewise product; the standard dot pairing.
    #[must_use]
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let mut acc = 0u32;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= (w & o).count_ones() & 1;
        }
        acc & 1 == 1
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index, if any.
    #[must_use]
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Ascending iterator over set indices.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Restriction to a sub-window `[start, start + len)`.
    #[must_use]
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len, "slice window out of range");
        let mut out = BitVec::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.set(i, true);
            }
        }
        out
    }

    /// Concatenation, `self` occupying the low indices.
    #[must_use]
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

// ===== Matrices =====

/// Row-major GF(2) matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl BitMatrix {
    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has inconsistent length");
        }
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds from rows of 0/1 entries; handy in tests and ingestion.
    #[must_use]
    pub fn from_bit_rows(rows: &[&[u8]]) -> Self {
        BitMatrix::from_rows(rows.iter().map(|r| BitVec::from_bits(r)).collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.data[i].set(j, true);
                }
            }
        }
        m
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}`.
    #[must_use]
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        BitMatrix::from_fn(n, n, |i, j| perm[j] == i)
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &BitVec {
        &self.data[i]
    }

    #[must_use]
    pub fn column(&self, j: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].get(j) {
                v.set(i, true);
            }
        }
        v
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    #[must_use]
    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        let mut out = self.clone();
        for (r, o) in out.data.iter_mut().zip(&other.data) {
            r.xor_assign(o);
        }
        out
    }

    /// Matrix product `self * other`.
    #[must_use]
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch in mul");
        let mut out = BitMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.data[i].ones() {
                out.data[i].xor_assign(&other.data[k]);
            }
        }
        out
    }

    /// Matrix-vector product; `v` is a column vector of length `cols`.
    #[must_use]
    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "vector length mismatch in apply");
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    #[must_use]
    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Side-by-side block `[self | other]`.
    #[must_use]
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch in hstack");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        BitMatrix::from_rows(data)
    }

    /// Stacked block `[self; other]`.
    #[must_use]
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        BitMatrix::from_rows(data)
    }

    /// Reduced row echelon form together with the pivot columns in order.
    #[must_use]
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pivot) = (next_row..m.rows).find(|&r| m.data[r].get(col)) else {
                continue;
            };
            m.data.swap(next_row, pivot);
            let prow = m.data[next_row].clone();
            for (r, row) in m.data.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.xor_assign(&prow);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis: one vector per free column, ascending, with
    /// a one at the free column and the matching rref column above the
    /// pivots. Returns the empty list for an injective matrix.
    #[must_use]
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for (free, &pivot) in is_pivot.iter().enumerate() {
            if pivot {
                continue;
            }
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (prow, &pcol) in pivots.iter().enumerate() {
                if r.data[prow].get(free) {
                    v.set(pcol, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = rhs` with free variables zero, or
    /// `None` when the system is inconsistent. The result is re-checked by
    /// substitution before returning.
    #[must_use]
    pub fn solve(&self, rhs: &BitVec) -> Option<BitVec> {
        assert_eq!(self.rows, rhs.len(), "rhs length mismatch in solve");
        let mut aug = BitMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.data[i] = self.data[i].concat(&BitVec::from_bits(&[u8::from(rhs.get(i))]));
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = BitVec::zeros(self.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            if r.data[prow].get(self.cols) {
                x.set(pcol, true);
            }
        }
        assert_eq!(&self.apply(&x), rhs, "substitution check failed in solve");
        Some(x)
    }

    /// Inverse of a square invertible matrix.
    #[must_use]
    pub fn inverse(&self) -> Option<BitMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let (r, pivots) = self.hstack(&BitMatrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = BitMatrix::zero(n, n);
        for i in 0..n {
            inv.data[i] = r.data[i].slice(n, n);
        }
        Some(inv)
    }

    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{}:\n{}", self.rows, self.cols, self)
    }
}

// ===== Tests =====
