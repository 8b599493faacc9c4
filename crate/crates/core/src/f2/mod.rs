//! Dense linear algebra over GF(2).
//!
//! [`BitVec`] is a bit-packed vector and [`BitMatrix`] a row-major matrix of
//! such vectors. Elimination always runs on a copy and searches pivots column
//! by column in order, so echelon forms are reproducible bit for bit.

mod io;

pub(crate) use io::parse_header;
pub use io::{parse_alist, parse_dense, write_alist, write_dense};

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut v = BitVec::zeros(0);
        for b in bits {
            v.push(b);
        }
        v
    }

    /// Builds a vector of length `len` with ones at `positions`.
    pub fn from_ones(len: usize, positions: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &p in positions {
            v.set(p, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn push(&mut self, value: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, value);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place XOR. Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len);
        BitVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len);
        BitVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Binary inner product `self · other` mod 2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + t)
                }
            })
        })
    }

    /// Copy of bits `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        assert!(start + len <= self.len);
        let mut out = BitVec::zeros(len);
        for i in self.iter_ones().filter(|&i| i >= start && i < start + len) {
            out.set(i - start, true);
        }
        out
    }

    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Cyclic right shift by `k` positions.
    pub fn rotate_right(&self, k: usize) -> BitVec {
        let mut out = BitVec::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        for i in self.iter_ones() {
            out.set((i + k) % self.len, true);
        }
        out
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense matrix over GF(2), one [`BitVec`] per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(BitMatrix { cols, rows })
    }

    /// Builds a matrix from 0/1 integers. Convenient in tests.
    pub fn from_u8_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                BitVec::from_bools(r.iter().map(|&b| b != 0))
            })
            .collect();
        BitMatrix { cols, rows }
    }

    /// `r × r` circulant whose first row is `first_row`; row `i` is that row
    /// cyclically shifted right by `i`.
    pub fn circulant(first_row: &BitVec) -> Self {
        let r = first_row.len();
        let rows = (0..r).map(|i| first_row.rotate_right(i)).collect();
        BitMatrix { cols: r, rows }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// Matrix made of the first `n` rows.
    pub fn take_rows(&self, n: usize) -> BitMatrix {
        BitMatrix {
            cols: self.cols,
            rows: self.rows[..n.min(self.rows.len())].to_vec(),
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// `(self · other) mod 2`.
    pub fn mat_mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.num_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.num_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(other.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            cols: other.cols,
            rows,
        })
    }

    /// `self · vᵀ`, one bit per row.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(BitVec::from_bools(self.rows.iter().map(|r| r.dot(v))))
    }

    /// `self · selfᵀ`.
    pub fn gram(&self) -> BitMatrix {
        let n = self.rows.len();
        let mut g = BitMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let b = self.rows[i].dot(&self.rows[j]);
                g.set(i, j, b);
                g.set(j, i, b);
            }
        }
        g
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols || self.rows.len() != other.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len() * self.cols,
                found: other.rows.len() * other.cols,
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.xor(b))
            .collect();
        Ok(BitMatrix {
            cols: self.cols,
            rows,
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            cols: self.cols,
            rows,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows.len() != other.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len(),
                found: other.rows.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(BitMatrix {
            cols: self.cols + other.cols,
            rows,
        })
    }

    pub fn echelon(&self) -> RowEchelon {
        RowEchelon::new(self.cols, self.rows.iter().cloned())
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Whether `v` lies in the row space.
    pub fn in_rowspace(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.echelon().contains(v))
    }

    /// Basis of `{v : self · vᵀ = 0}`, one vector per free column of the
    /// reduced echelon form.
    pub fn nullspace(&self) -> BitMatrix {
        let ech = self.echelon();
        let pivots = ech.pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in ech.rows().iter().zip(pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        BitMatrix {
            cols: self.cols,
            rows: basis,
        }
    }

    /// Rows that are linearly independent of all earlier rows, in order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut ech = RowEchelon::empty(self.cols);
        (0..self.rows.len())
            .filter(|&i| ech.insert(self.rows[i].clone()))
            .collect()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(BitVec::count_ones).collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for row in &self.rows {
            for c in row.iter_ones() {
                w[c] += 1;
            }
        }
        w
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a set of vectors, kept incrementally.
///
/// Rows are fully reduced: every pivot column is zero in every other row.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn empty(cols: usize) -> Self {
        RowEchelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn new<I: IntoIterator<Item = BitVec>>(cols: usize, rows: I) -> Self {
        let mut ech = RowEchelon::empty(cols);
        for r in rows {
            ech.insert(r);
        }
        ech.sort();
        ech
    }

    fn sort(&mut self) {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        self.rows = idx.iter().map(|&i| self.rows[i].clone()).collect();
        self.pivots = idx.iter().map(|&i| self.pivots[i]).collect();
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows in place. The result is zero iff
    /// `v` was in the span.
    pub fn reduce(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` to the span. Returns false if it was already dependent.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn to_matrix(&self) -> BitMatrix {
        let mut sorted = self.clone();
        sorted.sort();
        BitMatrix {
            cols: self.cols,
            rows: sorted.rows,
        }
    }
}
