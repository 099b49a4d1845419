//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words, least significant bit first: logical
//! index `i` lives in word `i / 64` at bit `i % 64`. Bits past `len` in the last
//! word are always zero. Nothing outside this module depends on the packing;
//! all external access goes through logical indices.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Unit vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` with ones at the given positions.
    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / WORD_BITS] >> (index % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD_BITS);
        if value {
            self.words[index / WORD_BITS] |= mask;
        } else {
            self.words[index / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD_BITS] ^= 1u64 << (index % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Iterates over set positions in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * WORD_BITS + bit)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "and of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Copies `len` bits starting at `start` into a new vector.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len, "slice out of range");
        let mut out = BitVector::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    #[cfg(test)]
    fn has_canonical_padding(&self) -> bool {
        let tail = self.len % WORD_BITS;
        tail == 0 || self.words.last().is_none_or(|w| w >> tail == 0)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from explicit rows. All rows must share one length.
    pub fn from_rows(rows: Vec<BitVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVector::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Convenience constructor for small literal matrices (nonzero means one).
    pub fn from_u8_rows(rows: &[&[u8]]) -> Self {
        let vecs = rows
            .iter()
            .map(|r| BitVector::from_bits(r.iter().map(|&b| b != 0)))
            .collect();
        Self::from_rows(vecs).expect("literal rows must share a length")
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    #[inline]
    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut BitVector {
        &mut self.data[r]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVector> {
        self.data.iter()
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_bits(self.data.iter().map(|r| r.get(c)))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        Ok(out)
    }

    /// Product `self * other` with arithmetic modulo 2.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        // Row r of the product is the xor of the rows of `other` selected by row r of `self`.
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(BitVector::from_bits(self.data.iter().map(|r| r.dot(v))))
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns over {}",
                self.cols, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(BitMatrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// Rows `start..start+count` as a new matrix.
    pub fn row_block(&self, start: usize, count: usize) -> BitMatrix {
        BitMatrix {
            rows: count,
            cols: self.cols,
            data: self.data[start..start + count].to_vec(),
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).pivots.len()
    }

    /// Inverse over GF(2), or [`Error::Singular`].
    pub fn invert(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut left = self.clone();
        let mut right = BitMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| left.get(r, col)).ok_or(Error::Singular)?;
            left.swap_rows(col, pivot);
            right.swap_rows(col, pivot);
            let (pl, pr) = (left.data[col].clone(), right.data[col].clone());
            for r in 0..n {
                if r != col && left.get(r, col) {
                    left.data[r].xor_assign(&pl);
                    right.data[r].xor_assign(&pr);
                }
            }
        }
        Ok(right)
    }

    /// Basis of `{x : self * x = 0}`.
    ///
    /// The basis is read off the reduced row-echelon form with smallest-column
    /// pivots: one vector per free column, in ascending column order, with a
    /// one at that free column.
    pub fn null_space(&self) -> Vec<BitVector> {
        let echelon = rref(self);
        kernel_from_rref(self.cols, &echelon.pivots)
    }

    #[cfg(test)]
    fn rows_are_canonical(&self) -> bool {
        self.data
            .iter()
            .all(|r| r.len() == self.cols && r.has_canonical_padding())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            write!(f, "  ")?;
            for c in 0..self.cols {
                f.write_str(if row.get(c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A pivot row of a reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotRow {
    pub column: usize,
    pub row: BitVector,
}

/// Reduced row-echelon form, pivot rows sorted by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub pivots: Vec<PivotRow>,
}

/// Batch reduced row-echelon form of `m`.
pub fn rref(m: &BitMatrix) -> Echelon {
    let mut rows: Vec<BitVector> = m.data.clone();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..m.cols {
        let Some(p) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, p);
        let prow = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&prow);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    Echelon {
        pivots: pivots
            .into_iter()
            .zip(rows)
            .map(|(column, row)| PivotRow { column, row })
            .collect(),
    }
}

fn kernel_from_rref(width: usize, pivots: &[PivotRow]) -> Vec<BitVector> {
    let mut is_pivot = vec![false; width];
    for p in pivots {
        is_pivot[p.column] = true;
    }
    (0..width)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVector::unit(width, free);
            for p in pivots {
                if p.row.get(free) {
                    v.set(p.column, true);
                }
            }
            v
        })
        .collect()
}

/// Incremental Gauss-Jordan elimination.
///
/// Rows are fed one at a time; the accumulated pivot rows stay in reduced
/// row-echelon form, so memory is bounded by `width` rows no matter how many
/// rows are fed.
#[derive(Clone, Debug)]
pub struct StreamingEliminator {
    width: usize,
    // pivot column -> index into `rows`
    slot: Vec<Option<usize>>,
    pivot_mask: BitVector,
    rows: Vec<PivotRow>,
    fed: usize,
}

impl StreamingEliminator {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            slot: vec![None; width],
            pivot_mask: BitVector::zeros(width),
            rows: Vec::new(),
            fed: 0,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows_fed(&self) -> usize {
        self.fed
    }

    /// Reduces `row` against the current pivots. Returns true when it
    /// contributed a new pivot.
    pub fn feed(&mut self, mut row: BitVector) -> Result<bool> {
        if row.len() != self.width {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} fed to an eliminator of width {}",
                row.len(),
                self.width
            )));
        }
        self.fed += 1;
        if self.rows.len() == self.width {
            return Ok(false);
        }
        // Pivot rows are zero on every other pivot column, so the set of
        // pivot columns to clear is fixed before any xor happens.
        let hits = row.and(&self.pivot_mask);
        for c in hits.ones() {
            let idx = self.slot[c].expect("pivot mask and slot table agree");
            row.xor_assign(&self.rows[idx].row);
        }
        let Some(column) = row.first_one() else {
            return Ok(false);
        };
        for existing in &mut self.rows {
            if existing.row.get(column) {
                existing.row.xor_assign(&row);
            }
        }
        self.slot[column] = Some(self.rows.len());
        self.pivot_mask.set(column, true);
        self.rows.push(PivotRow { column, row });
        Ok(true)
    }

    /// Reduced row-echelon form of everything fed so far.
    pub fn echelon(&self) -> Echelon {
        let mut pivots = self.rows.clone();
        pivots.sort_by_key(|p| p.column);
        Echelon { pivots }
    }

    /// Kernel basis of the fed rows, same convention as [`BitMatrix::null_space`].
    pub fn null_space(&self) -> Vec<BitVector> {
        kernel_from_rref(self.width, &self.echelon().pivots)
    }
}
