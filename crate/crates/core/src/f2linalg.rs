//! Dense linear algebra over GF(2).
//!
//! Rows are packed little-endian into `u64` words: column `j` of a row lives
//! in word `j / 64`, bit `j % 64`. Padding bits past `cols` are always zero,
//! which lets equality, popcounts and XOR work directly on the words.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A packed vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = F2Vector {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// Vector with ones exactly at `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self> {
        let mut v = F2Vector::zeros(len);
        for &i in indices {
            if i >= len {
                return Err(Error::VertexOutOfRange { index: i, n: len });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = F2Vector { len, words };
        v.clear_padding();
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
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the set bits, ascending.
    pub fn ones_indices(&self) -> Vec<usize> {
        iter_set_bits(&self.words).collect()
    }

    pub fn xor_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn complement(&self) -> F2Vector {
        let mut v = F2Vector {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.len);
        }
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

pub(crate) fn iter_set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// A dense, row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        F2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn all_ones(rows: usize, cols: usize) -> Self {
        let mut m = F2Matrix::zeros(rows, cols);
        let mask = tail_mask(cols);
        for r in 0..rows {
            let row = m.row_mut(r);
            for w in row.iter_mut() {
                *w = u64::MAX;
            }
            if let Some(last) = row.last_mut() {
                *last &= mask;
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = F2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from 0/1 rows. Any nonzero entry is read as 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            for (j, &x) in r.iter().enumerate() {
                if x != 0 {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_row_vectors(cols: usize, rows: &[F2Vector]) -> Result<Self> {
        let mut m = F2Matrix::zeros(rows.len(), cols);
        for (i, v) in rows.iter().enumerate() {
            if v.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: v.len(),
                });
            }
            m.row_mut(i).copy_from_slice(v.words());
        }
        Ok(m)
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

    /// Number of `u64` words per packed row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range");
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range");
        let bit = 1u64 << (j % WORD);
        let w = &mut self.data[i * self.stride + j / WORD];
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) out of range");
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> F2Vector {
        F2Vector::from_words(self.cols, self.row_words(i).to_vec())
    }

    /// XORs `v` into row `i`.
    pub(crate) fn xor_row(&mut self, i: usize, v: &[u64]) {
        for (a, b) in self.row_mut(i).iter_mut().zip(v) {
            *a ^= b;
        }
    }

    pub fn row_count_ones(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// `|row_i AND mask|`, for a mask with the same packing as a row.
    #[inline]
    pub fn row_and_count(&self, i: usize, mask: &[u64]) -> usize {
        self.row_words(i)
            .iter()
            .zip(mask)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|row_i AND row_j|`.
    #[inline]
    pub fn rows_and_count(&self, i: usize, j: usize) -> usize {
        self.row_and_count(i, self.row_words(j))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in iter_set_bits(self.row_words(i)) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in iter_set_bits(self.row_words(i)) {
                if !self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Entrywise sum (XOR).
    pub fn add2(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        Ok(F2Matrix {
            rows: self.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        })
    }

    /// Matrix-vector product `Mv`.
    pub fn mul2(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.row_and_count(i, v.words()) % 2 == 1 {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron2(&self, other: &F2Matrix) -> F2Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = F2Matrix::zeros(self.rows * r2, self.cols * c2);
        for i1 in 0..self.rows {
            let blocks: Vec<usize> = iter_set_bits(self.row_words(i1)).collect();
            for i2 in 0..r2 {
                let src = other.row_words(i2);
                let dst_row = i1 * r2 + i2;
                for &j1 in &blocks {
                    out.or_bits_at(dst_row, j1 * c2, src, c2);
                }
            }
        }
        out
    }

    /// ORs the first `len` bits of `src` into row `row` starting at column `offset`.
    fn or_bits_at(&mut self, row: usize, offset: usize, src: &[u64], len: usize) {
        let shift = offset % WORD;
        let base = offset / WORD;
        let nwords = words_for(len);
        let stride = self.stride;
        let dst = &mut self.data[row * stride..(row + 1) * stride];
        for (k, &w) in src.iter().take(nwords).enumerate() {
            if w == 0 {
                continue;
            }
            dst[base + k] |= w << shift;
            if shift != 0 && base + k + 1 < stride {
                dst[base + k + 1] |= w >> (WORD - shift);
            }
        }
    }

    /// Rank over GF(2).
    pub fn rank2(&self) -> usize {
        let mut rows: Vec<u64> = self.data.clone();
        eliminate(&mut rows, self.rows, self.stride, self.cols).len()
    }

    /// Whether `v` lies in the column space of `self`.
    pub fn in_colspace(&self, v: &F2Vector) -> Result<bool> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let aug = self.augment_column(v);
        Ok(aug.rank2() == self.rank2())
    }

    /// Solves `Mx = b`, returning one solution when the system is consistent.
    pub fn solve2(&self, b: &F2Vector) -> Result<Option<F2Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let aug = self.augment_column(b);
        let mut rows = aug.data.clone();
        let pivots = reduce_full(&mut rows, aug.rows, aug.stride, aug.cols);
        let mut x = F2Vector::zeros(self.cols);
        let rhs = self.cols;
        for (r, &c) in pivots.iter().enumerate() {
            if c == rhs {
                return Ok(None);
            }
            let word = rows[r * aug.stride + rhs / WORD];
            if (word >> (rhs % WORD)) & 1 == 1 {
                x.set(c, true);
            }
        }
        Ok(Some(x))
    }

    /// `[M | v]`.
    pub fn augment_column(&self, v: &F2Vector) -> F2Matrix {
        let mut out = F2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            out.or_bits_at(i, 0, self.row_words(i), self.cols);
            if v.get(i) {
                out.set(i, self.cols, true);
            }
        }
        out
    }

    /// Removes row and column `k` from a square matrix.
    pub fn remove_row_col(&self, k: usize) -> F2Matrix {
        assert!(self.is_square() && k < self.rows);
        let n = self.rows - 1;
        F2Matrix::from_fn(n, n, |i, j| {
            let si = if i < k { i } else { i + 1 };
            let sj = if j < k { j } else { j + 1 };
            self.get(si, sj)
        })
    }

    /// Pads a square matrix with one zero row and column at the end.
    pub fn extend_zero(&self) -> F2Matrix {
        let mut out = F2Matrix::zeros(self.rows + 1, self.cols + 1);
        for i in 0..self.rows {
            out.or_bits_at(i, 0, self.row_words(i), self.cols);
        }
        out
    }
}

/// Forward elimination in place; returns pivot columns in row order.
/// Pivot: first column, left to right, with a nonzero entry at or below the
/// current row; rows processed top to bottom.
fn eliminate(rows: &mut [u64], nrows: usize, stride: usize, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let (wi, bit) = (c / WORD, 1u64 << (c % WORD));
        let Some(p) = (r..nrows).find(|&i| rows[i * stride + wi] & bit != 0) else {
            continue;
        };
        if p != r {
            for k in 0..stride {
                rows.swap(p * stride + k, r * stride + k);
            }
        }
        let (head, tail) = rows.split_at_mut((r + 1) * stride);
        let pivot = &head[r * stride..];
        for row in tail.chunks_exact_mut(stride) {
            if row[wi] & bit != 0 {
                for k in wi..stride {
                    row[k] ^= pivot[k];
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Gauss-Jordan elimination to reduced row echelon form.
fn reduce_full(rows: &mut [u64], nrows: usize, stride: usize, ncols: usize) -> Vec<usize> {
    let pivots = eliminate(rows, nrows, stride, ncols);
    for (r, &c) in pivots.iter().enumerate().rev() {
        let (wi, bit) = (c / WORD, 1u64 << (c % WORD));
        let pivot: Vec<u64> = rows[r * stride..(r + 1) * stride].to_vec();
        for i in 0..r {
            let row = &mut rows[i * stride..(i + 1) * stride];
            if row[wi] & bit != 0 {
                for k in wi..stride {
                    row[k] ^= pivot[k];
                }
            }
        }
    }
    pivots
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> F2Matrix {
        F2Matrix::from_rows(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]).unwrap()
    }

    /// Brute force: v is in the column space iff some subset of columns sums to v.
    fn colspace_by_enumeration(m: &F2Matrix, v: &F2Vector) -> bool {
        let cols = m.cols();
        assert!(cols <= 16);
        (0u32..(1 << cols)).any(|mask| {
            let mut acc = F2Vector::zeros(m.rows());
            for j in 0..cols {
                if mask >> j & 1 == 1 {
                    for i in 0..m.rows() {
                        if m.get(i, j) {
                            acc.set(i, !acc.get(i));
                        }
                    }
                }
            }
            acc == *v
        })
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(F2Matrix::zeros(4, 4).rank2(), 0);
        assert_eq!(F2Matrix::identity(5).rank2(), 5);
        assert_eq!(two_k2().rank2(), 4);
        let k4 = F2Matrix::all_ones(4, 4).add2(&F2Matrix::identity(4)).unwrap();
        assert_eq!(k4.rank2(), 4);
        // K3 = J - I has rank 2 over GF(2)
        let k3 = F2Matrix::all_ones(3, 3).add2(&F2Matrix::identity(3)).unwrap();
        assert_eq!(k3.rank2(), 2);
    }

    #[test]
    fn rank_does_not_mutate() {
        let m = two_k2();
        let copy = m.clone();
        let _ = m.rank2();
        assert_eq!(m, copy);
    }

    #[test]
    fn empty_matrices_have_rank_zero() {
        assert_eq!(F2Matrix::zeros(0, 0).rank2(), 0);
        assert_eq!(F2Matrix::zeros(0, 7).rank2(), 0);
        assert_eq!(F2Matrix::zeros(3, 0).rank2(), 0);
        assert_eq!(F2Matrix::all_ones(3, 0).kron2(&F2Matrix::identity(2)).rank2(), 0);
    }

    #[test]
    fn colspace_membership() {
        assert!(two_k2().in_colspace(&F2Vector::ones(4)).unwrap());
        let v = F2Vector::from_bits(&[true, false, false]);
        assert!(!F2Matrix::zeros(3, 3).in_colspace(&v).unwrap());
        // K2 ∪ K1
        let m = F2Matrix::from_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 0]]).unwrap();
        let ones = F2Vector::ones(3);
        assert!(!colspace_by_enumeration(&m, &ones));
        assert!(!m.in_colspace(&ones).unwrap());
        assert!(matches!(
            m.in_colspace(&F2Vector::ones(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn solve_examples() {
        let b = F2Vector::from_bits(&[true, false, true]);
        assert_eq!(F2Matrix::identity(3).solve2(&b).unwrap(), Some(b.clone()));
        let b2 = F2Vector::from_bits(&[true, false]);
        assert_eq!(F2Matrix::zeros(2, 2).solve2(&b2).unwrap(), None);
        let m = two_k2();
        let ones = F2Vector::ones(4);
        let x = m.solve2(&ones).unwrap().expect("solvable");
        assert_eq!(m.mul2(&x).unwrap(), ones);
        assert!(F2Matrix::zeros(2, 2).solve2(&F2Vector::ones(3)).is_err());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            F2Matrix::identity(2).kron2(&F2Matrix::identity(2)),
            F2Matrix::identity(4)
        );
        assert!(F2Matrix::all_ones(2, 2).kron2(&F2Matrix::zeros(2, 2)).is_zero());
        let a = F2Matrix::from_rows(&[[1, 0, 1], [0, 1, 1]]).unwrap();
        let b = F2Matrix::from_rows(&[[1, 1], [0, 1], [1, 0]]).unwrap();
        let k = a.kron2(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        for i1 in 0..2 {
            for j1 in 0..3 {
                for i2 in 0..3 {
                    for j2 in 0..2 {
                        assert_eq!(
                            k.get(i1 * 3 + i2, j1 * 2 + j2),
                            a.get(i1, j1) && b.get(i2, j2)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kron_across_word_boundaries() {
        let a = F2Matrix::from_fn(3, 3, |i, j| (i + j) % 2 == 0);
        let b = F2Matrix::from_fn(5, 50, |i, j| (i * 7 + j * 3) % 5 < 2);
        let k = a.kron2(&b);
        for i in 0..k.rows() {
            for j in 0..k.cols() {
                assert_eq!(k.get(i, j), a.get(i / 5, j / 50) && b.get(i % 5, j % 50));
            }
        }
    }

    #[test]
    fn add_and_mul() {
        let m = two_k2();
        assert!(m.add2(&m).unwrap().is_zero());
        let v = F2Vector::from_bits(&[true, true, false]);
        assert_eq!(F2Matrix::identity(3).mul2(&v).unwrap(), v);
        assert!(F2Matrix::all_ones(3, 3).mul2(&v).unwrap().is_zero());
        assert!(m.add2(&F2Matrix::zeros(3, 4)).is_err());
        assert!(m.mul2(&v).is_err());
    }

    #[test]
    fn padding_stays_zero() {
        let j = F2Matrix::all_ones(2, 70);
        assert_eq!(j.row_words(0)[1], (1u64 << 6) - 1);
        let v = F2Vector::ones(70).complement();
        assert!(v.is_zero());
    }

    #[test]
    fn remove_and_extend() {
        let m = two_k2();
        assert_eq!(m.extend_zero().remove_row_col(4), m);
        assert_eq!(m.extend_zero().rank2(), 4);
    }
}
