//! Square ±1 matrices and the graphs of graphical Hadamard matrices.
//!
//! Entries are stored one bit each, bit 1 meaning −1. Under that encoding
//! the Kronecker product of sign matrices is `B1 ⊗ J + J ⊗ B2` over GF(2),
//! and for a graphical matrix with +1 diagonal the bit matrix *is* the
//! adjacency matrix of `(J − H)/2`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::f2linalg::F2Matrix;
use crate::graphs::Graph;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    bits: F2Matrix,
}

impl SignMatrix {
    /// Builds from rows of `+1`/`-1` values.
    pub fn from_signs<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut bits = F2Matrix::zeros(n, n);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::NotSquare { rows: n, cols: r.len() });
            }
            for (j, &x) in r.iter().enumerate() {
                match x {
                    1 => {}
                    -1 => bits.set(i, j, true),
                    _ => return Err(Error::BadSign),
                }
            }
        }
        Ok(SignMatrix { bits })
    }

    /// Wraps a square bit matrix (bit 1 = −1).
    pub fn from_bits(bits: F2Matrix) -> Result<Self> {
        if !bits.is_square() {
            return Err(Error::NotSquare {
                rows: bits.rows(),
                cols: bits.cols(),
            });
        }
        Ok(SignMatrix { bits })
    }

    /// The 1×1 matrix `[+1]`.
    pub fn unit() -> Self {
        SignMatrix {
            bits: F2Matrix::zeros(1, 1),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.bits.rows()
    }

    pub fn bits(&self) -> &F2Matrix {
        &self.bits
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        if self.bits.get(i, j) {
            -1
        } else {
            1
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn negate(&self) -> SignMatrix {
        let n = self.n();
        SignMatrix {
            bits: self.bits.add2(&F2Matrix::all_ones(n, n)).expect("same shape"),
        }
    }

    pub fn transpose(&self) -> SignMatrix {
        SignMatrix {
            bits: self.bits.transpose(),
        }
    }

    fn row_sum(&self, i: usize) -> i64 {
        self.n() as i64 - 2 * self.bits.row_count_ones(i) as i64
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n()).map(|i| self.row_sum(i)).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        self.transpose().row_sums()
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.n() {
            self.bits.toggle(i, j);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.n() {
            self.bits.toggle(i, j);
        }
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignMatrix {} [", self.n())?;
        for i in 0..self.n() {
            f.write_str("  ")?;
            for j in 0..self.n() {
                f.write_str(if self.bits.get(i, j) { "-" } else { "+" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// `HHᵀ = nI`. Row `i` dotted with row `j` is `n − 2·|r_i XOR r_j|`.
pub fn is_hadamard(h: &SignMatrix) -> bool {
    let n = h.n();
    let stride = h.bits.stride();
    let mut diff = alloc::vec![0u64; stride];
    for i in 0..n {
        for j in (i + 1)..n {
            for (d, (a, b)) in diff
                .iter_mut()
                .zip(h.bits.row_words(i).iter().zip(h.bits.row_words(j)))
            {
                *d = a ^ b;
            }
            let dist: usize = diff.iter().map(|w| w.count_ones() as usize).sum();
            if 2 * dist != n {
                return false;
            }
        }
    }
    true
}

/// Symmetric with constant diagonal.
pub fn is_graphical(h: &SignMatrix) -> bool {
    let n = h.n();
    if n == 0 {
        return true;
    }
    let d = h.bits.get(0, 0);
    (1..n).all(|i| h.bits.get(i, i) == d) && h.bits.is_symmetric()
}

/// All row sums and all column sums equal.
pub fn is_regular(h: &SignMatrix) -> bool {
    let rows = h.row_sums();
    let cols = h.col_sums();
    match rows.first() {
        None => true,
        Some(&s) => rows.iter().chain(&cols).all(|&x| x == s),
    }
}

/// First row and first column all +1.
pub fn is_normalized(h: &SignMatrix) -> bool {
    let n = h.n();
    (0..n).all(|j| !h.bits.get(0, j)) && (0..n).all(|i| !h.bits.get(i, 0))
}

/// `ε` such that every row sums to `ε√n`.
pub fn row_sum_sign(h: &SignMatrix) -> Result<i8> {
    if !is_hadamard(h) {
        return Err(Error::NotHadamard);
    }
    if !is_regular(h) {
        return Err(Error::NotRegular);
    }
    let n = h.n() as i64;
    let s = h.row_sum(0);
    if s * s != n || s == 0 {
        return Err(Error::NotRegular);
    }
    Ok(if s > 0 { 1 } else { -1 })
}

/// Negates every row whose first entry is −1 (row 0 included), then every
/// column whose first-row entry is −1.
pub fn normalize(h: &SignMatrix) -> Result<SignMatrix> {
    if !is_hadamard(h) {
        return Err(Error::NotHadamard);
    }
    let mut out = h.clone();
    for i in 0..out.n() {
        if out.bits.get(i, 0) {
            out.negate_row(i);
        }
    }
    for j in 0..out.n() {
        if out.bits.get(0, j) {
            out.negate_col(j);
        }
    }
    Ok(out)
}

pub fn kron(a: &SignMatrix, b: &SignMatrix) -> SignMatrix {
    let (na, nb) = (a.n(), b.n());
    let left = a.bits.kron2(&F2Matrix::all_ones(nb, nb));
    let right = F2Matrix::all_ones(na, na).kron2(&b.bits);
    SignMatrix {
        bits: left.add2(&right).expect("same shape"),
    }
}

/// Graph with adjacency `(J − H)/2`, after replacing `H` by `−H` when the
/// diagonal is −1.
pub fn graph_of(h: &SignMatrix) -> Result<Graph> {
    if !is_graphical(h) {
        return Err(Error::NotGraphical);
    }
    let h = if h.n() > 0 && h.bits.get(0, 0) {
        h.negate()
    } else {
        h.clone()
    };
    Ok(Graph::from_parts(h.bits, None))
}

/// `H = J − 2A`, together with whether it is a Hadamard matrix.
pub fn hadamard_of(g: &Graph) -> (SignMatrix, bool) {
    let h = SignMatrix {
        bits: g.adj().clone(),
    };
    let ok = is_hadamard(&h);
    (h, ok)
}

/// Order-4 regular graphical Hadamard matrix with row sums +2; its graph is `2K2`.
pub fn h1() -> SignMatrix {
    SignMatrix::from_signs(&[[1, -1, 1, 1], [-1, 1, 1, 1], [1, 1, 1, -1], [1, 1, -1, 1]])
        .expect("static matrix")
}

/// `2I − J` of order 4, row sums −2; its graph is `K4`.
pub fn h2() -> SignMatrix {
    SignMatrix::from_signs(&[
        [1, -1, -1, -1],
        [-1, 1, -1, -1],
        [-1, -1, 1, -1],
        [-1, -1, -1, 1],
    ])
    .expect("static matrix")
}

/// Kronecker power of `h`; the zeroth power is `[+1]`.
pub fn kron_power(h: &SignMatrix, k: usize) -> SignMatrix {
    (0..k).fold(SignMatrix::unit(), |acc, _| kron(&acc, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{check_srg, k4, path, two_k2, SrgParams};

    fn naive_hadamard(h: &SignMatrix) -> bool {
        let n = h.n();
        let r = h.to_rows();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let dot: i64 = (0..n).map(|k| (r[i][k] * r[j][k]) as i64).sum();
                dot == if i == j { n as i64 } else { 0 }
            })
        })
    }

    #[test]
    fn hadamard_predicate() {
        assert!(is_hadamard(&h1()));
        assert!(is_hadamard(&h2()));
        let ones = SignMatrix::from_signs(&[[1, 1], [1, 1]]).unwrap();
        assert!(!is_hadamard(&ones));
        let sylvester = SignMatrix::from_signs(&[[1, 1], [1, -1]]).unwrap();
        assert!(is_hadamard(&sylvester));
        for h in [h1(), h2(), kron(&h1(), &h2()), ones, sylvester] {
            assert_eq!(is_hadamard(&h), naive_hadamard(&h));
        }
    }

    #[test]
    fn constant_matrices() {
        assert_eq!(h1().get(0, 1), -1);
        let h = h2();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(h.get(i, j), if i == j { 1 } else { -1 });
            }
        }
        assert!(SignMatrix::from_signs(&[[1, 0], [1, 1]]).is_err());
    }

    #[test]
    fn predicates() {
        assert!(is_graphical(&h2()) && is_regular(&h2()));
        assert_eq!(h2().row_sums(), alloc::vec![-2; 4]);
        assert!(is_regular(&h1()));
        assert_eq!(h1().row_sums(), alloc::vec![2; 4]);
        assert!(!is_normalized(&kron(&h1(), &h1())));
        assert!(is_graphical(&h1()) && is_hadamard(&h1()));
    }

    #[test]
    fn row_sum_signs() {
        assert_eq!(row_sum_sign(&h1()), Ok(1));
        assert_eq!(row_sum_sign(&h2()), Ok(-1));
        assert_eq!(row_sum_sign(&kron(&h1(), &h2())), Ok(-1));
        let sylvester = SignMatrix::from_signs(&[[1, 1], [1, -1]]).unwrap();
        assert_eq!(row_sum_sign(&sylvester), Err(Error::NotRegular));
        let ones = SignMatrix::from_signs(&[[1, 1], [1, 1]]).unwrap();
        assert_eq!(row_sum_sign(&ones), Err(Error::NotHadamard));
    }

    #[test]
    fn normalization() {
        let n = normalize(&h1()).unwrap();
        assert!(is_normalized(&n) && is_hadamard(&n));
        assert_eq!(normalize(&n).unwrap(), n);
        assert_eq!(normalize(&n.negate()).unwrap(), n);
        let big = kron(&h1(), &h2());
        let nb = normalize(&big).unwrap();
        assert_eq!(normalize(&nb.negate()).unwrap(), nb);
        assert!(normalize(&SignMatrix::from_signs(&[[1, 1], [1, 1]]).unwrap()).is_err());
    }

    #[test]
    fn kronecker() {
        assert!(is_hadamard(&kron(&h1(), &h1())));
        assert_eq!(kron(&h1(), &h1()).n(), 16);
        assert_eq!(kron(&SignMatrix::unit(), &h1()), h1());
        assert_eq!(kron(&h2(), &SignMatrix::unit()), h2());
        let p = kron(&h1(), &h2());
        assert!(is_graphical(&p) && is_regular(&p));
        let (a, b) = (h1(), h2());
        for i in 0..16 {
            for j in 0..16 {
                assert_eq!(p.get(i, j), a.get(i / 4, j / 4) * b.get(i % 4, j % 4));
            }
        }
    }

    #[test]
    fn graphs_of_matrices() {
        assert_eq!(graph_of(&h1()).unwrap().adj(), two_k2().adj());
        assert_eq!(graph_of(&h2()).unwrap().adj(), k4().adj());
        assert_eq!(graph_of(&h1().negate()).unwrap().adj(), two_k2().adj());
        let clebsch = graph_of(&kron(&h1(), &h2())).unwrap();
        assert_eq!(check_srg(&clebsch), Some(SrgParams::new(16, 10, 6, 6)));
        let sylvester = SignMatrix::from_signs(&[[1, 1], [1, -1]]).unwrap();
        assert_eq!(graph_of(&sylvester), Err(Error::NotGraphical));
    }

    #[test]
    fn hadamard_of_graphs() {
        let (h, ok) = hadamard_of(&graph_of(&h1()).unwrap());
        assert!(ok);
        assert_eq!(h, h1());
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (h, ok) = hadamard_of(&k2);
        assert_eq!(h.to_rows(), alloc::vec![alloc::vec![1, -1], alloc::vec![-1, 1]]);
        // rows (1,-1) and (-1,1) have inner product -2
        assert!(!ok);
        assert!(!hadamard_of(&path(3)).1);
    }

    #[test]
    fn seidel_identity() {
        // J - 2A - I == H - I entrywise
        let h = kron(&h1(), &h2());
        let g = graph_of(&h).unwrap();
        for i in 0..16 {
            for j in 0..16 {
                let s = 1 - 2 * g.is_adjacent(i, j) as i8 - (i == j) as i8;
                assert_eq!(s, h.get(i, j) - (i == j) as i8);
            }
        }
    }
}
