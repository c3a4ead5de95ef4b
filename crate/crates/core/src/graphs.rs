//! Simple undirected graphs, named constructions and strongly regular checks.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::f2linalg::{iter_set_bits, F2Matrix, F2Vector};

/// A simple undirected graph stored as a symmetric, zero-diagonal GF(2) matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: F2Matrix,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Validates `adj` as the adjacency matrix of a simple graph.
    pub fn from_adjacency(adj: F2Matrix, labels: Option<Vec<String>>) -> Result<Self> {
        if !adj.is_square() {
            return Err(Error::NotSquare {
                rows: adj.rows(),
                cols: adj.cols(),
            });
        }
        if let Some(i) = (0..adj.rows()).find(|&i| adj.get(i, i)) {
            return Err(Error::NonzeroDiagonal(i));
        }
        if let Some((row, col)) = adj.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        if let Some(labels) = &labels {
            check_labels(labels, adj.rows())?;
        }
        Ok(Graph { adj, labels })
    }

    /// Trusted constructor for matrices the caller has built symmetric with
    /// zero diagonal.
    pub(crate) fn from_parts(adj: F2Matrix, labels: Option<Vec<String>>) -> Self {
        debug_assert!(adj.is_square() && adj.is_symmetric());
        debug_assert!((0..adj.rows()).all(|i| !adj.get(i, i)));
        Graph { adj, labels }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = F2Matrix::zeros(n, n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::NonzeroDiagonal(u));
            }
            adj.set(u, v, true);
            adj.set(v, u, true);
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: F2Matrix::zeros(n, n),
            labels: None,
        }
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.n())?;
        Ok(Graph {
            adj: self.adj,
            labels: Some(labels),
        })
    }

    pub fn without_labels(self) -> Self {
        Graph {
            adj: self.adj,
            labels: None,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    #[inline]
    pub fn adj(&self) -> &F2Matrix {
        &self.adj
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count_ones(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        iter_set_bits(self.adj.row_words(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn rank2(&self) -> usize {
        self.adj.rank2()
    }

    /// Whether the all-ones vector lies in the GF(2) column space of the adjacency matrix.
    pub fn ones_in_colspace(&self) -> bool {
        self.adj
            .in_colspace(&F2Vector::ones(self.n()))
            .expect("square matrix")
    }

    /// Index of the vertex carrying `label`.
    ///
    /// Parentheses and whitespace are ignored, so `"(100000)"`, `"100000"`,
    /// `"(1, 2, 3)"` and `"1,2,3"` all resolve.
    pub fn label_index(&self, label: &str) -> Result<usize> {
        let labels = self.labels.as_ref().ok_or(Error::Unlabeled)?;
        let key = normalize_label(label);
        labels
            .iter()
            .position(|l| *l == key)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Appends a vertex with no edges. Labelled graphs get the label `"*"`
    /// unless that is taken, in which case the new index is used.
    pub fn add_isolated(&self) -> Graph {
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            let fresh = if l.iter().any(|x| x == "*") {
                format!("{}", l.len())
            } else {
                "*".to_owned()
            };
            l.push(fresh);
            l
        });
        Graph {
            adj: self.adj.extend_zero(),
            labels,
        }
    }

    pub fn drop_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.n(),
            });
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.remove(v);
            l
        });
        Ok(Graph {
            adj: self.adj.remove_row_col(v),
            labels,
        })
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.adj.row_words(v).iter().all(|&w| w == 0))
            .collect()
    }

    pub(crate) fn into_parts(self) -> (F2Matrix, Option<Vec<String>>) {
        (self.adj, self.labels)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.edge_count())
    }
}

fn check_labels(labels: &[String], n: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::LabelCount {
            expected: n,
            found: labels.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

pub(crate) fn normalize_label(label: &str) -> String {
    label
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect()
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{i}")).collect()
}

/// Two disjoint edges {1,2} and {3,4}.
pub fn two_k2() -> Graph {
    Graph::from_edges(4, &[(0, 1), (2, 3)])
        .and_then(|g| g.with_labels(numbered_labels(4)))
        .expect("static graph")
}

/// The complete graph on labels 1..4.
pub fn k4() -> Graph {
    complete(4).with_labels(numbered_labels(4)).expect("static graph")
}

pub fn k1() -> Graph {
    Graph::empty(1)
        .with_labels(numbered_labels(1))
        .expect("static graph")
}

pub fn complete(n: usize) -> Graph {
    let adj = F2Matrix::all_ones(n, n)
        .add2(&F2Matrix::identity(n))
        .expect("same shape");
    Graph::from_parts(adj, None)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("in range")
}

/// Symplectic graph `Sp(2m, 2)`.
///
/// Vertices are the nonzero vectors of GF(2)^{2m}, ordered by the integer
/// value of `x1 x2 ... x2m` read most significant first and labelled by that
/// bit string. Two vectors are adjacent when the symplectic form pairing
/// coordinates (2i-1, 2i) evaluates to 1.
pub fn sp(m: usize) -> Result<Graph> {
    if m == 0 || m > 6 {
        return Err(Error::ParameterOutOfRange(m));
    }
    let bits = 2 * m;
    let n = (1usize << bits) - 1;
    let even_bits: u64 = 0x5555_5555_5555_5555 & ((1u64 << bits) - 1);
    let swap_pairs = |v: u64| ((v & even_bits) << 1) | ((v >> 1) & even_bits);
    let mut adj = F2Matrix::zeros(n, n);
    for i in 0..n {
        let u = (i + 1) as u64;
        let su = swap_pairs(u);
        for j in (i + 1)..n {
            let v = (j + 1) as u64;
            if (su & v).count_ones() % 2 == 1 {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    }
    let labels = (1..=n)
        .map(|v| format!("{:0width$b}", v, width = bits))
        .collect();
    Ok(Graph::from_parts(adj, Some(labels)))
}

/// Parameter families of the strongly regular graphs tied to graphical
/// Hadamard matrices of order `4^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(2^{2m}-1, 2^{2m-1}, 2^{2m-2}, 2^{2m-2})`
    P0,
    /// `(2^{2m}, 2^{2m-1}+2^{m-1}, 2^{2m-2}+2^{m-1}, 2^{2m-2}+2^{m-1})`
    Pplus,
    /// `(2^{2m}, 2^{2m-1}-2^{m-1}, 2^{2m-2}-2^{m-1}, 2^{2m-2}-2^{m-1})`
    Pminus,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::P0 => "P0",
            Family::Pplus => "P+",
            Family::Pminus => "P-",
        }
    }

    /// Recovers the family and `m` from a parameter quadruple.
    pub fn classify(params: SrgParams) -> Option<(Family, usize)> {
        (1..=8).find_map(|m| {
            [Family::P0, Family::Pplus, Family::Pminus]
                .into_iter()
                .find(|&f| srg_params(f, m).ok() == Some(params))
                .map(|f| (f, m))
        })
    }
}

impl core::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p0" => Ok(Family::P0),
            "p+" | "pplus" | "plus" => Ok(Family::Pplus),
            "p-" | "pminus" | "minus" => Ok(Family::Pminus),
            _ => Err(Error::InvalidPlan(format!("unknown family {s:?}"))),
        }
    }
}

/// `(n, k, λ, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// `k(k-λ-1) = (n-k-1)μ` together with the range constraints.
    pub fn is_feasible(&self) -> bool {
        self.k < self.n
            && self.lambda < self.k
            && self.mu <= self.k
            && self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

fn check_family_m(family: Family, m: usize) -> Result<()> {
    let min = if family == Family::P0 { 2 } else { 1 };
    if m < min || m > 16 {
        return Err(Error::ParameterOutOfRange(m));
    }
    Ok(())
}

pub fn srg_params(family: Family, m: usize) -> Result<SrgParams> {
    check_family_m(family, m)?;
    let q = 1usize << (2 * m - 2);
    let h = 1usize << (m - 1);
    Ok(match family {
        Family::P0 => SrgParams::new(4 * q - 1, 2 * q, q, q),
        Family::Pplus => SrgParams::new(4 * q, 2 * q + h, q + h, q + h),
        Family::Pminus => SrgParams::new(4 * q, 2 * q - h, q - h, q - h),
    })
}

/// Known bounds on the 2-rank of an SRG in `family` for this `m`:
/// `[2m, 2^{2m-1}-2^{m-1}-2]` for P0 and `[2m+2, 2^{2m-1}-2^{m-1}]` for P±.
pub fn feasible_2rank_interval(family: Family, m: usize) -> Result<(usize, usize)> {
    check_family_m(family, m)?;
    // for m = 1 the P± bounds are inverted; only m >= 2 gives an interval
    if m < 2 {
        return Err(Error::ParameterOutOfRange(m));
    }
    let hi = (1usize << (2 * m - 1)) - (1usize << (m - 1));
    Ok(match family {
        Family::P0 => (2 * m, hi - 2),
        Family::Pplus | Family::Pminus => (2 * m + 2, hi),
    })
}

/// Certifies `A² = kI + λA + μ(J - I - A)` in exact integer arithmetic.
///
/// Returns `None` for non-regular graphs, for graphs where the identity fails,
/// and for complete or edgeless graphs (where μ or λ is undefined).
pub fn check_srg(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let adj = g.adj();
    let k = adj.row_count_ones(0);
    if (1..n).any(|v| adj.row_count_ones(v) != k) {
        return None;
    }
    if k == 0 || k == n - 1 {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let common = adj.rows_and_count(i, j);
            let slot = if adj.get(i, j) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams::new(n, k, lambda?, mu?))
}

/// Lattice graph `L(4) = 2K2 ⊗H 2K2`.
pub fn lattice4() -> Graph {
    crate::product::seidel_product(&two_k2(), &two_k2())
}

/// Shrikhande graph: `L(4)` Seidel-switched at the coclique {(1,1),(2,2),(3,3),(4,4)}.
pub fn shrikhande() -> Graph {
    let l4 = lattice4();
    let x: Vec<usize> = ["1,1", "2,2", "3,3", "4,4"]
        .iter()
        .map(|l| l4.label_index(l).expect("product labels"))
        .collect();
    let x = crate::switching::VertexSet::new(x, l4.n()).expect("valid set");
    crate::switching::seidel_switch(&l4, &x).expect("proper subset")
}
