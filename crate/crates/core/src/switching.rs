//! Seidel and Godsil-McKay switching.
//!
//! Both operations add a rank-2 symmetric matrix to the adjacency matrix over
//! GF(2), so the 2-rank moves by at most 2. The perturbation is applied
//! row-wise with word XORs and never materialized.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::f2linalg::{iter_set_bits, F2Vector};
use crate::graphs::Graph;

/// Sorted, duplicate-free subset of `{0, .., universe-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
    universe: usize,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>, universe: usize) -> Result<Self> {
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        if let Some(&last) = members.last() {
            if last >= universe {
                return Err(Error::VertexOutOfRange {
                    index: last,
                    n: universe,
                });
            }
        }
        Ok(VertexSet { members, universe })
    }

    /// Resolves vertex labels of `g`.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<Self> {
        let idx = labels
            .iter()
            .map(|l| g.label_index(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        VertexSet::new(idx, g.n())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Characteristic vector.
    pub fn indicator(&self) -> F2Vector {
        F2Vector::from_indices(self.universe, &self.members).expect("members in range")
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            members: (0..self.universe).filter(|&v| !self.contains(v)).collect(),
            universe: self.universe,
        }
    }

    /// Labels of the members, when the graph is labelled.
    pub fn labels<'g>(&self, g: &'g Graph) -> Option<Vec<&'g str>> {
        self.members.iter().map(|&v| g.label(v)).collect()
    }
}

fn check_universe(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.universe != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: set.universe,
        });
    }
    Ok(())
}

/// Complements every edge between `x` and its complement.
pub fn seidel_switch(g: &Graph, x: &VertexSet) -> Result<Graph> {
    check_universe(g, x)?;
    let n = g.n();
    if x.is_empty() || x.len() >= n {
        return Err(Error::ImproperSwitchingSet { size: x.len(), n });
    }
    let inside = x.indicator();
    let outside = inside.complement();
    let (mut adj, labels) = g.clone().into_parts();
    for v in 0..n {
        let flip = if inside.get(v) { &outside } else { &inside };
        adj.xor_row(v, flip.words());
    }
    Ok(Graph::from_parts(adj, labels))
}

/// Seidel switch at the neighbourhood of `x`, leaving `x` isolated.
pub fn seidel_isolate(g: &Graph, x: usize) -> Result<Graph> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { index: x, n: g.n() });
    }
    let nbrs = g.neighbors(x);
    if nbrs.is_empty() || nbrs.len() == g.n() - 1 {
        return Err(Error::CannotIsolate(x));
    }
    seidel_switch(g, &VertexSet::new(nbrs, g.n())?)
}

/// How the vertices outside a GM set meet it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GmClassification {
    pub inside: VertexSet,
    /// Adjacent to every vertex of the set.
    pub full: Vec<usize>,
    /// Adjacent to exactly half of the set; these get switched.
    pub half: Vec<usize>,
    /// Adjacent to none of the set.
    pub zero: Vec<usize>,
    pub induced_degree: usize,
}

fn check_gm_size(w: &VertexSet) -> Result<()> {
    if w.len() < 2 || w.len() % 2 == 1 {
        return Err(Error::OddGmSet(w.len()));
    }
    Ok(())
}

/// Classifies the outside vertices, or `None` when `w` is not a GM set.
pub fn classify_gm(g: &Graph, w: &VertexSet) -> Result<Option<GmClassification>> {
    check_universe(g, w)?;
    check_gm_size(w)?;
    let size = w.len();
    let mask = w.indicator();
    let adj = g.adj();
    let induced_degree = adj.row_and_count(w.members[0], mask.words());
    if w.members[1..]
        .iter()
        .any(|&u| adj.row_and_count(u, mask.words()) != induced_degree)
    {
        return Ok(None);
    }
    let (mut full, mut half, mut zero) = (Vec::new(), Vec::new(), Vec::new());
    for v in 0..g.n() {
        if mask.get(v) {
            continue;
        }
        match adj.row_and_count(v, mask.words()) {
            0 => zero.push(v),
            c if c == size => full.push(v),
            c if 2 * c == size => half.push(v),
            _ => return Ok(None),
        }
    }
    Ok(Some(GmClassification {
        inside: w.clone(),
        full,
        half,
        zero,
        induced_degree,
    }))
}

/// Godsil-McKay switch: each half-vertex trades its neighbours in `w` for
/// the other half of `w`.
pub fn gm_switch(g: &Graph, w: &VertexSet) -> Result<Graph> {
    let class = classify_gm(g, w)?.ok_or(Error::InvalidGmSet)?;
    Ok(apply_gm(g, w, &class.half))
}

pub(crate) fn apply_gm(g: &Graph, w: &VertexSet, half: &[usize]) -> Graph {
    if half.is_empty() {
        return g.clone();
    }
    let wmask = w.indicator();
    let hmask = F2Vector::from_indices(g.n(), half).expect("in range");
    let (mut adj, labels) = g.clone().into_parts();
    for &v in half {
        adj.xor_row(v, wmask.words());
    }
    for &u in &w.members {
        adj.xor_row(u, hmask.words());
    }
    Graph::from_parts(adj, labels)
}

/// `rank2(gm_switch(g, w)) − rank2(g)`; always −2, 0 or +2.
pub fn rank_delta(g: &Graph, w: &VertexSet) -> Result<i32> {
    let switched = gm_switch(g, w)?;
    Ok(switched.rank2() as i32 - g.rank2() as i32)
}

/// Bit-level GM test on sorted member indices, used by the search scan.
/// Returns the half-vertices when `members` is a GM set.
pub(crate) fn gm_half_vertices(g: &Graph, members: &[usize], mask: &[u64]) -> Option<Vec<usize>> {
    let size = members.len();
    let adj = g.adj();
    // for |W| ≡ 0 mod 4 every allowed count is even, so the XOR of the
    // member rows must vanish outside W
    if size.is_multiple_of(4) {
        for (k, &m) in mask.iter().enumerate().take(adj.stride()) {
            let x = members.iter().fold(0u64, |x, &u| x ^ adj.row_words(u)[k]);
            if x & !m != 0 {
                return None;
            }
        }
    }
    let d = adj.row_and_count(members[0], mask);
    if members[1..].iter().any(|&u| adj.row_and_count(u, mask) != d) {
        return None;
    }
    let mut half = Vec::new();
    for v in 0..g.n() {
        if (mask[v / 64] >> (v % 64)) & 1 == 1 {
            continue;
        }
        let c = adj.row_and_count(v, mask);
        if c == 0 || c == size {
            continue;
        }
        if 2 * c == size {
            half.push(v);
        } else {
            return None;
        }
    }
    Some(half)
}

/// The perturbation `L` with `A_W = A + L`, as a dense matrix. Test aid.
pub fn gm_perturbation(g: &Graph, w: &VertexSet) -> Result<crate::f2linalg::F2Matrix> {
    let class = classify_gm(g, w)?.ok_or(Error::InvalidGmSet)?;
    let mut l = crate::f2linalg::F2Matrix::zeros(g.n(), g.n());
    for &u in &w.members {
        for &v in &class.half {
            l.set(u, v, true);
            l.set(v, u, true);
        }
    }
    Ok(l)
}

/// Members of `x`'s neighbourhood.
pub fn neighborhood(g: &Graph, x: usize) -> VertexSet {
    VertexSet::new(iter_set_bits(g.adj().row_words(x)).collect(), g.n()).expect("in range")
}
