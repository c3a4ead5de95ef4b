//! The graph product mirroring the Kronecker product of graphical Hadamard
//! matrices, its 2-rank behaviour, and the recursive construction of SRGs
//! with parameters `P0(m)` and `P±(m)` from order-64 building blocks.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::f2linalg::F2Matrix;
use crate::graphs::{self, check_srg, srg_params, Family, Graph, SrgParams};
use crate::hadamard;

/// `G1 ⊗H G2`: vertex `(x1, x2)` sits at index `n2·x1 + x2`, and two
/// distinct vertices are adjacent when their coordinate pairs are both edges
/// or both non-edges. Over GF(2) the adjacency matrix is `A1⊗J + J⊗A2`.
///
/// Labels are joined with a comma when both factors are labelled.
pub fn seidel_product(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let left = g1.adj().kron2(&F2Matrix::all_ones(n2, n2));
    let right = F2Matrix::all_ones(n1, n1).kron2(g2.adj());
    let adj = left.add2(&right).expect("same shape");
    debug_assert!((0..adj.rows()).all(|i| !adj.get(i, i)));
    let labels = match (g1.labels(), g2.labels()) {
        (Some(a), Some(b)) => Some(
            a.iter()
                .flat_map(|x| b.iter().map(move |y| format!("{x},{y}")))
                .collect(),
        ),
        _ => None,
    };
    Graph::from_parts(adj, labels)
}

/// Left-associated product of a nonempty list.
pub fn seidel_product_all(graphs: &[Graph]) -> Option<Graph> {
    let (first, rest) = graphs.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, g| seidel_product(&acc, g)))
}

/// Whether `1 ∈ Col₂(G1 ⊗H G2)`: true iff it holds for either factor.
pub fn ones_in_colspace_product(g1: &Graph, g2: &Graph) -> bool {
    g1.ones_in_colspace() || g2.ones_in_colspace()
}

/// 2-rank of `G1 ⊗H G2` from the factors: `r1 + r2 − 2` when `1` lies in
/// both column spaces, `r1 + r2` otherwise.
pub fn predicted_2rank(g1: &Graph, g2: &Graph) -> usize {
    predict_from(g1.rank2(), g1.ones_in_colspace(), g2.rank2(), g2.ones_in_colspace())
}

fn predict_from(r1: usize, ones1: bool, r2: usize, ones2: bool) -> usize {
    if ones1 && ones2 {
        r1 + r2 - 2
    } else {
        r1 + r2
    }
}

/// The named graphs used by the switching tables and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Sp3,
    TwoK2,
    K4,
    K1,
    Lattice4,
    Shrikhande,
    Clebsch,
    /// `2K2 ⊗H 2K2 ⊗H 2K2`
    GMinus3,
    /// `Shrikhande ⊗H 2K2`
    GMinus3Prime,
    /// `2K2 ⊗H 2K2 ⊗H K4`
    GPlus3,
    /// `Shrikhande ⊗H K4`
    GPlus3Prime,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 11] = [
        NamedGraph::Sp3,
        NamedGraph::TwoK2,
        NamedGraph::K4,
        NamedGraph::K1,
        NamedGraph::Lattice4,
        NamedGraph::Shrikhande,
        NamedGraph::Clebsch,
        NamedGraph::GMinus3,
        NamedGraph::GMinus3Prime,
        NamedGraph::GPlus3,
        NamedGraph::GPlus3Prime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedGraph::Sp3 => "sp3",
            NamedGraph::TwoK2 => "2k2",
            NamedGraph::K4 => "k4",
            NamedGraph::K1 => "k1",
            NamedGraph::Lattice4 => "lattice4",
            NamedGraph::Shrikhande => "shrikhande",
            NamedGraph::Clebsch => "clebsch",
            NamedGraph::GMinus3 => "g-3",
            NamedGraph::GMinus3Prime => "g'-3",
            NamedGraph::GPlus3 => "g+3",
            NamedGraph::GPlus3Prime => "g'+3",
        }
    }

    pub fn build(self) -> Graph {
        use graphs::{k1, k4, lattice4, shrikhande, two_k2};
        match self {
            NamedGraph::Sp3 => graphs::sp(3).expect("m = 3"),
            NamedGraph::TwoK2 => two_k2(),
            NamedGraph::K4 => k4(),
            NamedGraph::K1 => k1(),
            NamedGraph::Lattice4 => lattice4(),
            NamedGraph::Shrikhande => shrikhande(),
            NamedGraph::Clebsch => seidel_product(&two_k2(), &k4()),
            NamedGraph::GMinus3 => seidel_product(&lattice4(), &two_k2()),
            NamedGraph::GMinus3Prime => seidel_product(&shrikhande(), &two_k2()),
            NamedGraph::GPlus3 => seidel_product(&lattice4(), &k4()),
            NamedGraph::GPlus3Prime => seidel_product(&shrikhande(), &k4()),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.as_str() == key)
            .ok_or_else(|| Error::UnknownGraphName(s.to_string()))
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn named_graph(name: &str) -> Result<Graph> {
    Ok(name.parse::<NamedGraph>()?.build())
}

/// First factor `G0` of the recursive construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Head {
    K1,
    TwoK2,
    /// `2K2 ⊗H 2K2`, the lattice graph.
    TwoK2Squared,
    /// Graph of the normalized Kronecker power of `H1` of order `4^e`.
    NormalizedHadamard { exponent: usize },
}

impl Head {
    pub fn graph(self) -> Graph {
        match self {
            Head::K1 => graphs::k1(),
            Head::TwoK2 => graphs::two_k2(),
            Head::TwoK2Squared => graphs::lattice4(),
            Head::NormalizedHadamard { exponent: 0 } => graphs::k1(),
            Head::NormalizedHadamard { exponent } => {
                let h = hadamard::kron_power(&hadamard::h1(), exponent);
                let h = hadamard::normalize(&h).expect("Kronecker power of a Hadamard matrix");
                hadamard::graph_of(&h).expect("normalized power of H1 is graphical")
            }
        }
    }
}

/// Which order-64 blocks to combine for a target family, `m` and 2-ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductPlan {
    pub family: Family,
    pub m: usize,
    pub factor_ranks: Vec<usize>,
    pub head: Head,
}

impl ProductPlan {
    /// `factor_ranks` must hold `⌊m/3⌋` even values, each in `[6, 24]` for
    /// `P0` and in `[8, 26]` for `P±`.
    pub fn new(family: Family, m: usize, factor_ranks: Vec<usize>) -> Result<Self> {
        let min_m = if family == Family::P0 { 2 } else { 1 };
        if m < min_m || m > 6 {
            return Err(Error::ParameterOutOfRange(m));
        }
        let levels = m / 3;
        if factor_ranks.len() != levels {
            return Err(Error::InvalidPlan(format!(
                "m = {m} needs {levels} factor ranks, got {}",
                factor_ranks.len()
            )));
        }
        let (lo, hi) = match family {
            Family::P0 => (6, 24),
            Family::Pplus | Family::Pminus => (8, 26),
        };
        if let Some(&r) = factor_ranks.iter().find(|&&r| r % 2 == 1 || r < lo || r > hi) {
            return Err(Error::InvalidPlan(format!(
                "factor rank {r} is not an even value in [{lo}, {hi}]"
            )));
        }
        let rem = m - 3 * levels;
        let head = match family {
            Family::P0 => Head::NormalizedHadamard { exponent: rem },
            _ => match rem {
                0 => Head::K1,
                1 => Head::TwoK2,
                _ => Head::TwoK2Squared,
            },
        };
        if family == Family::Pplus && levels == 0 {
            return Err(Error::InvalidPlan(
                "P+ needs at least one P+(3) factor".to_string(),
            ));
        }
        Ok(ProductPlan {
            family,
            m,
            factor_ranks,
            head,
        })
    }

    pub fn levels(&self) -> usize {
        self.factor_ranks.len()
    }

    /// The 2-rank the construction must produce.
    pub fn predicted_rank(&self) -> usize {
        let r0 = self.head.graph().rank2();
        let sum: usize = self.factor_ranks.iter().sum();
        let l = self.levels();
        match self.family {
            Family::P0 => r0 + sum,
            _ if self.m > 3 * l => r0 + sum - 2 * l,
            _ => sum + 2 - 2 * l,
        }
    }

    pub fn target_params(&self) -> SrgParams {
        srg_params(self.family, self.m).expect("validated")
    }
}

/// Output of [`theorem_main_construct`].
#[derive(Debug, Clone)]
pub struct Construction {
    /// The iterated product `G0 ⊗H G1 ⊗H ... ⊗H Gℓ`.
    pub graph: Graph,
    /// The strongly regular graph: `graph` itself for `P±`, `graph` minus its
    /// isolated vertex for `P0`.
    pub srg: Graph,
    pub params: SrgParams,
    pub rank: usize,
    /// Rank obtained by chaining [`predicted_2rank`] over the factors.
    pub chained_prediction: usize,
}

fn check_factor(plan: &ProductPlan, i: usize, g: &Graph) -> Result<Family> {
    let fail = |what: String| Err(Error::InvalidPlan(format!("factor {}: {what}", i + 1)));
    if g.n() != 64 {
        return fail(format!("expected 64 vertices, found {}", g.n()));
    }
    let rank = g.rank2();
    if rank != plan.factor_ranks[i] {
        return fail(format!(
            "2-rank {rank} does not match planned {}",
            plan.factor_ranks[i]
        ));
    }
    match plan.family {
        Family::P0 => {
            let Some(&iso) = g.isolated_vertices().first() else {
                return fail("no isolated vertex".to_string());
            };
            let params = check_srg(&g.drop_vertex(iso)?);
            if params != srg_params(Family::P0, 3).ok() {
                return fail("removing the isolated vertex does not leave a P0(3) graph".to_string());
            }
            Ok(Family::P0)
        }
        Family::Pplus | Family::Pminus => {
            let family = match check_srg(g).and_then(Family::classify) {
                Some((f @ (Family::Pplus | Family::Pminus), 3)) => f,
                _ => return fail("not a P+(3) or P-(3) strongly regular graph".to_string()),
            };
            if !g.ones_in_colspace() {
                return fail("all-ones vector is not in the column space".to_string());
            }
            Ok(family)
        }
    }
}

/// Builds the product for `plan` and verifies it: the 2-rank is recomputed
/// directly and compared against both the closed form and the chained
/// prediction, and the result is certified strongly regular with the target
/// parameters.
pub fn theorem_main_construct(plan: &ProductPlan, factors: &[Graph]) -> Result<Construction> {
    if factors.len() != plan.levels() {
        return Err(Error::InvalidPlan(format!(
            "plan has {} levels but {} factors were given",
            plan.levels(),
            factors.len()
        )));
    }
    let mut plus_factors = 0;
    for (i, g) in factors.iter().enumerate() {
        if check_factor(plan, i, g)? == Family::Pplus {
            plus_factors += 1;
        }
    }
    if plan.family != Family::P0 {
        let expected = if plus_factors % 2 == 1 {
            Family::Pplus
        } else {
            Family::Pminus
        };
        if expected != plan.family {
            return Err(Error::InvalidPlan(format!(
                "{plus_factors} P+(3) factors give family {}, plan asks for {}",
                expected.name(),
                plan.family.name()
            )));
        }
    }

    let head = plan.head.graph();
    let mut chained = (head.rank2(), head.ones_in_colspace());
    let mut graph = head;
    for f in factors {
        let (r, ones) = (f.rank2(), f.ones_in_colspace());
        chained = (predict_from(chained.0, chained.1, r, ones), chained.1 || ones);
        graph = seidel_product(&graph, f);
    }

    let rank = graph.rank2();
    let predicted = plan.predicted_rank();
    if rank != predicted || rank != chained.0 {
        return Err(Error::ConstructionCheck(format!(
            "2-rank {rank}, closed form {predicted}, chained prediction {}",
            chained.0
        )));
    }

    let srg = match plan.family {
        Family::P0 => {
            let iso = *graph
                .isolated_vertices()
                .first()
                .ok_or_else(|| Error::ConstructionCheck("no isolated vertex".to_string()))?;
            graph.drop_vertex(iso)?
        }
        _ => graph.clone(),
    };
    let target = plan.target_params();
    match check_srg(&srg) {
        Some(p) if p == target => {}
        other => {
            return Err(Error::ConstructionCheck(format!(
                "parameters {other:?}, expected {target}"
            )))
        }
    }
    Ok(Construction {
        graph,
        srg,
        params: target,
        rank,
        chained_prediction: chained.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{k1, lattice4, sp, two_k2};
    use crate::hadamard::{graph_of, h1, h2, hadamard_of, kron};
    use alloc::vec;

    fn k2_plus_k1() -> Graph {
        Graph::from_edges(3, &[(0, 1)]).unwrap()
    }

    #[test]
    fn lattice_from_product() {
        let l = seidel_product(&two_k2(), &two_k2());
        assert_eq!(check_srg(&l), Some(SrgParams::new(16, 6, 2, 2)));
        assert_eq!(l.label(5), Some("2,2"));
    }

    #[test]
    fn product_matches_kronecker_of_hadamards() {
        let (ga, gb) = (graph_of(&h1()).unwrap(), graph_of(&h2()).unwrap());
        let (h, ok) = hadamard_of(&seidel_product(&ga, &gb));
        assert!(ok);
        assert_eq!(h, kron(&h1(), &h2()));
    }

    #[test]
    fn k1_is_a_unit() {
        let g = lattice4();
        assert_eq!(seidel_product(&k1(), &g).adj(), g.adj());
        assert_eq!(seidel_product(&g, &k1()).adj(), g.adj());
    }

    #[test]
    fn rank_predictions() {
        assert_eq!(predicted_2rank(&two_k2(), &two_k2()), 6);
        assert_eq!(lattice4().rank2(), 6);
        let a = k2_plus_k1();
        assert_eq!(predicted_2rank(&a, &a), 4);
        assert_eq!(seidel_product(&a, &a).rank2(), 4);
        let shr = crate::graphs::shrikhande();
        assert_eq!(predicted_2rank(&shr, &two_k2()), 8);
        assert_eq!(named_graph("g'-3").unwrap().rank2(), 8);
    }

    #[test]
    fn ones_in_product_colspace() {
        let a = k2_plus_k1();
        assert!(ones_in_colspace_product(&two_k2(), &a));
        assert!(!ones_in_colspace_product(&a, &a));
        assert!(!seidel_product(&a, &a).ones_in_colspace());
        assert!(ones_in_colspace_product(&two_k2(), &two_k2()));
    }

    #[test]
    fn named_graphs() {
        let gm = named_graph("g-3").unwrap();
        assert_eq!(check_srg(&gm), Some(SrgParams::new(64, 28, 12, 12)));
        assert_eq!(gm.rank2(), 8);
        let gp = named_graph("g+3").unwrap();
        assert_eq!(check_srg(&gp), Some(SrgParams::new(64, 36, 20, 20)));
        assert_eq!(gp.label_index("(1,1,1)").unwrap(), 0);
        assert_eq!(gp.label_index("(2,3,4)").unwrap(), 16 + 8 + 3);
        let clebsch = named_graph("clebsch").unwrap();
        assert_eq!(clebsch.adj(), graph_of(&kron(&h1(), &h2())).unwrap().adj());
        assert_eq!(
            named_graph("nope"),
            Err(Error::UnknownGraphName("nope".into()))
        );
        for g in NamedGraph::ALL {
            assert_eq!(g.as_str().parse::<NamedGraph>().unwrap(), g);
        }
    }

    #[test]
    fn g_minus_3_is_hadamard_graph() {
        let h = kron(&kron(&h1(), &h1()), &h1());
        assert_eq!(graph_of(&h).unwrap().adj(), named_graph("g-3").unwrap().adj());
        let h = kron(&kron(&h1(), &h1()), &h2());
        assert_eq!(graph_of(&h).unwrap().adj(), named_graph("g+3").unwrap().adj());
    }

    #[test]
    fn plan_validation() {
        assert!(ProductPlan::new(Family::P0, 3, vec![6]).is_ok());
        assert!(ProductPlan::new(Family::P0, 3, vec![7]).is_err());
        assert!(ProductPlan::new(Family::P0, 3, vec![26]).is_err());
        assert!(ProductPlan::new(Family::Pminus, 4, vec![]).is_err());
        assert!(ProductPlan::new(Family::Pplus, 2, vec![]).is_err());
        let p = ProductPlan::new(Family::Pminus, 4, vec![8]).unwrap();
        assert_eq!(p.head, Head::TwoK2);
        assert_eq!(p.predicted_rank(), 10);
        let p = ProductPlan::new(Family::Pplus, 6, vec![8, 8]).unwrap();
        assert_eq!(p.head, Head::K1);
        assert_eq!(p.predicted_rank(), 14);
    }

    #[test]
    fn normalized_heads() {
        let g = Head::NormalizedHadamard { exponent: 1 }.graph();
        assert_eq!(g.isolated_vertices(), vec![0]);
        assert_eq!(g.rank2(), 2);
        let g = Head::NormalizedHadamard { exponent: 2 }.graph();
        assert_eq!(g.rank2(), 4);
        let srg = g.drop_vertex(0).unwrap();
        assert_eq!(check_srg(&srg), srg_params(Family::P0, 2).ok());
    }

    #[test]
    fn single_level_p0_construction() {
        let plan = ProductPlan::new(Family::P0, 3, vec![6]).unwrap();
        let factor = sp(3).unwrap().add_isolated();
        let c = theorem_main_construct(&plan, &[factor]).unwrap();
        assert_eq!(c.rank, 6);
        assert_eq!(c.params, SrgParams::new(63, 32, 16, 16));
    }

    #[test]
    fn construction_rejects_mismatches() {
        let plan = ProductPlan::new(Family::Pminus, 4, vec![10]).unwrap();
        let g = named_graph("g-3").unwrap();
        assert!(matches!(
            theorem_main_construct(&plan, core::slice::from_ref(&g)),
            Err(Error::InvalidPlan(_))
        ));
        let plan = ProductPlan::new(Family::Pplus, 4, vec![8]).unwrap();
        assert!(theorem_main_construct(&plan, core::slice::from_ref(&g)).is_err());
        let plan = ProductPlan::new(Family::P0, 3, vec![8]).unwrap();
        assert!(theorem_main_construct(&plan, &[g]).is_err());
        let plan = ProductPlan::new(Family::Pminus, 4, vec![8]).unwrap();
        assert!(theorem_main_construct(&plan, &[]).is_err());
    }
}
