//! Structural recognition of `λ`-optimal line graphs, with certificates.
//!
//! A connected non-cycle `G` is `λ`-optimal when
//! `m_{L(G)}(λ) = 2c(G) + p(G) - 1`. The optimal graphs are paths and trees
//! with congruent pendant distances, trees carrying one or more pendant
//! cycles of suitable orders on distinct pendant vertices, and two cycles
//! joined by an edge. [`StructuralProfile`] does the graph-dependent work once;
//! [`StructuralProfile::certify`] then decides each `λ` by modular arithmetic.

mod decompose;
mod probe;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use decompose::{pendant_cycle_decompose, CycleAttachment, DecomposeFailure, PendantCycleDecomposition};
pub use probe::{edge_reduction_probe, edge_reduction_sweep, qualifying_edge, EdgeReductionProbe};

use crate::graph::{Graph, LowLink, Vertex};
use crate::line_graph::BlockStructure;
use crate::spectra::{candidates, AlgebraicEigenvalue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizeError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is a cycle; optimality is defined only for non-cycles")]
    IsACycle,
    #[error("graph is not a path")]
    NotAPath,
    #[error("graph is not a tree")]
    NotATree,
    #[error("no edge lies on a cycle next to a major vertex")]
    NoQualifyingEdge,
}

/// First violated condition, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    LambdaForm,
    Shape,
    CycleOrder,
    TreeCongruence,
    PendantCount,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::LambdaForm => "lambda_form",
            Reason::Shape => "shape",
            Reason::CycleOrder => "cycle_order",
            Reason::TreeCongruence => "tree_congruence",
            Reason::PendantCount => "pendant_count",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case_tag", content = "parameters")]
pub enum Verdict {
    PathCase {
        i: u64,
        m: u64,
    },
    TreeCase {
        k: u64,
        q: u64,
        pendant_count: usize,
    },
    AttachedCycles {
        tree_vertices: Vec<Vertex>,
        cycle_orders: Vec<usize>,
        attachment_pendants: Vec<Vertex>,
        cycle_count: usize,
    },
    TwoCyclesEdge {
        n1: usize,
        n2: usize,
    },
    ManyCycles {
        tree_vertices: Vec<Vertex>,
        cycle_orders: Vec<usize>,
        cycle_count: usize,
        q: u64,
        k: u64,
    },
    NotOptimal {
        reason: Reason,
        detail: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    PathCase,
    TreeCase,
    AttachedCycles,
    TwoCyclesEdge,
    ManyCycles,
    NotOptimal,
}

impl CaseTag {
    pub const OPTIMAL: [CaseTag; 5] =
        [CaseTag::PathCase, CaseTag::TreeCase, CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge, CaseTag::ManyCycles];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::PathCase => "PathCase",
            CaseTag::TreeCase => "TreeCase",
            CaseTag::AttachedCycles => "AttachedCycles",
            CaseTag::TwoCyclesEdge => "TwoCyclesEdge",
            CaseTag::ManyCycles => "ManyCycles",
            CaseTag::NotOptimal => "NotOptimal",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [CaseTag::NotOptimal]
            .into_iter()
            .chain(CaseTag::OPTIMAL)
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown case tag `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityCertificate {
    pub lambda: AlgebraicEigenvalue,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl OptimalityCertificate {
    pub fn is_optimal(&self) -> bool {
        !matches!(self.verdict, Verdict::NotOptimal { .. })
    }

    pub fn case_tag(&self) -> CaseTag {
        match self.verdict {
            Verdict::PathCase { .. } => CaseTag::PathCase,
            Verdict::TreeCase { .. } => CaseTag::TreeCase,
            Verdict::AttachedCycles { .. } => CaseTag::AttachedCycles,
            Verdict::TwoCyclesEdge { .. } => CaseTag::TwoCyclesEdge,
            Verdict::ManyCycles { .. } => CaseTag::ManyCycles,
            Verdict::NotOptimal { .. } => CaseTag::NotOptimal,
        }
    }

    pub fn reason(&self) -> Option<Reason> {
        match self.verdict {
            Verdict::NotOptimal { reason, .. } => Some(reason),
            _ => None,
        }
    }

    fn not_optimal(lambda: AlgebraicEigenvalue, reason: Reason, detail: impl Into<String>) -> Self {
        Self { lambda, verdict: Verdict::NotOptimal { reason, detail: detail.into() } }
    }
}

/// A deliberately wrong congruence constant, for checking that the
/// verification harness notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mutation {
    /// Path pendant distance required `≡ b - 2` instead of `b - 1`.
    PathResidueMinusOne,
    /// Tree pendant distances required `≡ b - 2` instead of `b - 1`.
    TreeResidueMinusOne,
    /// Cycle orders for odd `a` required to be multiples of `b` instead of `2b`.
    CycleModulusHalved,
}

impl Mutation {
    pub const ALL: [Mutation; 3] =
        [Mutation::PathResidueMinusOne, Mutation::TreeResidueMinusOne, Mutation::CycleModulusHalved];
}

/// Every candidate `λ` for `g`: canonical values whose minimal polynomial
/// degree is at most `|E(g)| = |V(L(g))|`, sorted by `(b, a)`.
pub fn lambda_candidates(g: &Graph) -> Vec<AlgebraicEigenvalue> {
    candidates(g.edge_count())
}

/// Pendant-distance data of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeShape {
    pub vertex_count: usize,
    pub pendant_count: usize,
    /// Distinct distances between pairs of distinct pendant vertices.
    pub pendant_distances: Vec<usize>,
}

impl TreeShape {
    pub fn of(t: &Graph) -> Self {
        let pendants = t.pendant_vertices();
        let mut dists = Vec::new();
        for (i, &u) in pendants.iter().enumerate() {
            let d = t.bfs_distances(u);
            dists.extend(pendants[i + 1..].iter().map(|&v| d[v].expect("tree is connected")));
        }
        dists.sort_unstable();
        dists.dedup();
        Self { vertex_count: t.vertex_count(), pendant_count: pendants.len(), pendant_distances: dists }
    }

    /// Path or tree verdict, or the reason the tree is not `λ`-optimal.
    fn certify(&self, l: AlgebraicEigenvalue, mutation: Option<Mutation>) -> Result<Verdict, (Reason, String)> {
        let b = l.b;
        match self.pendant_count {
            2 => {
                let residue = if mutation == Some(Mutation::PathResidueMinusOne) { (b + b - 2) % b } else { b - 1 };
                let d = self.pendant_distances[0] as u64;
                if d % b == residue {
                    Ok(Verdict::PathCase { i: l.a, m: b - 1 })
                } else {
                    Err((Reason::TreeCongruence, format!("path pendant distance {d} ≢ {residue} (mod {b})")))
                }
            }
            p if p >= 3 => {
                if l.a % 2 == 1 {
                    return Err((Reason::LambdaForm, format!("{p} pendant vertices need an even numerator")));
                }
                let residue = if mutation == Some(Mutation::TreeResidueMinusOne) { (b + b - 2) % b } else { b - 1 };
                match self.pendant_distances.iter().find(|&&d| d as u64 % b != residue) {
                    None => Ok(Verdict::TreeCase { k: l.a / 2, q: (b - 1) / 2, pendant_count: p }),
                    Some(d) => Err((Reason::TreeCongruence, format!("pendant distance {d} ≢ {residue} (mod {b})"))),
                }
            }
            p => Err((Reason::Shape, format!("tree with {p} pendant vertices"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Shape {
    Tree(TreeShape),
    Attached { decomposition: PendantCycleDecomposition, tree: TreeShape },
    TwoCycles { n1: usize, n2: usize },
    Broken(DecomposeFailure),
}

/// Everything about `G` the optimality test needs, independent of `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub cyclomatic_number: usize,
    pub pendant_count: usize,
    shape: Shape,
}

impl StructuralProfile {
    pub fn new(g: &Graph) -> Result<Self, CharacterizeError> {
        if g.edge_count() == 0 {
            return Err(CharacterizeError::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(CharacterizeError::Disconnected);
        }
        if g.is_cycle() {
            return Err(CharacterizeError::IsACycle);
        }
        let shape = if g.is_tree() {
            Shape::Tree(TreeShape::of(g))
        } else {
            match pendant_cycle_decompose(g) {
                Ok(decomposition) => {
                    let tree = TreeShape::of(&decomposition.tree);
                    Shape::Attached { decomposition, tree }
                }
                Err(DecomposeFailure::TwoCyclesShape { n1, n2 }) => Shape::TwoCycles { n1, n2 },
                Err(f) => Shape::Broken(f),
            }
        };
        Ok(Self {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            cyclomatic_number: g.cyclomatic_number(),
            pendant_count: g.pendant_count(),
            shape,
        })
    }

    /// `2c + p - 1`.
    pub fn bound(&self) -> usize {
        2 * self.cyclomatic_number + self.pendant_count - 1
    }

    pub fn decomposition(&self) -> Option<&PendantCycleDecomposition> {
        match &self.shape {
            Shape::Attached { decomposition, .. } => Some(decomposition),
            _ => None,
        }
    }

    pub fn certify(&self, l: AlgebraicEigenvalue) -> OptimalityCertificate {
        self.certify_with(l, None)
    }

    pub fn certify_with(&self, l: AlgebraicEigenvalue, mutation: Option<Mutation>) -> OptimalityCertificate {
        let c = self.cyclomatic_number;
        let fail = |reason, detail: String| OptimalityCertificate::not_optimal(l, reason, detail);
        if c >= 3 && l.a % 2 == 1 {
            return fail(Reason::LambdaForm, format!("{c} cycles need an even numerator"));
        }
        let cycle_modulus = if l.a % 2 == 1 && mutation != Some(Mutation::CycleModulusHalved) { 2 * l.b } else { l.b };
        let orders_ok = |orders: &[usize]| orders.iter().find(|&&o| !(o as u64).is_multiple_of(cycle_modulus)).copied();
        let verdict = match &self.shape {
            Shape::Tree(t) => t.certify(l, mutation),
            Shape::Broken(f) => Err((Reason::Shape, f.to_string())),
            Shape::TwoCycles { n1, n2 } => match orders_ok(&[*n1, *n2]) {
                Some(o) => Err((Reason::CycleOrder, format!("cycle order {o} not a multiple of {cycle_modulus}"))),
                None => Ok(Verdict::TwoCyclesEdge { n1: *n1, n2: *n2 }),
            },
            Shape::Attached { decomposition: d, tree } => {
                let orders: Vec<usize> = d.attachments.iter().map(|a| a.order).collect();
                if tree.pendant_count >= 3 && l.a % 2 == 1 {
                    Err((Reason::LambdaForm, format!("tree with {} pendant vertices needs an even numerator", tree.pendant_count)))
                } else if let Some(o) = orders_ok(&orders) {
                    Err((Reason::CycleOrder, format!("cycle order {o} not a multiple of {cycle_modulus}")))
                } else if let Err(e) = tree.certify(l, mutation) {
                    Err(e)
                } else if tree.pendant_count < c {
                    Err((Reason::PendantCount, format!("p(T) = {} < c = {c}", tree.pendant_count)))
                } else if c <= 2 {
                    Ok(Verdict::AttachedCycles {
                        tree_vertices: d.tree_vertices.clone(),
                        cycle_orders: orders,
                        attachment_pendants: d.attachments.iter().map(|a| a.tree_pendant).collect(),
                        cycle_count: c,
                    })
                } else {
                    Ok(Verdict::ManyCycles {
                        tree_vertices: d.tree_vertices.clone(),
                        cycle_orders: orders,
                        cycle_count: c,
                        q: (l.b - 1) / 2,
                        k: l.a / 2,
                    })
                }
            }
        };
        match verdict {
            Ok(verdict) => OptimalityCertificate { lambda: l, verdict },
            Err((reason, detail)) => fail(reason, detail),
        }
    }
}

/// Structural optimality decision for a connected non-cycle graph.
pub fn optimal_certificate(g: &Graph, l: AlgebraicEigenvalue) -> Result<OptimalityCertificate, CharacterizeError> {
    Ok(StructuralProfile::new(g)?.certify(l))
}

/// Certificate for a path: optimal iff its pendant distance is `≡ b - 1 (mod b)`.
pub fn path_certificate(t: &Graph, l: AlgebraicEigenvalue) -> Result<OptimalityCertificate, CharacterizeError> {
    if !t.is_path() || t.vertex_count() < 2 {
        return Err(CharacterizeError::NotAPath);
    }
    optimal_certificate(t, l)
}

pub fn tree_certificate(t: &Graph, l: AlgebraicEigenvalue) -> Result<OptimalityCertificate, CharacterizeError> {
    if !t.is_tree() {
        return Err(CharacterizeError::NotATree);
    }
    optimal_certificate(t, l)
}

/// The block-distance conditions on `L(T)` for a tree with at least three
/// pendant vertices: `λ = 2cos(2kπ/(2q+1))`; `d(v, B) + 1 ≡ q` for every
/// external block `B` and every external vertex `v` of `L(T)`; and
/// `d(B1, B2) ≡ 2q (mod 2q+1)` for distinct major blocks.
pub fn block_distance_conditions(blocks: &BlockStructure, l: AlgebraicEigenvalue) -> bool {
    if l.a % 2 == 1 {
        return false;
    }
    let b = l.b as usize;
    let q = (b - 1) / 2;
    let vertex_ok = blocks.external_blocks.iter().all(|&blk| {
        let j = blocks.major_position(blk).expect("external blocks are major");
        blocks.vertex_distances.iter().all(|row| (row[j] + 1) % b == q)
    });
    let m = blocks.major_blocks.len();
    let block_ok = (0..m).all(|i| (i + 1..m).all(|j| blocks.block_distances[i][j] % b == b - 1));
    vertex_ok && block_ok
}

/// Whether some edge on a cycle joins two major vertices.
pub fn has_adjacent_majors_on_cycle(g: &Graph) -> bool {
    let low = LowLink::new(g);
    let mut bridge = vec![false; g.edge_count()];
    for &e in &low.bridges {
        bridge[e] = true;
    }
    g.edges().iter().enumerate().any(|(e, &(u, v))| !bridge[e] && g.degree(u) >= 3 && g.degree(v) >= 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line_graph::{block_structure, line_graph};

    fn lam(a: u64, b: u64) -> AlgebraicEigenvalue {
        AlgebraicEigenvalue::new(a, b).unwrap()
    }

    fn tag(g: &Graph, a: u64, b: u64) -> CaseTag {
        optimal_certificate(g, lam(a, b)).unwrap().case_tag()
    }

    #[test]
    fn paths() {
        let c = path_certificate(&Graph::path(4), lam(1, 2)).unwrap();
        assert_eq!(c.verdict, Verdict::PathCase { i: 1, m: 1 });
        assert_eq!(tag(&Graph::path(4), 2, 3), CaseTag::NotOptimal);
        assert_eq!(tag(&Graph::path(5), 1, 4), CaseTag::NotOptimal);
        assert_eq!(tag(&Graph::path(4), 1, 4), CaseTag::PathCase);
        assert_eq!(path_certificate(&Graph::star(3), lam(1, 2)), Err(CharacterizeError::NotAPath));
    }

    #[test]
    fn trees() {
        let k13 = Graph::star(3);
        let c = tree_certificate(&k13, lam(2, 3)).unwrap();
        assert_eq!(c.verdict, Verdict::TreeCase { k: 1, q: 1, pendant_count: 3 });
        assert_eq!(tree_certificate(&k13, lam(1, 2)).unwrap().reason(), Some(Reason::LambdaForm));
        assert_eq!(tag(&Graph::spider(&[2, 2, 2]), 2, 5), CaseTag::TreeCase);
        assert_eq!(tag(&Graph::spider(&[2, 2, 2]), 4, 5), CaseTag::TreeCase);
        assert_eq!(tree_certificate(&Graph::spider(&[2, 2, 2]), lam(2, 3)).unwrap().reason(), Some(Reason::TreeCongruence));
        assert_eq!(tree_certificate(&Graph::cycle(4), lam(1, 2)), Err(CharacterizeError::NotATree));
    }

    #[test]
    fn cyclic_cases() {
        let c4_tail = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let cert = optimal_certificate(&c4_tail, lam(1, 2)).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::AttachedCycles { tree_vertices: vec![4, 5], cycle_orders: vec![4], attachment_pendants: vec![4], cycle_count: 1 }
        );
        let two_c4 = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)]).unwrap();
        assert_eq!(optimal_certificate(&two_c4, lam(1, 2)).unwrap().verdict, Verdict::TwoCyclesEdge { n1: 4, n2: 4 });
        assert_eq!(optimal_certificate(&two_c4, lam(1, 4)).unwrap().reason(), Some(Reason::CycleOrder));
        // B(4,1,4): two C_4 sharing a vertex
        let b414 = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
        assert_eq!(optimal_certificate(&b414, lam(1, 2)).unwrap().reason(), Some(Reason::Shape));
        assert_eq!(optimal_certificate(&Graph::cycle(5), lam(1, 2)), Err(CharacterizeError::IsACycle));
        assert_eq!(
            optimal_certificate(&Graph::empty(2).disjoint_union(&Graph::path(2)), lam(1, 2)),
            Err(CharacterizeError::Disconnected)
        );
    }

    #[test]
    fn many_cycles_gate() {
        // K_{1,3} with a triangle joined to each leaf
        let mut edges = vec![(0, 1), (0, 2), (0, 3)];
        for (leaf, base) in [(1, 4), (2, 7), (3, 10)] {
            edges.extend([(base, base + 1), (base + 1, base + 2), (base + 2, base), (leaf, base)]);
        }
        let g = Graph::new(13, &edges).unwrap();
        let cert = optimal_certificate(&g, lam(2, 3)).unwrap();
        assert_eq!(cert.case_tag(), CaseTag::ManyCycles);
        assert_eq!(optimal_certificate(&g, lam(1, 3)).unwrap().reason(), Some(Reason::LambdaForm));
    }

    #[test]
    fn mutations_change_verdicts() {
        let p = StructuralProfile::new(&Graph::path(3)).unwrap();
        assert_eq!(p.certify(lam(1, 2)).case_tag(), CaseTag::NotOptimal);
        assert_eq!(p.certify_with(lam(1, 2), Some(Mutation::PathResidueMinusOne)).case_tag(), CaseTag::PathCase);
        let s = StructuralProfile::new(&Graph::star(3)).unwrap();
        assert!(!s.certify_with(lam(2, 3), Some(Mutation::TreeResidueMinusOne)).is_optimal());
        let two_c3 = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        let t = StructuralProfile::new(&two_c3).unwrap();
        assert!(!t.certify(lam(1, 3)).is_optimal());
        assert!(t.certify_with(lam(1, 3), Some(Mutation::CycleModulusHalved)).is_optimal());
    }

    #[test]
    fn certificate_json() {
        let cert = optimal_certificate(&Graph::star(3), lam(2, 3)).unwrap();
        let v = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["case_tag"], "TreeCase");
        assert_eq!(v["lambda"]["a"], 2);
        assert_eq!(v["parameters"]["q"], 1);
        let back: OptimalityCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, cert);
        let bad = optimal_certificate(&Graph::star(3), lam(1, 2)).unwrap();
        let v = serde_json::to_value(&bad).unwrap();
        assert_eq!(v["parameters"]["reason"], "lambda_form");
    }

    #[test]
    fn block_conditions() {
        let bs = |g: &Graph| block_structure(&line_graph(g).unwrap().line).unwrap();
        assert!(block_distance_conditions(&bs(&Graph::star(3)), lam(2, 3)));
        assert!(block_distance_conditions(&bs(&Graph::spider(&[2, 2, 2])), lam(2, 5)));
        assert!(!block_distance_conditions(&bs(&Graph::spider(&[2, 2, 2])), lam(2, 3)));
        assert!(!block_distance_conditions(&bs(&Graph::star(3)), lam(1, 3)));
        // center block with a single external vertex: the far leaf still counts
        let t = Graph::new(
            13,
            &[(6, 7), (5, 8), (4, 9), (7, 10), (8, 10), (9, 10), (2, 11), (3, 11), (6, 11), (0, 12), (1, 12), (5, 12)],
        )
        .unwrap();
        assert!(!block_distance_conditions(&bs(&t), lam(2, 3)));
    }

    #[test]
    fn adjacent_majors() {
        // triangle with a tail at two of its vertices
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
        assert!(has_adjacent_majors_on_cycle(&g));
        let two_c3 = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert!(!has_adjacent_majors_on_cycle(&two_c3));
    }
}
