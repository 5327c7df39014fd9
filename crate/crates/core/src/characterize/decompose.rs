use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, LowLink, Vertex};

/// A cycle hanging off the remainder tree by one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleAttachment {
    /// Cycle vertices in traversal order, starting at the degree-3 vertex.
    pub cycle: Vec<Vertex>,
    pub order: usize,
    /// `(cycle vertex, tree vertex)`.
    pub joining_edge: (Vertex, Vertex),
    pub tree_pendant: Vertex,
}

/// `G` split into a tree `T` and pendant cycles joined to pendant vertices of
/// `T`. Vertex ids in `attachments` and `tree_vertices` refer to `G`; `tree`
/// uses the compact labels `0..tree_vertices.len()` in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantCycleDecomposition {
    pub tree: Graph,
    pub tree_vertices: Vec<Vertex>,
    pub attachments: Vec<CycleAttachment>,
}

impl PendantCycleDecomposition {
    /// Reassembles `T`, the cycles and the joining edges on the original ids.
    pub fn rebuild(&self, vertex_count: usize) -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = self
            .tree
            .edges()
            .iter()
            .map(|&(u, v)| (self.tree_vertices[u], self.tree_vertices[v]))
            .collect();
        for att in &self.attachments {
            let k = att.cycle.len();
            edges.extend((0..k).map(|i| (att.cycle[i], att.cycle[(i + 1) % k])));
            edges.push(att.joining_edge);
        }
        Graph::new(vertex_count, &edges).expect("decomposition describes a simple graph")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum DecomposeFailure {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no cycle")]
    Acyclic,
    #[error("graph is a cycle")]
    IsACycle,
    #[error("a block is neither a bridge nor a cycle")]
    NonCycleBlock,
    #[error("two cycles share vertex {vertex}")]
    SharedVertices { vertex: Vertex },
    #[error("a cycle has {count} major vertices")]
    MajorCount { count: usize },
    #[error("the major vertex {vertex} of a cycle has degree {degree}")]
    MajorDegree { vertex: Vertex, degree: usize },
    #[error("a cycle is joined directly to another cycle")]
    CycleToCycleEdge,
    #[error("tree vertex {vertex} carrying a cycle has tree degree {tree_degree}")]
    AttachmentNotPendant { vertex: Vertex, tree_degree: usize },
    #[error("tree vertex {vertex} carries more than one cycle")]
    DuplicateAttachment { vertex: Vertex },
    #[error("two cycles of orders {n1} and {n2} joined by an edge")]
    TwoCyclesShape { n1: usize, n2: usize },
}

/// Splits `g` into a remainder tree and pendant cycles, each cycle joined by a
/// single edge to its own pendant vertex of the tree.
pub fn pendant_cycle_decompose(g: &Graph) -> Result<PendantCycleDecomposition, DecomposeFailure> {
    if !g.is_connected() {
        return Err(DecomposeFailure::Disconnected);
    }
    if g.is_cycle() {
        return Err(DecomposeFailure::IsACycle);
    }
    if g.cyclomatic_number() == 0 {
        return Err(DecomposeFailure::Acyclic);
    }
    let n = g.vertex_count();
    let low = LowLink::new(g);
    let mut on_cycle: Vec<Option<usize>> = vec![None; n];
    let mut cycles: Vec<Vec<Vertex>> = Vec::new();
    for block in low.block_edges.iter().filter(|b| b.len() > 1) {
        let mut vs: Vec<Vertex> = block.iter().flat_map(|&e| <[Vertex; 2]>::from(g.edge(e))).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != block.len() {
            return Err(DecomposeFailure::NonCycleBlock);
        }
        for &v in &vs {
            if on_cycle[v].is_some() {
                return Err(DecomposeFailure::SharedVertices { vertex: v });
            }
            on_cycle[v] = Some(cycles.len());
        }
        cycles.push(vs);
    }

    let mut majors = Vec::with_capacity(cycles.len());
    for vs in &cycles {
        let m: Vec<Vertex> = vs.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
        if m.len() != 1 {
            return Err(DecomposeFailure::MajorCount { count: m.len() });
        }
        if g.degree(m[0]) != 3 {
            return Err(DecomposeFailure::MajorDegree { vertex: m[0], degree: g.degree(m[0]) });
        }
        majors.push(m[0]);
    }

    let outside: Vec<Vertex> = majors
        .iter()
        .enumerate()
        .map(|(ci, &u)| g.neighbors(u).find(|&w| on_cycle[w] != Some(ci)).expect("degree 3 with two cycle neighbors"))
        .collect();
    if outside.iter().any(|&y| on_cycle[y].is_some()) {
        if cycles.len() == 2 && n == cycles[0].len() + cycles[1].len() {
            return Err(DecomposeFailure::TwoCyclesShape { n1: cycles[0].len(), n2: cycles[1].len() });
        }
        return Err(DecomposeFailure::CycleToCycleEdge);
    }

    let keep: Vec<bool> = (0..n).map(|v| on_cycle[v].is_none()).collect();
    let (tree, relabel) = g.induced_subgraph(&keep);
    let tree_vertices = relabel.new_to_old();
    let mut attachments = Vec::with_capacity(cycles.len());
    let mut used = vec![false; n];
    for (ci, &u) in majors.iter().enumerate() {
        let y = outside[ci];
        let ty = relabel.map(y).expect("outside vertex is in the tree");
        if tree.degree(ty) != 1 {
            return Err(DecomposeFailure::AttachmentNotPendant { vertex: y, tree_degree: tree.degree(ty) });
        }
        if std::mem::replace(&mut used[y], true) {
            return Err(DecomposeFailure::DuplicateAttachment { vertex: y });
        }
        attachments.push(CycleAttachment {
            cycle: cycle_order_from(g, u, &on_cycle, ci),
            order: cycles[ci].len(),
            joining_edge: (u, y),
            tree_pendant: y,
        });
    }
    attachments.sort_by_key(|a| a.tree_pendant);
    Ok(PendantCycleDecomposition { tree, tree_vertices, attachments })
}

fn cycle_order_from(g: &Graph, start: Vertex, on_cycle: &[Option<usize>], ci: usize) -> Vec<Vertex> {
    let inside = |w: &Vertex| on_cycle[*w] == Some(ci);
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).filter(inside).min().expect("cycle vertex has cycle neighbors");
    while cur != start {
        order.push(cur);
        let next = g.neighbors(cur).filter(inside).find(|&w| w != prev).expect("cycle continues");
        prev = cur;
        cur = next;
    }
    order
}
