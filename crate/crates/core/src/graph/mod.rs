//! Undirected simple graphs with stable edge identifiers.
//!
//! A [`Graph`] keeps a global edge list (edge id = position) next to sorted
//! per-vertex neighbor lists. Values are immutable once built; every
//! structural operation returns a fresh graph.

mod canon;
pub mod format;
mod lowlink;
mod paths;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use lowlink::{biconnected_components, LowLink};
pub use paths::{
    delete_pendant_path, pendant_cycles, pendant_paths, PendantCycle, PendantPath, Relabel,
};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {0}) is a loop")]
    InvalidEdge(Vertex),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: Vertex, vertex_count: usize },
    #[error("vertices {0} and {1} are in different components")]
    Unreachable(Vertex, Vertex),
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("the given vertex sequence is not a pendant path of the graph")]
    NotAPendantPath,
    #[error("edge id {0} out of range")]
    InvalidEdgeId(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    // sorted by neighbor; (neighbor, edge id)
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph, assigning edge ids in input order.
    ///
    /// Endpoints are stored as `(min, max)`.
    pub fn new(vertex_count: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); vertex_count];
        let mut edges = Vec::with_capacity(edge_list.len());
        for (id, &(u, v)) in edge_list.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::InvalidVertex { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::InvalidEdge(u));
            }
            let (a, b) = (u.min(v), u.max(v));
            edges.push((a, b));
            adjacency[a].push((b, id));
            adjacency[b].push((a, id));
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                let (a, b) = (v.min(w[0].0), v.max(w[0].0));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Self { vertex_count, edges, adjacency })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new(), adjacency: vec![Vec::new(); vertex_count] }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::new(n, &edges).expect("complete graph edges are simple")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are simple")
    }

    /// Spider: a center with one hanging path per entry of `legs`.
    pub fn spider(legs: &[usize]) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::new(next, &edges).expect("spider edges are simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::new(10, &edges).expect("petersen edges are simple")
    }

    /// Vertex-disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(shift + other.vertex_count, &edges).expect("union of simple graphs is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// Incident `(neighbor, edge id)` pairs, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Equality up to edge-id order.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.vertex_count == other.vertex_count && a == b
    }

    pub fn pendant_vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn pendant_count(&self) -> usize {
        (0..self.vertex_count).filter(|&v| self.degree(v) == 1).count()
    }

    pub fn major_vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count).filter(|&v| self.degree(v) >= 3).collect()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.component_count() == 1
    }

    /// |E| - |V| + (number of components).
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count
    }

    pub fn is_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.is_connected()
            && self.adjacency.iter().all(|list| list.len() == 2)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adjacency.iter().all(|list| list.len() <= 2)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Multi-source BFS: distance from the nearest vertex in `sources`.
    pub fn bfs_from_set(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced subgraph on the vertices flagged in `keep`, densely renumbered.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Relabel) {
        let mut old_to_new = vec![None; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if keep[v] {
                old_to_new[v] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        let graph = Graph::new(next, &edges).expect("induced subgraph of a simple graph");
        (graph, Relabel { old_to_new })
    }

    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Relabel) {
        let mut keep = vec![true; self.vertex_count];
        for &v in removed {
            keep[v] = false;
        }
        self.induced_subgraph(&keep)
    }

    /// Same vertex set with one edge dropped; later edge ids shift down by one.
    pub fn remove_edge(&self, id: EdgeId) -> Result<Graph, GraphError> {
        if id >= self.edges.len() {
            return Err(GraphError::InvalidEdgeId(id));
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id)
            .map(|(_, &e)| e)
            .collect();
        Ok(Graph::new(self.vertex_count, &edges).expect("subgraph of a simple graph"))
    }

    /// Adds a fresh vertex joined to `targets`.
    pub fn with_vertex(&self, targets: &[Vertex]) -> Graph {
        let n = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(targets.iter().map(|&t| (t, n)));
        Graph::new(n + 1, &edges).expect("new vertex edges are simple")
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.vertex_count, &edges)
    }

    /// Applies `perm[old] = new` to every vertex.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.vertex_count, &edges).expect("relabeling preserves simplicity")
    }

    pub fn summarize(&self) -> StructureSummary {
        summarize(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub connected: bool,
    pub cyclomatic_number: usize,
    pub pendant_count: usize,
    pub pendant_vertices: Vec<Vertex>,
    pub major_vertices: Vec<Vertex>,
    pub is_cycle: bool,
    pub is_tree: bool,
    pub bridges: Vec<EdgeId>,
    pub cut_vertices: Vec<Vertex>,
}

pub fn summarize(g: &Graph) -> StructureSummary {
    let low = LowLink::new(g);
    let pendant_vertices = g.pendant_vertices();
    StructureSummary {
        connected: g.is_connected(),
        cyclomatic_number: g.cyclomatic_number(),
        pendant_count: pendant_vertices.len(),
        pendant_vertices,
        major_vertices: g.major_vertices(),
        is_cycle: g.is_cycle(),
        is_tree: g.is_tree(),
        bridges: low.bridges,
        cut_vertices: low.cut_vertices,
    }
}

/// Shortest-path length between `u` and `v`.
pub fn distance(g: &Graph, u: Vertex, v: Vertex) -> Result<usize, GraphError> {
    for w in [u, v] {
        if w >= g.vertex_count() {
            return Err(GraphError::InvalidVertex { vertex: w, vertex_count: g.vertex_count() });
        }
    }
    g.bfs_distances(u)[v].ok_or(GraphError::Unreachable(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_cycle_and_star() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = c4.summarize();
        assert_eq!(s.cyclomatic_number, 1);
        assert_eq!(s.pendant_count, 0);
        assert!(s.is_cycle && !s.is_tree && s.connected);
        assert!(s.bridges.is_empty() && s.cut_vertices.is_empty());

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = star.summarize();
        assert_eq!(s.pendant_count, 3);
        assert_eq!(s.major_vertices, vec![0]);
        assert_eq!(s.cut_vertices, vec![0]);
        assert!(s.is_tree);
        assert_eq!(s.bridges, vec![0, 1, 2]);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(3, &[(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(GraphError::InvalidEdge(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::InvalidVertex { vertex: 3, vertex_count: 3 })
        );
    }

    #[test]
    fn edge_ids_follow_input_order() {
        let g = Graph::new(4, &[(3, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[(2, 3), (0, 1), (1, 2)]);
        assert_eq!(g.edge_id(3, 2), Some(0));
        assert_eq!(g.edge_id(2, 1), Some(2));
        assert_eq!(g.edge_id(0, 3), None);
    }

    #[test]
    fn bowtie_summary() {
        // two triangles sharing vertex 0
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let s = g.summarize();
        assert_eq!(s.cyclomatic_number, 2);
        assert_eq!(s.pendant_count, 0);
        assert_eq!(s.cut_vertices, vec![0]);
        assert!(s.bridges.is_empty());
    }

    #[test]
    fn distances() {
        let star = Graph::star(3);
        assert_eq!(distance(&star, 1, 2), Ok(2));
        assert_eq!(distance(&Graph::path(5), 0, 4), Ok(4));
        assert_eq!(distance(&Graph::cycle(6), 0, 3), Ok(3));
        assert_eq!(distance(&Graph::cycle(6), 2, 2), Ok(0));
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance(&split, 0, 3), Err(GraphError::Unreachable(0, 3)));
        assert!(!split.is_connected());
        assert_eq!(split.cyclomatic_number(), 0);
    }

    #[test]
    fn induced_subgraph_renumbers_densely() {
        let g = Graph::cycle(5);
        let (h, map) = g.remove_vertices(&[2]);
        assert!(h.is_path());
        assert_eq!(map.old_to_new, vec![Some(0), Some(1), None, Some(2), Some(3)]);
    }
}
