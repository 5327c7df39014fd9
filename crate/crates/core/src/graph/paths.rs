use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Vertex};

/// Old-to-new vertex map produced by deletions; `None` marks removed vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relabel {
    pub old_to_new: Vec<Option<Vertex>>,
}

impl Relabel {
    pub fn map(&self, v: Vertex) -> Option<Vertex> {
        self.old_to_new.get(v).copied().flatten()
    }

    pub fn new_to_old(&self) -> Vec<Vertex> {
        let mut out = vec![0; self.old_to_new.iter().flatten().count()];
        for (old, new) in self.old_to_new.iter().enumerate() {
            if let Some(new) = new {
                out[*new] = old;
            }
        }
        out
    }
}

/// A path hanging from a major vertex.
///
/// `vertices` runs from the free (degree one) end toward `attachment`; every
/// listed vertex has degree at most two and `attachment` keeps degree at
/// least two once the path is removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantPath {
    pub vertices: Vec<Vertex>,
    pub attachment: Vertex,
}

/// A cycle whose only major vertex has degree exactly three.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantCycle {
    /// Cycle vertices in traversal order, starting at `major`.
    pub vertices: Vec<Vertex>,
    pub major: Vertex,
}

fn walk_from_pendant(g: &Graph, start: Vertex) -> (Vec<Vertex>, Option<Vertex>) {
    let mut path = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).next();
    while let Some(v) = cur {
        if g.degree(v) != 2 {
            return (path, Some(v));
        }
        path.push(v);
        let next = g.neighbors(v).find(|&w| w != prev);
        prev = v;
        cur = next;
    }
    (path, None)
}

/// Every maximal pendant path, ordered by free-end vertex id.
///
/// A walk from a degree-one vertex through degree-two vertices that stops at
/// a vertex `u` is a pendant path exactly when `u` has degree at least three,
/// since `u` must keep degree two after the path is cut off. Walks ending in
/// another leaf (the graph is a path) yield nothing.
pub fn pendant_paths(g: &Graph) -> Result<Vec<PendantPath>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut out = Vec::new();
    for leaf in g.pendant_vertices() {
        let (vertices, end) = walk_from_pendant(g, leaf);
        if let Some(u) = end {
            if g.degree(u) >= 3 {
                out.push(PendantPath { vertices, attachment: u });
            }
        }
    }
    Ok(out)
}

/// Removes a pendant path, returning the remainder and the vertex relabeling.
pub fn delete_pendant_path(g: &Graph, p: &PendantPath) -> Result<(Graph, Relabel), GraphError> {
    let valid = pendant_paths(g)?.iter().any(|q| q == p);
    if !valid {
        return Err(GraphError::NotAPendantPath);
    }
    Ok(g.remove_vertices(&p.vertices))
}

/// All pendant cycles, one per major vertex, ordered by that vertex.
pub fn pendant_cycles(g: &Graph) -> Result<Vec<PendantCycle>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut out = Vec::new();
    for u in (0..g.vertex_count()).filter(|&u| g.degree(u) == 3) {
        for first in g.neighbors(u) {
            if g.degree(first) != 2 {
                continue;
            }
            let mut vertices = vec![u, first];
            let mut prev = u;
            let mut cur = first;
            let closed = loop {
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree two");
                if next == u {
                    break true;
                }
                if g.degree(next) != 2 {
                    break false;
                }
                vertices.push(next);
                prev = cur;
                cur = next;
            };
            if closed {
                // orient so the second vertex is the smaller neighbor of u
                if vertices[1] > *vertices.last().expect("nonempty") {
                    vertices[1..].reverse();
                }
                out.push(PendantCycle { vertices, major: u });
                break;
            }
        }
    }
    Ok(out)
}
