//! Line graphs and the block vocabulary of line graphs of trees.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{biconnected_components, EdgeId, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineGraphError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("vertex {0} out of range")]
    InvalidVertex(Vertex),
    #[error("both arguments name the same block")]
    NoSecondBlock,
}

/// `L(G)` together with the correspondence between base edges and line vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphMap {
    pub base: Graph,
    pub line: Graph,
    pub edge_to_vertex: Vec<Vertex>,
    pub vertex_to_edge: Vec<EdgeId>,
}

/// Builds `L(g)`: line vertex `i` is base edge `i`, and two line vertices are
/// adjacent when their edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraphMap, LineGraphError> {
    if g.edge_count() == 0 {
        return Err(LineGraphError::EmptyGraph);
    }
    Ok(LineGraphMap {
        base: g.clone(),
        line: line_graph_unchecked(g),
        edge_to_vertex: (0..g.edge_count()).collect(),
        vertex_to_edge: (0..g.edge_count()).collect(),
    })
}

/// The bare line graph; an edgeless input gives the empty graph.
pub fn line_graph_unchecked(g: &Graph) -> Graph {
    let mut pairs = Vec::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                let (a, b) = (inc[i].1, inc[j].1);
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    Graph::new(g.edge_count(), &pairs).expect("two edges of a simple graph share at most one endpoint")
}

/// Blocks of a connected graph classified as in the block-graph picture of
/// `L(T)`.
///
/// A *major* block has at least three vertices. A vertex lying in exactly one
/// block is *external*. Every external vertex records its nearest major blocks
/// (all of them when several tie). A major block of order `s` is *external*
/// when at least `s - 1` external vertices name it as nearest, or when it is
/// the only major block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockStructure {
    pub blocks: Vec<Vec<Vertex>>,
    /// Indices into `blocks`.
    pub major_blocks: Vec<usize>,
    pub external_vertices: Vec<Vertex>,
    pub internal_vertices: Vec<Vertex>,
    /// Indices into `blocks`.
    pub external_blocks: Vec<usize>,
    /// Per external vertex (same order as `external_vertices`): nearest major
    /// blocks as indices into `blocks`.
    pub nearest_major_blocks: Vec<Vec<usize>>,
    /// `vertex_distances[i][j]`: distance from `external_vertices[i]` to
    /// `blocks[major_blocks[j]]`.
    pub vertex_distances: Vec<Vec<usize>>,
    /// `block_distances[i][j]`: distance between major blocks `i` and `j`
    /// (positions in `major_blocks`).
    pub block_distances: Vec<Vec<usize>>,
}

impl BlockStructure {
    pub fn is_external_block(&self, block: usize) -> bool {
        self.external_blocks.contains(&block)
    }

    /// Position of `block` within `major_blocks`.
    pub fn major_position(&self, block: usize) -> Option<usize> {
        self.major_blocks.iter().position(|&b| b == block)
    }
}

pub fn block_structure(lt: &Graph) -> Result<BlockStructure, LineGraphError> {
    if !lt.is_connected() {
        return Err(LineGraphError::Disconnected);
    }
    let blocks = biconnected_components(lt);
    let mut membership = vec![0usize; lt.vertex_count()];
    for block in &blocks {
        for &v in block {
            membership[v] += 1;
        }
    }
    let (external_vertices, internal_vertices): (Vec<Vertex>, Vec<Vertex>) =
        (0..lt.vertex_count()).partition(|&v| membership[v] == 1);
    let major_blocks: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i].len() >= 3).collect();

    let from_block: Vec<Vec<Option<usize>>> =
        major_blocks.iter().map(|&b| lt.bfs_from_set(&blocks[b])).collect();
    let vertex_distances: Vec<Vec<usize>> = external_vertices
        .iter()
        .map(|&v| from_block.iter().map(|d| d[v].expect("connected")).collect())
        .collect();
    let block_distances: Vec<Vec<usize>> = from_block
        .iter()
        .map(|d| {
            major_blocks
                .iter()
                .map(|&b| blocks[b].iter().map(|&u| d[u].expect("connected")).min().unwrap_or(0))
                .collect()
        })
        .collect();

    let nearest_major_blocks: Vec<Vec<usize>> = vertex_distances
        .iter()
        .map(|row| {
            let best = row.iter().copied().min();
            row.iter()
                .enumerate()
                .filter(|&(_, &d)| Some(d) == best)
                .map(|(j, _)| major_blocks[j])
                .collect()
        })
        .collect();

    let external_blocks = if major_blocks.len() == 1 {
        major_blocks.clone()
    } else {
        major_blocks
            .iter()
            .copied()
            .filter(|&b| {
                let owned = nearest_major_blocks.iter().filter(|near| near.contains(&b)).count();
                owned + 1 >= blocks[b].len()
            })
            .collect()
    };

    Ok(BlockStructure {
        blocks,
        major_blocks,
        external_vertices,
        internal_vertices,
        external_blocks,
        nearest_major_blocks,
        vertex_distances,
        block_distances,
    })
}

/// `min { d(v, u) : u ∈ block }`.
pub fn vertex_block_distance(lt: &Graph, v: Vertex, block: &[Vertex]) -> Result<usize, LineGraphError> {
    if v >= lt.vertex_count() {
        return Err(LineGraphError::InvalidVertex(v));
    }
    let dist = lt.bfs_distances(v);
    block
        .iter()
        .map(|&u| dist.get(u).copied().flatten().ok_or(LineGraphError::Disconnected))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .min()
        .ok_or(LineGraphError::NoSecondBlock)
}

/// `min { d(u1, u2) : u1 ∈ b1, u2 ∈ b2 }` for two distinct blocks.
pub fn block_block_distance(lt: &Graph, b1: &[Vertex], b2: &[Vertex]) -> Result<usize, LineGraphError> {
    if b1 == b2 {
        return Err(LineGraphError::NoSecondBlock);
    }
    if let Some(&v) = b1.iter().chain(b2).find(|&&v| v >= lt.vertex_count()) {
        return Err(LineGraphError::InvalidVertex(v));
    }
    let dist = lt.bfs_from_set(b1);
    b2.iter()
        .map(|&u| dist[u].ok_or(LineGraphError::Disconnected))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .min()
        .ok_or(LineGraphError::NoSecondBlock)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_form(a) == canonical_form(b)
    }

    #[test]
    fn small_line_graphs() {
        assert!(iso(&line_graph(&Graph::path(4)).unwrap().line, &Graph::path(3)));
        assert!(iso(&line_graph(&Graph::cycle(5)).unwrap().line, &Graph::cycle(5)));
        assert!(iso(&line_graph(&Graph::star(3)).unwrap().line, &Graph::complete(3)));
        assert_eq!(line_graph(&Graph::empty(3)), Err(LineGraphError::EmptyGraph));
        let map = line_graph(&Graph::petersen()).unwrap();
        assert_eq!(map.line.vertex_count(), 15);
        assert_eq!(map.line.edge_count(), 30);
        for (e, &v) in map.edge_to_vertex.iter().enumerate() {
            assert_eq!(map.vertex_to_edge[v], e);
        }
    }

    #[test]
    fn line_graph_adjacency_rule() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let l = line_graph(&g).unwrap().line;
        for a in 0..g.edge_count() {
            for b in 0..g.edge_count() {
                if a == b {
                    continue;
                }
                let (x, y) = g.edge(a);
                let (u, v) = g.edge(b);
                let shared = [x, y].iter().filter(|w| **w == u || **w == v).count();
                assert_eq!(l.has_edge(a, b), shared == 1);
            }
        }
    }

    #[test]
    fn star_block_structure() {
        let lt = line_graph(&Graph::star(3)).unwrap().line;
        let bs = block_structure(&lt).unwrap();
        assert_eq!(bs.blocks, vec![vec![0, 1, 2]]);
        assert_eq!(bs.major_blocks, vec![0]);
        assert_eq!(bs.external_blocks, vec![0]);
        assert_eq!(bs.external_vertices, vec![0, 1, 2]);
        assert!(bs.vertex_distances.iter().all(|row| row == &vec![0]));
    }

    #[test]
    fn spider_block_structure() {
        let lt = line_graph(&Graph::spider(&[2, 2, 2])).unwrap().line;
        let bs = block_structure(&lt).unwrap();
        assert_eq!(bs.major_blocks.len(), 1);
        let triangle = &bs.blocks[bs.major_blocks[0]];
        assert_eq!(triangle.len(), 3);
        assert_eq!(bs.external_vertices.len(), 3);
        for &v in &bs.external_vertices {
            assert_eq!(vertex_block_distance(&lt, v, triangle), Ok(1));
        }
        assert_eq!(vertex_block_distance(&lt, triangle[0], triangle), Ok(0));

        let lt5 = line_graph(&Graph::spider(&[5, 5, 5])).unwrap().line;
        let bs5 = block_structure(&lt5).unwrap();
        let tri = &bs5.blocks[bs5.major_blocks[0]];
        for &v in &bs5.external_vertices {
            assert_eq!(vertex_block_distance(&lt5, v, tri), Ok(4));
        }
    }

    #[test]
    fn path_has_no_major_block() {
        let lt = line_graph(&Graph::path(5)).unwrap().line;
        let bs = block_structure(&lt).unwrap();
        assert!(bs.major_blocks.is_empty());
        assert_eq!(bs.blocks.len(), 3);
        assert_eq!(bs.external_vertices, vec![0, 3]);
    }

    #[test]
    fn block_distances() {
        // centers 0 and 1 joined by a path with four edges
        let g = Graph::new(
            10,
            &[(0, 2), (2, 3), (3, 4), (4, 1), (0, 5), (0, 6), (1, 7), (1, 8), (8, 9)],
        )
        .unwrap();
        let lt = line_graph(&g).unwrap().line;
        let bs = block_structure(&lt).unwrap();
        assert_eq!(bs.major_blocks.len(), 2);
        let (b1, b2) = (&bs.blocks[bs.major_blocks[0]], &bs.blocks[bs.major_blocks[1]]);
        assert_eq!(block_block_distance(&lt, b1, b2), Ok(3));
        assert_eq!(bs.block_distances[0][1], 3);
        assert_eq!(block_block_distance(&lt, b1, b1), Err(LineGraphError::NoSecondBlock));
        assert_eq!(bs.external_blocks.len(), 2);

        // adjacent centers: their cliques share a cutpoint
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let lt = line_graph(&g).unwrap().line;
        let bs = block_structure(&lt).unwrap();
        assert_eq!(bs.block_distances[0][1], 0);
    }
}
