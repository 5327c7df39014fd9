use super::{EdgeId, Graph, Vertex};

/// Low-link data from one iterative depth-first traversal per component.
#[derive(Debug, Clone)]
pub struct LowLink {
    pub bridges: Vec<EdgeId>,
    pub cut_vertices: Vec<Vertex>,
    /// Edge sets of the biconnected components, in discovery order.
    pub block_edges: Vec<Vec<EdgeId>>,
}

impl LowLink {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut bridges = Vec::new();
        let mut block_edges = Vec::new();
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        let mut clock = 0;

        for root in 0..n {
            if order[root] != usize::MAX {
                continue;
            }
            order[root] = clock;
            low[root] = clock;
            clock += 1;
            let mut root_children = 0;
            // (vertex, parent edge, next incident index)
            let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
                let incident = g.incident(v);
                if *next < incident.len() {
                    let (w, e) = incident[*next];
                    *next += 1;
                    if Some(e) == parent_edge {
                        continue;
                    }
                    if order[w] == usize::MAX {
                        order[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        edge_stack.push(e);
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, Some(e), 0));
                    } else if order[w] < order[v] {
                        low[v] = low[v].min(order[w]);
                        edge_stack.push(e);
                    }
                } else {
                    stack.pop();
                    let Some(&(u, _, _)) = stack.last() else { continue };
                    let e = parent_edge.expect("non-root has a parent edge");
                    low[u] = low[u].min(low[v]);
                    if low[v] > order[u] {
                        bridges.push(e);
                    }
                    if low[v] >= order[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(f) = edge_stack.pop() {
                            block.push(f);
                            if f == e {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block_edges.push(block);
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        bridges.sort_unstable();
        let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
        Self { bridges, cut_vertices, block_edges }
    }
}

/// Vertex sets of the blocks (maximal subgraphs without cutpoints).
///
/// Isolated vertices are singleton blocks. Each block is sorted and the list
/// is ordered by smallest member.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let low = LowLink::new(g);
    let mut blocks: Vec<Vec<Vertex>> = low
        .block_edges
        .iter()
        .map(|edges| {
            let mut vs: Vec<Vertex> =
                edges.iter().flat_map(|&e| { let (a, b) = g.edge(e); [a, b] }).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    blocks.extend((0..g.vertex_count()).filter(|&v| g.degree(v) == 0).map(|v| vec![v]));
    blocks.sort();
    blocks
}
