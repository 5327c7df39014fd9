//! Canonical labeling by partition refinement plus individualization search.
//!
//! The canonical form is the lexicographically largest adjacency bit-matrix
//! over all leaves of the search tree. Automorphisms discovered at equivalent
//! leaves prune siblings in the same orbit and abandon subtrees that map onto
//! already explored ones. Orders up to 64 vertices are supported.

use super::{Graph, Vertex};

/// Adjacency rows (as bitsets) of the canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.rows[i] >> j & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges).expect("canonical rows describe a simple graph")
    }
}

type Partition = Vec<Vec<Vertex>>;

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    best: Option<(Vec<u64>, Vec<Vertex>, Vec<Vertex>)>, // (code, leaf order, path)
    automorphisms: Vec<Vec<Vertex>>,
}

fn refine(rows: &[u64], mut cells: Partition) -> Partition {
    loop {
        let mut split_any = false;
        'splitters: for s in 0..cells.len() {
            let mask = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next: Partition = Vec::with_capacity(cells.len() + 1);
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, Vertex)> =
                    cell.iter().map(|&v| ((rows[v] & mask).count_ones(), v)).collect();
                keyed.sort_by_key(|&(k, _)| k);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        let mut part: Vec<Vertex> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = i;
                    }
                }
                changed |= keyed.first().map(|f| f.0) != keyed.last().map(|l| l.0);
            }
            if changed {
                cells = next;
                split_any = true;
                break 'splitters;
            }
        }
        if !split_any {
            return cells;
        }
    }
}

fn leaf_code(rows: &[u64], order: &[Vertex]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = 0u64;
            let mut bits = rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                r |= 1 << (n - 1 - pos[w]);
                bits &= bits - 1;
            }
            r
        })
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller should unwind to `level`.
    fn visit(&mut self, cells: Partition, path: &mut Vec<Vertex>) -> Option<usize> {
        if cells.len() == self.n {
            let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(self.rows, &order);
            match &self.best {
                None => self.best = Some((code, order, path.clone())),
                Some((best_code, best_order, best_path)) => {
                    if code == *best_code {
                        // automorphism: vertex at position i here -> position i in best
                        let mut gamma = vec![0; self.n];
                        for (i, &v) in order.iter().enumerate() {
                            gamma[v] = best_order[i];
                        }
                        let common = path.iter().zip(best_path).take_while(|(a, b)| a == b).count();
                        self.automorphisms.push(gamma);
                        return Some(common);
                    } else if code > *best_code {
                        self.best = Some((code, order, path.clone()));
                    }
                }
            }
            return None;
        }

        let target = cells.iter().position(|c| c.len() > 1).expect("non-discrete partition");
        let level = path.len();
        let mut explored: Vec<Vertex> = Vec::new();
        for &v in &cells[target].clone() {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<Vertex> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            let child = refine(self.rows, child);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            explored.push(v);
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn same_orbit(&self, prefix: &[Vertex], explored: &[Vertex], v: Vertex) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

/// Returns `order` (canonical position -> original vertex) and the form.
pub fn canonical_labeling(g: &Graph) -> (Vec<Vertex>, CanonicalForm) {
    let n = g.vertex_count();
    assert!(n <= 64, "canonical labeling supports at most 64 vertices");
    if n == 0 {
        return (Vec::new(), CanonicalForm { vertex_count: 0, rows: Vec::new() });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect();
    let mut by_degree: Vec<(usize, Vertex)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Partition = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == d => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let cells = refine(&rows, cells);
    let mut search = Search { n, rows: &rows, best: None, automorphisms: Vec::new() };
    search.visit(cells, &mut Vec::new());
    let (code, order, _) = search.best.expect("search reaches a leaf");
    // code rows are big-endian bit positions; convert to bit j = column j
    let rows = code
        .iter()
        .map(|&r| (0..n).filter(|&j| r >> (n - 1 - j) & 1 == 1).fold(0u64, |m, j| m | 1 << j))
        .collect();
    (order, CanonicalForm { vertex_count: n, rows })
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).1
}
