//! Isomorphism-class enumeration by augmentation with canonical-form dedup.
//!
//! Every connected graph on `n ≥ 2` vertices has a non-cut vertex, so it
//! arises from a connected graph on `n - 1` vertices by adding a vertex
//! joined to a nonempty subset. Trees, unicyclic and bicyclic graphs grow by
//! leaves from the same class one size down, plus the leafless cores
//! (`C_n`; `B(l, x, k)` and `θ(k', x', l')`).

use std::path::Path;

use rayon::prelude::*;

use super::{pool, VerifyError};
use crate::families::{make_b, make_theta};
use crate::graph::{canonical_form, format::from_graph6, CanonicalForm, Graph, Vertex};

fn dedup(forms: Vec<CanonicalForm>) -> Vec<Graph> {
    let mut forms = forms;
    forms.par_sort_unstable();
    forms.dedup();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

fn augment(parents: &[Graph], neighbor_sets: impl Fn(usize) -> Vec<Vec<Vertex>> + Sync) -> Vec<CanonicalForm> {
    pool().install(|| {
        parents
            .par_iter()
            .flat_map_iter(|g| {
                neighbor_sets(g.vertex_count()).into_iter().map(move |s| canonical_form(&g.with_vertex(&s)))
            })
            .collect()
    })
}

fn all_subsets(n: usize) -> Vec<Vec<Vertex>> {
    (1u64..1 << n).map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect()).collect()
}

fn singletons(n: usize) -> Vec<Vec<Vertex>> {
    (0..n).map(|v| vec![v]).collect()
}

/// `levels[n]` holds one representative per class on `n` vertices.
fn grow(
    max_n: usize,
    start: usize,
    seed: Vec<Graph>,
    neighbor_sets: fn(usize) -> Vec<Vec<Vertex>>,
    cores: impl Fn(usize) -> Vec<Graph>,
) -> Vec<Vec<Graph>> {
    let mut levels = vec![Vec::new(); max_n.max(start) + 1];
    levels[start] = seed;
    for n in start + 1..=max_n {
        let mut forms = augment(&levels[n - 1], neighbor_sets);
        forms.extend(cores(n).iter().map(canonical_form));
        levels[n] = dedup(forms);
    }
    levels.truncate(max_n + 1);
    levels
}

/// Connected graphs by order, `levels[n]` for `n ≤ max_n`.
pub fn connected_by_order(max_n: usize) -> Vec<Vec<Graph>> {
    grow(max_n, 1, vec![Graph::empty(1)], all_subsets, |_| Vec::new())
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical-form order.
pub fn enumerate_connected(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    connected_by_order(n).pop().unwrap_or_default()
}

pub fn trees_by_order(max_n: usize) -> Vec<Vec<Graph>> {
    grow(max_n, 1, vec![Graph::empty(1)], singletons, |_| Vec::new())
}

pub fn unicyclic_by_order(max_n: usize) -> Vec<Vec<Graph>> {
    grow(max_n, 3, vec![Graph::cycle(3)], singletons, |n| vec![Graph::cycle(n)])
}

fn bicyclic_cores(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for l in 3..=n {
        for k in l..=n {
            if l + k <= n + 1 {
                let x = n + 2 - l - k;
                out.push(make_b(l, x, k).expect("valid B parameters"));
            }
        }
    }
    for a in 1..=n {
        for b in a..=n {
            for c in b..=n {
                if a + b + c == n + 1 && !(a == 1 && b == 1) {
                    out.push(make_theta(a, b, c).expect("valid θ parameters"));
                }
            }
        }
    }
    out
}

pub fn bicyclic_by_order(max_n: usize) -> Vec<Vec<Graph>> {
    let seed = dedup(bicyclic_cores(4).iter().map(canonical_form).collect());
    grow(max_n, 4, seed, singletons, bicyclic_cores)
}

/// Graphs from graph6 text, one per line; blank lines and `>>graph6<<`
/// headers are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, VerifyError> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i, line.trim().trim_start_matches(">>graph6<<")))
        .filter(|(_, line)| !line.is_empty())
        .map(|(i, line)| from_graph6(line).map_err(|source| VerifyError::Graph6 { line: i + 1, source }))
        .collect()
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, VerifyError> {
    let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Io(format!("{}: {e}", path.display())))?;
    parse_graph6_lines(&text)
}
