use serde::{Deserialize, Serialize};

use super::CharacterizeError;
use crate::graph::{EdgeId, Graph, LowLink, Vertex};
use crate::line_graph::line_graph_unchecked;
use crate::spectra::{candidates, multiplicity, AlgebraicEigenvalue, Spectrum};

/// The three conditions of the single-edge reduction for an edge `e` on a
/// cycle next to a major vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReductionProbe {
    pub edge: (Vertex, Vertex),
    pub multiplicity: usize,
    pub reduced_multiplicity: usize,
    /// `m_{L(G)}(λ) = m_{L(G-e)}(λ) + 1`.
    pub mult_drop_ok: bool,
    /// `m_{L(G-e)}(λ) = 2c(G-e) + p(G-e) - 1`.
    pub sub_optimal_ok: bool,
    /// `p(G-e) = p(G) + 1`.
    pub pendant_increment_ok: bool,
}

impl EdgeReductionProbe {
    pub fn all(&self) -> bool {
        self.mult_drop_ok && self.sub_optimal_ok && self.pendant_increment_ok
    }
}

/// Lexicographically smallest edge lying on a cycle with a major endpoint.
pub fn qualifying_edge(g: &Graph) -> Option<EdgeId> {
    let low = LowLink::new(g);
    let mut bridge = vec![false; g.edge_count()];
    for &e in &low.bridges {
        bridge[e] = true;
    }
    (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            !bridge[e] && (g.degree(u) >= 3 || g.degree(v) >= 3)
        })
        .min_by_key(|&e| g.edge(e))
}

fn reduce(g: &Graph) -> Result<(EdgeId, Graph), CharacterizeError> {
    if !g.is_connected() {
        return Err(CharacterizeError::Disconnected);
    }
    if g.is_cycle() {
        return Err(CharacterizeError::IsACycle);
    }
    let e = qualifying_edge(g).ok_or(CharacterizeError::NoQualifyingEdge)?;
    let h = g.remove_edge(e).expect("edge id from g");
    Ok((e, h))
}

fn probe(g: &Graph, e: EdgeId, h: &Graph, m: usize, mh: usize) -> EdgeReductionProbe {
    let bound_h = 2 * h.cyclomatic_number() + h.pendant_count();
    EdgeReductionProbe {
        edge: g.edge(e),
        multiplicity: m,
        reduced_multiplicity: mh,
        mult_drop_ok: m == mh + 1,
        sub_optimal_ok: mh + 1 == bound_h,
        pendant_increment_ok: h.pendant_count() == g.pendant_count() + 1,
    }
}

pub fn edge_reduction_probe(g: &Graph, l: AlgebraicEigenvalue) -> Result<EdgeReductionProbe, CharacterizeError> {
    let (e, h) = reduce(g)?;
    let m = multiplicity(&line_graph_unchecked(g), &l);
    let mh = multiplicity(&line_graph_unchecked(&h), &l);
    Ok(probe(g, e, &h, m, mh))
}

/// [`edge_reduction_probe`] for every candidate `λ` of `g`, from one
/// characteristic polynomial on each side.
pub fn edge_reduction_sweep(g: &Graph) -> Result<Vec<(AlgebraicEigenvalue, EdgeReductionProbe)>, CharacterizeError> {
    let (e, h) = reduce(g)?;
    let d = g.edge_count();
    let ms = Spectrum::of(&line_graph_unchecked(g)).candidate_multiplicities_up_to(d);
    let mhs = Spectrum::of(&line_graph_unchecked(&h)).candidate_multiplicities_up_to(d);
    debug_assert_eq!(ms.len(), candidates(d).len());
    Ok(ms.into_iter().zip(mhs).map(|((l, m), (_, mh))| (l, probe(g, e, &h, m, mh))).collect())
}
