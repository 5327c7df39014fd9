//! Seeded constructors for the extremal families and the bicyclic shapes
//! `B(l, x, k)` and `θ(k', x', l')`.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characterize::CaseTag;
use crate::graph::{Graph, Vertex};
use crate::spectra::AlgebraicEigenvalue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("vertex {0} is not a pendant vertex of the tree")]
    NotPendant(Vertex),
    #[error("vertex {0} receives two cycles")]
    DuplicateAttachment(Vertex),
    #[error("cycle order {0} is below 3")]
    ShortCycle(usize),
    #[error("{pendants} attachment vertices but {orders} cycle orders")]
    LengthMismatch { pendants: usize, orders: usize },
    #[error("this family needs λ = 2cos(2kπ/(2q+1)); got numerator {0}")]
    OddNumerator(u64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("no generator for case {0}")]
    UnsupportedCase(CaseTag),
}

fn param(msg: impl Into<String>) -> FamilyError {
    FamilyError::Parameter(msg.into())
}

struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    /// Hangs a path of `len` new vertices from `from`; returns its far end.
    fn segment(&mut self, from: Vertex, len: usize) -> Vertex {
        let mut prev = from;
        for _ in 0..len {
            let v = self.vertex();
            self.edges.push((prev, v));
            prev = v;
        }
        prev
    }

    /// A new cycle of `order` vertices; returns its first vertex.
    fn cycle(&mut self, order: usize) -> Vertex {
        let first = self.n;
        for i in 0..order {
            let v = self.vertex();
            if i > 0 {
                self.edges.push((v - 1, v));
            }
        }
        self.edges.push((first, first + order - 1));
        first
    }

    fn build(self) -> Graph {
        Graph::new(self.n, &self.edges).expect("builder emits simple graphs")
    }
}

fn even_lambda(l: AlgebraicEigenvalue) -> Result<(usize, usize), FamilyError> {
    if l.a % 2 == 1 {
        return Err(FamilyError::OddNumerator(l.a));
    }
    Ok((l.b as usize, (l.b as usize - 1) / 2))
}

/// `P_{t·b}`: pendant distance `t·b - 1 ≡ b - 1 (mod b)`.
pub fn make_congruent_path(l: AlgebraicEigenvalue, t: usize) -> Result<Graph, FamilyError> {
    if t == 0 {
        return Err(param("t must be at least 1"));
    }
    Ok(Graph::path(t * l.b as usize))
}

/// Spider with `legs` legs of length `q + r·b`, for `λ = 2cos(2kπ/b)`,
/// `b = 2q + 1`.
pub fn make_congruent_spider(l: AlgebraicEigenvalue, legs: usize, r: usize) -> Result<Graph, FamilyError> {
    let (b, q) = even_lambda(l)?;
    if legs < 3 {
        return Err(param("a spider needs at least 3 legs"));
    }
    Ok(Graph::spider(&vec![q + r * b; legs]))
}

/// Random tree whose pendant pairs are all at distance `≡ b - 1 (mod b)`.
///
/// Rooted at a center of degree at least `max(3, min_pendants)`, every
/// branch vertex sits at depth `≡ 0` and every leaf at depth `≡ q (mod b)`, so
/// any two leaves meet at a branch vertex and their distance is `≡ 2q`.
pub fn random_congruent_tree(
    l: AlgebraicEigenvalue,
    min_pendants: usize,
    rng: &mut impl Rng,
) -> Result<Graph, FamilyError> {
    let (b, q) = even_lambda(l)?;
    let mut g = Builder::new(1);
    let center_degree = rng.gen_range(3..=4).max(min_pendants);
    let mut frontier: Vec<(Vertex, usize, usize)> = vec![(0, center_degree, 0)];
    while let Some((v, children, level)) = frontier.pop() {
        for _ in 0..children {
            if level < 2 && rng.gen_bool(0.25) {
                let w = g.segment(v, b * rng.gen_range(1..=2));
                frontier.push((w, rng.gen_range(2..=3), level + 1));
            } else {
                let r = usize::from(rng.gen_bool(0.2));
                g.segment(v, q + r * b);
            }
        }
    }
    Ok(g.build())
}

/// Joins a new cycle of `orders[j]` vertices to `pendants[j]`; the joining
/// edge leaves from the cycle's first vertex.
pub fn attach_cycles(t: &Graph, pendants: &[Vertex], orders: &[usize]) -> Result<Graph, FamilyError> {
    if pendants.len() != orders.len() {
        return Err(FamilyError::LengthMismatch { pendants: pendants.len(), orders: orders.len() });
    }
    let mut seen = vec![false; t.vertex_count()];
    for &y in pendants {
        if y >= t.vertex_count() || t.degree(y) != 1 {
            return Err(FamilyError::NotPendant(y));
        }
        if std::mem::replace(&mut seen[y], true) {
            return Err(FamilyError::DuplicateAttachment(y));
        }
    }
    if let Some(&o) = orders.iter().find(|&&o| o < 3) {
        return Err(FamilyError::ShortCycle(o));
    }
    let mut g = Builder::new(t.vertex_count());
    g.edges.extend_from_slice(t.edges());
    for (&y, &o) in pendants.iter().zip(orders) {
        let first = g.cycle(o);
        g.edges.push((y, first));
    }
    Ok(g.build())
}

/// `C_{n1}` on `0..n1` and `C_{n2}` on `n1..n1+n2`, joined by the edge `0–n1`.
pub fn two_cycles_edge(n1: usize, n2: usize) -> Result<Graph, FamilyError> {
    if let Some(&o) = [n1, n2].iter().find(|&&o| o < 3) {
        return Err(FamilyError::ShortCycle(o));
    }
    let mut g = Builder::new(0);
    let a = g.cycle(n1);
    let b = g.cycle(n2);
    g.edges.push((a, b));
    Ok(g.build())
}

/// `C_l` and `C_k` joined by a path on `x` vertices whose ends are the two
/// cycle vertices; `x = 1` identifies them.
pub fn make_b(l: usize, x: usize, k: usize) -> Result<Graph, FamilyError> {
    if l < 3 || k < 3 {
        return Err(FamilyError::ShortCycle(l.min(k)));
    }
    if x == 0 {
        return Err(param("B(l, x, k) needs x ≥ 1"));
    }
    let mut g = Builder::new(0);
    let a = g.cycle(l);
    if x == 1 {
        let mut prev = a;
        for _ in 1..k {
            let v = g.vertex();
            g.edges.push((prev, v));
            prev = v;
        }
        g.edges.push((prev, a));
    } else {
        let end = g.segment(a, x - 2);
        let c = g.cycle(k);
        g.edges.push((end, c));
    }
    Ok(g.build())
}

/// Three internally disjoint paths with `k1`, `x1`, `l1` edges between two
/// common ends `0` and `1`.
pub fn make_theta(k1: usize, x1: usize, l1: usize) -> Result<Graph, FamilyError> {
    let lens = [k1, x1, l1];
    if lens.contains(&0) {
        return Err(param("θ path lengths must be positive"));
    }
    if lens.iter().filter(|&&s| s == 1).count() > 1 {
        return Err(param("at most one θ path may be a single edge"));
    }
    let mut g = Builder::new(2);
    for len in lens {
        let end = g.segment(0, len - 1);
        g.edges.push((end, 1));
    }
    Ok(g.build())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub legs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_orders: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_count: Option<usize>,
}

/// A request for one member of an extremal family. Unset parameters are
/// drawn from a ChaCha8 stream seeded with `seed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub case: CaseTag,
    pub lambda: AlgebraicEigenvalue,
    #[serde(default)]
    pub params: FamilyParams,
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(case: CaseTag, lambda: AlgebraicEigenvalue, seed: u64) -> Self {
        Self { case, lambda, params: FamilyParams::default(), seed }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        let l = self.lambda;
        let p = &self.params;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let b = l.b as usize;
        let modulus = if l.a % 2 == 1 { 2 * b } else { b };
        let orders = |rng: &mut ChaCha8Rng, count: usize| -> Vec<usize> {
            p.cycle_orders.clone().unwrap_or_else(|| {
                (0..count).map(|_| modulus * rng.gen_range(1..=2)).collect()
            })
        };
        match self.case {
            CaseTag::PathCase => make_congruent_path(l, p.t.unwrap_or_else(|| rng.gen_range(1..=4))),
            CaseTag::TreeCase => match p.legs {
                Some(legs) => make_congruent_spider(l, legs, p.r.unwrap_or(0)),
                None => random_congruent_tree(l, 3, &mut rng),
            },
            CaseTag::AttachedCycles => {
                let c = p.cycle_count.unwrap_or_else(|| rng.gen_range(1..=2));
                if !(1..=2).contains(&c) {
                    return Err(param("attached-cycle instances carry 1 or 2 cycles"));
                }
                let tree = if l.a.is_multiple_of(2) && rng.gen_bool(0.5) {
                    random_congruent_tree(l, 3, &mut rng)?
                } else {
                    make_congruent_path(l, p.t.unwrap_or_else(|| rng.gen_range(1..=3)))?
                };
                let orders = orders(&mut rng, c);
                attach_random(&tree, &orders, &mut rng)
            }
            CaseTag::TwoCyclesEdge => {
                let orders = orders(&mut rng, 2);
                match orders[..] {
                    [n1, n2] => two_cycles_edge(n1, n2),
                    _ => Err(param("two cycle orders required")),
                }
            }
            CaseTag::ManyCycles => {
                even_lambda(l)?;
                let c = p.cycle_count.unwrap_or_else(|| rng.gen_range(3..=4));
                if c < 3 {
                    return Err(param("many-cycle instances carry at least 3 cycles"));
                }
                let tree = random_congruent_tree(l, c, &mut rng)?;
                let orders = orders(&mut rng, c);
                attach_random(&tree, &orders, &mut rng)
            }
            CaseTag::NotOptimal => Err(FamilyError::UnsupportedCase(CaseTag::NotOptimal)),
        }
    }
}

fn attach_random(tree: &Graph, orders: &[usize], rng: &mut impl Rng) -> Result<Graph, FamilyError> {
    let leaves = tree.pendant_vertices();
    if leaves.len() < orders.len() {
        return Err(param(format!("{} cycles but only {} pendant vertices", orders.len(), leaves.len())));
    }
    let mut chosen: Vec<Vertex> = sample(rng, leaves.len(), orders.len()).into_iter().map(|i| leaves[i]).collect();
    chosen.sort_unstable();
    attach_cycles(tree, &chosen, orders)
}

/// Which bicyclic shape a negative instance uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NegativeShape {
    B { l: usize, x: usize, k: usize },
    Theta { k1: usize, x1: usize, l1: usize },
}

impl NegativeShape {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            NegativeShape::B { l, x, k } => make_b(l, x, k),
            NegativeShape::Theta { k1, x1, l1 } => make_theta(k1, x1, l1),
        }
    }
}

/// A `B` or `θ` graph that is optimal at no `λ`.
///
/// `θ` graphs contain a block that is not a cycle. For `B(l, x, k)` the cycle
/// orders satisfy `gcd(l, k) ≤ 2`, so no modulus `≥ 3` divides both.
pub fn negative_shape(seed: u64) -> NegativeShape {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.5) {
        loop {
            let (l, k) = (rng.gen_range(3..=9), rng.gen_range(3..=9));
            if num_integer::gcd(l, k) <= 2 {
                return NegativeShape::B { l, x: rng.gen_range(1..=4), k };
            }
        }
    }
    loop {
        let lens = [rng.gen_range(1..=5), rng.gen_range(1..=5), rng.gen_range(1..=5)];
        if lens.iter().filter(|&&s| s == 1).count() <= 1 {
            return NegativeShape::Theta { k1: lens[0], x1: lens[1], l1: lens[2] };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn lam(a: u64, b: u64) -> AlgebraicEigenvalue {
        AlgebraicEigenvalue::new(a, b).unwrap()
    }

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_form(a) == canonical_form(b)
    }

    #[test]
    fn paths_and_spiders() {
        assert!(iso(&make_congruent_path(lam(1, 2), 2).unwrap(), &Graph::path(4)));
        assert!(iso(&make_congruent_path(lam(2, 3), 1).unwrap(), &Graph::path(3)));
        assert!(iso(&make_congruent_path(lam(1, 4), 1).unwrap(), &Graph::path(4)));
        assert!(iso(&make_congruent_spider(lam(2, 3), 3, 0).unwrap(), &Graph::star(3)));
        assert!(iso(&make_congruent_spider(lam(2, 5), 3, 0).unwrap(), &Graph::spider(&[2, 2, 2])));
        assert!(iso(&make_congruent_spider(lam(2, 3), 4, 1).unwrap(), &Graph::spider(&[4, 4, 4, 4])));
        assert_eq!(make_congruent_spider(lam(1, 3), 3, 0), Err(FamilyError::OddNumerator(1)));
    }

    #[test]
    fn attachments() {
        let g = attach_cycles(&Graph::path(2), &[0], &[4]).unwrap();
        assert_eq!((g.vertex_count(), g.cyclomatic_number(), g.pendant_count()), (6, 1, 1));
        let g = attach_cycles(&Graph::star(3), &[1, 2, 3], &[3, 3, 3]).unwrap();
        assert_eq!((g.cyclomatic_number(), g.pendant_count()), (3, 0));
        let g = attach_cycles(&Graph::path(2), &[0, 1], &[4, 4]).unwrap();
        assert_eq!((g.cyclomatic_number(), g.pendant_count()), (2, 0));
        assert_eq!(attach_cycles(&Graph::star(3), &[0], &[3]), Err(FamilyError::NotPendant(0)));
        assert_eq!(attach_cycles(&Graph::star(3), &[1, 1], &[3, 3]), Err(FamilyError::DuplicateAttachment(1)));
        assert_eq!(attach_cycles(&Graph::star(3), &[1], &[2]), Err(FamilyError::ShortCycle(2)));
    }

    #[test]
    fn bicyclic_shapes() {
        let b = make_b(3, 1, 3).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count(), b.cyclomatic_number()), (5, 6, 2));
        let b = make_b(4, 2, 5).unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (9, 10));
        assert!(iso(&make_b(4, 2, 4).unwrap(), &two_cycles_edge(4, 4).unwrap()));
        let t = make_theta(1, 2, 2).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count(), t.cyclomatic_number()), (4, 5, 2));
        assert!(make_theta(1, 1, 1).is_err());
        assert!(make_theta(1, 1, 3).is_err());
        assert_eq!(two_cycles_edge(3, 4).unwrap().edge_count(), 8);
    }

    #[test]
    fn random_trees_are_congruent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (a, b) in [(2, 3), (2, 5), (4, 7), (2, 9)] {
            for _ in 0..20 {
                let t = random_congruent_tree(lam(a, b), 3, &mut rng).unwrap();
                assert!(t.is_tree() && t.pendant_count() >= 3);
                let leaves = t.pendant_vertices();
                for &u in &leaves {
                    let d = t.bfs_distances(u);
                    for &v in &leaves {
                        if u != v {
                            assert_eq!(d[v].unwrap() as u64 % b, b - 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn spec_json_and_determinism() {
        let spec: FamilySpec =
            serde_json::from_str(r#"{"case":"TwoCyclesEdge","lambda":{"a":1,"b":2},"params":{"cycle_orders":[4,4]},"seed":1}"#)
                .unwrap();
        assert!(iso(&spec.generate().unwrap(), &two_cycles_edge(4, 4).unwrap()));
        for case in CaseTag::OPTIMAL {
            let s = FamilySpec::new(case, lam(2, 5), 42);
            assert_eq!(s.generate().unwrap(), s.generate().unwrap());
        }
        assert!(FamilySpec::new(CaseTag::ManyCycles, lam(1, 3), 0).generate().is_err());
    }
}
