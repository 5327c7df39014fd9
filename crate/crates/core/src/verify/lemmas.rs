//! Property checks for the eigenvalue laws of paths and cycles, path
//! deletion, the bridge identity, path absorption and edge reduction.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{graph_id, main_corpus, par_reports, LemmaFailure, VerificationReport};
use crate::characterize::{edge_reduction_sweep, CaseTag, CharacterizeError};
use crate::families::FamilySpec;
use crate::graph::{delete_pendant_path, pendant_paths, Graph, LowLink, Vertex};
use crate::line_graph::line_graph_unchecked;
use crate::spectra::{candidates, AlgebraicEigenvalue, Spectrum};

fn lambdas_up_to_b(max_b: u64) -> Vec<AlgebraicEigenvalue> {
    (2..=max_b).flat_map(|b| (1..b).filter_map(move |a| AlgebraicEigenvalue::new(a, b).ok())).collect()
}

/// Multiplicities for a fixed `λ` list, sharing the work across conjugates.
fn table(s: &Spectrum, lambdas: &[AlgebraicEigenvalue]) -> Vec<usize> {
    let mut by_conductor = HashMap::new();
    lambdas.iter().map(|l| *by_conductor.entry(l.conductor()).or_insert_with(|| s.multiplicity(l))).collect()
}

/// `m_{P_k}(λ) = 1` iff `k ≡ b - 1 (mod b)`, else 0, for `k ≤ max_k` and
/// canonical `(a, b)` with `b ≤ max_b`.
pub fn check_path_law(max_k: usize, max_b: u64) -> VerificationReport {
    let lambdas = lambdas_up_to_b(max_b);
    let ks: Vec<usize> = (1..=max_k).collect();
    par_reports(&ks, |&k| {
        let mut r = VerificationReport::default();
        let ms = table(&Spectrum::of(&Graph::path(k)), &lambdas);
        for (l, m) in lambdas.iter().zip(ms) {
            r.checked("path_law");
            let expected = usize::from((k + 1) % l.b as usize == 0);
            if m != expected {
                r.fail("path_law", LemmaFailure::new(&format!("P{k}"), Some(*l), &format!("multiplicity {m}, expected {expected}")));
            }
        }
        r
    })
}

/// `m_{C_k}(λ) = 2` iff `b | k` (even `a`) or `2b | k` (odd `a`), else 0.
pub fn check_cycle_law(max_k: usize, max_b: u64) -> VerificationReport {
    let lambdas = lambdas_up_to_b(max_b);
    let ks: Vec<usize> = (3..=max_k).collect();
    par_reports(&ks, |&k| {
        let mut r = VerificationReport::default();
        let ms = table(&Spectrum::of(&Graph::cycle(k)), &lambdas);
        for (l, m) in lambdas.iter().zip(ms) {
            r.checked("cycle_law");
            let expected = if k % l.conductor() as usize == 0 { 2 } else { 0 };
            if m != expected {
                r.fail("cycle_law", LemmaFailure::new(&format!("C{k}"), Some(*l), &format!("multiplicity {m}, expected {expected}")));
            }
        }
        r
    })
}

fn line_bound(g: &Graph) -> usize {
    (2 * g.cyclomatic_number() + g.pendant_count()).saturating_sub(1)
}

/// For every pendant path of `g` with remainder `H` and every candidate `λ`:
/// `m_{L(G)} ≤ m_{L(H)} + 1`, and if `L(G)` attains its bound and `H` is not
/// a cycle then `L(H)` attains its own.
pub fn check_path_deletion(g: &Graph) -> VerificationReport {
    let mut r = VerificationReport::default();
    let Ok(paths) = pendant_paths(g) else { return r };
    if paths.is_empty() || g.is_cycle() {
        return r;
    }
    let d = g.edge_count();
    let mg = Spectrum::of(&line_graph_unchecked(g)).candidate_multiplicities_up_to(d);
    let bound = line_bound(g);
    let id = graph_id(g);
    for p in &paths {
        let (h, _) = delete_pendant_path(g, p).expect("listed pendant path");
        let mh = Spectrum::of(&line_graph_unchecked(&h)).candidate_multiplicities_up_to(d);
        let bound_h = line_bound(&h);
        for (&(l, m), &(_, m_h)) in mg.iter().zip(&mh) {
            r.checked("path_deletion");
            if m > m_h + 1 {
                r.fail("path_deletion", LemmaFailure::new(&id, Some(l), &format!("path {:?}: {m} > {m_h} + 1", p.vertices)));
            }
            if m == bound && !h.is_cycle() {
                r.checked("path_deletion_closure");
                if m_h != bound_h {
                    r.fail(
                        "path_deletion_closure",
                        LemmaFailure::new(&id, Some(l), &format!("path {:?}: remainder has {m_h}, bound {bound_h}", p.vertices)),
                    );
                }
            }
        }
    }
    r
}

/// For every bridge `uv` (both orientations) and candidate `λ` of `g`: if
/// `m(G_u) = m(G_u - u) + 1` then `m(G - v) = m(G) + 1`, on adjacency
/// spectra. `G_u` is the component of `G - uv` holding `u`. Instances whose
/// hypothesis fails are counted as skipped.
pub fn check_bridges(g: &Graph) -> VerificationReport {
    let mut r = VerificationReport::default();
    if !g.is_connected() {
        return r;
    }
    let n = g.vertex_count();
    let lambdas = candidates(n);
    let m_g = table(&Spectrum::of(g), &lambdas);
    let id = graph_id(g);
    let low = LowLink::new(g);
    for &e in &low.bridges {
        let (a, b) = g.edge(e);
        let cut = g.remove_edge(e).expect("bridge id");
        for (u, v) in [(a, b), (b, a)] {
            let dist = cut.bfs_distances(u);
            let side: Vec<bool> = dist.iter().map(Option::is_some).collect();
            let (g_u, relabel) = g.induced_subgraph(&side);
            let (g_u_minus_u, _) = g_u.remove_vertices(&[relabel.map(u).expect("u is on its own side")]);
            let (g_minus_v, _) = g.remove_vertices(&[v]);
            let m_gu = table(&Spectrum::of(&g_u), &lambdas);
            let m_guu = table(&Spectrum::of(&g_u_minus_u), &lambdas);
            let m_gv = table(&Spectrum::of(&g_minus_v), &lambdas);
            for (i, l) in lambdas.iter().enumerate() {
                if m_gu[i] != m_guu[i] + 1 {
                    r.skip("bridge_hypothesis_false");
                    continue;
                }
                r.checked("bridge");
                if m_gv[i] != m_g[i] + 1 {
                    r.fail(
                        "bridge",
                        LemmaFailure::new(&id, Some(*l), &format!("bridge {u}-{v}: m(G-v) = {}, m(G) = {}", m_gv[i], m_g[i])),
                    );
                }
            }
        }
    }
    r
}

/// Hangs a path on `order - 1` new vertices from `v`, so that together with
/// `v` it is a path of `order` vertices.
pub fn absorb_path(h: &Graph, v: Vertex, order: usize) -> Graph {
    let n = h.vertex_count();
    let mut edges = h.edges().to_vec();
    let mut prev = v;
    for w in n..n + order - 1 {
        edges.push((prev, w));
        prev = w;
    }
    Graph::new(n + order - 1, &edges).expect("path extension is simple")
}

/// `m_G(λ) = m_{H-v}(λ)` for `G = H` with a path of order `t·b` identified at
/// `v`, on adjacency spectra.
pub fn check_absorption(h: &Graph, v: Vertex, l: AlgebraicEigenvalue, t: usize) -> VerificationReport {
    let mut r = VerificationReport::default();
    let g = absorb_path(h, v, t * l.b as usize);
    let (h_v, _) = h.remove_vertices(&[v]);
    let (mg, mh) = (Spectrum::of(&g).multiplicity(&l), Spectrum::of(&h_v).multiplicity(&l));
    r.checked("path_absorption");
    if mg != mh {
        r.fail(
            "path_absorption",
            LemmaFailure::new(&graph_id(h), Some(l), &format!("vertex {v}, t = {t}: m(G) = {mg}, m(H-v) = {mh}")),
        );
    }
    r
}

/// For graphs with a cycle and a qualifying edge, optimality at each
/// candidate `λ` matches the conjunction of the three probe conditions.
pub fn check_edge_reduction(g: &Graph) -> VerificationReport {
    let mut r = VerificationReport::default();
    if g.cyclomatic_number() == 0 {
        return r;
    }
    let sweep = match edge_reduction_sweep(g) {
        Ok(s) => s,
        Err(CharacterizeError::NoQualifyingEdge) => {
            r.skip("edge_reduction_no_edge");
            return r;
        }
        Err(_) => return r,
    };
    let bound = line_bound(g);
    let id = graph_id(g);
    for (l, p) in sweep {
        r.checked("edge_reduction");
        if (p.multiplicity == bound) != p.all() {
            r.fail("edge_reduction", LemmaFailure::new(&id, Some(l), &format!("{p:?}, bound {bound}")));
        }
    }
    r
}

/// A random connected graph: a random tree with a few extra edges, maybe a
/// pendant path and a pendant cycle, or (one time in four) a member of an
/// optimal family.
pub fn random_composite(rng: &mut impl Rng, max_n: usize) -> Graph {
    if rng.gen_bool(0.25) {
        let case = *[CaseTag::AttachedCycles, CaseTag::TwoCyclesEdge, CaseTag::ManyCycles, CaseTag::TreeCase]
            .choose(rng)
            .expect("nonempty");
        let (a, b) = *[(1, 2), (2, 3), (1, 3), (2, 5), (4, 5)].choose(rng).expect("nonempty");
        let spec = FamilySpec::new(case, AlgebraicEigenvalue::new(a, b).expect("canonical"), rng.gen());
        if let Ok(g) = spec.generate() {
            if g.edge_count() <= 20 {
                return g;
            }
        }
    }
    let n = rng.gen_range(3..=max_n.max(3));
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..rng.gen_range(0..=2) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !edges.iter().any(|&(x, y)| (x, y) == (u.min(v), u.max(v)) || (x, y) == (u.max(v), u.min(v))) {
            edges.push((u, v));
        }
    }
    let mut count = n;
    if rng.gen_bool(0.5) {
        let mut prev = rng.gen_range(0..n);
        for _ in 0..rng.gen_range(1..=3) {
            edges.push((prev, count));
            prev = count;
            count += 1;
        }
    }
    if rng.gen_bool(0.4) {
        let anchor = rng.gen_range(0..count);
        let order = rng.gen_range(3..=6);
        let first = count;
        for i in 0..order {
            edges.push((first + i, first + (i + 1) % order));
        }
        edges.push((anchor, first));
        count += order;
    }
    Graph::new(count, &edges).expect("composite is simple")
}

fn composites(samples: usize, seed: u64, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| random_composite(&mut rng, max_n)).collect()
}

/// Absorption instances over `hosts`: every vertex, `λ` with `b ≤ 6`, and
/// path orders `b` and `2b`.
fn absorption_sweep(hosts: &[Graph]) -> VerificationReport {
    let lambdas = lambdas_up_to_b(6);
    par_reports(hosts, |h| {
        let mut r = VerificationReport::default();
        for v in 0..h.vertex_count() {
            for &l in &lambdas {
                for t in 1..=2 {
                    r.merge(check_absorption(h, v, l, t));
                }
            }
        }
        r
    })
}

/// Corpus-level checks on `corpus` plus `samples` seeded composites for each
/// property.
pub fn verify_lemmas_on(corpus: &[Graph], samples: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut r = par_reports(corpus, |g| {
        let mut r = check_path_deletion(g);
        r.merge(check_bridges(g));
        r.merge(check_edge_reduction(g));
        r
    });
    let small: Vec<Graph> = corpus.iter().filter(|g| g.vertex_count() <= 6).cloned().collect();
    r.merge(absorption_sweep(&small));

    let deletion = composites(samples, seed, 9);
    r.merge(par_reports(&deletion, check_path_deletion));
    let bridges = composites(samples, seed ^ 0x5eed_0001, 8);
    r.merge(par_reports(&bridges, check_bridges));
    let reduction = composites(samples, seed ^ 0x5eed_0002, 9);
    r.merge(par_reports(&reduction, check_edge_reduction));

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0003);
    let lambdas = lambdas_up_to_b(7);
    let instances: Vec<(Graph, Vertex, AlgebraicEigenvalue, usize)> = (0..samples)
        .map(|_| {
            let h = random_composite(&mut rng, 8);
            let v = rng.gen_range(0..h.vertex_count());
            (h, v, *lambdas.choose(&mut rng).expect("nonempty"), rng.gen_range(1..=3))
        })
        .collect();
    r.merge(par_reports(&instances, |(h, v, l, t)| check_absorption(h, *v, *l, *t)));
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

/// The eigenvalue laws (paths `k ≤ 200` with `b ≤ 12` and `k ≤ 40` with any
/// `b`; cycles `k ≤ 120` with `b ≤ 12`) and [`verify_lemmas_on`] over the
/// connected non-cycle graphs on at most `max_n` vertices.
pub fn verify_lemmas(max_n: usize, samples: usize, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut r = check_path_law(200, 12);
    r.merge(check_path_law(40, 41));
    r.merge(check_cycle_law(120, 12));
    r.merge(verify_lemmas_on(&main_corpus(max_n), samples, seed));
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(a: u64, b: u64) -> AlgebraicEigenvalue {
        AlgebraicEigenvalue::new(a, b).unwrap()
    }

    #[test]
    fn laws_small() {
        assert!(check_path_law(30, 12).passed());
        assert!(check_cycle_law(30, 8).passed());
    }

    #[test]
    fn absorption_on_star() {
        // K_{1,3} with a path of order 3 at a leaf, λ = -1
        let r = check_absorption(&Graph::star(3), 1, lam(2, 3), 1);
        assert!(r.passed() && r.lemma_checks["path_absorption"] == 1);
        let g = absorb_path(&Graph::star(3), 1, 3);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 5));
    }

    #[test]
    fn bridge_identity_on_paths() {
        let r = check_bridges(&Graph::path(2));
        assert!(r.passed());
        assert!(r.lemma_checks.get("bridge").copied().unwrap_or(0) >= 2);
        assert!(check_bridges(&Graph::spider(&[1, 2, 3])).passed());
    }

    #[test]
    fn composites_are_connected_and_seeded() {
        let a = composites(50, 9, 8);
        assert_eq!(a, composites(50, 9, 8));
        assert!(a.iter().all(Graph::is_connected));
    }

    #[test]
    fn corpus_lemmas_small() {
        let r = verify_lemmas_on(&main_corpus(5), 40, 1);
        assert!(r.passed(), "{:#?}", r.lemma_failures);
    }
}
