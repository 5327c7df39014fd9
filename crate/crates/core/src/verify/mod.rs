//! Exhaustive and seeded checks of the bound, the recognizer and the
//! supporting identities against the exact engine and the numeric oracle.
//!
//! Work is split per graph and run on a rayon pool whose size comes from
//! `LINEOPT_WORKERS`; partial reports are merged in input order so reports
//! are identical across runs apart from `elapsed_ms`.

mod enumerate;
mod lemmas;
mod report;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

pub use enumerate::{
    bicyclic_by_order, connected_by_order, enumerate_connected, parse_graph6_lines, read_graph6_file, trees_by_order,
    unicyclic_by_order,
};
pub use lemmas::{
    check_absorption, check_bridges, check_cycle_law, check_edge_reduction, check_path_deletion, check_path_law,
    random_composite, verify_lemmas, verify_lemmas_on,
};
pub use report::{
    BoundViolation, EquivalenceFailure, LambdaFormFailure, LemmaFailure, OracleDisagreement, VerificationReport,
};

use crate::characterize::{block_distance_conditions, has_adjacent_majors_on_cycle, CaseTag, Mutation, StructuralProfile, Verdict};
use crate::graph::{format::to_graph6, format::to_edge_list, Graph};
use crate::line_graph::{block_structure, line_graph_unchecked};
use crate::spectra::{
    annihilator_dimension, candidates, count_near, numeric_spectrum, trig_min_poly_for_conductor, with_conductor,
    IntPoly, Spectrum,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("graph6 line {line}: {source}")]
    Graph6 { line: usize, source: crate::graph::format::FormatError },
    #[error("{0}")]
    Io(String),
}

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "LINEOPT_WORKERS";

pub(crate) fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let workers = std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(0);
        rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool")
    })
}

/// Runs `f` on every item in parallel and merges the reports in input order.
pub(crate) fn par_reports<T: Sync>(items: &[T], f: impl Fn(&T) -> VerificationReport + Sync) -> VerificationReport {
    let parts: Vec<VerificationReport> = pool().install(|| items.par_iter().map(&f).collect());
    let mut out = VerificationReport::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// graph6 when it fits, the edge list otherwise.
pub fn graph_id(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| to_edge_list(g))
}

/// Connected non-cycle graphs on `2..=max_n` vertices.
pub fn main_corpus(max_n: usize) -> Vec<Graph> {
    connected_by_order(max_n).into_iter().skip(2).flatten().filter(|g| !g.is_cycle()).collect()
}

/// Checks the bound, the recognizer equivalence and the λ-form on one
/// connected non-cycle graph. Multiplicities come from the characteristic
/// polynomial of `L(G)` only; the recognizer sees nothing but `G` and `λ`.
pub fn check_graph(g: &Graph, mutation: Option<Mutation>) -> VerificationReport {
    let mut r = VerificationReport { graphs_checked: 1, ..Default::default() };
    let Ok(profile) = StructuralProfile::new(g) else {
        r.skip("not_connected_non_cycle");
        return r;
    };
    let bound = profile.bound();
    let spectrum = Spectrum::of(&line_graph_unchecked(g));
    let id = graph_id(g);

    for class in spectrum.classes() {
        if class.multiplicity > bound {
            r.bound_violations.push(BoundViolation {
                graph6: id.clone(),
                class: class.factor.clone(),
                multiplicity: class.multiplicity,
                bound,
            });
        }
        if class.multiplicity == bound && !is_trig_product(&class.factor) {
            r.lambda_form_failures.push(LambdaFormFailure {
                graph6: id.clone(),
                class: class.factor.clone(),
                multiplicity: class.multiplicity,
            });
        }
    }

    let mut any_optimal = false;
    for (l, m) in spectrum.candidate_multiplicities() {
        r.candidate_lambda_checked += 1;
        let cert = profile.certify_with(l, mutation);
        if cert.is_optimal() != (m == bound) {
            r.equivalence_failures.push(EquivalenceFailure {
                graph6: id.clone(),
                lambda: l,
                verdict: cert.case_tag(),
                reason: cert.reason(),
                multiplicity: m,
                bound,
            });
        }
        if cert.is_optimal() {
            any_optimal = true;
            r.count(cert.case_tag().as_str());
            if let (Verdict::ManyCycles { cycle_count, .. }, Some(d)) = (&cert.verdict, profile.decomposition()) {
                if d.tree.pendant_count() == *cycle_count {
                    r.count("ManyCycles.tree_pendants_equal_cycles");
                }
            }
        }
    }
    if mutation.is_none() {
        r.checked("adjacent_majors");
        if any_optimal && has_adjacent_majors_on_cycle(g) {
            r.fail("adjacent_majors", LemmaFailure::new(&id, None, "optimal graph with adjacent majors on a cycle"));
        }
    }
    r
}

/// Whether a squarefree factor is a product of trig minimal polynomials.
fn is_trig_product(factor: &IntPoly) -> bool {
    let mut f = factor.primitive_part();
    let deg = f.degree().unwrap_or(0);
    for &cond in crate::spectra::conductors(deg).iter() {
        if let Some(q) = f.div_exact(&trig_min_poly_for_conductor(cond)) {
            f = q;
        }
    }
    f.is_constant()
}

/// Runs [`check_graph`] over `graphs`, skipping cycles.
pub fn verify_graphs(graphs: &[Graph], mutation: Option<Mutation>) -> VerificationReport {
    let start = Instant::now();
    let mut r = par_reports(graphs, |g| {
        if g.is_cycle() {
            let mut r = VerificationReport::default();
            r.skip("cycle");
            r
        } else {
            check_graph(g, mutation)
        }
    });
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

/// Bound, equivalence and λ-form over every connected non-cycle graph on at
/// most `max_n` vertices.
pub fn verify_main_theorem(max_n: usize) -> VerificationReport {
    let start = Instant::now();
    let corpus = main_corpus(max_n);
    let mut r = verify_graphs(&corpus, None);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

/// Same sweep with one congruence constant of the recognizer altered.
pub fn verify_mutation(max_n: usize, mutation: Mutation) -> VerificationReport {
    verify_graphs(&main_corpus(max_n), Some(mutation))
}

/// Per-candidate disagreements between the characteristic-polynomial
/// multiplicity, the nullity of `A - λI` over `Q(λ)`, and the numeric count.
///
/// The nullity is computed once per conductor, since conjugate `λ` share
/// `Q(λ)` and the nullity is invariant under the Galois action.
pub fn oracle_disagreements(g: &Graph) -> Vec<OracleDisagreement> {
    oracle_compare(g).0
}

/// Disagreements plus the number of candidates with an unrelated eigenvalue
/// inside the numeric guard band.
fn oracle_compare(g: &Graph) -> (Vec<OracleDisagreement>, usize) {
    let n = g.vertex_count();
    let spectrum = Spectrum::of(g);
    let numeric = numeric_spectrum(g);
    let mut out = Vec::new();
    let mut guarded = 0;
    for (cond, poly) in spectrum.conductor_multiplicities(n) {
        let lambdas = with_conductor(cond);
        let nullity = annihilator_dimension(g, &lambdas[0], &[]).expect("empty vertex set");
        for l in lambdas {
            let count = count_near(&numeric, l.value());
            guarded += usize::from(!count.separated);
            if poly != nullity || poly != count.count {
                out.push(OracleDisagreement { lambda: l, polynomial: poly, nullity, numeric: count.count, separated: count.separated });
            }
        }
    }
    (out, guarded)
}

pub fn cross_check(g: &Graph) -> bool {
    oracle_disagreements(g).is_empty()
}

/// Oracle agreement on `L(G)` for every graph in `graphs`.
pub fn verify_oracles(graphs: &[Graph]) -> VerificationReport {
    let start = Instant::now();
    let mut r = par_reports(graphs, |g| {
        let mut r = VerificationReport { graphs_checked: 1, ..Default::default() };
        let lg = line_graph_unchecked(g);
        r.candidate_lambda_checked = candidates(lg.vertex_count()).len();
        r.checked("oracle_agreement");
        let (disagreements, guarded) = oracle_compare(&lg);
        if guarded > 0 {
            *r.case_counts.entry("oracle_guard_band".into()).or_default() += guarded;
        }
        for d in disagreements {
            r.fail("oracle_agreement", LemmaFailure::new(&graph_id(g), Some(d.lambda), &format!("{d:?}")));
        }
        r
    });
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

/// Whether every pendant pair of `t` is at distance `≡ b - 1 (mod b)`.
pub fn pendant_pairs_congruent(t: &Graph, b: usize) -> bool {
    let leaves = t.pendant_vertices();
    leaves.iter().all(|&u| {
        let d = t.bfs_distances(u);
        leaves.iter().all(|&v| u == v || d[v].is_some_and(|d| d % b == b - 1))
    })
}

/// Block-distance conditions on `L(T)` against the pendant-pair congruence,
/// for trees with at least three pendant vertices and every candidate
/// `(2k, 2q+1)`.
pub fn verify_tree_conditions(trees: &[Graph]) -> VerificationReport {
    let start = Instant::now();
    let mut r = par_reports(trees, |t| {
        let mut r = VerificationReport::default();
        if !t.is_tree() || t.pendant_count() < 3 {
            r.skip("tree_conditions");
            return r;
        }
        r.graphs_checked = 1;
        let blocks = block_structure(&line_graph_unchecked(t)).expect("connected tree with edges");
        for l in candidates(t.edge_count()).into_iter().filter(|l| l.a % 2 == 0) {
            r.candidate_lambda_checked += 1;
            r.checked("tree_conditions");
            let lhs = block_distance_conditions(&blocks, l);
            let rhs = pendant_pairs_congruent(t, l.b as usize);
            if lhs != rhs {
                r.fail(
                    "tree_conditions",
                    LemmaFailure::new(&graph_id(t), Some(l), &format!("block conditions {lhs}, pendant congruence {rhs}")),
                );
            }
        }
        r
    });
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

/// Case tag counts for the whole sweep, handy for summaries.
pub fn optimal_case_counts(r: &VerificationReport) -> Vec<(CaseTag, usize)> {
    CaseTag::OPTIMAL.iter().map(|&t| (t, r.case_counts.get(t.as_str()).copied().unwrap_or(0))).collect()
}
