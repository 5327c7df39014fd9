use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};

use lineopt_core::characterize::{optimal_certificate, CaseTag, CharacterizeError, Mutation};
use lineopt_core::families::{FamilyParams, FamilySpec};
use lineopt_core::graph::format::{to_edge_list, to_json};
use lineopt_core::graph::Graph;
use lineopt_core::line_graph::line_graph;
use lineopt_core::spectra::multiplicity;
use lineopt_core::verify::{
    graph_id, main_corpus, read_graph6_file, verify_graphs, verify_lemmas, verify_lemmas_on, verify_oracles,
    verify_tree_conditions, VerificationReport,
};

use crate::input::read_graph;
use crate::{parse_lambda, CliError, GraphSource, OutputMode};

fn emit(output: OutputMode, payload: &Value, table: impl FnOnce() -> String) {
    if output.table {
        print!("{}", table());
    } else {
        println!("{}", serde_json::to_string_pretty(payload).expect("payload serializes"));
    }
}

/// `2c + p - 1` for connected non-cycle graphs with an edge.
fn bound(g: &Graph) -> Option<usize> {
    (g.edge_count() > 0 && g.is_connected() && !g.is_cycle())
        .then(|| (2 * g.cyclomatic_number() + g.pendant_count()).saturating_sub(1))
}

pub fn linegraph(source: &GraphSource, output: OutputMode) -> Result<u8, CliError> {
    let g = read_graph(source)?;
    let map = line_graph(&g).map_err(|e| CliError::Input(e.to_string()))?;
    let pairs: Vec<Value> = map
        .edge_to_vertex
        .iter()
        .enumerate()
        .map(|(e, &v)| {
            let (a, b) = g.edge(e);
            json!({ "edge": [a, b], "vertex": v })
        })
        .collect();
    let payload = json!({ "graph": to_json(&g), "line_graph": to_json(&map.line), "edge_to_vertex": pairs });
    emit(output, &payload, || {
        let mut s = String::new();
        for (e, &v) in map.edge_to_vertex.iter().enumerate() {
            let (a, b) = g.edge(e);
            s += &format!("edge {a}-{b} -> vertex {v}\n");
        }
        s + &to_edge_list(&map.line)
    });
    Ok(0)
}

pub fn mult(source: &GraphSource, lambda: &str, output: OutputMode) -> Result<u8, CliError> {
    let g = read_graph(source)?;
    let l = parse_lambda(lambda)?;
    let lg = line_graph(&g).map_err(|e| CliError::Input(e.to_string()))?.line;
    let m = multiplicity(&lg, &l);
    let mg = multiplicity(&g, &l);
    let psi = l.min_poly();
    let payload = json!({
        "graph6": graph_id(&g),
        "lambda": l,
        "multiplicity": m,
        "graph_multiplicity": mg,
        "bound": bound(&g),
        "minimal_polynomial": psi.to_string(),
        "minimal_polynomial_coefficients": *psi,
    });
    emit(output, &payload, || {
        let b = bound(&g).map_or("n/a".to_owned(), |b| b.to_string());
        format!(
            "lambda              2cos({}π/{}) ≈ {:.12}\nminimal polynomial  {psi}\nm_L(G)              {m}\nm_G                 {mg}\nbound 2c+p-1        {b}\n",
            l.a,
            l.b,
            l.value()
        )
    });
    Ok(0)
}

pub fn check(source: &GraphSource, lambda: &str, output: OutputMode) -> Result<u8, CliError> {
    let g = read_graph(source)?;
    let l = parse_lambda(lambda)?;
    let cert = optimal_certificate(&g, l).map_err(|e| match e {
        CharacterizeError::IsACycle => CliError::Input("IsACycle: the input graph is a cycle".into()),
        other => CliError::Input(other.to_string()),
    })?;
    let mut payload = serde_json::to_value(&cert).expect("certificate serializes");
    payload["graph6"] = json!(graph_id(&g));
    payload["bound"] = json!(bound(&g));
    emit(output, &payload, || {
        let detail = serde_json::to_string(&payload["parameters"]).unwrap_or_default();
        format!("lambda     {}\ncase       {}\nparameters {detail}\n", cert.lambda, cert.case_tag())
    });
    Ok(0)
}

#[derive(Args)]
pub struct GenArgs {
    /// Case tag: PathCase, TreeCase, AttachedCycles, TwoCyclesEdge, ManyCycles.
    #[arg(long, required_unless_present = "spec")]
    case: Option<String>,
    #[arg(long, required_unless_present = "spec")]
    lambda: Option<String>,
    /// Path length multiplier: the path has t·b vertices.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    legs: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Comma-separated cycle orders.
    #[arg(long, value_delimiter = ',')]
    cycle_orders: Option<Vec<usize>>,
    #[arg(long)]
    cycle_count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// FamilySpec as a JSON file; replaces the other generator flags.
    #[arg(long, conflicts_with_all = ["case", "lambda"])]
    spec: Option<PathBuf>,
    #[command(flatten)]
    output: OutputMode,
}

fn family_spec(args: &GenArgs) -> Result<FamilySpec, CliError> {
    if let Some(path) = &args.spec {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())));
    }
    let case: CaseTag = args.case.as_deref().unwrap_or_default().parse().map_err(CliError::Usage)?;
    let lambda = parse_lambda(args.lambda.as_deref().unwrap_or_default())?;
    Ok(FamilySpec {
        case,
        lambda,
        params: FamilyParams {
            t: args.t,
            legs: args.legs,
            r: args.r,
            cycle_orders: args.cycle_orders.clone(),
            cycle_count: args.cycle_count,
        },
        seed: args.seed,
    })
}

pub fn gen(args: &GenArgs) -> Result<u8, CliError> {
    let spec = family_spec(args)?;
    let g = spec.generate().map_err(|e| CliError::Usage(e.to_string()))?;
    let payload = json!({ "spec": spec, "graph6": graph_id(&g), "graph": to_json(&g) });
    emit(args.output, &payload, || format!("{}\n", graph_id(&g)));
    Ok(0)
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Largest order of the enumerated corpus (2..=10).
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Also run the lemma suite with seeded composites.
    #[arg(long)]
    lemmas: bool,
    /// Also compare the three multiplicity oracles on every L(G).
    #[arg(long)]
    oracles: bool,
    /// Seeded composites per property in the lemma suite.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the main sweep against a deliberately broken recognizer
    /// (path-residue, tree-residue or cycle-modulus); expected to fail.
    #[arg(long, value_parser = parse_mutation)]
    mutation: Option<Mutation>,
    /// Use graphs from a graph6 file (one per line) instead of the enumerator.
    #[arg(long)]
    graph6_file: Option<PathBuf>,
    #[command(flatten)]
    output: OutputMode,
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    match s {
        "path-residue" => Ok(Mutation::PathResidueMinusOne),
        "tree-residue" => Ok(Mutation::TreeResidueMinusOne),
        "cycle-modulus" => Ok(Mutation::CycleModulusHalved),
        _ => Err(format!("unknown mutation `{s}`")),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<u8, CliError> {
    if !(2..=10).contains(&args.max_n) {
        return Err(CliError::Usage(format!("--max-n {} is outside 2..=10", args.max_n)));
    }
    let corpus = match &args.graph6_file {
        Some(path) => read_graph6_file(path)
            .map_err(|e| CliError::Input(e.to_string()))?
            .into_iter()
            .filter(|g| g.edge_count() > 0 && g.is_connected() && !g.is_cycle())
            .collect(),
        None => main_corpus(args.max_n),
    };
    let start = std::time::Instant::now();
    let mut report = verify_graphs(&corpus, args.mutation);
    if args.lemmas {
        report.merge(match &args.graph6_file {
            Some(_) => verify_lemmas_on(&corpus, args.samples, args.seed),
            None => verify_lemmas(args.max_n, args.samples, args.seed),
        });
        let trees: Vec<Graph> = corpus.iter().filter(|g| g.is_tree()).cloned().collect();
        report.merge(verify_tree_conditions(&trees));
    }
    if args.oracles {
        report.merge(verify_oracles(&corpus));
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    emit_report(&report, args.output);
    Ok(if report.passed() { 0 } else { 1 })
}

fn emit_report(report: &VerificationReport, output: OutputMode) {
    let payload = serde_json::to_value(report).expect("report serializes");
    emit(output, &payload, || report.summary_table());
}
