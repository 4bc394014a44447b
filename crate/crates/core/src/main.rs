use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use indepmodel::logic::{self, Family};
use indepmodel::repro::verify_counterexample;
use indepmodel::{
    check_semigraphoid, enumerate_dags, enumerate_undirected_graphs, is_causal, is_graph_isomorph, Dag,
    IndependencyModel, Triple, UndirectedGraph, Universe, VarSet, Witness,
};

/// Largest universe for which a full induced model is written out.
const MAX_DUMP_VARS: usize = 10;

#[derive(Parser)]
#[command(name = "indep", version, about = "Independency models, graph separation and d-separation")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Undirected graph queries.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// DAG queries.
    #[command(subcommand)]
    Dag(DagCmd),
    /// Operations on model files.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Independence-logic formulas.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Enumerate labelled graphs.
    #[command(subcommand)]
    Enum(EnumCmd),
    /// Reproduce the non-causal sub-model counterexample.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Args)]
struct Query {
    /// First set, comma-separated labels; `-` or empty for the empty set.
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    /// Conditioning set.
    #[arg(long = "C", allow_hyphen_values = true, default_value = "")]
    c: String,
    /// Second set.
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Decide whether C separates A from B.
    Sep {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        query: Query,
    },
    /// Print the separation model.
    Model {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print the marginal graph on a subset of the variables.
    Marginal {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        vars: String,
    },
}

#[derive(Subcommand)]
enum DagCmd {
    /// Decide whether C d-separates A from B.
    Dsep {
        #[arg(long)]
        dag: PathBuf,
        #[command(flatten)]
        query: Query,
    },
    /// Print the d-separation model.
    Model {
        #[arg(long)]
        dag: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Causal,
    GraphIsomorph,
    Semigraphoid,
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Print the sub-model on the given variables.
    Restrict {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        vars: String,
    },
    /// Decide membership of a model in a class.
    Check {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Decide whether a model satisfies a formula.
    Eval {
        #[arg(long)]
        model: PathBuf,
        /// Formula text, or a path to a file holding it.
        #[arg(long)]
        formula: String,
    },
    /// Decide whether the triples of a model file entail a query triple
    /// in every model of a family.
    Entails {
        /// causal, graph-isomorph or all-models.
        #[arg(long)]
        family: String,
        #[arg(long)]
        given: PathBuf,
        /// `<set> | <set> | <set>`.
        #[arg(long, allow_hyphen_values = true)]
        query: String,
    },
}

#[derive(Subcommand)]
enum EnumCmd {
    /// Labelled DAGs on n nodes.
    Dags {
        #[arg(long)]
        n: usize,
        /// Print only the number of DAGs.
        #[arg(long)]
        count: bool,
    },
    /// Labelled undirected graphs on n nodes.
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Subcommand)]
enum ReproCmd {
    /// Check the five-node counterexample and its four-node sub-model.
    Counterexample,
}

/// Outcome of a command: text and JSON renderings plus the decision.
struct Outcome {
    text: String,
    json: Value,
    affirmative: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, json: Value, affirmative: bool) -> Self {
        Outcome { text: text.into(), json, affirmative }
    }
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: fn(&str) -> indepmodel::Result<T>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn model_json(m: &IndependencyModel) -> Value {
    let u = m.universe();
    let set = |s: VarSet| s.iter().map(|i| u.name(i).to_string()).collect::<Vec<_>>();
    json!({
        "vars": u.names(),
        "triples": m.triples().map(|t| json!([set(t.a), set(t.c), set(t.b)])).collect::<Vec<_>>(),
    })
}

fn check_dump_size(u: &Universe) -> Result<(), CliError> {
    if u.len() > MAX_DUMP_VARS {
        return Err(CliError(format!("model output is limited to {MAX_DUMP_VARS} variables, got {}", u.len())));
    }
    Ok(())
}

fn separation_outcome(separated: bool) -> Outcome {
    let word = if separated { "SEPARATED" } else { "CONNECTED" };
    Outcome::new(format!("{word}\n"), json!({ "separated": separated }), separated)
}

fn query_sets(u: &Universe, q: &Query) -> Result<(VarSet, VarSet, VarSet), CliError> {
    Ok((u.parse_set(&q.a)?, u.parse_set(&q.c)?, u.parse_set(&q.b)?))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Graph(GraphCmd::Sep { graph, query }) => {
            let g = load(graph, UndirectedGraph::parse)?;
            let (a, c, b) = query_sets(g.universe(), query)?;
            Ok(separation_outcome(g.separates(a, c, b)?))
        }
        Command::Graph(GraphCmd::Model { graph }) => {
            let g = load(graph, UndirectedGraph::parse)?;
            check_dump_size(g.universe())?;
            let m = g.separation_model();
            Ok(Outcome::new(m.to_text(), model_json(&m), true))
        }
        Command::Graph(GraphCmd::Marginal { graph, vars }) => {
            let g = load(graph, UndirectedGraph::parse)?;
            let v = g.universe().parse_set(vars)?;
            let marginal = g.marginal_graph(v)?;
            let json = json!({ "graph": marginal.to_text() });
            Ok(Outcome::new(marginal.to_text(), json, true))
        }
        Command::Dag(DagCmd::Dsep { dag, query }) => {
            let d = load(dag, Dag::parse)?;
            let (a, c, b) = query_sets(d.universe(), query)?;
            Ok(separation_outcome(d.d_separates(a, c, b)?))
        }
        Command::Dag(DagCmd::Model { dag }) => {
            let d = load(dag, Dag::parse)?;
            check_dump_size(d.universe())?;
            let m = d.dsep_model();
            Ok(Outcome::new(m.to_text(), model_json(&m), true))
        }
        Command::Model(ModelCmd::Restrict { model, vars }) => {
            let m = load(model, IndependencyModel::parse)?;
            let r = m.restrict(m.universe().parse_set(vars)?)?;
            Ok(Outcome::new(r.to_text(), model_json(&r), true))
        }
        Command::Model(ModelCmd::Check { model, class }) => {
            let m = load(model, IndependencyModel::parse)?;
            check_class(&m, *class)
        }
        Command::Formula(FormulaCmd::Eval { model, formula }) => {
            let m = load(model, IndependencyModel::parse)?;
            let path = Path::new(formula);
            let text = if path.is_file() { read(path)? } else { formula.clone() };
            let f = logic::parse_formula(text.trim())?;
            let ok = logic::model_satisfies(&m, &f)?;
            let word = if ok { "SATISFIED" } else { "NOT SATISFIED" };
            Ok(Outcome::new(format!("{word}\n"), json!({ "formula": f.to_string(), "satisfied": ok }), ok))
        }
        Command::Formula(FormulaCmd::Entails { family, given, query }) => {
            let family: Family = family.parse()?;
            let m = load(given, IndependencyModel::parse)?;
            let q = Triple::parse(m.universe(), query)?;
            let sigma: Vec<Triple> = m.triples().copied().collect();
            let ok = logic::entails(family, &sigma, &q, m.universe())?;
            let word = if ok { "ENTAILED" } else { "NOT ENTAILED" };
            let json = json!({ "family": family.to_string(), "entailed": ok });
            Ok(Outcome::new(format!("{word}\n"), json, ok))
        }
        Command::Enum(EnumCmd::Dags { n, count }) => {
            let u = Universe::numbered(*n)?;
            let dags: Vec<String> = enumerate_dags(&u)?.map(|d| arc_list(&d)).collect();
            Ok(listing(dags, *count))
        }
        Command::Enum(EnumCmd::Graphs { n, count }) => {
            let u = Universe::numbered(*n)?;
            let graphs: Vec<String> = enumerate_undirected_graphs(&u)?.map(|g| edge_list(&g)).collect();
            Ok(listing(graphs, *count))
        }
        Command::Repro(ReproCmd::Counterexample) => {
            let report = verify_counterexample();
            Ok(Outcome::new(report.to_text(), serde_json::to_value(&report)?, report.succeeded()))
        }
    }
}

fn check_class(m: &IndependencyModel, class: Class) -> Result<Outcome, CliError> {
    let result = match class {
        Class::Causal => is_causal(m)?,
        Class::GraphIsomorph => is_graph_isomorph(m),
        Class::Semigraphoid => {
            let violations = check_semigraphoid(m);
            let u = m.universe();
            let mut text = String::new();
            for v in &violations {
                let premises: Vec<String> = v.premises.iter().map(|t| format!("I {}", t.display(u))).collect();
                text.push_str(&format!("{}: {} => I {}\n", v.axiom, premises.join(" & "), v.conclusion.display(u)));
            }
            let ok = violations.is_empty();
            text.push_str(if ok { "SEMIGRAPHOID\n" } else { "NOT SEMIGRAPHOID\n" });
            let json = json!({
                "semigraphoid": ok,
                "violations": violations.iter().map(|v| json!({
                    "axiom": v.axiom,
                    "premises": v.premises.iter().map(|t| t.display(u)).collect::<Vec<_>>(),
                    "conclusion": v.conclusion.display(u),
                })).collect::<Vec<_>>(),
            });
            return Ok(Outcome::new(text, json, ok));
        }
    };
    let u = m.universe();
    let mut text = String::new();
    if let Some(w) = &result.witness {
        text.push_str(&w.to_text());
    }
    if let Some(t) = &result.first_discrepancy {
        text.push_str(&format!("first discrepancy: I {}\n", t.display(u)));
    }
    text.push_str(if result.representable { "REPRESENTABLE\n" } else { "NOT REPRESENTABLE\n" });
    let json = json!({
        "representable": result.representable,
        "witness": result.witness.as_ref().map(Witness::to_text),
        "first_discrepancy": result.first_discrepancy.map(|t| t.display(u)),
        "candidates_scanned": result.candidates_scanned,
    });
    Ok(Outcome::new(text, json, result.representable))
}

fn arc_list(d: &Dag) -> String {
    let u = d.universe();
    d.arcs().iter().map(|&(x, y)| format!("{}->{}", u.name(x), u.name(y))).collect::<Vec<_>>().join(" ")
}

fn edge_list(g: &UndirectedGraph) -> String {
    let u = g.universe();
    g.edges().iter().map(|&(x, y)| format!("{}--{}", u.name(x), u.name(y))).collect::<Vec<_>>().join(" ")
}

fn listing(items: Vec<String>, count_only: bool) -> Outcome {
    if count_only {
        return Outcome::new(format!("{}\n", items.len()), json!({ "count": items.len() }), true);
    }
    let text: String = items.iter().map(|s| format!("{s}\n")).collect();
    Outcome::new(text, json!({ "count": items.len(), "items": items }), true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error for a line-oriented tool.
            let _ = if cli.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("report serializes"))
            } else {
                write!(stdout, "{}", out.text)
            };
            ExitCode::from(if out.affirmative { 0 } else { 1 })
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
