use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hall_core::formats::{self, FormatError};
use hall_core::oracle::{enumerate_subset_violations, random_family, Seed};
use hall_core::{
    infinite_hall_prefix, solve, BipartiteOutcome, CarriedFunction, CarriedOutcome, Error, Family, Generator,
    HallReport, LazyFamily, Method, SolveOutcome, System, Token,
};
use serde_json::{json, Value};

/// Hall-condition checks and matchings for set families, bipartite graphs
/// and inverse systems of finite sets.
///
/// Verdicts go to stdout as JSON. Exit status: 0 when a matching, function
/// or chain exists, 1 when a verified witness shows it cannot, 2 on bad
/// input, usage or size limits.
#[derive(Debug, Parser)]
#[command(name = "hall", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Hall condition on a family file.
    Check { file: PathBuf },
    /// Find a system of distinct representatives for a family file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Inductive)]
        method: MethodArg,
        /// Confirm the verdict against exhaustive subset enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Saturate colour class 0 of a two-coloured graph file.
    GraphMatch {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Inductive)]
        method: MethodArg,
    },
    /// Send each vertex to a neighbour along pairwise distinct edges.
    Carried {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Inductive)]
        method: MethodArg,
    },
    /// Find a chain through an inverse system file, or a matching prefix of
    /// a built-in infinite family.
    Koenig {
        #[arg(required_unless_present = "lazy", conflicts_with = "lazy")]
        file: Option<PathBuf>,
        /// Generator name: `interval` (i maps to {i, i+1}) or `constant:<x>`.
        #[arg(long, requires_all = ["prefix", "horizon"])]
        lazy: Option<String>,
        #[arg(long)]
        prefix: Option<usize>,
        #[arg(long)]
        horizon: Option<usize>,
    },
    /// Print a seeded random family file.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        indices: usize,
        #[arg(long)]
        universe: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Inductive,
    Augmenting,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Inductive => Method::Inductive,
            MethodArg::Augmenting => Method::Augmenting,
        }
    }
}

/// A verdict ready to print, or the reason there is none.
enum Verdict {
    Positive(Value),
    Negative(Value),
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(Verdict::Positive(v)) => emit(&v, 0),
        Ok(Verdict::Negative(v)) => emit(&v, 1),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            emit(&json!({ "status": "error", "diagnostics": message }), 2)
        }
    }
}

fn emit(value: &Value, code: u8) -> ExitCode {
    println!("{value}");
    ExitCode::from(code)
}

fn dispatch(command: Command) -> Result<Verdict, Failure> {
    match command {
        Command::Check { file } => cmd_check(&file),
        Command::Solve { file, method, verify } => cmd_solve(&file, method.into(), verify),
        Command::GraphMatch { file, method } => cmd_graph_match(&file, method.into()),
        Command::Carried { file, method } => cmd_carried(&file, method.into()),
        Command::Koenig {
            file,
            lazy,
            prefix,
            horizon,
        } => match (file, lazy, prefix, horizon) {
            (Some(file), None, _, _) => cmd_koenig_file(&file),
            (None, Some(name), Some(prefix), Some(horizon)) => cmd_koenig_lazy(&name, prefix, horizon),
            _ => Err(Failure("give a system file or --lazy with --prefix and --horizon".into())),
        },
        Command::Generate {
            seed,
            indices,
            universe,
            density,
        } => cmd_generate(seed, indices, universe, density),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn input<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| match e {
        FormatError::Json(e) => Failure(format!("{}: malformed JSON: {e}", path.display())),
        FormatError::Invalid(e) => Failure(format!("{}: {e}", path.display())),
    })
}

fn core_error(e: Error) -> Failure {
    match e {
        Error::CapExceeded { .. } => Failure(format!("{e}; rerun with --method augmenting")),
        other => Failure(other.to_string()),
    }
}

fn unverified(what: impl Display) -> Failure {
    Failure(format!("internal error: certificate failed re-verification: {what}"))
}

fn witness_value(family: &Family, subset: &[Token]) -> Result<Value, Failure> {
    let union = family.bind_union(subset)?;
    if subset.len() <= union.len() {
        return Err(unverified("witness subset is not deficient"));
    }
    Ok(json!({ "status": "violated", "witness": subset, "union": union }))
}

fn cmd_check(path: &Path) -> Result<Verdict, Failure> {
    let family = input(path, formats::parse_family)?;
    Ok(match family.check_hall_condition() {
        HallReport::Satisfied => Verdict::Positive(json!({ "status": "satisfied" })),
        HallReport::Violated(w) => Verdict::Negative(witness_value(&family, w.subset.as_slice())?),
    })
}

fn cmd_solve(path: &Path, method: Method, verify: bool) -> Result<Verdict, Failure> {
    let family = input(path, formats::parse_family)?;
    let outcome = solve(&family, method).map_err(core_error)?;
    if verify {
        let exhaustive = enumerate_subset_violations(&family).map_err(core_error)?.is_empty();
        if exhaustive != outcome.is_matching() {
            return Err(unverified("solver verdict disagrees with subset enumeration"));
        }
        eprintln!("verified: subset enumeration agrees");
    }
    Ok(match outcome {
        SolveOutcome::Matching(t) => {
            let t = family.verify_transversal(t.as_map()).map_err(unverified)?;
            Verdict::Positive(json!({ "status": "matched", "matching": t.as_map() }))
        }
        SolveOutcome::Violation(w) => Verdict::Negative(witness_value(&family, w.subset.as_slice())?),
    })
}

fn cmd_graph_match(path: &Path, method: Method) -> Result<Verdict, Failure> {
    let colored = input(path, formats::parse_graph)?;
    let bipartition = colored
        .bipartition()
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let graph = &colored.graph;
    let class0 = bipartition.color_set(0);
    Ok(match graph.hall_bipartite_with(&bipartition, method).map_err(core_error)? {
        BipartiteOutcome::Matching(m) => {
            let m = graph.validate_matching(m.edges().iter().cloned()).map_err(unverified)?;
            if let Some(v) = m.first_unsaturated(&class0) {
                return Err(unverified(format!("{v} is left unmatched")));
            }
            let pairs: BTreeMap<&Token, &Token> =
                class0.iter().map(|v| (v, m.partner(v).expect("saturated"))).collect();
            Verdict::Positive(json!({ "status": "matched", "matching": pairs }))
        }
        BipartiteOutcome::Violation { subset, neighborhood } => {
            if !subset.is_subset(&class0)
                || graph.neighbor_set_image(&subset)? != neighborhood
                || subset.len() <= neighborhood.len()
            {
                return Err(unverified("neighbourhood witness"));
            }
            Verdict::Negative(json!({ "status": "violated", "witness": subset, "neighborhood": neighborhood }))
        }
    })
}

fn cmd_carried(path: &Path, method: Method) -> Result<Verdict, Failure> {
    let graph = input(path, formats::parse_graph)?.graph;
    Ok(match graph.find_carried_function_with(method).map_err(core_error)? {
        CarriedOutcome::Carried(f) => {
            let f = CarriedFunction::verify(&graph, f.as_map()).map_err(unverified)?;
            Verdict::Positive(json!({ "status": "matched", "function": f.as_map() }))
        }
        CarriedOutcome::Violation { subset, incident_edges } => {
            let touched = graph.incidence_family().bind_union(&subset)?.len();
            if touched != incident_edges || subset.len() <= touched {
                return Err(unverified("incident-edge witness"));
            }
            Verdict::Negative(json!({ "status": "violated", "witness": subset, "incident_edges": incident_edges }))
        }
    })
}

fn cmd_koenig_file(path: &Path) -> Result<Verdict, Failure> {
    let system: System = input(path, formats::parse_system)?;
    Ok(match system.find_chain() {
        Some(chain) => {
            let chain = system.check_chain(chain.entries()).map_err(|v| unverified(format!("{v:?}")))?;
            Verdict::Positive(json!({ "status": "matched", "chain": chain.entries() }))
        }
        None => {
            // Some level has no element that extends to the top.
            let pruned = system.prune_to_extendable();
            let level = pruned
                .levels()
                .iter()
                .position(|l| l.is_empty())
                .ok_or_else(|| unverified("no chain yet every pruned level is nonempty"))?;
            Verdict::Negative(json!({ "status": "violated", "empty_level": level }))
        }
    })
}

fn cmd_koenig_lazy(name: &str, prefix: usize, horizon: usize) -> Result<Verdict, Failure> {
    let generator: Generator = name.parse().map_err(core_error)?;
    Ok(match infinite_hall_prefix(&generator, prefix, horizon).map_err(core_error)? {
        SolveOutcome::Matching(t) => {
            let t = generator.prefix(prefix).verify_transversal(t.as_map()).map_err(unverified)?;
            let matching: BTreeMap<String, &Token> = t.iter().map(|(i, e)| (i.to_string(), e)).collect();
            Verdict::Positive(json!({ "status": "matched", "generator": generator.to_string(), "matching": matching }))
        }
        SolveOutcome::Violation(w) => {
            if !w.is_genuine(&generator.prefix(horizon)) {
                return Err(unverified("prefix witness"));
            }
            Verdict::Negative(json!({ "status": "violated", "generator": generator.to_string(), "witness": w.subset }))
        }
    })
}

fn cmd_generate(seed: u64, indices: usize, universe: usize, density: f64) -> Result<Verdict, Failure> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Failure(format!("density {density} is not in [0, 1]")));
    }
    Ok(Verdict::Positive(formats::family_to_json(&random_family(Seed(seed), indices, universe, density))))
}
