//! The `surftutte` command line.
//!
//! Exit codes: 0 success, 2 bad input, 3 over a size cap or budget,
//! 4 two methods disagreed.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{ComputeError, Limits};
use crate::flows::{self, CountKind};
use crate::groups::{catalog, parse_group, FiniteGroup, GroupError};
use crate::io::{parse_map, FormatError};
use crate::poly::Style;
use crate::premap::{components, MapParams, Premap};
use crate::tutte::MinorTable;

#[derive(Parser, Debug)]
#[command(name = "surftutte", version, about = "Surface Tutte polynomials and local flow counts of maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print vertex, edge, face, component and genus parameters as JSON.
    Info { path: PathBuf },
    /// Print a polynomial invariant.
    Poly {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: PolyKind,
        /// Raise the subset-expansion edge cap.
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Count local flows or tensions with values in a finite group.
    Flows(FlowArgs),
    /// Count quasi-trees by signed genus as JSON.
    Quasitrees {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        signed_genus: Option<i64>,
        #[arg(long)]
        max_edges: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyKind {
    Surface,
    Tilde,
    Q,
    Krushkal,
    Tutte,
    Signed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Formula,
    Tutte,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Flows,
    Tensions,
}

#[derive(Args, Debug)]
struct FlowArgs {
    path: PathBuf,
    /// `catalog:NAME` or a group-v1 file.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long, value_enum, default_value = "flows")]
    kind: Kind,
    /// Count every assignment satisfying the cycle conditions.
    #[arg(long, conflicts_with = "nowhere_identity", required_unless_present = "nowhere_identity")]
    all: bool,
    /// Count only assignments with no identity edge.
    #[arg(long)]
    nowhere_identity: bool,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Largest `|G|^m` for brute force.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Compute(#[from] ComputeError),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(e) => match e {
                ComputeError::NotConnected | ComputeError::NotAbelian(_) => 2,
                ComputeError::SubsetCapExceeded { .. } | ComputeError::BudgetExceeded { .. } => 3,
                ComputeError::MethodDisagreement(_) | ComputeError::Poly(_) => 4,
            },
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<Premap, CliError> {
    Ok(parse_map(&read_text(path)?)?)
}

fn load_group(spec: &str) -> Result<FiniteGroup, CliError> {
    match spec.strip_prefix("catalog:") {
        Some(name) => Ok(catalog(name)?),
        None => Ok(parse_group(&read_text(Path::new(spec))?)?),
    }
}

fn limits(max_edges: Option<usize>, budget: Option<u128>) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = max_edges {
        l.max_edges = m;
    }
    if let Some(b) = budget {
        l.flow_budget = b;
    }
    l
}

#[derive(Serialize)]
struct Info {
    #[serde(flatten)]
    totals: MapParams,
    components: Vec<MapParams>,
}

fn info(path: &Path) -> Result<String, CliError> {
    let p = load_map(path)?;
    let info = Info {
        totals: p.params(),
        components: components(&p).iter().map(|c| c.params()).collect(),
    };
    Ok(serde_json::to_string(&info).expect("serializing plain data"))
}

fn poly(path: &Path, kind: PolyKind, max_edges: Option<usize>) -> Result<String, CliError> {
    let p = load_map(path)?;
    let table = MinorTable::new(&p, &limits(max_edges, None))?;
    Ok(match kind {
        PolyKind::Surface => table.surface_tutte().fmt_with(Style::Lower),
        PolyKind::Tilde => table.tilde_tutte().fmt_with(Style::Lower),
        PolyKind::Q => table.q_poly().fmt_with(Style::Lower),
        PolyKind::Krushkal => table.krushkal()?.fmt_with(Style::Upper),
        PolyKind::Tutte => table.tutte()?.fmt_with(Style::Upper),
        PolyKind::Signed => table.signed()?.fmt_with(Style::Upper),
    })
}

fn count(
    p: &Premap,
    g: &FiniteGroup,
    method: Method,
    kind: Kind,
    nowhere: bool,
    l: &Limits,
) -> Result<BigInt, ComputeError> {
    match (kind, nowhere, method) {
        (Kind::Flows, _, Method::Brute) => flows::brute_force_flows(p, g, nowhere, l),
        (Kind::Tensions, _, Method::Brute) => flows::brute_force_tensions(p, g, nowhere, l),
        (Kind::Flows, true, Method::Formula) => flows::flow_count_formula(p, g, l),
        (Kind::Tensions, true, Method::Formula) => flows::tension_count_formula(p, g, l),
        (Kind::Flows, false, Method::Formula) => flows::flow_count_closed(p, g, l),
        (Kind::Tensions, false, Method::Formula) => flows::tension_count_closed(p, g, l),
        (Kind::Flows, true, Method::Tutte) => flows::flow_count_via_tutte(p, g, l),
        (Kind::Tensions, true, Method::Tutte) => flows::tension_count_via_tutte(p, g, l),
        (Kind::Flows, false, Method::Tutte) => flows::all_via_tutte(p, g, CountKind::Flows, l),
        (Kind::Tensions, false, Method::Tutte) => {
            flows::all_via_tutte(p, g, CountKind::Tensions, l)
        }
        (_, _, Method::All) => unreachable!(),
    }
}

fn flows_cmd(a: &FlowArgs) -> Result<String, CliError> {
    let p = load_map(&a.path)?;
    let g = load_group(&a.group)?;
    let l = limits(a.max_edges, a.budget);
    let nowhere = a.nowhere_identity;
    if a.method != Method::All {
        return Ok(count(&p, &g, a.method, a.kind, nowhere, &l)?.to_string());
    }
    let mut lines = Vec::new();
    let mut values = Vec::new();
    for (name, m) in [
        ("brute", Method::Brute),
        ("formula", Method::Formula),
        ("tutte", Method::Tutte),
    ] {
        let v = count(&p, &g, m, a.kind, nowhere, &l)?;
        lines.push(format!("{name} {v}"));
        values.push(v);
    }
    let text = lines.join("\n");
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(ComputeError::MethodDisagreement(text.replace('\n', ", ")).into());
    }
    Ok(text)
}

fn quasitrees(path: &Path, hbar: Option<i64>, max_edges: Option<usize>) -> Result<String, CliError> {
    let p = load_map(path)?;
    let table = MinorTable::new(&p, &limits(max_edges, None))?;
    if table.components != 1 {
        return Err(ComputeError::NotConnected.into());
    }
    let g = table.signed_genus.abs();
    let range: Vec<i64> = match hbar {
        Some(h) => vec![h],
        None => (-g..=g).collect(),
    };
    let mut entries = Vec::new();
    for h in range {
        entries.push(format!("\"{h}\":{}", table.quasi_trees(h)?));
    }
    Ok(format!("{{{}}}", entries.join(",")))
}

fn dispatch(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Info { path } => info(path),
        Command::Poly {
            path,
            kind,
            max_edges,
        } => poly(path, *kind, *max_edges),
        Command::Flows(a) => flows_cmd(a),
        Command::Quasitrees {
            path,
            signed_genus,
            max_edges,
        } => quasitrees(path, *signed_genus, *max_edges),
    }
}

/// Runs one invocation, writing the result to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
