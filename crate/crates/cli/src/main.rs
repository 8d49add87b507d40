//! `poisson`: validate Poisson brackets and compute their homology, cohomology and duality
//! tables from JSON structure files or built-in catalog entries.

mod report;

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use poisson_core::catalog;
use poisson_core::complexes::Coefficients;
use poisson_core::document::{DocumentError, SpecDocument};
use poisson_core::structure::StructureError;
use poisson_core::{Execution, PoissonStructure};

use report::{Op, Report, Status};

#[derive(Parser)]
#[command(
    name = "poisson",
    version,
    about = "Poisson (co)homology of polynomial Poisson algebras"
)]
struct Cli {
    /// Evaluate cells on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure: Jacobi identity, homogeneity, unimodularity.
    Check { spec: String },
    /// Modular data tr(dx_i).
    Trace {
        spec: String,
        #[command(flatten)]
        opts: TraceOpts,
    },
    /// dim HP_n(A, N) per weight.
    Homology {
        spec: String,
        #[command(flatten)]
        opts: HomologyOpts,
    },
    /// dim HP^n(A) per weight.
    Cohomology {
        spec: String,
        #[command(flatten)]
        opts: CohomologyOpts,
    },
    /// Compare twisted homology with cohomology cell by cell.
    Duality {
        spec: String,
        #[command(flatten)]
        opts: DualityOpts,
    },
    /// Normal forms in the enveloping algebra and their consistency checks.
    Pbw {
        spec: String,
        #[command(flatten)]
        opts: PbwOpts,
    },
    /// Built-in example structures.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the entries (the default).
    List,
    /// Print an entry as a JSON structure file.
    Show { id: String },
    /// Run a command on every entry.
    Run {
        #[command(subcommand)]
        command: RunCommand,
    },
}

#[derive(Subcommand)]
enum RunCommand {
    Check,
    Trace(TraceOpts),
    Homology(HomologyOpts),
    Cohomology(CohomologyOpts),
    Duality(DualityOpts),
    Pbw(PbwOpts),
}

#[derive(Args, Clone)]
struct TraceOpts {
    #[arg(long)]
    tsv: bool,
}

#[derive(Args, Clone)]
struct HomologyOpts {
    /// canonical (N = A) or omega (N = ω_A).
    #[arg(long, default_value = "canonical")]
    coeff: Coefficients,
    #[arg(long, default_value_t = 8)]
    max_weight: u32,
    #[arg(long)]
    tsv: bool,
}

#[derive(Args, Clone)]
struct CohomologyOpts {
    #[arg(long, default_value_t = 8)]
    max_weight: u32,
    #[arg(long)]
    tsv: bool,
}

#[derive(Args, Clone)]
struct DualityOpts {
    #[arg(long, default_value_t = 8)]
    max_weight: u32,
    #[arg(long)]
    tsv: bool,
}

#[derive(Args, Clone)]
struct PbwOpts {
    /// Also check the ν-twist (log-canonical brackets only).
    #[arg(long)]
    nu: bool,
    /// Random words per check.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Highest filtration degree p in the associated-graded check.
    #[arg(long, default_value_t = 3)]
    max_filtration: u32,
    /// Highest weight in the associated-graded check.
    #[arg(long, default_value_t = 6)]
    gr_weight: u64,
}

impl From<RunCommand> for Op {
    fn from(c: RunCommand) -> Op {
        match c {
            RunCommand::Check => Op::Check,
            RunCommand::Trace(o) => Op::Trace { tsv: o.tsv },
            RunCommand::Homology(o) => Op::Homology {
                coeff: o.coeff,
                max_weight: o.max_weight.into(),
                tsv: o.tsv,
            },
            RunCommand::Cohomology(o) => Op::Cohomology {
                max_weight: o.max_weight.into(),
                tsv: o.tsv,
            },
            RunCommand::Duality(o) => Op::Duality {
                max_weight: o.max_weight.into(),
                tsv: o.tsv,
            },
            RunCommand::Pbw(o) => Op::Pbw {
                nu: o.nu,
                samples: o.samples,
                seed: o.seed,
                max_filtration: o.max_filtration,
                gr_weight: o.gr_weight,
            },
        }
    }
}

/// A spec argument: `catalog:<id>` or a path to a JSON file.
fn load(spec: &str) -> Result<(String, SpecDocument), String> {
    if let Some(id) = spec.strip_prefix("catalog:") {
        let entry = catalog::get(id).ok_or_else(|| format!("no catalog entry {id:?}"))?;
        return Ok((id.to_string(), entry.document));
    }
    let doc = SpecDocument::read(Path::new(spec)).map_err(|e| e.to_string())?;
    let label = doc.label().unwrap_or_else(|| spec.to_string());
    Ok((label, doc))
}

fn run_on_spec(spec: &str, op: Op, exec: Execution) -> Report {
    let (label, doc) = match load(spec) {
        Ok(x) => x,
        Err(e) => return Report::usage(e),
    };
    match doc.to_structure() {
        Ok(s) => report::run(&op, &label, &s, exec),
        Err(DocumentError::Structure(StructureError::JacobiViolation { witnesses })) => {
            let vars = doc.var_table().expect("variables were accepted");
            report::jacobi_failure(&label, &vars, &witnesses)
        }
        Err(e) => Report::usage(format!("{spec}: {e}")),
    }
}

fn run_catalog(action: Option<CatalogAction>, exec: Execution) -> Report {
    match action.unwrap_or(CatalogAction::List) {
        CatalogAction::List => Report::ok(report::catalog_listing(&catalog::entries())),
        CatalogAction::Show { id } => match catalog::get(&id) {
            Some(e) => Report::ok(e.document.to_json() + "\n"),
            None => Report::usage(format!("no catalog entry {id:?}")),
        },
        CatalogAction::Run { command } => {
            let op = Op::from(command);
            let entries: Vec<(&'static str, PoissonStructure)> = catalog::entries()
                .into_iter()
                .map(|e| (e.id, e.structure()))
                .collect();
            let reports = exec.map(entries, |(id, s)| (id, report::run(&op, id, &s, exec)));
            let mut out = String::new();
            let mut status = Status::Pass;
            for (id, r) in reports {
                out.push_str(&format!("== {id} ==\n"));
                out.push_str(&r.text);
                if let Some(e) = &r.error {
                    out.push_str(&format!("error: {e}\n"));
                }
                out.push('\n');
                status = status.max(r.status);
            }
            Report {
                text: out,
                status,
                error: None,
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let report = match cli.command {
        Command::Check { spec } => run_on_spec(&spec, Op::Check, exec),
        Command::Trace { spec, opts } => run_on_spec(&spec, RunCommand::Trace(opts).into(), exec),
        Command::Homology { spec, opts } => {
            run_on_spec(&spec, RunCommand::Homology(opts).into(), exec)
        }
        Command::Cohomology { spec, opts } => {
            run_on_spec(&spec, RunCommand::Cohomology(opts).into(), exec)
        }
        Command::Duality { spec, opts } => {
            run_on_spec(&spec, RunCommand::Duality(opts).into(), exec)
        }
        Command::Pbw { spec, opts } => run_on_spec(&spec, RunCommand::Pbw(opts).into(), exec),
        Command::Catalog { action } => run_catalog(action, exec),
    };
    print!("{}", report.text);
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    ExitCode::from(report.status.code())
}
