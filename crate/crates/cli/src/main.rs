use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quiver_ext::Field;
use quiver_ext_cli::suites::DEFAULT_SEED;
use quiver_ext_cli::{json_report, load_workspace, run_task, text_report, RunOptions, Task, DEFAULT_WORKSPACE};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exact Hom/Ext computations and degeneration certificates for bound quiver representations.
#[derive(Debug, Parser)]
#[command(name = "quiver-ext", version)]
struct Cli {
    /// Workspace file, or a bundled fixture: f1, f2, f2_degeneration, f3.
    #[arg(short, long, global = true, default_value = DEFAULT_WORKSPACE)]
    workspace: String,
    /// Ground field, `Q` or `Fp` with p prime (e.g. F101); overrides the workspace.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Longest path length tried when computing the algebra basis.
    #[arg(long, global = true)]
    truncation_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate the workspace and report algebra data.
    Check,
    /// dim Hom(M, N).
    Hom { m: String, n: String },
    /// Ext¹(V, U) in the cocycle model.
    Ext1 { v: String, u: String },
    /// Ext²(N, M) in both models.
    Ext2 { n: String, m: String },
    /// Euler form of two dimension vectors (`1,2,1`) or module names.
    Euler { d1: String, d2: String },
    /// Orbit dimension of M.
    Orbit { m: String },
    /// Tangent space dimension of the module variety at N.
    Tangent { n: String },
    /// Tangent pairs in Z(U,U) x Z(V,V).
    ETangent { u: String, v: String },
    /// Kernel and rank of Psi for a declared exact sequence.
    Psi { ses: String },
    /// Search for an exact sequence 0 -> U -> M -> V -> 0.
    Witness { m: String, u: String, v: String },
    /// Regularity certificate for a declared exact sequence.
    Certify { ses: String },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

impl Command {
    fn task(self) -> Task {
        match self {
            Command::Check => Task::Check,
            Command::Hom { m, n } => Task::Hom { m, n },
            Command::Ext1 { v, u } => Task::Ext1 { v, u },
            Command::Ext2 { n, m } => Task::Ext2 { n, m },
            Command::Euler { d1, d2 } => Task::Euler { d1, d2 },
            Command::Orbit { m } => Task::Orbit { m },
            Command::Tangent { n } => Task::Tangent { n },
            Command::ETangent { u, v } => Task::ETangent { u, v },
            Command::Psi { ses } => Task::Psi { ses },
            Command::Witness { m, u, v } => Task::Witness { m, u, v },
            Command::Certify { ses } => Task::Certify { ses },
            Command::Verify { suite } => Task::Verify { suite },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let field = match cli.field.as_deref().map(Field::parse).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ws = match load_workspace(&cli.workspace, field, cli.truncation_cap) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = match run_task(&cli.command.task(), &ws, RunOptions { seed: cli.seed }) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => json_report(&ws, &outcome) + "\n",
        Format::Text => text_report(&outcome),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}
