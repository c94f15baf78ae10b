use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use orbitcalc::doc;
use orbitcalc::run::{execute, CliError, CommandKind, ErrorCode, RunOptions};

/// Exact calculus of weighted orbit spaces for circle actions on 3- and
/// 4-manifolds.
#[derive(Parser)]
#[command(name = "orbitcalc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Include reduction steps in reports.
    #[arg(long)]
    trace: bool,
    /// Treat notes as errors.
    #[arg(long)]
    strict: bool,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Check the legality conditions of a weighted orbit space.
    Validate {
        /// Input file; `-` reads standard input.
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Identify a closed 3-manifold from circle-action orbit data.
    Classify3 {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Identify a closed simply-connected 4-manifold from its orbit space
    /// or fixed-point configuration.
    Classify4 {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Assemble the plumbing chain and intersection matrices.
    Plumb {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Reduce a symmetric integer matrix by elementary congruence moves.
    Reduce {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Enumerate the single-segment weighted-arc cases.
    Enumerate {
        /// Largest alpha to enumerate.
        #[arg(long = "k-max", default_value_t = 12)]
        k_max: i64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError {
                code: ErrorCode::Parse,
                message: format!("cannot read standard input: {e}"),
            })?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| CliError {
        code: ErrorCode::Parse,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, file, common) = match &cli.command {
        Command::Validate { file, common } => (CommandKind::Validate, Some(file), common),
        Command::Classify3 { file, common } => (CommandKind::Classify3, Some(file), common),
        Command::Classify4 { file, common } => (CommandKind::Classify4, Some(file), common),
        Command::Plumb { file, common } => (CommandKind::Plumb, Some(file), common),
        Command::Reduce { file, common } => (CommandKind::Reduce, Some(file), common),
        Command::Enumerate { common, .. } => (CommandKind::Enumerate, None, common),
    };
    let options = RunOptions {
        k_max: match &cli.command {
            Command::Enumerate { k_max, .. } => *k_max,
            _ => RunOptions::default().k_max,
        },
        trace: common.trace,
        strict: common.strict,
    };

    let result = (|| {
        let parsed = match file {
            Some(path) => {
                let bytes = read_input(path)?;
                Some(doc::parse(&bytes)?)
            }
            None => None,
        };
        execute(kind, parsed.as_ref(), &options)
    })();

    match result {
        Ok(output) => {
            match common.format {
                Format::Text => print!("{}", output.report.to_text()),
                Format::Json => print!("{}", output.report.to_json()),
            }
            match output.exit_code {
                0 => ExitCode::SUCCESS,
                code => ExitCode::from(code as u8),
            }
        }
        Err(err) => {
            let strict_note =
                err.code == ErrorCode::Internal && err.message.starts_with("strict mode");
            if strict_note {
                eprintln!("error: {}", err.message);
                ExitCode::from(1)
            } else {
                eprintln!("error{}", err);
                ExitCode::from(err.code.exit_code() as u8)
            }
        }
    }
}
