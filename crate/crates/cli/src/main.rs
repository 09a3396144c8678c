mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use adinkra::analysis::DEFAULT_SEED;
use adinkra::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "adinkra", version, about = "Adinkras, their Laplacians and Smith normal forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the parallel parts (default: one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the Adinkra of a code and print it as JSON.
    Build(BuildArgs),
    /// Smith normal form of a matrix attached to an Adinkra, or of a matrix file.
    Snf(SnfArgs),
    /// Determinant of a matrix attached to an Adinkra.
    Det(DetArgs),
    /// Laplacian invariant factors of the catalog codes.
    Table(TableArgs),
    /// Run a verification suite over the catalog or one code.
    Verify(VerifyArgs),
    /// Profiles of every switching class of totally odd signatures.
    Classes(ClassesArgs),
    /// Standard form of the parity check matrix and the Cayley graph check.
    Cayley(CayleyArgs),
}

#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
pub struct CodeSource {
    /// Code name such as d4, e8, h8 or d4+t2.
    #[arg(long)]
    pub code: Option<String>,

    /// Generator matrix text file.
    #[arg(long)]
    pub code_file: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignatureSource {
    /// Iterated prisms; needs the code to end in zero columns.
    Prism,
    /// Solve the parity system for a totally odd signature.
    Solve,
    /// Read signs from --adinkra-file.
    File,
    /// Representative of switching class --class-index.
    ClassIndex,
}

#[derive(Args, Debug)]
pub struct AdinkraSource {
    #[command(flatten)]
    pub code: CodeSource,

    #[arg(long, value_enum, default_value_t = SignatureSource::Solve)]
    pub signature: SignatureSource,

    /// Adinkra JSON file, used alone or with --signature file.
    #[arg(long, conflicts_with_all = ["code", "code_file"])]
    pub adinkra_file: Option<PathBuf>,

    #[arg(long, default_value_t = 0)]
    pub class_index: usize,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(flatten)]
    pub source: AdinkraSource,

    /// Write the JSON here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Laplacian,
    Adjacency,
    #[value(name = "X", alias = "x")]
    X,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingChoice {
    #[value(name = "Z", alias = "z")]
    Z,
    /// Polynomials over the field with p elements, using the x1 = x specialization.
    #[value(name = "Fpx", alias = "fpx")]
    Fpx,
}

#[derive(Args, Debug)]
pub struct SnfArgs {
    #[command(flatten)]
    pub source: AdinkraSource,

    #[arg(long, value_enum, default_value_t = MatrixKind::Laplacian)]
    pub kind: MatrixKind,

    /// Matrix JSON file instead of an Adinkra.
    #[arg(long, conflicts_with_all = ["code", "code_file", "adinkra_file"])]
    pub matrix_file: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = RingChoice::Z)]
    pub ring: RingChoice,

    #[arg(long)]
    pub p: Option<u64>,

    /// Include the transformation matrices B and C in JSON output.
    #[arg(long)]
    pub witnesses: bool,
}

#[derive(Args, Debug)]
pub struct DetArgs {
    #[command(flatten)]
    pub source: AdinkraSource,

    #[arg(long, value_enum, default_value_t = MatrixKind::Laplacian)]
    pub kind: MatrixKind,

    /// Determinant of the x1 = x lift as a polynomial in x.
    #[arg(long, conflicts_with = "p")]
    pub lifted: bool,

    /// Reduce modulo this prime first.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,

    #[arg(long, default_value_t = 4)]
    pub max_k: usize,

    /// Compare with the published table; exit 3 on any difference.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// eigen, invfactors, oddprime, switching, cayley or conjecture.
    #[arg(long)]
    pub suite: String,

    #[command(flatten)]
    pub code: CodeSource,

    /// Random switch sets per Adinkra for the switching suite.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
}

#[derive(Args, Debug)]
pub struct ClassesArgs {
    #[command(flatten)]
    pub code: CodeSource,
}

#[derive(Args, Debug)]
pub struct CayleyArgs {
    #[command(flatten)]
    pub code: CodeSource,
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible(_) | Error::Invalid(_) | Error::Singular => 2,
        Error::Mismatch(_) => 3,
        Error::Parse(_)
        | Error::Dimension(_)
        | Error::UnknownCode(_)
        | Error::InvalidParameter(_)
        | Error::NotPrime(_)
        | Error::Guard(_)
        | Error::Json(_) => 64,
        Error::Io(_) => 66,
        Error::Internal(_) => 70,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(70);
        }
    }
    let mut out = String::new();
    let result = commands::run(&cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(74);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
