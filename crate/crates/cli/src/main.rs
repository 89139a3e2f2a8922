mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use bei::poly::{MonomialOrder, PrimeField, DEFAULT_CHARACTERISTIC};
use bei::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Binomial edge ideals: regularity, Betti tables, primes and census checks.
///
/// Exit status: 0 when everything passes, 1 when a check fails, 2 for usage
/// or input errors, 3 when a vertex ceiling is exceeded.
#[derive(Debug, Parser)]
#[command(name = "bei", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Field characteristic (a prime below 2^31).
    #[arg(long = "char", global = true, env = "BEI_CHAR", default_value_t = DEFAULT_CHARACTERISTIC)]
    pub characteristic: u32,

    #[arg(long, global = true, env = "BEI_ORDER", value_enum, default_value_t = OrderArg::Degrevlex)]
    pub order: OrderArg,

    #[arg(long, global = true, env = "BEI_FORMAT", value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Worker threads for census runs; 0 picks one per core.
    #[arg(long, global = true, env = "BEI_JOBS", default_value_t = 0)]
    pub jobs: usize,

    /// Directory for cached Betti tables, keyed by canonical form.
    #[arg(long, global = true, env = "BEI_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Ignore --cache-dir and BEI_CACHE_DIR.
    #[arg(long, global = true, env = "BEI_NO_CACHE")]
    pub no_cache: bool,

    /// Override every per-check vertex ceiling.
    #[arg(long, global = true, env = "BEI_CEILING")]
    pub ceiling: Option<usize>,
}

impl GlobalOpts {
    pub fn field(&self) -> Result<PrimeField, Error> {
        PrimeField::new(self.characteristic)
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        match self.order {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Text,
}

/// Exactly one way of naming a graph.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Inline edges such as "1-2,2-3,3-1".
    #[arg(long)]
    pub edges: Option<String>,

    /// A file holding an edge list or a graph6 line.
    #[arg(long)]
    pub file: Option<PathBuf>,

    #[arg(long)]
    pub graph6: Option<String>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Vertex count for --edges when isolated vertices follow the last label.
    #[arg(long, requires = "edges")]
    pub vertices: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regularity of J_G, and of S/J_G.
    Reg(GraphArgs),
    /// Graded Betti table of S/J_G.
    Betti(GraphArgs),
    /// Reduced Gröbner basis of J_G.
    Gb(GraphArgs),
    /// Minimal primes P_T for the cut sets T.
    Primes(GraphArgs),
    /// Cut sets of the graph.
    Cutsets(GraphArgs),
    /// Path-monomial generators of J_{G minus e} : f_e.
    Colon {
        #[command(flatten)]
        graph: GraphArgs,
        /// The edge, as "i-j".
        #[arg(long)]
        edge: String,
        /// Also compare with the colon computed by elimination.
        #[arg(long)]
        check: bool,
    },
    /// The alpha invariant of each vertex and its minimum.
    Alpha(GraphArgs),
    /// Join of two graphs given in graph6, with the join formulas checked.
    Join { left: String, right: String },
    /// Run checks over every isomorphism class up to --nmax vertices.
    Census {
        #[arg(long, env = "BEI_NMAX")]
        nmax: usize,
        /// Comma-separated check names; defaults to the regularity bounds.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Run one check on a graph, or over a census when --nmax is given.
    Verify {
        check: String,
        #[arg(long, env = "BEI_NMAX", conflicts_with_all = ["edges", "file", "graph6"])]
        nmax: Option<usize>,
        #[arg(long)]
        edges: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, requires = "edges")]
        vertices: Option<usize>,
    },
}

/// What a command concluded, before mapping to an exit status.
pub enum Outcome {
    Pass,
    CheckFailed,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Capacity { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("bei: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
