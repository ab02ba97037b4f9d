//! `hatcraft`: build, verify and certify hat guessing strategies.

mod commands;
mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hatcraft::strategy::GadgetKind;
use hatcraft::verify::DEFAULT_MAX_CONFIGS;
use hatcraft::Execution;
use num_rational::Ratio;

use report::Report;

/// Exit statuses.
pub const EXIT_OK: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_SOFTWARE: u8 = 70;
pub const EXIT_CANT_CREATE: u8 = 73;

#[derive(Parser)]
#[command(name = "hatcraft", version, about = "Hat guessing strategies on digraphs")]
struct Cli {
    /// Worker threads; 1 runs everything sequentially, 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Largest configuration space checked exhaustively.
    #[arg(long, global = true, env = "HATCRAFT_MAX_CONFIGS", default_value_t = DEFAULT_MAX_CONFIGS)]
    max_configs: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and, where one exists, its strategy.
    Construct(ConstructArgs),
    /// Check a strategy on every configuration, or on seeded samples.
    Verify(VerifyArgs),
    /// List the configurations a strategy loses on.
    Losing(LosingArgs),
    /// Decide solvability by exact search.
    Solve(SolveArgs),
    /// Non-solvability bounds and certificates.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Gadget certification and search.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Blow-ups and gadget compositions.
    #[command(subcommand)]
    Compose(ComposeCommand),
    /// Check that every edge of a solved undirected graph is needed.
    Critical(CriticalArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    name: ConstructName,
    /// Graph output file.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
    /// Strategy output file.
    #[arg(short = 's', long, global = true)]
    strategy: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructName {
    /// K_q with the sum strategy.
    Clique { q: usize },
    /// K_{2,2} over three colours.
    K22,
    /// K_{q-1,(q-1)^(q-1)} over q colours.
    Bipartite { q: usize },
    /// Directed n-cycle over two colours.
    Cycle2 { n: usize },
    /// Undirected cycle on 2n vertices over three colours.
    EvenCycle { n: usize },
    /// Bidirected K_{m,s}, graph only.
    CompleteBipartite { m: usize, s: usize },
    /// Directed n-cycle, graph only.
    DirectedCycle { n: usize },
    /// Undirected n-cycle, graph only.
    UndirectedCycle { n: usize },
    /// Undirected path, graph only.
    Path { n: usize },
    /// The six-vertex 4-gadget graph, graph only.
    SixVertex,
    /// Blown-up bipartite graph with clique number at most eps * q'.
    Epsilon {
        q: usize,
        /// Rational in (0, 1], e.g. 2/3.
        eps: Ratio<u64>,
        #[arg(long, value_enum, default_value_t = Route::Bipartite)]
        route: Route,
    },
    /// K_omega-free blown-up bipartite graph.
    Kfree {
        q: usize,
        omega: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Bipartite,
    K22,
}

#[derive(Args)]
struct Instance {
    /// Graph file.
    #[arg(short = 'g', long)]
    graph: PathBuf,
    /// Strategy file.
    #[arg(short = 's', long)]
    strategy: PathBuf,
    /// Number of colours.
    #[arg(short = 'q', long)]
    q: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: Instance,
    /// Losing configurations to list.
    #[arg(long, default_value_t = 10)]
    cap: usize,
    /// Check this many seeded samples instead of every configuration.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct LosingArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, default_value_t = hatcraft::verify::DEFAULT_LOSING_CAP)]
    cap: usize,
}

#[derive(Args)]
struct Budget {
    /// Search node budget.
    #[arg(long, default_value_t = 1_000_000)]
    budget_nodes: u64,
    /// Search time budget in seconds.
    #[arg(long, default_value_t = 60.0)]
    budget_seconds: f64,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(short = 'g', long)]
    graph: PathBuf,
    #[arg(short = 'q', long)]
    q: usize,
    #[command(flatten)]
    budget: Budget,
    /// Where to write a strategy when one is found.
    #[arg(short = 's', long)]
    strategy: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// (n - I) (q/(q-1))^I < q rules out q-solvability.
    Counting {
        #[arg(long)]
        n: Option<usize>,
        /// Size of an induced acyclic set.
        #[arg(long = "I")]
        acyclic: Option<usize>,
        #[arg(short = 'q', long)]
        q: usize,
        /// Take n and I from this graph instead.
        #[arg(short = 'g', long, conflicts_with_all = ["n", "acyclic"])]
        graph: Option<PathBuf>,
    },
    /// Semibipartite partition with |L| <= q - 2; with a strategy, also
    /// produce the configuration it loses on.
    Semibipartite {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'q', long)]
        q: usize,
        #[arg(short = 's', long)]
        strategy: Option<PathBuf>,
    },
    /// The root of x + ln x = 0.
    Alpha {
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// I + q ((q-1)/q)^I as an exact rational.
    MinVertices {
        #[arg(long = "I")]
        acyclic: usize,
        #[arg(short = 'q', long)]
        q: usize,
    },
    /// Graphs on n vertices with an induced acyclic half.
    HalfAcyclic {
        #[arg(long)]
        n: usize,
        #[arg(short = 'q', long)]
        q: usize,
    },
    /// Try every certificate on a graph.
    Certify {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'q', long)]
        q: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Unit,
    Cycle3,
    SixVertex,
}

impl From<Kind> for GadgetKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Unit => GadgetKind::Unit,
            Kind::Cycle3 => GadgetKind::Cycle3,
            Kind::SixVertex => GadgetKind::SixVertex,
        }
    }
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Certify one of the built-in gadgets.
    Check {
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Search affine strategies on a graph for gadgets.
    Search {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'q', long)]
        q: usize,
        #[arg(long)]
        pivot: usize,
        /// Allowed arc coefficients, comma separated; all of Z_q with free
        /// offsets when omitted.
        #[arg(long, value_delimiter = ',')]
        coefficients: Option<Vec<u8>>,
        #[arg(long, default_value_t = hatcraft::search::DEFAULT_MAX_CANDIDATES)]
        max_work: u64,
        /// Gadgets to list.
        #[arg(long, default_value_t = 10)]
        list: usize,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Args)]
struct Checking {
    /// Samples used when the configuration space is over the cap.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum ComposeCommand {
    /// Blow each vertex up into an r-clique.
    Blowup {
        #[command(flatten)]
        instance: Instance,
        #[arg(short = 'r', long)]
        r: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long = "strategy-out")]
        strategy_out: Option<PathBuf>,
        #[command(flatten)]
        checking: Checking,
    },
    /// Compose copies of a gadget along a transitive tournament.
    Gadgets {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'p', long)]
        p: usize,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long = "strategy-out")]
        strategy_out: Option<PathBuf>,
        #[command(flatten)]
        checking: Checking,
    },
}

#[derive(Args)]
struct CriticalArgs {
    #[command(flatten)]
    instance: Instance,
    /// Assume undirected forests are not 3-solvable.
    #[arg(long)]
    axiom_trees: bool,
    #[command(flatten)]
    budget: Budget,
}

/// A failed run with its exit status.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn data(message: impl Into<String>) -> Self {
        Self { code: EXIT_DATA, message: message.into() }
    }

    pub fn input(path: &Path, e: std::io::Error) -> Self {
        Self { code: EXIT_NO_INPUT, message: format!("{}: {e}", path.display()) }
    }

    pub fn output(path: &Path, e: std::io::Error) -> Self {
        Self { code: EXIT_CANT_CREATE, message: format!("{}: {e}", path.display()) }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<hatcraft::Error> for Failure {
    fn from(e: hatcraft::Error) -> Self {
        use hatcraft::Error as E;
        let code = match e {
            E::Parse { .. } | E::ShapeMismatch(_) | E::SelfLoop(_) | E::DuplicateArc(..) => EXIT_DATA,
            E::EmptyLosingSet | E::NotAFunction { .. } | E::PhiMismatch { .. } => EXIT_REFUTED,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

/// Shared run settings.
pub struct Ctx {
    pub execution: Execution,
    pub max_configs: u64,
}

fn configure_threads(threads: usize) -> Result<Execution, Failure> {
    if threads == 1 {
        return Ok(Execution::Sequential);
    }
    #[cfg(feature = "parallel")]
    if threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure { code: EXIT_SOFTWARE, message: e.to_string() })?;
    }
    Ok(Execution::Parallel)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let mut report = Report::new(&argv);
    let outcome = configure_threads(cli.threads).and_then(|execution| {
        let ctx = Ctx { execution, max_configs: cli.max_configs };
        commands::run(cli.command, &ctx, &mut report)
    });
    match outcome {
        Ok(code) => {
            print!("{}", report.render());
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
