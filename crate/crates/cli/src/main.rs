use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qqueer::cache::CACHE_DIR_ENV;
use qqueer_cli::config::{GridPoint, Mode, RunConfig, Suite};

#[derive(Parser)]
#[command(
    name = "qqueer",
    version,
    about = "Exact verification suites for quantum coordinate superalgebras of U_q(q_n)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// QYBE and inverse checks for the structure matrices.
    VerifyMatrices(Common),
    /// Equivalence of the alternative presentations.
    VerifyPresentations(Common),
    /// Graded dimensions against the classical counts, and flatness.
    Dims(Common),
    /// Relation invariance under the actions and the Ψ-defect.
    VerifyActions {
        #[command(flatten)]
        common: Common,
        /// Write Φ operator matrices on 𝒪 as `row col coeff` triplets here.
        #[arg(long)]
        export_matrices: Option<PathBuf>,
    },
    /// Invariants: x-invariance, X relations and the FFT tables.
    Fft(Common),
    /// Δ̃, Ω and their compatibilities.
    Howe(Common),
    /// Every suite, or those given by --suites.
    All {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',')]
        suites: Vec<Suite>,
    },
    /// Print the reduced relation bases of one grid point.
    Relations {
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct Common {
    /// Rows of t. Without --r/--s/--n the default grid is used; a missing one is 1.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Degree bound overriding every suite default.
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = qqueer_cli::config::DEFAULT_SEED)]
    seed: u64,
    /// Per-component word ceiling.
    #[arg(long, default_value_t = qqueer::graded::DEFAULT_WORD_CEILING)]
    max_words: u128,
    /// Record elapsed time per suite (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn config(c: &Common, suites: &[Suite]) -> RunConfig {
    let mut cfg = RunConfig::default();
    if c.r.is_some() || c.s.is_some() || c.n.is_some() {
        cfg.grid = vec![GridPoint::new(
            c.r.unwrap_or(1),
            c.s.unwrap_or(1),
            c.n.unwrap_or(1),
        )];
    }
    cfg.dmax = c.dmax;
    cfg.mode = c.mode;
    cfg.suites = suites.iter().copied().collect::<BTreeSet<_>>();
    cfg.cache_dir = c.cache_dir.clone();
    cfg.seed = c.seed;
    cfg.ceiling = c.max_words;
    cfg.timings = c.timings;
    cfg
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::Relations { r, s, n } = cli.cmd {
        let cfg = RunConfig {
            grid: vec![GridPoint::new(r, s, n)],
            ..RunConfig::default()
        };
        if let Err(e) = cfg.validate() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        print!("{}", qqueer_cli::relation_dump(r, s, n));
        return ExitCode::SUCCESS;
    }
    let (common, cfg) = match &cli.cmd {
        Cmd::VerifyMatrices(c) => (c, config(c, &[Suite::Matrices])),
        Cmd::VerifyPresentations(c) => (c, config(c, &[Suite::Presentations])),
        Cmd::Dims(c) => (c, config(c, &[Suite::Dims])),
        Cmd::VerifyActions {
            common,
            export_matrices,
        } => {
            let mut cfg = config(common, &[Suite::Actions]);
            cfg.export_dir = export_matrices.clone();
            (common, cfg)
        }
        Cmd::Fft(c) => (c, config(c, &[Suite::Invariants, Suite::Fft])),
        Cmd::Howe(c) => (c, config(c, &[Suite::Howe])),
        Cmd::All { common, suites } => {
            let s: Vec<Suite> = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites.clone()
            };
            (common, config(common, &s))
        }
        Cmd::Relations { .. } => unreachable!(),
    };
    let report = match qqueer_cli::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match common.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match &common.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: writing {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
