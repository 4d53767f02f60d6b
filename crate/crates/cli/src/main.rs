//! `euclid`: command-line front end for the ordinal, ring and Euclidean
//! function engines. Exit status: 0 success, 2 domain error, 3 not
//! Euclidean (a finding, reported in full), 4 resource limit, 5 syntax.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Options;
use report::CliError;

#[derive(Parser)]
#[command(
    name = "euclid",
    version,
    about = "Transfinite Euclidean functions on concrete rings"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Sample count for randomized checks.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: u64,
    /// Range of the reporting window for the infinite models.
    #[arg(long, global = true)]
    window: Option<u64>,
    /// Largest ring carrier handled exhaustively.
    #[arg(long, global = true, default_value_t = 512)]
    max_size: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an ordinal expression to Cantor normal form.
    OrdinalEval { expr: String },
    /// Structure of a finite ring or a symbolic ring specification.
    RingAnalyze { ring: String },
    /// Bottom Euclidean function and order type of a finite ring.
    EuclidBottom { ring: String },
    /// Check a table of values (nonzero elements in canonical order, comma separated).
    EuclidVerify { ring: String, values: String },
    /// Induced function on R/(b) from the bottom function of R.
    EuclidQuotient { ring: String, element: String },
    /// Product constructions on R1 x R2.
    EuclidProduct { first: String, second: String },
    /// Ordinal-sum and natural-sum bounds for a product.
    ProductBounds {
        #[arg(required = true)]
        order_types: Vec<String>,
    },
    /// A small ring with the given order type below w^2.
    Realize { ordinal: String },
    /// Windowed bottom function on the integers.
    ModelZ,
    /// Windowed bottom function on GF(q)[t].
    ModelPoly { q: u64 },
    /// Randomized check on Z localized at a comma-separated prime set; optionally divide A by B.
    ModelLocalize {
        primes: String,
        #[arg(num_args = 0..=2)]
        pair: Vec<String>,
    },
    /// Whether the length function is Euclidean (finite ring, Z, or GF(q)[t]).
    LEuclidean { ring: String },
    /// Length function of a poset given as `a < b` lines (`-` for stdin).
    PosetLength { file: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::OrdinalEval { .. } => "ordinal-eval",
            Command::RingAnalyze { .. } => "ring-analyze",
            Command::EuclidBottom { .. } => "euclid-bottom",
            Command::EuclidVerify { .. } => "euclid-verify",
            Command::EuclidQuotient { .. } => "euclid-quotient",
            Command::EuclidProduct { .. } => "euclid-product",
            Command::ProductBounds { .. } => "product-bounds",
            Command::Realize { .. } => "realize",
            Command::ModelZ => "model-z",
            Command::ModelPoly { .. } => "model-poly",
            Command::ModelLocalize { .. } => "model-localize",
            Command::LEuclidean { .. } => "l-euclidean",
            Command::PosetLength { .. } => "poset-length",
        }
    }
}

fn run(cli: &Cli, opts: &Options) -> Result<report::Report, CliError> {
    match &cli.command {
        Command::OrdinalEval { expr } => commands::ordinal_eval(expr),
        Command::RingAnalyze { ring } => commands::ring_analyze(ring, opts),
        Command::EuclidBottom { ring } => commands::euclid_bottom(ring, opts),
        Command::EuclidVerify { ring, values } => commands::euclid_verify(ring, values, opts),
        Command::EuclidQuotient { ring, element } => commands::euclid_quotient(ring, element, opts),
        Command::EuclidProduct { first, second } => commands::euclid_product(first, second, opts),
        Command::ProductBounds { order_types } => commands::product_bounds_cmd(order_types),
        Command::Realize { ordinal } => commands::realize(ordinal, opts),
        Command::ModelZ => commands::model_z(opts),
        Command::ModelPoly { q } => commands::model_poly(*q, opts),
        Command::ModelLocalize { primes, pair } => {
            if pair.len() == 1 {
                return Err(CliError::syntax("model-localize takes either no elements or two (A B)"));
            }
            commands::model_localize(primes, pair, opts)
        }
        Command::LEuclidean { ring } => commands::l_euclidean(ring, opts),
        Command::PosetLength { file } => commands::poset_length(file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(5)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if cli.max_size > euclid_core::ring::HARD_MAX_SIZE {
        eprintln!("--max-size is capped at {}", euclid_core::ring::HARD_MAX_SIZE);
        return ExitCode::from(4);
    }
    let opts = Options {
        seed: cli.seed,
        samples: cli.samples,
        window: cli.window,
        max_size: cli.max_size,
    };
    match run(&cli, &opts) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("report serializes")
                );
            } else {
                print!("{}", report.render_text());
            }
            report.exit_code()
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&e.to_json(cli.command.name())).expect("error serializes")
                );
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.kind.code())
        }
    }
}
