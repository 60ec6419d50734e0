use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use simplicial_bialgebra::verify::{self, Config, Fault, Suite};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact verification of Eilenberg–Zilber and Dold–Kan identities on
/// truncated simplicial abelian groups.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Cli {
    /// axioms, bialgebra, dold-kan, homotopy, monoid or all
    #[arg(value_parser = Suite::NAMES, required_unless_present = "list_checks")]
    suite: Option<String>,

    /// Run only these checks (repeatable, or comma separated)
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,

    /// Comma separated objects: delta:<p>, nerve:z<n>, const:Z, complex:[..]
    #[arg(long)]
    objects: Option<String>,

    /// Highest simplicial level checked (1..=6)
    #[arg(long, default_value_t = 3)]
    max_level: usize,

    /// Use normalized chains (the default)
    #[arg(long, overrides_with = "unnormalized")]
    normalized: bool,

    /// Use unnormalized chains
    #[arg(long, overrides_with = "normalized")]
    unnormalized: bool,

    /// text, or one JSON record per line
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for checks that sample random data
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Print the registry of checks and exit
    #[arg(long)]
    list_checks: bool,

    /// Include wall-clock time per report
    #[arg(long)]
    timings: bool,

    /// Corrupt one ingredient on purpose
    #[arg(long, value_parser = ["face", "shuffle", "koszul", "unit"])]
    inject: Option<String>,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list_checks {
        print!("{}", verify::list_checks());
        return ExitCode::SUCCESS;
    }
    let suite: Suite = match cli.suite.as_deref().unwrap_or("all").parse() {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let objects = match cli.objects.as_deref().map(verify::parse_objects).transpose() {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    let inject = match cli.inject.as_deref().map(str::parse::<Fault>).transpose() {
        Ok(f) => f,
        Err(e) => return usage(e),
    };
    let cfg = Config {
        objects,
        checks: cli.checks,
        max_level: cli.max_level,
        normalized: !cli.unnormalized,
        seed: cli.seed,
        inject,
    };
    match verify::run(suite, &cfg) {
        Ok(reports) => {
            match cli.format {
                Format::Text => print!("{}", verify::render_text(&reports, cli.timings)),
                Format::Json => print!("{}", verify::render_json(&reports, cli.timings)),
            }
            ExitCode::from(verify::exit_code(&reports) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
