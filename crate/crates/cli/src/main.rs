//! Command-line front end.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use preproj::cache::{self, Source};
use preproj::hochschild::Hochschild;
use preproj::verify::{self, Report};
use preproj::{report, Algebra, QuiverId};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "preproj", version, about = "Hochschild cohomology of preprojective algebras of types D and E")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coxeter number, exponents, nu, fixed vertices and HH degree ranges.
    Info(Opts),
    /// Graded monomial basis, by degree and vertex pair.
    Basis(Opts),
    /// Hilbert matrix H_A(t).
    Hilbert(Opts),
    /// Center: Hilbert series, generators and their products.
    Center(Opts),
    /// Degreewise dimensions of HH^0..HH^7 and the named classes.
    Hh(Opts),
    /// M_alpha, M_beta, kappa, H^eta, zero verdicts and the product table.
    Products(Opts),
    /// Replays every verification check.
    Verify(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args, Clone)]
struct Opts {
    /// Comma-separated quivers: d4, d5, ..., e6, e7, e8.
    #[arg(long, short, value_delimiter = ',', required = true)]
    quiver: Vec<String>,
    #[arg(long, short, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Basis cache directory (default: $PREPROJ_CACHE_DIR, else no cache).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Rebuild the basis without reading or writing the cache.
    #[arg(long)]
    no_cache: bool,
    /// Only build cohomology in internal degrees |g| <= N (hh, verify).
    #[arg(long, value_name = "N")]
    max_degree: Option<i64>,
    /// Timing and cache information on stderr.
    #[arg(long, short)]
    verbose: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<preproj::Error> for Failure {
    fn from(e: preproj::Error) -> Self {
        Failure::Verification(e.to_string())
    }
}

fn load(id: QuiverId, opts: &Opts) -> Result<Algebra, Failure> {
    let t = Instant::now();
    let dir = if opts.no_cache { None } else { cache::resolve_dir(opts.cache_dir.as_deref()) };
    let (alg, source) = cache::load_or_build(id, dir.as_deref())?;
    if opts.verbose {
        let how = match source {
            Source::Built => "built",
            Source::Cached => "loaded from cache",
        };
        eprintln!("{id}: basis of dimension {} {how} in {:.2?}", alg.dim(), t.elapsed());
    }
    Ok(alg)
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String, latex: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serializable report")),
        Format::Text => print!("{}", text()),
        Format::Latex => print!("{}", latex()),
    }
}

fn run(cmd: &Command) -> Result<(), Failure> {
    let (Command::Info(o)
    | Command::Basis(o)
    | Command::Hilbert(o)
    | Command::Center(o)
    | Command::Hh(o)
    | Command::Products(o)
    | Command::Verify(o)) = cmd;
    let ids = o
        .quiver
        .iter()
        .map(|s| QuiverId::parse(s).map_err(|e| Failure::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let f = o.format;
    let mut reports: Vec<Report> = Vec::new();
    for &id in &ids {
        match cmd {
            Command::Info(_) => {
                let r = report::info(id)?;
                emit(f, &r, || render::info_text(&r), || render::info_latex(&r));
            }
            Command::Basis(_) => {
                let r = report::basis(&load(id, o)?);
                emit(f, &r, || render::basis_text(&r), || render::basis_latex(&r));
            }
            Command::Hilbert(_) => {
                let r = report::hilbert(&load(id, o)?);
                emit(f, &r, || render::hilbert_text(&r), || render::hilbert_latex(&r));
            }
            Command::Center(_) => {
                let r = report::center(&load(id, o)?)?;
                emit(f, &r, || render::center_text(&r), || render::center_latex(&r));
            }
            Command::Hh(_) => {
                let alg = load(id, o)?;
                let t = Instant::now();
                let hs = Hochschild::build_window(&alg, o.max_degree)?;
                if o.verbose {
                    eprintln!("{id}: cohomology built in {:.2?}", t.elapsed());
                }
                let r = report::hh(&hs);
                emit(f, &r, || render::hh_text(&r), || render::hh_latex(&r));
            }
            Command::Products(_) => {
                let alg = load(id, o)?;
                let hs = Hochschild::build(&alg)?;
                let r = report::products(&hs)?;
                emit(f, &r, || render::products_text(&r), || render::products_latex(&r));
            }
            Command::Verify(_) => {
                let alg = load(id, o)?;
                let t = Instant::now();
                let r = verify::verify(&alg, o.max_degree);
                if o.verbose {
                    eprintln!("{id}: {} checks in {:.2?}", r.checks.len(), t.elapsed());
                }
                emit(f, &r, || render::verify_text(&r), || render::verify_text(&r));
                reports.push(r);
            }
        }
    }
    if let Command::Verify(_) = cmd {
        if f == Format::Text && reports.len() > 1 {
            print!("{}", render::verify_summary(&reports));
        }
        if let Some(c) = reports.iter().flat_map(|r| r.failures()).next() {
            return Err(Failure::Verification(format!("{}: {}: {}", c.quiver, c.name, c.detail)));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("usage: preproj <COMMAND> --quiver <d4..dN|e6|e7|e8>[,...] (see --help)");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
