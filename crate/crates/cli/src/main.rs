use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cliquepoly::catalog::{extend_catalog, GENERATE_MAX_N};
use cliquepoly_cli::analyze::DEFAULT_TOL;
use cliquepoly_cli::input::{self, InputFormat};
use cliquepoly_cli::scan::{parse_filters, Checks};
use cliquepoly_cli::{run_analyze, run_hunt, run_scan, CliError, Conjecture, Outcome, ScanOptions};

#[derive(Parser)]
#[command(name = "cliquepoly", version, about = "Clique polynomials, real roots and small-graph census checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Catalog {
    /// Graph6 catalog file (or one edge list with --format edgelist).
    #[arg(long, conflicts_with = "generate")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "graph6")]
    format: InputFormat,
    /// Use every graph on N vertices (N <= 7) instead of a file.
    #[arg(long, value_name = "N")]
    generate: Option<usize>,
}

#[derive(Args)]
struct Common {
    /// Worker threads; output does not depend on this.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Bisection width for reported float root approximations.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse single graphs: counts, polynomial, roots, classes, identities.
    Analyze {
        /// Inline graph6 string.
        graph6: Option<String>,
        #[arg(long, conflicts_with = "graph6")]
        input: Option<PathBuf>,
        #[arg(long, default_value = "graph6")]
        format: InputFormat,
        #[arg(long)]
        pretty: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep a catalog, checking identities and class results.
    Scan {
        #[command(flatten)]
        catalog: Catalog,
        /// Comma list: k4free,k5free,flat,chordal,connected,biconnected,
        /// no-isolated-edge,no-isolated-triangle,triangle-free
        #[arg(long, default_value = "")]
        filter: String,
        /// Comma list: identities,mainthm,minus-one,keyineq,all
        #[arg(long, default_value = "all")]
        check: String,
        /// Also write a CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Search a catalog for counterexamples to a conjecture.
    Hunt {
        /// flat-balanced or k5-flat-multiplicity
        conjecture: Conjecture,
        #[command(flatten)]
        catalog: Catalog,
        #[command(flatten)]
        common: Common,
    },
    /// Write the graph6 catalog of all graphs on N vertices.
    Generate {
        n: usize,
        /// Complete catalog on N-1 vertices to extend (needed for N > 7).
        #[arg(long)]
        from: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_catalog(c: &Catalog) -> Result<Vec<cliquepoly::CatalogRecord>, CliError> {
    let records = match (&c.input, c.generate) {
        (Some(path), None) => input::load_file(path, c.format)?,
        (None, Some(n)) => input::generate(n)?,
        _ => return Err(CliError::Usage("give exactly one of --input or --generate".into())),
    };
    Ok(input::canonical_order(records))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze { graph6, input: path, format, pretty, common } => {
            let records = match (graph6, path) {
                (Some(text), None) => vec![input::inline_graph6(&text)?],
                (None, Some(path)) => input::load_file(&path, format)?,
                _ => return Err(CliError::Usage("give a graph6 string or --input".into())),
            };
            let mut out = open_out(&common.out)?;
            let mut outcome = Outcome::default();
            for rec in &records {
                let doc = run_analyze(&rec.graph, common.tol)?;
                outcome.internal_errors += usize::from(!doc.identities_hold() || doc.baseline_violated());
                if pretty {
                    serde_json::to_writer_pretty(&mut out, &doc).map_err(io::Error::from)?;
                } else {
                    serde_json::to_writer(&mut out, &doc).map_err(io::Error::from)?;
                }
                out.write_all(b"\n")?;
            }
            out.flush()?;
            Ok(outcome)
        }
        Command::Scan { catalog, filter, check, csv, common } => {
            let records = load_catalog(&catalog)?;
            let opts = ScanOptions {
                filters: parse_filters(&filter)?,
                checks: Checks::parse_list(&check)?,
                tol: common.tol,
                jobs: common.jobs,
            };
            let result = run_scan(&records, &opts)?;
            let mut out = open_out(&common.out)?;
            result.write_jsonl(&mut out)?;
            out.flush()?;
            if let Some(path) = csv {
                let mut w = BufWriter::new(File::create(path)?);
                result.write_csv(&mut w)?;
                w.flush()?;
            }
            Ok(result.outcome())
        }
        Command::Hunt { conjecture, catalog, common } => {
            let records = load_catalog(&catalog)?;
            let result = run_hunt(conjecture, &records, common.tol, common.jobs)?;
            let mut out = open_out(&common.out)?;
            result.write_jsonl(&mut out)?;
            out.flush()?;
            Ok(result.outcome())
        }
        Command::Generate { n, from, out } => {
            let records = match from {
                Some(path) => {
                    let base = input::load_file(&path, InputFormat::Graph6)?;
                    let graphs: Vec<_> = base.into_iter().map(|r| r.graph).collect();
                    if graphs.first().is_some_and(|g| g.n() + 1 != n) {
                        return Err(CliError::Usage(format!("--from catalog must have {} vertices", n - 1)));
                    }
                    extend_catalog(&graphs)
                        .map_err(|source| CliError::Parse { context: path.display().to_string(), source })?
                }
                None if n <= GENERATE_MAX_N => input::generate(n)?,
                None => return Err(CliError::Usage(format!("n > {GENERATE_MAX_N} needs --from"))),
            };
            let mut w = open_out(&out)?;
            for r in records {
                writeln!(w, "{}", r.graph6)?;
            }
            w.flush()?;
            Ok(Outcome::default())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
