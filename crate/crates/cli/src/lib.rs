//! The `cospec` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 runtime error (I/O, parse,
//! unsupported input), 3 a verifier found a counterexample.

pub mod family;

pub use family::{parse_family, FamilyExpr, ParseError};

use clap::{Parser, Subcommand, ValueEnum};
use cospec::cospectrality::{
    family_table, write_table_csv, write_table_json, Catalog, Catalogs, Theorem, Verifier, DEFAULT_MAX_ORDER,
};
use cospec::distance::{spectral_distance, Norm};
use cospec::enumerate::{enumerate_graphs, read_graph6_stream, write_graph6, EdgeRange, MAX_GENERATED_ORDER};
use cospec::graph::{describe, graph6_decode, CanonicalForm, Graph};
use cospec::spectrum::SpectralGraph;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RUNTIME: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cospec", version, about = "Spectra, spectral distances and cospectrality of small graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Adjacency eigenvalues, descending.
    Spectrum {
        /// Family expression or `g6:` followed by a graph6 string.
        graph: String,
        /// Also print the characteristic polynomial.
        #[arg(long)]
        exact_charpoly: bool,
    },
    /// Spectral distance between two graphs of equal order.
    Distance {
        #[arg(long, default_value = "l1", value_parser = parse_norm)]
        norm: Norm,
        a: String,
        b: String,
    },
    /// Brute-force cospectrality against every other class of the same order.
    Cs {
        graph: String,
        #[arg(long, default_value = "l1", value_parser = parse_norm)]
        norm: Norm,
        /// Candidate graphs from a graph6 file instead of the generator.
        #[arg(long)]
        stream: Option<PathBuf>,
        /// Allow order 10 with the generator.
        #[arg(long)]
        long_run: bool,
    },
    /// One graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Inclusive edge-count range MIN:MAX.
        #[arg(long, value_parser = parse_edges)]
        edges: Option<EdgeRange>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow order 10.
        #[arg(long)]
        long_run: bool,
    },
    /// Exhaustive check of a theorem up to a given order.
    Verify {
        /// Theorem id such as `thm_2_1`, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_n: usize,
        /// Allow order 10.
        #[arg(long)]
        long_run: bool,
    },
    /// Closed-form versus brute-force cospectrality of the named families.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Allow order 10.
        #[arg(long)]
        long_run: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Json,
}

fn parse_norm(s: &str) -> Result<Norm, String> {
    s.parse().map_err(|e: cospec::Error| e.to_string())
}

fn parse_edges(s: &str) -> Result<EdgeRange, String> {
    let (min, max) = s.split_once(':').ok_or("expected MIN:MAX")?;
    let min = min.parse().map_err(|_| format!("bad minimum {min:?}"))?;
    let max = max.parse().map_err(|_| format!("bad maximum {max:?}"))?;
    if min > max {
        return Err(format!("empty range {min}:{max}"));
    }
    Ok(EdgeRange { min, max })
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<cospec::Error> for Failure {
    fn from(e: cospec::Error) -> Failure {
        Failure::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Runtime(e.to_string())
    }
}

/// A family expression, or `g6:` followed by graph6.
pub fn parse_graph(text: &str) -> Result<Graph, String> {
    if let Some(g6) = text.strip_prefix("g6:") {
        return graph6_decode(g6.as_bytes()).map_err(|e| format!("{text:?}: {e}"));
    }
    let expr = parse_family(text).map_err(|e| format!("{text:?}: {e}"))?;
    expr.graph().map_err(|e| format!("{text:?}: {e}"))
}

fn graph_arg(text: &str) -> Result<Graph, Failure> {
    parse_graph(text).map_err(Failure::Runtime)
}

/// Fixed 12-decimal rendering without a negative zero.
pub fn format_number(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

fn label(form: &CanonicalForm) -> String {
    graph6_decode(form.as_bytes()).ok().and_then(|g| describe(&g)).unwrap_or_else(|| form.as_str().to_owned())
}

fn check_order_gate(n: usize, long_run: bool) -> Result<(), Failure> {
    let limit = if long_run { MAX_GENERATED_ORDER } else { DEFAULT_MAX_ORDER };
    if n > limit {
        let hint = if long_run || n > MAX_GENERATED_ORDER { "" } else { "; order 10 needs --long-run" };
        return Err(Failure::Runtime(format!("order {n} is above the supported {limit}{hint}")));
    }
    Ok(())
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            } else {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            };
        }
    };
    let outcome = match cli.jobs {
        None => dispatch(cli.command, stdout, stderr),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs.into()).build() {
            Ok(pool) => {
                // the pool needs Send writers, so output is buffered
                let (mut out, mut err) = (Vec::new(), Vec::new());
                let outcome = pool.install(|| dispatch(cli.command, &mut out, &mut err));
                let _ = stdout.write_all(&out);
                let _ = stderr.write_all(&err);
                outcome
            }
            Err(e) => Err(Failure::Runtime(format!("cannot start {jobs} workers: {e}"))),
        },
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_RUNTIME
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Spectrum { graph, exact_charpoly } => {
            let data = SpectralGraph::new(graph_arg(&graph)?)?;
            for &v in data.spectrum().values() {
                writeln!(out, "{}", format_number(v))?;
            }
            if exact_charpoly {
                let p = cospec::spectrum::char_poly(data.graph())?;
                writeln!(out, "charpoly: {p}")?;
                let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                writeln!(out, "coefficients: {}", coeffs.join(" "))?;
            }
        }
        Command::Distance { norm, a, b } => {
            let (a, b) = (SpectralGraph::new(graph_arg(&a)?)?, SpectralGraph::new(graph_arg(&b)?)?);
            writeln!(out, "{}", format_number(spectral_distance(norm, &a, &b)?))?;
        }
        Command::Cs { graph, norm, stream, long_run } => {
            let g = graph_arg(&graph)?;
            let catalog = match stream {
                Some(path) => Catalog::from_stream(read_graph6_stream(path)?)?,
                None => {
                    check_order_gate(g.order(), long_run)?;
                    Catalog::generate(g.order())?
                }
            };
            let r = catalog.cospectrality(&g, norm)?;
            let labels: Vec<String> = r.minimizers.iter().map(label).collect();
            writeln!(out, "cs = {}, minimizers: {}", format_number(r.value), labels.join(", "))?;
            writeln!(out, "norm: {norm}")?;
            writeln!(out, "exact_zero: {}", r.exact_zero)?;
            writeln!(out, "graphs_scanned: {}", r.graphs_scanned)?;
            for (form, name) in r.minimizers.iter().zip(&labels) {
                if name == form.as_str() {
                    writeln!(out, "minimizer: {}", form.as_str())?;
                } else {
                    writeln!(out, "minimizer: {} {name}", form.as_str())?;
                }
            }
        }
        Command::Enumerate { n, edges, out: path, long_run } => {
            check_order_gate(n, long_run)?;
            let stream = enumerate_graphs(n, edges)?;
            let count = match path {
                Some(path) => write_graph6(stream, std::fs::File::create(path)?)?,
                None => write_graph6(stream, &mut *out)?,
            };
            writeln!(err, "{count}")?;
        }
        Command::Verify { theorem, max_n, long_run } => {
            let theorems = if theorem == "all" {
                Theorem::ALL.to_vec()
            } else {
                vec![theorem.parse::<Theorem>().map_err(|e| Failure::Usage(e.to_string()))?]
            };
            let catalogs = Catalogs::new();
            let verifier = Verifier::new(&catalogs).long_run(long_run);
            let mut code = EXIT_OK;
            for t in theorems {
                if theorem == "all" && t.min_order() > max_n {
                    continue;
                }
                let report = verifier.verify(t, max_n)?;
                writeln!(out, "{report}")?;
                if !report.is_confirmed() {
                    code = EXIT_COUNTEREXAMPLE;
                }
            }
            return Ok(code);
        }
        Command::Table { max_n, format, long_run } => {
            check_order_gate(max_n, long_run)?;
            let rows = family_table(max_n, &Catalogs::new())?;
            match format {
                Format::Csv => write_table_csv(&rows, &mut *out)?,
                Format::Json => write_table_json(&rows, &mut *out)?,
            }
        }
    }
    Ok(EXIT_OK)
}
