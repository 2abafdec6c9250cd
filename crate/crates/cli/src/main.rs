//! `primepoly`: exact construction and certification of factorisation
//! polytopes from the command line.
//!
//! Exit codes: 0 on success (and on verified runs), 1 when a verification
//! or certification check fails, 2 on usage errors (bad arguments, base
//! `t <= 1`, malformed matrix files, instances beyond the oracle budget).

mod output;
mod verify;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use primepoly::exact::{parse_rat, Int, Rat};
use primepoly::general::SymmetricIntMatrix;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "primepoly",
    version,
    about = "Polytopes of vector-factorisations of prime powers, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Cdd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FvMethod {
    /// Closed-form face-count formulas.
    Formula,
    /// Count the explicitly constructed faces.
    Lattice,
    /// Brute-force polyhedral oracle (desk scale only).
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// List the vertices (exponent vectors and evaluated points).
    Vertices {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        /// Base as a rational string, e.g. "2" or "5/2"; must be > 1.
        #[arg(long, default_value = "2")]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the full inequality description.
    Hrep {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "2")]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print every facet with its vertex-index set.
    Facets {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "2")]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the f-vector by one of three independent methods.
    Fvector {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value_t = FvMethod::Formula)]
        method: FvMethod,
        #[arg(long, default_value = "2")]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Dump the explicit face catalogue (all dimensions).
    Faces {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the facet-centroid minimality certificates.
    Minimality {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "2")]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the full cross-check suite for one (d, e).
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        /// Comma-separated list of bases, each > 1.
        #[arg(long, default_value = "2,3,5/2")]
        bases: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Vertices of the factorisation polytope of a general integer.
    General {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate and certify diagonal completions of a symmetric matrix.
    Matrix {
        /// JSON file: {"size": d, "entries": [[...], ...]}.
        #[arg(long)]
        file: PathBuf,
        /// Target determinant (>= 1).
        #[arg(long)]
        det: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Optional worker cap from the environment; oversubscription is harmless.
fn init_threads() {
    if let Ok(raw) = std::env::var("PRIMEPOLY_THREADS") {
        if let Ok(n) = raw.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn parse_base(raw: &str) -> Result<Rat> {
    let t = parse_rat(raw).with_context(|| format!("invalid base {raw:?}"))?;
    if t <= Rat::from_integer(Int::from(1)) {
        bail!("base t must be strictly greater than 1, got {t}");
    }
    Ok(t)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Vertices {
            d,
            e,
            t,
            format,
            output,
        } => {
            let t = parse_base(&t)?;
            let text = match format {
                Format::Text => output::vertices_text(d, e, &t)?,
                Format::Json => output::vertices_json(d, e, &t)?,
                Format::Cdd => output::vertices_cdd(d, e, &t)?,
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Hrep {
            d,
            e,
            t,
            format,
            output,
        } => {
            let t = parse_base(&t)?;
            let text = match format {
                Format::Text => output::hrep_text(d, e, &t)?,
                Format::Json => output::hrep_json(d, e, &t)?,
                Format::Cdd => output::hrep_cdd(d, e, &t)?,
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Facets {
            d,
            e,
            t,
            format,
            output,
        } => {
            let t = parse_base(&t)?;
            let text = match format {
                Format::Text => output::facets_text(d, e, &t)?,
                Format::Json => output::facets_json(d, e, &t)?,
                Format::Cdd => bail!("facets have no cdd representation; use hrep"),
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Fvector {
            d,
            e,
            method,
            t,
            format,
            output,
        } => {
            let (name, counts) = match method {
                FvMethod::Formula => ("formula", output::fvector_formula_counts(d, e)?),
                FvMethod::Lattice => ("lattice", output::fvector_lattice_counts(d, e)?),
                FvMethod::Oracle => {
                    let t = parse_base(&t)?;
                    if verify::oracle_cost(d, e) > verify::ORACLE_BUDGET {
                        bail!(
                            "instance (d={d}, e={e}) is above the oracle budget of {} \
                             hyperplane fits",
                            verify::ORACLE_BUDGET
                        );
                    }
                    ("oracle", output::fvector_oracle_counts(d, e, &t)?)
                }
            };
            let text = match format {
                Format::Text => output::fvector_text(&counts),
                Format::Json => output::fvector_json(d, e, name, &counts),
                Format::Cdd => bail!("f-vectors have no cdd representation"),
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Faces {
            d,
            e,
            format,
            output,
        } => {
            let text = match format {
                Format::Text => output::faces_text(d, e)?,
                Format::Json => output::faces_json(d, e)?,
                Format::Cdd => bail!("faces have no cdd representation"),
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Minimality {
            d,
            e,
            t,
            format,
            output,
        } => {
            let t = parse_base(&t)?;
            let (text, all_as_predicted) = match format {
                Format::Text => output::minimality_text(d, e, &t)?,
                Format::Json => output::minimality_json(d, e, &t)?,
                Format::Cdd => bail!("minimality reports have no cdd representation"),
            };
            emit(&text, output.as_deref())?;
            Ok(if all_as_predicted { 0 } else { 1 })
        }
        Command::Verify {
            d,
            e,
            bases,
            output,
        } => {
            let bases: Vec<Rat> = bases
                .split(',')
                .map(|s| parse_base(s.trim()))
                .collect::<Result<_>>()?;
            let outcome = verify::run_verify(d, e, &bases)?;
            emit(&outcome.report, output.as_deref())?;
            Ok(if outcome.passed { 0 } else { 1 })
        }
        Command::General {
            n,
            d,
            format,
            output,
        } => {
            let text = match format {
                Format::Text => output::general_text(n, d)?,
                Format::Json => output::general_json(n, d)?,
                Format::Cdd => bail!("general vertex sets have no cdd representation"),
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Matrix {
            file,
            det,
            format,
            output,
        } => {
            let a = load_matrix(&file)?;
            let report = verify::certify_matrix(&a, det)?;
            let text = match format {
                Format::Text => output::matrix_text(&a, det, &report),
                Format::Json => output::matrix_json(&a, det, &report),
                Format::Cdd => bail!("matrix reports have no cdd representation"),
            };
            emit(&text, output.as_deref())?;
            Ok(if report.all_vertices() { 0 } else { 1 })
        }
    }
}

fn load_matrix(path: &Path) -> Result<SymmetricIntMatrix> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&raw).with_context(|| format!("{} is not JSON", path.display()))?;
    let size = value
        .get("size")
        .and_then(|v| v.as_u64())
        .context("matrix file needs an integer \"size\"")? as usize;
    let rows = value
        .get("entries")
        .and_then(|v| v.as_array())
        .context("matrix file needs an \"entries\" array")?;
    if rows.len() != size {
        bail!("expected {size} rows, found {}", rows.len());
    }
    let mut entries = Vec::with_capacity(size);
    for row in rows {
        let row = row.as_array().context("matrix rows must be arrays")?;
        if row.len() != size {
            bail!("expected {size} columns, found {}", row.len());
        }
        let mut out = Vec::with_capacity(size);
        for v in row {
            let v = v.as_i64().context("matrix entries must be integers")?;
            out.push(Int::from(v));
        }
        entries.push(out);
    }
    Ok(SymmetricIntMatrix::new(entries)?)
}
