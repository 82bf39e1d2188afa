//! `menger` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 oracle/closed-form mismatch
//! (`voxel-verify` only), 3 I/O failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use menger_core::analysis::{
    efficiency_series, emit_json, emit_rows_csv, emit_series_csv, find_crossover, full_table, render_text_table,
    table_row, CrossoverError, CrossoverReport, EfficiencyRow, EmitError,
};
use menger_core::mesh::{mesh_from_grid, write_obj, write_stl_binary};
use menger_core::metrics::{model_surface, model_volume};
use menger_core::voxel::{build_grid, measure_surface, measure_volume, OracleCap, VoxelError, DEFAULT_ORACLE_CAP};
use menger_core::{ExactScalar, IterationIndex, ModelKind};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "menger", version, about = "Slice stack vs. Menger sponge cooling geometry calculator")]
pub struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Lower the voxel oracle cap (default 6; may not be raised).
    #[arg(long, global = true, value_name = "N")]
    pub oracle_cap: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Slices,
    Menger,
}

impl From<Model> for ModelKind {
    fn from(m: Model) -> Self {
        match m {
            Model::Slices => ModelKind::Slices,
            Model::Menger => ModelKind::MengerSponge,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeshFormat {
    Stl,
    Obj,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the comparison table for n = 0..=max-n.
    Table {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Print a single table row.
    Row {
        #[arg(long)]
        n: u32,
    },
    /// Compare closed-form volume and surface with the voxel oracle.
    VoxelVerify {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: u32,
    },
    /// Locate the efficiency-versus-surface crossover.
    Crossover {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Write the efficiency-versus-surface series of both models as CSV.
    Series {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a voxelised geometry as a triangle mesh.
    Mesh {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        format: MeshFormat,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch,
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Mismatch => EXIT_MISMATCH,
            Failure::Io(_) => EXIT_IO,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<EmitError> for Failure {
    fn from(e: EmitError) -> Self {
        match e {
            EmitError::Empty => Failure::Usage(e.to_string()),
            other => Failure::Io(other.to_string()),
        }
    }
}

impl From<VoxelError> for Failure {
    fn from(e: VoxelError) -> Self {
        match e {
            VoxelError::Allocation { .. } => Failure::Io(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn iteration(n: u32) -> Result<IterationIndex, Failure> {
    IterationIndex::new(n).map_err(|e| Failure::Usage(e.to_string()))
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code. Nothing is written to the process's own streams.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if informational { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };

    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                Failure::Io(msg) => {
                    let _ = writeln!(stderr, "I/O error: {msg}");
                }
                Failure::Mismatch => {
                    let _ = writeln!(stderr, "verification failed: oracle and closed form disagree");
                }
            }
            failure.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let cap = match cli.oracle_cap {
        Some(c) => OracleCap::new(c)?,
        None => OracleCap::new(DEFAULT_ORACLE_CAP)?,
    };
    match &cli.command {
        Command::Table { max_n } => {
            let rows = full_table(iteration(*max_n)?);
            print_rows(&rows, cli.output, crossover_for(*max_n)?.ok().as_ref(), out)
        }
        Command::Row { n } => {
            let rows = [table_row(iteration(*n)?)];
            print_rows(&rows, cli.output, None, out)
        }
        Command::VoxelVerify { model, n } => voxel_verify((*model).into(), iteration(*n)?, cap, cli.output, out),
        Command::Crossover { max_n } => print_crossover(&crossover_for(*max_n)?, cli.output, out),
        Command::Series { max_n, out: path } => {
            let n_max = iteration(*max_n)?;
            let series = [
                efficiency_series(ModelKind::Slices, n_max),
                efficiency_series(ModelKind::MengerSponge, n_max),
            ];
            match path {
                Some(path) => {
                    let mut file = create(path)?;
                    emit_series_csv(&series, &mut file)?;
                    file.flush()?;
                    Ok(())
                }
                None => Ok(emit_series_csv(&series, out)?),
            }
        }
        Command::Mesh {
            model,
            n,
            format,
            out: path,
        } => {
            let grid = build_grid((*model).into(), iteration(*n)?, cap)?;
            let mesh = mesh_from_grid(&grid);
            let mut file = create(path)?;
            let bytes = match format {
                MeshFormat::Stl => write_stl_binary(&mesh, &mut file)?,
                MeshFormat::Obj => write_obj(&mesh, &mut file)?,
            };
            file.flush()?;
            writeln!(
                out,
                "wrote {bytes} bytes ({} triangles) to {}",
                mesh.len(),
                path.display()
            )?;
            Ok(())
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn crossover_for(max_n: u32) -> Result<Result<CrossoverReport, CrossoverError>, Failure> {
    let n_max = iteration(max_n)?;
    let menger = efficiency_series(ModelKind::MengerSponge, n_max);
    let slices = efficiency_series(ModelKind::Slices, n_max);
    Ok(find_crossover(&menger, &slices))
}

fn print_rows(
    rows: &[EfficiencyRow],
    format: OutputFormat,
    crossover: Option<&CrossoverReport>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Text => out.write_all(render_text_table(rows).as_bytes())?,
        OutputFormat::Csv => emit_rows_csv(rows, out)?,
        OutputFormat::Json => emit_json(rows, crossover, out)?,
    }
    Ok(())
}

fn print_crossover(
    result: &Result<CrossoverReport, CrossoverError>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if let Err(e @ (CrossoverError::TooFewPoints { .. } | CrossoverError::DisjointRanges)) = result {
        return Err(Failure::Usage(e.to_string()));
    }
    match (format, result) {
        (OutputFormat::Json, r) => emit_json(&[], r.as_ref().ok(), out)?,
        (OutputFormat::Text, Ok(r)) => {
            writeln!(out, "crossover surface S* = {:.6}", r.s_star)?;
            writeln!(out, "efficiency at S*    = {:.6e}", r.e_star)?;
            writeln!(out, "{} segment n = {}..{}", r.rising, r.rising_bracket.0, r.rising_bracket.1)?;
            writeln!(out, "{} segment n = {}..{}", r.falling, r.falling_bracket.0, r.falling_bracket.1)?;
            writeln!(out, "method: {}", r.method)?;
        }
        (OutputFormat::Text, Err(e)) => {
            writeln!(out, "{e}")?;
        }
        (OutputFormat::Csv, r) => {
            writeln!(out, "rising,falling,s_star,e_star,rising_n_low,rising_n_high,falling_n_low,falling_n_high,method")?;
            if let Ok(r) = r {
                writeln!(
                    out,
                    "{},{},{:.9e},{:.9e},{},{},{},{},{}",
                    r.rising,
                    r.falling,
                    r.s_star,
                    r.e_star,
                    r.rising_bracket.0,
                    r.rising_bracket.1,
                    r.falling_bracket.0,
                    r.falling_bracket.1,
                    r.method
                )?;
            }
        }
    }
    Ok(())
}

/// Paper-style rendering for a single surface or volume value.
fn short(v: &ExactScalar) -> String {
    if v.abs() >= 100 {
        v.to_significant(6)
    } else {
        v.to_fixed(4)
    }
}

fn voxel_verify(
    kind: ModelKind,
    n: IterationIndex,
    cap: OracleCap,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let grid = build_grid(kind, n, cap)?;
    let checks = [
        ("volume", model_volume(kind, n), measure_volume(&grid)),
        ("surface", model_surface(kind, n), measure_surface(&grid)),
    ];
    let pass = checks.iter().all(|(_, closed, oracle)| closed == oracle);

    match format {
        OutputFormat::Text => {
            writeln!(out, "model {kind}, n = {n}, lattice {0}x{0}x{0}", grid.resolution())?;
            for (name, closed, oracle) in &checks {
                let tag = if closed == oracle { "match" } else { "MISMATCH" };
                writeln!(
                    out,
                    "{name:<8} closed-form {} = {}  oracle {} = {}  {tag}",
                    closed.ratio_string(),
                    short(closed),
                    oracle.ratio_string(),
                    short(oracle)
                )?;
            }
            writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
        }
        OutputFormat::Csv => {
            writeln!(out, "model,n,quantity,closed_form,oracle,match")?;
            for (name, closed, oracle) in &checks {
                writeln!(
                    out,
                    "{kind},{n},{name},{},{},{}",
                    closed.ratio_string(),
                    oracle.ratio_string(),
                    closed == oracle
                )?;
            }
        }
        OutputFormat::Json => {
            let quantity = |closed: &ExactScalar, oracle: &ExactScalar| {
                json!({
                    "closed_form": closed.ratio_string(),
                    "oracle": oracle.ratio_string(),
                    "decimal": closed.to_significant(10),
                    "match": closed == oracle,
                })
            };
            let doc = json!({
                "model": kind.tag(),
                "n": n.get(),
                "volume": quantity(&checks[0].1, &checks[0].2),
                "surface": quantity(&checks[1].1, &checks[1].2),
                "pass": pass,
            });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }

    if pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
