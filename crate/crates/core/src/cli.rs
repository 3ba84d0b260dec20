//! The `acurve` command line.
//!
//! Exit status: 0 on success, 1 for invalid flags or parameters, 2 for
//! unreadable, malformed or mismatched files, 3 when `verify` fails.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::analysis::{
    copy_of_lp_check, hypercube_csv, hypercube_family, slice_directions, slice_table,
    slices_to_csv, wedge_energy_table, HypercubeFamily,
};
use crate::approx::{nterm_error_curve, rate_fit, CurveMeta, CurvePoint, ErrorCurve, RateReport};
use crate::cartoon::{rasterize, CartoonSpec};
use crate::error::Error;
use crate::frame::FrameParams;
use crate::io;
use crate::transform::Frame;
use crate::verify::{verify_frame, DEFAULT_VERIFY_SEED};

#[derive(Debug, Parser)]
#[command(name = "acurve", version, about = "Tight frames of alpha-curvelets and sparse approximation benchmarks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the frame geometry as JSON.
    FrameInfo {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded cartoon image; the spec is written next to it as JSON.
    Cartoon {
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        #[arg(long, default_value_t = 1.0)]
        nu: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        binary: bool,
        #[arg(long, default_value_t = 1)]
        supersample: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Analyze a grid file into a coefficient file.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Synthesize a grid file from a coefficient file.
    Synthesize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// N-term error curves of random cartoons, averaged over seeds.
    Benchmark {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// Edge smoothness; defaults to beta.
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        nu: f64,
        #[arg(long)]
        size: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long)]
        binary: bool,
        #[arg(long, default_value_t = 64)]
        fit_lo: usize,
        #[arg(long, default_value_t = 8192)]
        fit_hi: usize,
        /// Output prefix: writes `<out>.csv` and `<out>.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the partition of unity, Parseval identity and reconstruction.
    Verify {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 4)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_VERIFY_SEED)]
        seed: u64,
    },
    /// Per-wedge spectral energies at one scale (CSV).
    WedgeEnergy {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        scale: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Radial Fourier-slice energies over equispaced directions (CSV).
    Slices {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        eta_count: usize,
        #[arg(long)]
        scale: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Hypercube family sizes (CSV); the fitted exponent goes to stdout.
    Hypercube {
        #[arg(long)]
        beta: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
        #[arg(long, default_value_t = 1.0)]
        nu: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Export a real grid as 8-bit PGM.
    ExportPgm {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Format(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Format(_) | Error::DigestMismatch { .. } | Error::Io(_) | Error::Json(_) => {
                Failure::Format(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Format(format!("{}: {e}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn load_grid(path: &Path) -> Result<crate::Grid, Failure> {
    let bytes = fs::read(path).map_err(|e| io_failure(path, e))?;
    Ok(io::grid_from_bytes(&bytes)?)
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(io::to_json(value)?)
}

/// Parses `args` (program name first) and runs the command. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            1
        }
        Err(Failure::Format(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            3
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::FrameInfo { alpha, size, out } => {
            let frame = Frame::new(FrameParams::new(alpha, size)?)?;
            let text = json(frame.geometry())?;
            match out {
                Some(path) => write_text(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Cartoon { beta, gamma, nu, seed, size, binary, supersample, out } => {
            let spec = CartoonSpec::random(beta, gamma, nu, seed, binary)?;
            let grid = rasterize(&spec, size, supersample)?;
            write_text(&out.with_extension("json"), &json(&spec)?)?;
            let bytes = io::grid_to_bytes(&grid)?;
            fs::write(&out, bytes).map_err(|e| io_failure(&out, e))
        }
        Command::Analyze { input, alpha, out } => {
            let grid = load_grid(&input)?;
            let frame = Frame::new(FrameParams::new(alpha, grid.size())?)?;
            let coeffs = frame.analyze(&grid)?;
            let mut bytes = Vec::new();
            io::write_coefficients(&mut bytes, &coeffs)?;
            fs::write(&out, bytes).map_err(|e| io_failure(&out, e))
        }
        Command::Synthesize { input, out } => {
            let bytes = fs::read(&input).map_err(|e| io_failure(&input, e))?;
            let (frame, coeffs) = io::read_coefficients_standalone(bytes.as_slice())?;
            let grid = frame.synthesize(&coeffs)?;
            fs::write(&out, io::grid_to_bytes(&grid)?).map_err(|e| io_failure(&out, e))
        }
        Command::Benchmark { alpha, beta, gamma, nu, size, seeds, mut ns, binary, fit_lo, fit_hi, out } => {
            let gamma = gamma.unwrap_or(beta);
            let frame = Frame::new(FrameParams::new(alpha, size)?)?;
            ns.sort_unstable();
            ns.dedup();
            let mut curves = Vec::new();
            for &seed in &seeds {
                let spec = CartoonSpec::random(beta, gamma, nu, seed, binary)?;
                let mut curve = nterm_error_curve(&rasterize(&spec, size, 1)?, &frame, &ns)?;
                curve.meta.beta = Some(beta);
                curve.meta.gamma = Some(gamma);
                curve.meta.spec_id = Some(format!("seed-{seed}"));
                curves.push(curve);
            }
            let mean = mean_curve(&curves, alpha, size, beta, gamma);
            let report = BenchmarkReport {
                seeds: seeds.clone(),
                mean: rate_fit(&mean, fit_lo, fit_hi)?,
                per_seed: curves
                    .iter()
                    .map(|c| rate_fit(c, fit_lo, fit_hi))
                    .collect::<crate::Result<_>>()?,
                meta: mean.meta.clone(),
            };
            write_text(&suffixed(&out, "csv"), &mean.to_csv())?;
            write_text(&suffixed(&out, "json"), &json(&report)?)?;
            println!("slope {:.4} over N in [{fit_lo}, {fit_hi}]", report.mean.slope);
            Ok(())
        }
        Command::Verify { alpha, size, trials, seed } => {
            let report = verify_frame(FrameParams::new(alpha, size)?, trials, seed)?;
            print!("{}", json(&report)?);
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Verification(format!("alpha {alpha}, size {size}")))
            }
        }
        Command::WedgeEnergy { input, alpha, scale, out } => {
            let grid = load_grid(&input)?;
            let frame = Frame::new(FrameParams::new(alpha, grid.size())?)?;
            let table = wedge_energy_table(&grid, &frame, scale)?;
            write_text(&out, &table.to_csv())
        }
        Command::Slices { input, eta_count, scale, out } => {
            if eta_count == 0 {
                return Err(Failure::Usage("--eta-count must be positive".into()));
            }
            let grid = load_grid(&input)?;
            let rows = slice_table(&grid, &slice_directions(eta_count), scale)?;
            write_text(&out, &slices_to_csv(&rows))
        }
        Command::Hypercube { beta, ks, nu, out } => {
            let families: Vec<HypercubeFamily> = ks
                .iter()
                .map(|&k| hypercube_family(beta, k, nu))
                .collect::<crate::Result<_>>()?;
            write_text(&out, &hypercube_csv(&families))?;
            if families.len() >= 3 {
                let sizes: Vec<_> = families.iter().map(HypercubeFamily::size).collect();
                let v = copy_of_lp_check(&sizes, Some(2.0 / (beta + 1.0)))?;
                println!("fitted p {:.6} (2/(beta+1) = {:.6})", v.p, 2.0 / (beta + 1.0));
            }
            Ok(())
        }
        Command::ExportPgm { input, out } => {
            let grid = load_grid(&input)?;
            let bytes = io::pgm_bytes(&grid)?;
            fs::write(&out, bytes).map_err(|e| io_failure(&out, e))
        }
    }
}

#[derive(Serialize)]
struct BenchmarkReport {
    seeds: Vec<u64>,
    meta: CurveMeta,
    mean: RateReport,
    per_seed: Vec<RateReport>,
}

fn suffixed(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn mean_curve(curves: &[ErrorCurve], alpha: f64, size: usize, beta: f64, gamma: f64) -> ErrorCurve {
    let k = curves.len() as f64;
    let points = (0..curves[0].points.len())
        .map(|i| CurvePoint {
            n: curves[0].points[i].n,
            err2: curves.iter().map(|c| c.points[i].err2).sum::<f64>() / k,
            tail: curves.iter().map(|c| c.points[i].tail).sum::<f64>() / k,
        })
        .collect();
    let mut meta = CurveMeta::new(alpha, size);
    meta.beta = Some(beta);
    meta.gamma = Some(gamma);
    meta.spec_id = Some("mean".into());
    ErrorCurve { meta, points }
}
