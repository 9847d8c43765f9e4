//! `ratlen`: command-line front end for the rational-length toolkit.
//!
//! Function descriptors are JSON files (see the crate README); every
//! subcommand writes CSV to stdout unless an output path is given.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use rational_length::crofton::{crofton_estimate, image_polyline, ArcSet, CroftonSampler};
use rational_length::experiments::{
    compare_window, default_schedule, estimate_beta, fit_power_law, read_records, run_growth_family, write_records,
    FamilySpec, ReferenceConstants,
};
use rational_length::factory::{
    construct_from_poles, kayumov_truncate, normalize_sup, runge_approximate, KayumovConfig, PolePrescription,
    RungeConfig,
};
use rational_length::quadrature::{verify_bounds, BoundReport};
use rational_length::rational::Koebe;
use rational_length::univalence::{boundary_simple, certify_re_derivative, default_resolution, UnivalenceCertificate};
use rational_length::{CircleGrid, RationalFunction, C64};

#[derive(Parser)]
#[command(
    name = "ratlen",
    version,
    about = "Boundary length and univalence tools for rational maps of the disk"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct GridArgs {
    /// Initial trapezoid node count (power of two, at least 16).
    #[arg(long, default_value_t = 64)]
    nodes: usize,
    /// Relative tolerance of the adaptive circle quadrature.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

impl GridArgs {
    fn grid(&self) -> Result<CircleGrid> {
        Ok(CircleGrid::new(self.nodes, 1.0, 14, self.tol)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Boundary length and bound ratios, without univalence certification.
    Length {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        no_header: bool,
    },
    /// Like `length`, with a boundary univalence certificate when the map is
    /// pole-free in the closed disk.
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        no_header: bool,
    },
    /// Length of the boundary image by counting line crossings.
    Crofton {
        #[arg(long)]
        input: PathBuf,
        /// Polyline vertices on the unit circle.
        #[arg(long, default_value_t = 2048)]
        points: usize,
        #[arg(long, default_value_t = 720)]
        theta: usize,
        #[arg(long, default_value_t = 720)]
        offsets: usize,
        /// Offset range; defaults to 1% above the image radius.
        #[arg(long)]
        bmax: Option<f64>,
        /// Seeded random lines instead of the midpoint grid.
        #[arg(long)]
        mc: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a univalent rational map.
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Univalence certificate.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Boundary)]
        method: Method,
        /// Polyline vertices (boundary) or polar grid density (re).
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Run a growth family and write one CSV row per member.
    Gamma {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Fit the family exponent to the certified rows of a growth CSV.
    GammaFit {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Integral means exponent of f' over a radius schedule.
    Spectrum {
        /// Taylor coefficients a_1, a_2, ... as [re, im] pairs.
        #[arg(long, conflicts_with_all = ["input", "koebe"])]
        coeffs: Option<PathBuf>,
        /// Function descriptor.
        #[arg(long, conflicts_with = "koebe")]
        input: Option<PathBuf>,
        /// Use the Koebe function z/(1-z)^2.
        #[arg(long)]
        koebe: bool,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// `default` or a comma-separated list of radii.
        #[arg(long, default_value = "default")]
        schedule: String,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Pole-prescribed map with Re R' > 0.
    Poles {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dilated section of a univalent Taylor series.
    Kayumov {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        n: usize,
        /// Override of the dilation 1 - 5 ln(n)/n.
        #[arg(long)]
        r: Option<f64>,
        /// Divide by the measured sup norm on the circle.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Arc-wise Cauchy-integral approximant.
    Runge {
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        order: usize,
        #[arg(long, conflicts_with = "auto_n")]
        arcs: Option<usize>,
        #[arg(long)]
        auto_n: bool,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Gauss-Legendre nodes per arc.
        #[arg(long, default_value_t = 16)]
        arc_nodes: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Re,
    Boundary,
}

/// Either a bare list of coefficients or `{"coefficients": [...]}`.
#[derive(Deserialize)]
#[serde(untagged)]
enum CoefficientFile {
    List(Vec<C64>),
    Object { coefficients: Vec<C64> },
}

fn read_coefficients(path: &Path) -> Result<Vec<C64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed: CoefficientFile =
        serde_json::from_str(&text).with_context(|| format!("parsing coefficients in {}", path.display()))?;
    Ok(match parsed {
        CoefficientFile::List(c) | CoefficientFile::Object { coefficients: c } => c,
    })
}

fn read_function(path: &Path) -> Result<RationalFunction> {
    RationalFunction::read(path).with_context(|| format!("reading function descriptor {}", path.display()))
}

fn write_function(f: &RationalFunction, path: &Path) -> Result<()> {
    f.write(path).with_context(|| format!("writing {}", path.display()))
}

fn emit(lines: &[String]) -> Result<()> {
    let mut out = std::io::stdout().lock();
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn bounds_output(report: &BoundReport, no_header: bool) -> Result<()> {
    let mut lines = Vec::new();
    if !no_header {
        lines.push(BoundReport::CSV_HEADER.to_string());
    }
    lines.push(report.csv_row());
    emit(&lines)
}

fn certificate(f: &RationalFunction, method: Method, resolution: Option<usize>) -> Result<UnivalenceCertificate> {
    Ok(match method {
        Method::Re => certify_re_derivative(f, 0.999, resolution.unwrap_or(256))?,
        Method::Boundary => boundary_simple(f, resolution.unwrap_or_else(|| default_resolution(f.degree())))?,
    })
}

fn parse_schedule(s: &str) -> Result<Vec<f64>> {
    if s == "default" {
        return Ok(default_schedule());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .with_context(|| format!("bad radius {x:?} in schedule"))
        })
        .collect()
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Length { input, grid, no_header } => {
            let f = read_function(&input)?;
            bounds_output(&verify_bounds(&f, None, &grid.grid()?)?, no_header)
        }
        Command::Bounds { input, grid, no_header } => {
            let f = read_function(&input)?;
            let certified = if f.poles_in_closed_disk()? == 0 {
                Some(boundary_simple(&f, default_resolution(f.degree()))?.passed())
            } else {
                None
            };
            bounds_output(&verify_bounds(&f, certified, &grid.grid()?)?, no_header)
        }
        Command::Crofton {
            input,
            points,
            theta,
            offsets,
            bmax,
            mc,
            seed,
        } => {
            let f = read_function(&input)?;
            let polylines = image_polyline(&f, &ArcSet::full(), points)?;
            let radius = polylines.iter().map(|p| p.max_modulus()).fold(0.0, f64::max);
            let b_max = bmax.unwrap_or(1.01 * radius.max(f64::MIN_POSITIVE));
            let sampler = if mc {
                CroftonSampler::monte_carlo(theta, offsets, b_max, seed)?
            } else {
                CroftonSampler::grid(theta, offsets, b_max)?
            };
            let est = crofton_estimate(&polylines, &sampler)?;
            emit(&[
                "raw_length,normalized_length,max_crossings,lines_sampled".into(),
                format!(
                    "{},{},{},{}",
                    est.length,
                    est.length / std::f64::consts::TAU,
                    est.max_crossings,
                    est.lines
                ),
            ])
        }
        Command::Construct { which } => construct(which),
        Command::Certify {
            input,
            method,
            resolution,
        } => {
            let f = read_function(&input)?;
            let cert = certificate(&f, method, resolution)?;
            emit(&[UnivalenceCertificate::CSV_HEADER.into(), cert.csv_row()])
        }
        Command::Gamma { family, out, grid } => {
            let spec = FamilySpec::read(&family).with_context(|| format!("reading family {}", family.display()))?;
            let records = run_growth_family(&spec, &grid.grid()?)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    write_records(file, &records)?;
                }
                None => write_records(std::io::stdout().lock(), &records)?,
            }
            Ok(())
        }
        Command::GammaFit { input } => {
            let file = fs::File::open(&input).with_context(|| format!("opening {}", input.display()))?;
            let rows = read_records(file)?;
            let points: Vec<(usize, f64)> = rows
                .iter()
                .filter(|r| r.certified)
                .map(|r| (r.n, r.normalized_length))
                .collect();
            let fit = fit_power_law(&points)?;
            let window = compare_window(&fit, &ReferenceConstants::default());
            eprintln!("{}", window.message);
            emit(&[rational_length::experiments::GammaFit::CSV_HEADER.into(), fit.csv_row()])
        }
        Command::Spectrum {
            coeffs,
            input,
            koebe,
            t,
            schedule,
            grid,
        } => {
            let schedule = parse_schedule(&schedule)?;
            let grid = grid.grid()?;
            let est = if koebe {
                estimate_beta(&Koebe, t, &schedule, &grid)?
            } else if let Some(path) = coeffs {
                let mut c = vec![C64::new(0.0, 0.0)];
                c.extend(read_coefficients(&path)?);
                estimate_beta(&RationalFunction::polynomial(c), t, &schedule, &grid)?
            } else if let Some(path) = input {
                estimate_beta(&read_function(&path)?, t, &schedule, &grid)?
            } else {
                bail!("one of --coeffs, --input or --koebe is required");
            };
            emit(&[
                "t,beta,intercept,rms,count".into(),
                format!(
                    "{},{},{},{},{}",
                    est.t,
                    est.beta,
                    est.intercept,
                    est.rms,
                    est.profile.samples.len()
                ),
            ])
        }
    }
}

fn construct(which: Construct) -> Result<()> {
    match which {
        Construct::Poles { spec, out } => {
            let text = fs::read_to_string(&spec).with_context(|| format!("reading {}", spec.display()))?;
            let p: PolePrescription = serde_json::from_str(&text).context("parsing pole prescription")?;
            let built = construct_from_poles(&p)?;
            eprintln!(
                "rotation {} budget {} of {}",
                built.rotation, built.budget_used, built.budget_rhs
            );
            write_function(&built.function, &out)
        }
        Construct::Kayumov {
            coeffs,
            n,
            r,
            normalize,
            out,
        } => {
            let cfg = match r {
                Some(r) => KayumovConfig::with_r(n, r)?,
                None => KayumovConfig::new(n)?,
            };
            let mut p = kayumov_truncate(&read_coefficients(&coeffs)?, &cfg)?;
            if normalize {
                p = normalize_sup(&p, &CircleGrid::default())?.0;
            }
            write_function(&p, &out)
        }
        Construct::Runge {
            target,
            delta,
            order,
            arcs,
            auto_n,
            eps,
            arc_nodes,
            out,
        } => {
            let f = read_function(&target)?;
            let mut cfg = match (arcs, auto_n) {
                (Some(n), false) => RungeConfig::new(delta, order, n)?,
                (None, true) => RungeConfig::auto(delta, order, eps)?,
                _ => bail!("give exactly one of --arcs or --auto-n"),
            };
            cfg.arc_quadrature_nodes = arc_nodes;
            write_function(&runge_approximate(&f, &cfg)?, &out)
        }
    }
}

fn main() -> Result<()> {
    run(Cli::parse())
}
