use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use nullspace::expr;
use nullspace::formats::{self, interval_json, region_json, to_pretty};
use nullspace::runner::run_suite_parallel;
use nullspace::{svg, table};
use nullspace_core::interval::{metric_d, omega_equal};
use nullspace_core::numerics::Rational;
use nullspace_core::region::Region;
use nullspace_core::topology::{closed_ball, closure_of, family_check, interior_of, open_ball, BallSpec, FamilyClass, Kind};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "nullspace", version, about = "Exact interval space, null-set topology and proposition audit")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionOp {
    Union,
    Intersect,
    Difference,
    Complement,
    Upward,
    Translate,
    Scale,
    Normalize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an interval expression such as "2 * [1,3] - [0,1]".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Distance between two intervals and, when it is zero, null witnesses.
    Metric {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// The open (or closed) ball around an interval.
    Ball {
        #[arg(long, allow_hyphen_values = true)]
        center: String,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
        #[arg(long)]
        closed: bool,
    },
    /// Region algebra on JSON regions.
    Region {
        #[arg(value_enum)]
        op: RegionOp,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: Option<PathBuf>,
        /// Interval to translate by.
        #[arg(long, allow_hyphen_values = true)]
        by: Option<String>,
        /// Scalar to scale by.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Interior (or pseudo-interior) of a region.
    Interior {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "plain", value_parser = parse_kind)]
        kind: Kind,
        #[arg(long)]
        pseudo: bool,
    },
    /// Closure of a region.
    Closure {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "plain", value_parser = parse_kind)]
        kind: Kind,
    },
    /// Check a family of regions against the axioms of a topology.
    Topology {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = parse_class)]
        class: FamilyClass,
    },
    /// Run the proposition audit.
    Audit {
        #[arg(long, env = "NULLSPACE_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
    },
    /// Draw a region as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long = "r-max", default_value_t = svg::DEFAULT_R_MAX.to_string())]
        r_max: String,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: nullspace_core::Error| e.to_string())
}

fn parse_class(s: &str) -> Result<FamilyClass, String> {
    s.parse().map_err(|e: nullspace_core::Error| e.to_string())
}

/// Input problems exit with 2; a RED audit exits with 1.
enum Outcome {
    Done,
    Red,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn region_at(path: &Path) -> Result<Region> {
    formats::read_region(&read(path)?).with_context(|| format!("invalid region in {}", path.display()))
}

fn emit<T: Serialize>(fmt: Format, value: &T, table: impl FnOnce(&T) -> String) {
    match fmt {
        Format::Json => println!("{}", to_pretty(value)),
        Format::Table => print!("{}", table(value)),
    }
}

fn emit_region(fmt: Format, a: &Region) {
    emit(fmt, &region_json(a), table::region);
}

#[derive(Serialize)]
struct MetricOut {
    d: String,
    omega_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

#[derive(Serialize)]
struct Witness {
    omega1: formats::IntervalJson,
    omega2: formats::IntervalJson,
}

fn run(cli: Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match cli.cmd {
        Cmd::Eval { expr: src } => {
            let v = expr::eval(&src)?;
            emit(fmt, &interval_json(&v), |j| format!("[{}, {}]\n", j.lo, j.hi));
        }
        Cmd::Metric { x, y } => {
            let (x, y) = (expr::eval(&x)?, expr::eval(&y)?);
            let w = omega_equal(&x, &y);
            let out = MetricOut {
                d: metric_d(&x, &y).to_string(),
                omega_equal: w.is_some(),
                witness: w.map(|w| Witness {
                    omega1: interval_json(&w.omega1.to_interval()),
                    omega2: interval_json(&w.omega2.to_interval()),
                }),
            };
            emit(fmt, &out, |o| format!("d = {}  null-equal = {}\n", o.d, o.omega_equal));
        }
        Cmd::Ball { center, epsilon, closed } => {
            let spec = BallSpec::new(expr::eval(&center)?, expr::scalar(&epsilon)?)?;
            emit_region(fmt, &if closed { closed_ball(&spec) } else { open_ball(&spec) });
        }
        Cmd::Region { op, input, input2, by, alpha } => {
            let a = region_at(&input)?;
            let second = || -> Result<Region> {
                let p = input2.as_deref().context("this operation needs --in2")?;
                region_at(p)
            };
            let out = match op {
                RegionOp::Union => a.union(&second()?),
                RegionOp::Intersect => a.intersect(&second()?),
                RegionOp::Difference => a.difference(&second()?),
                RegionOp::Complement => a.complement(),
                RegionOp::Upward => a.upward_closure(),
                RegionOp::Translate => a.translate(&expr::eval(by.as_deref().context("translate needs --by")?)?),
                RegionOp::Scale => a.scale(&expr::scalar(alpha.as_deref().context("scale needs --alpha")?)?),
                RegionOp::Normalize => a,
            };
            emit_region(fmt, &out);
        }
        Cmd::Interior { input, kind, pseudo } => emit_region(fmt, &interior_of(&region_at(&input)?, kind, pseudo)),
        Cmd::Closure { input, kind } => emit_region(fmt, &closure_of(&region_at(&input)?, kind)),
        Cmd::Topology { input, class } => {
            let fam = formats::read_family(&read(&input)?).with_context(|| format!("invalid family in {}", input.display()))?;
            emit(fmt, &formats::topology_json(&family_check(&fam, class)), table::topology);
        }
        Cmd::Audit { seed, trials } => {
            let rep = run_suite_parallel(seed, trials as usize);
            emit(fmt, &formats::audit_json(&rep), table::audit);
            if !rep.green() {
                return Ok(Outcome::Red);
            }
        }
        Cmd::Render { input, out, r_max } => {
            let r_max: Rational = expr::scalar(&r_max)?;
            anyhow::ensure!(r_max.is_positive(), "--r-max must be positive");
            let picture = svg::render(&region_at(&input)?, &r_max);
            std::fs::write(&out, picture).with_context(|| format!("cannot write {}", out.display()))?;
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Red) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
