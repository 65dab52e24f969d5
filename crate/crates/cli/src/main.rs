//! Command-line front-end: configure a parallel-plate DB guide, then emit
//! α-sweeps, field-line traces, grid samples, or wall impedances as CSV or
//! JSON, or run the numerical verification suites.
//!
//! Exit codes: 0 success (and verification passed), 1 verification failed,
//! 2 usage or configuration error.

mod commands;
mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fraccurl::{FieldComponent, GuideConfig, Medium};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fraccurl",
    version,
    about = "Fractional-dual fields and wall impedances of a parallel-plate DB waveguide"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the fractional dual fields over a cross-section grid
    #[command(allow_negative_numbers = true)]
    Fields(FieldsArgs),
    /// Sweep the fractional order at one observation point
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Trace instantaneous field lines in the yz-plane
    #[command(allow_negative_numbers = true)]
    Fieldlines(FieldlinesArgs),
    /// Normalized DB-wall impedance matrix entries across fractional orders
    #[command(allow_negative_numbers = true)]
    Impedance(ImpedanceArgs),
    /// Run all numerical verification suites and report residuals
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Component {
    E,
    H,
}

impl From<Component> for FieldComponent {
    fn from(c: Component) -> FieldComponent {
        match c {
            Component::E => FieldComponent::E,
            Component::H => FieldComponent::H,
        }
    }
}

/// Guide geometry and medium. Either give the plate separation directly
/// (`--b`, with `--n` and `--k`), or give the mode's bounce angle
/// (`--angle`, from which b = nπ/(k·sinθ)); the default is the angle
/// parameterization at θ = π/6.
#[derive(Args)]
struct GuideArgs {
    /// Plate separation b in meters (conflicts with --angle)
    #[arg(long)]
    b: Option<f64>,
    /// Bounce angle θ in radians: h = k·sinθ, β = k·cosθ
    #[arg(long, conflicts_with = "b")]
    angle: Option<f64>,
    /// Mode index n = 1, 2, 3, ...
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Medium wavenumber k in rad/m
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Medium wave impedance η in ohms
    #[arg(long, default_value_t = 1.0)]
    eta: f64,
    /// TE modal amplitude as `re,im`
    #[arg(long = "amp-te", default_value = "1,0", value_parser = parse_complex)]
    amp_te: Complex64,
    /// TM modal amplitude as `re,im`
    #[arg(long = "amp-tm", default_value = "1,0", value_parser = parse_complex)]
    amp_tm: Complex64,
}

impl GuideArgs {
    fn resolve(&self) -> Result<GuideConfig, String> {
        let medium = Medium::new(self.k, self.eta).map_err(|e| e.to_string())?;
        let cfg = match (self.b, self.angle) {
            (Some(b), None) => GuideConfig::new(b, self.n, medium, self.amp_te, self.amp_tm),
            (None, Some(theta)) => {
                GuideConfig::from_angle(theta, self.n, medium, self.amp_te, self.amp_tm)
            }
            (None, None) => {
                GuideConfig::from_angle(PI / 6.0, self.n, medium, self.amp_te, self.amp_tm)
            }
            (Some(_), Some(_)) => unreachable!("clap rejects --b together with --angle"),
        };
        cfg.map_err(|e| e.to_string())
    }

    fn echo(&self, cfg: &GuideConfig) -> serde_json::Value {
        let (h, beta) = cfg.mode_params();
        serde_json::json!({
            "b": cfg.b(),
            "n": cfg.n(),
            "k": cfg.medium().k(),
            "eta": cfg.medium().eta(),
            "amp_te": [cfg.amp_te().re, cfg.amp_te().im],
            "amp_tm": [cfg.amp_tm().re, cfg.amp_tm().im],
            "h": h,
            "beta": beta,
        })
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file path (stdout when omitted); files are written atomically
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A fractional-order selection: one value or an inclusive range.
#[derive(Args)]
struct AlphaArgs {
    /// Single fractional order α
    #[arg(long, conflicts_with = "alpha_range", value_parser = parse_finite)]
    alpha: Option<f64>,
    /// Fractional order range `start:stop:step` (inclusive, step > 0)
    #[arg(long = "alpha-range", value_parser = parse_alpha_range)]
    alpha_range: Option<AlphaRange>,
}

impl AlphaArgs {
    /// Selected orders, defaulting to 0..1 in the given step.
    fn list_or_default(&self, default_step: f64) -> Vec<f64> {
        if let Some(a) = self.alpha {
            return vec![a];
        }
        self.alpha_range
            .clone()
            .unwrap_or(AlphaRange { start: 0.0, stop: 1.0, step: default_step })
            .values()
    }
}

#[derive(Clone, Debug)]
struct AlphaRange {
    start: f64,
    stop: f64,
    step: f64,
}

impl AlphaRange {
    fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count).map(|i| self.start + i as f64 * self.step).collect()
    }
}

#[derive(Args)]
struct FieldsArgs {
    #[command(flatten)]
    guide: GuideArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Fractional order α
    #[arg(long, default_value_t = 0.0, value_parser = parse_finite)]
    alpha: f64,
    /// Sampling grid `ymin:ymax:ny,zmin:zmax:nz` (default: full gap by one
    /// guided wavelength, 21×41 points)
    #[arg(long, value_parser = parse_grid)]
    grid: Option<GridSpec>,
}

#[derive(Clone, Debug)]
struct GridSpec {
    y: (f64, f64, usize),
    z: (f64, f64, usize),
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    guide: GuideArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    alpha: AlphaArgs,
    /// Observation point in normalized coordinates `hy,bz` (radians);
    /// default π/4,π/4
    #[arg(long, value_parser = parse_pair)]
    point: Option<(f64, f64)>,
}

#[derive(Args)]
struct FieldlinesArgs {
    #[command(flatten)]
    guide: GuideArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Fractional order α
    #[arg(long, default_value_t = 0.5, value_parser = parse_finite)]
    alpha: f64,
    /// Field whose lines are traced
    #[arg(long, value_enum, default_value_t = Component::E)]
    component: Component,
    /// Seed grid size: seeds² starting points over gap × guided wavelength
    #[arg(long, default_value_t = 8)]
    seeds: usize,
    /// Snapshot phase φ in radians: lines follow Re[F·e^{iφ}]
    #[arg(long, default_value_t = 0.0, value_parser = parse_finite)]
    phase: f64,
    /// Integration step in meters (default: guided wavelength / 200)
    #[arg(long)]
    step: Option<f64>,
    /// Maximum points per line
    #[arg(long = "max-points", default_value_t = 2000)]
    max_points: usize,
    /// Tracing window in z as `zmin:zmax` (default: one guided wavelength)
    #[arg(long = "z-range", value_parser = parse_colon_pair)]
    z_range: Option<(f64, f64)>,
}

#[derive(Args)]
struct ImpedanceArgs {
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    alpha: AlphaArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    guide: GuideArgs,
    /// Also write the report to a file
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = |_| format!("expected a complex number as `re,im`, got `{s}`");
    match parts.as_slice() {
        [re] => Ok(Complex64::new(re.trim().parse().map_err(bad)?, 0.0)),
        [re, im] => Ok(Complex64::new(
            re.trim().parse().map_err(bad)?,
            im.trim().parse().map_err(bad)?,
        )),
        _ => Err(format!("expected a complex number as `re,im`, got `{s}`")),
    }
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = |_| format!("expected `a,b`, got `{s}`");
    match parts.as_slice() {
        [a, b] => {
            let a: f64 = a.trim().parse().map_err(bad)?;
            let b: f64 = b.trim().parse().map_err(bad)?;
            if !(a.is_finite() && b.is_finite()) {
                return Err(format!("`{s}` must be finite"));
            }
            Ok((a, b))
        }
        _ => Err(format!("expected `a,b`, got `{s}`")),
    }
}

fn parse_finite(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("expected a number, got `{s}`"))?;
    if !x.is_finite() {
        return Err(format!("`{s}` must be finite"));
    }
    Ok(x)
}

fn parse_colon_pair(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = |_| format!("expected `min:max`, got `{s}`");
    match parts.as_slice() {
        [a, b] => {
            let lo: f64 = a.trim().parse().map_err(bad)?;
            let hi: f64 = b.trim().parse().map_err(bad)?;
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(format!("range `{s}` must satisfy min < max and be finite"));
            }
            Ok((lo, hi))
        }
        _ => Err(format!("expected `min:max`, got `{s}`")),
    }
}

fn parse_alpha_range(s: &str) -> Result<AlphaRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = |_| format!("expected `start:stop:step`, got `{s}`");
    match parts.as_slice() {
        [a, b, c] => {
            let r = AlphaRange {
                start: a.trim().parse().map_err(bad)?,
                stop: b.trim().parse().map_err(bad)?,
                step: c.trim().parse().map_err(bad)?,
            };
            if !(r.step > 0.0 && r.step.is_finite()) {
                return Err(format!("alpha-range step must be > 0, got {}", r.step));
            }
            if !(r.start.is_finite() && r.stop.is_finite() && r.start <= r.stop) {
                return Err(format!("alpha-range `{s}` must satisfy start <= stop"));
            }
            Ok(r)
        }
        _ => Err(format!("expected `start:stop:step`, got `{s}`")),
    }
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let axes: Vec<&str> = s.split(',').collect();
    if axes.len() != 2 {
        return Err(format!("expected `ymin:ymax:ny,zmin:zmax:nz`, got `{s}`"));
    }
    let parse_axis = |axis: &str, name: &str| -> Result<(f64, f64, usize), String> {
        let p: Vec<&str> = axis.split(':').collect();
        if p.len() != 3 {
            return Err(format!("grid axis `{axis}` must be `min:max:count`"));
        }
        let min: f64 = p[0].trim().parse().map_err(|_| format!("bad {name} min `{}`", p[0]))?;
        let max: f64 = p[1].trim().parse().map_err(|_| format!("bad {name} max `{}`", p[1]))?;
        let count: usize =
            p[2].trim().parse().map_err(|_| format!("bad {name} count `{}`", p[2]))?;
        if count < 2 {
            return Err(format!("grid {name} count must be >= 2, got {count}"));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(format!("grid {name} range must satisfy min < max"));
        }
        Ok((min, max, count))
    };
    Ok(GridSpec { y: parse_axis(axes[0], "y")?, z: parse_axis(axes[1], "z")? })
}

fn default_point() -> (f64, f64) {
    (FRAC_PI_4, FRAC_PI_4)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Fields(args) => commands::run_fields(&args),
        Command::Sweep(args) => commands::run_sweep(&args),
        Command::Fieldlines(args) => commands::run_fieldlines(&args),
        Command::Impedance(args) => commands::run_impedance(&args),
        Command::Verify(args) => commands::run_verify(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
