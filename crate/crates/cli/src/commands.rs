//! The five subcommand implementations.

use crate::table::{emit, Cell, Table};
use crate::{
    default_point, FieldlinesArgs, FieldsArgs, Format, ImpedanceArgs, SweepArgs, VerifyArgs,
};
use fraccurl::{
    alpha_sweep, boundary_residual, default_seeds, field_grid, maxwell_residual,
    trace_fieldlines, wall_impedance_matrix, wave_impedance, wave_impedance_from_fields,
    FieldSample, GuideConfig, ImpedanceValue, SampleGrid,
};
use serde_json::json;
use std::f64::consts::PI;

type Outcome = Result<bool, String>;

const FIELD_HEADERS: [&str; 12] = [
    "e_x_re", "e_x_im", "e_y_re", "e_y_im", "e_z_re", "e_z_im", "eta_h_x_re", "eta_h_x_im",
    "eta_h_y_re", "eta_h_y_im", "eta_h_z_re", "eta_h_z_im",
];

fn field_cells(s: &FieldSample) -> impl Iterator<Item = Cell> + '_ {
    (0..3)
        .map(|i| s.e[i])
        .chain((0..3).map(|i| s.eta_h[i]))
        .flat_map(|c| [Cell::Num(c.re), Cell::Num(c.im)])
}

fn write_table(table: Table, format: Format, out: Option<&std::path::Path>, config: serde_json::Value) -> Outcome {
    let content = match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(config),
    };
    emit(out, &content).map_err(|e| format!("cannot write output: {e}"))?;
    Ok(true)
}

pub fn run_sweep(args: &SweepArgs) -> Outcome {
    let cfg = args.guide.resolve()?;
    let point = args.point.unwrap_or_else(default_point);
    let alphas = args.alpha.list_or_default(0.05);
    let rows = alpha_sweep(&cfg, point, &alphas).map_err(|e| e.to_string())?;

    let mut headers = vec!["alpha"];
    headers.extend(FIELD_HEADERS);
    let mut table = Table::new(headers);
    for row in &rows {
        let mut cells = vec![Cell::Num(row.alpha)];
        cells.extend(field_cells(&row.sample));
        table.push(cells);
    }
    let mut config = args.guide.echo(&cfg);
    config["command"] = json!("sweep");
    config["point_hy_bz"] = json!([point.0, point.1]);
    config["alphas"] = json!(alphas);
    write_table(table, args.output.format, args.output.out.as_deref(), config)
}

pub fn run_fields(args: &FieldsArgs) -> Outcome {
    let cfg = args.guide.resolve()?;
    let (y_range, z_range) = match &args.grid {
        Some(g) => (g.y, g.z),
        None => ((0.0, cfg.b(), 21), (0.0, cfg.guided_wavelength(), 41)),
    };
    let grid = SampleGrid::new(y_range, z_range, 0.0).map_err(|e| e.to_string())?;
    let samples = field_grid(&cfg, args.alpha, &grid).map_err(|e| e.to_string())?;

    let mut headers = vec!["y", "z"];
    headers.extend(FIELD_HEADERS);
    let mut table = Table::new(headers);
    for s in &samples {
        let mut cells = vec![Cell::Num(s.point.0), Cell::Num(s.point.1)];
        cells.extend(field_cells(s));
        table.push(cells);
    }
    let mut config = args.guide.echo(&cfg);
    config["command"] = json!("fields");
    config["alpha"] = json!(args.alpha);
    config["grid_y"] = json!([y_range.0, y_range.1, y_range.2]);
    config["grid_z"] = json!([z_range.0, z_range.1, z_range.2]);
    write_table(table, args.output.format, args.output.out.as_deref(), config)
}

pub fn run_fieldlines(args: &FieldlinesArgs) -> Outcome {
    let cfg = args.guide.resolve()?;
    if args.seeds == 0 {
        return Err("seeds must be >= 1".to_string());
    }
    let step = args.step.unwrap_or_else(|| cfg.guided_wavelength() / 200.0);
    if !(step > 0.0 && step.is_finite()) {
        return Err(format!("step must be > 0, got {step}"));
    }
    let z_range = args.z_range.unwrap_or((0.0, cfg.guided_wavelength()));
    let seeds = default_seeds(&cfg, args.seeds);
    let lines = trace_fieldlines(
        &cfg,
        args.alpha,
        args.component.into(),
        &seeds,
        args.phase,
        step,
        args.max_points,
        z_range,
    );

    let mut table = Table::new(vec!["line_id", "y", "z"]);
    for (id, line) in lines.iter().enumerate() {
        for p in &line.points {
            table.push(vec![Cell::Int(id as u64), Cell::Num(p.0), Cell::Num(p.1)]);
        }
    }
    let mut config = args.guide.echo(&cfg);
    config["command"] = json!("fieldlines");
    config["alpha"] = json!(args.alpha);
    config["component"] = json!(match args.component {
        crate::Component::E => "e",
        crate::Component::H => "h",
    });
    config["seeds"] = json!(args.seeds);
    config["phase"] = json!(args.phase);
    config["step"] = json!(step);
    config["max_points"] = json!(args.max_points);
    config["z_range"] = json!([z_range.0, z_range.1]);
    write_table(table, args.output.format, args.output.out.as_deref(), config)
}

pub fn run_impedance(args: &ImpedanceArgs) -> Outcome {
    let alphas = args.alpha.list_or_default(0.05);
    let mut table = Table::new(vec![
        "alpha",
        "z_xz_re",
        "z_xz_im",
        "z_xz_infinite",
        "z_zx_re",
        "z_zx_im",
        "z_zx_infinite",
        "y_xz_re",
        "y_xz_im",
        "y_xz_infinite",
        "y_zx_re",
        "y_zx_im",
        "y_zx_infinite",
    ]);
    for &alpha in &alphas {
        let p = wall_impedance_matrix(alpha);
        let mut cells = vec![Cell::Num(alpha)];
        for v in [p.z_xz, p.z_zx, p.y_xz, p.y_zx] {
            match v {
                ImpedanceValue::Finite(z) => {
                    cells.extend([Cell::Num(z.re), Cell::Num(z.im), Cell::Flag(false)]);
                }
                ImpedanceValue::Infinite => {
                    cells.extend([Cell::Empty, Cell::Empty, Cell::Flag(true)]);
                }
            }
        }
        table.push(cells);
    }
    let config = json!({ "command": "impedance", "alphas": alphas });
    write_table(table, args.output.format, args.output.out.as_deref(), config)
}

struct Suite {
    name: &'static str,
    tolerance: f64,
    residual: f64,
}

impl Suite {
    fn passed(&self) -> bool {
        self.residual < self.tolerance
    }
}

/// Run every oracle suite on the configured guide and report the worst
/// residual of each; exit status reflects overall success.
pub fn run_verify(args: &VerifyArgs) -> Outcome {
    let cfg = args.guide.resolve()?;
    let suites = [
        duality_suite(&cfg),
        boundary_suite(&cfg),
        boundary_profile_suite(&cfg),
        maxwell_suite(&cfg)?,
        path_equivalence_suite(&cfg)?,
        impedance_suite(&cfg),
    ];

    let mut report = String::new();
    for s in &suites {
        report.push_str(&format!(
            "{} {:<22} max residual {:.3e} (tolerance {:.0e})\n",
            if s.passed() { "PASS" } else { "FAIL" },
            s.name,
            s.residual,
            s.tolerance,
        ));
    }
    let passed = suites.iter().filter(|s| s.passed()).count();
    report.push_str(&format!("verification: {passed}/{} suites passed\n", suites.len()));

    print!("{report}");
    if let Some(path) = &args.out {
        emit(Some(path), &report).map_err(|e| format!("cannot write report: {e}"))?;
    }
    Ok(passed == suites.len())
}

/// Interior sample points: a 5×5 grid over the gap and one guided
/// wavelength, walls excluded.
fn interior_points(cfg: &GuideConfig) -> Vec<(f64, f64)> {
    let lg = cfg.guided_wavelength();
    let mut pts = Vec::with_capacity(25);
    for i in 0..5 {
        let y = cfg.b() * (i as f64 + 1.0) / 6.0;
        for j in 0..5 {
            pts.push((y, lg * j as f64 / 4.0));
        }
    }
    pts
}

fn duality_suite(cfg: &GuideConfig) -> Suite {
    let mut worst: f64 = 0.0;
    for (y, z) in interior_points(cfg) {
        let base = cfg.db_fractional(0.0, (y, z));
        let dual = cfg.db_fractional(1.0, (y, z));
        let denom = base.e.norm().max(base.eta_h.norm());
        worst = worst
            .max((dual.e - base.eta_h).norm() / denom)
            .max((dual.eta_h + base.e).norm() / denom);
    }
    Suite { name: "duality-endpoints", tolerance: 1e-12, residual: worst }
}

fn boundary_suite(cfg: &GuideConfig) -> Suite {
    let lg = cfg.guided_wavelength();
    let z: Vec<f64> = (0..8).map(|i| lg * i as f64 / 7.0).collect();
    let mut worst: f64 = 0.0;
    for alpha in [0.0, 1.0] {
        let (re, rh) = boundary_residual(cfg, alpha, &z);
        worst = worst.max(re).max(rh);
    }
    Suite { name: "db-wall-limits", tolerance: 1e-12, residual: worst }
}

fn boundary_profile_suite(cfg: &GuideConfig) -> Suite {
    let lg = cfg.guided_wavelength();
    let z: Vec<f64> = (0..8).map(|i| lg * i as f64 / 7.0).collect();
    let (peak, _) = boundary_residual(cfg, 0.5, &z);
    let mut worst: f64 = 0.0;
    for i in 0..=20 {
        let alpha = i as f64 * 0.05;
        let (re, _) = boundary_residual(cfg, alpha, &z);
        let want = peak * (alpha * PI).sin().abs();
        if want > 1e-13 {
            worst = worst.max((re - want).abs() / want);
        }
    }
    Suite { name: "wall-normal-profile", tolerance: 1e-10, residual: worst }
}

fn maxwell_suite(cfg: &GuideConfig) -> Result<Suite, String> {
    let d = 1e-4 * (2.0 * PI / cfg.medium().k());
    let mut worst: f64 = 0.0;
    for (y, z) in interior_points(cfg) {
        for ia in 0..=10 {
            let alpha = ia as f64 * 0.1;
            let (r1, r2) = maxwell_residual(cfg, alpha, (y, z), d).map_err(|e| e.to_string())?;
            worst = worst.max(r1).max(r2);
        }
    }
    Ok(Suite { name: "maxwell-residual", tolerance: 1e-5, residual: worst })
}

fn path_equivalence_suite(cfg: &GuideConfig) -> Result<Suite, String> {
    let mut worst: f64 = 0.0;
    for (y, z) in interior_points(cfg) {
        for ia in 0..=10 {
            let alpha = ia as f64 * 0.1;
            let closed = cfg.db_fractional(alpha, (y, z));
            let te = cfg.te_pec_fractional(alpha, (y, z));
            let tm = cfg.tm_pmc_fractional(alpha, (y, z));
            let waves = cfg.db_planewave_path(alpha, (y, z)).map_err(|e| e.to_string())?;
            let denom = closed.e.norm().max(closed.eta_h.norm());
            let case_e = te.e + tm.e;
            let case_h = te.eta_h + tm.eta_h;
            worst = worst
                .max((case_e - closed.e).norm() / denom)
                .max((case_h - closed.eta_h).norm() / denom)
                .max((waves.e - closed.e).norm() / denom)
                .max((waves.eta_h - closed.eta_h).norm() / denom);
        }
    }
    Ok(Suite { name: "path-equivalence", tolerance: 1e-12, residual: worst })
}

fn impedance_suite(cfg: &GuideConfig) -> Suite {
    let mut worst: f64 = 0.0;
    for ia in 0..=20 {
        let alpha = ia as f64 * 0.05;
        for iy in 0..=4 {
            let y = cfg.b() * iy as f64 / 4.0;
            let (f_xz, f_zx) = wave_impedance(cfg, alpha, y);
            let (r_xz, r_zx) = wave_impedance_from_fields(cfg, alpha, y);
            for (f, r) in [(f_xz, r_xz), (f_zx, r_zx)] {
                if let (ImpedanceValue::Finite(a), ImpedanceValue::Finite(b)) = (f, r) {
                    if a.norm() < 1e9 {
                        worst = worst.max((a - b).norm() / (1.0 + a.norm()));
                    }
                }
            }
        }
    }
    Suite { name: "impedance-consistency", tolerance: 1e-10, residual: worst }
}
