//! Sampling, α-sweeps, field-line tracing, and independent numerical
//! verification of the guide fields.
//!
//! Residuals are normalized by the peak field magnitude of the α = 0
//! solution over the cross-section, which has the closed form
//! (k/h)·max(|Aₙ|, |Cₙ|): z only contributes a unimodular phase and hy
//! sweeps through at least half a period, so sin and cos both reach 1.

use crate::guide::{FieldSample, GuideConfig};
use num_complex::Complex64;
use thiserror::Error;

/// Stagnation threshold for field-line tracing, relative to the reference
/// field maximum.
const STAGNATION_REL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DiagnosticsError {
    #[error("point (y = {y}) lies outside the guide cross-section [0, {b}]")]
    DomainError { y: f64, b: f64 },
    #[error("finite-difference stencil of half-width 2·{fd_step} exits the guide at y = {y}")]
    StencilExitsGuide { y: f64, fd_step: f64 },
    #[error("grid parameter {name} is invalid")]
    InvalidGrid { name: &'static str },
}

/// Rectangular sampling grid over the cross-section with a snapshot phase
/// for instantaneous (real-part) quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleGrid {
    pub y_range: (f64, f64, usize),
    pub z_range: (f64, f64, usize),
    pub phase: f64,
}

impl SampleGrid {
    pub fn new(
        y_range: (f64, f64, usize),
        z_range: (f64, f64, usize),
        phase: f64,
    ) -> Result<Self, DiagnosticsError> {
        for (name, r) in [("y_range", &y_range), ("z_range", &z_range)] {
            if r.2 < 2 {
                return Err(DiagnosticsError::InvalidGrid { name });
            }
            if !(r.0.is_finite() && r.1.is_finite() && r.0 < r.1) {
                return Err(DiagnosticsError::InvalidGrid { name });
            }
        }
        if !phase.is_finite() {
            return Err(DiagnosticsError::InvalidGrid { name: "phase" });
        }
        Ok(SampleGrid { y_range, z_range, phase })
    }

    /// Grid points, y-major then z.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let (y0, y1, ny) = self.y_range;
        let (z0, z1, nz) = self.z_range;
        let mut pts = Vec::with_capacity(ny * nz);
        for i in 0..ny {
            let y = y0 + (y1 - y0) * i as f64 / (ny - 1) as f64;
            for j in 0..nz {
                let z = z0 + (z1 - z0) * j as f64 / (nz - 1) as f64;
                pts.push((y, z));
            }
        }
        pts
    }
}

/// Which field the direction lines follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldComponent {
    E,
    H,
}

/// Why a traced line ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// Next point would leave through y < 0 or y > b.
    Wall,
    /// Next point would leave the requested z window.
    ZBound,
    MaxPoints,
    /// |field| fell below the stagnation threshold.
    Stagnation,
    SeedOutsideGuide,
}

/// A traced field line in the yz-plane.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldLine {
    pub points: Vec<(f64, f64)>,
    pub component: FieldComponent,
    pub seed: (f64, f64),
    pub stop: StopReason,
}

/// One α-sweep entry: the DB fractional fields at the observation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub sample: FieldSample,
}

/// Peak |component| of the α = 0 field pair over the cross-section; the
/// normalization constant for all residuals here.
pub fn reference_field_max(cfg: &GuideConfig) -> f64 {
    let (h, _) = cfg.mode_params();
    (cfg.medium().k() / h) * cfg.amp_te().norm().max(cfg.amp_tm().norm())
}

/// Evaluate the DB fractional fields at an observation point given in the
/// normalized coordinates (hy, βz), for each requested order.
pub fn alpha_sweep(
    cfg: &GuideConfig,
    point_norm: (f64, f64),
    alphas: &[f64],
) -> Result<Vec<SweepRow>, DiagnosticsError> {
    let (h, beta) = cfg.mode_params();
    let y = point_norm.0 / h;
    let z = point_norm.1 / beta;
    if !(0.0..=cfg.b()).contains(&y) {
        return Err(DiagnosticsError::DomainError { y, b: cfg.b() });
    }
    Ok(alphas
        .iter()
        .map(|&alpha| SweepRow { alpha, sample: cfg.db_fractional(alpha, (y, z)) })
        .collect())
}

/// Evaluate the DB fractional fields over a grid (y-major order).
pub fn field_grid(
    cfg: &GuideConfig,
    alpha: f64,
    grid: &SampleGrid,
) -> Result<Vec<FieldSample>, DiagnosticsError> {
    let (y0, y1, _) = grid.y_range;
    if y0 < 0.0 || y1 > cfg.b() {
        let y = if y0 < 0.0 { y0 } else { y1 };
        return Err(DiagnosticsError::DomainError { y, b: cfg.b() });
    }
    Ok(grid
        .points()
        .into_iter()
        .map(|p| cfg.db_fractional(alpha, p))
        .collect())
}

/// Cell-centered n×n seed grid over the full gap and one guided
/// wavelength in z.
pub fn default_seeds(cfg: &GuideConfig, n: usize) -> Vec<(f64, f64)> {
    let lg = cfg.guided_wavelength();
    let mut seeds = Vec::with_capacity(n * n);
    for i in 0..n {
        let y = cfg.b() * (i as f64 + 0.5) / n as f64;
        for j in 0..n {
            let z = lg * (j as f64 + 0.5) / n as f64;
            seeds.push((y, z));
        }
    }
    seeds
}

/// Trace instantaneous field lines of Re[F·e^{iφ}] in the yz-plane by
/// fixed-step fourth-order integration of the unit-normalized direction
/// field. Fixed step on a unit field makes the step an arc-length bound,
/// so lines are comparable across α. Lines stop at the walls, at the z
/// window, at `max_points`, or where the field stagnates.
#[allow(clippy::too_many_arguments)]
pub fn trace_fieldlines(
    cfg: &GuideConfig,
    alpha: f64,
    component: FieldComponent,
    seeds: &[(f64, f64)],
    phase: f64,
    step: f64,
    max_points: usize,
    z_bounds: (f64, f64),
) -> Vec<FieldLine> {
    let rot = Complex64::from_polar(1.0, phase);
    let floor = STAGNATION_REL * reference_field_max(cfg);
    let direction = |p: (f64, f64)| -> Option<(f64, f64)> {
        let s = cfg.db_fractional(alpha, p);
        let f = match component {
            FieldComponent::E => s.e,
            FieldComponent::H => s.eta_h,
        };
        let fy = (f.y() * rot).re;
        let fz = (f.z() * rot).re;
        let mag = (fy * fy + fz * fz).sqrt();
        if mag < floor {
            None
        } else {
            Some((fy / mag, fz / mag))
        }
    };

    seeds
        .iter()
        .map(|&seed| {
            let mut points = Vec::new();
            if !(0.0..=cfg.b()).contains(&seed.0) {
                return FieldLine { points, component, seed, stop: StopReason::SeedOutsideGuide };
            }
            points.push(seed);
            let mut p = seed;
            let stop = loop {
                if points.len() >= max_points {
                    break StopReason::MaxPoints;
                }
                let next = match rk4_step(p, step, &direction) {
                    Some(q) => q,
                    None => break StopReason::Stagnation,
                };
                if next.0 < 0.0 || next.0 > cfg.b() {
                    break StopReason::Wall;
                }
                if next.1 < z_bounds.0 || next.1 > z_bounds.1 {
                    break StopReason::ZBound;
                }
                points.push(next);
                p = next;
            };
            FieldLine { points, component, seed, stop }
        })
        .collect()
}

fn rk4_step(
    p: (f64, f64),
    h: f64,
    dir: &impl Fn((f64, f64)) -> Option<(f64, f64)>,
) -> Option<(f64, f64)> {
    let d1 = dir(p)?;
    let d2 = dir((p.0 + 0.5 * h * d1.0, p.1 + 0.5 * h * d1.1))?;
    let d3 = dir((p.0 + 0.5 * h * d2.0, p.1 + 0.5 * h * d2.1))?;
    let d4 = dir((p.0 + h * d3.0, p.1 + h * d3.1))?;
    Some((
        p.0 + h / 6.0 * (d1.0 + 2.0 * d2.0 + 2.0 * d3.0 + d4.0),
        p.1 + h / 6.0 * (d1.1 + 2.0 * d2.1 + 2.0 * d3.1 + d4.1),
    ))
}

/// Finite-difference check of the curl equations at an interior point:
///
/// ```text
/// r1 = ‖∇×E − ik·ηH‖ / (k·max-field)
/// r2 = ‖∇×(ηH) + ik·E‖ / (k·max-field)
/// ```
///
/// Curls use second-order central differences in y and z (x-derivatives
/// vanish identically). The point must sit at least 2·fd_step from each
/// wall.
pub fn maxwell_residual(
    cfg: &GuideConfig,
    alpha: f64,
    point: (f64, f64),
    fd_step: f64,
) -> Result<(f64, f64), DiagnosticsError> {
    let (y, z) = point;
    if y - 2.0 * fd_step < 0.0 || y + 2.0 * fd_step > cfg.b() {
        return Err(DiagnosticsError::StencilExitsGuide { y, fd_step });
    }
    let ik = Complex64::new(0.0, cfg.medium().k());
    let denom = cfg.medium().k() * reference_field_max(cfg);

    let sample = |y: f64, z: f64| cfg.db_fractional(alpha, (y, z));
    let curl = |pick: &dyn Fn(&FieldSample) -> crate::vec3::ComplexVec3| {
        let d = fd_step;
        let dy = (pick(&sample(y + d, z)) - pick(&sample(y - d, z))).scale(Complex64::new(
            1.0 / (2.0 * d),
            0.0,
        ));
        let dz = (pick(&sample(y, z + d)) - pick(&sample(y, z - d))).scale(Complex64::new(
            1.0 / (2.0 * d),
            0.0,
        ));
        // (∇×F) with ∂/∂x = 0
        crate::vec3::ComplexVec3::new(dy.z() - dz.y(), dz.x(), -dy.x())
    };

    let center = sample(y, z);
    let r1 = (curl(&|s| s.e) - center.eta_h.scale(ik)).norm() / denom;
    let r2 = (curl(&|s| s.eta_h) + center.e.scale(ik)).norm() / denom;
    Ok((r1, r2))
}

/// Normalized maxima of the wall-normal components |E_y| and |ηH_y| over
/// both walls and the given z samples.
pub fn boundary_residual(cfg: &GuideConfig, alpha: f64, z_samples: &[f64]) -> (f64, f64) {
    let denom = reference_field_max(cfg);
    let mut e_max: f64 = 0.0;
    let mut h_max: f64 = 0.0;
    for &z in z_samples {
        for y in [0.0, cfg.b()] {
            let s = cfg.db_fractional(alpha, (y, z));
            e_max = e_max.max(s.e.y().norm());
            h_max = h_max.max(s.eta_h.y().norm());
        }
    }
    (e_max / denom, h_max / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planewave::Medium;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn reference_guide() -> GuideConfig {
        GuideConfig::from_angle(
            PI / 6.0,
            1,
            Medium::new(1.0, 1.0).unwrap(),
            c(1.0, 0.0),
            c(1.0, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn sweep_limits_are_canonical_and_dual() {
        let cfg = reference_guide();
        let rows = alpha_sweep(&cfg, (PI / 4.0, PI / 4.0), &[0.0, 1.0]).unwrap();
        let (h, beta) = cfg.mode_params();
        let point = (PI / 4.0 / h, PI / 4.0 / beta);
        let base = cfg.db_fractional(0.0, point);
        assert_eq!(rows[0].sample, base);
        let denom = base.e.norm().max(base.eta_h.norm());
        assert!((rows[1].sample.e - base.eta_h).norm() / denom < 1e-12);
        assert!((rows[1].sample.eta_h + base.e).norm() / denom < 1e-12);
    }

    #[test]
    fn sweep_rejects_points_outside_the_gap() {
        let cfg = reference_guide();
        // hy = 2nπ maps to y = 2b
        let err = alpha_sweep(&cfg, (2.0 * PI, 0.0), &[0.0]).unwrap_err();
        assert!(matches!(err, DiagnosticsError::DomainError { .. }));
    }

    #[test]
    fn grid_validation() {
        assert!(SampleGrid::new((0.0, 1.0, 1), (0.0, 1.0, 5), 0.0).is_err());
        assert!(SampleGrid::new((1.0, 0.0, 4), (0.0, 1.0, 5), 0.0).is_err());
        let g = SampleGrid::new((0.0, 1.0, 3), (0.0, 2.0, 2), 0.0).unwrap();
        assert_eq!(g.points().len(), 6);
        assert_eq!(g.points()[0], (0.0, 0.0));
        assert_eq!(g.points()[5], (1.0, 2.0));
    }

    #[test]
    fn reference_max_closed_form() {
        let cfg = reference_guide();
        // sample the α=0 fields densely; no component exceeds the closed form
        let maxf = reference_field_max(&cfg);
        let mut seen: f64 = 0.0;
        for i in 0..=40 {
            let y = cfg.b() * i as f64 / 40.0;
            for j in 0..=10 {
                let z = cfg.guided_wavelength() * j as f64 / 10.0;
                let s = cfg.db_fractional(0.0, (y, z));
                seen = seen.max(s.e.max_component()).max(s.eta_h.max_component());
            }
        }
        assert!(seen <= maxf * (1.0 + 1e-12));
        assert!(seen > 0.95 * maxf, "grid should get close to the bound");
    }

    #[test]
    fn maxwell_residual_is_small_and_second_order() {
        let cfg = reference_guide();
        let k = cfg.medium().k();
        let d = 1e-4 * (2.0 * PI / k);
        let (r1, r2) = maxwell_residual(&cfg, 0.37, (2.0, 0.9), d).unwrap();
        assert!(r1 < 1e-5 && r2 < 1e-5, "r1={r1} r2={r2}");
        let (r1h, _) = maxwell_residual(&cfg, 0.37, (2.0, 0.9), d / 2.0).unwrap();
        let ratio = r1 / r1h;
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn maxwell_residual_requires_interior_stencil() {
        let cfg = reference_guide();
        let err = maxwell_residual(&cfg, 0.2, (0.001, 0.0), 0.01).unwrap_err();
        assert!(matches!(err, DiagnosticsError::StencilExitsGuide { .. }));
    }

    #[test]
    fn boundary_residual_limits_and_peak() {
        let cfg = reference_guide();
        let z: Vec<f64> = (0..8).map(|i| i as f64 * 0.9).collect();
        for alpha in [0.0, 1.0] {
            let (re, rh) = boundary_residual(&cfg, alpha, &z);
            assert!(re < 1e-12 && rh < 1e-12, "α={alpha}: {re} {rh}");
        }
        let (re, _) = boundary_residual(&cfg, 0.5, &z);
        let (h, beta) = cfg.mode_params();
        let want = (beta / h) * 0.5_f64.sqrt() / reference_field_max(&cfg);
        assert!((re - want).abs() < 1e-12);
    }

    #[test]
    fn boundary_profile_follows_sin_alpha_pi() {
        let cfg = reference_guide();
        let z = [0.0, 1.3, 5.2];
        let (peak, _) = boundary_residual(&cfg, 0.5, &z);
        let mut prev = -1.0;
        for i in 0..=20 {
            let alpha = i as f64 * 0.05;
            let (re, rh) = boundary_residual(&cfg, alpha, &z);
            let want = peak * (alpha * PI).sin().abs();
            if want > 1e-13 {
                assert!((re - want).abs() / want < 1e-10, "α={alpha}");
                assert!((rh - want).abs() / want < 1e-10, "α={alpha}");
            } else {
                assert!(re < 1e-12);
            }
            // strictly increasing to the midpoint, then decreasing
            if alpha <= 0.5 {
                assert!(re > prev, "α={alpha}");
            } else {
                assert!(re < prev, "α={alpha}");
            }
            prev = re;
        }
    }

    #[test]
    fn fieldline_tracing_is_deterministic() {
        let cfg = reference_guide();
        let seeds = default_seeds(&cfg, 4);
        let zb = (0.0, cfg.guided_wavelength());
        let a = trace_fieldlines(&cfg, 0.4, FieldComponent::E, &seeds, 0.0, 0.05, 200, zb);
        let b = trace_fieldlines(&cfg, 0.4, FieldComponent::E, &seeds, 0.0, 0.05, 200, zb);
        assert_eq!(a, b);
        // the step is an arc-length bound on consecutive points
        for line in &a {
            for w in line.points.windows(2) {
                let d = ((w[1].0 - w[0].0).powi(2) + (w[1].1 - w[0].1).powi(2)).sqrt();
                assert!(d <= 0.05 * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn canonical_order_lines_never_cross_the_walls() {
        let cfg = reference_guide();
        let seeds = default_seeds(&cfg, 8);
        let zb = (-1.0, cfg.guided_wavelength() + 1.0);
        let step = cfg.guided_wavelength() / 100.0;
        for comp in [FieldComponent::E, FieldComponent::H] {
            let lines = trace_fieldlines(&cfg, 0.0, comp, &seeds, 0.0, step, 600, zb);
            for l in &lines {
                assert_ne!(l.stop, StopReason::Wall, "seed {:?}", l.seed);
                for p in &l.points {
                    assert!(p.0 >= 0.0 && p.0 <= cfg.b());
                }
            }
        }
    }

    #[test]
    fn half_order_lines_meet_the_walls() {
        let cfg = reference_guide();
        let seeds = default_seeds(&cfg, 8);
        let zb = (-10.0 * cfg.guided_wavelength(), 10.0 * cfg.guided_wavelength());
        let step = cfg.guided_wavelength() / 200.0;
        let lines = trace_fieldlines(&cfg, 0.5, FieldComponent::E, &seeds, 0.0, step, 2000, zb);
        let wall_hits = lines.iter().filter(|l| l.stop == StopReason::Wall).count();
        assert!(wall_hits > 0, "expected wall-terminating lines at α = 1/2");
    }

    #[test]
    fn reversed_trace_retraces_the_polyline() {
        let cfg = reference_guide();
        let zb = (-20.0, 20.0);
        let step = cfg.guided_wavelength() / 200.0;
        let fwd = trace_fieldlines(
            &cfg,
            0.3,
            FieldComponent::E,
            &[(1.9, 0.8)],
            0.0,
            step,
            300,
            zb,
        );
        let line = &fwd[0];
        assert!(line.points.len() >= 5, "line too short to retrace");
        let last = *line.points.last().unwrap();
        // phase + π flips the instantaneous field, reversing the direction
        let back = trace_fieldlines(
            &cfg,
            0.3,
            FieldComponent::E,
            &[last],
            std::f64::consts::PI,
            step,
            line.points.len(),
            zb,
        );
        let rev = &back[0].points;
        assert_eq!(rev.len(), line.points.len());
        for (i, (a, b)) in rev.iter().zip(line.points.iter().rev()).enumerate() {
            let d = ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
            assert!(d <= step, "divergence {d} at index {i}");
        }
    }

    #[test]
    fn seeds_outside_the_gap_yield_empty_lines() {
        let cfg = reference_guide();
        let lines = trace_fieldlines(
            &cfg,
            0.2,
            FieldComponent::H,
            &[(-0.1, 0.0)],
            0.0,
            0.05,
            100,
            (0.0, 10.0),
        );
        assert_eq!(lines[0].stop, StopReason::SeedOutsideGuide);
        assert!(lines[0].points.is_empty());
    }
}
