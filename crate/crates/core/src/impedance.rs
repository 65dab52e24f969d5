//! Transverse wave impedance of the fractional-dual DB walls.
//!
//! The wall seen by the TEᶻ content is characterized by Z_xz = −E_x/H_z and
//! the wall seen by the TMᶻ content by Z_zx = −E_z/H_x (signs fixed so the
//! ratios reduce to the closed forms below). At a PEC-like response the
//! impedance is zero, at a PMC-like response it diverges; divergence is a
//! legitimate value here, reported as an explicit marker so emitted tables
//! stay parseable, with the reciprocal admittance always available.

use crate::guide::GuideConfig;
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Absolute threshold on the normalized (dimensionless) denominator below
/// which a ratio is reported as INFINITE. The denominators are exact
/// trigonometric zeros at the endpoint orders, so anything tighter risks
/// spurious markers from rounding.
pub const ZERO_DENOMINATOR_TOL: f64 = 1e-14;

/// A wall impedance or admittance: finite complex, or divergent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ImpedanceValue {
    Finite(Complex64),
    Infinite,
}

impl ImpedanceValue {
    /// num/den with the INFINITE rule applied to |den|/scale.
    fn from_ratio(num: Complex64, den: Complex64, scale: f64) -> Self {
        let normalized = if scale > 0.0 { den.norm() / scale } else { den.norm() };
        if normalized <= ZERO_DENOMINATOR_TOL {
            ImpedanceValue::Infinite
        } else {
            ImpedanceValue::Finite(num / den)
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ImpedanceValue::Infinite)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ImpedanceValue::Finite(z) => Some(*z),
            ImpedanceValue::Infinite => None,
        }
    }

    fn scaled(self, factor: f64) -> Self {
        match self {
            ImpedanceValue::Finite(z) => ImpedanceValue::Finite(z * factor),
            ImpedanceValue::Infinite => ImpedanceValue::Infinite,
        }
    }
}

/// Normalized wall impedances z_xz, z_zx of the DB boundary (equal modal
/// amplitudes, wall at y = 0) together with their admittances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpedancePair {
    pub z_xz: ImpedanceValue,
    pub z_zx: ImpedanceValue,
    pub y_xz: ImpedanceValue,
    pub y_zx: ImpedanceValue,
}

/// Physical transverse wave impedances (Z_xz, Z_zx) of the fractional-dual
/// fields at height y, in ohms:
///
/// ```text
/// Z_xz = η(k/h)·(Aₙ·S_α·C_{y+α} + i·Cₙ·C_α·S_{y+α}) / (Cₙ·C_α·C_{y+α} + i·Aₙ·S_α·S_{y+α})
/// Z_zx = η(h/k)·(Aₙ·C_α·C_{y+α} − i·Cₙ·S_α·S_{y+α}) / (Cₙ·S_α·C_{y+α} − i·Aₙ·C_α·S_{y+α})
/// ```
///
/// with S_α = sin(απ/2), C_α = cos(απ/2), S_{y+α} = sin(hy + απ/2),
/// C_{y+α} = cos(hy + απ/2). Zero denominators yield INFINITE.
pub fn wave_impedance(cfg: &GuideConfig, alpha: f64, y: f64) -> (ImpedanceValue, ImpedanceValue) {
    let (h, _) = cfg.mode_params();
    let k = cfg.medium().k();
    let eta = cfg.medium().eta();
    let a = cfg.amp_tm();
    let c = cfg.amp_te();
    let scale = a.norm().max(c.norm());
    let i = Complex64::i();

    let half = alpha * FRAC_PI_2;
    let (sa, ca) = half.sin_cos();
    let (sya, cya) = (h * y + half).sin_cos();

    let num_xz = a * (sa * cya) + i * c * (ca * sya);
    let den_xz = c * (ca * cya) + i * a * (sa * sya);
    let num_zx = a * (ca * cya) - i * c * (sa * sya);
    let den_zx = c * (sa * cya) - i * a * (ca * sya);

    (
        ImpedanceValue::from_ratio(num_xz, den_xz, scale).scaled(eta * k / h),
        ImpedanceValue::from_ratio(num_zx, den_zx, scale).scaled(eta * h / k),
    )
}

/// Independent field-ratio route to the same quantities: Z_xz = −η·E_x/(ηH_z)
/// and Z_zx = −η·E_z/(ηH_x) evaluated from the DB fractional fields.
pub fn wave_impedance_from_fields(
    cfg: &GuideConfig,
    alpha: f64,
    y: f64,
) -> (ImpedanceValue, ImpedanceValue) {
    let eta = cfg.medium().eta();
    let s = cfg.db_fractional(alpha, (y, 0.0));
    let scale = cfg.amp_tm().norm().max(cfg.amp_te().norm());
    (
        ImpedanceValue::from_ratio(-s.e.x(), s.eta_h.z(), scale).scaled(eta),
        ImpedanceValue::from_ratio(-s.e.z(), s.eta_h.x(), scale).scaled(eta),
    )
}

/// Scalar factors of the normalized impedance matrix of the DB wall
/// (y = 0, equal amplitudes):
///
/// ```text
/// z_xz = (S_α·C_α + i·C_α·S_α)/(C_α² + i·S_α²)
/// z_zx = (C_α² − i·S_α²)/(S_α·C_α − i·C_α·S_α)
/// ```
///
/// Both are 0 resp. INFINITE at α ∈ {0, 1}, exactly 1 at α = 1/2, and
/// genuinely complex in between.
pub fn wall_impedance_matrix(alpha: f64) -> ImpedancePair {
    let half = alpha * FRAC_PI_2;
    let (sa, ca) = half.sin_cos();
    let i = Complex64::i();
    let num_xz = Complex64::new(sa * ca, 0.0) + i * (ca * sa);
    let den_xz = Complex64::new(ca * ca, 0.0) + i * (sa * sa);
    let num_zx = Complex64::new(ca * ca, 0.0) - i * (sa * sa);
    let den_zx = Complex64::new(sa * ca, 0.0) - i * (ca * sa);
    ImpedancePair {
        z_xz: ImpedanceValue::from_ratio(num_xz, den_xz, 1.0),
        z_zx: ImpedanceValue::from_ratio(num_zx, den_zx, 1.0),
        y_xz: ImpedanceValue::from_ratio(den_xz, num_xz, 1.0),
        y_zx: ImpedanceValue::from_ratio(den_zx, num_zx, 1.0),
    }
}
