//! Plane waves, media, and the fractional curl operator.
//!
//! For time dependence e^{−iωt}, a source-free plane wave with wavevector
//! **k** satisfies ∇×E = ikηH and ∇×(ηH) = −ikE, and the curl acts in
//! k-space as the cross-product operator i**k**×. Raising that operator to
//! a fractional power (through its eigenbasis: circular vectors about k̂
//! with eigenvalues ±k, plus k̂ itself at 0) and normalizing by (ik)^α
//! yields the fractional dual fields
//!
//! ```text
//! E_fd  = (ik)^{-α} curlᵅ E        ηH_fd = (ik)^{-α} curlᵅ (ηH)
//! ```
//!
//! which interpolate between a solution (α = 0) and its electromagnetic
//! dual E → ηH, ηH → −E (α = 1). On the transverse plane the map is a
//! rotation by απ/2 about k̂.

use crate::linop::{principal_pow, ComplexMatrix3, LinOpError};
use crate::vec3::{real_norm, ComplexVec3, RealVec3};
use num_complex::Complex64;
use thiserror::Error;

/// Relative tolerance for the plane-wave invariants (transversality,
/// curl consistency, wavenumber match).
pub const WAVE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum WaveError {
    #[error("wavevector must be nonzero")]
    ZeroWavevector,
    #[error("medium parameter {name} must be positive and finite, got {value}")]
    InvalidMedium { name: &'static str, value: f64 },
    #[error("wave amplitudes and wavevector must be finite")]
    NonFiniteWave,
    #[error("wave is not transverse: k·{field} = {residual:.3e} relative")]
    NotTransverse { field: &'static str, residual: f64 },
    #[error("wave pair violates the curl equation: |ik×E − ik·ηH| = {residual:.3e} relative")]
    NotMaxwellConsistent { residual: f64 },
    #[error("|k| = {got} does not match the medium wavenumber {expected}")]
    WavenumberMismatch { got: f64, expected: f64 },
    #[error(transparent)]
    Operator(#[from] LinOpError),
}

/// Homogeneous isotropic lossless medium: wavenumber k and wave
/// impedance η. (μ, ε, ω enter only through these two.)
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medium {
    k: f64,
    eta: f64,
}

impl Medium {
    pub fn new(k: f64, eta: f64) -> Result<Self, WaveError> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(WaveError::InvalidMedium { name: "k", value: k });
        }
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(WaveError::InvalidMedium { name: "eta", value: eta });
        }
        Ok(Medium { k, eta })
    }

    /// Wavenumber k (rad/m).
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Wave impedance η (Ω).
    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// A single source-free plane wave: electric phasor amplitude `e0`, scaled
/// magnetic amplitude `eta_h0` = η·H₀ (same units as E), and real
/// wavevector. Fields at a point are amplitude · e^{i k·r}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    e0: ComplexVec3,
    eta_h0: ComplexVec3,
    kvec: RealVec3,
}

impl PlaneWave {
    /// Build a plane wave, enforcing transversality of both amplitudes and
    /// the curl equation i k×E₀ = ik·ηH₀ to relative `WAVE_TOL`.
    pub fn new(e0: ComplexVec3, eta_h0: ComplexVec3, kvec: RealVec3) -> Result<Self, WaveError> {
        if !e0.is_finite() || !eta_h0.is_finite() || !kvec.iter().all(|x| x.is_finite()) {
            return Err(WaveError::NonFiniteWave);
        }
        let k = real_norm(kvec);
        if k == 0.0 {
            return Err(WaveError::ZeroWavevector);
        }
        let kc = ComplexVec3::from_real(kvec);
        let amp = e0.norm().max(eta_h0.norm());
        if amp > 0.0 {
            let rt_e = kc.dot(&e0).norm() / (k * amp);
            if rt_e > WAVE_TOL {
                return Err(WaveError::NotTransverse { field: "E", residual: rt_e });
            }
            let rt_h = kc.dot(&eta_h0).norm() / (k * amp);
            if rt_h > WAVE_TOL {
                return Err(WaveError::NotTransverse { field: "etaH", residual: rt_h });
            }
            // k×E0 = k·ηH0 (the common factor i divided out)
            let r = (kc.cross(&e0) - eta_h0.scale(Complex64::new(k, 0.0))).norm() / (k * amp);
            if r > WAVE_TOL {
                return Err(WaveError::NotMaxwellConsistent { residual: r });
            }
        }
        Ok(PlaneWave { e0, eta_h0, kvec })
    }

    pub fn e0(&self) -> &ComplexVec3 {
        &self.e0
    }

    pub fn eta_h0(&self) -> &ComplexVec3 {
        &self.eta_h0
    }

    pub fn kvec(&self) -> RealVec3 {
        self.kvec
    }

    /// |k| of this wave.
    pub fn wavenumber(&self) -> f64 {
        real_norm(self.kvec)
    }

    /// Check |k| against a medium's wavenumber (relative `WAVE_TOL`).
    pub fn check_medium(&self, medium: &Medium) -> Result<(), WaveError> {
        let k = self.wavenumber();
        if (k - medium.k()).abs() > WAVE_TOL * medium.k() {
            return Err(WaveError::WavenumberMismatch { got: k, expected: medium.k() });
        }
        Ok(())
    }

    /// Field pair (E, ηH) at position r: amplitude · e^{i k·r}.
    pub fn evaluate(&self, r: RealVec3) -> (ComplexVec3, ComplexVec3) {
        let phase = self.kvec[0] * r[0] + self.kvec[1] * r[1] + self.kvec[2] * r[2];
        let f = Complex64::from_polar(1.0, phase);
        (self.e0.scale(f), self.eta_h0.scale(f))
    }
}

/// The k-space curl: the matrix M with M·v = i(**k** × v).
pub fn cross_operator_matrix(kvec: RealVec3) -> Result<ComplexMatrix3, WaveError> {
    if real_norm(kvec) == 0.0 {
        return Err(WaveError::ZeroWavevector);
    }
    let i = Complex64::new(0.0, 1.0);
    let z = Complex64::new(0.0, 0.0);
    let (kx, ky, kz) = (kvec[0], kvec[1], kvec[2]);
    Ok(ComplexMatrix3::from_rows([
        [z, -i * kz, i * ky],
        [i * kz, z, -i * kx],
        [-i * ky, i * kx, z],
    ]))
}

/// Shared eigen-path core: transform both amplitudes by
/// (i·k_scale)^{-α} (i·kvec_op×)^α.
///
/// The eigen-sum skips the kernel eigenvalue (the k̂ direction): transverse
/// waves carry no component there, and skipping it keeps the map
/// well-defined for negative α where 0^α diverges.
fn transform(
    pw: &PlaneWave,
    alpha: f64,
    kvec_op: RealVec3,
    k_scale: f64,
) -> Result<PlaneWave, WaveError> {
    let m = cross_operator_matrix(kvec_op)?;
    let sys = m
        .eigendecompose()
        .expect("cross-product operators always have a complete eigenbasis");
    let norm = principal_pow(Complex64::new(0.0, k_scale), -alpha);
    let frac = |v: &ComplexVec3| {
        let g = sys.coefficients(v);
        let mut out = ComplexVec3::ZERO;
        for m in 0..3 {
            let lam = sys.eigenvalues()[m];
            if lam.re == 0.0 && lam.im == 0.0 {
                continue;
            }
            out = out + sys.eigenvectors()[m].scale(g.0[m] * principal_pow(lam, alpha) * norm);
        }
        out
    };
    PlaneWave::new(frac(pw.e0()), frac(pw.eta_h0()), pw.kvec)
}

/// Fractional dual of a plane wave: E_fd = (ik)^{-α} curlᵅ E and likewise
/// for ηH. The wavevector is unchanged; transverse amplitudes rotate by
/// απ/2 about k̂ and keep their norms.
pub fn fractional_curl(pw: &PlaneWave, alpha: f64, medium: &Medium) -> Result<PlaneWave, WaveError> {
    pw.check_medium(medium)?;
    transform(pw, alpha, pw.kvec, medium.k())
}

/// Fractional dual of a plane wave conjugated by a mirror symmetry.
///
/// The curl anticommutes with reflections, so for the mirror image of a
/// wave the construction evaluates with (kvec, k) → (−kvec, −k): the
/// transverse amplitudes rotate by −απ/2 about k̂ and pick up the phase
/// e^{iαπ}. Used for the reflected member of a guided standing-wave pair;
/// coincides with `fractional_curl` at α ∈ {0, 1}.
pub fn fractional_curl_mirrored(
    pw: &PlaneWave,
    alpha: f64,
    medium: &Medium,
) -> Result<PlaneWave, WaveError> {
    pw.check_medium(medium)?;
    let flipped = [-pw.kvec[0], -pw.kvec[1], -pw.kvec[2]];
    transform(pw, alpha, flipped, -medium.k())
}
