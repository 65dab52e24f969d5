//! Parallel-plate waveguide modes and their fractional dual fields.
//!
//! Plates at y = 0 and y = b, propagation along +z with z-dependence
//! e^{iβz}, transverse wavenumber h = nπ/b, and k² = h² + β². Two canonical
//! single-mode solutions are superposed to model a DB boundary (normal D
//! and B vanish at the walls): the TEᶻ mode of a PEC guide and the TMᶻ
//! mode of a PMC guide. Each canonical solution splits into two plane
//! waves bouncing between the plates; applying the fractional duality
//! transform to the pair (the reflected wave through the mirror-conjugated
//! operator) produces the closed-form fractional fields evaluated here.

use crate::planewave::{
    fractional_curl, fractional_curl_mirrored, Medium, PlaneWave, WaveError,
};
use crate::vec3::ComplexVec3;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GuideError {
    #[error("guide parameter {name} is invalid: {value}")]
    InvalidParameter { name: &'static str, value: f64 },
    #[error("mode is evanescent: h = {h} ≥ k = {k}; only propagating modes are modeled")]
    EvanescentMode { h: f64, k: f64 },
}

/// Which canonical mode family of the guide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeKind {
    /// Transverse electric mode against PEC walls.
    Te,
    /// Transverse magnetic mode against PMC walls.
    Tm,
}

/// The field pair (E, ηH) at a cross-section point (y, z); x is carried
/// along as 0 since nothing depends on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub e: ComplexVec3,
    pub eta_h: ComplexVec3,
    pub point: (f64, f64),
}

/// A validated single-mode guide configuration. Construction derives and
/// caches h = nπ/b and β = √(k² − h²) > 0; evanescent combinations are
/// rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuideConfig {
    b: f64,
    n: u32,
    medium: Medium,
    amp_te: Complex64,
    amp_tm: Complex64,
    h: f64,
    beta: f64,
}

impl GuideConfig {
    pub fn new(
        b: f64,
        n: u32,
        medium: Medium,
        amp_te: Complex64,
        amp_tm: Complex64,
    ) -> Result<Self, GuideError> {
        if !(b > 0.0 && b.is_finite()) {
            return Err(GuideError::InvalidParameter { name: "b", value: b });
        }
        if n == 0 {
            return Err(GuideError::InvalidParameter { name: "n", value: 0.0 });
        }
        if !(amp_te.re.is_finite() && amp_te.im.is_finite()) {
            return Err(GuideError::InvalidParameter { name: "amp_te", value: f64::NAN });
        }
        if !(amp_tm.re.is_finite() && amp_tm.im.is_finite()) {
            return Err(GuideError::InvalidParameter { name: "amp_tm", value: f64::NAN });
        }
        let h = n as f64 * PI / b;
        let k = medium.k();
        if h >= k {
            return Err(GuideError::EvanescentMode { h, k });
        }
        let beta = (k * k - h * h).sqrt();
        Ok(GuideConfig { b, n, medium, amp_te, amp_tm, h, beta })
    }

    /// Angle-first construction: the mode's plane waves travel at angle
    /// `theta` to the guide axis, so h = k·sinθ and β = k·cosθ, and the
    /// plate separation follows as b = nπ/h.
    pub fn from_angle(
        theta: f64,
        n: u32,
        medium: Medium,
        amp_te: Complex64,
        amp_tm: Complex64,
    ) -> Result<Self, GuideError> {
        if !(theta > 0.0 && theta < FRAC_PI_2) {
            return Err(GuideError::InvalidParameter { name: "angle", value: theta });
        }
        let h = medium.k() * theta.sin();
        let b = n as f64 * PI / h;
        Self::new(b, n, medium, amp_te, amp_tm)
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn medium(&self) -> &Medium {
        &self.medium
    }

    pub fn amp_te(&self) -> Complex64 {
        self.amp_te
    }

    pub fn amp_tm(&self) -> Complex64 {
        self.amp_tm
    }

    /// Transverse and axial wavenumbers (h, β).
    pub fn mode_params(&self) -> (f64, f64) {
        (self.h, self.beta)
    }

    /// Guided wavelength 2π/β.
    pub fn guided_wavelength(&self) -> f64 {
        2.0 * PI / self.beta
    }

    /// TEᶻ mode of a PEC guide: Eₓ ∝ sin(hy), ηH in the yz-plane, and the
    /// tangential electric field vanishes at both walls.
    pub fn te_pec_canonical(&self, point: (f64, f64)) -> FieldSample {
        let (y, z) = point;
        let i = Complex64::i();
        let kh = self.medium.k() / self.h;
        let bh = self.beta / self.h;
        let phase = Complex64::from_polar(1.0, self.beta * z);
        let sin_hy = (self.h * y).sin();
        let cos_hy = (self.h * y).cos();
        let e = ComplexVec3::new(
            -i * kh * self.amp_te * sin_hy * phase,
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        let eta_h = ComplexVec3::new(
            Complex64::new(0.0, 0.0),
            -i * bh * self.amp_te * sin_hy * phase,
            self.amp_te * cos_hy * phase,
        );
        FieldSample { e, eta_h, point }
    }

    /// TMᶻ mode of a PMC guide: the dual of the TE-PEC solution, with
    /// tangential ηH vanishing at both walls.
    pub fn tm_pmc_canonical(&self, point: (f64, f64)) -> FieldSample {
        let (y, z) = point;
        let i = Complex64::i();
        let kh = self.medium.k() / self.h;
        let bk = self.beta / self.medium.k();
        let hk = self.h / self.medium.k();
        let phase = Complex64::from_polar(1.0, self.beta * z);
        let sin_hy = (self.h * y).sin();
        let cos_hy = (self.h * y).cos();
        let e = ComplexVec3::new(
            Complex64::new(0.0, 0.0),
            -i * bk * kh * self.amp_tm * sin_hy * phase,
            Complex64::new(hk * kh, 0.0) * self.amp_tm * cos_hy * phase,
        );
        let eta_h = ComplexVec3::new(
            i * kh * self.amp_tm * sin_hy * phase,
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        FieldSample { e, eta_h, point }
    }

    /// Split a canonical mode into its two constituent plane waves with
    /// wavevectors (0, ∓h, β); their pointwise sum reproduces the
    /// canonical fields.
    pub fn planewave_decomposition(&self, mode: ModeKind) -> (PlaneWave, PlaneWave) {
        let kh = self.medium.k() / self.h;
        let bh = self.beta / self.h;
        let down = [0.0, -self.h, self.beta];
        let up = [0.0, self.h, self.beta];
        let (e1, h1, e2, h2) = match mode {
            ModeKind::Te => {
                let half = self.amp_te * 0.5;
                (
                    ComplexVec3::new(half * kh, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
                    ComplexVec3::new(Complex64::new(0.0, 0.0), half * bh, half),
                    ComplexVec3::new(-half * kh, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
                    ComplexVec3::new(Complex64::new(0.0, 0.0), -half * bh, half),
                )
            }
            // dual construction: (E, ηH) → (ηH, −E) with the TM amplitude
            ModeKind::Tm => {
                let half = self.amp_tm * 0.5;
                (
                    ComplexVec3::new(Complex64::new(0.0, 0.0), half * bh, half),
                    ComplexVec3::new(-half * kh, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
                    ComplexVec3::new(Complex64::new(0.0, 0.0), -half * bh, half),
                    ComplexVec3::new(half * kh, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
                )
            }
        };
        let w1 = PlaneWave::new(e1, h1, down).expect("decomposed wave 1 satisfies the invariants");
        let w2 = PlaneWave::new(e2, h2, up).expect("decomposed wave 2 satisfies the invariants");
        (w1, w2)
    }

    /// Fractional dual of the decomposed pair: the wave heading into the
    /// y = 0 wall transforms by the fractional curl, its reflection by the
    /// mirror-conjugated fractional curl.
    pub fn fractional_dual_waves(
        &self,
        mode: ModeKind,
        alpha: f64,
    ) -> Result<(PlaneWave, PlaneWave), WaveError> {
        let (w1, w2) = self.planewave_decomposition(mode);
        let f1 = fractional_curl(&w1, alpha, &self.medium)?;
        let f2 = fractional_curl_mirrored(&w2, alpha, &self.medium)?;
        Ok((f1, f2))
    }

    /// Plane-wave route to the fractional fields of one mode family:
    /// transform the pair, then sum the waves at the point.
    pub fn mode_planewave_path(
        &self,
        mode: ModeKind,
        alpha: f64,
        point: (f64, f64),
    ) -> Result<FieldSample, WaveError> {
        let (w1, w2) = self.fractional_dual_waves(mode, alpha)?;
        let r = [0.0, point.0, point.1];
        let (e1, h1) = w1.evaluate(r);
        let (e2, h2) = w2.evaluate(r);
        Ok(FieldSample { e: e1 + e2, eta_h: h1 + h2, point })
    }

    /// Plane-wave route to the DB fields: TE and TM families summed.
    pub fn db_planewave_path(
        &self,
        alpha: f64,
        point: (f64, f64),
    ) -> Result<FieldSample, WaveError> {
        let te = self.mode_planewave_path(ModeKind::Te, alpha, point)?;
        let tm = self.mode_planewave_path(ModeKind::Tm, alpha, point)?;
        Ok(FieldSample { e: te.e + tm.e, eta_h: te.eta_h + tm.eta_h, point })
    }

    /// Closed-form fractional dual of the TE-PEC mode.
    pub fn te_pec_fractional(&self, alpha: f64, point: (f64, f64)) -> FieldSample {
        let (y, z) = point;
        let t = Trig::at(self, alpha, y);
        let i = Complex64::i();
        let kh = self.medium.k() / self.h;
        let phase = Complex64::from_polar(1.0, self.beta * z + alpha * FRAC_PI_2);
        let c = self.amp_te * kh * phase;
        let e = ComplexVec3::new(
            -i * t.ca * t.sya * c,
            Complex64::new(t.bk * t.sa * t.cya, 0.0) * c,
            -i * t.hk * t.sa * t.sya * c,
        );
        let eta_h = ComplexVec3::new(
            Complex64::new(-t.sa * t.cya, 0.0) * c,
            -i * t.bk * t.ca * t.sya * c,
            Complex64::new(t.hk * t.ca * t.cya, 0.0) * c,
        );
        FieldSample { e, eta_h, point }
    }

    /// Closed-form fractional dual of the TM-PMC mode.
    pub fn tm_pmc_fractional(&self, alpha: f64, point: (f64, f64)) -> FieldSample {
        let (y, z) = point;
        let t = Trig::at(self, alpha, y);
        let i = Complex64::i();
        let kh = self.medium.k() / self.h;
        let phase = Complex64::from_polar(1.0, self.beta * z + alpha * FRAC_PI_2);
        let a = self.amp_tm * kh * phase;
        let e = ComplexVec3::new(
            Complex64::new(-t.sa * t.cya, 0.0) * a,
            -i * t.bk * t.ca * t.sya * a,
            Complex64::new(t.hk * t.ca * t.cya, 0.0) * a,
        );
        let eta_h = ComplexVec3::new(
            i * t.ca * t.sya * a,
            Complex64::new(-t.bk * t.sa * t.cya, 0.0) * a,
            i * t.hk * t.sa * t.sya * a,
        );
        FieldSample { e, eta_h, point }
    }

    /// Closed-form fractional dual fields of the DB guide: the combined
    /// form of the TE-PEC and TM-PMC fractional solutions.
    pub fn db_fractional(&self, alpha: f64, point: (f64, f64)) -> FieldSample {
        let (y, z) = point;
        let t = Trig::at(self, alpha, y);
        let i = Complex64::i();
        let kh = self.medium.k() / self.h;
        let phase = Complex64::from_polar(1.0, self.beta * z + alpha * FRAC_PI_2);
        let s = Complex64::new(kh, 0.0) * phase;
        let a = self.amp_tm;
        let c = self.amp_te;
        let sa_cya = Complex64::new(t.sa * t.cya, 0.0);
        let ca_sya = Complex64::new(t.ca * t.sya, 0.0);
        let ca_cya = Complex64::new(t.ca * t.cya, 0.0);
        let sa_sya = Complex64::new(t.sa * t.sya, 0.0);
        let e = ComplexVec3::new(
            -(a * sa_cya + i * c * ca_sya) * s,
            (c * sa_cya - i * a * ca_sya) * t.bk * s,
            (a * ca_cya - i * c * sa_sya) * t.hk * s,
        );
        let eta_h = ComplexVec3::new(
            -(c * sa_cya - i * a * ca_sya) * s,
            -(a * sa_cya + i * c * ca_sya) * t.bk * s,
            (c * ca_cya + i * a * sa_sya) * t.hk * s,
        );
        FieldSample { e, eta_h, point }
    }
}

/// The four trig factors shared by the closed forms.
struct Trig {
    sa: f64,
    ca: f64,
    sya: f64,
    cya: f64,
    bk: f64,
    hk: f64,
}

impl Trig {
    fn at(cfg: &GuideConfig, alpha: f64, y: f64) -> Trig {
        let half = alpha * FRAC_PI_2;
        let arg = cfg.h * y + half;
        Trig {
            sa: half.sin(),
            ca: half.cos(),
            sya: arg.sin(),
            cya: arg.cos(),
            bk: cfg.beta / cfg.medium.k(),
            hk: cfg.h / cfg.medium.k(),
        }
    }
}
