//! Fractional curl operator and fractional-dual electromagnetics.
//!
//! The library fractionalizes diagonalizable linear operators on C³ by the
//! eigendecomposition recipe (keep the eigenvectors, raise the eigenvalues
//! to the power α on the principal branch) and applies it to the k-space
//! curl i**k**× of source-free plane waves. The resulting fractional dual
//! fields interpolate continuously between a Maxwell solution (α = 0) and
//! its electromagnetic dual E → ηH, ηH → −E (α = 1).
//!
//! On top of that sit the guided-wave pieces: the propagating modes of a
//! parallel-plate waveguide with DB walls (normal D and B vanishing),
//! obtained by superposing a TE mode against PEC plates with a TM mode
//! against PMC plates; the transverse wall impedances of the fractional
//! guide; and sampling/verification tools — α-sweeps, field-line tracing,
//! finite-difference curl residuals, and wall-condition residuals.
//!
//! Modules:
//! - [`vec3`]: complex 3-vectors.
//! - [`linop`]: eigendecomposition and fractional powers on C³.
//! - [`planewave`]: media, plane waves, fractional curl.
//! - [`guide`]: parallel-plate waveguide fields, canonical and fractional.
//! - [`impedance`]: transverse wall impedances.
//! - [`diagnostics`]: grids, sweeps, field lines, residual oracles.

pub mod diagnostics;
pub mod guide;
pub mod impedance;
pub mod linop;
pub mod planewave;
pub mod vec3;

pub use diagnostics::{
    alpha_sweep, boundary_residual, default_seeds, field_grid, maxwell_residual,
    reference_field_max, trace_fieldlines, DiagnosticsError, FieldComponent, FieldLine,
    SampleGrid, StopReason, SweepRow,
};
pub use guide::{FieldSample, GuideConfig, GuideError, ModeKind};
pub use impedance::{
    wall_impedance_matrix, wave_impedance, wave_impedance_from_fields, ImpedancePair,
    ImpedanceValue,
};
pub use linop::{principal_pow, ComplexMatrix3, EigenSystem, LinOpError};
pub use planewave::{
    cross_operator_matrix, fractional_curl, fractional_curl_mirrored, Medium, PlaneWave,
    WaveError,
};
pub use vec3::{ComplexVec3, RealVec3};
