//! Benchmark-only crate; see `benches/ops.rs`.
//!
//! Shared fixtures for the benchmarks live here so the bench target stays
//! a thin criterion harness.

use fraccurl::{GuideConfig, Medium};
use num_complex::Complex64;
use std::f64::consts::PI;

/// The reference configuration used throughout the benchmarks: bounce
/// angle π/6, n = 1, k = 1, η = 1, unit amplitudes.
pub fn reference_guide() -> GuideConfig {
    GuideConfig::from_angle(
        PI / 6.0,
        1,
        Medium::new(1.0, 1.0).unwrap(),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
    )
    .expect("reference configuration is propagating")
}
