//! Floating-point companion to the exact algebra: sampling real varieties,
//! tracing row-induced maps, sphere geometry, and winding numbers.
//!
//! All tolerances are fixed here so results are reproducible bit for bit.

mod geometry;
mod sample;
mod trace;
mod winding;

pub use geometry::{mat_vec, reflection, reflection_matrix, rotation_between, vaserstein_midpoint};
pub use sample::{sample_variety, SampleGenerator, VarietySample};
pub use trace::{
    antipodal_obstruction, eval_row_map, normalize_to_sphere, straight_line_homotopy_check,
    HomotopyReport, MapTrace, TraceDto,
};
pub use winding::{winding_after_factorization, winding_of_row_map, winding_number, WindingReport};

/// Maximum |modulus(point)| for a point to count as on the variety.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// A homotopy stays admissible while every intermediate value norm is at
/// least this.
pub const HOMOTOPY_MIN_NORM: f64 = 1e-9;

/// Vectors shorter than this are treated as the origin.
pub const ORIGIN_EPS: f64 = 1e-12;

/// Tolerance for |norm - 1| when a unit vector is required.
pub const UNIT_TOL: f64 = 1e-9;

/// Angular increments must stay strictly below this (a quarter turn), or the
/// loop is declared undersampled.
pub const MAX_ANGLE_STEP: f64 = std::f64::consts::FRAC_PI_2;

/// The accumulated angle of a closed loop must land within this of an
/// integer number of turns.
pub const WINDING_RESIDUAL_TOL: f64 = 1e-6;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}
