//! Winding numbers of planar loops, with density and closure guards.

use crate::error::{Error, Result};
use crate::rings::Polynomial;
use crate::topology::sample::VarietySample;
use crate::topology::trace::eval_row_map;
use crate::topology::{norm, MAX_ANGLE_STEP, ORIGIN_EPS, WINDING_RESIDUAL_TOL};
use crate::unimodular::ElementaryFactorization;

/// Result of a winding number computation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WindingReport {
    /// Number of counterclockwise turns around the origin.
    pub winding: i64,
    /// |accumulated angle - winding * 2*pi|, the float closure defect.
    pub residual: f64,
    /// Smallest distance of any loop point from the origin.
    pub min_norm: f64,
}

/// Winding number of the closed polygonal loop through `points` (the segment
/// from the last point back to the first closes it).
///
/// Guards: every point must stay [`ORIGIN_EPS`] away from the origin, every
/// angular increment must stay under [`MAX_ANGLE_STEP`], and the angle sum
/// must land within [`WINDING_RESIDUAL_TOL`] of an integer number of turns.
pub fn winding_number(points: &[Vec<f64>]) -> Result<WindingReport> {
    if points.is_empty() {
        return Err(Error::DimensionMismatch {
            detail: "winding number of an empty loop".into(),
        });
    }
    let mut min_norm = f64::INFINITY;
    for (index, p) in points.iter().enumerate() {
        if p.len() != 2 {
            return Err(Error::DimensionMismatch {
                detail: format!("loop point of dimension {}, winding needs the plane", p.len()),
            });
        }
        let r = norm(p);
        if r < ORIGIN_EPS {
            return Err(Error::DegenerateLoop { index });
        }
        min_norm = min_norm.min(r);
    }

    let n = points.len();
    let mut total = 0.0;
    for index in 0..n {
        let p = &points[index];
        let q = &points[(index + 1) % n];
        let cross = p[0] * q[1] - p[1] * q[0];
        let dot = p[0] * q[0] + p[1] * q[1];
        let step = cross.atan2(dot);
        if step.abs() >= MAX_ANGLE_STEP {
            return Err(Error::Undersampled { index, step });
        }
        total += step;
    }

    let turns = total / std::f64::consts::TAU;
    let winding = turns.round() as i64;
    let residual = (total - winding as f64 * std::f64::consts::TAU).abs();
    if residual > WINDING_RESIDUAL_TOL {
        return Err(Error::WindingResidual { residual });
    }
    Ok(WindingReport {
        winding,
        residual,
        min_norm,
    })
}

/// Winding number of the planar map induced by a two-entry row along a loop
/// sample.
pub fn winding_of_row_map(row: &[Polynomial], sample: &VarietySample) -> Result<WindingReport> {
    if !sample.is_loop() {
        return Err(Error::IncompatibleGenerator {
            detail: "winding numbers need a closed loop sample".into(),
        });
    }
    if row.len() != 2 {
        return Err(Error::DimensionMismatch {
            detail: format!("winding needs a row of length 2, got {}", row.len()),
        });
    }
    let trace = eval_row_map(row, sample)?;
    winding_number(trace.values())
}

/// Winding numbers of a row map before and after applying an elementary
/// factorization to the row. The two numbers agree for every elementary
/// action dense enough to pass the guards.
pub fn winding_after_factorization(
    row: &[Polynomial],
    factorization: &ElementaryFactorization,
    sample: &VarietySample,
) -> Result<(WindingReport, WindingReport)> {
    let before = winding_of_row_map(row, sample)?;
    let moved = factorization.apply_to_entries(row)?;
    let after = winding_of_row_map(&moved, sample)?;
    Ok((before, after))
}
