//! Reflections, the orthogonal map between two sphere points, and the
//! rational midpoint witness shared by two unit vectors.

use crate::error::{Error, Result};
use crate::topology::{dot, norm, ORIGIN_EPS, UNIT_TOL};

fn require_same_dim(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            detail: format!("vectors of length {} and {}", a.len(), b.len()),
        });
    }
    Ok(())
}

fn require_unit(v: &[f64]) -> Result<()> {
    let n = norm(v);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnitVector { norm: n });
    }
    Ok(())
}

/// Reflect `v` across the hyperplane orthogonal to `w`.
pub fn reflection(w: &[f64], v: &[f64]) -> Result<Vec<f64>> {
    require_same_dim(w, v)?;
    let ww = dot(w, w);
    if ww < ORIGIN_EPS * ORIGIN_EPS {
        return Err(Error::ZeroReflectionVector);
    }
    let scale = 2.0 * dot(v, w) / ww;
    Ok(v.iter().zip(w).map(|(x, y)| x - scale * y).collect())
}

/// Matrix of [`reflection`]: I - 2 w wᵀ / ⟨w, w⟩.
pub fn reflection_matrix(w: &[f64]) -> Result<Vec<Vec<f64>>> {
    let ww = dot(w, w);
    if ww < ORIGIN_EPS * ORIGIN_EPS {
        return Err(Error::ZeroReflectionVector);
    }
    let n = w.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = if i == j { 1.0 } else { 0.0 } - 2.0 * w[i] * w[j] / ww;
        }
    }
    Ok(m)
}

/// Orthogonal matrix sending the unit vector `v0` to the unit vector `v1`:
/// the negated reflection across the hyperplane orthogonal to w = v0 + v1,
/// with entries 2 wᵢ wⱼ / ⟨w, w⟩ - δᵢⱼ.
///
/// Antipodal inputs leave w at the origin and are rejected; its determinant
/// is (-1)^(n+1), a genuine rotation exactly in odd ambient dimension.
pub fn rotation_between(v0: &[f64], v1: &[f64]) -> Result<Vec<Vec<f64>>> {
    require_same_dim(v0, v1)?;
    require_unit(v0)?;
    require_unit(v1)?;
    let w: Vec<f64> = v0.iter().zip(v1).map(|(a, b)| a + b).collect();
    let ww = dot(&w, &w);
    if ww < ORIGIN_EPS {
        return Err(Error::Antipodal);
    }
    let n = w.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = 2.0 * w[i] * w[j] / ww - if i == j { 1.0 } else { 0.0 };
        }
    }
    Ok(m)
}

/// The vector (v0 + v1) / (1 + ⟨v0, v1⟩), which pairs to 1 with both unit
/// vectors at once and so serves as a shared completion witness.
pub fn vaserstein_midpoint(v0: &[f64], v1: &[f64]) -> Result<Vec<f64>> {
    require_same_dim(v0, v1)?;
    require_unit(v0)?;
    require_unit(v1)?;
    let denom = 1.0 + dot(v0, v1);
    if denom.abs() < ORIGIN_EPS {
        return Err(Error::Antipodal);
    }
    Ok(v0.iter().zip(v1).map(|(a, b)| (a + b) / denom).collect())
}

/// Apply a dense matrix to a vector; a convenience for working with the
/// matrices produced in this module.
pub fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, v)).collect()
}
