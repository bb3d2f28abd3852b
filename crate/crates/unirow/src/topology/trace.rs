//! Evaluating polynomial rows along a sample and comparing the resulting maps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::Polynomial;
use crate::topology::sample::VarietySample;
use crate::topology::{norm, HOMOTOPY_MIN_NORM, ORIGIN_EPS};

/// The image of a sample under a row map, kept alongside the source points.
#[derive(Clone, Debug, PartialEq)]
pub struct MapTrace {
    var_names: Vec<String>,
    points: Vec<Vec<f64>>,
    values: Vec<Vec<f64>>,
    min_norm: f64,
    closed_loop: bool,
}

impl MapTrace {
    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Smallest Euclidean norm among the values (infinity for an empty trace).
    pub fn min_norm(&self) -> f64 {
        self.min_norm
    }

    pub fn is_loop(&self) -> bool {
        self.closed_loop
    }

    pub fn value_dim(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    /// CSV with one line per sample point: source coordinates under their
    /// variable names, then v1..vn for the value, then the value norm.
    pub fn to_csv(&self) -> String {
        let mut header: Vec<String> = self.var_names.clone();
        for k in 1..=self.value_dim() {
            header.push(format!("v{k}"));
        }
        header.push("norm".into());
        let mut out = header.join(",");
        out.push('\n');
        for (p, v) in self.points.iter().zip(&self.values) {
            let fields: Vec<String> = p
                .iter()
                .chain(v.iter())
                .chain(std::iter::once(&norm(v)))
                .map(|x| format!("{x}"))
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_dto(&self) -> TraceDto {
        TraceDto {
            variables: self.var_names.clone(),
            points: self.points.clone(),
            values: self.values.clone(),
            norms: self.values.iter().map(|v| norm(v)).collect(),
            min_norm: self.min_norm,
            closed_loop: self.closed_loop,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dto()).expect("trace serialization cannot fail")
    }
}

/// Serialization mirror of [`MapTrace`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDto {
    pub variables: Vec<String>,
    pub points: Vec<Vec<f64>>,
    pub values: Vec<Vec<f64>>,
    pub norms: Vec<f64>,
    pub min_norm: f64,
    pub closed_loop: bool,
}

/// Report from a straight-line homotopy check between two traces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomotopyReport {
    /// True when no intermediate value came within [`HOMOTOPY_MIN_NORM`] of
    /// the origin.
    pub admissible: bool,
    /// Smallest intermediate norm seen across all points and times.
    pub min_norm: f64,
}

/// Evaluate each entry of `row` at every sample point.
///
/// Every entry must be a polynomial in the sample's ambient variables.
pub fn eval_row_map(row: &[Polynomial], sample: &VarietySample) -> Result<MapTrace> {
    if row.is_empty() {
        return Err(Error::DimensionMismatch {
            detail: "cannot trace an empty row".into(),
        });
    }
    for f in row {
        if f.nvars() != sample.dim() {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "row entry in {} variables over a {}-dimensional sample",
                    f.nvars(),
                    sample.dim()
                ),
            });
        }
    }
    let var_names: Vec<String> = row[0].vars().to_vec();
    let compiled: Vec<_> = row.iter().map(Polynomial::compile).collect();
    let mut values = Vec::with_capacity(sample.len());
    let mut min_norm = f64::INFINITY;
    for p in sample.points() {
        let v: Vec<f64> = compiled.iter().map(|c| c.eval(p)).collect();
        min_norm = min_norm.min(norm(&v));
        values.push(v);
    }
    Ok(MapTrace {
        var_names,
        points: sample.points().to_vec(),
        values,
        min_norm,
        closed_loop: sample.is_loop(),
    })
}

/// Radially project every value onto the unit sphere.
///
/// Fails when some value is within [`ORIGIN_EPS`] of the origin, where the
/// projection is undefined.
pub fn normalize_to_sphere(trace: &MapTrace) -> Result<MapTrace> {
    let mut values = Vec::with_capacity(trace.values.len());
    for v in &trace.values {
        let n = norm(v);
        if n < ORIGIN_EPS {
            return Err(Error::CannotNormalize);
        }
        values.push(v.iter().map(|x| x / n).collect());
    }
    Ok(MapTrace {
        var_names: trace.var_names.clone(),
        points: trace.points.clone(),
        values,
        min_norm: if trace.values.is_empty() {
            f64::INFINITY
        } else {
            1.0
        },
        closed_loop: trace.closed_loop,
    })
}

/// Check whether the straight-line homotopy h_t = (1-t) f + t g avoids the
/// origin, sampling t at `steps + 1` equally spaced times.
///
/// The traces must share their source points. Returns the admissibility
/// verdict together with the smallest intermediate norm observed; antipodal
/// maps (g = -f) fail at t = 1/2 where the line crosses the origin.
pub fn straight_line_homotopy_check(
    f: &MapTrace,
    g: &MapTrace,
    steps: usize,
) -> Result<HomotopyReport> {
    if steps == 0 {
        return Err(Error::DimensionMismatch {
            detail: "homotopy check needs at least one step".into(),
        });
    }
    if f.points != g.points {
        return Err(Error::ContextMismatch {
            detail: "homotopy endpoints trace different sample points".into(),
        });
    }
    if f.value_dim() != g.value_dim() {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "values of dimension {} and {}",
                f.value_dim(),
                g.value_dim()
            ),
        });
    }
    let mut min_norm = f64::INFINITY;
    for (a, b) in f.values.iter().zip(&g.values) {
        for s in 0..=steps {
            let t = s as f64 / steps as f64;
            let h: Vec<f64> = a.iter().zip(b).map(|(x, y)| (1.0 - t) * x + t * y).collect();
            min_norm = min_norm.min(norm(&h));
        }
    }
    Ok(HomotopyReport {
        admissible: min_norm >= HOMOTOPY_MIN_NORM,
        min_norm,
    })
}

/// Convenience: the straight-line check between `f` and `-f` must fail, and
/// the midpoint norm it reports is essentially zero.
pub fn antipodal_obstruction(f: &MapTrace, steps: usize) -> Result<HomotopyReport> {
    let neg = MapTrace {
        var_names: f.var_names.clone(),
        points: f.points.clone(),
        values: f
            .values
            .iter()
            .map(|v| v.iter().map(|x| -x).collect())
            .collect(),
        min_norm: f.min_norm,
        closed_loop: f.closed_loop,
    };
    straight_line_homotopy_check(f, &neg, steps)
}
