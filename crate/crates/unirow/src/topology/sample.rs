//! Point samples on the real variety cut out by a quotient modulus.

use crate::error::{Error, Result};
use crate::rings::RingContext;

/// Recipe for producing sample points in the ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleGenerator {
    /// Equally spaced points on the unit circle, traversed counterclockwise.
    /// Needs two ambient variables.
    Circle { samples: usize },
    /// Latitude-longitude grid on the unit two-sphere. Each pole appears
    /// once; every interior band carries a full circle of `samples` points.
    /// Needs three ambient variables.
    Sphere { bands: usize, samples: usize },
    /// Caller-supplied points, checked against the modulus if there is one.
    Explicit(Vec<Vec<f64>>),
}

/// A validated batch of points on (or near) the variety.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietySample {
    dim: usize,
    points: Vec<Vec<f64>>,
    closed_loop: bool,
}

impl VarietySample {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// True when consecutive points (with wraparound) trace a closed loop.
    pub fn is_loop(&self) -> bool {
        self.closed_loop
    }
}

/// Build a sample for the variety of `ctx` and check membership of every
/// point to within `tol` (callers usually pass the crate-level
/// `MEMBERSHIP_TOL`).
///
/// `Circle` and `Sphere` require a quotient context whose variable count
/// matches the ambient dimension; the generated points must actually satisfy
/// the modulus, so a circle generator against a non-circle modulus fails the
/// membership check rather than being silently accepted.
pub fn sample_variety(
    ctx: &RingContext,
    generator: &SampleGenerator,
    tol: f64,
) -> Result<VarietySample> {
    let nvars = ctx.nvars();
    let (points, dim, closed_loop) = match generator {
        SampleGenerator::Circle { samples } => {
            if ctx.modulus().is_none() || nvars != 2 {
                return Err(Error::IncompatibleGenerator {
                    detail: "circle sampling needs a quotient ring in two variables".into(),
                });
            }
            if *samples < 3 {
                return Err(Error::IncompatibleGenerator {
                    detail: "circle sampling needs at least 3 points".into(),
                });
            }
            let n = *samples;
            let mut pts = Vec::with_capacity(n);
            for k in 0..n {
                let theta = std::f64::consts::TAU * k as f64 / n as f64;
                pts.push(vec![theta.cos(), theta.sin()]);
            }
            (pts, 2, true)
        }
        SampleGenerator::Sphere { bands, samples } => {
            if ctx.modulus().is_none() || nvars != 3 {
                return Err(Error::IncompatibleGenerator {
                    detail: "sphere sampling needs a quotient ring in three variables".into(),
                });
            }
            if *bands < 2 || *samples < 3 {
                return Err(Error::IncompatibleGenerator {
                    detail: "sphere sampling needs at least 2 bands and 3 points per band".into(),
                });
            }
            let mut pts = Vec::new();
            for i in 0..=*bands {
                let phi = std::f64::consts::PI * i as f64 / *bands as f64;
                if i == 0 {
                    pts.push(vec![0.0, 0.0, 1.0]);
                } else if i == *bands {
                    pts.push(vec![0.0, 0.0, -1.0]);
                } else {
                    for j in 0..*samples {
                        let theta = std::f64::consts::TAU * j as f64 / *samples as f64;
                        pts.push(vec![
                            phi.sin() * theta.cos(),
                            phi.sin() * theta.sin(),
                            phi.cos(),
                        ]);
                    }
                }
            }
            (pts, 3, false)
        }
        SampleGenerator::Explicit(pts) => {
            if nvars == 0 {
                return Err(Error::IncompatibleGenerator {
                    detail: "a constant ring has no ambient space to sample".into(),
                });
            }
            for p in pts {
                if p.len() != nvars {
                    return Err(Error::DimensionMismatch {
                        detail: format!("point of length {} in a {nvars}-variable ring", p.len()),
                    });
                }
            }
            (pts.clone(), nvars, false)
        }
    };

    if let Some(modulus) = ctx.modulus() {
        let compiled = modulus.compile();
        for p in &points {
            let value = compiled.eval(p);
            if value.abs() > tol {
                return Err(Error::MembershipViolation {
                    point: format!("{p:?}"),
                    value,
                });
            }
        }
    }

    Ok(VarietySample {
        dim,
        points,
        closed_loop,
    })
}
