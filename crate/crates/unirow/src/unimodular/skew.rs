//! Skew-symmetric 4x4 forms attached to length-3 rows, their covariance
//! under elementary changes of the row, and the quaternionic model.

use super::{witness_residual, ElementaryFactorization};
use crate::error::{Error, Result};
use crate::matrices::RingMatrix;
use crate::rings::{Polynomial, RingContext};

fn expect_len(v: &[Polynomial], n: usize, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            detail: format!("{what} must have length {n}, got {}", v.len()),
        });
    }
    Ok(())
}

/// The skew 4x4 pairing matrix of two length-3 vectors, with no condition on
/// them. Its determinant is the square of their dot product.
pub fn skew_matrix(ctx: &RingContext, a: &[Polynomial], b: &[Polynomial]) -> Result<RingMatrix> {
    expect_len(a, 3, "row")?;
    expect_len(b, 3, "pairing vector")?;
    let z = ctx.zero();
    let rows = vec![
        vec![z.clone(), a[0].clone(), a[1].clone(), a[2].clone()],
        vec![a[0].neg(), z.clone(), b[2].clone(), b[1].neg()],
        vec![a[1].neg(), b[2].neg(), z.clone(), b[0].clone()],
        vec![a[2].neg(), b[1].clone(), b[0].neg(), z],
    ];
    RingMatrix::from_rows(ctx.clone(), rows)
}

/// The pairing matrix of a row and a verified witness; determinant one by
/// construction.
pub fn skew_form(ctx: &RingContext, a: &[Polynomial], b: &[Polynomial]) -> Result<RingMatrix> {
    expect_len(a, 3, "row")?;
    expect_len(b, 3, "witness")?;
    let residual = witness_residual(ctx, a, b)?;
    if !residual.is_zero() {
        return Err(Error::NotUnimodular { residual: residual.to_string() });
    }
    let v = skew_matrix(ctx, a, b)?;
    debug_assert!(v.is_skew_symmetric());
    Ok(v)
}

/// Conjugate a skew 4x4 form by `diag(1, T)` where `T` is the product of a
/// size-3 elementary factorization: `V -> B^t V B`.
///
/// When the form was built from a row and witness, the result is the form of
/// the sheared row `a*T` and the transported witness `b*(T^-1)^t`, so
/// skew-symmetry and the determinant survive exactly.
pub fn conjugate_skew(v: &RingMatrix, tau: &ElementaryFactorization) -> Result<RingMatrix> {
    if v.rows() != 4 || v.cols() != 4 {
        return Err(Error::DimensionMismatch {
            detail: format!("expected a 4x4 form, got {}x{}", v.rows(), v.cols()),
        });
    }
    if !v.is_skew_symmetric() {
        return Err(Error::DimensionMismatch {
            detail: "form is not skew-symmetric".into(),
        });
    }
    if tau.n() != 3 {
        return Err(Error::DimensionMismatch {
            detail: format!("expected a size-3 factorization, got {}", tau.n()),
        });
    }
    let ctx = v.ctx();
    if tau.ctx() != ctx {
        return Err(Error::ContextMismatch {
            detail: format!("form over '{ctx}', factorization over '{}'", tau.ctx()),
        });
    }
    let t = tau.product_matrix()?;
    let mut rows = vec![vec![ctx.zero(); 4]; 4];
    rows[0][0] = ctx.one();
    for i in 0..3 {
        for j in 0..3 {
            rows[i + 1][j + 1] = t.entry(i, j).clone();
        }
    }
    let beta = RingMatrix::from_rows(ctx.clone(), rows)?;
    beta.transpose().mul(v)?.mul(&beta)
}

/// Left multiplication by the quaternion `x1 + x2 i + x3 j + x4 k` on the
/// standard basis `1, i, j, k`. Pure quaternions give skew matrices, and the
/// determinant is the squared norm, squared.
pub fn quaternion_left_matrix(ctx: &RingContext, x: &[Polynomial]) -> Result<RingMatrix> {
    expect_len(x, 4, "quaternion")?;
    let rows = vec![
        vec![x[0].clone(), x[1].neg(), x[2].neg(), x[3].neg()],
        vec![x[1].clone(), x[0].clone(), x[3].neg(), x[2].clone()],
        vec![x[2].clone(), x[3].clone(), x[0].clone(), x[1].neg()],
        vec![x[3].clone(), x[2].neg(), x[1].clone(), x[0].clone()],
    ];
    RingMatrix::from_rows(ctx.clone(), rows)
}
