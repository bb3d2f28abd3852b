//! Completion of `(a^2, b, c)` from a witnessed row `(a, b, c)` through the
//! skew pairing form and two unitriangular correctors.

use super::certificate::{CompletionCertificate, Provenance};
use super::skew::skew_matrix;
use super::{witness_residual, ElementaryFactorization, UnimodularRow};
use crate::error::{Error, Result};
use crate::matrices::RingMatrix;
use crate::rings::{Polynomial, RingContext};

/// The product `L * U * V(first, second)` where `L` stacks `first` under a
/// leading 1, `U` spreads `-second` across the top row, and `V` is the skew
/// pairing matrix of the two triples.
///
/// When `first . second = 1`, the result has first row `(1, first)` and
/// first column `e1`, so its lower 3x3 block is square completion material.
pub fn swan_product(
    ctx: &RingContext,
    first: &[Polynomial],
    second: &[Polynomial],
) -> Result<RingMatrix> {
    let alpha = skew_matrix(ctx, first, second)?;
    let one = ctx.one();
    let z = ctx.zero();
    let lower = RingMatrix::from_rows(
        ctx.clone(),
        vec![
            vec![one.clone(), z.clone(), z.clone(), z.clone()],
            vec![first[0].clone(), one.clone(), z.clone(), z.clone()],
            vec![first[1].clone(), z.clone(), one.clone(), z.clone()],
            vec![first[2].clone(), z.clone(), z.clone(), one.clone()],
        ],
    )?;
    let upper = RingMatrix::from_rows(
        ctx.clone(),
        vec![
            vec![one.clone(), second[0].neg(), second[1].neg(), second[2].neg()],
            vec![z.clone(), one.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), one.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), one],
        ],
    )?;
    lower.mul(&upper)?.mul(&alpha)
}

/// Complete `(a^2, b, c)` to a determinant-one 3x3 matrix, given a witness
/// `(a', b', c')` for the row `(a, b, c)`.
///
/// The completion is cut out of the 4x4 product for a substituted pair of
/// triples whose pairing is again `a a' + b b' + c c'`, and it comes with the
/// explicit witness `(a'^2, b'(1 + a a'), c'(1 + a a'))`.
pub fn swan_complete(
    ctx: &RingContext,
    row: &[Polynomial],
    witness: &[Polynomial],
) -> Result<CompletionCertificate> {
    if row.len() != 3 || witness.len() != 3 {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "need a length-3 row and witness, got {} and {}",
                row.len(),
                witness.len()
            ),
        });
    }
    for f in row.iter().chain(witness) {
        ctx.check_element(f)?;
    }
    let residual = witness_residual(ctx, row, witness)?;
    if !residual.is_zero() {
        return Err(Error::NotUnimodular { residual: residual.to_string() });
    }
    let (a, b, c) = (&row[0], &row[1], &row[2]);
    let (ap, bp, cp) = (&witness[0], &witness[1], &witness[2]);
    // Substituted triples with the same pairing value.
    let first = vec![a.clone(), bp.neg(), cp.clone()];
    let second = vec![
        ap.clone(),
        ctx.sub(&ctx.mul(a, cp)?, b)?,
        ctx.add(c, &ctx.mul(a, bp)?)?,
    ];
    let sigma = swan_product(ctx, &first, &second)?;
    for k in 0..4 {
        let lead = sigma.entry(k, 0);
        assert!(
            if k == 0 { lead.is_one() } else { lead.is_zero() },
            "product must have first column e1"
        );
    }
    // Lower 3x3 block with columns 2,3 then rows 2,3 exchanged.
    let block = |i: usize, j: usize| sigma.entry(i + 1, j + 1).clone();
    let m = RingMatrix::from_rows(
        ctx.clone(),
        vec![
            vec![block(0, 0), block(0, 2), block(0, 1)],
            vec![block(2, 0), block(2, 2), block(2, 1)],
            vec![block(1, 0), block(1, 2), block(1, 1)],
        ],
    )?;
    let one_plus = ctx.add(&ctx.one(), &ctx.mul(a, ap)?)?;
    let squared_row = UnimodularRow::new(
        ctx.clone(),
        vec![ctx.mul(a, a)?, b.clone(), c.clone()],
        vec![
            ctx.mul(ap, ap)?,
            ctx.mul(bp, &one_plus)?,
            ctx.mul(cp, &one_plus)?,
        ],
    )?;
    CompletionCertificate::new(
        squared_row,
        ElementaryFactorization::empty(ctx.clone(), 3)?,
        m,
        Provenance::Swan,
    )
}
