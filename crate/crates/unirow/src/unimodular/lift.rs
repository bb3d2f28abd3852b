//! Lifting elementary factorizations from quotient rings back to their
//! covering rings, and transporting rows along the lift.
//!
//! Shears lift through canonical representatives: the division normal form
//! for polynomial quotients, the least non-negative residue for the integers
//! modulo `m`. Because shears need no inverses, any factorization downstairs
//! lifts to one upstairs that reduces back to it on the nose.

use num_bigint::BigInt;
use num_traits::{Euclid, Signed, Zero};

use super::{ElementaryFactorization, UnimodularRow};
use crate::error::{Error, Result};
use crate::matrices::ElementaryOp;
use crate::rings::{Polynomial, Rational, RingContext};

/// Lift a factorization over `Q[vars]/(g)` to `Q[vars]` by reading each
/// stored normal form as an honest polynomial.
pub fn lift_factorization(
    fbar: &ElementaryFactorization,
    target: &RingContext,
) -> Result<ElementaryFactorization> {
    let RingContext::PrincipalQuotient { vars, .. } = fbar.ctx() else {
        return Err(Error::ContextMismatch {
            detail: format!("expected a quotient factorization, got '{}'", fbar.ctx()),
        });
    };
    let RingContext::PolynomialRing { vars: tvars } = target else {
        return Err(Error::ContextMismatch {
            detail: format!("expected a polynomial ring target, got '{target}'"),
        });
    };
    if vars != tvars {
        return Err(Error::ContextMismatch {
            detail: format!(
                "quotient variables [{}] differ from target variables [{}]",
                vars.join(", "),
                tvars.join(", ")
            ),
        });
    }
    let ops = fbar
        .ops()
        .iter()
        .map(|op| ElementaryOp::new(op.i(), op.j(), op.lambda().clone()))
        .collect::<Result<Vec<_>>>()?;
    ElementaryFactorization::new(target.clone(), fbar.n(), ops)
}

/// Reduce a factorization over `Q[vars]` into the quotient, replacing each
/// parameter by its normal form.
pub fn reduce_factorization(
    f: &ElementaryFactorization,
    quotient: &RingContext,
) -> Result<ElementaryFactorization> {
    let RingContext::PolynomialRing { vars } = f.ctx() else {
        return Err(Error::ContextMismatch {
            detail: format!("expected a polynomial ring factorization, got '{}'", f.ctx()),
        });
    };
    let RingContext::PrincipalQuotient { vars: qvars, .. } = quotient else {
        return Err(Error::ContextMismatch {
            detail: format!("expected a quotient target, got '{quotient}'"),
        });
    };
    if vars != qvars {
        return Err(Error::ContextMismatch {
            detail: format!(
                "polynomial variables [{}] differ from quotient variables [{}]",
                vars.join(", "),
                qvars.join(", ")
            ),
        });
    }
    // The quotient constructor normalizes every parameter.
    ElementaryFactorization::new(quotient.clone(), f.n(), f.ops().to_vec())
}

fn check_modulus(m: &BigInt) -> Result<()> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(())
}

/// The least non-negative residue of an integer constant modulo `|m|`.
fn residue(ctx: &RingContext, f: &Polynomial, m: &BigInt) -> Result<Polynomial> {
    ctx.check_element(f)?;
    let value = f.as_constant().expect("checked integer constant");
    let r = value.numer().rem_euclid(&m.abs());
    Ok(ctx.constant(Rational::from_integer(r)))
}

/// Lift a factorization over `Z/(m)` (stored with integer representatives)
/// to `Z` by taking least non-negative residues.
pub fn lift_factorization_mod(
    fbar: &ElementaryFactorization,
    m: &BigInt,
) -> Result<ElementaryFactorization> {
    check_modulus(m)?;
    if fbar.ctx() != &RingContext::Integers {
        return Err(Error::ContextMismatch {
            detail: format!("expected integer representatives, got '{}'", fbar.ctx()),
        });
    }
    let ctx = RingContext::Integers;
    let ops = fbar
        .ops()
        .iter()
        .map(|op| ElementaryOp::new(op.i(), op.j(), residue(&ctx, op.lambda(), m)?))
        .collect::<Result<Vec<_>>>()?;
    ElementaryFactorization::new(ctx, fbar.n(), ops)
}

/// Reduce integer row entries modulo `m` to least non-negative residues.
pub fn reduce_row_mod(entries: &[Polynomial], m: &BigInt) -> Result<Vec<Polynomial>> {
    check_modulus(m)?;
    let ctx = RingContext::Integers;
    entries.iter().map(|f| residue(&ctx, f, m)).collect()
}

/// Reduce polynomial row entries to their quotient normal forms.
pub fn reduce_row_to_quotient(
    entries: &[Polynomial],
    quotient: &RingContext,
) -> Result<Vec<Polynomial>> {
    if quotient.modulus().is_none() {
        return Err(Error::ContextMismatch {
            detail: format!("expected a quotient target, got '{quotient}'"),
        });
    }
    entries.iter().map(|f| quotient.normal_form(f)).collect()
}

/// Lift a quotient factorization and push a polynomial row through it,
/// transporting the witness. The transformed row reduces to exactly what the
/// original factorization does downstairs.
pub fn transform_row_with_lift(
    row: &UnimodularRow,
    fbar: &ElementaryFactorization,
) -> Result<(UnimodularRow, ElementaryFactorization)> {
    let lifted = lift_factorization(fbar, row.ctx())?;
    let moved = row.apply_factorization(&lifted)?;
    let downstairs = fbar.apply_to_entries(&reduce_row_to_quotient(row.entries(), fbar.ctx())?)?;
    let reduced_after = reduce_row_to_quotient(moved.entries(), fbar.ctx())?;
    assert_eq!(reduced_after, downstairs, "lift must commute with reduction");
    Ok((moved, lifted))
}

/// The integer counterpart of [`transform_row_with_lift`] for `Z/(m)`.
pub fn transform_row_with_lift_mod(
    row: &UnimodularRow,
    fbar: &ElementaryFactorization,
    m: &BigInt,
) -> Result<(UnimodularRow, ElementaryFactorization)> {
    if row.ctx() != &RingContext::Integers {
        return Err(Error::ContextMismatch {
            detail: format!("expected an integer row, got '{}'", row.ctx()),
        });
    }
    let lifted = lift_factorization_mod(fbar, m)?;
    let moved = row.apply_factorization(&lifted)?;
    let downstairs =
        reduce_row_mod(&fbar.apply_to_entries(&reduce_row_mod(row.entries(), m)?)?, m)?;
    let reduced_after = reduce_row_mod(moved.entries(), m)?;
    assert_eq!(reduced_after, downstairs, "lift must commute with reduction");
    Ok((moved, lifted))
}
