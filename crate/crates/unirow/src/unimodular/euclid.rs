//! Completion of coprime pairs by remainder descent, over the integers and
//! over univariate polynomials with rational coefficients.

use num_bigint::BigInt;
use num_traits::{Euclid, One, Signed, Zero};

use super::certificate::{CompletionCertificate, Provenance};
use super::{ElementaryFactorization, UnimodularRow};
use crate::error::{Error, Result};
use crate::matrices::ElementaryOp;
use crate::rings::{Polynomial, Rational, RingContext};

/// Complete the row `(a1, a2)` to a determinant-one matrix by the Euclidean
/// algorithm, phrased entirely as elementary shears.
///
/// Succeeds exactly when the entries generate the unit ideal; otherwise the
/// computed gcd is reported. The witness is read off the product of the
/// reducing shears, so no witness input is needed.
pub fn euclid_complete(
    ctx: &RingContext,
    a1: &Polynomial,
    a2: &Polynomial,
) -> Result<CompletionCertificate> {
    ctx.check_element(a1)?;
    ctx.check_element(a2)?;
    let ops = match ctx {
        RingContext::Integers => integer_descent(ctx, a1, a2)?,
        RingContext::PolynomialRing { vars } if vars.len() == 1 => {
            polynomial_descent(ctx, a1, a2)?
        }
        other => {
            return Err(Error::ContextMismatch {
                detail: format!(
                    "remainder descent needs Z or a univariate polynomial ring, got '{other}'"
                ),
            })
        }
    };
    let f = ElementaryFactorization::new(ctx.clone(), 2, ops)?;
    let reduced = f.apply_to_entries(&[a1.clone(), a2.clone()])?;
    assert!(
        reduced[0].is_one() && reduced[1].is_zero(),
        "descent must land on e1"
    );
    // a * (product of f) = e1, so the completion is the inverse product and
    // its own inverse's first column witnesses the row.
    let matrix = f.inverse().product_matrix()?;
    let witness = f.product_matrix()?.column(0);
    let row = UnimodularRow::new(ctx.clone(), vec![a1.clone(), a2.clone()], witness)?;
    CompletionCertificate::new(row, f, matrix, Provenance::Euclid)
}

/// Shears finishing from `(u, 0)` or `(0, u)` with `u` a unit, or the
/// not-coprime error naming the leftover gcd.
fn finish<U>(
    ctx: &RingContext,
    state: (Polynomial, Polynomial),
    ops: &mut Vec<ElementaryOp>,
    unit_inverse: U,
    gcd_name: impl Fn(&Polynomial) -> String,
) -> Result<()>
where
    U: Fn(&Polynomial) -> Option<Polynomial>,
{
    let (v1, v2) = state;
    if v2.is_zero() {
        if v1.is_one() {
            return Ok(());
        }
        let inv = unit_inverse(&v1).ok_or_else(|| Error::NotCoprime { gcd: gcd_name(&v1) })?;
        ops.push(ElementaryOp::new(1, 2, inv)?);
        ops.push(ElementaryOp::new(2, 1, ctx.sub(&ctx.one(), &v1)?)?);
        ops.push(ElementaryOp::new(1, 2, ctx.one().neg())?);
        Ok(())
    } else {
        debug_assert!(v1.is_zero());
        let inv = unit_inverse(&v2).ok_or_else(|| Error::NotCoprime { gcd: gcd_name(&v2) })?;
        ops.push(ElementaryOp::new(2, 1, inv)?);
        ops.push(ElementaryOp::new(1, 2, v2.neg())?);
        Ok(())
    }
}

fn integer_descent(
    ctx: &RingContext,
    a1: &Polynomial,
    a2: &Polynomial,
) -> Result<Vec<ElementaryOp>> {
    let as_int = |f: &Polynomial| f.as_constant().expect("checked integer constant").numer().clone();
    let mut v1 = as_int(a1);
    let mut v2 = as_int(a2);
    if v1.is_zero() && v2.is_zero() {
        return Err(Error::NotCoprime { gcd: "0".into() });
    }
    let mut ops = Vec::new();
    let constant = |n: &BigInt| ctx.constant(Rational::from_integer(n.clone()));
    while !v1.is_zero() && !v2.is_zero() {
        if v2.abs() >= v1.abs() {
            let q = v2.div_euclid(&v1);
            ops.push(ElementaryOp::new(1, 2, constant(&-&q))?);
            v2 -= &q * &v1;
        } else {
            let q = v1.div_euclid(&v2);
            ops.push(ElementaryOp::new(2, 1, constant(&-&q))?);
            v1 -= &q * &v2;
        }
    }
    let unit_inverse = |u: &Polynomial| {
        let c = u.as_constant()?;
        if c.numer().abs().is_one() {
            Some(ctx.constant(c))
        } else {
            None
        }
    };
    finish(
        ctx,
        (constant(&v1), constant(&v2)),
        &mut ops,
        unit_inverse,
        |u| u.as_constant().expect("integer constant").abs().to_string(),
    )?;
    Ok(ops)
}

fn polynomial_descent(
    ctx: &RingContext,
    a1: &Polynomial,
    a2: &Polynomial,
) -> Result<Vec<ElementaryOp>> {
    if a1.is_zero() && a2.is_zero() {
        return Err(Error::NotCoprime { gcd: "0".into() });
    }
    let mut v1 = a1.clone();
    let mut v2 = a2.clone();
    let mut ops = Vec::new();
    let order = ctx.order();
    while !v1.is_zero() && !v2.is_zero() {
        if v2.degree_in(0) >= v1.degree_in(0) {
            let (q, r) = v2.divmod(&v1, order)?;
            ops.push(ElementaryOp::new(1, 2, q.neg())?);
            v2 = r;
        } else {
            let (q, r) = v1.divmod(&v2, order)?;
            ops.push(ElementaryOp::new(2, 1, q.neg())?);
            v1 = r;
        }
    }
    let unit_inverse = |u: &Polynomial| {
        let c = u.as_constant()?;
        if c.is_zero() {
            None
        } else {
            Some(ctx.constant(Rational::one() / c))
        }
    };
    let gcd_name = |u: &Polynomial| {
        let (_, lead) = u.leading_term(order).expect("nonzero leftover");
        u.scale(&(Rational::one() / lead)).to_string()
    };
    finish(ctx, (v1, v2), &mut ops, unit_inverse, gcd_name)?;
    Ok(ops)
}
