//! Unimodular rows with explicit witnesses, elementary factorizations acting
//! on them, and reductions of a row to the first standard basis vector.

pub mod certificate;
pub mod euclid;
pub mod lift;
pub mod skew;
pub mod swan;

use crate::error::{Error, Result};
use crate::matrices::{invert_elementary_product, ElementaryOp, RingMatrix};
use crate::rings::{Polynomial, RingContext};

use certificate::IsotopyCertificate;

/// The first standard basis row of length `n`.
pub fn standard_basis_row(ctx: &RingContext, n: usize) -> Vec<Polynomial> {
    (0..n).map(|k| if k == 0 { ctx.one() } else { ctx.zero() }).collect()
}

/// `sum(a_i b_i) - 1` in normal form; zero exactly when `b` witnesses
/// unimodularity of `a`.
pub fn witness_residual(
    ctx: &RingContext,
    entries: &[Polynomial],
    witness: &[Polynomial],
) -> Result<Polynomial> {
    if entries.len() != witness.len() || entries.is_empty() {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "row of length {} with witness of length {}",
                entries.len(),
                witness.len()
            ),
        });
    }
    let mut acc = ctx.one().neg();
    for (a, b) in entries.iter().zip(witness) {
        acc = ctx.add(&acc, &ctx.mul(a, b)?)?;
    }
    Ok(acc)
}

/// A row together with a verified witness for `sum(a_i b_i) = 1`.
///
/// Construction re-checks the identity, so holding a value of this type is
/// itself a proof of unimodularity over the exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct UnimodularRow {
    ctx: RingContext,
    entries: Vec<Polynomial>,
    witness: Vec<Polynomial>,
}

impl UnimodularRow {
    pub fn new(
        ctx: RingContext,
        entries: Vec<Polynomial>,
        witness: Vec<Polynomial>,
    ) -> Result<Self> {
        for f in entries.iter().chain(&witness) {
            ctx.check_element(f)?;
        }
        let entries = entries
            .iter()
            .map(|f| ctx.normal_form(f))
            .collect::<Result<Vec<_>>>()?;
        let witness = witness
            .iter()
            .map(|f| ctx.normal_form(f))
            .collect::<Result<Vec<_>>>()?;
        let residual = witness_residual(&ctx, &entries, &witness)?;
        if !residual.is_zero() {
            return Err(Error::NotUnimodular { residual: residual.to_string() });
        }
        Ok(UnimodularRow { ctx, entries, witness })
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn witness(&self) -> &[Polynomial] {
        &self.witness
    }

    pub fn is_standard_basis(&self) -> bool {
        self.entries == standard_basis_row(&self.ctx, self.len())
    }

    /// Act by a single shear on the right and transport the witness so the
    /// identity `sum(a_i b_i) = 1` is preserved exactly:
    /// `a_j += lambda a_i` forces `b_i -= lambda b_j`.
    pub fn apply_elementary(&self, op: &ElementaryOp) -> Result<UnimodularRow> {
        op.check_bound(self.len())?;
        self.ctx.check_element(op.lambda())?;
        let i = op.i() - 1;
        let j = op.j() - 1;
        let mut entries = self.entries.clone();
        let mut witness = self.witness.clone();
        entries[j] = self.ctx.add(&entries[j], &self.ctx.mul(op.lambda(), &entries[i])?)?;
        witness[i] = self.ctx.sub(&witness[i], &self.ctx.mul(op.lambda(), &witness[j])?)?;
        UnimodularRow::new(self.ctx.clone(), entries, witness)
    }

    /// Act by a whole factorization, left to right.
    pub fn apply_factorization(&self, f: &ElementaryFactorization) -> Result<UnimodularRow> {
        if f.ctx() != &self.ctx {
            return Err(Error::ContextMismatch {
                detail: format!("row over '{}', factorization over '{}'", self.ctx, f.ctx()),
            });
        }
        if f.n() != self.len() {
            return Err(Error::DimensionMismatch {
                detail: format!("row of length {} with size-{} factorization", self.len(), f.n()),
            });
        }
        let mut row = self.clone();
        for op in f.ops() {
            row = row.apply_elementary(op)?;
        }
        Ok(row)
    }
}

/// An ordered product of elementary shears in a fixed size and ring,
/// applied to rows on the right, left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryFactorization {
    ctx: RingContext,
    n: usize,
    ops: Vec<ElementaryOp>,
}

impl ElementaryFactorization {
    pub fn new(ctx: RingContext, n: usize, ops: Vec<ElementaryOp>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch { detail: "size zero factorization".into() });
        }
        let mut normalized = Vec::with_capacity(ops.len());
        for op in ops {
            op.check_bound(n)?;
            ctx.check_element(op.lambda())?;
            normalized.push(ElementaryOp::new(op.i(), op.j(), ctx.normal_form(op.lambda())?)?);
        }
        Ok(ElementaryFactorization { ctx, n, ops: normalized })
    }

    pub fn empty(ctx: RingContext, n: usize) -> Result<Self> {
        Self::new(ctx, n, Vec::new())
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn ops(&self) -> &[ElementaryOp] {
        &self.ops
    }

    fn push(&mut self, i: usize, j: usize, lambda: Polynomial) -> Result<()> {
        let lambda = self.ctx.normal_form(&lambda)?;
        if lambda.is_zero() {
            return Ok(());
        }
        let op = ElementaryOp::new(i, j, lambda)?;
        op.check_bound(self.n)?;
        self.ops.push(op);
        Ok(())
    }

    /// Right action on a plain entry vector (no witness).
    pub fn apply_to_entries(&self, entries: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if entries.len() != self.n {
            return Err(Error::DimensionMismatch {
                detail: format!("row of length {} with size-{} factorization", entries.len(), self.n),
            });
        }
        let mut v: Vec<Polynomial> = entries
            .iter()
            .map(|f| self.ctx.normal_form(f))
            .collect::<Result<_>>()?;
        for op in &self.ops {
            let add = self.ctx.mul(op.lambda(), &v[op.i() - 1])?;
            v[op.j() - 1] = self.ctx.add(&v[op.j() - 1], &add)?;
        }
        Ok(v)
    }

    /// The product of the shear matrices, in application order.
    pub fn product_matrix(&self) -> Result<RingMatrix> {
        let mut acc = RingMatrix::identity(self.ctx.clone(), self.n)?;
        for op in &self.ops {
            acc = acc.mul(&RingMatrix::elementary(self.ctx.clone(), self.n, op)?)?;
        }
        Ok(acc)
    }

    /// The reversed factorization with negated parameters; its product is the
    /// inverse matrix.
    pub fn inverse(&self) -> ElementaryFactorization {
        ElementaryFactorization {
            ctx: self.ctx.clone(),
            n: self.n,
            ops: invert_elementary_product(&self.ops),
        }
    }

    /// Replace every parameter `lambda` by `lambda * s` for a fresh variable
    /// `s`, giving a polynomial path from the identity (at 0) to the product
    /// (at 1) inside the elementary group.
    pub fn path(&self, preferred_param: &str) -> Result<(String, ElementaryFactorization)> {
        let param = self.ctx.fresh_parameter(preferred_param);
        let ext = self.ctx.extend_with_variable(&param)?;
        let t = ext.var(&param).expect("freshly added variable");
        let ops = self
            .ops
            .iter()
            .map(|op| {
                let lifted = ext.embed(op.lambda())?;
                ElementaryOp::new(op.i(), op.j(), ext.mul(&lifted, &t)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((param, ElementaryFactorization { ctx: ext, n: self.n, ops }))
    }
}

/// Reduce a row whose first entry is a unit to the standard basis row.
///
/// `inverse_of_first` must satisfy `a_1 * u = 1`. The returned shears first
/// clear every later entry, then fix the leading unit to 1 without ever
/// leaving the elementary group.
pub fn unit_first_reduce(
    row: &UnimodularRow,
    inverse_of_first: &Polynomial,
) -> Result<ElementaryFactorization> {
    let ctx = row.ctx().clone();
    let n = row.len();
    if n < 2 {
        return Err(Error::DimensionMismatch {
            detail: format!("need at least two entries, got {n}"),
        });
    }
    ctx.check_element(inverse_of_first)?;
    let u = ctx.normal_form(inverse_of_first)?;
    let a1 = &row.entries()[0];
    let prod = ctx.mul(a1, &u)?;
    if !prod.is_one() {
        return Err(Error::NotInverse {
            detail: format!("({a1})*({u}) = {prod} != 1"),
        });
    }
    let mut f = ElementaryFactorization::empty(ctx.clone(), n)?;
    for j in 2..=n {
        let lambda = ctx.mul(&row.entries()[j - 1], &u)?.neg();
        f.push(1, j, lambda)?;
    }
    if !a1.is_one() {
        f.push(1, 2, u)?;
        f.push(2, 1, ctx.sub(&ctx.one(), a1)?)?;
        f.push(1, 2, ctx.one().neg())?;
    }
    let reduced = row.apply_factorization(&f)?;
    assert!(reduced.is_standard_basis(), "unit-first reduction must land on e1");
    Ok(f)
}

/// Reduce a row whose leading prefix is already unimodular, certified by a
/// prefix witness `d` with `sum(a_k d_k) = 1` over `k <= i < n`.
///
/// Stage one drives the last entry to 1, stage two clears the rest, stage
/// three swaps the 1 into the leading slot by shears alone.
pub fn partial_unimodular_reduce(
    row: &UnimodularRow,
    prefix_witness: &[Polynomial],
) -> Result<ElementaryFactorization> {
    let ctx = row.ctx().clone();
    let n = row.len();
    let i = prefix_witness.len();
    if i == 0 || i >= n {
        return Err(Error::DimensionMismatch {
            detail: format!("prefix witness of length {i} for a row of length {n}"),
        });
    }
    for d in prefix_witness {
        ctx.check_element(d)?;
    }
    let residual = witness_residual(&ctx, &row.entries()[..i], prefix_witness)?;
    if !residual.is_zero() {
        return Err(Error::NotUnimodular { residual: residual.to_string() });
    }
    let mut f = ElementaryFactorization::empty(ctx.clone(), n)?;
    let last = &row.entries()[n - 1];
    let coeff = ctx.sub(&ctx.one(), last)?;
    for (k, d) in prefix_witness.iter().enumerate() {
        f.push(k + 1, n, ctx.mul(&coeff, d)?)?;
    }
    for k in 1..n {
        f.push(n, k, row.entries()[k - 1].neg())?;
    }
    f.push(n, 1, ctx.one())?;
    f.push(1, n, ctx.one().neg())?;
    let reduced = row.apply_factorization(&f)?;
    assert!(reduced.is_standard_basis(), "partial reduction must land on e1");
    Ok(f)
}

/// A polynomial path of invertible matrices carrying one witness of `a` to
/// another: `beta(t) = I + t (c - b)^T a` has determinant one identically,
/// fixes nothing at `t = 0`, and maps `b^T` to `c^T` at `t = 1`.
pub fn vaserstein_isotopy(
    ctx: &RingContext,
    a: &[Polynomial],
    b: &[Polynomial],
    c: &[Polynomial],
) -> Result<IsotopyCertificate> {
    let n = a.len();
    if b.len() != n || c.len() != n || n == 0 {
        return Err(Error::DimensionMismatch {
            detail: format!(
                "row of length {n} with witnesses of length {} and {}",
                b.len(),
                c.len()
            ),
        });
    }
    let start = UnimodularRow::new(ctx.clone(), a.to_vec(), b.to_vec())?;
    let target = UnimodularRow::new(ctx.clone(), a.to_vec(), c.to_vec())?;
    let param = ctx.fresh_parameter("t");
    let ext = ctx.extend_with_variable(&param)?;
    let t = ext.var(&param).expect("freshly added variable");
    let a_ext: Vec<Polynomial> = a.iter().map(|f| ext.embed(f)).collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let diff = ext.sub(&ext.embed(&c[r])?, &ext.embed(&b[r])?)?;
        let scaled = ext.mul(&diff, &t)?;
        let mut row_entries = Vec::with_capacity(n);
        for s in 0..n {
            let mut e = ext.mul(&scaled, &a_ext[s])?;
            if r == s {
                e = ext.add(&e, &ext.one())?;
            }
            row_entries.push(e);
        }
        rows.push(row_entries);
    }
    let beta = RingMatrix::from_rows(ext.clone(), rows)?;
    IsotopyCertificate::new(
        ctx.clone(),
        param,
        start.entries().to_vec(),
        start.witness().to_vec(),
        target.witness().to_vec(),
        beta,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{parse_ring, rat, rat_int};

    fn z() -> RingContext {
        RingContext::integers()
    }

    fn zn(ctx: &RingContext, n: i64) -> Polynomial {
        ctx.constant(rat_int(n))
    }

    fn int_row(entries: &[i64], witness: &[i64]) -> UnimodularRow {
        let ctx = z();
        UnimodularRow::new(
            ctx.clone(),
            entries.iter().map(|&v| zn(&ctx, v)).collect(),
            witness.iter().map(|&v| zn(&ctx, v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn witness_identity_is_checked() {
        let row = int_row(&[2, 3], &[-1, 1]);
        assert_eq!(row.len(), 2);
        let ctx = z();
        let err = UnimodularRow::new(ctx.clone(), vec![zn(&ctx, 2), zn(&ctx, 4)], vec![zn(&ctx, 1), zn(&ctx, 1)]);
        assert_eq!(err, Err(Error::NotUnimodular { residual: "5".into() }));
        let ragged = UnimodularRow::new(ctx.clone(), vec![zn(&ctx, 1)], vec![]);
        assert!(matches!(ragged, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn circle_row_is_unimodular() {
        let ring = parse_ring("Q[x,y]/(x^2 + y^2 - 1)").unwrap();
        let x = ring.var("x").unwrap();
        let y = ring.var("y").unwrap();
        let row = UnimodularRow::new(ring, vec![x.clone(), y.clone()], vec![x, y]).unwrap();
        assert!(!row.is_standard_basis());
    }

    #[test]
    fn shear_updates_row_and_witness() {
        let row = int_row(&[2, 3], &[-1, 1]);
        let op = ElementaryOp::new(1, 2, zn(&z(), 1)).unwrap();
        let moved = row.apply_elementary(&op).unwrap();
        assert_eq!(moved.entries(), &[zn(&z(), 2), zn(&z(), 5)]);
        assert_eq!(moved.witness(), &[zn(&z(), -2), zn(&z(), 1)]);
        let zero = ElementaryOp::new(2, 1, zn(&z(), 0)).unwrap();
        assert_eq!(row.apply_elementary(&zero).unwrap(), row);
    }

    #[test]
    fn witness_transport_symbolically() {
        let ring = parse_ring("Q[a1,a2,b1,b2,l,s]/(a1*b1 + a2*b2 - 1)").unwrap();
        let v = |name: &str| ring.var(name).unwrap();
        let row = UnimodularRow::new(
            ring.clone(),
            vec![v("a1"), v("a2")],
            vec![v("b1"), v("b2")],
        )
        .unwrap();
        let lambda = ring.mul(&v("l"), &v("s")).unwrap();
        let op = ElementaryOp::new(2, 1, lambda).unwrap();
        let moved = row.apply_elementary(&op).unwrap();
        assert_eq!(moved.entries()[0].to_string(), "a2*l*s + a1");
        assert_eq!(moved.entries()[1].to_string(), "a2");
        assert_eq!(moved.witness()[0].to_string(), "b1");
        assert_eq!(moved.witness()[1].to_string(), "-b1*l*s + b2");
    }

    #[test]
    fn factorization_matches_matrix_action() {
        let ctx = z();
        let f = ElementaryFactorization::new(
            ctx.clone(),
            3,
            vec![
                ElementaryOp::new(1, 2, zn(&ctx, 2)).unwrap(),
                ElementaryOp::new(3, 1, zn(&ctx, -1)).unwrap(),
                ElementaryOp::new(2, 3, zn(&ctx, 5)).unwrap(),
            ],
        )
        .unwrap();
        let v = vec![zn(&ctx, 1), zn(&ctx, 0), zn(&ctx, 7)];
        let via_ops = f.apply_to_entries(&v).unwrap();
        let via_matrix = f.product_matrix().unwrap().act_on_row(&v).unwrap();
        assert_eq!(via_ops, via_matrix);
        let inv = f.inverse();
        assert!(f.product_matrix().unwrap().mul(&inv.product_matrix().unwrap()).unwrap().is_identity());
        assert_eq!(inv.apply_to_entries(&via_ops).unwrap(), v);
    }

    #[test]
    fn path_joins_identity_to_product() {
        let ctx = z();
        let f = ElementaryFactorization::new(
            ctx.clone(),
            2,
            vec![
                ElementaryOp::new(2, 1, zn(&ctx, -1)).unwrap(),
                ElementaryOp::new(1, 2, zn(&ctx, -2)).unwrap(),
            ],
        )
        .unwrap();
        let (param, path) = f.path("t").unwrap();
        assert_eq!(param, "t");
        let m = path.product_matrix().unwrap();
        let tvar = path.ctx().nvars() - 1;
        let at = |v: i64| {
            let rows = (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| m.entry(i, j).substitute_var(tvar, &rat_int(v)))
                        .collect()
                })
                .collect();
            RingMatrix::from_rows(path.ctx().clone(), rows).unwrap()
        };
        assert!(at(0).is_identity());
        let at_one = at(1);
        let base = f.product_matrix().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(
                    at_one.entry(i, j).to_string(),
                    base.entry(i, j).to_string()
                );
            }
        }
    }

    #[test]
    fn unit_first_reduce_trivial_row() {
        let row = int_row(&[1, 0, 0], &[1, 0, 0]);
        let f = unit_first_reduce(&row, &zn(&z(), 1)).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn unit_first_reduce_rational_and_integer_units() {
        let q = RingContext::rationals();
        let row = UnimodularRow::new(
            q.clone(),
            vec![q.constant(rat_int(2)), q.constant(rat_int(3))],
            vec![q.constant(rat_int(-1)), q.constant(rat_int(1))],
        )
        .unwrap();
        let f = unit_first_reduce(&row, &q.constant(rat(1, 2))).unwrap();
        assert_eq!(f.len(), 4);
        assert!(row.apply_factorization(&f).unwrap().is_standard_basis());

        let row = int_row(&[-1, 5, 7], &[-1, 0, 0]);
        let f = unit_first_reduce(&row, &zn(&z(), -1)).unwrap();
        assert!(row.apply_factorization(&f).unwrap().is_standard_basis());
        // Every parameter stays integral.
        for op in f.ops() {
            assert!(z().check_element(op.lambda()).is_ok());
        }
    }

    #[test]
    fn unit_first_reduce_rejects_bad_inverse() {
        let row = int_row(&[2, 3], &[-1, 1]);
        assert!(matches!(
            unit_first_reduce(&row, &zn(&z(), 3)),
            Err(Error::NotInverse { .. })
        ));
    }

    #[test]
    fn partial_reduce_with_unit_prefix() {
        let row = int_row(&[1, 0, 5], &[1, 0, 0]);
        let f = partial_unimodular_reduce(&row, &[zn(&z(), 1)]).unwrap();
        assert!(row.apply_factorization(&f).unwrap().is_standard_basis());
    }

    #[test]
    fn partial_reduce_with_longer_prefix() {
        let row = int_row(&[2, 3, 0], &[-1, 1, 0]);
        let f = partial_unimodular_reduce(&row, &[zn(&z(), -1), zn(&z(), 1)]).unwrap();
        let reduced = row.apply_factorization(&f).unwrap();
        assert!(reduced.is_standard_basis());
    }

    #[test]
    fn partial_reduce_over_sphere_like_quotient() {
        let ring = parse_ring("Q[x,y,z]/(x^2 + y^2 + z^2 - 1)").unwrap();
        let x = ring.var("x").unwrap();
        let y = ring.var("y").unwrap();
        let zz = ring.var("z").unwrap();
        let row = UnimodularRow::new(
            ring.clone(),
            vec![x.clone(), y.clone(), zz.clone()],
            vec![x.clone(), y.clone(), zz.clone()],
        )
        .unwrap();
        // x^2 + y^2 = 1 - z^2 != 1 on the sphere, so (x, y) is not a valid
        // unimodular prefix and the residual is reported.
        let err = partial_unimodular_reduce(&row, &[x.clone(), y.clone()]);
        assert_eq!(err, Err(Error::NotUnimodular { residual: "-z^2".into() }));
    }

    #[test]
    fn partial_reduce_validates_prefix_length() {
        let row = int_row(&[1, 0, 5], &[1, 0, 0]);
        assert!(partial_unimodular_reduce(&row, &[]).is_err());
        assert!(partial_unimodular_reduce(&row, &[zn(&z(), 1), zn(&z(), 0), zn(&z(), 0)]).is_err());
    }

    #[test]
    fn isotopy_between_equal_witnesses_is_constant() {
        let ctx = z();
        let a = vec![zn(&ctx, 2), zn(&ctx, 3)];
        let b = vec![zn(&ctx, -1), zn(&ctx, 1)];
        let cert = vaserstein_isotopy(&ctx, &a, &b, &b).unwrap();
        assert!(cert.beta().is_identity());
        assert!(cert.below_stable_range());
        cert.verify().unwrap();
    }

    #[test]
    fn isotopy_moves_one_witness_to_another() {
        let ctx = z();
        let a = vec![zn(&ctx, 1), zn(&ctx, 2), zn(&ctx, 2)];
        let b = vec![zn(&ctx, 1), zn(&ctx, 0), zn(&ctx, 0)];
        let c = vec![zn(&ctx, -3), zn(&ctx, 2), zn(&ctx, 0)];
        let cert = vaserstein_isotopy(&ctx, &a, &b, &c).unwrap();
        assert!(!cert.below_stable_range());
        cert.verify().unwrap();
        // The path matrix is linear in the parameter with determinant one.
        assert!(cert.beta().determinant().unwrap().is_one());
    }

    #[test]
    fn isotopy_on_the_circle() {
        let ring = parse_ring("Q[x,y]/(x^2 + y^2 - 1)").unwrap();
        let x = ring.var("x").unwrap();
        let y = ring.var("y").unwrap();
        let a = vec![x.clone(), y.clone()];
        let b = vec![x.clone(), y.clone()];
        // c = (x + x*y, y - x^2) also satisfies a.c = 1 on the circle.
        let c = vec![
            ring.add(&x, &ring.mul(&x, &y).unwrap()).unwrap(),
            ring.sub(&y, &ring.mul(&x, &x).unwrap()).unwrap(),
        ];
        let cert = vaserstein_isotopy(&ring, &a, &b, &c).unwrap();
        assert!(cert.below_stable_range());
        cert.verify().unwrap();
    }

    #[test]
    fn isotopy_rejects_non_witnesses() {
        let ctx = z();
        let a = vec![zn(&ctx, 2), zn(&ctx, 3)];
        let b = vec![zn(&ctx, -1), zn(&ctx, 1)];
        let bad = vec![zn(&ctx, 1), zn(&ctx, 1)];
        assert!(matches!(
            vaserstein_isotopy(&ctx, &a, &b, &bad),
            Err(Error::NotUnimodular { .. })
        ));
    }
}
