//! Matrices over a ring context, elementary shears, and exact determinants.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{Polynomial, RingContext};

/// The elementary shear `E_ij(lambda)`: identity plus `lambda` in row `i`,
/// column `j`. Indices are 1-based and must differ.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryOp {
    i: usize,
    j: usize,
    lambda: Polynomial,
}

impl ElementaryOp {
    pub fn new(i: usize, j: usize, lambda: Polynomial) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidElementaryOp {
                detail: format!("indices are 1-based, got ({i}, {j})"),
            });
        }
        if i == j {
            return Err(Error::InvalidElementaryOp {
                detail: format!("diagonal position ({i}, {i}) is not allowed"),
            });
        }
        Ok(ElementaryOp { i, j, lambda })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn lambda(&self) -> &Polynomial {
        &self.lambda
    }

    /// `E_ij(lambda)^-1 = E_ij(-lambda)`.
    pub fn inverse(&self) -> ElementaryOp {
        ElementaryOp { i: self.i, j: self.j, lambda: self.lambda.neg() }
    }

    pub fn check_bound(&self, n: usize) -> Result<()> {
        if self.i > n || self.j > n {
            return Err(Error::InvalidElementaryOp {
                detail: format!("position ({}, {}) outside a {n}x{n} matrix", self.i, self.j),
            });
        }
        Ok(())
    }
}

/// Inverse of a product of shears: reverse the list and negate each
/// parameter.
pub fn invert_elementary_product(ops: &[ElementaryOp]) -> Vec<ElementaryOp> {
    ops.iter().rev().map(ElementaryOp::inverse).collect()
}

/// A dense matrix whose entries live in a fixed ring context and are kept in
/// normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix {
    ctx: RingContext,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl RingMatrix {
    pub fn from_rows(ctx: RingContext, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::DimensionMismatch { detail: "empty matrix".into() });
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    detail: format!("ragged rows: {} vs {ncols}", row.len()),
                });
            }
            for entry in row {
                ctx.check_element(entry)?;
                data.push(ctx.normal_form(entry)?);
            }
        }
        Ok(RingMatrix { ctx, rows: nrows, cols: ncols, data })
    }

    pub fn identity(ctx: RingContext, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch { detail: "empty matrix".into() });
        }
        let mut data = vec![ctx.zero(); n * n];
        for k in 0..n {
            data[k * n + k] = ctx.one();
        }
        Ok(RingMatrix { ctx, rows: n, cols: n, data })
    }

    /// The `n x n` shear matrix for `op`.
    pub fn elementary(ctx: RingContext, n: usize, op: &ElementaryOp) -> Result<Self> {
        op.check_bound(n)?;
        ctx.check_element(op.lambda())?;
        let mut m = RingMatrix::identity(ctx.clone(), n)?;
        m.data[(op.i - 1) * n + (op.j - 1)] = ctx.normal_form(op.lambda())?;
        Ok(m)
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "entry index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.entry(i, j).clone());
            }
        }
        RingMatrix { ctx: self.ctx.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                detail: format!("'{}' vs '{}'", self.ctx, other.ctx),
            });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ctx.zero();
                for k in 0..self.cols {
                    let prod = self.entry(i, k).try_mul(other.entry(k, j))?;
                    acc = acc.try_add(&prod)?;
                }
                data.push(self.ctx.normal_form(&acc)?);
            }
        }
        Ok(RingMatrix { ctx: self.ctx.clone(), rows: self.rows, cols: other.cols, data })
    }

    /// Apply to a row vector on the right: `v * self`.
    pub fn act_on_row(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                detail: format!("row of length {} times {}x{}", v.len(), self.rows, self.cols),
            });
        }
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut acc = self.ctx.zero();
            for k in 0..v.len() {
                acc = acc.try_add(&v[k].try_mul(self.entry(k, j))?)?;
            }
            out.push(self.ctx.normal_form(&acc)?);
        }
        Ok(out)
    }

    /// Apply to a column vector: `self * v`.
    pub fn act_on_column(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                detail: format!("{}x{} times column of length {}", self.rows, self.cols, v.len()),
            });
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = self.ctx.zero();
            for k in 0..v.len() {
                acc = acc.try_add(&self.entry(i, k).try_mul(&v[k])?)?;
            }
            out.push(self.ctx.normal_form(&acc)?);
        }
        Ok(out)
    }

    /// Exact determinant by cofactor expansion along the first row.
    ///
    /// Uses only ring operations, so it is valid over rings with zero
    /// divisors such as principal quotients.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                detail: format!("determinant of a {}x{} matrix", self.rows, self.cols),
            });
        }
        let mut cols: Vec<usize> = (0..self.cols).collect();
        self.det_expand(0, &mut cols)
    }

    fn det_expand(&self, row: usize, cols: &mut Vec<usize>) -> Result<Polynomial> {
        if cols.is_empty() {
            return Ok(self.ctx.one());
        }
        if cols.len() == 1 {
            return Ok(self.entry(row, cols[0]).clone());
        }
        let mut acc = self.ctx.zero();
        for k in 0..cols.len() {
            let c = cols[k];
            let a = self.entry(row, c);
            if a.is_zero() {
                continue;
            }
            cols.remove(k);
            let minor = self.det_expand(row + 1, cols)?;
            cols.insert(k, c);
            let mut term = self.ctx.mul(a, &minor)?;
            if k % 2 == 1 {
                term = term.neg();
            }
            acc = self.ctx.add(&acc, &term)?;
        }
        Ok(acc)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Whether `M^T = -M` (forces a zero diagonal in characteristic zero).
    pub fn is_skew_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                let sum = self
                    .entry(i, j)
                    .try_add(self.entry(j, i))
                    .expect("entries share the ambient variables");
                if !sum.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                if i == j && !e.is_one() {
                    return false;
                }
                if i != j && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_dto(&self) -> MatrixDto {
        MatrixDto {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.entry(i, j).to_string()).collect())
                .collect(),
        }
    }

    pub fn from_dto(ctx: &RingContext, dto: &MatrixDto) -> Result<RingMatrix> {
        if dto.entries.len() != dto.rows || dto.entries.iter().any(|r| r.len() != dto.cols) {
            return Err(Error::DimensionMismatch {
                detail: "matrix entry grid does not match declared shape".into(),
            });
        }
        let rows = dto
            .entries
            .iter()
            .map(|row| row.iter().map(|s| ctx.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RingMatrix::from_rows(ctx.clone(), rows)
    }
}

/// Serialized matrix shape: canonical entry strings in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Both sides of the rank-one determinant identity
/// `det(I + x^T y) = 1 + sum(x_i y_i)`, each computed independently.
pub fn rank_one_det_identity(
    ctx: &RingContext,
    x: &[Polynomial],
    y: &[Polynomial],
) -> Result<(Polynomial, Polynomial)> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::DimensionMismatch {
            detail: format!("vectors of length {} and {}", x.len(), y.len()),
        });
    }
    let n = x.len();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = ctx.mul(&x[i], &y[j])?;
            if i == j {
                e = ctx.add(&e, &ctx.one())?;
            }
            row.push(e);
        }
        rows.push(row);
    }
    let lhs = RingMatrix::from_rows(ctx.clone(), rows)?.determinant()?;
    let mut dot = ctx.zero();
    for (a, b) in x.iter().zip(y) {
        dot = ctx.add(&dot, &ctx.mul(a, b)?)?;
    }
    let rhs = ctx.add(&ctx.one(), &dot)?;
    Ok((lhs, rhs))
}
