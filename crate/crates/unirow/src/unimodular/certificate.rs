//! Self-verifying artifacts: completions of a row to a determinant-one
//! matrix, and isotopies connecting two witnesses of the same row.

use serde::{Deserialize, Serialize};

use super::{standard_basis_row, witness_residual, ElementaryFactorization, UnimodularRow};
use crate::error::{Error, Result};
use crate::matrices::{ElementaryOp, MatrixDto, RingMatrix};
use crate::rings::{MonomialOrder, Polynomial, Rational, RingContext};

/// Which construction produced a completion certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Euclid,
    UnitReduce,
    PartialUnimodular,
    Swan,
    Lifted,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Euclid => "euclid",
            Provenance::UnitReduce => "unit_reduce",
            Provenance::PartialUnimodular => "partial_unimodular",
            Provenance::Swan => "swan",
            Provenance::Lifted => "lifted",
        }
    }

    pub fn from_name(name: &str) -> Option<Provenance> {
        match name {
            "euclid" => Some(Provenance::Euclid),
            "unit_reduce" => Some(Provenance::UnitReduce),
            "partial_unimodular" => Some(Provenance::PartialUnimodular),
            "swan" => Some(Provenance::Swan),
            "lifted" => Some(Provenance::Lifted),
            _ => None,
        }
    }
}

fn invalid(reason: impl Into<String>) -> Error {
    Error::CertificateInvalid { reason: reason.into() }
}

/// A square matrix of determinant one whose first row is the given
/// unimodular row, together with the shears that reduce the row to `e1`
/// (empty when the completion was built directly).
///
/// Every constructor verifies the full claim, so a value of this type can be
/// trusted as long as it was built through this module.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletionCertificate {
    row: UnimodularRow,
    factorization: ElementaryFactorization,
    matrix: RingMatrix,
    provenance: Provenance,
}

impl CompletionCertificate {
    pub fn new(
        row: UnimodularRow,
        factorization: ElementaryFactorization,
        matrix: RingMatrix,
        provenance: Provenance,
    ) -> Result<Self> {
        let cert = CompletionCertificate { row, factorization, matrix, provenance };
        cert.verify()?;
        Ok(cert)
    }

    /// Re-run every check: the witness identity, matrix shape, first row,
    /// determinant, and the reducing action of the factorization.
    pub fn verify(&self) -> Result<()> {
        let ctx = self.row.ctx();
        let n = self.row.len();
        let residual = witness_residual(ctx, self.row.entries(), self.row.witness())?;
        if !residual.is_zero() {
            return Err(Error::NotUnimodular { residual: residual.to_string() });
        }
        if self.matrix.ctx() != ctx || self.factorization.ctx() != ctx {
            return Err(invalid("matrix, factorization, and row must share one ring"));
        }
        if self.matrix.rows() != n || self.matrix.cols() != n {
            return Err(invalid(format!(
                "matrix is {}x{}, row has length {n}",
                self.matrix.rows(),
                self.matrix.cols()
            )));
        }
        if self.matrix.row(0) != self.row.entries() {
            return Err(invalid("first matrix row differs from the certified row"));
        }
        let det = self.matrix.determinant()?;
        if !det.is_one() {
            return Err(invalid(format!("determinant is {det}, not 1")));
        }
        if self.factorization.n() != n {
            return Err(invalid("factorization size differs from the row length"));
        }
        if !self.factorization.is_empty() {
            let reduced = self.factorization.apply_to_entries(self.row.entries())?;
            if reduced != standard_basis_row(ctx, n) {
                return Err(invalid("factorization does not reduce the row to e1"));
            }
        }
        Ok(())
    }

    pub fn row(&self) -> &UnimodularRow {
        &self.row
    }

    pub fn factorization(&self) -> &ElementaryFactorization {
        &self.factorization
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn to_dto(&self) -> CertificateDto {
        CertificateDto {
            kind: "completion".into(),
            ring: RingDto::from_ctx(self.row.ctx()),
            row: self.row.entries().iter().map(|f| f.to_string()).collect(),
            witness: self.row.witness().iter().map(|f| f.to_string()).collect(),
            parameter: None,
            target: None,
            factorization: self
                .factorization
                .ops()
                .iter()
                .map(|op| FactorDto(op.i(), op.j(), op.lambda().to_string()))
                .collect(),
            matrix: self.matrix.to_dto(),
            provenance: self.provenance.name().into(),
        }
    }

    pub fn from_dto(dto: &CertificateDto) -> Result<Self> {
        if dto.kind != "completion" {
            return Err(invalid(format!("expected kind 'completion', got '{}'", dto.kind)));
        }
        let ctx = dto.ring.to_ctx()?;
        let entries = dto.row.iter().map(|s| ctx.parse(s)).collect::<Result<Vec<_>>>()?;
        let witness = dto.witness.iter().map(|s| ctx.parse(s)).collect::<Result<Vec<_>>>()?;
        let n = entries.len();
        let row = UnimodularRow::new(ctx.clone(), entries, witness)?;
        let ops = dto
            .factorization
            .iter()
            .map(|FactorDto(i, j, s)| ElementaryOp::new(*i, *j, ctx.parse(s)?))
            .collect::<Result<Vec<_>>>()?;
        let factorization = ElementaryFactorization::new(ctx.clone(), n, ops)?;
        let matrix = RingMatrix::from_dto(&ctx, &dto.matrix)?;
        let provenance = Provenance::from_name(&dto.provenance)
            .ok_or_else(|| invalid(format!("unknown provenance '{}'", dto.provenance)))?;
        CompletionCertificate::new(row, factorization, matrix, provenance)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dto()).expect("serializable certificate")
    }
}

/// A one-parameter family of determinant-one matrices `beta(s)` with
/// `beta(0) = I` and `beta(1)` carrying the start witness to the target
/// witness of the same row.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotopyCertificate {
    base: RingContext,
    param: String,
    row: Vec<Polynomial>,
    witness: Vec<Polynomial>,
    target: Vec<Polynomial>,
    beta: RingMatrix,
}

impl IsotopyCertificate {
    pub fn new(
        base: RingContext,
        param: String,
        row: Vec<Polynomial>,
        witness: Vec<Polynomial>,
        target: Vec<Polynomial>,
        beta: RingMatrix,
    ) -> Result<Self> {
        let cert = IsotopyCertificate { base, param, row, witness, target, beta };
        cert.verify()?;
        Ok(cert)
    }

    pub fn verify(&self) -> Result<()> {
        let n = self.row.len();
        if self.witness.len() != n || self.target.len() != n || n == 0 {
            return Err(invalid("row, witness, and target must share a positive length"));
        }
        let ext = self.base.extend_with_variable(&self.param)?;
        if self.beta.ctx() != &ext {
            return Err(invalid("path matrix ring must be the base ring plus the parameter"));
        }
        if self.beta.rows() != n || self.beta.cols() != n {
            return Err(invalid(format!(
                "path matrix is {}x{}, row has length {n}",
                self.beta.rows(),
                self.beta.cols()
            )));
        }
        for w in [&self.witness, &self.target] {
            let residual = witness_residual(&self.base, &self.row, w)?;
            if !residual.is_zero() {
                return Err(Error::NotUnimodular { residual: residual.to_string() });
            }
        }
        if !self.at(&Rational::from_integer(0.into()))?.is_identity() {
            return Err(invalid("path does not start at the identity"));
        }
        let one = Rational::from_integer(1.into());
        let at_one = self.at(&one)?;
        let carried = at_one.act_on_column(
            &self
                .witness
                .iter()
                .map(|f| ext.embed(f))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let target_ext = self
            .target
            .iter()
            .map(|f| ext.embed(f))
            .collect::<Result<Vec<_>>>()?;
        if carried != target_ext {
            return Err(invalid("path at 1 does not carry the witness to the target"));
        }
        let det = self.beta.determinant()?;
        if !det.is_one() {
            return Err(invalid(format!("path determinant is {det}, not identically 1")));
        }
        Ok(())
    }

    /// The path matrix with the parameter fixed to a rational value.
    pub fn at(&self, value: &Rational) -> Result<RingMatrix> {
        let ext = self.beta.ctx();
        let idx = ext.nvars() - 1;
        let rows = (0..self.beta.rows())
            .map(|i| {
                (0..self.beta.cols())
                    .map(|j| self.beta.entry(i, j).substitute_var(idx, value))
                    .collect()
            })
            .collect();
        RingMatrix::from_rows(ext.clone(), rows)
    }

    pub fn base_ctx(&self) -> &RingContext {
        &self.base
    }

    pub fn parameter(&self) -> &str {
        &self.param
    }

    pub fn row(&self) -> &[Polynomial] {
        &self.row
    }

    pub fn witness(&self) -> &[Polynomial] {
        &self.witness
    }

    pub fn target(&self) -> &[Polynomial] {
        &self.target
    }

    pub fn beta(&self) -> &RingMatrix {
        &self.beta
    }

    /// True when the row is shorter than the length-3 threshold the witness
    /// transitivity argument needs; such paths still verify but sit outside
    /// the guaranteed range.
    pub fn below_stable_range(&self) -> bool {
        self.row.len() < 3
    }

    pub fn to_dto(&self) -> CertificateDto {
        CertificateDto {
            kind: "isotopy".into(),
            ring: RingDto::from_ctx(&self.base),
            row: self.row.iter().map(|f| f.to_string()).collect(),
            witness: self.witness.iter().map(|f| f.to_string()).collect(),
            parameter: Some(self.param.clone()),
            target: Some(self.target.iter().map(|f| f.to_string()).collect()),
            factorization: Vec::new(),
            matrix: self.beta.to_dto(),
            provenance: "vaserstein".into(),
        }
    }

    pub fn from_dto(dto: &CertificateDto) -> Result<Self> {
        if dto.kind != "isotopy" {
            return Err(invalid(format!("expected kind 'isotopy', got '{}'", dto.kind)));
        }
        if dto.provenance != "vaserstein" {
            return Err(invalid(format!(
                "unknown isotopy provenance '{}'",
                dto.provenance
            )));
        }
        let base = dto.ring.to_ctx()?;
        let param = dto
            .parameter
            .clone()
            .ok_or_else(|| invalid("isotopy certificate is missing its parameter name"))?;
        let target_src = dto
            .target
            .as_ref()
            .ok_or_else(|| invalid("isotopy certificate is missing its target witness"))?;
        let ext = base.extend_with_variable(&param)?;
        let row = dto.row.iter().map(|s| base.parse(s)).collect::<Result<Vec<_>>>()?;
        let witness = dto.witness.iter().map(|s| base.parse(s)).collect::<Result<Vec<_>>>()?;
        let target = target_src.iter().map(|s| base.parse(s)).collect::<Result<Vec<_>>>()?;
        let beta = RingMatrix::from_dto(&ext, &dto.matrix)?;
        IsotopyCertificate::new(base, param, row, witness, target, beta)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dto()).expect("serializable certificate")
    }
}

/// Either certificate kind, as stored on disk.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Completion(CompletionCertificate),
    Isotopy(IsotopyCertificate),
}

impl Certificate {
    pub fn verify(&self) -> Result<()> {
        match self {
            Certificate::Completion(c) => c.verify(),
            Certificate::Isotopy(c) => c.verify(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Completion(_) => "completion",
            Certificate::Isotopy(_) => "isotopy",
        }
    }

    pub fn provenance_name(&self) -> &'static str {
        match self {
            Certificate::Completion(c) => c.provenance().name(),
            Certificate::Isotopy(_) => "vaserstein",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Certificate::Completion(c) => c.to_json(),
            Certificate::Isotopy(c) => c.to_json(),
        }
    }
}

/// Parse and fully verify a certificate from its JSON form.
pub fn certificate_from_json(src: &str) -> Result<Certificate> {
    let dto: CertificateDto = serde_json::from_str(src).map_err(|e| Error::Parse {
        position: 0,
        message: format!("invalid certificate JSON: {e}"),
    })?;
    match dto.kind.as_str() {
        "completion" => Ok(Certificate::Completion(CompletionCertificate::from_dto(&dto)?)),
        "isotopy" => Ok(Certificate::Isotopy(IsotopyCertificate::from_dto(&dto)?)),
        other => Err(invalid(format!("unknown certificate kind '{other}'"))),
    }
}

/// Serialized ring description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDto {
    Integers,
    Rationals,
    PolynomialRing { variables: Vec<String> },
    PrincipalQuotient { variables: Vec<String>, modulus: String, order: String },
}

impl RingDto {
    pub fn from_ctx(ctx: &RingContext) -> RingDto {
        match ctx {
            RingContext::Integers => RingDto::Integers,
            RingContext::Rationals => RingDto::Rationals,
            RingContext::PolynomialRing { vars } => {
                RingDto::PolynomialRing { variables: vars.to_vec() }
            }
            RingContext::PrincipalQuotient { vars, modulus, order } => RingDto::PrincipalQuotient {
                variables: vars.to_vec(),
                modulus: modulus.to_string(),
                order: order.name().into(),
            },
        }
    }

    pub fn to_ctx(&self) -> Result<RingContext> {
        match self {
            RingDto::Integers => Ok(RingContext::Integers),
            RingDto::Rationals => Ok(RingContext::Rationals),
            RingDto::PolynomialRing { variables } => RingContext::polynomial_ring(variables),
            RingDto::PrincipalQuotient { variables, modulus, order } => {
                let order = MonomialOrder::from_name(order)
                    .ok_or_else(|| invalid(format!("unknown monomial order '{order}'")))?;
                let plain = RingContext::polynomial_ring(variables)?;
                let raw = crate::rings::parse_polynomial(modulus, &plain.vars().to_vec().into())?;
                RingContext::quotient(variables, raw, order)
            }
        }
    }
}

/// One shear in serialized form: `[i, j, "lambda"]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorDto(pub usize, pub usize, pub String);

/// Serialized certificate, both kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub kind: String,
    pub ring: RingDto,
    pub row: Vec<String>,
    pub witness: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<String>>,
    pub factorization: Vec<FactorDto>,
    pub matrix: MatrixDto,
    pub provenance: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{parse_ring, rat_int};
    use crate::unimodular::vaserstein_isotopy;

    fn z() -> RingContext {
        RingContext::integers()
    }

    fn zn(v: i64) -> Polynomial {
        z().constant(rat_int(v))
    }

    fn sample_completion() -> CompletionCertificate {
        let row = UnimodularRow::new(z(), vec![zn(2), zn(3)], vec![zn(-1), zn(1)]).unwrap();
        let matrix =
            RingMatrix::from_rows(z(), vec![vec![zn(2), zn(3)], vec![zn(1), zn(2)]]).unwrap();
        // (2,3) -> (2,1) -> (0,1) -> (1,1) -> (1,0)
        let f = ElementaryFactorization::new(
            z(),
            2,
            vec![
                ElementaryOp::new(1, 2, zn(-1)).unwrap(),
                ElementaryOp::new(2, 1, zn(-2)).unwrap(),
                ElementaryOp::new(2, 1, zn(1)).unwrap(),
                ElementaryOp::new(1, 2, zn(-1)).unwrap(),
            ],
        )
        .unwrap();
        CompletionCertificate::new(row, f, matrix, Provenance::Euclid).unwrap()
    }

    #[test]
    fn valid_completion_verifies() {
        let cert = sample_completion();
        cert.verify().unwrap();
        assert_eq!(cert.provenance().name(), "euclid");
    }

    #[test]
    fn tampering_is_detected() {
        let cert = sample_completion();
        let mut dto = cert.to_dto();
        dto.matrix.entries[1][1] = "3".into();
        // det becomes 2*3 - 3*1 = 3.
        assert!(matches!(
            CompletionCertificate::from_dto(&dto),
            Err(Error::CertificateInvalid { .. })
        ));
        let mut dto = cert.to_dto();
        dto.row[0] = "4".into();
        // Witness identity now fails before anything else.
        assert!(CompletionCertificate::from_dto(&dto).is_err());
        let mut dto = cert.to_dto();
        dto.factorization[0] = FactorDto(1, 2, "7".into());
        assert!(matches!(
            CompletionCertificate::from_dto(&dto),
            Err(Error::CertificateInvalid { .. })
        ));
        let mut dto = cert.to_dto();
        dto.provenance = "mystery".into();
        assert!(matches!(
            CompletionCertificate::from_dto(&dto),
            Err(Error::CertificateInvalid { .. })
        ));
    }

    #[test]
    fn completion_json_round_trip_is_stable() {
        let cert = sample_completion();
        let json = cert.to_json();
        let loaded = certificate_from_json(&json).unwrap();
        assert_eq!(loaded.kind(), "completion");
        loaded.verify().unwrap();
        assert_eq!(loaded.to_json(), json);
    }

    #[test]
    fn isotopy_json_round_trip_is_stable() {
        let ctx = z();
        let a = vec![zn(1), zn(2), zn(2)];
        let b = vec![zn(1), zn(0), zn(0)];
        let c = vec![zn(-3), zn(2), zn(0)];
        let cert = vaserstein_isotopy(&ctx, &a, &b, &c).unwrap();
        let json = cert.to_json();
        assert!(json.contains("\"isotopy\""));
        let loaded = certificate_from_json(&json).unwrap();
        assert_eq!(loaded.to_json(), json);
        match loaded {
            Certificate::Isotopy(iso) => {
                assert_eq!(iso.parameter(), "t");
                assert!(!iso.below_stable_range());
            }
            _ => panic!("expected an isotopy"),
        }
    }

    #[test]
    fn quotient_ring_round_trips_through_dto() {
        let ring = parse_ring("Q[x,y]/(x^2 + y^2 - 1)").unwrap();
        let dto = RingDto::from_ctx(&ring);
        assert_eq!(dto.to_ctx().unwrap(), ring);
        let json = serde_json::to_string(&dto).unwrap();
        assert!(json.contains("principal_quotient"));
        let back: RingDto = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_ctx().unwrap(), ring);
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            certificate_from_json("{ not json"),
            Err(Error::Parse { .. })
        ));
        let cert = sample_completion();
        let mut dto = cert.to_dto();
        dto.kind = "sideways".into();
        let json = serde_json::to_string(&dto).unwrap();
        assert!(matches!(
            certificate_from_json(&json),
            Err(Error::CertificateInvalid { .. })
        ));
    }
}
