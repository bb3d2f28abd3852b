//! Ring contexts: the integers, the rationals, polynomial rings over the
//! rationals, and principal quotients with a canonical normal form.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

static NO_VARS: [String; 0] = [];

/// The coefficient ring every row, matrix, and certificate is tied to.
///
/// Elements of all four rings are represented as [`Polynomial`] values over
/// the context's variable list (empty for the integers and the rationals).
/// Quotient elements are kept in division normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingContext {
    Integers,
    Rationals,
    PolynomialRing {
        vars: Arc<[String]>,
    },
    PrincipalQuotient {
        vars: Arc<[String]>,
        /// Monic under `order`; constructors normalize the generator.
        modulus: Polynomial,
        order: MonomialOrder,
    },
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn validate_vars(names: &[String]) -> Result<Arc<[String]>> {
    for (i, name) in names.iter().enumerate() {
        if !valid_identifier(name) {
            return Err(Error::Parse {
                position: 0,
                message: format!("invalid variable name '{name}'"),
            });
        }
        if names[..i].contains(name) {
            return Err(Error::DuplicateVariable(name.clone()));
        }
    }
    Ok(names.to_vec().into())
}

impl RingContext {
    pub fn integers() -> Self {
        RingContext::Integers
    }

    pub fn rationals() -> Self {
        RingContext::Rationals
    }

    pub fn polynomial_ring(names: &[String]) -> Result<Self> {
        Ok(RingContext::PolynomialRing { vars: validate_vars(names)? })
    }

    /// Quotient of the polynomial ring by the ideal generated by `modulus`.
    /// The generator is scaled monic under `order`.
    pub fn quotient(names: &[String], modulus: Polynomial, order: MonomialOrder) -> Result<Self> {
        let vars = validate_vars(names)?;
        if modulus.vars() != &vars {
            return Err(Error::VariableMismatch {
                expected: vars.join(", "),
                found: modulus.vars().join(", "),
            });
        }
        if modulus.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let (_, lead) = modulus.leading_term(order)?;
        let monic = modulus.scale(&(Rational::one() / lead));
        Ok(RingContext::PrincipalQuotient { vars, modulus: monic, order })
    }

    pub fn vars(&self) -> &[String] {
        match self {
            RingContext::Integers | RingContext::Rationals => &NO_VARS,
            RingContext::PolynomialRing { vars } => vars,
            RingContext::PrincipalQuotient { vars, .. } => vars,
        }
    }

    /// Shared variable list in the form expected by the parser.
    pub fn vars_arc(&self) -> Arc<[String]> {
        match self {
            RingContext::Integers | RingContext::Rationals => Vec::new().into(),
            RingContext::PolynomialRing { vars } => vars.clone(),
            RingContext::PrincipalQuotient { vars, .. } => vars.clone(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars().len()
    }

    pub fn modulus(&self) -> Option<&Polynomial> {
        match self {
            RingContext::PrincipalQuotient { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        match self {
            RingContext::PrincipalQuotient { order, .. } => *order,
            _ => MonomialOrder::DegLex,
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.vars_arc())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.vars_arc())
    }

    pub fn constant(&self, value: Rational) -> Polynomial {
        Polynomial::constant(self.vars_arc(), value)
    }

    pub fn var(&self, name: &str) -> Option<Polynomial> {
        let idx = self.vars().iter().position(|v| v == name)?;
        Some(Polynomial::variable(self.vars_arc(), idx))
    }

    /// Structural membership: correct ambient variables, and for the integers
    /// an integral constant, for the rationals any constant.
    pub fn check_element(&self, f: &Polynomial) -> Result<()> {
        if f.vars().as_ref() != self.vars() {
            return Err(Error::VariableMismatch {
                expected: self.vars().join(", "),
                found: f.vars().join(", "),
            });
        }
        match self {
            RingContext::Integers => match f.as_constant() {
                Some(c) if c.denom().is_one() => Ok(()),
                _ => Err(Error::NotAnElement {
                    detail: format!("'{f}' is not an integer"),
                }),
            },
            RingContext::Rationals => {
                if f.is_constant() {
                    Ok(())
                } else {
                    Err(Error::NotAnElement {
                        detail: format!("'{f}' is not a rational constant"),
                    })
                }
            }
            _ => Ok(()),
        }
    }

    /// Canonical representative of `f`: the identity map except on quotients,
    /// where it is the unique division remainder by the monic modulus.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.vars().as_ref() != self.vars() {
            return Err(Error::VariableMismatch {
                expected: self.vars().join(", "),
                found: f.vars().join(", "),
            });
        }
        match self {
            RingContext::PrincipalQuotient { modulus, order, .. } => {
                let (_, r) = f.divmod(modulus, *order)?;
                Ok(r)
            }
            _ => Ok(f.clone()),
        }
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.normal_form(&a.try_add(b)?)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.normal_form(&a.try_sub(b)?)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.normal_form(&a.try_mul(b)?)
    }

    /// Whether `f` represents zero in this ring.
    pub fn is_zero_elem(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether `f` represents one in this ring.
    pub fn is_one_elem(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_one())
    }

    /// Append a fresh variable. The integers and the rationals grow into a
    /// polynomial ring over the rationals; a quotient keeps its modulus.
    pub fn extend_with_variable(&self, name: &str) -> Result<RingContext> {
        if !valid_identifier(name) {
            return Err(Error::Parse {
                position: 0,
                message: format!("invalid variable name '{name}'"),
            });
        }
        if self.vars().iter().any(|v| v == name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        let mut names: Vec<String> = self.vars().to_vec();
        names.push(name.to_string());
        match self {
            RingContext::Integers | RingContext::Rationals | RingContext::PolynomialRing { .. } => {
                RingContext::polynomial_ring(&names)
            }
            RingContext::PrincipalQuotient { modulus, order, .. } => {
                let vars = validate_vars(&names)?;
                let modulus = modulus.extend_vars(vars.clone())?;
                Ok(RingContext::PrincipalQuotient { vars, modulus, order: *order })
            }
        }
    }

    /// A parameter name not colliding with any ambient variable.
    pub fn fresh_parameter(&self, preferred: &str) -> String {
        if !self.vars().iter().any(|v| v == preferred) {
            return preferred.to_string();
        }
        let mut k = 0u32;
        loop {
            let cand = format!("{preferred}{k}");
            if !self.vars().iter().any(|v| v == &cand) {
                return cand;
            }
            k += 1;
        }
    }

    /// Carry an element of a context with a variable-list prefix into this
    /// one, reducing to normal form.
    pub fn embed(&self, f: &Polynomial) -> Result<Polynomial> {
        self.normal_form(&f.extend_vars(self.vars_arc())?)
    }

    /// Parse an element from text and validate membership.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        let raw = super::parser::parse_polynomial(src, &self.vars_arc())?;
        self.check_element(&raw)?;
        self.normal_form(&raw)
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingContext::Integers => write!(f, "Z"),
            RingContext::Rationals => write!(f, "Q"),
            RingContext::PolynomialRing { vars } => write!(f, "Q[{}]", vars.join(",")),
            RingContext::PrincipalQuotient { vars, modulus, .. } => {
                write!(f, "Q[{}]/({})", vars.join(","), modulus)
            }
        }
    }
}
