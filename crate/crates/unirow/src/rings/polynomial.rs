//! Canonical multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial in canonical form: a sorted term map with no zero
/// coefficients, over a fixed ambient variable list.
///
/// Constants over the empty variable list double as ring elements of the
/// integers and the rationals, so rows and matrices are uniform across all
/// supported rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Arc<[String]>, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(vars.len()), value);
        }
        Polynomial { vars, terms }
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn variable(vars: Arc<[String]>, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(vars.len(), idx), Rational::one());
        Polynomial { vars, terms }
    }

    pub fn from_term(vars: Arc<[String]>, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.nvars(), vars.len(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Polynomial { vars, terms }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The value of a constant polynomial, or `None` when a variable occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (mono, coeff) = self.terms.iter().next().unwrap();
            if mono.is_one() {
                return Some(coeff.clone());
            }
        }
        None
    }

    /// Largest exponent of variable `idx`, or `None` for the zero polynomial.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps()[idx]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    fn same_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                expected: self.vars.join(", "),
                found: other.vars.join(", "),
            });
        }
        Ok(())
    }

    fn add_term(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut terms = self.terms.clone();
        for (mono, coeff) in &other.terms {
            Self::add_term(&mut terms, mono.clone(), coeff.clone());
        }
        Ok(Polynomial { vars: self.vars.clone(), terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut terms = self.terms.clone();
        for (mono, coeff) in &other.terms {
            Self::add_term(&mut terms, mono.clone(), -coeff.clone());
        }
        Ok(Polynomial { vars: self.vars.clone(), terms })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_vars(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(Polynomial { vars: self.vars.clone(), terms })
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * factor))
            .collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same ambient variables");
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base).expect("same ambient variables");
            }
        }
        acc
    }

    /// Leading term under `order`; the zero polynomial has none.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroLeadingTerm)
    }

    /// Division with remainder by a single divisor.
    ///
    /// Returns `(q, r)` with `self = q*g + r` where no term of `r` is
    /// divisible by the leading monomial of `g` under `order`. With the
    /// divisor fixed this remainder is unique, which makes it a normal form
    /// for principal quotients.
    pub fn divmod(&self, g: &Polynomial, order: MonomialOrder) -> Result<(Polynomial, Polynomial)> {
        self.same_vars(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g_mono, g_coeff) = g.leading_term(order)?;
        let mut quot = BTreeMap::new();
        let mut rem = BTreeMap::new();
        let mut work = self.clone();
        while let Ok((mono, coeff)) = work.leading_term(order) {
            if let Some(ratio) = g_mono.div_into(&mono) {
                let factor = Polynomial::from_term(self.vars.clone(), ratio.clone(), &coeff / &g_coeff);
                work = work.try_sub(&factor.try_mul(g)?)?;
                Self::add_term(&mut quot, ratio, &coeff / &g_coeff);
            } else {
                Self::add_term(&mut rem, mono.clone(), coeff.clone());
                work.terms.remove(&mono);
            }
        }
        Ok((
            Polynomial { vars: self.vars.clone(), terms: quot },
            Polynomial { vars: self.vars.clone(), terms: rem },
        ))
    }

    /// Substitute a rational constant for variable `idx`, keeping the ambient
    /// variable list unchanged.
    pub fn substitute_var(&self, idx: usize, value: &Rational) -> Polynomial {
        assert!(idx < self.vars.len(), "variable index out of range");
        let mut terms = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            let e = mono.exps()[idx];
            let mut exps = mono.exps().to_vec();
            exps[idx] = 0;
            let mut scaled = coeff.clone();
            for _ in 0..e {
                scaled *= value;
            }
            Self::add_term(&mut terms, Monomial::new(exps), scaled);
        }
        Polynomial { vars: self.vars.clone(), terms }
    }

    /// Reinterpret over a variable list that extends the current one by
    /// trailing variables.
    pub fn extend_vars(&self, vars: Arc<[String]>) -> Result<Polynomial> {
        if vars.len() < self.vars.len() || vars[..self.vars.len()] != self.vars[..] {
            return Err(Error::VariableMismatch {
                expected: self.vars.join(", "),
                found: vars.join(", "),
            });
        }
        let extra = vars.len() - self.vars.len();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extended(extra), c.clone()))
            .collect();
        Ok(Polynomial { vars, terms })
    }

    /// Evaluate at a point, coefficient-exact until the final rounding of each
    /// term product.
    pub fn eval(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                detail: format!(
                    "point has {} coordinates, polynomial has {} variables",
                    point.len(),
                    self.vars.len()
                ),
            });
        }
        let mut total = 0.0;
        for (mono, coeff) in &self.terms {
            let mut term = coeff.to_f64().unwrap_or(f64::NAN);
            for (x, &e) in point.iter().zip(mono.exps()) {
                term *= x.powi(e as i32);
            }
            total += term;
        }
        Ok(total)
    }

    /// Precompile to flat float terms for repeated evaluation.
    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            nvars: self.vars.len(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (c.to_f64().unwrap_or(f64::NAN), m.exps().to_vec()))
                .collect(),
        }
    }
}

/// A polynomial lowered to float coefficients and raw exponent vectors.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    nvars: usize,
    terms: Vec<(f64, Vec<u32>)>,
}

impl CompiledPoly {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn eval(&self, point: &[f64]) -> f64 {
        debug_assert_eq!(point.len(), self.nvars);
        let mut total = 0.0;
        for (coeff, exps) in &self.terms {
            let mut term = *coeff;
            for (x, &e) in point.iter().zip(exps) {
                term *= x.powi(e as i32);
            }
            total += term;
        }
        total
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in self.terms.iter().rev() {
            let negative = coeff.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coeff.abs();
            let mut wrote_factor = false;
            if !magnitude.is_one() || mono.is_one() {
                write!(f, "{magnitude}")?;
                wrote_factor = true;
            }
            for (name, &e) in self.vars.iter().zip(mono.exps()) {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{name}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}
