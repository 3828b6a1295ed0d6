//! Sparse multivariate polynomials over the rationals.

use crate::monomial::{Monomial, MonomialOrder};
use crate::perm::FinitePermutation;
use crate::var::VarIndex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("row embedding requires main variables in row 1 only, found {0}")]
    RowEmbedNotRowOne(VarIndex),
    #[error("evaluation is missing assignments for: {}", format_vars(.0))]
    MissingAssignments(Vec<VarIndex>),
}

fn format_vars(vars: &[VarIndex]) -> String {
    vars.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// A polynomial with exact rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by the canonical monomial order, and zero
/// coefficients are removed on every construction path, so the representation
/// is a canonical form: equal polynomials compare bit-equal (`Eq`, and `Ord`
/// is a total order usable for deduplication).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn var(v: VarIndex) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigRational::one());
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m`, keeping the canonical form.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, v: VarIndex) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<VarIndex> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn main_rows(&self) -> BTreeSet<u32> {
        self.vars().into_iter().filter_map(|v| v.row()).collect()
    }

    /// Number of columns in use: the maximum main column index, 0 if none.
    pub fn ncols(&self) -> u32 {
        self.vars().into_iter().filter_map(|v| v.col()).max().unwrap_or(0)
    }

    pub fn max_param_index(&self) -> u32 {
        self.vars()
            .into_iter()
            .filter_map(|v| match v {
                VarIndex::Param { index } => Some(index),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn has_params(&self) -> bool {
        self.vars().iter().any(|v| v.is_param())
    }

    /// Leading term under `order` (largest monomial). None for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        match order {
            // canonical storage order is grevlex, so the last key is leading
            MonomialOrder::Grevlex => self.terms.iter().next_back(),
            _ => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| a.cmp_with(b, order)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, q)| (m.clone(), q * c)).collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, q)| (mm.mul(m), q * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Renames rows of main variables through `f` (must be injective on the
    /// rows in use); parameters are untouched.
    pub fn rename_rows(&self, f: impl Fn(u32) -> u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        m.rename_vars(|v| match v {
                            VarIndex::Main { row, col } => VarIndex::Main { row: f(row), col },
                            p => p,
                        }),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Renames every variable through `f` (must be injective on the
    /// variables in use).
    pub fn rename_vars(&self, f: impl Fn(VarIndex) -> VarIndex) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.rename_vars(&f), c.clone()))
                .collect(),
        }
    }

    /// The row-permutation action: `x[i][j] -> x[sigma(i)][j]`.
    pub fn apply_perm(&self, sigma: &FinitePermutation) -> Poly {
        if sigma.is_identity() {
            return self.clone();
        }
        self.rename_rows(|r| sigma.apply(r))
    }

    /// Moves a row-1 polynomial into row `i`. Parameters pass through;
    /// main variables outside row 1 are rejected.
    pub fn row_embed(&self, i: u32) -> Result<Poly, PolyError> {
        assert!(i >= 1, "rows are 1-based");
        for v in self.vars() {
            if let Some(row) = v.row() {
                if row != 1 {
                    return Err(PolyError::RowEmbedNotRowOne(v));
                }
            }
        }
        Ok(self.rename_rows(|_| i))
    }

    /// Full evaluation. Reports every missing variable, not just the first.
    pub fn evaluate(&self, assignment: &BTreeMap<VarIndex, BigRational>) -> Result<BigRational, PolyError> {
        let missing: Vec<VarIndex> = self
            .vars()
            .into_iter()
            .filter(|v| !assignment.contains_key(v))
            .collect();
        if !missing.is_empty() {
            return Err(PolyError::MissingAssignments(missing));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                t *= rat_pow(&assignment[&v], e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes rational values for a subset of the variables.
    pub fn partial_eval(&self, assignment: &BTreeMap<VarIndex, BigRational>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match assignment.get(&v) {
                    Some(q) => coeff *= rat_pow(q, e),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_exps(rest), coeff);
        }
        out
    }

    /// Substitutes polynomials for variables; unmapped variables stay.
    pub fn substitute(&self, map: &BTreeMap<VarIndex, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                match map.get(&v) {
                    Some(p) => t = &t * &p.pow(e),
                    None => t = t.mul_term(&Monomial::from_exps([(v, e)]), &BigRational::one()),
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Divides by the leading coefficient under `order`. Zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }
}

pub(crate) fn rat_pow(base: &BigRational, e: u32) -> BigRational {
    let mut result = BigRational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // leading term first
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
