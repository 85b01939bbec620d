//! The sparse graded polynomial ring Q[R_2, R_3, ...].
//!
//! Kerov polynomials live here: variables are the free-cumulant symbols R_j
//! with j >= 2 (R_1 vanishes on every diagram and is not a variable), and the
//! weight grading assigns R_j weight j, so R_2^2 R_5 has weight 9.
//!
//! Polynomials are kept in a canonical form: no zero coefficients, and terms
//! ordered by descending weight, then ascending lexicographic order on
//! exponent vectors (read by ascending variable index). The canonical order is
//! what both the table-style printers and the JSON serializer iterate in.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{rat_pow, Rat};

/// A product of cumulant variables, e.g. R_2^2 R_5.
///
/// Stored as a map from variable index (>= 2) to exponent (>= 1); the empty
/// map is the unit monomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<u32, u32>,
}

impl Monomial {
    /// The unit monomial (empty product).
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// The single variable R_j. Panics if j < 2: R_1 is never a variable.
    pub fn var(j: u32) -> Self {
        assert!(j >= 2, "cumulant variables start at R_2, got R_{j}");
        let mut exps = BTreeMap::new();
        exps.insert(j, 1);
        Monomial { exps }
    }

    /// Build from (variable index, exponent) pairs; zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps = BTreeMap::new();
        for (j, e) in pairs {
            assert!(j >= 2, "cumulant variables start at R_2, got R_{j}");
            if e > 0 {
                *exps.entry(j).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of R_j in this monomial (0 if absent).
    pub fn exponent(&self, j: u32) -> u32 {
        self.exps.get(&j).copied().unwrap_or(0)
    }

    /// Iterate (variable index, exponent) in ascending variable order.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&j, &e)| (j, e))
    }

    /// Total weight: sum of j * exponent(j). The unit monomial has weight 0.
    pub fn weight(&self) -> u64 {
        self.exps
            .iter()
            .map(|(&j, &e)| u64::from(j) * u64::from(e))
            .sum()
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&j, &e) in &other.exps {
            *exps.entry(j).or_insert(0) += e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    /// Canonical term order: descending weight first, then ascending
    /// lexicographic order on exponent vectors read by ascending variable
    /// index. This puts R_6 before R_4 before R_2^2 before R_2, matching the
    /// usual table layout.
    fn cmp(&self, other: &Self) -> Ordering {
        other.weight().cmp(&self.weight()).then_with(|| {
            let mut vars: BTreeSet<u32> = self.exps.keys().copied().collect();
            vars.extend(other.exps.keys().copied());
            for j in vars {
                match self.exponent(j).cmp(&other.exponent(j)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, e) in self.pairs() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "R_{j}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Error raised when evaluating a polynomial at an incomplete assignment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    /// A monomial uses R_j but the assignment has no value for j.
    MissingVariable(u32),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::MissingVariable(j) => {
                write!(f, "no value assigned to variable R_{j}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Sparse polynomial over [`Rat`] in the variables R_2, R_3, ...
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn one() -> Self {
        GradedPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    /// The single variable R_j.
    pub fn variable(j: u32) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(Monomial::var(j), Rat::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(terms: I) -> Self {
        let mut p = GradedPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Some(c) if the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in canonical order (descending weight, then ascending
    /// lex on exponent vectors).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &Rat) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero();
        }
        GradedPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Evaluate at an assignment of rational values to variable indices.
    /// Every variable occurring in the polynomial must be assigned.
    pub fn evaluate(&self, assignment: &BTreeMap<u32, Rat>) -> Result<Rat, PolyError> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (j, e) in m.pairs() {
                let x = assignment.get(&j).ok_or(PolyError::MissingVariable(j))?;
                value *= rat_pow(x, u64::from(e));
            }
            total += value;
        }
        Ok(total)
    }

    /// The set of weights of monomials present (a constant term contributes 0).
    pub fn weight_profile(&self) -> BTreeSet<u64> {
        self.terms.keys().map(Monomial::weight).collect()
    }

    /// Largest monomial weight, or None for the zero polynomial.
    pub fn max_weight(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::weight).max()
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c < &Rat::zero();
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
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl std::ops::$trait for GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: GradedPoly) -> GradedPoly {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&GradedPoly> for GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: &GradedPoly) -> GradedPoly {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<GradedPoly> for &GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: GradedPoly) -> GradedPoly {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl std::ops::Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}
