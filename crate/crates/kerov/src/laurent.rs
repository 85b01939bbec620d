//! Truncated formal Laurent series with [`GradedPoly`] coefficients.
//!
//! Two mirror-image types:
//! - [`DescendingSeries`]: a Laurent expansion at infinity. Coefficients are
//!   stored for degrees from an explicit `floor` up to the top; everything
//!   below the floor is *unknown*, not zero.
//! - [`AscendingSeries`]: a power series at 0 with an explicit `ceiling`;
//!   everything above the ceiling is unknown.
//!
//! Reading a coefficient outside the retained window is a hard error
//! ([`SeriesError::BelowTruncation`] / [`SeriesError::AboveTruncation`]):
//! a silent zero there is exactly how residue computations go wrong.
//!
//! Truncation bounds propagate through arithmetic pessimistically. For a
//! product of descending series the unknown tail of one factor meets the top
//! of the other, so
//! `floor(a*b) = max(top(a) + floor(b), top(b) + floor(a))`,
//! and for a sum `floor(a+b) = max(floor(a), floor(b))`. Exact operations
//! (scaling, shifting by a power of z, adding a single exactly-known
//! monomial) leave the bounds untouched.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::GradedPoly;
use crate::rat::{binomial_general, rat, Rat};

/// Errors from series operations whose preconditions can fail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    /// Asked for a coefficient below the retained floor of a descending
    /// series; the caller chose too shallow a truncation.
    BelowTruncation { degree: i64, floor: i64 },
    /// Asked for a coefficient above the retained ceiling of an ascending
    /// series.
    AboveTruncation { degree: i64, ceiling: i64 },
    /// Reciprocal requires the leading coefficient to be a nonzero rational
    /// constant.
    NonUnitLeading,
    /// Composition and compositional inversion require a series of the form
    /// z + (terms of degree <= -1).
    BadCompositionShape,
    /// Flipping to an ascending series requires top degree <= 0.
    PositiveTopDegree { top: i64 },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::BelowTruncation { degree, floor } => write!(
                f,
                "coefficient of z^{degree} is below the truncation floor {floor}"
            ),
            SeriesError::AboveTruncation { degree, ceiling } => write!(
                f,
                "coefficient of z^{degree} is above the truncation ceiling {ceiling}"
            ),
            SeriesError::NonUnitLeading => {
                write!(f, "leading coefficient is not a nonzero rational constant")
            }
            SeriesError::BadCompositionShape => {
                write!(f, "series is not of the form z + O(z^-1)")
            }
            SeriesError::PositiveTopDegree { top } => {
                write!(f, "series has positive top degree {top}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Truncated Laurent series at infinity: sum of `coeffs[d] * z^d` over the
/// retained degrees `floor <= d <= top`, plus an unknown `O(z^(floor-1))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescendingSeries {
    floor: i64,
    coeffs: BTreeMap<i64, GradedPoly>,
}

impl DescendingSeries {
    /// The series that is zero on the whole retained range `[floor, inf)`.
    pub fn zero_range(floor: i64) -> Self {
        DescendingSeries {
            floor,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single exactly-known term `poly * z^degree`, zero elsewhere down to
    /// the floor. Panics if the degree is below the floor.
    pub fn monomial(degree: i64, poly: GradedPoly, floor: i64) -> Self {
        assert!(degree >= floor, "monomial degree {degree} below floor {floor}");
        let mut s = Self::zero_range(floor);
        if !poly.is_zero() {
            s.coeffs.insert(degree, poly);
        }
        s
    }

    /// The identity series z.
    pub fn identity(floor: i64) -> Self {
        Self::monomial(1, GradedPoly::one(), floor)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, GradedPoly)>>(floor: i64, terms: I) -> Self {
        let mut s = Self::zero_range(floor);
        for (d, p) in terms {
            assert!(d >= floor, "term degree {d} below floor {floor}");
            if !p.is_zero() {
                let entry = s.coeffs.entry(d).or_insert_with(GradedPoly::zero);
                *entry = &*entry + &p;
                if entry.is_zero() {
                    s.coeffs.remove(&d);
                }
            }
        }
        s
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Highest degree with a nonzero stored coefficient.
    pub fn top(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Highest degree at which the series can be nonzero: the actual top, or
    /// `floor - 1` (inside the unknown tail) when the retained range is zero.
    fn top_eff(&self) -> i64 {
        self.top().unwrap_or(self.floor - 1)
    }

    /// True if every retained coefficient is zero.
    pub fn is_zero_range(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The exact coefficient of z^degree, or an error if the degree lies
    /// below the truncation floor. The error must abort the computation:
    /// below the floor the coefficient is unknown, not zero.
    pub fn coefficient(&self, degree: i64) -> Result<GradedPoly, SeriesError> {
        if degree < self.floor {
            return Err(SeriesError::BelowTruncation {
                degree,
                floor: self.floor,
            });
        }
        Ok(self
            .coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(GradedPoly::zero))
    }

    /// The residue: coefficient of z^-1.
    pub fn residue(&self) -> Result<GradedPoly, SeriesError> {
        self.coefficient(-1)
    }

    /// Iterate retained nonzero terms by ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &GradedPoly)> {
        self.coeffs.iter().map(|(&d, p)| (d, p))
    }

    /// Forget everything below `new_floor` (floors can only rise).
    pub fn truncate_to(&self, new_floor: i64) -> DescendingSeries {
        if new_floor <= self.floor {
            return self.clone();
        }
        DescendingSeries {
            floor: new_floor,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&d, _)| d >= new_floor)
                .map(|(&d, p)| (d, p.clone()))
                .collect(),
        }
    }

    /// Multiply every coefficient by a scalar (exact; bounds unchanged).
    pub fn scale(&self, c: &Rat) -> DescendingSeries {
        if c.is_zero() {
            return Self::zero_range(self.floor);
        }
        DescendingSeries {
            floor: self.floor,
            coeffs: self.coeffs.iter().map(|(&d, p)| (d, p.scale(c))).collect(),
        }
    }

    /// Multiply every coefficient by a polynomial (exact; bounds unchanged).
    pub fn scale_poly(&self, c: &GradedPoly) -> DescendingSeries {
        if c.is_zero() {
            return Self::zero_range(self.floor);
        }
        DescendingSeries {
            floor: self.floor,
            coeffs: self.coeffs.iter().map(|(&d, p)| (d, p * c)).collect(),
        }
    }

    /// Multiply by the exact monomial z^e: all degrees and bounds shift by e.
    pub fn shift(&self, e: i64) -> DescendingSeries {
        DescendingSeries {
            floor: self.floor + e,
            coeffs: self.coeffs.iter().map(|(&d, p)| (d + e, p.clone())).collect(),
        }
    }

    /// Add a single exactly-known monomial (bounds unchanged). Panics if the
    /// degree is below the floor: that part of the series is already unknown.
    pub fn add_monomial(&self, degree: i64, poly: &GradedPoly) -> DescendingSeries {
        assert!(
            degree >= self.floor,
            "cannot add at degree {degree} below floor {}",
            self.floor
        );
        let mut out = self.clone();
        let entry = out.coeffs.entry(degree).or_insert_with(GradedPoly::zero);
        *entry = &*entry + poly;
        if entry.is_zero() {
            out.coeffs.remove(&degree);
        }
        out
    }

    /// Termwise derivative d/dz. The unknown O(z^(floor-1)) tail
    /// differentiates to O(z^(floor-2)), so the floor drops by one.
    pub fn derivative(&self) -> DescendingSeries {
        let mut out = Self::zero_range(self.floor - 1);
        for (&d, p) in &self.coeffs {
            if d == 0 {
                continue;
            }
            out.coeffs.insert(d - 1, p.scale(&rat(d)));
        }
        out
    }

    /// Reciprocal 1/f. Requires the leading coefficient to be a nonzero
    /// rational constant u; writes f = u z^T (1 + w) with w strictly below
    /// degree 0 and expands the geometric series in w.
    pub fn reciprocal(&self) -> Result<DescendingSeries, SeriesError> {
        let top = self.top().ok_or(SeriesError::NonUnitLeading)?;
        let unit = self.coeffs[&top]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(SeriesError::NonUnitLeading)?;

        // w = f / (u z^T) - 1, retained degrees <= -1, floor = floor - T
        let w = self
            .shift(-top)
            .scale(&unit.recip())
            .add_monomial(0, &-GradedPoly::one());
        let w_floor = w.floor;

        // 1/(1+w) = sum (-w)^n; each power loses at least one top degree
        let mut acc = DescendingSeries::monomial(0, GradedPoly::one(), w_floor);
        let mut w_pow = w.clone();
        let mut sign = -1i64;
        loop {
            acc = &acc + &w_pow.scale(&rat(sign));
            if w_pow.is_zero_range() {
                break;
            }
            w_pow = (&w_pow * &w).truncate_to(w_floor);
            sign = -sign;
        }
        Ok(acc.shift(-top).scale(&unit.recip()))
    }

    /// Substitute z - a for z, via Taylor's formula
    /// f(z - a) = sum_r (-a)^r / r! * f^(r)(z). The sum terminates at the
    /// floor because each derivative lowers the retained top degree.
    pub fn taylor_shift(&self, a: &Rat) -> DescendingSeries {
        let span = (self.top_eff() - self.floor + 1).max(0) as u64;
        let mut result = Self::zero_range(self.floor);
        let mut deriv = self.clone();
        let mut coef = Rat::one();
        for r in 0..=span {
            if r > 0 {
                coef = coef * (-a.clone()) / rat(r as i64);
                deriv = deriv.derivative();
            }
            result = &result + &deriv.truncate_to(self.floor).scale(&coef);
        }
        result
    }

    /// For a change of variable g = z + (degree <= -1): the reduced series
    /// w = (g - z)/z with retained degrees <= -2.
    fn change_of_variable_tail(&self) -> Result<DescendingSeries, SeriesError> {
        let mut ok = false;
        for (&d, p) in &self.coeffs {
            match d {
                1 if p.is_one() => ok = true,
                d if d <= -1 => {}
                _ => return Err(SeriesError::BadCompositionShape),
            }
        }
        if !ok {
            return Err(SeriesError::BadCompositionShape);
        }
        Ok(self.add_monomial(1, &-GradedPoly::one()).shift(-1))
    }

    /// Composition f(g(z)) where g = z + (degree <= -1 terms). Each power
    /// z^d composes to z^d (1 + w)^d via the generalized binomial series in
    /// w = (g - z)/z.
    pub fn compose(&self, g: &DescendingSeries) -> Result<DescendingSeries, SeriesError> {
        let w = g.change_of_variable_tail()?;
        let mut result = Self::zero_range(self.floor);
        for (&d, c) in &self.coeffs {
            let pw = one_plus_pow(&w, d, self.floor - d);
            result = &result + &pw.shift(d).scale_poly(c);
        }
        Ok(result)
    }

    /// Compositional inverse of f = z + (degree <= -1 terms): the unique g of
    /// the same shape with f(g(z)) = z down to the floor. Fixed-point
    /// iteration g <- g - (f o g - z) gains at least one correct descending
    /// degree per round; correctness is certified by the round-trip
    /// composition tests.
    pub fn compositional_inverse(&self) -> Result<DescendingSeries, SeriesError> {
        self.change_of_variable_tail()?;
        let z = DescendingSeries::identity(self.floor);
        let mut g = z.clone();
        let max_rounds = (2 - self.floor).max(1) as usize + 2;
        for _ in 0..max_rounds {
            let err = &self.compose(&g)? - &z;
            if err.is_zero_range() {
                return Ok(g);
            }
            g = &g - &err;
        }
        unreachable!("compositional inverse did not stabilize within the retained window");
    }

    /// Change variable z -> 1/z, turning a series with top degree <= 0 into a
    /// power series at 0: the coefficient of z^-d becomes the coefficient of
    /// z^d, and the floor becomes the ceiling (negated).
    pub fn flip(&self) -> Result<AscendingSeries, SeriesError> {
        if let Some(top) = self.top() {
            if top > 0 {
                return Err(SeriesError::PositiveTopDegree { top });
            }
        }
        Ok(AscendingSeries {
            ceiling: -self.floor,
            coeffs: self.coeffs.iter().map(|(&d, p)| (-d, p.clone())).collect(),
        })
    }

    /// True iff both series have all their retained coefficients equal at
    /// every degree >= `down_to`. Both floors must reach `down_to`.
    pub fn agrees_with(&self, other: &DescendingSeries, down_to: i64) -> bool {
        if self.floor > down_to || other.floor > down_to {
            return false;
        }
        let hi = self.top_eff().max(other.top_eff());
        (down_to..=hi).all(|d| {
            self.coeffs.get(&d).cloned().unwrap_or_default()
                == other.coeffs.get(&d).cloned().unwrap_or_default()
        })
    }
}

/// (1 + w)^d for integer d of either sign, truncated to `trunc`; w must have
/// retained degrees <= -1 so the binomial series terminates at the floor.
fn one_plus_pow(w: &DescendingSeries, d: i64, trunc: i64) -> DescendingSeries {
    debug_assert!(w.top_eff() <= -1);
    let mut acc = DescendingSeries::monomial(0, GradedPoly::one(), trunc);
    let mut w_pow = w.truncate_to(trunc);
    let mut r: u64 = 1;
    loop {
        if d >= 0 && r as i64 > d {
            break;
        }
        acc = &acc + &w_pow.scale(&binomial_general(d, r));
        if w_pow.is_zero_range() {
            break;
        }
        w_pow = (&w_pow * w).truncate_to(trunc);
        r += 1;
    }
    acc
}

impl std::ops::Add for &DescendingSeries {
    type Output = DescendingSeries;
    fn add(self, rhs: &DescendingSeries) -> DescendingSeries {
        let floor = self.floor.max(rhs.floor);
        let mut out = DescendingSeries::zero_range(floor);
        for (&d, p) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if d < floor {
                continue;
            }
            let entry = out.coeffs.entry(d).or_insert_with(GradedPoly::zero);
            *entry = &*entry + p;
        }
        out.coeffs.retain(|_, p| !p.is_zero());
        out
    }
}

impl std::ops::Sub for &DescendingSeries {
    type Output = DescendingSeries;
    fn sub(self, rhs: &DescendingSeries) -> DescendingSeries {
        self + &rhs.scale(&rat(-1))
    }
}

impl std::ops::Mul for &DescendingSeries {
    type Output = DescendingSeries;
    fn mul(self, rhs: &DescendingSeries) -> DescendingSeries {
        let floor = (self.top_eff() + rhs.floor).max(rhs.top_eff() + self.floor);
        let mut out = DescendingSeries::zero_range(floor);
        for (&da, pa) in &self.coeffs {
            for (&db, pb) in &rhs.coeffs {
                let d = da + db;
                if d < floor {
                    continue;
                }
                let entry = out.coeffs.entry(d).or_insert_with(GradedPoly::zero);
                *entry = &*entry + &(pa * pb);
            }
        }
        out.coeffs.retain(|_, p| !p.is_zero());
        out
    }
}

/// One displayed term: separator-aware sign handling plus the z-power.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    degree: i64,
    poly: &GradedPoly,
) -> fmt::Result {
    let rendered = if poly.term_count() > 1 {
        format!("({poly})")
    } else {
        poly.to_string()
    };
    let (negative, body) = match rendered.strip_prefix('-') {
        Some(stripped) => (true, stripped.to_string()),
        None => (false, rendered),
    };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let unit = body == "1";
    match degree {
        0 => write!(f, "{body}"),
        1 if unit => write!(f, "z"),
        1 => write!(f, "{body} z"),
        _ if unit => write!(f, "z^{degree}"),
        _ => write!(f, "{body} z^{degree}"),
    }
}

impl fmt::Display for DescendingSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&d, p) in self.coeffs.iter().rev() {
            write_term(f, first, d, p)?;
            first = false;
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(z^{})", self.floor - 1)
    }
}

/// Truncated power series at 0: sum of `coeffs[d] * z^d` for degrees up to
/// the explicit `ceiling`, plus an unknown `O(z^(ceiling+1))`. The mirror
/// image of [`DescendingSeries`] under z -> 1/z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AscendingSeries {
    ceiling: i64,
    coeffs: BTreeMap<i64, GradedPoly>,
}

impl AscendingSeries {
    pub fn zero_range(ceiling: i64) -> Self {
        AscendingSeries {
            ceiling,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(degree: i64, poly: GradedPoly, ceiling: i64) -> Self {
        assert!(degree <= ceiling, "monomial degree {degree} above ceiling {ceiling}");
        let mut s = Self::zero_range(ceiling);
        if !poly.is_zero() {
            s.coeffs.insert(degree, poly);
        }
        s
    }

    pub fn ceiling(&self) -> i64 {
        self.ceiling
    }

    /// Lowest degree with a nonzero stored coefficient.
    pub fn bottom(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    fn bottom_eff(&self) -> i64 {
        self.bottom().unwrap_or(self.ceiling + 1)
    }

    pub fn is_zero_range(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The exact coefficient of z^degree, or an error above the ceiling.
    pub fn coefficient(&self, degree: i64) -> Result<GradedPoly, SeriesError> {
        if degree > self.ceiling {
            return Err(SeriesError::AboveTruncation {
                degree,
                ceiling: self.ceiling,
            });
        }
        Ok(self
            .coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(GradedPoly::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GradedPoly)> {
        self.coeffs.iter().map(|(&d, p)| (d, p))
    }

    /// Forget everything above `new_ceiling` (ceilings can only drop).
    pub fn truncate_to(&self, new_ceiling: i64) -> AscendingSeries {
        if new_ceiling >= self.ceiling {
            return self.clone();
        }
        AscendingSeries {
            ceiling: new_ceiling,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&d, _)| d <= new_ceiling)
                .map(|(&d, p)| (d, p.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> AscendingSeries {
        if c.is_zero() {
            return Self::zero_range(self.ceiling);
        }
        AscendingSeries {
            ceiling: self.ceiling,
            coeffs: self.coeffs.iter().map(|(&d, p)| (d, p.scale(c))).collect(),
        }
    }

    /// Multiply by the exact monomial z^e (e >= 0 in ordinary use); degrees
    /// and ceiling shift together.
    pub fn shift_up(&self, e: i64) -> AscendingSeries {
        AscendingSeries {
            ceiling: self.ceiling + e,
            coeffs: self.coeffs.iter().map(|(&d, p)| (d + e, p.clone())).collect(),
        }
    }

    pub fn add_monomial(&self, degree: i64, poly: &GradedPoly) -> AscendingSeries {
        assert!(
            degree <= self.ceiling,
            "cannot add at degree {degree} above ceiling {}",
            self.ceiling
        );
        let mut out = self.clone();
        let entry = out.coeffs.entry(degree).or_insert_with(GradedPoly::zero);
        *entry = &*entry + poly;
        if entry.is_zero() {
            out.coeffs.remove(&degree);
        }
        out
    }

    /// The Euler operator D = z d/dz: the degree-d coefficient is multiplied
    /// by d; the truncation window is unchanged.
    pub fn euler_d(&self) -> AscendingSeries {
        let mut out = Self::zero_range(self.ceiling);
        for (&d, p) in &self.coeffs {
            if d == 0 {
                continue;
            }
            out.coeffs.insert(d, p.scale(&rat(d)));
        }
        out
    }

    /// Change variable z -> 1/z back to a series at infinity; the ceiling
    /// becomes the floor (negated).
    pub fn flip(&self) -> DescendingSeries {
        DescendingSeries {
            floor: -self.ceiling,
            coeffs: self.coeffs.iter().map(|(&d, p)| (-d, p.clone())).collect(),
        }
    }

    pub fn agrees_with(&self, other: &AscendingSeries, up_to: i64) -> bool {
        if self.ceiling < up_to || other.ceiling < up_to {
            return false;
        }
        let lo = self.bottom_eff().min(other.bottom_eff());
        (lo..=up_to).all(|d| {
            self.coeffs.get(&d).cloned().unwrap_or_default()
                == other.coeffs.get(&d).cloned().unwrap_or_default()
        })
    }
}

impl std::ops::Add for &AscendingSeries {
    type Output = AscendingSeries;
    fn add(self, rhs: &AscendingSeries) -> AscendingSeries {
        let ceiling = self.ceiling.min(rhs.ceiling);
        let mut out = AscendingSeries::zero_range(ceiling);
        for (&d, p) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if d > ceiling {
                continue;
            }
            let entry = out.coeffs.entry(d).or_insert_with(GradedPoly::zero);
            *entry = &*entry + p;
        }
        out.coeffs.retain(|_, p| !p.is_zero());
        out
    }
}

impl std::ops::Sub for &AscendingSeries {
    type Output = AscendingSeries;
    fn sub(self, rhs: &AscendingSeries) -> AscendingSeries {
        self + &rhs.scale(&rat(-1))
    }
}

impl std::ops::Mul for &AscendingSeries {
    type Output = AscendingSeries;
    fn mul(self, rhs: &AscendingSeries) -> AscendingSeries {
        let ceiling = (self.bottom_eff() + rhs.ceiling).min(rhs.bottom_eff() + self.ceiling);
        let mut out = AscendingSeries::zero_range(ceiling);
        for (&da, pa) in &self.coeffs {
            for (&db, pb) in &rhs.coeffs {
                let d = da + db;
                if d > ceiling {
                    continue;
                }
                let entry = out.coeffs.entry(d).or_insert_with(GradedPoly::zero);
                *entry = &*entry + &(pa * pb);
            }
        }
        out.coeffs.retain(|_, p| !p.is_zero());
        out
    }
}

impl fmt::Display for AscendingSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&d, p) in self.coeffs.iter() {
            write_term(f, first, d, p)?;
            first = false;
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(z^{})", self.ceiling + 1)
    }
}
