//! Young diagrams: partitions, interlacing corner coordinates, the rational
//! series G of a diagram, and its numeric free cumulants.
//!
//! A diagram drawn in Russian coordinates has a profile whose local minima
//! sit at the addable corners and local maxima at the removable corners;
//! recording each corner's content (column - row) gives two strictly
//! interlacing integer sequences x_1 < y_1 < x_2 < ... < y_{m-1} < x_m with
//! sum(x) = sum(y). The rational fraction
//! `G(z) = prod (z - y_i) / prod (z - x_i)` expands at infinity as
//! `z^-1 + O(z^-2)`, and the free cumulants R_k are recovered from
//! H = 1/G by the same residue identity the symbolic side uses:
//! `R_{k+1} = -(1/k) [z^-1] H^k`. The numeric route therefore reuses the
//! symbolic series machinery with constant coefficients; there is no second
//! series implementation to trust.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;


use crate::laurent::DescendingSeries;
use crate::poly::{GradedPoly, PolyError};
use crate::rat::{rat, Rat};
use crate::sigma::KerovPolynomial;

/// A partition: weakly decreasing positive integers. The empty partition is
/// the empty diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u64>,
}

/// Why a list of parts (or a partition string) is not a partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PartitionError {
    InvalidPart(String),
    ZeroPart,
    NotDecreasing { position: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::InvalidPart(tok) => write!(f, "invalid part {tok:?}"),
            PartitionError::ZeroPart => write!(f, "parts must be positive"),
            PartitionError::NotDecreasing { position } => {
                write!(f, "parts must be weakly decreasing (position {position})")
            }
        }
    }
}

impl std::error::Error for PartitionError {}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing { position: i + 1 });
            }
        }
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Total number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
            .collect();
        Partition { parts }
    }

    /// All partitions of n, in reverse lexicographic order.
    pub fn all(n: u64) -> Vec<Partition> {
        fn rec(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max_part)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts, e.g. "4,3,1"; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: u64 = tok
                .parse()
                .map_err(|_| PartitionError::InvalidPart(tok.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The interlacing corner contents of a diagram: minima at the addable
/// corners, maxima at the removable corners, both ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interlacing {
    pub minima: Vec<i64>,
    pub maxima: Vec<i64>,
}

/// Corner contents of a partition. Addable corners sit at (1, p_1 + 1), at
/// (i, p_i + 1) wherever p_{i-1} > p_i, and at (len + 1, 1); removable
/// corners at (i, p_i) wherever p_i > p_{i+1}. Content is column - row.
pub fn interlacing(p: &Partition) -> Interlacing {
    let parts = p.parts();
    let len = parts.len();
    let mut minima = Vec::new();
    let mut maxima = Vec::new();
    for i in 0..len {
        if i == 0 || parts[i - 1] > parts[i] {
            minima.push(parts[i] as i64 + 1 - (i as i64 + 1));
        }
        if i + 1 == len || parts[i] > parts[i + 1] {
            maxima.push(parts[i] as i64 - (i as i64 + 1));
        }
    }
    minima.push(-(len as i64));
    minima.sort_unstable();
    maxima.sort_unstable();
    debug_assert_eq!(
        minima.iter().sum::<i64>(),
        maxima.iter().sum::<i64>(),
        "corner contents of {p} are not centered"
    );
    Interlacing { minima, maxima }
}

/// The Laurent expansion at infinity of
/// `G(z) = prod (z - y_i) / prod (z - x_i)`, down to the requested floor.
/// Coefficients are variable-free; the leading term is z^-1.
pub fn g_series(p: &Partition, floor: i64) -> DescendingSeries {
    let corners = interlacing(p);
    let m = corners.minima.len() as i64;
    let build_floor = floor - 2 * m - 2;
    let num = poly_from_roots(&corners.maxima, build_floor);
    let den = poly_from_roots(&corners.minima, build_floor);
    let g = &num * &den.reciprocal().expect("denominator is monic");
    assert!(g.floor() <= floor, "construction floor too shallow");
    g.truncate_to(floor)
}

/// prod (z - r) over the given roots, as an exactly-known series.
fn poly_from_roots(roots: &[i64], floor: i64) -> DescendingSeries {
    let mut acc = DescendingSeries::monomial(0, GradedPoly::one(), floor);
    for &root in roots {
        let factor = DescendingSeries::from_terms(
            floor,
            vec![(1, GradedPoly::one()), (0, GradedPoly::constant(rat(-root)))],
        );
        acc = &acc * &factor;
    }
    acc
}

/// The free cumulants R_2 ... R_kmax of a diagram, as exact rationals.
///
/// Route: H = 1/G is of the form z - (numeric B_j) z^(1-j) -- its degree-0
/// coefficient vanishes because the corner contents are centered -- and then
/// `R_{k+1} = -(1/k) [z^-1] H^k`, the same recovery identity the symbolic
/// side certifies. This avoids a compositional inversion of the z^-1-leading
/// series G.
pub fn free_cumulants(p: &Partition, kmax: u32) -> BTreeMap<u32, Rat> {
    assert!(kmax >= 2, "cumulants start at R_2");
    let g = g_series(p, -(i64::from(kmax) + 2));
    let h = g.reciprocal().expect("G has leading coefficient 1");
    debug_assert!(
        h.coefficient(0).map(|c| c.is_zero()).unwrap_or(false),
        "1/G must have no constant term"
    );
    let mut out = BTreeMap::new();
    let mut pow = h.clone();
    for k in 1..i64::from(kmax) {
        if k > 1 {
            pow = &pow * &h;
        }
        let res = pow
            .residue()
            .expect("floor -(kmax+2) retains the residue of H^k")
            .as_constant()
            .expect("numeric series has constant coefficients");
        out.insert(k as u32 + 1, -res / rat(k));
    }
    out
}

/// The normalized character value predicted by a Kerov polynomial:
/// Sigma_k evaluated at the diagram's free cumulants.
pub fn character_via_kerov(p: &Partition, sigma: &KerovPolynomial) -> Result<Rat, PolyError> {
    let cumulants = free_cumulants(p, sigma.k + 1);
    sigma.poly.evaluate(&cumulants)
}
