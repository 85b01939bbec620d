//! The Kerov polynomials Sigma_k, computed by three independent routes.
//!
//! All three start from the cumulant generating series
//! `L(z) = z + sum_{j>=2} R_j z^(1-j)` and its compositional inverse
//! `H = L^(-1)`, a series `z - sum_{j>=2} B_j z^(1-j)` whose coefficients
//! B_j are the boolean cumulants (isobaric weight-j polynomials in the R's).
//!
//! - [`formula1`]: Sigma_k = -(1/k) [z^-1] H(z) H(z-1) ... H(z-k+1),
//!   a residue of a product of integer Taylor shifts of H.
//! - [`formula2`]: the same residue transported through the change of
//!   variables z = L(zeta). With F = 1/L' it reads
//!   -(1/k) [zeta^-1] (1/F) prod_{j=0}^{k-1} (zeta +
//!   sum_{r>=1} ((-j)^r / r!) (F d/dzeta)^(r-1) F);
//!   the j = 0 factor is exactly zeta.
//! - [`formula3`]: the ascending-variable form obtained from route 2 by
//!   z -> 1/z. With C(z) = F(1/z) and the operator polynomials
//!   P_m = -(1/m!) z (C z D)^(m-1) C (D = z d/dz),
//!   Sigma_k = -(1/k) [z^(k+1)] (1/C) prod_{j=1}^{k-1} (1 + sum_i j^i P_i).
//!
//! The routes share no series machinery beyond the ring itself, so their
//! agreement (checked for k up to 10 in the acceptance suite) certifies the
//! whole tower. [`recover_cumulant`] adds a further consistency check:
//! -(1/k) [z^-1] H(z)^k must come out as the single variable R_{k+1}.
//!
//! Working precision: everything is built with floor -(k+2) (or one deeper)
//! and variables R_2 ... R_{k+1}. A product of k factors of top degree 1
//! needs each factor to degree -k for its residue, and higher variables
//! cannot reach the extracted coefficient: B_j carries z to the power 1-j,
//! so any B_j with j >= k+2 pushes the product below degree -1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::{AscendingSeries, DescendingSeries};
use crate::poly::GradedPoly;
use crate::rat::{factorial, frac, rat, Rat};

/// Which of the three computation routes produced a result.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Formula {
    One,
    Two,
    Three,
}

impl Formula {
    pub const ALL: [Formula; 3] = [Formula::One, Formula::Two, Formula::Three];

    pub fn label(self) -> &'static str {
        match self {
            Formula::One => "1",
            Formula::Two => "2",
            Formula::Three => "3",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A computed Kerov polynomial: Sigma_k in the variables R_2 ... R_{k+1},
/// tagged with the route that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KerovPolynomial {
    pub k: u32,
    pub poly: GradedPoly,
    pub formula: Formula,
}

/// The cumulant generating series L(z) = z + sum_{j=2}^{k+1} R_j z^(1-j),
/// truncated to floor -(k+2). Higher variables cannot influence Sigma_k at
/// this floor.
pub fn build_l(k: u32) -> DescendingSeries {
    assert!(k >= 1, "Sigma_k is defined for k >= 1");
    let floor = -(i64::from(k) + 2);
    let mut terms = vec![(1, GradedPoly::one())];
    for j in 2..=k + 1 {
        terms.push((1 - i64::from(j), GradedPoly::variable(j)));
    }
    DescendingSeries::from_terms(floor, terms)
}

/// H = L^(-1) together with its boolean cumulants B_j = -[z^(1-j)] H
/// for 2 <= j <= k+1.
pub struct HSeries {
    pub series: DescendingSeries,
    pub boolean_cumulants: Vec<(u32, GradedPoly)>,
}

pub fn build_h(k: u32) -> HSeries {
    let l = build_l(k);
    let series = l
        .compositional_inverse()
        .expect("L = z + O(z^-1) is a change of variable at infinity");
    let boolean_cumulants = (2..=k + 1)
        .map(|j| {
            let c = series
                .coefficient(1 - i64::from(j))
                .expect("floor -(k+2) retains every B_j up to j = k+1");
            (j, -&c)
        })
        .collect();
    HSeries {
        series,
        boolean_cumulants,
    }
}

/// Sigma_k as -(1/k) times the residue of H(z) H(z-1) ... H(z-k+1).
pub fn formula1(k: u32) -> KerovPolynomial {
    let h = build_h(k).series;
    let mut prod = h.clone();
    for j in 1..k {
        prod = &prod * &h.taylor_shift(&rat(i64::from(j)));
    }
    let res = prod
        .residue()
        .expect("floor -(k+2) retains the residue of the k-fold product");
    KerovPolynomial {
        k,
        poly: res.scale(&frac(-1, i64::from(k))),
        formula: Formula::One,
    }
}

/// -(1/k) [z^-1] H(z)^k, which must come out as exactly R_{k+1}. This is the
/// Lagrange-inversion consistency check on the whole series tower.
pub fn recover_cumulant(k: u32) -> GradedPoly {
    let h = build_h(k).series;
    let mut pow = h.clone();
    for _ in 1..k {
        pow = &pow * &h;
    }
    pow.residue()
        .expect("floor -(k+2) retains the residue of H^k")
        .scale(&frac(-1, i64::from(k)))
}

/// F = 1/L' = 1 / (1 - sum_{j>=2} (j-1) R_j z^-j), truncated one degree
/// deeper than L itself.
pub fn build_f(k: u32) -> DescendingSeries {
    build_l(k)
        .derivative()
        .reciprocal()
        .expect("L' = 1 + O(z^-2) has unit leading coefficient")
}

/// (F d/dz)^(r-1) applied to F; r = 1 returns F unchanged. Each application
/// lowers the retained top degree by at least one, which is what makes the
/// r-sums in the second route terminate below the floor.
pub fn iterated_operator(f: &DescendingSeries, r: u32) -> DescendingSeries {
    assert!(r >= 1);
    let mut x = f.clone();
    for _ in 1..r {
        x = f * &x.derivative();
    }
    x
}

/// Sigma_k by the change-of-variables route:
/// -(1/k) [z^-1] (1/F) prod_{j=0}^{k-1} (z + sum_{r>=1} ((-j)^r / r!)
/// (F d/dz)^(r-1) F). The j = 0 factor is exactly z (every r >= 1 term
/// carries (-0)^r = 0), applied here as a final shift by one degree.
pub fn formula2(k: u32) -> KerovPolynomial {
    let f = build_f(k);
    let working_floor = f.floor();
    let f_inv = f
        .reciprocal()
        .expect("F = 1 + O(z^-2) has unit leading coefficient");

    // ladder of operator applications, truncated to the working floor;
    // stops once a rung falls entirely below it
    let mut ladder: Vec<DescendingSeries> = vec![f.clone()];
    loop {
        let next = (&f * &ladder.last().unwrap().derivative()).truncate_to(working_floor);
        if next.is_zero_range() {
            break;
        }
        ladder.push(next);
        assert!(
            ladder.len() <= (2 * k as usize) + 12,
            "operator ladder failed to leave the retained window"
        );
    }

    let mut prod = f_inv;
    for j in 1..k {
        let mut factor = DescendingSeries::zero_range(working_floor);
        let mut scalar = Rat::one(); // (-j)^r / r!
        for (idx, rung) in ladder.iter().enumerate() {
            let r = idx as i64 + 1;
            scalar = scalar * rat(-i64::from(j)) / rat(r);
            factor = &factor + &rung.scale(&scalar);
        }
        factor = factor.add_monomial(1, &GradedPoly::one());
        prod = &prod * &factor;
    }
    let prod = prod.shift(1);
    let res = prod
        .residue()
        .expect("working floor retains the residue of the factor product");
    KerovPolynomial {
        k,
        poly: res.scale(&frac(-1, i64::from(k))),
        formula: Formula::Two,
    }
}

/// The operator polynomial P_m = -(1/m!) z (C z D)^(m-1) C, where D is the
/// Euler operator z d/dz. Every P_m carries an explicit factor of z, so its
/// constant term vanishes; its lowest degree grows with m, which terminates
/// the i-sums of the third route.
pub fn p_polynomial(m: u32, c: &AscendingSeries) -> AscendingSeries {
    assert!(m >= 1);
    let mut x = c.clone();
    for _ in 1..m {
        x = c * &x.euler_d().shift_up(1);
    }
    x.shift_up(1)
        .scale(&Rat::new(-BigInt::one(), factorial(u64::from(m))))
}

/// The same P_m through the nested form
/// `-(1/m!) z^m C (D + (m-2)I)[ C ... (D + I)[ C D[C] ] ... ]`,
/// defined for m >= 2 (the nesting is degenerate at m = 1). Kept as a
/// cross-check against [`p_polynomial`]; the two must agree as series.
pub fn p_polynomial_nested(m: u32, c: &AscendingSeries) -> AscendingSeries {
    assert!(m >= 2, "the nested form is defined for m >= 2");
    let mut y = c * &c.euler_d();
    for i in 1..=m - 2 {
        y = c * &(&y.euler_d() + &y.scale(&rat(i64::from(i))));
    }
    y.shift_up(i64::from(m))
        .scale(&Rat::new(-BigInt::one(), factorial(u64::from(m))))
}

/// Sigma_k by the ascending-variable route: with C(z) = F(1/z),
/// -(1/k) [z^(k+1)] (1/C) prod_{j=1}^{k-1} (1 + sum_{i>=1} j^i P_i(z)).
/// The product is empty for k = 1.
pub fn formula3(k: u32) -> KerovPolynomial {
    let f = build_f(k);
    let c = f.flip().expect("F has top degree 0");
    let c_inv = f
        .reciprocal()
        .expect("F = 1 + O(z^-2) has unit leading coefficient")
        .flip()
        .expect("1/F has top degree 0");
    let ceiling = c.ceiling();

    // P_i ladder; the lowest degree of P_i grows with i, so the sum stops
    // once a P_i lies entirely above the ceiling
    let mut p_list: Vec<AscendingSeries> = Vec::new();
    let mut m = 1u32;
    loop {
        let p = p_polynomial(m, &c).truncate_to(ceiling);
        if p.is_zero_range() {
            break;
        }
        p_list.push(p);
        m += 1;
        assert!(
            m <= k + 8,
            "P ladder failed to leave the retained window"
        );
    }

    let mut prod = c_inv;
    for j in 1..k {
        let mut factor = AscendingSeries::zero_range(ceiling);
        let mut scalar = Rat::one(); // j^i
        for p in &p_list {
            scalar *= rat(i64::from(j));
            factor = &factor + &p.scale(&scalar);
        }
        factor = factor.add_monomial(0, &GradedPoly::one());
        prod = &prod * &factor;
    }
    let val = prod
        .coefficient(i64::from(k) + 1)
        .expect("ceiling k+3 retains degree k+1");
    KerovPolynomial {
        k,
        poly: val.scale(&frac(-1, i64::from(k))),
        formula: Formula::Three,
    }
}

/// Compute Sigma_k by the chosen route.
pub fn compute(k: u32, formula: Formula) -> KerovPolynomial {
    match formula {
        Formula::One => formula1(k),
        Formula::Two => formula2(k),
        Formula::Three => formula3(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::rat::is_nonnegative_integer;

    fn r(j: u32) -> GradedPoly {
        GradedPoly::variable(j)
    }

    /// The classical table Sigma_1 ... Sigma_5.
    pub(crate) fn table() -> Vec<GradedPoly> {
        vec![
            r(2),
            r(3),
            &r(4) + &r(2),
            &r(5) + &r(3).scale(&rat(5)),
            GradedPoly::from_terms(vec![
                (Monomial::var(6), rat(1)),
                (Monomial::var(4), rat(15)),
                (Monomial::from_pairs([(2, 2)]), rat(5)),
                (Monomial::var(2), rat(8)),
            ]),
        ]
    }

    #[test]
    fn build_l_shape() {
        let l = build_l(1);
        assert_eq!(l.floor(), -3);
        assert_eq!(l.coefficient(1).unwrap(), GradedPoly::one());
        assert_eq!(l.coefficient(-1).unwrap(), r(2));
        assert_eq!(l.coefficient(-2).unwrap(), GradedPoly::zero());

        let l3 = build_l(3);
        assert_eq!(l3.coefficient(-2).unwrap(), r(3));
        for j in 2..=4u32 {
            assert_eq!(l3.coefficient(1 - i64::from(j)).unwrap(), r(j));
        }
    }

    #[test]
    fn boolean_cumulants_low_orders() {
        // B_2 = R_2, B_3 = R_3, B_4 = R_4 + R_2^2
        let h = build_h(3);
        let b: std::collections::BTreeMap<u32, GradedPoly> =
            h.boolean_cumulants.into_iter().collect();
        assert_eq!(b[&2], r(2));
        assert_eq!(b[&3], r(3));
        assert_eq!(b[&4], &r(4) + &(&r(2) * &r(2)));
    }

    #[test]
    fn h_composed_with_l_is_identity() {
        let l = build_l(4);
        let h = build_h(4).series;
        let composed = h.compose(&l).unwrap();
        let z = DescendingSeries::identity(composed.floor());
        assert!(composed.agrees_with(&z, composed.floor()));
    }

    #[test]
    fn formula1_reproduces_table() {
        let expected = table();
        for k in 1..=5u32 {
            assert_eq!(formula1(k).poly, expected[k as usize - 1], "Sigma_{k}");
        }
    }

    #[test]
    fn recover_cumulant_low_orders() {
        assert_eq!(recover_cumulant(1), r(2));
        assert_eq!(recover_cumulant(2), r(3));
        assert_eq!(recover_cumulant(5), r(6));
    }

    #[test]
    fn build_f_leading_coefficients() {
        let f = build_f(3);
        assert_eq!(f.coefficient(0).unwrap(), GradedPoly::one());
        assert_eq!(f.coefficient(-1).unwrap(), GradedPoly::zero());
        assert_eq!(f.coefficient(-2).unwrap(), r(2));
        // [z^-4] F = 3 R_4 + R_2^2 from the second-order geometric term
        assert_eq!(
            f.coefficient(-4).unwrap(),
            &r(4).scale(&rat(3)) + &(&r(2) * &r(2))
        );
    }

    #[test]
    fn iterated_operator_degrees() {
        let f = build_f(6);
        assert_eq!(iterated_operator(&f, 1), f);
        let g2 = iterated_operator(&f, 2);
        assert_eq!(g2, &f * &f.derivative());
        assert!(g2.top().unwrap() <= -3);
        // each application lowers the retained top degree by at least one
        let mut prev_top = g2.top().unwrap();
        for rr in 3..=5u32 {
            let g = iterated_operator(&f, rr);
            let top = g.top().unwrap();
            assert!(top < prev_top, "top did not drop at r = {rr}");
            prev_top = top;
        }
    }

    #[test]
    fn formula2_reproduces_table() {
        let expected = table();
        for k in 1..=5u32 {
            assert_eq!(formula2(k).poly, expected[k as usize - 1], "Sigma_{k}");
        }
    }

    #[test]
    fn p_polynomial_first_is_minus_z_c() {
        let c = build_f(4).flip().unwrap();
        let p1 = p_polynomial(1, &c);
        let expected = c.shift_up(1).scale(&rat(-1));
        assert_eq!(p1, expected);
    }

    #[test]
    fn p_polynomial_routes_agree() {
        let c = build_f(10).flip().unwrap();
        for m in 2..=10u32 {
            let a = p_polynomial(m, &c);
            let b = p_polynomial_nested(m, &c);
            let common = a.ceiling().min(b.ceiling());
            assert!(a.agrees_with(&b, common), "P_{m} routes disagree");
        }
    }

    #[test]
    fn p_polynomial_has_no_constant_term() {
        let c = build_f(5).flip().unwrap();
        for m in 1..=5u32 {
            let p = p_polynomial(m, &c);
            assert_eq!(p.coefficient(0).unwrap(), GradedPoly::zero());
        }
    }

    #[test]
    fn formula3_reproduces_table() {
        let expected = table();
        for k in 1..=5u32 {
            assert_eq!(formula3(k).poly, expected[k as usize - 1], "Sigma_{k}");
        }
    }

    #[test]
    fn three_formulas_agree_to_k_6() {
        for k in 1..=6u32 {
            let a = formula1(k).poly;
            let b = formula2(k).poly;
            let c = formula3(k).poly;
            assert_eq!(a, b, "routes 1 and 2 disagree at k = {k}");
            assert_eq!(a, c, "routes 1 and 3 disagree at k = {k}");
        }
    }

    #[test]
    fn structural_invariants_to_k_6() {
        for k in 1..=6u32 {
            let sigma = formula1(k).poly;
            let kk = u64::from(k);
            // top term exactly R_{k+1}
            assert_eq!(sigma.coefficient(&Monomial::var(k + 1)), rat(1));
            for (m, c) in sigma.terms() {
                let w = m.weight();
                assert!(w <= kk + 1);
                assert_eq!(w % 2, (kk + 1) % 2, "weight parity broken at k = {k}");
                if w == kk + 1 {
                    assert_eq!(m, &Monomial::var(k + 1), "extra top-weight term at k = {k}");
                }
                assert!(is_nonnegative_integer(c), "coefficient {c} at k = {k}");
            }
            // no constant term
            assert_eq!(sigma.coefficient(&Monomial::unit()), rat(0));
        }
    }
}
