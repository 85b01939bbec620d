//! A tour of the truncated Laurent series toolkit: build the cumulant series
//! L, invert it compositionally, read off the boolean cumulants B_j, and
//! verify the identities H o L = z and -(1/k) [z^-1] H^k = R_{k+1}.
//!
//! ```text
//! cargo run --example series_toolkit
//! ```

use kerov::laurent::DescendingSeries;
use kerov::poly::GradedPoly;
use kerov::sigma;

fn main() {
    let k = 4;
    let l = sigma::build_l(k);
    println!("L = {l}");

    let h = sigma::build_h(k);
    println!("H = L^(-1) = {}", h.series);
    println!();
    println!("boolean cumulants B_j = -[z^(1-j)] H:");
    for (j, b) in &h.boolean_cumulants {
        println!("  B_{j} = {b}");
    }

    // H o L = z on the whole retained range
    let composed = h.series.compose(&l).unwrap();
    let z = DescendingSeries::identity(composed.floor());
    assert!(composed.agrees_with(&z, composed.floor()));
    println!();
    println!("H o L = {composed}");

    // the recovery identity returns each cumulant variable on the nose
    for kk in 1..=k {
        let recovered = sigma::recover_cumulant(kk);
        assert_eq!(recovered, GradedPoly::variable(kk + 1));
        println!("-(1/{kk}) [z^-1] H^{kk} = {recovered}");
    }
}
