//! Compute Sigma_k by all three formulas and confirm they agree term by term.
//!
//! The three routes share nothing beyond the ring arithmetic: one works with
//! shifted products of H = L^(-1) at infinity, one transports the residue
//! through the change of variables z = L(zeta), and one works with power
//! series at 0 built from C(z) = F(1/z). Exact agreement of the outputs is
//! the strongest internal check the library has.
//!
//! ```text
//! cargo run --example three_formulas [k]
//! ```

use kerov::render::sigma_text;
use kerov::sigma::{self, Formula};

fn main() {
    let k: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("k must be a positive integer"))
        .unwrap_or(7);

    let mut results = Vec::new();
    for formula in Formula::ALL {
        let s = sigma::compute(k, formula);
        println!("formula {formula}: {}", sigma_text(k, &s.poly));
        results.push(s.poly);
    }
    assert!(
        results.windows(2).all(|w| w[0] == w[1]),
        "the formulas disagree -- this is a bug"
    );
    println!("all three formulas agree for k = {k}");
}
