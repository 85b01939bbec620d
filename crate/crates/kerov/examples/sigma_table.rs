//! Compute the first Kerov polynomials and print them in text and LaTeX.
//!
//! ```text
//! cargo run --example sigma_table
//! ```

use kerov::render::{poly_latex, sigma_text};
use kerov::sigma;

fn main() {
    println!("{:<40}  latex", "text");
    for k in 1..=6 {
        let s = sigma::formula1(k);
        println!("{:<40}  {}", sigma_text(k, &s.poly), poly_latex(&s.poly));
    }
}
