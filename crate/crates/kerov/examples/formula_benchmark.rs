//! Wall-clock comparison of the three formulas, as CSV on stdout.
//!
//! Same report as `kerov bench`: one row per (k, formula) with the elapsed
//! milliseconds and the number of terms of Sigma_k. No thresholds are
//! asserted; the numbers are for reading.
//!
//! ```text
//! cargo run --release --example formula_benchmark [kmax]
//! ```

use kerov::cli::run_bench;
use kerov::sigma::Formula;

fn main() {
    let kmax: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("kmax must be a positive integer"))
        .unwrap_or(8);
    print!("{}", run_bench(kmax, &Formula::ALL));
}
