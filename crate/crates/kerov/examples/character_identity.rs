//! The identity that defines Kerov polynomials, checked on real characters:
//! (n)_k * chi(lambda, k-cycle) / dim(lambda) = Sigma_k(R(lambda)).
//!
//! The left side comes from the Murnaghan-Nakayama border-strip recursion
//! and the hook length formula; the right side evaluates Sigma_k at the
//! diagram's free cumulants. This prints both sides for one diagram, then
//! sweeps every diagram with up to 7 boxes.
//!
//! ```text
//! cargo run --example character_identity
//! ```

use kerov::sigma;
use kerov::young::{self, Partition};
use kerov::characters;

fn main() {
    let lam: Partition = "4,3,1".parse().unwrap();
    let n = lam.size();
    println!("lambda = {lam} (n = {n}), dim = {}", characters::hook_dimension(&lam));
    println!("{:>3} {:>18} {:>18}", "k", "polynomial side", "character side");
    for k in 1..=n {
        let s = sigma::formula1(k as u32);
        let lhs = young::character_via_kerov(&lam, &s).unwrap();
        let rhs = characters::normalized_on_cycle(&lam, k).unwrap();
        assert_eq!(lhs, rhs);
        println!("{k:>3} {lhs:>18} {rhs:>18}");
    }

    let mut values = 0;
    for n in 1..=7u64 {
        let sigmas: Vec<_> = (1..=n).map(|k| sigma::formula1(k as u32)).collect();
        for lam in Partition::all(n) {
            for k in 1..=n {
                let s = &sigmas[k as usize - 1];
                let lhs = young::character_via_kerov(&lam, s).unwrap();
                let rhs = characters::normalized_on_cycle(&lam, k).unwrap();
                assert_eq!(lhs, rhs, "mismatch at lambda = {lam}, k = {k}");
                values += 1;
            }
        }
    }
    println!();
    println!("identity verified on {values} (lambda, k) pairs with n <= 7");
}
