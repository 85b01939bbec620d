//! Free cumulants of concrete Young diagrams.
//!
//! For each diagram this prints the interlacing corner contents (minima at
//! the addable corners, maxima at the removable ones), the first terms of
//! the series G, and the cumulants R_2..R_6. R_2 always equals the number of
//! boxes, and odd cumulants vanish for self-conjugate shapes.
//!
//! ```text
//! cargo run --example free_cumulants ["4,3,1" ...]
//! ```

use kerov::young::{self, Partition};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let diagrams: Vec<Partition> = if args.is_empty() {
        ["4,3,1", "2,1", "5", "1,1,1,1", ""]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    } else {
        args.iter()
            .map(|s| s.parse().expect("valid partition string"))
            .collect()
    };

    for p in diagrams {
        let name = if p.is_empty() { "(empty)".to_string() } else { p.to_string() };
        println!("diagram {name}: n = {}", p.size());
        let il = young::interlacing(&p);
        println!("  minima {:?}, maxima {:?}", il.minima, il.maxima);
        println!("  G = {}", young::g_series(&p, -4));
        for (k, v) in young::free_cumulants(&p, 6) {
            println!("  R_{k} = {v}");
        }
        println!();
    }
}
