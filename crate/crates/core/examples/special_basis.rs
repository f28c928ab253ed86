//! The fully reduced echelon basis of R_n^d, with the Haldane property of
//! each element.
//!
//!     cargo run --example special_basis -- 4 14

use haldane::basis::special_basis;
use haldane::squeeze::{is_haldane, support_poset};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, d) = match &args[..] {
        [n, d] => (n.parse().unwrap(), d.parse().unwrap()),
        _ => (4, 14),
    };
    let rows = special_basis(n, d);
    let mut haldane = 0;
    for p in &rows {
        let is = is_haldane(p).unwrap();
        haldane += usize::from(is);
        let maxima: Vec<String> = support_poset(p)
            .unwrap()
            .maximal_elements()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "pivot {}: {} terms, haldane {is}, maximal {{{}}}",
            p.leading().unwrap(),
            p.len(),
            maxima.join(",")
        );
    }
    println!("{haldane} of {} elements are Haldane", rows.len());
}
