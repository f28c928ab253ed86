//! The lex-leading monomials L_4^d for d = 0..14 and whether each is
//! completely squeezable.
//!
//!     cargo run --example lex_maxima_table

use haldane::squeeze::{conjecture_status, is_completely_squeezable, lex_maxima_set};

fn main() {
    for d in 0..=14 {
        let set = lex_maxima_set(4, d);
        let items: Vec<String> = set
            .maxima
            .iter()
            .map(|m| {
                if is_completely_squeezable(m) {
                    m.to_string()
                } else {
                    format!("{m}*")
                }
            })
            .collect();
        let status = conjecture_status(4, d);
        println!(
            "{d:>2} | {{{}}} | {}",
            items.join(","),
            status.verdict().as_str()
        );
    }
    println!("(* = not completely squeezable)");
}
