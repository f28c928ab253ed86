//! Writes the Hasse diagram of the support poset of the degree-14
//! counterexample as Graphviz DOT.
//!
//!     cargo run --example hasse_diagram | dot -Tsvg > poset.svg

use haldane::fixture::counterexample_r4_14;
use haldane::squeeze::{hasse_dot, support_poset};

fn main() {
    let poset = support_poset(&counterexample_r4_14()).expect("nonzero and homogeneous");
    eprintln!(
        "{} nodes, {} covers, maximal: {:?}",
        poset.len(),
        poset.cover_count(),
        poset.maximal_elements().iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    print!("{}", hasse_dot(&poset));
}
