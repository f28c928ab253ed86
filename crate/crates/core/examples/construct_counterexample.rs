//! Builds non-Haldane elements from an incomparable pair of lex maxima.
//!
//!     cargo run --example construct_counterexample -- 5 10

use haldane::invariance::is_translation_invariant;
use haldane::squeeze::{is_haldane, support_poset, CellAnalysis};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cells: Vec<(usize, u32)> = match &args[..] {
        [n, d] => vec![(n.parse().unwrap(), d.parse().unwrap())],
        _ => vec![(4, 13), (4, 14), (5, 10)],
    };
    for (n, d) in cells {
        let cell = CellAnalysis::compute(n, d);
        print!("R_{n}^{d}: {}", cell.status.verdict().as_str());
        let Some(q) = cell.counterexample() else {
            println!(", no incomparable pair\n");
            continue;
        };
        let (m1, m2) = cell.status.incomparable_pair.as_ref().unwrap();
        println!(", incomparable pair {m1} / {m2}");
        let maxima: Vec<String> = support_poset(&q)
            .unwrap()
            .maximal_elements()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  q = {q}");
        println!(
            "  {} terms, invariant: {}, haldane: {}, maximal: {{{}}}\n",
            q.len(),
            is_translation_invariant(&q),
            is_haldane(&q).unwrap(),
            maxima.join(",")
        );
    }
}
