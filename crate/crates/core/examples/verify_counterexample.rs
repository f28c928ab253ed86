//! Checks the shipped degree-14 polynomial: translation invariance,
//! homogeneity, absence of a squeezing maximum, and minimality.
//!
//!     cargo run --example verify_counterexample

use haldane::fixture::counterexample_r4_14;
use haldane::report::verify_paper;

fn main() {
    println!("p = {}\n", counterexample_r4_14());
    let report = verify_paper();
    print!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
}
