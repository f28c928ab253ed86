//! Graded pieces of p(z + t) and the closed trivariate first piece.
//!
//!     cargo run --example translation_invariance

use haldane::basis::centered_power_sum;
use haldane::invariance::{is_translation_invariant, tau1_trivariate, translate_expand};
use haldane::poly::integer;
use haldane::{ExponentMultiset, SymmetricPolynomial};

fn main() {
    let m = ExponentMultiset::from_canonical(vec![3, 2, 1]).unwrap();
    let p = SymmetricPolynomial::monomial(m.clone(), integer(1));
    println!("p = {p}");
    for (i, piece) in translate_expand(&p).pieces().iter().enumerate() {
        println!("  tau_{i}(p) = {piece}");
    }
    println!("closed form tau_1 = {}", tau1_trivariate(&m).unwrap());

    let f = centered_power_sum(3, 3);
    println!("\nf(w_3) for n = 3: {f}");
    println!("invariant: {}", is_translation_invariant(&f));
}
