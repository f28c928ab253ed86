//! Multiplication by the Vandermonde product sends R_n^d onto the
//! translation-invariant antisymmetric polynomials of degree d + n(n-1)/2.
//!
//!     cargo run --example antisymmetric

use haldane::antisym::{is_antisymmetric, to_antisymmetric, vandermonde};
use haldane::basis::graded_basis;

fn main() {
    println!("Delta_3 = {}", vandermonde(3).as_raw());
    for d in 0..=6 {
        let basis = graded_basis(4, d);
        for (label, w) in basis.labels.iter().zip(&basis.elements) {
            let a = to_antisymmetric(w);
            println!(
                "d={d} w{label}: {} monomials, degree {:?}, antisymmetric {}, invariant {}",
                a.as_raw().len(),
                a.as_raw().homogeneous_degree(),
                is_antisymmetric(a.as_raw()),
                a.as_raw().is_translation_invariant()
            );
        }
    }
}
