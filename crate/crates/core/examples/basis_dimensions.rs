//! Dimensions of R_n^d and the centered power-sum basis of one cell.
//!
//!     cargo run --example basis_dimensions -- 4 8

use haldane::basis::{dimension, generating_function_coefficient, graded_basis};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (n, d) = match args[..] {
        [n, d] => (n, d),
        _ => (4, 8),
    };

    println!("dim R_n^d (rows n = 2..6, columns d = 0..16)");
    for rows in 2..=6 {
        let dims: Vec<String> = (0..=16)
            .map(|d| {
                assert_eq!(
                    generating_function_coefficient(rows, d),
                    dimension(rows, d).into()
                );
                format!("{:>3}", dimension(rows, d))
            })
            .collect();
        println!("n={rows}: {}", dims.join(""));
    }

    println!("\nbasis of R_{n}^{d}:");
    let basis = graded_basis(n as usize, d);
    for (label, w) in basis.labels.iter().zip(&basis.elements) {
        println!("w{label} = {w}");
    }
}
