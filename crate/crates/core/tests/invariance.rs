mod common;

use common::{derivative_sum, invariance_kernel, ms};
use haldane::basis::{dimension, graded_basis};
use haldane::invariance::{is_translation_invariant, tau1_trivariate, translate_expand};
use haldane::multiset::multisets_of_degree;
use haldane::poly::{integer, rational};
use haldane::{Rational, SymmetricPolynomial};
use proptest::prelude::*;

#[test]
fn tau1_formula_agrees_with_expansion_exhaustively() {
    for d in 3..=10 {
        for m in multisets_of_degree(3, d) {
            if m.exponents().contains(&0) {
                continue;
            }
            let p = SymmetricPolynomial::monomial(m.clone(), integer(1));
            // normalization scalar is 1 in the full-symmetrization convention
            assert_eq!(translate_expand(&p).piece(1), tau1_trivariate(&m).unwrap(), "{m}");
        }
    }
}

#[test]
fn pieces_match_raw_translation() {
    for n in 2..=4 {
        for m in common::all_multisets_upto(n, 6) {
            let p = SymmetricPolynomial::monomial(m.clone(), rational(3, 2));
            let ex = translate_expand(&p);
            let raw_pieces = p.symmetrize().translate().split_last_variable();
            for (i, raw) in raw_pieces.iter().enumerate() {
                assert_eq!(raw.collect().unwrap(), ex.piece(i), "{m} piece {i}");
            }
            assert!(ex.pieces().len() >= raw_pieces.len());
        }
    }
}

#[test]
fn pieces_match_iterated_derivative() {
    // tau_i = (sum_j d/dz_j)^i / i!
    for m in common::all_multisets_upto(4, 7) {
        let p = SymmetricPolynomial::monomial(m.clone(), integer(1));
        let ex = translate_expand(&p);
        let mut current = p.symmetrize();
        let mut factorial = Rational::from_integer(1.into());
        for i in 0..=m.degree() as usize {
            if i > 0 {
                current = derivative_sum(&current);
                factorial *= integer(i as i64);
            }
            let expected = current.scale(&(Rational::from_integer(1.into()) / &factorial));
            assert_eq!(ex.piece(i).symmetrize(), expected, "{m} piece {i}");
        }
    }
}

#[test]
fn substituting_zero_recovers_input() {
    let p = common::sym(3, &[(&[4, 1, 0], 2), (&[2, 2, 1], -5)]);
    assert_eq!(translate_expand(&p).piece(0), p);
}

#[test]
fn basis_elements_are_invariant() {
    for n in 2..=5 {
        for d in 0..=12 {
            let basis = graded_basis(n, d);
            for (l, w) in basis.labels.iter().zip(&basis.elements) {
                assert!(is_translation_invariant(w), "n={n} lambda={l}");
            }
        }
    }
}

#[test]
fn kernel_dimension_matches_partition_count() {
    for n in 1..=4 {
        for d in 0..=8 {
            assert_eq!(
                invariance_kernel(n, d).len(),
                dimension(n as u32, d),
                "n={n} d={d}"
            );
        }
    }
}

#[test]
fn lone_square_is_not_invariant() {
    assert!(!is_translation_invariant(&common::sym(4, &[(&[2, 0, 0, 0], 1)])));
    assert!(is_translation_invariant(&haldane::fixture::counterexample_r4_14()));
}

fn degree_poly(n: usize, d: u32) -> impl Strategy<Value = SymmetricPolynomial> {
    let keys = multisets_of_degree(n, d);
    prop::collection::vec((0..keys.len(), -6i64..=6), 0..4).prop_map(move |e| {
        SymmetricPolynomial::from_terms(n, e.into_iter().map(|(i, c)| (keys[i].clone(), integer(c))))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn pieces_are_linear(
        p in degree_poly(3, 5),
        q in degree_poly(3, 5),
        a in -4i64..=4,
        b in 1i64..=4,
    ) {
        let alpha = rational(a, b);
        let beta = rational(b, 3);
        let combo = p.scale(&alpha).add(&q.scale(&beta)).unwrap();
        let ec = translate_expand(&combo);
        let ep = translate_expand(&p);
        let eq = translate_expand(&q);
        for i in 0..=5 {
            let expect = ep.piece(i).scale(&alpha).add(&eq.piece(i).scale(&beta)).unwrap();
            prop_assert_eq!(ec.piece(i), expect);
        }
    }

    #[test]
    fn pieces_lower_degree(p in degree_poly(4, 6)) {
        let ex = translate_expand(&p);
        for (i, piece) in ex.pieces().iter().enumerate() {
            let info = piece.degree_info();
            prop_assert!(info.homogeneous);
            if let Some(d) = info.degree {
                prop_assert_eq!(d as usize, 6 - i);
            }
        }
    }
}

#[test]
fn formula_refuses_zero_entries() {
    assert!(tau1_trivariate(&ms(&[3, 0, 0])).is_err());
}
