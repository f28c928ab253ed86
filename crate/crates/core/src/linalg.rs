//! Dense exact Gauss-Jordan elimination over the rationals.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Reduces `rows` in place to reduced row echelon form, drops zero rows,
/// and returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = Rational::one() / &rows[rank][col];
        for v in rows[rank].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows and `cols` columns.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in work.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::integer;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| integer(v)).collect())
            .collect()
    }

    #[test]
    fn rref_small() {
        let mut a = m(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let pivots = rref(&mut a);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(a, m(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&ns), 2);
    }

    #[test]
    fn empty_matrix() {
        let mut a: Vec<Vec<Rational>> = Vec::new();
        assert!(rref(&mut a).is_empty());
        assert_eq!(nullspace(&[], 3).len(), 3);
    }
}
