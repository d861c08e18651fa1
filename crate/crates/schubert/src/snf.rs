//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The invariant factors `d_1 | d_2 | ...` of an integer matrix: the nonzero
/// diagonal entries of its Smith normal form, as positive integers.
pub fn invariant_factors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, k) else {
            break;
        };
        a.swap(k, pi);
        swap_cols(&mut a, k, pj);
        loop {
            if clear_column(&mut a, k) {
                continue;
            }
            if clear_row(&mut a, k) {
                continue;
            }
            // the pivot must divide everything below and to the right
            if let Some(i) = nondivisible_row(&a, k) {
                let folded: Vec<BigInt> = a[i][k..].to_vec();
                for (j, add) in (k..cols).zip(folded) {
                    a[k][j] += add;
                }
                continue;
            }
            break;
        }
        factors.push(a[k][k].abs());
        k += 1;
    }
    factors
}

/// Position of a smallest-magnitude nonzero entry of the trailing submatrix.
fn smallest_nonzero(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, entry) in row.iter().enumerate().skip(k) {
            if entry.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= entry.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Euclidean reduction of column `k` below the pivot. Returns `true` when a
/// strictly smaller remainder was swapped into the pivot slot.
fn clear_column(a: &mut [Vec<BigInt>], k: usize) -> bool {
    let cols = a[0].len();
    for i in k + 1..a.len() {
        if a[i][k].is_zero() {
            continue;
        }
        let q = &a[i][k] / &a[k][k];
        if !q.is_zero() {
            let pivot_row: Vec<BigInt> = a[k][k..].to_vec();
            for (j, p) in (k..cols).zip(pivot_row) {
                let sub = &q * &p;
                a[i][j] -= sub;
            }
        }
        if !a[i][k].is_zero() {
            a.swap(i, k);
            return true;
        }
    }
    false
}

/// Euclidean reduction of row `k` right of the pivot; the column analogue of
/// [`clear_column`].
fn clear_row(a: &mut [Vec<BigInt>], k: usize) -> bool {
    let cols = a[0].len();
    for j in k + 1..cols {
        if a[k][j].is_zero() {
            continue;
        }
        let q = &a[k][j] / &a[k][k];
        if !q.is_zero() {
            for row in a.iter_mut().skip(k) {
                let sub = &q * &row[k];
                row[j] -= sub;
            }
        }
        if !a[k][j].is_zero() {
            swap_cols(a, j, k);
            return true;
        }
    }
    false
}

fn nondivisible_row(a: &[Vec<BigInt>], k: usize) -> Option<usize> {
    let pivot = &a[k][k];
    for (i, row) in a.iter().enumerate().skip(k + 1) {
        if row.iter().skip(k + 1).any(|e| !(e % pivot).is_zero()) {
            return Some(i);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&e| BigInt::from(e)).collect())
            .collect()
    }

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        invariant_factors(matrix(rows))
            .into_iter()
            .map(|f| i64::try_from(f).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_cases() {
        assert_eq!(factors(&[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[&[6]]), vec![6]);
    }

    #[test]
    fn two_by_two() {
        assert_eq!(factors(&[&[2, 4], &[6, 8]]), vec![2, 4]);
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    #[test]
    fn rectangular() {
        assert_eq!(factors(&[&[1, 0, 1]]), vec![1]);
        assert_eq!(factors(&[&[2], &[4], &[6]]), vec![2]);
        assert_eq!(factors(&[&[1, 1, 0], &[0, 1, 1]]), vec![1, 1]);
    }

    #[test]
    fn four_by_four_with_divisibility_chain() {
        assert_eq!(
            factors(&[
                &[-6, 111, -36, 6],
                &[5, -672, 210, 74],
                &[0, -255, 81, 24],
                &[-7, 255, -81, -10],
            ]),
            vec![1, 3, 21]
        );
    }

    #[test]
    fn negative_entries_normalize() {
        assert_eq!(factors(&[&[-3]]), vec![3]);
        assert_eq!(factors(&[&[0, -2], &[-2, 0]]), vec![2, 2]);
    }
}
