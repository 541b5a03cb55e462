//! Smith normal form over the integers, with the unimodular row and
//! column transforms tracked so callers can verify L·A·R = D exactly.
//! Pivot selection: smallest nonzero absolute value in the remaining
//! block, row-major on ties. Divisors are normalized nonnegative with
//! d1 | d2 | ... .

use crate::matrix::Matrix;
use crate::ring::Int;
use num::{Signed, Zero};

pub struct Snf {
    pub left: Matrix<Int>,
    pub diag: Matrix<Int>,
    pub right: Matrix<Int>,
    /// Diagonal entries, including any trailing zeros.
    pub divisors: Vec<Int>,
}

/// Invariant factors greater than one: the canonical decomposition of
/// the finite part of coker(A) as a product of cyclic groups.
pub fn invariant_factors(a: &Matrix<Int>) -> Vec<Int> {
    smith_normal_form(a)
        .divisors
        .into_iter()
        .filter(|d| d > &Int::from(1))
        .collect()
}

pub fn smith_normal_form(a: &Matrix<Int>) -> Snf {
    let mut m = a.clone();
    let mut left = Matrix::<Int>::identity(a.rows);
    let mut right = Matrix::<Int>::identity(a.cols);
    let steps = a.rows.min(a.cols);

    for t in 0..steps {
        loop {
            let Some((pi, pj)) = pick_pivot(&m, t) else {
                break; // block is zero
            };
            swap_rows(&mut m, &mut left, t, pi);
            swap_cols(&mut m, &mut right, t, pj);

            // clear column t under the pivot, and row t right of it
            let mut dirty = false;
            for i in (t + 1)..m.rows {
                if !m[(i, t)].is_zero() {
                    let q = div_round(&m[(i, t)], &m[(t, t)]);
                    row_sub(&mut m, &mut left, i, t, &q);
                    dirty = dirty || !m[(i, t)].is_zero();
                }
            }
            for j in (t + 1)..m.cols {
                if !m[(t, j)].is_zero() {
                    let q = div_round(&m[(t, j)], &m[(t, t)]);
                    col_sub(&mut m, &mut right, j, t, &q);
                    dirty = dirty || !m[(t, j)].is_zero();
                }
            }
            if dirty {
                continue; // remainders became new, smaller pivot candidates
            }

            // pivot must divide the rest of the block
            let offender = (t + 1..m.rows)
                .flat_map(|i| (t + 1..m.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&m[(i, j)] % &m[(t, t)]).is_zero());
            match offender {
                Some((i, _)) => {
                    // fold the offending row in and re-reduce
                    row_sub(&mut m, &mut left, t, i, &Int::from(-1));
                }
                None => break,
            }
        }
    }

    // normalize signs
    for t in 0..steps {
        if m[(t, t)].is_negative() {
            negate_row(&mut m, &mut left, t);
        }
    }

    let divisors = (0..steps).map(|t| m[(t, t)].clone()).collect();
    Snf {
        left,
        diag: m,
        right,
        divisors,
    }
}

fn pick_pivot(m: &Matrix<Int>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            if m[(i, j)].is_zero() {
                continue;
            }
            match &best {
                Some((bi, bj)) if m[(*bi, *bj)].abs() <= m[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Quotient that minimizes the remainder's absolute value.
fn div_round(a: &Int, b: &Int) -> Int {
    let q = a / b;
    let r = a - &q * b;
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + Int::from(1)
        } else {
            q - Int::from(1)
        }
    } else {
        q
    }
}

fn swap_rows(m: &mut Matrix<Int>, left: &mut Matrix<Int>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
    for j in 0..left.cols {
        let tmp = left[(a, j)].clone();
        left[(a, j)] = left[(b, j)].clone();
        left[(b, j)] = tmp;
    }
}

fn swap_cols(m: &mut Matrix<Int>, right: &mut Matrix<Int>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        let tmp = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = tmp;
    }
    for i in 0..right.rows {
        let tmp = right[(i, a)].clone();
        right[(i, a)] = right[(i, b)].clone();
        right[(i, b)] = tmp;
    }
}

/// row_i -= q * row_k
fn row_sub(m: &mut Matrix<Int>, left: &mut Matrix<Int>, i: usize, k: usize, q: &Int) {
    for j in 0..m.cols {
        let delta = q * &m[(k, j)];
        m[(i, j)] = &m[(i, j)] - delta;
    }
    for j in 0..left.cols {
        let delta = q * &left[(k, j)];
        left[(i, j)] = &left[(i, j)] - delta;
    }
}

/// col_j -= q * col_k
fn col_sub(m: &mut Matrix<Int>, right: &mut Matrix<Int>, j: usize, k: usize, q: &Int) {
    for i in 0..m.rows {
        let delta = q * &m[(i, k)];
        m[(i, j)] = &m[(i, j)] - delta;
    }
    for i in 0..right.rows {
        let delta = q * &right[(i, k)];
        right[(i, j)] = &right[(i, j)] - delta;
    }
}

fn negate_row(m: &mut Matrix<Int>, left: &mut Matrix<Int>, i: usize) {
    for j in 0..m.cols {
        m[(i, j)] = -m[(i, j)].clone();
    }
    for j in 0..left.cols {
        left[(i, j)] = -left[(i, j)].clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;
    use num::Integer;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check(a: &Matrix<Int>) -> Snf {
        let s = smith_normal_form(a);
        assert_eq!(s.left.mul(a).mul(&s.right), s.diag);
        assert_eq!(s.left.det().abs(), int(1));
        assert_eq!(s.right.det().abs(), int(1));
        // off-diagonal zero, chain divisibility, nonnegative
        for i in 0..s.diag.rows {
            for j in 0..s.diag.cols {
                if i != j {
                    assert!(s.diag[(i, j)].is_zero());
                }
            }
        }
        for w in s.divisors.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        s
    }

    #[test]
    fn diag_4_6_gives_2_12() {
        // gcd(4,6) = 2 and the product of divisors matches |det| = 24
        let a: Matrix<Int> = Matrix::from_ints(&[&[4, 0], &[0, 6]]);
        let s = check(&a);
        assert_eq!(s.divisors, vec![int(2), int(12)]);
        assert_eq!(&s.divisors[0] * &s.divisors[1], a.det().abs());
        assert_eq!(s.divisors[0], int(4).gcd(&int(6)));
    }

    #[test]
    fn frozen_3x3_gives_1_1_4() {
        // gcd of entries is 1, gcd of 2x2 minors is 1, |det| = 4
        let a: Matrix<Int> = Matrix::from_ints(&[&[0, 0, 2], &[2, 1, 0], &[0, 1, -1]]);
        let mut minor_gcd = int(0);
        for rows in [[0, 1], [0, 2], [1, 2]] {
            for cols in [[0, 1], [0, 2], [1, 2]] {
                let m2 = Matrix::from_fn(2, 2, |i, j| a[(rows[i], cols[j])].clone());
                minor_gcd = minor_gcd.gcd(&m2.det());
            }
        }
        assert_eq!(minor_gcd, int(1));
        assert_eq!(a.det().abs(), int(4));
        let s = check(&a);
        assert_eq!(s.divisors, vec![int(1), int(1), int(4)]);
    }

    #[test]
    fn random_matrices_reduce_correctly() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..120 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..5);
            let a: Matrix<Int> =
                Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-9..10)));
            let s = check(&a);
            if rows == cols && !a.det().is_zero() {
                let prod = s
                    .divisors
                    .iter()
                    .fold(int(1), |acc, d| acc * d);
                assert_eq!(prod, a.det().abs());
            }
            // d1 is the gcd of all entries
            let g = a.entries().fold(int(0), |acc, e| acc.gcd(e));
            if !g.is_zero() {
                assert_eq!(s.divisors[0], g);
            }
        }
    }
}
