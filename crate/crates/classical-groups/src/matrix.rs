//! Dense matrices over an arbitrary ring, with exact elimination over
//! fields: reduced row echelon form, rank, kernel bases, solving, and a
//! division-free determinant usable over any commutative ring.

use crate::ring::{Field, Ring};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R: Ring> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| R::from_int(v)).collect())
                .collect(),
        )
    }

    /// Elementary matrix unit E_{ij} of size n.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        m[(i, j)] = R::one();
        m
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let mut m = Matrix::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].add(&other[(i, j)])
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc.add(&self[(i, k)].mul(&other[(k, j)]));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self[(i, k)].mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let mut acc = R::zero();
        for i in 0..self.rows {
            acc = acc.add(&self[(i, i)]);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    /// Flattened row-major coordinates.
    pub fn flatten(&self) -> Vec<R> {
        self.data.clone()
    }

    /// Determinant by dynamic programming over column subsets
    /// (expansion along rows). Division-free, so valid over any
    /// commutative ring; O(n·2ⁿ), intended for n ≤ 12.
    pub fn det(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return R::one();
        }
        assert!(n <= 16, "determinant size out of range");
        // f[S] = minor of the first popcount(S) rows on column set S
        let mut f = vec![R::zero(); 1 << n];
        f[0] = R::one();
        for s in 0usize..(1 << n) {
            if f[s].is_zero() {
                continue;
            }
            let i = s.count_ones() as usize; // next row to expand
            if i == n {
                continue;
            }
            let mut sign_flips = 0;
            for j in 0..n {
                if s & (1 << j) != 0 {
                    sign_flips += 1;
                    continue;
                }
                if self[(i, j)].is_zero() {
                    continue;
                }
                let term = if (i - sign_flips) % 2 == 0 {
                    f[s].mul(&self[(i, j)])
                } else {
                    f[s].mul(&self[(i, j)]).neg()
                };
                let t = s | (1 << j);
                f[t] = f[t].add(&term);
            }
        }
        f[(1 << n) - 1].clone()
    }

    /// Inverse over any commutative ring with unit determinant:
    /// adjugate scaled by det^-1. None when det is not a unit.
    pub fn inverse_ring(&self) -> Option<Matrix<R>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let det_inv = self.det().inv()?;
        let mut adj = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                    let rr = if r < j { r } else { r + 1 };
                    let cc = if c < i { c } else { c + 1 };
                    self[(rr, cc)].clone()
                });
                let mut m = minor.det();
                if (i + j) % 2 == 1 {
                    m = m.neg();
                }
                adj[(i, j)] = m.mul(&det_inv);
            }
        }
        Some(adj)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

impl<R: Ring> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R: Ring> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

fn fmt_rows<R: Ring>(m: &Matrix<R>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for i in 0..m.rows {
        write!(f, "[")?;
        for j in 0..m.cols {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m[(i, j)])?;
        }
        writeln!(f, "]")?;
    }
    Ok(())
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(self, f)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows(self, f)
    }
}

/// Result of a reduced-row-echelon computation over a field.
pub struct Rref<R: Ring> {
    pub mat: Matrix<R>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<R: Field> Matrix<R> {
    pub fn rref(&self) -> Rref<R> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m[(r, j)].clone();
                m[(r, j)] = m[(p, j)].clone();
                m[(p, j)] = tmp;
            }
            let piv_inv = m[(r, c)].inv().expect("field pivot");
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)].mul(&piv_inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let delta = factor.mul(&m[(r, j)]);
                        m[(i, j)] = m[(i, j)].sub(&delta);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            mat: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel {x : Ax = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<R>> {
        let rref = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in rref.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![R::zero(); self.cols];
            x[free] = R::one();
            for (r, &c) in rref.pivots.iter().enumerate() {
                x[c] = rref.mat[(r, free)].neg();
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of Ax = b, if any.
    pub fn solve(&self, b: &[R]) -> Option<Vec<R>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let rref = aug.rref();
        if rref.pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![R::zero(); self.cols];
        for (r, &c) in rref.pivots.iter().enumerate() {
            x[c] = rref.mat[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<R>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = R::one();
        }
        let rref = aug.rref();
        // invertible iff the pivots land exactly on the left block
        if !(0..n).all(|j| rref.pivots.get(j) == Some(&j)) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| rref.mat[(i, n + j)].clone()))
    }
}

/// Row space membership helper: a reduced basis one can test vectors
/// against, and express them in terms of the original spanning set.
#[derive(Clone)]
pub struct Span<R: Field> {
    original: Matrix<R>, // spanning vectors as rows
    rref: Matrix<R>,
    pivots: Vec<usize>,
    pub rank: usize,
}

impl<R: Field> Span<R> {
    pub fn new(vectors: Vec<Vec<R>>) -> Self {
        let original = Matrix::from_rows(vectors);
        let r = original.rref();
        Span {
            original,
            rref: r.mat,
            pivots: r.pivots,
            rank: r.rank,
        }
    }

    pub fn dim(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: &[R]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// v minus its projection onto the span, via pivot elimination.
    pub fn reduce(&self, v: &[R]) -> Vec<R> {
        let mut v = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            if !v[c].is_zero() {
                let factor = v[c].clone();
                for j in 0..v.len() {
                    let delta = factor.mul(&self.rref[(r, j)]);
                    v[j] = v[j].sub(&delta);
                }
            }
        }
        v
    }

    /// Coordinates of v in terms of the original spanning vectors
    /// (requires those to be independent).
    pub fn coordinates(&self, v: &[R]) -> Option<Vec<R>> {
        assert_eq!(self.original.rows, self.rank, "spanning set not free");
        self.original.transpose().solve(v)
    }

    pub fn equals(&self, other: &Span<R>) -> bool {
        self.rank == other.rank
            && (0..other.original.rows).all(|i| self.contains(&other.original.row(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, F5, Rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rref_kernel_frozen_example() {
        // [[1,2],[2,4]] has rank 1; kernel spanned by (-2, 1)
        let m: Matrix<Rat> = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![rat(-2, 1), rat(1, 1)]]);
        assert!(m.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn determinant_matches_elimination_over_rationals() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..6);
            let m: Matrix<Rat> =
                Matrix::from_fn(n, n, |_, _| rat(rng.gen_range(-4..5), 1));
            let d = m.det();
            // rank-based singularity check agrees
            assert_eq!(d.is_zero(), m.rank() < n);
            if !d.is_zero() {
                let inv = m.inverse().unwrap();
                assert!(m.mul(&inv).is_identity());
                // det multiplicative against a random mate
                let w: Matrix<Rat> =
                    Matrix::from_fn(n, n, |_, _| rat(rng.gen_range(-3..4), 1));
                assert_eq!(m.mul(&w).det(), d.mul(&w.det()));
            }
        }
    }

    #[test]
    fn solve_and_kernel_over_f5() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..40 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let m: Matrix<F5> =
                Matrix::from_fn(rows, cols, |_, _| F5::new(rng.gen_range(0..5)));
            for k in m.kernel_basis() {
                assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
            }
            let x: Vec<F5> = (0..cols).map(|_| F5::new(rng.gen_range(0..5))).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).expect("consistent by construction");
            assert_eq!(m.mul_vec(&sol), b);
            assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        }
    }

    #[test]
    fn ring_inverse_agrees_with_field_inverse_and_handles_tangents() {
        use crate::ring::{Int, Tangent};
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..25 {
            let m: Matrix<F5> = Matrix::from_fn(3, 3, |_, _| F5::new(rng.gen_range(0..5)));
            assert_eq!(m.inverse(), m.inverse_ring());
        }
        // Id + tB inverts to Id - tB since t^2 = 0
        let b: Matrix<Int> = Matrix::from_ints(&[&[2, 7], &[-3, 4]]);
        let m: Matrix<Tangent<Int>> = Matrix::from_fn(2, 2, |i, j| {
            let base = if i == j { Int::from(1) } else { Int::from(0) };
            Tangent::new(base, vec![b[(i, j)].clone()])
        });
        let inv = m.inverse_ring().unwrap();
        assert!(m.mul(&inv).is_identity());
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(inv[(i, j)].lin_coeff(0), b[(i, j)].neg());
            }
        }
    }

    #[test]
    fn singular_matrices_have_no_inverse() {
        // a zero row must not be masked by the augmented identity block
        let m: Matrix<F5> = Matrix::from_ints(&[&[0, 0], &[2, 1]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
        let m: Matrix<F5> = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn span_membership() {
        let s = Span::new(vec![
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[rat(2, 1), rat(3, 1), rat(5, 1)]));
        assert!(!s.contains(&[rat(0, 1), rat(0, 1), rat(1, 1)]));
        let c = s.coordinates(&[rat(2, 1), rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(c, vec![rat(2, 1), rat(3, 1)]);
    }
}
