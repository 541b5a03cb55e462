//! Quadratic pairs: an orthogonal involution on a matrix algebra together
//! with the linear functional that remembers the quadratic form in every
//! characteristic.
//!
//! The involution is eta(x) = H^-1 xt H for a symmetric invertible Gram
//! matrix H; the functional f is defined on the eta-symmetric elements and
//! satisfies f(a + eta(a)) = trace(a).

use crate::matrix::{Matrix, Span};
use crate::quadform::{FormError, QuadraticForm};
use crate::ring::Field;

#[derive(Clone)]
pub struct QuadraticPair<K: Field> {
    pub h: Matrix<K>,
    h_inv: Matrix<K>,
    sym_basis: Vec<Matrix<K>>,
    f_values: Vec<K>,
    /// Linear extension of f to the full matrix space: f(x) = sum F_ij x_ij.
    f_ext: Matrix<K>,
    sym_span: Span<K>,
}

impl<K: Field> QuadraticPair<K> {
    fn build(h: Matrix<K>, sym_basis: Vec<Matrix<K>>, f_values: Vec<K>) -> Self {
        assert_eq!(h, h.transpose());
        let h_inv = h.inverse().expect("involution Gram matrix must be invertible");
        let rows: Vec<Vec<K>> = sym_basis.iter().map(|s| s.flatten()).collect();
        let sym_span = Span::new(rows.clone());
        assert_eq!(sym_span.rank, sym_basis.len(), "symmetric basis must be free");
        let a = Matrix::from_fn(rows.len(), h.rows * h.rows, |i, j| rows[i][j].clone());
        let f_flat = a.solve(&f_values).expect("functional values are consistent");
        let n = h.rows;
        let f_ext = Matrix::from_fn(n, n, |i, j| f_flat[i * n + j].clone());
        QuadraticPair { h, h_inv, sym_basis, f_values, f_ext, sym_span }
    }

    pub fn degree(&self) -> usize {
        self.h.rows
    }

    /// eta(x) = H^-1 xt H.
    pub fn involution(&self, x: &Matrix<K>) -> Matrix<K> {
        self.h_inv.mul(&x.transpose()).mul(&self.h)
    }

    pub fn sym_basis(&self) -> &[Matrix<K>] {
        &self.sym_basis
    }

    pub fn f_values(&self) -> &[K] {
        &self.f_values
    }

    pub fn f_extension(&self) -> &Matrix<K> {
        &self.f_ext
    }

    pub fn is_symmetric_element(&self, x: &Matrix<K>) -> bool {
        self.involution(x) == *x && self.sym_span.contains(&x.flatten())
    }

    /// f on a symmetric element. Values outside Sym depend on the chosen
    /// extension and carry no meaning.
    pub fn f_on(&self, x: &Matrix<K>) -> K {
        debug_assert!(self.is_symmetric_element(x));
        let mut acc = K::zero();
        for i in 0..self.degree() {
            for j in 0..self.degree() {
                acc = acc.add(&self.f_ext[(i, j)].mul(&x[(i, j)]));
            }
        }
        acc
    }

    /// Similitude factor: the scalar mu with eta(a) a = mu Id, provided the
    /// product is scalar and f is invariant under conjugation by a.
    pub fn similitude_factor(&self, a: &Matrix<K>) -> Option<K> {
        let p = self.involution(a).mul(a);
        let mu = p[(0, 0)].clone();
        if p != Matrix::identity(self.degree()).scale(&mu) || mu.is_zero() {
            return None;
        }
        let a_inv = a.inverse()?;
        for s in &self.sym_basis {
            let conj = a.mul(s).mul(&a_inv);
            let mut val = K::zero();
            for i in 0..self.degree() {
                for j in 0..self.degree() {
                    val = val.add(&self.f_ext[(i, j)].mul(&conj[(i, j)]));
                }
            }
            if val != self.f_on(s) {
                return None;
            }
        }
        Some(mu)
    }

    /// Orthogonal group through the pair: similitude factor 1.
    pub fn is_orthogonal(&self, a: &Matrix<K>) -> bool {
        self.similitude_factor(a) == Some(K::one())
    }
}

/// The split pair of degree 2n: H interchanges the coordinates of each
/// hyperbolic plane, and f sends each paired diagonal unit sum
/// E_{2i-1,2i-1} + E_{2i,2i} to 1 and the rest of the symmetric basis to 0.
pub fn split_quadratic_pair<K: Field>(n: usize) -> QuadraticPair<K> {
    assert!(n >= 1);
    let m = 2 * n;
    let mut h = Matrix::zero(m, m);
    for i in 0..n {
        h[(2 * i, 2 * i + 1)] = K::one();
        h[(2 * i + 1, 2 * i)] = K::one();
    }
    // eta permutes matrix units: E_ij -> E_{s(j)s(i)} with s the pair swap
    let s = |i: usize| if i % 2 == 0 { i + 1 } else { i - 1 };
    let mut basis = Vec::new();
    let mut values = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let (ti, tj) = (s(j), s(i));
            if (ti, tj) == (i, j) {
                basis.push(Matrix::unit(m, i, j));
                values.push(K::zero());
            } else if (i, j) < (ti, tj) {
                basis.push(Matrix::unit(m, i, j).add(&Matrix::unit(m, ti, tj)));
                // the paired diagonal sums E_{2k,2k} + E_{2k+1,2k+1}
                values.push(if i == j { K::one() } else { K::zero() });
            }
        }
    }
    QuadraticPair::build(h, basis, values)
}

/// The pair attached to a regular even-rank quadratic form: eta is the
/// adjoint involution of the polar Gram matrix, and f is the unique
/// functional with f(m b(m, -)) = q(m).
pub fn pair_from_form<K: Field>(q: &QuadraticForm<K>) -> Result<QuadraticPair<K>, FormError> {
    let m = q.rank();
    if m % 2 != 0 || !q.is_regular() {
        return Err(FormError::NotRegularEven);
    }
    let b = q.polar_gram();
    let phi = |v: &[K], w: &[K]| -> Matrix<K> {
        // v tensor b(w, -): the matrix v (Bw)t
        let bw = b.mul_vec(w);
        Matrix::from_fn(m, m, |i, j| v[i].mul(&bw[j]))
    };
    let basis_vec = |i: usize| -> Vec<K> {
        (0..m).map(|r| if r == i { K::one() } else { K::zero() }).collect()
    };
    let mut basis = Vec::new();
    let mut values = Vec::new();
    for i in 0..m {
        let ei = basis_vec(i);
        basis.push(phi(&ei, &ei));
        values.push(q.evaluate(&ei));
        for j in i + 1..m {
            let ej = basis_vec(j);
            basis.push(phi(&ei, &ej).add(&phi(&ej, &ei)));
            values.push(q.polar(&ei, &ej));
        }
    }
    Ok(QuadraticPair::build(b, basis, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rat, Ring, F2, F3, F5};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn over_f2_the_functional_cuts_the_orthogonal_group_out_of_the_symplectic_group() {
        // the polar form of x0 x1 is alternating, so Gram preservation alone
        // gives all of SL2(F2); the functional condition recovers O(q)
        let q: QuadraticForm<F2> = QuadraticForm::hyperbolic(2);
        let p = pair_from_form(&q).unwrap();
        let mut gram_only = 0;
        let mut orthogonal = Vec::new();
        for bits in 0..16u32 {
            let g: Matrix<F2> =
                Matrix::from_fn(2, 2, |i, j| F2::new((i64::from(bits >> (2 * i + j))) & 1));
            gram_only += (g.inverse().is_some()
                && g.transpose().mul(&q.polar_gram()).mul(&g) == q.polar_gram())
                as usize;
            assert_eq!(p.is_orthogonal(&g), q.is_isometry(&g) && g.inverse().is_some());
            if p.is_orthogonal(&g) {
                orthogonal.push(g);
            }
        }
        assert_eq!(gram_only, 6);
        assert_eq!(orthogonal.len(), 2);
        assert!(orthogonal.contains(&Matrix::identity(2)));
        assert!(orthogonal.contains(&Matrix::from_ints(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn degree_two_split_pair_matches_the_explicit_description() {
        let p: QuadraticPair<Rat> = split_quadratic_pair(1);
        assert_eq!(p.h, Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        let e11_plus_e22 = Matrix::identity(2);
        assert_eq!(p.f_on(&e11_plus_e22), rat(1, 1));
        assert_eq!(p.f_on(&Matrix::from_ints(&[&[0, 1], &[0, 0]])), rat(0, 1));
        assert_eq!(p.f_on(&Matrix::from_ints(&[&[0, 0], &[1, 0]])), rat(0, 1));
    }

    #[test]
    fn f_of_a_plus_involution_of_a_is_the_trace() {
        for n in 1..=3 {
            let p: QuadraticPair<F5> = split_quadratic_pair(n);
            let m = 2 * n;
            for i in 0..m {
                for j in 0..m {
                    let a: Matrix<F5> = Matrix::unit(m, i, j);
                    let s = a.add(&p.involution(&a));
                    assert_eq!(p.f_on(&s), a.trace());
                }
            }
        }
    }

    #[test]
    fn involution_squares_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p: QuadraticPair<F5> = split_quadratic_pair(2);
        for _ in 0..30 {
            let a: Matrix<F5> = Matrix::from_fn(4, 4, |_, _| F5::new(rng.gen_range(0..5)));
            assert_eq!(p.involution(&p.involution(&a)), a);
        }
    }

    #[test]
    fn pair_from_hyperbolic_form_recovers_the_split_pair() {
        for n in 1..=3 {
            let q: QuadraticForm<Rat> = QuadraticForm::hyperbolic(2 * n);
            let from_form = pair_from_form(&q).unwrap();
            let split: QuadraticPair<Rat> = split_quadratic_pair(n);
            assert_eq!(from_form.h, split.h);
            // same functional: compare on the split symmetric basis
            for s in split.sym_basis() {
                assert_eq!(from_form.f_on(s), split.f_on(s));
            }
        }
    }

    #[test]
    fn f_recovers_the_quadratic_form_on_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for m in [4, 6] {
            let q: QuadraticForm<Rat> = QuadraticForm::hyperbolic(m);
            let p = pair_from_form(&q).unwrap();
            let b = q.polar_gram();
            for _ in 0..100 {
                let v: Vec<Rat> = (0..m).map(|_| rat(rng.gen_range(-9..=9), 1)).collect();
                let bv = b.mul_vec(&v);
                let phi = Matrix::from_fn(m, m, |i, j| v[i].mul(&bv[j]));
                assert_eq!(p.f_on(&phi), q.evaluate(&v));
            }
        }
    }

    #[test]
    fn binary_pair_over_f3_satisfies_the_defining_property_on_all_vectors() {
        // [1,1] is irregular mod 3 (polar determinant 3), so use [1,2]
        let q: QuadraticForm<F3> = QuadraticForm::binary(F3::one(), F3::from_int(2));
        let p = pair_from_form(&q).unwrap();
        let b = q.polar_gram();
        for x in 0..3i64 {
            for y in 0..3i64 {
                let v = vec![F3::from_int(x), F3::from_int(y)];
                let bv = b.mul_vec(&v);
                let phi = Matrix::from_fn(2, 2, |i, j| v[i].mul(&bv[j]));
                assert_eq!(p.f_on(&phi), q.evaluate(&v));
            }
        }
    }

    #[test]
    fn membership_via_pair_agrees_with_membership_via_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(4);
        let p = pair_from_form(&q).unwrap();
        let mut members = 0;
        for _ in 0..400 {
            let g: Matrix<F3> = Matrix::from_fn(4, 4, |_, _| F3::new(rng.gen_range(0..3)));
            let via_form = q.is_isometry(&g) && g.inverse().is_some();
            let via_pair = p.is_orthogonal(&g);
            assert_eq!(via_form, via_pair);
            members += via_form as usize;
        }
        assert!(members >= 1, "sample should hit at least one isometry");
        // guaranteed members: reflections
        for v in [[1, 1, 0, 0], [1, 0, 1, 1], [0, 1, 1, 1]] {
            let v: Vec<F3> = v.iter().map(|&c| F3::from_int(c)).collect();
            let tau = q.reflection(&v).unwrap();
            assert!(p.is_orthogonal(&tau));
        }
    }

    #[test]
    fn similitude_factors() {
        let p: QuadraticPair<Rat> = split_quadratic_pair(2);
        // lambda Id scales by lambda^2
        let two = Matrix::identity(4).scale(&rat(2, 1));
        assert_eq!(p.similitude_factor(&two), Some(rat(4, 1)));
        // diag(2,1,2,1) rescales each hyperbolic plane by 2
        let d = Matrix::diagonal(&[rat(2, 1), rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert_eq!(p.similitude_factor(&d), Some(rat(2, 1)));
        // orthogonal elements have factor 1
        let q: QuadraticForm<Rat> = QuadraticForm::hyperbolic(4);
        let tau = q
            .reflection(&[rat(1, 1), rat(1, 1), rat(0, 1), rat(2, 1)])
            .unwrap();
        assert_eq!(p.similitude_factor(&tau), Some(rat(1, 1)));
        // multiplicative
        let prod = d.mul(&two).mul(&tau);
        assert_eq!(p.similitude_factor(&prod), Some(rat(8, 1)));
        // non-members rejected
        let mut bad = Matrix::identity(4);
        bad[(0, 1)] = rat(1, 1);
        assert_eq!(p.similitude_factor(&bad), None);
    }
}
