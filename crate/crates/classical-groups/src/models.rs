//! Structure isomorphisms of split Clifford algebras: the action on the
//! exterior algebra identifying C(q_2n^h) with a matrix algebra, and the
//! identification of C(q_2n^h) with the even part of C(q_{2n+1}^h).

use crate::clifford::{CliffordAlgebra, CliffordElement, CliffordError};
use crate::matrix::Matrix;
use crate::quadform::QuadraticForm;
use crate::ring::Field;

/// j : C(q_2n^h) -> End(Λ* K^n). Pair i of the hyperbolic form acts by
/// e_{2i} -> wedge with m_i, e_{2i+1} -> contraction against the dual m_i*.
/// Exterior monomials are indexed by subset bitmasks of {0..n-1}.
pub struct ExteriorModel<K: Field> {
    pub algebra: CliffordAlgebra<K>,
    n: usize,
    generator_ops: Vec<Matrix<K>>,
    /// 4^n x 4^n change of basis: column S is the flattened operator of the
    /// Clifford basis element e_S.
    pub iso: Matrix<K>,
}

fn wedge_op<K: Field>(n: usize, i: usize) -> Matrix<K> {
    let d = 1usize << n;
    let mut m = Matrix::zero(d, d);
    for s in 0..d as u32 {
        if s & (1 << i) != 0 {
            continue;
        }
        // move m_i past the earlier factors
        let sign = (s & ((1 << i) - 1)).count_ones() % 2;
        let c = if sign == 0 { K::one() } else { K::one().neg() };
        m[((s | (1 << i)) as usize, s as usize)] = c;
    }
    m
}

fn contraction_op<K: Field>(n: usize, i: usize) -> Matrix<K> {
    let d = 1usize << n;
    let mut m = Matrix::zero(d, d);
    for s in 0..d as u32 {
        if s & (1 << i) == 0 {
            continue;
        }
        let sign = (s & ((1 << i) - 1)).count_ones() % 2;
        let c = if sign == 0 { K::one() } else { K::one().neg() };
        m[((s & !(1 << i)) as usize, s as usize)] = c;
    }
    m
}

impl<K: Field> ExteriorModel<K> {
    /// Builds the model and certifies it: the generator images satisfy the
    /// defining relation on a spanning set, and the induced linear map on
    /// the full algebra is bijective.
    pub fn new(n: usize, bound: usize) -> Result<Self, CliffordError> {
        if n == 0 || n > bound {
            return Err(CliffordError::UnsupportedForm);
        }
        let q: QuadraticForm<K> = QuadraticForm::hyperbolic(2 * n);
        let algebra = CliffordAlgebra::new(q);
        let mut generator_ops = Vec::new();
        for i in 0..n {
            generator_ops.push(wedge_op(n, i));
            generator_ops.push(contraction_op(n, i));
        }
        let model = ExteriorModel { algebra, n, generator_ops, iso: Matrix::zero(0, 0) };
        // j(x)^2 = q(x) Id on the generators and their pairwise sums,
        // which spans the quadratic relation space
        let d = 1usize << n;
        for v in 0..2 * n {
            let jv = &model.generator_ops[v];
            let qv = model.algebra.form().coeff(v, v);
            if jv.mul(jv) != Matrix::identity(d).scale(&qv) {
                return Err(CliffordError::UnsupportedForm);
            }
            for w in v + 1..2 * n {
                let jw = &model.generator_ops[w];
                let x = jv.add(jw);
                let qx = model
                    .algebra
                    .form()
                    .coeff(v, v)
                    .add(&model.algebra.form().coeff(w, w))
                    .add(&model.algebra.form().coeff(v, w));
                if x.mul(&x) != Matrix::identity(d).scale(&qx) {
                    return Err(CliffordError::UnsupportedForm);
                }
            }
        }
        let dim = model.algebra.dim();
        let mut iso = Matrix::zero(dim, dim);
        for s in 0..dim as u32 {
            let op = model.operator_of_basis(s);
            let flat = op.flatten();
            for (r, c) in flat.into_iter().enumerate() {
                iso[(r, s as usize)] = c;
            }
        }
        if iso.inverse().is_none() {
            return Err(CliffordError::UnsupportedForm);
        }
        Ok(ExteriorModel { iso, ..model })
    }

    fn operator_of_basis(&self, mask: u32) -> Matrix<K> {
        let d = 1usize << self.n;
        let mut op = Matrix::identity(d);
        for i in 0..2 * self.n {
            if mask & (1 << i) != 0 {
                op = op.mul(&self.generator_ops[i]);
            }
        }
        op
    }

    /// The operator on Λ* K^n representing a Clifford element.
    pub fn apply(&self, x: &CliffordElement<K>) -> Matrix<K> {
        let d = 1usize << self.n;
        let mut out = Matrix::zero(d, d);
        for (mask, c) in x.terms() {
            out = out.add(&self.operator_of_basis(mask).scale(c));
        }
        out
    }
}

/// The even subalgebra iso C(q_2n^h) ≅ C0(q_{2n+1}^h): generators of the
/// even-rank algebra map to (±generator)·e0 in the odd-rank one, with the
/// minus sign on the dual half of each hyperbolic pair.
pub struct EvenOddIso<K: Field> {
    pub even_algebra: CliffordAlgebra<K>,
    pub odd_algebra: CliffordAlgebra<K>,
    generator_images: Vec<CliffordElement<K>>,
}

impl<K: Field> EvenOddIso<K> {
    pub fn new(n: usize, bound: usize) -> Result<Self, CliffordError> {
        if n == 0 || n > bound {
            return Err(CliffordError::UnsupportedForm);
        }
        let even_algebra: CliffordAlgebra<K> =
            CliffordAlgebra::new(QuadraticForm::hyperbolic(2 * n));
        let odd_algebra: CliffordAlgebra<K> =
            CliffordAlgebra::new(QuadraticForm::hyperbolic(2 * n + 1));
        let e0 = CliffordElement::generator(0);
        let mut generator_images = Vec::new();
        for i in 0..n {
            // pair (e_{2i}, e_{2i+1}) of the even algebra corresponds to
            // the pair (e_{2i+1}, e_{2i+2}) of the odd one
            let m = CliffordElement::generator(2 * i + 1);
            let f = CliffordElement::generator(2 * i + 2);
            generator_images.push(odd_algebra.mul(&m, &e0));
            generator_images.push(odd_algebra.mul(&f, &e0).neg());
        }
        let iso = EvenOddIso { even_algebra, odd_algebra, generator_images };
        // generator relations transport
        for v in 0..2 * n {
            for w in 0..2 * n {
                let lhs = iso.odd_algebra.mul(&iso.generator_images[v], &iso.generator_images[w]);
                let rhs = iso.apply(&iso.even_algebra.basis_product(1 << v, 1 << w));
                if lhs != rhs {
                    return Err(CliffordError::UnsupportedForm);
                }
            }
        }
        // bijectivity onto the even part
        if iso.matrix_onto_even().inverse().is_none() {
            return Err(CliffordError::UnsupportedForm);
        }
        Ok(iso)
    }

    fn image_of_basis(&self, mask: u32) -> CliffordElement<K> {
        let mut out = CliffordElement::one();
        for (i, image) in self.generator_images.iter().enumerate() {
            if mask & (1 << i) != 0 {
                out = self.odd_algebra.mul(&out, image);
            }
        }
        out
    }

    pub fn apply(&self, x: &CliffordElement<K>) -> CliffordElement<K> {
        let mut out = CliffordElement::zero();
        for (mask, c) in x.terms() {
            out = out.add(&self.image_of_basis(mask).scale(c));
        }
        out
    }

    /// Square matrix of the map restricted to even-mask coordinates of the
    /// odd algebra; invertibility is the bijectivity certificate.
    pub fn matrix_onto_even(&self) -> Matrix<K> {
        let dim = self.even_algebra.dim();
        let even_masks: Vec<u32> = (0..self.odd_algebra.dim() as u32)
            .filter(|m| m.count_ones() % 2 == 0)
            .collect();
        assert_eq!(even_masks.len(), dim);
        let mut m = Matrix::zero(dim, dim);
        for s in 0..dim as u32 {
            let image = self.image_of_basis(s);
            debug_assert_eq!(image.parity(), Some(0));
            for (r, em) in even_masks.iter().enumerate() {
                m[(r, s as usize)] = image.coeff(*em);
            }
        }
        m
    }
}

/// The explicit central odd element e0 (2 e1 e2 - 1) ... (2 e_{2n-1} e_{2n} - 1)
/// of C(q_{2n+1}^h), which squares to exactly 1.
pub fn split_odd_center_generator<K: Field>(
    algebra: &CliffordAlgebra<K>,
) -> Result<CliffordElement<K>, CliffordError> {
    let n = algebra.rank();
    if n % 2 != 1 {
        return Err(CliffordError::UnsupportedForm);
    }
    let two = K::from_int(2);
    let mut w = CliffordElement::generator(0);
    for i in 0..(n - 1) / 2 {
        let pair = algebra.basis_product(1 << (2 * i + 1), 1 << (2 * i + 2));
        let factor = pair.scale(&two).sub(&CliffordElement::one());
        w = algebra.mul(&w, &factor);
    }
    Ok(w)
}
