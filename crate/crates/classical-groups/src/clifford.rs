//! Clifford algebra of a quadratic form on a free module.
//!
//! Basis elements are indexed by subset bitmasks: `e_S = e_{i1} ... e_{ik}`
//! with indices increasing left to right. All products normalize to this
//! order through the two defining relations
//!   `e_i e_i = q(e_i)`,   `e_j e_i = b(e_i, e_j) - e_i e_j`  (i < j).

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::matrix::{Matrix, Span};
use crate::quadform::QuadraticForm;
use crate::ring::{Field, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("element is not a member of the Clifford group")]
    NotGammaMember,
    #[error("product is not a scalar")]
    NotScalar,
    #[error("matrix does not preserve the form")]
    NotIsometry,
    #[error("operation requires a regular form of even rank")]
    NotRegularEven,
    #[error("form is outside the supported class for this operation")]
    UnsupportedForm,
    #[error("center has an unexpected dimension")]
    CenterDimension,
    #[error("squareness is not decidable over this field")]
    SquaresUndecidable,
}

/// Element of a Clifford algebra: subset bitmask -> nonzero coefficient.
/// The map stores no zero entries, so equality is coefficientwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CliffordElement<R: Ring> {
    coeffs: BTreeMap<u32, R>,
}

impl<R: Ring> CliffordElement<R> {
    pub fn zero() -> Self {
        CliffordElement { coeffs: BTreeMap::new() }
    }

    pub fn scalar(c: R) -> Self {
        Self::from_terms([(0u32, c)])
    }

    pub fn one() -> Self {
        Self::scalar(R::one())
    }

    pub fn generator(i: usize) -> Self {
        Self::from_terms([(1u32 << i, R::one())])
    }

    pub fn basis_element(mask: u32) -> Self {
        Self::from_terms([(mask, R::one())])
    }

    pub fn from_vector(v: &[R]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (1u32 << i, c.clone())))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, R)>) -> Self {
        let mut coeffs: BTreeMap<u32, R> = BTreeMap::new();
        for (mask, c) in terms {
            let entry = coeffs.entry(mask).or_insert_with(R::zero);
            *entry = entry.add(&c);
            if entry.is_zero() {
                coeffs.remove(&mask);
            }
        }
        CliffordElement { coeffs }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &R)> + '_ {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u32) -> R {
        self.coeffs.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(m, x)| (*m, x.mul(c))))
    }

    pub fn scalar_part(&self) -> R {
        self.coeff(0)
    }

    /// `Some(c)` iff the element is the scalar `c`.
    pub fn as_scalar(&self) -> Option<R> {
        if self.coeffs.keys().all(|m| *m == 0) {
            Some(self.scalar_part())
        } else {
            None
        }
    }

    /// Parity shared by all terms; `None` for mixed elements. Zero counts
    /// as even.
    pub fn parity(&self) -> Option<u8> {
        let mut parities = self.coeffs.keys().map(|m| (m.count_ones() % 2) as u8);
        let first = match parities.next() {
            None => return Some(0),
            Some(p) => p,
        };
        parities.all(|p| p == first).then_some(first)
    }

    pub fn even_part(&self) -> Self {
        CliffordElement {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.count_ones() % 2 == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn odd_part(&self) -> Self {
        self.sub(&self.even_part())
    }

    /// Grade involution: e_S -> (-1)^{|S|} e_S.
    pub fn grade_involution(&self) -> Self {
        CliffordElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, c)| (*m, if m.count_ones() % 2 == 0 { c.clone() } else { c.neg() }))
                .collect(),
        }
    }

    /// `Some(v)` iff the element lies in the span of the generators.
    pub fn vector_part(&self, n: usize) -> Option<Vec<R>> {
        if self.coeffs.keys().any(|m| m.count_ones() != 1) {
            return None;
        }
        Some((0..n).map(|i| self.coeff(1u32 << i)).collect())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<R> {
        let mut out = vec![R::zero(); dim];
        for (m, c) in &self.coeffs {
            out[*m as usize] = c.clone();
        }
        out
    }

    pub fn from_dense(v: &[R]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(m, c)| (m as u32, c.clone())))
    }
}

impl<R: Ring> fmt::Display for CliffordElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mask, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *mask == 0 {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}·")?;
            }
            for i in 0..32 {
                if mask & (1 << i) != 0 {
                    write!(f, "e{i}")?;
                }
            }
        }
        Ok(())
    }
}

pub struct CliffordAlgebra<R: Ring> {
    q: QuadraticForm<R>,
    polar: Matrix<R>,
}

impl<R: Ring> CliffordAlgebra<R> {
    pub fn new(q: QuadraticForm<R>) -> Self {
        assert!(q.rank() <= 20, "rank too large for bitmask basis");
        let polar = q.polar_gram();
        CliffordAlgebra { q, polar }
    }

    pub fn rank(&self) -> usize {
        self.q.rank()
    }

    /// Dimension 2^n as a free module.
    pub fn dim(&self) -> usize {
        1usize << self.q.rank()
    }

    pub fn form(&self) -> &QuadraticForm<R> {
        &self.q
    }

    fn gen_square(&self, i: usize) -> R {
        self.q.coeff(i, i)
    }

    /// e_S * e_i as a list of (mask, coefficient) terms.
    fn basis_times_gen(&self, mask: u32, i: usize) -> Vec<(u32, R)> {
        let bit = 1u32 << i;
        let above = (mask >> (i + 1)) << (i + 1);
        if above == 0 {
            return if mask & bit == 0 {
                vec![(mask | bit, R::one())]
            } else {
                vec![(mask & !bit, self.gen_square(i))]
            };
        }
        // pull e_i left through the largest generator e_u of S
        let u = (31 - above.leading_zeros()) as usize;
        let rest = mask & !(1u32 << u);
        let mut out = Vec::new();
        let b = self.polar[(i, u)].clone();
        if !b.is_zero() {
            out.push((rest, b));
        }
        for (m, c) in self.basis_times_gen(rest, i) {
            debug_assert_eq!(m >> u, 0);
            out.push((m | (1u32 << u), c.neg()));
        }
        out
    }

    pub fn basis_product(&self, s: u32, t: u32) -> CliffordElement<R> {
        let mut cur = vec![(s, R::one())];
        for i in 0..self.rank() {
            if t & (1u32 << i) == 0 {
                continue;
            }
            let mut next = Vec::new();
            for (mask, c) in &cur {
                for (m2, c2) in self.basis_times_gen(*mask, i) {
                    next.push((m2, c.mul(&c2)));
                }
            }
            cur = next;
        }
        CliffordElement::from_terms(cur)
    }

    pub fn mul(&self, a: &CliffordElement<R>, b: &CliffordElement<R>) -> CliffordElement<R> {
        let mut terms = Vec::new();
        for (s, cs) in a.terms() {
            for (t, ct) in b.terms() {
                let c = cs.mul(ct);
                for (m, k) in self.basis_product(s, t).terms() {
                    terms.push((m, k.mul(&c)));
                }
            }
        }
        CliffordElement::from_terms(terms)
    }

    pub fn commutator(&self, a: &CliffordElement<R>, b: &CliffordElement<R>) -> CliffordElement<R> {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Standard involution: the anti-automorphism with sigma(e_i) = -e_i.
    pub fn sigma(&self, x: &CliffordElement<R>) -> CliffordElement<R> {
        let mut out = CliffordElement::zero();
        for (mask, c) in x.terms() {
            // sigma(e_{i1}...e_{ik}) = (-e_{ik})...(-e_{i1})
            let mut prod = CliffordElement::one();
            for i in (0..self.rank()).rev() {
                if mask & (1u32 << i) != 0 {
                    prod = self.mul(&prod, &CliffordElement::generator(i)).neg();
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// The algebra map induced by an isometry g: e_i -> g(e_i), extended
    /// multiplicatively.
    pub fn apply_isometry(&self, g: &Matrix<R>, x: &CliffordElement<R>) -> CliffordElement<R> {
        let images: Vec<CliffordElement<R>> =
            (0..self.rank()).map(|i| CliffordElement::from_vector(&g.col(i))).collect();
        let mut out = CliffordElement::zero();
        for (mask, c) in x.terms() {
            let mut prod = CliffordElement::one();
            for (i, image) in images.iter().enumerate() {
                if mask & (1u32 << i) != 0 {
                    prod = self.mul(&prod, image);
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Matrix of y -> x*y on the bitmask basis.
    pub fn left_mul_matrix(&self, x: &CliffordElement<R>) -> Matrix<R> {
        let d = self.dim();
        let mut m = Matrix::zero(d, d);
        for t in 0..d as u32 {
            let col = self.mul(x, &CliffordElement::basis_element(t));
            for (mask, c) in col.terms() {
                m[(mask as usize, t as usize)] = c.clone();
            }
        }
        m
    }
}

/// Outcome of the Pin/Spin membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PinSpin {
    NotMember,
    PinOnly,
    Spin,
}

/// Quadratic invariant of the even center: z satisfies
/// z^2 + c1 z + c0 = 0, and `split` records whether the roots are rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArfInvariant<K: Field> {
    pub split: bool,
    pub min_poly: (K, K),
}

/// `value` is the canonical square-class representative of `raw_square`,
/// which is the exact square of the returned center generator. Only the
/// class is intrinsic: rescaling the generator moves `raw_square` by a
/// square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDeterminant<K: Field> {
    pub value: K,
    pub raw_square: K,
    pub center_generator: CliffordElement<K>,
}

impl<K: Field> CliffordAlgebra<K> {
    /// Inverse by solving x*y = 1 in the 2^n-dimensional module; a right
    /// inverse is automatically two-sided here.
    pub fn inverse(&self, x: &CliffordElement<K>) -> Option<CliffordElement<K>> {
        let mut target = vec![K::zero(); self.dim()];
        target[0] = K::one();
        let y = self.left_mul_matrix(x).solve(&target)?;
        let y = CliffordElement::from_dense(&y);
        debug_assert!(self.mul(&y, x) == CliffordElement::one());
        Some(y)
    }

    /// Basis of the full center: solutions of [x, e_i] = 0 for all i.
    pub fn center_basis(&self) -> Vec<CliffordElement<K>> {
        let d = self.dim();
        let n = self.rank();
        let mut sys = Matrix::zero(n * d, d);
        for t in 0..d as u32 {
            let et = CliffordElement::basis_element(t);
            for i in 0..n {
                let ei = CliffordElement::generator(i);
                let col = self.commutator(&et, &ei);
                for (mask, c) in col.terms() {
                    sys[(i * d + mask as usize, t as usize)] = c.clone();
                }
            }
        }
        sys.kernel_basis()
            .into_iter()
            .map(|v| CliffordElement::from_dense(&v))
            .collect()
    }

    /// Basis of the center of the even part: even solutions of
    /// [x, e_i e_j] = 0 for all i < j (those products generate C0).
    pub fn even_center_basis(&self) -> Vec<CliffordElement<K>> {
        let d = self.dim();
        let n = self.rank();
        let even_masks: Vec<u32> = (0..d as u32).filter(|m| m.count_ones() % 2 == 0).collect();
        let pairs: Vec<CliffordElement<K>> = (0..n)
            .flat_map(|i| {
                (i + 1..n).map(move |j| (i, j))
            })
            .map(|(i, j)| {
                self.mul(&CliffordElement::generator(i), &CliffordElement::generator(j))
            })
            .collect();
        let mut sys = Matrix::zero(pairs.len() * d, even_masks.len());
        for (t_idx, t) in even_masks.iter().enumerate() {
            let et = CliffordElement::basis_element(*t);
            for (p_idx, p) in pairs.iter().enumerate() {
                let col = self.commutator(&et, p);
                for (mask, c) in col.terms() {
                    sys[(p_idx * d + mask as usize, t_idx)] = c.clone();
                }
            }
        }
        sys.kernel_basis()
            .into_iter()
            .map(|v| {
                CliffordElement::from_terms(
                    v.into_iter().enumerate().map(|(idx, c)| (even_masks[idx], c)),
                )
            })
            .collect()
    }

    /// Clifford group membership: homogeneous, invertible, and conjugation
    /// preserves the span of the generators.
    pub fn gamma_membership(&self, x: &CliffordElement<K>) -> bool {
        self.conjugation_matrix(x).is_some()
    }

    fn conjugation_matrix(&self, x: &CliffordElement<K>) -> Option<Matrix<K>> {
        if x.is_zero() || x.parity().is_none() {
            return None;
        }
        let x_inv = self.inverse(x)?;
        let n = self.rank();
        let mut a = Matrix::zero(n, n);
        for i in 0..n {
            let conj = self.mul(&self.mul(x, &CliffordElement::generator(i)), &x_inv);
            let col = conj.vector_part(n)?;
            for r in 0..n {
                a[(r, i)] = col[r].clone();
            }
        }
        Some(a)
    }

    /// Matrix of m -> x m x^{-1} on the generator span; a Clifford group
    /// element always induces an isometry.
    pub fn vector_action(&self, x: &CliffordElement<K>) -> Result<Matrix<K>, CliffordError> {
        let a = self.conjugation_matrix(x).ok_or(CliffordError::NotGammaMember)?;
        if !self.q.is_isometry(&a) {
            return Err(CliffordError::NotIsometry);
        }
        Ok(a)
    }

    /// sigma(x) * x, asserted scalar on Clifford group members.
    pub fn spinor_norm(&self, x: &CliffordElement<K>) -> Result<K, CliffordError> {
        if !self.gamma_membership(x) {
            return Err(CliffordError::NotGammaMember);
        }
        self.mul(&self.sigma(x), x).as_scalar().ok_or(CliffordError::NotScalar)
    }

    pub fn pin_spin(&self, x: &CliffordElement<K>) -> PinSpin {
        let sn = match self.spinor_norm(x) {
            Ok(sn) => sn,
            Err(_) => return PinSpin::NotMember,
        };
        if !sn.is_one() {
            return PinSpin::NotMember;
        }
        if x.parity() == Some(0) {
            PinSpin::Spin
        } else {
            PinSpin::PinOnly
        }
    }

    /// Whether t^2 = b t + a has a root in the field.
    fn has_root(b: &K, a: &K) -> Result<bool, CliffordError> {
        if let Some(all) = K::enumerate() {
            return Ok(all.iter().any(|t| t.mul(t) == t.mul(b).add(a)));
        }
        // characteristic zero: quadratic formula
        let disc = b.mul(b).add(&K::from_int(4).mul(a));
        disc.is_square().ok_or(CliffordError::SquaresUndecidable)
    }

    /// Quadratic minimal polynomial of a non-scalar even-center element,
    /// and whether it splits over the base field.
    pub fn arf_split(&self) -> Result<ArfInvariant<K>, CliffordError> {
        if self.rank() % 2 != 0 || !self.q.is_regular() {
            return Err(CliffordError::NotRegularEven);
        }
        let basis = self.even_center_basis();
        if basis.len() != 2 {
            return Err(CliffordError::CenterDimension);
        }
        let z = basis
            .iter()
            .find(|b| b.as_scalar().is_none())
            .ok_or(CliffordError::CenterDimension)?;
        let d = self.dim();
        let span = Span::new(vec![
            CliffordElement::one().to_dense(d),
            z.to_dense(d),
        ]);
        let z2 = self.mul(z, z);
        // z^2 = a*1 + b*z since the even center is 2-dimensional
        let coords = span
            .coordinates(&z2.to_dense(d))
            .ok_or(CliffordError::CenterDimension)?;
        let (a, b) = (coords[0].clone(), coords[1].clone());
        Ok(ArfInvariant {
            split: Self::has_root(&b, &a)?,
            min_poly: (b.neg(), a.neg()),
        })
    }

    /// 0 iff the induced automorphism fixes the even center pointwise.
    pub fn dickson_invariant(&self, g: &Matrix<K>) -> Result<u8, CliffordError> {
        if !self.q.is_isometry(g) {
            return Err(CliffordError::NotIsometry);
        }
        let basis = self.even_center_basis();
        if basis.len() != 2 {
            return Err(CliffordError::CenterDimension);
        }
        let d = self.dim();
        let span = Span::new(basis.iter().map(|b| b.to_dense(d)).collect());
        let mut fixes_all = true;
        for b in &basis {
            let image = self.apply_isometry(g, b);
            if span.coordinates(&image.to_dense(d)).is_none() {
                return Err(CliffordError::CenterDimension);
            }
            fixes_all &= image == *b;
        }
        Ok(if fixes_all { 0 } else { 1 })
    }

    /// For odd-rank semiregular forms: the square of the odd generator of
    /// the 2-dimensional center, normalized so the top coefficient (or,
    /// failing that, the lowest nonzero one) is 1. Well defined up to unit
    /// squares.
    pub fn half_determinant(&self) -> Result<HalfDeterminant<K>, CliffordError> {
        let n = self.rank();
        if n % 2 != 1 {
            return Err(CliffordError::UnsupportedForm);
        }
        if self.polar.rank() + 1 < n {
            return Err(CliffordError::UnsupportedForm);
        }
        let basis = self.center_basis();
        if basis.len() != 2 {
            return Err(CliffordError::CenterDimension);
        }
        let odd: Vec<CliffordElement<K>> = basis
            .iter()
            .map(|b| b.odd_part())
            .filter(|b| !b.is_zero())
            .collect();
        let d = self.dim();
        let odd_span = Span::new(odd.iter().map(|b| b.to_dense(d)).collect());
        if odd.is_empty() || odd_span.rank != 1 {
            return Err(CliffordError::CenterDimension);
        }
        let mut w = odd[0].clone();
        let top = w.coeff((d - 1) as u32);
        let lead = if top.is_zero() {
            w.terms().next().map(|(_, c)| c.clone()).unwrap()
        } else {
            top
        };
        w = w.scale(&lead.inv().ok_or(CliffordError::UnsupportedForm)?);
        let raw_square = self
            .mul(&w, &w)
            .as_scalar()
            .ok_or(CliffordError::CenterDimension)?;
        let value = raw_square
            .square_class()
            .ok_or(CliffordError::SquaresUndecidable)?;
        Ok(HalfDeterminant { value, raw_square, center_generator: w })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rat, F2, F3, F5};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_element<K: Field>(
        rng: &mut ChaCha8Rng,
        dim: usize,
        sample: impl Fn(&mut ChaCha8Rng) -> K,
    ) -> CliffordElement<K> {
        CliffordElement::from_terms((0..dim).map(|m| (m as u32, sample(rng))))
    }

    fn f3_sample(rng: &mut ChaCha8Rng) -> F3 {
        F3::new(rng.gen_range(0..3))
    }

    fn rat_sample(rng: &mut ChaCha8Rng) -> Rat {
        rat(rng.gen_range(-4..=4), 1)
    }

    #[test]
    fn generator_relations_hold() {
        let forms: Vec<QuadraticForm<Rat>> = vec![
            QuadraticForm::hyperbolic(4),
            QuadraticForm::hyperbolic(5),
            QuadraticForm::diagonal_form(&[rat(1, 1), rat(2, 1), rat(3, 1)]),
        ];
        for q in forms {
            let polar = q.polar_gram();
            let alg = CliffordAlgebra::new(q);
            for i in 0..alg.rank() {
                let ei = CliffordElement::generator(i);
                assert_eq!(
                    alg.mul(&ei, &ei),
                    CliffordElement::scalar(alg.form().coeff(i, i))
                );
                for j in 0..alg.rank() {
                    if i == j {
                        continue;
                    }
                    let ej = CliffordElement::generator(j);
                    let anti = alg.mul(&ei, &ej).add(&alg.mul(&ej, &ei));
                    assert_eq!(anti, CliffordElement::scalar(polar[(i, j)].clone()));
                }
            }
        }
    }

    #[test]
    fn quadratic_relation_on_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(4);
        let alg = CliffordAlgebra::new(q);
        for _ in 0..50 {
            let v: Vec<F3> = (0..4).map(|_| f3_sample(&mut rng)).collect();
            let x = CliffordElement::from_vector(&v);
            assert_eq!(
                alg.mul(&x, &x),
                CliffordElement::scalar(alg.form().evaluate(&v))
            );
        }
    }

    #[test]
    fn hyperbolic_plane_product_is_idempotent() {
        // with q(e0) = q(e1) = 0 and b = 1: (e0 e1)^2 = e0 e1
        let alg: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(2));
        let p = alg.basis_product(0b01, 0b10);
        assert_eq!(p, CliffordElement::basis_element(0b11));
        assert_eq!(alg.mul(&p, &p), p);
        // and e1 e0 = 1 - e0 e1
        let rev = alg.basis_product(0b10, 0b01);
        assert_eq!(rev, CliffordElement::one().sub(&p));
    }

    #[test]
    fn multiplication_is_associative_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let q3: QuadraticForm<F3> = QuadraticForm::hyperbolic(4);
        let alg = CliffordAlgebra::new(q3);
        for _ in 0..250 {
            let a = random_element(&mut rng, 16, f3_sample);
            let b = random_element(&mut rng, 16, f3_sample);
            let c = random_element(&mut rng, 16, f3_sample);
            assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        }
        let qr: QuadraticForm<Rat> =
            QuadraticForm::diagonal_form(&[rat(1, 1), rat(-1, 1), rat(2, 1), rat(5, 1)]);
        let alg = CliffordAlgebra::new(qr);
        for _ in 0..250 {
            let a = random_element(&mut rng, 16, rat_sample);
            let b = random_element(&mut rng, 16, rat_sample);
            let c = random_element(&mut rng, 16, rat_sample);
            assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        }
    }

    #[test]
    fn grading_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(5);
        let alg = CliffordAlgebra::new(q);
        let d = alg.dim();
        let even = (0..d as u32).filter(|m| m.count_ones() % 2 == 0).count();
        assert_eq!(even, d / 2);
        for _ in 0..40 {
            let s = rng.gen_range(0..d as u32);
            let t = rng.gen_range(0..d as u32);
            let parity = (s.count_ones() + t.count_ones()) % 2;
            let p = alg.basis_product(s, t);
            if !p.is_zero() {
                assert_eq!(p.parity(), Some(parity as u8));
            }
        }
    }

    #[test]
    fn standard_involution_is_an_anti_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(4);
        let alg = CliffordAlgebra::new(q);
        assert_eq!(alg.sigma(&CliffordElement::one()), CliffordElement::one());
        for i in 0..4 {
            let ei: CliffordElement<F3> = CliffordElement::generator(i);
            assert_eq!(alg.sigma(&ei), ei.neg());
        }
        // sigma(e0 e1) = e1 e0 = b - e0 e1
        let e01 = CliffordElement::basis_element(0b11);
        assert_eq!(alg.sigma(&e01), CliffordElement::one().sub(&e01));
        for _ in 0..60 {
            let a = random_element(&mut rng, 16, f3_sample);
            let b = random_element(&mut rng, 16, f3_sample);
            assert_eq!(alg.sigma(&alg.mul(&a, &b)), alg.mul(&alg.sigma(&b), &alg.sigma(&a)));
            assert_eq!(alg.sigma(&alg.sigma(&a)), a);
        }
    }

    #[test]
    fn centers_of_hyperbolic_algebras_have_the_expected_dimensions() {
        // even rank: center is the scalars, even center has dimension 2
        let ranks_and_dims = [(2, 1usize, 2usize), (4, 1, 2)];
        for (rank, z, z0) in ranks_and_dims {
            let alg: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(rank));
            assert_eq!(alg.center_basis().len(), z);
            assert_eq!(alg.even_center_basis().len(), z0);
            let alg: CliffordAlgebra<F3> = CliffordAlgebra::new(QuadraticForm::hyperbolic(rank));
            assert_eq!(alg.center_basis().len(), z);
            assert_eq!(alg.even_center_basis().len(), z0);
            let alg: CliffordAlgebra<F2> = CliffordAlgebra::new(QuadraticForm::hyperbolic(rank));
            assert_eq!(alg.center_basis().len(), z);
            assert_eq!(alg.even_center_basis().len(), z0);
        }
    }

    #[test]
    fn odd_hyperbolic_center_has_an_odd_generator_squaring_to_one() {
        for rank in [3usize, 5] {
            let alg: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(rank));
            assert_eq!(alg.center_basis().len(), 2);
            let hd = alg.half_determinant().unwrap();
            assert_eq!(hd.value, rat(1, 1));
            // the top-normalized generator squares to an exact square
            assert_eq!(hd.raw_square.is_square(), Some(true));
            let w = &hd.center_generator;
            assert_eq!(w.parity(), Some(1));
            for i in 0..rank {
                assert!(alg.commutator(w, &CliffordElement::generator(i)).is_zero());
            }
        }
        let alg: CliffordAlgebra<F2> = CliffordAlgebra::new(QuadraticForm::hyperbolic(3));
        let hd = alg.half_determinant().unwrap();
        assert_eq!(hd.value, F2::one());
    }

    #[test]
    fn half_determinant_of_the_unit_diagonal_form() {
        // w = e0 e1 e2, and (e0 e1 e2)^2 = -1 for the all-ones diagonal form
        let alg: CliffordAlgebra<Rat> =
            CliffordAlgebra::new(QuadraticForm::diagonal_form(&vec![rat(1, 1); 3]));
        let hd = alg.half_determinant().unwrap();
        assert_eq!(hd.center_generator, CliffordElement::basis_element(0b111));
        assert_eq!(hd.raw_square, rat(-1, 1));
        assert_eq!(hd.value, rat(-1, 1));
        // oracle: direct expansion via repeated anticommutation
        let w = CliffordElement::basis_element(0b111);
        assert_eq!(alg.mul(&w, &w), CliffordElement::scalar(rat(-1, 1)));
    }

    #[test]
    fn half_determinant_rejects_unsupported_forms() {
        let even: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(4));
        assert_eq!(even.half_determinant(), Err(CliffordError::UnsupportedForm));
        let degenerate: CliffordAlgebra<Rat> =
            CliffordAlgebra::new(QuadraticForm::diagonal_form(&[rat(1, 1), rat(0, 1), rat(0, 1)]));
        assert_eq!(degenerate.half_determinant(), Err(CliffordError::UnsupportedForm));
    }

    #[test]
    fn arf_invariant_distinguishes_split_and_nonsplit_forms() {
        let split: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(4));
        assert!(split.arf_split().unwrap().split);
        // <1,1> over F3: z = e0 e1 has z^2 = -1, a nonsquare mod 3
        let nonsplit: CliffordAlgebra<F3> =
            CliffordAlgebra::new(QuadraticForm::diagonal_form(&[F3::one(), F3::one()]));
        let arf = nonsplit.arf_split().unwrap();
        assert!(!arf.split);
        let (c1, c0) = arf.min_poly;
        assert_eq!(c1, F3::zero());
        assert_eq!(c0, F3::one()); // z^2 + 1 = 0
        // <1,-1> over Q: z^2 = 1
        let indef: CliffordAlgebra<Rat> =
            CliffordAlgebra::new(QuadraticForm::diagonal_form(&[rat(1, 1), rat(-1, 1)]));
        assert!(indef.arf_split().unwrap().split);
    }

    #[test]
    fn dickson_invariant_vanishes_exactly_on_rotations_in_odd_characteristic() {
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(4);
        let alg = CliffordAlgebra::new(q.clone());
        assert_eq!(alg.dickson_invariant(&Matrix::identity(4)), Ok(0));
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut g = Matrix::identity(4);
        for step in 0..12 {
            // every reflection flips the invariant
            let v: Vec<F3> = loop {
                let v: Vec<F3> = (0..4).map(|_| f3_sample(&mut rng)).collect();
                if !q.evaluate(&v).is_zero() {
                    break v;
                }
            };
            g = g.mul(&q.reflection(&v).unwrap());
            let expected = ((step + 1) % 2) as u8;
            assert_eq!(alg.dickson_invariant(&g), Ok(expected));
            // char != 2: dickson = 0 iff det = 1
            let det_one = g.det() == F3::one();
            assert_eq!(alg.dickson_invariant(&g) == Ok(0), det_one);
        }
        // a shear moves e1 to e0 + e1, changing its value under q
        let mut shear = Matrix::identity(4);
        shear[(0, 1)] = F3::one();
        assert_eq!(alg.dickson_invariant(&shear), Err(CliffordError::NotIsometry));
    }

    #[test]
    fn induced_isometry_maps_are_functorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(4);
        let alg = CliffordAlgebra::new(q.clone());
        let reflect = |rng: &mut ChaCha8Rng| loop {
            let v: Vec<F3> = (0..4).map(|_| f3_sample(rng)).collect();
            if !q.evaluate(&v).is_zero() {
                return q.reflection(&v).unwrap();
            }
        };
        for _ in 0..10 {
            let g = reflect(&mut rng).mul(&reflect(&mut rng));
            let h = reflect(&mut rng);
            let a = random_element(&mut rng, 16, f3_sample);
            let b = random_element(&mut rng, 16, f3_sample);
            // algebra map
            assert_eq!(
                alg.apply_isometry(&g, &alg.mul(&a, &b)),
                alg.mul(&alg.apply_isometry(&g, &a), &alg.apply_isometry(&g, &b))
            );
            // functorial
            assert_eq!(
                alg.apply_isometry(&g, &alg.apply_isometry(&h, &a)),
                alg.apply_isometry(&g.mul(&h), &a)
            );
            // grading preserved
            assert_eq!(alg.apply_isometry(&g, &a.even_part()).parity(), a.even_part().parity());
        }
    }

    #[test]
    fn scalars_and_unit_vectors_are_clifford_group_members() {
        let q: QuadraticForm<Rat> = QuadraticForm::diagonal_form(&[rat(1, 1), rat(2, 1), rat(3, 1), rat(1, 1)]);
        let alg = CliffordAlgebra::new(q.clone());
        let lambda = CliffordElement::scalar(rat(5, 1));
        assert!(alg.gamma_membership(&lambda));
        assert_eq!(alg.vector_action(&lambda).unwrap(), Matrix::identity(4));
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..40 {
            let v: Vec<Rat> = (0..4).map(|_| rat_sample(&mut rng)).collect();
            if q.evaluate(&v).is_zero() {
                continue;
            }
            let x = CliffordElement::from_vector(&v);
            assert!(alg.gamma_membership(&x));
            // conjugation by a vector is minus the reflection in it
            let action = alg.vector_action(&x).unwrap();
            assert_eq!(action, q.reflection(&v).unwrap().neg());
            // spinor norm of a vector is -q(v)
            assert_eq!(alg.spinor_norm(&x), Ok(q.evaluate(&v).neg()));
        }
    }

    #[test]
    fn hyperbolic_vector_membership_from_direct_expansion() {
        // e0 + e1 has q = 1 in the hyperbolic plane
        let alg: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(2));
        let x = CliffordElement::from_vector(&[rat(1, 1), rat(1, 1)]);
        assert!(alg.gamma_membership(&x));
        let action = alg.vector_action(&x).unwrap();
        // -tau_v swaps e0 and e1
        assert_eq!(action, Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(action, alg.form().reflection(&[rat(1, 1), rat(1, 1)]).unwrap().neg());
    }

    #[test]
    fn spinor_norm_is_multiplicative_on_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let q: QuadraticForm<F5> = QuadraticForm::hyperbolic(4);
        let alg = CliffordAlgebra::new(q.clone());
        let random_member = |rng: &mut ChaCha8Rng| {
            // product of two unit vectors
            let mut m = CliffordElement::one();
            for _ in 0..2 {
                let v: Vec<F5> = loop {
                    let v: Vec<F5> = (0..4).map(|_| F5::new(rng.gen_range(0..5))).collect();
                    if !q.evaluate(&v).is_zero() {
                        break v;
                    }
                };
                m = alg.mul(&m, &CliffordElement::from_vector(&v));
            }
            m
        };
        assert_eq!(alg.spinor_norm(&CliffordElement::one()), Ok(F5::one()));
        for _ in 0..50 {
            let x = random_member(&mut rng);
            let y = random_member(&mut rng);
            let product = alg.spinor_norm(&alg.mul(&x, &y)).unwrap();
            assert_eq!(product, alg.spinor_norm(&x).unwrap().mul(&alg.spinor_norm(&y).unwrap()));
        }
        let not_member = CliffordElement::one().add(&CliffordElement::generator(0));
        assert_eq!(alg.spinor_norm(&not_member), Err(CliffordError::NotGammaMember));
    }

    #[test]
    fn pin_and_spin_membership() {
        // a vector with q(v) = -1 is in Pin but odd
        let q: QuadraticForm<Rat> = QuadraticForm::diagonal_form(&[rat(1, 1), rat(-1, 1)]);
        let alg = CliffordAlgebra::new(q);
        let v = CliffordElement::generator(1);
        assert_eq!(alg.pin_spin(&v), PinSpin::PinOnly);
        // scalars: spin iff lambda^2 = 1
        assert_eq!(alg.pin_spin(&CliffordElement::scalar(rat(-1, 1))), PinSpin::Spin);
        assert_eq!(alg.pin_spin(&CliffordElement::scalar(rat(2, 1))), PinSpin::NotMember);
        assert_eq!(alg.pin_spin(&CliffordElement::zero()), PinSpin::NotMember);
        // alpha e1 e2 + alpha^{-1} e2 e1 in the odd hyperbolic algebra
        let odd: CliffordAlgebra<Rat> = CliffordAlgebra::new(QuadraticForm::hyperbolic(3));
        let e12 = odd.basis_product(0b010, 0b100);
        let e21 = odd.basis_product(0b100, 0b010);
        for alpha in [rat(2, 1), rat(3, 5), rat(-7, 2)] {
            let x = e12.scale(&alpha).add(&e21.scale(&alpha.inv().unwrap()));
            assert_eq!(odd.pin_spin(&x), PinSpin::Spin);
        }
    }

    #[test]
    fn display_renders_masks_readably() {
        let x: CliffordElement<Rat> = CliffordElement::from_terms([
            (0u32, rat(2, 1)),
            (0b101, rat(1, 1)),
            (0b10, rat(3, 1)),
        ]);
        assert_eq!(x.to_string(), "2 + 3·e1 + e0e2");
    }
}
