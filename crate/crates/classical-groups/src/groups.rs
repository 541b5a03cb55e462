//! Membership predicates, canonical representatives, and exhaustive
//! enumerators for the split classical groups.

use std::collections::HashSet;

use thiserror::Error;

use crate::clifford::{CliffordAlgebra, CliffordElement, CliffordError, PinSpin};
use crate::matrix::Matrix;
use crate::pairs::pair_from_form;
use crate::quadform::{vectors_over, FormError, QuadraticForm};
use crate::ring::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("payload dimensions do not match the group")]
    DimensionMismatch,
    #[error("enumeration exceeds the configured budget")]
    BudgetExceeded,
    #[error("enumeration requires a finite field")]
    InfiniteField,
    #[error("element is not a member of the group")]
    NotMember,
    #[error("operation is not available for this family")]
    UnsupportedFamily,
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

/// The standard alternating Gram matrix: pairs (i, n+i) with
/// J[i, n+i] = 1, J[n+i, i] = -1.
pub fn symplectic_gram<K: Field>(n: usize) -> Matrix<K> {
    let mut j = Matrix::zero(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = K::one();
        j[(n + i, i)] = K::one().neg();
    }
    j
}

/// A split classical group together with its defining data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Group<K: Field> {
    Gl(usize),
    Sl(usize),
    Pgl(usize),
    O(QuadraticForm<K>),
    So(QuadraticForm<K>),
    Oplus(QuadraticForm<K>),
    Sp(usize),
    Gsp(usize),
    Pgsp(usize),
    Go(QuadraticForm<K>),
    Pgo(QuadraticForm<K>),
    Pgoplus(QuadraticForm<K>),
    Gamma(QuadraticForm<K>),
    SGamma(QuadraticForm<K>),
    Pin(QuadraticForm<K>),
    Spin(QuadraticForm<K>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement<K: Field> {
    Mat(Matrix<K>),
    Cliff(CliffordElement<K>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_points: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_points: 1 << 17 }
    }
}

/// Scale so the first nonzero entry in row-major order is 1; cosets modulo
/// scalars then have unique representatives over a field.
pub fn canonical_projective<K: Field>(m: &Matrix<K>) -> Matrix<K> {
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !m[(i, j)].is_zero() {
                let inv = m[(i, j)].inv().expect("field element");
                return m.scale(&inv);
            }
        }
    }
    m.clone()
}

impl<K: Field> Group<K> {
    /// Side length of the matrices the group acts through.
    pub fn degree(&self) -> usize {
        match self {
            Group::Gl(n) | Group::Sl(n) | Group::Pgl(n) => *n,
            Group::Sp(n) | Group::Gsp(n) | Group::Pgsp(n) => 2 * n,
            Group::O(q)
            | Group::So(q)
            | Group::Oplus(q)
            | Group::Go(q)
            | Group::Pgo(q)
            | Group::Pgoplus(q)
            | Group::Gamma(q)
            | Group::SGamma(q)
            | Group::Pin(q)
            | Group::Spin(q) => q.rank(),
        }
    }

    pub fn is_clifford_family(&self) -> bool {
        matches!(
            self,
            Group::Gamma(_) | Group::SGamma(_) | Group::Pin(_) | Group::Spin(_)
        )
    }

    pub fn is_projective_family(&self) -> bool {
        matches!(
            self,
            Group::Pgl(_) | Group::Pgo(_) | Group::Pgoplus(_) | Group::Pgsp(_)
        )
    }

    fn form(&self) -> Option<&QuadraticForm<K>> {
        match self {
            Group::O(q)
            | Group::So(q)
            | Group::Oplus(q)
            | Group::Go(q)
            | Group::Pgo(q)
            | Group::Pgoplus(q)
            | Group::Gamma(q)
            | Group::SGamma(q)
            | Group::Pin(q)
            | Group::Spin(q) => Some(q),
            _ => None,
        }
    }

    pub fn membership(&self, g: &GroupElement<K>) -> Result<bool, GroupError> {
        match g {
            GroupElement::Mat(m) => self.matrix_membership(m),
            GroupElement::Cliff(x) => self.clifford_membership(x),
        }
    }

    pub fn matrix_membership(&self, m: &Matrix<K>) -> Result<bool, GroupError> {
        let n = self.degree();
        if m.rows != n || m.cols != n {
            return Err(GroupError::DimensionMismatch);
        }
        match self {
            Group::Gl(_) | Group::Pgl(_) => Ok(m.inverse().is_some()),
            Group::Sl(_) => Ok(m.det().is_one()),
            Group::O(q) => Ok(m.inverse().is_some() && q.is_isometry(m)),
            Group::So(q) => Ok(m.inverse().is_some() && q.is_isometry(m) && m.det().is_one()),
            Group::Oplus(q) => {
                if !(m.inverse().is_some() && q.is_isometry(m)) {
                    return Ok(false);
                }
                let alg = CliffordAlgebra::new(q.clone());
                Ok(alg.dickson_invariant(m)? == 0)
            }
            Group::Sp(half) => {
                let j = symplectic_gram::<K>(*half);
                Ok(m.transpose().mul(&j).mul(m) == j)
            }
            Group::Gsp(half) | Group::Pgsp(half) => {
                let j = symplectic_gram::<K>(*half);
                let p = m.transpose().mul(&j).mul(m);
                let mu = p[(0, *half)].clone();
                Ok(mu.inv().is_some() && p == j.scale(&mu))
            }
            Group::Go(q) | Group::Pgo(q) => {
                let pair = pair_from_form(q)?;
                Ok(pair.similitude_factor(m).is_some())
            }
            Group::Pgoplus(q) => {
                let pair = pair_from_form(q)?;
                if pair.similitude_factor(m).is_none() {
                    return Ok(false);
                }
                Ok(similitude_dickson(q, m)? == 0)
            }
            _ => Err(GroupError::UnsupportedFamily),
        }
    }

    pub fn clifford_membership(&self, x: &CliffordElement<K>) -> Result<bool, GroupError> {
        let q = self.form().ok_or(GroupError::UnsupportedFamily)?;
        let alg = CliffordAlgebra::new(q.clone());
        match self {
            Group::Gamma(_) => Ok(alg.gamma_membership(x)),
            Group::SGamma(_) => Ok(alg.gamma_membership(x) && x.parity() == Some(0)),
            Group::Pin(_) => Ok(matches!(alg.pin_spin(x), PinSpin::PinOnly | PinSpin::Spin)),
            Group::Spin(_) => Ok(alg.pin_spin(x) == PinSpin::Spin),
            _ => Err(GroupError::UnsupportedFamily),
        }
    }

    /// The scalar mu with eta(a) a = mu, for the similitude families.
    pub fn similitude_factor(&self, m: &Matrix<K>) -> Result<K, GroupError> {
        match self {
            Group::Go(q) | Group::Pgo(q) | Group::Pgoplus(q) => {
                let pair = pair_from_form(q)?;
                pair.similitude_factor(m).ok_or(GroupError::NotMember)
            }
            _ => Err(GroupError::UnsupportedFamily),
        }
    }

    pub fn enumerate(
        &self,
        budget: EnumerationBudget,
    ) -> Result<Vec<GroupElement<K>>, GroupError> {
        if self.is_clifford_family() {
            return Ok(self
                .enumerate_clifford_points(budget)?
                .into_iter()
                .map(GroupElement::Cliff)
                .collect());
        }
        Ok(self
            .enumerate_matrix_points(budget)?
            .into_iter()
            .map(GroupElement::Mat)
            .collect())
    }

    /// Complete duplicate-free point enumeration over a finite field,
    /// either by full scan (within budget) or, for the orthogonal-type
    /// families in odd characteristic, by reflection closure.
    pub fn enumerate_matrix_points(
        &self,
        budget: EnumerationBudget,
    ) -> Result<Vec<Matrix<K>>, GroupError> {
        if self.is_clifford_family() {
            return Err(GroupError::UnsupportedFamily);
        }
        let elems = K::enumerate().ok_or(GroupError::InfiniteField)?;
        let n = self.degree();
        let scan_size = (elems.len() as u128).checked_pow((n * n) as u32);
        if let Some(size) = scan_size {
            if size <= budget.max_points as u128 {
                return self.scan(&elems, budget);
            }
        }
        self.closure_points(&elems, budget)
    }

    fn scan(&self, elems: &[K], budget: EnumerationBudget) -> Result<Vec<Matrix<K>>, GroupError> {
        let n = self.degree();
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for flat in vectors_over(elems.to_vec(), n * n) {
            let m = Matrix::from_fn(n, n, |i, j| flat[i * n + j].clone());
            if self.matrix_membership(&m)? {
                let rep = if self.is_projective_family() { canonical_projective(&m) } else { m };
                if seen.insert(rep.clone()) {
                    out.push(rep);
                }
                if out.len() > budget.max_points {
                    return Err(GroupError::BudgetExceeded);
                }
            }
        }
        Ok(out)
    }

    /// Enumeration by closure over reflection generators (plus a scaling
    /// similitude for GO). Complete for isometry groups over fields of odd
    /// characteristic, where every isometry is a reflection product.
    fn closure_points(
        &self,
        elems: &[K],
        budget: EnumerationBudget,
    ) -> Result<Vec<Matrix<K>>, GroupError> {
        let q = match self {
            Group::O(q) | Group::So(q) | Group::Oplus(q) => q,
            Group::Go(q) | Group::Pgo(q) | Group::Pgoplus(q) => q,
            _ => return Err(GroupError::BudgetExceeded),
        };
        if K::from_int(2).is_zero() {
            // reflections do not always generate over F2; a full scan is
            // the only complete method and it exceeded the budget
            return Err(GroupError::BudgetExceeded);
        }
        let n = q.rank();
        let mut generators = Vec::new();
        let mut seen = HashSet::new();
        for v in vectors_over(elems.to_vec(), n) {
            if q.evaluate(&v).inv().is_none() {
                continue;
            }
            let tau = q.reflection(&v)?;
            if seen.insert(tau.clone()) {
                generators.push(tau);
            }
        }
        if matches!(self, Group::Go(_) | Group::Pgo(_) | Group::Pgoplus(_)) {
            // scaling similitudes cover the non-square factor classes; they
            // exist in this explicit form for the split hyperbolic shape
            if *q != QuadraticForm::hyperbolic(n) || n % 2 != 0 {
                return Err(GroupError::BudgetExceeded);
            }
            for mu in elems {
                if mu.inv().is_none() {
                    continue;
                }
                let s = Matrix::from_fn(n, n, |i, j| {
                    if i != j {
                        K::zero()
                    } else if i % 2 == 0 {
                        mu.clone()
                    } else {
                        K::one()
                    }
                });
                generators.push(s);
            }
        }
        let closure = closure_set(Matrix::identity(n), &generators, budget, |a, b| a.mul(b))?;
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for m in closure {
            if !self.matrix_membership(&m)? {
                continue;
            }
            let rep = if self.is_projective_family() { canonical_projective(&m) } else { m };
            if seen.insert(rep.clone()) {
                out.push(rep);
            }
        }
        Ok(out)
    }

    /// Clifford-family points: all scalar multiples of products of at most
    /// 2·rank unit vectors, filtered by the membership predicate. The
    /// closure fixpoint makes the set stable under multiplication.
    pub fn enumerate_clifford_points(
        &self,
        budget: EnumerationBudget,
    ) -> Result<Vec<CliffordElement<K>>, GroupError> {
        let q = self.form().ok_or(GroupError::UnsupportedFamily)?;
        if !self.is_clifford_family() {
            return Err(GroupError::UnsupportedFamily);
        }
        let elems = K::enumerate().ok_or(GroupError::InfiniteField)?;
        let alg = CliffordAlgebra::new(q.clone());
        let n = q.rank();
        let mut generators = Vec::new();
        for v in vectors_over(elems.clone(), n) {
            if q.evaluate(&v).inv().is_some() {
                generators.push(CliffordElement::from_vector(&v));
            }
        }
        let products = closure_set(CliffordElement::one(), &generators, budget, |a, b| {
            alg.mul(a, b)
        })?;
        let mut all = HashSet::new();
        for x in &products {
            for c in &elems {
                if c.inv().is_some() {
                    all.insert(x.scale(c));
                }
            }
        }
        if all.len() > budget.max_points {
            return Err(GroupError::BudgetExceeded);
        }
        let mut out = Vec::new();
        for x in all {
            if self.clifford_membership(&x)? {
                out.push(x);
            }
        }
        Ok(out)
    }
}

/// Fixpoint of repeated right multiplication by the generators, starting
/// from `start`. The result is stable under right multiplication by every
/// generator, hence closed under products of generator words.
fn closure_set<T: Clone + Eq + std::hash::Hash>(
    start: T,
    generators: &[T],
    budget: EnumerationBudget,
    mul: impl Fn(&T, &T) -> T,
) -> Result<Vec<T>, GroupError> {
    let mut seen: HashSet<T> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in generators {
                let p = mul(f, g);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
            if seen.len() > budget.max_points {
                return Err(GroupError::BudgetExceeded);
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Dickson invariant of a similitude through its action on the even
/// Clifford algebra: pairs e_i e_j map to a(e_i) a(e_j) / mu.
pub fn similitude_dickson<K: Field>(
    q: &QuadraticForm<K>,
    a: &Matrix<K>,
) -> Result<u8, GroupError> {
    let pair = pair_from_form(q)?;
    let mu = pair.similitude_factor(a).ok_or(GroupError::NotMember)?;
    let mu_inv = mu.inv().ok_or(GroupError::NotMember)?;
    let alg = CliffordAlgebra::new(q.clone());
    let images: Vec<CliffordElement<K>> =
        (0..q.rank()).map(|i| CliffordElement::from_vector(&a.col(i))).collect();
    let apply_even = |x: &CliffordElement<K>| -> CliffordElement<K> {
        let mut out = CliffordElement::zero();
        for (mask, c) in x.terms() {
            debug_assert_eq!(mask.count_ones() % 2, 0);
            let mut prod = CliffordElement::one();
            let mut pairs = 0u32;
            for (i, image) in images.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    prod = alg.mul(&prod, image);
                    pairs += 1;
                }
            }
            let mut scalar = c.clone();
            for _ in 0..pairs / 2 {
                scalar = scalar.mul(&mu_inv);
            }
            out = out.add(&prod.scale(&scalar));
        }
        out
    };
    let basis = alg.even_center_basis();
    if basis.len() != 2 {
        return Err(GroupError::Clifford(CliffordError::CenterDimension));
    }
    let mut fixes_all = true;
    for b in &basis {
        let image = apply_even(b);
        fixes_all &= image == *b;
    }
    Ok(if fixes_all { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use crate::ring::{rat, Rat, F2, F3, F5};

    fn scan_budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    #[test]
    fn basic_memberships() {
        let q2: QuadraticForm<Rat> = QuadraticForm::hyperbolic(2);
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(Group::O(q2.clone()).matrix_membership(&swap), Ok(true));
        for alpha in [rat(2, 1), rat(-3, 5)] {
            let d = Matrix::diagonal(&[alpha.clone(), alpha.inv().unwrap()]);
            assert_eq!(Group::Sp(1).matrix_membership(&d), Ok(true));
        }
        let shear = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(Group::Sl(2).matrix_membership(&shear), Ok(true));
        assert_eq!(Group::O(q2.clone()).matrix_membership(&shear), Ok(false));
        let wrong_size = Matrix::<Rat>::identity(3);
        assert_eq!(
            Group::O(q2).matrix_membership(&wrong_size),
            Err(GroupError::DimensionMismatch)
        );
    }

    #[test]
    fn sp2_equals_sl2_over_f3_with_24_elements() {
        let sp: Vec<Matrix<F3>> = Group::Sp(1).enumerate_matrix_points(scan_budget()).unwrap();
        let sl: Vec<Matrix<F3>> = Group::Sl(2).enumerate_matrix_points(scan_budget()).unwrap();
        assert_eq!(sp.len(), 24);
        let sp_set: HashSet<_> = sp.into_iter().collect();
        let sl_set: HashSet<_> = sl.into_iter().collect();
        assert_eq!(sp_set, sl_set);
    }

    #[test]
    fn tiny_orthogonal_group_over_f2() {
        let q: QuadraticForm<F2> = QuadraticForm::hyperbolic(2);
        let o = Group::O(q).enumerate_matrix_points(scan_budget()).unwrap();
        assert_eq!(o.len(), 2);
        let set: HashSet<_> = o.into_iter().collect();
        assert!(set.contains(&Matrix::identity(2)));
        assert!(set.contains(&Matrix::from_ints(&[&[0, 1], &[1, 0]])));
    }

    #[test]
    fn so_has_index_two_in_odd_rank_orthogonal_groups() {
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(3);
        let o = Group::O(q.clone()).enumerate_matrix_points(scan_budget()).unwrap();
        let so = Group::So(q).enumerate_matrix_points(scan_budget()).unwrap();
        assert_eq!(2 * so.len(), o.len());
        // closure under multiplication and inverses, with identity
        let so_set: HashSet<_> = so.iter().cloned().collect();
        assert!(so_set.contains(&Matrix::identity(3)));
        for a in &so {
            assert!(so_set.contains(&a.inverse().unwrap()));
            for b in &so {
                assert!(so_set.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn closure_enumeration_agrees_with_the_scan_oracle() {
        // force the closure path by shrinking the budget below the scan
        // size but above the group order
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(3);
        let scan: HashSet<Matrix<F3>> = Group::O(q.clone())
            .enumerate_matrix_points(scan_budget())
            .unwrap()
            .into_iter()
            .collect();
        let small = EnumerationBudget { max_points: 3000 };
        let closure: HashSet<Matrix<F3>> = Group::O(q)
            .enumerate_matrix_points(small)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(scan, closure);
    }

    #[test]
    fn oplus_has_index_two_over_f2_while_det_is_constant() {
        let q: QuadraticForm<F2> = QuadraticForm::hyperbolic(4);
        let o = Group::O(q.clone()).enumerate_matrix_points(scan_budget()).unwrap();
        let oplus = Group::Oplus(q).enumerate_matrix_points(scan_budget()).unwrap();
        assert_eq!(o.len(), 72);
        assert_eq!(oplus.len(), 36);
        assert!(o.iter().all(|m| m.det().is_one()));
    }

    #[test]
    fn oplus_equals_so_elementwise_over_f3() {
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(2);
        let so: HashSet<_> = Group::So(q.clone())
            .enumerate_matrix_points(scan_budget())
            .unwrap()
            .into_iter()
            .collect();
        let oplus: HashSet<_> = Group::Oplus(q.clone())
            .enumerate_matrix_points(scan_budget())
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(so, oplus);
        let o = Group::O(q).enumerate_matrix_points(scan_budget()).unwrap();
        assert_eq!(o.len(), 2 * so.len());
    }

    #[test]
    fn similitude_factors_match_the_pair_module() {
        let q: QuadraticForm<Rat> = QuadraticForm::hyperbolic(4);
        let go = Group::Go(q.clone());
        let two = Matrix::identity(4).scale(&rat(2, 1));
        assert_eq!(go.similitude_factor(&two), Ok(rat(4, 1)));
        let d = Matrix::diagonal(&[rat(2, 1), rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert_eq!(go.similitude_factor(&d), Ok(rat(2, 1)));
        assert_eq!(go.matrix_membership(&d), Ok(true));
        let tau = q.reflection(&[rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(go.similitude_factor(&tau), Ok(rat(1, 1)));
        let mut bad = Matrix::identity(4);
        bad[(0, 1)] = rat(1, 1);
        assert_eq!(go.similitude_factor(&bad), Err(GroupError::NotMember));
    }

    #[test]
    fn similitude_factor_is_multiplicative_on_enumerated_go_points() {
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(2);
        let go = Group::Go(q);
        let points = go.enumerate_matrix_points(scan_budget()).unwrap();
        // GO(q_2^h)(F3) contains O (4 elements) and the scaled copies
        assert!(points.len() > 4);
        for a in points.iter().take(12) {
            for b in points.iter().take(12) {
                let lhs = go.similitude_factor(&a.mul(b)).unwrap();
                let rhs = go.similitude_factor(a).unwrap().mul(&go.similitude_factor(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        // O is exactly the kernel
        for a in &points {
            let mu = go.similitude_factor(a).unwrap();
            let in_o = Group::O(QuadraticForm::<F3>::hyperbolic(2))
                .matrix_membership(a)
                .unwrap();
            assert_eq!(mu.is_one(), in_o);
        }
    }

    #[test]
    fn projective_canonicalization_collapses_scalar_cosets() {
        let g: Matrix<F5> = Matrix::from_ints(&[&[0, 2], &[3, 1]]);
        for lambda in 1..5i64 {
            let scaled = g.scale(&F5::from_int(lambda));
            assert_eq!(canonical_projective(&scaled), canonical_projective(&g));
        }
        let pgl = Group::Pgl(2).enumerate_matrix_points(scan_budget()).unwrap();
        let gl: Vec<Matrix<F3>> = Group::Gl(2).enumerate_matrix_points(scan_budget()).unwrap();
        let pgl_f3: Vec<Matrix<F3>> = Group::Pgl(2).enumerate_matrix_points(scan_budget()).unwrap();
        assert_eq!(gl.len(), 48);
        assert_eq!(pgl_f3.len(), 24);
        let _: Vec<Matrix<F5>> = pgl;
    }

    #[test]
    fn gamma_enumeration_surjects_onto_the_orthogonal_group() {
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(2);
        let gamma = Group::Gamma(q.clone());
        let points = gamma.enumerate_clifford_points(scan_budget()).unwrap();
        // Gamma(F3) = F3* x vector products: twice the order of O
        assert_eq!(points.len(), 8);
        let alg = CliffordAlgebra::new(q.clone());
        let mut actions = HashSet::new();
        for x in &points {
            actions.insert(alg.vector_action(x).unwrap());
        }
        let o: HashSet<_> = Group::O(q)
            .enumerate_matrix_points(scan_budget())
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(actions, o);
        // kernel of the action is the scalars
        let kernel: Vec<_> = points
            .iter()
            .filter(|x| alg.vector_action(x).unwrap() == Matrix::identity(2))
            .collect();
        assert_eq!(kernel.len(), 2);
        assert!(kernel.iter().all(|x| x.as_scalar().is_some()));
    }

    #[test]
    fn spin_points_are_even_with_unit_spinor_norm() {
        let q: QuadraticForm<F3> = QuadraticForm::hyperbolic(2);
        let spin = Group::Spin(q.clone()).enumerate_clifford_points(scan_budget()).unwrap();
        let alg = CliffordAlgebra::new(q);
        for x in &spin {
            assert_eq!(x.parity(), Some(0));
            assert_eq!(alg.spinor_norm(x), Ok(F3::one()));
        }
        assert!(!spin.is_empty());
    }

    #[test]
    fn budget_violations_are_reported() {
        let gl = Group::<F5>::Gl(3);
        assert_eq!(
            gl.enumerate_matrix_points(EnumerationBudget { max_points: 1000 }),
            Err(GroupError::BudgetExceeded)
        );
        let rational = Group::<Rat>::Gl(2);
        assert_eq!(
            rational.enumerate_matrix_points(scan_budget()),
            Err(GroupError::InfiniteField)
        );
    }
}
