//! Lie algebras of the classical groups through the dual-numbers tangent
//! construction, together with the explicit bases and the bracket.

use thiserror::Error;

use crate::clifford::{CliffordAlgebra, CliffordElement};
use crate::groups::{symplectic_gram, Group};
use crate::matrix::{Matrix, Span};
use crate::pairs::{pair_from_form, QuadraticPair};
use crate::quadform::QuadraticForm;
use crate::ring::{Field, Ring, Tangent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("group has no supported Lie algebra computation")]
    UnsupportedGroup,
    #[error("group is outside the transcribed range")]
    OutOfRange,
    #[error("tangent conditions are inconsistent at the identity")]
    NotAtIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieElement<K: Field> {
    Mat(Matrix<K>),
    Cliff(CliffordElement<K>),
}

/// Basis of a Lie algebra. For the projective families the vectors are
/// representatives and the algebra is their span modulo the scalar line.
#[derive(Debug, Clone)]
pub struct LieAlgebraBasis<K: Field> {
    pub group: Group<K>,
    pub vectors: Vec<LieElement<K>>,
    pub modulo_scalars: bool,
}

impl<K: Field> LieAlgebraBasis<K> {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn matrices(&self) -> Option<Vec<&Matrix<K>>> {
        self.vectors
            .iter()
            .map(|v| match v {
                LieElement::Mat(m) => Some(m),
                LieElement::Cliff(_) => None,
            })
            .collect()
    }
}

fn lift_matrix<K: Field>(m: &Matrix<K>) -> Matrix<Tangent<K>> {
    Matrix::from_fn(m.rows, m.cols, |i, j| Tangent::constant(m[(i, j)].clone()))
}

fn lift_form<K: Field>(q: &QuadraticForm<K>) -> QuadraticForm<Tangent<K>> {
    let c = q.coeff_table();
    QuadraticForm::from_upper(Matrix::from_fn(c.rows, c.cols, |i, j| {
        Tangent::constant(c[(i, j)].clone())
    }))
}

/// The generic point Id + B with B[i][j] the (i*n+j)-th tangent direction.
fn generic_point<K: Field>(n: usize) -> Matrix<Tangent<K>> {
    Matrix::from_fn(n, n, |i, j| {
        let unit = Tangent::direction(i * n + j);
        if i == j {
            unit.add(&Tangent::one())
        } else {
            unit
        }
    })
}

/// Residuals of the group's defining equations at the generic tangent
/// point. Each residual must vanish: its base part is zero because the
/// identity is a member, and its linear part is one constraint row.
fn tangent_conditions<K: Field>(group: &Group<K>) -> Result<Vec<Tangent<K>>, LieError> {
    let n = group.degree();
    let g = generic_point::<K>(n);
    let mut residuals = Vec::new();
    match group {
        Group::Gl(_) | Group::Pgl(_) => {}
        Group::Sl(_) => {
            residuals.push(g.det().add(&Tangent::one().neg()));
        }
        Group::O(q) | Group::So(q) | Group::Oplus(q) => {
            let ql = lift_form(q);
            let p = ql.polar_gram();
            let preserved = g.transpose().mul(&p).mul(&g).sub(&p);
            residuals.extend(preserved.entries().cloned());
            for i in 0..n {
                let qi = ql.evaluate(&g.col(i));
                residuals.push(qi.add(&Tangent::constant(q.coeff(i, i)).neg()));
            }
            // SO adds the determinant condition; Oplus is the kernel of an
            // invariant into an etale group, so its tangent space is O's
            if matches!(group, Group::So(_)) {
                residuals.push(g.det().add(&Tangent::one().neg()));
            }
        }
        Group::Sp(half) => {
            let j = lift_matrix(&symplectic_gram::<K>(*half));
            let preserved = g.transpose().mul(&j).mul(&g).sub(&j);
            residuals.extend(preserved.entries().cloned());
        }
        Group::Gsp(half) | Group::Pgsp(half) => {
            let j = symplectic_gram::<K>(*half);
            let jl = lift_matrix(&j);
            let jl_inv = lift_matrix(&j.inverse().expect("alternating gram is invertible"));
            let b = strip_identity(&g);
            let s = b.add(&jl_inv.mul(&b.transpose()).mul(&jl));
            residuals.extend(scalar_matrix_residuals(&s));
        }
        Group::Go(q) | Group::Pgo(q) | Group::Pgoplus(q) => {
            let pair = pair_from_form(q).map_err(|_| LieError::UnsupportedGroup)?;
            residuals.extend(similitude_pair_conditions(&pair, &g));
        }
        _ => return Err(LieError::UnsupportedGroup),
    }
    Ok(residuals)
}

fn strip_identity<K: Field>(g: &Matrix<Tangent<K>>) -> Matrix<Tangent<K>> {
    Matrix::from_fn(g.rows, g.cols, |i, j| {
        if i == j {
            g[(i, j)].add(&Tangent::one().neg())
        } else {
            g[(i, j)].clone()
        }
    })
}

/// Rows forcing s to be a scalar matrix: off-diagonal entries and the
/// differences of diagonal entries against the corner.
fn scalar_matrix_residuals<K: Field>(s: &Matrix<Tangent<K>>) -> Vec<Tangent<K>> {
    let mut residuals = Vec::new();
    for i in 0..s.rows {
        for j in 0..s.cols {
            if i != j {
                residuals.push(s[(i, j)].clone());
            } else if i > 0 {
                residuals.push(s[(i, i)].add(&s[(0, 0)].neg()));
            }
        }
    }
    residuals
}

/// Linearized conditions for the similitude families: B + eta(B) scalar,
/// and the functional fixed on commutators with symmetric elements.
fn similitude_pair_conditions<K: Field>(
    pair: &QuadraticPair<K>,
    g: &Matrix<Tangent<K>>,
) -> Vec<Tangent<K>> {
    let n = g.rows;
    let b = strip_identity(g);
    let hl = lift_matrix(&pair.h);
    let hl_inv = lift_matrix(&pair.h.inverse().expect("regular gram"));
    let eta_b = hl_inv.mul(&b.transpose()).mul(&hl);
    let s = b.add(&eta_b);
    let mut residuals = scalar_matrix_residuals(&s);
    let f_ext = lift_matrix(pair.f_extension());
    for c in pair.sym_basis() {
        let cl = lift_matrix(c);
        let comm = cl.mul(&b).sub(&b.mul(&cl));
        let mut val = Tangent::zero();
        for i in 0..n {
            for j in 0..n {
                val = val.add(&f_ext[(i, j)].mul(&comm[(i, j)]));
            }
        }
        residuals.push(val);
    }
    residuals
}

/// Kernel of the residual rows as a list of flat coordinate vectors.
fn kernel_from_residuals<K: Field>(
    residuals: &[Tangent<K>],
    unknowns: usize,
) -> Result<Vec<Vec<K>>, LieError> {
    let mut rows = Vec::new();
    for r in residuals {
        if !r.base.is_zero() {
            return Err(LieError::NotAtIdentity);
        }
        let row: Vec<K> = (0..unknowns).map(|k| r.lin_coeff(k)).collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok((0..unknowns)
            .map(|k| {
                let mut v = vec![K::zero(); unknowns];
                v[k] = K::one();
                v
            })
            .collect());
    }
    Ok(Matrix::from_rows(rows).kernel_basis())
}

/// Quotient a kernel containing the scalar line by that line: returns
/// representatives completing {scalar} to a basis of the kernel.
fn quotient_by_line<K: Field>(kernel: Vec<Vec<K>>, line: Vec<K>) -> Result<Vec<Vec<K>>, LieError> {
    let full = Span::new(kernel.clone());
    if !full.contains(&line) {
        return Err(LieError::NotAtIdentity);
    }
    let mut picked: Vec<Vec<K>> = vec![line];
    let mut reps = Vec::new();
    for v in kernel {
        let trial = Span::new(picked.iter().cloned().chain([v.clone()]).collect());
        if trial.dim() > picked.len() {
            picked.push(v.clone());
            reps.push(v);
        }
    }
    Ok(reps)
}

/// Even Clifford masks for a form of the given rank, ascending.
fn even_masks(rank: usize) -> Vec<u32> {
    (0..(1u32 << rank)).filter(|m| m.count_ones() % 2 == 0).collect()
}

/// Tangent conditions for Spin: a symbolic even element a must satisfy
/// [a, e_i] inside the vector span and a + sigma(a) = 0.
fn spin_kernel<K: Field>(q: &QuadraticForm<K>) -> Vec<CliffordElement<K>> {
    let n = q.rank();
    let masks = even_masks(n);
    let alg = CliffordAlgebra::new(lift_form(q));
    let mut a = CliffordElement::zero();
    for (k, &mask) in masks.iter().enumerate() {
        let term = CliffordElement::from_terms(vec![(mask, Tangent::<K>::direction(k))]);
        a = a.add(&term);
    }
    let mut residuals: Vec<Tangent<K>> = Vec::new();
    for i in 0..n {
        let mut e = vec![Tangent::zero(); n];
        e[i] = Tangent::one();
        let ei = CliffordElement::from_vector(&e);
        let comm = alg.mul(&a, &ei).sub(&alg.mul(&ei, &a));
        for (mask, c) in comm.terms() {
            if mask.count_ones() != 1 {
                residuals.push(c.clone());
            }
        }
    }
    let sym = a.add(&alg.sigma(&a));
    residuals.extend(sym.terms().map(|(_, c)| c.clone()));
    let kernel = kernel_from_residuals(&residuals, masks.len()).expect("identity is a member");
    kernel
        .into_iter()
        .map(|coords| {
            CliffordElement::from_terms(
                masks.iter().cloned().zip(coords).collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// The Lie algebra of a group via the tangent construction: evaluate the
/// defining conditions at Id + B over the jet ring and solve for B.
pub fn lie_algebra<K: Field>(group: &Group<K>) -> Result<LieAlgebraBasis<K>, LieError> {
    let n = group.degree();
    match group {
        Group::Spin(q) => {
            return Ok(LieAlgebraBasis {
                group: group.clone(),
                vectors: spin_kernel(q).into_iter().map(LieElement::Cliff).collect(),
                modulo_scalars: false,
            });
        }
        Group::Gamma(_) | Group::SGamma(_) | Group::Pin(_) => {
            return Err(LieError::UnsupportedGroup);
        }
        _ => {}
    }
    let residuals = tangent_conditions(group)?;
    let kernel = kernel_from_residuals(&residuals, n * n)?;
    let vectors = if group.is_projective_family() {
        quotient_by_line(kernel, Matrix::<K>::identity(n).flatten())?
    } else {
        kernel
    };
    Ok(LieAlgebraBasis {
        group: group.clone(),
        vectors: vectors
            .into_iter()
            .map(|flat| LieElement::Mat(Matrix::from_fn(n, n, |i, j| flat[i * n + j].clone())))
            .collect(),
        modulo_scalars: group.is_projective_family(),
    })
}

pub fn matrix_bracket<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    a.mul(b).sub(&b.mul(a))
}

pub fn clifford_bracket<K: Field>(
    alg: &CliffordAlgebra<K>,
    a: &CliffordElement<K>,
    b: &CliffordElement<K>,
) -> CliffordElement<K> {
    alg.mul(a, b).sub(&alg.mul(b, a))
}

fn flat<K: Field>(group: &Group<K>, v: &LieElement<K>) -> Vec<K> {
    match v {
        LieElement::Mat(m) => m.flatten(),
        LieElement::Cliff(x) => {
            let masks = even_masks(group.degree());
            masks.iter().map(|&m| x.coeff(m)).collect()
        }
    }
}

fn payload_bracket<K: Field>(
    group: &Group<K>,
    a: &LieElement<K>,
    b: &LieElement<K>,
) -> LieElement<K> {
    match (a, b) {
        (LieElement::Mat(x), LieElement::Mat(y)) => LieElement::Mat(matrix_bracket(x, y)),
        (LieElement::Cliff(x), LieElement::Cliff(y)) => {
            let q = match group {
                Group::Spin(q) => q.clone(),
                _ => panic!("clifford payload outside a spin group"),
            };
            LieElement::Cliff(clifford_bracket(&CliffordAlgebra::new(q), x, y))
        }
        _ => panic!("mixed payloads"),
    }
}

/// All pairwise brackets of basis vectors lie back in the span (the span
/// is widened by the scalar line for the projective families).
pub fn closure_check<K: Field>(basis: &LieAlgebraBasis<K>) -> bool {
    let mut vectors: Vec<Vec<K>> = basis.vectors.iter().map(|v| flat(&basis.group, v)).collect();
    if basis.modulo_scalars {
        let n = basis.group.degree();
        vectors.push(Matrix::<K>::identity(n).flatten());
    }
    let span = Span::new(vectors);
    for a in &basis.vectors {
        for b in &basis.vectors {
            let br = payload_bracket(&basis.group, a, b);
            if !span.contains(&flat(&basis.group, &br)) {
                return false;
            }
        }
    }
    true
}

/// Span equality of two bases of the same group, as subspaces of the flat
/// coordinate space (widened by the scalar line for projective families).
pub fn same_span<K: Field>(a: &LieAlgebraBasis<K>, b: &LieAlgebraBasis<K>) -> bool {
    let widen = |basis: &LieAlgebraBasis<K>| {
        let mut vectors: Vec<Vec<K>> =
            basis.vectors.iter().map(|v| flat(&basis.group, v)).collect();
        if basis.modulo_scalars {
            vectors.push(Matrix::<K>::identity(basis.group.degree()).flatten());
        }
        Span::new(vectors)
    };
    widen(a).equals(&widen(b))
}

/// The transcribed bases. Each family is listed in the shape printed in
/// the source construction, in the coordinates of the split forms.
pub fn standard_basis<K: Field>(group: &Group<K>) -> Result<LieAlgebraBasis<K>, LieError> {
    const MAX_N: usize = 8;
    let unit = |n: usize, i: usize, j: usize| Matrix::<K>::unit(n, i, j);
    let two = K::from_int(2);
    let mut mats: Vec<Matrix<K>> = Vec::new();
    let mut modulo_scalars = false;
    match group {
        Group::So(q) if q.rank() % 2 == 1 && *q == QuadraticForm::hyperbolic(q.rank()) => {
            let n = q.rank() / 2;
            if n == 0 || n > MAX_N {
                return Err(LieError::OutOfRange);
            }
            let m = q.rank();
            for i in 1..=n {
                mats.push(unit(m, 0, 2 * i).sub(&unit(m, 2 * i - 1, 0).scale(&two)));
            }
            for i in 1..=n {
                mats.push(unit(m, 0, 2 * i - 1).sub(&unit(m, 2 * i, 0).scale(&two)));
            }
            for i in 1..=n {
                for j in 1..=n {
                    mats.push(unit(m, 2 * i - 1, 2 * j - 1).sub(&unit(m, 2 * j, 2 * i)));
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    mats.push(unit(m, 2 * i - 1, 2 * j).sub(&unit(m, 2 * j - 1, 2 * i)));
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    mats.push(unit(m, 2 * i, 2 * j - 1).sub(&unit(m, 2 * j, 2 * i - 1)));
                }
            }
        }
        Group::Sp(n) => {
            let (n, m) = (*n, 2 * n);
            if n == 0 || n > MAX_N {
                return Err(LieError::OutOfRange);
            }
            for i in 0..n {
                for j in 0..n {
                    mats.push(unit(m, i, j).sub(&unit(m, j + n, i + n)));
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    mats.push(unit(m, i, n + j).add(&unit(m, j, n + i)));
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    mats.push(unit(m, n + i, j).add(&unit(m, n + j, i)));
                }
            }
            for i in 0..n {
                mats.push(unit(m, i, n + i));
            }
            for i in 0..n {
                mats.push(unit(m, n + i, i));
            }
        }
        Group::Go(q) | Group::Pgo(q)
            if q.rank() % 2 == 0 && *q == QuadraticForm::hyperbolic(q.rank()) =>
        {
            let n = q.rank() / 2;
            let projective = matches!(group, Group::Pgo(_));
            if n < if projective { 2 } else { 1 } || n > MAX_N {
                return Err(LieError::OutOfRange);
            }
            let m = q.rank();
            // pairs are (2i-2, 2i-1) at zero-based indices for i = 1..=n
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        mats.push(unit(m, 2 * i - 2, 2 * j - 2).sub(&unit(m, 2 * j - 1, 2 * i - 1)));
                    }
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    mats.push(unit(m, 2 * i - 2, 2 * j - 1).sub(&unit(m, 2 * j - 2, 2 * i - 1)));
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    mats.push(unit(m, 2 * i - 1, 2 * j - 2).sub(&unit(m, 2 * j - 1, 2 * i - 2)));
                }
            }
            let diag_top = if projective { n - 1 } else { n };
            for i in 2..=diag_top {
                mats.push(unit(m, 2 * i - 2, 2 * i - 2).sub(&unit(m, 2 * i - 1, 2 * i - 1)));
            }
            let tail = (2..=n).fold(Matrix::zero(m, m), |acc, i| {
                acc.add(&unit(m, 2 * i - 1, 2 * i - 1))
            });
            mats.push(unit(m, 0, 0).add(&tail));
            mats.push(unit(m, 1, 1).add(&tail));
            modulo_scalars = projective;
        }
        Group::Pgsp(n) => {
            let (n, m) = (*n, 2 * n);
            if n == 0 || n > MAX_N {
                return Err(LieError::OutOfRange);
            }
            // A bare diagonal unit E_ii is not a similitude tangent for
            // n >= 2: its involution image is the complementary unit
            // E_{n+i,n+i}. The diagonal family is therefore taken as the
            // paired differences together with one unit-factor witness,
            // which stays a basis modulo scalars over every ring,
            // including characteristic 2 where the differences alone sum
            // to the identity.
            for i in 0..n.saturating_sub(1) {
                mats.push(unit(m, i, i).sub(&unit(m, n + i, n + i)));
            }
            let witness = (n..m).fold(Matrix::zero(m, m), |acc, i| acc.add(&unit(m, i, i)));
            mats.push(witness);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        mats.push(unit(m, i, j).sub(&unit(m, j + n, i + n)));
                    }
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    mats.push(unit(m, i, n + j).add(&unit(m, j, n + i)));
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    mats.push(unit(m, n + i, j).add(&unit(m, n + j, i)));
                }
            }
            for i in 0..n {
                mats.push(unit(m, i, n + i));
            }
            for i in 0..n {
                mats.push(unit(m, n + i, i));
            }
            modulo_scalars = true;
        }
        Group::Spin(q) if *q == QuadraticForm::hyperbolic(q.rank()) => {
            return spin_standard_basis(group, q);
        }
        _ => return Err(LieError::UnsupportedGroup),
    }
    Ok(LieAlgebraBasis {
        group: group.clone(),
        vectors: mats.into_iter().map(LieElement::Mat).collect(),
        modulo_scalars,
    })
}

/// Spin bases for both parities: the scalar-coupled pair element, the
/// differences of pair products, and the off-pair degree-2 monomials.
fn spin_standard_basis<K: Field>(
    group: &Group<K>,
    q: &QuadraticForm<K>,
) -> Result<LieAlgebraBasis<K>, LieError> {
    let m = q.rank();
    let n = m / 2;
    if n == 0 || n > 8 {
        return Err(LieError::OutOfRange);
    }
    let two = K::from_int(2);
    // hyperbolic pairs: (2i-1, 2i) in odd rank, (2i-2, 2i-1) in even rank
    let pair_mask = |i: usize| -> u32 {
        if m % 2 == 1 {
            (1 << (2 * i - 1)) | (1 << (2 * i))
        } else {
            (1 << (2 * i - 2)) | (1 << (2 * i - 1))
        }
    };
    let mut out: Vec<CliffordElement<K>> = Vec::new();
    out.push(CliffordElement::from_terms(vec![
        (0, K::one()),
        (pair_mask(n), two.neg()),
    ]));
    for i in 1..n {
        out.push(CliffordElement::from_terms(vec![
            (pair_mask(i), K::one()),
            (pair_mask(n), K::one().neg()),
        ]));
    }
    let pairs: Vec<u32> = (1..=n).map(pair_mask).collect();
    for i in 0..m {
        for j in (i + 1)..m {
            let mask = (1u32 << i) | (1 << j);
            if !pairs.contains(&mask) {
                out.push(CliffordElement::from_terms(vec![(mask, K::one())]));
            }
        }
    }
    Ok(LieAlgebraBasis {
        group: group.clone(),
        vectors: out.into_iter().map(LieElement::Cliff).collect(),
        modulo_scalars: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{F2, F3, F5, Rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dim_of<K: Field>(group: Group<K>) -> usize {
        lie_algebra(&group).unwrap().dim()
    }

    #[test]
    fn general_and_special_linear_dimensions() {
        for n in 1..=4usize {
            assert_eq!(dim_of::<Rat>(Group::Gl(n)), n * n);
            assert_eq!(dim_of::<Rat>(Group::Sl(n)), n * n - 1);
            assert_eq!(dim_of::<F3>(Group::Sl(n)), n * n - 1);
            assert_eq!(dim_of::<F2>(Group::Sl(n)), n * n - 1);
            if n > 1 {
                assert_eq!(dim_of::<Rat>(Group::Pgl(n)), n * n - 1);
            }
        }
        // over F_p with p | n the trace-zero description still gives n^2 - 1
        assert_eq!(dim_of::<F3>(Group::Sl(3)), 8);
        assert_eq!(dim_of::<F2>(Group::Sl(2)), 3);
    }

    #[test]
    fn odd_orthogonal_dimensions_and_characteristic_two_anomaly() {
        for n in 1..=3usize {
            let expected = n * (2 * n + 1);
            assert_eq!(dim_of::<Rat>(Group::O(QuadraticForm::hyperbolic(2 * n + 1))), expected);
            assert_eq!(dim_of::<F3>(Group::O(QuadraticForm::hyperbolic(2 * n + 1))), expected);
            assert_eq!(dim_of::<F5>(Group::So(QuadraticForm::hyperbolic(2 * n + 1))), expected);
            assert_eq!(
                dim_of::<F2>(Group::O(QuadraticForm::hyperbolic(2 * n + 1))),
                expected + 1
            );
        }
    }

    #[test]
    fn symplectic_dimensions_in_all_characteristics() {
        for n in 1..=3usize {
            let expected = n * (2 * n + 1);
            assert_eq!(dim_of::<Rat>(Group::Sp(n)), expected);
            assert_eq!(dim_of::<F2>(Group::Sp(n)), expected);
            assert_eq!(dim_of::<Rat>(Group::Pgsp(n)), expected);
        }
    }

    #[test]
    fn similitude_and_projective_orthogonal_dimensions() {
        for n in 2..=3usize {
            let q: QuadraticForm<Rat> = QuadraticForm::hyperbolic(2 * n);
            assert_eq!(dim_of(Group::Go(q.clone())), n * (2 * n - 1) + 1);
            assert_eq!(dim_of(Group::Pgo(q.clone())), n * (2 * n - 1));
            assert_eq!(dim_of::<F3>(Group::Pgo(QuadraticForm::hyperbolic(2 * n))), n * (2 * n - 1));
        }
    }

    #[test]
    fn spin_dimensions_match_special_orthogonal_in_both_parities() {
        for m in [3usize, 4, 5, 6] {
            let q: QuadraticForm<Rat> = QuadraticForm::hyperbolic(m);
            let spin = dim_of(Group::Spin(q.clone()));
            let so = dim_of(Group::So(q));
            assert_eq!(spin, so);
            let n = m / 2;
            let expected = if m % 2 == 1 { n * (2 * n + 1) } else { n * (2 * n - 1) };
            assert_eq!(spin, expected);
        }
        let spin_f3 = dim_of::<F3>(Group::Spin(QuadraticForm::hyperbolic(5)));
        assert_eq!(spin_f3, 10);
    }

    #[test]
    fn transcribed_bases_match_computed_spans() {
        let so5: Group<Rat> = Group::So(QuadraticForm::hyperbolic(5));
        let computed = lie_algebra(&so5).unwrap();
        let listed = standard_basis(&so5).unwrap();
        assert_eq!(listed.dim(), 10);
        assert!(same_span(&computed, &listed));

        let sp4: Group<Rat> = Group::Sp(2);
        assert!(same_span(&lie_algebra(&sp4).unwrap(), &standard_basis(&sp4).unwrap()));

        let pgsp4: Group<Rat> = Group::Pgsp(2);
        let listed = standard_basis(&pgsp4).unwrap();
        assert_eq!(listed.dim(), 10);
        assert!(same_span(&lie_algebra(&pgsp4).unwrap(), &listed));

        let go6: Group<Rat> = Group::Go(QuadraticForm::hyperbolic(6));
        assert!(same_span(&lie_algebra(&go6).unwrap(), &standard_basis(&go6).unwrap()));

        let pgo6: Group<Rat> = Group::Pgo(QuadraticForm::hyperbolic(6));
        let listed = standard_basis(&pgo6).unwrap();
        assert_eq!(listed.dim(), 15);
        assert!(same_span(&lie_algebra(&pgo6).unwrap(), &listed));

        let spin5: Group<Rat> = Group::Spin(QuadraticForm::hyperbolic(5));
        let listed = standard_basis(&spin5).unwrap();
        assert_eq!(listed.dim(), 10);
        assert!(same_span(&lie_algebra(&spin5).unwrap(), &listed));

        let spin6: Group<Rat> = Group::Spin(QuadraticForm::hyperbolic(6));
        assert!(same_span(&lie_algebra(&spin6).unwrap(), &standard_basis(&spin6).unwrap()));
    }

    #[test]
    fn transcribed_spans_hold_over_small_fields_with_odd_type_exception() {
        // over F2 the computed odd orthogonal algebra is strictly larger
        // than the span of the transcribed trace-zero basis by exactly 1
        let q: QuadraticForm<F2> = QuadraticForm::hyperbolic(5);
        let computed = lie_algebra(&Group::O(q.clone())).unwrap();
        let listed = standard_basis(&Group::So(q.clone())).unwrap();
        assert_eq!(computed.dim(), listed.dim() + 1);
        let computed_flat: Vec<Vec<F2>> = computed
            .vectors
            .iter()
            .map(|v| flat(&computed.group, v))
            .collect();
        let listed_flat: Vec<Vec<F2>> = listed
            .vectors
            .iter()
            .map(|v| flat(&listed.group, v))
            .collect();
        let big = Span::new(computed_flat);
        for v in &listed_flat {
            assert!(big.contains(v));
        }

        let q3: QuadraticForm<F3> = QuadraticForm::hyperbolic(5);
        assert!(same_span(
            &lie_algebra(&Group::So(q3.clone())).unwrap(),
            &standard_basis(&Group::So(q3)).unwrap()
        ));
    }

    #[test]
    fn every_transcribed_basis_vector_passes_the_tangent_condition() {
        // check Id + tX satisfies the group equations over the jet ring
        let groups: Vec<Group<Rat>> = vec![
            Group::So(QuadraticForm::hyperbolic(5)),
            Group::Sp(2),
            Group::Go(QuadraticForm::hyperbolic(4)),
            Group::Pgo(QuadraticForm::hyperbolic(6)),
            Group::Pgsp(2),
        ];
        for g in groups {
            let basis = standard_basis(&g).unwrap();
            let n = g.degree();
            for v in &basis.vectors {
                let x = match v {
                    LieElement::Mat(m) => m,
                    LieElement::Cliff(_) => unreachable!(),
                };
                let point = Matrix::from_fn(n, n, |i, j| {
                    let c = Tangent::constant(x[(i, j)].clone());
                    let dir = Tangent::direction(0).mul(&c);
                    if i == j {
                        dir.add(&Tangent::one())
                    } else {
                        dir
                    }
                });
                // evaluate the residuals with the single direction scaled
                // by the matrix: equivalent to the generic-point row dotted
                // with x, so it must vanish
                let residuals = match &g {
                    Group::Sl(_) => vec![point.det().add(&Tangent::one().neg())],
                    Group::So(q) => {
                        let ql = lift_form(q);
                        let p = ql.polar_gram();
                        let mut r: Vec<Tangent<Rat>> = point
                            .transpose()
                            .mul(&p)
                            .mul(&point)
                            .sub(&p)
                            .entries()
                            .cloned()
                            .collect();
                        for i in 0..n {
                            r.push(ql.evaluate(&point.col(i)).add(&Tangent::constant(q.coeff(i, i)).neg()));
                        }
                        r.push(point.det().add(&Tangent::one().neg()));
                        r
                    }
                    Group::Sp(half) => {
                        let j = lift_matrix(&symplectic_gram::<Rat>(*half));
                        point.transpose().mul(&j).mul(&point).sub(&j).entries().cloned().collect()
                    }
                    Group::Go(q) | Group::Pgo(q) => {
                        let pair = pair_from_form(q).unwrap();
                        similitude_pair_conditions(&pair, &point)
                    }
                    Group::Pgsp(half) => {
                        let j = symplectic_gram::<Rat>(*half);
                        let jl = lift_matrix(&j);
                        let jl_inv = lift_matrix(&j.inverse().unwrap());
                        let b = Matrix::from_fn(2 * half, 2 * half, |i, jj| {
                            if i == jj {
                                point[(i, jj)].add(&Tangent::one().neg())
                            } else {
                                point[(i, jj)].clone()
                            }
                        });
                        let s = b.add(&jl_inv.mul(&b.transpose()).mul(&jl));
                        let mut r = Vec::new();
                        for i in 0..2 * half {
                            for jj in 0..2 * half {
                                if i != jj {
                                    r.push(s[(i, jj)].clone());
                                } else if i > 0 {
                                    r.push(s[(i, i)].add(&s[(0, 0)].neg()));
                                }
                            }
                        }
                        r
                    }
                    _ => unreachable!(),
                };
                for r in residuals {
                    assert_eq!(r, Tangent::zero(), "basis vector fails tangent condition");
                }
            }
        }
    }

    #[test]
    fn bracket_identities() {
        let e12: Matrix<Rat> = Matrix::unit(2, 0, 1);
        let e21: Matrix<Rat> = Matrix::unit(2, 1, 0);
        let expected = Matrix::diagonal(&[Rat::one(), Rat::one().neg()]);
        assert_eq!(matrix_bracket(&e12, &e21), expected);
        assert_eq!(matrix_bracket(&e12, &e12), Matrix::zero(2, 2));
    }

    #[test]
    fn jacobi_identity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let sp4 = standard_basis::<F5>(&Group::Sp(2)).unwrap();
        let vectors: Vec<&Matrix<F5>> = sp4.matrices().unwrap();
        for _ in 0..200 {
            let a = vectors[rng.gen_range(0..vectors.len())];
            let b = vectors[rng.gen_range(0..vectors.len())];
            let c = vectors[rng.gen_range(0..vectors.len())];
            let total = matrix_bracket(a, &matrix_bracket(b, c))
                .add(&matrix_bracket(b, &matrix_bracket(c, a)))
                .add(&matrix_bracket(c, &matrix_bracket(a, b)));
            assert!(total.is_zero());
        }
    }

    #[test]
    fn closure_of_the_transcribed_bases() {
        assert!(closure_check(&standard_basis::<Rat>(&Group::Sp(2)).unwrap()));
        assert!(closure_check(
            &standard_basis::<Rat>(&Group::So(QuadraticForm::hyperbolic(5))).unwrap()
        ));
        assert!(closure_check(
            &standard_basis::<Rat>(&Group::Pgo(QuadraticForm::hyperbolic(6))).unwrap()
        ));
        assert!(closure_check(
            &standard_basis::<Rat>(&Group::Spin(QuadraticForm::hyperbolic(5))).unwrap()
        ));
        assert!(closure_check(&lie_algebra::<F3>(&Group::Sl(3)).unwrap()));
    }

    #[test]
    fn out_of_range_and_unsupported_requests_error() {
        assert_eq!(
            standard_basis::<Rat>(&Group::Sp(9)).unwrap_err(),
            LieError::OutOfRange
        );
        assert_eq!(
            standard_basis::<Rat>(&Group::Pgo(QuadraticForm::hyperbolic(2))).unwrap_err(),
            LieError::OutOfRange
        );
        assert_eq!(
            lie_algebra::<Rat>(&Group::Pin(QuadraticForm::hyperbolic(4))).unwrap_err(),
            LieError::UnsupportedGroup
        );
    }
}
