//! Split maximal tori. Each family gets an explicit parametrization
//! by unit coordinates in the printed cocharacter basis, so that
//! conjugating a weight line's eigenvector by a torus point scales it
//! by the root monomial in those coordinates. The parametrizations
//! are group homomorphisms, hence a point is inverted by inverting
//! the coordinates.

use crate::clifford::{CliffordAlgebra, CliffordElement};
use crate::groups::GroupElement;
use crate::matrix::Matrix;
use crate::quadform::QuadraticForm;
use crate::ring::{Field, Ring};
use crate::tables::{EigenSpace, Family, RootTable, WeightLine};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusError {
    #[error("expected one unit per torus rank")]
    WrongRank,
    #[error("torus coordinates must be invertible")]
    NotAUnit,
}

/// Torus point in the ambient algebra, over any coefficient ring.
#[derive(Debug, Clone, PartialEq)]
pub enum TorusElement<R: Ring> {
    Mat(Matrix<R>),
    Cliff(CliffordElement<R>),
}

fn inv<K: Field>(u: &K) -> Result<K, TorusError> {
    u.inv().ok_or(TorusError::NotAUnit)
}

fn product<R: Ring>(units: &[R]) -> R {
    units.iter().fold(R::one(), |acc, u| acc.mul(u))
}

/// units[k] raised to the exponent vector, negative powers allowed.
pub fn monomial<K: Field>(units: &[K], exponents: &[i64]) -> Result<K, TorusError> {
    let mut acc = K::one();
    for (u, &c) in units.iter().zip(exponents) {
        let factor = if c >= 0 {
            u.pow(c as u32)
        } else {
            inv(u)?.pow((-c) as u32)
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

fn basis_vector<R: Ring>(alg: &CliffordAlgebra<R>, k: usize) -> CliffordElement<R> {
    let mut v = vec![R::zero(); alg.form().rank()];
    v[k] = R::one();
    CliffordElement::from_vector(&v)
}

/// Printed cocharacter basis element t_j applied to u, spin families.
/// The first coordinate rotates the leading hyperbolic pair, with
/// idempotents p = e_a e_b and p' = e_b e_a; the others combine the
/// leading plane with plane j through the four orthogonal idempotent
/// products u p r + p r' + p' r + u^{-1} p' r'.
fn spin_cochar<R: Ring>(
    alg: &CliffordAlgebra<R>,
    first: (usize, usize),
    pair: Option<(usize, usize)>,
    u: &R,
    u_inv: &R,
) -> CliffordElement<R> {
    let ea = basis_vector(alg, first.0);
    let eb = basis_vector(alg, first.1);
    let p = alg.mul(&ea, &eb);
    let p_op = alg.mul(&eb, &ea);
    match pair {
        None => p.scale(u).add(&p_op.scale(u_inv)),
        Some((c, d)) => {
            let ec = basis_vector(alg, c);
            let ed = basis_vector(alg, d);
            let r = alg.mul(&ec, &ed);
            let r_op = alg.mul(&ed, &ec);
            alg.mul(&p, &r)
                .scale(u)
                .add(&alg.mul(&p, &r_op))
                .add(&alg.mul(&p_op, &r))
                .add(&alg.mul(&p_op, &r_op).scale(u_inv))
        }
    }
}

/// Torus point with explicitly supplied coordinate inverses, usable
/// over rings where inversion is partial, such as Laurent monomials.
pub fn torus_element<R: Ring>(
    family: Family,
    n: usize,
    units: &[R],
    inverses: &[R],
) -> Result<TorusElement<R>, TorusError> {
    let rank = family.rank(n);
    if units.len() != rank || inverses.len() != rank {
        return Err(TorusError::WrongRank);
    }
    for (u, v) in units.iter().zip(inverses) {
        if !u.mul(v).is_one() {
            return Err(TorusError::NotAUnit);
        }
    }
    match family {
        Family::Gl => Ok(TorusElement::Mat(Matrix::diagonal(units))),
        Family::Sl => {
            let mut d = units.to_vec();
            d.push(product(inverses));
            Ok(TorusElement::Mat(Matrix::diagonal(&d)))
        }
        Family::Pgl => {
            // entry i is the tail product u_i u_{i+1} ... u_{n-2}
            let mut d = vec![R::one(); n];
            for i in (0..rank).rev() {
                d[i] = d[i + 1].mul(&units[i]);
            }
            Ok(TorusElement::Mat(Matrix::diagonal(&d)))
        }
        Family::SoOdd => {
            let mut d = vec![R::one()];
            for (u, v) in units.iter().zip(inverses) {
                d.push(u.clone());
                d.push(v.clone());
            }
            Ok(TorusElement::Mat(Matrix::diagonal(&d)))
        }
        Family::Sp => {
            let mut d = units.to_vec();
            d.extend_from_slice(inverses);
            Ok(TorusElement::Mat(Matrix::diagonal(&d)))
        }
        Family::Pgsp => {
            // diag(1, l_1 .. l_{n-1}, l_n, l_n/l_1 .. l_n/l_{n-1})
            let last = &units[n - 1];
            let mut d = vec![R::one()];
            d.extend_from_slice(&units[..n - 1]);
            d.push(last.clone());
            for v in &inverses[..n - 1] {
                d.push(last.mul(v));
            }
            Ok(TorusElement::Mat(Matrix::diagonal(&d)))
        }
        Family::PgoPlus => {
            // pairs (u_0 u_i, 1/u_i) for i >= 1 and the last (u_0, 1)
            let mu = &units[0];
            let mut d = Vec::with_capacity(2 * n);
            for (u, v) in units[1..].iter().zip(&inverses[1..]) {
                d.push(mu.mul(u));
                d.push(v.clone());
            }
            d.push(mu.clone());
            d.push(R::one());
            Ok(TorusElement::Mat(Matrix::diagonal(&d)))
        }
        Family::SpinOdd => {
            let alg = CliffordAlgebra::new(QuadraticForm::hyperbolic(2 * n + 1));
            let mut acc = spin_cochar(&alg, (1, 2), None, &units[0], &inverses[0]);
            for j in 1..rank {
                let factor = spin_cochar(
                    &alg,
                    (1, 2),
                    Some((2 * j + 1, 2 * j + 2)),
                    &units[j],
                    &inverses[j],
                );
                acc = alg.mul(&acc, &factor);
            }
            Ok(TorusElement::Cliff(acc))
        }
        Family::SpinEven => {
            let alg = CliffordAlgebra::new(QuadraticForm::hyperbolic(2 * n));
            let mut acc = spin_cochar(&alg, (0, 1), None, &units[0], &inverses[0]);
            for j in 1..rank {
                let factor = spin_cochar(
                    &alg,
                    (0, 1),
                    Some((2 * j, 2 * j + 1)),
                    &units[j],
                    &inverses[j],
                );
                acc = alg.mul(&acc, &factor);
            }
            Ok(TorusElement::Cliff(acc))
        }
    }
}

pub fn torus_point<K: Field>(
    family: Family,
    n: usize,
    units: &[K],
) -> Result<GroupElement<K>, TorusError> {
    let inverses: Vec<K> = units.iter().map(|u| inv(u)).collect::<Result<_, _>>()?;
    match torus_element(family, n, units, &inverses)? {
        TorusElement::Mat(m) => Ok(GroupElement::Mat(m)),
        TorusElement::Cliff(x) => Ok(GroupElement::Cliff(x)),
    }
}

/// Conjugate a weight line's eigenvector by the torus point with the
/// given coordinates, returning it flattened next to the flattened
/// input for comparison against the root monomial.
pub fn conjugated_eigenvector<K: Field>(
    table: &RootTable<K>,
    line: &WeightLine<K>,
    units: &[K],
) -> Result<(Vec<K>, Vec<K>), TorusError> {
    let point = torus_point(table.family, table.n, units)?;
    let inverse_units: Vec<K> = units
        .iter()
        .map(|u| inv(u))
        .collect::<Result<_, _>>()?;
    let point_inv = torus_point(table.family, table.n, &inverse_units)?;
    match (&point, &point_inv, &line.space) {
        (GroupElement::Mat(t), GroupElement::Mat(ti), EigenSpace::Mat(x)) => {
            Ok((t.mul(x).mul(ti).flatten(), x.flatten()))
        }
        (GroupElement::Cliff(t), GroupElement::Cliff(ti), EigenSpace::Cliff(mask)) => {
            let alg = CliffordAlgebra::new(QuadraticForm::hyperbolic(
                table.family.degree(table.n),
            ));
            let x = CliffordElement::from_terms([(*mask, K::one())]);
            let conj = alg.mul(&alg.mul(t, &x), ti);
            let dim = 1u32 << table.family.degree(table.n);
            Ok((
                (0..dim).map(|k| conj.coeff(k)).collect(),
                (0..dim).map(|k| x.coeff(k)).collect(),
            ))
        }
        _ => unreachable!("table eigenvectors match their family's ambient algebra"),
    }
}

/// One-parameter root subgroup point exp(lambda X) attached to a
/// weight line: Id + lambda X - lambda^2 Q in the matrix families
/// (Q zero unless listed), 1 + lambda X in the spin families.
pub fn root_subgroup_point<K: Field>(line: &WeightLine<K>, lambda: &K) -> GroupElement<K> {
    match &line.space {
        EigenSpace::Mat(x) => {
            let d = x.rows;
            let mut m = Matrix::identity(d).add(&x.scale(lambda));
            if let Some(q) = &line.quad {
                m = m.sub(&q.scale(&lambda.mul(lambda)));
            }
            GroupElement::Mat(m)
        }
        EigenSpace::Cliff(mask) => GroupElement::Cliff(CliffordElement::from_terms([
            (0u32, K::one()),
            (*mask, lambda.clone()),
        ])),
    }
}
