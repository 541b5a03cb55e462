//! Quadratic modules over an arbitrary base ring.
//!
//! A form is stored as an upper-triangular coefficient table, never as
//! half of a Gram matrix, so everything here is valid in characteristic 2.
//! The polar form of `q` is `b(x, y) = q(x + y) - q(x) - q(y)`; its Gram
//! matrix is `Q + Qt` with doubled diagonal.

use std::fmt;

use thiserror::Error;

use crate::matrix::Matrix;
use crate::ring::{Field, Ring};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("vector takes a non-unit value under the form")]
    NonUnitVector,
    #[error("operation requires a regular form of even rank")]
    NotRegularEven,
    #[error("operation requires odd rank")]
    NotOddRank,
    #[error("matrix does not preserve the form")]
    NotIsometry,
    #[error("element is outside the subgroup generated by reflections")]
    NotReflectionProduct,
}

/// A bilinear module: a free module with a Gram matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearForm<R: Ring> {
    pub gram: Matrix<R>,
}

impl<R: Ring> BilinearForm<R> {
    pub fn new(gram: Matrix<R>) -> Self {
        assert_eq!(gram.rows, gram.cols);
        BilinearForm { gram }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows
    }

    pub fn evaluate(&self, x: &[R], y: &[R]) -> R {
        let mut acc = R::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc = acc.add(&xi.mul(&self.gram[(i, j)]).mul(yj));
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_alternating(&self) -> bool {
        self.gram == self.gram.transpose().neg()
            && (0..self.gram.rows).all(|i| self.gram[(i, i)].is_zero())
    }

    pub fn determinant_scalar(&self) -> R {
        self.gram.det()
    }
}

impl<K: Field> BilinearForm<K> {
    pub fn radical(&self) -> Vec<Vec<K>> {
        self.gram.kernel_basis()
    }
}

/// q(x) = sum over i <= j of Q[i][j] x_i x_j, with Q upper triangular.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm<R: Ring> {
    coeffs: Matrix<R>,
}

impl<R: Ring> QuadraticForm<R> {
    pub fn from_upper(coeffs: Matrix<R>) -> Self {
        assert_eq!(coeffs.rows, coeffs.cols);
        for i in 0..coeffs.rows {
            for j in 0..i {
                assert!(coeffs[(i, j)].is_zero(), "coefficient table must be upper triangular");
            }
        }
        QuadraticForm { coeffs }
    }

    pub fn zero_form(n: usize) -> Self {
        QuadraticForm { coeffs: Matrix::zero(n, n) }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.rows
    }

    /// Coefficient of x_i x_j, i <= j.
    pub fn coeff(&self, i: usize, j: usize) -> R {
        assert!(i <= j);
        self.coeffs[(i, j)].clone()
    }

    pub fn coeff_table(&self) -> &Matrix<R> {
        &self.coeffs
    }

    /// Hyperbolic module of rank m. Even m = 2n: x1x2 + ... + x_{2n-1}x_{2n}
    /// in consecutive pairs. Odd m = 2n+1: the same plus x0^2, with the
    /// unary basis vector first.
    pub fn hyperbolic(m: usize) -> Self {
        let mut q = Matrix::zero(m, m);
        let start = m % 2;
        if start == 1 {
            q[(0, 0)] = R::one();
        }
        for i in 0..(m - start) / 2 {
            q[(start + 2 * i, start + 2 * i + 1)] = R::one();
        }
        QuadraticForm { coeffs: q }
    }

    /// Diagonal form <a_1, ..., a_n>.
    pub fn diagonal_form(entries: &[R]) -> Self {
        let n = entries.len();
        let mut q = Matrix::zero(n, n);
        for (i, a) in entries.iter().enumerate() {
            q[(i, i)] = a.clone();
        }
        QuadraticForm { coeffs: q }
    }

    /// Binary form [a, b] = a x^2 + xy + b y^2.
    pub fn binary(a: R, b: R) -> Self {
        let mut q = Matrix::zero(2, 2);
        q[(0, 0)] = a;
        q[(0, 1)] = R::one();
        q[(1, 1)] = b;
        QuadraticForm { coeffs: q }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.rank();
        let m = other.rank();
        let mut q = Matrix::zero(n + m, n + m);
        for i in 0..n {
            for j in i..n {
                q[(i, j)] = self.coeffs[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in i..m {
                q[(n + i, n + j)] = other.coeffs[(i, j)].clone();
            }
        }
        QuadraticForm { coeffs: q }
    }

    pub fn evaluate(&self, x: &[R]) -> R {
        assert_eq!(x.len(), self.rank());
        let mut acc = R::zero();
        for i in 0..x.len() {
            if x[i].is_zero() {
                continue;
            }
            for j in i..x.len() {
                acc = acc.add(&self.coeffs[(i, j)].mul(&x[i]).mul(&x[j]));
            }
        }
        acc
    }

    /// b(x, y) = q(x + y) - q(x) - q(y).
    pub fn polar(&self, x: &[R], y: &[R]) -> R {
        let sum: Vec<R> = x.iter().zip(y).map(|(a, b)| a.add(b)).collect();
        self.evaluate(&sum).sub(&self.evaluate(x)).sub(&self.evaluate(y))
    }

    /// Gram matrix of the polar form: Q + Qt.
    pub fn polar_gram(&self) -> Matrix<R> {
        self.coeffs.add(&self.coeffs.transpose())
    }

    pub fn polar_form(&self) -> BilinearForm<R> {
        BilinearForm::new(self.polar_gram())
    }

    /// det of the polar Gram matrix.
    pub fn determinant_scalar(&self) -> R {
        self.polar_gram().det()
    }

    pub fn is_regular(&self) -> bool {
        self.determinant_scalar().is_unit()
    }

    /// The form q(Bx); columns of B are the new basis vectors.
    pub fn transform(&self, b: &Matrix<R>) -> Self {
        assert_eq!(b.rows, self.rank());
        let n = b.cols;
        let cols: Vec<Vec<R>> = (0..n).map(|j| b.col(j)).collect();
        let mut q = Matrix::zero(n, n);
        for i in 0..n {
            q[(i, i)] = self.evaluate(&cols[i]);
            for j in i + 1..n {
                q[(i, j)] = self.polar(&cols[i], &cols[j]);
            }
        }
        QuadraticForm { coeffs: q }
    }

    /// Reindexes the basis: new e_i is old e_{perm[i]}.
    pub fn permute_basis(&self, perm: &[usize]) -> Self {
        let n = self.rank();
        assert_eq!(perm.len(), n);
        let mut b = Matrix::zero(n, n);
        for (i, &p) in perm.iter().enumerate() {
            b[(p, i)] = R::one();
        }
        self.transform(&b)
    }

    /// g preserves q: the polar Gram is preserved and q agrees on basis
    /// vectors. Together these force q(gx) = q(x) for every x, including
    /// in characteristic 2.
    pub fn is_isometry(&self, g: &Matrix<R>) -> bool {
        if g.rows != self.rank() || g.cols != self.rank() {
            return false;
        }
        let gram = self.polar_gram();
        if g.transpose().mul(&gram).mul(g) != gram {
            return false;
        }
        (0..self.rank()).all(|i| {
            let v = g.col(i);
            self.evaluate(&v) == self.coeffs[(i, i)]
        })
    }

    /// tau_v(x) = x - (b(x, v) / q(v)) v. Requires q(v) to be a unit.
    pub fn reflection(&self, v: &[R]) -> Result<Matrix<R>, FormError> {
        let qv_inv = self.evaluate(v).inv().ok_or(FormError::NonUnitVector)?;
        let n = self.rank();
        let mut m: Matrix<R> = Matrix::identity(n);
        for j in 0..n {
            let mut e = vec![R::zero(); n];
            e[j] = R::one();
            let c = self.polar(&e, v).mul(&qv_inv);
            for i in 0..n {
                m[(i, j)] = m[(i, j)].sub(&c.mul(&v[i]));
            }
        }
        Ok(m)
    }
}

/// One step of a binary orthogonal splitting: block [a, b] on the basis
/// pair (u, w) with b(u, w) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryDecomposition<R: Ring> {
    pub blocks: Vec<(R, R)>,
    /// Columns are the new basis vectors, two per block.
    pub basis: Matrix<R>,
}

impl<K: Field> QuadraticForm<K> {
    /// Kernel of the polar form. Only meaningful over a field.
    pub fn radical(&self) -> Vec<Vec<K>> {
        self.polar_gram().kernel_basis()
    }

    /// Odd-rank analogue of regularity: the polar kernel is trivial
    /// (characteristic not 2) or one-dimensional with q a unit on its
    /// generator (characteristic 2).
    pub fn is_semiregular(&self) -> Result<bool, FormError> {
        if self.rank() % 2 == 0 {
            return Err(FormError::NotOddRank);
        }
        let rad = self.radical();
        Ok(match rad.len() {
            0 => true,
            1 => !self.evaluate(&rad[0]).is_zero(),
            _ => false,
        })
    }

    /// Splits a regular even-rank form into an orthogonal sum of binary
    /// blocks [a, b], each with 1 - 4ab a unit. Pivot selection is
    /// deterministic: the first working vector with q nonzero, else the
    /// first pair with nonzero polar pairing.
    pub fn binary_decompose(&self) -> Result<BinaryDecomposition<K>, FormError> {
        let n = self.rank();
        if n % 2 != 0 || !self.is_regular() {
            return Err(FormError::NotRegularEven);
        }
        let mut work: Vec<Vec<K>> = (0..n)
            .map(|i| {
                let mut e = vec![K::zero(); n];
                e[i] = K::one();
                e
            })
            .collect();
        let mut blocks = Vec::new();
        let mut basis_cols: Vec<Vec<K>> = Vec::new();
        while !work.is_empty() {
            let (iu, iw, u, w) = self.pick_block_pair(&work)?;
            let a = self.evaluate(&u);
            let b = self.evaluate(&w);
            // Orthogonalize the rest against span(u, w). The 2x2 polar
            // Gram [[2a, 1], [1, 2b]] has unit determinant 4ab - 1.
            let det = K::from_int(4).mul(&a).mul(&b).sub(&K::one());
            let det_inv = det.inv().ok_or(FormError::NotRegularEven)?;
            let two_a = a.add(&a);
            let two_b = b.add(&b);
            let mut rest = Vec::new();
            for (idx, v) in work.iter().enumerate() {
                if idx == iu || idx == iw {
                    continue;
                }
                let bu = self.polar(v, &u);
                let bw = self.polar(v, &w);
                // alpha, beta with b(v - alpha u - beta w, {u, w}) = 0
                let alpha = two_b.mul(&bu).sub(&bw).mul(&det_inv);
                let beta = two_a.mul(&bw).sub(&bu).mul(&det_inv);
                let v2: Vec<K> = (0..n)
                    .map(|i| v[i].sub(&alpha.mul(&u[i])).sub(&beta.mul(&w[i])))
                    .collect();
                rest.push(v2);
            }
            blocks.push((a, b));
            basis_cols.push(u);
            basis_cols.push(w);
            work = rest;
        }
        let basis = Matrix::from_fn(n, n, |i, j| basis_cols[j][i].clone());
        Ok(BinaryDecomposition { blocks, basis })
    }

    fn pick_block_pair(&self, work: &[Vec<K>]) -> Result<(usize, usize, Vec<K>, Vec<K>), FormError> {
        // First working vector with q(v) nonzero, partnered with the first
        // vector pairing nontrivially against it; if v is orthogonal to all
        // others, mix v into a partner (possible only away from char 2).
        // Either way the consumed pair of work indices spans the block.
        for (i, u) in work.iter().enumerate() {
            if self.evaluate(u).is_zero() {
                continue;
            }
            let partner = work
                .iter()
                .enumerate()
                .find(|(j, v)| *j != i && !self.polar(u, v).is_zero());
            let (j, w_raw): (usize, Vec<K>) = match partner {
                Some((j, v)) => (j, v.clone()),
                None => {
                    let v = work.iter().enumerate().find(|(j, _)| *j != i);
                    match v {
                        Some((j, v)) => {
                            (j, u.iter().zip(v).map(|(a, b)| a.add(b)).collect())
                        }
                        None => return Err(FormError::NotRegularEven),
                    }
                }
            };
            let c = self.polar(u, &w_raw);
            let c_inv = c.inv().ok_or(FormError::NotRegularEven)?;
            let w: Vec<K> = w_raw.iter().map(|x| x.mul(&c_inv)).collect();
            return Ok((i, j, u.clone(), w));
        }
        // Totally isotropic basis: first pair with nonzero pairing.
        for (i, u) in work.iter().enumerate() {
            for (j, v) in work.iter().enumerate().skip(i + 1) {
                let c = self.polar(u, v);
                if let Some(c_inv) = c.inv() {
                    let w: Vec<K> = v.iter().map(|x| x.mul(&c_inv)).collect();
                    return Ok((i, j, u.clone(), w));
                }
            }
        }
        Err(FormError::NotRegularEven)
    }

    /// Factors an isometry into reflections: the returned vectors satisfy
    /// tau_{v_1} ... tau_{v_k} = g with k <= 2 rank. Greedy column fixing,
    /// with a two-reflection repair through an intermediate vector when the
    /// direct difference is isotropic, and an exhaustive search over the
    /// reflection subgroup as a last resort over small finite fields.
    pub fn cartan_dieudonne(&self, g: &Matrix<K>) -> Result<Vec<Vec<K>>, FormError> {
        if !self.is_isometry(g) {
            return Err(FormError::NotIsometry);
        }
        let n = self.rank();
        let mut h = g.clone();
        let mut out: Vec<Vec<K>> = Vec::new();
        for i in 0..n {
            let x: Vec<K> = (0..n).map(|r| if r == i { K::one() } else { K::zero() }).collect();
            let y = h.col(i);
            if y == x {
                continue;
            }
            let u: Vec<K> = y.iter().zip(&x).map(|(a, b)| a.sub(b)).collect();
            if !self.evaluate(&u).is_zero() {
                h = self.reflection(&u).unwrap().mul(&h);
                out.push(u);
                continue;
            }
            match self.repair_vector(&h, i, &x, &y) {
                Some(z) => {
                    let w1: Vec<K> = z.iter().zip(&y).map(|(a, b)| a.sub(b)).collect();
                    let w2: Vec<K> = x.iter().zip(&z).map(|(a, b)| a.sub(b)).collect();
                    h = self.reflection(&w1).unwrap().mul(&h);
                    h = self.reflection(&w2).unwrap().mul(&h);
                    out.push(w1);
                    out.push(w2);
                }
                None => return self.reflection_search(g),
            }
        }
        debug_assert!(h.is_identity());
        Ok(out)
    }

    /// Intermediate z with q(z) = q(x), q(z - y) and q(z - x) nonzero, and
    /// the same pairing as x against every already-fixed basis vector, so
    /// that tau_{x-z} tau_{z-y} sends y to x and keeps the fixed space.
    fn repair_vector(&self, h: &Matrix<K>, i: usize, x: &[K], y: &[K]) -> Option<Vec<K>> {
        let n = self.rank();
        let fixed: Vec<Vec<K>> = (0..i)
            .filter(|&j| {
                let e: Vec<K> =
                    (0..n).map(|r| if r == j { K::one() } else { K::zero() }).collect();
                h.col(j) == e
            })
            .map(|j| (0..n).map(|r| if r == j { K::one() } else { K::zero() }).collect())
            .collect();
        let qx = self.evaluate(x);
        let ok = |z: &Vec<K>| {
            if self.evaluate(z) != qx {
                return false;
            }
            let d1: Vec<K> = z.iter().zip(y).map(|(a, b)| a.sub(b)).collect();
            let d2: Vec<K> = z.iter().zip(x).map(|(a, b)| a.sub(b)).collect();
            if self.evaluate(&d1).is_zero() || self.evaluate(&d2).is_zero() {
                return false;
            }
            fixed.iter().all(|e| self.polar(e, z) == self.polar(e, x))
        };
        match K::enumerate() {
            Some(elems) => vectors_over(elems, n).find(ok),
            None => {
                let small: Vec<K> = (-2..=2).map(K::from_int).collect();
                vectors_over(small, n).find(ok)
            }
        }
    }

    /// Breadth-first search over products of reflections; complete on the
    /// subgroup they generate. Finite fields only.
    fn reflection_search(&self, g: &Matrix<K>) -> Result<Vec<Vec<K>>, FormError> {
        use std::collections::{HashMap, VecDeque};
        let elems = K::enumerate().ok_or(FormError::NotReflectionProduct)?;
        let n = self.rank();
        let mut mirrors: Vec<(Vec<K>, Matrix<K>)> = Vec::new();
        for v in vectors_over(elems.clone(), n) {
            // normalize to first nonzero coordinate 1: tau_v only depends
            // on v up to scaling
            let lead = match v.iter().position(|c| !c.is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if !v[lead].is_one() {
                continue;
            }
            if let Ok(m) = self.reflection(&v) {
                mirrors.push((v, m));
            }
        }
        let id = Matrix::identity(n);
        if g.is_identity() {
            return Ok(Vec::new());
        }
        let mut seen: HashMap<Matrix<K>, Option<(Matrix<K>, Vec<K>)>> = HashMap::new();
        seen.insert(g.clone(), None);
        let mut queue = VecDeque::from([g.clone()]);
        while let Some(cur) = queue.pop_front() {
            for (v, m) in &mirrors {
                let next = m.mul(&cur);
                if seen.contains_key(&next) {
                    continue;
                }
                seen.insert(next.clone(), Some((cur.clone(), v.clone())));
                if next == id {
                    let mut path = Vec::new();
                    let mut state = next;
                    while let Some(Some((prev, v))) = seen.get(&state) {
                        path.push(v.clone());
                        state = prev.clone();
                    }
                    return Ok(path);
                }
                queue.push_back(next);
            }
        }
        Err(FormError::NotReflectionProduct)
    }
}

/// All vectors of the given length with coordinates drawn from `elems`.
pub fn vectors_over<K: Clone>(elems: Vec<K>, len: usize) -> impl Iterator<Item = Vec<K>> {
    let total = elems.len().checked_pow(len as u32).expect("search space too large");
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let c = elems[code % elems.len()].clone();
                code /= elems.len();
                c
            })
            .collect()
    })
}

impl<R: Ring> fmt::Debug for QuadraticForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm({:?})", self.coeffs)
    }
}

impl<R: Ring> fmt::Display for QuadraticForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.rank() {
            for j in i..self.rank() {
                let c = &self.coeffs[(i, j)];
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if i == j {
                    write!(f, "{c}*x{i}^2")?;
                } else {
                    write!(f, "{c}*x{i}*x{j}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
