//! Root data computed from the groups themselves. Torus weights on
//! the Lie algebra are found by probing one cocharacter direction at
//! a time with the unit 2 and splitting into joint eigenspaces, then
//! confirmed symbolically over a Laurent polynomial ring in the torus
//! coordinates. Coroots are recovered independently by a bounded
//! lattice search. The abstract datum type checks the axioms and
//! derives the simple system, the Dynkin classification with its
//! isogeny flags, and the center.

use crate::clifford::{CliffordAlgebra, CliffordElement};
use crate::laurent::Laurent;
use crate::lie::{lie_algebra, LieElement, LieError};
use crate::matrix::{Matrix, Span};
use crate::quadform::QuadraticForm;
use crate::ring::{rat, Field, Int, Rat, Ring};
use crate::snf::smith_normal_form;
use crate::tables::{DynkinType, Family, RootTable};
use crate::tori::{torus_element, TorusElement, TorusError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDataError {
    #[error("roots and coroots must come in equal numbers")]
    Misaligned,
    #[error("zero, repeated, or non-reduced root")]
    Degenerate,
    #[error("a root pairs with its coroot to a value other than 2")]
    BadPairing,
    #[error("a root reflection does not permute the datum")]
    NotStable,
    #[error("simple system does not match any classical diagram")]
    UnknownDiagram,
    #[error("no unique coroot within the search bound")]
    CorootSearchFailed,
    #[error("torus probe did not split the Lie algebra into weight lines")]
    UnsplitWeight,
    #[error("computed weight lies outside the character lattice")]
    NonIntegralWeight,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Table(#[from] crate::tables::TableError),
}

/// Roots and coroots in the printed bases, aligned index by index,
/// with the explicit pairing between the two bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub pairing: Vec<Vec<i64>>,
}

fn dot_through(a: &[i64], pairing: &[Vec<i64>], g: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, ai) in a.iter().enumerate() {
        for (j, gj) in g.iter().enumerate() {
            acc += ai * pairing[i][j] * gj;
        }
    }
    acc
}

fn collinear(a: &[i64], b: &[i64]) -> bool {
    // cross products vanish pairwise
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i] * b[j] != a[j] * b[i] {
                return false;
            }
        }
    }
    true
}

impl RootDatum {
    pub fn from_table<K: Field>(t: &RootTable<K>) -> RootDatum {
        RootDatum {
            rank: t.rank,
            roots: t.roots(),
            coroots: t.coroots(),
            pairing: t.pairing.clone(),
        }
    }

    pub fn pair(&self, a: &[i64], g: &[i64]) -> i64 {
        dot_through(a, &self.pairing, g)
    }

    fn reflect_root(&self, beta: &[i64], alpha: &[i64], coroot: &[i64]) -> Vec<i64> {
        let c = self.pair(beta, coroot);
        beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect()
    }

    fn reflect_coroot(&self, delta: &[i64], alpha: &[i64], coroot: &[i64]) -> Vec<i64> {
        let c = self.pair(alpha, delta);
        delta.iter().zip(coroot).map(|(d, g)| d - c * g).collect()
    }

    /// Root datum axioms: perfect self-pairing, reflections permuting
    /// roots and coroots compatibly, and reducedness.
    pub fn validate(&self) -> Result<(), RootDataError> {
        if self.roots.len() != self.coroots.len() {
            return Err(RootDataError::Misaligned);
        }
        for (i, a) in self.roots.iter().enumerate() {
            if a.iter().all(|c| *c == 0) {
                return Err(RootDataError::Degenerate);
            }
            for (j, b) in self.roots.iter().enumerate() {
                if i != j && collinear(a, b) {
                    let negated: Vec<i64> = a.iter().map(|c| -c).collect();
                    if *b != negated {
                        return Err(RootDataError::Degenerate);
                    }
                }
            }
        }
        for (a, g) in self.roots.iter().zip(&self.coroots) {
            if self.pair(a, g) != 2 {
                return Err(RootDataError::BadPairing);
            }
        }
        for (a, g) in self.roots.iter().zip(&self.coroots) {
            for (b, d) in self.roots.iter().zip(&self.coroots) {
                let rb = self.reflect_root(b, a, g);
                let rd = self.reflect_coroot(d, a, g);
                match self.roots.iter().position(|r| *r == rb) {
                    Some(k) if self.coroots[k] == rd => {}
                    _ => return Err(RootDataError::NotStable),
                }
            }
        }
        Ok(())
    }

    fn coroot_of(&self, root: &[i64]) -> Option<&Vec<i64>> {
        self.roots
            .iter()
            .position(|r| r == root)
            .map(|k| &self.coroots[k])
    }

    /// Base of the system cut out by a generic positivity functional,
    /// injective on roots because the coordinates are bounded.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        if self.roots.is_empty() {
            return Vec::new();
        }
        let bound = self
            .roots
            .iter()
            .flat_map(|r| r.iter().map(|c| c.abs()))
            .max()
            .unwrap_or(0);
        let base = 2 * bound + 1;
        let value = |r: &[i64]| -> i64 {
            r.iter().fold(0i64, |acc, c| acc * base + c)
        };
        let positive: Vec<&Vec<i64>> = self.roots.iter().filter(|r| value(r) > 0).collect();
        let mut simple: Vec<Vec<i64>> = positive
            .iter()
            .filter(|r| {
                !positive.iter().any(|s| {
                    positive.iter().any(|t| {
                        r.iter()
                            .zip(s.iter().zip(t.iter()))
                            .all(|(rc, (sc, tc))| *rc == sc + tc)
                    })
                })
            })
            .map(|r| (*r).clone())
            .collect();
        simple.sort();
        simple
    }

    /// cartan[i][j] = <alpha_j, alpha_i^vee> over the given base.
    pub fn cartan_matrix(&self, base: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, RootDataError> {
        let co: Vec<&Vec<i64>> = base
            .iter()
            .map(|a| self.coroot_of(a).ok_or(RootDataError::UnknownDiagram))
            .collect::<Result<_, _>>()?;
        Ok(base
            .iter()
            .enumerate()
            .map(|(i, _)| base.iter().map(|aj| self.pair(aj, co[i])).collect())
            .collect())
    }

    pub fn dynkin(&self) -> Result<DynkinType, RootDataError> {
        self.dynkin_of_base(&self.simple_roots())
    }

    /// Classify the diagram of a claimed base. Conventions: a single
    /// node is ('A', 1), the rank-2 double edge is ('B', 2), a triple
    /// path is ('A', 3), so the low even orthogonal coincidences are
    /// reported on the A side.
    pub fn dynkin_of_base(&self, base: &[Vec<i64>]) -> Result<DynkinType, RootDataError> {
        let s = base.len();
        let cartan = self.cartan_matrix(base)?;
        let mut seen = vec![false; s];
        let mut components = Vec::new();
        for start in 0..s {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for y in 0..s {
                    if !seen[y] && cartan[x][y] != 0 {
                        seen[y] = true;
                        comp.push(y);
                        frontier.push(y);
                    }
                }
            }
            comp.sort();
            components.push(comp);
        }
        let mut types: DynkinType = components
            .iter()
            .map(|comp| classify_component(comp, &cartan))
            .collect::<Result<_, _>>()?;
        types.sort();
        Ok(types)
    }

    /// True when every root is an all-nonnegative or all-nonpositive
    /// integer combination of the claimed base.
    pub fn is_base(&self, base: &[Vec<i64>]) -> bool {
        if base.is_empty() {
            return self.roots.is_empty();
        }
        let a = Matrix::from_fn(self.rank, base.len(), |i, j| rat(base[j][i], 1));
        self.roots.iter().all(|root| {
            let target: Vec<Rat> = root.iter().map(|c| rat(*c, 1)).collect();
            match a.solve(&target) {
                None => false,
                Some(x) => {
                    x.iter().all(|c| c.is_integer())
                        && (x.iter().all(|c| *c >= Rat::zero())
                            || x.iter().all(|c| *c <= Rat::zero()))
                }
            }
        })
    }

    fn lattice_divisors(vectors: &[Vec<i64>], rank: usize) -> Vec<i64> {
        if vectors.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_fn(vectors.len(), rank, |i, j| Int::from(vectors[i][j]));
        smith_normal_form(&m)
            .divisors
            .iter()
            .map(|d| {
                let s = d.to_string();
                s.parse::<i64>().expect("small divisor")
            })
            .collect()
    }

    /// Roots generate the full character lattice.
    pub fn is_adjoint(&self) -> bool {
        let d = Self::lattice_divisors(&self.roots, self.rank);
        d.iter().filter(|x| **x != 0).count() == self.rank && d.iter().all(|x| *x == 1)
    }

    /// Coroots generate the full cocharacter lattice.
    pub fn is_simply_connected(&self) -> bool {
        let d = Self::lattice_divisors(&self.coroots, self.rank);
        d.iter().filter(|x| **x != 0).count() == self.rank && d.iter().all(|x| *x == 1)
    }

    /// Invariant factors (> 1) and free rank of characters modulo the
    /// root lattice: the cyclic decomposition of the center.
    pub fn center(&self) -> (Vec<i64>, usize) {
        let d = Self::lattice_divisors(&self.roots, self.rank);
        let nonzero = d.iter().filter(|x| **x != 0).count();
        let finite = d.iter().filter(|x| **x > 1).cloned().collect();
        (finite, self.rank - nonzero)
    }
}

fn classify_component(comp: &[usize], cartan: &[Vec<i64>]) -> Result<(char, usize), RootDataError> {
    let k = comp.len();
    if k == 1 {
        return Ok(('A', 1));
    }
    let edge = |x: usize, y: usize| cartan[x][y] * cartan[y][x];
    let neighbors = |x: usize| -> Vec<usize> {
        comp.iter().copied().filter(|y| *y != x && cartan[x][*y] != 0).collect()
    };
    let mut double_edges = Vec::new();
    for (idx, &x) in comp.iter().enumerate() {
        for &y in &comp[idx + 1..] {
            match edge(x, y) {
                0 | 1 => {}
                2 => double_edges.push((x, y)),
                _ => return Err(RootDataError::UnknownDiagram),
            }
        }
    }
    let degs: Vec<usize> = comp.iter().map(|&x| neighbors(x).len()).collect();
    let edge_count: usize = degs.iter().sum::<usize>() / 2;
    if edge_count != k - 1 {
        return Err(RootDataError::UnknownDiagram);
    }
    let is_path = degs.iter().all(|d| *d <= 2);
    match double_edges.len() {
        0 => {
            if is_path {
                Ok(('A', k))
            } else {
                // a tree with one triple node and two length-1 arms
                let triples: Vec<&usize> = comp.iter().filter(|&&x| neighbors(x).len() == 3).collect();
                let leaves_at_triple = |x: usize| {
                    neighbors(x)
                        .iter()
                        .filter(|&&y| neighbors(y).len() == 1)
                        .count()
                };
                if triples.len() == 1
                    && degs.iter().all(|d| *d <= 3)
                    && leaves_at_triple(*triples[0]) >= 2
                    && k >= 4
                {
                    Ok(('D', k))
                } else {
                    Err(RootDataError::UnknownDiagram)
                }
            }
        }
        1 => {
            if k == 2 {
                return Ok(('B', 2));
            }
            if !is_path {
                return Err(RootDataError::UnknownDiagram);
            }
            let (x, y) = double_edges[0];
            let (end, other) = if neighbors(x).len() == 1 {
                (x, y)
            } else if neighbors(y).len() == 1 {
                (y, x)
            } else {
                return Err(RootDataError::UnknownDiagram);
            };
            // short end: the neighbor pairs to -2 against the end's coroot
            if cartan[end][other] == -2 {
                Ok(('B', k))
            } else if cartan[other][end] == -2 {
                Ok(('C', k))
            } else {
                Err(RootDataError::UnknownDiagram)
            }
        }
        _ => Err(RootDataError::UnknownDiagram),
    }
}

/// For each root, search the box |coordinate| <= bound for cocharacter
/// vectors pairing to 2 whose reflection permutes the root set, and
/// keep the unique candidate of least squared length.
pub fn coroot_search(
    roots: &[Vec<i64>],
    pairing: &[Vec<i64>],
    bound: i64,
) -> Result<Vec<Vec<i64>>, RootDataError> {
    let rank = pairing.len();
    let root_set: std::collections::HashSet<&Vec<i64>> = roots.iter().collect();
    let mut found = Vec::with_capacity(roots.len());
    for alpha in roots {
        let mut best: Option<(i64, Vec<i64>)> = None;
        let mut tied = false;
        let mut gamma = vec![-bound; rank];
        loop {
            if dot_through(alpha, pairing, &gamma) == 2 {
                let stable = roots.iter().all(|beta| {
                    let c = dot_through(beta, pairing, &gamma);
                    let image: Vec<i64> =
                        beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect();
                    root_set.contains(&image)
                });
                if stable {
                    let norm: i64 = gamma.iter().map(|c| c * c).sum();
                    match &best {
                        Some((m, g)) if *m == norm && *g != gamma => tied = true,
                        Some((m, _)) if *m > norm => {
                            best = Some((norm, gamma.clone()));
                            tied = false;
                        }
                        None => best = Some((norm, gamma.clone())),
                        _ => {}
                    }
                }
            }
            // odometer over the box
            let mut k = 0;
            loop {
                if k == rank {
                    break;
                }
                gamma[k] += 1;
                if gamma[k] <= bound {
                    break;
                }
                gamma[k] = -bound;
                k += 1;
            }
            if k == rank {
                break;
            }
        }
        match (best, tied) {
            (Some((_, g)), false) => found.push(g),
            _ => return Err(RootDataError::CorootSearchFailed),
        }
    }
    Ok(found)
}

/// One weight line of the adjoint torus action: exponents on the unit
/// coordinates, the same weight rewritten in the printed character
/// basis, and the coordinates of the eigenvector in the Lie basis.
#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub exponents: Vec<i64>,
    pub root: Vec<i64>,
    pub coordinates: Vec<Rat>,
}

#[derive(Debug, Clone)]
pub struct ComputedWeights {
    pub family: Family,
    pub n: usize,
    pub rank: usize,
    pub zero_weight_dim: usize,
    pub spaces: Vec<WeightSpace>,
}

impl ComputedWeights {
    pub fn roots(&self) -> Vec<Vec<i64>> {
        self.spaces.iter().map(|s| s.root.clone()).collect()
    }
}

struct AmbientLie {
    family: Family,
    n: usize,
    elements: Vec<LieElement<Rat>>,
    span: Span<Rat>,
    modulo_scalars: bool,
    alg: Option<CliffordAlgebra<Rat>>,
}

fn flatten_element(x: &LieElement<Rat>, ambient_bits: usize) -> Vec<Rat> {
    match x {
        LieElement::Mat(m) => m.flatten(),
        LieElement::Cliff(c) => (0..1u32 << ambient_bits).map(|k| c.coeff(k)).collect(),
    }
}

fn ambient_lie(family: Family, n: usize) -> Result<AmbientLie, RootDataError> {
    let group = family.group::<Rat>(n);
    let basis = lie_algebra(&group)?;
    let degree = family.degree(n);
    let flats: Vec<Vec<Rat>> = basis
        .vectors
        .iter()
        .map(|v| flatten_element(v, degree))
        .collect();
    let mut span_vectors = flats.clone();
    if basis.modulo_scalars {
        span_vectors.push(Matrix::<Rat>::identity(degree).flatten());
    }
    let alg = match family {
        Family::SpinOdd | Family::SpinEven => Some(CliffordAlgebra::new(
            QuadraticForm::hyperbolic(degree),
        )),
        _ => None,
    };
    Ok(AmbientLie {
        family,
        n,
        elements: basis.vectors,
        span: Span::new(span_vectors),
        modulo_scalars: basis.modulo_scalars,
        alg,
    })
}

impl AmbientLie {
    fn dim(&self) -> usize {
        self.elements.len()
    }

    /// Matrix of Ad(T(units)) in the Lie basis.
    fn adjoint_matrix(&self, units: &[Rat]) -> Result<Matrix<Rat>, RootDataError> {
        let inverses: Vec<Rat> = units
            .iter()
            .map(|u| u.inv().ok_or(TorusError::NotAUnit))
            .collect::<Result<_, _>>()?;
        let t = torus_element(self.family, self.n, units, &inverses)?;
        let ti = torus_element(self.family, self.n, &inverses, units)?;
        let d = self.dim();
        let degree = self.family.degree(self.n);
        let mut out = Matrix::zero(d, d);
        for (j, x) in self.elements.iter().enumerate() {
            let conj = match (&t, &ti, x) {
                (TorusElement::Mat(a), TorusElement::Mat(b), LieElement::Mat(m)) => {
                    flatten_element(&LieElement::Mat(a.mul(m).mul(b)), degree)
                }
                (TorusElement::Cliff(a), TorusElement::Cliff(b), LieElement::Cliff(c)) => {
                    let alg = self.alg.as_ref().expect("clifford ambient");
                    flatten_element(&LieElement::Cliff(alg.mul(&alg.mul(a, c), b)), degree)
                }
                _ => unreachable!("ambient kinds match per family"),
            };
            let coords = self
                .span
                .coordinates(&conj)
                .ok_or(RootDataError::UnsplitWeight)?;
            for i in 0..d {
                out[(i, j)] = coords[i].clone();
            }
        }
        Ok(out)
    }
}

fn two_pow(c: i64) -> Rat {
    rat(2, 1).pow(c as i32)
}

/// Decompose the Lie algebra into joint eigenspaces of the adjoint
/// torus action, probing one coordinate direction at a time. Each
/// nonzero weight must cut out a line and the weights together must
/// exhaust the algebra, so the result is a certified weight-space
/// decomposition rather than a heuristic.
pub fn computed_weights(family: Family, n: usize) -> Result<ComputedWeights, RootDataError> {
    let ambient = ambient_lie(family, n)?;
    let rank = family.rank(n);
    let d = ambient.dim();
    let identity_coords: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let mut pieces: Vec<(Vec<i64>, Vec<Vec<Rat>>)> = vec![(Vec::new(), identity_coords)];
    for dir in 0..rank {
        let mut units = vec![Rat::one(); rank];
        units[dir] = rat(2, 1);
        let ad = ambient.adjoint_matrix(&units)?;
        let mut next = Vec::new();
        for (prefix, basis) in &pieces {
            let dim_s = basis.len();
            let span = Span::new(basis.clone());
            let mut restricted = Matrix::zero(dim_s, dim_s);
            for (j, b) in basis.iter().enumerate() {
                let image = ad.mul_vec(b);
                let coords = span
                    .coordinates(&image)
                    .ok_or(RootDataError::UnsplitWeight)?;
                for i in 0..dim_s {
                    restricted[(i, j)] = coords[i].clone();
                }
            }
            let mut captured = 0;
            for c in -3..=3i64 {
                let shifted =
                    restricted.sub(&Matrix::identity(dim_s).scale(&two_pow(c)));
                let kernel = shifted.kernel_basis();
                if kernel.is_empty() {
                    continue;
                }
                captured += kernel.len();
                let mapped: Vec<Vec<Rat>> = kernel
                    .iter()
                    .map(|x| {
                        let mut v = vec![Rat::zero(); d];
                        for (coef, bvec) in x.iter().zip(basis) {
                            for (vi, bi) in v.iter_mut().zip(bvec) {
                                *vi = vi.add(&coef.mul(bi));
                            }
                        }
                        v
                    })
                    .collect();
                let mut p = prefix.clone();
                p.push(c);
                next.push((p, mapped));
            }
            if captured != dim_s {
                return Err(RootDataError::UnsplitWeight);
            }
        }
        pieces = next;
    }
    let mut zero_weight_dim = 0;
    let mut spaces = Vec::new();
    for (w, basis) in pieces {
        if w.iter().all(|c| *c == 0) {
            zero_weight_dim += basis.len();
            continue;
        }
        if basis.len() != 1 {
            return Err(RootDataError::UnsplitWeight);
        }
        spaces.push(WeightSpace {
            exponents: w,
            root: Vec::new(),
            coordinates: basis.into_iter().next().unwrap(),
        });
    }
    Ok(ComputedWeights {
        family,
        n,
        rank,
        zero_weight_dim,
        spaces,
    })
}

/// Rewrite unit-coordinate exponents in the printed character basis
/// by inverting the transpose of the pairing matrix.
pub fn exponents_to_characters(
    pairing: &[Vec<i64>],
    computed: &mut ComputedWeights,
) -> Result<(), RootDataError> {
    let rank = computed.rank;
    let pt = Matrix::from_fn(rank, rank, |i, j| rat(pairing[j][i], 1));
    for space in &mut computed.spaces {
        let target: Vec<Rat> = space.exponents.iter().map(|c| rat(*c, 1)).collect();
        let sol = pt.solve(&target).ok_or(RootDataError::NonIntegralWeight)?;
        let mut root = Vec::with_capacity(rank);
        for c in sol {
            if !c.is_integer() {
                return Err(RootDataError::NonIntegralWeight);
            }
            root.push(
                c.to_integer()
                    .to_string()
                    .parse::<i64>()
                    .expect("small weight"),
            );
        }
        space.root = root;
    }
    Ok(())
}

fn to_symbolic_matrix(m: &Matrix<Rat>) -> Matrix<Laurent> {
    Matrix::from_fn(m.rows, m.cols, |i, j| Laurent::constant(m[(i, j)].clone()))
}

fn to_symbolic_cliff(c: &CliffordElement<Rat>) -> CliffordElement<Laurent> {
    CliffordElement::from_terms(
        c.terms()
            .map(|(mask, coeff)| (mask, Laurent::constant(coeff.clone()))),
    )
}

fn equal_up_to_scalar_matrix(a: &Matrix<Laurent>, b: &Matrix<Laurent>) -> bool {
    let diff = a.sub(b);
    for i in 0..diff.rows {
        for j in 0..diff.cols {
            if i != j && !diff[(i, j)].is_zero() {
                return false;
            }
        }
    }
    (1..diff.rows).all(|i| diff[(i, i)] == diff[(0, 0)])
}

/// Confirm every computed weight line symbolically: conjugating the
/// eigenvector by the torus point with indeterminate coordinates
/// multiplies it by exactly the weight monomial, as an identity of
/// Laurent polynomials. Quotient families are checked modulo scalar
/// matrices.
pub fn symbolic_weight_check(computed: &ComputedWeights) -> Result<(), RootDataError> {
    let family = computed.family;
    let n = computed.n;
    let rank = computed.rank;
    let ambient = ambient_lie(family, n)?;
    let units: Vec<Laurent> = (0..rank).map(Laurent::var).collect();
    let inverses: Vec<Laurent> = (0..rank)
        .map(|k| {
            let mut e = vec![0i32; k + 1];
            e[k] = -1;
            Laurent::monomial_exp(&e, Rat::one())
        })
        .collect();
    let t = torus_element(family, n, &units, &inverses)?;
    let ti = torus_element(family, n, &inverses, &units)?;
    let sym_alg = ambient
        .alg
        .as_ref()
        .map(|a| CliffordAlgebra::new(QuadraticForm::<Laurent>::hyperbolic(a.form().rank())));
    for space in &computed.spaces {
        let exps: Vec<i32> = space.exponents.iter().map(|c| *c as i32).collect();
        let monomial = Laurent::monomial_exp(&exps, Rat::one());
        // assemble the eigenvector from its Lie-basis coordinates
        let mut mat_acc: Option<Matrix<Rat>> = None;
        let mut cliff_acc: Option<CliffordElement<Rat>> = None;
        for (coef, elem) in space.coordinates.iter().zip(&ambient.elements) {
            if coef.is_zero() {
                continue;
            }
            match elem {
                LieElement::Mat(m) => {
                    let term = m.scale(coef);
                    mat_acc = Some(match mat_acc {
                        None => term,
                        Some(acc) => acc.add(&term),
                    });
                }
                LieElement::Cliff(c) => {
                    let term = c.scale(coef);
                    cliff_acc = Some(match cliff_acc {
                        None => term,
                        Some(acc) => acc.add(&term),
                    });
                }
            }
        }
        let ok = match (&t, &ti) {
            (TorusElement::Mat(tm), TorusElement::Mat(tim)) => {
                let x = to_symbolic_matrix(&mat_acc.expect("matrix family"));
                let conj = tm.mul(&x).mul(tim);
                let scaled = x.scale(&monomial);
                if ambient.modulo_scalars {
                    equal_up_to_scalar_matrix(&conj, &scaled)
                } else {
                    conj == scaled
                }
            }
            (TorusElement::Cliff(tc), TorusElement::Cliff(tic)) => {
                let alg = sym_alg.as_ref().expect("clifford family");
                let x = to_symbolic_cliff(&cliff_acc.expect("clifford family"));
                let conj = alg.mul(&alg.mul(tc, &x), tic);
                conj == x.scale(&monomial)
            }
            _ => unreachable!("torus element kinds agree"),
        };
        if !ok {
            return Err(RootDataError::UnsplitWeight);
        }
    }
    Ok(())
}

/// Full pipeline: probe the group's own Lie algebra for its weights,
/// translate to the printed character basis, and certify the result
/// symbolically.
pub fn computed_root_datum(family: Family, n: usize) -> Result<ComputedWeights, RootDataError> {
    let table = crate::tables::root_table::<Rat>(family, n)?;
    let mut computed = computed_weights(family, n)?;
    exponents_to_characters(&table.pairing, &mut computed)?;
    symbolic_weight_check(&computed)?;
    Ok(computed)
}
