//! Transcribed split root data: for each classical family the weight
//! lines of the adjoint torus action (root, coroot, eigenvector, and
//! any second-order exponential term), the printed simple system, the
//! Dynkin type with its isogeny flags, the center, and the exponent
//! matrix of the central isogeny from the simply connected group onto
//! the adjoint one.
//!
//! Bases are the printed ones, so a root or coroot is a plain integer
//! vector. Character and cocharacter bases are dual for every family
//! except the special linear one, whose printed bases pair through a
//! triangular matrix; the pairing matrix is carried explicitly for
//! that reason.

use crate::groups::Group;
use crate::matrix::Matrix;
use crate::quadform::QuadraticForm;
use crate::ring::{Field, Int};
use crate::snf::invariant_factors;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// GL_n, rank n, reductive with a one dimensional central torus.
    Gl,
    /// SL_n, rank n-1, simply connected of type A_{n-1}.
    Sl,
    /// PGL_n, rank n-1, adjoint of type A_{n-1}.
    Pgl,
    /// SO_{2n+1}, rank n, adjoint of type B_n.
    SoOdd,
    /// Spin_{2n+1}, rank n, simply connected of type B_n.
    SpinOdd,
    /// Sp_{2n}, rank n, simply connected of type C_n.
    Sp,
    /// PGSp_{2n}, rank n, adjoint of type C_n.
    Pgsp,
    /// PGO+_{2n}, rank n, adjoint of type D_n.
    PgoPlus,
    /// Spin_{2n}, rank n, simply connected of type D_n.
    SpinEven,
}

impl Family {
    pub fn all() -> [Family; 9] {
        [
            Family::Gl,
            Family::Sl,
            Family::Pgl,
            Family::SoOdd,
            Family::SpinOdd,
            Family::Sp,
            Family::Pgsp,
            Family::PgoPlus,
            Family::SpinEven,
        ]
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::Pgl => "pgl",
            Family::SoOdd => "so",
            Family::SpinOdd => "spin",
            Family::Sp => "sp",
            Family::Pgsp => "pgsp",
            Family::PgoPlus => "pgo-plus",
            Family::SpinEven => "spin-even",
        }
    }

    /// Torus rank of the instance with family parameter n.
    pub fn rank(self, n: usize) -> usize {
        match self {
            Family::Gl => n,
            Family::Sl | Family::Pgl => n - 1,
            _ => n,
        }
    }

    /// Number of rows of the defining matrix or quadratic space.
    pub fn degree(self, n: usize) -> usize {
        match self {
            Family::Gl | Family::Sl | Family::Pgl => n,
            Family::SoOdd | Family::SpinOdd => 2 * n + 1,
            _ => 2 * n,
        }
    }

    /// Smallest family parameter with a meaningful instance.
    pub fn min_parameter(self) -> usize {
        match self {
            Family::Gl => 1,
            Family::Sl | Family::Pgl => 2,
            Family::SoOdd | Family::SpinOdd | Family::Sp | Family::Pgsp => 1,
            Family::PgoPlus | Family::SpinEven => 2,
        }
    }

    pub fn group<K: Field>(self, n: usize) -> Group<K> {
        match self {
            Family::Gl => Group::Gl(n),
            Family::Sl => Group::Sl(n),
            Family::Pgl => Group::Pgl(n),
            Family::SoOdd => Group::So(QuadraticForm::hyperbolic(2 * n + 1)),
            Family::SpinOdd => Group::Spin(QuadraticForm::hyperbolic(2 * n + 1)),
            Family::Sp => Group::Sp(n),
            Family::Pgsp => Group::Pgsp(n),
            Family::PgoPlus => Group::Pgoplus(QuadraticForm::hyperbolic(2 * n)),
            Family::SpinEven => Group::Spin(QuadraticForm::hyperbolic(2 * n)),
        }
    }
}

/// Eigenvector of a nonzero torus weight, inside the ambient matrix
/// algebra or as a basis product of the Clifford algebra.
#[derive(Clone, Debug)]
pub enum EigenSpace<K: Field> {
    Mat(Matrix<K>),
    /// Bit mask of the generator product e_i e_j (two bits set).
    Cliff(u32),
}

#[derive(Clone, Debug)]
pub struct WeightLine<K: Field> {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    pub space: EigenSpace<K>,
    /// Second-order term Q when the exponential is Id + lambda X -
    /// lambda^2 Q instead of the straight line Id + lambda X.
    pub quad: Option<Matrix<K>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CenterKind {
    /// Product of cyclic factors mu_d with d > 1; empty means trivial.
    Finite(Vec<i64>),
    /// A central torus of the given rank.
    Torus(usize),
}

/// Connected Dynkin components, e.g. [('B', 3)] or [('A',1),('A',1)].
/// Conventions: a single node is ('A',1), a rank-2 double edge is
/// ('B',2), a triple path is ('A',3) even when it arises from a rank-3
/// even orthogonal group, and ('D',2) is reported as two A_1 pieces.
pub type DynkinType = Vec<(char, usize)>;

#[derive(Clone, Debug)]
pub struct RootTable<K: Field> {
    pub family: Family,
    pub n: usize,
    pub rank: usize,
    pub group: Group<K>,
    pub lines: Vec<WeightLine<K>>,
    pub simple: Vec<Vec<i64>>,
    pub dynkin: DynkinType,
    pub adjoint: bool,
    pub simply_connected: bool,
    pub center: CenterKind,
    /// pairing[i][j] = <character basis i, cocharacter basis j>.
    pub pairing: Vec<Vec<i64>>,
}

impl<K: Field> RootTable<K> {
    pub fn roots(&self) -> Vec<Vec<i64>> {
        self.lines.iter().map(|l| l.root.clone()).collect()
    }

    pub fn coroots(&self) -> Vec<Vec<i64>> {
        self.lines.iter().map(|l| l.coroot.clone()).collect()
    }

    /// Exponents of a character on the torus parametrized by the
    /// printed cocharacter coordinates: the character coordinates
    /// folded through the pairing matrix. Equal to the input whenever
    /// the printed bases are dual.
    pub fn character_on_units(&self, root: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| root[i] * self.pairing[i][j]).sum())
            .collect()
    }

    pub fn pair(&self, root: &[i64], coroot: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, a) in root.iter().enumerate() {
            for (j, g) in coroot.iter().enumerate() {
                acc += a * self.pairing[i][j] * g;
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("family parameter out of range")]
    OutOfRange,
}

fn e(rank: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; rank];
    for &(i, c) in entries {
        v[i] += c;
    }
    v
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn unit<K: Field>(m: usize, i: usize, j: usize) -> Matrix<K> {
    Matrix::unit(m, i, j)
}

fn identity_pairing(rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_line<K: Field>(root: Vec<i64>, coroot: Vec<i64>, x: Matrix<K>) -> WeightLine<K> {
    WeightLine {
        root,
        coroot,
        space: EigenSpace::Mat(x),
        quad: None,
    }
}

fn cliff_line<K: Field>(root: Vec<i64>, coroot: Vec<i64>, i: usize, j: usize) -> WeightLine<K> {
    WeightLine {
        root,
        coroot,
        space: EigenSpace::Cliff((1 << i) | (1 << j)),
        quad: None,
    }
}

fn dynkin_a(rank: usize) -> DynkinType {
    if rank == 0 {
        vec![]
    } else {
        vec![('A', rank)]
    }
}

fn dynkin_b(n: usize) -> DynkinType {
    match n {
        1 => vec![('A', 1)],
        _ => vec![('B', n)],
    }
}

fn dynkin_c(n: usize) -> DynkinType {
    match n {
        1 => vec![('A', 1)],
        2 => vec![('B', 2)],
        _ => vec![('C', n)],
    }
}

fn dynkin_d(n: usize) -> DynkinType {
    match n {
        2 => vec![('A', 1), ('A', 1)],
        3 => vec![('A', 3)],
        _ => vec![('D', n)],
    }
}

pub fn root_table<K: Field>(family: Family, n: usize) -> Result<RootTable<K>, TableError> {
    if n < family.min_parameter() || n > 8 {
        return Err(TableError::OutOfRange);
    }
    match family {
        Family::Gl => Ok(gl_table(n)),
        Family::Sl => Ok(sl_table(n)),
        Family::Pgl => Ok(pgl_table(n)),
        Family::SoOdd => Ok(so_odd_table(n)),
        Family::SpinOdd => Ok(spin_odd_table(n)),
        Family::Sp => Ok(sp_table(n)),
        Family::Pgsp => Ok(pgsp_table(n)),
        Family::PgoPlus => Ok(pgo_plus_table(n)),
        Family::SpinEven => Ok(spin_even_table(n)),
    }
}

fn gl_table<K: Field>(n: usize) -> RootTable<K> {
    let mut lines = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = e(n, &[(i, 1), (j, -1)]);
                lines.push(mat_line(v.clone(), v, unit(n, i, j)));
            }
        }
    }
    let simple = (0..n.saturating_sub(1))
        .map(|i| e(n, &[(i, 1), (i + 1, -1)]))
        .collect();
    RootTable {
        family: Family::Gl,
        n,
        rank: n,
        group: Family::Gl.group(n),
        lines,
        simple,
        dynkin: dynkin_a(n - 1),
        adjoint: false,
        simply_connected: false,
        center: CenterKind::Torus(1),
        pairing: identity_pairing(n),
    }
}

/// Character coordinates of the class of t_i in the printed basis
/// (partial sums of the first i classes), for 1-indexed i.
fn sl_char(n: usize, i: usize) -> Vec<i64> {
    let r = n - 1;
    if i < n {
        let mut v = e(r, &[(i - 1, 1)]);
        if i >= 2 {
            v[i - 2] -= 1;
        }
        v
    } else {
        e(r, &[(r - 1, -1)])
    }
}

/// Cocharacter coordinates of t_i - t_j in the printed basis
/// (differences against the last coordinate), for 1-indexed i, j.
fn sl_cochar(n: usize, i: usize, j: usize) -> Vec<i64> {
    let r = n - 1;
    let mut v = vec![0; r];
    if i < n {
        v[i - 1] += 1;
    }
    if j < n {
        v[j - 1] -= 1;
    }
    v
}

fn sl_table<K: Field>(n: usize) -> RootTable<K> {
    let r = n - 1;
    let mut lines = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let root: Vec<i64> = sl_char(n, i)
                    .iter()
                    .zip(sl_char(n, j))
                    .map(|(a, b)| a - b)
                    .collect();
                lines.push(mat_line(root, sl_cochar(n, i, j), unit(n, i - 1, j - 1)));
            }
        }
    }
    let simple = (1..n)
        .map(|i| {
            sl_char(n, i)
                .iter()
                .zip(sl_char(n, i + 1))
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    // the printed bases are not dual: partial character sums pair with
    // cocharacter differences through a triangular matrix of ones
    let pairing = (0..r)
        .map(|i| (0..r).map(|j| i64::from(j <= i)).collect())
        .collect();
    RootTable {
        family: Family::Sl,
        n,
        rank: r,
        group: Family::Sl.group(n),
        lines,
        simple,
        dynkin: dynkin_a(r),
        adjoint: false,
        simply_connected: true,
        center: CenterKind::Finite(vec![n as i64]),
        pairing,
    }
}

fn pgl_table<K: Field>(n: usize) -> RootTable<K> {
    let r = n - 1;
    // t_i - t_j is the interval sum of consecutive differences
    let root = |i: usize, j: usize| {
        let mut v = vec![0; r];
        if i < j {
            for k in i..j {
                v[k - 1] = 1;
            }
        } else {
            for k in j..i {
                v[k - 1] = -1;
            }
        }
        v
    };
    // class of t_i dual expressed in the printed partial-sum basis
    let cochar = |i: usize| -> Vec<i64> {
        if i < n {
            let mut v = e(r, &[(i - 1, 1)]);
            if i >= 2 {
                v[i - 2] -= 1;
            }
            v
        } else {
            e(r, &[(r - 1, -1)])
        }
    };
    let mut lines = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let coroot: Vec<i64> = cochar(i)
                    .iter()
                    .zip(cochar(j))
                    .map(|(a, b)| a - b)
                    .collect();
                lines.push(mat_line(root(i, j), coroot, unit(n, i - 1, j - 1)));
            }
        }
    }
    let simple = (1..n).map(|i| root(i, i + 1)).collect();
    RootTable {
        family: Family::Pgl,
        n,
        rank: r,
        group: Family::Pgl.group(n),
        lines,
        simple,
        dynkin: dynkin_a(r),
        adjoint: true,
        simply_connected: false,
        center: CenterKind::Finite(vec![]),
        pairing: identity_pairing(r),
    }
}

fn so_odd_table<K: Field>(n: usize) -> RootTable<K> {
    let m = 2 * n + 1;
    let two = K::from_int(2);
    let mut lines = Vec::new();
    for i in 1..=n {
        // short roots exponentiate with a second-order term
        lines.push(WeightLine {
            root: e(n, &[(i - 1, 1)]),
            coroot: e(n, &[(i - 1, 2)]),
            space: EigenSpace::Mat(unit(m, 0, 2 * i).sub(&unit(m, 2 * i - 1, 0).scale(&two))),
            quad: Some(unit(m, 2 * i - 1, 2 * i)),
        });
        lines.push(WeightLine {
            root: e(n, &[(i - 1, -1)]),
            coroot: e(n, &[(i - 1, -2)]),
            space: EigenSpace::Mat(unit(m, 0, 2 * i - 1).sub(&unit(m, 2 * i, 0).scale(&two))),
            quad: Some(unit(m, 2 * i, 2 * i - 1)),
        });
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let v = e(n, &[(i - 1, 1), (j - 1, -1)]);
                lines.push(mat_line(
                    v.clone(),
                    v,
                    unit(m, 2 * i - 1, 2 * j - 1).sub(&unit(m, 2 * j, 2 * i)),
                ));
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let v = e(n, &[(i - 1, 1), (j - 1, 1)]);
            lines.push(mat_line(
                v.clone(),
                v.clone(),
                unit(m, 2 * i - 1, 2 * j).sub(&unit(m, 2 * j - 1, 2 * i)),
            ));
            lines.push(mat_line(
                neg(&v),
                neg(&v),
                unit(m, 2 * i, 2 * j - 1).sub(&unit(m, 2 * j, 2 * i - 1)),
            ));
        }
    }
    let mut simple: Vec<Vec<i64>> = (1..n)
        .map(|i| e(n, &[(i - 1, 1), (i, -1)]))
        .collect();
    simple.push(e(n, &[(n - 1, 1)]));
    RootTable {
        family: Family::SoOdd,
        n,
        rank: n,
        group: Family::SoOdd.group(n),
        lines,
        simple,
        dynkin: dynkin_b(n),
        adjoint: true,
        simply_connected: false,
        center: CenterKind::Finite(vec![]),
        pairing: identity_pairing(n),
    }
}

fn spin_odd_table<K: Field>(n: usize) -> RootTable<K> {
    // the long weight 2t_1 + t_2 + ... + t_n and its relatives
    let heavy = |extra: &[(usize, i64)]| {
        let mut v = vec![1; n];
        v[0] = 2;
        for &(i, c) in extra {
            v[i] += c;
        }
        v
    };
    let mut lines = vec![
        cliff_line(heavy(&[]), e(n, &[(0, 1)]), 0, 1),
        cliff_line(neg(&heavy(&[])), e(n, &[(0, -1)]), 0, 2),
    ];
    for i in 2..=n {
        lines.push(cliff_line(
            e(n, &[(i - 1, 1)]),
            e(n, &[(i - 1, 2), (0, -1)]),
            0,
            2 * i - 1,
        ));
        lines.push(cliff_line(
            e(n, &[(i - 1, -1)]),
            e(n, &[(i - 1, -2), (0, 1)]),
            0,
            2 * i,
        ));
        lines.push(cliff_line(
            heavy(&[(i - 1, 1)]),
            e(n, &[(i - 1, 1)]),
            1,
            2 * i - 1,
        ));
        lines.push(cliff_line(
            neg(&heavy(&[(i - 1, 1)])),
            e(n, &[(i - 1, -1)]),
            2,
            2 * i,
        ));
        lines.push(cliff_line(
            heavy(&[(i - 1, -1)]),
            e(n, &[(0, 1), (i - 1, -1)]),
            1,
            2 * i,
        ));
        lines.push(cliff_line(
            neg(&heavy(&[(i - 1, -1)])),
            e(n, &[(0, -1), (i - 1, 1)]),
            2,
            2 * i - 1,
        ));
    }
    for i in 2..=n {
        for j in (i + 1)..=n {
            lines.push(cliff_line(
                e(n, &[(i - 1, 1), (j - 1, 1)]),
                e(n, &[(i - 1, 1), (j - 1, 1), (0, -1)]),
                2 * i - 1,
                2 * j - 1,
            ));
            lines.push(cliff_line(
                e(n, &[(i - 1, -1), (j - 1, -1)]),
                e(n, &[(i - 1, -1), (j - 1, -1), (0, 1)]),
                2 * i,
                2 * j,
            ));
            lines.push(cliff_line(
                e(n, &[(i - 1, 1), (j - 1, -1)]),
                e(n, &[(i - 1, 1), (j - 1, -1)]),
                2 * i - 1,
                2 * j,
            ));
            lines.push(cliff_line(
                e(n, &[(i - 1, -1), (j - 1, 1)]),
                e(n, &[(i - 1, -1), (j - 1, 1)]),
                2 * i,
                2 * j - 1,
            ));
        }
    }
    let mut simple = vec![{
        let mut v = vec![1; n];
        v[0] = 2;
        if n >= 2 {
            v[1] = 0;
        }
        v
    }];
    for i in 2..n {
        simple.push(e(n, &[(i - 1, 1), (i, -1)]));
    }
    if n >= 2 {
        simple.push(e(n, &[(n - 1, 1)]));
    }
    RootTable {
        family: Family::SpinOdd,
        n,
        rank: n,
        group: Family::SpinOdd.group(n),
        lines,
        simple,
        dynkin: dynkin_b(n),
        adjoint: false,
        simply_connected: true,
        center: CenterKind::Finite(vec![2]),
        pairing: identity_pairing(n),
    }
}

fn sp_table<K: Field>(n: usize) -> RootTable<K> {
    let m = 2 * n;
    let mut lines = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = e(n, &[(i, 1), (j, -1)]);
                lines.push(mat_line(
                    v.clone(),
                    v,
                    unit(m, i, j).sub(&unit(m, j + n, i + n)),
                ));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let v = e(n, &[(i, 1), (j, 1)]);
            lines.push(mat_line(
                v.clone(),
                v.clone(),
                unit(m, i, n + j).add(&unit(m, j, n + i)),
            ));
            lines.push(mat_line(
                neg(&v),
                neg(&v),
                unit(m, n + i, j).add(&unit(m, n + j, i)),
            ));
        }
    }
    for i in 0..n {
        lines.push(mat_line(
            e(n, &[(i, 2)]),
            e(n, &[(i, 1)]),
            unit(m, i, n + i),
        ));
        lines.push(mat_line(
            e(n, &[(i, -2)]),
            e(n, &[(i, -1)]),
            unit(m, n + i, i),
        ));
    }
    let mut simple: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| e(n, &[(i, 1), (i + 1, -1)]))
        .collect();
    simple.push(e(n, &[(n - 1, 2)]));
    RootTable {
        family: Family::Sp,
        n,
        rank: n,
        group: Family::Sp.group(n),
        lines,
        simple,
        dynkin: dynkin_c(n),
        adjoint: false,
        simply_connected: true,
        center: CenterKind::Finite(vec![2]),
        pairing: identity_pairing(n),
    }
}

fn pgsp_table<K: Field>(n: usize) -> RootTable<K> {
    let m = 2 * n;
    // character index of the printed t_{i-1} for a matrix index i
    let c = |i: usize| i - 2;
    let last = n - 1;
    let mut lines = Vec::new();
    for i in 2..=n {
        for j in 2..=n {
            if i != j {
                let v = e(n, &[(c(i), 1), (c(j), -1)]);
                lines.push(mat_line(
                    v.clone(),
                    v,
                    unit(m, i - 1, j - 1).sub(&unit(m, j + n - 1, i + n - 1)),
                ));
            }
        }
    }
    // coroot sum over the printed middle block, skipping index i
    let mid = |i: usize, base: &[(usize, i64)]| {
        let mut v = e(n, base);
        for j in 2..=n {
            if j != i {
                v[c(j)] += 1;
            }
        }
        v
    };
    for i in 2..=n {
        lines.push(mat_line(
            e(n, &[(c(i), 1)]),
            mid(i, &[(last, 2), (c(i), 2)]),
            unit(m, i - 1, 0).sub(&unit(m, n, n + i - 1)),
        ));
        lines.push(mat_line(
            e(n, &[(c(i), -1)]),
            neg(&mid(i, &[(last, 2), (c(i), 2)])),
            unit(m, 0, i - 1).sub(&unit(m, n + i - 1, n)),
        ));
    }
    for i in 2..=n {
        for j in (i + 1)..=n {
            let v = e(n, &[(c(i), 1), (c(j), 1), (last, -1)]);
            lines.push(mat_line(
                v,
                e(n, &[(c(i), 1), (c(j), 1)]),
                unit(m, i - 1, n + j - 1).add(&unit(m, j - 1, n + i - 1)),
            ));
            lines.push(mat_line(
                e(n, &[(c(i), -1), (c(j), -1), (last, 1)]),
                e(n, &[(c(i), -1), (c(j), -1)]),
                unit(m, n + i - 1, j - 1).add(&unit(m, n + j - 1, i - 1)),
            ));
        }
    }
    for i in 2..=n {
        lines.push(mat_line(
            e(n, &[(c(i), 1), (last, -1)]),
            neg(&mid(i, &[(last, 2)])),
            unit(m, 0, n + i - 1).add(&unit(m, i - 1, n)),
        ));
        lines.push(mat_line(
            e(n, &[(c(i), -1), (last, 1)]),
            mid(i, &[(last, 2)]),
            unit(m, n, i - 1).add(&unit(m, n + i - 1, 0)),
        ));
        lines.push(mat_line(
            e(n, &[(c(i), 2), (last, -1)]),
            e(n, &[(c(i), 1)]),
            unit(m, i - 1, n + i - 1),
        ));
        lines.push(mat_line(
            e(n, &[(c(i), -2), (last, 1)]),
            e(n, &[(c(i), -1)]),
            unit(m, n + i - 1, i - 1),
        ));
    }
    let full = {
        let mut v = vec![1; n];
        v[last] = 2;
        v
    };
    lines.push(mat_line(e(n, &[(last, 1)]), full.clone(), unit(m, n, 0)));
    lines.push(mat_line(e(n, &[(last, -1)]), neg(&full), unit(m, 0, n)));
    let mut simple: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| e(n, &[(i, 1), (i + 1, -1)]))
        .collect();
    simple.push(e(n, &[(last, 1)]));
    RootTable {
        family: Family::Pgsp,
        n,
        rank: n,
        group: Family::Pgsp.group(n),
        lines,
        simple,
        dynkin: dynkin_c(n),
        adjoint: true,
        simply_connected: false,
        center: CenterKind::Finite(vec![]),
        pairing: identity_pairing(n),
    }
}

fn pgo_plus_table<K: Field>(n: usize) -> RootTable<K> {
    let m = 2 * n;
    let mut lines = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i != j {
                let v = e(n, &[(i, 1), (j, -1)]);
                lines.push(mat_line(
                    v.clone(),
                    v,
                    unit(m, 2 * i - 2, 2 * j - 2).sub(&unit(m, 2 * j - 1, 2 * i - 1)),
                ));
            }
        }
    }
    // coroot sum over indices 1..n-1 skipping i
    let spread = |i: usize, base: &[(usize, i64)]| {
        let mut v = e(n, base);
        for j in 1..n {
            if j != i {
                v[j] += 1;
            }
        }
        v
    };
    for i in 1..n {
        lines.push(mat_line(
            e(n, &[(i, 1)]),
            spread(i, &[(i, 2), (0, -2)]),
            unit(m, 2 * i - 2, 2 * n - 2).sub(&unit(m, 2 * n - 1, 2 * i - 1)),
        ));
        lines.push(mat_line(
            e(n, &[(i, -1)]),
            neg(&spread(i, &[(i, 2), (0, -2)])),
            unit(m, 2 * n - 2, 2 * i - 2).sub(&unit(m, 2 * i - 1, 2 * n - 1)),
        ));
        lines.push(mat_line(
            e(n, &[(0, 1), (i, 1)]),
            neg(&spread(i, &[(0, -2)])),
            unit(m, 2 * i - 2, 2 * n - 1).sub(&unit(m, 2 * n - 2, 2 * i - 1)),
        ));
        lines.push(mat_line(
            e(n, &[(0, -1), (i, -1)]),
            spread(i, &[(0, -2)]),
            unit(m, 2 * i - 1, 2 * n - 2).sub(&unit(m, 2 * n - 1, 2 * i - 2)),
        ));
    }
    for i in 1..n {
        for j in (i + 1)..n {
            lines.push(mat_line(
                e(n, &[(0, 1), (i, 1), (j, 1)]),
                e(n, &[(i, 1), (j, 1)]),
                unit(m, 2 * i - 2, 2 * j - 1).sub(&unit(m, 2 * j - 2, 2 * i - 1)),
            ));
            lines.push(mat_line(
                e(n, &[(0, -1), (i, -1), (j, -1)]),
                e(n, &[(i, -1), (j, -1)]),
                unit(m, 2 * i - 1, 2 * j - 2).sub(&unit(m, 2 * j - 1, 2 * i - 2)),
            ));
        }
    }
    let mut simple = vec![e(n, &[(0, 1), (n - 1, 1)])];
    for i in 1..n - 1 {
        simple.push(e(n, &[(i, 1), (i + 1, -1)]));
    }
    simple.push(e(n, &[(n - 1, 1)]));
    RootTable {
        family: Family::PgoPlus,
        n,
        rank: n,
        group: Family::PgoPlus.group(n),
        lines,
        simple,
        dynkin: dynkin_d(n),
        adjoint: true,
        simply_connected: false,
        center: CenterKind::Finite(vec![]),
        pairing: identity_pairing(n),
    }
}

fn spin_even_table<K: Field>(n: usize) -> RootTable<K> {
    // the heavy weight 2t_1 + t_2 + ... + t_n with adjustments
    let heavy = |extra: &[(usize, i64)]| {
        let mut v = vec![1; n];
        v[0] = 2;
        for &(i, c) in extra {
            v[i] += c;
        }
        v
    };
    let mut lines = Vec::new();
    for i in 2..=n {
        lines.push(cliff_line(
            heavy(&[(i - 1, 1)]),
            e(n, &[(i - 1, 1)]),
            0,
            2 * i - 2,
        ));
        lines.push(cliff_line(
            neg(&heavy(&[(i - 1, 1)])),
            e(n, &[(i - 1, -1)]),
            1,
            2 * i - 1,
        ));
        lines.push(cliff_line(
            heavy(&[(i - 1, -1)]),
            e(n, &[(0, 1), (i - 1, -1)]),
            0,
            2 * i - 1,
        ));
        lines.push(cliff_line(
            neg(&heavy(&[(i - 1, -1)])),
            e(n, &[(0, -1), (i - 1, 1)]),
            1,
            2 * i - 2,
        ));
    }
    for i in 2..=n {
        for j in (i + 1)..=n {
            lines.push(cliff_line(
                e(n, &[(i - 1, 1), (j - 1, 1)]),
                e(n, &[(i - 1, 1), (j - 1, 1), (0, -1)]),
                2 * i - 2,
                2 * j - 2,
            ));
            lines.push(cliff_line(
                e(n, &[(i - 1, -1), (j - 1, -1)]),
                e(n, &[(i - 1, -1), (j - 1, -1), (0, 1)]),
                2 * i - 1,
                2 * j - 1,
            ));
            lines.push(cliff_line(
                e(n, &[(i - 1, 1), (j - 1, -1)]),
                e(n, &[(i - 1, 1), (j - 1, -1)]),
                2 * i - 2,
                2 * j - 1,
            ));
            lines.push(cliff_line(
                e(n, &[(i - 1, -1), (j - 1, 1)]),
                e(n, &[(i - 1, -1), (j - 1, 1)]),
                2 * i - 1,
                2 * j - 2,
            ));
        }
    }
    let simple = if n == 2 {
        vec![e(2, &[(0, 2)]), e(2, &[(0, 2), (1, 2)])]
    } else {
        let mut v = vec![1; n];
        v[0] = 2;
        v[1] = 0;
        let mut s = vec![v];
        for i in 2..n {
            s.push(e(n, &[(i - 1, 1), (i, -1)]));
        }
        s.push(e(n, &[(n - 2, 1), (n - 1, 1)]));
        s
    };
    let center = if n % 2 == 0 {
        CenterKind::Finite(vec![2, 2])
    } else {
        CenterKind::Finite(vec![4])
    };
    RootTable {
        family: Family::SpinEven,
        n,
        rank: n,
        group: Family::SpinEven.group(n),
        lines,
        simple,
        dynkin: dynkin_d(n),
        adjoint: false,
        simply_connected: true,
        center,
        pairing: identity_pairing(n),
    }
}

/// Exponent matrix of the central isogeny from the simply connected
/// family onto its adjoint partner, on split torus points: the j-th
/// coordinate of the image is the product of the source coordinates
/// raised to row j. Defined for the simply connected column only.
pub fn isogeny_exponents(family: Family, n: usize) -> Option<Matrix<Int>> {
    let row_int = |rows: Vec<Vec<i64>>| {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| Int::from(rows[i][j]))
    };
    match family {
        Family::Sl => {
            // diag(u_1, ..., u_{n-1}, 1/prod) lands on the class of
            // diag(u_1 p, ..., u_{n-1} p, 1) with p the full product
            let r = n - 1;
            let rows = (0..r)
                .map(|i| (0..r).map(|j| 1 + i64::from(i == j)).collect())
                .collect();
            Some(row_int(rows))
        }
        Family::SpinOdd => {
            let mut rows = vec![vec![0; n]; n];
            rows[0][0] = 2;
            for i in 1..n {
                rows[i][0] = 2;
                rows[i][i] = 1;
            }
            Some(row_int(rows))
        }
        Family::Sp => {
            let mut rows = vec![vec![0; n]; n];
            for i in 0..n - 1 {
                rows[i][0] = 1;
                rows[i][i + 1] = -1;
            }
            rows[n - 1][0] = 2;
            Some(row_int(rows))
        }
        Family::SpinEven => {
            let mut rows = vec![vec![0; n]; n];
            rows[0][n - 1] = 2;
            rows[1][0] = 2;
            for i in 1..n - 1 {
                rows[1][i] += 1;
            }
            for k in 2..n {
                rows[k][k - 1] = 1;
                rows[k][n - 1] -= 1;
            }
            Some(row_int(rows))
        }
        _ => None,
    }
}

/// Invariant factors (> 1) of the isogeny exponent matrix: the cyclic
/// decomposition of the kernel of the torus map.
pub fn isogeny_kernel_factors(family: Family, n: usize) -> Option<Vec<i64>> {
    let m = isogeny_exponents(family, n)?;
    Some(
        invariant_factors(&m)
            .iter()
            .map(|d| {
                let s = d.to_string();
                s.parse::<i64>().expect("small invariant factor")
            })
            .collect(),
    )
}
