//! Lie algebras by structure constants and their matrix representations.

mod g2;
mod weights;

pub use g2::{
    cartan_g2_action, g2_representation, g2_stabilizer, g2_subgroup_table, match_isotropy, G2SubgroupEntry,
    IsotropyMatch,
};
pub use weights::{
    isotropy_splitting, torus_modules, torus_splitting, weight_decomposition, Kind, SimpleTag, Splitting, Symmetry,
    TorusSplitting, WeightModule, WeightPlane,
};

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{blades_of_grade, Form};
use crate::linalg::{is_zero_vec, unit_vector, vec_add, vec_scale, QMatrix, QVector};
use crate::rational::{q, Rational};

/// A finite-dimensional real Lie algebra, `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    brackets: Vec<Vec<QVector>>,
}

impl LieAlgebra {
    /// Builds from the full bracket table, checking antisymmetry and Jacobi.
    pub fn new(labels: Vec<String>, brackets: Vec<Vec<QVector>>) -> Result<Self> {
        let n = labels.len();
        if brackets.len() != n || brackets.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::InvalidLieAlgebra("bracket table has the wrong shape".into()));
        }
        let alg = LieAlgebra { labels, brackets };
        alg.check_antisymmetry()?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Builds from sparse constants `(i, j, k, c)` meaning `[e_i, e_j] ∋ c e_k`
    /// (0-based). The `[e_j, e_i]` entries are filled in by antisymmetry.
    pub fn from_constants(labels: Vec<String>, constants: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let n = labels.len();
        let mut brackets = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, j, k, c) in constants {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidLieAlgebra(format!("index out of range in ({i},{j},{k})")));
            }
            if i == j {
                return Err(Error::InvalidLieAlgebra(format!("[e{i}, e{i}] must vanish")));
            }
            brackets[*i][*j][*k] += c;
            brackets[*j][*i][*k] -= c;
        }
        Self::new(labels, brackets)
    }

    /// `su(2)` in the basis `σ1, σ2, σ3` with `[σ1,σ2] = -2σ3` and cyclic.
    pub fn su2() -> Self {
        let labels = vec!["s1".into(), "s2".into(), "s3".into()];
        Self::from_constants(labels, &[(0, 1, 2, q(-2)), (1, 2, 0, q(-2)), (2, 0, 1, q(-2))])
            .expect("su(2) satisfies Jacobi")
    }

    /// The abelian algebra `u(1)^k`.
    pub fn u1(k: usize) -> Self {
        let labels = if k == 1 { vec!["z".to_string()] } else { (1..=k).map(|i| format!("z{i}")).collect() };
        LieAlgebra { labels, brackets: vec![vec![vec![Rational::zero(); k]; k]; k] }
    }

    /// Block direct sum; cross brackets vanish.
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Self {
        let (na, nb) = (a.dim(), b.dim());
        let n = na + nb;
        let mut brackets = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..na {
            for j in 0..na {
                brackets[i][j][..na].clone_from_slice(&a.brackets[i][j]);
            }
        }
        for i in 0..nb {
            for j in 0..nb {
                brackets[na + i][na + j][na..].clone_from_slice(&b.brackets[i][j]);
            }
        }
        let labels = a.labels.iter().chain(&b.labels).cloned().collect();
        LieAlgebra { labels, brackets }
    }

    /// Direct sum of several summands.
    pub fn sum_of(parts: &[LieAlgebra]) -> Self {
        parts.iter().fold(LieAlgebra::u1(0), |acc, p| LieAlgebra::direct_sum(&acc, p))
    }

    /// Prefixes every label with `prefix.`.
    pub fn with_prefix(mut self, prefix: &str) -> Self {
        for l in &mut self.labels {
            *l = format!("{prefix}.{l}");
        }
        self
    }

    /// Matrix Lie algebra spanned by `mats`, with constants read off by solving
    /// each commutator in the span.
    pub fn from_matrices(labels: Vec<String>, mats: &[QMatrix]) -> Result<Self> {
        if labels.len() != mats.len() {
            return Err(Error::InvalidLieAlgebra("label count differs from matrix count".into()));
        }
        let flat: Vec<QVector> = mats.iter().map(|m| m.entries().to_vec()).collect();
        if !flat.is_empty() && crate::linalg::span_rank(&flat) != flat.len() {
            return Err(Error::InvalidLieAlgebra("matrices are linearly dependent".into()));
        }
        let solver = SpanSolver::new(&flat);
        let n = mats.len();
        let mut brackets = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let c = mats[i].commutator(&mats[j]);
                let coords = solver.solve(c.entries()).ok_or_else(|| {
                    Error::InvalidLieAlgebra(format!("[{}, {}] leaves the span", labels[i], labels[j]))
                })?;
                brackets[j][i] = vec_scale(&coords, &-Rational::one());
                brackets[i][j] = coords;
            }
        }
        Self::new(labels, brackets)
    }

    /// The same algebra in the basis `basis` (coordinate vectors in the old basis).
    pub fn change_basis(&self, basis: &[QVector], labels: Vec<String>) -> Result<Self> {
        let n = self.dim();
        if basis.len() != n || labels.len() != n {
            return Err(Error::DimensionMismatch { left: basis.len(), right: n });
        }
        let p = QMatrix::from_columns(basis);
        let pinv = p.inverse()?;
        let mut brackets = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = pinv.mul_vec(&self.bracket(&basis[i], &basis[j]));
                brackets[j][i] = vec_scale(&v, &-Rational::one());
                brackets[i][j] = v;
            }
        }
        Self::new(labels, brackets)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `c^k_{ij}` (0-based).
    pub fn constant(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.brackets[i][j][k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &QVector {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> QVector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (k, b) in self.brackets[i][j].iter().enumerate() {
                    if !b.is_zero() {
                        out[k] += &c * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x`; column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> QMatrix {
        let n = self.dim();
        let cols: Vec<QVector> = (0..n).map(|j| self.bracket(x, &unit_vector(n, j))).collect();
        if n == 0 {
            return QMatrix::zeros(0, 0);
        }
        QMatrix::from_columns(&cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|r| r.iter().all(|v| is_zero_vec(v)))
    }

    /// Dimension of the center.
    pub fn center_dim(&self) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        // x is central iff Σ_i x_i [e_i, e_j] = 0 for all j
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.brackets[i][j][k].clone()).collect());
            }
        }
        QMatrix::from_rows(rows).nullspace().len()
    }

    /// Whether `span(basis)` is closed under the bracket.
    pub fn is_subalgebra(&self, basis: &[QVector]) -> bool {
        let r = crate::linalg::span_rank(basis);
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                let mut ext = basis.to_vec();
                ext.push(self.bracket(x, y));
                if crate::linalg::span_rank(&ext) != r {
                    return false;
                }
            }
        }
        true
    }

    /// The subalgebra spanned by `basis`, in that basis.
    pub fn subalgebra(&self, basis: &[QVector], labels: Vec<String>) -> Result<Self> {
        let solver = SpanSolver::new(basis);
        let n = basis.len();
        let mut brackets = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = solver
                    .solve(&self.bracket(&basis[i], &basis[j]))
                    .ok_or_else(|| Error::InvalidLieAlgebra("span is not closed under the bracket".into()))?;
                brackets[j][i] = vec_scale(&v, &-Rational::one());
                brackets[i][j] = v;
            }
        }
        Self::new(labels, brackets)
    }

    fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            if !is_zero_vec(&self.brackets[i][i]) {
                return Err(Error::InvalidLieAlgebra(format!("[{0}, {0}] ≠ 0", self.labels[i])));
            }
            for j in (i + 1)..n {
                if vec_add(&self.brackets[i][j], &self.brackets[j][i]).iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidLieAlgebra(format!(
                        "bracket of {} and {} is not antisymmetric",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all `i<j<k`.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let e = |a: usize| unit_vector(n, a);
                    let t1 = self.bracket(&self.brackets[i][j], &e(k));
                    let t2 = self.bracket(&self.brackets[j][k], &e(i));
                    let t3 = self.bracket(&self.brackets[k][i], &e(j));
                    if !is_zero_vec(&vec_add(&vec_add(&t1, &t2), &t3)) {
                        return Err(Error::InvalidLieAlgebra(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses `"A.s1 + 2*B.s1 - z"` into a coordinate vector.
    pub fn parse_element(&self, s: &str) -> Result<QVector> {
        let mut out = vec![Rational::zero(); self.dim()];
        let normalized = s.replace('-', "+-");
        for raw in normalized.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                continue;
            }
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest.trim()),
                None => (false, term),
            };
            let (coeff, label) = match body.split_once('*') {
                Some((c, l)) => (crate::rational::parse_rational(c)?, l.trim()),
                None => (Rational::one(), body),
            };
            let idx = self.label_index(label).ok_or_else(|| Error::Parse(format!("unknown basis label `{label}`")))?;
            out[idx] += if neg { -coeff } else { coeff };
        }
        Ok(out)
    }
}

/// Solves `Σ x_i v_i = b` repeatedly against a fixed independent family.
pub(crate) struct SpanSolver {
    reduced: QMatrix,
    transform: QMatrix,
    pivots: Vec<usize>,
    count: usize,
}

impl SpanSolver {
    pub(crate) fn new(vectors: &[QVector]) -> Self {
        let count = vectors.len();
        let len = vectors.first().map_or(0, Vec::len);
        // row-reduce [Vᵀ | I] so that each reduced row records its combination
        let mut rows = Vec::with_capacity(count);
        for (i, v) in vectors.iter().enumerate() {
            let mut row = v.clone();
            row.extend((0..count).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            rows.push(row);
        }
        let m = if count == 0 { QMatrix::zeros(0, len + count) } else { QMatrix::from_rows(rows) };
        let (r, pivots) = m.rref();
        let pivots: Vec<usize> = pivots.into_iter().filter(|&p| p < len).collect();
        let mut reduced = QMatrix::zeros(pivots.len(), len);
        let mut transform = QMatrix::zeros(pivots.len(), count);
        for (row, _) in pivots.iter().enumerate() {
            for c in 0..len {
                reduced[(row, c)] = r[(row, c)].clone();
            }
            for c in 0..count {
                transform[(row, c)] = r[(row, len + c)].clone();
            }
        }
        SpanSolver { reduced, transform, pivots, count }
    }

    pub(crate) fn solve(&self, b: &[Rational]) -> Option<QVector> {
        let mut residual = b.to_vec();
        let mut coords = vec![Rational::zero(); self.count];
        for (row, &p) in self.pivots.iter().enumerate() {
            let f = residual[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, r) in residual.iter_mut().enumerate() {
                let e = &self.reduced[(row, c)];
                if !e.is_zero() {
                    *r -= &f * e;
                }
            }
            for (c, x) in coords.iter_mut().enumerate() {
                let e = &self.transform[(row, c)];
                if !e.is_zero() {
                    *x += &f * e;
                }
            }
        }
        if is_zero_vec(&residual) {
            Some(coords)
        } else {
            None
        }
    }
}

/// A linear representation: one matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    matrices: Vec<QMatrix>,
    dim: usize,
}

impl Representation {
    /// Checks `ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)]` on all basis pairs.
    pub fn new(algebra: LieAlgebra, dim: usize, matrices: Vec<QMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for an algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        if matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidRepresentation(format!("matrices must be {dim}×{dim}")));
        }
        let rep = Representation { algebra, matrices, dim };
        let n = rep.algebra.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = rep.of(rep.algebra.bracket_basis(i, j));
                let rhs = rep.matrices[i].commutator(&rep.matrices[j]);
                if lhs != rhs {
                    return Err(Error::InvalidRepresentation(format!(
                        "bracket of {} and {} is not preserved",
                        rep.algebra.labels[i], rep.algebra.labels[j]
                    )));
                }
            }
        }
        Ok(rep)
    }

    pub fn trivial(algebra: LieAlgebra, dim: usize) -> Self {
        let matrices = vec![QMatrix::zeros(dim, dim); algebra.dim()];
        Representation { algebra, matrices, dim }
    }

    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let matrices = (0..n).map(|i| algebra.ad(&unit_vector(n, i))).collect();
        Representation { algebra: algebra.clone(), matrices, dim: n }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn of(&self, x: &[Rational]) -> QMatrix {
        let mut out = QMatrix::zeros(self.dim, self.dim);
        for (xi, m) in x.iter().zip(&self.matrices) {
            if !xi.is_zero() {
                out = &out + &m.scale(xi);
            }
        }
        out
    }

    /// Dimension of `{X ∈ gl(V) : [X, ρ(e_i)] = 0 for all i}`.
    pub fn commutant_dim(&self) -> usize {
        let n = self.dim;
        if self.matrices.is_empty() {
            return n * n;
        }
        let mut rows = Vec::new();
        for a in &self.matrices {
            // (XA - AX)_{rc} = Σ_k X_{rk} A_{kc} - A_{rk} X_{kc}
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![Rational::zero(); n * n];
                    for k in 0..n {
                        row[r * n + k] += &a[(k, c)];
                        row[k * n + c] -= &a[(r, k)];
                    }
                    rows.push(row);
                }
            }
        }
        QMatrix::from_rows(rows).nullspace().len()
    }
}

/// Basis of the `k`-forms annihilated by every `ρ(e_i)` acting as a derivation.
pub fn invariant_forms(rho: &Representation, degree: usize) -> Vec<Form> {
    let n = rho.dim();
    let blades = blades_of_grade(n, degree);
    if blades.is_empty() {
        return Vec::new();
    }
    let index: BTreeMap<_, _> = blades.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let mut rows: Vec<QVector> = Vec::new();
    for a in rho.matrices() {
        let mut block = vec![vec![Rational::zero(); blades.len()]; blades.len()];
        for (col, b) in blades.iter().enumerate() {
            let image = Form::from_terms(n, [(*b, Rational::one())]).derivation_action(a).expect("matching dimensions");
            for (blade, c) in image.terms() {
                block[index[blade]][col] = c.clone();
            }
        }
        rows.extend(block.into_iter().filter(|r| !is_zero_vec(r)));
    }
    let kernel = if rows.is_empty() {
        (0..blades.len()).map(|i| unit_vector(blades.len(), i)).collect()
    } else {
        QMatrix::from_rows(rows).nullspace()
    };
    kernel.into_iter().map(|v| Form::from_terms(n, blades.iter().copied().zip(v))).collect()
}

/// Homogeneous polynomials of degree `l` in `(x, y, z)`, indexed by exponent triples.
fn monomials(l: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in (0..=l).rev() {
        for b in (0..=(l - a)).rev() {
            out.push((a, b, l - a - b));
        }
    }
    out
}

/// Matrix of the rotation field `L_axis` on degree-`l` polynomials, where
/// `L_x = y∂z − z∂y`, `L_y = z∂x − x∂z`, `L_z = x∂y − y∂x`.
fn rotation_on_polynomials(l: u32, axis: usize) -> QMatrix {
    let mons = monomials(l);
    let pos: BTreeMap<_, _> = mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut m = QMatrix::zeros(mons.len(), mons.len());
    // L = u ∂_v − v ∂_u with (u, v) the pair of coordinates rotated
    let (u, v) = match axis {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    };
    for (col, e) in mons.iter().enumerate() {
        let exps = [e.0, e.1, e.2];
        let mut add = |from: usize, to: usize, sign: i64| {
            if exps[from] == 0 {
                return;
            }
            let mut ne = exps;
            let c = ne[from] as i64;
            ne[from] -= 1;
            ne[to] += 1;
            m[(pos[&(ne[0], ne[1], ne[2])], col)] += q(sign * c);
        };
        add(v, u, 1);
        add(u, v, -1);
    }
    m
}

fn laplacian_on_polynomials(l: u32) -> QMatrix {
    let mons = monomials(l);
    let lower = monomials(l - 2);
    let pos: BTreeMap<_, _> = lower.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut m = QMatrix::zeros(lower.len(), mons.len());
    for (col, e) in mons.iter().enumerate() {
        let exps = [e.0, e.1, e.2];
        for axis in 0..3 {
            if exps[axis] >= 2 {
                let mut ne = exps;
                ne[axis] -= 2;
                m[(pos[&(ne[0], ne[1], ne[2])], col)] += q((exps[axis] * (exps[axis] - 1)) as i64);
            }
        }
    }
    m
}

/// The real irreducible `(2l+1)`-dimensional `su(2)`-module of harmonic
/// polynomials of degree `l`, in the `σ`-basis (`ρ(σ_i) = 2 L_i`).
/// `σ1` acts with rotation rates `2l, 2l-2, …`, i.e. highest weight `2l`.
pub fn spin_representation(l: u32) -> Representation {
    let alg = LieAlgebra::su2();
    let full: Vec<QMatrix> = (0..3).map(|a| rotation_on_polynomials(l, a).scale(&q(2))).collect();
    if l < 2 {
        return Representation::new(alg, monomials(l).len(), full).expect("rotation fields represent su(2)");
    }
    let basis = laplacian_on_polynomials(l).nullspace();
    let mats = restrict_to_invariant_subspace(&full, &basis).expect("harmonics are invariant");
    Representation::new(alg, basis.len(), mats).expect("rotation fields represent su(2)")
}

/// Matrices of `mats` restricted to the invariant subspace spanned by `basis`.
pub fn restrict_to_invariant_subspace(mats: &[QMatrix], basis: &[QVector]) -> Result<Vec<QMatrix>> {
    let solver = SpanSolver::new(basis);
    mats.iter()
        .map(|m| {
            let cols: Vec<QVector> = basis
                .iter()
                .map(|b| {
                    solver
                        .solve(&m.mul_vec(b))
                        .ok_or_else(|| Error::InvalidRepresentation("subspace is not invariant".into()))
                })
                .collect::<Result<_>>()?;
            Ok(QMatrix::from_columns(&cols))
        })
        .collect()
}

/// Real `2n × 2n` matrix of a complex `n × n` matrix given as `(re, im)`
/// entries, in coordinates `(Re z1, Im z1, Re z2, …)`.
pub fn realify(entries: &[Vec<(Rational, Rational)>]) -> QMatrix {
    let n = entries.len();
    let mut m = QMatrix::zeros(2 * n, 2 * n);
    for (r, row) in entries.iter().enumerate() {
        for (c, (re, im)) in row.iter().enumerate() {
            m[(2 * r, 2 * c)] = re.clone();
            m[(2 * r, 2 * c + 1)] = -im.clone();
            m[(2 * r + 1, 2 * c)] = im.clone();
            m[(2 * r + 1, 2 * c + 1)] = re.clone();
        }
    }
    m
}

/// Realification of an integer complex matrix written as `re + i·im`.
pub fn realify_int(re: &[&[i64]], im: &[&[i64]]) -> QMatrix {
    let entries: Vec<Vec<(Rational, Rational)>> =
        re.iter().zip(im).map(|(r, i)| r.iter().zip(i.iter()).map(|(a, b)| (q(*a), q(*b))).collect()).collect();
    realify(&entries)
}

/// `σ1, σ2, σ3` acting on `C² = R⁴`.
pub fn su2_fundamental() -> Vec<QMatrix> {
    vec![
        realify_int(&[&[0, 0], &[0, 0]], &[&[1, 0], &[0, -1]]),
        realify_int(&[&[0, -1], &[1, 0]], &[&[0, 0], &[0, 0]]),
        realify_int(&[&[0, 0], &[0, 0]], &[&[0, 1], &[1, 0]]),
    ]
}

/// Metadata describing a compact Lie algebra without its structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AlgebraMeta {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub center_dim: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMatrix;

    #[test]
    fn su2_constants() {
        let s = LieAlgebra::su2();
        assert_eq!(*s.constant(2, 0, 1), q(-2));
        assert_eq!(*s.constant(2, 1, 0), q(2));
        assert_eq!(*s.constant(0, 1, 2), q(-2));
        assert_eq!(s.center_dim(), 0);
    }

    #[test]
    fn abelian_and_sums() {
        let u = LieAlgebra::u1(2);
        assert!(u.is_abelian());
        assert!(u.check_jacobi().is_ok());
        let d = LieAlgebra::direct_sum(&LieAlgebra::su2(), &LieAlgebra::su2());
        assert!(is_zero_vec(d.bracket_basis(0, 3)));
        assert_eq!(*d.constant(5, 3, 4), q(-2));
        assert_eq!(LieAlgebra::sum_of(&[LieAlgebra::su2(), LieAlgebra::u1(3)]).center_dim(), 3);
    }

    #[test]
    fn broken_jacobi_rejected() {
        // [e1,e2]=e3, [e2,e3]=e1 alone is not a Lie algebra
        let labels = vec!["a".into(), "b".into(), "c".into()];
        let r = LieAlgebra::from_constants(labels, &[(0, 1, 2, q(1)), (1, 2, 0, q(1)), (2, 0, 0, q(1))]);
        assert!(r.is_err());
    }

    #[test]
    fn matrix_algebra_constants() {
        // so(3) from elementary skew matrices
        let e = |i: usize, j: usize| {
            let mut m = QMatrix::zeros(3, 3);
            m[(i, j)] = q(1);
            m[(j, i)] = q(-1);
            m
        };
        let alg =
            LieAlgebra::from_matrices(vec!["a".into(), "b".into(), "c".into()], &[e(1, 2), e(2, 0), e(0, 1)]).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.center_dim(), 0);
        // [E12, E20] = E10 = -E01
        assert_eq!(*alg.constant(2, 0, 1), q(-1));
    }

    #[test]
    fn change_basis_round_trip() {
        let s = LieAlgebra::su2();
        let basis = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]];
        let t = s.change_basis(&basis, vec!["p".into(), "q".into(), "r".into()]).unwrap();
        // [σ1+σ2, σ2] = -2σ3
        assert_eq!(t.bracket_basis(0, 1), &vec![q(0), q(0), q(-2)]);
    }

    #[test]
    fn spin_representations() {
        for l in 0..=3 {
            let r = spin_representation(l);
            assert_eq!(r.dim(), (2 * l + 1) as usize);
            assert_eq!(r.commutant_dim(), 1, "irreducible of real type for l={l}");
        }
    }

    #[test]
    fn trivial_invariants_are_everything() {
        let rho = Representation::trivial(LieAlgebra::u1(1), 7);
        assert_eq!(invariant_forms(&rho, 3).len(), 35);
    }

    #[test]
    fn adjoint_su2_invariant_volume() {
        let rho = Representation::adjoint(&LieAlgebra::su2());
        let inv = invariant_forms(&rho, 3);
        assert_eq!(inv.len(), 1);
        assert_eq!(invariant_forms(&rho, 1).len(), 0);
    }

    #[test]
    fn parse_elements() {
        let a = LieAlgebra::direct_sum(&LieAlgebra::su2().with_prefix("A"), &LieAlgebra::su2().with_prefix("B"));
        let v = a.parse_element("A.s1 - 2*B.s1 + 1/2*B.s3").unwrap();
        assert_eq!(v, vec![q(1), q(0), q(0), q(-2), q(0), crate::rational::qf(1, 2)]);
        assert!(a.parse_element("C.s1").is_err());
    }
}
