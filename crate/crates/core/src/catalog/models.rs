//! Explicit matrix models of the compact algebras in the catalog, the
//! invariant form used to pick reductive complements, and the generated
//! embeddings (circle and torus subgroups, `su(3) ⊂ g2`).

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::liealg::{g2_representation, realify, LieAlgebra};
use crate::linalg::{span_rank, unit_vector, QMatrix, QVector};
use crate::rational::{q, qf, render, Rational};

pub const SU3_LABELS: [&str; 8] = ["h1", "h2", "x12", "x13", "x23", "y12", "y13", "y23"];

/// `su(3)` as anti-hermitian 3×3 matrices, realified to 6×6.
///
/// `h1 = i·diag(1,-1,0)`, `h2 = i·diag(0,1,-1)`, `x_pq = E_pq - E_qp`,
/// `y_pq = i(E_pq + E_qp)`.
pub fn su3_matrices() -> Vec<QMatrix> {
    let complex = |entries: &[(usize, usize, i64, i64)]| {
        let mut m = vec![vec![(Rational::zero(), Rational::zero()); 3]; 3];
        for &(r, c, re, im) in entries {
            m[r][c] = (q(re), q(im));
        }
        realify(&m)
    };
    let mut out = vec![complex(&[(0, 0, 0, 1), (1, 1, 0, -1)]), complex(&[(1, 1, 0, 1), (2, 2, 0, -1)])];
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for &(p, r) in &pairs {
        out.push(complex(&[(p, r, 1, 0), (r, p, -1, 0)]));
    }
    for &(p, r) in &pairs {
        out.push(complex(&[(p, r, 0, 1), (r, p, 0, 1)]));
    }
    out
}

pub fn su3() -> LieAlgebra {
    LieAlgebra::from_matrices(SU3_LABELS.iter().map(|s| s.to_string()).collect(), &su3_matrices())
        .expect("su(3) model is closed")
}

/// Basis `D⁻¹(E_ij - E_ji)`, `i < j`, of the algebra preserving `diag(metric)`.
pub fn so_matrices(metric: &[i64]) -> Vec<QMatrix> {
    let n = metric.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut m = QMatrix::zeros(n, n);
            m[(i, j)] = qf(1, metric[i]);
            m[(j, i)] = qf(-1, metric[j]);
            out.push(m);
        }
    }
    out
}

/// `so(n)` for the diagonal form `metric`, labelled `r12, r13, …` (1-based).
pub fn so(metric: &[i64]) -> Result<LieAlgebra> {
    if metric.iter().any(|d| *d <= 0) {
        return Err(Error::NotPositiveDefinite);
    }
    let n = metric.len();
    let labels = (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| format!("r{i}{j}"))).collect();
    LieAlgebra::from_matrices(labels, &so_matrices(metric))
}

/// `g2` in its 7-dimensional representation: `t1, t2` Cartan, then `g3 … g14`.
pub fn g2() -> LieAlgebra {
    g2_representation().algebra().clone()
}

/// `-tr(ad x ad y)` plus the identity on the listed central coordinates.
pub fn invariant_inner_product(g: &LieAlgebra, central: &[usize]) -> QMatrix {
    let n = g.dim();
    let ads: Vec<QMatrix> = (0..n).map(|i| g.ad(&unit_vector(n, i))).collect();
    let mut out = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = -(&ads[i] * &ads[j]).trace();
            out[(i, j)] = v.clone();
            out[(j, i)] = v;
        }
    }
    for &c in central {
        out[(c, c)] = &out[(c, c)] + &Rational::one();
    }
    out
}

/// Writes `Σ c_i label_i` in the syntax accepted by `LieAlgebra::parse_element`.
pub fn render_element(labels: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag.is_one() {
            out.push_str(l);
        } else {
            out.push_str(&format!("{}*{l}", render(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Generator `i·diag(k, l, -k-l)` of `U(1)_{k,l} ⊂ SU(3)`.
pub fn aloff_wallach_generator(k: i64, l: i64) -> String {
    let coeffs = [q(k), q(k + l)];
    let labels = [SU3_LABELS[0].to_string(), SU3_LABELS[1].to_string()];
    render_element(&labels, &coeffs)
}

/// A torus in `su(3) ⊕ u(1)` meeting `su(3)` in `U(1)_{k,l}` and projecting onto the
/// `u(1)` factor `z`. Its basis maps to `i·diag(2,-1,-1)/3`, `i·diag(1,1,-2)/3`
/// in `su(3)`, on which the roots are `(1,0), (0,1), (1,1)`.
pub fn aloff_wallach_transversal(k: i64, l: i64) -> Vec<String> {
    // U(1)_{k,l} = (k-l)·H1 + (k+2l)·H2; the z-components annihilate it.
    let (c1, c2) = (k + 2 * l, -(k - l));
    let labels: Vec<String> = ["h1", "h2", "z"].iter().map(|s| s.to_string()).collect();
    vec![render_element(&labels, &[qf(2, 3), qf(1, 3), q(c1)]), render_element(&labels, &[qf(1, 3), qf(2, 3), q(c2)])]
}

/// Integer basis of `{v ∈ Z³ : n·v = 0}` by unimodular column reduction.
pub fn integer_plane_basis(n: [i64; 3]) -> Result<[[i64; 3]; 2]> {
    if n == [0, 0, 0] {
        return Err(Error::InvalidInput("normal vector must be nonzero".into()));
    }
    let mut row = n;
    let mut u = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]]; // columns of U are u[c]
    loop {
        let nonzero: Vec<usize> = (0..3).filter(|&i| row[i] != 0).collect();
        if nonzero.len() == 1 {
            let p = nonzero[0];
            let mut cols = (0..3).filter(|&c| c != p).map(|c| u[c]);
            return Ok([cols.next().unwrap(), cols.next().unwrap()]);
        }
        let p = *nonzero.iter().min_by_key(|&&i| (row[i].abs(), i)).unwrap();
        for &c in &nonzero {
            if c == p {
                continue;
            }
            let f = row[c].div_euclid(row[p]);
            row[c] -= f * row[p];
            for r in 0..3 {
                u[c][r] -= f * u[p][r];
            }
        }
    }
}

/// Basis of the torus `2u(1)_{k,l,m} ⊂ 3su(2)`: the lattice of the plane
/// `kx + ly + mz = 0` in the coordinates `x·A.s1 + y·B.s1 + z·C.s1`, halved
/// so that the rates on the three root planes are `x, y, z` themselves.
pub fn qklm_torus(k: i64, l: i64, m: i64) -> Result<Vec<String>> {
    let basis = integer_plane_basis([k, l, m])?;
    let labels: Vec<String> = ["A.s1", "B.s1", "C.s1"].iter().map(|s| s.to_string()).collect();
    Ok(basis.iter().map(|v| render_element(&labels, &v.map(|x| qf(x, 2)))).collect())
}

/// `su(3)` as the stabilizer of `x1` in `g2`, with the Cartan pair `t1, t2` first.
pub fn su3_in_g2() -> Vec<String> {
    let rep = g2_representation();
    let mats = rep.matrices();
    let n = mats.len();
    let columns: Vec<QVector> = mats.iter().map(|m| m.column(0)).collect();
    let kernel = QMatrix::from_columns(&columns).nullspace();
    let mut basis = vec![unit_vector(n, 0), unit_vector(n, 1)];
    for v in kernel {
        let mut trial = basis.clone();
        trial.push(v);
        if span_rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    let labels = rep.algebra().labels().to_vec();
    basis.iter().map(|v| render_element(&labels, v)).collect()
}
