//! The exceptional algebra `g2` as the stabilizer of the three-form, its
//! Cartan subalgebra, and the table of its connected subgroups by isotropy
//! splitting on `Im(O)`.

use num_traits::Zero;
use serde::Serialize;

use super::weights::{SimpleTag, Splitting, Symmetry, WeightModule};
use super::{LieAlgebra, Representation};
use crate::exterior::{blades_of_grade, Form};
use crate::linalg::{span_rank, QMatrix, QVector};
use crate::octonion::build_omega;
use crate::rational::{q, Rational};

/// The element of the fixed Cartan subalgebra of `g2` with rates
/// `l1, l2, l1 + l2` on the planes `(x2,x3)`, `(x4,x5)`, `(x6,x7)`.
pub fn cartan_g2_action(l1: &Rational, l2: &Rational) -> QMatrix {
    let mut m = QMatrix::zeros(7, 7);
    let l3 = l1 + l2;
    for (a, rate) in [(1, l1), (3, l2), (5, &l3)] {
        m[(a, a + 1)] = rate.clone();
        m[(a + 1, a)] = -rate.clone();
    }
    m
}

fn elementary_skew(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(i, j)] = q(1);
    m[(j, i)] = q(-1);
    m
}

/// Basis of `{A ∈ so(n) : A·ω = 0}` where `A` acts on forms as a derivation.
pub fn g2_stabilizer(omega: &Form) -> Vec<QMatrix> {
    let n = omega.dim();
    let gens: Vec<QMatrix> =
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).map(|(i, j)| elementary_skew(n, i, j)).collect();
    let grade = omega.grade().unwrap_or(0);
    let blades = blades_of_grade(n, grade);
    let columns: Vec<QVector> = gens
        .iter()
        .map(|a| {
            let image = omega.derivation_action(a).expect("matching dimensions");
            blades.iter().map(|b| image.coefficient_of(*b)).collect()
        })
        .collect();
    QMatrix::from_columns(&columns)
        .nullspace()
        .into_iter()
        .map(|coeffs| {
            coeffs
                .iter()
                .zip(&gens)
                .filter(|(c, _)| !c.is_zero())
                .fold(QMatrix::zeros(n, n), |acc, (c, g)| &acc + &g.scale(c))
        })
        .collect()
}

/// The standard 7-dimensional representation of `g2`, with the two Cartan
/// generators `cartan_g2_action(1,0)`, `cartan_g2_action(0,1)` first.
pub fn g2_representation() -> Representation {
    let mut basis = vec![cartan_g2_action(&q(1), &q(0)), cartan_g2_action(&q(0), &q(1))];
    for m in g2_stabilizer(&build_omega()) {
        let mut trial: Vec<QVector> = basis.iter().map(|b| b.entries().to_vec()).collect();
        trial.push(m.entries().to_vec());
        if span_rank(&trial) == trial.len() {
            basis.push(m);
        }
    }
    let labels = (1..=basis.len()).map(|i| if i <= 2 { format!("t{i}") } else { format!("g{i}") }).collect();
    let alg = LieAlgebra::from_matrices(labels, &basis).expect("stabilizer is closed");
    Representation::new(alg, 7, basis).expect("matrix algebra acts on R^7")
}

/// One row of the table of connected subgroups of `G2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G2SubgroupEntry {
    pub label: String,
    pub dim: usize,
    pub rank: usize,
    pub symmetry: Symmetry,
    /// `None` for the one-parameter `u(1)` family.
    pub splitting: Option<Splitting>,
    pub display: String,
    /// Largest trivial submodule over the row (for the `u(1)` family, its degenerate members).
    pub max_trivial: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn entry(label: &str, symmetry: Symmetry, modules: Vec<WeightModule>, note: Option<&str>) -> G2SubgroupEntry {
    let splitting = Splitting::new(symmetry, modules);
    G2SubgroupEntry {
        label: label.into(),
        dim: symmetry.dim(),
        rank: symmetry.rank(),
        symmetry,
        display: splitting.to_string(),
        max_trivial: splitting.trivial_dim(),
        splitting: Some(splitting),
        note: note.map(Into::into),
    }
}

const INFERRED_U1: &str =
    "u(1) weights inferred from the Cartan element commuting with su(2); the table fixes only the su(2) part";

/// The twelve rows, in order of subgroup dimension.
pub fn g2_subgroup_table() -> Vec<G2SubgroupEntry> {
    use WeightModule as W;
    let s = Symmetry::new;
    vec![
        entry("{e}", Symmetry::TRIVIAL, vec![W::real(&[]).times(7)], None),
        G2SubgroupEntry {
            label: "u(1)".into(),
            dim: 1,
            rank: 1,
            symmetry: Symmetry::torus(1),
            splitting: None,
            display: "V(a)^C + V(b)^C + V(a+b)^C + V(0)^R".into(),
            max_trivial: 3,
            note: Some("one row per pair (a,b), not both zero".into()),
        },
        entry(
            "2u(1)",
            Symmetry::torus(2),
            vec![W::complex(&[1, 0]), W::complex(&[0, 1]), W::complex(&[1, 1]), W::real(&[0, 0])],
            None,
        ),
        entry("su(2)_1", s(1, 0), vec![W::complex(&[1]), W::real(&[0]).times(3)], None),
        entry("su(2)_{1,2}", s(1, 0), vec![W::real(&[2]), W::complex(&[1])], None),
        entry("su(2)_{2,2}", s(1, 0), vec![W::real(&[2]).times(2), W::real(&[0])], None),
        entry("su(2)_6", s(1, 0), vec![W::real(&[6])], None),
        entry(
            "su(2)_1+u(1)",
            s(1, 1),
            vec![W::complex(&[1, 1]), W::complex(&[0, 2]), W::real(&[0, 0])],
            Some(INFERRED_U1),
        ),
        entry("su(2)_{1,2}+u(1)", s(1, 1), vec![W::real(&[2, 0]), W::complex(&[1, 1])], Some(INFERRED_U1)),
        entry("2su(2)", s(2, 0), vec![W::real(&[2, 0]), W::complex(&[1, 1])], None),
        entry("su(3)", Symmetry::tagged(SimpleTag::Su3), vec![W::complex(&[1, 0]), W::real(&[0, 0])], None),
        entry("g2", Symmetry::tagged(SimpleTag::G2), vec![W::real(&[1, 0])], None),
    ]
}

/// Result of locating a splitting in the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropyMatch {
    pub label: String,
    /// `(a, b)` for the `u(1)` family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<[i64; 2]>,
    /// Row-major change of torus basis carrying the weights onto the table row.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<[[i64; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IsotropyMatch {
    fn plain(label: &str) -> Self {
        IsotropyMatch { label: label.into(), parameters: None, transform: None, note: None }
    }
}

fn normalize(w: [i64; 2]) -> [i64; 2] {
    if w[0] < 0 || (w[0] == 0 && w[1] < 0) {
        [-w[0], -w[1]]
    } else {
        w
    }
}

pub(crate) fn apply(t: &[[i64; 2]; 2], w: &[i64]) -> [i64; 2] {
    [t[0][0] * w[0] + t[0][1] * w[1], t[1][0] * w[0] + t[1][1] * w[1]]
}

/// Finds a unimodular `T` with `{±T w}` equal to `{(1,0), (0,1), (1,1)}`.
///
/// `T` sends some signed pair of the weights to `(1,0), (0,1)`, so it is the
/// inverse of their matrix; among all such `T` the one with smallest entries wins.
pub(crate) fn matches_two_torus(weights: &[Vec<i64>]) -> Option<[[i64; 2]; 2]> {
    if weights.len() != 3 || weights.iter().any(|w| w.len() != 2) {
        return None;
    }
    let target = {
        let mut t = vec![[0, 1], [1, 0], [1, 1]];
        t.sort();
        t
    };
    let mut found = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let a = [sa * weights[i][0], sa * weights[i][1]];
                let b = [sb * weights[j][0], sb * weights[j][1]];
                let det = a[0] * b[1] - b[0] * a[1];
                if det.abs() != 1 {
                    continue;
                }
                // inverse of the matrix with columns a, b
                let t = [[b[1] * det, -b[0] * det], [-a[1] * det, a[0] * det]];
                let mut img: Vec<[i64; 2]> = weights.iter().map(|w| normalize(apply(&t, w))).collect();
                img.sort();
                if img == target {
                    found.push(t);
                }
            }
        }
    }
    found.into_iter().min_by_key(|m| {
        let size: i64 = m.iter().flatten().map(|x| x.abs()).sum();
        (size, m.map(|r| r.map(|x| -x)))
    })
}

fn same_modules(a: &Splitting, b: &[WeightModule]) -> bool {
    a.modules == Splitting::new(a.symmetry, b.to_vec()).modules
}

/// Locates `splitting` in the table, up to reordering, per-module signs and
/// (for a rank-2 torus) a unimodular change of weight lattice basis.
pub fn match_isotropy(splitting: &Splitting) -> Option<IsotropyMatch> {
    if splitting.real_dim() != 7 {
        return None;
    }
    let sym = splitting.symmetry;
    let table = g2_subgroup_table();
    let rows = table.iter().filter(|e| e.symmetry == sym);
    match (sym.tag, sym.su2, sym.u1) {
        (Some(_), _, _) | (None, 0, 0) | (None, 1, 0) => rows
            .filter_map(|e| e.splitting.as_ref().map(|s| (e, s)))
            .find(|(_, s)| same_modules(splitting, &s.modules))
            .map(|(e, _)| IsotropyMatch::plain(&e.label)),
        (None, 0, 1) => {
            let mut rates: Vec<i64> = splitting.complex_weights().iter().map(|w| w[0].abs()).collect();
            if rates.len() > 3 || splitting.trivial_dim() != 7 - 2 * rates.len() {
                return None;
            }
            rates.resize(3, 0);
            rates.sort_unstable_by(|a, b| b.cmp(a));
            (rates[0] > 0 && rates[0] == rates[1] + rates[2]).then(|| IsotropyMatch {
                label: "u(1)".into(),
                parameters: Some([rates[1], rates[2]]),
                transform: None,
                note: None,
            })
        }
        (None, 0, 2) => {
            if splitting.trivial_dim() != 1 {
                return None;
            }
            matches_two_torus(&splitting.complex_weights()).map(|t| IsotropyMatch {
                label: "2u(1)".into(),
                parameters: None,
                transform: Some(t),
                note: None,
            })
        }
        (None, 2, 0) => {
            let swapped: Vec<WeightModule> = splitting
                .modules
                .iter()
                .map(|m| WeightModule::new(vec![m.weight[1], m.weight[0]], m.kind, m.multiplicity))
                .collect();
            let swapped = Splitting::new(sym, swapped);
            rows.filter_map(|e| e.splitting.as_ref().map(|s| (e, s)))
                .find(|(_, s)| same_modules(splitting, &s.modules) || same_modules(&swapped, &s.modules))
                .map(|(e, _)| IsotropyMatch::plain(&e.label))
        }
        (None, 1, 1) => {
            let mut scales: Vec<i64> = splitting.modules.iter().map(|m| m.weight[1].abs()).filter(|c| *c > 0).collect();
            scales.extend(scales.clone().iter().filter(|c| *c % 2 == 0).map(|c| c / 2));
            scales.sort_unstable();
            scales.dedup();
            for e in rows {
                let Some(s) = &e.splitting else { continue };
                for c in &scales {
                    let scaled: Vec<WeightModule> = s
                        .modules
                        .iter()
                        .map(|m| WeightModule::new(vec![m.weight[0], m.weight[1] * c], m.kind, m.multiplicity))
                        .collect();
                    if same_modules(splitting, &scaled) {
                        return Some(IsotropyMatch {
                            label: e.label.clone(),
                            parameters: Some([1, *c]),
                            transform: None,
                            note: e.note.clone(),
                        });
                    }
                }
            }
            None
        }
        _ => None,
    }
}
