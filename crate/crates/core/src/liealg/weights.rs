//! Weight decompositions for torus actions and for `su(2)^s ⊕ u(1)^t`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Representation;
use crate::error::{Error, Result};
use crate::linalg::{span_rank, vec_scale, QMatrix, QVector};
use crate::rational::{q, render, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "R")]
    Real,
}

/// One isotypic piece `multiplicity · V_weight^kind`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightModule {
    pub weight: Vec<i64>,
    pub kind: Kind,
    #[serde(default = "single")]
    pub multiplicity: usize,
}

fn single() -> usize {
    1
}

impl WeightModule {
    pub fn new(weight: Vec<i64>, kind: Kind, multiplicity: usize) -> Self {
        WeightModule { weight, kind, multiplicity }
    }

    pub fn complex(weight: &[i64]) -> Self {
        Self::new(weight.to_vec(), Kind::Complex, 1)
    }

    pub fn real(weight: &[i64]) -> Self {
        Self::new(weight.to_vec(), Kind::Real, 1)
    }

    pub fn times(mut self, m: usize) -> Self {
        self.multiplicity = m;
        self
    }
}

/// Simple factors of an isotropy algebra that carry their own highest-weight labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimpleTag {
    Su3,
    G2,
}

/// Shape of an isotropy algebra: `su(2)^su2 ⊕ u(1)^u1`, or a tagged simple algebra.
///
/// Bases are ordered with each `su(2)` factor in its `σ`-basis first, then
/// the `u(1)` generators. For a tagged algebra the first two basis elements
/// span a Cartan subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symmetry {
    #[serde(default)]
    pub su2: usize,
    #[serde(default)]
    pub u1: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<SimpleTag>,
}

impl Symmetry {
    pub const TRIVIAL: Symmetry = Symmetry { su2: 0, u1: 0, tag: None };

    pub fn torus(rank: usize) -> Self {
        Symmetry { su2: 0, u1: rank, tag: None }
    }

    pub fn new(su2: usize, u1: usize) -> Self {
        Symmetry { su2, u1, tag: None }
    }

    pub fn tagged(tag: SimpleTag) -> Self {
        Symmetry { su2: 0, u1: 0, tag: Some(tag) }
    }

    pub fn dim(&self) -> usize {
        match self.tag {
            Some(SimpleTag::Su3) => 8,
            Some(SimpleTag::G2) => 14,
            None => 3 * self.su2 + self.u1,
        }
    }

    pub fn rank(&self) -> usize {
        match self.tag {
            Some(_) => 2,
            None => self.su2 + self.u1,
        }
    }

    /// Real dimension of a module with this weight.
    pub fn real_dim(&self, m: &WeightModule) -> usize {
        let single = match self.tag {
            Some(SimpleTag::Su3) => {
                let (a, b) = (m.weight[0] as usize, m.weight[1] as usize);
                let d = (a + 1) * (b + 1) * (a + b + 2) / 2;
                if a == b {
                    d
                } else {
                    2 * d
                }
            }
            Some(SimpleTag::G2) => match (m.weight[0], m.weight[1]) {
                (0, 0) => 1,
                (1, 0) => 7,
                (0, 1) => 14,
                _ => 0,
            },
            None => {
                let (su2, u1) = m.weight.split_at(self.su2);
                let d: usize = su2.iter().map(|a| (*a as usize) + 1).product();
                if self.is_real_type(su2, u1) {
                    d
                } else {
                    2 * d
                }
            }
        };
        single * m.multiplicity
    }

    fn is_real_type(&self, su2: &[i64], u1: &[i64]) -> bool {
        u1.iter().all(|c| *c == 0) && su2.iter().filter(|a| *a % 2 != 0).count() % 2 == 0
    }
}

/// A decomposition of a real representation into weight modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub symmetry: Symmetry,
    pub modules: Vec<WeightModule>,
}

impl Splitting {
    /// Canonical form: aggregated multiplicities, complex modules before real
    /// ones, then by `Σ|w|`, then lexicographically descending.
    pub fn new(symmetry: Symmetry, modules: Vec<WeightModule>) -> Self {
        let mut agg: BTreeMap<(Vec<i64>, Kind), usize> = BTreeMap::new();
        for m in modules {
            *agg.entry((m.weight, m.kind)).or_default() += m.multiplicity;
        }
        let mut modules: Vec<WeightModule> =
            agg.into_iter().map(|((w, k), mult)| WeightModule::new(w, k, mult)).collect();
        modules.sort_by(|a, b| {
            let key = |m: &WeightModule| (m.kind, m.weight.iter().map(|x| x.abs()).sum::<i64>());
            key(a).cmp(&key(b)).then_with(|| b.weight.cmp(&a.weight))
        });
        Splitting { symmetry, modules }
    }

    pub fn real_dim(&self) -> usize {
        self.modules.iter().map(|m| self.symmetry.real_dim(m)).sum()
    }

    /// Total real dimension of the trivial submodule.
    pub fn trivial_dim(&self) -> usize {
        self.modules
            .iter()
            .filter(|m| m.kind == Kind::Real && m.weight.iter().all(|x| *x == 0))
            .map(|m| m.multiplicity)
            .sum()
    }

    /// Each complex module repeated by multiplicity.
    pub fn complex_weights(&self) -> Vec<Vec<i64>> {
        self.modules
            .iter()
            .filter(|m| m.kind == Kind::Complex)
            .flat_map(|m| std::iter::repeat_n(m.weight.clone(), m.multiplicity))
            .collect()
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modules.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .modules
            .iter()
            .map(|m| {
                let mult = if m.multiplicity == 1 { String::new() } else { m.multiplicity.to_string() };
                let w: Vec<String> = m.weight.iter().map(i64::to_string).collect();
                let kind = match m.kind {
                    Kind::Complex => "C",
                    Kind::Real => "R",
                };
                if w.is_empty() {
                    format!("{mult}V^{kind}")
                } else {
                    format!("{mult}V({})^{kind}", w.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A common invariant plane with `A_j u = -w_j v` and `A_j v = w_j u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPlane {
    pub weight: Vec<i64>,
    pub u: QVector,
    pub v: QVector,
}

/// Simultaneous block form of commuting generators with integral rates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSplitting {
    pub rank: usize,
    pub fixed: Vec<QVector>,
    pub planes: Vec<WeightPlane>,
}

impl TorusSplitting {
    pub fn modules(&self) -> Vec<WeightModule> {
        let mut out: Vec<WeightModule> = self.planes.iter().map(|p| WeightModule::complex(&p.weight)).collect();
        if !self.fixed.is_empty() {
            out.push(WeightModule::real(&vec![0; self.rank]).times(self.fixed.len()));
        }
        out
    }
}

fn first_nonzero_negative(w: &[i64]) -> bool {
    w.iter().find(|x| **x != 0).is_some_and(|x| *x < 0)
}

fn floor_to_i64(x: &Rational) -> i64 {
    x.floor().to_integer().to_i64().unwrap_or(i64::MAX)
}

/// Splits `R^n` under commuting generators with eigenvalues in `iZ` into
/// fixed vectors and invariant weight planes.
pub fn torus_splitting(mats: &[QMatrix], n: usize) -> Result<TorusSplitting> {
    for m in mats {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { left: m.rows(), right: n });
        }
    }
    for i in 0..mats.len() {
        for j in (i + 1)..mats.len() {
            if mats[i].commutator(&mats[j]) != QMatrix::zeros(n, n) {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    let rank = mats.len();
    let identity: Vec<QVector> = (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect();
    let fixed = if rank == 0 {
        identity
    } else {
        let mut rows = Vec::new();
        for m in mats {
            for r in 0..m.rows() {
                rows.push(m.row(r).to_vec());
            }
        }
        QMatrix::from_rows(rows).nullspace()
    };
    if rank == 0 || fixed.len() == n {
        return Ok(TorusSplitting { rank, fixed, planes: Vec::new() });
    }

    // generic element c·A with c = (1, M, M², …) separates weights up to sign
    let bound = mats.iter().map(|m| floor_to_i64(&m.inf_norm())).max().unwrap_or(0);
    let base = 2 * bound + 1;
    let mut generic = QMatrix::zeros(n, n);
    let mut c = Rational::one();
    for m in mats {
        generic = &generic + &m.scale(&c);
        c *= q(base);
    }
    let square = &generic * &generic;
    let max_rate = floor_to_i64(&generic.inf_norm());
    let mut planes = Vec::new();
    let mut covered = fixed.len();
    for r in 1..=max_rate {
        let shifted = &square + &QMatrix::identity(n).scale(&q(r * r));
        let kernel = shifted.nullspace();
        if kernel.is_empty() {
            continue;
        }
        covered += kernel.len();
        let inv_r = q(r).recip();
        let mut span: Vec<QVector> = Vec::new();
        for b in &kernel {
            let mut trial = span.clone();
            trial.push(b.clone());
            if span_rank(&trial) == span.len() {
                continue;
            }
            let u = b.clone();
            let v = vec_scale(&generic.mul_vec(&u), &-inv_r.clone());
            let weight = plane_weight(mats, &u, &v)?;
            span.push(u.clone());
            span.push(v.clone());
            planes.push(if first_nonzero_negative(&weight) {
                WeightPlane { weight: weight.iter().map(|x| -x).collect(), u: v, v: u }
            } else {
                WeightPlane { weight, u, v }
            });
        }
    }
    if covered != n {
        return Err(Error::NonIntegerRates(format!("only {covered} of {n} dimensions have integral rotation rates")));
    }
    Ok(TorusSplitting { rank, fixed, planes })
}

fn plane_weight(mats: &[QMatrix], u: &[Rational], v: &[Rational]) -> Result<Vec<i64>> {
    let idx = v.iter().position(|x| !x.is_zero()).expect("plane vector is nonzero");
    mats.iter()
        .map(|m| {
            let au = m.mul_vec(u);
            let w = -&au[idx] / &v[idx];
            if au != vec_scale(v, &-w.clone()) {
                return Err(Error::NonIntegerRates("generator does not act by a rotation on a plane".into()));
            }
            if !w.is_integer() {
                return Err(Error::NonIntegerRates(format!("rate {}", render(&w))));
            }
            Ok(w.to_integer().to_i64().expect("small rate"))
        })
        .collect()
}

/// Weight modules of a commuting family of generators acting on `R^n`.
pub fn weight_decomposition(torus_mats: &[QMatrix]) -> Result<Vec<WeightModule>> {
    let n = torus_mats.first().map_or(0, QMatrix::rows);
    let split = torus_splitting(torus_mats, n)?;
    Ok(Splitting::new(Symmetry::torus(torus_mats.len()), split.modules()).modules)
}

/// Weight modules of a torus acting on `R^n`, allowing an empty family.
pub fn torus_modules(torus_mats: &[QMatrix], n: usize) -> Result<Splitting> {
    let split = torus_splitting(torus_mats, n)?;
    Ok(Splitting::new(Symmetry::torus(torus_mats.len()), split.modules()))
}

/// Decomposes the representation according to `symmetry`.
///
/// For `su(2)^s ⊕ u(1)^t` the joint weights of `σ1` of each factor and the
/// `u(1)` generators are peeled into irreducible characters. For a tagged
/// `su(3)` the module is identified from its Cartan weights and commutant;
/// for `g2` from irreducibility in dimension 7.
pub fn isotropy_splitting(rho: &Representation, symmetry: Symmetry) -> Result<Splitting> {
    if rho.algebra().dim() != symmetry.dim() {
        return Err(Error::InvalidRepresentation(format!(
            "algebra of dimension {} does not have the declared shape (dimension {})",
            rho.algebra().dim(),
            symmetry.dim()
        )));
    }
    let n = rho.dim();
    match symmetry.tag {
        Some(SimpleTag::Su3) => {
            let torus = torus_modules(&rho.matrices()[..2], n)?;
            let commutant = rho.commutant_dim();
            let fits = n == 7
                && commutant == 3
                && torus.trivial_dim() == 1
                && super::g2::matches_two_torus(&torus.complex_weights()).is_some();
            if fits {
                Ok(Splitting::new(symmetry, vec![WeightModule::complex(&[1, 0]), WeightModule::real(&[0, 0])]))
            } else {
                Ok(torus)
            }
        }
        Some(SimpleTag::G2) => {
            if n == 7 && rho.commutant_dim() == 1 {
                Ok(Splitting::new(symmetry, vec![WeightModule::real(&[1, 0])]))
            } else {
                torus_modules(&rho.matrices()[..2], n)
            }
        }
        None => {
            let mut gens: Vec<QMatrix> = (0..symmetry.su2).map(|k| rho.matrices()[3 * k].clone()).collect();
            gens.extend(rho.matrices()[3 * symmetry.su2..].iter().cloned());
            let split = torus_splitting(&gens, n)?;
            peel(&split, symmetry)
        }
    }
}

fn peel(split: &TorusSplitting, symmetry: Symmetry) -> Result<Splitting> {
    let s = symmetry.su2;
    let mut chars: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for p in &split.planes {
        *chars.entry(p.weight.clone()).or_default() += 1;
        *chars.entry(p.weight.iter().map(|x| -x).collect()).or_default() += 1;
    }
    if !split.fixed.is_empty() {
        *chars.entry(vec![0; split.rank]).or_default() += split.fixed.len() as i64;
    }
    let mut modules = Vec::new();
    while let Some(top) = chars.iter().filter(|(_, c)| **c > 0).map(|(w, _)| w.clone()).max_by(|a, b| {
        let sa: i64 = a[..s].iter().sum();
        let sb: i64 = b[..s].iter().sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    }) {
        let (su2, u1) = top.split_at(s);
        if su2.iter().any(|a| *a < 0) {
            return Err(Error::InvalidRepresentation("weights are not those of an su(2)-module".into()));
        }
        let odd = su2.iter().filter(|a| *a % 2 != 0).count();
        let charged = u1.iter().any(|c| *c != 0);
        let conj: Vec<i64> = su2.iter().copied().chain(u1.iter().map(|c| -c)).collect();
        let copies: Vec<&Vec<i64>> = if charged {
            vec![&top, &conj]
        } else if odd % 2 == 1 {
            vec![&top, &top]
        } else {
            vec![&top]
        };
        for hw in copies {
            remove_character(&mut chars, &hw[..s], &hw[s..])?;
        }
        let kind = if charged || odd > 0 { Kind::Complex } else { Kind::Real };
        let mut weight = top.clone();
        if first_nonzero_negative(&weight[s..]) {
            weight = conj;
        }
        modules.push(WeightModule::new(weight, kind, 1));
    }
    Ok(Splitting::new(symmetry, modules))
}

fn remove_character(chars: &mut BTreeMap<Vec<i64>, i64>, su2: &[i64], u1: &[i64]) -> Result<()> {
    let mut current: Vec<Vec<i64>> = vec![Vec::new()];
    for a in su2 {
        current = current
            .into_iter()
            .flat_map(|prefix| {
                (0..=*a).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(a - 2 * k);
                    p
                })
            })
            .collect();
    }
    for mut w in current {
        w.extend_from_slice(u1);
        let e = chars.entry(w).or_default();
        *e -= 1;
        if *e < 0 {
            return Err(Error::InvalidRepresentation("weight multiset is not a sum of characters".into()));
        }
    }
    chars.retain(|_, c| *c != 0);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{spin_representation, LieAlgebra};

    fn rotation(n: usize, planes: &[(usize, usize, i64)]) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for &(a, b, r) in planes {
            m[(a, b)] = q(r);
            m[(b, a)] = q(-r);
        }
        m
    }

    #[test]
    fn zero_generator_gives_trivial_modules() {
        let w = weight_decomposition(&[QMatrix::zeros(7, 7)]).unwrap();
        assert_eq!(w, vec![WeightModule::real(&[0]).times(7)]);
    }

    #[test]
    fn single_rotation_rates() {
        let m = rotation(5, &[(0, 1, 3), (2, 3, -2)]);
        let s = torus_modules(&[m], 5).unwrap();
        assert_eq!(s.to_string(), "V(2)^C + V(3)^C + V(0)^R");
        assert_eq!(s.real_dim(), 5);
    }

    #[test]
    fn planes_satisfy_convention() {
        let a = rotation(4, &[(0, 1, 1), (2, 3, 2)]);
        let b = rotation(4, &[(0, 1, 1), (2, 3, -1)]);
        let split = torus_splitting(&[a.clone(), b.clone()], 4).unwrap();
        for p in &split.planes {
            for (m, w) in [&a, &b].iter().zip(&p.weight) {
                assert_eq!(m.mul_vec(&p.u), vec_scale(&p.v, &q(-w)));
                assert_eq!(m.mul_vec(&p.v), vec_scale(&p.u, &q(*w)));
            }
            assert!(!first_nonzero_negative(&p.weight));
        }
    }

    #[test]
    fn non_commuting_rejected() {
        let a = rotation(3, &[(0, 1, 1)]);
        let b = rotation(3, &[(1, 2, 1)]);
        assert_eq!(torus_splitting(&[a, b], 3), Err(Error::NonCommuting(0, 1)));
    }

    #[test]
    fn non_integer_rates_rejected() {
        let mut m = QMatrix::zeros(2, 2);
        m[(0, 1)] = crate::rational::qf(1, 2);
        m[(1, 0)] = crate::rational::qf(-1, 2);
        assert!(matches!(torus_splitting(&[m], 2), Err(Error::NonIntegerRates(_))));
    }

    #[test]
    fn spin_modules_peel() {
        let rho = spin_representation(3);
        let s = isotropy_splitting(&rho, Symmetry::new(1, 0)).unwrap();
        assert_eq!(s.modules, vec![WeightModule::real(&[6])]);
        assert_eq!(s.real_dim(), 7);
    }

    #[test]
    fn quaternionic_module_peels_once() {
        // C² as R⁴ under su(2): V1^C of real dimension 4
        let rho = Representation::new(LieAlgebra::su2(), 4, crate::liealg::su2_fundamental()).unwrap();
        let split = isotropy_splitting(&rho, Symmetry::new(1, 0)).unwrap();
        assert_eq!(split.modules, vec![WeightModule::complex(&[1])]);
        assert_eq!(split.real_dim(), 4);
    }

    #[test]
    fn rendering() {
        let s = Splitting::new(
            Symmetry::torus(2),
            vec![
                WeightModule::complex(&[1, 1]),
                WeightModule::real(&[0, 0]),
                WeightModule::complex(&[0, 1]),
                WeightModule::complex(&[1, 0]),
            ],
        );
        assert_eq!(s.to_string(), "V(1,0)^C + V(0,1)^C + V(1,1)^C + V(0,0)^R");
        assert_eq!(Splitting::new(Symmetry::TRIVIAL, vec![WeightModule::real(&[]).times(7)]).to_string(), "7V^R");
    }
}
