//! Octonions recovered from the G2 three-form, plus the associated metric,
//! volume form and four-form.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{hodge, Blade, Form, Metric, Orientation};
use crate::linalg::{dot, unit_vector, QMatrix, QVector};
use crate::rational::{qf, rational_root, render, Rational};

/// Number of deterministic random vector pairs used by the norm check.
pub const VECTOR_PAIRS: usize = 100;

const VECTOR_SEED: u64 = 0x6732_5f6f_6374;

/// The standard G2 three-form on `Im(O)` in the basis `(i, j, k, ε, iε, jε, kε)`.
pub fn build_omega() -> Form {
    Form::parse(7, "e123 + e145 - e167 + e246 + e257 + e347 - e356").expect("static form")
}

/// Its Hodge dual for the Euclidean metric and the orientation of `(x_1..x_7)`.
pub fn build_star_omega() -> Form {
    Form::parse(7, "-e1247 + e1256 + e1346 + e1357 - e2345 + e2367 + e4567").expect("static form")
}

/// An octonion as coordinates in `(1, i, j, k, ε, iε, jε, kε)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion(pub [Rational; 8]);

impl Octonion {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.0[i] = Rational::one();
        o
    }

    pub fn from_slice(v: &[Rational]) -> Self {
        assert_eq!(v.len(), 8);
        Octonion(std::array::from_fn(|i| v[i].clone()))
    }

    pub fn norm_sq(&self) -> Rational {
        dot(&self.0, &self.0)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn add(&self, o: &Self) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Octonion(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinates rendered as `p/q` strings.
    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(render).collect()
    }

    /// `Σ c_i x_i`, with `x0` the unit, e.g. `-x6` or `1/2*x0 + x3`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let sep = match (out.is_empty(), c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{}*", render(&mag)) };
            out.push_str(&format!("{sep}{coeff}x{i}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `table[i][j] = x_i · x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctonionTable {
    table: Vec<Vec<Octonion>>,
}

impl OctonionTable {
    pub fn product_of_basis(&self, i: usize, j: usize) -> &Octonion {
        &self.table[i][j]
    }

    /// Overwrites a single entry; used to build deliberately broken tables.
    pub fn set_product(&mut self, i: usize, j: usize, value: Octonion) {
        self.table[i][j] = value;
    }

    /// Bilinear extension of the table.
    pub fn mul(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in self.table[i][j].0.iter().enumerate() {
                    if !t.is_zero() {
                        out.0[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn associator(&self, x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
        self.mul(&self.mul(x, y), z).sub(&self.mul(x, &self.mul(y, z)))
    }
}

/// Evaluates a 3-form on three basis vectors of `Im(O)` (1-based).
fn omega_value(omega: &Form, i: usize, j: usize, k: usize) -> Rational {
    omega.coefficient(&[i, j, k])
}

/// Multiplication table with `x_i x_j = -δ_ij + Σ_k ω(x_i, x_j, x_k) x_k`
/// on imaginary units and `x_0` as two-sided unit.
pub fn multiplication_from_omega(omega: &Form) -> Result<OctonionTable> {
    if omega.dim() != 7 {
        return Err(Error::DimensionMismatch { left: omega.dim(), right: 7 });
    }
    let mut table = vec![vec![Octonion::zero(); 8]; 8];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = match (i, j) {
                (0, j) => Octonion::basis(j),
                (i, 0) => Octonion::basis(i),
                (i, j) => {
                    let mut o = Octonion::zero();
                    if i == j {
                        o.0[0] = -Rational::one();
                    }
                    for k in 1..8 {
                        o.0[k] = omega_value(omega, i, j, k);
                    }
                    o
                }
            };
        }
    }
    Ok(OctonionTable { table })
}

/// Pass/fail outcome of a named check, with the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub details: serde_json::Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Fixed pseudo-random rational octonions (numerators in `[-3, 3]`,
/// denominators in `[1, 3]`).
pub fn test_vectors(count: usize) -> Vec<(Octonion, Octonion)> {
    let mut rng = ChaCha8Rng::seed_from_u64(VECTOR_SEED);
    let mut draw = || {
        Octonion(std::array::from_fn(|_| {
            let n: i64 = rng.gen_range(-3..=3);
            let d: i64 = rng.gen_range(1..=3);
            qf(n, d)
        }))
    };
    (0..count).map(|_| (draw(), draw())).collect()
}

/// Checks `⟨xy, xy⟩ = ⟨x,x⟩⟨y,y⟩` on all basis pairs and on the fixed
/// vector suite, together with the unit law and bilinearity.
pub fn check_normed_division(t: &OctonionTable) -> CheckReport {
    let fail = |what: &str, witness: serde_json::Value, basis_checked, vectors_checked| CheckReport {
        check: "normed_division".into(),
        status: CheckStatus::Fail,
        witness: Some(serde_json::json!({ "identity": what, "data": witness })),
        details: serde_json::json!({ "basis_pairs": basis_checked, "vector_pairs": vectors_checked }),
    };
    for i in 0..8 {
        let xi = Octonion::basis(i);
        if t.mul(&Octonion::basis(0), &xi) != xi || t.mul(&xi, &Octonion::basis(0)) != xi {
            return fail("unit", serde_json::json!({ "basis": i }), 0, 0);
        }
    }
    let mut basis_pairs = 0;
    for i in 0..8 {
        for j in 0..8 {
            let p = t.mul(&Octonion::basis(i), &Octonion::basis(j));
            if p.norm_sq() != Rational::one() {
                return fail("norm", serde_json::json!({ "x": i, "y": j }), basis_pairs, 0);
            }
            basis_pairs += 1;
        }
    }
    let vectors = test_vectors(VECTOR_PAIRS);
    let mut vector_pairs = 0;
    for (n, (x, y)) in vectors.iter().enumerate() {
        let lhs = t.mul(x, y).norm_sq();
        let rhs = x.norm_sq() * y.norm_sq();
        if lhs != rhs {
            return fail(
                "norm",
                serde_json::json!({ "x": x.render(), "y": y.render(), "lhs": render(&lhs), "rhs": render(&rhs) }),
                basis_pairs,
                vector_pairs,
            );
        }
        // bilinearity against the neighbouring pair
        let (z, _) = &vectors[(n + 1) % vectors.len()];
        let left = t.mul(&x.add(z), y);
        let right = t.mul(x, y).add(&t.mul(z, y));
        if left != right {
            return fail("bilinearity", serde_json::json!({ "index": n }), basis_pairs, vector_pairs);
        }
        vector_pairs += 1;
    }
    CheckReport {
        check: "normed_division".into(),
        status: CheckStatus::Pass,
        witness: None,
        details: serde_json::json!({ "basis_pairs": basis_pairs, "vector_pairs": vector_pairs }),
    }
}

/// `B(X, Y)`: the coefficient of `dx^{1..7}` in `-1/6 (X⌟ω)∧(Y⌟ω)∧ω`.
pub fn associated_bilinear(omega: &Form) -> Result<QMatrix> {
    if omega.dim() != 7 {
        return Err(Error::DimensionMismatch { left: omega.dim(), right: 7 });
    }
    if omega.grade() != Some(3) {
        return Err(Error::NotG2Form("expected a 3-form".into()));
    }
    let top = Blade::from_mask(0x7f);
    let contractions: Vec<Form> = (0..7).map(|i| omega.contract(&unit_vector(7, i))).collect::<Result<_>>()?;
    let mut b = QMatrix::zeros(7, 7);
    let factor = -qf(1, 6);
    for i in 0..7 {
        let left = contractions[i].wedge(omega)?;
        for j in i..7 {
            let v = contractions[j].wedge(&left)?.coefficient_of(top) * &factor;
            b[(i, j)] = v.clone();
            b[(j, i)] = v;
        }
    }
    Ok(b)
}

/// Metric, volume form and orientation determined by a G2 three-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedGeometry {
    pub metric: Metric,
    pub volume: Form,
    pub orientation: Orientation,
}

/// Solves `g(X,Y) vol = -1/6 (X⌟ω)∧(Y⌟ω)∧ω` with `vol = ∗1`.
///
/// Writing `vol = s·dx^{1..7}`, the normalization forces `s^9 = det B`, so
/// the scale must be a rational ninth root; otherwise this returns
/// [`Error::IrrationalRoot`]. Forms whose `B` is degenerate or indefinite
/// are rejected as not G2.
pub fn associated_metric(omega: &Form) -> Result<AssociatedGeometry> {
    let b = associated_bilinear(omega)?;
    let det = b.determinant()?;
    if det.is_zero() {
        return Err(Error::NotG2Form("degenerate associated bilinear form".into()));
    }
    let s = rational_root(&det, 9)?;
    let g = b.scale(&s.recip());
    let metric = Metric::new(g).map_err(|_| Error::NotG2Form("associated metric is indefinite".into()))?;
    let orientation = if s.is_positive() { Orientation::Positive } else { Orientation::Negative };
    Ok(AssociatedGeometry { metric, volume: Form::volume(7).scale(&s), orientation })
}

/// Whether `B` is definite, i.e. `ω` lies in an open G2 orbit (irrespective
/// of whether the metric scale is rational).
pub fn is_definite_g2_form(omega: &Form) -> Result<bool> {
    let b = associated_bilinear(omega)?;
    Ok(b.is_positive_definite() || (-&b).is_positive_definite())
}

/// A G2-structure at a point: the three-form with its metric, volume and four-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Structure {
    pub omega: Form,
    pub metric: Metric,
    pub orientation: Orientation,
    pub volume: Form,
    pub star_omega: Form,
}

impl G2Structure {
    pub fn from_omega(omega: Form) -> Result<Self> {
        let geo = associated_metric(&omega)?;
        let star_omega = hodge(&omega, &geo.metric, geo.orientation)?;
        Ok(G2Structure { omega, metric: geo.metric, orientation: geo.orientation, volume: geo.volume, star_omega })
    }

    pub fn standard() -> Self {
        Self::from_omega(build_omega()).expect("standard form is a G2-form")
    }
}

/// The standard four-form recomputed from `ω` and compared with the tabulated one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeCheck {
    pub omega: Form,
    pub orientation: i64,
    pub metric_is_identity: bool,
    pub volume: Form,
    pub computed: Form,
    pub expected: Form,
    pub matches: bool,
}

/// `∗ω` for the Euclidean metric and the given orientation against [`build_star_omega`].
pub fn hodge_golden_check(orientation: Orientation) -> Result<HodgeCheck> {
    let omega = build_omega();
    let geo = associated_metric(&omega)?;
    let computed = hodge(&omega, &Metric::euclidean(7), orientation)?;
    let expected = build_star_omega();
    Ok(HodgeCheck {
        matches: computed == expected && geo.metric.is_identity(),
        omega,
        orientation: orientation.sign(),
        metric_is_identity: geo.metric.is_identity(),
        volume: geo.volume,
        computed,
        expected,
    })
}

/// Coordinates of an imaginary octonion as a 7-vector.
pub fn imaginary_part(o: &Octonion) -> QVector {
    o.0[1..].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn omega_coefficients() {
        let w = build_omega();
        assert_eq!(w.coefficient(&[1, 2, 3]), q(1));
        assert_eq!(w.coefficient(&[3, 5, 6]), q(-1));
        assert_eq!(w.coefficient(&[1, 2, 4]), q(0));
        assert_eq!(w.len(), 7);
    }

    #[test]
    fn products_from_omega() {
        let t = multiplication_from_omega(&build_omega()).unwrap();
        assert_eq!(*t.product_of_basis(1, 2), Octonion::basis(3));
        assert_eq!(*t.product_of_basis(1, 1), Octonion::basis(0).scale(&q(-1)));
        assert_eq!(*t.product_of_basis(2, 4), Octonion::basis(6));
        assert_eq!(*t.product_of_basis(2, 1), Octonion::basis(3).scale(&q(-1)));
    }

    #[test]
    fn standard_table_is_normed() {
        let t = multiplication_from_omega(&build_omega()).unwrap();
        let r = check_normed_division(&t);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.details["basis_pairs"], 64);
        assert_eq!(r.details["vector_pairs"], 100);
    }

    #[test]
    fn unit_rows_pass_trivially() {
        let t = multiplication_from_omega(&build_omega()).unwrap();
        for (_, y) in test_vectors(10) {
            let p = t.mul(&Octonion::basis(0), &y);
            assert_eq!(p.norm_sq(), y.norm_sq());
        }
    }

    #[test]
    fn corrupted_table_fails_with_witness() {
        let mut t = multiplication_from_omega(&build_omega()).unwrap();
        t.set_product(1, 2, Octonion::basis(3).scale(&q(-1)));
        let r = check_normed_division(&t);
        assert_eq!(r.status, CheckStatus::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn octonions_are_alternative_but_not_associative() {
        let t = multiplication_from_omega(&build_omega()).unwrap();
        let b = Octonion::basis;
        let mut nonassoc = false;
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    if !t.associator(&b(i), &b(j), &b(k)).is_zero() {
                        nonassoc = true;
                    }
                }
            }
        }
        assert!(nonassoc);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert!(t.associator(&b(i), &b(j), &b(k)).is_zero(), "H not associative at {i}{j}{k}");
                }
            }
        }
    }

    #[test]
    fn standard_metric_and_volume() {
        let geo = associated_metric(&build_omega()).unwrap();
        assert!(geo.metric.is_identity());
        assert_eq!(geo.volume, Form::volume(7));
        assert_eq!(geo.orientation, Orientation::Positive);
    }

    #[test]
    fn standard_star_omega() {
        let s = G2Structure::standard();
        assert_eq!(s.star_omega, build_star_omega());
    }

    #[test]
    fn degenerate_form_rejected() {
        let w = Form::parse(7, "e123").unwrap();
        assert!(matches!(associated_metric(&w), Err(Error::NotG2Form(_))));
    }

    #[test]
    fn hodge_check_orientation() {
        assert!(hodge_golden_check(Orientation::Positive).unwrap().matches);
        let flipped = hodge_golden_check(Orientation::Negative).unwrap();
        assert!(!flipped.matches);
        assert_eq!(flipped.computed, -&flipped.expected);
    }
}
