//! Reductive homogeneous spaces `G/H`: complement, isotropy action, the
//! left-invariant coframe differential, basic forms and the cosymplectic test.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{hodge, hodge_up_to_scale, Form, Metric, Orientation};
use crate::liealg::{
    cartan_g2_action, invariant_forms, isotropy_splitting, match_isotropy, torus_splitting, IsotropyMatch, LieAlgebra,
    Representation, Splitting, Symmetry,
};
use crate::linalg::{bilinear, unit_vector, vec_scale, QMatrix, QVector};
use crate::octonion::{associated_bilinear, associated_metric, build_omega, build_star_omega};
use crate::rational::{q, render, Rational};

/// `q(X, Y) = -tr(ρ(X) ρ(Y))` for a matrix model `ρ`.
pub fn trace_form(mats: &[QMatrix]) -> QMatrix {
    let n = mats.len();
    let mut out = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = -(&mats[i] * &mats[j]).trace();
            out[(i, j)] = v.clone();
            out[(j, i)] = v;
        }
    }
    out
}

/// `G/H` presented by `g`, a basis of `h`, an ad-invariant form `q` and a
/// complement `m` with `[h, m] ⊆ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSpace {
    g: LieAlgebra,
    h_basis: Vec<QVector>,
    m_basis: Vec<QVector>,
    q: QMatrix,
    symmetry: Symmetry,
    adapted: LieAlgebra,
}

impl HomogeneousSpace {
    /// Uses the `q`-orthogonal complement of `h` as `m`.
    pub fn new(g: LieAlgebra, h_basis: Vec<QVector>, q: QMatrix, symmetry: Symmetry) -> Result<Self> {
        let m_basis = orthogonal_complement(&q, &h_basis, g.dim());
        Self::with_complement(g, h_basis, m_basis, q, symmetry)
    }

    /// Uses an explicitly given complement, which must still be `q`-orthogonal to `h`.
    pub fn with_complement(
        g: LieAlgebra,
        h_basis: Vec<QVector>,
        m_basis: Vec<QVector>,
        q: QMatrix,
        symmetry: Symmetry,
    ) -> Result<Self> {
        let n = g.dim();
        if q.rows() != n || q.cols() != n || !q.is_symmetric() {
            return Err(Error::InvalidInput("q must be a symmetric form on g".into()));
        }
        for i in 0..n {
            let ad = g.ad(&unit_vector(n, i));
            if !(&(&ad.transpose() * &q) + &(&q * &ad)).is_zero() {
                return Err(Error::InvalidInput(format!("q is not ad-invariant along {}", g.labels()[i])));
            }
        }
        if h_basis.len() + m_basis.len() != n {
            return Err(Error::DimensionMismatch { left: h_basis.len() + m_basis.len(), right: n });
        }
        for x in &h_basis {
            for y in &m_basis {
                if !bilinear(&q, x, y).is_zero() {
                    return Err(Error::NotReductive("complement is not q-orthogonal to h".into()));
                }
            }
        }
        let mut basis = m_basis.clone();
        basis.extend(h_basis.iter().cloned());
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        let adapted =
            g.change_basis(&basis, labels).map_err(|_| Error::NotReductive("h and m do not span g".into()))?;
        check_symmetry_basis(&g, &h_basis, symmetry)?;
        let hs = HomogeneousSpace { g, h_basis, m_basis, q, symmetry, adapted };
        hs.check_reductive()?;
        Ok(hs)
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn h_basis(&self) -> &[QVector] {
        &self.h_basis
    }

    pub fn m_basis(&self) -> &[QVector] {
        &self.m_basis
    }

    pub fn q(&self) -> &QMatrix {
        &self.q
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn dim_m(&self) -> usize {
        self.m_basis.len()
    }

    pub fn dim_h(&self) -> usize {
        self.h_basis.len()
    }

    /// `g` in the basis `(m_1, …, m_k, h_1, …)`.
    pub fn adapted_algebra(&self) -> &LieAlgebra {
        &self.adapted
    }

    fn check_reductive(&self) -> Result<()> {
        let (k, n) = (self.dim_m(), self.g.dim());
        for a in k..n {
            for b in a + 1..n {
                if self.adapted.bracket_basis(a, b)[..k].iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotReductive("h is not a subalgebra".into()));
                }
            }
            for b in 0..k {
                if self.adapted.bracket_basis(a, b)[k..].iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotReductive(format!("[h_{}, m_{}] leaves m", a - k + 1, b + 1)));
                }
            }
        }
        Ok(())
    }

    /// `ad_X` in adapted coordinates for the `i`-th basis vector of `h`.
    fn adapted_ad_h(&self, i: usize) -> QMatrix {
        let n = self.g.dim();
        self.adapted.ad(&unit_vector(n, self.dim_m() + i))
    }

    /// Lifts a form on `m` (dimension `dim m`) to the full adapted coframe.
    pub fn lift(&self, a: &Form) -> Result<Form> {
        let n = self.g.dim();
        if a.dim() == n {
            return Ok(a.clone());
        }
        if a.dim() != self.dim_m() {
            return Err(Error::DimensionMismatch { left: a.dim(), right: self.dim_m() });
        }
        let map: Vec<usize> = (1..=a.dim()).collect();
        Ok(a.relabel(n, &map))
    }

    /// Restricts a horizontal form on the adapted coframe to `m`.
    fn project(&self, a: &Form) -> Form {
        let map: Vec<usize> = (1..=a.dim()).map(|i| i.min(self.dim_m())).collect();
        a.relabel(self.dim_m(), &map)
    }
}

/// The basis of `h` must have the ordering and normalization that `symmetry` declares.
fn check_symmetry_basis(g: &LieAlgebra, h: &[QVector], symmetry: Symmetry) -> Result<()> {
    if h.len() != symmetry.dim() {
        return Err(Error::InvalidInput(format!(
            "h has dimension {} but its declared shape has dimension {}",
            h.len(),
            symmetry.dim()
        )));
    }
    let commute = |a: &QVector, b: &QVector| g.bracket(a, b).iter().all(Zero::is_zero);
    if symmetry.tag.is_some() {
        return if commute(&h[0], &h[1]) {
            Ok(())
        } else {
            Err(Error::InvalidInput("the first two basis elements of h must commute".into()))
        };
    }
    let minus_two = q(-2);
    for k in 0..symmetry.su2 {
        let t = &h[3 * k..3 * k + 3];
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            if g.bracket(&t[a], &t[b]) != vec_scale(&t[c], &minus_two) {
                return Err(Error::InvalidInput(format!("su(2) factor {} is not in its σ-basis", k + 1)));
            }
        }
    }
    for z in &h[3 * symmetry.su2..] {
        if !h.iter().all(|x| commute(z, x)) {
            return Err(Error::InvalidInput("u(1) generators of h are not central in h".into()));
        }
    }
    Ok(())
}

fn orthogonal_complement(q: &QMatrix, h: &[QVector], n: usize) -> Vec<QVector> {
    if h.is_empty() {
        return (0..n).map(|i| unit_vector(n, i)).collect();
    }
    let rows: Vec<QVector> = h.iter().map(|x| q.transpose().mul_vec(x)).collect();
    QMatrix::from_rows(rows).nullspace()
}

/// Matrices of `ad(h_i)|_m` in the basis of `m`.
pub fn isotropy_representation(hs: &HomogeneousSpace) -> Result<Representation> {
    let k = hs.dim_m();
    let labels = (1..=hs.dim_h()).map(|i| format!("h{i}")).collect();
    let h_alg = hs.g.subalgebra(&hs.h_basis, labels)?;
    let mats = (0..hs.dim_h())
        .map(|i| {
            let ad = hs.adapted_ad_h(i);
            let mut m = QMatrix::zeros(k, k);
            for r in 0..k {
                for c in 0..k {
                    m[(r, c)] = ad[(r, c)].clone();
                }
            }
            m
        })
        .collect();
    Representation::new(h_alg, k, mats)
}

/// The differentials `de^i` of the left-invariant coframe dual to a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoframeDifferential {
    pub de: Vec<Form>,
}

impl CoframeDifferential {
    pub fn d(&self, a: &Form) -> Result<Form> {
        a.exterior_derivative(&self.de)
    }

    /// `d(de^i) = 0` for every `i`.
    pub fn squares_to_zero(&self) -> bool {
        self.de.iter().all(|f| self.d(f).is_ok_and(|x| x.is_zero()))
    }
}

/// `de^i = -Σ_{j<k} c^i_{jk} e^j∧e^k`, from `de^i(e_j, e_k) = -e^i([e_j, e_k])`.
pub fn maurer_cartan(g: &LieAlgebra) -> CoframeDifferential {
    let n = g.dim();
    let de = (0..n)
        .map(|i| {
            let mut f = Form::zero(n);
            for j in 0..n {
                for k in (j + 1)..n {
                    let c = g.constant(i, j, k);
                    if !c.is_zero() {
                        f = &f + &Form::blade(n, &[j + 1, k + 1], -c.clone());
                    }
                }
            }
            f
        })
        .collect();
    CoframeDifferential { de }
}

/// `L_X a` for left-invariant `a`, via `ad_X` acting on the coframe.
pub fn lie_derivative(g: &LieAlgebra, x: &[Rational], a: &Form) -> Result<Form> {
    a.derivation_action(&g.ad(x))
}

/// `L_X a = X⌟da + d(X⌟a)`.
pub fn lie_derivative_cartan(g: &LieAlgebra, x: &[Rational], a: &Form) -> Result<Form> {
    let mc = maurer_cartan(g);
    let first = mc.d(a)?.contract(x)?;
    let second = mc.d(&a.contract(x)?)?;
    first.try_add(&second)
}

/// Horizontal (no `h`-coframe index) and `h`-invariant. Accepts forms on
/// `m` or on the full adapted coframe.
pub fn is_basic(a: &Form, hs: &HomogeneousSpace) -> Result<bool> {
    let lifted = hs.lift(a)?;
    let n = hs.g.dim();
    let h_indices: Vec<usize> = (hs.dim_m() + 1..=n).collect();
    if !lifted.avoids(&h_indices) {
        return Ok(false);
    }
    for i in 0..hs.dim_h() {
        if !lifted.derivation_action(&hs.adapted_ad_h(i))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `d` of a basic form, as a form on `m`. The output is checked to be basic.
pub fn quotient_d(a: &Form, hs: &HomogeneousSpace) -> Result<Form> {
    if !is_basic(a, hs)? {
        return Err(Error::NotBasic(a.to_text()));
    }
    let da = maurer_cartan(&hs.adapted).d(&hs.lift(a)?)?;
    if !is_basic(&da, hs)? {
        return Err(Error::NotBasic(format!("d of a basic form is not basic: {}", da.to_text())));
    }
    Ok(hs.project(&da))
}

/// How the tangent space was identified with `Im(O)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identification {
    /// An explicitly supplied coframe.
    Witness,
    /// The isotropy torus conjugated into the fixed Cartan subalgebra.
    CartanNormalForm,
    /// A definite form among the invariant three-forms.
    InvariantForms,
}

/// Outcome of constructing an invariant G2-structure and testing `d∗ω = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub matched_label: String,
    #[serde(rename = "match")]
    pub match_details: IsotropyMatch,
    pub weights: String,
    pub splitting: Splitting,
    pub identification: Identification,
    /// Coframe matrix `Φ` with `dx^i ↦ Σ_j Φ_ij e^j`, when one was constructed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coframe: Option<Vec<Vec<String>>>,
    pub g2_form: Form,
    pub star_form: Form,
    /// `exact` when `∗ω` uses the associated metric itself; `positive_multiple`
    /// when the metric scale is irrational and only a positive multiple is exact.
    pub star_scale: String,
    pub d_g2_form: Form,
    pub d_star_form: Form,
    pub cosymplectic: bool,
}

fn render_matrix(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(render).collect()).collect()
}

/// Builds an `H`-invariant G2-structure on `G/H` and tests whether its four-form is closed.
///
/// With a `witness` coframe the standard forms are pulled back along it.
/// Otherwise a torus isotropy is conjugated into the fixed Cartan
/// subalgebra, and a non-abelian isotropy is handled by searching the
/// invariant three-forms for a definite one.
pub fn verify_case_g2_structure(hs: &HomogeneousSpace, witness: Option<&QMatrix>) -> Result<CaseReport> {
    if hs.dim_m() != 7 {
        return Err(Error::DimensionMismatch { left: hs.dim_m(), right: 7 });
    }
    let rho = isotropy_representation(hs)?;
    let splitting = isotropy_splitting(&rho, hs.symmetry())?;
    let matched = match_isotropy(&splitting)
        .ok_or_else(|| Error::NoInvariantStructure(format!("isotropy splitting {splitting} is not in the G2 table")))?;
    let sym = hs.symmetry();
    let (identification, coframe) = match witness {
        Some(w) => (Identification::Witness, Some(w.clone())),
        None if sym.tag.is_none() && sym.su2 == 0 => {
            (Identification::CartanNormalForm, Some(cartan_normal_form(&rho, &matched)?))
        }
        None => (Identification::InvariantForms, None),
    };
    let (omega, star, star_scale) = match &coframe {
        Some(phi) => {
            if phi.determinant()?.is_zero() {
                return Err(Error::SingularMatrix);
            }
            let omega = build_omega().change_coframe(phi)?;
            let star = build_star_omega().change_coframe(phi)?;
            // the same four-form from the pulled-back metric and orientation
            let metric = Metric::new(&phi.transpose() * phi)?;
            let orientation =
                if phi.determinant()?.is_positive() { Orientation::Positive } else { Orientation::Negative };
            let direct = hodge(&omega, &metric, orientation)?;
            if direct != star {
                return Err(Error::NotG2Form("pulled-back four-form disagrees with the Hodge dual".into()));
            }
            (omega, star, "exact")
        }
        None => {
            let omega = definite_invariant_form(&rho)?;
            match associated_metric(&omega) {
                Ok(geo) => {
                    let star = hodge(&omega, &geo.metric, geo.orientation)?;
                    (omega, star, "exact")
                }
                Err(Error::IrrationalRoot { .. }) => {
                    let b = associated_bilinear(&omega)?;
                    let b = if b.is_positive_definite() { b } else { -&b };
                    let star = hodge_up_to_scale(&omega, &Metric::new(b)?)?;
                    (omega, star, "positive_multiple")
                }
                Err(e) => return Err(e),
            }
        }
    };
    for (name, f) in [("ω", &omega), ("∗ω", &star)] {
        if !is_basic(f, hs)? {
            return Err(Error::NotBasic(format!("invariant {name} is not basic")));
        }
    }
    let d_omega = quotient_d(&omega, hs)?;
    let d_star = quotient_d(&star, hs)?;
    Ok(CaseReport {
        case: String::new(),
        matched_label: matched.label.clone(),
        match_details: matched,
        weights: splitting.to_string(),
        splitting,
        identification,
        coframe: coframe.as_ref().map(render_matrix),
        g2_form: omega,
        star_form: star,
        star_scale: star_scale.into(),
        d_g2_form: d_omega,
        cosymplectic: d_star.is_zero(),
        d_star_form: d_star,
    })
}

/// Coframe `Φ` with `Φ ρ(Y) Φ⁻¹` in the fixed Cartan subalgebra.
fn cartan_normal_form(rho: &Representation, matched: &IsotropyMatch) -> Result<QMatrix> {
    let n = rho.dim();
    let mats = rho.matrices();
    let (gens, targets): (Vec<QMatrix>, Vec<[i64; 2]>) = match mats.len() {
        0 => return Ok(QMatrix::identity(n)),
        1 => {
            let [a, b] = matched.parameters.expect("u(1) match has parameters");
            (mats.to_vec(), vec![[a], [b], [a + b]].into_iter().map(|r| [r[0], 0]).collect())
        }
        2 => {
            let t = matched.transform.expect("2u(1) match has a transform");
            let y: Vec<QMatrix> = (0..2).map(|i| &mats[0].scale(&q(t[i][0])) + &mats[1].scale(&q(t[i][1]))).collect();
            (y, vec![[1, 0], [0, 1], [1, 1]])
        }
        _ => return Err(Error::InvalidInput("torus of rank > 2 cannot lie in g2".into())),
    };
    let split = torus_splitting(&gens, n)?;
    let mut fixed = split.fixed.clone().into_iter();
    let mut planes = split.planes.clone();
    let mut columns: Vec<QVector> = vec![Vec::new(); 7];
    for (slot, target) in targets.iter().enumerate() {
        let want: Vec<i64> = target[..gens.len()].to_vec();
        let (u, v) = if want.iter().all(|x| *x == 0) {
            (fixed.next(), fixed.next())
        } else {
            match planes.iter().position(|p| p.weight == want) {
                Some(i) => {
                    let p = planes.remove(i);
                    (Some(p.u), Some(p.v))
                }
                None => (None, None),
            }
        };
        let (Some(u), Some(v)) = (u, v) else {
            return Err(Error::NoInvariantStructure("torus weights do not fit the Cartan normal form".into()));
        };
        columns[1 + 2 * slot] = u;
        columns[2 + 2 * slot] = v;
    }
    columns[0] = fixed.next().ok_or_else(|| Error::NoInvariantStructure("no fixed line".into()))?;
    let b = QMatrix::from_columns(&columns);
    let phi = b.inverse()?;
    // Φ ρ(Y_i) Φ⁻¹ must be the Cartan element with the target rates
    for (k, g) in gens.iter().enumerate() {
        let e = match (gens.len(), k) {
            (1, _) => cartan_g2_action(&q(targets[0][0]), &q(targets[1][0])),
            (_, 0) => cartan_g2_action(&q(1), &q(0)),
            _ => cartan_g2_action(&q(0), &q(1)),
        };
        if &(&phi * g) * &b != e {
            return Err(Error::NoInvariantStructure("normal form does not intertwine".into()));
        }
    }
    Ok(phi)
}

const SEARCH_SEED: u64 = 0x6932_666f_726d;
const SEARCH_ATTEMPTS: usize = 4000;

/// First definite three-form among the invariant ones: basis elements, then
/// seeded small-integer combinations.
fn definite_invariant_form(rho: &Representation) -> Result<Form> {
    let basis = invariant_forms(rho, 3);
    if basis.is_empty() {
        return Err(Error::NoInvariantStructure("no invariant three-forms".into()));
    }
    let definite =
        |f: &Form| associated_bilinear(f).is_ok_and(|b| b.is_positive_definite() || (-&b).is_positive_definite());
    if let Some(f) = basis.iter().find(|f| definite(f)) {
        return Ok(f.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    for _ in 0..SEARCH_ATTEMPTS {
        let f = basis.iter().fold(Form::zero(rho.dim()), |acc, b| &acc + &b.scale(&q(rng.gen_range(-3..=3))));
        if !f.is_zero() && definite(&f) {
            return Ok(f);
        }
    }
    Err(Error::NoInvariantStructure(format!("no definite form found among {} invariant three-forms", basis.len())))
}

/// Generators of the formal differential algebra in the nearly-Kähler product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum NkGenerator {
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "theta_re")]
    ThetaRe,
    #[serde(rename = "theta_im")]
    ThetaIm,
    #[serde(rename = "dt")]
    Dt,
}

impl NkGenerator {
    fn degree(self) -> usize {
        match self {
            NkGenerator::Alpha => 2,
            NkGenerator::ThetaRe | NkGenerator::ThetaIm => 3,
            NkGenerator::Dt => 1,
        }
    }
}

type Monomial = Vec<NkGenerator>;
type Polynomial = Vec<(Rational, Monomial)>;

/// Pointwise model forms on `R^7`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NkModel {
    pub alpha: Form,
    pub theta_re: Form,
    pub theta_im: Form,
    pub dt: Form,
}

impl NkModel {
    pub fn standard() -> Self {
        let n = 7;
        let g = |i| Form::generator(n, i);
        // (dx1 + i dx2)∧(dx3 + i dx4)∧(dx5 + i dx6), tracked as (re, im)
        let mut re = Form::scalar(n, Rational::one());
        let mut im = Form::zero(n);
        for (a, b) in [(1, 2), (3, 4), (5, 6)] {
            let (nre, nim) = (
                re.wedge(&g(a)).unwrap().try_sub(&im.wedge(&g(b)).unwrap()).unwrap(),
                re.wedge(&g(b)).unwrap().try_add(&im.wedge(&g(a)).unwrap()).unwrap(),
            );
            re = nre;
            im = nim;
        }
        NkModel { alpha: Form::parse(n, "e12 + e34 + e56").expect("static form"), theta_re: re, theta_im: im, dt: g(7) }
    }

    fn value(&self, gen: NkGenerator) -> &Form {
        match gen {
            NkGenerator::Alpha => &self.alpha,
            NkGenerator::ThetaRe => &self.theta_re,
            NkGenerator::ThetaIm => &self.theta_im,
            NkGenerator::Dt => &self.dt,
        }
    }

    fn evaluate(&self, p: &Polynomial) -> Form {
        let mut out = Form::zero(7);
        for (c, m) in p {
            let f = m.iter().fold(Form::scalar(7, Rational::one()), |acc, g| acc.wedge(self.value(*g)).expect("dim 7"));
            out = &out + &f.scale(c);
        }
        out
    }
}

fn nk_differential(gen: NkGenerator, lambda: &Rational) -> Polynomial {
    use NkGenerator::*;
    match gen {
        Alpha => vec![(q(3) * lambda, vec![ThetaRe])],
        ThetaIm => vec![(q(-2) * lambda, vec![Alpha, Alpha])],
        ThetaRe | Dt => Vec::new(),
    }
}

fn formal_d(p: &Polynomial, lambda: &Rational) -> Polynomial {
    let mut out = Vec::new();
    for (c, m) in p {
        let mut degree = 0;
        for (k, g) in m.iter().enumerate() {
            let sign = if degree % 2 == 0 { q(1) } else { q(-1) };
            for (dc, dm) in nk_differential(*g, lambda) {
                let mut mono = m[..k].to_vec();
                mono.extend(dm);
                mono.extend_from_slice(&m[k + 1..]);
                out.push((c * &dc * &sign, mono));
            }
            degree += g.degree();
        }
    }
    out
}

fn render_polynomial(p: &Polynomial) -> Vec<(String, Vec<NkGenerator>)> {
    p.iter().filter(|(c, _)| !c.is_zero()).map(|(c, m)| (render(c), m.clone())).collect()
}

/// Outcome of the nearly-Kähler × circle check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NkReport {
    pub lambda: String,
    pub omega: Form,
    pub star_omega: Form,
    /// `∗ω` written in the generators.
    pub star_omega_expression: Vec<(String, Vec<NkGenerator>)>,
    /// `d∗ω` expanded with the structure equations, before evaluation.
    pub d_star_expression: Vec<(String, Vec<NkGenerator>)>,
    pub alpha_wedge_theta_re: Form,
    pub d_theta_re_forced_zero: bool,
    pub d_star_omega: Form,
    pub cosymplectic: bool,
}

/// `ω = α∧dt + θ^Im` on `N⁶ × S¹` with `dα = 3λθ^Re`, `dθ^Im = -2λα∧α`.
pub fn nearly_kaehler_product_check(lambda: &Rational) -> Result<NkReport> {
    use NkGenerator::*;
    if lambda.is_zero() {
        return Err(Error::InvalidInput("λ must be nonzero".into()));
    }
    let model = NkModel::standard();
    let omega_poly: Polynomial = vec![(q(1), vec![Alpha, Dt]), (q(1), vec![ThetaIm])];
    let omega = model.evaluate(&omega_poly);
    let star = hodge(&omega, &Metric::euclidean(7), Orientation::Positive)?;

    // ∗ω in the span of α∧α, θ^Re∧dt, θ^Im∧dt
    let candidates: Vec<Monomial> = vec![vec![Alpha, Alpha], vec![ThetaRe, Dt], vec![ThetaIm, Dt]];
    let values: Vec<Form> = candidates.iter().map(|m| model.evaluate(&vec![(q(1), m.clone())])).collect();
    let blades: Vec<_> = crate::exterior::blades_of_grade(7, 4);
    let columns: Vec<QVector> = values.iter().map(|f| blades.iter().map(|b| f.coefficient_of(*b)).collect()).collect();
    let rhs: QVector = blades.iter().map(|b| star.coefficient_of(*b)).collect();
    let coeffs = QMatrix::from_columns(&columns)
        .solve(&rhs)
        .ok_or_else(|| Error::InvalidInput("∗ω is not in the span of the model generators".into()))?;
    let star_poly: Polynomial = coeffs.into_iter().zip(candidates).collect();

    let d_theta_re_forced_zero = formal_d(&formal_d(&vec![(q(1), vec![Alpha])], lambda), lambda).is_empty();
    let d_star_poly = formal_d(&star_poly, lambda);
    let d_star = model.evaluate(&d_star_poly);
    Ok(NkReport {
        lambda: render(lambda),
        omega,
        star_omega: star,
        star_omega_expression: render_polynomial(&star_poly),
        d_star_expression: render_polynomial(&d_star_poly),
        alpha_wedge_theta_re: model.alpha.wedge(&model.theta_re)?,
        d_theta_re_forced_zero,
        cosymplectic: d_star.is_zero(),
        d_star_omega: d_star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    /// `2su(2) ⊕ 2u(1)` in the basis `e1..e8` with `h = span(e8)`.
    fn su2_pair_over_circle() -> HomogeneousSpace {
        let g = LieAlgebra::sum_of(&[
            LieAlgebra::su2().with_prefix("A"),
            LieAlgebra::su2().with_prefix("B"),
            LieAlgebra::u1(2),
        ]);
        let e = |s: &str| g.parse_element(s).unwrap();
        let basis =
            vec![e("z1"), e("z2"), e("A.s1 - B.s1"), e("A.s2"), e("A.s3"), e("B.s2"), e("B.s3"), e("A.s1 + B.s1")];
        let labels = (1..=8).map(|i| format!("e{i}")).collect();
        let ge = g.change_basis(&basis, labels).unwrap();
        let mut qm = QMatrix::identity(8);
        qm[(2, 2)] = q(2);
        qm[(7, 7)] = q(2);
        let m: Vec<QVector> = (0..7).map(|i| unit_vector(8, i)).collect();
        HomogeneousSpace::with_complement(ge, vec![unit_vector(8, 7)], m, qm, Symmetry::torus(1)).unwrap()
    }

    fn f(s: &str) -> Form {
        Form::parse(8, s).unwrap()
    }

    #[test]
    fn maurer_cartan_equations() {
        let hs = su2_pair_over_circle();
        let mc = maurer_cartan(hs.adapted_algebra());
        let expected =
            ["0", "0", "e45 - e67", "-2*e35 + 2*e58", "2*e34 - 2*e48", "2*e37 + 2*e78", "-2*e36 - 2*e68", "e45 + e67"];
        for (i, want) in expected.iter().enumerate() {
            let want = if *want == "0" { Form::zero(8) } else { f(want) };
            assert_eq!(mc.de[i], want, "de^{}", i + 1);
        }
        assert!(mc.squares_to_zero());
    }

    #[test]
    fn su2_coframe() {
        let mc = maurer_cartan(&LieAlgebra::su2());
        assert_eq!(mc.de[0], Form::parse(3, "2*e23").unwrap());
        assert!(maurer_cartan(&LieAlgebra::u1(4)).de.iter().all(Form::is_zero));
    }

    #[test]
    fn lie_derivative_agrees_with_cartan_formula() {
        let hs = su2_pair_over_circle();
        let g = hs.adapted_algebra();
        let x = vec![q(0), q(1), q(2), q(-1), q(0), qf(1, 2), q(3), q(1)];
        for a in ["e45", "e1 + e37", "e4567 - 2*e128", "e3"] {
            assert_eq!(lie_derivative(g, &x, &f(a)).unwrap(), lie_derivative_cartan(g, &x, &f(a)).unwrap(), "{a}");
        }
    }

    #[test]
    fn basic_forms() {
        let hs = su2_pair_over_circle();
        assert!(is_basic(&f("e45 + e67"), &hs).unwrap());
        assert!(!is_basic(&f("e18"), &hs).unwrap());
        // e8 rotates the (e4,e5) plane, so e45 is invariant but e46 is not
        assert!(is_basic(&f("e45"), &hs).unwrap());
        assert!(!is_basic(&f("e46"), &hs).unwrap());
        assert!(!is_basic(&f("e4"), &hs).unwrap());
    }

    #[test]
    fn isotropy_rates() {
        let hs = su2_pair_over_circle();
        let rho = isotropy_representation(&hs).unwrap();
        let s = isotropy_splitting(&rho, Symmetry::torus(1)).unwrap();
        assert_eq!(s.to_string(), "2V(2)^C + 3V(0)^R");
    }

    #[test]
    fn su2_pair_star_omega_is_closed() {
        let hs = su2_pair_over_circle();
        let coframe = QMatrix::from_i64_rows(&[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 1],
            &[0, 0, 0, -1, 0, -1, 0],
            &[0, 0, 0, 0, 1, 0, -1],
            &[0, 0, 0, -1, 0, 1, 0],
        ]);
        let r = verify_case_g2_structure(&hs, Some(&coframe)).unwrap();
        let golden = Form::parse(7, "-2*e1245 + 2*e1267 - 2*e1346 - 2*e1357 - 2*e2347 + 2*e2356 + 4*e4567").unwrap();
        assert_eq!(r.star_form, golden);
        assert!(r.cosymplectic);
        assert!(!r.d_g2_form.is_zero());
        assert_eq!(r.matched_label, "u(1)");
    }

    #[test]
    fn torus_is_flat() {
        let g = LieAlgebra::u1(7);
        let hs = HomogeneousSpace::new(g, Vec::new(), QMatrix::identity(7), Symmetry::TRIVIAL).unwrap();
        let r = verify_case_g2_structure(&hs, None).unwrap();
        assert_eq!(r.matched_label, "{e}");
        assert_eq!(r.star_form, build_star_omega());
        assert!(r.cosymplectic);
        assert!(r.d_g2_form.is_zero());
    }

    #[test]
    fn nearly_kaehler_product() {
        for l in [q(1), q(-1), qf(3, 2)] {
            let r = nearly_kaehler_product_check(&l).unwrap();
            assert!(r.cosymplectic, "λ = {l}");
            assert!(r.alpha_wedge_theta_re.is_zero());
            assert!(r.d_theta_re_forced_zero);
        }
        assert!(nearly_kaehler_product_check(&q(0)).is_err());
    }

    #[test]
    fn nk_model_forms() {
        let m = NkModel::standard();
        assert_eq!(m.theta_re, Form::parse(7, "e135 - e146 - e236 - e245").unwrap());
        assert_eq!(m.theta_im, Form::parse(7, "e136 + e145 + e235 - e246").unwrap());
    }
}
