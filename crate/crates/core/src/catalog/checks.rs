//! Parameter checks for the families `SU(3)/U(1)_{k,l}` and `SU(2)³/U(1)²_{k,l,m}`.

use serde::Serialize;

use super::models;
use crate::error::{Error, Result};
use crate::homspace::{isotropy_representation, HomogeneousSpace};
use crate::liealg::{isotropy_splitting, match_isotropy, IsotropyMatch, Kind, LieAlgebra, Splitting, Symmetry};
use crate::linalg::QVector;

fn isotropy_of(g: LieAlgebra, h: &[String], central: &[usize], symmetry: Symmetry) -> Result<Splitting> {
    let qm = models::invariant_inner_product(&g, central);
    let basis: Vec<QVector> = h.iter().map(|s| g.parse_element(s)).collect::<Result<_>>()?;
    let hs = HomogeneousSpace::new(g, basis, qm, symmetry)?;
    isotropy_splitting(&isotropy_representation(&hs)?, symmetry)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AloffWallachReport {
    pub k: i64,
    pub l: i64,
    pub generator: String,
    /// Rotation rates of the circle on the three root planes, largest first.
    pub rates: [i64; 3],
    /// `|k - l|, |2k + l|, |k + 2l|`, largest first.
    pub predicted_rates: [i64; 3],
    pub splitting: Splitting,
    pub display: String,
    #[serde(rename = "match")]
    pub matched: Option<IsotropyMatch>,
    pub passed: bool,
}

/// Isotropy of `SU(3)/U(1)_{k,l}` through the homogeneous-space pipeline,
/// matched against the `u(1)` family.
pub fn aloff_wallach_check(k: i64, l: i64) -> Result<AloffWallachReport> {
    if k == 0 && l == 0 {
        return Err(Error::InvalidInput("(k, l) = (0, 0) does not define a circle".into()));
    }
    let generator = models::aloff_wallach_generator(k, l);
    let splitting = isotropy_of(models::su3(), std::slice::from_ref(&generator), &[], Symmetry::torus(1))?;
    let mut rates = [0i64; 3];
    let planes: Vec<i64> = splitting
        .modules
        .iter()
        .filter(|m| m.kind == Kind::Complex)
        .flat_map(|m| std::iter::repeat_n(m.weight[0].abs(), m.multiplicity))
        .collect();
    for (slot, r) in rates.iter_mut().zip(&planes) {
        *slot = *r;
    }
    rates.sort_unstable_by(|a, b| b.cmp(a));
    let mut predicted = [(k - l).abs(), (2 * k + l).abs(), (k + 2 * l).abs()];
    predicted.sort_unstable_by(|a, b| b.cmp(a));
    let matched = match_isotropy(&splitting);
    let passed = planes.len() <= 3 && rates == predicted && matched.as_ref().is_some_and(|m| m.label == "u(1)");
    Ok(AloffWallachReport {
        k,
        l,
        generator,
        rates,
        predicted_rates: predicted,
        display: splitting.to_string(),
        splitting,
        matched,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QklmReport {
    pub k: i64,
    pub l: i64,
    pub m: i64,
    /// Integer basis of the plane `kx + ly + mz = 0`.
    pub plane_basis: [[i64; 3]; 2],
    pub splitting: Splitting,
    pub display: String,
    #[serde(rename = "match")]
    pub matched: Option<IsotropyMatch>,
    pub admits: bool,
    /// Verdict of the direct comparison over signed permutations.
    pub oracle: bool,
}

fn check_order(k: i64, l: i64, m: i64) -> Result<()> {
    if !(k >= l && l >= m && m >= 0) || k == 0 {
        return Err(Error::InvalidInput(format!("expected k ≥ l ≥ m ≥ 0, not all zero; got ({k}, {l}, {m})")));
    }
    Ok(())
}

/// Runs the isotropy of `SU(2)³/U(1)²_{k,l,m}` through the pipeline and the table.
pub fn qklm_report(k: i64, l: i64, m: i64) -> Result<QklmReport> {
    check_order(k, l, m)?;
    let g = LieAlgebra::sum_of(&[
        LieAlgebra::su2().with_prefix("A"),
        LieAlgebra::su2().with_prefix("B"),
        LieAlgebra::su2().with_prefix("C"),
    ]);
    let h = models::qklm_torus(k, l, m)?;
    let splitting = isotropy_of(g, &h, &[], Symmetry::torus(2))?;
    let matched = match_isotropy(&splitting);
    Ok(QklmReport {
        k,
        l,
        m,
        plane_basis: models::integer_plane_basis([k, l, m])?,
        display: splitting.to_string(),
        splitting,
        admits: matched.as_ref().is_some_and(|x| x.label == "2u(1)"),
        matched,
        oracle: qklm_oracle(k, l, m),
    })
}

/// True iff the torus `2u(1)_{k,l,m}` acts on the tangent space like the Cartan torus of `g2`.
pub fn qklm_check(k: i64, l: i64, m: i64) -> Result<bool> {
    Ok(qklm_report(k, l, m)?.admits)
}

/// Whether `{kx + ly + mz = 0}` is one of the planes `ε3·v_σ3 = ε1·v_σ1 + ε2·v_σ2`,
/// by comparing normal vectors over all 48 signed permutations.
pub fn qklm_oracle(k: i64, l: i64, m: i64) -> bool {
    let n = [k, l, m];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for p in perms {
        for signs in 0..8u32 {
            let e = |b: u32| if signs >> b & 1 == 1 { -1 } else { 1 };
            let mut normal = [0i64; 3];
            normal[p[0]] = -e(0);
            normal[p[1]] = -e(1);
            normal[p[2]] = e(2);
            let cross = [
                n[1] * normal[2] - n[2] * normal[1],
                n[2] * normal[0] - n[0] * normal[2],
                n[0] * normal[1] - n[1] * normal[0],
            ];
            if cross == [0, 0, 0] {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aloff_wallach_examples() {
        let r = aloff_wallach_check(1, 1).unwrap();
        assert_eq!(r.rates, [3, 3, 0]);
        assert!(r.passed);
        assert_eq!(r.matched.unwrap().parameters, Some([3, 0]));
        let r = aloff_wallach_check(1, 0).unwrap();
        assert_eq!(r.rates, [2, 1, 1]);
        assert_eq!(r.matched.unwrap().parameters, Some([1, 1]));
        let r = aloff_wallach_check(1, -1).unwrap();
        assert_eq!(r.rates, [2, 1, 1]);
        assert!(r.passed);
        assert!(aloff_wallach_check(0, 0).is_err());
    }

    #[test]
    fn qklm_examples() {
        assert!(qklm_check(1, 1, 1).unwrap());
        assert!(!qklm_check(2, 1, 1).unwrap());
        assert!(!qklm_check(1, 1, 0).unwrap());
        assert!(qklm_check(2, 2, 2).unwrap());
        assert!(qklm_check(1, 2, 3).is_err());
        assert!(qklm_check(0, 0, 0).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert!(qklm_oracle(1, 1, 1));
        assert!(qklm_oracle(3, 3, 3));
        assert!(!qklm_oracle(2, 1, 1));
        assert!(!qklm_oracle(1, 0, 0));
    }
}
