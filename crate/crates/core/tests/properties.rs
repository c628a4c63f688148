use proptest::prelude::*;

use g2hom::catalog::{all_cases, aloff_wallach_check, qklm_check, qklm_oracle};
use g2hom::exterior::{blades_of_grade, hodge, Form, Metric, Orientation};
use g2hom::homspace::{isotropy_representation, maurer_cartan};
use g2hom::liealg::{
    cartan_g2_action, invariant_forms, match_isotropy, spin_representation, torus_modules, LieAlgebra,
};
use g2hom::linalg::{bilinear, QMatrix};
use g2hom::rational::{parse_rational, q, qf, render};
use g2hom::Rational;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

/// A homogeneous `k`-form on `R^n` with up to `max_terms` terms.
fn form(n: usize, k: usize, max_terms: usize) -> impl Strategy<Value = Form> {
    let blades = blades_of_grade(n, k);
    let count = blades.len();
    prop::collection::vec((0..count.max(1), small_rational()), 0..=max_terms).prop_map(move |terms| {
        Form::from_terms(n, terms.into_iter().filter(|_| count > 0).map(|(i, c)| (blades[i], c)))
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), n)
}

/// Unit upper triangular `M`, so `MᵀM` is a positive definite metric of determinant 1.
fn unimodular_metric(n: usize) -> impl Strategy<Value = Metric> {
    prop::collection::vec(-2i64..=2, n * (n - 1) / 2).prop_map(move |off| {
        let mut m = QMatrix::identity(n);
        let mut it = off.into_iter();
        for i in 0..n {
            for j in (i + 1)..n {
                m[(i, j)] = q(it.next().unwrap());
            }
        }
        Metric::new(&m.transpose() * &m).unwrap()
    })
}

fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
    // lower times upper unit triangular, with a rational diagonal in between
    (
        prop::collection::vec(-2i64..=2, n * n),
        prop::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)], n),
    )
        .prop_map(move |(entries, diag)| {
            let mut lower = QMatrix::identity(n);
            let mut upper = QMatrix::identity(n);
            let mut d = QMatrix::identity(n);
            for i in 0..n {
                d[(i, i)] = qf(diag[i], 1 + (i as i64 % 2));
                for j in 0..n {
                    let v = q(entries[i * n + j]);
                    if i > j {
                        lower[(i, j)] = v;
                    } else if i < j {
                        upper[(i, j)] = v;
                    }
                }
            }
            &(&lower * &d) * &upper
        })
}

fn sign(p: usize) -> Rational {
    if p.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_graded_commutative(
        (p, r, a, b) in (0usize..=3, 0usize..=3)
            .prop_flat_map(|(p, r)| (Just(p), Just(r), form(6, p, 4), form(6, r, 4)))
    ) {
        let ab = a.wedge(&b).unwrap();
        let ba = b.wedge(&a).unwrap();
        prop_assert_eq!(ab, ba.scale(&sign(p * r)));
    }

    #[test]
    fn wedge_is_associative(a in form(7, 1, 3), b in form(7, 2, 4), c in form(7, 2, 4)) {
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn contraction_squares_to_zero(a in form(7, 3, 6), v in vector(7)) {
        let once = a.contract(&v).unwrap();
        prop_assert!(once.contract(&v).unwrap().is_zero());
    }

    #[test]
    fn contraction_is_an_antiderivation(a in form(6, 2, 4), b in form(6, 2, 4), v in vector(6)) {
        let lhs = a.wedge(&b).unwrap().contract(&v).unwrap();
        let rhs = a.contract(&v).unwrap().wedge(&b).unwrap().try_add(&a.wedge(&b.contract(&v).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_twice_is_a_sign(
        (k, a) in (0usize..=7).prop_flat_map(|k| (Just(k), form(7, k, 5))),
        g in unimodular_metric(7),
    ) {
        let twice = hodge(&hodge(&a, &g, Orientation::Positive).unwrap(), &g, Orientation::Positive).unwrap();
        prop_assert_eq!(twice, a.scale(&sign(k * (7 - k))));
    }

    #[test]
    fn hodge_twice_in_dimension_four(
        (k, a) in (0usize..=4).prop_flat_map(|k| (Just(k), form(4, k, 4))),
        g in unimodular_metric(4),
    ) {
        let twice = hodge(&hodge(&a, &g, Orientation::Negative).unwrap(), &g, Orientation::Negative).unwrap();
        prop_assert_eq!(twice, a.scale(&sign(k * (4 - k))));
    }

    #[test]
    fn coframe_change_round_trips(a in form(5, 2, 5), m in invertible(5)) {
        let inv = m.inverse().unwrap();
        let back = a.change_coframe(&m).unwrap().change_coframe(&inv).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn coframe_change_respects_wedge(a in form(5, 1, 3), b in form(5, 2, 4), m in invertible(5)) {
        let lhs = a.wedge(&b).unwrap().change_coframe(&m).unwrap();
        let rhs = a.change_coframe(&m).unwrap().wedge(&b.change_coframe(&m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_is_an_antiderivation(a in form(8, 1, 4), b in form(8, 2, 5)) {
        let g = LieAlgebra::sum_of(&[
            LieAlgebra::su2().with_prefix("A"),
            LieAlgebra::su2().with_prefix("B"),
            LieAlgebra::u1(2),
        ]);
        let mc = maurer_cartan(&g);
        let lhs = mc.d(&a.wedge(&b).unwrap()).unwrap();
        let rhs = mc.d(&a).unwrap().wedge(&b).unwrap().try_sub(&a.wedge(&mc.d(&b).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(mc.d(&mc.d(&b).unwrap()).unwrap().is_zero());
    }

    /// Changing the torus basis by an element of GL(2, Z) does not change the match.
    #[test]
    fn cartan_match_is_basis_independent(ops in prop::collection::vec((0u8..4, -3i64..=3), 0..6)) {
        let mut t = [[q(1), q(0)], [q(0), q(1)]];
        for (op, c) in ops {
            match op {
                0 => { let r = t[0].clone(); t[1] = [&t[1][0] + &r[0] * q(c), &t[1][1] + &r[1] * q(c)]; }
                1 => { let r = t[1].clone(); t[0] = [&t[0][0] + &r[0] * q(c), &t[0][1] + &r[1] * q(c)]; }
                2 => t.swap(0, 1),
                _ => t[0] = [-t[0][0].clone(), -t[0][1].clone()],
            }
        }
        let mats = [cartan_g2_action(&t[0][0], &t[0][1]), cartan_g2_action(&t[1][0], &t[1][1])];
        let s = torus_modules(&mats, 7).unwrap();
        prop_assert_eq!(s.real_dim(), 7);
        let m = match_isotropy(&s);
        prop_assert_eq!(m.map(|m| m.label), Some("2u(1)".to_string()));
    }

    #[test]
    fn circle_weights_fill_the_tangent_space(k in -6i64..=6, l in -6i64..=6) {
        prop_assume!((k, l) != (0, 0));
        let r = aloff_wallach_check(k, l).unwrap();
        prop_assert_eq!(r.splitting.real_dim(), 7);
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn invariant_forms_are_annihilated(l in 1u32..=3, degree in 2usize..=3, x in vector(3), cs in vector(4)) {
        let rho = spin_representation(l);
        let forms = invariant_forms(&rho, degree);
        let mut combo = Form::zero(rho.dim());
        for (f, c) in forms.iter().zip(&cs) {
            combo = combo.try_add(&f.scale(c)).unwrap();
        }
        prop_assert!(combo.derivation_action(&rho.of(&x)).unwrap().is_zero());
    }

    #[test]
    fn rationals_render_and_parse(r in small_rational()) {
        prop_assert_eq!(parse_rational(&render(&r)).unwrap(), r);
    }
}

#[test]
fn isotropy_is_skew_for_the_invariant_product() {
    for rec in all_cases().into_iter().filter(|r| !r.metadata_only) {
        let hs = rec.space().unwrap();
        let m = hs.m_basis();
        let k = m.len();
        let mut qm = QMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                qm[(i, j)] = bilinear(hs.q(), &m[i], &m[j]);
            }
        }
        let rho = isotropy_representation(&hs).unwrap();
        for a in rho.matrices() {
            let skew = &(&a.transpose() * &qm) + &(&qm * a);
            assert!(skew.is_zero(), "{}", rec.name);
        }
    }
}

#[test]
fn qklm_agrees_with_oracle() {
    for k in 1..=5 {
        for l in 0..=k {
            for m in 0..=l {
                let proportional = k == l && l == m;
                assert_eq!(qklm_check(k, l, m).unwrap(), qklm_oracle(k, l, m), "({k},{l},{m})");
                assert_eq!(qklm_oracle(k, l, m), proportional, "({k},{l},{m})");
            }
        }
    }
}
