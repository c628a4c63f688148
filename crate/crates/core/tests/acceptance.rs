//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines show up in `cargo test` output; exits nonzero if any criterion fails.

use g2hom::catalog::filters::{center_bound_filter, enumerate_candidates};
use g2hom::catalog::{all_cases, find_case, qklm_check, qklm_oracle, verify_all, verify_record};
use g2hom::exterior::{hodge, Form, Metric, Orientation};
use g2hom::homspace::{maurer_cartan, nearly_kaehler_product_check};
use g2hom::liealg::{
    cartan_g2_action, g2_representation, g2_stabilizer, invariant_forms, match_isotropy, spin_representation,
    weight_decomposition, Kind, WeightModule,
};
use g2hom::octonion::{
    associated_bilinear, associated_metric, build_omega, check_normed_division, is_definite_g2_form,
    multiplication_from_omega, Octonion,
};
use g2hom::rational::{q, qf};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn form(n: usize, s: &str) -> Form {
    Form::parse(n, s).expect("well-formed form")
}

fn octonions() -> Check {
    let table = multiplication_from_omega(&build_omega()).map_err(|e| e.to_string())?;
    let report = check_normed_division(&table);
    ensure(report.passed(), format!("normed division fails: {:?}", report.witness))?;
    ensure(report.details["basis_pairs"] == 64, "expected 64 basis pairs")?;
    ensure(report.details["vector_pairs"] == 100, "expected 100 vector pairs")?;
    ensure(*table.product_of_basis(1, 2) == Octonion::basis(3), "x1*x2 != x3")?;
    ensure(*table.product_of_basis(2, 4) == Octonion::basis(6), "x2*x4 != x6")?;
    Ok("64 basis + 100 vector pairs exact; x1x2 = x3, x2x4 = x6".into())
}

fn hodge_golden() -> Check {
    let star = hodge(&build_omega(), &Metric::euclidean(7), Orientation::Positive).map_err(|e| e.to_string())?;
    let golden = form(7, "-e1247 + e1256 + e1346 + e1357 - e2345 + e2367 + e4567");
    ensure(star == golden, format!("got {}", star.to_text()))?;
    ensure(star.len() == 7, "expected 7 terms")?;
    Ok(star.to_text())
}

fn associated_geometry() -> Check {
    let geom = associated_metric(&build_omega()).map_err(|e| e.to_string())?;
    ensure(geom.metric.is_identity(), "metric is not the identity")?;
    ensure(geom.volume == Form::volume(7), format!("volume {}", geom.volume.to_text()))?;
    Ok("metric = I, vol = e1234567".into())
}

fn structure_equations() -> Check {
    let rec = find_case("su2su2-u1-t2").ok_or("missing case")?;
    let hs = rec.space().map_err(|e| e.to_string())?;
    let mc = maurer_cartan(hs.adapted_algebra());
    let expected =
        ["0", "0", "e45 - e67", "-2*e35 + 2*e58", "2*e34 - 2*e48", "2*e37 + 2*e78", "-2*e36 - 2*e68", "e45 + e67"];
    ensure(mc.de.len() == 8, "expected 8 equations")?;
    for (i, want) in expected.iter().enumerate() {
        let want = if *want == "0" { Form::zero(8) } else { form(8, want) };
        ensure(mc.de[i] == want, format!("de{} = {}", i + 1, mc.de[i].to_text()))?;
    }
    Ok(format!("de4 = {}", mc.de[3].to_text()))
}

fn cosymplectic_headline() -> Check {
    let rec = find_case("su2su2-u1-t2").ok_or("missing case")?;
    let out = verify_record(&rec);
    let report = out.report.as_ref().ok_or_else(|| format!("no report: {:?}", out.error))?;
    let golden = form(7, "-2*e1245 + 2*e1267 - 2*e1346 - 2*e1357 - 2*e2347 + 2*e2356 + 4*e4567");
    ensure(report.star_form == golden, format!("*omega = {}", report.star_form.to_text()))?;
    ensure(report.d_star_form.is_zero(), format!("d*omega = {}", report.d_star_form.to_text()))?;
    ensure(out.passed, "case did not pass")?;
    Ok("*omega golden, d*omega = 0".into())
}

fn nearly_kaehler() -> Check {
    for lambda in [q(1), q(-1), qf(3, 2)] {
        let r = nearly_kaehler_product_check(&lambda).map_err(|e| e.to_string())?;
        ensure(r.d_star_omega.is_zero() && r.cosymplectic, format!("lambda = {lambda}"))?;
    }
    Ok("d*omega = 0 for lambda in {1, -1, 3/2}".into())
}

fn g2_consistency() -> Check {
    let torus = [cartan_g2_action(&q(1), &q(0)), cartan_g2_action(&q(0), &q(1))];
    let modules = weight_decomposition(&torus).map_err(|e| e.to_string())?;
    let expected = vec![
        WeightModule::complex(&[1, 0]),
        WeightModule::complex(&[0, 1]),
        WeightModule::complex(&[1, 1]),
        WeightModule::new(vec![0, 0], Kind::Real, 1),
    ];
    let mut got = modules.clone();
    let mut want = expected;
    got.sort_by(|a, b| a.weight.cmp(&b.weight));
    want.sort_by(|a, b| a.weight.cmp(&b.weight));
    ensure(got == want, format!("weights {modules:?}"))?;
    let forms = invariant_forms(&g2_representation(), 3);
    ensure(forms.len() == 1, format!("{} invariant 3-forms", forms.len()))?;
    let stab = g2_stabilizer(&build_omega()).len();
    ensure(stab == 14, format!("stabilizer has dimension {stab}"))?;
    Ok("torus weights (1,0),(0,1),(1,1),(0,0); 1 invariant 3-form; dim stabilizer 14".into())
}

fn spin_three_certificate() -> Check {
    let forms = invariant_forms(&spin_representation(3), 3);
    for f in &forms {
        if !is_definite_g2_form(f).map_err(|e| e.to_string())? {
            continue;
        }
        // g = B / s with s⁹ = det B, so the metric is positive exactly when B is definite
        let b = associated_bilinear(f).map_err(|e| e.to_string())?;
        let positive = b.is_positive_definite() || (-&b).is_positive_definite();
        ensure(positive, "bilinear form not definite")?;
        return Ok(format!("{} invariant 3-forms, one definite: {}", forms.len(), f.to_text()));
    }
    Err(format!("none of {} invariant forms is definite", forms.len()))
}

fn filters() -> Check {
    let survivors: Vec<String> = enumerate_candidates(0)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|c| c.survives())
        .map(|c| c.g_name)
        .collect();
    let mut sorted = survivors.clone();
    sorted.sort();
    ensure(sorted == ["2su(2)+u(1)", "7u(1)", "su(2)+4u(1)"], format!("survivors {survivors:?}"))?;
    ensure(!center_bound_filter(1, 5).map_err(|e| e.to_string())?, "su(2)+5u(1) not rejected")?;
    let mut hits = Vec::new();
    for k in 1..=5 {
        for l in 0..=k {
            for m in 0..=l {
                let got = qklm_check(k, l, m).map_err(|e| e.to_string())?;
                ensure(got == qklm_oracle(k, l, m), format!("oracle disagrees at ({k},{l},{m})"))?;
                ensure(got == (k == l && l == m), format!("wrong verdict at ({k},{l},{m})"))?;
                if got {
                    hits.push(k);
                }
            }
        }
    }
    Ok(format!("h = 0 survivors {survivors:?}; qklm true exactly at (k,k,k), k = {hits:?}"))
}

fn catalog_sweep() -> Check {
    let outcomes = verify_all();
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.case.as_str()).collect();
    ensure(failed.is_empty(), format!("failed cases {failed:?}"))?;
    let mut algebras = 0;
    for rec in all_cases() {
        if rec.metadata_only {
            let m = match_isotropy(&rec.expected()).ok_or_else(|| format!("{}: no table row", rec.name))?;
            ensure(m.label == rec.expected_label, format!("{}: matched {}", rec.name, m.label))?;
        } else {
            let (g, _) = rec.algebra().map_err(|e| format!("{}: {e}", rec.name))?;
            ensure(maurer_cartan(&g).squares_to_zero(), format!("{}: d^2 != 0", rec.name))?;
            algebras += 1;
        }
    }
    Ok(format!("{} cases pass; d^2 = 0 on {algebras} algebras", outcomes.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("octonion reconstruction", octonions),
        ("hodge dual of the standard form", hodge_golden),
        ("associated metric and volume", associated_geometry),
        ("structure equations of 2su(2)+2u(1)", structure_equations),
        ("cosymplectic SU(2)^2/U(1) x T^2", cosymplectic_headline),
        ("nearly Kaehler product", nearly_kaehler),
        ("torus weights and g2 stabilizer", g2_consistency),
        ("su(2)_6 definite invariant form", spin_three_certificate),
        ("classification filters", filters),
        ("full catalog sweep", catalog_sweep),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
