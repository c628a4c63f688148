//! Runs every catalog case and prints one line each.

use g2hom::catalog::verify_all;

fn main() {
    let outcomes = verify_all();
    for o in &outcomes {
        let cosym = o.cosymplectic.map_or("-".to_string(), |c| c.to_string());
        println!(
            "{:<16} {:<6} {:<18} cosymplectic {}",
            o.case,
            if o.passed { "ok" } else { "FAILED" },
            o.matched_label.as_deref().unwrap_or("none"),
            cosym
        );
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} passed", outcomes.len());
}
