//! The space `SU(2)²/U(1) × T²` with its invariant cosymplectic G2-structure.
//! Pass another catalog name as the first argument to run that case instead.

use g2hom::catalog::{find_case, verify_record};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "su2su2-u1-t2".into());
    let Some(record) = find_case(&name) else {
        eprintln!("unknown case {name}");
        std::process::exit(2);
    };
    let out = verify_record(&record);
    println!("{} ({})", out.case, out.title);
    println!(
        "isotropy {} -> {}",
        out.splitting.as_deref().unwrap_or("-"),
        out.matched_label.as_deref().unwrap_or("none")
    );
    if let Some(r) = &out.report {
        println!("omega   = {}", r.g2_form.to_text());
        println!("*omega  = {}", r.star_form.to_text());
        println!("d omega = {}", r.d_g2_form.to_text());
        println!("d*omega = {}", r.d_star_form.to_text());
    }
    println!("passed: {}", out.passed);
}
