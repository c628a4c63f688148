//! Rebuilds the imaginary octonions from the standard three-form and checks
//! the normed-division identity `|xy|² = |x|²|y|²`.

use g2hom::octonion::{build_omega, check_normed_division, multiplication_from_omega, Octonion};

fn main() -> g2hom::Result<()> {
    let omega = build_omega();
    println!("omega = {}", omega.to_text());
    let table = multiplication_from_omega(&omega)?;
    for (i, j) in [(1, 2), (2, 4), (4, 1), (3, 5)] {
        println!("x{i}*x{j} = {}", table.product_of_basis(i, j).to_text());
    }
    let report = check_normed_division(&table);
    println!("normed division holds: {} ({})", report.passed(), report.details);

    // octonions are alternative but not associative
    let (a, b, c) = (Octonion::basis(1), Octonion::basis(2), Octonion::basis(4));
    println!("[x1, x2, x4] = {}", table.associator(&a, &b, &c).to_text());
    println!("[x1, x1, x2] = {}", table.associator(&a, &a, &b).to_text());
    Ok(())
}
