//! Weights of the maximal torus of `g2` on `R⁷`, the size of the stabilizer
//! of the three-form, and the table of connected subgroups.

use g2hom::liealg::{cartan_g2_action, g2_stabilizer, g2_subgroup_table, torus_modules};
use g2hom::octonion::build_omega;
use g2hom::rational::q;

fn main() -> g2hom::Result<()> {
    let torus = [cartan_g2_action(&q(1), &q(0)), cartan_g2_action(&q(0), &q(1))];
    println!("Cartan torus on R^7: {}", torus_modules(&torus, 7)?);
    println!("dim stabilizer of omega: {}", g2_stabilizer(&build_omega()).len());
    println!();
    for row in g2_subgroup_table() {
        println!("{:<18} dim {:>2}  {}", row.label, row.dim, row.display);
    }
    Ok(())
}
