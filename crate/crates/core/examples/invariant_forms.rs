//! Invariant three-forms of `g2` on `R⁷` and of `su(2)` on its irreducible
//! seven-dimensional module. The latter contains a definite form, which gives
//! the `SO(5)/SO(3)` isotropy a G2-structure.

use g2hom::liealg::{g2_representation, invariant_forms, spin_representation};
use g2hom::octonion::is_definite_g2_form;

fn main() -> g2hom::Result<()> {
    let g2 = invariant_forms(&g2_representation(), 3);
    println!("g2-invariant 3-forms: {}", g2.len());
    for f in &g2 {
        println!("  {}", f.to_text());
    }
    let spin3 = invariant_forms(&spin_representation(3), 3);
    println!("su(2)-invariant 3-forms on the 7-dim module: {}", spin3.len());
    for f in &spin3 {
        println!("  {}  definite: {}", f.to_text(), is_definite_g2_form(f)?);
    }
    Ok(())
}
