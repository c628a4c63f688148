//! Structure equations `de^i` of `su(2) ⊕ su(2) ⊕ u(1)²` in a basis adapted
//! to the circle `A.s1 + B.s1`, and the identity `d² = 0`.

use g2hom::liealg::LieAlgebra;

fn main() -> g2hom::Result<()> {
    let g = LieAlgebra::sum_of(&[
        LieAlgebra::su2().with_prefix("A"),
        LieAlgebra::su2().with_prefix("B"),
        LieAlgebra::u1(2),
    ]);
    let basis = ["z1", "z2", "A.s1 - B.s1", "A.s2", "A.s3", "B.s2", "B.s3", "A.s1 + B.s1"]
        .iter()
        .map(|s| g.parse_element(s))
        .collect::<g2hom::Result<Vec<_>>>()?;
    let labels = (1..=8).map(|i| format!("e{i}")).collect();
    let adapted = g.change_basis(&basis, labels)?;
    let mc = g2hom::homspace::maurer_cartan(&adapted);
    for (i, de) in mc.de.iter().enumerate() {
        println!("de{} = {}", i + 1, de.to_text());
    }
    println!("d^2 = 0: {}", mc.squares_to_zero());
    Ok(())
}
