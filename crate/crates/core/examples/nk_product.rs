//! `M⁶ × S¹` for a nearly Kähler `M⁶` with `dα = -3λ θ⁺`, `dθ⁻ = 2λ α²`:
//! the product three-form `α∧dt + θ⁻` is cosymplectic for every `λ ≠ 0`.

use g2hom::homspace::nearly_kaehler_product_check;
use g2hom::rational::parse_rational;

fn main() -> g2hom::Result<()> {
    for text in ["1", "-1", "3/2", "-7/3"] {
        let lambda = parse_rational(text)?;
        let r = nearly_kaehler_product_check(&lambda)?;
        println!("lambda = {:>5}  d*omega = {}  cosymplectic: {}", text, r.d_star_omega.to_text(), r.cosymplectic);
    }
    Ok(())
}
