//! The circles `U(1)_{k,l} ⊂ SU(3)` and the tori `U(1)²_{k,l,m} ⊂ SU(2)³`.

use g2hom::catalog::{aloff_wallach_check, qklm_report};

fn main() -> g2hom::Result<()> {
    for (k, l) in [(1, 0), (1, 1), (1, -1), (2, 1), (3, -5)] {
        let r = aloff_wallach_check(k, l)?;
        let params = r.matched.as_ref().and_then(|m| m.parameters);
        println!("U(1)_{{{k},{l}}}: rates {:?}, u(1) pattern {:?}", r.rates, params);
    }
    for k in 1..=3 {
        for l in 0..=k {
            for m in 0..=l {
                let r = qklm_report(k, l, m)?;
                if r.admits {
                    println!("U(1)^2_{{{k},{l},{m}}}: isotropy fits inside G2 ({})", r.display);
                }
            }
        }
    }
    Ok(())
}
