//! Candidate transitive groups for each isotropy dimension, after the
//! dimension, rank-parity, center and weight filters.

use g2hom::catalog::{enumeration_report, filters::ISOTROPY_DIMS};

fn main() -> g2hom::Result<()> {
    for d in ISOTROPY_DIMS {
        let r = enumeration_report(d)?;
        println!("h = {} (dim {d}): {} candidates", r.h.meta.name, r.candidates.len());
        println!("  survivors: {}", r.survivors.join(", "));
        if r.survivors != r.effective_survivors {
            println!("  almost effective: {}", r.effective_survivors.join(", "));
        }
    }
    Ok(())
}
