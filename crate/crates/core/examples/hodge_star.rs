//! Metric, volume and four-form of the standard G2 three-form.

use g2hom::exterior::{hodge, Metric, Orientation};
use g2hom::octonion::{associated_metric, build_omega, G2Structure};

fn main() -> g2hom::Result<()> {
    let omega = build_omega();
    let geom = associated_metric(&omega)?;
    println!("metric is identity: {}", geom.metric.is_identity());
    println!("volume = {}", geom.volume.to_text());

    let star = hodge(&omega, &Metric::euclidean(7), Orientation::Positive)?;
    println!("*omega = {}", star.to_text());
    let flipped = hodge(&omega, &Metric::euclidean(7), Orientation::Negative)?;
    println!("reversed orientation: {}", flipped.to_text());

    let s = G2Structure::from_omega(omega)?;
    println!("omega ^ *omega = {}", s.omega.wedge(&s.star_omega)?.to_text());
    Ok(())
}
