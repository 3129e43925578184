//! Buchsbaum, Cohen-Macaulay and homology-manifold verdicts with witnesses.

use sposet::classify::classify;
use sposet::corpus::corpus;
use sposet::homology::Field;

fn main() {
    let cases = [
        ("torus7", Field::Rationals),
        ("rp2_6", Field::Rationals),
        ("rp2_6", Field::fp(2).unwrap()),
        ("simplex(2)", Field::Rationals),
        ("two_arc_circle", Field::Rationals),
    ];
    for (name, field) in cases {
        let c = classify(&corpus(name).unwrap(), field).unwrap();
        println!(
            "{name} over {field}: buchsbaum={} cm={} manifold={} orientable={}",
            c.buchsbaum, c.cohen_macaulay, c.homology_manifold, c.orientable_over_field
        );
        for w in c.witnesses {
            println!("    {:?} fails at {:?}: b~_{} = {}", w.property, w.element, w.degree, w.betti);
        }
    }
}
