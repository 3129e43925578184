//! f-, h-, ft-, h'- and h''-vectors of a few surfaces, and the identity suite.

use sposet::corpus::corpus;
use sposet::facevec::{identity_report, FaceVectorReport};
use sposet::homology::Field;

fn main() {
    for name in ["boundary_simplex(2)", "torus7", "rp2_6", "octahedron_s2"] {
        let s = corpus(name).unwrap();
        let v = FaceVectorReport::new(&s, Field::Rationals).unwrap();
        println!("{name}");
        println!("  f   = {:?}", v.f);
        println!("  h   = {:?}", v.h);
        println!("  ft  = {:?}", v.ft);
        println!("  h'  = {:?}", v.hprime);
        println!("  h'' = {:?}", v.hdoubleprime);
        println!("  chi = {}, reduced chi = {}", v.chi, v.chitilde);
        let report = identity_report(&s, Field::Rationals).unwrap();
        for (check, verdict) in report.checks() {
            println!("    {check:<28} {verdict:?}");
        }
    }
}
