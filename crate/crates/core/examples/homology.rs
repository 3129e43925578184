//! Reduced homology of the projective plane over several coefficient systems,
//! checked against the barycentric subdivision.

use sposet::corpus::corpus;
use sposet::homology::{betti_crosscheck, boundary_matrices, reduced_betti, Coefficients};

fn main() {
    let s = corpus("rp2_6").unwrap();
    assert!(boundary_matrices(&s).squares_to_zero());
    for coeff in [
        Coefficients::Integers,
        Coefficients::Rationals,
        Coefficients::fp(2).unwrap(),
        Coefficients::fp(3).unwrap(),
    ] {
        let b = reduced_betti(&s, coeff);
        print!("rp2_6 over {coeff}: b~ = {:?}", b.reduced);
        for d in 0..=b.top_degree() {
            for t in b.torsion(d) {
                print!(", Z/{t} in degree {d}");
            }
        }
        println!("  (subdivision agrees: {})", betti_crosscheck(&s, coeff));
    }
}
