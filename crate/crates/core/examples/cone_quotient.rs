//! Rank tables for the quotient over the cone on a torus, and on a triangle
//! boundary (whose quotient has the Betti numbers of CP^2).

use sposet::corpus::corpus;
use sposet::homology::Coefficients;
use sposet::spectral::{tables, verify, QuotientProblem};

fn main() {
    for (name, n) in [("boundary_simplex(2)", 2), ("torus7", 3)] {
        let prob = QuotientProblem::cone(corpus(name).unwrap(), n, Coefficients::Rationals, None).unwrap();
        let t = tables(&prob);
        println!("cone over {name}");
        println!("  H_*(P, dP)      = {:?}", prob.relative_and_delta().relative);
        println!("  Ea1 diagonal    = {:?}", t.ea1.diagonal(n));
        println!("  Ea_inf diagonal = {:?}", t.eainf.diagonal(n));
        println!("  h''             = {:?}", prob.vectors().hdoubleprime);
        println!("  Betti numbers   = {:?}", t.totals);
        let v = verify(&prob);
        println!("  chi(X) = {}, f_(n-1) = {}, all checks pass: {}", v.euler_x, v.top_faces, v.all_pass());
    }
}
