//! A solid-torus-like orbit space: boundary the 7-vertex torus, one
//! one-dimensional class in Q that comes from the boundary.

use sposet::corpus::corpus;
use sposet::homology::Coefficients;
use sposet::spectral::{bigraded_betti, pages, verify, ManifoldData, QuotientProblem};

fn main() {
    let data = ManifoldData {
        betti_q: vec![1, 1, 0, 0],
        iota: vec![1, 1, 0, 0],
        orientable: true,
    };
    let prob = QuotientProblem::manifold(corpus("torus7").unwrap(), 3, Coefficients::Rationals, data, None).unwrap();
    let r = prob.relative_and_delta();
    println!("H_*(Q, dQ) = {:?}, rank delta = {:?}", r.relative, r.delta);
    let p = pages(&prob);
    println!("Ea2 diagonal = {:?}, h' reversed = {:?}", p.ea2.diagonal(3), {
        let mut h = prob.vectors().hprime.clone();
        h.reverse();
        h
    });
    let b = bigraded_betti(&prob);
    for e in &b.entries {
        println!("  H_{{{},{}}} = {}", e.i, e.j, e.dim);
    }
    println!("Betti numbers = {:?}", b.totals);
    println!("self-dual: {}", b.is_self_dual());
    println!("all checks pass: {}", verify(&prob).all_pass());
}
