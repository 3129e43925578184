//! Checking characteristic functions over different coefficients, and
//! sampling a valid one.

use sposet::charfn::{check, random_q_charfn, CharFunction};
use sposet::corpus::corpus;
use sposet::homology::Coefficients;

fn main() {
    let triangle = corpus("boundary_simplex(2)").unwrap();
    let cp2 = CharFunction::from_pairs(2, [("1", vec![1, 0]), ("2", vec![0, 1]), ("3", vec![1, 1])]).unwrap();
    let det2 = CharFunction::from_pairs(2, [("1", vec![1, 0]), ("2", vec![0, 1]), ("3", vec![1, 2])]).unwrap();
    for (label, lambda) in [("(1,0),(0,1),(1,1)", &cp2), ("(1,0),(0,1),(1,2)", &det2)] {
        for coeff in [
            Coefficients::Integers,
            Coefficients::Rationals,
            Coefficients::fp(2).unwrap(),
            Coefficients::fp(3).unwrap(),
        ] {
            let r = check(&triangle, lambda, coeff).unwrap();
            match r.first_failure() {
                None => println!("{label} over {coeff}: pass"),
                Some(v) => println!(
                    "{label} over {coeff}: fails at {} (rank {}, factors {:?})",
                    v.element, v.rank, v.invariant_factors
                ),
            }
        }
    }

    let torus = corpus("torus7").unwrap();
    let lambda = random_q_charfn(&torus, 3, 1, 5).unwrap();
    println!("random rank-3 assignment on torus7 (seed 1):");
    for (v, vec) in lambda.assignment() {
        println!("  {v}: {vec:?}");
    }
}
