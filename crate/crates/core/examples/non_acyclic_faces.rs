//! Q = S^1 x [-1,1] has two circle facets, which are not acyclic. The engine
//! refuses it. By hand, the two possible quotients are S^1 x S^3 and
//! S^1 x S^1 x S^2, so the Betti numbers depend on the characteristic function.

use sposet::corpus::corpus;
use sposet::homology::Coefficients;
use sposet::spectral::{make_problem, ManifoldData, ProblemKind, SpectralError, NON_ACYCLIC_PROFILES};

fn main() {
    let data = ManifoldData {
        betti_q: vec![1, 1, 0],
        iota: vec![1, 1, 0],
        orientable: true,
    };
    let s = corpus("s1xI_faceposet").unwrap();
    match make_problem(ProblemKind::Manifold, s, 2, Coefficients::Rationals, None, Some(data)) {
        Err(SpectralError::NotBuchsbaum { witnesses }) => {
            println!("refused: not Buchsbaum");
            for w in witnesses {
                println!("  link of {:?} has b~_{} = {}", w.element, w.degree, w.betti);
            }
        }
        other => println!("unexpected: {other:?}"),
    }
    let [distinct, equal] = NON_ACYCLIC_PROFILES;
    println!("faces sent to distinct circles: S^1 x S^3,       Betti {distinct:?}");
    println!("faces sent to the same circle:  S^1 x S^1 x S^2, Betti {equal:?}");
}
