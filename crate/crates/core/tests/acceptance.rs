//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p sposet --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;

use sposet::charfn::{check, random_q_charfn, sample_assignment, CharFunction};
use sposet::classify::{classify, Property};
use sposet::corpus::{corpus, names};
use sposet::facevec::{identity_report, FaceVectorReport, Verdict};
use sposet::homology::{betti_crosscheck, boundary_matrices, reduced_betti, Coefficients, Field};
use sposet::io::{parse_file, quotient_report, to_json_string, Document, NamedPoset, ProblemBundle};
use sposet::spectral::{
    bigraded_betti, bigraded_from_pages, diagonal_general, diagonal_h_prime_form, make_problem, tables, verify,
    ManifoldData, ProblemKind, QuotientProblem, SpectralError, NON_ACYCLIC_PROFILES,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q() -> Field {
    Field::Rationals
}

fn vectors(name: &str) -> FaceVectorReport {
    FaceVectorReport::new(&corpus(name).unwrap(), q()).unwrap()
}

fn face_vectors() -> Outcome {
    let t = vectors("boundary_simplex(2)");
    ensure!(t.h == [1, 1, 1] && t.hprime == [1, 1, 1] && t.hdoubleprime == [1, 1, 1], "triangle: {t:?}");
    let t = vectors("torus7");
    ensure!(t.f == [1, 7, 21, 14], "torus f = {:?}", t.f);
    ensure!(t.h == [1, 4, 10, -1], "torus h = {:?}", t.h);
    ensure!(t.hprime == [1, 4, 10, 1], "torus h' = {:?}", t.hprime);
    ensure!(t.hdoubleprime == [1, 4, 4, 1], "torus h'' = {:?}", t.hdoubleprime);
    let r = vectors("rp2_6");
    ensure!(r.h == [1, 3, 6, 0], "rp2 h = {:?}", r.h);
    Ok("triangle, torus and projective plane vectors exact".into())
}

fn identity_suite() -> Outcome {
    let mut count = 0;
    for name in names() {
        let s = corpus(&name).unwrap();
        let r = identity_report(&s, q()).unwrap();
        for (check, v) in r.checks() {
            ensure!(v.passed() != Some(false), "{name}: {check} failed");
        }
        for v in [
            &r.face_polynomial_from_ft,
            &r.h_polynomial_from_ft,
            &r.h_coefficients_from_ft,
            &r.h_top_is_reduced_euler,
            &r.h_prime_top_is_top_betti,
        ] {
            ensure!(*v == Verdict::Pass, "{name}: core identity not evaluated");
        }
        if r.classification.buchsbaum {
            ensure!(r.h_double_prime_nonnegative == Verdict::Pass, "{name}: h'' >= 0 not evaluated");
        }
        count += 1;
    }
    for name in ["torus7", "octahedron_s2", "two_arc_circle"] {
        let r = identity_report(&corpus(name).unwrap(), q()).unwrap();
        ensure!(r.dehn_sommerville == Verdict::Pass, "{name}: Dehn-Sommerville {:?}", r.dehn_sommerville);
        ensure!(r.h_double_prime_symmetric == Verdict::Pass, "{name}: h'' symmetry {:?}", r.h_double_prime_symmetric);
    }
    Ok(format!("{count} corpus entries, Dehn-Sommerville on 3 manifolds"))
}

fn classification() -> Outcome {
    let c = classify(&corpus("torus7").unwrap(), q()).unwrap();
    ensure!(c.buchsbaum && !c.cohen_macaulay && c.homology_manifold, "torus: {c:?}");
    ensure!(c.witnesses.iter().any(|w| w.property == Property::CohenMacaulay), "torus lacks CM witness");
    ensure!(!c.witnesses.iter().any(|w| w.property == Property::Buchsbaum), "torus has Buchsbaum witness");
    let c = classify(&corpus("rp2_6").unwrap(), q()).unwrap();
    ensure!(c.cohen_macaulay, "rp2 over q: {c:?}");
    ensure!(
        !c.witnesses.iter().any(|w| matches!(w.property, Property::Buchsbaum | Property::CohenMacaulay)),
        "rp2 over q has CM witnesses"
    );
    let c = classify(&corpus("rp2_6").unwrap(), Field::fp(2).unwrap()).unwrap();
    ensure!(c.buchsbaum && !c.cohen_macaulay, "rp2 over fp:2: {c:?}");
    ensure!(c.witnesses.iter().any(|w| w.property == Property::CohenMacaulay), "rp2 over fp:2 lacks witness");
    let c = classify(&corpus("simplex(2)").unwrap(), q()).unwrap();
    ensure!(c.cohen_macaulay && !c.homology_manifold, "full triangle: {c:?}");
    ensure!(c.witnesses.iter().any(|w| w.property == Property::HomologyManifold), "full triangle lacks witness");
    Ok("torus, projective plane over q and fp:2, full triangle".into())
}

fn characteristic_functions() -> Outcome {
    let tri = corpus("boundary_simplex(2)").unwrap();
    let lam = |v: [i64; 2]| CharFunction::from_pairs(2, [("1", vec![1, 0]), ("2", vec![0, 1]), ("3", v.to_vec())]).unwrap();
    ensure!(check(&tri, &lam([1, 1]), Coefficients::Integers).unwrap().pass, "CP2 assignment fails over z");
    let bad = lam([1, 2]);
    for coeff in [Coefficients::Integers, Coefficients::fp(2).unwrap()] {
        let r = check(&tri, &bad, coeff).unwrap();
        let f = r.first_failure().ok_or(format!("det-2 assignment passes over {coeff}"))?;
        ensure!(f.element == "1,3", "det-2 assignment fails at {} over {coeff}", f.element);
    }
    for coeff in [Coefficients::Rationals, Coefficients::fp(3).unwrap()] {
        ensure!(check(&tri, &bad, coeff).unwrap().pass, "det-2 assignment fails over {coeff}");
    }
    let mut z_pass = 0;
    for seed in 0..100 {
        let l = sample_assignment(&tri, 2, seed, 0, 2);
        if !check(&tri, &l, Coefficients::Integers).unwrap().pass {
            continue;
        }
        z_pass += 1;
        for p in [2, 3, 5] {
            ensure!(
                check(&tri, &l, Coefficients::fp(p).unwrap()).unwrap().pass,
                "seed {seed}: passes over z but not fp:{p}"
            );
        }
    }
    ensure!(z_pass > 0, "no seeded assignment passed over z");
    Ok(format!("fixed assignments exact; {z_pass}/100 seeded assignments pass over z and over fp:2,3,5"))
}

fn cone_engine() -> Outcome {
    let p = QuotientProblem::cone(corpus("torus7").unwrap(), 3, Coefficients::Rationals, None).unwrap();
    let t = tables(&p);
    ensure!(t.ea1.diagonal(3) == [1, 10, 7, 1], "Ea1 diagonal {:?}", t.ea1.diagonal(3));
    ensure!(t.eainf.diagonal(3) == [1, 4, 4, 1], "Ea_inf diagonal {:?}", t.eainf.diagonal(3));
    ensure!(t.eainf.diagonal(3) == p.vectors().hdoubleprime, "Ea_inf diagonal differs from h''");
    ensure!(t.totals == [1, 0, 4, 0, 10, 2, 1], "totals {:?}", t.totals);
    let v = verify(&p);
    ensure!(v.euler_conservation == Verdict::Pass, "Euler characteristic not conserved");
    ensure!(v.euler_x == 14 && v.top_faces == 14, "chi(X) = {}, f_2 = {}", v.euler_x, v.top_faces);
    let p = QuotientProblem::cone(corpus("boundary_simplex(2)").unwrap(), 2, Coefficients::Rationals, None).unwrap();
    let totals = bigraded_betti(&p).totals;
    ensure!(totals == [1, 0, 1, 0, 1], "triangle totals {totals:?}");
    let h = &p.vectors().h;
    ensure!((0..=2).all(|j| totals[2 * j] == h[j]), "even Betti numbers differ from h");
    Ok(format!("torus cone chi(X) = {} = f_2; triangle cone totals {totals:?}", v.euler_x))
}

fn solid_torus() -> QuotientProblem {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/solid-torus-bundle.json");
    let Document::Problem(b) = parse_file(path).unwrap() else { panic!("not a bundle") };
    b.to_problem().unwrap()
}

fn manifold_engine() -> Outcome {
    let p = solid_torus();
    let t = tables(&p);
    let mut hp = p.vectors().hprime.clone();
    hp.reverse();
    ensure!(t.ea2.diagonal(3) == [1, 10, 4, 1] && t.ea2.diagonal(3) == hp, "Ea2 diagonal {:?}", t.ea2.diagonal(3));
    let got: BTreeMap<(usize, usize), i64> = t.bigraded.entries.iter().map(|e| ((e.i, e.j), e.dim)).collect();
    let want: BTreeMap<(usize, usize), i64> =
        [((0, 0), 1), ((1, 0), 1), ((1, 1), 7), ((2, 2), 7), ((2, 3), 1), ((3, 3), 1)].into();
    ensure!(got == want, "bigraded table {got:?}");
    ensure!(verify(&p).bigraded_duality == Verdict::Pass, "duality fails");
    ensure!(t.totals == [1, 1, 7, 0, 7, 1, 1], "totals {:?}", t.totals);
    Ok("solid-torus bundle pages, bigraded table, duality and totals".into())
}

fn cross_paths() -> Outcome {
    let mut manifolds = 0;
    let mut problems = 0;
    for field in [Field::Rationals, Field::fp(2).unwrap(), Field::fp(3).unwrap()] {
        for name in names() {
            let s = corpus(&name).unwrap();
            let Ok(c) = classify(&s, field) else { continue };
            let v = FaceVectorReport::new(&s, field).unwrap();
            if c.homology_manifold && c.orientable_over_field {
                manifolds += 1;
                ensure!(
                    diagonal_general(&v.h, &v.betti) == diagonal_h_prime_form(&v.hprime),
                    "{name} over {field}: diagonal forms differ"
                );
            }
            let n = (s.dim() + 1) as usize;
            match QuotientProblem::cone(s, n, field.into(), None) {
                Ok(p) => {
                    problems += 1;
                    ensure!(bigraded_from_pages(&p) == bigraded_betti(&p), "cone over {name}/{field}: pages differ");
                }
                Err(SpectralError::NotBuchsbaum { .. }) => {}
                Err(e) => return Err(format!("cone over {name}/{field}: {e}")),
            }
        }
    }
    let p = solid_torus();
    ensure!(bigraded_from_pages(&p) == bigraded_betti(&p), "solid torus: pages differ");
    problems += 1;
    Ok(format!("{manifolds} orientable manifold diagonals, {problems} problems"))
}

fn charfn_independence() -> Outcome {
    for (name, n) in [("torus7", 3), ("boundary_simplex(3)", 3)] {
        let s = corpus(name).unwrap();
        let mut seen = Vec::new();
        for seed in [11, 12, 13] {
            let lambda = random_q_charfn(&s, n, seed, 4).map_err(|e| e.to_string())?;
            ensure!(!seen.iter().any(|(l, _)| *l == lambda), "{name}: seed {seed} repeats an assignment");
            let bundle = ProblemBundle {
                kind: ProblemKind::Cone,
                poset: NamedPoset::corpus(name).unwrap(),
                n,
                coeff: Coefficients::Rationals,
                manifold: None,
                charfn: Some(lambda.clone()),
            };
            let report = quotient_report(&bundle, &bundle.to_problem().map_err(|e| e.to_string())?);
            seen.push((lambda, to_json_string(&report.tables)));
        }
        ensure!(seen.windows(2).all(|w| w[0].1 == w[1].1), "{name}: tables differ between assignments");
    }
    Ok("torus7 and boundary_simplex(3): three assignments each, identical tables".into())
}

fn non_acyclic_rejection() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/s1xI-bundle.json");
    let Document::Problem(b) = parse_file(path).unwrap() else { panic!("not a bundle") };
    match b.to_problem() {
        Err(SpectralError::NotBuchsbaum { witnesses }) => {
            ensure!(witnesses.len() == 2, "expected the two facets as witnesses, got {witnesses:?}")
        }
        other => return Err(format!("bundle accepted or wrong error: {other:?}")),
    }
    let direct = make_problem(
        ProblemKind::Manifold,
        corpus("s1xI_faceposet").unwrap(),
        2,
        Coefficients::Rationals,
        None,
        Some(ManifoldData { betti_q: vec![1, 1, 0], iota: vec![1, 1, 0], orientable: true }),
    );
    ensure!(matches!(direct, Err(SpectralError::NotBuchsbaum { .. })), "direct construction accepted");
    ensure!(NON_ACYCLIC_PROFILES == [[1, 1, 0, 1, 1], [1, 2, 2, 2, 1]], "constants changed");
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md"))
        .map_err(|e| format!("README: {e}"))?
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ");
    for profile in ["(1, 1, 0, 1, 1)", "(1, 2, 2, 2, 1)"] {
        ensure!(readme.contains(profile), "README does not record {profile}");
    }
    ensure!(readme.contains("depend on the characteristic function"), "README does not record the conclusion");
    Ok("refused with both facets as witnesses; profiles documented".into())
}

fn homology_backend() -> Outcome {
    let coeffs = [
        Coefficients::Integers,
        Coefficients::Rationals,
        Coefficients::fp(2).unwrap(),
        Coefficients::fp(3).unwrap(),
    ];
    for name in names() {
        let s = corpus(&name).unwrap();
        ensure!(boundary_matrices(&s).squares_to_zero(), "{name}: boundary does not square to zero");
        for c in coeffs {
            ensure!(betti_crosscheck(&s, c), "{name} over {c}: subdivision disagrees");
        }
    }
    let t = reduced_betti(&corpus("torus7").unwrap(), Coefficients::Integers);
    ensure!(t.reduced[1..] == [0, 2, 1], "torus over z: {:?}", t.reduced);
    ensure!((0..=2).all(|d| t.torsion(d).is_empty()), "torus over z has torsion");
    let r = reduced_betti(&corpus("rp2_6").unwrap(), Coefficients::Integers);
    ensure!(
        r.torsion(1).len() == 1 && r.torsion(1)[0] == 2.into() && r.torsion(0).is_empty() && r.torsion(2).is_empty(),
        "rp2 torsion {:?}",
        r.torsion
    );
    Ok(format!("{} corpus entries over z, q, fp:2, fp:3", names().len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("face vectors", face_vectors),
        ("identity suite", identity_suite),
        ("classification", classification),
        ("characteristic functions", characteristic_functions),
        ("cone engine", cone_engine),
        ("manifold engine", manifold_engine),
        ("cross-path agreement", cross_paths),
        ("characteristic function independence", charfn_independence),
        ("non-acyclic faces rejected", non_acyclic_rejection),
        ("homology backend", homology_backend),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("criterion {:>2} PASS  {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
