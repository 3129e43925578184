use sposet::cli::run;

fn data(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn quotient_cone_over_torus() {
    let o = run(["sposet", "quotient", "cone", "--corpus", "torus7", "--n", "3", "--field", "q"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("Betti numbers of X (1, 0, 4, 0, 10, 2, 1)"));
    assert!(o.stdout.contains("Ea_inf diagonal  (1, 4, 4, 1)"));
}

#[test]
fn quotient_json_is_byte_identical() {
    let args = ["sposet", "quotient", "cone", "--corpus", "torus7", "--json"];
    let a = run(args);
    assert_eq!(a.code, 0);
    assert_eq!(a, run(args));
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["format"], "report-v1");
    assert_eq!(v["tables"]["totals"], serde_json::json!([1, 0, 4, 0, 10, 2, 1]));
    for key in ["e1trunc", "ea1", "ea2", "eainf", "bigraded"] {
        assert!(v["tables"].get(key).is_some(), "{key}");
    }
    assert!(v["checks"].as_object().unwrap().values().all(|b| b == true));
}

#[test]
fn classify_projective_plane_mod_two() {
    let o = run(["sposet", "classify", "--corpus", "rp2_6", "--field", "fp:2"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("buchsbaum          yes"));
    assert!(o.stdout.contains("cohen-macaulay     no"));
}

#[test]
fn non_acyclic_bundle_is_refused() {
    let o = run(["sposet".to_string(), "quotient".into(), "manifold".into(), data("s1xI-bundle.json")]);
    assert_ne!(o.code, 0);
    assert!(o.stderr.contains("not Buchsbaum"));
    assert!(o.stderr.contains("`F1`") && o.stderr.contains("`F2`"));
}

#[test]
fn manifold_bundle_from_file_and_flags_agree() {
    let file = run(["sposet".to_string(), "quotient".into(), "manifold".into(), data("solid-torus-bundle.json"), "--json".into()]);
    let flags = run([
        "sposet", "quotient", "manifold", "--corpus", "torus7", "--betti-q", "1,1,0,0", "--iota", "1,1,0,0", "--json",
    ]);
    assert_eq!(file.code, 0);
    assert_eq!(flags.code, 0);
    let tables = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["tables"].clone();
    assert_eq!(tables(&file.stdout), tables(&flags.stdout));
    assert_eq!(tables(&file.stdout)["totals"], serde_json::json!([1, 1, 7, 0, 7, 1, 1]));
}

#[test]
fn charfn_commands() {
    let bad = run(["sposet".to_string(), "charfn".into(), "check".into(), "--corpus".into(), "boundary_simplex(2)".into(), "--charfn".into(), data("det2-charfn.json")]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.contains("first failure at `1,3`"));
    let over_q = run(["sposet".to_string(), "charfn".into(), "check".into(), "--corpus".into(), "boundary_simplex(2)".into(), "--charfn".into(), data("det2-charfn.json"), "--coeff".into(), "q".into()]);
    assert_eq!(over_q.code, 0);
    let good = run(["sposet".to_string(), "charfn".into(), "check".into(), "--corpus".into(), "boundary_simplex(2)".into(), "--charfn".into(), data("cp2-charfn.json")]);
    assert_eq!(good.code, 0);

    let random = run(["sposet", "charfn", "random", "--corpus", "torus7", "--n", "3", "--seed", "4", "--bound", "5"]);
    assert_eq!(random.code, 0);
    assert_eq!(random, run(["sposet", "charfn", "random", "--corpus", "torus7", "--n", "3", "--seed", "4", "--bound", "5"]));
    let dir = std::env::temp_dir().join(format!("sposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lambda.json");
    std::fs::write(&path, &random.stdout).unwrap();
    let o = run(["sposet", "charfn", "check", "--corpus", "torus7", "--coeff", "q", "--charfn", path.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let o = run(["sposet", "quotient", "cone", "--corpus", "torus7", "--charfn", path.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn cone_file_with_charfn() {
    let o = run(["sposet".to_string(), "quotient".into(), "cone".into(), data("cp2-cone.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("(1, 0, 1, 0, 1)"));
    let wrong_kind = run(["sposet".to_string(), "quotient".into(), "manifold".into(), data("cp2-cone.json")]);
    assert_eq!(wrong_kind.code, 1);
}

#[test]
fn invariants_commands() {
    let o = run(["sposet", "fvec", "--corpus", "torus7"]);
    assert!(o.stdout.contains("h''  (1, 4, 4, 1)"));
    let o = run(["sposet", "homology", "--corpus", "rp2_6", "--coeff", "z"]);
    assert!(o.stdout.contains("Z/2"));
    let o = run(["sposet", "homology", "--corpus", "rp2_6", "--coeff", "z", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["torsion"][2], serde_json::json!(["2"]));
    let o = run(["sposet", "identities", "--corpus", "octahedron_s2"]);
    assert_eq!(o.code, 0);
    assert!(!o.stdout.contains("FAIL"));
    let o = run(["sposet", "stats", "--corpus", "s1xI_faceposet", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["connected"], false);
    let o = run(["sposet", "classify", "--corpus", "s1xI_faceposet"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("not connected"));
}

#[test]
fn corpus_commands() {
    let list = run(["sposet", "corpus", "list"]);
    assert!(list.stdout.lines().any(|l| l == "torus7"));
    let emitted = run(["sposet", "corpus", "emit", "two_arc_circle"]);
    let v: serde_json::Value = serde_json::from_str(&emitted.stdout).unwrap();
    assert_eq!(v["format"], "sposet-v1");
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
    let o = run(["sposet", "corpus", "emit", "nope"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("unknown corpus entry"));
}

#[test]
fn bad_inputs() {
    let o = run(["sposet", "stats", "--corpus", "torus7", "--field", "fp:4"]);
    assert_eq!(o.code, 2);
    let o = run(["sposet", "homology", "/definitely/not/here.json"]);
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("cannot read"));
    let o = run(["sposet", "quotient", "cone", "--corpus", "torus7", "--n", "4"]);
    assert_eq!(o.code, 1);
}
