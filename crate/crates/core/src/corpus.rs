//! Built-in example posets.

use thiserror::Error;

use crate::poset::{ElementSpec, SimplicialPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown corpus entry `{0}`")]
pub struct UnknownName(pub String);

/// Names accepted by [`corpus`], with parameterized families expanded.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = (2..=4).map(|k| format!("boundary_simplex({k})")).collect();
    out.extend(
        [
            "simplex(2)",
            "triangle_2gon",
            "two_arc_circle",
            "torus7",
            "rp2_6",
            "octahedron_s2",
            "s1xI_faceposet",
        ]
        .map(String::from),
    );
    out
}

pub fn corpus(name: &str) -> Result<SimplicialPoset, UnknownName> {
    let unknown = || UnknownName(name.to_string());
    if let Some(k) = parse_family(name, "boundary_simplex") {
        return (1..=8).contains(&k).then(|| boundary_simplex(k)).ok_or_else(unknown);
    }
    if let Some(k) = parse_family(name, "simplex") {
        return (0..=8).contains(&k).then(|| simplex(k)).ok_or_else(unknown);
    }
    Ok(match name {
        "triangle_2gon" => triangle_2gon(),
        "two_arc_circle" => two_arc_circle(),
        "torus7" => torus7(),
        "rp2_6" => rp2_6(),
        "octahedron_s2" => octahedron_s2(),
        "s1xI_faceposet" => s1xi_faceposet(),
        _ => return Err(unknown()),
    })
}

fn parse_family(name: &str, family: &str) -> Option<usize> {
    name.strip_prefix(family)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
}

/// `∂Δ^k` on vertices `1..=k+1`.
pub fn boundary_simplex(k: usize) -> SimplicialPoset {
    let facets: Vec<Vec<usize>> = (1..=k + 1)
        .map(|skip| (1..=k + 1).filter(|&v| v != skip).collect())
        .collect();
    SimplicialPoset::from_facets(facets).expect("nonempty facets")
}

/// The full simplex `Δ^k`.
pub fn simplex(k: usize) -> SimplicialPoset {
    SimplicialPoset::from_facets([(1..=k + 1).collect::<Vec<_>>()]).expect("nonempty facet")
}

fn spec(id: &str, vertices: &[&str], facets: &[&str]) -> ElementSpec {
    ElementSpec {
        id: id.into(),
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        facets: facets.iter().map(|s| s.to_string()).collect(),
    }
}

/// Two edges glued along both endpoints.
pub fn two_arc_circle() -> SimplicialPoset {
    SimplicialPoset::from_face_lattice(&[
        spec("v1", &["v1"], &[]),
        spec("v2", &["v2"], &[]),
        spec("e", &["v1", "v2"], &["v2", "v1"]),
        spec("e'", &["v1", "v2"], &["v2", "v1"]),
    ])
    .expect("valid poset")
}

/// Two triangles glued along their whole boundary: a 2-sphere with 3 vertices.
pub fn triangle_2gon() -> SimplicialPoset {
    SimplicialPoset::from_face_lattice(&[
        spec("1", &["1"], &[]),
        spec("2", &["2"], &[]),
        spec("3", &["3"], &[]),
        spec("12", &["1", "2"], &["2", "1"]),
        spec("13", &["1", "3"], &["3", "1"]),
        spec("23", &["2", "3"], &["3", "2"]),
        spec("t", &["1", "2", "3"], &["23", "13", "12"]),
        spec("t'", &["1", "2", "3"], &["23", "13", "12"]),
    ])
    .expect("valid poset")
}

/// Möbius–Kühnel 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialPoset {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push([i, (i + 1) % 7, (i + 3) % 7].map(|v| v + 1));
        facets.push([i, (i + 2) % 7, (i + 3) % 7].map(|v| v + 1));
    }
    SimplicialPoset::from_facets(facets).expect("nonempty facets")
}

/// 6-vertex real projective plane (hemi-icosahedron).
pub fn rp2_6() -> SimplicialPoset {
    SimplicialPoset::from_facets([
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [2, 4, 5],
        [2, 4, 6],
        [3, 4, 6],
        [3, 5, 6],
    ])
    .expect("nonempty facets")
}

/// Boundary of the octahedron; antipodal pairs `(1,2)`, `(3,4)`, `(5,6)`.
pub fn octahedron_s2() -> SimplicialPoset {
    let mut facets = Vec::new();
    for a in [1, 2] {
        for b in [3, 4] {
            for c in [5, 6] {
                facets.push([a, b, c]);
            }
        }
    }
    SimplicialPoset::from_facets(facets).expect("nonempty facets")
}

/// Dual face poset of `S¹ × [-1, 1]`: the two boundary circles are the only
/// proper faces and they do not meet.
pub fn s1xi_faceposet() -> SimplicialPoset {
    SimplicialPoset::from_face_lattice(&[spec("F1", &["F1"], &[]), spec("F2", &["F2"], &[])])
        .expect("valid poset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in names() {
            let s = corpus(&name).unwrap();
            assert!(!s.is_empty(), "{name}");
        }
        assert_eq!(corpus("nope"), Err(UnknownName("nope".into())));
        assert!(corpus("boundary_simplex(0)").is_err());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(corpus("torus7").unwrap().f_vector(), vec![1, 7, 21, 14]);
        assert_eq!(corpus("boundary_simplex(3)").unwrap().f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(corpus("rp2_6").unwrap().f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(corpus("octahedron_s2").unwrap().f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(corpus("triangle_2gon").unwrap().f_vector(), vec![1, 3, 3, 2]);
        assert_eq!(corpus("s1xI_faceposet").unwrap().f_vector(), vec![1, 2]);
    }

    #[test]
    fn torus_vertex_links_are_hexagons() {
        let t = torus7();
        for v in t.of_rank(1) {
            assert_eq!(t.link(v).f_vector(), vec![1, 6, 6]);
        }
        let st = t.validate_stats();
        assert!(st.pure && st.connected);
        assert_eq!(st.dim, 2);
    }
}
