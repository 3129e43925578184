//! Simplicial posets with explicit face lattices.
//!
//! A simplicial poset is a finite poset with a least element `0̂` in which every
//! lower interval `[0̂, I]` is a Boolean lattice. Unlike a simplicial complex,
//! several elements may share a vertex set (two edges glued along both ends give
//! a circle with two vertices). Elements are identified by id, never by their
//! vertex set.
//!
//! The least element is implicit and never stored. Element `I` of rank `k` has
//! `k` vertices and `k` facets; facet `j` is the face omitting the `j`-th vertex
//! of the sorted vertex list. Rank-1 elements are the vertices and list no
//! facets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("poset has no elements besides the minimal one")]
    Empty,
    #[error("facet list is empty or contains an empty facet")]
    EmptyInput,
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("element `{element}` refers to unknown face or vertex `{reference}`")]
    DanglingFaceRef { element: String, reference: String },
    #[error("element `{element}`: expected {expected}, found {found}")]
    RankMismatch {
        element: String,
        expected: String,
        found: String,
    },
    #[error("lower interval of `{element}` is not Boolean: {detail}")]
    NonBooleanInterval { element: String, detail: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

/// Decoded element record, the shape used by the `sposet-v1` format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSpec {
    pub id: String,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub facets: Vec<String>,
}

/// One element of `S \ {0̂}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexElem {
    pub id: String,
    /// Sorted vertex indices into [`SimplicialPoset::vertex_names`].
    pub vertices: Vec<usize>,
    /// Element indices; position `j` omits `vertices[j]`. Empty for vertices.
    pub facets: Vec<usize>,
}

impl SimplexElem {
    pub fn rank(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> isize {
        self.vertices.len() as isize - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetStats {
    pub dim: isize,
    pub pure: bool,
    pub connected: bool,
    /// `f_{-1}, f_0, …, f_{dim}`.
    pub f: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialPoset {
    vertex_names: Vec<String>,
    elements: Vec<SimplexElem>,
    by_id: HashMap<String, usize>,
    n: usize,
}

/// Total order on vertex names: integers numerically, then everything else
/// lexicographically.
pub fn vertex_order(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// Id for a face generated from a vertex list. Plain comma-joined names when
/// that is unambiguous, a JSON array otherwise.
pub(crate) fn compound_id(names: &[&str]) -> String {
    if names.len() == 1 {
        return names[0].to_string();
    }
    if names
        .iter()
        .any(|s| s.is_empty() || s.contains([',', '[', ']', '"']))
    {
        serde_json::to_string(names).expect("string slice serializes")
    } else {
        names.join(",")
    }
}

impl SimplicialPoset {
    /// Builds and validates a poset from explicit element records.
    pub fn from_face_lattice(specs: &[ElementSpec]) -> Result<Self, PosetError> {
        if specs.is_empty() {
            return Err(PosetError::Empty);
        }
        Self::build(specs)
    }

    /// Face poset of the simplicial complex generated by `facets`.
    pub fn from_facets<F, T>(facets: F) -> Result<Self, PosetError>
    where
        F: IntoIterator,
        F::Item: IntoIterator<Item = T>,
        T: ToString,
    {
        let facets: Vec<Vec<String>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(|v| v.to_string()).collect())
            .collect();
        if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
            return Err(PosetError::EmptyInput);
        }
        let mut names = BTreeSet::new();
        for f in &facets {
            names.extend(f.iter().cloned());
        }
        let mut names: Vec<String> = names.into_iter().collect();
        names.sort_by(|a, b| vertex_order(a, b));
        let pos: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();

        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &facets {
            let mut idx: Vec<usize> = f.iter().map(|v| pos[v.as_str()]).collect();
            idx.sort_unstable();
            idx.dedup();
            let k = idx.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| idx[b]).collect();
                faces.insert(sub);
            }
        }

        let id_of = |face: &[usize]| -> String {
            let parts: Vec<&str> = face.iter().map(|&v| names[v].as_str()).collect();
            compound_id(&parts)
        };
        let specs: Vec<ElementSpec> = faces
            .iter()
            .map(|face| {
                let facets = if face.len() == 1 {
                    Vec::new()
                } else {
                    (0..face.len())
                        .map(|j| {
                            let mut sub = face.clone();
                            sub.remove(j);
                            id_of(&sub)
                        })
                        .collect()
                };
                ElementSpec {
                    id: id_of(face),
                    vertices: face.iter().map(|&v| names[v].clone()).collect(),
                    facets,
                }
            })
            .collect();
        Self::build(&specs)
    }

    fn build(specs: &[ElementSpec]) -> Result<Self, PosetError> {
        let mut seen = HashMap::new();
        for (i, s) in specs.iter().enumerate() {
            if seen.insert(s.id.as_str(), i).is_some() {
                return Err(PosetError::DuplicateId(s.id.clone()));
            }
        }

        // Vertices are exactly the rank-1 elements.
        let mut vertex_of_name: BTreeMap<&str, &str> = BTreeMap::new();
        for s in specs {
            if s.vertices.is_empty() {
                return Err(PosetError::RankMismatch {
                    element: s.id.clone(),
                    expected: "at least one vertex".into(),
                    found: "none".into(),
                });
            }
            if s.vertices.len() == 1 {
                if !s.facets.is_empty() {
                    return Err(PosetError::RankMismatch {
                        element: s.id.clone(),
                        expected: "no facets for a vertex".into(),
                        found: format!("{} facets", s.facets.len()),
                    });
                }
                if let Some(other) = vertex_of_name.insert(s.vertices[0].as_str(), s.id.as_str()) {
                    return Err(PosetError::NonBooleanInterval {
                        element: s.id.clone(),
                        detail: format!("vertex `{}` is also element `{other}`", s.vertices[0]),
                    });
                }
            }
        }
        let mut vertex_names: Vec<String> = vertex_of_name.keys().map(|s| s.to_string()).collect();
        vertex_names.sort_by(|a, b| vertex_order(a, b));
        let vpos: HashMap<&str, usize> = vertex_names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();

        let mut verts: Vec<Vec<usize>> = Vec::with_capacity(specs.len());
        for s in specs {
            let mut vs = Vec::with_capacity(s.vertices.len());
            for v in &s.vertices {
                match vpos.get(v.as_str()) {
                    Some(&i) => vs.push(i),
                    None => {
                        return Err(PosetError::DanglingFaceRef {
                            element: s.id.clone(),
                            reference: v.clone(),
                        })
                    }
                }
            }
            vs.sort_unstable();
            if vs.windows(2).any(|w| w[0] == w[1]) {
                return Err(PosetError::NonBooleanInterval {
                    element: s.id.clone(),
                    detail: "repeated vertex".into(),
                });
            }
            verts.push(vs);
        }

        // Canonical element order: rank, then vertex list, then id.
        let mut order: Vec<usize> = (0..specs.len()).collect();
        order.sort_by(|&a, &b| {
            verts[a]
                .len()
                .cmp(&verts[b].len())
                .then_with(|| verts[a].cmp(&verts[b]))
                .then_with(|| specs[a].id.cmp(&specs[b].id))
        });
        let mut new_index = vec![0usize; specs.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }

        let mut elements = Vec::with_capacity(specs.len());
        for &old in &order {
            let s = &specs[old];
            let vs = &verts[old];
            let k = vs.len();
            let mut facets = Vec::new();
            if k > 1 {
                if s.facets.len() != k {
                    return Err(PosetError::RankMismatch {
                        element: s.id.clone(),
                        expected: format!("{k} facets"),
                        found: format!("{} facets", s.facets.len()),
                    });
                }
                let distinct: BTreeSet<&str> = s.facets.iter().map(|f| f.as_str()).collect();
                if distinct.len() != k {
                    return Err(PosetError::NonBooleanInterval {
                        element: s.id.clone(),
                        detail: "facet list repeats an element".into(),
                    });
                }
                let mut slots: Vec<Option<usize>> = vec![None; k];
                for fid in &s.facets {
                    let &fi = seen.get(fid.as_str()).ok_or_else(|| PosetError::DanglingFaceRef {
                        element: s.id.clone(),
                        reference: fid.clone(),
                    })?;
                    let fv = &verts[fi];
                    if fv.len() != k - 1 {
                        return Err(PosetError::RankMismatch {
                            element: s.id.clone(),
                            expected: format!("facet `{fid}` of rank {}", k - 1),
                            found: format!("rank {}", fv.len()),
                        });
                    }
                    let omitted = omitted_position(vs, fv).ok_or_else(|| {
                        PosetError::NonBooleanInterval {
                            element: s.id.clone(),
                            detail: format!("facet `{fid}` is not a codimension-one face"),
                        }
                    })?;
                    if slots[omitted].replace(new_index[fi]).is_some() {
                        return Err(PosetError::NonBooleanInterval {
                            element: s.id.clone(),
                            detail: format!("two facets omit vertex `{}`", vertex_names[vs[omitted]]),
                        });
                    }
                }
                facets = slots.into_iter().map(|f| f.expect("all slots filled")).collect();
            }
            elements.push(SimplexElem {
                id: s.id.clone(),
                vertices: vs.clone(),
                facets,
            });
        }

        // Diamond condition: facet a then b equals facet b then a. Ranks are
        // processed bottom-up, so this makes every lower interval Boolean.
        for e in &elements {
            let k = e.rank();
            if k < 3 {
                continue;
            }
            for a in 0..k {
                for b in a + 1..k {
                    // facet omitting a, then omit vertices[b] (position b-1 there)
                    let via_a = elements[e.facets[a]].facets[b - 1];
                    let via_b = elements[e.facets[b]].facets[a];
                    if via_a != via_b {
                        return Err(PosetError::NonBooleanInterval {
                            element: e.id.clone(),
                            detail: format!(
                                "faces `{}` and `{}` share a vertex set",
                                elements[via_a].id, elements[via_b].id
                            ),
                        });
                    }
                }
            }
        }

        let by_id = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();
        let n = elements.iter().map(|e| e.rank()).max().unwrap_or(0);
        Ok(Self {
            vertex_names,
            elements,
            by_id,
            n,
        })
    }

    fn empty() -> Self {
        Self {
            vertex_names: Vec::new(),
            elements: Vec::new(),
            by_id: HashMap::new(),
            n: 0,
        }
    }

    /// `dim S + 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> isize {
        self.n as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn elements(&self) -> &[SimplexElem] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &SimplexElem {
        &self.elements[index]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    /// Element indices of the given rank, in canonical order.
    pub fn of_rank(&self, rank: usize) -> impl Iterator<Item = usize> + '_ {
        self.elements
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.rank() == rank)
            .map(|(i, _)| i)
    }

    pub fn vertex_labels(&self, index: usize) -> Vec<&str> {
        self.elements[index]
            .vertices
            .iter()
            .map(|&v| self.vertex_names[v].as_str())
            .collect()
    }

    /// The unique face of `index` on the vertex subset `subset` (sorted vertex
    /// indices), or `None` if `subset` is not contained in its vertex set.
    /// Empty `subset` means `0̂` and also yields `None`.
    pub fn face_of(&self, index: usize, subset: &[usize]) -> Option<usize> {
        if subset.is_empty() {
            return None;
        }
        let mut cur = index;
        loop {
            let e = &self.elements[cur];
            if e.vertices.len() == subset.len() {
                return (e.vertices == subset).then_some(cur);
            }
            if e.vertices.len() < subset.len() {
                return None;
            }
            let j = e.vertices.iter().position(|v| subset.binary_search(v).is_err())?;
            cur = e.facets[j];
        }
    }

    pub fn le(&self, lower: usize, upper: usize) -> bool {
        self.face_of(upper, &self.elements[lower].vertices) == Some(lower)
    }

    /// Elements that are not a facet of anything.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut covered = vec![false; self.elements.len()];
        for e in &self.elements {
            for &f in &e.facets {
                covered[f] = true;
            }
        }
        (0..self.elements.len()).filter(|&i| !covered[i]).collect()
    }

    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.n + 1];
        f[0] = 1;
        for e in &self.elements {
            f[e.rank()] += 1;
        }
        f
    }

    pub fn is_pure(&self) -> bool {
        self.maximal_elements()
            .iter()
            .all(|&m| self.elements[m].rank() == self.n)
    }

    /// Number of path components of `|S|`.
    pub fn components(&self) -> usize {
        let nv = self.vertex_names.len();
        if nv == 0 {
            return 0;
        }
        let mut uf = UnionFind::<usize>::new(nv);
        for e in &self.elements {
            for w in e.vertices.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let roots: BTreeSet<usize> = (0..nv).map(|v| uf.find(v)).collect();
        roots.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    pub fn validate_stats(&self) -> PosetStats {
        PosetStats {
            dim: self.dim(),
            pure: self.is_pure(),
            connected: self.is_connected(),
            f: self.f_vector(),
        }
    }

    /// `lk_S I`: elements strictly above `I`, with `I` as the new least element.
    /// Vertices of the link are the elements covering `I`, named by their ids.
    pub fn link(&self, index: usize) -> SimplicialPoset {
        let base = &self.elements[index];
        let above: Vec<usize> = (0..self.elements.len())
            .filter(|&j| self.elements[j].rank() > base.rank() && self.le(index, j))
            .collect();
        if above.is_empty() {
            return Self::empty();
        }
        let specs: Vec<ElementSpec> = above
            .iter()
            .map(|&j| {
                let e = &self.elements[j];
                let extra: Vec<usize> = e
                    .vertices
                    .iter()
                    .copied()
                    .filter(|v| base.vertices.binary_search(v).is_err())
                    .collect();
                let vertices = extra
                    .iter()
                    .map(|&v| {
                        let mut sub = base.vertices.clone();
                        let at = sub.binary_search(&v).unwrap_err();
                        sub.insert(at, v);
                        let atom = self.face_of(j, &sub).expect("face of a Boolean interval");
                        self.elements[atom].id.clone()
                    })
                    .collect();
                let facets = if extra.len() == 1 {
                    Vec::new()
                } else {
                    extra
                        .iter()
                        .map(|v| {
                            let pos = e.vertices.binary_search(v).expect("vertex of element");
                            self.elements[e.facets[pos]].id.clone()
                        })
                        .collect()
                };
                ElementSpec {
                    id: e.id.clone(),
                    vertices,
                    facets,
                }
            })
            .collect();
        Self::build(&specs).expect("link of a valid poset is valid")
    }

    pub fn link_by_id(&self, id: &str) -> Result<SimplicialPoset, PosetError> {
        let i = self
            .index_of(id)
            .ok_or_else(|| PosetError::UnknownElement(id.to_string()))?;
        Ok(self.link(i))
    }

    /// Order complex of `S \ {0̂}`: a genuine simplicial complex whose vertices
    /// are the elements of `S` and whose simplices are the strict chains.
    pub fn barycentric(&self) -> SimplicialPoset {
        if self.elements.is_empty() {
            return Self::empty();
        }
        let mut chains: Vec<Vec<&str>> = Vec::new();
        let mut stack: Vec<&str> = Vec::new();
        for m in self.maximal_elements() {
            self.descend(m, &mut stack, &mut chains);
        }
        Self::from_facets(chains).expect("chains are nonempty")
    }

    fn descend<'a>(&'a self, at: usize, stack: &mut Vec<&'a str>, out: &mut Vec<Vec<&'a str>>) {
        stack.push(self.elements[at].id.as_str());
        let e = &self.elements[at];
        if e.facets.is_empty() {
            out.push(stack.clone());
        } else {
            for &f in &e.facets {
                self.descend(f, stack, out);
            }
        }
        stack.pop();
    }

    /// Element records in canonical order, suitable for serialization.
    pub fn to_specs(&self) -> Vec<ElementSpec> {
        self.elements
            .iter()
            .map(|e| ElementSpec {
                id: e.id.clone(),
                vertices: e.vertices.iter().map(|&v| self.vertex_names[v].clone()).collect(),
                facets: e.facets.iter().map(|&f| self.elements[f].id.clone()).collect(),
            })
            .collect()
    }
}

fn omitted_position(parent: &[usize], child: &[usize]) -> Option<usize> {
    if child.len() + 1 != parent.len() {
        return None;
    }
    let mut skipped = None;
    let mut ci = 0;
    for (pi, v) in parent.iter().enumerate() {
        if ci < child.len() && child[ci] == *v {
            ci += 1;
        } else if skipped.is_none() {
            skipped = Some(pi);
        } else {
            return None;
        }
    }
    (ci == child.len()).then_some(skipped?)
}
