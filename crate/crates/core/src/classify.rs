//! Buchsbaum, Cohen–Macaulay and homology-manifold tests via link homology.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::{reduced_betti, BettiVector, Field};
use crate::poset::SimplicialPoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("poset is not pure")]
    NotPure,
    #[error("poset is not connected")]
    NotConnected,
}

/// Reduced homology of one proper link.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkRow {
    pub element: String,
    pub rank: usize,
    pub betti: BettiVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkTable {
    /// Ambient rank the links are measured against.
    pub n: usize,
    pub field: Field,
    pub rows: Vec<LinkRow>,
}

impl LinkTable {
    /// Degree in which the link of a rank-`rank` element may carry homology.
    pub fn top_degree(&self, rank: usize) -> isize {
        self.n as isize - 1 - rank as isize
    }
}

/// Link homology of every element, for a pure poset.
pub fn link_table(s: &SimplicialPoset, field: Field) -> Result<LinkTable, ClassifyError> {
    if !s.is_pure() {
        return Err(ClassifyError::NotPure);
    }
    Ok(link_table_in_rank(s, s.n(), field))
}

/// Link homology with the top degree measured against an explicit ambient
/// rank `n`, without purity requirements.
pub fn link_table_in_rank(s: &SimplicialPoset, n: usize, field: Field) -> LinkTable {
    let rows = (0..s.len())
        .map(|i| {
            let e = s.element(i);
            LinkRow {
                element: e.id.clone(),
                rank: e.rank(),
                betti: reduced_betti(&s.link(i), field.into()),
            }
        })
        .collect();
    LinkTable { n, field, rows }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Buchsbaum,
    CohenMacaulay,
    HomologyManifold,
    Orientable,
}

/// Where a property fails. `element: None` refers to `S` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub property: Property,
    pub element: Option<String>,
    pub degree: isize,
    pub betti: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub field: Field,
    pub buchsbaum: bool,
    pub cohen_macaulay: bool,
    pub homology_manifold: bool,
    pub orientable_over_field: bool,
    pub witnesses: Vec<Witness>,
}

/// Links with homology outside their top degree.
pub fn buchsbaum_witnesses(table: &LinkTable) -> Vec<Witness> {
    let mut out = Vec::new();
    for row in &table.rows {
        let top = table.top_degree(row.rank);
        for (k, &b) in row.betti.reduced.iter().enumerate() {
            let degree = k as isize - 1;
            if b != 0 && degree != top {
                out.push(Witness {
                    property: Property::Buchsbaum,
                    element: Some(row.element.clone()),
                    degree,
                    betti: b,
                });
            }
        }
    }
    out
}

pub fn classify(s: &SimplicialPoset, field: Field) -> Result<Classification, ClassifyError> {
    let table = link_table(s, field)?;
    if !s.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    let global = reduced_betti(s, field.into());
    Ok(classify_with(&table, &global))
}

/// Verdicts from a precomputed link table and the poset's own Betti numbers.
pub fn classify_with(table: &LinkTable, global: &BettiVector) -> Classification {
    let n = table.n as isize;
    let mut witnesses = buchsbaum_witnesses(table);
    let buchsbaum = witnesses.is_empty();

    let mut cm_failures = Vec::new();
    for (k, &b) in global.reduced.iter().enumerate() {
        let degree = k as isize - 1;
        if b != 0 && degree != n - 1 {
            cm_failures.push(Witness {
                property: Property::CohenMacaulay,
                element: None,
                degree,
                betti: b,
            });
        }
    }
    let cohen_macaulay = buchsbaum && cm_failures.is_empty();

    let mut hm_failures = Vec::new();
    for row in &table.rows {
        let top = table.top_degree(row.rank);
        let b = row.betti.reduced(top);
        if b != 1 {
            hm_failures.push(Witness {
                property: Property::HomologyManifold,
                element: Some(row.element.clone()),
                degree: top,
                betti: b,
            });
        }
    }
    let homology_manifold = buchsbaum && hm_failures.is_empty();

    let top = global.reduced(n - 1);
    let orientable_over_field = top == 1;

    witnesses.extend(cm_failures);
    witnesses.extend(hm_failures);
    if !orientable_over_field {
        witnesses.push(Witness {
            property: Property::Orientable,
            element: None,
            degree: n - 1,
            betti: top,
        });
    }
    Classification {
        field: table.field,
        buchsbaum,
        cohen_macaulay,
        homology_manifold,
        orientable_over_field,
        witnesses,
    }
}

/// Field-dependence that universal coefficients forbids: a Buchsbaum or
/// Cohen–Macaulay failure over ℚ that disappears over `𝔽_p`.
pub fn field_anomalies(over_q: &Classification, over_p: &Classification) -> Vec<Property> {
    let mut out = Vec::new();
    if !over_q.buchsbaum && over_p.buchsbaum {
        out.push(Property::Buchsbaum);
    }
    if !over_q.cohen_macaulay && over_p.cohen_macaulay {
        out.push(Property::CohenMacaulay);
    }
    out
}
