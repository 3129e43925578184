//! Characteristic functions: primitive integer vectors on vertices that must
//! be independent (over a field) or span a direct summand (over ℤ) on every
//! simplex.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::{rank_mod_p, smith_normal_form, Coefficients, IntMatrix};
use crate::poset::SimplicialPoset;

pub const DEFAULT_ATTEMPTS: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharFnError {
    #[error("no vector assigned to vertex `{0}`")]
    MissingVertexAssignment(String),
    #[error("vector for `{vertex}` has length {found}, expected {expected}")]
    WrongVectorLength {
        vertex: String,
        expected: usize,
        found: usize,
    },
    #[error("vector for `{0}` is not primitive")]
    NotPrimitive(String),
    #[error("entry bound must be at least 1")]
    InvalidBound,
    #[error("poset has dimension {dim}, expected {expected}")]
    DimensionMismatch { dim: isize, expected: isize },
    #[error("no valid assignment after {attempts} attempts; simplex `{element}` failed most often")]
    BudgetExhausted { element: String, attempts: u64 },
}

/// Vertex name → primitive vector in `ℤ^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharFunction {
    n: usize,
    assignment: BTreeMap<String, Vec<i64>>,
}

impl CharFunction {
    pub fn new(n: usize, assignment: BTreeMap<String, Vec<i64>>) -> Result<Self, CharFnError> {
        for (v, vec) in &assignment {
            if vec.len() != n {
                return Err(CharFnError::WrongVectorLength {
                    vertex: v.clone(),
                    expected: n,
                    found: vec.len(),
                });
            }
            if vec.iter().fold(0i64, |g, x| g.gcd(x)) != 1 {
                return Err(CharFnError::NotPrimitive(v.clone()));
            }
        }
        Ok(Self { n, assignment })
    }

    /// Convenience for literal assignments.
    pub fn from_pairs<'a>(
        n: usize,
        pairs: impl IntoIterator<Item = (&'a str, Vec<i64>)>,
    ) -> Result<Self, CharFnError> {
        Self::new(n, pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn assignment(&self) -> &BTreeMap<String, Vec<i64>> {
        &self.assignment
    }

    pub fn get(&self, vertex: &str) -> Option<&[i64]> {
        self.assignment.get(vertex).map(|v| v.as_slice())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexVerdict {
    pub element: String,
    pub pass: bool,
    /// Over ℤ, the invariant factors of the vector matrix; over a field, empty.
    pub invariant_factors: Vec<String>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub coeff: Coefficients,
    pub pass: bool,
    pub verdicts: Vec<SimplexVerdict>,
}

impl CheckReport {
    pub fn first_failure(&self) -> Option<&SimplexVerdict> {
        self.verdicts.iter().find(|v| !v.pass)
    }

    pub fn verdict(&self, element: &str) -> Option<&SimplexVerdict> {
        self.verdicts.iter().find(|v| v.element == element)
    }
}

/// Per-simplex validity of `lambda` over `coeff`.
pub fn check(
    s: &SimplicialPoset,
    lambda: &CharFunction,
    coeff: Coefficients,
) -> Result<CheckReport, CharFnError> {
    for v in s.vertex_names() {
        if !lambda.assignment.contains_key(v) {
            return Err(CharFnError::MissingVertexAssignment(v.clone()));
        }
    }
    let verdicts: Vec<SimplexVerdict> = s
        .elements()
        .iter()
        .map(|e| {
            let rows: Vec<&[i64]> = e
                .vertices
                .iter()
                .map(|&v| lambda.assignment[&s.vertex_names()[v]].as_slice())
                .collect();
            simplex_verdict(&e.id, &rows, coeff)
        })
        .collect();
    Ok(CheckReport {
        coeff,
        pass: verdicts.iter().all(|v| v.pass),
        verdicts,
    })
}

fn simplex_verdict(element: &str, rows: &[&[i64]], coeff: Coefficients) -> SimplexVerdict {
    let k = rows.len();
    let m = IntMatrix::from_rows(rows);
    match coeff {
        Coefficients::Integers => {
            let snf = smith_normal_form(&m);
            let one = BigInt::from(1);
            let pass = snf.rank() == k && snf.factors.iter().all(|d| *d == one);
            SimplexVerdict {
                element: element.to_string(),
                pass,
                rank: snf.rank(),
                invariant_factors: snf.factors.iter().map(|d| d.to_string()).collect(),
            }
        }
        Coefficients::Rationals | Coefficients::PrimeField(_) => {
            let rank = match coeff {
                Coefficients::PrimeField(p) => rank_mod_p(&m, p.get()),
                _ => smith_normal_form(&m).rank(),
            };
            SimplexVerdict {
                element: element.to_string(),
                pass: rank == k,
                rank,
                invariant_factors: Vec::new(),
            }
        }
    }
}

/// Deterministic generator of candidate assignments: attempt `a` with seed
/// `s` always draws from the same ChaCha stream.
pub fn sample_assignment(s: &SimplicialPoset, n: usize, seed: u64, attempt: u64, bound: i64) -> CharFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    let assignment = s
        .vertex_names()
        .iter()
        .map(|v| {
            let vec = loop {
                let cand: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
                let g = cand.iter().fold(0i64, |g, x| g.gcd(x));
                if g != 0 {
                    break cand.into_iter().map(|x| x / g).collect();
                }
            };
            (v.clone(), vec)
        })
        .collect();
    CharFunction::new(n, assignment).expect("sampled vectors are primitive")
}

/// Seeded rejection sampling of a characteristic function valid over ℚ.
pub fn random_q_charfn(
    s: &SimplicialPoset,
    n: usize,
    seed: u64,
    bound: i64,
) -> Result<CharFunction, CharFnError> {
    random_q_charfn_with_budget(s, n, seed, bound, DEFAULT_ATTEMPTS)
}

pub fn random_q_charfn_with_budget(
    s: &SimplicialPoset,
    n: usize,
    seed: u64,
    bound: i64,
    attempts: u64,
) -> Result<CharFunction, CharFnError> {
    if bound < 1 {
        return Err(CharFnError::InvalidBound);
    }
    if s.dim() != n as isize - 1 {
        return Err(CharFnError::DimensionMismatch {
            dim: s.dim(),
            expected: n as isize - 1,
        });
    }
    let mut failures: BTreeMap<String, u64> = BTreeMap::new();
    for attempt in 0..attempts {
        let lambda = sample_assignment(s, n, seed, attempt, bound);
        let report = check(s, &lambda, Coefficients::Rationals)?;
        match report.first_failure() {
            None => return Ok(lambda),
            Some(v) => *failures.entry(v.element.clone()).or_default() += 1,
        }
    }
    let element = failures
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)))
        .map(|(e, _)| e)
        .unwrap_or_default();
    Err(CharFnError::BudgetExhausted { element, attempts })
}
