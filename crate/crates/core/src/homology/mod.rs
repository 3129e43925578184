//! Cellular homology of simplicial posets.
//!
//! Every element of `S` is one cell; the boundary of `I` is
//! `Σ_j (-1)^j · facet_j(I)`, which squares to zero because each lower
//! interval is Boolean. The chain complex is augmented by `0̂` in degree `-1`,
//! so everything computed here is reduced homology.

mod matrix;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::poset::SimplicialPoset;

pub use matrix::{rank_mod_p, smith_normal_form, IntMatrix, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoefficientError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("integer coefficients given where a field is required")]
    NonFieldCoefficients,
    #[error("cannot parse coefficient spec `{0}` (expected q, z or fp:<p>)")]
    Parse(String),
}

/// A prime modulus; construction checks primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, CoefficientError> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if prime && p < (1 << 32) {
            Ok(Self(p))
        } else {
            Err(CoefficientError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Ground field for ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(Prime),
}

impl Field {
    pub fn fp(p: u64) -> Result<Self, CoefficientError> {
        Prime::new(p).map(Field::Prime)
    }

    pub fn rank(self, m: &IntMatrix) -> usize {
        match self {
            Field::Rationals => smith_normal_form(m).rank(),
            Field::Prime(p) => rank_mod_p(m, p.get()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    PrimeField(Prime),
}

impl Coefficients {
    pub fn fp(p: u64) -> Result<Self, CoefficientError> {
        Prime::new(p).map(Coefficients::PrimeField)
    }

    pub fn field(self) -> Option<Field> {
        match self {
            Coefficients::Integers => None,
            Coefficients::Rationals => Some(Field::Rationals),
            Coefficients::PrimeField(p) => Some(Field::Prime(p)),
        }
    }
}

impl From<Field> for Coefficients {
    fn from(f: Field) -> Self {
        match f {
            Field::Rationals => Coefficients::Rationals,
            Field::Prime(p) => Coefficients::PrimeField(p),
        }
    }
}

impl TryFrom<Coefficients> for Field {
    type Error = CoefficientError;

    fn try_from(c: Coefficients) -> Result<Self, Self::Error> {
        c.field().ok_or(CoefficientError::NonFieldCoefficients)
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "z"),
            Coefficients::Rationals => write!(f, "q"),
            Coefficients::PrimeField(p) => write!(f, "fp:{}", p.get()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Coefficients::from(*self).fmt(f)
    }
}

impl FromStr for Coefficients {
    type Err = CoefficientError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "z" | "Z" => Ok(Coefficients::Integers),
            "q" | "Q" => Ok(Coefficients::Rationals),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| CoefficientError::Parse(other.to_string()))?;
                Coefficients::fp(p)
            }
        }
    }
}

impl FromStr for Field {
    type Err = CoefficientError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Coefficients::from_str(s)?.try_into()
    }
}

macro_rules! serde_via_display {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_display!(Coefficients);
serde_via_display!(Field);

/// Augmented cellular chain complex of a poset.
#[derive(Debug, Clone)]
pub struct ChainData {
    /// `generators[r]` lists the elements of rank `r`; rank 0 is `0̂` alone.
    pub generators: Vec<Vec<usize>>,
    /// `boundaries[r - 1]` is `D_r`: rank-`r` cells → rank-`(r-1)` cells, one
    /// column per source generator.
    pub boundaries: Vec<IntMatrix>,
}

impl ChainData {
    pub fn boundary(&self, rank: usize) -> Option<&IntMatrix> {
        rank.checked_sub(1).and_then(|r| self.boundaries.get(r))
    }

    /// `D_{r-1} · D_r = 0` for every `r`.
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].ncols() == 0 || w[1].ncols() == 0 || w[0].mul(&w[1]).is_zero())
    }
}

pub fn boundary_matrices(s: &SimplicialPoset) -> ChainData {
    let n = s.n();
    let mut generators: Vec<Vec<usize>> = vec![vec![usize::MAX]];
    let mut position = vec![0usize; s.len()];
    for r in 1..=n {
        let g: Vec<usize> = s.of_rank(r).collect();
        for (k, &i) in g.iter().enumerate() {
            position[i] = k;
        }
        generators.push(g);
    }
    let mut boundaries = Vec::with_capacity(n);
    for r in 1..=n {
        let mut d = IntMatrix::zeros(generators[r - 1].len(), generators[r].len());
        for (col, &i) in generators[r].iter().enumerate() {
            let e = s.element(i);
            if r == 1 {
                d.set(0, col, 1);
            } else {
                for (j, &f) in e.facets.iter().enumerate() {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    d.set(position[f], col, sign);
                }
            }
        }
        boundaries.push(d);
    }
    ChainData {
        generators,
        boundaries,
    }
}

/// Reduced Betti numbers in degrees `-1..=dim`, plus integral torsion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub coeff: Coefficients,
    /// `reduced[d + 1] = b̃_d`.
    pub reduced: Vec<usize>,
    /// Torsion coefficients of `H̃_d(S; ℤ)`, same indexing; empty over a field.
    #[serde(with = "bigint_lists")]
    pub torsion: Vec<Vec<BigInt>>,
}

impl BettiVector {
    /// `b̃_d`, zero outside the stored range.
    pub fn reduced(&self, degree: isize) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.reduced.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Unreduced `β_d`.
    pub fn unreduced(&self, degree: isize) -> usize {
        let b = self.reduced(degree);
        if degree == 0 && self.reduced.len() > 1 {
            b + 1
        } else if degree == -1 {
            0
        } else {
            b
        }
    }

    pub fn torsion(&self, degree: isize) -> &[BigInt] {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|i| self.torsion.get(i))
            .map_or(&[], |v| v.as_slice())
    }

    /// Highest stored degree.
    pub fn top_degree(&self) -> isize {
        self.reduced.len() as isize - 2
    }

    /// `Σ (-1)^d β_d`.
    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.top_degree())
            .map(|d| {
                let b = self.unreduced(d) as i64;
                if d % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }
}

pub fn reduced_betti(s: &SimplicialPoset, coeff: Coefficients) -> BettiVector {
    let chains = boundary_matrices(s);
    let n = s.n();
    // ranks[r] = rank D_r, with D_0 and D_{n+1} zero.
    let mut ranks = vec![0usize; n + 2];
    let mut torsion_of: Vec<Vec<BigInt>> = vec![Vec::new(); n + 2];
    for r in 1..=n {
        let d = &chains.boundaries[r - 1];
        match coeff {
            Coefficients::Integers => {
                let snf = smith_normal_form(d);
                ranks[r] = snf.rank();
                torsion_of[r] = snf.torsion();
            }
            Coefficients::Rationals => ranks[r] = smith_normal_form(d).rank(),
            Coefficients::PrimeField(p) => ranks[r] = rank_mod_p(d, p.get()),
        }
    }
    let reduced = (0..=n)
        .map(|r| chains.generators[r].len() - ranks[r] - ranks[r + 1])
        .collect();
    let torsion = if coeff == Coefficients::Integers {
        // Torsion of H̃ at rank r comes from the image of D_{r+1}.
        (0..=n).map(|r| torsion_of[r + 1].clone()).collect()
    } else {
        Vec::new()
    };
    BettiVector {
        coeff,
        reduced,
        torsion,
    }
}

/// Cellular homology of `S` against simplicial homology of its subdivision.
pub fn betti_crosscheck(s: &SimplicialPoset, coeff: Coefficients) -> bool {
    reduced_betti(s, coeff) == reduced_betti(&s.barycentric(), coeff)
}

mod bigint_lists {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = v
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        serde::Serialize::serialize(&strings, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let strings: Vec<Vec<String>> = Vec::deserialize(d)?;
        strings
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| x.parse().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_boundary() -> SimplicialPoset {
        SimplicialPoset::from_facets([[1, 2], [1, 3], [2, 3]]).unwrap()
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("q".parse::<Coefficients>().unwrap(), Coefficients::Rationals);
        assert_eq!("z".parse::<Coefficients>().unwrap(), Coefficients::Integers);
        assert_eq!("fp:3".parse::<Coefficients>().unwrap(), Coefficients::fp(3).unwrap());
        assert_eq!("fp:4".parse::<Coefficients>(), Err(CoefficientError::NotPrime(4)));
        assert!("fp:x".parse::<Coefficients>().is_err());
        assert_eq!("z".parse::<Field>(), Err(CoefficientError::NonFieldCoefficients));
        assert_eq!(Coefficients::fp(7).unwrap().to_string(), "fp:7");
    }

    #[test]
    fn triangle_incidence() {
        let s = triangle_boundary();
        let c = boundary_matrices(&s);
        let d1 = c.boundary(2).unwrap();
        assert_eq!((d1.nrows(), d1.ncols()), (3, 3));
        assert_eq!(smith_normal_form(d1).rank(), 2);
        assert!(c.squares_to_zero());
    }

    #[test]
    fn single_vertex_has_no_edges() {
        let s = SimplicialPoset::from_facets([[0]]).unwrap();
        let c = boundary_matrices(&s);
        assert_eq!(c.boundaries.len(), 1);
        assert_eq!(reduced_betti(&s, Coefficients::Rationals).reduced, vec![0, 0]);
    }

    #[test]
    fn two_arc_boundary() {
        let s = crate::corpus::two_arc_circle();
        let c = boundary_matrices(&s);
        let d1 = c.boundary(2).unwrap();
        assert_eq!((d1.nrows(), d1.ncols()), (2, 2));
        for col in 0..2 {
            assert_eq!(d1.get(0, col), -1);
            assert_eq!(d1.get(1, col), 1);
        }
        assert_eq!(smith_normal_form(d1).rank(), 1);
    }

    #[test]
    fn betti_of_triangle_boundary() {
        let b = reduced_betti(&triangle_boundary(), Coefficients::Rationals);
        assert_eq!(b.reduced, vec![0, 0, 1]);
        assert_eq!(b.euler_characteristic(), 0);
        assert!(betti_crosscheck(&triangle_boundary(), Coefficients::Integers));
    }

    #[test]
    fn empty_link_has_minus_one_class() {
        let s = triangle_boundary();
        let lk = s.link(s.index_of("1,2").unwrap());
        let b = reduced_betti(&lk, Coefficients::Rationals);
        assert_eq!(b.reduced, vec![1]);
        assert_eq!(b.reduced(-1), 1);
    }
}
