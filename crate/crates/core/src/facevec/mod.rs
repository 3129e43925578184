//! f-, h-, h'- and h''-vectors, ft-numbers, and the identities relating them.
//!
//! All vectors are indexed from their first entry: `f[0] = f_{-1}`,
//! `h[i] = h_i` for `0 ≤ i ≤ n`, `ft[i] = ft_i` for `0 ≤ i ≤ n - 1`.

mod poly;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify_with, link_table, Classification, ClassifyError, LinkTable};
use crate::homology::{reduced_betti, BettiVector, Field};
use crate::poset::SimplicialPoset;

pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaceVecError {
    #[error("poset is not pure")]
    NotPure,
}

fn pure_table(s: &SimplicialPoset, field: Field) -> Result<LinkTable, FaceVecError> {
    link_table(s, field).map_err(|e| match e {
        ClassifyError::NotPure | ClassifyError::NotConnected => FaceVecError::NotPure,
    })
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FhVectors {
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub chi: i64,
    pub chitilde: i64,
}

pub fn f_h_vectors(s: &SimplicialPoset) -> Result<FhVectors, FaceVecError> {
    if !s.is_pure() {
        return Err(FaceVecError::NotPure);
    }
    let f: Vec<i64> = s.f_vector().into_iter().map(|x| x as i64).collect();
    let h = h_from_f(&f);
    let chi = euler_characteristic(&f);
    Ok(FhVectors {
        f,
        h,
        chi,
        chitilde: chi - 1,
    })
}

/// `Σ h_i t^i = Σ f_{i-1} t^i (1-t)^{n-i}`.
pub fn h_from_f(f: &[i64]) -> Vec<i64> {
    let n = f.len() - 1;
    let one_minus_t = Poly::linear(1, -1);
    let t = Poly::linear(0, 1);
    let p: Poly = f
        .iter()
        .enumerate()
        .map(|(i, &fi)| (&t.pow(i) * &one_minus_t.pow(n - i)).scale(fi))
        .sum();
    p.coeffs(n + 1)
}

/// `Σ_{i≥0} (-1)^i f_i`.
pub fn euler_characteristic(f: &[i64]) -> i64 {
    f.iter()
        .skip(1)
        .enumerate()
        .map(|(i, &x)| sign(i as i64) * x)
        .sum()
}

/// `ft_i = Σ_{dim I = i} dim H̃_{n-1-|I|}(lk I)`.
pub fn ft_vector(s: &SimplicialPoset, field: Field) -> Result<Vec<i64>, FaceVecError> {
    Ok(ft_from_table(&pure_table(s, field)?))
}

pub fn ft_from_table(table: &LinkTable) -> Vec<i64> {
    let mut ft = vec![0i64; table.n];
    for row in &table.rows {
        let top = table.top_degree(row.rank);
        ft[row.rank - 1] += row.betti.reduced(top) as i64;
    }
    ft
}

/// `(h', h'')` from `h` and the reduced Betti numbers of `S`.
pub fn h_primes(h: &[i64], betti: &BettiVector) -> (Vec<i64>, Vec<i64>) {
    let n = h.len() as i64 - 1;
    let b = |d: i64| betti.reduced(d as isize) as i64;
    let hprime: Vec<i64> = (0..=n)
        .map(|i| {
            let corr: i64 = (1..i).map(|j| sign(i - j - 1) * b(j - 1)).sum();
            h[i as usize] + binomial(n, i) * corr
        })
        .collect();
    let hdouble = (0..=n)
        .map(|i| {
            if i == n {
                hprime[i as usize]
            } else {
                hprime[i as usize] - binomial(n, i) * b(i - 1)
            }
        })
        .collect();
    (hprime, hdouble)
}

pub fn h_prime_double(
    s: &SimplicialPoset,
    field: Field,
) -> Result<(Vec<i64>, Vec<i64>), FaceVecError> {
    let fh = f_h_vectors(s)?;
    Ok(h_primes(&fh.h, &reduced_betti(s, field.into())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVectorReport {
    pub n: usize,
    pub field: Field,
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    pub ft: Vec<i64>,
    pub hprime: Vec<i64>,
    pub hdoubleprime: Vec<i64>,
    pub chi: i64,
    pub chitilde: i64,
    pub betti: BettiVector,
}

impl FaceVectorReport {
    pub fn new(s: &SimplicialPoset, field: Field) -> Result<Self, FaceVecError> {
        let table = pure_table(s, field)?;
        Ok(Self::with_table(s, &table))
    }

    fn with_table(s: &SimplicialPoset, table: &LinkTable) -> Self {
        let fh = f_h_vectors(s).expect("table exists only for pure posets");
        let betti = reduced_betti(s, table.field.into());
        let (hprime, hdoubleprime) = h_primes(&fh.h, &betti);
        FaceVectorReport {
            n: s.n(),
            field: table.field,
            f: fh.f,
            h: fh.h,
            ft: ft_from_table(table),
            hprime,
            hdoubleprime,
            chi: fh.chi,
            chitilde: fh.chitilde,
            betti,
        }
    }

    /// `f_S(t) = Σ_{i≥0} f_{i-1} t^i`.
    pub fn f_polynomial(&self) -> Poly {
        Poly::new(self.f.clone())
    }

    pub fn h_polynomial(&self) -> Poly {
        Poly::new(self.h.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> Option<bool> {
        match self {
            Verdict::Pass => Some(true),
            Verdict::Fail => Some(false),
            Verdict::Skipped(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub vectors: FaceVectorReport,
    pub classification: Classification,
    /// `f_S(t) = (1-χ) + (-1)^n Σ_k ft_k (-t-1)^{k+1}`.
    pub face_polynomial_from_ft: Verdict,
    /// `Σ h_i t^i = (1-t)^n (1-χ) + Σ_k ft_k (t-1)^{n-k-1}`.
    pub h_polynomial_from_ft: Verdict,
    /// The same identity read coefficientwise through binomials.
    pub h_coefficients_from_ft: Verdict,
    pub h_sum_is_facet_count: Verdict,
    pub h_zero_is_one: Verdict,
    /// `h_n = (-1)^{n-1} χ̃`.
    pub h_top_is_reduced_euler: Verdict,
    /// `h'_n = b̃_{n-1}`.
    pub h_prime_top_is_top_betti: Verdict,
    /// `h_i = h_{n-i} + (-1)^i C(n,i) (1 - (-1)^n - χ)` for homology manifolds.
    pub dehn_sommerville: Verdict,
    /// `h''_i = h''_{n-i}` for homology manifolds orientable over the field.
    pub h_double_prime_symmetric: Verdict,
    /// `h''_i ≥ 0` for Buchsbaum posets.
    pub h_double_prime_nonnegative: Verdict,
}

impl IdentityReport {
    pub fn checks(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("face_polynomial_from_ft", &self.face_polynomial_from_ft),
            ("h_polynomial_from_ft", &self.h_polynomial_from_ft),
            ("h_coefficients_from_ft", &self.h_coefficients_from_ft),
            ("h_sum_is_facet_count", &self.h_sum_is_facet_count),
            ("h_zero_is_one", &self.h_zero_is_one),
            ("h_top_is_reduced_euler", &self.h_top_is_reduced_euler),
            ("h_prime_top_is_top_betti", &self.h_prime_top_is_top_betti),
            ("dehn_sommerville", &self.dehn_sommerville),
            ("h_double_prime_symmetric", &self.h_double_prime_symmetric),
            ("h_double_prime_nonnegative", &self.h_double_prime_nonnegative),
        ]
    }

    /// True when nothing failed (skips are fine).
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, v)| v.passed() != Some(false))
    }
}

pub fn identity_report(s: &SimplicialPoset, field: Field) -> Result<IdentityReport, FaceVecError> {
    let table = pure_table(s, field)?;
    let r = FaceVectorReport::with_table(s, &table);
    let classification = classify_with(&table, &r.betti);
    let n = r.n as i64;
    let nu = r.n;

    // Sum over k of ft_k (-t-1)^{k+1}.
    let minus_t_minus_one = Poly::linear(-1, -1);
    let tail: Poly = r
        .ft
        .iter()
        .enumerate()
        .map(|(k, &x)| minus_t_minus_one.pow(k + 1).scale(x))
        .sum();
    let rhs = &Poly::constant(1 - r.chi) + &tail.scale(sign(n));
    let face_polynomial_from_ft = Verdict::from_bool(r.f_polynomial() == rhs);

    let t_minus_one = Poly::linear(-1, 1);
    let ft_part: Poly = r
        .ft
        .iter()
        .enumerate()
        .map(|(k, &x)| t_minus_one.pow(nu - k - 1).scale(x))
        .sum();
    let rhs = &Poly::linear(1, -1).pow(nu).scale(1 - r.chi) + &ft_part;
    let h_polynomial_from_ft = Verdict::from_bool(r.h_polynomial() == rhs);

    let coefficients_ok = (0..=n).all(|i| {
        let mut v = (1 - r.chi) * sign(i) * binomial(n, i);
        for (k, &x) in r.ft.iter().enumerate() {
            let k = k as i64;
            v += sign(n - k - i - 1) * binomial(n - k - 1, i) * x;
        }
        v == r.h[i as usize]
    });
    let h_coefficients_from_ft = Verdict::from_bool(coefficients_ok);

    let h_sum_is_facet_count = Verdict::from_bool(r.h.iter().sum::<i64>() == r.f[nu]);
    let h_zero_is_one = Verdict::from_bool(r.h[0] == 1);
    let h_top_is_reduced_euler = Verdict::from_bool(r.h[nu] == sign(n - 1) * r.chitilde);
    let h_prime_top_is_top_betti =
        Verdict::from_bool(r.hprime[nu] == r.betti.reduced(n as isize - 1) as i64);

    let dehn_sommerville = if classification.homology_manifold {
        let c = 1 - sign(n) - r.chi;
        Verdict::from_bool(
            (0..=n).all(|i| r.h[i as usize] == r.h[(n - i) as usize] + sign(i) * binomial(n, i) * c),
        )
    } else {
        Verdict::Skipped("not a homology manifold".into())
    };
    let h_double_prime_symmetric = if !classification.homology_manifold {
        Verdict::Skipped("not a homology manifold".into())
    } else if !classification.orientable_over_field {
        Verdict::Skipped("not orientable over the field".into())
    } else {
        Verdict::from_bool((0..=nu).all(|i| r.hdoubleprime[i] == r.hdoubleprime[nu - i]))
    };
    let h_double_prime_nonnegative = if classification.buchsbaum {
        Verdict::from_bool(r.hdoubleprime.iter().all(|&x| x >= 0))
    } else {
        Verdict::Skipped("not Buchsbaum".into())
    };

    Ok(IdentityReport {
        vectors: r,
        classification,
        face_polynomial_from_ft,
        h_polynomial_from_ft,
        h_coefficients_from_ft,
        h_sum_is_facet_count,
        h_zero_is_one,
        h_top_is_reduced_euler,
        h_prime_top_is_top_betti,
        dehn_sommerville,
        h_double_prime_symmetric,
        h_double_prime_nonnegative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus;

    const Q: Field = Field::Rationals;

    /// h-vector by brute force: count, for every face F of dimension i-1,
    /// its contribution f_{i-1} t^i (1-t)^{n-i} expanded via binomials.
    fn h_oracle(f: &[i64]) -> Vec<i64> {
        let n = f.len() - 1;
        let mut h = vec![0i64; n + 1];
        for (i, &fi) in f.iter().enumerate() {
            for j in 0..=n - i {
                h[i + j] += fi * binomial((n - i) as i64, j as i64) * if j % 2 == 0 { 1 } else { -1 };
            }
        }
        h
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn triangle_boundary() {
        let fh = f_h_vectors(&corpus("boundary_simplex(2)").unwrap()).unwrap();
        assert_eq!(fh.f, vec![1, 3, 3]);
        assert_eq!(fh.h, vec![1, 1, 1]);
        assert_eq!((fh.chi, fh.chitilde), (0, -1));
        let (hp, hpp) = h_prime_double(&corpus("boundary_simplex(2)").unwrap(), Q).unwrap();
        assert_eq!(hp, vec![1, 1, 1]);
        assert_eq!(hpp, vec![1, 1, 1]);
        assert_eq!(ft_vector(&corpus("boundary_simplex(2)").unwrap(), Q).unwrap(), vec![3, 3]);
    }

    #[test]
    fn torus() {
        let s = corpus("torus7").unwrap();
        let fh = f_h_vectors(&s).unwrap();
        assert_eq!(fh.h, vec![1, 4, 10, -1]);
        assert_eq!(fh.h, h_oracle(&fh.f));
        assert_eq!(fh.chi, 0);
        assert_eq!(ft_vector(&s, Q).unwrap(), vec![7, 21, 14]);
        let (hp, hpp) = h_prime_double(&s, Q).unwrap();
        assert_eq!(hp, vec![1, 4, 10, 1]);
        assert_eq!(hpp, vec![1, 4, 4, 1]);
    }

    #[test]
    fn projective_plane() {
        let s = corpus("rp2_6").unwrap();
        let fh = f_h_vectors(&s).unwrap();
        assert_eq!(fh.f, vec![1, 6, 15, 10]);
        assert_eq!(fh.h, vec![1, 3, 6, 0]);
        assert_eq!(fh.chitilde, 0);
        let (hp, hpp) = h_prime_double(&s, Q).unwrap();
        assert_eq!(hp, fh.h);
        assert_eq!(hpp, fh.h);
        let (_, hpp2) = h_prime_double(&s, Field::fp(2).unwrap()).unwrap();
        assert_eq!(hpp2, vec![1, 3, 3, 1]);
    }

    #[test]
    fn full_triangle_ft() {
        let s = corpus("simplex(2)").unwrap();
        assert_eq!(ft_vector(&s, Q).unwrap(), vec![0, 0, 1]);
        let r = identity_report(&s, Q).unwrap();
        assert_eq!(r.face_polynomial_from_ft, Verdict::Pass);
        assert_eq!(r.h_polynomial_from_ft, Verdict::Pass);
        assert_eq!(r.h_coefficients_from_ft, Verdict::Pass);
        assert!(matches!(r.dehn_sommerville, Verdict::Skipped(_)));
    }

    #[test]
    fn torus_identities() {
        let r = identity_report(&corpus("torus7").unwrap(), Q).unwrap();
        assert!(r.all_pass());
        assert!(r.checks().iter().all(|(_, v)| **v == Verdict::Pass), "{r:#?}");
    }

    #[test]
    fn triangle_boundary_identities() {
        let r = identity_report(&corpus("boundary_simplex(2)").unwrap(), Q).unwrap();
        assert!(r.checks().iter().all(|(_, v)| **v == Verdict::Pass));
    }

    #[test]
    fn not_pure() {
        let s = SimplicialPoset::from_facets(vec![vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert_eq!(f_h_vectors(&s), Err(FaceVecError::NotPure));
        assert_eq!(ft_vector(&s, Q), Err(FaceVecError::NotPure));
        assert!(identity_report(&s, Q).is_err());
    }
}
