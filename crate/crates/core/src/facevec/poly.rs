use std::ops::{Add, Mul, Neg, Sub};

/// Dense integer polynomial in one variable, lowest degree first, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(vec![c])
    }

    /// `a + b·t`.
    pub fn linear(a: i64, b: i64) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Poly::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i64) -> Self {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Coefficients `0..len`, zero-padded.
    pub fn coeffs(&self, len: usize) -> Vec<i64> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Poly::default();
        }
        let mut out = vec![0i64; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::default(), |acc, p| &acc + &p)
    }
}
