use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.as_ref().len(), ncols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Self { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Invariant factors `d_1 | d_2 | … | d_r` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub factors: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// Number of factors not divisible by `p`, i.e. the rank mod `p`.
    pub fn rank_mod(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.factors.iter().filter(|d| !(*d % &p).is_zero()).count()
    }
}

/// Smith normal form over ℤ with arbitrary-precision entries.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (nr, nc) = (m.nrows, m.ncols);
    let mut a: Vec<Vec<BigInt>> = (0..nr)
        .map(|r| m.row(r).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut factors = Vec::new();

    for t in 0..nr.min(nc) {
        let Some((pr, pc)) = min_abs_nonzero(&a, t..nr, t..nc) else {
            break;
        };
        a.swap(t, pr);
        swap_cols(&mut a, t, pc);

        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                axpy_row(&mut rest[0], &top[t], &q, t);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Bring the smallest remainder into the pivot and go again.
                let mut best: Option<(usize, usize)> = None;
                let mut best_abs: Option<BigInt> = Some(a[t][t].abs());
                for i in t + 1..nr {
                    if !a[i][t].is_zero() && Some(a[i][t].abs()) < best_abs {
                        best_abs = Some(a[i][t].abs());
                        best = Some((i, t));
                    }
                }
                for j in t + 1..nc {
                    if !a[t][j].is_zero() && Some(a[t][j].abs()) < best_abs {
                        best_abs = Some(a[t][j].abs());
                        best = Some((t, j));
                    }
                }
                match best {
                    Some((i, j)) if j == t => a.swap(t, i),
                    Some((_, j)) => swap_cols(&mut a, t, j),
                    None => {}
                }
                continue;
            }
            // Pivot must divide the remaining block.
            let pivot = a[t][t].clone();
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    let (top, rest) = a.split_at_mut(i);
                    // row_t += row_i
                    let src = rest[0].clone();
                    axpy_row(&mut top[t], &src, &-one, t);
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    SnfResult { factors }
}

fn min_abs_nonzero(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &a[i][j];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| av < *b) {
                let unit = av.is_one();
                best = Some((i, j, av));
                if unit {
                    let (i, j, _) = best.unwrap();
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// `dst -= q * src`, touching columns from `from` on.
fn axpy_row(dst: &mut [BigInt], src: &[BigInt], q: &BigInt, from: usize) {
    for (d, s) in dst.iter_mut().zip(src).skip(from) {
        if !s.is_zero() {
            *d -= s * q;
        }
    }
}

/// Rank over `𝔽_p` by Gaussian elimination on residues.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let p128 = p as i128;
    let mut a: Vec<Vec<u64>> = (0..m.nrows)
        .map(|r| {
            m.row(r)
                .iter()
                .map(|&x| (x as i128).rem_euclid(p128) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.ncols {
        let Some(piv) = (rank..m.nrows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inverse_mod(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..m.nrows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                let (pivot_row, row) = if r < rank {
                    let (lo, hi) = a.split_at_mut(rank);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[rank], &mut hi[0])
                };
                for (x, &y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        rank += 1;
        if rank == m.nrows {
            break;
        }
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows);
        smith_normal_form(&m)
            .factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(factors(&[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(factors(&[&[2, 0], &[0, 4]]), vec![2, 4]);
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[&[6, 4], &[4, 6]]), vec![2, 10]);
        assert!(smith_normal_form(&IntMatrix::zeros(0, 3)).factors.is_empty());
    }

    #[test]
    fn mod_p_ranks() {
        let m = IntMatrix::from_rows(&[[1i64, 0], [1, 2]]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        assert_eq!(rank_mod_p(&IntMatrix::zeros(3, 0), 5), 0);
    }

    fn det(m: &[Vec<i64>]) -> i128 {
        // Laplace expansion; test matrices are tiny.
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect())
            .collect()
    }

    /// d_1⋯d_k = gcd of all k×k minors.
    fn determinantal_divisors(rows: &[Vec<i64>]) -> Vec<i128> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let mut out = Vec::new();
        for k in 1..=nr.min(nc) {
            let mut g: i128 = 0;
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let minor: Vec<Vec<i64>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c]).collect()).collect();
                    g = g.gcd(&det(&minor));
                }
            }
            if g == 0 {
                break;
            }
            out.push(g);
        }
        out
    }

    proptest! {
        #[test]
        fn snf_matches_determinantal_divisors(
            rows in (1usize..4, 1usize..4).prop_flat_map(|(r, c)|
                prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
        ) {
            let m = IntMatrix::from_rows(&rows);
            let snf = smith_normal_form(&m);
            let d: Vec<i128> = snf.factors.iter().map(|x| i128::try_from(x).unwrap()).collect();
            for w in d.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            let mut prefix = Vec::new();
            let mut acc = 1i128;
            for x in &d {
                acc *= x;
                prefix.push(acc);
            }
            prop_assert_eq!(prefix, determinantal_divisors(&rows));
            for p in [2u64, 3, 5] {
                prop_assert_eq!(snf.rank_mod(p), rank_mod_p(&m, p));
            }
        }
    }
}
