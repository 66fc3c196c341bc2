use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        RationalMatrix { n, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }
}

/// Exact determinant. Rows are scaled to integers, then reduced by
/// fraction-free Bareiss elimination.
pub fn det_exact(m: &RationalMatrix) -> BigRational {
    let n = m.size();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row: Vec<&BigRational> = (0..n).map(|j| m.get(i, j)).collect();
            let lcm = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            scale *= &lcm;
            row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    BigRational::new(sign * &a[n - 1][n - 1], scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor(m: &[Vec<BigRational>]) -> BigRational {
        if m.is_empty() {
            return BigRational::one();
        }
        let mut total = BigRational::zero();
        for (c, v) in m[0].iter().enumerate() {
            let minor: Vec<Vec<BigRational>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = v * cofactor(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn small_determinants() {
        let id = RationalMatrix::from_fn(3, |i, j| BigRational::from_integer(((i == j) as i64).into()));
        assert_eq!(det_exact(&id), BigRational::one());
        let m = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(det_exact(&m), BigRational::from_integer((-2).into()));
        let v = RationalMatrix::from_i64(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]).unwrap();
        assert_eq!(det_exact(&v), BigRational::from_integer(2.into()));
        let singular = RationalMatrix::from_i64(&[&[0, 1], &[0, 3]]).unwrap();
        assert!(det_exact(&singular).is_zero());
        let pivot = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(det_exact(&pivot), BigRational::from_integer((-1).into()));
        assert!(RationalMatrix::from_i64(&[&[1, 2]]).is_err());
    }

    #[test]
    fn rational_entries_agree_with_cofactor_expansion() {
        let mut seed = 0x2545_f491_u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 19) as i64 - 9
        };
        for _ in 0..50 {
            let rows: Vec<Vec<BigRational>> = (0..4)
                .map(|_| {
                    (0..4)
                        .map(|_| {
                            let den = next().abs() + 1;
                            BigRational::new(next().into(), den.into())
                        })
                        .collect()
                })
                .collect();
            let m = RationalMatrix::new(rows.clone()).unwrap();
            assert_eq!(det_exact(&m), cofactor(&rows));
        }
    }
}
