use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_partitions, BoxDims};

/// Polynomial in `q`; `coeffs[k]` is the coefficient of `q^k`. Trailing zeros
/// are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `1 - q^h`.
    pub fn one_minus_q_pow(h: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); h + 1];
        coeffs[0] += 1;
        coeffs[h] -= 1;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplies in place by `1 - q^h`.
    pub fn mul_one_minus_q_pow(&mut self, h: usize) {
        let len = self.coeffs.len();
        self.coeffs.resize(len + h, BigInt::zero());
        for k in (h..len + h).rev() {
            let shifted = self.coeffs[k - h].clone();
            self.coeffs[k] -= shifted;
        }
        self.trim();
    }

    /// Exact division by `1 - q^h`, failing on a non-zero remainder.
    pub fn div_one_minus_q_pow(&self, h: usize) -> Result<Self> {
        if h == 0 {
            return Err(Error::InexactDivision(0));
        }
        let Some(deg) = self.degree() else {
            return Ok(Self::default());
        };
        if deg < h {
            return Err(Error::InexactDivision(h));
        }
        let mut quotient = vec![BigInt::zero(); deg - h + 1];
        for k in 0..quotient.len() {
            let mut v = self.coeffs[k].clone();
            if k >= h {
                v += &quotient[k - h];
            }
            quotient[k] = v;
        }
        let q = Self::new(quotient);
        let mut check = q.clone();
        check.mul_one_minus_q_pow(h);
        if &check != self {
            return Err(Error::InexactDivision(h));
        }
        Ok(q)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                _ if c.abs().is_one() => {
                    let sign = if c.is_negative() { "-" } else { "" };
                    if k == 1 {
                        format!("{sign}q")
                    } else {
                        format!("{sign}q^{k}")
                    }
                }
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// `∏ (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2})` over the `(a,b,c)`-box, with equal
/// exponents cancelled first and the remaining divisions carried out exactly.
pub fn macmahon_box_q(a: usize, b: usize, c: usize) -> Result<QPolynomial> {
    let mut balance: BTreeMap<usize, i64> = BTreeMap::new();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                *balance.entry(i + j + k - 1).or_default() += 1;
                *balance.entry(i + j + k - 2).or_default() -= 1;
            }
        }
    }
    let mut p = QPolynomial::one();
    for (&h, &m) in &balance {
        for _ in 0..m.max(0) {
            p.mul_one_minus_q_pow(h);
        }
    }
    for (&h, &m) in &balance {
        for _ in 0..(-m).max(0) {
            p = p.div_one_minus_q_pow(h)?;
        }
    }
    Ok(p)
}

/// `Σ q^{|π|}` over all plane partitions in the `(a,b,c)`-box, by enumeration.
pub fn q_count_box(a: usize, b: usize, c: usize) -> Result<QPolynomial> {
    if [a, b, c].contains(&0) {
        return Ok(QPolynomial::one());
    }
    let bx = BoxDims::new(vec![a, b, c])?;
    let mut coeffs = vec![BigInt::zero(); a * b * c + 1];
    for p in enumerate_partitions(&bx) {
        coeffs[p.size() as usize] += 1;
    }
    Ok(QPolynomial::new(coeffs))
}
