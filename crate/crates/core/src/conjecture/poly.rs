use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// `(Σ numerators[k] x^k) / denominator`.
    pub fn from_scaled(numerators: &[i64], denominator: i64) -> Self {
        let d = BigInt::from(denominator);
        Self::new(
            numerators
                .iter()
                .map(|&n| BigRational::new(BigInt::from(n), d.clone()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `p(x) = p(-x)`, i.e. every odd coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Least common denominator of the coefficients.
    pub fn common_denominator(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Self::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    fn mul_linear(&self, root: &BigRational) -> RatPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c * root;
        }
        Self::new(out)
    }

    fn scale(&self, s: &BigRational) -> RatPoly {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// The unique polynomial of degree below `points.len()` through `points`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RatPoly> {
        for (i, (x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(y, _)| y == x) {
                return Err(Error::Interpolation(format!("repeated node {x}")));
            }
        }
        let mut acc = RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = RatPoly::constant(BigRational::one());
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul_linear(xj);
                    denom *= xi - xj;
                }
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        Ok(acc)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "c")?,
                _ => write!(f, "c^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn evaluation_and_parity() {
        let p = RatPoly::from_scaled(&[-2, 0, 1], 7);
        assert_eq!(p.eval(&rat(3)), rat(1));
        assert!(p.is_even());
        assert!(!RatPoly::from_scaled(&[0, 2], 3).is_even());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(RatPoly::from_scaled(&[0, 0], 1).degree(), None);
        assert_eq!(p.common_denominator(), BigInt::from(7));
        assert_eq!(p.to_string(), "1/7*c^2 - 2/7");
        assert_eq!(RatPoly::from_scaled(&[1, -1], 1).to_string(), "-c + 1");
    }

    #[test]
    fn interpolation_recovers_known_polynomial() {
        let p = RatPoly::from_scaled(&[756000, 0, -310644, 0, -14473, 0, -8206, 0, 683], 122522400);
        let points: Vec<_> = (0..9).map(|k| (rat(k), p.eval(&rat(k)))).collect();
        assert_eq!(RatPoly::interpolate(&points).unwrap(), p);
        let dup = vec![(rat(1), rat(1)), (rat(1), rat(2))];
        assert!(RatPoly::interpolate(&dup).is_err());
    }
}
