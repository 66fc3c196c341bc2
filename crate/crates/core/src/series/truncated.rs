use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multivariate power series with integer coefficients, truncated at a total
/// degree. Terms iterate in lexicographic exponent order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SeriesJson", try_from = "SeriesJson")]
pub struct TruncatedSeries {
    vars: usize,
    cap: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    vars: usize,
    cap: usize,
    terms: Vec<TermJson>,
}

impl From<TruncatedSeries> for SeriesJson {
    fn from(s: TruncatedSeries) -> Self {
        SeriesJson {
            vars: s.vars,
            cap: s.cap,
            terms: s
                .terms
                .into_iter()
                .map(|(exp, c)| TermJson {
                    exp,
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        let mut s = TruncatedSeries::zero(j.vars, j.cap);
        for t in j.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {:?}", t.coeff)))?;
            s.add_term(t.exp, c)?;
        }
        Ok(s)
    }
}

fn degree(exp: &[usize]) -> usize {
    exp.iter().sum()
}

impl TruncatedSeries {
    pub fn zero(vars: usize, cap: usize) -> Self {
        TruncatedSeries {
            vars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize, cap: usize) -> Self {
        let mut s = Self::zero(vars, cap);
        s.terms.insert(vec![0; vars], BigInt::one());
        s
    }

    /// A single variable `x_k`, 0-based.
    pub fn var(vars: usize, cap: usize, k: usize) -> Self {
        let mut exp = vec![0; vars];
        exp[k] = 1;
        Self::from_terms(vars, cap, [(exp, BigInt::one())]).expect("valid exponent")
    }

    /// Builds a series from terms, dropping those above the cap.
    pub fn from_terms(
        vars: usize,
        cap: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, BigInt)>,
    ) -> Result<Self> {
        let mut s = Self::zero(vars, cap);
        for (exp, c) in terms {
            s.add_term(exp, c)?;
        }
        Ok(s)
    }

    fn add_term(&mut self, exp: Vec<usize>, c: BigInt) -> Result<()> {
        if exp.len() != self.vars {
            return Err(Error::SeriesMismatch(format!(
                "exponent {exp:?} has {} components, expected {}",
                exp.len(),
                self.vars
            )));
        }
        if degree(&exp) > self.cap || c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeff(&self, exp: &[usize]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars || self.cap != other.cap {
            return Err(Error::SeriesMismatch(format!(
                "({} vars, cap {}) vs ({} vars, cap {})",
                self.vars, self.cap, other.vars, other.cap
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            vars: self.vars,
            cap: self.cap,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.vars, self.cap);
        }
        TruncatedSeries {
            vars: self.vars,
            cap: self.cap,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da = degree(ea);
            for (eb, cb) in &other.terms {
                if da + degree(eb) > self.cap {
                    continue;
                }
                let exp: Vec<usize> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(exp).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries {
            vars: self.vars,
            cap: self.cap,
            terms: acc,
        })
    }

    /// `1 / S` for a series with constant term 1, solved degree by degree.
    pub fn geometric_inverse(&self) -> Result<Self> {
        let constant = self.coeff(&vec![0; self.vars]);
        if !constant.is_one() {
            return Err(Error::NotInvertible(constant.to_string()));
        }
        let by_degree = |s: &BTreeMap<Vec<usize>, BigInt>| {
            let mut layers: Vec<Vec<(Vec<usize>, BigInt)>> = vec![Vec::new(); self.cap + 1];
            for (e, c) in s {
                layers[degree(e)].push((e.clone(), c.clone()));
            }
            layers
        };
        let tail = by_degree(&self.terms);
        let mut inverse: Vec<BTreeMap<Vec<usize>, BigInt>> = vec![BTreeMap::new(); self.cap + 1];
        inverse[0].insert(vec![0; self.vars], BigInt::one());
        for g in 1..=self.cap {
            let mut layer: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
            for (s, terms) in tail.iter().enumerate().take(g + 1).skip(1) {
                for (es, cs) in terms {
                    for (et, ct) in &inverse[g - s] {
                        let exp: Vec<usize> = es.iter().zip(et).map(|(a, b)| a + b).collect();
                        *layer.entry(exp).or_insert_with(BigInt::zero) -= cs * ct;
                    }
                }
            }
            layer.retain(|_, c| !c.is_zero());
            inverse[g] = layer;
        }
        Ok(TruncatedSeries {
            vars: self.vars,
            cap: self.cap,
            terms: inverse.into_iter().flatten().collect(),
        })
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O(deg {})", self.cap + 1);
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            let monomial: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| if e == 1 { format!("x{}", k + 1) } else { format!("x{}^{e}", k + 1) })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (monomial.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", monomial.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", monomial.join("*"))?,
            }
        }
        write!(f, " + O(deg {})", self.cap + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn one_over_one_minus_x() {
        let s = TruncatedSeries::one(1, 3).sub(&TruncatedSeries::var(1, 3, 0)).unwrap();
        let inv = s.geometric_inverse().unwrap();
        for k in 0..=3 {
            assert_eq!(inv.coeff(&[k]), big(1));
        }
        assert_eq!(inv.len(), 4);
    }

    #[test]
    fn one_over_one_minus_x_minus_y() {
        let s = TruncatedSeries::one(2, 4)
            .sub(&TruncatedSeries::var(2, 4, 0))
            .unwrap()
            .sub(&TruncatedSeries::var(2, 4, 1))
            .unwrap();
        let inv = s.geometric_inverse().unwrap();
        assert_eq!(inv.coeff(&[1, 1]), big(2));
        assert_eq!(inv.coeff(&[2, 2]), big(6));
        assert_eq!(s.mul(&inv).unwrap(), TruncatedSeries::one(2, 4));
    }

    #[test]
    fn inverse_requires_unit_constant() {
        let s = TruncatedSeries::from_terms(1, 3, [(vec![0], big(2))]).unwrap();
        assert!(matches!(s.geometric_inverse(), Err(Error::NotInvertible(_))));
        assert!(TruncatedSeries::zero(1, 3).geometric_inverse().is_err());
    }

    #[test]
    fn mismatched_arguments() {
        let a = TruncatedSeries::one(2, 3);
        assert!(a.add(&TruncatedSeries::one(2, 4)).is_err());
        assert!(a.mul(&TruncatedSeries::one(3, 3)).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = TruncatedSeries::var(2, 3, 0);
        assert!(x.sub(&x).unwrap().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let s = TruncatedSeries::from_terms(2, 5, [(vec![1, 2], big(-7)), (vec![0, 0], big(1))]).unwrap();
        let json = s.to_json();
        assert!(json.contains("\"coeff\":\"-7\""));
        assert!(json.contains("\"vars\":2"));
        assert_eq!(TruncatedSeries::from_json(&json).unwrap(), s);
        assert_eq!(s.to_string(), "1 - 7*x1*x2^2 + O(deg 6)");
    }
}
