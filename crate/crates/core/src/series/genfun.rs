use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::truncated::TruncatedSeries;

/// Numerator of the FCP generating function after multiplying the bracket by
/// `x_1⋯x_{d+1}`, as `(exponent, coefficient)` pairs in `d+1` variables.
pub fn fcp_numerator(d: usize) -> Vec<(Vec<usize>, BigInt)> {
    let vars = d + 1;
    let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    let mut push = |exp: Vec<usize>, c: i64| {
        *acc.entry(exp).or_insert_with(BigInt::zero) += c;
    };
    for i in 0..vars {
        let mut inverse = vec![1; vars];
        inverse[i] = 0;
        push(inverse, 1);
        let mut times = vec![1; vars];
        times[i] = 2;
        push(times, d as i64);
        for j in 0..vars {
            let mut ratio = vec![1; vars];
            ratio[i] += 1;
            ratio[j] -= 1;
            push(ratio, -1);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `(1 - Σ x_i) ∏ (1 - x_i)` as a truncated series.
fn fcp_denominator(vars: usize, cap: usize) -> Result<TruncatedSeries> {
    let one = TruncatedSeries::one(vars, cap);
    let mut linear = one.clone();
    for k in 0..vars {
        linear = linear.sub(&TruncatedSeries::var(vars, cap, k))?;
    }
    let mut out = linear;
    for k in 0..vars {
        out = out.mul(&one.sub(&TruncatedSeries::var(vars, cap, k))?)?;
    }
    Ok(out)
}

/// The FCP generating function in `d+1` variables, truncated at total degree
/// `cap`.
pub fn expand_fcp_genfun(d: usize, cap: usize) -> Result<TruncatedSeries> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let vars = d + 1;
    let numerator = TruncatedSeries::from_terms(vars, cap, fcp_numerator(d))?;
    numerator.mul(&fcp_denominator(vars, cap)?.geometric_inverse()?)
}

/// `(x + y - 2x² - xy) / ((1 - x)(1 - 2x - y))`, truncated.
pub fn expand_qs_genfun(cap: usize) -> Result<TruncatedSeries> {
    let t = |exp: [usize; 2], c: i64| (exp.to_vec(), BigInt::from(c));
    let numerator = TruncatedSeries::from_terms(2, cap, [t([1, 0], 1), t([0, 1], 1), t([2, 0], -2), t([1, 1], -1)])?;
    let denominator = TruncatedSeries::from_terms(
        2,
        cap,
        [t([0, 0], 1), t([1, 0], -3), t([0, 1], -1), t([2, 0], 2), t([1, 1], 1)],
    )?;
    numerator.mul(&denominator.geometric_inverse()?)
}

/// Coefficients of `1 / ((1 - Σ x_i) ∏ (1 - x_i))` on a finite downward-closed
/// set of exponents. Lets single coefficients of the FCP series be read off at
/// exponents far beyond any practical total-degree cap.
#[derive(Debug, Clone)]
pub struct DenominatorTable {
    vars: usize,
    values: HashMap<Vec<usize>, BigInt>,
}

impl DenominatorTable {
    /// `member` must describe a finite downward-closed set containing the origin.
    pub fn build(vars: usize, member: impl Fn(&[usize]) -> bool) -> Self {
        let mut points: Vec<Vec<usize>> = Vec::new();
        let mut frontier = vec![vec![0; vars]];
        let mut seen = std::collections::HashSet::new();
        seen.insert(vec![0; vars]);
        while let Some(p) = frontier.pop() {
            for k in 0..vars {
                let mut q = p.clone();
                q[k] += 1;
                if member(&q) && seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
            points.push(p);
        }
        points.sort_by_key(|p| (p.iter().sum::<usize>(), p.clone()));

        let mut values: HashMap<Vec<usize>, BigInt> = HashMap::with_capacity(points.len());
        for p in &points {
            let v = if p.iter().all(|&x| x == 0) {
                BigInt::one()
            } else {
                let mut v = BigInt::zero();
                for k in 0..vars {
                    if p[k] > 0 {
                        let mut q = p.clone();
                        q[k] -= 1;
                        v += &values[&q];
                    }
                }
                v
            };
            values.insert(p.clone(), v);
        }
        for k in 0..vars {
            for p in &points {
                if p[k] > 0 {
                    let mut q = p.clone();
                    q[k] -= 1;
                    let below = values[&q].clone();
                    *values.get_mut(p).expect("member") += below;
                }
            }
        }
        DenominatorTable { vars, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, exp: &[usize]) -> Option<&BigInt> {
        self.values.get(exp)
    }

    /// Coefficient of `x^n` in the FCP series. `None` when a needed exponent
    /// lies outside the table.
    pub fn fcp_coefficient(&self, n: &[usize]) -> Option<BigInt> {
        if n.len() != self.vars {
            return None;
        }
        let mut total = BigInt::zero();
        for (exp, c) in fcp_numerator(self.vars - 1) {
            if exp.iter().zip(n).any(|(e, x)| e > x) {
                continue;
            }
            let shifted: Vec<usize> = n.iter().zip(&exp).map(|(x, e)| x - e).collect();
            total += c * self.values.get(&shifted)?;
        }
        Some(total)
    }
}
