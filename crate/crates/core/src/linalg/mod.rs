//! Exact rational determinants, the binomial determinants counting
//! quasi transpose-complementary plane partitions, the Krattenthaler product
//! evaluation and product-formula oracles.

mod det;

pub use det::{det_exact, RationalMatrix};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::BoxDims;
use crate::symmetry::{count_class, ClassTag, SymmetryClass};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn half(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

/// `r(r-1)⋯(r-k+1) / k!` for rational `r`.
pub fn rat_binomial(r: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= r - rat(i as i64);
        acc /= rat(i as i64 + 1);
    }
    acc
}

/// Integer binomial with the lattice-path convention: zero for a negative lower
/// index, the falling-factorial product otherwise.
pub fn binom(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 {
        return BigInt::zero();
    }
    rat_binomial(&rat(top), bottom as usize).to_integer()
}

fn factorial(x: &BigRational) -> Result<BigInt> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::NonIntegralFactorial(x.to_string()));
    }
    let n = x
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegralFactorial(x.to_string()))?;
    Ok((1..=n).fold(BigInt::one(), |acc, k| acc * k))
}

/// Rising factorial `(x)_k`.
fn pochhammer(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, i| acc * (x + rat(i as i64)))
}

fn integral(x: BigRational) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NotANaturalNumber(x.to_string()))
    }
}

/// The matrix `(C(n+ĉ+1-i, n+1+j-2i))_{i,j}`.
pub fn det1_matrix(n: usize, c_hat: usize) -> RationalMatrix {
    let (n, c) = (n as i64, c_hat as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        BigRational::from_integer(binom(n + c + 1 - i, n + 1 + j - 2 * i))
    })
}

/// `2^n det(C(n+ĉ+1-i, n+1+j-2i))`: weighted path count for odd height `2ĉ+1`.
pub fn det1(n: usize, c_hat: usize) -> BigInt {
    let d = integral(det_exact(&det1_matrix(n, c_hat))).expect("integer matrix");
    d << n
}

/// The matrix `(C(n+ĉ-i, n+j-2i) + 2 C(n+ĉ-i, n+j-2i+1))_{i,j}`.
pub fn det2_matrix(n: usize, c_hat: usize) -> RationalMatrix {
    let (n, c) = (n as i64, c_hat as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        BigRational::from_integer(binom(n + c - i, n + j - 2 * i) + 2 * binom(n + c - i, n + j - 2 * i + 1))
    })
}

pub fn det2(n: usize, c_hat: usize) -> BigInt {
    integral(det_exact(&det2_matrix(n, c_hat))).expect("integer matrix")
}

/// The single-binomial rewrite of the even-height determinant, with entries
/// `(n+2ĉ+1-j)/(n+ĉ+1-i) · C(n+ĉ+1-i, n+1+j-2i)`. Entrywise equal to the
/// matrix of [`det2_matrix`].
pub fn det3_matrix(n: usize, c_hat: usize) -> RationalMatrix {
    let (n, c) = (n as i64, c_hat as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        BigRational::new(BigInt::from(n + 2 * c + 1 - j), BigInt::from(n + c + 1 - i))
            * BigRational::from_integer(binom(n + c + 1 - i, n + 1 + j - 2 * i))
    })
}

/// The rewrite with entries `C(n+ĉ-i, n+j-2i)·(n+2ĉ-j+1)` in the form it is
/// usually quoted. It does not equal [`det2`] once `n ≥ 2`.
pub fn det3_printed_matrix(n: usize, c_hat: usize) -> RationalMatrix {
    let (n, c) = (n as i64, c_hat as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        BigRational::from_integer(binom(n + c - i, n + j - 2 * i) * (n + 2 * c - j + 1))
    })
}

pub fn det3(n: usize, c_hat: usize) -> Result<BigInt> {
    integral(det_exact(&det3_matrix(n, c_hat)))
}

pub fn det3_printed(n: usize, c_hat: usize) -> BigInt {
    integral(det_exact(&det3_printed_matrix(n, c_hat))).expect("integer matrix")
}

/// Both even-height determinants; they agree for every `n, ĉ`.
pub fn det2_det3(n: usize, c_hat: usize) -> Result<(BigInt, BigInt)> {
    Ok((det2(n, c_hat), det3(n, c_hat)?))
}

/// Closed form of `det(C(B L_i + A, L_i + j))_{1≤i,j≤n}`:
/// `∏_{i<j}(L_i-L_j) / ∏(L_i+n)! · ∏ (B L_i+A)! / ((B-1)L_i+A-1)! · ∏ (A-Bi+1)_{i-1}`.
/// Every factorial argument must be a non-negative integer.
pub fn krattenthaler_eval(l: &[i64], a: &BigRational, b: &BigRational) -> Result<BigRational> {
    let n = l.len() as i64;
    let mut value = BigRational::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            value *= rat(l[i] - l[j]);
        }
    }
    for (idx, &li) in l.iter().enumerate() {
        let i = idx as i64 + 1;
        let li_r = rat(li);
        value /= BigRational::from_integer(factorial(&rat(li + n))?);
        value *= BigRational::from_integer(factorial(&(b * &li_r + a))?);
        value /= BigRational::from_integer(factorial(&((b - rat(1)) * &li_r + a - rat(1)))?);
        value *= pochhammer(&(a - b * rat(i) + rat(1)), (i - 1) as usize);
    }
    Ok(value)
}

/// Parameters `L_i = n+1-2i, A = ĉ+(n+1)/2, B = 1/2` of the odd-height case.
pub fn odd_parameters(n: usize, c_hat: usize) -> (Vec<i64>, BigRational, BigRational) {
    let n = n as i64;
    let l = (1..=n).map(|i| n + 1 - 2 * i).collect();
    (l, rat(c_hat as i64) + half(n + 1), half(1))
}

/// Parameters `L_i = n-2i, A = ĉ+n/2, B = 1/2`; they evaluate
/// `det(C(n+ĉ-i, n+j-2i))`.
pub fn even_parameters(n: usize, c_hat: usize) -> (Vec<i64>, BigRational, BigRational) {
    let n = n as i64;
    let l = (1..=n).map(|i| n - 2 * i).collect();
    (l, rat(c_hat as i64) + half(n), half(1))
}

/// `2^n` times the closed form for the odd-height determinant.
pub fn qtcpp_odd_closed_form(n: usize, c_hat: usize) -> Result<BigInt> {
    let (l, a, b) = odd_parameters(n, c_hat);
    Ok(integral(krattenthaler_eval(&l, &a, &b)?)? << n)
}

/// Closed form for the even-height determinant: the row and column factors of
/// the single-binomial rewrite times the odd-height evaluation.
pub fn qtcpp_even_closed_form(n: usize, c_hat: usize) -> Result<BigInt> {
    let (l, a, b) = odd_parameters(n, c_hat);
    let mut value = krattenthaler_eval(&l, &a, &b)?;
    let (ni, c) = (n as i64, c_hat as i64);
    for k in 1..=ni {
        value *= rat(ni + 2 * c + 1 - k);
        value /= rat(ni + c + 1 - k);
    }
    integral(value)
}

/// Symmetric plane partitions in the `(n,n,c)`-box:
/// `∏_i (2i+c-1)/(2i-1) · ∏_{i<j} (i+j+c-1)/(i+j-1)`.
pub fn spp_product(n: usize, c: usize) -> BigInt {
    let (n, c) = (n as i64, c as i64);
    let mut value = BigRational::one();
    for i in 1..=n {
        value *= BigRational::new(BigInt::from(2 * i + c - 1), BigInt::from(2 * i - 1));
        for j in i + 1..=n {
            value *= BigRational::new(BigInt::from(i + j + c - 1), BigInt::from(i + j - 1));
        }
    }
    debug_assert!(value.is_integer());
    value.to_integer()
}

/// Plane partitions in the `(a,b,c)`-box, `∏_{i,j} (i+j+c-1)/(i+j-1)`.
pub fn pp_product(a: usize, b: usize, c: usize) -> BigInt {
    let mut value = BigRational::one();
    for i in 1..=a as i64 {
        for j in 1..=b as i64 {
            value *= BigRational::new(BigInt::from(i + j + c as i64 - 1), BigInt::from(i + j - 1));
        }
    }
    let (q, r) = value.numer().div_rem(value.denom());
    debug_assert!(r.is_zero());
    q
}

/// Both sides of `2^{n-1}·|TC(n,n,2c)| = SPP(n-1,n-1,2c+1)`; the left side by
/// constraint search.
pub fn tc_spp_sides(n: usize, c: usize, budget: u64) -> Result<(BigInt, BigInt)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let class = SymmetryClass::new(ClassTag::Tc, BoxDims::new(vec![n, n, 2 * c])?)?;
    let tc = BigInt::from(count_class(&class, budget)?);
    Ok((tc << (n - 1), spp_product(n - 1, 2 * c + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_binomials() {
        assert_eq!(rat_binomial(&rat(5), 2), rat(10));
        assert_eq!(rat_binomial(&half(1), 2), BigRational::new((-1).into(), 8.into()));
        assert_eq!(rat_binomial(&rat(3), 0), rat(1));
        assert_eq!(rat_binomial(&rat(2), 3), rat(0));
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(-1, 2), BigInt::one());
    }

    #[test]
    fn odd_height_examples() {
        assert_eq!(det1(1, 1), BigInt::from(4));
        assert_eq!(det1(1, 0), BigInt::from(2));
    }

    #[test]
    fn even_height_examples() {
        assert_eq!(det2_det3(1, 1).unwrap(), (BigInt::from(3), BigInt::from(3)));
        assert_eq!(det2(2, 1), BigInt::from(10));
        assert_eq!(det2(3, 1), BigInt::from(35));
        for n in 1..=6 {
            for c in 0..=4 {
                let (d2, d3) = det2_det3(n, c).unwrap();
                assert_eq!(d2, d3, "n={n} c={c}");
            }
        }
    }

    #[test]
    fn rewritten_matrix_is_entrywise_equal() {
        for n in 1..=6 {
            for c in 0..=4 {
                assert_eq!(det2_matrix(n, c), det3_matrix(n, c));
            }
        }
    }

    #[test]
    fn quoted_rewrite_disagrees() {
        assert_eq!(det3_printed(1, 1), det2(1, 1));
        assert_eq!(det3_printed(2, 1), BigInt::from(24));
        assert_ne!(det3_printed(2, 1), det2(2, 1));
        for n in 2..=5 {
            for c in 0..=3 {
                assert_ne!(det3_printed(n, c), det2(n, c), "n={n} c={c}");
            }
        }
    }

    #[test]
    fn closed_forms_match_determinants() {
        for n in 1..=6 {
            for c in 0..=4 {
                let (l, a, b) = odd_parameters(n, c);
                assert_eq!(krattenthaler_eval(&l, &a, &b).unwrap(), det_exact(&det1_matrix(n, c)));
                let (l, a, b) = even_parameters(n, c);
                let plain = RationalMatrix::from_fn(n, |i, j| {
                    let (i, j, n, c) = (i as i64 + 1, j as i64 + 1, n as i64, c as i64);
                    BigRational::from_integer(binom(n + c - i, n + j - 2 * i))
                });
                assert_eq!(krattenthaler_eval(&l, &a, &b).unwrap(), det_exact(&plain));
                assert_eq!(qtcpp_odd_closed_form(n, c).unwrap(), det1(n, c));
                assert_eq!(qtcpp_even_closed_form(n, c).unwrap(), det2(n, c));
            }
        }
    }

    #[test]
    fn quoted_rewrite_factors_through_the_even_parameters() {
        for n in 1..=5 {
            for c in 0..=3 {
                let (l, a, b) = even_parameters(n, c);
                let mut expected = krattenthaler_eval(&l, &a, &b).unwrap();
                for j in 1..=n as i64 {
                    expected *= rat(n as i64 + 2 * c as i64 - j + 1);
                }
                assert_eq!(BigRational::from_integer(det3_printed(n, c)), expected);
            }
        }
    }

    #[test]
    fn half_integer_factorials_are_rejected() {
        let err = krattenthaler_eval(&[1], &half(1), &rat(1)).unwrap_err();
        assert!(matches!(err, Error::NonIntegralFactorial(_)));
    }

    #[test]
    fn one_by_one_case() {
        let (a, b) = (rat(3), half(1));
        let l = [2i64];
        let entry = rat_binomial(&(&b * rat(2) + &a), 3);
        assert_eq!(krattenthaler_eval(&l, &a, &b).unwrap(), entry);
    }

    #[test]
    fn product_formulas() {
        for c in 0..6 {
            assert_eq!(spp_product(1, c), BigInt::from(c + 1));
        }
        assert_eq!(spp_product(2, 2), BigInt::from(10));
        assert_eq!(pp_product(2, 2, 2), BigInt::from(20));
        assert_eq!(pp_product(3, 3, 3), BigInt::from(980));
    }

    fn class_count(tag: ClassTag, n: usize, c: usize) -> BigInt {
        let class = SymmetryClass::new(tag, BoxDims::new(vec![n, n, c]).unwrap()).unwrap();
        BigInt::from(count_class(&class, crate::symmetry::DEFAULT_BUDGET).unwrap())
    }

    #[test]
    fn determinants_count_quasi_transpose_complementary() {
        for n in 1..=3 {
            for c_hat in 0..=2 {
                assert_eq!(det1(n, c_hat), class_count(ClassTag::Qtc, n, 2 * c_hat + 1), "{n} {c_hat}");
                let (d2, d3) = det2_det3(n, c_hat).unwrap();
                let brute = class_count(ClassTag::Qtc, n, 2 * c_hat);
                assert_eq!(d2, brute);
                assert_eq!(d3, brute);
            }
        }
    }

    #[test]
    fn symmetric_product_matches_search() {
        for n in 1..=3 {
            for c in 0..=4 {
                assert_eq!(spp_product(n, c), class_count(ClassTag::Sym, n, c));
            }
        }
    }

    #[test]
    fn transpose_complementary_relation() {
        assert_eq!(class_count(ClassTag::Tc, 2, 2), BigInt::from(2));
        for (n, c) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let (lhs, rhs) = tc_spp_sides(n, c, crate::symmetry::DEFAULT_BUDGET).unwrap();
            assert_eq!(lhs, rhs, "{n} {c}");
        }
        assert_eq!(tc_spp_sides(2, 1, 1_000_000).unwrap(), (BigInt::from(4), BigInt::from(4)));
        assert!(tc_spp_sides(0, 1, 10).is_err());
    }
}
