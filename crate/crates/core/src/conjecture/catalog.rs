use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::conjecture::poly::RatPoly;
use crate::error::{Error, Result};
use crate::linalg::{half, rat, rat_binomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjectureClass {
    Qspp,
    Qtcpp2,
    Qtcspp2,
}

impl ConjectureClass {
    pub const ALL: [ConjectureClass; 3] = [ConjectureClass::Qspp, ConjectureClass::Qtcpp2, ConjectureClass::Qtcspp2];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureClass::Qspp => "qspp",
            ConjectureClass::Qtcpp2 => "qtcpp2",
            ConjectureClass::Qtcspp2 => "qtcspp2",
        }
    }

    /// Prefactor shape shared by the whole class for side `a`.
    pub fn prefactor(self, a: usize) -> Prefactor {
        let ai = a as i64;
        match self {
            ConjectureClass::Qspp => Prefactor {
                shift: rat(ai),
                c_factor: a % 2 == 0,
                binom_offset: rat(ai - 1),
                binom_k: 2 * a - 1,
            },
            ConjectureClass::Qtcspp2 if a == 1 => Prefactor {
                shift: rat(0),
                c_factor: false,
                binom_offset: rat(0),
                binom_k: 0,
            },
            ConjectureClass::Qtcpp2 | ConjectureClass::Qtcspp2 => Prefactor {
                shift: half(ai),
                c_factor: a % 2 == 0,
                binom_offset: half(ai) - rat(1),
                binom_k: a.saturating_sub(1),
            },
        }
    }
}

impl fmt::Display for ConjectureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConjectureClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown class {s:?}, expected qspp, qtcpp2 or qtcspp2")))
    }
}

/// `F(c) = [c] · C(c + binom_offset, binom_k)`; the tabulated count at column
/// `m` is `F(m + shift) · p(m + shift)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Prefactor {
    pub shift: BigRational,
    pub c_factor: bool,
    pub binom_offset: BigRational,
    pub binom_k: usize,
}

impl Prefactor {
    pub fn eval(&self, c: &BigRational) -> BigRational {
        let b = rat_binomial(&(c + &self.binom_offset), self.binom_k);
        if self.c_factor {
            b * c
        } else {
            b
        }
    }
}

impl fmt::Display for Prefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c_factor {
            write!(f, "c*")?;
        }
        let off = &self.binom_offset;
        if off.is_zero() {
            write!(f, "C(c,{})", self.binom_k)
        } else if off.is_negative() {
            write!(f, "C(c-{},{})", -off, self.binom_k)
        } else {
            write!(f, "C(c+{off},{})", self.binom_k)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConjectureFormula {
    pub class: ConjectureClass,
    pub a: usize,
    pub prefactor: Prefactor,
    pub p: RatPoly,
}

impl ConjectureFormula {
    /// `F(c)·p(c)` at the formula's own variable `c`.
    pub fn eval_raw(&self, c: &BigRational) -> BigRational {
        self.prefactor.eval(c) * self.p.eval(c)
    }

    /// The predicted count at table column `m`, as an exact rational.
    pub fn eval_rational(&self, m: &BigRational) -> BigRational {
        self.eval_raw(&(m + &self.prefactor.shift))
    }
}

impl fmt::Display for ConjectureFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, c-{}) = {}*({})",
            self.class, self.a, self.prefactor.shift, self.prefactor, self.p
        )
    }
}

fn poly(class: ConjectureClass, a: usize) -> Option<RatPoly> {
    use ConjectureClass::*;
    let p = |n: &[i64], d: i64| Some(RatPoly::from_scaled(n, d));
    match (class, a) {
        (Qspp, 1) => p(&[1], 1),
        (Qspp, 2) => p(&[1], 2),
        (Qspp, 3) => p(&[-2, 0, 1], 7),
        (Qspp, 4) => p(&[-892, 0, -229, 0, 41], 23760),
        (Qspp, 5) => p(&[756000, 0, -310644, 0, -14473, 0, -8206, 0, 683], 122522400),
        (Qspp, 6) => p(
            &[
                194655992832,
                0,
                20697349128,
                0,
                -1859025278,
                0,
                -28759181,
                0,
                11282865,
                0,
                -1850347,
                0,
                56381,
            ],
            161911881331200,
        ),
        (Qtcpp2, 1) => Some(RatPoly::new(vec![half(1), rat(1)])),
        (Qtcpp2, 2) => p(&[1], 1),
        (Qtcpp2, 3) => p(&[3, 0, 4], 12),
        (Qtcpp2, 4) => p(&[-16, 0, 19, 0, 5], 280),
        (Qtcpp2, 5) => p(&[883575, 0, 80480, 0, -1322016, 0, 522240, 0, 54016], 159667200),
        (Qtcpp2, 6) => p(
            &[
                395435520, 0, -876526848, 0, 201378740, 0, 29029591, 0, -12312285, 0, 1648357, 0, 73325,
            ],
            256505356800,
        ),
        (Qtcspp2, 1) => p(&[1, 1], 1),
        (Qtcspp2, 2) => p(&[1], 1),
        (Qtcspp2, 3) => p(&[0, 2], 3),
        (Qtcspp2, 4) => p(&[1, 0, 1], 10),
        (Qtcspp2, 5) => p(&[-455, 0, 248, 0, 144], 6720),
        (Qtcspp2, 6) => p(&[200, 0, -58, 0, 15, 0, 3], 9240),
        _ => None,
    }
}

/// The calibrated closed formula for `class` at side `a`, for `1 ≤ a ≤ 6`.
pub fn formula(class: ConjectureClass, a: usize) -> Option<ConjectureFormula> {
    Some(ConjectureFormula {
        class,
        a,
        prefactor: class.prefactor(a),
        p: poly(class, a)?,
    })
}

pub fn catalog() -> Vec<ConjectureFormula> {
    ConjectureClass::ALL
        .into_iter()
        .flat_map(|class| (1..=6).filter_map(move |a| formula(class, a)))
        .collect()
}

/// The formulas whose displayed form differs from the calibrated one: the
/// `qspp` side-2 polynomial printed as `1`, and the `qtcpp2` shift printed as
/// `1/2` for sides 3 and 5.
pub fn displayed_variants() -> Vec<ConjectureFormula> {
    let mut out = Vec::new();
    let mut f = formula(ConjectureClass::Qspp, 2).expect("catalogued");
    f.p = RatPoly::from_scaled(&[1], 1);
    out.push(f);
    for a in [3, 5] {
        let mut f = formula(ConjectureClass::Qtcpp2, a).expect("catalogued");
        f.prefactor.shift = half(1);
        out.push(f);
    }
    out
}

/// The predicted count at table column `m`. Errors when the value is not a
/// non-negative integer.
pub fn eval_conjecture(f: &ConjectureFormula, m: usize) -> Result<BigUint> {
    let v = f.eval_rational(&rat(m as i64));
    if !v.is_integer() || v.is_negative() {
        return Err(Error::NotANaturalNumber(v.to_string()));
    }
    let n: BigInt = v.to_integer();
    Ok(n.to_biguint().expect("non-negative"))
}
