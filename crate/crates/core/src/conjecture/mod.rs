//! Closed formulas for the quasi-symmetric and second-kind counts, the
//! tabulated values they are checked against, and the even-polynomial fit that
//! produces them from data.

mod catalog;
mod poly;
mod table;

pub use catalog::{catalog, displayed_variants, eval_conjecture, formula, ConjectureClass, ConjectureFormula, Prefactor};
pub use poly::RatPoly;
pub use table::{CountTable, Provenance, TableRow};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::rat;
use crate::symmetry::{qspp, qtcpp2, qtcspp2};

/// Brute-force count for one table cell.
pub fn compute_count(class: ConjectureClass, a: usize, c: usize, budget: u64) -> Result<BigUint> {
    match class {
        ConjectureClass::Qspp => qspp(a, c, budget),
        ConjectureClass::Qtcpp2 => qtcpp2(a, c, budget),
        ConjectureClass::Qtcspp2 => qtcspp2(a, c, budget),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    /// Every available source agrees.
    Match,
    Mismatch,
    /// The search budget ran out; the other sources still agree.
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub class: ConjectureClass,
    pub a: usize,
    pub c: usize,
    pub computed: Option<String>,
    pub formula: Option<String>,
    pub table: Option<String>,
    pub status: CellStatus,
}

/// Compares brute force, closed formula and table on every cell with
/// `1 ≤ a ≤ a_max`, `0 ≤ c ≤ c_max`. Budget exhaustion is recorded per cell.
pub fn verify_conjecture(class: ConjectureClass, a_max: usize, c_max: usize, budget: u64) -> Vec<CellReport> {
    let table = CountTable::reference();
    let cells: Vec<(usize, usize)> = (1..=a_max).flat_map(|a| (0..=c_max).map(move |c| (a, c))).collect();
    cells
        .into_par_iter()
        .map(|(a, c)| verify_cell(class, a, c, budget, &table))
        .collect()
}

fn verify_cell(class: ConjectureClass, a: usize, c: usize, budget: u64, table: &CountTable) -> CellReport {
    let (computed, exceeded) = match compute_count(class, a, c, budget) {
        Ok(v) => (Some(v.to_string()), false),
        Err(Error::BudgetExceeded(_)) => (None, true),
        Err(e) => (Some(format!("error: {e}")), false),
    };
    let formula = formula(class, a).map(|f| match eval_conjecture(&f, c) {
        Ok(v) => v.to_string(),
        Err(_) => format!("non-integral: {}", f.eval_rational(&rat(c as i64))),
    });
    let table = table.get(class, a, c).map(ToString::to_string);
    let values: Vec<&String> = [&computed, &formula, &table].into_iter().flatten().collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let status = match (agree, exceeded) {
        (false, _) => CellStatus::Mismatch,
        (true, true) => CellStatus::BudgetExceeded,
        (true, false) => CellStatus::Match,
    };
    CellReport {
        class,
        a,
        c,
        computed,
        formula,
        table,
        status,
    }
}

/// Every populated table cell against its closed formula.
pub fn formula_vs_table() -> Vec<CellReport> {
    let table = CountTable::reference();
    table
        .rows()
        .map(|r| {
            let f = formula(r.class, r.a).map(|f| {
                eval_conjecture(&f, r.c)
                    .map(|v| v.to_string())
                    .unwrap_or_else(|_| format!("non-integral: {}", f.eval_rational(&rat(r.c as i64))))
            });
            let t = r.value.to_string();
            let status = if f.as_deref() == Some(t.as_str()) {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            };
            CellReport {
                class: r.class,
                a: r.a,
                c: r.c,
                computed: None,
                formula: f,
                table: Some(t),
                status,
            }
        })
        .collect()
}

/// Divides the samples `(m, count)` by `prefactor` and interpolates an even
/// polynomial of degree at most `degree`. Needs more samples than
/// coefficients so the fit is checked on the rest.
pub fn fit_even_polynomial(
    class: ConjectureClass,
    a: usize,
    prefactor: Prefactor,
    samples: &[(usize, BigUint)],
    degree: usize,
) -> Result<ConjectureFormula> {
    let mut quotients = Vec::new();
    for (m, v) in samples {
        let c = rat(*m as i64) + &prefactor.shift;
        let pre = prefactor.eval(&c);
        if !pre.is_zero() {
            quotients.push((c, BigRational::from_integer(v.clone().into()) / pre));
        }
    }
    let needed = degree + 1;
    if quotients.len() <= needed {
        return Err(Error::Interpolation(format!(
            "{} usable samples, need more than {needed}",
            quotients.len()
        )));
    }
    let p = RatPoly::interpolate(&quotients[..needed])?;
    if let Some((c, q)) = quotients[needed..].iter().find(|(c, q)| p.eval(c) != *q) {
        return Err(Error::Interpolation(format!(
            "quotient {q} at c = {c} is off the degree-{degree} fit; wrong prefactor or degree"
        )));
    }
    if !p.is_even() {
        return Err(Error::Interpolation(format!("fitted polynomial {p} is not even")));
    }
    Ok(ConjectureFormula {
        class,
        a,
        prefactor,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::DEFAULT_BUDGET;

    fn column(class: ConjectureClass, a: usize) -> Vec<(usize, BigUint)> {
        let t = CountTable::reference();
        (0..=10).filter_map(|c| t.get(class, a, c).map(|v| (c, v.clone()))).collect()
    }

    #[test]
    fn fits_recover_displayed_polynomials() {
        let f = fit_even_polynomial(
            ConjectureClass::Qspp,
            3,
            ConjectureClass::Qspp.prefactor(3),
            &column(ConjectureClass::Qspp, 3),
            2,
        )
        .unwrap();
        assert_eq!(f.p, RatPoly::from_scaled(&[-2, 0, 1], 7));
        let f = fit_even_polynomial(
            ConjectureClass::Qtcspp2,
            4,
            ConjectureClass::Qtcspp2.prefactor(4),
            &column(ConjectureClass::Qtcspp2, 4),
            2,
        )
        .unwrap();
        assert_eq!(f.p, RatPoly::from_scaled(&[1, 0, 1], 10));
        for (m, v) in column(ConjectureClass::Qtcspp2, 4) {
            assert_eq!(eval_conjecture(&f, m).unwrap(), v);
        }
    }

    #[test]
    fn synthetic_fit_and_failures() {
        let p = RatPoly::from_scaled(&[3, 0, -5, 0, 2], 11);
        let pre = Prefactor {
            shift: rat(0),
            c_factor: false,
            binom_offset: rat(0),
            binom_k: 0,
        };
        let samples: Vec<(usize, BigUint)> = (0..8)
            .map(|m| (m, (p.eval(&rat(m as i64)) * rat(11)).to_integer().to_biguint().unwrap()))
            .collect();
        let scaled = RatPoly::from_scaled(&[3, 0, -5, 0, 2], 1);
        let f = fit_even_polynomial(ConjectureClass::Qspp, 9, pre.clone(), &samples, 4).unwrap();
        assert_eq!(f.p, scaled);
        assert!(fit_even_polynomial(ConjectureClass::Qspp, 9, pre.clone(), &samples, 2).is_err());
        assert!(fit_even_polynomial(ConjectureClass::Qspp, 9, pre.clone(), &samples[..5], 4).is_err());
        let odd: Vec<(usize, BigUint)> = (0..6).map(|m| (m, BigUint::from(m + 1))).collect();
        assert!(fit_even_polynomial(ConjectureClass::Qspp, 9, pre, &odd, 2).is_err());
    }

    #[test]
    fn formulas_reproduce_every_table_cell() {
        let report = formula_vs_table();
        assert_eq!(report.len(), 194);
        let bad: Vec<_> = report.iter().filter(|r| r.status != CellStatus::Match).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn small_cells_agree_three_ways() {
        for class in ConjectureClass::ALL {
            for r in verify_conjecture(class, 3, 3, DEFAULT_BUDGET) {
                assert_eq!(r.status, CellStatus::Match, "{r:?}");
                assert!(r.computed.is_some() && r.table.is_some());
            }
        }
        let r = verify_conjecture(ConjectureClass::Qspp, 4, 4, 10);
        assert!(r.iter().any(|x| x.status == CellStatus::BudgetExceeded));
        assert!(r.iter().all(|x| x.status != CellStatus::Mismatch));
    }

    #[test]
    fn embedded_table_transcription() {
        let t = CountTable::reference();
        assert_eq!(t.len(), 3 * 6 * 11 - 4);
        assert!(t.rows().all(|r| r.provenance == Provenance::Paper));
        for class in ConjectureClass::ALL {
            for a in 1..=6 {
                assert_eq!(t.get(class, a, 0), Some(&BigUint::from(1u32)));
            }
            for c in 0..=10 {
                assert_eq!(t.get(class, 1, c), Some(&BigUint::from(c as u32 + 1)));
            }
        }
        assert_eq!(t.get(ConjectureClass::Qtcpp2, 6, 9), None);
        assert_eq!(t.get(ConjectureClass::Qtcspp2, 6, 10), None);
        let spot = |class, a, c| t.get(class, a, c).unwrap().to_string();
        assert_eq!(spot(ConjectureClass::Qspp, 6, 10), "483901238656");
        assert_eq!(spot(ConjectureClass::Qspp, 3, 3), "272");
        assert_eq!(spot(ConjectureClass::Qspp, 4, 4), "16932");
        assert_eq!(spot(ConjectureClass::Qtcpp2, 4, 4), "5361");
        assert_eq!(spot(ConjectureClass::Qtcpp2, 6, 8), "14918043569");
        assert_eq!(spot(ConjectureClass::Qtcspp2, 5, 5), "8796");
        assert_eq!(spot(ConjectureClass::Qtcspp2, 6, 8), "8468889");
    }
}
