//! Verification suites shared by the command-line tool and the acceptance
//! tests. Each suite returns one labelled check per comparison; search budgets
//! surface as [`Error::BudgetExceeded`].

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::complement::{
    fc_partitions_by_search, is_fc_array, is_fc_diagram, reduce_odd_axis, expand_odd_axis, scan_no_fc_two_odd,
};
use crate::conjecture::{formula_vs_table, verify_conjecture, CellStatus, ConjectureClass};
use crate::error::Result;
use crate::fcp::{count_fcp, enumerate_fcp, fcp_to_path, path_to_fcp, Fcp, FcpCounter, LatticePath};
use crate::lattice::{diagram_from_array, enumerate_partitions, BoxDims, PartitionArray};
use crate::linalg::{
    binom, det1, det1_matrix, det2, det3, det_exact, even_parameters, krattenthaler_eval, odd_parameters, spp_product,
    tc_spp_sides, RationalMatrix,
};
use crate::series::{expand_fcp_genfun, expand_qs_genfun, macmahon_box_q, q_count_box, DenominatorTable};
use crate::symmetry::{
    corner_block_qcpp, count_class, count_cyclic_qcpp, count_qs_qcpp, count_qtc_qcpp, count_sc_qcpp, qtc_is_qs_and_sc,
    symmetric_qcpps, weighted_hat_count, ClassTag, CountMode, SymmetryClass,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&mut self, label: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.checks.push(Check {
            label: label.into(),
            passed: expected == actual,
            expected,
            actual,
        });
    }

    pub fn assert(&mut self, label: impl Into<String>, ok: bool) {
        self.check(label, true, ok);
    }
}

fn bx(sides: &[usize]) -> BoxDims {
    BoxDims::new(sides.to_vec()).expect("valid box")
}

/// Every vector of length `len` whose prefixes all satisfy `keep`. `keep` must
/// be monotone: once a value fails for a prefix, larger values fail too.
fn vectors(len: usize, keep: &dyn Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    fn extend(len: usize, prefix: &mut Vec<usize>, keep: &dyn Fn(&[usize]) -> bool, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let mut v = 0;
        loop {
            prefix.push(v);
            if !keep(prefix) {
                prefix.pop();
                return;
            }
            extend(len, prefix, keep, out);
            prefix.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    extend(len, &mut Vec::new(), keep, &mut out);
    out
}

fn zeros(v: &[usize]) -> usize {
    v.iter().filter(|&&x| x == 0).count()
}

/// The four fully complementary diagrams of the `(2,2,2,2)`-box, by the
/// recursion and by filtering all of its order ideals.
pub fn fcp_baseline() -> SuiteReport {
    let mut r = SuiteReport::new("fcp-baseline");
    let n = bx(&[1, 1, 1, 1]);
    r.check("count_fcp(1,1,1,1)", 4, count_fcp(&n));
    let doubled = n.doubled();
    let all: Vec<PartitionArray> = enumerate_partitions(&doubled).collect();
    r.check("order ideals of the (2,2,2,2)-box", 168, all.len());
    let fc: HashSet<PartitionArray> = all.into_iter().filter(|p| is_fc_array(p, &n)).collect();
    r.check("fully complementary ideals", 4, fc.len());
    let listed: HashSet<PartitionArray> = enumerate_fcp(&n).into_iter().filter_map(|f| f.as_array().cloned()).collect();
    r.assert("enumeration equals the filtered set", listed == fc);
    r
}

/// Generating function against the recursion: the full expansion up to total
/// degree `max_degree`; single coefficients for every box of at most
/// `max_cells` cells; exhaustive search on those boxes with at most
/// `listing_limit` members.
pub fn genfun_suite(max_degree: usize, max_cells: usize, listing_cells: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("genfun");
    let counter = FcpCounter::new();
    let count = |n: &[usize]| -> BigInt {
        if zeros(n) >= 2 {
            BigInt::from(0)
        } else {
            BigInt::from(counter.count(&bx(n)))
        }
    };
    for d in 1..=3 {
        let vars = d + 1;
        let series = expand_fcp_genfun(d, max_degree)?;
        let exps = vectors(vars, &|v| v.iter().sum::<usize>() <= max_degree);
        let bad: Vec<_> = exps.iter().filter(|e| series.coeff(e) != count(e)).collect();
        r.check(
            format!("d={d}: expansion coefficients up to degree {max_degree} ({} exponents)", exps.len()),
            "[]",
            format!("{bad:?}"),
        );

        let cells = |v: &[usize]| v.iter().map(|&x| 2 * x.max(1)).product::<usize>();
        let member = |v: &[usize]| cells(v) <= max_cells;
        let table = DenominatorTable::build(vars, member);
        let boxes: Vec<Vec<usize>> = vectors(vars, &member).into_iter().filter(|v| zeros(v) <= 1).collect();
        let mut bad = Vec::new();
        let mut listed = 0usize;
        for n in &boxes {
            let expected = count(n);
            if table.fcp_coefficient(n) != Some(expected.clone()) {
                bad.push(n.clone());
            }
            if zeros(n) == 0 && cells(n) <= listing_cells {
                let found = fc_partitions_by_search(&bx(n).doubled()).count();
                if BigInt::from(found) != expected {
                    bad.push(n.clone());
                }
                listed += 1;
            }
        }
        r.check(
            format!(
                "d={d}: {} boxes of at most {max_cells} cells, {listed} of at most {listing_cells} cells listed exhaustively",
                boxes.len()
            ),
            "[]",
            format!("{bad:?}"),
        );
    }
    Ok(r)
}

pub fn worked_path_example() -> (BoxDims, PartitionArray) {
    let p = PartitionArray::from_rows(
        &[&[4, 2, 2, 0], &[3, 2, 2, 0], &[2, 2, 0, 0], &[2, 2, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]],
        4,
    )
    .expect("partition");
    (bx(&[3, 2, 2]), p)
}

/// Path bijection on every FCP with `Σ n_i ≤ max_total` and `d ≤ max_dim`,
/// plus the worked `(6,4,4)` example.
pub fn path_suite(max_total: usize, max_dim: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("paths");
    let (n, p) = worked_path_example();
    let path = fcp_to_path(&Fcp::Array(p.clone()), &n)?;
    r.check("worked example path", "(1,1,0) + [e3,e1,e3,e2,e1]", &path);
    r.check("worked example end", "[3, 2, 2]", format!("{:?}", path.end()));
    r.assert("worked example round trip", path_to_fcp(&path)? == Fcp::Array(p));
    for d in 1..=max_dim {
        let mut objects = 0usize;
        let mut failures = Vec::new();
        for sides in vectors(d + 1, &|v| v.iter().sum::<usize>() <= max_total).into_iter().filter(|v| zeros(v) <= 1) {
            let n = bx(&sides);
            let mut seen: HashSet<LatticePath> = HashSet::new();
            for f in enumerate_fcp(&n) {
                objects += 1;
                let path = fcp_to_path(&f, &n)?;
                let ok = path.end() == sides && path_to_fcp(&path)? == f && seen.insert(path);
                if !ok {
                    failures.push(sides.clone());
                }
            }
        }
        r.check(format!("d={d}: round trips on {objects} FCPs"), "[]", format!("{failures:?}"));
    }
    Ok(r)
}

/// No fully complementary diagram in boxes with two or more odd sides, and the
/// odd-layer deletion as a bijection between the `(2,2,3)`- and `(2,2,2)`-boxes.
pub fn parity_suite(max_cells: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("parity");
    let mut scanned = 0usize;
    let mut found = Vec::new();
    for len in 2..=4 {
        let within = |v: &[usize]| v.iter().map(|&x| x.max(1)).product::<usize>() <= max_cells;
        let candidates = vectors(len, &within)
            .into_iter()
            .filter(|v| v.iter().all(|&x| x >= 1) && v.iter().filter(|&&x| x % 2 == 1).count() >= 2);
        for sides in candidates {
            scanned += 1;
            if !scan_no_fc_two_odd(&bx(&sides))? {
                found.push(sides);
            }
        }
    }
    r.check(
        format!("{scanned} boxes of at most {max_cells} cells with two or more odd sides"),
        "[]",
        format!("{found:?}"),
    );

    let odd = bx(&[2, 2, 3]);
    let even = bx(&[2, 2, 2]);
    let half = bx(&[1, 1, 1]);
    let source: Vec<PartitionArray> = fc_partitions_by_search(&odd).collect();
    let target: HashSet<PartitionArray> = fc_partitions_by_search(&even).collect();
    r.check("FC count, (2,2,3) against (2,2,2)", target.len(), source.len());
    let mut images = HashSet::new();
    let mut ok = true;
    for p in &source {
        let diagram = diagram_from_array(p, &odd)?;
        let image = reduce_odd_axis(&diagram, 2)?;
        ok &= is_fc_diagram(&image, &half);
        ok &= expand_odd_axis(&image, 2)? == diagram;
        images.insert(crate::lattice::array_from_diagram(&image));
    }
    r.assert("images are fully complementary and invert", ok);
    r.assert("image set is the (2,2,2) set", images == target);
    Ok(r)
}

/// Structure of quasi-symmetric, self-complementary, quasi
/// transpose-complementary, symmetric and cyclic QCPPs.
pub fn qcpp_suite(max_side: usize, qs_total: usize, budget: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("qcpp");
    let series = expand_qs_genfun(qs_total)?;
    for a in 0..=qs_total {
        for c in 0..=qs_total - a {
            let rec = count_qs_qcpp(a, c, CountMode::Recursion, budget)?;
            let brute = count_qs_qcpp(a, c, CountMode::Brute, budget)?;
            let coeff = series.coeff(&[a, c]);
            r.check(format!("QS({a},{c}) recursion = brute force"), &rec, &brute);
            r.check(format!("QS({a},{c}) recursion = series"), BigInt::from(rec), &coeff);
        }
    }
    for a in 1..=max_side {
        for b in 1..=max_side {
            for c in 1..=max_side {
                r.check(
                    format!("SC({a},{b},{c}) = C(a+b,a)"),
                    binom((a + b) as i64, a as i64),
                    count_sc_qcpp(a, b, c, budget)?,
                );
            }
        }
    }
    for a in 1..=max_side {
        for c in 1..=max_side {
            r.check(format!("QTC({a},{c}) = 2^a"), 1u64 << a, count_qtc_qcpp(a, c, budget)?);
            r.assert(format!("QTC({a},{c}) = QS ∩ SC"), qtc_is_qs_and_sc(a, c, budget)?);
            r.check(
                format!("symmetric QCPPs ({a},{c})"),
                format!("{:?}", vec![corner_block_qcpp(a, c)]),
                format!("{:?}", symmetric_qcpps(a, c, budget)?),
            );
        }
        r.check(format!("cyclically symmetric QCPPs a={a}"), 0, count_cyclic_qcpp(a, budget)?);
    }
    Ok(r)
}

fn class_count(tag: ClassTag, sides: [usize; 3], budget: u64) -> Result<BigUint> {
    count_class(&SymmetryClass::new(tag, bx(&sides))?, budget)
}

/// Quasi transpose-complementary against symmetric plane partitions.
pub fn qtc_spp_suite(n_max: usize, c_max: usize, budget: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("qtc-spp");
    for n in 1..=n_max {
        for c in 0..=c_max {
            let qtc = class_count(ClassTag::Qtc, [n, n, c], budget)?;
            let sym = class_count(ClassTag::Sym, [n, n, c], budget)?;
            r.check(format!("QTC({n},{n},{c}) = SYM"), &sym, &qtc);
            r.check(format!("SYM({n},{n},{c}) = product"), spp_product(n, c), &sym);
        }
    }
    Ok(r)
}

/// Hat-map weights, the three determinants and the product evaluation.
pub fn determinant_suite(n_max: usize, c_max: usize, det_n: usize, det_c: usize, kr_n: usize, kr_c: usize, budget: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("determinants");
    for n in 1..=n_max {
        for c in 0..=c_max {
            let w = weighted_hat_count(n, c, budget)?;
            r.check(format!("Σω over hat images ({n},{c})"), class_count(ClassTag::Qtc, [n, n, c], budget)?, &w.value);
        }
    }
    for n in 1..=det_n {
        for c in 0..=det_c {
            let odd = class_count(ClassTag::Qtc, [n, n, 2 * c + 1], budget)?;
            let even = class_count(ClassTag::Qtc, [n, n, 2 * c], budget)?;
            r.check(format!("det1({n},{c}) = QTC({n},{n},{})", 2 * c + 1), &odd, det1(n, c));
            r.check(format!("det2({n},{c}) = QTC({n},{n},{})", 2 * c), &even, det2(n, c));
            r.check(format!("det3({n},{c}) = QTC({n},{n},{})", 2 * c), &even, det3(n, c)?);
        }
    }
    for n in 1..=kr_n {
        for c in 0..=kr_c {
            let (l, a, b) = odd_parameters(n, c);
            r.check(
                format!("product evaluation, odd height ({n},{c})"),
                det_exact(&det1_matrix(n, c)),
                krattenthaler_eval(&l, &a, &b)?,
            );
            let (l, a, b) = even_parameters(n, c);
            let plain = RationalMatrix::from_fn(n, |i, j| {
                let (i, j, n, c) = (i as i64 + 1, j as i64 + 1, n as i64, c as i64);
                BigRational::from_integer(binom(n + c - i, n + j - 2 * i))
            });
            r.check(
                format!("product evaluation, even height ({n},{c})"),
                det_exact(&plain),
                krattenthaler_eval(&l, &a, &b)?,
            );
        }
    }
    Ok(r)
}

/// `2^{n-1}·|TC(n,n,2c)| = SPP(n-1,n-1,2c+1)` on the given points.
pub fn tc_spp_suite(points: &[(usize, usize)], budget: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("tc-spp");
    for &(n, c) in points {
        let (lhs, rhs) = tc_spp_sides(n, c, budget)?;
        r.check(format!("2^{}·TC({n},{n},{}) = SPP({},{},{})", n - 1, 2 * c, n - 1, n - 1, 2 * c + 1), rhs, lhs);
    }
    Ok(r)
}

/// Brute force, closed formula and table on the given ranges, plus every
/// populated table cell against its formula.
pub fn conjecture_suite(ranges: &[(ConjectureClass, usize, usize)], budget: u64) -> SuiteReport {
    let mut r = SuiteReport::new("conjectures");
    for &(class, a_max, c_max) in ranges {
        for cell in verify_conjecture(class, a_max, c_max, budget) {
            let status = serde_json::to_string(&cell.status).expect("serializable");
            r.check(
                format!(
                    "{}({},{}) computed={} formula={} table={}",
                    class,
                    cell.a,
                    cell.c,
                    cell.computed.as_deref().unwrap_or("-"),
                    cell.formula.as_deref().unwrap_or("-"),
                    cell.table.as_deref().unwrap_or("-")
                ),
                "\"match\"",
                status,
            );
        }
    }
    let report = formula_vs_table();
    let bad: Vec<String> = report
        .iter()
        .filter(|c| c.status != CellStatus::Match)
        .map(|c| format!("{}({},{})", c.class, c.a, c.c))
        .collect();
    r.check(format!("formula reproduces all {} table cells", report.len()), "[]", format!("{bad:?}"));
    r
}

/// The standard ranges for [`conjecture_suite`].
pub fn standard_conjecture_ranges() -> Vec<(ConjectureClass, usize, usize)> {
    vec![
        (ConjectureClass::Qspp, 4, 6),
        (ConjectureClass::Qspp, 5, 4),
        (ConjectureClass::Qtcpp2, 4, 5),
        (ConjectureClass::Qtcspp2, 5, 6),
    ]
}

/// The MacMahon product against enumeration, coefficient by coefficient.
pub fn macmahon_suite(max_side: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("macmahon");
    for a in 0..=max_side {
        for b in 0..=max_side {
            for c in 0..=max_side {
                r.check(
                    format!("({a},{b},{c})"),
                    q_count_box(a, b, c)?,
                    macmahon_box_q(a, b, c)?,
                );
            }
        }
    }
    Ok(r)
}

/// Every suite at its standard range.
pub fn all_suites(budget: u64) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        fcp_baseline(),
        genfun_suite(8, 4096, 216)?,
        path_suite(6, 3)?,
        parity_suite(64)?,
        qcpp_suite(3, 6, budget)?,
        qtc_spp_suite(4, 5, budget)?,
        determinant_suite(4, 5, 4, 2, 6, 4, budget)?,
        tc_spp_suite(&[(2, 1), (2, 2), (3, 1), (3, 2)], budget)?,
        conjecture_suite(&standard_conjecture_ranges(), budget),
        macmahon_suite(3)?,
    ])
}
