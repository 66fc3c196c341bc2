use std::sync::OnceLock;

use fcp_core::complement::{is_fc_array, is_fc_diagram, rho, AxisSubset};
use fcp_core::conjecture::RatPoly;
use fcp_core::fcp::{count_fcp, enumerate_fcp, fcp_to_path, path_to_fcp, Fcp};
use fcp_core::lattice::{array_from_diagram, diagram_from_array, Layout};
use fcp_core::linalg::{det_exact, pp_product, rat, RationalMatrix};
use fcp_core::series::{expand_fcp_genfun, expand_qs_genfun, macmahon_box_q, QPolynomial, TruncatedSeries};
use fcp_core::symmetry::{
    hat_map, paths_to_hat_image, qtcpp_paths, vertex_disjoint, ClassTag, SymmetryClass, DEFAULT_BUDGET,
};
use fcp_core::{BoxDims, PartitionArray};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Half-lengths with 2..=4 axes, sides in 0..=max and at most one zero.
fn half_lengths(max: usize) -> impl Strategy<Value = BoxDims> {
    prop::collection::vec(0..=max, 2..=4)
        .prop_filter("at most one zero side", |v| v.iter().filter(|&&x| x == 0).count() <= 1)
        .prop_map(|v| BoxDims::new(v).unwrap())
}

/// A random array made weakly decreasing by prefix minima along every axis.
fn partition_in(shape: Vec<usize>, cap: u32) -> impl Strategy<Value = PartitionArray> {
    let len: usize = shape.iter().product();
    prop::collection::vec(0..=cap, len).prop_map(move |mut e| {
        let layout = Layout::new(&shape);
        for off in 0..e.len() {
            let idx = layout.unravel(off);
            for k in 0..shape.len() {
                if idx[k] > 0 {
                    e[off] = e[off].min(e[off - layout.strides()[k]]);
                }
            }
        }
        PartitionArray::new(shape.clone(), e, cap).unwrap()
    })
}

fn fcp_series(d: usize) -> &'static TruncatedSeries {
    static CELLS: OnceLock<Vec<TruncatedSeries>> = OnceLock::new();
    &CELLS.get_or_init(|| (1..=3).map(|d| expand_fcp_genfun(d, 8).unwrap()).collect())[d - 1]
}

fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    if m.is_empty() {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reflection_is_an_involution_and_composes(
        n in half_lengths(3),
        i in 0u32..16,
        j in 0u32..16,
        seed in prop::collection::vec(0usize..64, 4),
    ) {
        let axes = n.sides().len();
        let (i, j) = (AxisSubset::from_mask(i & ((1 << axes) - 1)), AxisSubset::from_mask(j & ((1 << axes) - 1)));
        let doubled = n.doubled();
        prop_assume!(doubled.sides().iter().all(|&s| s > 0));
        let p: Vec<usize> = (0..axes).map(|k| seed[k] % doubled.side(k) + 1).collect();
        let once = rho(i, &n, &p).unwrap();
        let twice = rho(i, &n, once.coords()).unwrap();
        prop_assert_eq!(twice.coords(), &p[..]);
        let composed = rho(i, &n, rho(j, &n, &p).unwrap().coords()).unwrap();
        prop_assert_eq!(composed, rho(i.symmetric_difference(j), &n, &p).unwrap());
    }

    #[test]
    fn diagram_and_array_round_trip_and_predicates_agree(
        (n, pi) in half_lengths(2).prop_flat_map(|n| {
            let shape: Vec<usize> = n.base().iter().map(|s| 2 * s).collect();
            let cap = 2 * n.height() as u32;
            (Just(n), partition_in(shape, cap))
        })
    ) {
        let doubled = n.doubled();
        let diagram = diagram_from_array(&pi, &doubled).unwrap();
        prop_assert_eq!(array_from_diagram(&diagram), pi.clone());
        prop_assert_eq!(is_fc_array(&pi, &n), is_fc_diagram(&diagram, &n));
    }

    #[test]
    fn every_fcp_passes_both_predicates_and_round_trips_through_its_path(
        (n, pick) in half_lengths(2)
            .prop_filter("small", |n| n.sides().iter().sum::<usize>() <= 6)
            .prop_flat_map(|n| (Just(n), any::<prop::sample::Index>()))
    ) {
        let all = enumerate_fcp(&n);
        prop_assert_eq!(count_fcp(&n), all.len().into());
        let pi = pick.get(&all);
        if let Fcp::Array(p) = pi {
            prop_assert!(is_fc_array(p, &n));
            prop_assert!(is_fc_diagram(&diagram_from_array(p, &n.doubled()).unwrap(), &n));
        }
        let path = fcp_to_path(pi, &n).unwrap();
        prop_assert_eq!(path.end(), n.sides().to_vec());
        prop_assert_eq!(&path_to_fcp(&path).unwrap(), pi);
    }

    #[test]
    fn series_coefficients_are_symmetric_and_non_negative(
        d in 1usize..=3,
        exp in prop::collection::vec(0usize..=4, 4),
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let s = fcp_series(d);
        let e: Vec<usize> = exp[..=d].to_vec();
        prop_assume!(e.iter().sum::<usize>() <= 8);
        let p: Vec<usize> = perm.iter().copied().filter(|&k| k <= d).map(|k| e[k]).collect();
        prop_assert_eq!(s.coeff(&e), s.coeff(&p));
        prop_assert!(!s.coeff(&e).is_negative());
        let zeros = e.iter().filter(|&&x| x == 0).count();
        let expected = if zeros >= 2 { BigInt::zero() } else { count_fcp(&BoxDims::new(e.clone()).unwrap()).into() };
        prop_assert_eq!(s.coeff(&e), expected);
    }

    #[test]
    fn qs_series_is_non_negative(cap in 0usize..=10) {
        prop_assert!(expand_qs_genfun(cap).unwrap().has_nonnegative_coefficients());
    }

    #[test]
    fn geometric_inverse_inverts(
        coeffs in prop::collection::vec(-3i64..=3, 5),
        cap in 1usize..=6,
    ) {
        let terms = [vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]];
        let mut all = vec![(vec![0, 0], BigInt::one())];
        all.extend(terms.iter().cloned().zip(coeffs.iter().map(|&c| BigInt::from(c))));
        let s = TruncatedSeries::from_terms(2, cap, all).unwrap();
        let inv = s.geometric_inverse().unwrap();
        prop_assert_eq!(s.mul(&inv).unwrap(), TruncatedSeries::one(2, cap));
        prop_assert_eq!(s.mul(&inv).unwrap(), inv.mul(&s).unwrap());
    }

    #[test]
    fn macmahon_at_one_is_the_product(a in 0usize..=4, b in 0usize..=4, c in 0usize..=4) {
        prop_assert_eq!(macmahon_box_q(a, b, c).unwrap().eval_at_one(), pp_product(a, b, c));
    }

    #[test]
    fn q_division_undoes_multiplication(
        coeffs in prop::collection::vec(-5i64..=5, 1..6),
        h in 1usize..=4,
    ) {
        let p = QPolynomial::from_i64(&coeffs);
        let mut q = p.clone();
        q.mul_one_minus_q_pow(h);
        prop_assert_eq!(q.div_one_minus_q_pow(h).unwrap(), p);
    }

    #[test]
    fn elimination_matches_cofactor_expansion(
        nums in prop::collection::vec(-9i64..=9, 16),
        dens in prop::collection::vec(1i64..=5, 16),
    ) {
        let rows: Vec<Vec<BigRational>> = (0..4)
            .map(|i| (0..4).map(|j| rat(nums[4 * i + j]) / rat(dens[4 * i + j])).collect())
            .collect();
        let m = RationalMatrix::new(rows.clone()).unwrap();
        prop_assert_eq!(det_exact(&m), cofactor_det(&rows));
    }

    #[test]
    fn interpolation_recovers_the_polynomial(
        coeffs in prop::collection::vec(-20i64..=20, 1..=5),
        den in 1i64..=12,
        offset in -5i64..=5,
    ) {
        let p = RatPoly::from_scaled(&coeffs, den);
        let points: Vec<(BigRational, BigRational)> = (0..coeffs.len() as i64)
            .map(|k| {
                let x = rat(offset + k);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        prop_assert_eq!(RatPoly::interpolate(&points).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hat_images_give_disjoint_paths_that_round_trip(
        (n, c, pick) in (1usize..=3, 0usize..=4).prop_flat_map(|(n, c)| (Just(n), Just(c), any::<prop::sample::Index>()))
    ) {
        let class = SymmetryClass::new(ClassTag::Qtc, BoxDims::new(vec![n, n, c]).unwrap()).unwrap();
        let mut members = Vec::new();
        class
            .grid()
            .for_each_solution(DEFAULT_BUDGET, |v| members.push(v.to_vec()))
            .unwrap();
        let pi = PartitionArray::new(vec![n, n], pick.get(&members).clone(), c as u32).unwrap();
        prop_assert!(class.contains(&pi).unwrap());
        let hat = hat_map(&pi, n, c).unwrap();
        prop_assert_eq!(hat_map(&hat, n, c).unwrap(), hat.clone());
        prop_assert!(class.contains(&hat).unwrap());
        let paths = qtcpp_paths(&hat, n, c).unwrap();
        prop_assert!(vertex_disjoint(&paths));
        prop_assert_eq!(paths_to_hat_image(&paths, n, c).unwrap(), hat);
    }
}
