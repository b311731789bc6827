//! The Segre bound against enumeration over all point subsets, and the
//! regularity estimates and certificates built on it.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use segre_core::exact::{int, ExactMatrix, ScalarField};
use segre_core::fatpoints::FatPoint;
use segre_core::segre::{
    cardinality_estimate_check, modified_bound, segre_bound, segre_ratio, separating_hypersurface,
    verify_main_theorem,
};
use segre_core::{Error, FatPointScheme};

fn scheme(n: usize, points: &[(Vec<i64>, u32)]) -> Option<FatPointScheme> {
    let pts = points
        .iter()
        .map(|(c, m)| FatPoint::new(c.iter().map(|&v| int(v)).collect(), *m))
        .collect();
    match FatPointScheme::new(ScalarField::Rational, n, pts) {
        Ok(x) => Some(x),
        Err(Error::DuplicatePoint(..) | Error::InvalidProjectivePoint) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

fn raw_scheme(s: usize, m: u32) -> impl Strategy<Value = (usize, Vec<(Vec<i64>, u32)>)> {
    (1usize..=3).prop_flat_map(move |n| {
        let point = (proptest::collection::vec(-2i64..=2, n + 1), 1..=m);
        (Just(n), proptest::collection::vec(point, 1..=s))
    })
}

/// `max(m_i - 1)` together with `⌊(w_S + dim S - 2)/dim S⌋` over every subset
/// `S` of at least two support points.
fn brute_force_segre(x: &FatPointScheme) -> usize {
    let pts = x.points();
    let single = pts.iter().map(|p| p.mult as usize - 1).max().unwrap();
    let mut best = single;
    for mask in 1u32..1 << pts.len() {
        let chosen: Vec<&FatPoint> = (0..pts.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &pts[i])
            .collect();
        if chosen.len() < 2 {
            continue;
        }
        let rows: Vec<Vec<BigRational>> = chosen.iter().map(|p| p.coords.clone()).collect();
        let dim = ExactMatrix::from_rows(x.field(), x.ambient_dim() + 1, &rows)
            .unwrap()
            .rank()
            - 1;
        let weight: usize = chosen.iter().map(|p| p.mult as usize).sum();
        best = best.max((weight + dim - 2) / dim);
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn segre_bound_matches_subset_enumeration((n, points) in raw_scheme(8, 4)) {
        let Some(x) = scheme(n, &points) else { return Ok(()) };
        let (seg, witness) = segre_bound(&x).unwrap();
        prop_assert_eq!(seg, brute_force_segre(&x));
        prop_assert_eq!(witness.value, seg);
        let mults = x.multiplicities();
        prop_assert_eq!(witness.weight, witness.flat.iter().map(|&i| mults[i] as usize).sum::<usize>());
        for i in 0..mults.len() {
            for j in i + 1..mults.len() {
                prop_assert!(seg + 1 >= (mults[i] + mults[j]) as usize);
            }
        }
    }

    #[test]
    fn regularity_is_bounded_by_segre((n, points) in raw_scheme(4, 3)) {
        let Some(x) = scheme(n, &points) else { return Ok(()) };
        let report = verify_main_theorem(&x).unwrap();
        prop_assert!(report.verdict, "{:?}", report);
        prop_assert!(report.reg_index <= report.segre);
    }

    #[test]
    fn modified_bound_refines_segre((n, points) in raw_scheme(4, 3), d in 1usize..=3) {
        let Some(x) = scheme(n, &points) else { return Ok(()) };
        prop_assume!(x.support_size() >= 2);
        let bound = modified_bound(&x, d).unwrap();
        let (seg, _) = segre_bound(&x).unwrap();
        if d == 1 {
            prop_assert_eq!(bound.value, seg);
        }
        prop_assert_eq!(bound.hilbert_value, x.reduced_on(&bound.subset).unwrap().hilbert_function(d).unwrap());
        prop_assert!(x.regularity_index().unwrap() <= bound.value, "{:?}", bound);
    }

    #[test]
    fn cardinality_estimate_holds((n, points) in raw_scheme(4, 3)) {
        let Some(z) = scheme(n, &points) else { return Ok(()) };
        prop_assume!(z.total_multiplicity() <= 12);
        let report = cardinality_estimate_check(&z).unwrap();
        prop_assert!(report.holds(), "{:?}", report);
    }

    #[test]
    fn separating_forms_vanish_to_the_right_order(
        (n, points) in raw_scheme(4, 3),
        extra in proptest::collection::vec(-2i64..=2, 4),
    ) {
        let Some(z) = scheme(n, &points) else { return Ok(()) };
        let p: Vec<BigRational> = extra[..=n].iter().map(|&v| int(v)).collect();
        prop_assume!(p.iter().any(|c| !c.is_zero()) && z.position_of(&p).is_none());
        let cert = separating_hypersurface(&z, &p).unwrap();
        let (seg, _) = segre_bound(&z.with_point(p.clone(), 1).unwrap()).unwrap();
        prop_assert_eq!(cert.degree, seg);
        prop_assert_eq!(cert.forms.len(), seg);
        let f = z.field();
        // a product of linear forms vanishes at P_i to the order of the
        // number of factors through P_i
        for pt in z.points() {
            let through = cert.forms.iter().filter(|l| f.dot(l, &pt.coords).is_zero()).count();
            prop_assert!(through >= pt.mult as usize);
        }
        prop_assert!(cert.forms.iter().all(|l| !f.dot(l, &p).is_zero()));
        prop_assert!(cert.check(&z, &p).unwrap().passed());
    }
}

#[test]
fn ceiling_and_floor_forms_agree() {
    for k in 1..=6 {
        for w in 1..=60 {
            let smallest = (0..).find(|c| c * k + 1 >= w).unwrap();
            assert_eq!(segre_ratio(w, k), smallest, "w = {w}, k = {k}");
        }
    }
}

#[test]
fn single_point_bound() {
    let x = FatPointScheme::from_integers(2, &[(&[1, 2, 3], 5)]).unwrap();
    let (seg, witness) = segre_bound(&x).unwrap();
    assert_eq!((seg, witness.span_dim), (4, 0));
}

#[test]
fn witness_prefers_smaller_subspaces() {
    // four collinear double points dominate; the plane ties with nothing
    let x = FatPointScheme::from_integers(
        2,
        &[
            (&[1, 0, 0], 2),
            (&[1, 1, 0], 2),
            (&[1, 2, 0], 2),
            (&[1, 3, 0], 2),
            (&[0, 0, 1], 1),
        ],
    )
    .unwrap();
    let (seg, witness) = segre_bound(&x).unwrap();
    assert_eq!(seg, 7);
    assert_eq!(witness.flat, vec![0, 1, 2, 3]);
    assert_eq!(witness.span_dim, 1);
    assert_eq!(x.regularity_index().unwrap(), 7);
}

#[test]
fn separating_certificate_detects_tampering() {
    let z = FatPointScheme::from_integers(2, &[(&[1, 0, 0], 2), (&[0, 1, 0], 1)]).unwrap();
    let p = vec![int(0), int(0), int(1)];
    let cert = separating_hypersurface(&z, &p).unwrap();
    assert!(cert.check(&z, &p).unwrap().passed());
    let mut through_p = cert.clone();
    through_p.forms[0] = vec![int(1), int(-1), int(0)];
    let check = through_p.check(&z, &p).unwrap();
    assert!(!check.nonzero_at_point);
    let mut off_z = cert.clone();
    off_z.forms = vec![vec![int(1), int(1), int(1)]; cert.degree];
    let check = off_z.check(&z, &p).unwrap();
    assert!(!check.in_ideal && check.nonzero_at_point);
}

#[test]
fn six_general_points_in_the_plane_are_not_sharp() {
    let x = FatPointScheme::from_integers(
        2,
        &[
            (&[1, 0, 0], 1),
            (&[0, 1, 0], 1),
            (&[0, 0, 1], 1),
            (&[1, 1, 1], 1),
            (&[1, 2, 3], 1),
            (&[1, -3, 5], 1),
        ],
    )
    .unwrap();
    let report = verify_main_theorem(&x).unwrap();
    assert_eq!((report.reg_index, report.segre), (2, 3));
    assert!(report.verdict && !report.sharp);
}
