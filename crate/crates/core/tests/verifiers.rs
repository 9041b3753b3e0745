use std::cmp::Ordering;

use cusp_norm::rational::{frac, int};
use cusp_norm::verify::{
    corollary_euler, family_ratio_unbounded, pretzel_ratio_bound, prop4_hypothesis,
    prop6_condition, verify_all, verify_cor_ubdiam, verify_norm_ge_length, verify_prop_length,
    verify_prop_norm, verify_thm_diam, verify_thm_length_norm,
};
use cusp_norm::{
    cmp_sqrt3, fig8_dataset, pretzel_dataset, BoundarySlopeSet, CsNormData, CuspLattice, Error,
    ManifoldData, Rational, Slope, Status, SurfaceData, Value,
};

fn s(p: i64, q: i64) -> Slope {
    Slope::new(p, q).unwrap()
}

fn rat(v: Rational) -> Option<Value> {
    Some(Value::Rational(v))
}

fn surface(slope: Slope, euler: i64) -> SurfaceData {
    SurfaceData::new(slope, euler, 1, true, true).unwrap()
}

/// Norm `2·Δ(r, 0/1) + 2·Δ(r, 2/1)` with boundary slopes `{0, 2}`.
fn synthetic() -> ManifoldData {
    let norm = CsNormData::new(vec![(s(0, 1), 2), (s(2, 1), 2)]).unwrap();
    let boundary = BoundarySlopeSet::new(vec![s(0, 1), s(2, 1)]).unwrap();
    ManifoldData::new("synthetic", None, Some(norm), boundary, vec![]).unwrap()
}

#[test]
fn norm_ge_length_examples() {
    let m = fig8_dataset();
    for r in [s(4, 1), Slope::MERIDIAN] {
        assert_eq!(verify_norm_ge_length(&m, &r).status, Status::Holds);
    }
    let r = verify_norm_ge_length(&m, &s(4, 1));
    assert_eq!(r.lhs, rat(int(16)));
    assert_eq!(r.rhs, Some(Value::SqrtSum(vec![frac(112, 9)])));

    let bare = pretzel_dataset(7).unwrap();
    assert_eq!(verify_norm_ge_length(&bare, &s(1, 1)).status, Status::NotApplicable);
}

#[test]
fn surface_pair_hypothesis_examples() {
    let r = prop4_hypothesis(&pretzel_dataset(7).unwrap());
    assert_eq!(r.status, Status::Holds);
    assert_eq!((r.lhs, r.rhs), (rat(int(4)), rat(int(2))));
    assert_eq!(r.witnesses, vec!["16/1", "20/1"]);

    let plain = SurfaceData::new(s(1, 1), -1, 1, true, false).unwrap();
    let boundary = BoundarySlopeSet::new(vec![s(1, 1)]).unwrap();
    let m = ManifoldData::new("plain", None, None, boundary, vec![plain]).unwrap();
    let r = prop4_hypothesis(&m);
    assert_eq!(r.status, Status::Fails);
    assert!(r.witnesses.is_empty());
}

#[test]
fn euler_lower_bound_examples() {
    let r = prop6_condition(&surface(s(0, 1), -2), &surface(s(4, 1), -1));
    assert_eq!(r.status, Status::Equality);
    assert_eq!((r.lhs, r.rhs), (rat(int(-4)), rat(int(-4))));

    let r = prop6_condition(&surface(s(0, 1), -3), &surface(s(4, 1), -1));
    assert_eq!(r.status, Status::Fails);
    assert!(!r.witnesses.is_empty());

    let m = pretzel_dataset(7).unwrap();
    let r = prop6_condition(&m.surfaces()[0], &m.surfaces()[1]);
    assert_eq!(r.status, Status::Holds);
    assert_eq!((r.lhs, r.rhs), (rat(int(-2)), rat(int(-4))));
}

#[test]
fn length_difference_examples() {
    let fig8 = fig8_dataset();
    let cusp = fig8.cusp().unwrap();
    let r = verify_prop_length(cusp, &s(4, 1), &s(-4, 1)).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(cmp_sqrt3(&int(28), &int(28), &int(64)).unwrap(), Ordering::Greater);

    let square = CuspLattice::default();
    let r = verify_prop_length(&square, &s(1, 1), &s(0, 1)).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.lhs, Some(Value::SqrtSum(vec![int(2), int(1)])));

    let r = verify_prop_length(&square, &s(3, 2), &s(3, 2)).unwrap();
    assert_eq!(r.status, Status::Holds);

    assert_eq!(
        verify_prop_length(&square, &Slope::MERIDIAN, &s(0, 1)),
        Err(Error::InfiniteSlope)
    );
}

#[test]
fn norm_difference_examples() {
    let m = fig8_dataset();
    let norm = m.norm().unwrap();
    let b = m.boundary_slopes();

    let r = verify_prop_norm(norm, &s(5, 1), &s(-5, 1), b).unwrap();
    assert_eq!(r.status, Status::Equality);
    assert_eq!((r.lhs, r.rhs), (rat(int(10)), rat(int(10))));

    let r = verify_prop_norm(norm, &s(0, 1), &s(0, 1), b).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!((r.lhs, r.rhs), (rat(int(8)), rat(int(0))));

    let r = verify_prop_norm(norm, &s(4, 1), &s(-4, 1), b).unwrap();
    assert_eq!(r.status, Status::Equality);
    assert_eq!(r.lhs, rat(int(8)));
}

#[test]
fn norm_difference_with_meridian_weight() {
    let norm = CsNormData::new(vec![(Slope::MERIDIAN, 2), (s(1, 1), 2), (s(-1, 1), 2)]).unwrap();
    let b = BoundarySlopeSet::new(vec![Slope::MERIDIAN, s(1, 1), s(-1, 1)]).unwrap();
    let r = verify_prop_norm(&norm, &s(2, 1), &s(-2, 1), &b).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert!(r.notes.iter().any(|n| n.contains("not asserted")));
}

#[test]
fn length_exceeds_norm_examples() {
    let m = fig8_dataset();
    let r = verify_thm_length_norm(&m, &s(4, 1), &s(-4, 1)).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.lhs, Some(Value::SqrtSum(vec![int(28), int(28)])));
    assert_eq!(r.rhs, rat(int(8)));

    let r = verify_thm_length_norm(&m, &s(6, 1), &s(-6, 1)).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.lhs, Some(Value::SqrtSum(vec![int(48), int(48)])));
    assert_eq!(r.rhs, rat(int(12)));
    assert!(r.notes[0].contains("= 12 (equality)"));

    let r = verify_thm_length_norm(&m, &s(0, 1), &s(-4, 1)).unwrap();
    assert_eq!(r.status, Status::NotApplicable);
    assert_eq!(r.witnesses, vec!["4/1"]);
}

#[test]
fn diameter_bound_examples() {
    let m = fig8_dataset();
    for r in [s(4, 1), s(-4, 1)] {
        let report = verify_thm_diam(&m, &r).unwrap();
        assert_eq!(report.status, Status::Holds);
        assert_eq!(report.to_string(), "holds: 8 > 4");
    }
    let r = verify_thm_diam(&synthetic(), &s(0, 1)).unwrap();
    assert_eq!((r.status, r.lhs, r.rhs), (Status::Holds, rat(int(2)), rat(int(1))));

    assert_eq!(verify_thm_diam(&m, &s(3, 1)), Err(Error::NotBoundarySlope(s(3, 1))));
}

#[test]
fn diameter_upper_bound_examples() {
    let r = verify_cor_ubdiam(&fig8_dataset());
    assert_eq!(r.status, Status::Equality);
    assert_eq!((r.lhs, r.rhs), (rat(int(8)), rat(int(8))));
    assert!(r.notes[0].contains("8 >= 8 equality"));

    let r = verify_cor_ubdiam(&synthetic());
    assert_eq!(r.status, Status::Equality);
    assert_eq!((r.lhs, r.rhs), (rat(int(2)), rat(int(2))));
}

#[test]
fn euler_difference_examples() {
    let m = pretzel_dataset(7).unwrap();
    let (s1, s2) = (&m.surfaces()[0], &m.surfaces()[1]);
    let r = corollary_euler(&s1.slope, &s2.slope, s1, s2).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!((r.lhs, r.rhs), (rat(int(12)), rat(int(4))));
    assert!(r.notes[0].contains("12 > 4 holds"));

    let big = surface(s(0, 1), -100);
    let other = surface(s(4, 1), -1);
    let r = corollary_euler(&big.slope, &other.slope, &big, &other).unwrap();
    assert_eq!(r.status, Status::Holds);

    assert!(matches!(
        corollary_euler(&s(1, 1), &s2.slope, s1, s2),
        Err(Error::SlopeMismatch { .. })
    ));
}

#[test]
fn family_ratio_examples() {
    assert_eq!(pretzel_ratio_bound(7).unwrap(), int(2));
    assert_eq!(pretzel_ratio_bound(13).unwrap(), int(5));
    assert!(pretzel_ratio_bound(9).is_err());

    let r = family_ratio_unbounded(&[7, 11, 13]).unwrap();
    assert_eq!(r.status, Status::Holds);
    assert_eq!((r.lhs, r.rhs), (rat(int(5)), rat(int(2))));
    assert!(family_ratio_unbounded(&[7, 9]).is_err());
}

#[test]
fn figure_eight_passes_everything() {
    let checks = verify_all(&fig8_dataset(), 30).unwrap();
    assert!(checks.iter().all(|c| !c.status().is_failure()));
    let statuses: Vec<(&str, Status)> = checks.iter().map(|c| (c.statement(), c.status())).collect();
    assert!(statuses.contains(&("cor-ubdiam", Status::Equality)));
    assert!(statuses.contains(&("prop-norm", Status::Equality)));
    assert_eq!(statuses.iter().filter(|(s, _)| *s == "thm3").count(), 2);
}

#[test]
fn failures_carry_witnesses() {
    let cusp = CuspLattice::new(int(100), int(0), int(100)).unwrap();
    let norm = CsNormData::new(vec![(s(0, 1), 2), (s(1, 1), 2)]).unwrap();
    let boundary = BoundarySlopeSet::new(vec![s(0, 1), s(1, 1)]).unwrap();
    let m = ManifoldData::new("stretched", Some(cusp), Some(norm), boundary, vec![]).unwrap();
    let r = verify_norm_ge_length(&m, &s(0, 1));
    assert_eq!(r.status, Status::Fails);
    assert_eq!(r.witnesses, vec!["0/1"]);
}
