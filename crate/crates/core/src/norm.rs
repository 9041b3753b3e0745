//! The Culler-Shalen norm as exact data.
//!
//! The norm is stored through its support: boundary slopes `s_i = t_i/u_i`
//! with positive even weights `a_i`, so that `‖r‖ = Σ a_i·Δ(r, s_i)` on slopes
//! and `‖x·m + y·l‖ = Σ a_i·|x·u_i - y·t_i|` on real classes.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NormTerm {
    pub slope: Slope,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsNormData {
    terms: Vec<NormTerm>,
}

impl CsNormData {
    /// Builds the norm from `(slope, weight)` pairs. Weights must be even and
    /// at least 2, slopes pairwise distinct, and at least two slopes present.
    pub fn new(terms: impl IntoIterator<Item = (Slope, i64)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (slope, weight) in terms {
            if weight < 2 || weight % 2 != 0 {
                return Err(Error::InvalidWeight { slope, weight });
            }
            if !seen.insert(slope) {
                return Err(Error::DuplicateSlope(slope));
            }
            out.push(NormTerm {
                slope,
                weight: weight as u64,
            });
        }
        if out.len() < 2 {
            return Err(Error::DegenerateNorm);
        }
        Ok(CsNormData { terms: out })
    }

    pub fn terms(&self) -> &[NormTerm] {
        &self.terms
    }

    /// Weight carried by `slope`; zero when it is not in the support.
    pub fn weight_of(&self, slope: &Slope) -> u64 {
        self.terms
            .iter()
            .find(|t| t.slope == *slope)
            .map_or(0, |t| t.weight)
    }

    pub fn meridian_weight(&self) -> u64 {
        self.weight_of(&Slope::MERIDIAN)
    }

    pub fn evaluate(&self, r: &Slope) -> BigInt {
        self.terms
            .iter()
            .map(|t| BigInt::from(t.weight) * BigInt::from(r.distance(&t.slope)))
            .sum()
    }

    /// Norm of the real class `x·m + y·l`.
    pub fn evaluate_real(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|t| {
                let (tp, tq) = (int(t.slope.p()), int(t.slope.q()));
                int(t.weight as i64) * (x * &tq - y * &tp).abs()
            })
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn meridian_norm(&self) -> BigInt {
        self.evaluate(&Slope::MERIDIAN)
    }

    /// Vertices of the unit ball `{v : ‖v‖ <= 1}`, counterclockwise starting
    /// from the first vertex at angle zero or above.
    ///
    /// The norm is linear between consecutive rays through the support slopes,
    /// so those rays carry exactly the vertices.
    pub fn unit_ball_vertices(&self) -> Vec<(Rational, Rational)> {
        let mut vertices = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            let scale = Rational::from_integer(self.evaluate(&t.slope));
            let x = int(t.slope.p()) / &scale;
            let y = int(t.slope.q()) / &scale;
            vertices.push((-x.clone(), -y.clone()));
            vertices.push((x, y));
        }
        vertices.sort_by(angle_cmp);
        vertices
    }

    /// Least norm over slopes other than the meridian, with a minimizing slope.
    ///
    /// Ties go to the smaller `q`, then the smaller `|p|`, then positive `p`.
    /// Only lattice points inside the current best multiple of the unit ball
    /// are examined.
    pub fn min_norm_nontrivial(&self) -> (BigInt, Slope) {
        let vertices = self.unit_ball_vertices();
        let max_abs = |f: fn(&(Rational, Rational)) -> &Rational| {
            vertices
                .iter()
                .map(|v| f(v).abs())
                .max()
                .unwrap_or_else(Rational::zero)
        };
        let x_extent = max_abs(|v| &v.0);
        let y_extent = max_abs(|v| &v.1);
        let floor = |v: Rational| v.floor().to_integer().to_i64().unwrap_or(i64::MAX);

        let mut best_slope = Slope::LONGITUDE;
        let mut best = self.evaluate(&best_slope);
        let mut q = 1i64;
        loop {
            let bound = Rational::from_integer(best.clone());
            if int(q) > &bound * &y_extent {
                break;
            }
            let p_max = floor(&bound * &x_extent);
            for magnitude in 0..=p_max {
                let signed = if magnitude == 0 { 1 } else { 2 };
                for p in [magnitude, -magnitude].into_iter().take(signed) {
                    if p.unsigned_abs().gcd(&(q as u64)) != 1 {
                        continue;
                    }
                    let r = Slope::new(p, q).expect("primitive pair");
                    let value = self.evaluate(&r);
                    if value < best {
                        best = value;
                        best_slope = r;
                    }
                }
            }
            q += 1;
        }
        (best, best_slope)
    }
}

fn angle_cmp(a: &(Rational, Rational), b: &(Rational, Rational)) -> Ordering {
    let half = |v: &(Rational, Rational)| {
        if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.0 * &b.1 - &a.1 * &b.0;
        Rational::zero().cmp(&cross)
    })
}

/// Non-meridional boundary slopes plus, possibly, the meridian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySlopeSet {
    slopes: Vec<Slope>,
}

impl BoundarySlopeSet {
    pub fn new(slopes: Vec<Slope>) -> Result<Self> {
        let mut seen = HashSet::new();
        for s in &slopes {
            if !seen.insert(*s) {
                return Err(Error::DuplicateSlope(*s));
            }
        }
        if !slopes.iter().any(Slope::is_finite) {
            return Err(Error::NoFiniteBoundarySlope);
        }
        Ok(BoundarySlopeSet { slopes })
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn contains(&self, slope: &Slope) -> bool {
        self.slopes.contains(slope)
    }

    pub fn finite(&self) -> impl Iterator<Item = &Slope> + '_ {
        self.slopes.iter().filter(|s| s.is_finite())
    }

    pub fn max_finite(&self) -> Slope {
        *self.finite().max().expect("at least one finite slope")
    }

    pub fn min_finite(&self) -> Slope {
        *self.finite().min().expect("at least one finite slope")
    }

    /// Greatest minus least non-meridional slope.
    pub fn diam(&self) -> Result<Rational> {
        if self.finite().count() < 2 {
            return Err(Error::DiameterUndefined);
        }
        Ok(self.max_finite().numeric_value()? - self.min_finite().numeric_value()?)
    }
}

pub fn diam(slopes: &BoundarySlopeSet) -> Result<Rational> {
    slopes.diam()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn fig8() -> CsNormData {
        CsNormData::new(vec![(s(4, 1), 2), (s(-4, 1), 2)]).unwrap()
    }

    fn l1() -> CsNormData {
        CsNormData::new(vec![(Slope::MERIDIAN, 2), (Slope::LONGITUDE, 2)]).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn brute_min(norm: &CsNormData, bound: i64) -> (BigInt, Slope) {
        (1..=bound)
            .flat_map(|q| (-bound..=bound).filter_map(move |p| Slope::new(p, q).ok()))
            .map(|r| (norm.evaluate(&r), r))
            .min_by_key(|(v, r)| (v.clone(), r.q(), r.p().unsigned_abs(), r.p() < 0))
            .unwrap()
    }

    #[test]
    fn construction_rules() {
        assert_eq!(
            CsNormData::new(vec![(s(4, 1), 3), (s(-4, 1), 2)]),
            Err(Error::InvalidWeight {
                slope: s(4, 1),
                weight: 3
            })
        );
        assert!(CsNormData::new(vec![(s(4, 1), 0), (s(-4, 1), 2)]).is_err());
        assert_eq!(
            CsNormData::new(vec![(s(4, 1), 2), (s(4, 1), 2)]),
            Err(Error::DuplicateSlope(s(4, 1)))
        );
        assert_eq!(
            CsNormData::new(vec![(s(4, 1), 2)]),
            Err(Error::DegenerateNorm)
        );
    }

    #[test]
    fn evaluation_on_figure_eight() {
        let n = fig8();
        assert_eq!(n.evaluate(&Slope::MERIDIAN), big(4));
        assert_eq!(n.evaluate(&s(4, 1)), big(16));
        assert_eq!(n.evaluate(&s(-4, 1)), big(16));
        assert_eq!(n.evaluate(&Slope::LONGITUDE), big(16));
        assert_eq!(n.evaluate(&s(5, 1)), big(20));
    }

    #[test]
    fn real_evaluation() {
        let n = fig8();
        assert_eq!(n.evaluate_real(&int(1), &int(0)), int(4));
        assert_eq!(n.evaluate_real(&int(2), &int(0)), int(8));
        assert_eq!(n.evaluate_real(&frac(1, 4), &frac(1, 16)), int(1));
    }

    #[test]
    fn meridian_norms() {
        assert_eq!(fig8().meridian_norm(), big(4));
        let n = CsNormData::new(vec![(Slope::LONGITUDE, 2), (s(1, 1), 2)]).unwrap();
        assert_eq!(n.meridian_norm(), big(4));
    }

    #[test]
    fn unit_balls() {
        assert_eq!(
            fig8().unit_ball_vertices(),
            vec![
                (frac(1, 4), frac(1, 16)),
                (frac(-1, 4), frac(1, 16)),
                (frac(-1, 4), frac(-1, 16)),
                (frac(1, 4), frac(-1, 16)),
            ]
        );
        assert_eq!(
            l1().unit_ball_vertices(),
            vec![
                (frac(1, 2), int(0)),
                (int(0), frac(1, 2)),
                (frac(-1, 2), int(0)),
                (int(0), frac(-1, 2)),
            ]
        );
    }

    #[test]
    fn minimal_norms() {
        assert_eq!(fig8().min_norm_nontrivial(), (big(16), Slope::LONGITUDE));
        assert_eq!(l1().min_norm_nontrivial(), (big(2), Slope::LONGITUDE));
        let n = CsNormData::new(vec![(s(7, 2), 2), (s(11, 3), 4)]).unwrap();
        assert_eq!(n.min_norm_nontrivial(), brute_min(&n, 50));
    }

    #[test]
    fn diameters() {
        let b = BoundarySlopeSet::new(vec![s(4, 1), s(-4, 1)]).unwrap();
        assert_eq!(diam(&b).unwrap(), int(8));
        let b = BoundarySlopeSet::new(vec![s(16, 1), s(20, 1)]).unwrap();
        assert_eq!(diam(&b).unwrap(), int(4));
        let b = BoundarySlopeSet::new(vec![Slope::LONGITUDE]).unwrap();
        assert_eq!(diam(&b), Err(Error::DiameterUndefined));
        let b = BoundarySlopeSet::new(vec![Slope::MERIDIAN, s(1, 2), s(-3, 2)]).unwrap();
        assert_eq!(diam(&b).unwrap(), int(2));
        assert_eq!(
            BoundarySlopeSet::new(vec![Slope::MERIDIAN]),
            Err(Error::NoFiniteBoundarySlope)
        );
    }

    fn slope_in(bound: i64) -> impl Strategy<Value = Slope> {
        (-bound..=bound, 0..=bound).prop_filter_map("primitive", |(p, q)| Slope::new(p, q).ok())
    }

    fn any_norm() -> impl Strategy<Value = CsNormData> {
        prop::collection::vec((slope_in(8), 1i64..=3), 2..=5)
            .prop_filter_map("distinct slopes", |terms| {
                CsNormData::new(terms.into_iter().map(|(s, w)| (s, 2 * w))).ok()
            })
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=10).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn norm_axioms(
            n in any_norm(),
            (x, y) in (small_rational(), small_rational()),
            (z, w) in (small_rational(), small_rational()),
            c in small_rational(),
        ) {
            let v = n.evaluate_real(&x, &y);
            prop_assert_eq!(n.evaluate_real(&-x.clone(), &-y.clone()), v.clone());
            prop_assert_eq!(n.evaluate_real(&(&c * &x), &(&c * &y)), c.abs() * &v);
            let sum = n.evaluate_real(&(&x + &z), &(&y + &w));
            prop_assert!(sum <= v + n.evaluate_real(&z, &w));
        }

        #[test]
        fn parity_and_agreement(n in any_norm(), r in slope_in(40)) {
            let value = n.evaluate(&r);
            prop_assert!(value.is_even());
            prop_assert_eq!(
                Rational::from_integer(value),
                n.evaluate_real(&int(r.p()), &int(r.q()))
            );
        }

        #[test]
        fn unit_ball_is_the_level_set(n in any_norm()) {
            let vs = n.unit_ball_vertices();
            prop_assert_eq!(vs.len(), 2 * n.terms().len());
            for i in 0..vs.len() {
                let (a, b) = (&vs[i], &vs[(i + 1) % vs.len()]);
                prop_assert_eq!(n.evaluate_real(&a.0, &a.1), int(1));
                let mid = ((&a.0 + &b.0) / int(2), (&a.1 + &b.1) / int(2));
                prop_assert_eq!(n.evaluate_real(&mid.0, &mid.1), int(1));
                // strictly convex turn at every vertex
                let c = &vs[(i + 2) % vs.len()];
                let cross = (&b.0 - &a.0) * (&c.1 - &b.1) - (&b.1 - &a.1) * (&c.0 - &b.0);
                prop_assert!(cross.is_positive());
                let inner = ((&a.0 + &b.0) / int(3), (&a.1 + &b.1) / int(3));
                prop_assert!(n.evaluate_real(&inner.0, &inner.1) < int(1));
            }
        }

        #[test]
        fn min_norm_matches_enumeration(n in any_norm()) {
            let (value, slope) = n.min_norm_nontrivial();
            prop_assert_eq!(n.evaluate(&slope), value.clone());
            prop_assert_eq!((value, slope), brute_min(&n, 50));
        }
    }
}
