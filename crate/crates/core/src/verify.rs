//! Checkers relating slope length and Culler-Shalen norm.
//!
//! Every comparison is exact: integers and rationals are compared directly,
//! and sums of square roots go through [`cmp_sqrt3`]. Each checker returns a
//! [`VerifyReport`] whose status is `holds`, `equality`, `fails` or
//! `not-applicable`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::cusp::{cmp_sqrt3, CuspLattice};
use crate::error::{Error, Result};
use crate::families::pretzel_dataset;
use crate::manifold::{ManifoldData, SurfaceData};
use crate::norm::{BoundarySlopeSet, CsNormData};
use crate::rational::{int, Rational};
use crate::report::{Status, Value, VerifyReport};
use crate::slope::{slopes_in_range, Slope};

pub const THM1: &str = "thm1";
pub const THM2: &str = "thm2";
pub const THM3: &str = "thm3";
pub const PROP4: &str = "prop4";
pub const PROP6: &str = "prop6";
pub const PROP_LENGTH: &str = "prop-length";
pub const PROP_NORM: &str = "prop-norm";
pub const COR_UBDIAM: &str = "cor-ubdiam";
pub const COR_EULER: &str = "cor-euler";
pub const AGOL: &str = "agol";
pub const FAMILY_RATIO: &str = "family-ratio";

fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn require_finite(slopes: &[&Slope]) -> Result<()> {
    match slopes.iter().any(|s| s.is_meridian()) {
        true => Err(Error::InfiniteSlope),
        false => Ok(()),
    }
}

/// `‖r‖ >= (2/3)·len(r)`, checked as `9·‖r‖² >= 4·len²(r)`.
pub fn verify_norm_ge_length(m: &ManifoldData, r: &Slope) -> VerifyReport {
    let (Some(cusp), Some(norm)) = (m.cusp(), m.norm()) else {
        return VerifyReport::not_applicable(THM1, "needs both cusp and norm data");
    };
    norm_ge_length(cusp, norm, r)
}

fn norm_ge_length(cusp: &CuspLattice, norm: &CsNormData, r: &Slope) -> VerifyReport {
    let value = big(&norm.evaluate(r));
    let len_sq = cusp.squared_length(r);
    let relation = (int(9) * &value * &value).cmp(&(int(4) * &len_sq));
    let report = VerifyReport::compare(
        THM1,
        Value::Rational(value),
        Value::SqrtSum(vec![int(4) * len_sq / int(9)]),
        relation,
        false,
    );
    match report.status {
        Status::Fails => report.with_witness(r.to_string()),
        _ => report,
    }
}

/// Outcome of one checker applied across many slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub statement: String,
    pub checked: usize,
    pub passed: usize,
    pub equalities: Vec<String>,
    pub failures: Vec<VerifyReport>,
}

impl SweepSummary {
    fn collect(statement: &str, items: Vec<(String, VerifyReport)>) -> Self {
        let mut summary = SweepSummary {
            statement: statement.to_string(),
            checked: items.len(),
            passed: 0,
            equalities: Vec::new(),
            failures: Vec::new(),
        };
        for (key, report) in items {
            match report.status {
                Status::Fails => summary.failures.push(report.with_witness(key)),
                Status::Equality => {
                    summary.passed += 1;
                    summary.equalities.push(key);
                }
                _ => summary.passed += 1,
            }
        }
        summary
    }

    pub fn status(&self) -> Status {
        if self.failures.is_empty() {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "statement": self.statement,
            "status": self.status(),
            "checked": self.checked,
            "passed": self.passed,
            "equalities": self.equalities,
            "failures": self.failures.iter().map(VerifyReport::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} slopes", self.status(), self.passed, self.checked)?;
        if let Some(first) = self.failures.first() {
            write!(f, "; first failure {first}")?;
        }
        Ok(())
    }
}

/// Norm-versus-length check over every slope with `|p| <= range`,
/// `1 <= q <= range`, plus the meridian.
pub fn sweep_norm_ge_length(m: &ManifoldData, range: u32) -> Result<SweepSummary> {
    let (Some(cusp), Some(norm)) = (m.cusp(), m.norm()) else {
        return Err(Error::InvalidParameter(
            "sweep needs both cusp and norm data".into(),
        ));
    };
    let items = slopes_in_range(range)
        .par_iter()
        .map(|r| (r.to_string(), norm_ge_length(cusp, norm, r)))
        .collect();
    Ok(SweepSummary::collect(THM1, items))
}

/// Exact extremes of `‖r‖² / len²(r)` over the given slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioExtremes {
    pub min: Rational,
    pub argmin: Vec<Slope>,
    pub max: Rational,
    pub argmax: Vec<Slope>,
}

pub fn norm_length_ratio_extremes(
    cusp: &CuspLattice,
    norm: &CsNormData,
    slopes: &[Slope],
) -> Option<RatioExtremes> {
    let ratios: Vec<(Slope, Rational)> = slopes
        .par_iter()
        .map(|r| {
            let n = big(&norm.evaluate(r));
            (*r, &n * &n / cusp.squared_length(r))
        })
        .collect();
    let min = ratios.iter().map(|(_, v)| v).min()?.clone();
    let max = ratios.iter().map(|(_, v)| v).max()?.clone();
    let pick = |target: &Rational| {
        ratios
            .iter()
            .filter(|(_, v)| v == target)
            .map(|(s, _)| *s)
            .collect()
    };
    Some(RatioExtremes {
        argmin: pick(&min),
        argmax: pick(&max),
        min,
        max,
    })
}

struct SurfacePair {
    delta: Rational,
    bound: Rational,
}

fn surface_pair(delta: u128, sides: [(i64, u64); 2]) -> SurfacePair {
    let bound = sides
        .iter()
        .map(|&(neg_chi, b)| Rational::new(BigInt::from(2 * neg_chi), BigInt::from(b)))
        .max()
        .expect("two sides");
    SurfacePair {
        delta: Rational::from_integer(BigInt::from(delta)),
        bound,
    }
}

impl SurfacePair {
    fn report(self) -> VerifyReport {
        let relation = self.delta.cmp(&self.bound);
        let margin = &self.delta - &self.bound;
        VerifyReport::compare(PROP4, self.delta.into(), self.bound.into(), relation, false)
            .with_note(format!("margin {margin}"))
    }
}

/// Searches for two ideal-point surfaces with distinct slopes and
/// `Δ(s1, s2)·b_i >= 2·(-χ_i)` for both. The first qualifying pair in slope
/// order is reported.
pub fn prop4_hypothesis(m: &ManifoldData) -> VerifyReport {
    let mut eligible: Vec<&SurfaceData> = m
        .surfaces()
        .iter()
        .filter(|s| s.ideal_point && s.euler < 0)
        .collect();
    eligible.sort_by_key(|s| s.slope);
    for (i, s1) in eligible.iter().enumerate() {
        for s2 in &eligible[i + 1..] {
            if s1.slope == s2.slope {
                continue;
            }
            let pair = surface_pair(
                s1.slope.distance(&s2.slope),
                [s1.neg_euler_over_b(), s2.neg_euler_over_b()],
            );
            if pair.delta >= pair.bound {
                return pair
                    .report()
                    .with_witness(s1.slope.to_string())
                    .with_witness(s2.slope.to_string());
            }
        }
    }
    VerifyReport {
        status: Status::Fails,
        ..VerifyReport::not_applicable(PROP4, "no qualifying pair of ideal-point surfaces")
    }
}

/// Abstract pair check for checkerboard surfaces of a reduced alternating
/// diagram with `crossings` crossings: `Δ = 2C >= 2C - 4 >= 2·(-χ_i)`.
pub(crate) fn checkerboard_pair(crossings: i64, chi1: i64, chi2: i64) -> VerifyReport {
    let delta = 2 * crossings;
    let middle = 2 * (-chi1 - chi2);
    let report = surface_pair(delta as u128, [(-chi1, 1), (-chi2, 1)]).report();
    let chain_holds = delta >= middle && middle >= 2 * (-chi1).max(-chi2);
    let report = report.with_note(format!(
        "2C = {delta} >= 2((-chi1) + (-chi2)) = {middle} >= {}",
        2 * (-chi1).max(-chi2)
    ));
    match chain_holds {
        true => report,
        false => VerifyReport {
            status: Status::Fails,
            ..report
        },
    }
}

/// `2·χ_i >= -b1·b2·Δ(s1, s2)` for both surfaces.
pub fn prop6_condition(s1: &SurfaceData, s2: &SurfaceData) -> VerifyReport {
    if s1.slope == s2.slope {
        return VerifyReport::not_applicable(PROP6, "surfaces share a boundary slope");
    }
    let delta = BigInt::from(s1.slope.distance(&s2.slope));
    let bound = -(BigInt::from(s1.boundary_components) * s2.boundary_components * &delta);
    let worst = [s1, s2]
        .into_iter()
        .min_by_key(|s| s.euler)
        .expect("two surfaces");
    let lhs = BigInt::from(2 * worst.euler);
    let relation = lhs.cmp(&bound);
    let mut report = VerifyReport::compare(
        PROP6,
        big(&lhs).into(),
        big(&bound).into(),
        relation,
        false,
    );
    if report.status == Status::Fails {
        report = report.with_witness(format!("{} (euler {})", worst.slope, worst.euler));
    }
    if s1.boundary_components == 1 && s2.boundary_components == 1 {
        let implied = if relation == Ordering::Less {
            "fails"
        } else {
            "holds"
        };
        report = report.with_note(format!(
            "spanning pair: Delta >= 2(-chi_i)/b_i {implied}"
        ));
    }
    report
}

/// `len(r1)/q1 + len(r2)/q2 > |r1 - r2|·len(m)`, the sharp form.
pub fn verify_prop_length(cusp: &CuspLattice, r1: &Slope, r2: &Slope) -> Result<VerifyReport> {
    require_finite(&[r1, r2])?;
    let (a, b) = scaled_lengths(cusp, r1, r2);
    let diff = r1.numeric_value()? - r2.numeric_value()?;
    let c = &diff * &diff * cusp.g_mm();
    let relation = cmp_sqrt3(&a, &b, &c)?;
    let mut report = VerifyReport::compare(
        PROP_LENGTH,
        Value::SqrtSum(vec![a.clone(), b.clone()]),
        Value::SqrtSum(vec![c]),
        relation,
        true,
    );
    if cusp.is_maximal() {
        let stated = cmp_sqrt3(&a, &b, &(&diff * &diff))?;
        let word = if stated == Ordering::Greater {
            "holds"
        } else {
            "fails"
        };
        report = report.with_note(format!("maximal horotorus: > |r1 - r2| = {} {word}", diff.abs()));
        if stated != Ordering::Greater {
            report.status = Status::Fails;
        }
    }
    Ok(report)
}

/// `len²(r1)/q1²` and `len²(r2)/q2²`.
fn scaled_lengths(cusp: &CuspLattice, r1: &Slope, r2: &Slope) -> (Rational, Rational) {
    let scaled = |r: &Slope| cusp.squared_length(r) / int(r.q() * r.q());
    (scaled(r1), scaled(r2))
}

fn brackets(r1: &Slope, r2: &Slope, slopes: &[Slope]) -> bool {
    let finite: Vec<&Slope> = slopes.iter().filter(|s| s.is_finite()).collect();
    let above = |hi: &Slope, lo: &Slope| finite.iter().all(|s| *s <= hi && *s >= lo);
    above(r1, r2) || above(r2, r1)
}

/// `‖r1‖/(q1‖m‖) + ‖r2‖/(q2‖m‖) >= |r1 - r2|`, with equality required when
/// the pair brackets every boundary slope and the meridian carries no weight.
pub fn verify_prop_norm(
    norm: &CsNormData,
    r1: &Slope,
    r2: &Slope,
    boundary: &BoundarySlopeSet,
) -> Result<VerifyReport> {
    require_finite(&[r1, r2])?;
    let meridian = big(&norm.meridian_norm());
    let term = |r: &Slope| big(&norm.evaluate(r)) / (int(r.q()) * &meridian);
    let lhs = term(r1) + term(r2);
    let rhs = (r1.numeric_value()? - r2.numeric_value()?).abs();
    let relation = lhs.cmp(&rhs);
    let mut report = VerifyReport::compare(PROP_NORM, lhs.into(), rhs.into(), relation, false);

    let mut support: Vec<Slope> = boundary.slopes().to_vec();
    support.extend(norm.terms().iter().map(|t| t.slope));
    if brackets(r1, r2, &support) {
        if norm.meridian_weight() > 0 {
            report = report.with_note("equality not asserted: meridian carries weight");
        } else if relation != Ordering::Equal {
            report.status = Status::Fails;
            report = report.with_note("equality expected for a bracketing pair");
        }
    }
    Ok(report)
}

/// The length/difference/norm chain for slopes outside the boundary-slope
/// range: `len(r1)/q1 + len(r2)/q2 > |r1 - r2| = (‖r1‖/q1 + ‖r2‖/q2)/‖m‖`.
pub fn verify_thm_length_norm(m: &ManifoldData, r1: &Slope, r2: &Slope) -> Result<VerifyReport> {
    let (Some(cusp), Some(norm)) = (m.cusp(), m.norm()) else {
        return Ok(VerifyReport::not_applicable(THM2, "needs both cusp and norm data"));
    };
    if !cusp.is_maximal() {
        return Ok(VerifyReport::not_applicable(THM2, "cusp is not marked maximal"));
    }
    require_finite(&[r1, r2])?;
    for s in m.boundary_slopes().finite() {
        if r1 < s {
            return Ok(
                VerifyReport::not_applicable(THM2, format!("{r1} is below boundary slope {s}"))
                    .with_witness(s.to_string()),
            );
        }
        if r2 > s {
            return Ok(
                VerifyReport::not_applicable(THM2, format!("{r2} is above boundary slope {s}"))
                    .with_witness(s.to_string()),
            );
        }
    }
    let norm_side = verify_prop_norm(norm, r1, r2, m.boundary_slopes())?;
    let (a, b) = scaled_lengths(cusp, r1, r2);
    let diff = r1.numeric_value()? - r2.numeric_value()?;
    let relation = cmp_sqrt3(&a, &b, &(&diff * &diff))?;
    let mut report = VerifyReport::compare(
        THM2,
        Value::SqrtSum(vec![a, b]),
        diff.abs().into(),
        relation,
        true,
    );
    let norm_value = norm_side.lhs.clone().expect("norm side is compared");
    report = report.with_note(format!(
        "norm side (|r1|/q1 + |r2|/q2)/|m| = {norm_value} ({})",
        norm_side.status
    ));
    if norm_side.status == Status::Fails {
        report.status = Status::Fails;
    }
    if r1.is_integral() && r2.is_integral() {
        report = report.with_note(format!(
            "integral form: len(r1) + len(r2) > (|r1| + |r2|)/|m| = {norm_value}"
        ));
    }
    Ok(report)
}

/// Integral pairs `r1 >= max(B)`, `r2 <= min(B)` with `|r_i| <= range`.
pub fn sweep_thm_length_norm(m: &ManifoldData, range: u32) -> Result<SweepSummary> {
    let top = ceil_int(&m.boundary_slopes().max_finite().numeric_value()?);
    let bottom = floor_int(&m.boundary_slopes().min_finite().numeric_value()?);
    let n = range as i64;
    let pairs: Vec<(Slope, Slope)> = (top..=n)
        .flat_map(|a| (-n..=bottom).map(move |b| (Slope::integral(a), Slope::integral(b))))
        .collect();
    let items = pairs
        .par_iter()
        .map(|(r1, r2)| {
            verify_thm_length_norm(m, r1, r2).map(|rep| (format!("({r1}, {r2})"), rep))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary::collect(THM2, items))
}

fn ceil_int(x: &Rational) -> i64 {
    x.ceil().to_integer().to_i64().unwrap_or(i64::MAX)
}

fn floor_int(x: &Rational) -> i64 {
    x.floor().to_integer().to_i64().unwrap_or(i64::MIN)
}

/// `diam(B) > ‖r‖/(q·‖m‖)` for a finite boundary slope `r = p/q`.
pub fn verify_thm_diam(m: &ManifoldData, r: &Slope) -> Result<VerifyReport> {
    if r.is_meridian() || !m.boundary_slopes().contains(r) {
        return Err(Error::NotBoundarySlope(*r));
    }
    let Some(norm) = m.norm() else {
        return Ok(VerifyReport::not_applicable(THM3, "needs norm data"));
    };
    let diam = match m.boundary_slopes().diam() {
        Ok(d) => d,
        Err(e) => return Ok(VerifyReport::not_applicable(THM3, e.to_string())),
    };
    let rhs = big(&norm.evaluate(r)) / (int(r.q()) * big(&norm.meridian_norm()));
    let relation = diam.cmp(&rhs);
    let mut report = VerifyReport::compare(THM3, diam.into(), rhs.into(), relation, true);
    if report.status == Status::Fails {
        report = report.with_witness(r.to_string());
    }
    if norm.meridian_weight() > 0 {
        report = report.with_note("meridian carries weight");
    }
    Ok(report)
}

/// Upper bound on the diameter from the extreme boundary slopes, and its
/// max form `2·max_i ‖s_i‖/(‖m‖·Δ(s_i, m)) >= diam`.
pub fn verify_cor_ubdiam(m: &ManifoldData) -> VerifyReport {
    let Some(norm) = m.norm() else {
        return VerifyReport::not_applicable(COR_UBDIAM, "needs norm data");
    };
    let diam = match m.boundary_slopes().diam() {
        Ok(d) => d,
        Err(e) => return VerifyReport::not_applicable(COR_UBDIAM, e.to_string()),
    };
    let meridian = big(&norm.meridian_norm());
    let term = |s: &Slope| big(&norm.evaluate(s)) / (&meridian * int(s.q()));
    let top = m.boundary_slopes().max_finite();
    let bottom = m.boundary_slopes().min_finite();
    let lhs = term(&top) + term(&bottom);
    let relation = lhs.cmp(&diam);
    let mut report = VerifyReport::compare(COR_UBDIAM, lhs.into(), diam.clone().into(), relation, false)
        .with_witness(top.to_string())
        .with_witness(bottom.to_string());

    let max_form = int(2)
        * m.boundary_slopes()
            .finite()
            .map(term)
            .max()
            .expect("at least two finite slopes");
    let max_relation = max_form.cmp(&diam);
    let word = match max_relation {
        Ordering::Greater => "holds",
        Ordering::Equal => "equality",
        Ordering::Less => "fails",
    };
    report = report.with_note(format!("max form: {max_form} >= {diam} {word}"));
    if max_relation == Ordering::Less {
        report.status = Status::Fails;
    }
    report
}

/// `6·((-χ1)/(b1·q1) + (-χ2)/(b2·q2)) > |r1 - r2|`, together with the
/// cleared-denominator form `6·(q2·(-χ1)/b1 + q1·(-χ2)/b2) > Δ(r1, r2)`.
pub fn corollary_euler(
    r1: &Slope,
    r2: &Slope,
    s1: &SurfaceData,
    s2: &SurfaceData,
) -> Result<VerifyReport> {
    for (r, s) in [(r1, s1), (r2, s2)] {
        if s.slope != *r {
            return Err(Error::SlopeMismatch {
                slope: *r,
                surface: s.slope,
            });
        }
        if s.euler >= 0 {
            return Err(Error::NonNegativeEuler(s.euler));
        }
    }
    require_finite(&[r1, r2])?;
    let ratio = |s: &SurfaceData| Rational::new(BigInt::from(-s.euler), BigInt::from(s.boundary_components));
    let (q1, q2) = (int(r1.q()), int(r2.q()));
    let lhs = int(6) * (ratio(s1) / &q1 + ratio(s2) / &q2);
    let rhs = (r1.numeric_value()? - r2.numeric_value()?).abs();
    let relation = lhs.cmp(&rhs);
    let mut report = VerifyReport::compare(COR_EULER, lhs.into(), rhs.into(), relation, true);

    let lhs2 = int(6) * (&q2 * ratio(s1) + &q1 * ratio(s2));
    let delta = Rational::from_integer(BigInt::from(r1.distance(r2)));
    let holds2 = lhs2 > delta;
    report = report.with_note(format!(
        "cleared form: {lhs2} > {delta} {}",
        if holds2 { "holds" } else { "fails" }
    ));
    if !holds2 {
        report.status = Status::Fails;
    }
    if report.status == Status::Fails {
        report = report
            .with_witness(r1.to_string())
            .with_witness(r2.to_string());
    }
    Ok(report)
}

/// `len(s) <= 6·(-χ)/b` for a surface, compared through squares.
pub fn verify_agol(cusp: &CuspLattice, surface: &SurfaceData) -> Result<VerifyReport> {
    let holds = cusp.agol_check(surface)?;
    let bound = Rational::new(
        BigInt::from(-6 * surface.euler),
        BigInt::from(surface.boundary_components),
    );
    let len_sq = cusp.squared_length(&surface.slope);
    let relation = (&bound * &bound).cmp(&len_sq);
    debug_assert_eq!(holds, relation != Ordering::Less);
    let report = VerifyReport::compare(AGOL, bound.into(), Value::SqrtSum(vec![len_sq]), relation, false);
    Ok(match report.status {
        Status::Fails => report.with_witness(surface.slope.to_string()),
        _ => report,
    })
}

/// Certified lower bound `‖m‖/len(m) >= (3n - 9)/6` for the `(-2, 3, n)`
/// pretzel knot exterior.
pub fn pretzel_ratio_bound(n: i64) -> Result<Rational> {
    if n % 3 == 0 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is divisible by 3"
        )));
    }
    let data = pretzel_dataset(n)?;
    let certificate = data
        .meridian_norm_certificate()
        .expect("certificate present when n is prime to 3");
    Ok(big(certificate) / int(6))
}

/// Ratio bounds for each `n`, confirmed to grow with `n`.
pub fn family_ratio_unbounded(ns: &[i64]) -> Result<VerifyReport> {
    let mut bounds = ns
        .iter()
        .map(|&n| pretzel_ratio_bound(n).map(|b| (n, b)))
        .collect::<Result<Vec<_>>>()?;
    if bounds.is_empty() {
        return Err(Error::InvalidParameter("no values of n".into()));
    }
    let witnesses: Vec<String> = bounds
        .iter()
        .map(|(n, b)| format!("n={n}: |m|/len(m) >= {b}"))
        .collect();
    bounds.sort_by_key(|(n, _)| *n);
    let monotone = bounds
        .windows(2)
        .all(|w| w[0].0 == w[1].0 || w[0].1 < w[1].1);
    let (low, high) = (bounds[0].1.clone(), bounds[bounds.len() - 1].1.clone());
    Ok(VerifyReport {
        statement: FAMILY_RATIO.to_string(),
        status: if monotone { Status::Holds } else { Status::Fails },
        relation: Some(high.cmp(&low)),
        lhs: Some(high.into()),
        rhs: Some(low.into()),
        witnesses,
        notes: vec!["length of the meridian is at most 6".into()],
    })
}

/// A checker result, either a single report or a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Report(VerifyReport),
    Sweep(SweepSummary),
}

impl Check {
    pub fn statement(&self) -> &str {
        match self {
            Check::Report(r) => &r.statement,
            Check::Sweep(s) => &s.statement,
        }
    }

    pub fn status(&self) -> Status {
        match self {
            Check::Report(r) => r.status,
            Check::Sweep(s) => s.status(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Check::Report(r) => r.to_json(),
            Check::Sweep(s) => s.to_json(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Report(r) => write!(f, "{r}"),
            Check::Sweep(s) => write!(f, "{s}"),
        }
    }
}

/// Integral slopes just outside the boundary-slope range.
pub fn extremal_integral_pair(boundary: &BoundarySlopeSet) -> Result<(Slope, Slope)> {
    let top = ceil_int(&boundary.max_finite().numeric_value()?);
    let bottom = floor_int(&boundary.min_finite().numeric_value()?);
    Ok((Slope::integral(top), Slope::integral(bottom)))
}

/// Every applicable checker on one manifold, in a fixed order.
pub fn verify_all(m: &ManifoldData, range: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let both = m.cusp().is_some() && m.norm().is_some();
    let (r1, r2) = extremal_integral_pair(m.boundary_slopes())?;

    if both {
        out.push(Check::Sweep(sweep_norm_ge_length(m, range)?));
    }
    if both && m.cusp().is_some_and(CuspLattice::is_maximal) {
        out.push(Check::Report(verify_thm_length_norm(m, &r1, &r2)?));
        out.push(Check::Sweep(sweep_thm_length_norm(m, range)?));
    }
    if m.norm().is_some() {
        for s in m.boundary_slopes().finite() {
            out.push(Check::Report(verify_thm_diam(m, s)?));
        }
    }
    if let Some(cusp) = m.cusp() {
        out.push(Check::Report(verify_prop_length(cusp, &r1, &r2)?));
    }
    if let Some(norm) = m.norm() {
        out.push(Check::Report(verify_prop_norm(norm, &r1, &r2, m.boundary_slopes())?));
        out.push(Check::Report(verify_cor_ubdiam(m)));
    }
    if !m.surfaces().is_empty() {
        out.push(Check::Report(prop4_hypothesis(m)));
    }
    let surfaces = m.surfaces();
    for (i, s1) in surfaces.iter().enumerate() {
        for s2 in &surfaces[i + 1..] {
            if s1.slope == s2.slope {
                continue;
            }
            out.push(Check::Report(prop6_condition(s1, s2)));
            if s1.slope.is_finite() && s2.slope.is_finite() && s1.euler < 0 && s2.euler < 0 {
                out.push(Check::Report(corollary_euler(&s1.slope, &s2.slope, s1, s2)?));
            }
        }
    }
    if let Some(cusp) = m.cusp() {
        for s in surfaces.iter().filter(|s| s.euler < 0) {
            out.push(Check::Report(verify_agol(cusp, s)?));
        }
    }
    if out.is_empty() {
        out.push(Check::Report(VerifyReport::not_applicable(
            "all",
            "no checker applies to this data",
        )));
    }
    Ok(out)
}
