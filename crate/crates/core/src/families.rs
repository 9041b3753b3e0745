//! Built-in datasets for concrete knot exteriors.

use num_bigint::BigInt;

use crate::cusp::CuspLattice;
use crate::error::{Error, Result};
use crate::manifold::{ManifoldData, SurfaceData};
use crate::norm::{BoundarySlopeSet, CsNormData};
use crate::rational::int;
use crate::report::VerifyReport;
use crate::slope::Slope;
use crate::verify::checkerboard_pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    FigureEight,
    /// Exterior of the `(-2, 3, n)` pretzel knot.
    Pretzel { n: i64 },
    /// A hyperbolic two-bridge knot, known only through its crossing number
    /// and, optionally, the Euler characteristics of its checkerboard surfaces.
    TwoBridge {
        crossings: i64,
        split: Option<(i64, i64)>,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::FigureEight => Ok(()),
            FamilySpec::Pretzel { n } => check_pretzel(n),
            FamilySpec::TwoBridge { crossings, split } => {
                if crossings < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "crossing number {crossings} is below 3"
                    )));
                }
                match split {
                    Some((chi1, chi2)) => check_split(crossings, chi1, chi2),
                    None => Ok(()),
                }
            }
        }
    }
}

fn check_pretzel(n: i64) -> Result<()> {
    if n < 7 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "pretzel parameter n = {n} must be odd and at least 7"
        )));
    }
    Ok(())
}

fn check_split(crossings: i64, chi1: i64, chi2: i64) -> Result<()> {
    if chi1 >= 0 || chi2 >= 0 {
        return Err(Error::InvalidParameter(format!(
            "Euler characteristics ({chi1}, {chi2}) must both be negative"
        )));
    }
    if chi1 + chi2 != 2 - crossings {
        return Err(Error::InvalidParameter(format!(
            "chi1 + chi2 = {} but 2 - C = {}",
            chi1 + chi2,
            2 - crossings
        )));
    }
    Ok(())
}

fn slope(p: i64, q: i64) -> Slope {
    Slope::new(p, q).expect("built-in slopes are primitive")
}

/// Figure-eight knot exterior on its maximal horotorus.
///
/// The meridian has length 1 and the longitude length `2·sqrt(3)`, at right
/// angles, and the norm is `2·Δ(r, 4/1) + 2·Δ(r, -4/1)`. The surfaces are the
/// two checkerboard once-punctured Klein bottles.
pub fn fig8_dataset() -> ManifoldData {
    let cusp = CuspLattice::new(int(1), int(0), int(12))
        .and_then(CuspLattice::into_maximal)
        .expect("figure-eight cusp is valid");
    let (plus, minus) = (slope(4, 1), slope(-4, 1));
    let norm = CsNormData::new(vec![(plus, 2), (minus, 2)]).expect("valid norm");
    let boundary = BoundarySlopeSet::new(vec![plus, minus]).expect("valid slopes");
    let surfaces = [plus, minus]
        .into_iter()
        .map(|s| SurfaceData::new(s, -1, 1, true, true).expect("valid surface"))
        .collect();
    ManifoldData::new("figure-eight", Some(cusp), Some(norm), boundary, surfaces)
        .expect("figure-eight data is consistent")
}

/// Exterior of the `(-2, 3, n)` pretzel knot, `n` odd and at least 7.
///
/// Carries the two spanning surfaces with slopes `16` and `2n + 6`. When `3`
/// does not divide `n` the meridian norm `3n - 9` is attached as a
/// certificate; no full norm data is stored.
pub fn pretzel_dataset(n: i64) -> Result<ManifoldData> {
    check_pretzel(n)?;
    let s1 = slope(16, 1);
    let s2 = slope(2 * n + 6, 1);
    let surfaces = vec![
        SurfaceData::new(s1, 6 - n, 1, true, true)?,
        SurfaceData::new(s2, -1, 1, true, true)?,
    ];
    let boundary = BoundarySlopeSet::new(vec![s1, s2])?;
    let data = ManifoldData::new(format!("pretzel(-2,3,{n})"), None, None, boundary, surfaces)?;
    Ok(if n % 3 != 0 {
        data.with_meridian_norm_certificate(BigInt::from(3 * n - 9))
    } else {
        data
    })
}

/// Checks the checkerboard pair of a two-bridge knot with `crossings`
/// crossings and checkerboard Euler characteristics `chi1`, `chi2`.
pub fn twobridge_pair(crossings: i64, chi1: i64, chi2: i64) -> Result<VerifyReport> {
    FamilySpec::TwoBridge {
        crossings,
        split: Some((chi1, chi2)),
    }
    .validate()?;
    Ok(checkerboard_pair(crossings, chi1, chi2))
}

/// All checkerboard splits `(chi1, chi2)` with both negative and summing to
/// `2 - crossings`.
pub fn twobridge_splits(crossings: i64) -> Vec<(i64, i64)> {
    (1..crossings - 2)
        .map(|a| (-a, 2 - crossings + a))
        .filter(|&(_, chi2)| chi2 < 0)
        .collect()
}
