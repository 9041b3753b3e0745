//! The manifold document format.
//!
//! ```json
//! {
//!   "boundary_slopes": ["4/1", "-4/1"],
//!   "culler_shalen": {"terms": [{"slope": "4/1", "weight": 2}, {"slope": "-4/1", "weight": 2}]},
//!   "cusp": {"g_ll": "12", "g_ml": "0", "g_mm": "1", "maximal": true},
//!   "name": "figure-eight",
//!   "surfaces": [{"boundary_components": 1, "euler": -1, "ideal_point": true, "slope": "4/1", "strict": true}]
//! }
//! ```
//!
//! Rationals and slopes are always strings. Everything except `name` and
//! `boundary_slopes` is optional. Loading re-validates every invariant and
//! reports all violations at once.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cusp::CuspLattice;
use crate::error::Error;
use crate::manifold::{ManifoldData, SurfaceData};
use crate::norm::{BoundarySlopeSet, CsNormData};
use crate::rational::{format_rational, parse_rational};
use crate::slope::Slope;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("invalid manifold data: {0}")]
    Invalid(#[from] Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cusp: Option<CuspDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub culler_shalen: Option<NormDocument>,
    pub boundary_slopes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub surfaces: Vec<SurfaceDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meridian_norm_certificate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspDocument {
    pub g_mm: String,
    pub g_ml: String,
    pub g_ll: String,
    #[serde(default)]
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormDocument {
    pub terms: Vec<TermDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub slope: String,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDocument {
    pub slope: String,
    pub euler: i64,
    pub boundary_components: i64,
    #[serde(default)]
    pub strict: bool,
    #[serde(default)]
    pub ideal_point: bool,
}

impl From<&ManifoldData> for ManifoldDocument {
    fn from(m: &ManifoldData) -> Self {
        ManifoldDocument {
            name: m.name().to_string(),
            cusp: m.cusp().map(|c| CuspDocument {
                g_mm: format_rational(c.g_mm()),
                g_ml: format_rational(c.g_ml()),
                g_ll: format_rational(c.g_ll()),
                maximal: c.is_maximal(),
            }),
            culler_shalen: m.norm().map(|n| NormDocument {
                terms: n
                    .terms()
                    .iter()
                    .map(|t| TermDocument {
                        slope: t.slope.to_string(),
                        weight: t.weight as i64,
                    })
                    .collect(),
            }),
            boundary_slopes: m
                .boundary_slopes()
                .slopes()
                .iter()
                .map(ToString::to_string)
                .collect(),
            surfaces: m
                .surfaces()
                .iter()
                .map(|s| SurfaceDocument {
                    slope: s.slope.to_string(),
                    euler: s.euler,
                    boundary_components: s.boundary_components as i64,
                    strict: s.strict,
                    ideal_point: s.ideal_point,
                })
                .collect(),
            meridian_norm_certificate: m.meridian_norm_certificate().map(ToString::to_string),
        }
    }
}

fn keep<T>(errors: &mut Vec<Error>, result: Result<T, Error>) -> Option<T> {
    result.map_err(|e| errors.push(e)).ok()
}

impl ManifoldDocument {
    /// Validates the document into manifold data, collecting every violation.
    pub fn into_manifold(self) -> Result<ManifoldData, Error> {
        let mut errors = Vec::new();

        let cusp = self.cusp.as_ref().and_then(|c| {
            let g_mm = keep(&mut errors, parse_rational(&c.g_mm));
            let g_ml = keep(&mut errors, parse_rational(&c.g_ml));
            let g_ll = keep(&mut errors, parse_rational(&c.g_ll));
            let lattice = keep(&mut errors, CuspLattice::new(g_mm?, g_ml?, g_ll?))?;
            keep(&mut errors, lattice.with_maximal(c.maximal))
        });

        let mut term_slopes = Vec::new();
        let norm = self.culler_shalen.as_ref().and_then(|n| {
            let mut terms = Vec::new();
            let mut complete = true;
            for t in &n.terms {
                match keep(&mut errors, t.slope.parse::<Slope>()) {
                    Some(slope) if t.weight < 2 || t.weight % 2 != 0 => {
                        errors.push(Error::InvalidWeight {
                            slope,
                            weight: t.weight,
                        });
                        term_slopes.push(slope);
                        complete = false;
                    }
                    Some(slope) => {
                        terms.push((slope, t.weight));
                        term_slopes.push(slope);
                    }
                    None => complete = false,
                }
            }
            if !complete {
                return None;
            }
            keep(&mut errors, CsNormData::new(terms))
        });

        let parsed: Vec<Option<Slope>> = self
            .boundary_slopes
            .iter()
            .map(|s| keep(&mut errors, s.parse::<Slope>()))
            .collect();
        let boundary = parsed
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .and_then(|slopes| keep(&mut errors, BoundarySlopeSet::new(slopes)));

        let surfaces: Vec<Option<SurfaceData>> = self
            .surfaces
            .iter()
            .map(|s| {
                let slope = keep(&mut errors, s.slope.parse::<Slope>())?;
                let b = u64::try_from(s.boundary_components).unwrap_or(0);
                keep(
                    &mut errors,
                    SurfaceData::new(slope, s.euler, b, s.strict, s.ideal_point),
                )
            })
            .collect();

        let certificate = self.meridian_norm_certificate.as_ref().and_then(|c| {
            keep(
                &mut errors,
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::RationalParse(c.clone())),
            )
        });

        if let Some(boundary) = &boundary {
            for slope in &term_slopes {
                if !boundary.contains(slope) {
                    errors.push(Error::NormSlopeNotBoundary(*slope));
                }
            }
            for s in surfaces.iter().flatten() {
                if !boundary.contains(&s.slope) {
                    errors.push(Error::SurfaceSlopeNotBoundary(s.slope));
                }
            }
        }

        if !errors.is_empty() {
            return Err(Error::Invalid(errors));
        }
        let boundary = boundary.expect("no errors means boundary parsed");
        let surfaces = surfaces.into_iter().flatten().collect();
        let data = ManifoldData::new(self.name, cusp, norm, boundary, surfaces)?;
        Ok(match certificate {
            Some(c) => data.with_meridian_norm_certificate(c),
            None => data,
        })
    }
}

/// Deterministic pretty JSON with sorted keys.
pub fn to_json_string(m: &ManifoldData) -> String {
    let value = serde_json::to_value(ManifoldDocument::from(m)).expect("document serializes");
    let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
    text.push('\n');
    text
}

pub fn from_json_str(text: &str) -> Result<ManifoldData, LoadError> {
    let doc: ManifoldDocument = serde_json::from_str(text)?;
    Ok(doc.into_manifold()?)
}

pub fn load(path: impl AsRef<Path>) -> Result<ManifoldData, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    from_json_str(&text)
}

pub fn save(m: &ManifoldData, path: impl AsRef<Path>) -> Result<(), LoadError> {
    let path = path.as_ref();
    fs::write(path, to_json_string(m)).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}
