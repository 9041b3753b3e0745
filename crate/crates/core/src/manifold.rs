use num_bigint::BigInt;

use crate::cusp::CuspLattice;
use crate::error::{Error, Result};
use crate::norm::{BoundarySlopeSet, CsNormData};
use crate::slope::Slope;

/// An essential surface, recorded by its boundary data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceData {
    pub slope: Slope,
    /// Euler characteristic.
    pub euler: i64,
    pub boundary_components: u64,
    /// No component is a semi-fiber.
    pub strict: bool,
    /// Associated with an ideal point of the character variety.
    pub ideal_point: bool,
}

impl SurfaceData {
    pub fn new(
        slope: Slope,
        euler: i64,
        boundary_components: u64,
        strict: bool,
        ideal_point: bool,
    ) -> Result<Self> {
        if boundary_components == 0 {
            return Err(Error::NoBoundaryComponents);
        }
        Ok(SurfaceData {
            slope,
            euler,
            boundary_components,
            strict,
            ideal_point,
        })
    }

    /// `-χ / b`, as a pair for exact cross-multiplication.
    pub(crate) fn neg_euler_over_b(&self) -> (i64, u64) {
        (-self.euler, self.boundary_components)
    }
}

/// Everything known about one manifold: the unit of file I/O and verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldData {
    name: String,
    cusp: Option<CuspLattice>,
    norm: Option<CsNormData>,
    boundary_slopes: BoundarySlopeSet,
    surfaces: Vec<SurfaceData>,
    meridian_norm_certificate: Option<BigInt>,
}

impl ManifoldData {
    /// Validates that norm and surface slopes are all boundary slopes.
    pub fn new(
        name: impl Into<String>,
        cusp: Option<CuspLattice>,
        norm: Option<CsNormData>,
        boundary_slopes: BoundarySlopeSet,
        surfaces: Vec<SurfaceData>,
    ) -> Result<Self> {
        let mut errors = Vec::new();
        if let Some(norm) = &norm {
            errors.extend(
                norm.terms()
                    .iter()
                    .filter(|t| !boundary_slopes.contains(&t.slope))
                    .map(|t| Error::NormSlopeNotBoundary(t.slope)),
            );
        }
        errors.extend(
            surfaces
                .iter()
                .filter(|s| !boundary_slopes.contains(&s.slope))
                .map(|s| Error::SurfaceSlopeNotBoundary(s.slope)),
        );
        if !errors.is_empty() {
            return Err(Error::Invalid(errors));
        }
        Ok(ManifoldData {
            name: name.into(),
            cusp,
            norm,
            boundary_slopes,
            surfaces,
            meridian_norm_certificate: None,
        })
    }

    /// Attaches a meridian norm value known from outside the stored norm data.
    pub fn with_meridian_norm_certificate(mut self, value: BigInt) -> Self {
        self.meridian_norm_certificate = Some(value);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cusp(&self) -> Option<&CuspLattice> {
        self.cusp.as_ref()
    }

    pub fn norm(&self) -> Option<&CsNormData> {
        self.norm.as_ref()
    }

    pub fn boundary_slopes(&self) -> &BoundarySlopeSet {
        &self.boundary_slopes
    }

    pub fn surfaces(&self) -> &[SurfaceData] {
        &self.surfaces
    }

    pub fn meridian_norm_certificate(&self) -> Option<&BigInt> {
        self.meridian_norm_certificate.as_ref()
    }

    /// The norm of the meridian, from the norm data when present and from the
    /// certificate otherwise.
    pub fn meridian_norm(&self) -> Option<BigInt> {
        match &self.norm {
            Some(norm) => Some(norm.meridian_norm()),
            None => self.meridian_norm_certificate.clone(),
        }
    }
}
