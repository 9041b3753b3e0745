//! Euclidean geometry of a horotorus.
//!
//! The translation lattice of the horotorus is described by its Gram matrix in
//! the (meridian, longitude) basis. A slope `p/q` is the lattice vector
//! `p·m + q·l`, so its squared length is the quadratic form
//! `p²·g_mm + 2pq·g_ml + q²·g_ll`. Lengths are never square-rooted; angles are
//! handled through `sin²`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::manifold::SurfaceData;
use crate::rational::{int, Rational};
use crate::slope::Slope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspLattice {
    g_mm: Rational,
    g_ml: Rational,
    g_ll: Rational,
    maximal: bool,
}

type Coeffs = (i64, i64);

impl CuspLattice {
    /// Lattice with the given Gram entries; must be positive definite.
    pub fn new(g_mm: Rational, g_ml: Rational, g_ll: Rational) -> Result<Self> {
        let det = &g_mm * &g_ll - &g_ml * &g_ml;
        if !g_mm.is_positive() || !g_ll.is_positive() || !det.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(CuspLattice {
            g_mm,
            g_ml,
            g_ll,
            maximal: false,
        })
    }

    /// Marks this as the maximal horotorus. Every slope then has length at
    /// least one, which is checked here against the systole.
    pub fn into_maximal(mut self) -> Result<Self> {
        let (systole, _) = self.systole_squared();
        if systole < Rational::one() {
            return Err(Error::MaximalViolation(systole));
        }
        self.maximal = true;
        Ok(self)
    }

    pub fn with_maximal(self, maximal: bool) -> Result<Self> {
        if maximal {
            self.into_maximal()
        } else {
            Ok(CuspLattice {
                maximal: false,
                ..self
            })
        }
    }

    pub fn g_mm(&self) -> &Rational {
        &self.g_mm
    }

    pub fn g_ml(&self) -> &Rational {
        &self.g_ml
    }

    pub fn g_ll(&self) -> &Rational {
        &self.g_ll
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// Same lattice with every Gram entry multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        CuspLattice::new(
            &self.g_mm * factor,
            &self.g_ml * factor,
            &self.g_ll * factor,
        )
    }

    fn inner(&self, a: Coeffs, b: Coeffs) -> Rational {
        let (a0, a1) = (int(a.0), int(a.1));
        let (b0, b1) = (int(b.0), int(b.1));
        &a0 * &b0 * &self.g_mm + (&a0 * &b1 + &a1 * &b0) * &self.g_ml + &a1 * &b1 * &self.g_ll
    }

    pub fn squared_length(&self, r: &Slope) -> Rational {
        self.inner((r.p(), r.q()), (r.p(), r.q()))
    }

    /// Inner product of the lattice vectors `p_r·m + q_r·l` and `p_s·m + q_s·l`.
    pub fn dot(&self, r: &Slope, s: &Slope) -> Rational {
        self.inner((r.p(), r.q()), (s.p(), s.q()))
    }

    /// Squared area of the torus: the Gram determinant.
    pub fn area_squared(&self) -> Rational {
        &self.g_mm * &self.g_ll - &self.g_ml * &self.g_ml
    }

    pub fn sin_sq_angle(&self, r: &Slope, s: &Slope) -> Rational {
        let lr = self.squared_length(r);
        let ls = self.squared_length(s);
        let dot = self.dot(r, s);
        let prod = &lr * &ls;
        (&prod - &dot * &dot) / prod
    }

    /// Checks `Δ(r,s)²·area² = len²(r)·len²(s)·sin²θ` exactly.
    pub fn lemma1_identity(&self, r: &Slope, s: &Slope) -> bool {
        let delta = Rational::from_integer(BigInt::from(r.distance(s)));
        let lhs = &delta * &delta * self.area_squared();
        let rhs = self.squared_length(r) * self.squared_length(s) * self.sin_sq_angle(r, s);
        lhs == rhs
    }

    /// Shortest slope and its squared length, by Lagrange-Gauss reduction.
    ///
    /// Ties prefer the meridian, then smaller `q`, then smaller `|p|`, then
    /// positive `p`.
    pub fn systole_squared(&self) -> (Rational, Slope) {
        let mut u: Coeffs = (1, 0);
        let mut v: Coeffs = (0, 1);
        loop {
            if self.inner(u, u) > self.inner(v, v) {
                std::mem::swap(&mut u, &mut v);
            }
            let mu = round_half_up(&(self.inner(u, v) / self.inner(u, u)));
            if mu == 0 {
                break;
            }
            v = (v.0 - mu * u.0, v.1 - mu * u.1);
        }
        let candidates = [u, v, (u.0 + v.0, u.1 + v.1), (u.0 - v.0, u.1 - v.1)];
        candidates
            .iter()
            .map(|&c| {
                let slope = Slope::new(c.0, c.1).expect("reduced basis vectors are primitive");
                (self.inner(c, c), slope)
            })
            .min_by(|(la, sa), (lb, sb)| la.cmp(lb).then_with(|| tie_key(sa).cmp(&tie_key(sb))))
            .expect("candidate list is non-empty")
    }

    /// Exact form of `len(s) <= 6·(-χ)/b` for the surface's boundary slope.
    pub fn agol_check(&self, surface: &SurfaceData) -> Result<bool> {
        if surface.euler >= 0 {
            return Err(Error::NonNegativeEuler(surface.euler));
        }
        let b = int(surface.boundary_components as i64);
        let chi = int(surface.euler);
        Ok(self.squared_length(&surface.slope) * &b * &b <= int(36) * &chi * &chi)
    }
}

fn tie_key(s: &Slope) -> (bool, i64, u64, bool) {
    (!s.is_meridian(), s.q(), s.p().unsigned_abs(), s.p() < 0)
}

fn round_half_up(x: &Rational) -> i64 {
    let shifted = x + Rational::new(BigInt::one(), BigInt::from(2));
    shifted
        .numer()
        .div_floor(shifted.denom())
        .to_i64()
        .expect("reduction coefficient fits in i64")
}

/// The formal quantity `√a + √b - √c` over non-negative rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtSum {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl SqrtSum {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        for x in [&a, &b, &c] {
            if x.is_negative() {
                return Err(Error::NegativeRadicand(x.clone()));
            }
        }
        Ok(SqrtSum { a, b, c })
    }

    /// Sign of the quantity, using at most two squarings.
    ///
    /// `√a + √b > √c` iff `2√(ab) > c - a - b`; a negative right side settles
    /// it, otherwise compare `4ab` with `(c - a - b)²`.
    pub fn sign(&self) -> Ordering {
        let d = &self.c - &self.a - &self.b;
        if d.is_negative() {
            return Ordering::Greater;
        }
        let lhs = int(4) * &self.a * &self.b;
        lhs.cmp(&(&d * &d))
    }
}

/// Exact sign of `√a + √b - √c`.
pub fn cmp_sqrt3(a: &Rational, b: &Rational, c: &Rational) -> Result<Ordering> {
    Ok(SqrtSum::new(a.clone(), b.clone(), c.clone())?.sign())
}

impl Default for CuspLattice {
    /// The unit square lattice.
    fn default() -> Self {
        CuspLattice {
            g_mm: Rational::one(),
            g_ml: Rational::zero(),
            g_ll: Rational::one(),
            maximal: false,
        }
    }
}
