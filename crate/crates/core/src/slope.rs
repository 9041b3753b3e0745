//! Slopes on the boundary torus in a fixed meridian-longitude basis.
//!
//! A slope `p/q` stands for the pair of primitive homology classes
//! `±(p·m + q·l)`. The stored representative always has `q >= 0`, and the
//! meridian is `1/0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const MERIDIAN: Slope = Slope { p: 1, q: 0 };
    pub const LONGITUDE: Slope = Slope { p: 0, q: 1 };

    /// Canonical slope of the primitive pair `(p, q)`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::NotASlope);
        }
        if p.unsigned_abs().gcd(&q.unsigned_abs()) != 1 {
            return Err(Error::NotPrimitive { p, q });
        }
        let flip = q < 0 || (q == 0 && p < 0);
        if !flip {
            return Ok(Slope { p, q });
        }
        match (p.checked_neg(), q.checked_neg()) {
            (Some(p), Some(q)) => Ok(Slope { p, q }),
            _ => Err(Error::SlopeOverflow),
        }
    }

    /// The integral slope `n/1`.
    pub fn integral(n: i64) -> Self {
        Slope { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_meridian(&self) -> bool {
        self.q == 0
    }

    pub fn is_finite(&self) -> bool {
        self.q > 0
    }

    /// Distance one from the meridian.
    pub fn is_integral(&self) -> bool {
        self.q == 1
    }

    /// Minimal geometric intersection number, `|p·u - q·t|`.
    pub fn distance(&self, other: &Slope) -> u128 {
        let cross = self.p as i128 * other.q as i128 - self.q as i128 * other.p as i128;
        cross.unsigned_abs()
    }

    pub fn numeric_value(&self) -> Result<Rational> {
        if self.is_meridian() {
            return Err(Error::InfiniteSlope);
        }
        Ok(Rational::new(self.p.into(), self.q.into()))
    }
}

pub fn normalize_slope(p: i64, q: i64) -> Result<Slope> {
    Slope::new(p, q)
}

pub fn distance(r: &Slope, s: &Slope) -> u128 {
    r.distance(s)
}

pub fn numeric_value(r: &Slope) -> Result<Rational> {
    r.numeric_value()
}

/// Orders slopes by numeric value, with the meridian above every finite slope.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_meridian(), other.is_meridian()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = self.p as i128 * other.q as i128;
                let rhs = other.p as i128 * self.q as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `"p/q"` or a bare integer `"n"` (read as `n/1`).
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let err = || Error::SlopeParse(text.to_string());
        let (p, q) = match text.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (text, "1"),
        };
        let p: i64 = p.parse().map_err(|_| err())?;
        let q: i64 = q.parse().map_err(|_| err())?;
        Slope::new(p, q)
    }
}

/// All slopes with `|p| <= range` and `1 <= q <= range`, preceded by the
/// meridian. Ordered by increasing `q`, then increasing `p`.
pub fn slopes_in_range(range: u32) -> Vec<Slope> {
    let n = range as i64;
    let mut out = vec![Slope::MERIDIAN];
    for q in 1..=n {
        for p in -n..=n {
            if p.unsigned_abs().gcd(&(q as u64)) == 1 {
                out.push(Slope { p, q });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use num_traits::Signed;
    use proptest::prelude::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_slope(-3, -5).unwrap(), s(3, 5));
        assert_eq!((s(3, 5).p(), s(3, 5).q()), (3, 5));
        assert_eq!(normalize_slope(1, 0).unwrap(), Slope::MERIDIAN);
        assert_eq!(normalize_slope(-1, 0).unwrap(), Slope::MERIDIAN);
        assert_eq!(
            normalize_slope(2, 4),
            Err(Error::NotPrimitive { p: 2, q: 4 })
        );
        assert_eq!(normalize_slope(0, 0), Err(Error::NotASlope));
        assert_eq!(normalize_slope(5, 0), Err(Error::NotPrimitive { p: 5, q: 0 }));
        assert_eq!(normalize_slope(0, -1).unwrap(), Slope::LONGITUDE);
        assert_eq!(normalize_slope(i64::MIN, -1), Err(Error::SlopeOverflow));
    }

    #[test]
    fn distances() {
        assert_eq!(distance(&s(4, 1), &s(-4, 1)), 8);
        assert_eq!(distance(&Slope::MERIDIAN, &s(7, 3)), 3);
        assert_eq!(distance(&s(16, 1), &s(20, 1)), 4);
        assert_eq!(distance(&Slope::MERIDIAN, &Slope::LONGITUDE), 1);
    }

    #[test]
    fn numeric_values() {
        assert_eq!(numeric_value(&s(4, 1)).unwrap(), int(4));
        assert_eq!(numeric_value(&s(-5, 2)).unwrap(), frac(-5, 2));
        assert_eq!(numeric_value(&Slope::MERIDIAN), Err(Error::InfiniteSlope));
    }

    #[test]
    fn text_form() {
        assert_eq!("4/1".parse::<Slope>().unwrap(), s(4, 1));
        assert_eq!("-5/2".parse::<Slope>().unwrap(), s(-5, 2));
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::MERIDIAN);
        assert_eq!("-7".parse::<Slope>().unwrap(), s(-7, 1));
        assert_eq!("3/-4".parse::<Slope>().unwrap(), s(-3, 4));
        assert_eq!(s(-4, 1).to_string(), "-4/1");
        assert!("4/2".parse::<Slope>().is_err());
        assert!("x/1".parse::<Slope>().is_err());
        assert!("".parse::<Slope>().is_err());
    }

    #[test]
    fn ordering_puts_meridian_last() {
        let mut v = vec![Slope::MERIDIAN, s(1, 2), s(-4, 1), s(1, 3)];
        v.sort();
        assert_eq!(v, vec![s(-4, 1), s(1, 3), s(1, 2), Slope::MERIDIAN]);
    }

    #[test]
    fn range_count_small() {
        // 1/0, -1/1, 0/1, 1/1
        assert_eq!(slopes_in_range(1).len(), 4);
        assert_eq!(slopes_in_range(2).len(), 1 + 5 + 2);
    }

    fn primitive() -> impl Strategy<Value = (i64, i64)> {
        (-60i64..=60, -60i64..=60).prop_filter("primitive", |(p, q)| {
            (*p, *q) != (0, 0) && p.unsigned_abs().gcd(&q.unsigned_abs()) == 1
        })
    }

    proptest! {
        #[test]
        fn distance_is_difference_times_denominators((a, b) in primitive(), (c, d) in primitive()) {
            let r = s(a, b);
            let t = s(c, d);
            prop_assert_eq!(r.distance(&t), t.distance(&r));
            prop_assert_eq!(r.distance(&r), 0);
            prop_assert_eq!(r.distance(&Slope::MERIDIAN), r.q() as u128);
            if r.is_finite() && t.is_finite() {
                let diff = r.numeric_value().unwrap() - t.numeric_value().unwrap();
                let scaled = diff.abs() * int(r.q() * t.q());
                prop_assert_eq!(scaled, int(r.distance(&t) as i64));
            }
            prop_assert_eq!(r.distance(&t) == 0, r == t);
        }

        #[test]
        fn normalization_identifies_opposites((a, b) in primitive()) {
            let r = s(a, b);
            prop_assert_eq!(r, s(-a, -b));
            prop_assert_eq!(s(r.p(), r.q()), r);
            prop_assert!(r.q() >= 0);
        }
    }
}
