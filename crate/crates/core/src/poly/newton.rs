use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use super::uni::IntPoly;
use crate::arith::split_p;

/// One edge of a p-adic Newton polygon.
///
/// The polygon is built from the points `(i, v_p(a_i))`. An edge of slope `s`
/// and horizontal length `len` accounts for exactly `len` roots (with
/// multiplicity) of p-adic valuation `-s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: Ratio<i64>,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub p: u64,
    /// Lower hull vertices `(index, valuation)`, left to right.
    pub vertices: Vec<(usize, i64)>,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// Number of roots with valuation exactly `w`.
    pub fn roots_with_valuation(&self, w: Ratio<i64>) -> usize {
        self.segments.iter().filter(|s| s.slope == -w).map(|s| s.length).sum()
    }

    /// Number of nonzero roots with strictly positive valuation.
    pub fn positive_valuation_roots(&self) -> usize {
        self.segments.iter().filter(|s| s.slope < Ratio::zero()).map(|s| s.length).sum()
    }
}

/// Lower convex hull of `(i, v_p(a_i))` over the nonzero coefficients.
///
/// Returns `None` for the zero polynomial. Roots at zero (leading zero
/// coefficients at the low end) are not represented.
pub fn newton_polygon(f: &IntPoly, p: u64) -> Option<NewtonPolygon> {
    let pts: Vec<(usize, i64)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, split_p(c, p).0 as i64))
        .collect();
    if pts.is_empty() {
        return None;
    }
    let mut hull: Vec<(usize, i64)> = Vec::new();
    for &pt in &pts {
        // Pop while the last turn is not strictly convex from below.
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross = (x2 as i64 - x1 as i64) * (pt.1 - y1) - (y2 - y1) * (pt.0 as i64 - x1 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| {
            let dx = (w[1].0 - w[0].0) as i64;
            Segment { slope: Ratio::new(w[1].1 - w[0].1, dx), length: dx as usize }
        })
        .collect();
    Some(NewtonPolygon { p, vertices: hull, segments })
}

/// Convenience: valuations of the nonzero coefficients, for diagnostics.
pub fn coefficient_valuations(f: &IntPoly, p: u64) -> Vec<Option<u64>> {
    f.coeffs()
        .iter()
        .map(|c: &BigInt| if c.is_zero() { None } else { Some(split_p(c, p).0) })
        .collect()
}
