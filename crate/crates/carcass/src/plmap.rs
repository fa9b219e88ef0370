//! Piecewise-linear maps of the unit interval, represented by their
//! breakpoint lists and manipulated exactly.

use crate::error::{Error, Result};
use crate::rational::{format_rational, is_unit_interval, rat_int, Rational};
use num_traits::Zero;

/// Which side of a point a one-sided slope is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A continuous piecewise-linear function [0,1] -> [0,1].
///
/// Invariants: at least two breakpoints, abscissae strictly increasing from 0
/// to 1, ordinates within [0,1]. Flat segments are legal. A map is *canonical*
/// when no three consecutive breakpoints are collinear; [`PlMap::simplify`]
/// produces the canonical form, and derived maps (compositions, inverses,
/// interpolants) are always returned canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlMap {
    points: Vec<(Rational, Rational)>,
}

impl PlMap {
    /// Validates a breakpoint list. The list is kept as given; call
    /// [`simplify`](Self::simplify) for the canonical form.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidBreakpoints { reason };
        if points.len() < 2 {
            return Err(invalid("need at least two breakpoints".into()));
        }
        if !points[0].0.is_zero() {
            return Err(invalid(format!(
                "first abscissa is {}, expected 0",
                format_rational(&points[0].0)
            )));
        }
        if points[points.len() - 1].0 != rat_int(1) {
            return Err(invalid(format!(
                "last abscissa is {}, expected 1",
                format_rational(&points[points.len() - 1].0)
            )));
        }
        for pair in points.windows(2) {
            if pair[0].0 >= pair[1].0 {
                return Err(invalid(format!(
                    "abscissae not strictly increasing at {}",
                    format_rational(&pair[1].0)
                )));
            }
        }
        for (x, y) in &points {
            if !is_unit_interval(y) {
                return Err(invalid(format!(
                    "ordinate {} at {} is outside [0,1]",
                    format_rational(y),
                    format_rational(x)
                )));
            }
        }
        Ok(PlMap { points })
    }

    /// Internal constructor for points that already satisfy the invariants.
    pub(crate) fn from_valid(points: Vec<(Rational, Rational)>) -> Self {
        debug_assert!(PlMap::new(points.clone()).is_ok());
        PlMap { points }
    }

    /// The identity map.
    pub fn identity() -> Self {
        PlMap::from_valid(vec![
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
        ])
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    /// Evaluates at `x`; errors outside [0,1].
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if !is_unit_interval(x) {
            return Err(Error::OutsideUnitInterval { x: x.clone() });
        }
        match self.points.binary_search_by(|p| p.0.cmp(x)) {
            Ok(i) => Ok(self.points[i].1.clone()),
            Err(i) => {
                // x is strictly inside the segment i-1 .. i
                let (x0, y0) = &self.points[i - 1];
                let (x1, y1) = &self.points[i];
                Ok(y0 + (x - x0) * (y1 - y0) / (x1 - x0))
            }
        }
    }

    /// Removes breakpoints that are collinear with their neighbours,
    /// yielding the canonical representation of the same function.
    pub fn simplify(&self) -> PlMap {
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.points.len());
        for p in &self.points {
            while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], p) {
                out.pop();
            }
            out.push(p.clone());
        }
        PlMap { points: out }
    }

    /// Abscissae of genuine slope changes, in increasing order. Endpoints are
    /// never kinks. Works on any representation, canonical or not.
    pub fn kinks(&self) -> Vec<Rational> {
        let p = &self.points;
        let mut out = Vec::new();
        for i in 1..p.len() - 1 {
            if !collinear(&p[i - 1], &p[i], &p[i + 1]) {
                out.push(p[i].0.clone());
            }
        }
        out
    }

    /// Slope of the segment immediately left or right of `x`.
    pub fn one_sided_slope(&self, x: &Rational, side: Side) -> Result<Rational> {
        if !is_unit_interval(x) {
            return Err(Error::OutsideUnitInterval { x: x.clone() });
        }
        let boundary = |side: &'static str| Error::SlopeAtBoundary { x: x.clone(), side };
        let seg = |i: usize| -> Rational {
            let (x0, y0) = &self.points[i];
            let (x1, y1) = &self.points[i + 1];
            (y1 - y0) / (x1 - x0)
        };
        match self.points.binary_search_by(|p| p.0.cmp(x)) {
            Ok(i) => match side {
                Side::Left if i == 0 => Err(boundary("left")),
                Side::Right if i == self.points.len() - 1 => Err(boundary("right")),
                Side::Left => Ok(seg(i - 1)),
                Side::Right => Ok(seg(i)),
            },
            // strictly inside segment i-1 .. i: both sides see the same slope
            Err(i) => Ok(seg(i - 1)),
        }
    }

    /// All solutions of `self(x) = y`, sorted. Errors if some flat segment
    /// sits exactly at `y`, making the solution set a whole interval.
    pub fn preimage_points(&self, y: &Rational) -> Result<Vec<Rational>> {
        let mut out: Vec<Rational> = Vec::new();
        for pair in self.points.windows(2) {
            let (x0, y0) = &pair[0];
            let (x1, y1) = &pair[1];
            if y0 == y1 {
                if y == y0 {
                    return Err(Error::FlatSegmentPreimage { y: y.clone() });
                }
                continue;
            }
            let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
            if y < lo || y > hi {
                continue;
            }
            out.push(x0 + (y - y0) * (x1 - x0) / (y1 - y0));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// The composition `self` after `inner`, in canonical form.
    pub fn compose(&self, inner: &PlMap) -> PlMap {
        // Breakpoints of the composition can only occur at breakpoints of the
        // inner map or where the inner map crosses an outer breakpoint level.
        let mut xs: Vec<Rational> = inner.points.iter().map(|p| p.0.clone()).collect();
        for (b, _) in &self.points {
            for pair in inner.points.windows(2) {
                let (x0, y0) = &pair[0];
                let (x1, y1) = &pair[1];
                if y0 == y1 {
                    // constant stretch: endpoints are already breakpoints
                    continue;
                }
                let (lo, hi) = if y0 < y1 { (y0, y1) } else { (y1, y0) };
                if b < lo || b > hi {
                    continue;
                }
                xs.push(x0 + (b - y0) * (x1 - x0) / (y1 - y0));
            }
        }
        xs.sort();
        xs.dedup();
        let points = xs
            .into_iter()
            .map(|x| {
                let y = self
                    .eval(&inner.eval(&x).expect("inner defined on [0,1]"))
                    .expect("inner range within [0,1]");
                (x, y)
            })
            .collect();
        PlMap::from_valid(points).simplify()
    }

    /// Inverse of an increasing homeomorphism of [0,1], in canonical form.
    pub fn invert_monotone(&self) -> Result<PlMap> {
        let fail = |reason: String| Error::NotHomeomorphism { reason };
        let first = &self.points[0];
        let last = &self.points[self.points.len() - 1];
        if !first.1.is_zero() {
            return Err(fail(format!("maps 0 to {}", format_rational(&first.1))));
        }
        if last.1 != rat_int(1) {
            return Err(fail(format!("maps 1 to {}", format_rational(&last.1))));
        }
        for pair in self.points.windows(2) {
            if pair[0].1 >= pair[1].1 {
                return Err(fail(format!(
                    "not strictly increasing at {}",
                    format_rational(&pair[1].0)
                )));
            }
        }
        let swapped = self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        Ok(PlMap::from_valid(swapped).simplify())
    }
}

/// Exact three-point collinearity test.
fn collinear(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> bool {
    (&b.0 - &a.0) * (&c.1 - &a.1) == (&c.0 - &a.0) * (&b.1 - &a.1)
}

/// Interior indices `i` whose triple `(i-1, i, i+1)` is not collinear, for an
/// arbitrary point list with strictly increasing abscissae.
pub fn collinearity_defects(points: &[(Rational, Rational)]) -> Result<Vec<usize>> {
    for pair in points.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::DuplicateAbscissa { x: pair[0].0.clone() });
        }
    }
    Ok((1..points.len().saturating_sub(1))
        .filter(|&i| !collinear(&points[i - 1], &points[i], &points[i + 1]))
        .collect())
}
