//! Unimodal interval maps: a strictly increasing branch up to a peak of
//! height one, then a strictly decreasing branch back to zero.

use crate::error::{Error, Result};
use crate::plmap::PlMap;
use crate::rational::{format_rational, rat, rat_int, Rational};
use num_traits::Zero;

/// A validated unimodal map: g(0) = g(1) = 0, g(peak) = 1, strictly
/// increasing left of the peak and strictly decreasing right of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarcassMap {
    map: PlMap,
    peak: Rational,
}

/// Whether every kink reaches 0 under iteration within the probed bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirmnessStatus {
    Firm,
    UnknownWithinBound,
}

/// Outcome of probing each kink's orbit for a first hit of 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirmnessVerdict {
    pub status: FirmnessStatus,
    /// Maximum first-hit time over all kinks; present iff firm.
    pub n0: Option<u32>,
    /// Each kink with its first-hit time, `None` if 0 was not reached
    /// within the bound.
    pub hits: Vec<(Rational, Option<u32>)>,
    /// The probe bound that was used.
    pub bound: u32,
}

impl CarcassMap {
    /// Validates the unimodal shape, naming the violated clause on failure.
    pub fn validate(map: PlMap) -> Result<Self> {
        let fail = |clause: String| Error::NotCarcass { clause };
        let pts = map.breakpoints();
        if !pts[0].1.is_zero() {
            return Err(fail(format!("g(0) = {}, expected 0", format_rational(&pts[0].1))));
        }
        if !pts[pts.len() - 1].1.is_zero() {
            return Err(fail(format!(
                "g(1) = {}, expected 0",
                format_rational(&pts[pts.len() - 1].1)
            )));
        }
        let one = rat_int(1);
        let peak_idx = match pts.iter().position(|(_, y)| *y == one) {
            Some(i) => i,
            None => {
                let top = pts.iter().map(|(_, y)| y).max().unwrap();
                return Err(fail(format!(
                    "peak value is {}, expected 1",
                    format_rational(top)
                )));
            }
        };
        for i in 0..pts.len() - 1 {
            let rising = i < peak_idx;
            let (ref x0, ref y0) = pts[i];
            let (_, ref y1) = pts[i + 1];
            if rising && y0 >= y1 {
                return Err(fail(format!(
                    "not strictly increasing left of the peak, at {}",
                    format_rational(x0)
                )));
            }
            if !rising && y0 <= y1 {
                return Err(fail(format!(
                    "not strictly decreasing right of the peak, at {}",
                    format_rational(x0)
                )));
            }
        }
        let peak = pts[peak_idx].0.clone();
        Ok(CarcassMap { map, peak })
    }

    /// The symmetric full tent map, breakpoints (0,0), (1/2,1), (1,0).
    pub fn tent() -> Self {
        let map = PlMap::from_valid(vec![
            (rat_int(0), rat_int(0)),
            (rat(1, 2), rat_int(1)),
            (rat_int(1), rat_int(0)),
        ]);
        CarcassMap { map, peak: rat(1, 2) }
    }

    pub fn map(&self) -> &PlMap {
        &self.map
    }

    /// Abscissa of the maximum.
    pub fn peak(&self) -> &Rational {
        &self.peak
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        self.map.eval(x)
    }

    /// n-fold iterate g(g(...g(x))).
    pub fn iterate(&self, x: &Rational, n: u32) -> Result<Rational> {
        let mut v = x.clone();
        for _ in 0..n {
            v = self.map.eval(&v)?;
        }
        Ok(v)
    }

    /// Probes every kink's orbit for its first hit of 0, up to `bound` steps.
    /// The peak is itself a kink, and g(peak) = 1, g(g(peak)) = 0, so it never
    /// blocks a firm verdict.
    pub fn firmness(&self, bound: u32) -> FirmnessVerdict {
        let mut hits = Vec::new();
        for kink in self.map.kinks() {
            let mut v = kink.clone();
            let mut hit = None;
            for step in 1..=bound {
                v = self.map.eval(&v).expect("orbit stays in [0,1]");
                if v.is_zero() {
                    hit = Some(step);
                    break;
                }
            }
            hits.push((kink, hit));
        }
        let n0 = hits
            .iter()
            .map(|(_, h)| *h)
            .collect::<Option<Vec<u32>>>()
            .map(|times| times.into_iter().max().unwrap_or(0));
        FirmnessVerdict {
            status: if n0.is_some() {
                FirmnessStatus::Firm
            } else {
                FirmnessStatus::UnknownWithinBound
            },
            n0,
            hits,
            bound,
        }
    }

    /// The unique fixed point right of the peak.
    pub fn positive_fixed_point(&self) -> Rational {
        let pts = self.map.breakpoints();
        let peak_idx = pts.iter().position(|(x, _)| *x == self.peak).unwrap();
        for i in peak_idx..pts.len() - 1 {
            let (x0, y0) = &pts[i];
            let (x1, y1) = &pts[i + 1];
            let slope = (y1 - y0) / (x1 - x0);
            // solve y0 + slope (x - x0) = x; the denominator is positive
            // since the branch is decreasing
            let x = (y0 - &slope * x0) / (rat_int(1) - &slope);
            if &x >= x0 && &x <= x1 {
                return x;
            }
        }
        // g(peak) = 1 > peak and g(1) = 0 < 1: the decreasing branch must
        // cross the diagonal
        unreachable!("decreasing branch always crosses the diagonal");
    }
}

impl FirmnessVerdict {
    pub fn is_firm(&self) -> bool {
        self.status == FirmnessStatus::Firm
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plmap::PlMap;

    fn plmap(points: &[(i64, i64, i64, i64)]) -> PlMap {
        PlMap::new(
            points
                .iter()
                .map(|(xn, xd, yn, yd)| (rat(*xn, *xd), rat(*yn, *yd)))
                .collect(),
        )
        .unwrap()
    }

    pub(crate) fn g_a() -> CarcassMap {
        CarcassMap::validate(plmap(&[
            (0, 1, 0, 1),
            (1, 8, 1, 4),
            (1, 4, 1, 1),
            (5, 8, 1, 4),
            (1, 1, 0, 1),
        ]))
        .unwrap()
    }

    pub(crate) fn g_b() -> CarcassMap {
        CarcassMap::validate(plmap(&[(0, 1, 0, 1), (1, 3, 1, 1), (1, 1, 0, 1)])).unwrap()
    }

    #[test]
    fn validate_accepts_the_reference_maps() {
        let t = CarcassMap::validate(CarcassMap::tent().map().clone()).unwrap();
        assert_eq!(t.peak(), &rat(1, 2));
        assert_eq!(g_a().peak(), &rat(1, 4));
        assert_eq!(g_b().peak(), &rat(1, 3));
    }

    #[test]
    fn validate_names_the_violated_clause() {
        let low_peak = plmap(&[(0, 1, 0, 1), (1, 2, 1, 2), (1, 1, 0, 1)]);
        match CarcassMap::validate(low_peak) {
            Err(Error::NotCarcass { clause }) => assert!(clause.contains("peak value")),
            other => panic!("expected peak-value rejection, got {other:?}"),
        }

        let bad_end = plmap(&[(0, 1, 0, 1), (1, 2, 1, 1), (1, 1, 1, 4)]);
        match CarcassMap::validate(bad_end) {
            Err(Error::NotCarcass { clause }) => assert!(clause.contains("g(1)")),
            other => panic!("expected endpoint rejection, got {other:?}"),
        }

        let not_monotone = plmap(&[
            (0, 1, 0, 1),
            (1, 4, 1, 2),
            (1, 2, 1, 4),
            (3, 4, 1, 1),
            (1, 1, 0, 1),
        ]);
        match CarcassMap::validate(not_monotone) {
            Err(Error::NotCarcass { clause }) => assert!(clause.contains("increasing")),
            other => panic!("expected monotonicity rejection, got {other:?}"),
        }

        // a flat stretch violates strictness on the rising side
        let flat = plmap(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 2, 1, 2), (3, 4, 1, 1), (1, 1, 0, 1)]);
        assert!(CarcassMap::validate(flat).is_err());
    }

    #[test]
    fn iterate_follows_orbits() {
        let tent = CarcassMap::tent();
        assert_eq!(tent.iterate(&rat(1, 2), 2).unwrap(), rat_int(0));
        assert_eq!(g_a().iterate(&rat(1, 8), 3).unwrap(), rat_int(0));
        // fixed point of the asymmetric tent stays put
        assert_eq!(g_b().iterate(&rat(3, 5), 5).unwrap(), rat(3, 5));
        assert_eq!(tent.iterate(&rat(1, 3), 1).unwrap(), rat(2, 3));
        assert_eq!(tent.iterate(&rat(1, 3), 2).unwrap(), rat(2, 3));
    }

    #[test]
    fn firmness_of_reference_maps() {
        let tent = CarcassMap::tent();
        let v = tent.firmness(32);
        assert!(v.is_firm());
        assert_eq!(v.n0, Some(2));
        assert_eq!(v.hits, vec![(rat(1, 2), Some(2))]);

        let v = g_a().firmness(32);
        assert_eq!(v.n0, Some(3));
        assert_eq!(
            v.hits,
            vec![
                (rat(1, 8), Some(3)),
                (rat(1, 4), Some(2)),
                (rat(5, 8), Some(3)),
            ]
        );

        let v = g_b().firmness(32);
        assert_eq!(v.n0, Some(2));
    }

    #[test]
    fn firmness_reports_unknown_within_bound() {
        let tent = CarcassMap::tent();
        // the peak needs two steps; a bound of 1 cannot certify
        let v = tent.firmness(1);
        assert_eq!(v.status, FirmnessStatus::UnknownWithinBound);
        assert_eq!(v.n0, None);
        assert_eq!(v.hits, vec![(rat(1, 2), None)]);

        // the kink at 1/4 maps straight onto the positive fixed point 2/3,
        // so its orbit never reaches 0
        let m = plmap(&[(0, 1, 0, 1), (1, 4, 2, 3), (1, 2, 1, 1), (1, 1, 0, 1)]);
        let g = CarcassMap::validate(m).unwrap();
        assert_eq!(g.positive_fixed_point(), rat(2, 3));
        let v = g.firmness(64);
        assert_eq!(v.status, FirmnessStatus::UnknownWithinBound);
        assert_eq!(v.hits, vec![(rat(1, 4), None), (rat(1, 2), Some(2))]);
    }

    #[test]
    fn positive_fixed_points_of_reference_maps() {
        assert_eq!(CarcassMap::tent().positive_fixed_point(), rat(2, 3));
        assert_eq!(g_a().positive_fixed_point(), rat(1, 2));
        assert_eq!(g_b().positive_fixed_point(), rat(3, 5));
    }

    #[test]
    fn fixed_point_lies_right_of_the_peak_and_is_fixed() {
        for g in [CarcassMap::tent(), g_a(), g_b()] {
            let x = g.positive_fixed_point();
            assert!(&x > g.peak());
            assert_eq!(g.eval(&x).unwrap(), x);
        }
    }

    #[test]
    fn preimages_of_the_extremes() {
        for g in [CarcassMap::tent(), g_a(), g_b()] {
            assert_eq!(
                g.map().preimage_points(&rat_int(0)).unwrap(),
                vec![rat_int(0), rat_int(1)]
            );
            assert_eq!(g.map().preimage_points(&rat_int(1)).unwrap(), vec![g.peak().clone()]);
        }
    }
}
