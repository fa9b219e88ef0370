//! Conjugation of unimodal maps by increasing piecewise linear
//! homeomorphisms, and detection of tent conjugates from lattice data.

use crate::error::{Error, Result};
use crate::lattice::PreimageLattice;
use crate::plmap::{PlMap, Side};
use crate::rational::{rat_int, Rational};
use crate::unimodal::CarcassMap;
use num_bigint::BigInt;
use num_traits::Signed;

/// h g h^-1 for an increasing homeomorphism h of the unit interval.
pub fn conjugate_by(h: &PlMap, base: &CarcassMap) -> Result<CarcassMap> {
    let inverse = h.invert_monotone()?;
    let composed = h.compose(base.map()).compose(&inverse);
    let result = CarcassMap::validate(composed)?;
    if !verify_conjugacy(h, base, &result)? {
        return Err(Error::internal("conjugation does not satisfy its own equation"));
    }
    Ok(result)
}

/// Does h g1 = g2 h hold exactly?
pub fn verify_conjugacy(h: &PlMap, g1: &CarcassMap, g2: &CarcassMap) -> Result<bool> {
    h.invert_monotone()?;
    let lhs = h.compose(g1.map());
    let rhs = g2.map().compose(h);
    Ok(lhs == rhs)
}

/// The piecewise linear map sending level n of one lattice to level n of
/// another, node by node, in canonical form.
pub fn conjugacy_from_lattices(
    domain: &PreimageLattice,
    image: &PreimageLattice,
    n: u32,
) -> Result<PlMap> {
    let xs = domain.level(n)?;
    let ys = image.level(n)?;
    let points = xs.iter().cloned().zip(ys.iter().cloned()).collect();
    Ok(PlMap::new(points)?.simplify())
}

/// Sup-norm distances between consecutive lattice-sampled conjugacies:
/// entries (n, max |h_n - h_{n+1}|) for n = 2 up to one below the shared
/// depth. A tail of zeros means the sampled maps have stabilized.
pub fn convergence_profile(
    domain: &PreimageLattice,
    image: &PreimageLattice,
) -> Result<Vec<(u32, Rational)>> {
    let depth = domain.depth().min(image.depth());
    let mut profile = Vec::new();
    for n in 2..depth {
        let here = conjugacy_from_lattices(domain, image, n)?;
        let next = conjugacy_from_lattices(domain, image, n + 1)?;
        // both maps are linear between consecutive level-(n+1) nodes, so
        // the sup norm of the difference is attained on those nodes
        let mut worst = rat_int(0);
        for x in domain.level(n + 1)? {
            let gap = (here.eval(x)? - next.eval(x)?).abs();
            if gap > worst {
                worst = gap;
            }
        }
        profile.push((n, worst));
    }
    Ok(profile)
}

/// Local data any tent conjugate must reproduce: slope 2 leaving the
/// origin, and one-sided slopes multiplying to 4 at the fixed point right
/// of the peak.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConditions {
    pub slope_at_zero: Rational,
    pub positive_fixed_point: Rational,
    pub fixed_point_slope_product: Rational,
}

impl NecessaryConditions {
    pub fn slope_at_zero_holds(&self) -> bool {
        self.slope_at_zero == rat_int(2)
    }

    pub fn slope_product_holds(&self) -> bool {
        self.fixed_point_slope_product == rat_int(4)
    }

    pub fn all_hold(&self) -> bool {
        self.slope_at_zero_holds() && self.slope_product_holds()
    }
}

pub fn necessary_conditions(g: &CarcassMap) -> Result<NecessaryConditions> {
    let slope_at_zero = g.map().one_sided_slope(&rat_int(0), Side::Right)?;
    let fixed = g.positive_fixed_point();
    let left = g.map().one_sided_slope(&fixed, Side::Left)?;
    let right = g.map().one_sided_slope(&fixed, Side::Right)?;
    Ok(NecessaryConditions {
        slope_at_zero,
        positive_fixed_point: fixed,
        fixed_point_slope_product: left * right,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailedCondition {
    SlopeAtZero { actual: Rational },
    FixedPointSlopeProduct { actual: Rational },
}

/// Verdict of [`detect_pl_conjugacy`].
///
/// `Pl` reports the initial tangent w and the threshold r below which
/// every lattice node sits at w times the matching dyadic, the signature
/// of a conjugating homeomorphism that is linear near the origin. `NotPl`
/// is only issued on the strength of a failed necessary condition;
/// anything short of that with no exhibited linear zone stays
/// `Inconclusive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlConjugacyVerdict {
    Pl { tangent: Rational, threshold: Rational },
    NotPl { failed_condition: FailedCondition },
    Inconclusive,
}

pub fn detect_pl_conjugacy(lat: &PreimageLattice) -> Result<PlConjugacyVerdict> {
    if lat.depth() < 3 {
        return Err(Error::InsufficientDepth { depth: lat.depth(), required: 3 });
    }
    let g = lat.source();
    let conditions = necessary_conditions(g)?;
    if !conditions.slope_at_zero_holds() {
        return Ok(PlConjugacyVerdict::NotPl {
            failed_condition: FailedCondition::SlopeAtZero { actual: conditions.slope_at_zero },
        });
    }
    if !conditions.slope_product_holds() {
        return Ok(PlConjugacyVerdict::NotPl {
            failed_condition: FailedCondition::FixedPointSlopeProduct {
                actual: conditions.fixed_point_slope_product,
            },
        });
    }

    let depth = lat.depth();
    let tangent =
        lat.point(depth, 1)? * Rational::from_integer(BigInt::from(1) << (depth - 1) as usize);
    let kinks = g.map().kinks();
    let first_kink = kinks.first().expect("a unimodal map has at least its peak kink");
    let threshold = g.eval(first_kink)?;

    let zero = rat_int(0);
    let mut witnessed = false;
    for n in 1..=depth {
        let denominator = BigInt::from(1) << (n - 1) as usize;
        for (k, x) in lat.level(n)?.iter().enumerate() {
            if *x > zero && *x < threshold {
                let expected = &tangent * Rational::new(k.into(), denominator.clone());
                if *x != expected {
                    return Ok(PlConjugacyVerdict::Inconclusive);
                }
                witnessed = true;
            }
        }
    }
    if witnessed {
        Ok(PlConjugacyVerdict::Pl { tangent, threshold })
    } else {
        Ok(PlConjugacyVerdict::Inconclusive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeLimits;
    use crate::rational::rat;

    fn h_a() -> PlMap {
        PlMap::new(vec![
            (rat_int(0), rat_int(0)),
            (rat(1, 2), rat(1, 4)),
            (rat_int(1), rat_int(1)),
        ])
        .unwrap()
    }

    fn g_a() -> CarcassMap {
        conjugate_by(&h_a(), &CarcassMap::tent()).unwrap()
    }

    fn g_b() -> CarcassMap {
        CarcassMap::validate(
            PlMap::new(vec![
                (rat_int(0), rat_int(0)),
                (rat(1, 3), rat_int(1)),
                (rat_int(1), rat_int(0)),
            ])
            .unwrap(),
        )
        .unwrap()
    }

    fn build(g: &CarcassMap, depth: u32) -> PreimageLattice {
        PreimageLattice::build(g, depth, &LatticeLimits::default()).unwrap()
    }

    #[test]
    fn conjugating_the_tent_matches_hand_computation() {
        let expected = PlMap::new(vec![
            (rat_int(0), rat_int(0)),
            (rat(1, 8), rat(1, 4)),
            (rat(1, 4), rat_int(1)),
            (rat(5, 8), rat(1, 4)),
            (rat_int(1), rat_int(0)),
        ])
        .unwrap();
        assert_eq!(g_a().map(), &expected);
    }

    #[test]
    fn verification_accepts_and_rejects() {
        let tent = CarcassMap::tent();
        assert!(verify_conjugacy(&h_a(), &tent, &g_a()).unwrap());
        assert!(verify_conjugacy(&PlMap::identity(), &tent, &tent).unwrap());
        assert!(!verify_conjugacy(&PlMap::identity(), &tent, &g_a()).unwrap());
        assert!(!verify_conjugacy(&h_a(), &tent, &g_b()).unwrap());
    }

    #[test]
    fn verification_rejects_non_homeomorphisms() {
        let flat = PlMap::new(vec![
            (rat_int(0), rat_int(0)),
            (rat(1, 2), rat_int(0)),
            (rat_int(1), rat_int(1)),
        ])
        .unwrap();
        assert!(matches!(
            verify_conjugacy(&flat, &CarcassMap::tent(), &CarcassMap::tent()),
            Err(Error::NotHomeomorphism { .. })
        ));
    }

    #[test]
    fn lattice_levels_recover_the_conjugacy() {
        let tent_lat = build(&CarcassMap::tent(), 8);
        let ga_lat = build(&g_a(), 8);
        for n in 2..=8 {
            assert_eq!(conjugacy_from_lattices(&tent_lat, &ga_lat, n).unwrap(), h_a());
        }
        assert_eq!(
            conjugacy_from_lattices(&tent_lat, &tent_lat, 5).unwrap(),
            PlMap::identity()
        );
        let gb_lat = build(&g_b(), 3);
        assert_eq!(
            conjugacy_from_lattices(&tent_lat, &gb_lat, 3).unwrap(),
            PlMap::new(vec![
                (rat_int(0), rat_int(0)),
                (rat(1, 4), rat(1, 9)),
                (rat(1, 2), rat(1, 3)),
                (rat(3, 4), rat(7, 9)),
                (rat_int(1), rat_int(1)),
            ])
            .unwrap()
        );
    }

    #[test]
    fn detection_needs_three_levels() {
        let lat = build(&CarcassMap::tent(), 2);
        assert!(matches!(
            detect_pl_conjugacy(&lat),
            Err(Error::InsufficientDepth { depth: 2, required: 3 })
        ));
    }

    #[test]
    fn convergence_profile_stabilizes_exactly_when_the_conjugacy_is_pl() {
        let tent_lat = build(&CarcassMap::tent(), 8);
        let ga_lat = build(&g_a(), 8);
        let profile = convergence_profile(&tent_lat, &ga_lat).unwrap();
        assert_eq!(profile.len(), 6);
        assert_eq!(profile[0].0, 2);
        assert!(profile.iter().all(|(_, d)| d == &rat_int(0)));

        let gb_lat = build(&g_b(), 8);
        let profile = convergence_profile(&tent_lat, &gb_lat).unwrap();
        assert!(profile.iter().all(|(_, d)| d > &rat_int(0)));
    }

    #[test]
    fn local_conditions_at_origin_and_fixed_point() {
        let c = necessary_conditions(&CarcassMap::tent()).unwrap();
        assert_eq!(
            c,
            NecessaryConditions {
                slope_at_zero: rat_int(2),
                positive_fixed_point: rat(2, 3),
                fixed_point_slope_product: rat_int(4),
            }
        );
        assert!(c.all_hold());

        let c = necessary_conditions(&g_a()).unwrap();
        assert_eq!(c.positive_fixed_point, rat(1, 2));
        assert!(c.all_hold());

        let c = necessary_conditions(&g_b()).unwrap();
        assert_eq!(c.slope_at_zero, rat_int(3));
        assert_eq!(c.positive_fixed_point, rat(3, 5));
        assert_eq!(c.fixed_point_slope_product, rat(9, 4));
        assert!(!c.all_hold());
    }

    #[test]
    fn detection_confirms_known_conjugates() {
        let lat = build(&CarcassMap::tent(), 8);
        assert_eq!(
            detect_pl_conjugacy(&lat).unwrap(),
            PlConjugacyVerdict::Pl { tangent: rat_int(1), threshold: rat_int(1) }
        );

        let lat = build(&g_a(), 8);
        assert_eq!(
            detect_pl_conjugacy(&lat).unwrap(),
            PlConjugacyVerdict::Pl { tangent: rat(1, 2), threshold: rat(1, 4) }
        );
    }

    #[test]
    fn detection_rejects_on_failed_local_conditions() {
        let lat = build(&g_b(), 6);
        assert_eq!(
            detect_pl_conjugacy(&lat).unwrap(),
            PlConjugacyVerdict::NotPl {
                failed_condition: FailedCondition::SlopeAtZero { actual: rat_int(3) }
            }
        );

        // slope 2 at the origin, but slopes -9/2 around the fixed point
        let g = CarcassMap::validate(
            PlMap::new(vec![
                (rat_int(0), rat_int(0)),
                (rat(1, 2), rat_int(1)),
                (rat(2, 3), rat(1, 4)),
                (rat_int(1), rat_int(0)),
            ])
            .unwrap(),
        )
        .unwrap();
        let lat = build(&g, 4);
        assert_eq!(
            detect_pl_conjugacy(&lat).unwrap(),
            PlConjugacyVerdict::NotPl {
                failed_condition: FailedCondition::FixedPointSlopeProduct { actual: rat(81, 4) }
            }
        );
    }

    #[test]
    fn detection_stays_inconclusive_without_a_linear_zone() {
        // both local conditions hold (slope 2 at 0, slopes -2 at the fixed
        // point 7/12), yet level 4 already leaves the candidate grid
        let g = CarcassMap::validate(
            PlMap::new(vec![
                (rat_int(0), rat_int(0)),
                (rat(1, 4), rat(1, 2)),
                (rat(3, 8), rat_int(1)),
                (rat(2, 3), rat(5, 12)),
                (rat_int(1), rat_int(0)),
            ])
            .unwrap(),
        )
        .unwrap();
        let conditions = necessary_conditions(&g).unwrap();
        assert!(conditions.all_hold());
        assert_eq!(conditions.positive_fixed_point, rat(7, 12));
        let lat = build(&g, 6);
        assert_eq!(detect_pl_conjugacy(&lat).unwrap(), PlConjugacyVerdict::Inconclusive);
    }
}
