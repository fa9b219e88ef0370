//! Self-semiconjugations of unimodal maps: piecewise linear solutions of
//! psi g = g psi, their lattice-sampled counterparts, and evidence
//! gathering for when no piecewise linear solution can exist.

use crate::conjugacy::conjugate_by;
use crate::error::{Error, Result};
use crate::lattice::PreimageLattice;
use crate::plmap::{collinearity_defects, PlMap, Side};
use crate::rational::{format_rational, rat, rat_int, Rational};
use crate::unimodal::CarcassMap;

/// The sawtooth with `teeth` linear laps: breakpoints (k/t, k mod 2).
/// One tooth is the identity, two teeth the tent. Every zigzag commutes
/// with the tent.
pub fn zigzag(teeth: u32) -> Result<PlMap> {
    if teeth == 0 {
        return Err(Error::Precondition { detail: "a zigzag needs at least one tooth".into() });
    }
    let t = teeth as i64;
    PlMap::new((0..=t).map(|k| (rat(k, t), rat_int(k % 2))).collect())
}

/// Does psi g = g psi hold exactly?
pub fn verify_commutation(psi: &PlMap, g: &CarcassMap) -> Result<bool> {
    let lhs = psi.compose(g.map());
    let rhs = g.map().compose(psi);
    Ok(lhs == rhs)
}

/// The two constant solutions of the commutation equation: a constant c
/// commutes with g exactly when g(c) = c.
pub fn constant_solutions(g: &CarcassMap) -> [Rational; 2] {
    [rat_int(0), g.positive_fixed_point()]
}

/// A solution of the commutation equation, either in closed form or as a
/// sample on a lattice level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiconjSolution {
    ExactPl { teeth: u32, body: PlMap },
    LatticeSampled { teeth: u32, level: u32, points: Vec<(Rational, Rational)> },
}

/// Transports the zigzag with `teeth` teeth through the homeomorphism h:
/// the result commutes with the conjugated tent h tent h^-1, and that
/// equation is re-checked before returning.
pub fn exact_solution(h: &PlMap, teeth: u32) -> Result<SemiconjSolution> {
    let xi = zigzag(teeth)?;
    let inverse = h.invert_monotone()?;
    let body = h.compose(&xi).compose(&inverse);
    let g = conjugate_by(h, &CarcassMap::tent())?;
    if !verify_commutation(&body, &g)? {
        return Err(Error::internal("transported zigzag fails its commutation equation"));
    }
    Ok(SemiconjSolution::ExactPl { teeth, body })
}

/// Where the zigzag with `teeth` teeth sends node k of the dyadic grid
/// with 2^(n-1) cells: the node index of its image on the same grid.
pub fn dyadic_index_map(teeth: u32, n: u32, k: usize) -> Result<usize> {
    if teeth == 0 {
        return Err(Error::Precondition { detail: "a zigzag needs at least one tooth".into() });
    }
    if n == 0 || n > 64 {
        return Err(Error::IndexOutOfRange { detail: format!("grid level {n}") });
    }
    let cells = 1u128 << (n - 1);
    if k as u128 > cells {
        return Err(Error::IndexOutOfRange {
            detail: format!("node {k} of a grid with {cells} cells"),
        });
    }
    let product = teeth as u128 * k as u128;
    let j = product % cells;
    let m = if (product / cells) % 2 == 0 { j } else { cells - j };
    Ok(m as usize)
}

fn sampled_points(
    lat: &PreimageLattice,
    teeth: u32,
    level: u32,
) -> Result<Vec<(Rational, Rational)>> {
    let nodes = lat.level(level)?;
    nodes
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let image = dyadic_index_map(teeth, level, k)?;
            Ok((x.clone(), nodes[image].clone()))
        })
        .collect()
}

/// Samples the commuting solution with `teeth` teeth on one lattice
/// level: node k is paired with the node the zigzag's index action sends
/// it to. No linearity between the samples is implied.
pub fn lattice_solution(
    lat: &PreimageLattice,
    teeth: u32,
    level: u32,
) -> Result<SemiconjSolution> {
    Ok(SemiconjSolution::LatticeSampled {
        teeth,
        level,
        points: sampled_points(lat, teeth, level)?,
    })
}

/// Slope at the origin that a piecewise linear solution with `teeth`
/// teeth would need, read off one lattice level as the ratio of node t to
/// node 1.
pub fn tangent_estimate(lat: &PreimageLattice, teeth: u32, level: u32) -> Result<Rational> {
    let far = lat.point(level, teeth as usize)?;
    let near = lat.point(level, 1)?;
    Ok(far / near)
}

/// Comparison of a solution's first kink against the position forced by
/// the commutation equation near the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstKinkCheck {
    pub first_kink_of_map: Rational,
    pub predicted: Rational,
    pub actual: Rational,
    pub pass: bool,
}

/// The first kink of an exact solution must sit at a g'(0)/s, where a is
/// the map's first kink and s > g'(0) the solution's slope at the origin.
pub fn first_kink_check(g: &CarcassMap, solution: &SemiconjSolution) -> Result<FirstKinkCheck> {
    let body = match solution {
        SemiconjSolution::ExactPl { body, .. } => body,
        SemiconjSolution::LatticeSampled { .. } => {
            return Err(Error::Precondition {
                detail: "first kink law needs an exact solution, not a lattice sample".into(),
            });
        }
    };
    if !verify_commutation(body, g)? {
        return Err(Error::Precondition {
            detail: "the solution does not commute with this map".into(),
        });
    }
    let origin = rat_int(0);
    let solution_slope = body.one_sided_slope(&origin, Side::Right)?;
    let map_slope = g.map().one_sided_slope(&origin, Side::Right)?;
    if solution_slope <= map_slope {
        return Err(Error::Precondition {
            detail: format!(
                "first kink law needs the solution steeper than the map at the origin \
                 (slopes {} and {})",
                format_rational(&solution_slope),
                format_rational(&map_slope)
            ),
        });
    }
    let first_kink_of_map = g
        .map()
        .kinks()
        .first()
        .expect("a unimodal map has at least its peak kink")
        .clone();
    let predicted = &first_kink_of_map * map_slope / solution_slope;
    let actual = body
        .kinks()
        .first()
        .ok_or_else(|| Error::Precondition { detail: "the solution has no kink".into() })?
        .clone();
    let pass = predicted == actual;
    Ok(FirstKinkCheck { first_kink_of_map, predicted, actual, pass })
}

/// Counts of straightness defects in lattice samples of one solution over
/// a range of levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonlinearityProfile {
    pub teeth: u32,
    pub first_level: u32,
    pub defect_counts: Vec<usize>,
    pub verdict: NonlinearityVerdict,
}

/// A piecewise linear solution has finitely many kinks, so its defect
/// counts stabilize once the lattice separates them; counts still growing
/// at the end of the window are evidence against such a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonlinearityVerdict {
    EvidenceOfNonPl { final_counts: [usize; 3] },
    ConsistentWithPl,
}

pub fn nonlinearity_evidence(
    lat: &PreimageLattice,
    teeth: u32,
    first_level: u32,
    last_level: u32,
) -> Result<NonlinearityProfile> {
    if first_level < 3 || last_level < first_level + 2 {
        return Err(Error::Precondition {
            detail: format!(
                "defect counting needs at least three levels starting at 3, \
                 got {first_level}..{last_level}"
            ),
        });
    }
    let mut defect_counts = Vec::with_capacity((last_level - first_level + 1) as usize);
    for n in first_level..=last_level {
        let points = sampled_points(lat, teeth, n)?;
        defect_counts.push(collinearity_defects(&points)?.len());
    }
    let verdict = match defect_counts.as_slice() {
        [.., a, b, c] if a < b && b < c => {
            NonlinearityVerdict::EvidenceOfNonPl { final_counts: [*a, *b, *c] }
        }
        _ => NonlinearityVerdict::ConsistentWithPl,
    };
    Ok(NonlinearityProfile { teeth, first_level, defect_counts, verdict })
}

/// Why a delta uniformity check did not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniformityObstruction {
    NotFirm { bound: u32 },
    PowerOfTwoTeeth,
    HypothesisFails { collinear_nodes: usize },
}

/// Outcome of [`delta_uniformity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaUniformity {
    Pass { threshold: Rational, delta: Rational },
    Fail { threshold: Rational, delta_table: Vec<Rational> },
    NotApplicable { reason: UniformityObstruction },
}

/// For a firm map with a solution that leaves the origin on a straight
/// line (witnessed by at least four collinear sample nodes), a tooth
/// count that is not a power of two forces every subdivision ratio in the
/// delta table to be the same. The threshold reported is the height the
/// straight stretch reaches.
pub fn delta_uniformity_check(
    lat: &PreimageLattice,
    teeth: u32,
    firmness_bound: u32,
) -> Result<DeltaUniformity> {
    if teeth == 0 {
        return Err(Error::Precondition { detail: "a zigzag needs at least one tooth".into() });
    }
    let verdict = lat.source().firmness(firmness_bound);
    if !verdict.is_firm() {
        return Ok(DeltaUniformity::NotApplicable {
            reason: UniformityObstruction::NotFirm { bound: firmness_bound },
        });
    }
    if teeth.is_power_of_two() {
        return Ok(DeltaUniformity::NotApplicable {
            reason: UniformityObstruction::PowerOfTwoTeeth,
        });
    }
    let n0 = verdict.n0.expect("firm verdict carries n0");
    if lat.depth() < n0 + 2 {
        return Err(Error::InsufficientDepth { depth: lat.depth(), required: n0 + 2 });
    }

    let points = sampled_points(lat, teeth, lat.depth())?;
    let (x1, y1) = points[1].clone();
    let mut collinear_nodes = 1;
    for (x, y) in &points[1..] {
        if y * &x1 == &y1 * x {
            collinear_nodes += 1;
        } else {
            break;
        }
    }
    if collinear_nodes < 4 {
        return Ok(DeltaUniformity::NotApplicable {
            reason: UniformityObstruction::HypothesisFails { collinear_nodes },
        });
    }
    let threshold = points[collinear_nodes - 1].1.clone();

    let delta_table: Vec<Rational> =
        (0..1usize << n0).map(|k| lat.delta(n0 + 1, k)).collect::<Result<_>>()?;
    if delta_table.windows(2).all(|w| w[0] == w[1]) {
        Ok(DeltaUniformity::Pass { threshold, delta: delta_table[0].clone() })
    } else {
        Ok(DeltaUniformity::Fail { threshold, delta_table })
    }
}
