//! Preimage lattices: the nested point sets g^{-n}(0) of a unimodal map,
//! and structural diagnostics on their interval subdivision ratios.

use crate::error::{Error, Result};
use crate::rational::{denominator_bits, format_rational, rat_int, Rational};
use crate::unimodal::{CarcassMap, FirmnessVerdict};

/// Resource caps applied while a lattice is built.
#[derive(Debug, Clone)]
pub struct LatticeLimits {
    /// Cap on the total number of stored points across all levels.
    pub max_points: Option<u64>,
    /// Cap on the bit length of any point's denominator.
    pub max_denominator_bits: Option<u64>,
}

impl Default for LatticeLimits {
    fn default() -> Self {
        LatticeLimits { max_points: Some(1 << 20), max_denominator_bits: None }
    }
}

/// The sorted point sets g^{-n}(0) for n = 1..=depth. Level n holds
/// 2^(n-1)+1 points starting at 0 and ending at 1, and level n embeds in
/// level n+1 at the even indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreimageLattice {
    source: CarcassMap,
    levels: Vec<Vec<Rational>>,
}

impl PreimageLattice {
    pub fn build(g: &CarcassMap, depth: u32, limits: &LatticeLimits) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Precondition { detail: "lattice depth must be at least 1".into() });
        }
        let mut levels: Vec<Vec<Rational>> = vec![vec![rat_int(0), rat_int(1)]];
        let mut total: u64 = 2;
        for n in 2..=depth {
            let prev = levels.last().unwrap();
            let expected_len = (1u64 << (n - 1)) + 1;
            if let Some(cap) = limits.max_points {
                if total + expected_len > cap {
                    return Err(Error::ResourceLimit {
                        detail: format!(
                            "level {n} would exceed the cap of {cap} total lattice points"
                        ),
                    });
                }
            }
            let mut next: Vec<Rational> = Vec::with_capacity(expected_len as usize);
            for y in prev {
                next.extend(g.map().preimage_points(y)?);
            }
            next.sort();
            next.dedup();
            if next.len() as u64 != expected_len {
                return Err(Error::internal(format!(
                    "level {n} has {} points, expected {expected_len}",
                    next.len()
                )));
            }
            if let Some(bits) = limits.max_denominator_bits {
                for p in &next {
                    if denominator_bits(p) > bits {
                        return Err(Error::ResourceLimit {
                            detail: format!(
                                "denominator of {} exceeds {bits} bits at level {n}",
                                format_rational(p)
                            ),
                        });
                    }
                }
            }
            for (k, p) in prev.iter().enumerate() {
                if &next[2 * k] != p {
                    return Err(Error::internal(format!(
                        "level {} point {k} does not reappear at index {} of level {n}",
                        n - 1,
                        2 * k
                    )));
                }
            }
            total += expected_len;
            levels.push(next);
        }
        Ok(PreimageLattice { source: g.clone(), levels })
    }

    pub fn source(&self) -> &CarcassMap {
        &self.source
    }

    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }

    /// Points of level n (1-based).
    pub fn level(&self, n: u32) -> Result<&[Rational]> {
        if n == 0 || n > self.depth() {
            return Err(Error::IndexOutOfRange {
                detail: format!("level {n} of a depth-{} lattice", self.depth()),
            });
        }
        Ok(&self.levels[(n - 1) as usize])
    }

    /// The k-th point of level n, 0-based within the level.
    pub fn point(&self, n: u32, k: usize) -> Result<&Rational> {
        let level = self.level(n)?;
        level.get(k).ok_or_else(|| Error::IndexOutOfRange {
            detail: format!("point {k} of level {n}, which has {} points", level.len()),
        })
    }

    /// Length of the k-th gap of level n.
    pub fn interval_length(&self, n: u32, k: usize) -> Result<Rational> {
        let level = self.level(n)?;
        if k + 1 >= level.len() {
            return Err(Error::IndexOutOfRange {
                detail: format!("interval {k} of level {n}, which has {} intervals", level.len() - 1),
            });
        }
        Ok(&level[k + 1] - &level[k])
    }

    /// Fraction of the k-th level-n interval taken by its left child at
    /// level n+1. Always strictly between 0 and 1.
    pub fn delta(&self, n: u32, k: usize) -> Result<Rational> {
        let parent = self.interval_length(n, k)?;
        let child = self.interval_length(n + 1, 2 * k)?;
        Ok(child / parent)
    }

    /// Runs every subdivision diagnostic over the whole lattice.
    pub fn structure_report(
        &self,
        verdict: &FirmnessVerdict,
        window: u32,
    ) -> Result<StructureReport> {
        structure_report_impl(self, verdict, window)
    }
}

/// Big-endian binary digits of `index` in a fixed width.
pub fn index_binary(index: u64, digits: u32) -> Result<Vec<u8>> {
    if digits < 64 && index >> digits != 0 {
        return Err(Error::DigitWidth { index, digits });
    }
    Ok((0..digits).rev().map(|i| ((index >> i) & 1) as u8).collect())
}

/// One exact mismatch found by a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub level: u32,
    pub index: usize,
    pub expected: Rational,
    pub actual: Rational,
}

/// Result of one diagnostic sweep. Violation examples are capped; `total`
/// is the full count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds { checked: u64 },
    Violated { checked: u64, total: u64, examples: Vec<Violation> },
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds { .. })
    }
}

/// A diagnostic whose source states one formula but derives another:
/// both readings are swept independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoVariantOutcome {
    pub stated: CheckOutcome,
    pub derived: CheckOutcome,
}

/// Subdivision structure of a firm map's lattice.
///
/// `delta_table` and `l_constants` are indexed by the 2^n0 binary digit
/// classes, both read off level n0+1 (the first level where every class
/// occurs). The checks sweep every representable index of the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub n0: u32,
    pub delta_table: Vec<Rational>,
    pub l_constants: Vec<Rational>,
    /// delta values transport along g between consecutive levels, with the
    /// complement delta -> 1-delta on orientation-reversing branches.
    pub digit_dependence: CheckOutcome,
    /// delta at index k equals delta at index k + 2^n0 within a level.
    pub delta_periodicity: CheckOutcome,
    /// Interval lengths repeat proportionally across 2^n0-blocks:
    /// len(n, k) = l_j * len(n, block start), j = k mod 2^n0.
    pub block_proportionality: CheckOutcome,
    /// Dropping n0 levels at a block-start index divides the length by the
    /// sum of the l constants. `stated` sums from l_1; `derived` sums from
    /// l_0 as the underlying derivation does.
    pub level_scaling: TwoVariantOutcome,
    /// Three-block product form of the length at a triple-composite index.
    /// `stated` uses the tail sum and a base length n0 levels too shallow;
    /// `derived` follows the derivation (full sum, base at level n + n0).
    pub product_rule: TwoVariantOutcome,
    /// Right/left sibling length ratio equals 1/delta - 1. Definitionally
    /// exact; a violation here means a broken lattice.
    pub sibling_ratio: CheckOutcome,
}

const VIOLATION_EXAMPLE_CAP: usize = 16;

struct Sweep {
    checked: u64,
    total: u64,
    examples: Vec<Violation>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { checked: 0, total: 0, examples: Vec::new() }
    }

    fn record(&mut self, level: u32, index: usize, expected: Rational, actual: Rational) {
        self.checked += 1;
        if expected != actual {
            self.total += 1;
            if self.examples.len() < VIOLATION_EXAMPLE_CAP {
                self.examples.push(Violation { level, index, expected, actual });
            }
        }
    }

    fn outcome(self) -> CheckOutcome {
        if self.total == 0 {
            CheckOutcome::Holds { checked: self.checked }
        } else {
            CheckOutcome::Violated { checked: self.checked, total: self.total, examples: self.examples }
        }
    }
}

fn structure_report_impl(
    lat: &PreimageLattice,
    verdict: &FirmnessVerdict,
    window: u32,
) -> Result<StructureReport> {
    if !verdict.is_firm() {
        return Err(Error::Precondition {
            detail: "structure report requires a firm map".into(),
        });
    }
    let n0 = verdict.n0.expect("firm verdict carries n0");
    let depth = lat.depth();
    let required = 4 * n0 + window;
    if depth < required {
        return Err(Error::InsufficientDepth { depth, required });
    }

    // lengths[n-1][k] = length of interval k at level n,
    // deltas[n-1][k] = left-child fraction of that interval
    let mut lengths: Vec<Vec<Rational>> = Vec::with_capacity(depth as usize);
    for n in 1..=depth {
        let pts = lat.level(n)?;
        lengths.push(pts.windows(2).map(|w| &w[1] - &w[0]).collect());
    }
    let mut deltas: Vec<Vec<Rational>> = Vec::with_capacity(depth as usize - 1);
    for n in 1..depth {
        let here = &lengths[(n - 1) as usize];
        let below = &lengths[n as usize];
        deltas.push((0..here.len()).map(|k| &below[2 * k] / &here[k]).collect());
    }

    let classes = 1usize << n0;
    let delta_table: Vec<Rational> = deltas[n0 as usize].clone();
    debug_assert_eq!(delta_table.len(), classes);
    let base = lengths[n0 as usize][0].clone();
    let l_constants: Vec<Rational> =
        lengths[n0 as usize][..classes].iter().map(|len| len / &base).collect();

    // transport of delta along one application of g, complemented on the
    // orientation-reversing side
    let one = rat_int(1);
    let mut transport = Sweep::new();
    for n in n0..=depth - 2 {
        let child_level = lat.level(n + 1)?;
        let parent_level = lat.level(n)?;
        for k in 0..lengths[n as usize].len() {
            let ga = lat.source().eval(&child_level[k])?;
            let gb = lat.source().eval(&child_level[k + 1])?;
            let preserved = ga < gb;
            let (lo, hi) = if preserved { (&ga, &gb) } else { (&gb, &ga) };
            let k_image = parent_level
                .binary_search(lo)
                .map_err(|_| Error::internal("interval image endpoint missing from parent level"))?;
            if parent_level.get(k_image + 1) != Some(hi) {
                return Err(Error::internal("interval image is not a single parent interval"));
            }
            let image_delta = &deltas[(n - 1) as usize][k_image];
            let expected =
                if preserved { image_delta.clone() } else { &one - image_delta };
            transport.record(n + 1, k, expected, deltas[n as usize][k].clone());
        }
    }

    let mut periodicity = Sweep::new();
    for n in n0..depth {
        let row = &deltas[(n - 1) as usize];
        for k in 0..row.len().saturating_sub(classes) {
            periodicity.record(n, k + classes, row[k].clone(), row[k + classes].clone());
        }
    }

    let mut blocks = Sweep::new();
    for n in n0..=depth {
        let row = &lengths[(n - 1) as usize];
        for k in 0..row.len() {
            let j = k & (classes - 1);
            let block_start = k - j;
            blocks.record(n, k, &l_constants[j] * &row[block_start], row[k].clone());
        }
    }

    let tail_sum: Rational = l_constants[1..].iter().sum();
    let full_sum = &tail_sum + &l_constants[0];
    let mut scaling_stated = Sweep::new();
    let mut scaling_derived = Sweep::new();
    for n in n0..=depth - n0 {
        let shallow = &lengths[(n - 1) as usize];
        let deep = &lengths[(n + n0 - 1) as usize];
        for (i, len) in shallow.iter().enumerate() {
            let actual = deep[i << n0].clone();
            scaling_stated.record(n + n0, i << n0, len / &tail_sum, actual.clone());
            scaling_derived.record(n + n0, i << n0, len / &full_sum, actual);
        }
    }

    let mut product_stated = Sweep::new();
    let mut product_derived = Sweep::new();
    let tail_sq = &tail_sum * &tail_sum;
    let full_sq = &full_sum * &full_sum;
    if depth >= 3 * n0 + n0 {
        for n in n0..=depth - 3 * n0 {
            let base_stated = &lengths[(n - 1) as usize][0];
            let base_derived = &lengths[(n + n0 - 1) as usize][0];
            let deep = &lengths[(n + 3 * n0 - 1) as usize];
            for i in 0..classes {
                for j in 0..classes {
                    for k in 0..classes {
                        let idx = (i << (2 * n0)) | (j << n0) | k;
                        let coeff = &l_constants[i] * &l_constants[j] * &l_constants[k];
                        let actual = deep[idx].clone();
                        product_stated.record(
                            n + 3 * n0,
                            idx,
                            &coeff / &tail_sq * base_stated,
                            actual.clone(),
                        );
                        product_derived.record(
                            n + 3 * n0,
                            idx,
                            &coeff / &full_sq * base_derived,
                            actual,
                        );
                    }
                }
            }
        }
    }

    let mut sibling = Sweep::new();
    for n in 1..depth {
        let below = &lengths[n as usize];
        for (k, delta) in deltas[(n - 1) as usize].iter().enumerate() {
            let expected = &one / delta - &one;
            let actual = &below[2 * k + 1] / &below[2 * k];
            sibling.record(n, k, expected, actual);
        }
    }

    Ok(StructureReport {
        n0,
        delta_table,
        l_constants,
        digit_dependence: transport.outcome(),
        delta_periodicity: periodicity.outcome(),
        block_proportionality: blocks.outcome(),
        level_scaling: TwoVariantOutcome {
            stated: scaling_stated.outcome(),
            derived: scaling_derived.outcome(),
        },
        product_rule: TwoVariantOutcome {
            stated: product_stated.outcome(),
            derived: product_derived.outcome(),
        },
        sibling_ratio: sibling.outcome(),
    })
}
