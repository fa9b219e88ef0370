#![allow(dead_code)]

use carcass::rational::{rat, Rational};
use carcass::{CarcassMap, PlMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn distinct_sorted(rng: &mut ChaCha8Rng, range: std::ops::Range<i64>, count: usize) -> Vec<i64> {
    let mut pool: Vec<i64> = range.collect();
    pool.shuffle(rng);
    pool.truncate(count);
    pool.sort_unstable();
    pool
}

/// Strictly increasing piecewise linear homeomorphism fixing 0 and 1, with
/// up to six interior breakpoints on a coarse rational grid. Every kink
/// abscissa has a power-of-two denominator, so tent conjugates built from
/// these are always firm.
pub fn random_homeomorphism(rng: &mut ChaCha8Rng) -> PlMap {
    let interior = rng.gen_range(0..=6);
    let xs = distinct_sorted(rng, 1..16, interior);
    let ys = distinct_sorted(rng, 1..16, interior);
    let mut points = vec![(rat(0, 1), rat(0, 1))];
    points.extend(xs.iter().zip(&ys).map(|(x, y)| (rat(*x, 16), rat(*y, 16))));
    points.push((rat(1, 1), rat(1, 1)));
    PlMap::new(points).expect("grid construction is always valid")
}

/// Arbitrary continuous piecewise linear map on the grid: flat stretches
/// and direction changes allowed.
pub fn random_plmap(rng: &mut ChaCha8Rng) -> PlMap {
    let interior = rng.gen_range(0..=5);
    let xs = distinct_sorted(rng, 1..32, interior);
    let mut points = vec![(rat(0, 1), rat(rng.gen_range(0..=16), 16))];
    points.extend(xs.iter().map(|x| (rat(*x, 32), rat(rng.gen_range(0..=16), 16))));
    points.push((rat(1, 1), rat(rng.gen_range(0..=16), 16)));
    PlMap::new(points).expect("grid construction is always valid")
}

/// Random unimodal map: strictly up to a peak at height 1, strictly back
/// down to 0, up to two extra breakpoints on each side.
pub fn random_carcass(rng: &mut ChaCha8Rng) -> CarcassMap {
    let peak = rng.gen_range(4..=12); // peak abscissa peak/16
    let left = rng.gen_range(0..=2usize);
    let right = rng.gen_range(0..=2usize);
    let left_xs = distinct_sorted(rng, 1..2 * peak, left);
    let left_ys = distinct_sorted(rng, 1..16, left);
    let right_xs = distinct_sorted(rng, 2 * peak + 1..32, right);
    let mut right_ys = distinct_sorted(rng, 1..16, right);
    right_ys.reverse();

    let mut points = vec![(rat(0, 1), rat(0, 1))];
    points.extend(left_xs.iter().zip(&left_ys).map(|(x, y)| (rat(*x, 32), rat(*y, 16))));
    points.push((rat(peak, 16), rat(1, 1)));
    points.extend(right_xs.iter().zip(&right_ys).map(|(x, y)| (rat(*x, 32), rat(*y, 16))));
    points.push((rat(1, 1), rat(0, 1)));
    CarcassMap::validate(PlMap::new(points).expect("grid construction is always valid"))
        .expect("construction is unimodal by design")
}

/// Uniform-ish rational in [0,1] on a fine grid.
pub fn random_x(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(0..=1024), 1024)
}

pub fn g_a() -> CarcassMap {
    CarcassMap::validate(
        PlMap::new(vec![
            (rat(0, 1), rat(0, 1)),
            (rat(1, 8), rat(1, 4)),
            (rat(1, 4), rat(1, 1)),
            (rat(5, 8), rat(1, 4)),
            (rat(1, 1), rat(0, 1)),
        ])
        .unwrap(),
    )
    .unwrap()
}

pub fn g_b() -> CarcassMap {
    CarcassMap::validate(
        PlMap::new(vec![
            (rat(0, 1), rat(0, 1)),
            (rat(1, 3), rat(1, 1)),
            (rat(1, 1), rat(0, 1)),
        ])
        .unwrap(),
    )
    .unwrap()
}

pub fn h_a() -> PlMap {
    PlMap::new(vec![(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 4)), (rat(1, 1), rat(1, 1))])
        .unwrap()
}
