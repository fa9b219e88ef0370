//! Exact interval dynamics for piecewise linear unimodal maps.
//!
//! Everything here runs on arbitrary-precision rationals; no value is
//! ever rounded. The objects of study are unimodal maps of the unit
//! interval that fix 0, send both endpoints' neighborhoods onto rising
//! and falling linear pieces, and reach height 1 at a single peak. For
//! such a map g the crate can
//!
//! - build the nested lattices g^-1(0), g^-2(0), ... and measure how each
//!   lattice interval is split by the next level ([`lattice`]),
//! - decide whether every kink of g eventually lands on 0 and run
//!   structural diagnostics that only make sense in that case
//!   ([`unimodal`], [`lattice`]),
//! - conjugate g to and from the tent map by increasing piecewise linear
//!   homeomorphisms, and detect from lattice data alone whether such a
//!   conjugacy can exist ([`conjugacy`]),
//! - produce and verify solutions of the commutation equation
//!   psi g = g psi, exactly when a conjugacy to the tent is known and in
//!   sampled form otherwise, and collect evidence that no piecewise
//!   linear solution exists ([`semiconj`]).

pub mod conjugacy;
mod error;
pub mod io;
pub mod lattice;
pub mod plmap;
pub mod rational;
pub mod semiconj;
pub mod unimodal;

pub use error::{Error, Result};
pub use lattice::{LatticeLimits, PreimageLattice};
pub use plmap::{PlMap, Side};
pub use rational::Rational;
pub use unimodal::CarcassMap;
