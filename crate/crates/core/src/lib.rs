//! Minimal degrees in quantum products of Schubert classes on G/P, computed
//! combinatorially from curve neighborhoods, the Hecke monoid and the cascade
//! of orthogonal roots.

// index loops mirror the coordinate formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod cascade;
pub mod curvenbhd;
pub mod degree;
pub mod distance;
pub mod error;
pub mod exec;
pub mod rootsystem;
pub mod weyl;

pub use cascade::Cascade;
pub use curvenbhd::{CurveNbhd, ZCache};
pub use degree::{ChernVector, Degree};
pub use distance::{verify_suite, ChainSearch, ChainWitness, DegreeFront, Distance, Options, SuiteReport, SUITES};
pub use error::{Error, Result};
pub use exec::Execution;
pub use rootsystem::{CorootVector, Root, RootSystem, TypeLetter};
pub use weyl::{CosetRep, CosetTable, Flavor, Parabolic, WeylElement};
