//! Self-conjugate simultaneous core partitions.
//!
//! A self-conjugate `(s,t)`-core with `s`, `t` coprime corresponds to a
//! lattice path in the `⌊s/2⌋ × ⌊t/2⌋` box through a signed integer array.
//! This crate builds that correspondence in both directions, enumerates the
//! cores through it with exact arithmetic, and checks the counting and size
//! formulas against independent computations:
//!
//! - [`partition`]: partitions, hook lengths, t-core tests, diagonal hooks.
//! - [`bijection`]: the array, lattice paths, the map and its inverse.
//! - [`enumeration`]: streaming path enumeration and exact statistics.
//! - [`identities`]: the per-cell path counts `f(i,j)` and their sums.
//! - [`oracle`]: brute-force core search from the hook-length definition.
//! - [`verify`]: per-pair reports combining all of the above.

pub mod bijection;
pub mod enumeration;
pub mod error;
pub mod identities;
mod json;
pub mod oracle;
pub mod partition;
pub mod verify;

pub use bijection::{CoreArray, CoreParams, LatticePath, Step};
pub use enumeration::{CoreStats, EnumerationOptions};
pub use error::{Error, Result};
pub use identities::PathCountTable;
pub use partition::{DiagonalHookSet, Partition};
pub use verify::{VerifyOptions, VerifyReport};
