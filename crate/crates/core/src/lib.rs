//! Young tableaux, vacillating tableaux, and the delete-insert
//! correspondence between integer sequences and tableau pairs.
//!
//! The crate provides:
//!
//! - partitions, partial/standard Young tableaux, and set partitions
//!   ([`partition`], [`tableau`], [`set_partition`]);
//! - RSK row insertion, two-line RSK with its inverse, jeu de taquin
//!   deletion, and longest-increasing-subsequence statistics ([`rsk`]);
//! - n-vacillating tableaux and their simplified form ([`vacillating`]);
//! - the delete-insert map and its inverse ([`di`]);
//! - direct characterizations of the one-row, hook, and two-row image
//!   shapes ([`shapes`], [`counts`]);
//! - the bijection between maximal-index sequences and increasing-prefix
//!   permutations, with its arithmetic transforms ([`max_index`]);
//! - bumping-sequence and suffix criteria plus the reparking simulation
//!   ([`bumping`]);
//! - the multiset-tableau bijection ([`cossz`]);
//! - exhaustive verification sweeps over `[n]^k` ([`verify`]).
//!
//! Everything is exact integer combinatorics over immutable values; all
//! operations are pure and safe to call from multiple threads.

#![forbid(unsafe_code)]

pub mod bumping;
pub mod cossz;
pub mod counts;
pub mod di;
pub mod enumerate;
mod error;
pub mod max_index;
pub mod partition;
pub mod rsk;
pub mod set_partition;
pub mod shapes;
pub mod tableau;
pub mod vacillating;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use tableau::{PartialTableau, StandardYoungTableau};
