//! Combinatorics of the coarse stratification of the monster (Semple) tower.
//!
//! Strata of the level-`k` monster space over an `m`-dimensional base are
//! labelled by [code words](codeword). This crate validates and enumerates
//! those words, translates the legacy [RVT code](rvt), describes each
//! stratum's [intersection locus](strata) and its place in the stratification
//! poset, writes the locus equations in symbolic [coordinate charts](charts),
//! [counts](counting) words exactly, and realizes the correspondence with
//! [increasing trees](trees).
//!
//! ```
//! use monster_strata::{charts, codeword, strata};
//!
//! let w = codeword::parse("R V{2} V{2} V{2,4} R", 3).unwrap();
//! assert_eq!(strata::codimension(&w), 4);
//! let chart = charts::Chart::parse("32123", 3).unwrap();
//! let eqs = charts::equations(&w, &chart).unwrap();
//! assert_eq!(eqs[0].to_string(), "x3(32)");
//! ```

pub mod charts;
pub mod cli;
pub mod codeword;
pub mod counting;
pub mod error;
pub mod rvt;
pub mod strata;
pub mod trees;

pub use charts::{Chart, CoordinateName};
pub use codeword::{CodeWord, MultiplicityVector, SubscriptSet};
pub use counting::CountTable;
pub use error::{Error, Result, Violation};
pub use rvt::{RvtSymbol, RvtWord};
pub use strata::{IntersectionLocus, StratumPoset};
pub use trees::IncreasingTree;
