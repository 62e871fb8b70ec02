//! Finite permutation groups, conjugacy class arithmetic and executable
//! checks for normal sets of order-`p` elements whose squares consist of
//! `p`-elements.

pub mod arith;
pub mod corpus;
pub mod error;
pub mod group;
pub mod perm;
pub mod structure;
pub mod theorems;

pub use arith::Prime;
pub use error::{Error, Result};
pub use group::{Group, Limits, Subgroup};
pub use perm::{format_cycles, parse_cycles, CycleNotation, Permutation};
