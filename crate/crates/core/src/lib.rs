//! Combinatorial and ordinary depth of finite group inclusions, with exact checks for
//! Ree-group data: the Sylow 3-subgroup model, the character table of its normalizer,
//! the group R(3), and counting inequalities.

// Index loops read better than iterator chains in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod certificates;
pub mod chars;
pub mod depth;
pub mod error;
pub mod ngp_table;
pub mod ree_sylow;
pub mod perm;
pub mod ree3_model;

pub use error::{Error, Result};
