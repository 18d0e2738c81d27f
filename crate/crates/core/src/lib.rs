//! Exact computation with braids and their closures: word problem, certified
//! elements of the lower central and derived series of pure braid groups,
//! closure equivalences, group-ring relator reduction, and knot invariants.

pub mod braid;
pub mod cli;
pub mod closure;
pub mod error;
pub mod invariants;
pub mod ring;
pub mod rng;
pub mod series;
pub mod word_problem;

pub use braid::{BraidWord, Permutation};
pub use error::{Error, Result};
