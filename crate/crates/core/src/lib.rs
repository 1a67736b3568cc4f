//! Littlewood-Richardson coefficients through hives and honeycombs.

pub mod cli;
pub mod error;
pub mod hive;
pub mod honeycomb;
pub mod lattice;
pub mod lift;
pub mod oracles;
pub mod plane;
pub mod rational;

pub use error::{DiagramDefect, Error, Result};
pub use rational::Q;
