//! Independent ground truth for cross-checks. Nothing here uses the hive,
//! lattice or honeycomb code; results are converted to library types only at
//! the very end.

pub mod lr;
pub mod vertices;
pub mod weyl;

pub use lr::{lr_coefficient_tableaux, lr_for_triple, Partition};
pub use vertices::{enumerate_polytope_vertices, enumerate_polytope_vertices_unguarded, HiveSystem};
pub use weyl::weyl_dim;
