//! The largest lift: a generic superharmonic weighting, the weighted
//! perimeter objective, and exact linear programming over the hive polytope.

pub mod forest;
pub mod molt;
pub mod search;
pub mod simplex;
pub mod vertices;
pub mod weights;
#[allow(clippy::module_inception)]
pub mod lift;

pub use lift::{largest_lift, largest_lift_seeded, HiveLp, LiftReport, LiftReportJson};
pub use forest::{e_y_constant, e_y_constants};
pub use molt::{molt_regions, Molt};
pub use search::{find_nonintegral_vertex, search_space, structural_defect, NonintegralWitness};
pub use vertices::hive_polytope_vertices;
pub use simplex::{maximize, verify_certificate, LpSolution};
pub use weights::{
    default_seed, inflation_vector, make_weight_function, wperim_geometric, wperim_objective, InflationVector,
    ObjectiveVector, WeightFunction, DEFAULT_SEED,
};
