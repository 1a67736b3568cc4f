//! Honeycomb tinkertoys, their configurations and diagrams.

pub mod bz;
pub mod config;
pub mod diagram;
pub mod elision;
pub mod reconstruct;
pub mod tinkertoy;

pub use bz::{bz_from_hive, bz_pattern, partial_row_sum, torsion};
pub use config::{hive_to_honeycomb, honeycomb_to_hive, validate_configuration, Honeycomb, HoneycombJson};
pub use tinkertoy::{Edge, Tinkertoy};
pub use diagram::{classify_vertex, diagram, Diagram, DiagramVertex, Piece, SegmentJson, VertexKind};
pub use elision::{breathe_loop, elide, forest_solve, ElidedEdge, ElidedGraph, ElidedNode, End};
pub use reconstruct::{degeneracy_graph, dual_graph, overlay, prv_witness, reconstruct, tripod, DegeneracyGraph};
