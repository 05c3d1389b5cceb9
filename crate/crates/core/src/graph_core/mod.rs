//! Multigraphs, planar rotation systems, thickening/stretching and the
//! degree gadgets built from them.

pub mod corpus;
pub mod embedding;
pub mod gadgets;
pub mod io;
pub mod multigraph;
pub mod transforms;

pub use embedding::{Dart, EmbeddedGraph, RotationSystem};
pub use gadgets::{apply_degree_gadget, edge_gadget, vertex_gadget, DegreeGadgetGraph, Gadget};
pub use io::{parse_graph_json, GraphFile};
pub use multigraph::{Bipartition, Multigraph, Subgraph};
pub use transforms::{stretch, thicken, EdgeTransform};
