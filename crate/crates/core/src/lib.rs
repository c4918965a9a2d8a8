//! Tree-child phylogenetic networks and their component graphs.
//!
//! * [`network`]: the network data model, validation, the tree-child and
//!   normal predicates, JSON and DOT I/O.
//! * [`decompose`]: tree components and the component graph of a network.
//! * [`component_graph`]: validity, stars, enumeration up to isomorphism.
//! * [`reduction`]: the two-step reduction of a component graph.
//! * [`canon`]: canonical labeling shared by all of the above.

pub mod canon;
pub mod component_graph;
pub mod decompose;
pub mod network;
pub mod reduction;

pub use canon::CanonicalForm;
pub use component_graph::{enumerate_component_graphs, is_component_graph, ComponentGraph, ComponentGraphError, Multigraph};
pub use decompose::{Forest, TreeComponent};
pub use network::{EdgeClasses, Network, NetworkError, ValidationReport, Vertex, VertexKind, Violation};
pub use reduction::{ReducedComponentGraph, ReductionSignature};
