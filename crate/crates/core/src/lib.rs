//! Spectral and degree-based graph descriptors: graph energy, vertex and
//! edge energies, and the Randić index, together with checks of the
//! inequalities that relate them.
//!
//! ```
//! use randic_energy::{descriptors, graph::Graph, verify};
//!
//! let g = Graph::complete_bipartite(2, 3);
//! let energy = descriptors::graph_energy(&g).unwrap();
//! let randic = descriptors::randic_index(&g);
//! assert!((energy - 2.0 * randic).abs() < 1e-9);
//!
//! let report = verify::full_report(&g, verify::Tolerances::default()).unwrap();
//! assert!(report.numeric_equality && report.structural_equality);
//! ```

pub mod descriptors;
pub mod enumerate;
pub mod graph;
pub mod json;
pub mod oracle;
pub mod spectral;
pub mod verify;

pub use graph::{Graph, GraphError};
pub use verify::{DescriptorReport, Tolerances};
