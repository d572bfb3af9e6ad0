//! Orientations of graphs without alternating odd cycles: graph families,
//! colorings, certificate-producing searches and the constructive
//! orientations that realize directed local chromatic number 2.

pub mod bitset;
pub mod budget;
pub mod color;
pub mod construct;
pub mod embed;
pub mod error;
pub mod families;
pub mod graph;
pub mod homsearch;
pub mod label;
pub mod oddcycles;

pub use budget::Budget;
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{make_graph, orient, Coloring, Digraph, Graph, Orientation, Relational};
pub use label::VertexLabel;
