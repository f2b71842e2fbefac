//! Building strings and k-uniform hypergraphs.

mod building;
mod graph;
mod recognize;

pub use building::BuildingString;
pub use graph::{DegreeSequence, Edge, Hypergraph};
pub use recognize::{recognize_with, recognize_zero_one_constructable, Recognition, RECOGNIZE_GUARD};
