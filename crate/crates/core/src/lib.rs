pub mod applications;
pub mod chipfiring;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod fourientation;
pub mod graph;
pub mod minedge;
pub mod poly;
pub mod tutte;

pub use error::{Error, Result};
pub use fourientation::{EdgeState, Fourientation, PartialOrientation};
pub use graph::{DirectedCut, DirectedCycle, Graph, Sign};
pub use minedge::{CutProperty, CycleProperty, StateSet};
