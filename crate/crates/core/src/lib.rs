//! Graph burning toolkit: simulation, exact solvers, gadget constructions and
//! the cubic vertex-cover reduction with its regular lift.

pub mod burning;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lift;
pub mod reduction;
pub mod solvers;

pub use burning::{BurnError, BurningSchedule, BurningSequence};
pub use graph::{Graph, GraphBuilder, GraphError, VertexId};
