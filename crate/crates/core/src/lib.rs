pub mod error;
pub mod gadgets;
pub mod graph;
pub mod lists;
pub mod lsac;
pub mod oracle;
pub mod solve;
pub mod stats;
pub mod trouble;
pub mod twosat;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, VertexSet};
pub use lists::{Coloring, ColourSet, ListAssignment, Mode};
pub use solve::{SolveOptions, SolveResult, Verdict};
pub use stats::Stats;
