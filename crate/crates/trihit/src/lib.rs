pub mod arrangement;
pub mod branching;
pub mod clique;
pub mod error;
pub mod exec;
pub mod gadgets;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod pipeline;
pub mod profile;
pub mod random;
pub mod reduce;
pub mod treewidth;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Bundle, Graph};
pub use profile::{Problem, ProblemProfile};
