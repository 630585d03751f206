//! Grundy numbers, domination, star partitions and girth-parameterized upper
//! bounds on the Grundy number, for graphs of up to 64 vertices.

pub mod bounds;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod witness;

pub use bounds::{check_all, check_all_with, BoundKind, BoundReport, CheckOptions};
pub use coloring::{first_fit, grundy_number_exact, grundy_number_with, Coloring, GrundyOptions, GrundyWitness};
pub use domination::{domination_number_exact, DominationWitness, StarPartition};
pub use error::{Error, Result};
pub use graph::{Girth, Graph};
