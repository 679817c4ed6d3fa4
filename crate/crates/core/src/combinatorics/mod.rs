//! Overpartitions, conjugation, Durfee decompositions and weighted Delannoy paths.

mod delannoy;
mod durfee;
mod enumerate;
mod overpartition;

pub use delannoy::{enumerate_delannoy_paths, path_stats, DelannoyIter, DelannoyPath, Step};
pub use durfee::{durfee, reconstruct, DurfeeDecomposition};
pub use enumerate::{enumerate_overpartitions, OverpartitionIter};
pub use overpartition::{OpStats, Overpartition, Part};
