//! (1,1,2,2,2)-packing coloring of Halin graphs with maximum degree at most 5.
//!
//! * [`graph`]: validated Halin graphs (characteristic tree + adjoint cycle).
//! * [`format`]: the `HALIN 1` and `COLORING 1` text formats.
//! * [`generator`]: seeded random instances and canonical families.
//! * [`colorer`]: the linear-time coloring pipeline.
//! * [`verifier`]: an independent distance-based packing checker.
//! * [`oracle`]: exhaustive search for small graphs.

pub mod colorer;
pub mod format;
pub mod generator;
pub mod graph;
pub mod oracle;
pub mod verifier;

pub use colorer::{packing_coloring, Color, ColorError, Coloring};
pub use graph::{GraphDistance, GraphError, HalinGraph, VertexId};
pub use verifier::{verify_packing, ClassAssignment, PackingSequence, VerificationReport};
