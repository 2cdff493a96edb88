//! End-to-end solvers: two cycles for 2-local and 2-mean colourings, and a
//! staged pipeline for r-local colourings.

mod mean;
mod pipeline;
mod structure;
mod trace;
mod two_local;

pub use mean::two_mean_partition;
pub use pipeline::{
    fallback_bound, find_long_mono_cycle, find_triangle_cycle, r_local_partition, Fallback, PipelineParams,
};
pub use structure::{largest_mono_component, structure_decompose, StructureDecomposition};
pub use trace::{SolveTrace, Stage, TraceEvent};
pub use two_local::two_local_partition;
