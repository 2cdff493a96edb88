//! Partitions of locally edge-coloured complete graphs into few vertex-disjoint
//! monochromatic cycles.
//!
//! An edge colouring is *r-local* when every vertex meets at most `r` colours;
//! the total palette is unbounded. The crate provides:
//!
//! * the data model ([`EdgeColouring`], [`Cycle`], [`CyclePartition`]) and an
//!   independent referee ([`verify_partition`]);
//! * instance generators ([`instances`]);
//! * an exact subset-DP oracle for small instances ([`oracle`]);
//! * the constructive building blocks ([`lemmas`]): path merging, bipartite
//!   patching, Pósa partitions, long cycles;
//! * end-to-end solvers ([`solvers`]): two cycles for 2-local and 2-mean
//!   colourings, and a staged pipeline for general `r`.

pub mod colouring;
pub mod cycle;
pub mod error;
pub mod format;
pub mod graph;
pub mod instances;
pub mod lemmas;
pub mod oracle;
pub mod solvers;
pub mod verify;

pub use colouring::{ColourId, EdgeColouring};
pub use cycle::{ColouredPath, Cycle, CyclePartition};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use oracle::{OracleBudget, SubsetMask};
pub use verify::{verify_partition, FailureReason, PartitionReport, VerifyOptions};
