//! Constructive building blocks: cycle partitions of sparse-independence
//! graphs, long cycles in dense graphs, two-path partitions of two-coloured
//! graphs, bipartite patching, the two path-merging constructions, and the
//! two-colour splits delegated to the exact oracle.

mod black_box;
mod gyarfas;
mod long_cycle;
mod merging;
mod patching;
mod posa;
mod ramsey;

pub use black_box::{one_cover_all, one_more};
pub use gyarfas::{gyarfas_two_paths, gyarfas_two_paths_on, PathPair};
pub use long_cycle::{erdos_gallai_long_cycle, heuristic_long_cycle};
pub use merging::{merge_paths_bip, merge_paths_tri};
pub use patching::{patch_bipartite, AuxGraph, PatchResult, ShrinkState};
pub use posa::posa_cycle_partition;
pub use ramsey::local_ramsey_upper_bound;
