//! Independent referee for cycle partitions.

use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{Cycle, CyclePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// A vertex appears twice, within one cycle or across cycles.
    NotDisjoint,
    /// Some vertex of `0..n` is on no cycle.
    NotCovering,
    /// A cycle's edges do not all share one colour.
    NotMonochromatic,
    /// The stored colour disagrees with the edges, or a short cycle carries a colour.
    ColourMismatch,
    /// Two cycles of length >= 2 share a colour while distinct colours were required.
    RepeatedColour,
    /// More cycles than `max_cycles`.
    TooManyCycles,
    /// A vertex id is `>= n`.
    VertexOutOfRange,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub require_cover: bool,
    pub require_distinct_colours: bool,
    pub max_cycles: Option<usize>,
}

impl VerifyOptions {
    pub fn cover() -> Self {
        VerifyOptions {
            require_cover: true,
            ..Default::default()
        }
    }

    /// The contract of the two-cycle theorems: a cover by at most two cycles
    /// of distinct colours.
    pub fn two_distinct() -> Self {
        VerifyOptions {
            require_cover: true,
            require_distinct_colours: true,
            max_cycles: Some(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub valid: bool,
    pub failure_reason: Option<FailureReason>,
    pub cycle_count: usize,
    /// Colours of the cycles of length >= 2, sorted (a multiset).
    pub colours_used: Vec<ColourId>,
}

fn cycle_colour_fault(c: &EdgeColouring, cycle: &Cycle) -> Option<FailureReason> {
    let edges = cycle.edges();
    match (edges.first(), cycle.colour()) {
        (None, None) => None,
        (None, Some(_)) | (Some(_), None) => Some(FailureReason::ColourMismatch),
        (Some(&(u0, v0)), Some(col)) => {
            let first = c.colour(u0, v0);
            if edges.iter().any(|&(u, v)| c.colour(u, v) != first) {
                Some(FailureReason::NotMonochromatic)
            } else if first != col {
                Some(FailureReason::ColourMismatch)
            } else {
                None
            }
        }
    }
}

/// Checks a partition against `c`. Failures are reported, never raised; the
/// first failing check (in the order of [`FailureReason`]'s structural checks)
/// is the one reported.
pub fn verify_partition(c: &EdgeColouring, p: &CyclePartition, opts: VerifyOptions) -> PartitionReport {
    let mut colours_used: Vec<ColourId> = p
        .cycles
        .iter()
        .filter(|cy| cy.len() >= 2)
        .filter_map(Cycle::colour)
        .collect();
    colours_used.sort();
    let report = |reason: Option<FailureReason>| PartitionReport {
        valid: reason.is_none(),
        failure_reason: reason,
        cycle_count: p.len(),
        colours_used: colours_used.clone(),
    };

    let mut seen = vec![false; c.n()];
    for cycle in &p.cycles {
        for &v in cycle.vertices() {
            if v >= c.n() {
                return report(Some(FailureReason::VertexOutOfRange));
            }
            if std::mem::replace(&mut seen[v], true) {
                return report(Some(FailureReason::NotDisjoint));
            }
        }
    }
    if let Some(reason) = p.cycles.iter().find_map(|cy| cycle_colour_fault(c, cy)) {
        return report(Some(reason));
    }
    if opts.require_cover && seen.iter().any(|s| !s) {
        return report(Some(FailureReason::NotCovering));
    }
    if opts.require_distinct_colours && colours_used.windows(2).any(|w| w[0] == w[1]) {
        return report(Some(FailureReason::RepeatedColour));
    }
    if opts.max_cycles.is_some_and(|m| p.len() > m) {
        return report(Some(FailureReason::TooManyCycles));
    }
    report(None)
}
