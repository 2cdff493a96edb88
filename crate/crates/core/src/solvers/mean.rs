use num_rational::Ratio;

use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{Cycle, CyclePartition};
use crate::error::{Error, Result};
use crate::lemmas::one_more;
use crate::oracle::OracleBudget;
use crate::solvers::trace::{SolveTrace, Stage};
use crate::solvers::two_local::two_local_partition;
use crate::verify::{verify_partition, VerifyOptions};

/// Joins two `alpha` cycles into one. `first` must contain the edge
/// `first[last] – first[0]` between vertices seeing only `alpha` (or be a
/// single such vertex), so that every edge leaving those ends is `alpha`.
fn splice(first: &[usize], second: &[usize], alpha: ColourId) -> Cycle {
    // Open `first` at its closing edge and `second` at its closing edge,
    // then run first[0..] followed by second[0..].
    let mut order = first.to_vec();
    order.extend_from_slice(second);
    Cycle::new(order, alpha)
}

/// Two disjoint monochromatic cycles of different colours covering a
/// colouring of mean locality at most 2.
///
/// Vertices seeing exactly one colour (`V1`) all see the same colour `α`.
/// Without them the colouring is 2-local. Otherwise one `α` cycle alternates
/// `V1` with all but one vertex `v` of those seeing three or more colours
/// (`V3`), closing through an edge inside `V1`; the remaining vertices plus
/// `v` split into an `α` cycle and one other cycle, and the two `α` cycles
/// are spliced at that edge.
pub fn two_mean_partition(c: &EdgeColouring, budget: &OracleBudget) -> Result<(CyclePartition, SolveTrace)> {
    let mean = c.mean_locality().unwrap_or(Ratio::from_integer(0));
    if mean > Ratio::from_integer(2) {
        return Err(Error::MeanTooHigh(mean.to_string()));
    }
    let n = c.n();
    let loc: Vec<usize> = (0..n).map(|v| c.locality(v)).collect::<Result<_>>()?;
    let v1: Vec<usize> = (0..n).filter(|&v| loc[v] == 1).collect();
    let v3: Vec<usize> = (0..n).filter(|&v| loc[v] >= 3).collect();
    if v1.len() < v3.len() {
        return Err(Error::StructureViolation(format!(
            "{} one-colour vertices but {} with three or more colours",
            v1.len(),
            v3.len()
        )));
    }
    if v3.is_empty() {
        let (p, mut t) = two_local_partition(c, budget)?;
        t.events.insert(
            0,
            crate::solvers::trace::TraceEvent {
                stage: Stage::Decomposition,
                detail: "no vertex sees three colours; delegated to the 2-local solver".into(),
            },
        );
        return Ok((p, t));
    }
    let mut trace = SolveTrace::default();
    trace.push(
        Stage::Input,
        format!(
            "n = {n}, mean locality = {mean}, |V1| = {}, |V3| = {}",
            v1.len(),
            v3.len()
        ),
    );
    let alpha = c.colours_at(v1[0])?[0];
    if let Some(&w) = v1.iter().find(|&&w| c.colours_at(w).map(|cs| cs[0]) != Ok(alpha)) {
        return Err(Error::StructureViolation(format!(
            "one-colour vertices {} and {w} disagree",
            v1[0]
        )));
    }
    // v: most colours, lowest id
    let v = *v3.iter().max_by_key(|&&x| (loc[x], std::cmp::Reverse(x))).unwrap();
    let others3: Vec<usize> = v3.iter().copied().filter(|&x| x != v).collect();
    // x1 y1 x2 y2 … xk yk x(k+1) … xm, closing through xm – x1
    let mut c1 = Vec::with_capacity(v1.len() + others3.len());
    for (i, &x) in v1.iter().enumerate() {
        c1.push(x);
        if let Some(&y) = others3.get(i) {
            c1.push(y);
        }
    }
    trace.push(
        Stage::Component,
        format!(
            "colour {alpha} cycle through {} vertices, vertex {v} left over",
            c1.len()
        ),
    );

    let mut rest: Vec<usize> = (0..n).filter(|&x| loc[x] == 2).collect();
    rest.push(v);
    rest.sort_unstable();
    let local_v = rest.binary_search(&v).unwrap();
    trace.push(
        Stage::Lemma,
        format!("split of {} vertices around vertex {v}", rest.len()),
    );
    let (ca, cb) = one_more(&c.induced(&rest), alpha, local_v, budget)?;
    let lift = |cyc: &Cycle| -> Vec<usize> { cyc.vertices().iter().map(|&i| rest[i]).collect() };
    let first = splice(&c1, &lift(&ca), alpha);
    let second = Cycle::from_parts(lift(&cb), cb.colour());
    trace.push(
        Stage::Closure,
        format!("spliced into one colour {alpha} cycle of length {}", first.len()),
    );

    let partition = CyclePartition::new(vec![first, second]);
    let report = verify_partition(c, &partition, VerifyOptions::two_distinct());
    if !report.valid {
        return Err(Error::StructureViolation(format!(
            "spliced pair fails verification: {:?}",
            report.failure_reason
        )));
    }
    trace.push(
        Stage::Result,
        format!(
            "cycles of lengths {} and {}",
            partition.cycles[0].len(),
            partition.cycles[1].len()
        ),
    );
    Ok((partition, trace))
}
