use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{Cycle, CyclePartition};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::instances::TriangleCycleWitness;
use crate::lemmas::{erdos_gallai_long_cycle, heuristic_long_cycle, patch_bipartite};
use crate::oracle::{self, OracleBudget};
use crate::solvers::trace::{SolveTrace, Stage};
use crate::verify::{verify_partition, VerifyOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fallback {
    /// Remove a longest-found monochromatic cycle until nothing is left.
    GreedyCycles,
}

/// Tunable constants of the r-local pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineParams {
    /// Long-cycle removal rounds are capped at `⌈c·r²·⌈log₂(r+1)⌉⌉`.
    pub c_pipeline: f64,
    /// Smallest triangle cycle accepted.
    pub tk_min: usize,
    /// Exponent `e` of the gate `r^e·|B| <= |A|`; `None` means `r + 3`.
    pub ratio_exp: Option<u32>,
    pub fallback: Fallback,
    /// Search-tree nodes allowed per (size, colour) in the triangle-cycle search.
    pub tk_search_nodes: u64,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            c_pipeline: 2.0,
            tk_min: 3,
            ratio_exp: None,
            fallback: Fallback::GreedyCycles,
            tk_search_nodes: 100_000,
        }
    }
}

impl PipelineParams {
    pub fn validate(&self) -> Result<()> {
        let positive = self.c_pipeline > 0.0;
        if !positive || self.tk_min < 3 || self.ratio_exp == Some(0) || self.tk_search_nodes == 0 {
            return Err(Error::BadParams(format!("invalid pipeline parameters {self:?}")));
        }
        Ok(())
    }

    pub fn gate_exponent(&self, r: usize) -> u32 {
        self.ratio_exp.unwrap_or(r as u32 + 3)
    }

    pub fn max_rounds(&self, r: usize) -> usize {
        let log_term = usize::BITS - r.leading_zeros(); // ⌈log₂(r+1)⌉
        (self.c_pipeline * (r * r) as f64 * log_term as f64).ceil() as usize
    }

    /// Cycle budget when the triangle-cycle route completes.
    pub fn tk_route_bound(&self, r: usize) -> usize {
        self.max_rounds(r) + r * r + 1
    }
}

/// Cycle budget of the greedy route on `n` vertices: `⌈2r·ln n⌉ + r`.
pub fn fallback_bound(n: usize, r: usize) -> usize {
    if n <= 1 {
        return n;
    }
    (2.0 * r as f64 * (n as f64).ln()).ceil() as usize + r
}

/// A monochromatic cycle of length at least `max(1, ⌈n/2r⌉)` in an r-local colouring.
///
/// The colour class with the most edges per incident vertex is dense enough
/// for the long-cycle lemma; every class is also searched heuristically,
/// and within the oracle budget the exact longest cycle is taken. The
/// longest candidate wins, earliest colour on ties.
pub fn find_long_mono_cycle(c: &EdgeColouring, r: usize, budget: &OracleBudget) -> Result<Cycle> {
    if r == 0 || !c.is_r_local(r) {
        return Err(Error::NotRLocal(r));
    }
    let n = c.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let target = n.div_ceil(2 * r).max(1);
    let mut best = Cycle::singleton(0);
    let consider = |cand: Cycle, best: &mut Cycle| {
        if cand.len() > best.len() {
            *best = cand;
        }
    };
    // (edges·(best span) vs best edges·span) comparison by cross-multiplying
    let mut densest: Option<(ColourId, Vec<usize>, usize)> = None;
    for &col in c.palette() {
        let span: Vec<usize> = (0..n).filter(|&v| c.sees(v, col)).collect();
        let g = SimpleGraph::colour_class(c, col, &span);
        let e = g.edge_count();
        let denser = match &densest {
            None => true,
            Some((_, s, de)) => e * s.len() > de * span.len(),
        };
        let lift = |order: Vec<usize>| order.into_iter().map(|i| span[i]).collect::<Vec<_>>();
        consider(Cycle::new(lift(heuristic_long_cycle(&g)), col), &mut best);
        if denser {
            densest = Some((col, span, e));
        }
    }
    if let Some((col, span, e)) = densest {
        let l = target.max(2);
        if best.len() < l && 2 * e >= l * span.len() {
            let g = SimpleGraph::colour_class(c, col, &span);
            if let Ok(order) = erdos_gallai_long_cycle(&g, l, budget) {
                consider(Cycle::new(order.into_iter().map(|i| span[i]).collect(), col), &mut best);
            }
        }
    }
    if n <= budget.max_n {
        let (_, exact) = oracle::longest_mono_cycle(c, budget)?;
        consider(exact, &mut best);
    }
    if best.len() < target {
        return Err(Error::StructureViolation(format!(
            "longest monochromatic cycle found has length {} < {target}",
            best.len()
        )));
    }
    Ok(best)
}

/// Depth-first search for a `k`-cycle in `adj` (bitmasks) whose consecutive
/// pairs have distinct common neighbours off the cycle.
struct TkSearch<'a> {
    adj: &'a [u64],
    k: usize,
    nodes_left: u64,
    path: Vec<usize>,
}

impl TkSearch<'_> {
    fn apexes(&self, cycle: &[usize]) -> Option<Vec<usize>> {
        let on: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
        let k = cycle.len();
        let cands: Vec<u64> = (0..k)
            .map(|i| self.adj[cycle[i]] & self.adj[cycle[(i + 1) % k]] & !on)
            .collect();
        // Kuhn's augmenting paths: slot i gets a distinct apex from cands[i].
        let mut owner: Vec<Option<usize>> = vec![None; self.adj.len()];
        fn augment(i: usize, cands: &[u64], owner: &mut [Option<usize>], seen: &mut u64) -> bool {
            let mut m = cands[i] & !*seen;
            while m != 0 {
                let a = m.trailing_zeros() as usize;
                m &= m - 1;
                *seen |= 1 << a;
                if owner[a].is_none_or(|j| augment(j, cands, owner, seen)) {
                    owner[a] = Some(i);
                    return true;
                }
            }
            false
        }
        for i in 0..k {
            let mut seen = 0u64;
            if !augment(i, &cands, &mut owner, &mut seen) {
                return None;
            }
        }
        let mut apex = vec![0; k];
        for (a, o) in owner.iter().enumerate() {
            if let Some(i) = o {
                apex[*i] = a;
            }
        }
        Some(apex)
    }

    fn run(&mut self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.adj.len();
        for s in 0..n {
            self.path = vec![s];
            if let Some(found) = self.extend(1u64 << s) {
                return Some(found);
            }
            if self.nodes_left == 0 {
                return None;
            }
        }
        None
    }

    fn extend(&mut self, on: u64) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.nodes_left == 0 {
            return None;
        }
        self.nodes_left -= 1;
        let last = *self.path.last().unwrap();
        let first = self.path[0];
        if self.path.len() == self.k {
            if self.adj[last] & (1 << first) == 0 || self.path[1] > last {
                return None;
            }
            let cycle = self.path.clone();
            return self.apexes(&cycle).map(|apex| (cycle, apex));
        }
        // Cycle vertices after the first are larger than it; each new edge needs a common neighbour.
        let mut m = self.adj[last] & !on & u64::MAX.checked_shl(first as u32 + 1).unwrap_or(0);
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[last] & self.adj[w] & !on & !(1 << w) == 0 {
                continue;
            }
            self.path.push(w);
            let found = self.extend(on | 1 << w);
            self.path.pop();
            if found.is_some() || self.nodes_left == 0 {
                return found;
            }
        }
        None
    }
}

/// The largest monochromatic triangle cycle with `k >= tk_min` found within
/// the node budget, trying sizes from `⌊n/2⌋` down and colours in order.
pub fn find_triangle_cycle(c: &EdgeColouring, params: &PipelineParams) -> Option<TriangleCycleWitness> {
    let n = c.n();
    if n > 64 {
        return None;
    }
    let classes: Vec<(ColourId, Vec<u64>)> = c
        .palette()
        .iter()
        .map(|&col| {
            let all: Vec<usize> = (0..n).collect();
            (col, SimpleGraph::colour_class(c, col, &all).masks())
        })
        .collect();
    for k in (params.tk_min..=n / 2).rev() {
        for (col, adj) in &classes {
            let mut search = TkSearch {
                adj,
                k,
                nodes_left: params.tk_search_nodes,
                path: Vec::new(),
            };
            if let Some((u, v)) = search.run() {
                return Some(TriangleCycleWitness { k, u, v, colour: *col });
            }
        }
    }
    None
}

fn remove(rest: &mut Vec<usize>, gone: &[usize]) {
    rest.retain(|v| !gone.contains(v));
}

/// Removes long monochromatic cycles from `rest` while `keep_going` holds,
/// checking each against the length guarantee. Returns false if the round
/// cap was hit first.
#[allow(clippy::too_many_arguments)]
fn remove_long_cycles(
    c: &EdgeColouring,
    r: usize,
    rest: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
    max_rounds: usize,
    budget: &OracleBudget,
    trace: &mut SolveTrace,
    keep_going: impl Fn(usize) -> bool,
) -> Result<bool> {
    let start = rest.len();
    let mut rounds = 0;
    while keep_going(rest.len()) {
        if rounds == max_rounds {
            return Ok(false);
        }
        let t = rest.len();
        let cyc = find_long_mono_cycle(&c.induced(rest), r, budget)?;
        let order: Vec<usize> = cyc.vertices().iter().map(|&i| rest[i]).collect();
        let removed = order.len();
        assert!(removed * 2 * r >= t, "removed cycle shorter than t/2r");
        rounds += 1;
        remove(rest, &order);
        let decay = start as f64 * (1.0 - 1.0 / (2.0 * r as f64)).powi(rounds as i32);
        assert!(rest.len() as f64 <= decay + 1e-9, "remainder above n(1 - 1/2r)^s");
        trace.push(
            Stage::Removal,
            format!(
                "round {rounds}: removed {removed} of {t}, {} left (decay bound {decay:.2})",
                rest.len()
            ),
        );
        out.push(Cycle::from_parts(order, cyc.colour()));
    }
    Ok(true)
}

fn greedy_route(c: &EdgeColouring, r: usize, budget: &OracleBudget, trace: &mut SolveTrace) -> Result<Vec<Cycle>> {
    let mut rest: Vec<usize> = (0..c.n()).collect();
    let mut out = Vec::new();
    remove_long_cycles(c, r, &mut rest, &mut out, usize::MAX, budget, trace, |t| t > 0)?;
    Ok(out)
}

/// Partitions an r-local colouring into monochromatic cycles.
///
/// Stage 1 looks for a monochromatic triangle cycle `T_k` with apex set `A`.
/// Stage 2 removes long monochromatic cycles from the rest until the
/// remainder `B` satisfies `r^e·|B| <= |A|`. Stage 3 patches `B` against `A`.
/// Stage 4 closes `T_k` minus the apexes the patch consumed into one cycle.
/// If stage 1 finds nothing, or stage 2 runs out of rounds, long cycles are
/// removed greedily from the whole vertex set instead.
pub fn r_local_partition(
    c: &EdgeColouring,
    r: usize,
    params: &PipelineParams,
    budget: &OracleBudget,
) -> Result<(CyclePartition, SolveTrace)> {
    params.validate()?;
    if r == 0 || !c.is_r_local(r) {
        return Err(Error::NotRLocal(r));
    }
    let n = c.n();
    let mut trace = SolveTrace::default();
    trace.push(
        Stage::Input,
        format!("n = {n}, r = {r}, palette = {}", c.palette().len()),
    );
    let cycles = match tk_route(c, r, params, budget, &mut trace)? {
        Some(cycles) => cycles,
        None => {
            trace.push(Stage::Fallback, "greedy long-cycle removal over all vertices");
            greedy_route(c, r, budget, &mut trace)?
        }
    };
    let partition = CyclePartition::new(cycles);
    let report = verify_partition(c, &partition, VerifyOptions::cover());
    if !report.valid {
        return Err(Error::StructureViolation(format!(
            "pipeline output fails verification: {:?}",
            report.failure_reason
        )));
    }
    trace.push(Stage::Result, format!("{} cycles", partition.len()));
    Ok((partition, trace))
}

fn tk_route(
    c: &EdgeColouring,
    r: usize,
    params: &PipelineParams,
    budget: &OracleBudget,
    trace: &mut SolveTrace,
) -> Result<Option<Vec<Cycle>>> {
    let Some(tk) = find_triangle_cycle(c, params) else {
        trace.push(
            Stage::Component,
            format!("no triangle cycle with k >= {}", params.tk_min),
        );
        return Ok(None);
    };
    let k = tk.k;
    trace.push(
        Stage::Component,
        format!("triangle cycle with k = {k} in colour {}", tk.colour),
    );
    let in_tk = tk.vertices();
    let mut rest: Vec<usize> = (0..c.n()).filter(|v| !in_tk.contains(v)).collect();
    let mut cycles = Vec::new();
    let gate = (r as u128).checked_pow(params.gate_exponent(r)).unwrap_or(u128::MAX);
    let max_rounds = params.max_rounds(r);
    let fits = |t: usize| (t as u128).saturating_mul(gate) <= k as u128;
    let done = remove_long_cycles(c, r, &mut rest, &mut cycles, max_rounds, budget, trace, |t| !fits(t))?;
    if !done {
        trace.push(
            Stage::Removal,
            format!(
                "{} vertices left after {max_rounds} rounds, gate needs at most {}",
                rest.len(),
                k as u128 / gate
            ),
        );
        return Ok(None);
    }
    let patch = patch_bipartite(c, &tk.v, &rest, r)?;
    trace.push(
        Stage::Patch,
        format!(
            "{} cycles cover {} remaining vertices using {} apexes",
            patch.cycles.len(),
            rest.len(),
            patch.a_used.len()
        ),
    );
    cycles.extend(patch.cycles);
    let closing = tk.closing_cycle(&patch.a_used);
    trace.push(
        Stage::Closure,
        format!("triangle cycle closed through {} vertices", closing.len()),
    );
    cycles.push(Cycle::new(closing, tk.colour));
    Ok(Some(cycles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random_local, gen_triangle_cycle, Seed};

    #[test]
    fn params() {
        let p = PipelineParams::default();
        assert_eq!(p.max_rounds(1), 2);
        assert_eq!(p.max_rounds(2), 16);
        assert_eq!(p.max_rounds(3), 36);
        assert_eq!(p.gate_exponent(2), 5);
        assert_eq!(fallback_bound(14, 2), 13);
    }

    #[test]
    fn long_cycle_examples() {
        let b = OracleBudget::default();
        let k8 = EdgeColouring::monochromatic(8, ColourId(0));
        assert_eq!(find_long_mono_cycle(&k8, 1, &b).unwrap().len(), 8);
        for seed in 0..20 {
            let c = gen_random_local(12, 2, 4, Seed(seed)).unwrap();
            let cyc = find_long_mono_cycle(&c, 2, &b).unwrap();
            assert!(cyc.len() >= 3 && cyc.is_valid_in(&c));
        }
        assert_eq!(
            find_long_mono_cycle(&EdgeColouring::rainbow(4), 2, &b),
            Err(Error::NotRLocal(2))
        );
    }

    #[test]
    fn planted_triangle_cycles() {
        let b = OracleBudget::default();
        for k in 3..=5 {
            let (c, w) = gen_triangle_cycle(k, ColourId(0), ColourId(1)).unwrap();
            let found = find_triangle_cycle(&c, &PipelineParams::default()).unwrap();
            assert_eq!(found.k, k);
            assert!(found.check(&c));
            let (p, t) = r_local_partition(&c, 2, &PipelineParams::default(), &b).unwrap();
            assert!(!t.used_fallback());
            assert!(p.len() <= PipelineParams::default().tk_route_bound(2));
            let _ = w;
        }
    }

    #[test]
    fn monochromatic_is_one_cycle() {
        let c = EdgeColouring::monochromatic(10, ColourId(2));
        let (p, _) = r_local_partition(&c, 1, &PipelineParams::default(), &OracleBudget::default()).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn random_instances_fall_back_validly() {
        let b = OracleBudget::default();
        for seed in 0..30 {
            let r = 1 + seed as usize % 3;
            let n = 4 + seed as usize % 11;
            let c = gen_random_local(n, r, r + 2, Seed(seed)).unwrap();
            let (p, _) = r_local_partition(&c, r, &PipelineParams::default(), &b).unwrap();
            assert!(p.len() <= fallback_bound(n, r));
        }
    }
}
