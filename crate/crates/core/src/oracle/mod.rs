//! Exact exponential-time ground truth for desk-scale instances.
//!
//! Everything here enumerates vertex subsets, so every entry point checks the
//! instance size against an [`OracleBudget`] first and refuses larger inputs.

mod hamilton;
mod independence;

use std::time::{Duration, Instant};

use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{Cycle, CyclePartition};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

use hamilton::{bits, low_bit, path_ends, rebuild_cycle, spans_cycle};

/// Hard ceiling for subset DP regardless of configuration.
pub const HARD_MAX_N: usize = 30;
pub const DEFAULT_MAX_N: usize = 14;
pub const MAX_N_ENV: &str = "CYCLECOVER_ORACLE_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub time_limit: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: DEFAULT_MAX_N,
            time_limit: None,
        }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleBudget {
            max_n: max_n.min(HARD_MAX_N),
            time_limit: None,
        }
    }

    /// Default budget, with `max_n` taken from `CYCLECOVER_ORACLE_MAX_N` when set.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(m) => Self::with_max_n(m),
            None => Self::default(),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let cap = self.max_n.min(HARD_MAX_N);
        if n > cap {
            Err(Error::BudgetExceeded { n, max_n: cap })
        } else {
            Ok(())
        }
    }

    fn deadline(&self) -> Deadline {
        Deadline(self.time_limit.map(|t| (Instant::now() + t, self.max_n)))
    }
}

struct Deadline(Option<(Instant, usize)>);

impl Deadline {
    fn check(&self, n: usize) -> Result<()> {
        match self.0 {
            Some((at, max_n)) if Instant::now() > at => Err(Error::BudgetExceeded { n, max_n }),
            _ => Ok(()),
        }
    }
}

/// A vertex subset as a bitmask over `0..n`, `n <= 30`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub fn full(n: usize) -> Self {
        assert!(n <= HARD_MAX_N);
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    pub fn from_vertices(vs: &[usize]) -> Self {
        SubsetMask(vs.iter().fold(0, |m, &v| {
            assert!(v < HARD_MAX_N);
            m | 1 << v
        }))
    }

    pub fn vertices(self) -> Vec<usize> {
        bits(self.0).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }
}

fn colour_adjacency(c: &EdgeColouring, mut keep: impl FnMut(ColourId) -> bool) -> Vec<u32> {
    let n = c.n();
    let mut adj = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if keep(c.colour(u, v)) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    adj
}

fn local_adjacency(c: &EdgeColouring, vs: &[usize], col: ColourId) -> Vec<u32> {
    let mut adj = vec![0u32; vs.len()];
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if c.colour(vs[i], vs[j]) == col {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// A cycle through exactly `vertices` in colour `col`, if one exists.
///
/// Works on any ambient colouring; only `|vertices|` is charged to the budget.
pub fn spanning_cycle_on(
    c: &EdgeColouring,
    vertices: &[usize],
    col: ColourId,
    budget: &OracleBudget,
) -> Result<Option<Cycle>> {
    match vertices {
        [] => return Ok(Some(Cycle::empty())),
        [v] => return Ok(Some(Cycle::singleton(*v))),
        [u, v] => {
            return Ok((c.colour(*u, *v) == col).then(|| Cycle::new(vec![*u, *v], col)));
        }
        _ => {}
    }
    budget.check(vertices.len())?;
    let adj = local_adjacency(c, vertices, col);
    Ok(
        hamilton::hamiltonian_cycle(&adj)
            .map(|order| Cycle::new(order.into_iter().map(|i| vertices[i]).collect(), col)),
    )
}

/// A monochromatic spanning cycle of the subset `s` in colour `col`.
pub fn mono_spanning_cycle(
    c: &EdgeColouring,
    s: SubsetMask,
    col: ColourId,
    budget: &OracleBudget,
) -> Result<Option<Cycle>> {
    let vertices = s.vertices();
    if let Some(&v) = vertices.iter().find(|&&v| v >= c.n()) {
        return Err(Error::OutOfRange { vertex: v, n: c.n() });
    }
    spanning_cycle_on(c, &vertices, col, budget)
}

/// Per-subset summary of which colours admit a spanning cycle: up to two
/// distinct palette indices, smallest first. Subsets of size <= 1 are
/// cyclable without a colour.
struct CyclableTable {
    first: Vec<u8>,
    second: Vec<u8>,
}

const NONE: u8 = u8::MAX;

impl CyclableTable {
    fn build(c: &EdgeColouring, deadline: &Deadline) -> Result<Self> {
        let n = c.n();
        let size = 1usize << n;
        let mut first = vec![NONE; size];
        let mut second = vec![NONE; size];
        for (idx, &col) in c.palette().iter().enumerate().take(NONE as usize) {
            deadline.check(n)?;
            let adj = colour_adjacency(c, |x| x == col);
            let ends = path_ends(&adj);
            for s in 1..size as u32 {
                if s.count_ones() >= 2 && spans_cycle(&adj, &ends, s) {
                    let slot = s as usize;
                    if first[slot] == NONE {
                        first[slot] = idx as u8;
                    } else if second[slot] == NONE {
                        second[slot] = idx as u8;
                    }
                }
            }
        }
        Ok(CyclableTable { first, second })
    }

    fn cyclable(&self, s: u32) -> bool {
        s.count_ones() <= 1 || self.first[s as usize] != NONE
    }
}

/// The exact subset-DP table behind [`min_cycle_partition`]:
/// `cost[S]` is the minimum number of nonempty monochromatic cycles
/// partitioning `S`.
pub struct PartitionTable {
    n: usize,
    cost: Vec<u8>,
    choice: Vec<u32>,
    cyclable: CyclableTable,
}

impl PartitionTable {
    pub fn build(c: &EdgeColouring, budget: &OracleBudget) -> Result<Self> {
        let n = c.n();
        budget.check(n)?;
        let deadline = budget.deadline();
        let cyclable = CyclableTable::build(c, &deadline)?;
        let size = 1usize << n;
        let mut cost = vec![0u8; size];
        let mut choice = vec![0u32; size];
        for s in 1..size as u32 {
            if s & 0xffff == 0 {
                deadline.check(n)?;
            }
            let low = low_bit(s);
            let rest = s ^ low;
            let mut best = u8::MAX;
            let mut best_t = 0;
            // Ascending submasks of `rest`, so the smallest witness mask wins ties.
            let mut sub = 0u32;
            loop {
                let t = sub | low;
                if cyclable.cyclable(t) {
                    let v = 1 + cost[(s ^ t) as usize];
                    if v < best {
                        best = v;
                        best_t = t;
                    }
                }
                if sub == rest {
                    break;
                }
                sub = sub.wrapping_sub(rest) & rest;
            }
            cost[s as usize] = best;
            choice[s as usize] = best_t;
        }
        Ok(PartitionTable {
            n,
            cost,
            choice,
            cyclable,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_cycles(&self, s: SubsetMask) -> usize {
        self.cost[s.0 as usize] as usize
    }

    pub fn min_cycles_full(&self) -> usize {
        self.min_cycles(SubsetMask::full(self.n))
    }

    /// Witness partition of `s` (nonempty cycles only).
    pub fn witness(&self, c: &EdgeColouring, s: SubsetMask) -> CyclePartition {
        let mut cycles = Vec::new();
        let mut rest = s.0;
        while rest != 0 {
            let t = self.choice[rest as usize];
            let vs: Vec<usize> = bits(t).collect();
            let cycle = if vs.len() <= 1 {
                Cycle::from_parts(vs, None)
            } else {
                let col = c.palette()[self.cyclable.first[t as usize] as usize];
                let adj = local_adjacency(c, &vs, col);
                let order = hamilton::hamiltonian_cycle(&adj).expect("table says cyclable");
                Cycle::new(order.into_iter().map(|i| vs[i]).collect(), col)
            };
            cycles.push(cycle);
            rest ^= t;
        }
        CyclePartition::new(cycles)
    }
}

/// Exact minimum number of vertex-disjoint monochromatic cycles covering
/// all vertices, with a witness. Empty cycles are never counted.
pub fn min_cycle_partition(c: &EdgeColouring, budget: &OracleBudget) -> Result<(usize, CyclePartition)> {
    let table = PartitionTable::build(c, budget)?;
    let full = SubsetMask::full(c.n());
    Ok((table.min_cycles(full), table.witness(c, full)))
}

/// Two disjoint cycles covering everything, the first in `alpha`, the second
/// in "not alpha": either all other colours merged into one (`beta_is_merged`)
/// or any single colour other than `alpha`.
///
/// In merged mode the second cycle is labelled with the original colour of
/// its first edge; it is monochromatic in the original colouring only when
/// the caller's structure guarantees it.
pub fn bt_two_cycles(
    c: &EdgeColouring,
    alpha: ColourId,
    beta_is_merged: bool,
    budget: &OracleBudget,
) -> Result<Option<(Cycle, Cycle)>> {
    let n = c.n();
    budget.check(n)?;
    let deadline = budget.deadline();
    let full = SubsetMask::full(n).0;
    let alpha_adj = colour_adjacency(c, |x| x == alpha);
    let alpha_ends = path_ends(&alpha_adj);

    let betas: Vec<ColourId> = if beta_is_merged {
        vec![alpha]
    } else {
        c.palette().iter().copied().filter(|&x| x != alpha).collect()
    };
    let mut beta_tables = Vec::with_capacity(betas.len());
    for &b in &betas {
        deadline.check(n)?;
        let adj = if beta_is_merged {
            colour_adjacency(c, |x| x != alpha)
        } else {
            colour_adjacency(c, |x| x == b)
        };
        let ends = path_ends(&adj);
        beta_tables.push((b, adj, ends));
    }

    // A single cycle (all alpha, then all beta) is preferred over a split.
    let order = std::iter::once(full).chain(0..full);
    for s in order {
        if !spans_cycle(&alpha_adj, &alpha_ends, s) {
            continue;
        }
        let rest = full ^ s;
        let beta_hit = if rest.count_ones() <= 1 {
            Some(None)
        } else {
            beta_tables
                .iter()
                .find(|(_, adj, ends)| spans_cycle(adj, ends, rest))
                .map(Some)
        };
        let Some(beta) = beta_hit else { continue };
        let alpha_cycle = Cycle::new(rebuild_cycle(&alpha_adj, &alpha_ends, s).unwrap(), alpha);
        let beta_cycle = match beta {
            None => Cycle::from_parts(bits(rest).collect(), None),
            Some((b, adj, ends)) => {
                let order = rebuild_cycle(adj, ends, rest).unwrap();
                let col = if beta_is_merged {
                    c.colour(order[0], order[1])
                } else {
                    *b
                };
                Cycle::new(order, col)
            }
        };
        return Ok(Some((alpha_cycle, beta_cycle)));
    }
    Ok(None)
}

/// Two disjoint monochromatic cycles covering everything whose colours differ
/// (when both have length >= 2), by exhaustive split search.
pub fn two_distinct_colour_cycles(c: &EdgeColouring, budget: &OracleBudget) -> Result<Option<(Cycle, Cycle)>> {
    let n = c.n();
    budget.check(n)?;
    let table = CyclableTable::build(c, &budget.deadline())?;
    let full = SubsetMask::full(n).0;
    let colours_of = |s: u32| -> Vec<u8> {
        if s.count_ones() <= 1 {
            return vec![];
        }
        [table.first[s as usize], table.second[s as usize]]
            .into_iter()
            .filter(|&x| x != NONE)
            .collect()
    };
    for s in 0..=full {
        let rest = full ^ s;
        if !table.cyclable(s) || !table.cyclable(rest) {
            continue;
        }
        let (cs, cr) = (colours_of(s), colours_of(rest));
        let pick = match (s.count_ones() <= 1, rest.count_ones() <= 1) {
            (true, true) => Some((None, None)),
            (true, false) => Some((None, Some(cr[0]))),
            (false, true) => Some((Some(cs[0]), None)),
            (false, false) => cs
                .iter()
                .flat_map(|&x| cr.iter().map(move |&y| (x, y)))
                .find(|(x, y)| x != y)
                .map(|(x, y)| (Some(x), Some(y))),
        };
        let Some((x, y)) = pick else { continue };
        let build = |set: u32, idx: Option<u8>| -> Cycle {
            let vs: Vec<usize> = bits(set).collect();
            match idx {
                None => Cycle::from_parts(vs, None),
                Some(i) => {
                    let col = c.palette()[i as usize];
                    let order = hamilton::hamiltonian_cycle(&local_adjacency(c, &vs, col)).unwrap();
                    Cycle::new(order.into_iter().map(|k| vs[k]).collect(), col)
                }
            }
        };
        return Ok(Some((build(s, x), build(rest, y))));
    }
    Ok(None)
}

/// Longest monochromatic cycle over all colours (a single edge has length 2).
pub fn longest_mono_cycle(c: &EdgeColouring, budget: &OracleBudget) -> Result<(usize, Cycle)> {
    let n = c.n();
    budget.check(n)?;
    let deadline = budget.deadline();
    let mut best = match n {
        0 => Cycle::empty(),
        _ => Cycle::singleton(0),
    };
    for &col in c.palette() {
        deadline.check(n)?;
        let adj = colour_adjacency(c, |x| x == col);
        let order = hamilton::longest_cycle(&adj);
        if order.len() > best.len() {
            best = Cycle::new(order, col);
        }
    }
    Ok((best.len(), best))
}

fn graph_masks(g: &SimpleGraph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbours(v).fold(0u32, |m, u| m | 1 << u))
        .collect()
}

/// Exact longest cycle of a plain graph (vertex list; an edge counts as length 2).
pub fn longest_cycle_in_graph(g: &SimpleGraph, budget: &OracleBudget) -> Result<Vec<usize>> {
    budget.check(g.n())?;
    Ok(hamilton::longest_cycle(&graph_masks(g)))
}

/// Exact independence number.
pub fn independence_number(g: &SimpleGraph, budget: &OracleBudget) -> Result<usize> {
    budget.check(g.n())?;
    let masks: Vec<u64> = graph_masks(g).into_iter().map(u64::from).collect();
    let all = if g.n() == 0 { 0 } else { (1u64 << g.n()) - 1 };
    Ok(independence::independence_number(&masks, all))
}

/// Whether at least `s` cycles are needed, both for `c` and after deleting
/// any single vertex.
pub fn robustness_check(c: &EdgeColouring, s: usize, budget: &OracleBudget) -> Result<bool> {
    if c.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let table = PartitionTable::build(c, budget)?;
    Ok(robustness_level(&table) >= s)
}

/// Largest `s` for which [`robustness_check`] holds, read off a built table.
pub fn robustness_level(table: &PartitionTable) -> usize {
    let full = SubsetMask::full(table.n());
    (0..table.n())
        .map(|v| table.min_cycles(SubsetMask(full.0 & !(1 << v))))
        .chain(std::iter::once(table.min_cycles(full)))
        .min()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_partition, VerifyOptions};

    fn c(x: u32) -> ColourId {
        ColourId(x)
    }

    #[test]
    fn spanning_cycle_small_cases() {
        let b = OracleBudget::default();
        let k5 = EdgeColouring::monochromatic(5, c(0));
        let cyc = mono_spanning_cycle(&k5, SubsetMask::full(5), c(0), &b)
            .unwrap()
            .unwrap();
        assert_eq!(cyc.len(), 5);
        assert!(cyc.is_valid_in(&k5));

        let two = EdgeColouring::monochromatic(2, c(2));
        assert!(mono_spanning_cycle(&two, SubsetMask::full(2), c(3), &b)
            .unwrap()
            .is_none());
        assert!(mono_spanning_cycle(&two, SubsetMask::full(2), c(2), &b)
            .unwrap()
            .is_some());
    }

    #[test]
    fn min_partition_basics() {
        let b = OracleBudget::default();
        assert_eq!(
            min_cycle_partition(&EdgeColouring::monochromatic(1, c(0)), &b)
                .unwrap()
                .0,
            1
        );
        assert_eq!(
            min_cycle_partition(&EdgeColouring::monochromatic(6, c(0)), &b)
                .unwrap()
                .0,
            1
        );
        assert_eq!(
            min_cycle_partition(&EdgeColouring::monochromatic(0, c(0)), &b)
                .unwrap()
                .0,
            0
        );
        let (k, p) = min_cycle_partition(&EdgeColouring::rainbow(4), &b).unwrap();
        assert_eq!(k, 2);
        assert!(verify_partition(&EdgeColouring::rainbow(4), &p, VerifyOptions::cover()).valid);
    }

    #[test]
    fn budget_is_enforced() {
        let b = OracleBudget::with_max_n(5);
        let k6 = EdgeColouring::monochromatic(6, c(0));
        assert_eq!(
            min_cycle_partition(&k6, &b).unwrap_err(),
            Error::BudgetExceeded { n: 6, max_n: 5 }
        );
        assert!(OracleBudget::with_max_n(31).check(31).is_err());
    }

    #[test]
    fn bt_examples() {
        let b = OracleBudget::default();
        let k4 = EdgeColouring::monochromatic(4, c(0));
        let (a, bet) = bt_two_cycles(&k4, c(0), true, &b).unwrap().unwrap();
        assert_eq!(a.len(), 4);
        assert!(bet.is_empty());

        let k2 = EdgeColouring::monochromatic(2, c(1));
        let (a, bet) = bt_two_cycles(&k2, c(0), true, &b).unwrap().unwrap();
        assert!(a.is_empty());
        assert_eq!(bet.vertices(), &[0, 1]);
        assert_eq!(bet.colour(), Some(c(1)));
    }

    #[test]
    fn longest_examples() {
        let b = OracleBudget::default();
        assert_eq!(
            longest_mono_cycle(&EdgeColouring::monochromatic(7, c(0)), &b)
                .unwrap()
                .0,
            7
        );
        assert_eq!(longest_mono_cycle(&EdgeColouring::rainbow(4), &b).unwrap().0, 2);
        assert_eq!(
            longest_mono_cycle(&EdgeColouring::monochromatic(1, c(0)), &b)
                .unwrap()
                .0,
            1
        );
    }

    #[test]
    fn independence_examples() {
        let b = OracleBudget::default();
        assert_eq!(independence_number(&SimpleGraph::empty(5), &b).unwrap(), 5);
        assert_eq!(independence_number(&SimpleGraph::complete(5), &b).unwrap(), 1);
        assert_eq!(independence_number(&SimpleGraph::cycle(6), &b).unwrap(), 3);
        assert_eq!(independence_number(&SimpleGraph::empty(0), &b).unwrap(), 0);
    }

    #[test]
    fn robustness_examples() {
        let b = OracleBudget::default();
        let k4 = EdgeColouring::monochromatic(4, c(0));
        assert!(robustness_check(&k4, 1, &b).unwrap());
        assert!(!robustness_check(&k4, 2, &b).unwrap());
    }
}
