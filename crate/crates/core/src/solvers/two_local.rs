use std::collections::{HashSet, VecDeque};

use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{ColouredPath, Cycle, CyclePartition};
use crate::error::{Error, Result};
use crate::instances::TriConfig;
use crate::lemmas::{gyarfas_two_paths_on, merge_paths_bip, merge_paths_tri, one_cover_all};
use crate::oracle::{self, OracleBudget};
use crate::solvers::structure::{structure_decompose, StructureDecomposition};
use crate::solvers::trace::{SolveTrace, Stage};
use crate::verify::{verify_partition, VerifyOptions};

/// States explored per part when searching path partitions.
const POOL_CAP: usize = 512;

/// Two paths partitioning a part: `paths[s]` has colour `cols[s]`.
type PathState = [Vec<usize>; 2];

/// One part of the three-part configuration, indexed by the colour it misses.
struct Part {
    vertices: Vec<usize>,
    /// Indices (into the configuration's colours) of the two colours it sees.
    cols: [usize; 2],
    pool: Vec<PathState>,
}

impl Part {
    fn slot(&self, k: usize) -> usize {
        self.cols.iter().position(|&x| x == k).expect("part sees this colour")
    }

    /// Longest colour-`k` path over all explored states; earliest on ties.
    fn longest(&self, k: usize) -> &[usize] {
        let s = self.slot(k);
        let mut best: &[usize] = &[];
        for st in &self.pool {
            if st[s].len() > best.len() {
                best = &st[s];
            }
        }
        best
    }
}

fn canonical(mut st: PathState) -> PathState {
    for p in &mut st {
        if p.len() >= 2 && p[0] > p[p.len() - 1] {
            p.reverse();
        }
    }
    st
}

/// Every state reached by moving one end of a path onto an end of the
/// other path, through an edge of the other path's colour. Moving onto an
/// empty path is always possible.
fn shortening_moves(c: &EdgeColouring, st: &PathState, cols: [ColourId; 2]) -> Vec<PathState> {
    let mut out = Vec::new();
    for from in 0..2 {
        let to = 1 - from;
        let p = &st[from];
        if p.is_empty() {
            continue;
        }
        let ends: &[bool] = if p.len() == 1 { &[true] } else { &[true, false] };
        for &at_front in ends {
            let (e, rest) = if at_front {
                (p[0], p[1..].to_vec())
            } else {
                (p[p.len() - 1], p[..p.len() - 1].to_vec())
            };
            let q = &st[to];
            let mut targets = Vec::new();
            if q.is_empty() {
                targets.push(vec![e]);
            } else {
                if c.colour(e, q[q.len() - 1]) == cols[to] {
                    let mut t = q.clone();
                    t.push(e);
                    targets.push(t);
                }
                if q.len() >= 2 && c.colour(e, q[0]) == cols[to] {
                    let mut t = vec![e];
                    t.extend_from_slice(q);
                    targets.push(t);
                }
            }
            for t in targets {
                let mut next: PathState = Default::default();
                next[from] = rest.clone();
                next[to] = t;
                out.push(canonical(next));
            }
        }
    }
    out
}

/// Breadth-first closure of the normalised two-path partition under
/// shortening moves, capped at `POOL_CAP` states.
fn path_pool(c: &EdgeColouring, vertices: &[usize], cols: [ColourId; 2]) -> Result<Vec<PathState>> {
    let pair = gyarfas_two_paths_on(c, vertices, (cols[0], cols[1]))?;
    let mut start: PathState = [pair.p_first.vertices().to_vec(), pair.p_second.vertices().to_vec()];
    let original = canonical(start.clone());
    // With two or more vertices both paths can be made nonempty.
    if vertices.len() >= 2 {
        for s in 0..2 {
            if start[s].is_empty() {
                let v = start[1 - s].pop().unwrap();
                start[s].push(v);
            }
        }
    }
    let start = canonical(start);
    let mut seen: HashSet<PathState> = HashSet::new();
    let mut pool = Vec::new();
    let mut queue = VecDeque::new();
    for st in [start, original] {
        if seen.insert(st.clone()) {
            queue.push_back(st);
        }
    }
    while let Some(st) = queue.pop_front() {
        if pool.len() >= POOL_CAP {
            break;
        }
        for next in shortening_moves(c, &st, cols) {
            if seen.len() < 4 * POOL_CAP && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        pool.push(st);
    }
    Ok(pool)
}

/// A monochromatic spanning cycle of a part, read off the explored states
/// (a closed Hamilton path, or a path plus one vertex joined to both ends),
/// else found exactly when the part fits the oracle budget.
fn part_cycle(c: &EdgeColouring, part: &Part, cols: [ColourId; 3], budget: &OracleBudget) -> Option<Cycle> {
    let vs = &part.vertices;
    match vs.len() {
        1 => return Some(Cycle::singleton(vs[0])),
        2 => return Some(Cycle::new(vs.clone(), c.colour(vs[0], vs[1]))),
        _ => {}
    }
    for st in &part.pool {
        for s in 0..2 {
            let (p, q, col) = (&st[s], &st[1 - s], cols[part.cols[s]]);
            let closes = |w: usize| c.colour(w, p[0]) == col && c.colour(w, p[p.len() - 1]) == col;
            if q.is_empty() && p.len() == vs.len() && c.colour(p[0], p[p.len() - 1]) == col {
                return Some(Cycle::new(p.clone(), col));
            }
            if q.len() == 1 && p.len() >= 2 && closes(q[0]) {
                let mut order = p.clone();
                order.push(q[0]);
                return Some(Cycle::new(order, col));
            }
        }
    }
    part.cols
        .iter()
        .find_map(|&k| oracle::spanning_cycle_on(c, vs, cols[k], budget).ok().flatten())
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn path(vs: &[usize], col: ColourId) -> ColouredPath {
    ColouredPath::new(vs.to_vec(), col)
}

/// Two cycles when one part is a single vertex `v`: the other two parts
/// share the colour `v` misses, which sees all of them, so they split into
/// two cycles; the second lies inside one part, all of whose edges to `v`
/// carry the second cycle's colour, so `v` joins it.
fn singleton_part(
    c: &EdgeColouring,
    parts: &[Vec<usize>; 3],
    cols: [ColourId; 3],
    m: usize,
    budget: &OracleBudget,
    trace: &mut SolveTrace,
) -> Result<[Cycle; 2]> {
    let v = parts[m][0];
    let (j, l) = others(m);
    let mut rest: Vec<usize> = parts[j].iter().chain(&parts[l]).copied().collect();
    rest.sort_unstable();
    trace.push(
        Stage::Lemma,
        format!(
            "single vertex {v} set aside; split the rest with colour {} seeing all",
            cols[m]
        ),
    );
    let sub = c.induced(&rest);
    let (first, second) = one_cover_all(&sub, cols[m], budget)?;
    let lift = |cyc: &Cycle| -> Vec<usize> { cyc.vertices().iter().map(|&i| rest[i]).collect() };
    let first = Cycle::from_parts(lift(&first), first.colour());
    let mut order = lift(&second);
    let second = match order.len() {
        0 => Cycle::singleton(v),
        1 => {
            let col = c.colour(order[0], v);
            Cycle::new(vec![order[0], v], col)
        }
        _ => {
            order.insert(1, v);
            Cycle::new(order, second.colour().unwrap())
        }
    };
    trace.push(Stage::Closure, format!("vertex {v} added to the second cycle"));
    Ok([first, second])
}

/// Two cycles for the three-part configuration with every part of size >= 2.
fn general_case(
    c: &EdgeColouring,
    parts: &[Vec<usize>; 3],
    cols: [ColourId; 3],
    budget: &OracleBudget,
    trace: &mut SolveTrace,
) -> Result<Option<[Cycle; 2]>> {
    let mut info = Vec::with_capacity(3);
    for (m, vs) in parts.iter().enumerate() {
        let (a, b) = others(m);
        let pool = path_pool(c, vs, [cols[a], cols[b]])?;
        trace.push(
            Stage::PathPartition,
            format!(
                "part missing {}: paths of orders {} and {} in colours {} and {}",
                cols[m],
                pool[0][0].len(),
                pool[0][1].len(),
                cols[a],
                cols[b]
            ),
        );
        trace.push(
            Stage::Shortening,
            format!("part missing {}: {} states explored", cols[m], pool.len()),
        );
        info.push(Part {
            vertices: vs.clone(),
            cols: [a, b],
            pool,
        });
    }

    // Merging into the part missing colour i from the other two parts.
    for i in 0..3 {
        let (j, l) = others(i);
        let (aj, al, b) = (&info[l], &info[j], &info[i]);
        let (pj, pl) = (aj.longest(j), al.longest(l));
        if pj.is_empty() || pl.is_empty() {
            continue;
        }
        let (dj, dl) = (aj.vertices.len() - pj.len(), al.vertices.len() - pl.len());
        if dj + dl + 2 > b.vertices.len() {
            continue;
        }
        let st = &b.pool[0];
        let (cj, cl) = (cols[j], cols[l]);
        trace.push(
            Stage::Lemma,
            format!(
                "three-set merge into the part missing {}: deficits {dj} + {dl} + 2 <= {}",
                cols[i],
                b.vertices.len()
            ),
        );
        let (x, y) = merge_paths_tri(
            c,
            (cj, cl),
            &aj.vertices,
            &al.vertices,
            &b.vertices,
            &path(pj, cj),
            &path(pl, cl),
            &path(&st[b.slot(j)], cj),
            &path(&st[b.slot(l)], cl),
        )?;
        return Ok(Some([x, y]));
    }

    // A colour-i cycle through the two parts seeing i, plus a cycle on the third.
    for i in 0..3 {
        let (p, q) = others(i);
        for (j, l) in [(p, q), (q, p)] {
            let (a, b) = (&info[j], &info[l]);
            let (na, nb) = (a.vertices.len(), b.vertices.len());
            let (pa, pb) = (a.longest(i), b.longest(i));
            let take_a = (na + 1).saturating_sub(nb).max(1);
            if take_a > pa.len() {
                continue;
            }
            let take_b = nb.saturating_sub(na - take_a).max(1);
            if take_b > pb.len() {
                continue;
            }
            let Some(rest) = part_cycle(c, &info[i], cols, budget) else {
                continue;
            };
            trace.push(
                Stage::Lemma,
                format!(
                    "two-set merge in colour {} with path orders {take_a} and {take_b}; remaining part closed in one cycle",
                    cols[i]
                ),
            );
            let merged = merge_paths_bip(
                c,
                cols[i],
                &a.vertices,
                &b.vertices,
                &path(&pa[..take_a], cols[i]),
                &path(&pb[..take_b], cols[i]),
            )?;
            return Ok(Some([merged, rest]));
        }
    }
    Ok(None)
}

fn tri_partition(
    c: &EdgeColouring,
    cfg: &TriConfig,
    budget: &OracleBudget,
    trace: &mut SolveTrace,
) -> Result<[Cycle; 2]> {
    // parts[m] is the part that colour m does not see
    let parts = [cfg.v23.clone(), cfg.v13.clone(), cfg.v12.clone()];
    let cols = cfg.colours;
    trace.push(
        Stage::Decomposition,
        format!(
            "three parts of sizes {}, {}, {} (missing colours {}, {}, {})",
            parts[0].len(),
            parts[1].len(),
            parts[2].len(),
            cols[0],
            cols[1],
            cols[2]
        ),
    );
    if let Some(m) = (0..3).find(|&m| parts[m].len() == 1) {
        return singleton_part(c, &parts, cols, m, budget, trace);
    }
    if let Some(pair) = general_case(c, &parts, cols, budget, trace)? {
        return Ok(pair);
    }
    trace.push(Stage::Fallback, "guided search exhausted; exact two-cycle search");
    let (x, y) = oracle::two_distinct_colour_cycles(c, budget)?
        .ok_or_else(|| Error::StructureViolation("no two-cycle partition exists".into()))?;
    Ok([x, y])
}

/// Two vertex-disjoint monochromatic cycles of different colours covering
/// a 2-local colouring (empty cycles allowed).
///
/// If some colour sees every vertex the two-colour split is delegated to the
/// exact oracle. Otherwise the colouring has the three-part structure: a
/// single-vertex part is set aside and re-inserted, and in the general case
/// two-path partitions of every part, closed under shortening moves, feed
/// the three-set or two-set merge. An exact search is the last resort and
/// is recorded in the trace.
pub fn two_local_partition(c: &EdgeColouring, budget: &OracleBudget) -> Result<(CyclePartition, SolveTrace)> {
    if !c.is_r_local(2) {
        return Err(Error::NotTwoLocal);
    }
    let mut trace = SolveTrace::default();
    trace.push(Stage::Input, format!("n = {}, palette = {}", c.n(), c.palette().len()));
    let pair = match structure_decompose(c)? {
        StructureDecomposition::Trivial => {
            trace.push(Stage::Decomposition, "at most one vertex");
            let first = if c.n() == 1 {
                Cycle::singleton(0)
            } else {
                Cycle::empty()
            };
            [first, Cycle::empty()]
        }
        StructureDecomposition::AllSeeingColour(alpha) => {
            trace.push(Stage::Decomposition, format!("colour {alpha} sees every vertex"));
            trace.push(Stage::Lemma, "merged two-colour split");
            let (a, b) = one_cover_all(c, alpha, budget)?;
            [a, b]
        }
        StructureDecomposition::TriConfig(cfg) => tri_partition(c, &cfg, budget, &mut trace)?,
    };
    let partition = CyclePartition::new(pair.to_vec());
    let report = verify_partition(c, &partition, VerifyOptions::two_distinct());
    if !report.valid {
        return Err(Error::StructureViolation(format!(
            "constructed pair fails verification: {:?}",
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random_local, gen_tri_config, IntraRule, Seed};

    fn solve(c: &EdgeColouring) -> (CyclePartition, SolveTrace) {
        let (p, t) = two_local_partition(c, &OracleBudget::default()).unwrap();
        assert!(verify_partition(c, &p, VerifyOptions::two_distinct()).valid);
        assert_eq!(p.len(), 2);
        (p, t)
    }

    #[test]
    fn monochromatic() {
        let (p, _) = solve(&EdgeColouring::monochromatic(6, ColourId(0)));
        assert_eq!(p.cycles[0].len(), 6);
        assert!(p.cycles[1].is_empty());
    }

    #[test]
    fn tri_config_sweep() {
        for a in 1..=4 {
            for b in 1..=4 {
                for d in 1..=4 {
                    for rule in [
                        IntraRule::LowColour,
                        IntraRule::Random(Seed((a * 16 + b * 4 + d) as u64)),
                    ] {
                        let (c, _) = gen_tri_config((a, b, d), rule).unwrap();
                        let (_, t) = solve(&c);
                        assert!(!t.used_fallback(), "fallback on {:?}\n{t}", (a, b, d));
                    }
                }
            }
        }
    }

    #[test]
    fn random_two_local() {
        for seed in 0..300 {
            let n = 2 + (seed as usize % 11);
            let c = gen_random_local(n, 2, 5, Seed(seed)).unwrap();
            let (_, t) = solve(&c);
            assert!(!t.used_fallback(), "fallback on seed {seed}\n{t}");
        }
    }

    #[test]
    fn rejects_three_local() {
        assert!(matches!(
            two_local_partition(&EdgeColouring::rainbow(4), &OracleBudget::default()),
            Err(Error::NotTwoLocal)
        ));
    }
}
