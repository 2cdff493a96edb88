use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::lemmas::posa::peel_cycles;

/// The shrinking chain `A ⊇ A_1 ⊇ … ⊇ A_i` with `A_i` the common
/// colour-`c_j` neighbourhood of the representatives `b_j`, and the final
/// split of `B` by colour.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ShrinkState {
    pub a_sets: Vec<Vec<usize>>,
    pub b_reps: Vec<usize>,
    pub colours: Vec<ColourId>,
    /// `b_partition[j]` holds the vertices of `B` assigned to `colours[j]`.
    pub b_partition: Vec<Vec<usize>>,
    pub a_prime: Vec<usize>,
}

/// The graph on `B_j` joining pairs with many common colour-`c_j` neighbours in `A'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub colour: ColourId,
    pub vertices: Vec<usize>,
    pub graph: SimpleGraph,
    /// Cycles of `graph`, as indices into `vertices`.
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PatchResult {
    pub cycles: Vec<Cycle>,
    pub a_used: Vec<usize>,
    pub state: ShrinkState,
    pub aux_graphs: Vec<AuxGraph>,
}

fn violated<T>(msg: String) -> Result<T> {
    Err(Error::PreconditionViolated(msg))
}

/// Distinct colours on the edges from `x` to `others`.
fn cross_colours(c: &EdgeColouring, x: usize, others: &[usize]) -> Vec<ColourId> {
    let mut cols: Vec<ColourId> = others.iter().map(|&y| c.colour(x, y)).collect();
    cols.sort();
    cols.dedup();
    cols
}

fn check_preconditions(c: &EdgeColouring, a: &[usize], b: &[usize], r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::BadParams("r must be positive".into()));
    }
    let mut seen = vec![false; c.n()];
    for &v in a.iter().chain(b) {
        if v >= c.n() {
            return Err(Error::OutOfRange { vertex: v, n: c.n() });
        }
        if std::mem::replace(&mut seen[v], true) {
            return violated(format!("vertex {v} repeated or shared by a and b"));
        }
    }
    let gate = (r as u128).checked_pow(r as u32 + 3).unwrap_or(u128::MAX);
    if (b.len() as u128).saturating_mul(gate) > a.len() as u128 {
        return violated(format!(
            "|b| = {} exceeds |a| / r^(r+3) with |a| = {}",
            b.len(),
            a.len()
        ));
    }
    for (x, others) in a.iter().map(|&x| (x, b)).chain(b.iter().map(|&x| (x, a))) {
        let k = cross_colours(c, x, others).len();
        if k > r {
            return violated(format!("vertex {x} sees {k} > {r} colours across the bipartition"));
        }
    }
    Ok(())
}

fn common_neighbourhood(c: &EdgeColouring, set: &[usize], b: usize, col: ColourId) -> Vec<usize> {
    set.iter().copied().filter(|&a| c.colour(a, b) == col).collect()
}

/// Chooses representatives and colours until every remaining `b` has a
/// chosen colour with at least `|A_i|/r` neighbours in `A_i`.
fn shrink(c: &EdgeColouring, a: &[usize], b: &[usize], r: usize) -> Result<ShrinkState> {
    let mut st = ShrinkState {
        a_sets: vec![a.to_vec()],
        ..ShrinkState::default()
    };
    loop {
        let cur = st.a_sets.last().unwrap().clone();
        let big = |set_len: usize| set_len * r >= cur.len();
        // Best chosen colour for each non-representative b.
        let mut assignment = Vec::new();
        let mut pending = None;
        for &x in b.iter().filter(|x| !st.b_reps.contains(x)) {
            let best = st
                .colours
                .iter()
                .enumerate()
                .map(|(j, &col)| (common_neighbourhood(c, &cur, x, col).len(), j))
                .filter(|&(size, _)| big(size))
                .max_by_key(|&(size, j)| (size, std::cmp::Reverse(j)));
            match best {
                Some((_, j)) => assignment.push((x, j)),
                None => {
                    pending = Some(x);
                    break;
                }
            }
        }
        let Some(x) = pending else {
            let mut parts = vec![Vec::new(); st.colours.len()];
            for (j, &rep) in st.b_reps.iter().enumerate() {
                parts[j].push(rep);
            }
            for (x, j) in assignment {
                parts[j].push(x);
            }
            for part in &mut parts {
                part.sort_unstable();
            }
            st.b_partition = parts;
            st.a_prime = cur;
            return Ok(st);
        };
        if st.colours.len() == r {
            return Err(Error::StructureViolation(format!(
                "vertex {x} has no large chosen-colour neighbourhood after {r} rounds"
            )));
        }
        // Largest new colour neighbourhood of x inside A_i; smallest colour on ties.
        let (size, col) = cross_colours(c, x, &cur)
            .into_iter()
            .filter(|col| !st.colours.contains(col))
            .map(|col| (common_neighbourhood(c, &cur, x, col).len(), col))
            .max_by_key(|&(size, col)| (size, std::cmp::Reverse(col)))
            .ok_or_else(|| Error::StructureViolation(format!("vertex {x} sees no new colour")))?;
        if !big(size) {
            return Err(Error::StructureViolation(format!(
                "vertex {x}: best new colour covers only {size} of {}",
                cur.len()
            )));
        }
        let next = common_neighbourhood(c, &cur, x, col);
        st.b_reps.push(x);
        st.colours.push(col);
        st.a_sets.push(next);
        let i = st.colours.len() as u32;
        assert!(
            st.a_sets.last().unwrap().len() as u128 * (r as u128).pow(i) >= a.len() as u128,
            "|A_i| >= |A| / r^i"
        );
    }
}

/// Covers `b` with at most `r²` disjoint monochromatic cycles that alternate
/// between `b` and fresh vertices of `a`, given `|b| <= |a|/r^(r+3)` and an
/// r-local colouring of the `a`–`b` edges. Edges inside `a` and inside `b`
/// are never used.
///
/// `B` is split by colour against a shrinking common neighbourhood `A'`;
/// in each part, pairs with at least `|A'|/r³` common neighbours in `A'`
/// are joined, that graph is peeled into at most `r` cycles, and each of
/// its cycles is realised by inserting the lowest-id unused common
/// neighbour between consecutive vertices.
pub fn patch_bipartite(c: &EdgeColouring, a: &[usize], b: &[usize], r: usize) -> Result<PatchResult> {
    check_preconditions(c, a, b, r)?;
    if b.is_empty() {
        return Ok(PatchResult::default());
    }
    let state = shrink(c, a, b, r)?;
    let a_prime = &state.a_prime;
    assert!(a_prime.len() as u128 * (r as u128).pow(r as u32) >= a.len() as u128);
    let r3 = r * r * r;
    let mut used = vec![false; c.n()];
    let mut cycles = Vec::new();
    let mut aux_graphs = Vec::new();
    for (j, part) in state.b_partition.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        let col = state.colours[j];
        let nbhd: Vec<Vec<usize>> = part.iter().map(|&x| common_neighbourhood(c, a_prime, x, col)).collect();
        let common =
            |p: usize, q: usize| -> Vec<usize> { nbhd[p].iter().copied().filter(|v| nbhd[q].contains(v)).collect() };
        let graph = SimpleGraph::from_fn(part.len(), |p, q| common(p, q).len() * r3 >= a_prime.len());
        let aux_cycles = peel_cycles(&graph);
        if aux_cycles.len() > r {
            return Err(Error::StructureViolation(format!(
                "auxiliary graph of colour {col} split into {} > {r} cycles",
                aux_cycles.len()
            )));
        }
        for cyc in &aux_cycles {
            let m = cyc.len();
            let mut order = Vec::with_capacity(2 * m);
            // Gaps to fill with a common neighbour: one between consecutive
            // vertices, two for a pair, none for a single vertex.
            let gaps: Vec<(usize, usize)> = match m {
                1 => vec![],
                2 => vec![(cyc[0], cyc[1]), (cyc[1], cyc[0])],
                _ => (0..m).map(|i| (cyc[i], cyc[(i + 1) % m])).collect(),
            };
            if gaps.is_empty() {
                order.push(part[cyc[0]]);
            }
            for (p, q) in gaps {
                let pick = common(p, q)
                    .into_iter()
                    .find(|&v| !used[v])
                    .ok_or_else(|| Error::StructureViolation("ran out of common neighbours".into()))?;
                used[pick] = true;
                order.push(part[p]);
                order.push(pick);
            }
            cycles.push(Cycle::new(order, col));
        }
        aux_graphs.push(AuxGraph {
            colour: col,
            vertices: part.clone(),
            graph,
            cycles: aux_cycles,
        });
    }
    debug_assert!(cycles.len() <= r * r);
    let a_used = a.iter().copied().filter(|&v| used[v]).collect::<Vec<_>>();
    let mut a_used = a_used;
    a_used.sort_unstable();
    Ok(PatchResult {
        cycles,
        a_used,
        state,
        aux_graphs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_bipartite_local, Seed};

    fn covers(res: &PatchResult, c: &EdgeColouring, b: &[usize]) -> bool {
        let mut seen = vec![false; c.n()];
        for cyc in &res.cycles {
            if !cyc.is_valid_in(c) {
                return false;
            }
            for &v in cyc.vertices() {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        b.iter().all(|&v| seen[v])
    }

    #[test]
    fn empty_b() {
        let c = EdgeColouring::monochromatic(3, ColourId(0));
        let res = patch_bipartite(&c, &[0, 1, 2], &[], 2).unwrap();
        assert!(res.cycles.is_empty() && res.a_used.is_empty());
    }

    #[test]
    fn one_colour() {
        let c = EdgeColouring::monochromatic(9, ColourId(4));
        let (a, b): (Vec<usize>, Vec<usize>) = ((0..5).collect(), (5..9).collect());
        let res = patch_bipartite(&c, &a, &b, 1).unwrap();
        assert_eq!(res.cycles.len(), 1);
        assert_eq!(res.cycles[0].len(), 8);
        assert!(covers(&res, &c, &b));
    }

    #[test]
    fn two_local_bipartite() {
        for seed in 0..50 {
            let (c, a, b) = gen_bipartite_local(64, 2, 2, 5, Seed(seed)).unwrap();
            let res = patch_bipartite(&c, &a, &b, 2).unwrap();
            assert!(res.cycles.len() <= 4);
            assert!(covers(&res, &c, &b));
        }
    }

    #[test]
    fn gate_is_enforced() {
        let c = EdgeColouring::monochromatic(10, ColourId(0));
        let a: Vec<usize> = (0..8).collect();
        assert!(matches!(
            patch_bipartite(&c, &a, &[8, 9], 2),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
