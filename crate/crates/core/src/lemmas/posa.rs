use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::oracle::{self, OracleBudget};

/// Partitions the vertices of `g` into at most `α(g)` disjoint cycles
/// (singletons and single edges included), each given as a vertex order.
///
/// Each step grows a path from its front until the front vertex `x` has no
/// neighbour off the path, then closes the cycle at the neighbour of `x`
/// furthest along the path. Every neighbour of `x` lies on the removed
/// cycle, so the independence number of the rest drops by at least one.
///
/// `alpha_hint` is a claimed upper bound on `α(g)`; without it `α` is
/// computed exactly. Exceeding the bound is a `PreconditionViolated` error.
pub fn posa_cycle_partition(
    g: &SimpleGraph,
    alpha_hint: Option<usize>,
    budget: &OracleBudget,
) -> Result<Vec<Vec<usize>>> {
    let bound = match alpha_hint {
        Some(a) => a,
        None => oracle::independence_number(g, budget)?,
    };
    let cycles = peel_cycles(g);
    if cycles.len() > bound {
        return Err(Error::PreconditionViolated(format!(
            "{} cycles exceed the independence bound {bound}",
            cycles.len()
        )));
    }
    Ok(cycles)
}

/// The peeling procedure itself, without the bound check.
pub(crate) fn peel_cycles(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut on_path = vec![false; n];
    let mut cycles = Vec::new();
    while let Some(start) = alive.iter().position(|&a| a) {
        let mut path = vec![start];
        on_path[start] = true;
        while let Some(next) = g.neighbours(*path.last().unwrap()).find(|&w| alive[w] && !on_path[w]) {
            on_path[next] = true;
            path.push(next);
        }
        let front = *path.last().unwrap();
        let cut = path.iter().position(|&w| w == front || g.has_edge(front, w)).unwrap();
        for &w in &path {
            on_path[w] = false;
        }
        let cycle = path.split_off(cut);
        for &w in &cycle {
            alive[w] = false;
        }
        cycles.push(cycle);
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_partition(g: &SimpleGraph, cycles: &[Vec<usize>]) -> bool {
        let mut seen = vec![false; g.n()];
        for cyc in cycles {
            for &v in cyc {
                if std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
            if !g.is_cycle(cyc) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }

    #[test]
    fn edgeless_gives_singletons() {
        let g = SimpleGraph::empty(4);
        let cycles = posa_cycle_partition(&g, None, &OracleBudget::default()).unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(is_partition(&g, &cycles));
    }

    #[test]
    fn cycle_graph_gives_one_cycle() {
        let g = SimpleGraph::cycle(6);
        let cycles = posa_cycle_partition(&g, None, &OracleBudget::default()).unwrap();
        assert_eq!(cycles.len(), 1);
        assert!(is_partition(&g, &cycles));
    }

    #[test]
    fn wrong_hint_is_rejected() {
        let g = SimpleGraph::empty(3);
        assert!(matches!(
            posa_cycle_partition(&g, Some(2), &OracleBudget::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
