use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::oracle::{self, OracleBudget};

/// A cycle of length at least `l` in a graph with at least `l·n/2` edges.
///
/// A rotation-extension search runs first; the exact longest-cycle oracle
/// is consulted only when it falls short, so the budget matters only then.
pub fn erdos_gallai_long_cycle(g: &SimpleGraph, l: usize, budget: &OracleBudget) -> Result<Vec<usize>> {
    let (n, e) = (g.n(), g.edge_count());
    if l < 2 || n == 0 || 2 * e < l * n {
        return Err(Error::PreconditionViolated(format!(
            "need l >= 2 and 2e >= l·n, got l = {l}, n = {n}, e = {e}"
        )));
    }
    let found = heuristic_long_cycle(g);
    if found.len() >= l {
        return Ok(found);
    }
    let exact = oracle::longest_cycle_in_graph(g, budget)?;
    if exact.len() < l {
        return Err(Error::StructureViolation(format!(
            "longest cycle has length {} < {l} despite the edge count",
            exact.len()
        )));
    }
    Ok(exact)
}

/// Longest cycle found by path extension with endpoint rotations from every
/// start vertex. Never shorter than 1 on a nonempty graph, 2 if there is an edge.
pub fn heuristic_long_cycle(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut best: Vec<usize> = Vec::new();
    if n == 0 {
        return best;
    }
    best.push(0);
    for start in 0..n {
        if best.len() == n {
            break;
        }
        let cand = grow_from(g, start);
        if cand.len() > best.len() {
            best = cand;
        }
    }
    best
}

fn grow_from(g: &SimpleGraph, start: usize) -> Vec<usize> {
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = vec![start];
    on_path[start] = true;
    let mut best = vec![start];
    let mut rotations = 0;
    let max_rotations = 4 * n;
    loop {
        for _ in 0..2 {
            extend_back(g, &mut path, &mut on_path);
            path.reverse();
        }
        for _ in 0..2 {
            let cyc = close_at_back(g, &path);
            if cyc.len() > best.len() {
                best = cyc;
            }
            path.reverse();
        }
        if best.len() == n || rotations >= max_rotations {
            return best;
        }
        // Rotate so that the new back vertex can extend the path, if any can.
        let last = path.len() - 1;
        let pivot = (0..last.saturating_sub(1))
            .find(|&i| g.has_edge(path[last], path[i]) && g.neighbours(path[i + 1]).any(|w| !on_path[w]));
        match pivot {
            Some(i) => {
                path[i + 1..].reverse();
                rotations += 1;
            }
            None => return best,
        }
    }
}

fn extend_back(g: &SimpleGraph, path: &mut Vec<usize>, on_path: &mut [bool]) {
    loop {
        let back = *path.last().unwrap();
        // Prefer the off-path neighbour with the fewest off-path neighbours.
        let next = g
            .neighbours(back)
            .filter(|&w| !on_path[w])
            .min_by_key(|&w| g.neighbours(w).filter(|&x| !on_path[x]).count());
        match next {
            Some(w) => {
                on_path[w] = true;
                path.push(w);
            }
            None => return,
        }
    }
}

/// The cycle from the back vertex to its furthest neighbour on the path.
fn close_at_back(g: &SimpleGraph, path: &[usize]) -> Vec<usize> {
    let back = *path.last().unwrap();
    let cut = path.iter().position(|&w| w == back || g.has_edge(back, w)).unwrap();
    path[cut..].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph() {
        let g = SimpleGraph::complete(4);
        let cyc = erdos_gallai_long_cycle(&g, 3, &OracleBudget::default()).unwrap();
        assert!(cyc.len() >= 3);
        assert!(g.is_cycle(&cyc));
    }

    #[test]
    fn five_cycle() {
        let g = SimpleGraph::cycle(5);
        let cyc = erdos_gallai_long_cycle(&g, 2, &OracleBudget::default()).unwrap();
        assert!(cyc.len() >= 2);
        assert!(g.is_cycle(&cyc));
        assert_eq!(heuristic_long_cycle(&g).len(), 5);
    }

    #[test]
    fn sparse_graph_is_rejected() {
        let g = SimpleGraph::cycle(5);
        assert!(matches!(
            erdos_gallai_long_cycle(&g, 3, &OracleBudget::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
