//! Bitmask dynamic programming for Hamiltonian cycles on all vertex subsets.
//!
//! `ends[S]` is the set of vertices `v` such that some path starts at the
//! lowest vertex of `S`, visits exactly `S`, and finishes at `v`.

#[inline]
pub(crate) fn low_bit(s: u32) -> u32 {
    s & s.wrapping_neg()
}

#[inline]
pub(crate) fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Path-end table over every subset of `0..n` (`n = adj.len() <= 30`).
pub(crate) fn path_ends(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut ends = vec![0u32; 1usize << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..(1u32 << n) {
        let cur = ends[s as usize];
        if cur == 0 {
            continue;
        }
        let low = low_bit(s);
        let above = !(low | (low - 1));
        for v in bits(cur) {
            for w in bits(adj[v] & !s & above) {
                ends[(s | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    ends
}

/// Whether `s` has a spanning cycle, given the table from [`path_ends`].
/// Subsets of size <= 1 always do; size 2 needs the edge.
#[inline]
pub(crate) fn spans_cycle(adj: &[u32], ends: &[u32], s: u32) -> bool {
    match s.count_ones() {
        0 | 1 => true,
        2 => {
            let low = low_bit(s);
            adj[low.trailing_zeros() as usize] & (s ^ low) != 0
        }
        _ => {
            let low = low_bit(s).trailing_zeros() as usize;
            ends[s as usize] & adj[low] != 0
        }
    }
}

/// Rebuilds a spanning cycle of `s` from the table, starting at its lowest vertex.
pub(crate) fn rebuild_cycle(adj: &[u32], ends: &[u32], s: u32) -> Option<Vec<usize>> {
    if !spans_cycle(adj, ends, s) {
        return None;
    }
    if s.count_ones() <= 2 {
        return Some(bits(s).collect());
    }
    let low = low_bit(s).trailing_zeros() as usize;
    let mut cur = bits(ends[s as usize] & adj[low]).next()?;
    let mut rest = s;
    let mut rev = vec![cur];
    while rest.count_ones() > 1 {
        rest &= !(1 << cur);
        cur = bits(ends[rest as usize])
            .find(|&u| adj[u] & (1 << cur) != 0)
            .expect("path-end table is consistent");
        rev.push(cur);
    }
    debug_assert_eq!(cur, low);
    rev.reverse();
    Some(rev)
}

/// A Hamiltonian cycle of the graph on `0..adj.len()`, if any.
pub(crate) fn hamiltonian_cycle(adj: &[u32]) -> Option<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let ends = path_ends(adj);
    rebuild_cycle(adj, &ends, ((1u64 << n) - 1) as u32)
}

/// Longest cycle (length 2 = an edge, length 1 = a vertex), as vertex list.
/// Ties go to the smallest subset mask.
pub(crate) fn longest_cycle(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let ends = path_ends(adj);
    let mut best = 1u32;
    for s in 1..(1u32 << n) {
        if s.count_ones() > best.count_ones() && spans_cycle(adj, &ends, s) {
            best = s;
        }
    }
    rebuild_cycle(adj, &ends, best).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj_of(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    #[test]
    fn cycle_graph_is_hamiltonian() {
        let adj = adj_of(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let cyc = hamiltonian_cycle(&adj).unwrap();
        assert_eq!(cyc.len(), 5);
        for i in 0..5 {
            let (u, v) = (cyc[i], cyc[(i + 1) % 5]);
            assert!(adj[u] & (1 << v) != 0);
        }
    }

    #[test]
    fn path_graph_is_not() {
        let adj = adj_of(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(hamiltonian_cycle(&adj).is_none());
        assert_eq!(longest_cycle(&adj).len(), 2);
    }

    #[test]
    fn star_with_triangle() {
        let adj = adj_of(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]);
        assert_eq!(longest_cycle(&adj).len(), 3);
    }
}
