/// Maximum independent set size among `cand`, branch and bound on bitmasks.
pub(crate) fn independence_number(adj: &[u64], cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    // A vertex of degree <= 1 inside `cand` can always be taken.
    let mut best_v = usize::MAX;
    let mut best_deg = u32::MAX;
    let mut max_v = usize::MAX;
    let mut max_deg = 0;
    let mut m = cand;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let d = (adj[v] & cand).count_ones();
        if d < best_deg {
            best_deg = d;
            best_v = v;
        }
        if d >= max_deg {
            max_deg = d;
            max_v = v;
        }
    }
    if best_deg <= 1 {
        return 1 + independence_number(adj, cand & !(1 << best_v) & !adj[best_v]);
    }
    let take = 1 + independence_number(adj, cand & !(1 << max_v) & !adj[max_v]);
    let skip = independence_number(adj, cand & !(1 << max_v));
    take.max(skip)
}
