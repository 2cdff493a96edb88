use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::{ColouredPath, Cycle};
use crate::error::{Error, Result};

fn violated<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::PreconditionViolated(msg.into()))
}

fn check_sets(c: &EdgeColouring, sets: &[&[usize]]) -> Result<()> {
    let mut seen = vec![false; c.n()];
    for set in sets {
        for &v in *set {
            if v >= c.n() {
                return Err(Error::OutOfRange { vertex: v, n: c.n() });
            }
            if std::mem::replace(&mut seen[v], true) {
                return violated(format!("vertex {v} appears twice"));
            }
        }
    }
    Ok(())
}

fn check_path_in(c: &EdgeColouring, p: &ColouredPath, set: &[usize], colour: ColourId, name: &str) -> Result<()> {
    if !p.is_path_in_colour(c, colour) || p.vertices().iter().any(|v| !set.contains(v)) {
        return violated(format!("{name} is not a colour-{colour} path inside its set"));
    }
    Ok(())
}

fn check_complete(c: &EdgeColouring, a: &[usize], b: &[usize], colour: ColourId) -> Result<()> {
    for &x in a {
        if let Some(&y) = b.iter().find(|&&y| c.colour(x, y) != colour) {
            return violated(format!("edge {{{x},{y}}} is not colour {colour}"));
        }
    }
    Ok(())
}

/// A spanning cycle of `a ∪ b` in `colour`, given that every `a`–`b` edge has
/// that colour, nonempty paths `p_a ⊆ a` and `p_b ⊆ b` in that colour, and
/// `|b − p_b| <= |a − p_a| <= |b| − 1`.
///
/// Follows `p_a`, then alternates `b`, `a` until `a` is used up, taking `b`
/// vertices off `p_b` first and then `p_b` vertices in path order; the
/// unused tail of `p_b` closes the cycle.
pub fn merge_paths_bip(
    c: &EdgeColouring,
    colour: ColourId,
    a: &[usize],
    b: &[usize],
    p_a: &ColouredPath,
    p_b: &ColouredPath,
) -> Result<Cycle> {
    check_sets(c, &[a, b])?;
    check_complete(c, a, b, colour)?;
    check_path_in(c, p_a, a, colour, "p_a")?;
    check_path_in(c, p_b, b, colour, "p_b")?;
    if p_a.is_empty() || p_b.is_empty() {
        return violated("both paths must be nonempty");
    }
    let (free_a, free_b) = (a.len() - p_a.len(), b.len() - p_b.len());
    if !(free_b <= free_a && free_a < b.len()) {
        return violated(format!(
            "need |b - p_b| <= |a - p_a| <= |b| - 1, got {free_b}, {free_a}, {}",
            b.len()
        ));
    }
    let mut rest_a: Vec<usize> = a.iter().copied().filter(|v| !p_a.vertices().contains(v)).collect();
    rest_a.sort_unstable();
    let mut off_b: Vec<usize> = b.iter().copied().filter(|v| !p_b.vertices().contains(v)).collect();
    off_b.sort_unstable();
    let mut off_b = off_b.into_iter();
    let mut on_b = p_b.vertices().iter().copied();

    let mut order: Vec<usize> = p_a.vertices().to_vec();
    for x in rest_a {
        let y = off_b.next().or_else(|| on_b.next()).expect("|a - p_a| < |b|");
        order.push(y);
        order.push(x);
    }
    debug_assert!(off_b.next().is_none());
    order.extend(on_b);
    debug_assert_eq!(order.len(), a.len() + b.len());
    Ok(Cycle::new(order, colour))
}

/// Two cycles, one of each colour, partitioning `a1 ∪ a2 ∪ b`.
///
/// Preconditions: `G[a_i, b]` is complete in colour `i`; `p_ai` is a nonempty
/// colour-`i` path in `a_i`; `p_bi` is a colour-`i` path in `b`; `p_b1` and
/// `p_b2` partition `b`; and `|a1 − p_a1| + |a2 − p_a2| + 2 <= |b|`.
/// Returns the colour-1 cycle first.
#[allow(clippy::too_many_arguments)]
pub fn merge_paths_tri(
    c: &EdgeColouring,
    colours: (ColourId, ColourId),
    a1: &[usize],
    a2: &[usize],
    b: &[usize],
    p_a1: &ColouredPath,
    p_a2: &ColouredPath,
    p_b1: &ColouredPath,
    p_b2: &ColouredPath,
) -> Result<(Cycle, Cycle)> {
    let cols = [colours.0, colours.1];
    if cols[0] == cols[1] {
        return violated("the two colours must differ");
    }
    check_sets(c, &[a1, a2, b])?;
    let a = [a1, a2];
    let p_a = [p_a1, p_a2];
    for i in 0..2 {
        check_complete(c, a[i], b, cols[i])?;
        check_path_in(c, p_a[i], a[i], cols[i], "p_a")?;
        if p_a[i].is_empty() {
            return violated("the paths in a1 and a2 must be nonempty");
        }
    }
    let mut p_b = [p_b1.vertices().to_vec(), p_b2.vertices().to_vec()];
    for i in 0..2 {
        check_path_in(c, [p_b1, p_b2][i], b, cols[i], "p_b")?;
    }
    let mut covered: Vec<usize> = p_b.concat();
    covered.sort_unstable();
    let mut b_sorted = b.to_vec();
    b_sorted.sort_unstable();
    if covered != b_sorted {
        return violated("p_b1 and p_b2 do not partition b");
    }
    let deficit = [a1.len() - p_a1.len(), a2.len() - p_a2.len()];
    if deficit[0] + deficit[1] + 2 > b.len() {
        return violated(format!(
            "need |a1 - p_a1| + |a2 - p_a2| + 2 <= |b|, got {} + {} + 2 > {}",
            deficit[0],
            deficit[1],
            b.len()
        ));
    }
    // Make both b-paths nonempty by handing one end vertex across; a lone
    // vertex is a path of either colour.
    for i in 0..2 {
        if p_b[i].is_empty() {
            let v = p_b[1 - i].pop().expect("|b| >= 2");
            p_b[i].push(v);
        }
    }
    // Prefix of each b-path, of order min(|p_b_i|, |b| - deficit_{3-i} - 1).
    let take = |i: usize| p_b[i].len().min(b.len() - deficit[1 - i] - 1);
    // Index `lo` plays the role whose b-path is cut; `hi` keeps its whole path.
    let (lo, hi) = if take(1) == p_b[1].len() { (0, 1) } else { (1, 0) };
    assert_eq!(take(hi), p_b[hi].len(), "one of the b-paths is used whole");
    let cut = take(lo);
    assert!(cut > deficit[lo], "the cut path is long enough for its side");
    let b_lo: Vec<usize> = p_b[lo][..cut].to_vec();
    let b_hi: Vec<usize> = b.iter().copied().filter(|v| !b_lo.contains(v)).collect();
    let path_lo = ColouredPath::new(b_lo.clone(), cols[lo]);
    let path_hi = ColouredPath::new(p_b[hi].clone(), cols[hi]);
    let cyc_lo = merge_paths_bip(c, cols[lo], a[lo], &b_lo, p_a[lo], &path_lo)?;
    let cyc_hi = merge_paths_bip(c, cols[hi], a[hi], &b_hi, p_a[hi], &path_hi)?;
    Ok(if lo == 0 { (cyc_lo, cyc_hi) } else { (cyc_hi, cyc_lo) })
}
