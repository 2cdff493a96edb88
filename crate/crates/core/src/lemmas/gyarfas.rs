use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::ColouredPath;
use crate::error::{Error, Result};

/// Two vertex-disjoint monochromatic paths, one per colour, covering a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    pub p_first: ColouredPath,
    pub p_second: ColouredPath,
}

impl PathPair {
    pub fn vertex_count(&self) -> usize {
        self.p_first.len() + self.p_second.len()
    }
}

/// Partitions all vertices of a colouring using only `colours` into a path
/// of the first colour and a path of the second.
pub fn gyarfas_two_paths(c: &EdgeColouring, colours: (ColourId, ColourId)) -> Result<PathPair> {
    let all: Vec<usize> = (0..c.n()).collect();
    gyarfas_two_paths_on(c, &all, colours)
}

/// As [`gyarfas_two_paths`], restricted to `vertices`; edges leaving the set are ignored.
pub fn gyarfas_two_paths_on(c: &EdgeColouring, vertices: &[usize], colours: (ColourId, ColourId)) -> Result<PathPair> {
    let (first, second) = colours;
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            let x = c.colour(u, v);
            if x != first && x != second {
                let mut seen: Vec<ColourId> = vec![first, second, x];
                seen.sort();
                seen.dedup();
                return Err(Error::TooManyColours(seen.len()));
            }
        }
    }
    let (mut p, mut q) = two_paths(c, vertices, first, second);
    normalise(c, &mut p, &mut q, second);
    normalise(c, &mut q, &mut p, first);
    Ok(PathPair {
        p_first: ColouredPath::new(p, first),
        p_second: ColouredPath::new(q, second),
    })
}

/// Inserts vertices one at a time. With `p` ending at `x` and `q` ending at
/// `y`, a new vertex `v` joins `p` via a `first` edge `vx`, else `q` via a
/// `second` edge `vy`; otherwise the edge `xy` lets one end switch paths
/// and `v` follow it.
fn two_paths(c: &EdgeColouring, vertices: &[usize], first: ColourId, second: ColourId) -> (Vec<usize>, Vec<usize>) {
    let mut p: Vec<usize> = Vec::new();
    let mut q: Vec<usize> = Vec::new();
    for &v in vertices {
        let (Some(&x), y) = (p.last(), q.last().copied()) else {
            p.push(v);
            continue;
        };
        if c.colour(v, x) == first {
            p.push(v);
            continue;
        }
        let Some(y) = y else {
            q.push(v);
            continue;
        };
        if c.colour(v, y) == second {
            q.push(v);
        } else if c.colour(x, y) == first {
            // v–x is `second`, v–y is `first`: y moves onto p, then v.
            q.pop();
            p.push(y);
            p.push(v);
        } else {
            // x–y is `second`: x moves onto q, then v.
            p.pop();
            q.push(x);
            q.push(v);
        }
    }
    (p, q)
}

/// Absorbs a one-vertex `p` into `q` when an end of `q` is joined to it in `q_colour`.
fn normalise(c: &EdgeColouring, p: &mut Vec<usize>, q: &mut Vec<usize>, q_colour: ColourId) {
    if p.len() != 1 || q.is_empty() {
        return;
    }
    let v = p[0];
    if c.colour(v, *q.last().unwrap()) == q_colour {
        q.push(v);
        p.clear();
    } else if c.colour(v, q[0]) == q_colour {
        q.insert(0, v);
        p.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random_coloured, Seed};

    fn check(c: &EdgeColouring, pair: &PathPair, colours: (ColourId, ColourId)) {
        assert!(pair.p_first.is_path_in_colour(c, colours.0));
        assert!(pair.p_second.is_path_in_colour(c, colours.1));
        let mut all: Vec<usize> = pair
            .p_first
            .vertices()
            .iter()
            .chain(pair.p_second.vertices())
            .copied()
            .collect();
        all.sort_unstable();
        assert_eq!(all, (0..c.n()).collect::<Vec<_>>());
    }

    #[test]
    fn monochromatic_triangle() {
        let c = EdgeColouring::monochromatic(3, ColourId(0));
        let pair = gyarfas_two_paths(&c, (ColourId(0), ColourId(1))).unwrap();
        assert_eq!(pair.p_first.len(), 3);
        assert!(pair.p_second.is_empty());
    }

    #[test]
    fn single_second_colour_edge() {
        let c = EdgeColouring::monochromatic(2, ColourId(1));
        let pair = gyarfas_two_paths(&c, (ColourId(0), ColourId(1))).unwrap();
        assert!(pair.p_first.is_empty());
        assert_eq!(pair.p_second.len(), 2);
    }

    #[test]
    fn random_two_coloured() {
        let cols = (ColourId(0), ColourId(1));
        for seed in 0..200 {
            let c = gen_random_coloured(12, 2, Seed(seed)).unwrap();
            let pair = gyarfas_two_paths(&c, cols).unwrap();
            check(&c, &pair, cols);
        }
    }

    #[test]
    fn third_colour_is_rejected() {
        let c = EdgeColouring::rainbow(3);
        assert_eq!(
            gyarfas_two_paths(&c, (ColourId(0), ColourId(1))),
            Err(Error::TooManyColours(3))
        );
    }
}
