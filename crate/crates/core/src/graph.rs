//! Plain undirected graphs, used for colour classes and auxiliary graphs.

use rand::Rng;

use crate::colouring::{ColourId, EdgeColouring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            if n >= 2 {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        Self::from_fn(n, |_, _| rng.gen_bool(p))
    }

    /// The colour class of `col` in `c`, on the vertex set `vertices`
    /// (vertex `i` of the result is `vertices[i]`).
    pub fn colour_class(c: &EdgeColouring, col: ColourId, vertices: &[usize]) -> Self {
        Self::from_fn(vertices.len(), |i, j| c.colour(vertices[i], vertices[j]) == col)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {{{u},{v}}}");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.n + v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    /// The subgraph induced on `vertices` (renumbered in the given order).
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        Self::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// Whether `order` lists distinct vertices forming a cycle of `self`
    /// (length 1 and 2 count, a length-2 cycle being a single edge).
    pub fn is_cycle(&self, order: &[usize]) -> bool {
        let mut seen = vec![false; self.n];
        for &v in order {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        match order.len() {
            0 | 1 => true,
            2 => self.has_edge(order[0], order[1]),
            k => (0..k).all(|i| self.has_edge(order[i], order[(i + 1) % k])),
        }
    }

    /// Neighbour bitmasks; only meaningful for `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        (0..self.n)
            .map(|v| self.neighbours(v).fold(0u64, |m, u| m | 1 << u))
            .collect()
    }
}
