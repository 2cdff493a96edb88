//! Monochromatic cycles, paths and cycle partitions.
//!
//! The empty set, a single vertex and a single edge all count as cycles.
//! Cycles of length at most one carry no colour.

use crate::colouring::{ColourId, EdgeColouring};

/// A cycle given by its vertices in order; for three or more vertices the
/// last vertex is joined back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cycle {
    vertices: Vec<usize>,
    colour: Option<ColourId>,
}

impl Cycle {
    pub fn empty() -> Self {
        Cycle::default()
    }

    pub fn singleton(v: usize) -> Self {
        Cycle {
            vertices: vec![v],
            colour: None,
        }
    }

    /// A cycle with an explicit colour. No check against any colouring is made;
    /// the colour is dropped for cycles of length at most one.
    pub fn new(vertices: Vec<usize>, colour: ColourId) -> Self {
        let colour = (vertices.len() >= 2).then_some(colour);
        Cycle { vertices, colour }
    }

    /// Raw constructor used by parsers; performs no normalisation.
    pub fn from_parts(vertices: Vec<usize>, colour: Option<ColourId>) -> Self {
        Cycle { vertices, colour }
    }

    /// Reads the colour off the first edge and checks every other edge.
    pub fn from_vertices(c: &EdgeColouring, vertices: Vec<usize>) -> Option<Self> {
        match vertices.len() {
            0 => Some(Cycle::empty()),
            1 => Some(Cycle::singleton(vertices[0])),
            _ => {
                let cycle = Cycle::new(vertices.clone(), c.colour(vertices[0], vertices[1]));
                cycle.is_valid_in(c).then_some(cycle)
            }
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn colour(&self) -> Option<ColourId> {
        self.colour
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges of the cycle: none for length <= 1, one for length 2, and
    /// `len` edges (with wraparound) otherwise.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let vs = &self.vertices;
        match vs.len() {
            0 | 1 => Vec::new(),
            2 => vec![(vs[0], vs[1])],
            k => (0..k).map(|i| (vs[i], vs[(i + 1) % k])).collect(),
        }
    }

    /// Distinct in-range vertices, stored colour present exactly when the
    /// length is at least two, and every edge carrying that colour.
    pub fn is_valid_in(&self, c: &EdgeColouring) -> bool {
        let mut seen = vec![false; c.n()];
        for &v in &self.vertices {
            if v >= c.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        match (self.vertices.len(), self.colour) {
            (0 | 1, None) => true,
            (0 | 1, Some(_)) => false,
            (_, None) => false,
            (_, Some(col)) => self.edges().into_iter().all(|(u, v)| c.colour(u, v) == col),
        }
    }

    /// Converts to a path starting at the same vertex (drops the closing edge).
    pub fn to_path(&self) -> ColouredPath {
        ColouredPath {
            vertices: self.vertices.clone(),
            colour: self.colour,
        }
    }
}

/// A family of cycles, meant to be vertex-disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclePartition {
    pub cycles: Vec<Cycle>,
}

impl CyclePartition {
    pub fn new(cycles: Vec<Cycle>) -> Self {
        CyclePartition { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Number of cycles with at least one vertex.
    pub fn nonempty_count(&self) -> usize {
        self.cycles.iter().filter(|c| !c.is_empty()).count()
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(Cycle::len).sum()
    }
}

impl FromIterator<Cycle> for CyclePartition {
    fn from_iter<I: IntoIterator<Item = Cycle>>(iter: I) -> Self {
        CyclePartition::new(iter.into_iter().collect())
    }
}

/// A path whose consecutive edges share one colour. Its order is its vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColouredPath {
    vertices: Vec<usize>,
    colour: Option<ColourId>,
}

impl ColouredPath {
    pub fn empty() -> Self {
        ColouredPath::default()
    }

    /// A path with a nominal colour; the colour is dropped below two vertices.
    pub fn new(vertices: Vec<usize>, colour: ColourId) -> Self {
        let colour = (vertices.len() >= 2).then_some(colour);
        ColouredPath { vertices, colour }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn colour(&self) -> Option<ColourId> {
        self.colour
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    /// Whether every consecutive pair has colour `col` (vacuous below two vertices).
    pub fn is_path_in_colour(&self, c: &EdgeColouring, col: ColourId) -> bool {
        let mut seen = vec![false; c.n()];
        for &v in &self.vertices {
            if v >= c.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.vertices.windows(2).all(|w| c.colour(w[0], w[1]) == col)
    }

    pub fn is_valid_in(&self, c: &EdgeColouring) -> bool {
        match (self.vertices.len(), self.colour) {
            (0 | 1, None) => self.is_path_in_colour(c, ColourId(0)),
            (_, Some(col)) if self.vertices.len() >= 2 => self.is_path_in_colour(c, col),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_cycles_are_colourless() {
        assert_eq!(Cycle::new(vec![3], ColourId(1)).colour(), None);
        assert_eq!(Cycle::new(vec![], ColourId(1)).colour(), None);
        assert_eq!(Cycle::new(vec![0, 1], ColourId(1)).colour(), Some(ColourId(1)));
    }

    #[test]
    fn edge_lists() {
        assert!(Cycle::singleton(2).edges().is_empty());
        assert_eq!(Cycle::new(vec![4, 5], ColourId(0)).edges(), vec![(4, 5)]);
        assert_eq!(
            Cycle::new(vec![0, 1, 2], ColourId(0)).edges(),
            vec![(0, 1), (1, 2), (2, 0)]
        );
    }

    #[test]
    fn validity_checks_wraparound() {
        let c = EdgeColouring::from_fn(3, |u, v| ColourId(if (u, v) == (0, 2) { 1 } else { 0 }));
        assert!(!Cycle::new(vec![0, 1, 2], ColourId(0)).is_valid_in(&c));
        assert!(Cycle::new(vec![0, 1], ColourId(0)).is_valid_in(&c));
        assert!(Cycle::from_vertices(&c, vec![0, 1, 2]).is_none());
        assert!(!Cycle::new(vec![0, 0], ColourId(0)).is_valid_in(&c));
    }
}
