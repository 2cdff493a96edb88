//! Edge colourings of complete graphs and the locality queries on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A colour id. Generators keep palettes dense (`0..s`), but any id is legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColourId(pub u32);

impl fmt::Display for ColourId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for ColourId {
    fn from(v: u32) -> Self {
        ColourId(v)
    }
}

/// A complete graph on vertices `0..n` with one colour per unordered pair.
///
/// The colour matrix is stored densely and symmetrically, so lookups are
/// order-independent. The palette is always the exact image of the colour map.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    n: usize,
    matrix: Vec<ColourId>,
    palette: Vec<ColourId>,
}

const DIAGONAL: ColourId = ColourId(u32::MAX);

impl EdgeColouring {
    /// Builds a colouring by asking `colour_of(u, v)` once for every pair `u < v`.
    pub fn from_fn(n: usize, mut colour_of: impl FnMut(usize, usize) -> ColourId) -> Self {
        let mut matrix = vec![DIAGONAL; n * n];
        let mut palette = BTreeSet::new();
        for u in 0..n {
            for v in u + 1..n {
                let col = colour_of(u, v);
                matrix[u * n + v] = col;
                matrix[v * n + u] = col;
                palette.insert(col);
            }
        }
        EdgeColouring {
            n,
            matrix,
            palette: palette.into_iter().collect(),
        }
    }

    /// Builds a colouring from rows of the upper triangle: `rows[u][k]` is the
    /// colour of `{u, u + 1 + k}`.
    pub fn from_upper_rows(n: usize, rows: &[Vec<ColourId>]) -> Result<Self> {
        if n > 0 && rows.len() != n - 1 {
            return Err(Error::BadParams(format!("expected {} rows, got {}", n - 1, rows.len())));
        }
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n - 1 - u {
                return Err(Error::BadParams(format!(
                    "row {u} has {} entries, expected {}",
                    row.len(),
                    n - 1 - u
                )));
            }
        }
        Ok(Self::from_fn(n, |u, v| rows[u][v - u - 1]))
    }

    pub fn monochromatic(n: usize, colour: ColourId) -> Self {
        Self::from_fn(n, |_, _| colour)
    }

    /// Every edge gets its own colour, numbered in row-major order.
    pub fn rainbow(n: usize) -> Self {
        let mut next = 0;
        Self::from_fn(n, |_, _| {
            next += 1;
            ColourId(next - 1)
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> &[ColourId] {
        &self.palette
    }

    /// Colour of the edge `{u, v}`.
    ///
    /// # Panics
    /// If `u == v` or either endpoint is out of range.
    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> ColourId {
        assert!(u != v, "no loop edges in a complete graph ({u})");
        assert!(u < self.n && v < self.n, "edge {{{u},{v}}} out of range");
        self.matrix[u * self.n + v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::OutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Sorted distinct colours incident to `v`.
    pub fn colours_at(&self, v: usize) -> Result<Vec<ColourId>> {
        self.check_vertex(v)?;
        let set: BTreeSet<ColourId> = (0..self.n).filter(|&u| u != v).map(|u| self.colour(u, v)).collect();
        Ok(set.into_iter().collect())
    }

    /// Number of distinct colours at `v`.
    pub fn locality(&self, v: usize) -> Result<usize> {
        Ok(self.colours_at(v)?.len())
    }

    pub fn max_locality(&self) -> usize {
        (0..self.n)
            .map(|v| self.colours_at(v).map(|c| c.len()).unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn is_r_local(&self, r: usize) -> bool {
        self.max_locality() <= r
    }

    /// Average locality over all vertices, exactly.
    pub fn mean_locality(&self) -> Result<Ratio<u64>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let total: usize = (0..self.n).map(|v| self.colours_at(v).unwrap().len()).sum();
        Ok(Ratio::new(total as u64, self.n as u64))
    }

    /// `N_col(v)`: the vertices joined to `v` in colour `col`, ascending.
    pub fn colour_neighbourhood(&self, v: usize, col: ColourId) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok((0..self.n).filter(|&u| u != v && self.colour(u, v) == col).collect())
    }

    /// Whether colour `col` is incident to `v`.
    pub fn sees(&self, v: usize, col: ColourId) -> bool {
        (0..self.n).any(|u| u != v && self.colour(u, v) == col)
    }

    /// Edge count per colour.
    pub fn colour_class_sizes(&self) -> BTreeMap<ColourId, usize> {
        let mut sizes = BTreeMap::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                *sizes.entry(self.colour(u, v)).or_insert(0) += 1;
            }
        }
        sizes
    }

    /// The colouring induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> EdgeColouring {
        Self::from_fn(vertices.len(), |i, j| self.colour(vertices[i], vertices[j]))
    }

    /// Renames colours to `0..s` preserving their relative order.
    pub fn canonicalized(&self) -> EdgeColouring {
        let rename: BTreeMap<ColourId, ColourId> = self
            .palette
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, ColourId(i as u32)))
            .collect();
        Self::from_fn(self.n, |u, v| rename[&self.colour(u, v)])
    }

    /// Replaces every colour through `f`.
    pub fn map_colours(&self, mut f: impl FnMut(ColourId) -> ColourId) -> EdgeColouring {
        Self::from_fn(self.n, |u, v| f(self.colour(u, v)))
    }
}

impl fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "EdgeColouring(n = {}, palette = {:?})", self.n, self.palette)?;
        for u in 0..self.n.saturating_sub(1) {
            let row: Vec<String> = (u + 1..self.n).map(|v| self.colour(u, v).to_string()).collect();
            writeln!(f, "  {u}: {}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: u32) -> ColourId {
        ColourId(x)
    }

    #[test]
    fn locality_of_small_graphs() {
        let k3 = EdgeColouring::monochromatic(3, c(1));
        assert_eq!(k3.locality(0).unwrap(), 1);
        let rainbow = EdgeColouring::rainbow(4);
        for v in 0..4 {
            assert_eq!(rainbow.locality(v).unwrap(), 3);
        }
        assert_eq!(EdgeColouring::monochromatic(1, c(0)).locality(0).unwrap(), 0);
        assert!(matches!(k3.locality(3), Err(Error::OutOfRange { vertex: 3, n: 3 })));
    }

    #[test]
    fn r_local_queries() {
        assert!(EdgeColouring::monochromatic(3, c(1)).is_r_local(1));
        assert!(!EdgeColouring::rainbow(4).is_r_local(2));
        assert!(EdgeColouring::rainbow(4).is_r_local(3));
    }

    #[test]
    fn mean_locality_is_exact() {
        assert_eq!(
            EdgeColouring::monochromatic(3, c(1)).mean_locality().unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            EdgeColouring::rainbow(4).mean_locality().unwrap(),
            Ratio::from_integer(3)
        );
        assert_eq!(
            EdgeColouring::from_fn(0, |_, _| c(0)).mean_locality(),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn neighbourhoods() {
        let k3 = EdgeColouring::monochromatic(3, c(1));
        assert_eq!(k3.colour_neighbourhood(0, c(1)).unwrap(), vec![1, 2]);
        assert!(k3.colour_neighbourhood(0, c(2)).unwrap().is_empty());
        assert!(k3.colour_neighbourhood(5, c(1)).is_err());
    }

    #[test]
    fn degenerate_sizes_have_empty_palette() {
        assert!(EdgeColouring::from_fn(0, |_, _| c(0)).palette().is_empty());
        assert!(EdgeColouring::from_fn(1, |_, _| c(0)).palette().is_empty());
    }

    #[test]
    fn canonical_palette_preserves_order() {
        let col = EdgeColouring::from_fn(3, |u, v| c(10 * (u + v) as u32));
        let canon = col.canonicalized();
        assert_eq!(canon.palette(), &[c(0), c(1), c(2)]);
        assert_eq!(canon.colour(0, 1), c(0));
        assert_eq!(canon.colour(1, 2), c(2));
    }

    #[test]
    fn from_upper_rows_checks_shape() {
        let rows = vec![vec![c(0), c(1)], vec![c(2)]];
        let col = EdgeColouring::from_upper_rows(3, &rows).unwrap();
        assert_eq!(col.colour(2, 0), c(1));
        assert!(EdgeColouring::from_upper_rows(3, &rows[..1]).is_err());
    }
}
