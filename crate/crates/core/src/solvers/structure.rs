use crate::colouring::{ColourId, EdgeColouring};
use crate::error::{Error, Result};
use crate::instances::TriConfig;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureDecomposition {
    /// At most one vertex, so no colour is present.
    Trivial,
    /// The smallest colour incident to every vertex.
    AllSeeingColour(ColourId),
    TriConfig(TriConfig),
}

/// Components of the colour class `col`, each sorted; vertices without a
/// `col` edge are left out.
fn colour_components(c: &EdgeColouring, col: ColourId) -> Vec<Vec<usize>> {
    let n = c.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX || !c.sees(s, col) {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for (w, slot) in comp.iter_mut().enumerate() {
                if w != u && *slot == usize::MAX && c.colour(u, w) == col {
                    *slot = id;
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// A largest connected monochromatic subgraph: its colour and vertex set.
/// Ties go to the smaller colour, then the lexicographically smaller set.
pub fn largest_mono_component(c: &EdgeColouring) -> Result<(ColourId, Vec<usize>)> {
    let mut best: Option<(ColourId, Vec<usize>)> = None;
    for &col in c.palette() {
        for comp in colour_components(c, col) {
            // Palette order is ascending, so an equal-size set only wins within the same colour.
            let better = match &best {
                None => true,
                Some((bc, b)) => comp.len() > b.len() || (comp.len() == b.len() && *bc == col && comp < *b),
            };
            if better {
                best = Some((col, comp));
            }
        }
    }
    best.ok_or(Error::EmptyGraph)
}

/// Splits a 2-local colouring into the all-seeing case or the three-part
/// configuration, checking every edge rule of the latter.
///
/// `S` is a largest monochromatic component (colour 1); `x` is the smallest
/// vertex outside `S`; its two colours towards `S` (2 < 3 by id) split `S`
/// into `V12` and `V13`, and `V23` is everything outside `S`.
pub fn structure_decompose(c: &EdgeColouring) -> Result<StructureDecomposition> {
    if !c.is_r_local(2) {
        return Err(Error::NotTwoLocal);
    }
    let n = c.n();
    if n <= 1 {
        return Ok(StructureDecomposition::Trivial);
    }
    if let Some(&alpha) = c.palette().iter().find(|&&col| (0..n).all(|v| c.sees(v, col))) {
        return Ok(StructureDecomposition::AllSeeingColour(alpha));
    }
    let (c1, s) = largest_mono_component(c)?;
    let in_s = |v: usize| s.binary_search(&v).is_ok();
    let v23: Vec<usize> = (0..n).filter(|&v| !in_s(v)).collect();
    let x = *v23
        .first()
        .ok_or_else(|| Error::StructureViolation("largest component spans everything".into()))?;
    let mut towards: Vec<ColourId> = s.iter().map(|&v| c.colour(x, v)).collect();
    towards.sort();
    towards.dedup();
    let [c2, c3] = towards[..] else {
        return Err(Error::StructureViolation(format!(
            "vertex {x} sees {} colours towards the largest component",
            towards.len()
        )));
    };
    if c2 == c1 || c3 == c1 {
        return Err(Error::StructureViolation(format!(
            "vertex {x} has a colour-{c1} edge into the component"
        )));
    }
    let cfg = TriConfig {
        v12: s.iter().copied().filter(|&v| c.colour(x, v) == c2).collect(),
        v13: s.iter().copied().filter(|&v| c.colour(x, v) == c3).collect(),
        v23,
        colours: [c1, c2, c3],
    };
    cfg.check(c).map_err(Error::StructureViolation)?;
    Ok(StructureDecomposition::TriConfig(cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_tri_config, IntraRule};

    #[test]
    fn components() {
        let k5 = EdgeColouring::monochromatic(5, ColourId(3));
        assert_eq!(largest_mono_component(&k5).unwrap(), (ColourId(3), vec![0, 1, 2, 3, 4]));
        let (c, cfg) = gen_tri_config((2, 2, 2), IntraRule::LowColour).unwrap();
        let mut both = cfg.v12.clone();
        both.extend(&cfg.v13);
        assert_eq!(largest_mono_component(&c).unwrap(), (ColourId(0), both));
        let (col, set) = largest_mono_component(&EdgeColouring::rainbow(3)).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(col, ColourId(0));
        assert_eq!(
            largest_mono_component(&EdgeColouring::rainbow(1)),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn decompositions() {
        let k4 = EdgeColouring::monochromatic(4, ColourId(0));
        assert_eq!(
            structure_decompose(&k4).unwrap(),
            StructureDecomposition::AllSeeingColour(ColourId(0))
        );
        for sizes in [(2, 2, 2), (1, 1, 1), (3, 1, 2)] {
            let (c, cfg) = gen_tri_config(sizes, IntraRule::LowColour).unwrap();
            match structure_decompose(&c).unwrap() {
                StructureDecomposition::TriConfig(got) => {
                    assert!(got.check(&c).is_ok());
                    let mut parts = [got.v12.len(), got.v13.len(), got.v23.len()];
                    let mut want = [cfg.v12.len(), cfg.v13.len(), cfg.v23.len()];
                    parts.sort();
                    want.sort();
                    assert_eq!(parts, want);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
        assert_eq!(structure_decompose(&EdgeColouring::rainbow(4)), Err(Error::NotTwoLocal));
    }
}
