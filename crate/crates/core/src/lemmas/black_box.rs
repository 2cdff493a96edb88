use crate::colouring::{ColourId, EdgeColouring};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::oracle::{self, OracleBudget};

/// Number of colours other than `alpha` at `v`.
fn non_alpha_colours(c: &EdgeColouring, v: usize, alpha: ColourId) -> Result<usize> {
    Ok(c.colours_at(v)?.into_iter().filter(|&x| x != alpha).count())
}

fn split_two_colours(c: &EdgeColouring, alpha: ColourId, budget: &OracleBudget) -> Result<(Cycle, Cycle)> {
    match c.n() {
        0 => return Ok((Cycle::empty(), Cycle::empty())),
        1 => return Ok((Cycle::singleton(0), Cycle::empty())),
        _ => {}
    }
    let (a, b) = oracle::bt_two_cycles(c, alpha, true, budget)?
        .ok_or_else(|| Error::StructureViolation("no alpha / not-alpha cycle pair exists".into()))?;
    if !b.is_valid_in(c) {
        return Err(Error::StructureViolation(
            "the not-alpha cycle is not monochromatic".into(),
        ));
    }
    Ok((a, b))
}

/// Two disjoint monochromatic cycles of different colours covering a
/// 2-local colouring in which `alpha` sees every vertex; the first is in `alpha`.
///
/// All other colours are merged into one and the two-colour split is found
/// exactly. The merged cycle is monochromatic because every vertex sees at
/// most one colour besides `alpha`.
pub fn one_cover_all(c: &EdgeColouring, alpha: ColourId, budget: &OracleBudget) -> Result<(Cycle, Cycle)> {
    if !c.is_r_local(2) {
        return Err(Error::PreconditionViolated("colouring is not 2-local".into()));
    }
    if c.n() >= 2 {
        if let Some(v) = (0..c.n()).find(|&v| !c.sees(v, alpha)) {
            return Err(Error::PreconditionViolated(format!(
                "colour {alpha} does not see vertex {v}"
            )));
        }
    }
    split_two_colours(c, alpha, budget)
}

/// As [`one_cover_all`], but only vertices other than `v` need to see at
/// most one colour besides `alpha`, and `alpha` need not see everything.
///
/// If the merged cycle passes through `v`, every other vertex on it forces
/// its two cycle edges to share a colour, so it is still monochromatic.
pub fn one_more(c: &EdgeColouring, alpha: ColourId, v: usize, budget: &OracleBudget) -> Result<(Cycle, Cycle)> {
    if c.n() > 0 && v >= c.n() {
        return Err(Error::OutOfRange { vertex: v, n: c.n() });
    }
    for w in (0..c.n()).filter(|&w| w != v) {
        if non_alpha_colours(c, w, alpha)? > 1 {
            return Err(Error::PreconditionViolated(format!(
                "vertex {w} sees more than one colour besides {alpha}"
            )));
        }
    }
    split_two_colours(c, alpha, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_tri_config, IntraRule};

    #[test]
    fn all_alpha() {
        let c = EdgeColouring::monochromatic(5, ColourId(0));
        let (a, b) = one_cover_all(&c, ColourId(0), &OracleBudget::default()).unwrap();
        assert_eq!(a.len(), 5);
        assert!(b.is_empty());
    }

    #[test]
    fn path_plus_one_other_edge() {
        // alpha everywhere except the edge {0, 3}
        let c = EdgeColouring::from_fn(4, |u, v| ColourId(u32::from((u, v) == (0, 3))));
        let (a, b) = one_cover_all(&c, ColourId(0), &OracleBudget::default()).unwrap();
        assert!(a.is_valid_in(&c) && b.is_valid_in(&c));
        assert_eq!(a.len() + b.len(), 4);
    }

    #[test]
    fn alpha_must_see_everything() {
        let (c, _) = gen_tri_config((2, 2, 2), IntraRule::LowColour).unwrap();
        assert!(matches!(
            one_cover_all(&c, ColourId(0), &OracleBudget::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn one_vertex_sees_three() {
        // vertex 0 sees colours 0, 1, 2, 3; everything else is colour 0
        let c = EdgeColouring::from_fn(5, |u, v| match (u, v) {
            (0, 1) => ColourId(1),
            (0, 2) => ColourId(2),
            (0, 3) => ColourId(3),
            _ => ColourId(0),
        });
        let (a, b) = one_more(&c, ColourId(0), 0, &OracleBudget::default()).unwrap();
        assert!(a.is_valid_in(&c) && b.is_valid_in(&c));
        assert_eq!(a.len() + b.len(), 5);
    }
}
