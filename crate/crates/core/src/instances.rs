//! Instance generators: random local colourings, the special three-part and
//! Fano configurations, planted triangle cycles, mean-coloured instances, and
//! the one-vertex amplifier.
//!
//! All randomness comes from a [`Seed`]; equal parameters and seed give
//! identical colourings.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colouring::{ColourId, EdgeColouring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// A derived seed for the `i`-th member of a seeded family.
    pub fn child(self, i: u64) -> Seed {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0 ^ 0x9e37_79b9_7f4a_7c15);
        rng.set_stream(i);
        Seed(rng.gen())
    }
}

fn col(x: usize) -> ColourId {
    ColourId(x as u32)
}

/// Random r-local colouring with at most `s` colours.
///
/// Each vertex draws an allowed colour set of size at most `r` such that the
/// sets are pairwise intersecting; each edge takes a uniform colour from the
/// intersection of its endpoints' sets.
pub fn gen_random_local(n: usize, r: usize, s: usize, seed: Seed) -> Result<EdgeColouring> {
    if n <= 1 {
        return Ok(EdgeColouring::monochromatic(n, ColourId(0)));
    }
    if r == 0 || s == 0 {
        return Err(Error::InfeasibleFamily(format!(
            "no nonempty colour sets of size <= {r} over {s} colours"
        )));
    }
    let mut rng = seed.rng();
    let kmax = r.min(s);
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut chosen = None;
        for _ in 0..64 {
            let k = rng.gen_range(1..=kmax);
            let mut cand = sample(&mut rng, s, k).into_vec();
            cand.sort_unstable();
            if sets.iter().all(|other| other.iter().any(|x| cand.contains(x))) {
                chosen = Some(cand);
                break;
            }
        }
        // Copying an earlier set always keeps the family intersecting.
        let set = chosen.unwrap_or_else(|| sets.choose(&mut rng).unwrap().clone());
        sets.push(set);
    }
    let c = EdgeColouring::from_fn(n, |u, v| {
        let common: Vec<usize> = sets[u].iter().copied().filter(|x| sets[v].contains(x)).collect();
        col(*common.choose(&mut rng).expect("intersecting family"))
    })
    .canonicalized();
    if !c.is_r_local(r) {
        return Err(Error::StructureViolation(format!(
            "generated colouring is not {r}-local"
        )));
    }
    Ok(c)
}

/// Uniformly random colouring of `K_n` with colours `0..s` (no locality constraint).
pub fn gen_random_coloured(n: usize, s: usize, seed: Seed) -> Result<EdgeColouring> {
    if s == 0 && n >= 2 {
        return Err(Error::BadParams("need at least one colour".into()));
    }
    let mut rng = seed.rng();
    Ok(EdgeColouring::from_fn(n, |_, _| col(rng.gen_range(0..s))).canonicalized())
}

/// The three-part structure: parts `V12`, `V13`, `V23`, where every edge at
/// `V_ij` has colour `i` or `j`, and edges between `V_ij` and `V_il` have colour `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriConfig {
    pub v12: Vec<usize>,
    pub v13: Vec<usize>,
    pub v23: Vec<usize>,
    /// The colours playing roles 1, 2, 3.
    pub colours: [ColourId; 3],
}

impl TriConfig {
    /// Checks every edge constraint of the structure against `c`.
    pub fn check(&self, c: &EdgeColouring) -> std::result::Result<(), String> {
        let [c1, c2, c3] = self.colours;
        let parts = [(&self.v12, [c1, c2]), (&self.v13, [c1, c3]), (&self.v23, [c2, c3])];
        let mut seen = vec![false; c.n()];
        for (part, _) in &parts {
            if part.is_empty() {
                return Err("empty part".into());
            }
            for &v in part.iter() {
                if v >= c.n() || std::mem::replace(&mut seen[v], true) {
                    return Err(format!("vertex {v} repeated or out of range"));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("parts do not cover the vertex set".into());
        }
        for (part, allowed) in &parts {
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    if !allowed.contains(&c.colour(u, v)) {
                        return Err(format!("edge {{{u},{v}}} inside a part has a foreign colour"));
                    }
                }
            }
        }
        let cross = [
            (&self.v12, &self.v13, c1),
            (&self.v12, &self.v23, c2),
            (&self.v13, &self.v23, c3),
        ];
        for (p, q, want) in cross {
            for &u in p.iter() {
                for &v in q.iter() {
                    if c.colour(u, v) != want {
                        return Err(format!("cross edge {{{u},{v}}} should have colour {want}"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntraRule {
    /// Edges inside `V_ij` get colour `i` (the lower of the two).
    LowColour,
    /// Edges inside `V_ij` get a uniform choice from `{i, j}`.
    Random(Seed),
}

/// The three-part configuration with `|V12| = a`, `|V13| = b`, `|V23| = c`,
/// parts numbered consecutively and colours 1, 2, 3 realised as ids 0, 1, 2.
pub fn gen_tri_config(sizes: (usize, usize, usize), rule: IntraRule) -> Result<(EdgeColouring, TriConfig)> {
    let (a, b, c) = sizes;
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::BadSizes(format!("all parts need a vertex, got ({a},{b},{c})")));
    }
    let n = a + b + c;
    // part index: 0 = V12, 1 = V13, 2 = V23
    let part_of = |v: usize| {
        if v < a {
            0
        } else if v < a + b {
            1
        } else {
            2
        }
    };
    let pair = [[0, 1], [0, 2], [1, 2]];
    let mut rng = match rule {
        IntraRule::Random(seed) => Some(seed.rng()),
        IntraRule::LowColour => None,
    };
    let colouring = EdgeColouring::from_fn(n, |u, v| {
        let (pu, pv) = (part_of(u), part_of(v));
        if pu == pv {
            let [lo, hi] = pair[pu];
            let high = rng.as_mut().is_some_and(|rng| rng.gen_bool(0.5));
            col(if high { hi } else { lo })
        } else {
            // shared colour of the two pairs
            let shared = pair[pu].iter().find(|x| pair[pv].contains(x)).unwrap();
            col(*shared)
        }
    });
    let cfg = TriConfig {
        v12: (0..a).collect(),
        v13: (a..a + b).collect(),
        v23: (a + b..n).collect(),
        colours: [col(0), col(1), col(2)],
    };
    Ok((colouring, cfg))
}

/// Lines of the Fano plane, in the part order used by [`gen_fano_config`].
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 3, 7],
    [2, 6, 7],
    [1, 5, 6],
    [4, 5, 7],
    [3, 4, 6],
    [2, 3, 5],
    [1, 2, 4],
];

/// The seven-part configuration indexed by Fano lines: edges between two
/// parts get the point shared by their lines, edges inside a part a uniform
/// point of its line. Point `p` is colour id `p - 1`. Returns the parts too.
pub fn gen_fano_config(part_sizes: [usize; 7], seed: Seed) -> Result<(EdgeColouring, Vec<Vec<usize>>)> {
    if part_sizes.contains(&0) {
        return Err(Error::BadSizes(format!(
            "all seven parts need a vertex, got {part_sizes:?}"
        )));
    }
    let mut parts = Vec::with_capacity(7);
    let mut owner = Vec::new();
    for (i, &size) in part_sizes.iter().enumerate() {
        parts.push((owner.len()..owner.len() + size).collect::<Vec<_>>());
        owner.extend(std::iter::repeat_n(i, size));
    }
    let mut rng = seed.rng();
    let c = EdgeColouring::from_fn(owner.len(), |u, v| {
        let (lu, lv) = (FANO_LINES[owner[u]], FANO_LINES[owner[v]]);
        let point = if owner[u] == owner[v] {
            *lu.choose(&mut rng).unwrap()
        } else {
            *lu.iter().find(|p| lv.contains(p)).expect("Fano lines meet")
        };
        col(point - 1)
    });
    Ok((c, parts))
}

/// A triangle cycle: `u` is a `k`-cycle and apex `v[i]` is joined to
/// `u[i]` and `u[(i + 1) % k]`, all in one colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCycleWitness {
    pub k: usize,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub colour: ColourId,
}

impl TriangleCycleWitness {
    pub fn check(&self, c: &EdgeColouring) -> bool {
        let k = self.k;
        if k < 3 || self.u.len() != k || self.v.len() != k {
            return false;
        }
        let mut all: Vec<usize> = self.u.iter().chain(&self.v).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * k || all.last().is_some_and(|&x| x >= c.n()) {
            return false;
        }
        (0..k).all(|i| {
            let (a, b) = (self.u[i], self.u[(i + 1) % k]);
            c.colour(a, b) == self.colour
                && c.colour(self.v[i], a) == self.colour
                && c.colour(self.v[i], b) == self.colour
        })
    }

    /// The cycle through all `u` and every apex not in `removed`.
    pub fn closing_cycle(&self, removed: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(2 * self.k);
        for i in 0..self.k {
            out.push(self.u[i]);
            if !removed.contains(&self.v[i]) {
                out.push(self.v[i]);
            }
        }
        out
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.u.iter().chain(&self.v).copied().collect()
    }
}

/// `T_k` on vertices `u = 0..k`, `v = k..2k` in `colour`; every other edge in `background`.
pub fn gen_triangle_cycle(
    k: usize,
    colour: ColourId,
    background: ColourId,
) -> Result<(EdgeColouring, TriangleCycleWitness)> {
    if k < 3 || colour == background {
        return Err(Error::BadK(k));
    }
    let w = TriangleCycleWitness {
        k,
        u: (0..k).collect(),
        v: (k..2 * k).collect(),
        colour,
    };
    let in_tk = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        if b < k {
            b == a + 1 || (a == 0 && b == k - 1)
        } else if a < k {
            let i = b - k;
            a == i || a == (i + 1) % k
        } else {
            false
        }
    };
    let c = EdgeColouring::from_fn(2 * k, |a, b| if in_tk(a, b) { colour } else { background });
    Ok((c, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmplifyRule {
    /// Smallest palette colour absent at the vertex.
    LeastAbsent,
    /// One colour new to the whole palette for every new edge.
    Fresh,
}

/// Adds vertex `n`, joined to each old vertex `v` in a colour that does not
/// appear at `v`. Under `LeastAbsent`, a vertex seeing the whole palette gets
/// the fresh colour instead, or fails with `NoAbsentColour` when `strict`.
pub fn amplify(c: &EdgeColouring, rule: AmplifyRule, strict: bool) -> Result<EdgeColouring> {
    let n = c.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let fresh = c.palette().last().map_or(ColourId(0), |x| ColourId(x.0 + 1));
    let mut new_edge = Vec::with_capacity(n);
    for v in 0..n {
        let at_v = c.colours_at(v)?;
        let pick = match rule {
            AmplifyRule::Fresh => fresh,
            AmplifyRule::LeastAbsent => match c.palette().iter().find(|x| !at_v.contains(x)) {
                Some(&x) => x,
                None if strict => return Err(Error::NoAbsentColour(v)),
                None => fresh,
            },
        };
        new_edge.push(pick);
    }
    Ok(EdgeColouring::from_fn(n + 1, |u, v| {
        if v == n {
            new_edge[u]
        } else {
            c.colour(u, v)
        }
    }))
}

/// A colouring with mean locality at most 2 that is not 2-local: one vertex
/// sees three colours, at least one vertex sees only colour 0, and every
/// other vertex sees at most two colours.
pub fn gen_mean_instance(n: usize, seed: Seed) -> Result<EdgeColouring> {
    const ATTEMPTS: usize = 32;
    if n < 4 {
        return Err(Error::BadParams(format!("mean instances need n >= 4, got {n}")));
    }
    let mut rng = seed.rng();
    for _ in 0..ATTEMPTS {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let hub = order[0];
        let ones = rng.gen_range(1..=n - 3);
        let single: Vec<usize> = order[1..1 + ones].to_vec();
        let doubles: Vec<usize> = order[1 + ones..].to_vec();
        // second colour (1 or 2) of each double vertex; the first two are forced apart
        let mut second = vec![0usize; n];
        for (i, &x) in doubles.iter().enumerate() {
            second[x] = match i {
                0 => 1,
                1 => 2,
                _ => rng.gen_range(1..=2),
            };
        }
        let forced = [(doubles[0], 1), (doubles[1], 2)];
        let c = EdgeColouring::from_fn(n, |u, v| {
            if single.contains(&u) || single.contains(&v) {
                return col(0);
            }
            if u == hub || v == hub {
                let x = if u == hub { v } else { u };
                if forced.iter().any(|&(f, _)| f == x) || rng.gen_bool(0.5) {
                    col(second[x])
                } else {
                    col(0)
                }
            } else if second[u] == second[v] && rng.gen_bool(0.5) {
                col(second[u])
            } else {
                col(0)
            }
        });
        let loc: Vec<usize> = (0..n).map(|v| c.locality(v).unwrap()).collect();
        let mean_ok = c.mean_locality()? <= num_rational::Ratio::from_integer(2);
        let threes = loc.iter().filter(|&&l| l >= 3).count();
        if mean_ok && threes == 1 && loc.contains(&1) && !c.is_r_local(2) {
            return Ok(c.canonicalized());
        }
    }
    Err(Error::GenerationFailed(ATTEMPTS))
}

/// Bipartite test instance for the patching step: parts `A = 0..a`,
/// `B = a..a+b`; the `A`–`B` edges are r-local over `s` colours (each vertex
/// of `B` draws `r` colours, each vertex of `A` at most `r` colours hitting
/// every `B`-set). Edges inside `A` and inside `B` get colour 0.
pub fn gen_bipartite_local(
    a: usize,
    b: usize,
    r: usize,
    s: usize,
    seed: Seed,
) -> Result<(EdgeColouring, Vec<usize>, Vec<usize>)> {
    if r == 0 || s == 0 {
        return Err(Error::BadParams("need r, s >= 1".into()));
    }
    let mut rng = seed.rng();
    let k = r.min(s);
    let b_sets: Vec<Vec<usize>> = (0..b).map(|_| sample(&mut rng, s, k).into_vec()).collect();
    let mut a_sets = Vec::with_capacity(a);
    for _ in 0..a {
        let mut set: Vec<usize> = Vec::new();
        for bs in &b_sets {
            if !bs.iter().any(|x| set.contains(x)) {
                set.push(*bs.choose(&mut rng).unwrap());
            }
        }
        if set.len() > r {
            return Err(Error::InfeasibleFamily(format!(
                "|B| = {b} sets cannot be hit with {r} colours"
            )));
        }
        // pad with random extra colours up to a random size <= r
        let target = rng.gen_range(set.len().max(1)..=r);
        while set.len() < target {
            let x = rng.gen_range(0..s);
            if !set.contains(&x) {
                set.push(x);
            }
            if set.len() >= s {
                break;
            }
        }
        a_sets.push(set);
    }
    let c = EdgeColouring::from_fn(a + b, |u, v| {
        if v < a || u >= a {
            return col(0);
        }
        let (sa, sb) = (&a_sets[u], &b_sets[v - a]);
        let common: Vec<usize> = sa.iter().copied().filter(|x| sb.contains(x)).collect();
        col(*common.choose(&mut rng).unwrap())
    });
    Ok((c, (0..a).collect(), (a..a + b).collect()))
}
