use rayon::prelude::*;

use cyclecover::format::{parse_instance, write_instance};
use cyclecover::instances::{gen_random_local, Seed};
use cyclecover::oracle::{longest_mono_cycle, robustness_check};
use cyclecover::{ColourId, EdgeColouring, Error, OracleBudget};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub struct RamseyProbeResult {
    pub r: usize,
    pub l: usize,
    pub n: usize,
    pub samples: usize,
    pub all_found: bool,
    /// Minimum over samples of the longest monochromatic cycle.
    pub min_cycle_len_observed: usize,
    /// Set when `n < 2lr`.
    pub warning: Option<String>,
    /// Samples without a monochromatic cycle of length `>= l`, with their seeds.
    pub misses: Vec<(u64, EdgeColouring)>,
}

impl RamseyProbeResult {
    pub fn render(&self) -> String {
        let mut out = format!(
            "r = {}\nl = {}\nn = {}\nsamples = {}\nall_found = {}\nmin_cycle_len_observed = {}\n",
            self.r, self.l, self.n, self.samples, self.all_found, self.min_cycle_len_observed
        );
        if let Some(w) = &self.warning {
            out.push_str(&format!("warning = {w}\n"));
        }
        for (seed, _) in &self.misses {
            out.push_str(&format!("miss_seed = {seed}\n"));
        }
        out
    }
}

/// Samples r-local colourings of `K_n` (palette sizes cycling through
/// `r..=2r+1`) and records whether each has a monochromatic cycle of length
/// at least `l`.
pub fn ramsey_probe(
    r: usize,
    l: usize,
    n: usize,
    samples: usize,
    seed: u64,
    budget: &OracleBudget,
) -> CliResult<RamseyProbeResult> {
    if r == 0 || samples == 0 || n == 0 {
        return Err(CliError::Config(format!(
            "ramsey probe needs r, n, samples >= 1 (got r = {r}, n = {n}, samples = {samples})"
        )));
    }
    budget.check(n)?;
    let warning = (n < 2 * l * r).then(|| format!("n = {n} is below 2lr = {}", 2 * l * r));
    let outcomes: Vec<(u64, EdgeColouring, usize)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let child = Seed(seed).child(i as u64);
            let s = r + i % (r + 2);
            let c = gen_random_local(n, r, s, child)?;
            let (len, _) = longest_mono_cycle(&c, budget)?;
            Ok((child.0, c, len))
        })
        .collect::<cyclecover::Result<_>>()?;
    let min_cycle_len_observed = outcomes.iter().map(|o| o.2).min().unwrap_or(0);
    let misses: Vec<(u64, EdgeColouring)> = outcomes
        .into_iter()
        .filter(|o| o.2 < l)
        .map(|(s, c, _)| (s, c))
        .collect();
    Ok(RamseyProbeResult {
        r,
        l,
        n,
        samples,
        all_found: misses.is_empty(),
        min_cycle_len_observed,
        warning,
        misses,
    })
}

const EXHAUSTIVE_LIMIT: u64 = 1 << 14;

/// Colourings of `K_n` over colours `0..s` using every colour, in
/// lexicographic order of the upper-triangle colour vector, or `None` if
/// there are more than [`EXHAUSTIVE_LIMIT`].
fn all_colourings(n: usize, s: usize) -> Option<Vec<EdgeColouring>> {
    let m = n * n.saturating_sub(1) / 2;
    let total = (s as u64).checked_pow(m as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT)?;
    let mut out = Vec::new();
    for code in 0..total {
        let mut digits = vec![0u32; m];
        let mut x = code;
        for d in digits.iter_mut().rev() {
            *d = (x % s as u64) as u32;
            x /= s as u64;
        }
        let mut it = digits.into_iter();
        let c = EdgeColouring::from_fn(n, |_, _| ColourId(it.next().unwrap()));
        if c.palette().len() == s {
            out.push(c);
        }
    }
    Some(out)
}

fn qualifies(c: &EdgeColouring, s: usize, r: usize, budget: &OracleBudget) -> cyclecover::Result<bool> {
    Ok(c.palette().len() == s && c.is_r_local(r) && robustness_check(c, s, budget)?)
}

/// Searches `K_n`, `2 <= n <= n_max`, for an r-local colouring with exactly
/// `s` colours needing at least `s` cycles even after deleting any vertex.
/// Small cases are enumerated; otherwise `attempts` random colourings are
/// tried per `n`. A hit is re-read from its text form and re-checked.
pub fn seed_search(
    s: usize,
    r: usize,
    n_max: usize,
    attempts: usize,
    seed: u64,
    budget: &OracleBudget,
) -> CliResult<Option<EdgeColouring>> {
    if s == 0 {
        return Err(CliError::Config("s must be at least 1".into()));
    }
    budget.check(n_max)?;
    let r = r.max(1);
    for n in 2..=n_max {
        let candidates = match all_colourings(n, s) {
            Some(all) => all,
            None => (0..attempts)
                .map(|i| gen_random_local(n, r, s, Seed(seed).child(n as u64).child(i as u64)))
                .filter(|c| !matches!(c, Err(Error::InfeasibleFamily(_))))
                .collect::<cyclecover::Result<_>>()?,
        };
        for c in candidates {
            if qualifies(&c, s, r, budget)? {
                let reread = parse_instance(&write_instance(&c))?;
                assert!(
                    reread == c && qualifies(&reread, s, r, budget)?,
                    "hit does not survive a round trip"
                );
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_examples() {
        let b = OracleBudget::default();
        let mono = ramsey_probe(1, 3, 6, 5, 1, &b).unwrap();
        assert!(mono.all_found && mono.warning.is_none());
        assert_eq!(mono.min_cycle_len_observed, 6);
        let small = ramsey_probe(2, 3, 4, 5, 1, &b).unwrap();
        assert!(small.warning.is_some());
        assert!(matches!(
            ramsey_probe(2, 3, 31, 1, 1, &b),
            Err(CliError::Core(Error::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn seed_examples() {
        let b = OracleBudget::default();
        let hit = seed_search(1, 0, 4, 10, 1, &b).unwrap().unwrap();
        assert_eq!(hit.n(), 2);
        assert!(matches!(
            seed_search(2, 1, 31, 1, 1, &b),
            Err(CliError::Core(Error::BudgetExceeded { .. }))
        ));
        assert_eq!(seed_search(2, 1, 5, 20, 1, &b).unwrap(), None);
    }

    #[test]
    fn enumeration_counts_surjective_colourings() {
        // 3 edges over 2 colours: 2^3 - 2 surjective.
        assert_eq!(all_colourings(3, 2).unwrap().len(), 6);
        assert!(all_colourings(8, 3).is_none());
    }
}
