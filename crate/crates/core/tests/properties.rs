use proptest::prelude::*;

use cyclecover::format::{parse_instance, parse_partition, write_instance, write_partition};
use cyclecover::instances::{
    amplify, gen_fano_config, gen_mean_instance, gen_random_local, gen_tri_config, gen_triangle_cycle, AmplifyRule,
    IntraRule, Seed,
};
use cyclecover::lemmas::{gyarfas_two_paths, posa_cycle_partition};
use cyclecover::oracle::{bt_two_cycles, independence_number, min_cycle_partition, mono_spanning_cycle};
use cyclecover::solvers::{
    r_local_partition, structure_decompose, two_local_partition, two_mean_partition, PipelineParams,
    StructureDecomposition,
};
use cyclecover::{
    verify_partition, ColourId, Cycle, CyclePartition, EdgeColouring, OracleBudget, SimpleGraph, SubsetMask,
    VerifyOptions,
};

fn local_colouring(max_n: usize, max_r: usize) -> impl Strategy<Value = (EdgeColouring, usize)> {
    (0..=max_n, 1..=max_r, 1usize..=5, any::<u64>())
        .prop_map(|(n, r, s, seed)| (gen_random_local(n, r, s, Seed(seed)).unwrap(), r))
}

/// Does `vs` have a spanning cycle in `col`? Tries every ordering with `vs[0]` first.
fn brute_spanning(c: &EdgeColouring, vs: &[usize], col: ColourId) -> bool {
    fn extend(c: &EdgeColouring, col: ColourId, path: &mut Vec<usize>, rest: &mut Vec<usize>) -> bool {
        if rest.is_empty() {
            return c.colour(path[0], *path.last().unwrap()) == col;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            if c.colour(*path.last().unwrap(), v) == col {
                path.push(v);
                if extend(c, col, path, rest) {
                    return true;
                }
                path.pop();
            }
            rest.insert(i, v);
        }
        false
    }
    match vs.len() {
        0 | 1 => true,
        2 => c.colour(vs[0], vs[1]) == col,
        _ => extend(c, col, &mut vec![vs[0]], &mut vs[1..].to_vec()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn colour_neighbourhoods_partition_the_other_vertices((c, _) in local_colouring(10, 3)) {
        for v in 0..c.n() {
            let mut all: Vec<usize> = Vec::new();
            for &col in c.palette() {
                all.extend(c.colour_neighbourhood(v, col).unwrap());
            }
            all.sort_unstable();
            let expected: Vec<usize> = (0..c.n()).filter(|&u| u != v).collect();
            prop_assert_eq!(all, expected);
        }
    }

    #[test]
    fn locality_is_monotone_and_bounds_the_mean((c, r) in local_colouring(10, 3)) {
        prop_assert!(c.is_r_local(r));
        for extra in 0..3 {
            prop_assert!(c.is_r_local(r + extra));
        }
        if c.n() > 0 {
            let mean = c.mean_locality().unwrap();
            prop_assert!(mean <= num_rational::Ratio::from_integer(c.max_locality() as u64));
            prop_assert!(mean <= num_rational::Ratio::from_integer(r as u64));
        }
    }

    #[test]
    fn generators_are_deterministic_and_local(n in 0usize..12, r in 1usize..4, s in 1usize..6, seed in any::<u64>()) {
        let a = gen_random_local(n, r, s, Seed(seed)).unwrap();
        let b = gen_random_local(n, r, s, Seed(seed)).unwrap();
        prop_assert_eq!(write_instance(&a), write_instance(&b));
        prop_assert!(a.is_r_local(r));
    }

    #[test]
    fn fano_configs_are_three_local(sizes in proptest::array::uniform7(0usize..3), seed in any::<u64>()) {
        if let Ok((c, _)) = gen_fano_config(sizes, Seed(seed)) {
            prop_assert!(c.is_r_local(3));
        }
    }

    #[test]
    fn tri_configs_have_no_all_seeing_colour(a in 1usize..5, b in 1usize..5, c3 in 1usize..5, seed in any::<u64>()) {
        for rule in [IntraRule::LowColour, IntraRule::Random(Seed(seed))] {
            let (c, cfg) = gen_tri_config((a, b, c3), rule).unwrap();
            prop_assert!(c.is_r_local(2));
            prop_assert!(cfg.check(&c).is_ok());
            for &col in c.palette() {
                prop_assert!((0..c.n()).any(|v| !c.sees(v, col)));
            }
        }
    }

    #[test]
    fn amplified_edges_avoid_old_colours((c, _) in local_colouring(9, 3), fresh in any::<bool>()) {
        prop_assume!(c.n() > 0);
        let rule = if fresh { AmplifyRule::Fresh } else { AmplifyRule::LeastAbsent };
        let amp = amplify(&c, rule, false).unwrap();
        let w = c.n();
        for v in 0..c.n() {
            prop_assert!(!c.colours_at(v).unwrap().contains(&amp.colour(v, w)));
        }
    }

    #[test]
    fn spanning_cycle_matches_brute_force((c, _) in local_colouring(8, 3), mask in any::<u32>()) {
        let s = SubsetMask(mask & SubsetMask::full(c.n()).0);
        let vs = s.vertices();
        for &col in c.palette() {
            let found = mono_spanning_cycle(&c, s, col, &OracleBudget::default()).unwrap();
            prop_assert_eq!(found.is_some(), brute_spanning(&c, &vs, col));
            if let Some(cyc) = found {
                let mut got = cyc.vertices().to_vec();
                got.sort_unstable();
                prop_assert_eq!(&got, &vs);
                prop_assert!(cyc.is_valid_in(&c));
            }
        }
    }

    #[test]
    fn minimum_partition_witness_and_bounds((c, _) in local_colouring(9, 3)) {
        let budget = OracleBudget::default();
        let (m, witness) = min_cycle_partition(&c, &budget).unwrap();
        prop_assert!(verify_partition(&c, &witness, VerifyOptions::cover()).valid);
        prop_assert_eq!(witness.nonempty_count(), m);
        prop_assert!(m <= c.n());
        if c.n() >= 3 {
            let all: Vec<usize> = (0..c.n()).collect();
            let hamiltonian = c.palette().iter().any(|&col| brute_spanning(&c, &all, col));
            prop_assert_eq!(m == 1, hamiltonian);
        }
    }

    #[test]
    fn merged_two_cycle_split_always_exists((c, _) in local_colouring(9, 3)) {
        prop_assume!(c.n() > 0 && !c.palette().is_empty());
        for &alpha in c.palette() {
            prop_assert!(bt_two_cycles(&c, alpha, true, &OracleBudget::default()).unwrap().is_some());
        }
    }

    #[test]
    fn deleting_a_vertex_changes_the_minimum_by_at_most_one((c, _) in local_colouring(10, 3)) {
        prop_assume!(c.n() >= 2);
        let budget = OracleBudget::default();
        let (m, _) = min_cycle_partition(&c, &budget).unwrap();
        for v in 0..c.n() {
            let rest: Vec<usize> = (0..c.n()).filter(|&u| u != v).collect();
            let (m2, _) = min_cycle_partition(&c.induced(&rest), &budget).unwrap();
            prop_assert!(m2 + 1 >= m && m2 <= m + 1);
        }
    }

    #[test]
    fn gyarfas_paths_cover_with_distinct_colours(n in 0usize..12, seed in any::<u64>()) {
        let c = gen_random_local(n, 2, 2, Seed(seed)).unwrap().map_colours(|x| ColourId(x.0 % 2));
        let pair = gyarfas_two_paths(&c, (ColourId(0), ColourId(1))).unwrap();
        prop_assert!(pair.p_first.is_path_in_colour(&c, ColourId(0)));
        prop_assert!(pair.p_second.is_path_in_colour(&c, ColourId(1)));
        prop_assert_eq!(pair.vertex_count(), n);
        if pair.p_first.len() >= 2 && pair.p_second.len() >= 2 {
            prop_assert_ne!(pair.p_first.colour(), pair.p_second.colour());
        }
    }

    #[test]
    fn posa_never_exceeds_the_independence_number(n in 1usize..12, p in 0.05f64..0.95, seed in any::<u64>()) {
        let g = SimpleGraph::random(n, p, &mut Seed(seed).rng());
        let budget = OracleBudget::default();
        let cycles = posa_cycle_partition(&g, None, &budget).unwrap();
        prop_assert!(cycles.len() <= independence_number(&g, &budget).unwrap());
        prop_assert_eq!(cycles.iter().map(Vec::len).sum::<usize>(), n);
    }

    #[test]
    fn two_local_solver_is_always_valid((c, _) in local_colouring(12, 2)) {
        prop_assume!(c.is_r_local(2));
        let (p, _) = two_local_partition(&c, &OracleBudget::default()).unwrap();
        prop_assert_eq!(p.len(), 2);
        prop_assert!(verify_partition(&c, &p, VerifyOptions::two_distinct()).valid);
        if let StructureDecomposition::TriConfig(cfg) = structure_decompose(&c).unwrap() {
            let parts = [&cfg.v23, &cfg.v13, &cfg.v12];
            for (m, part) in parts.iter().enumerate() {
                prop_assert!(part.iter().all(|&v| !c.sees(v, cfg.colours[m])));
            }
        }
    }

    #[test]
    fn mean_solver_is_always_valid(n in 4usize..11, seed in any::<u64>()) {
        let c = gen_mean_instance(n, Seed(seed)).unwrap();
        let ones = (0..n).filter(|&v| c.locality(v).unwrap() == 1).count();
        let threes = (0..n).filter(|&v| c.locality(v).unwrap() >= 3).count();
        prop_assert!(ones >= threes);
        let (p, _) = two_mean_partition(&c, &OracleBudget::default()).unwrap();
        prop_assert!(verify_partition(&c, &p, VerifyOptions::two_distinct()).valid);
    }

    #[test]
    fn pipeline_partitions_are_valid((c, r) in local_colouring(12, 3)) {
        let (p, _) = r_local_partition(&c, r, &PipelineParams::default(), &OracleBudget::default()).unwrap();
        prop_assert!(verify_partition(&c, &p, VerifyOptions::cover()).valid);
    }

    #[test]
    fn text_formats_round_trip((c, _) in local_colouring(10, 3)) {
        let text = write_instance(&c);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_instance(&back), text);
        if c.n() > 0 {
            let (_, p) = min_cycle_partition(&c, &OracleBudget::default()).unwrap();
            let q = parse_partition(&write_partition(&p)).unwrap();
            let opts = VerifyOptions::cover();
            prop_assert_eq!(verify_partition(&c, &q, opts), verify_partition(&c, &p, opts));
        }
    }
}

#[test]
fn triangle_cycles_survive_every_apex_deletion() {
    for k in 3..=6 {
        let (c, w) = gen_triangle_cycle(k, ColourId(1), ColourId(0)).unwrap();
        for mask in 0u32..1 << k {
            let removed: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| w.v[i]).collect();
            let order = w.closing_cycle(&removed);
            let mut expected: Vec<usize> = w.vertices().into_iter().filter(|v| !removed.contains(v)).collect();
            expected.sort_unstable();
            let mut got = order.clone();
            got.sort_unstable();
            assert_eq!(got, expected);
            assert!(Cycle::new(order, ColourId(1)).is_valid_in(&c));
            if expected.len() <= 8 {
                assert!(brute_spanning(&c, &expected, ColourId(1)));
            }
        }
    }
}

#[test]
fn referee_names_each_failure() {
    use cyclecover::FailureReason::*;
    let c = EdgeColouring::from_fn(4, |u, v| ColourId(if (u, v) == (0, 3) { 1 } else { 0 }));
    let part = |cycles: Vec<Cycle>| CyclePartition::new(cycles);
    let cases = [
        (
            part(vec![
                Cycle::new(vec![0, 1, 2], ColourId(0)),
                Cycle::new(vec![2, 3], ColourId(0)),
            ]),
            NotDisjoint,
        ),
        (part(vec![Cycle::new(vec![0, 1, 2], ColourId(0))]), NotCovering),
        (part(vec![Cycle::new(vec![0, 1, 2, 3], ColourId(0))]), NotMonochromatic),
        (
            part(vec![Cycle::new(vec![0, 1, 2], ColourId(1)), Cycle::singleton(3)]),
            ColourMismatch,
        ),
        (
            part(vec![
                Cycle::new(vec![0, 1], ColourId(0)),
                Cycle::new(vec![2, 3], ColourId(0)),
            ]),
            RepeatedColour,
        ),
        (part(vec![Cycle::new(vec![0, 5], ColourId(0))]), VertexOutOfRange),
    ];
    for (p, reason) in cases {
        let opts = VerifyOptions::two_distinct();
        assert_eq!(verify_partition(&c, &p, opts).failure_reason, Some(reason), "{p:?}");
    }
    let singles = part((0..4).map(Cycle::singleton).collect());
    assert_eq!(
        verify_partition(&c, &singles, VerifyOptions::two_distinct()).failure_reason,
        Some(TooManyCycles)
    );
}
