//! Acceptance gate: one test per release criterion, each printing a PASS
//! line with its corpus size and elapsed time (or a SKIP note where a claim
//! is out of desk-scale reach). Every comparison is exact — integer and
//! rational equality, never tolerance windows.

mod common;

use std::time::Instant;

use common::{for_each_connected_binary_instance, random_corpus, split_mix, AllAllocations};
use fairgraph::binary::{solve_ef_binary, solve_efx_binary};
use fairgraph::fpt::solve_ef_fpt;
use fairgraph::generate::gen_star;
use fairgraph::instance::{Allocation, GraphicalInstance};
use fairgraph::oracle::{
    self, Constraint, Fairness, OracleConfig, SearchSpace, WelfareKind, WelfareValue,
};
use fairgraph::orientation::{ef_via_vmax, to_orientation};
use fairgraph::reductions::{self, McisInstance};

/// Streams for the seeded corpora. Distinct per suite so corpora never
/// alias; the envy-threshold suite deliberately reuses the equivalence
/// suite's stream, since its contract quantifies over that same corpus.
const BINARY_CORPUS_STREAM: u64 = 0xACCE_9701;
const EQUIVALENCE_CORPUS_STREAM: u64 = 0xACCE_9704;
const FPT_CORPUS_STREAM: u64 = 0xACCE_9706;
const MCIS_CORPUS_STREAM: u64 = 0xACCE_9707;

fn binary_random_corpus() -> Vec<GraphicalInstance> {
    random_corpus(500, 7, &[0, 1], 0.4, BINARY_CORPUS_STREAM, 8)
}

fn equivalence_corpus() -> Vec<GraphicalInstance> {
    random_corpus(500, 4, &[0, 1, 3], 0.8, EQUIVALENCE_CORPUS_STREAM, 6)
}

#[test]
fn star_family_price_of_fairness_is_exact() {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    for d in 2u64..=5 {
        let star = gen_star(d).unwrap();
        let (unconstrained, _) = oracle::max_welfare(
            &star,
            WelfareKind::Utilitarian,
            Constraint::Unconstrained,
            SearchSpace::Allocations,
            &cfg,
        )
        .unwrap()
        .unwrap();
        assert_eq!(unconstrained, WelfareValue::Scalar(d * d));

        let (constrained, witness) = oracle::max_welfare(
            &star,
            WelfareKind::Utilitarian,
            Constraint::Efx,
            SearchSpace::Allocations,
            &cfg,
        )
        .unwrap()
        .unwrap();
        assert_eq!(constrained, WelfareValue::Scalar(2 * d - 1));
        assert!(star.is_efx(&witness).unwrap());

        let ratio = oracle::price_of_efx(&star, WelfareKind::Utilitarian, &cfg).unwrap();
        assert!(!ratio.infinite);
        assert_eq!(ratio.to_string(), format!("{}/{}", d * d, 2 * d - 1));
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "star family took {elapsed:?}");
    println!("PASS star-family price of fairness: 4/3 9/5 16/7 25/9, exact ({elapsed:?})");
}

#[test]
fn binary_ef_solver_is_complete_against_exhaustive_search() {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let checked = std::cell::Cell::new(0u64);
    let verify = |inst: &GraphicalInstance| {
        let solved = solve_ef_binary(inst).unwrap();
        let oracle_witness =
            oracle::exists_fair(inst, Fairness::EnvyFree, SearchSpace::Allocations, &cfg).unwrap();
        assert_eq!(
            solved.is_some(),
            oracle_witness.is_some(),
            "existence disagreement on {inst:?}"
        );
        if let Some(allocation) = solved {
            assert!(inst.is_envy_free(&allocation).unwrap());
            assert!(inst.is_orientation(&allocation).unwrap());
        }
        checked.set(checked.get() + 1);
    };
    for_each_connected_binary_instance(5, 5, verify);
    let exhaustive = checked.get();
    for inst in binary_random_corpus() {
        verify(&inst);
    }
    let checked = checked.get();
    assert!(exhaustive > 100_000, "enumeration shrank to {exhaustive}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "completeness sweep took {elapsed:?}");
    println!("PASS binary EF solver complete on {checked} instances ({exhaustive} exhaustive + 500 random, {elapsed:?})");
}

#[test]
fn binary_efx_solver_attains_every_welfare_optimum() {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let mut checked = 0u64;
    let mut verify = |inst: &GraphicalInstance| {
        let allocation = solve_efx_binary(inst).unwrap();
        assert!(inst.is_efx(&allocation).unwrap(), "not EFX on {inst:?}");
        assert!(inst.is_non_wasteful(&allocation).unwrap());
        let report = inst.welfare(&allocation).unwrap();
        assert_eq!(report.utilitarian, inst.max_total_value());

        let (egalitarian_optimum, _) = oracle::max_welfare(
            inst,
            WelfareKind::Egalitarian,
            Constraint::Unconstrained,
            SearchSpace::Allocations,
            &cfg,
        )
        .unwrap()
        .unwrap();
        assert_eq!(
            WelfareValue::Scalar(report.egalitarian),
            egalitarian_optimum,
            "egalitarian gap on {inst:?}"
        );

        let (nash_optimum, _) = oracle::max_welfare(
            inst,
            WelfareKind::Nash,
            Constraint::Unconstrained,
            SearchSpace::Allocations,
            &cfg,
        )
        .unwrap()
        .unwrap();
        assert_eq!(
            WelfareValue::Nash {
                positive_support: report.nash_positive_support,
                product: report.nash_product,
            },
            nash_optimum,
            "Nash gap on {inst:?}"
        );
        checked += 1;
    };
    for_each_connected_binary_instance(5, 5, &mut verify);
    for inst in binary_random_corpus() {
        verify(&inst);
    }
    let elapsed = start.elapsed();
    println!("PASS binary EFX solver utilitarian-, egalitarian-, and Nash-optimal on {checked} instances ({elapsed:?})");
}

#[test]
fn ef_over_allocations_iff_ef_over_orientations() {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    for inst in equivalence_corpus() {
        let via_allocations =
            oracle::exists_fair(&inst, Fairness::EnvyFree, SearchSpace::Allocations, &cfg)
                .unwrap();
        let via_orientations =
            oracle::exists_fair(&inst, Fairness::EnvyFree, SearchSpace::Orientations, &cfg)
                .unwrap();
        assert_eq!(
            via_allocations.is_some(),
            via_orientations.is_some(),
            "space disagreement on {inst:?}"
        );

        // Independent ground truth: direct enumeration, no oracle machinery.
        let by_enumeration = AllAllocations::new(inst.n_agents(), inst.n_items())
            .any(|owners| inst.is_envy_free(&Allocation::new(owners)).unwrap());
        assert_eq!(by_enumeration, via_allocations.is_some());

        for witness in [via_allocations, via_orientations].into_iter().flatten() {
            let oriented = to_orientation(&inst, &witness).unwrap();
            assert!(inst.is_orientation(&oriented).unwrap());
            assert!(inst.is_envy_free(&oriented).unwrap());
        }
    }
    let elapsed = start.elapsed();
    println!("PASS EF over allocations iff EF over orientations on 500 instances; every witness re-orients envy-free ({elapsed:?})");
}

#[test]
fn envy_threshold_characterizes_ef_on_nonwasteful_allocations() {
    let start = Instant::now();
    let mut nonwasteful = 0u64;
    for inst in equivalence_corpus() {
        for owners in AllAllocations::new(inst.n_agents(), inst.n_items()) {
            let allocation = Allocation::new(owners);
            if inst.is_non_wasteful(&allocation).unwrap() {
                assert_eq!(
                    ef_via_vmax(&inst, &allocation).unwrap(),
                    inst.is_envy_free(&allocation).unwrap(),
                    "threshold mismatch on {inst:?} / {allocation:?}"
                );
                nonwasteful += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    println!("PASS single-item envy threshold matches envy-freeness on {nonwasteful} non-wasteful allocations ({elapsed:?})");
}

#[test]
fn fpt_solver_matches_oracle_and_binary_solver() {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let mut against_oracle = 0u64;
    for (i, d) in [2u64, 3, 5].into_iter().enumerate() {
        for inst in random_corpus(100, 6, &[0, 1, d], 0.5, FPT_CORPUS_STREAM + i as u64, 15) {
            let solved = solve_ef_fpt(&inst).unwrap();
            let oracle_bit =
                oracle::exists_fair(&inst, Fairness::EnvyFree, SearchSpace::Orientations, &cfg)
                    .unwrap()
                    .is_some();
            assert_eq!(solved.is_some(), oracle_bit, "disagreement on {inst:?}");
            if let Some(allocation) = solved {
                assert!(inst.is_envy_free(&allocation).unwrap());
                assert!(inst.is_orientation(&allocation).unwrap());
            }
            against_oracle += 1;
        }
    }

    let mut against_binary = 0u64;
    let mut verify = |inst: &GraphicalInstance| {
        assert_eq!(
            solve_ef_fpt(inst).unwrap().is_some(),
            solve_ef_binary(inst).unwrap().is_some(),
            "binary/fpt disagreement on {inst:?}"
        );
        against_binary += 1;
    };
    for_each_connected_binary_instance(5, 5, &mut verify);
    for inst in binary_random_corpus() {
        verify(&inst);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "fpt agreement took {elapsed:?}");
    println!("PASS vertex-cover solver agrees with the oracle on {against_oracle} weighted instances and with the tree solver on {against_binary} binary instances ({elapsed:?})");
}

/// The two fixed fixtures: a 4-cycle whose color classes admit a colorful
/// independent set, and the complete bipartite graph between the same
/// classes, which does not.
fn cycle4_mcis() -> McisInstance {
    McisInstance::new(
        vec![vec![0, 1], vec![2, 3]],
        vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        2,
    )
    .unwrap()
}

fn biclique22_mcis() -> McisInstance {
    McisInstance::new(
        vec![vec![0, 1], vec![2, 3]],
        vec![(0, 2), (0, 3), (1, 2), (1, 3)],
        2,
    )
    .unwrap()
}

/// Deterministic 4-vertex regular MCIS inputs: 2-regular (one of the three
/// labeled 4-cycles) or 3-regular (the complete graph), under a drawn class
/// partition. 3-regular draws keep at most two classes so the reduced
/// egalitarian-threshold scan stays inside the oracle budget.
fn random_mcis_corpus(count: usize, stream: u64) -> Vec<McisInstance> {
    let cycles: [Vec<(usize, usize)>; 3] = [
        vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        vec![(0, 1), (1, 3), (3, 2), (2, 0)],
        vec![(0, 2), (2, 1), (1, 3), (3, 0)],
    ];
    let complete = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let partitions: [&[&[usize]]; 8] = [
        &[&[0, 1, 2, 3]],
        &[&[0, 1], &[2, 3]],
        &[&[0, 2], &[1, 3]],
        &[&[0, 3], &[1, 2]],
        &[&[0, 1, 2], &[3]],
        &[&[0], &[1, 2, 3]],
        &[&[0], &[1], &[2, 3]],
        &[&[0], &[1], &[2], &[3]],
    ];
    let mut state = stream;
    let mut corpus = Vec::with_capacity(count);
    while corpus.len() < count {
        let degree = if split_mix(&mut state).is_multiple_of(2) { 2 } else { 3 };
        let edges = if degree == 2 {
            cycles[(split_mix(&mut state) % 3) as usize].clone()
        } else {
            complete.clone()
        };
        let partition = partitions[(split_mix(&mut state) % 8) as usize];
        if degree == 3 && partition.len() > 2 {
            continue;
        }
        let classes = partition.iter().map(|class| class.to_vec()).collect();
        corpus.push(McisInstance::new(classes, edges, degree).unwrap());
    }
    corpus
}

#[test]
fn reduction_equivalences_hold_end_to_end() {
    let start = Instant::now();
    let cfg = OracleConfig {
        budget: 200_000_000,
        workers: 2,
    };
    let mut inputs = vec![cycle4_mcis(), biclique22_mcis()];
    inputs.extend(random_mcis_corpus(20, MCIS_CORPUS_STREAM));

    let mut solvable = 0usize;
    for mcis in &inputs {
        let direct = reductions::solve_mcis_bruteforce(mcis, 1_000_000).unwrap();
        let expected = direct.is_some();
        solvable += expected as usize;

        let ef_instance = reductions::reduce_mcis_to_ef(mcis).unwrap();
        let ef_witness = oracle::exists_fair(
            &ef_instance,
            Fairness::EnvyFree,
            SearchSpace::Orientations,
            &cfg,
        )
        .unwrap();
        assert_eq!(ef_witness.is_some(), expected, "EF gadget gap on {mcis:?}");

        let (em_instance, threshold) = reductions::reduce_mcis_to_em_efx(mcis).unwrap();
        assert_eq!(
            oracle::decide_em_efx_threshold(&em_instance, threshold, &cfg).unwrap(),
            expected,
            "egalitarian-threshold gadget gap on {mcis:?}"
        );

        let um_instance = reductions::reduce_mcis_to_um_efx(mcis).unwrap();
        assert_eq!(
            oracle::decide_um_plus_efx(&um_instance, &cfg).unwrap(),
            expected,
            "welfare-plus-EFX gadget gap on {mcis:?}"
        );

        if let Some(witness) = ef_witness {
            let set = reductions::extract_independent_set(mcis, &witness)
                .unwrap()
                .expect("an envy-free witness must encode an independent set");
            assert_eq!(set.len(), mcis.n_classes());
            for (class, &vertex) in mcis.classes().iter().zip(&set) {
                assert!(class.contains(&vertex), "choice outside its class");
            }
            for (i, &u) in set.iter().enumerate() {
                for &v in &set[i + 1..] {
                    let adjacent = mcis
                        .edges()
                        .iter()
                        .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
                    assert!(!adjacent, "extracted set is not independent");
                }
            }
            // The direct solver's witness doubles as a cross-check.
            let direct_set = direct.unwrap();
            assert_eq!(direct_set.len(), mcis.n_classes());
        }
    }
    assert!(solvable > 0, "corpus has no solvable inputs");
    assert!(solvable < inputs.len(), "corpus has no unsolvable inputs");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "reduction sweep took {elapsed:?}");
    println!("PASS reduction equivalences (direct search, EF gadget, egalitarian threshold, welfare-plus-EFX) agree on {} inputs, {solvable} solvable ({elapsed:?})", inputs.len());
}

#[test]
fn asymptotic_claims_are_covered_by_property_suites_only() {
    println!(
        "SKIP worst-case hardness and parameterized-runtime growth: not measurable at desk \
         scale; the reduction-equivalence and solver-agreement suites cover their mechanisms \
         on enumerable sizes"
    );
}
