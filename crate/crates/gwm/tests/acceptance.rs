//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime. Every comparison is exact; the wall-clock budgets are
//! asserted as stated.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use gwm::combinatorics::binomial;
use gwm::enumeration::{
    count, count_nontrivial, expand_trivial, generate_complete_t2, generate_games_with_minimum,
    CountQuery, Family, FibonacciCache,
};
use gwm::oracle::{
    brute_power, check_weighted_representation, explicit_dual, extract_invariants, realize,
};
use gwm::power::{
    banzhaf, rank_games, shapley_shubik, ss2_delta_a, ss2_delta_b, swing_count_1, swing_count_2,
    swing_counts_by_size, verify_banzhaf_conjecture, BipartiteGame, PlayerClass, PowerIndex,
};
use gwm::weighted::classify_weighted;

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("PASS {criterion} ({elapsed:.2?}, budget {budget:.0?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its runtime budget: {elapsed:?} >= {budget:?}"
    );
}

/// Criterion 1: the generator reproduces cg(n,*,1) = 2^n - 1 and the per-t
/// binomial counts for all n <= 12.
#[test]
fn criterion_1_enumeration_exactness() {
    let started = Instant::now();
    for n in 1..=12u32 {
        let total = generate_games_with_minimum(n).count() as u64;
        assert_eq!(
            BigUint::from(total),
            (BigUint::from(1u8) << n) - BigUint::from(1u8),
            "total at n={n}"
        );
        let mut per_t: BTreeMap<u32, u64> = BTreeMap::new();
        for g in generate_games_with_minimum(n) {
            *per_t.entry(g.hierarchy().num_classes() as u32).or_insert(0) += 1;
        }
        for t in 1..=n {
            let generated = per_t.get(&t).copied().unwrap_or(0);
            let expected = if t == 1 {
                BigUint::from(n)
            } else if 2 * t - 1 <= n + 1 {
                binomial(u64::from(n) + 1, u64::from(2 * t - 1))
            } else {
                BigUint::from(0u8)
            };
            assert_eq!(BigUint::from(generated), expected, "n={n}, t={t}");
        }
    }
    finish(
        "criterion 1: enumeration exactness",
        started,
        Duration::from_secs(10),
    );
}

/// Criterion 2: classification-based weighted counts equal the closed forms,
/// in total and per t, for all n <= 12.
#[test]
fn criterion_2_weighted_count_exactness() {
    let started = Instant::now();
    for n in 1..=12u32 {
        let mut total = 0u64;
        let mut per_t: BTreeMap<u32, u64> = BTreeMap::new();
        for g in generate_games_with_minimum(n) {
            if classify_weighted(&g).unwrap().is_weighted {
                total += 1;
                *per_t.entry(g.hierarchy().num_classes() as u32).or_insert(0) += 1;
            }
        }
        let compact = count(&CountQuery {
            family: Family::Weighted,
            n,
            t: None,
            r: Some(1),
        })
        .unwrap();
        assert_eq!(BigUint::from(total), compact, "total at n={n}");
        for t in 1..=n {
            let expected = count(&CountQuery {
                family: Family::Weighted,
                n,
                t: Some(t),
                r: Some(1),
            })
            .unwrap();
            let generated = per_t.get(&t).copied().unwrap_or(0);
            assert_eq!(BigUint::from(generated), expected, "n={n}, t={t}");
        }
    }
    finish(
        "criterion 2: weighted-count exactness",
        started,
        Duration::from_secs(30),
    );
}

/// Criterion 3: the trivial-class expansion of the non-trivial counts
/// reproduces wg(n,t,1) for t <= 4, n <= 50.
#[test]
fn criterion_3_recurrence_coherence() {
    let started = Instant::now();
    let nontrivial = |n: u32, t: u32| count_nontrivial(n, t, 1).unwrap();
    for n in 1..=50u32 {
        for t in 1..=4u32 {
            let expanded = expand_trivial(nontrivial, n, t, 1);
            let direct = count(&CountQuery {
                family: Family::Weighted,
                n,
                t: Some(t),
                r: Some(1),
            })
            .unwrap();
            assert_eq!(expanded, direct, "n={n}, t={t}");
        }
    }
    finish(
        "criterion 3: recurrence coherence",
        started,
        Duration::from_secs(1),
    );
}

/// Criterion 4: swing counts, per-size maps, Shapley-Shubik and Banzhaf
/// formulas equal the coalition oracle, and both difference formulas equal
/// direct differences, for every bipartite game with n1 + n2 <= 12.
#[test]
fn criterion_4_power_formula_correctness() {
    let started = Instant::now();
    for n in 2..=12u32 {
        for n1 in 1..n {
            let n2 = n - n1;
            for a in 1..=n1 {
                for b in 0..n2 {
                    let g = BipartiteGame::new(n1, n2, a, b).unwrap();
                    let explicit = realize(&g.invariants()).unwrap();
                    let power = brute_power(&explicit);
                    let class2 = n1 as usize;

                    assert_eq!(BigUint::from(power[0].swings), swing_count_1(&g));
                    assert_eq!(BigUint::from(power[class2].swings), swing_count_2(&g));

                    let by_size_1 = swing_counts_by_size(&g, PlayerClass::One);
                    let oracle_1: BTreeMap<u32, BigUint> = power[0]
                        .swings_by_size
                        .iter()
                        .map(|(&s, &c)| (s, BigUint::from(c)))
                        .collect();
                    assert_eq!(by_size_1, oracle_1, "by-size at ({n1},{n2},{a},{b})");
                    let by_size_2 = swing_counts_by_size(&g, PlayerClass::Two);
                    let oracle_2: BTreeMap<u32, BigUint> = power[class2]
                        .swings_by_size
                        .iter()
                        .map(|(&s, &c)| (s, BigUint::from(c)))
                        .collect();
                    assert_eq!(by_size_2, oracle_2);

                    let (ss1, ss2) = shapley_shubik(&g);
                    assert_eq!(power[0].ss, ss1);
                    assert_eq!(power[class2].ss, ss2);
                    let bz = banzhaf(&g);
                    assert_eq!(power[0].bz_rel, bz.rel1);
                    assert_eq!(power[class2].bz_rel, bz.rel2);
                    assert_eq!(power[0].bz_abs, bz.abs1);
                    assert_eq!(power[class2].bz_abs, bz.abs2);

                    if b >= 1 {
                        let prev = BipartiteGame::new(n1, n2, a, b - 1).unwrap();
                        let direct = ss2.clone() - shapley_shubik(&prev).1;
                        assert_eq!(ss2_delta_b(&g).unwrap(), direct);
                    }
                    if a >= 2 {
                        let up = BipartiteGame::new(n1, n2, a - 1, b).unwrap();
                        let direct = shapley_shubik(&up).1 - &ss2;
                        assert_eq!(ss2_delta_a(&g).unwrap(), direct);
                    }
                }
            }
        }
    }
    finish(
        "criterion 4: power-formula correctness",
        started,
        Duration::from_secs(300),
    );
}

/// Criterion 5: the printed (3,7) rankings, the absolute-Banzhaf values and
/// all five cross-family tie numerator pairs are reproduced exactly.
#[test]
fn criterion_5_paper_value_reproduction() {
    let started = Instant::now();

    let ss_chain = rank_games(3, 7, &PowerIndex::ShapleyShubik)
        .unwrap()
        .chain_string();
    assert_eq!(
        ss_chain,
        "(3,0)=(2,0)=(1,0)>(3,1)>(3,2)>(2,1)>(3,3)>(2,2)>(3,4)>(1,1)>(2,3)>(3,5)>(1,2)>(2,4)>\
         (3,6)>(1,3)>(2,5)>(1,4)>(2,6)>(1,5)>(1,6)"
    );
    let bz_chain = rank_games(3, 7, &PowerIndex::BanzhafRelative)
        .unwrap()
        .chain_string();
    assert_eq!(
        bz_chain,
        "(3,0)=(2,0)=(1,0)>(3,1)>(2,1)>(1,1)>(3,2)>(2,2)>(3,3)>(1,2)>(2,3)>(3,4)>(1,3)>(2,4)>\
         (3,5)>(2,5)>(1,4)>(3,6)>(2,6)>(1,5)>(1,6)"
    );

    for (game, abs1, abs2) in [
        ((2, 2, 2, 1), rat(3, 8), rat(1, 8)),
        ((2, 2, 1, 1), rat(4, 8), rat(2, 8)),
        ((3, 4, 3, 1), rat(15, 64), rat(1, 64)),
        ((3, 4, 2, 2), rat(26, 64), rat(10, 64)),
    ] {
        let (n1, n2, a, b) = game;
        let bz = banzhaf(&BipartiteGame::new(n1, n2, a, b).unwrap());
        assert_eq!(
            (bz.abs1, bz.abs2),
            (abs1, abs2),
            "absolute Banzhaf {game:?}"
        );
    }

    let report = verify_banzhaf_conjecture(13);
    assert!(report.violations.is_empty());
    let expected_ties = [
        (
            3u32,
            4u32,
            (3u32, 3u32),
            (5u64, 3u64),
            (1u32, 2u32),
            (20u64, 12u64),
        ),
        (2, 6, (2, 5), (7, 5), (1, 4), (42, 30)),
        (6, 3, (6, 2), (4, 2), (1, 1), (12, 6)),
        (5, 8, (5, 7), (9, 7), (2, 5), (1044, 812)),
        (9, 4, (6, 2), (736, 288), (1, 1), (23, 9)),
    ];
    for (n1, n2, g1, nums1, g2, nums2) in expected_ties {
        let nums1 = (BigUint::from(nums1.0), BigUint::from(nums1.1));
        let nums2 = (BigUint::from(nums2.0), BigUint::from(nums2.1));
        let found = report.ties.iter().any(|t| {
            t.n1 == n1
                && t.n2 == n2
                && ((t.first == g1
                    && t.first_numerators == nums1
                    && t.second == g2
                    && t.second_numerators == nums2)
                    || (t.first == g2
                        && t.first_numerators == nums2
                        && t.second == g1
                        && t.second_numerators == nums1))
        });
        assert!(found, "missing tie ({n1},{n2}): {g1:?} ~ {g2:?}");
    }
    finish(
        "criterion 5: paper-value reproduction",
        started,
        Duration::from_secs(60),
    );
}

/// Criterion 6: no violation of either conjectured relative-Banzhaf
/// inequality for any game with n <= 30 (single-threaded budget 10 min; the
/// sweep parallelizes internally).
#[test]
fn criterion_6_conjecture_sweep() {
    let started = Instant::now();
    let report = verify_banzhaf_conjecture(30);
    assert!(
        report.violations.is_empty(),
        "violations found: {:?}",
        report.violations
    );
    assert_eq!(report.games_checked, {
        // sum over n of n(n-1)(n+1)/6 valid (n1, n2, a, b) tuples
        (2..=30u64).map(|n| n * (n - 1) * (n + 1) / 6).sum::<u64>()
    });
    finish(
        "criterion 6: conjecture sweep",
        started,
        Duration::from_secs(600),
    );
}

/// Criterion 7: duality. Dual is an involution on invariants, the explicit
/// dual realizes to the invariant dual, and swings and Shapley-Shubik values
/// are invariant under dualization, for every generated game with n <= 12.
#[test]
fn criterion_7_duality_suite() {
    let started = Instant::now();
    for n in 1..=12u32 {
        for g in generate_games_with_minimum(n) {
            let dual = g.dual().unwrap();
            assert_eq!(dual.dual().unwrap(), g, "dual round trip for {g:?}");

            let explicit = realize(&g).unwrap();
            let explicit_dualized = explicit_dual(&explicit);
            assert_eq!(
                extract_invariants(&explicit_dualized).unwrap(),
                dual,
                "explicit dual mismatch for {g:?}"
            );

            let primal_power = brute_power(&explicit);
            let dual_power = brute_power(&explicit_dualized);
            for (p, d) in primal_power.iter().zip(&dual_power) {
                assert_eq!(p.swings, d.swings);
                assert_eq!(p.ss, d.ss);
                // a size-s swing dualizes to a size-(n+1-s) swing
                let mirrored: BTreeMap<u32, u64> = d
                    .swings_by_size
                    .iter()
                    .map(|(&s, &c)| (n + 1 - s, c))
                    .collect();
                assert_eq!(p.swings_by_size, mirrored);
            }
        }
    }
    finish(
        "criterion 7: duality suite",
        started,
        Duration::from_secs(120),
    );
}

/// Criterion 8: realize/extract round trips on every generated game, and
/// synthesized representations pass the exhaustive coalition check on every
/// weighted game, n <= 12.
#[test]
fn criterion_8_roundtrip_suite() {
    let started = Instant::now();
    for n in 1..=12u32 {
        for g in generate_games_with_minimum(n) {
            let explicit = realize(&g).unwrap();
            assert_eq!(
                extract_invariants(&explicit).unwrap(),
                g,
                "round trip {g:?}"
            );

            let verdict = classify_weighted(&g).unwrap();
            if let Some(rep) = verdict.representation {
                let weights = rep.player_weights(g.hierarchy()).unwrap();
                assert!(
                    check_weighted_representation(&explicit, rep.quota(), &weights).unwrap(),
                    "representation fails for {g:?}"
                );
            }
        }
    }
    finish(
        "criterion 8: round-trip suite",
        started,
        Duration::from_secs(300),
    );
}

/// Criterion 9: the bipartite any-r generator matches the Fibonacci count
/// F(n+6) - (n^2 + 4n + 8) for 2 <= n <= 8, values pinned by evaluating the
/// formula first.
#[test]
fn criterion_9_t2_generator_matches_fibonacci() {
    let started = Instant::now();
    let mut fib = FibonacciCache::new();
    let expected: Vec<(u32, BigUint)> = (2..=8u32)
        .map(|n| {
            let f = fib.get(n as usize + 6).clone();
            (n, f - BigUint::from(n * n + 4 * n + 8))
        })
        .collect();
    // frozen from the formula: 1, 5, 15, 36, 76, 148, 273
    let frozen: [u64; 7] = [1, 5, 15, 36, 76, 148, 273];
    for ((n, value), frozen) in expected.iter().zip(frozen) {
        assert_eq!(value, &BigUint::from(frozen), "formula value at n={n}");
    }
    for (n, value) in expected {
        let generated = generate_complete_t2(n).count() as u64;
        assert_eq!(BigUint::from(generated), value, "generator at n={n}");
    }
    finish(
        "criterion 9: t=2 antichain generator",
        started,
        Duration::from_secs(60),
    );
}
