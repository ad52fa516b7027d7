//! Formula-versus-oracle cross checks behind `gwm selfcheck`.

use num_bigint::BigUint;

use crate::enumeration::{
    count, generate_and_count, generate_complete_t2, generate_games_with_minimum, CountQuery,
    Family, FibonacciCache,
};
use crate::oracle;
use crate::power::{shapley_shubik, swing_count_1, swing_count_2, BipartiteGame};
use crate::weighted::classify_weighted;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Runs the formula≡oracle suites up to `n_max` and reports per-suite
/// outcomes. Everything compares exactly.
pub fn run(n_max: u32) -> Vec<CheckResult> {
    let mut results = Vec::new();

    // generator totals and per-t counts against the closed forms
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=n_max {
        let total = generate_and_count(n, |_| true);
        let expected = count(&CountQuery {
            family: Family::Complete,
            n,
            t: None,
            r: Some(1),
        })
        .unwrap();
        if BigUint::from(total) != expected {
            ok = false;
            detail = format!("n={n}: generated {total}, formula {expected}");
            break;
        }
        for t in 1..=n {
            let per_t = generate_and_count(n, |g| g.hierarchy().num_classes() == t as usize);
            let expected = count(&CountQuery {
                family: Family::Complete,
                n,
                t: Some(t),
                r: Some(1),
            })
            .unwrap();
            if BigUint::from(per_t) != expected {
                ok = false;
                detail = format!("n={n}, t={t}: generated {per_t}, formula {expected}");
                break;
            }
        }
    }
    results.push(check("complete-counts", ok, detail));

    // weighted classification against the polynomial counts
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=n_max {
        let weighted = generate_and_count(n, |g| classify_weighted(g).unwrap().is_weighted);
        let expected = count(&CountQuery {
            family: Family::Weighted,
            n,
            t: None,
            r: Some(1),
        })
        .unwrap();
        if BigUint::from(weighted) != expected {
            ok = false;
            detail = format!("n={n}: classified {weighted}, formula {expected}");
            break;
        }
    }
    results.push(check("weighted-counts", ok, detail));

    // bipartite any-r generator against the Fibonacci formula
    let mut ok = true;
    let mut detail = String::new();
    let mut fib = FibonacciCache::new();
    for n in 2..=n_max.min(8) {
        let generated = generate_complete_t2(n).count() as u64;
        let expected = fib.get(n as usize + 6).clone() - BigUint::from(n * n + 4 * n + 8);
        if BigUint::from(generated) != expected {
            ok = false;
            detail = format!("n={n}: generated {generated}, formula {expected}");
            break;
        }
    }
    results.push(check("bipartite-any-r-counts", ok, detail));

    // swing and Shapley-Shubik formulas against coalition enumeration
    let mut ok = true;
    let mut detail = String::new();
    'power: for n in 2..=n_max.min(12) {
        for n1 in 1..n {
            let n2 = n - n1;
            for a in 1..=n1 {
                for b in 0..n2 {
                    let g = BipartiteGame::new(n1, n2, a, b).unwrap();
                    let e = oracle::realize(&g.invariants()).unwrap();
                    let power = oracle::brute_power(&e);
                    let (c1, c2) = (swing_count_1(&g), swing_count_2(&g));
                    let (ss1, ss2) = shapley_shubik(&g);
                    let class2 = n1 as usize; // first player of class 2
                    if BigUint::from(power[0].swings) != c1
                        || BigUint::from(power[class2].swings) != c2
                        || power[0].ss != ss1
                        || power[class2].ss != ss2
                    {
                        ok = false;
                        detail = format!("mismatch at ({n1},{n2},{a},{b})");
                        break 'power;
                    }
                }
            }
        }
    }
    results.push(check("power-formula-vs-oracle", ok, detail));

    // dual round trips through both routes
    let mut ok = true;
    let mut detail = String::new();
    'dual: for n in 1..=n_max.min(10) {
        for g in generate_games_with_minimum(n) {
            let d = g.dual().unwrap();
            if d.dual().unwrap() != g {
                ok = false;
                detail = format!("dual round trip failed for {g:?}");
                break 'dual;
            }
            let e = oracle::realize(&g).unwrap();
            let via_oracle = oracle::extract_invariants(&oracle::explicit_dual(&e)).unwrap();
            if via_oracle != d {
                ok = false;
                detail = format!("explicit dual disagrees for {g:?}");
                break 'dual;
            }
        }
    }
    results.push(check("duality", ok, detail));

    results
}
