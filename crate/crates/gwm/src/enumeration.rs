//! Closed-form counts of weighted and complete games with minimum, the
//! trivial-class expansion recurrence, and exhaustive generators used as
//! independent oracles at small `n`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::error::EnumerationError;
use crate::game::CompleteGameInvariants;
use crate::vector::{shift_cmp, Hierarchy, ProfileVector, ShiftOrdering};

/// Game family a count query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Weighted,
    Complete,
    /// Weighted games with one shift-maximal losing vector; counts equal the
    /// primal family's by duality.
    WeightedDual,
    /// Complete games with one shift-maximal losing vector; dual counts.
    CompleteDual,
    /// Weighted games without veto or null players.
    NontrivialWeighted,
    Symmetric,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "weighted" => Some(Family::Weighted),
            "complete" => Some(Family::Complete),
            "weighted-dual" => Some(Family::WeightedDual),
            "complete-dual" => Some(Family::CompleteDual),
            "nontrivial-weighted" => Some(Family::NontrivialWeighted),
            "symmetric" => Some(Family::Symmetric),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Weighted => "weighted",
            Family::Complete => "complete",
            Family::WeightedDual => "weighted-dual",
            Family::CompleteDual => "complete-dual",
            Family::NontrivialWeighted => "nontrivial-weighted",
            Family::Symmetric => "symmetric",
        };
        f.write_str(s)
    }
}

/// A count request; `None` stands for the `*` wildcard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountQuery {
    pub family: Family,
    pub n: u32,
    pub t: Option<u32>,
    pub r: Option<u32>,
}

fn wildcard(v: Option<u32>) -> String {
    v.map_or_else(|| "*".to_string(), |x| x.to_string())
}

impl CountQuery {
    fn no_formula(&self) -> EnumerationError {
        EnumerationError::NoFormulaAvailable {
            family: self.family.to_string(),
            t: wildcard(self.t),
            r: wildcard(self.r),
        }
    }
}

/// Evaluates `p(n)` with exact division by `den`; a remainder is a defect.
fn poly(n: u32, coeffs: &[i64], den: u64) -> BigUint {
    let n = BigInt::from(n);
    let mut acc = BigInt::zero();
    for &c in coeffs {
        acc = acc * &n + BigInt::from(c);
    }
    let den = BigInt::from(den);
    let (q, rem) = num_integer::Integer::div_rem(&acc, &den);
    assert!(rem.is_zero(), "formula division must be exact");
    assert!(q.sign() != Sign::Minus, "count formulas are non-negative");
    q.to_biguint().expect("non-negative")
}

fn two_pow_minus_one(n: u32) -> BigUint {
    (BigUint::one() << n) - BigUint::one()
}

/// `wg(n, t, 1)`: weighted games with minimum and `t` classes.
fn weighted_per_t(n: u32, t: u32) -> BigUint {
    if t == 0 || t > n {
        return BigUint::zero();
    }
    match t {
        1 => BigUint::from(n),
        2 => {
            if n <= 2 {
                BigUint::from(n - 1)
            } else {
                poly(n, &[2, -8, 10], 1)
            }
        }
        3 => {
            if n <= 3 {
                BigUint::zero()
            } else {
                poly(n, &[5, -48, 157, -174], 6)
            }
        }
        4 => {
            if n <= 5 {
                BigUint::zero()
            } else {
                poly(n, &[1, -16, 95, -248, 240], 12)
            }
        }
        _ => BigUint::zero(),
    }
}

/// `wg(n, *, 1)`: all weighted games with minimum.
fn weighted_total(n: u32) -> BigUint {
    if n <= 5 {
        two_pow_minus_one(n)
    } else {
        poly(n, &[1, -6, 23, -18, 12], 12)
    }
}

/// `cg(n, t, 1)`: complete games with minimum and `t` classes.
fn complete_per_t(n: u32, t: u32) -> BigUint {
    if t == 0 || t > n {
        return BigUint::zero();
    }
    if t == 1 {
        BigUint::from(n)
    } else if 2 * t - 1 <= n + 1 {
        binomial(u64::from(n) + 1, u64::from(2 * t - 1))
    } else {
        BigUint::zero()
    }
}

/// `cg(n, 2, *)`: bipartite complete games, any number of rows.
fn complete_bipartite_any_r(n: u32) -> BigUint {
    let mut fib = FibonacciCache::new();
    let f = fib.get(n as usize + 6).clone();
    let sub = BigUint::from(n) * BigUint::from(n) + BigUint::from(4 * n) + BigUint::from(8u32);
    assert!(f >= sub, "formula is non-negative for n >= 1");
    f - sub
}

/// Exact count for the query, or [`EnumerationError::NoFormulaAvailable`]
/// when no closed form exists for the combination. Dual families return
/// their primal's value.
pub fn count(query: &CountQuery) -> Result<BigUint, EnumerationError> {
    if query.n == 0 {
        return Err(EnumerationError::InvalidQuery("n must be >= 1".into()));
    }
    if let Some(t) = query.t {
        if t == 0 {
            return Err(EnumerationError::InvalidQuery("t must be >= 1".into()));
        }
        if t > query.n {
            return Ok(BigUint::zero());
        }
    }
    if query.r == Some(0) {
        return Err(EnumerationError::InvalidQuery("r must be >= 1".into()));
    }
    // a single class totally orders the profiles, so only r = 1 occurs
    if query.t == Some(1) && matches!(query.r, Some(r) if r >= 2) {
        return Ok(BigUint::zero());
    }
    let n = query.n;
    match query.family {
        Family::Weighted | Family::WeightedDual => match (query.t, query.r) {
            (Some(t), Some(1)) => Ok(weighted_per_t(n, t)),
            (None, Some(1)) => Ok(weighted_total(n)),
            (Some(1), None) => Ok(BigUint::from(n)),
            _ => Err(query.no_formula()),
        },
        Family::Complete | Family::CompleteDual => match (query.t, query.r) {
            (Some(t), Some(1)) => Ok(complete_per_t(n, t)),
            (None, Some(1)) => Ok(two_pow_minus_one(n)),
            (Some(1), None) => Ok(BigUint::from(n)),
            (Some(2), None) => Ok(complete_bipartite_any_r(n)),
            // no usable closed form is known for (t = *, r = 2)
            _ => Err(query.no_formula()),
        },
        Family::NontrivialWeighted => match (query.t, query.r) {
            (Some(t), Some(1)) => count_nontrivial(n, t, 1),
            (None, Some(1)) => {
                let mut acc = BigUint::zero();
                for t in 1..=n.min(4) {
                    acc += count_nontrivial(n, t, 1)?;
                }
                Ok(acc)
            }
            _ => Err(query.no_formula()),
        },
        Family::Symmetric => match (query.t, query.r) {
            (None | Some(1), None | Some(1)) => Ok(BigUint::from(n)),
            _ => Ok(BigUint::zero()),
        },
    }
}

/// Number of non-trivial (no veto, no null players) weighted games with
/// minimum and `t` classes. Zero for `t >= 3` and all infeasible arguments.
pub fn count_nontrivial(n: u32, t: u32, r: u32) -> Result<BigUint, EnumerationError> {
    if r != 1 {
        return Err(EnumerationError::NoFormulaAvailable {
            family: Family::NontrivialWeighted.to_string(),
            t: t.to_string(),
            r: r.to_string(),
        });
    }
    if t == 0 || t > n {
        return Ok(BigUint::zero());
    }
    Ok(match t {
        1 => BigUint::from(n - 1),
        2 => {
            if n <= 2 {
                BigUint::zero()
            } else {
                poly(n, &[1, -6, 9], 1)
            }
        }
        _ => BigUint::zero(),
    })
}

/// Expands non-trivial counts to all games by appending veto and null
/// players:
/// `wg(n,t,r) = ŵ(n,t,r) + Σ_h 2·ŵ(n-h,t-1,r) + (h-1)·ŵ(n-h,t-2,r)`,
/// plus `1` for `r = 1, t = 1` and `n - 1` for `r = 1, t = 2` (the games
/// consisting of trivial classes only).
pub fn expand_trivial(
    nontrivial_counts: impl Fn(u32, u32) -> BigUint,
    n: u32,
    t: u32,
    r: u32,
) -> BigUint {
    let mut total = if t >= 1 {
        nontrivial_counts(n, t)
    } else {
        BigUint::zero()
    };
    for h in 1..n {
        if t >= 2 {
            total += BigUint::from(2u32) * nontrivial_counts(n - h, t - 1);
        }
        if t >= 3 {
            total += BigUint::from(h - 1) * nontrivial_counts(n - h, t - 2);
        }
    }
    if r == 1 && t == 1 {
        total += BigUint::one();
    }
    if r == 1 && t == 2 {
        total += BigUint::from(n - 1);
    }
    total
}

/// Memoized Fibonacci numbers, `F(0) = 0, F(1) = 1`.
pub struct FibonacciCache {
    values: Vec<BigUint>,
}

impl FibonacciCache {
    pub fn new() -> Self {
        FibonacciCache {
            values: vec![BigUint::zero(), BigUint::one()],
        }
    }

    pub fn get(&mut self, k: usize) -> &BigUint {
        while self.values.len() <= k {
            let next = &self.values[self.values.len() - 1] + &self.values[self.values.len() - 2];
            self.values.push(next);
        }
        &self.values[k]
    }
}

impl Default for FibonacciCache {
    fn default() -> Self {
        FibonacciCache::new()
    }
}

/// Compositions of `n` into `t` positive parts, lexicographically descending.
fn compositions_desc(n: u32, t: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, t: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if t == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (1..=n - (t - 1)).rev() {
            cur.push(first);
            rec(n - first, t - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if t >= 1 && n >= t {
        rec(n, t, &mut Vec::new(), &mut out);
    }
    out
}

/// All single rows valid for `sizes`: `1 <= m_1 <= n_1`,
/// `1 <= m_h <= n_h - 1` for middle classes, `0 <= m_t <= n_t - 1`,
/// in ascending lexicographic order.
fn minimum_rows(sizes: &[u32]) -> Vec<Vec<u32>> {
    let t = sizes.len();
    let mut ranges = Vec::with_capacity(t);
    for (h, &nh) in sizes.iter().enumerate() {
        let (lo, hi) = if h == 0 {
            (1, nh)
        } else if h == t - 1 {
            (0, nh - 1)
        } else {
            (1, nh.saturating_sub(1))
        };
        if lo > hi {
            return Vec::new();
        }
        ranges.push((lo, hi));
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = ranges.iter().map(|&(lo, _)| lo).collect();
    loop {
        out.push(cur.clone());
        let mut k = t;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < ranges[k].1 {
                cur[k] += 1;
                for j in k + 1..t {
                    cur[j] = ranges[j].0;
                }
                break;
            }
        }
    }
}

/// Every complete game with minimum on `n` players, exactly once, ordered by
/// class count, then hierarchy (lex-descending), then row (lex-ascending).
pub fn generate_games_with_minimum(n: u32) -> impl Iterator<Item = CompleteGameInvariants> {
    (1..=n).flat_map(move |t| {
        compositions_desc(n, t).into_iter().flat_map(|sizes| {
            let hierarchy = Hierarchy::new(sizes.clone()).expect("parts are positive");
            minimum_rows(&sizes).into_iter().map(move |row| {
                let row = ProfileVector::new(row).expect("t >= 1");
                CompleteGameInvariants::new(hierarchy.clone(), vec![row])
                    .expect("generated rows satisfy the invariant conditions")
            })
        })
    })
}

/// Counts generated games satisfying `predicate`; the brute-force side of
/// formula-vs-generator checks.
pub fn generate_and_count(
    n: u32,
    mut predicate: impl FnMut(&CompleteGameInvariants) -> bool,
) -> u64 {
    generate_games_with_minimum(n)
        .filter(|g| predicate(g))
        .count() as u64
}

/// Every bipartite complete game on `n` players (any number of matrix rows):
/// antichains under the shift order in the `(n_1+1) x (n_2+1)` grid,
/// filtered by the invariant conditions. Intended for small `n`; the row-set
/// count explodes combinatorially beyond `n ~ 9`.
pub fn generate_complete_t2(n: u32) -> impl Iterator<Item = CompleteGameInvariants> {
    (1..n).rev().flat_map(move |n1| {
        let sizes = [n1, n - n1];
        let hierarchy = Hierarchy::new(sizes.to_vec()).expect("positive parts");
        // grid vectors in lex-descending order; DFS over increasing indices
        // yields each antichain exactly once with rows already canonical.
        let mut vectors: Vec<[u32; 2]> = Vec::new();
        for x in (0..=sizes[0]).rev() {
            for y in (0..=sizes[1]).rev() {
                vectors.push([x, y]);
            }
        }
        let mut games = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        dfs_antichains(&vectors, &sizes, 0, &mut chosen, &mut |rows| {
            let rows = rows
                .iter()
                .map(|r| ProfileVector::new(r.to_vec()).expect("t = 2"))
                .collect();
            games.push(
                CompleteGameInvariants::new(hierarchy.clone(), rows)
                    .expect("antichain construction satisfies the invariant conditions"),
            );
        });
        games.into_iter()
    })
}

fn dfs_antichains(
    vectors: &[[u32; 2]],
    sizes: &[u32; 2],
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(Vec<[u32; 2]>),
) {
    if !chosen.is_empty() {
        let rows: Vec<[u32; 2]> = chosen.iter().map(|&i| vectors[i]).collect();
        let separated = rows.iter().any(|r| r[0] > 0 && r[1] < sizes[1]);
        if rows[0][0] > 0 && separated {
            emit(rows);
        }
    }
    for i in start..vectors.len() {
        let incomparable = chosen
            .iter()
            .all(|&j| shift_cmp(&vectors[j], &vectors[i]) == ShiftOrdering::Incomparable);
        if incomparable {
            chosen.push(i);
            dfs_antichains(vectors, sizes, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}
