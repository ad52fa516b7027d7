//! Exact power indices for bipartite games with minimum: swing counts, the
//! Shapley-Shubik index via per-size swing aggregation, Banzhaf indices,
//! semivalues, rankings of all games on a fixed hierarchy, and the
//! order-conjecture sweep for the relative Banzhaf index.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::combinatorics::{factorials, BinomialTable};
use crate::error::PowerError;
use crate::game::CompleteGameInvariants;
use crate::weighted::classify_weighted;

/// A bipartite game with minimum: hierarchy `(n1, n2)` and single row
/// `(a, b)` with `1 <= a <= n1`, `0 <= b <= n2 - 1`.
///
/// `b = 0` makes the second class null; such games are admitted because
/// ranking sweeps compare them alongside the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteGame {
    n1: u32,
    n2: u32,
    a: u32,
    b: u32,
}

impl BipartiteGame {
    pub fn new(n1: u32, n2: u32, a: u32, b: u32) -> Result<Self, PowerError> {
        if n1 == 0 || n2 == 0 {
            return Err(PowerError::InvalidGame(
                "both classes must be non-empty".into(),
            ));
        }
        if a == 0 || a > n1 {
            return Err(PowerError::InvalidGame(format!(
                "need 1 <= a <= n1, got a={a}, n1={n1}"
            )));
        }
        if b > n2 - 1 {
            return Err(PowerError::InvalidGame(format!(
                "need 0 <= b <= n2-1, got b={b}, n2={n2}"
            )));
        }
        Ok(BipartiteGame { n1, n2, a, b })
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }
    pub fn n2(&self) -> u32 {
        self.n2
    }
    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn b(&self) -> u32 {
        self.b
    }

    /// Total player count.
    pub fn num_players(&self) -> u32 {
        self.n1 + self.n2
    }

    pub fn invariants(&self) -> CompleteGameInvariants {
        CompleteGameInvariants::from_raw(&[self.n1, self.n2], &[&[self.a, self.b]])
            .expect("bipartite parameter bounds are exactly the invariant conditions")
    }
}

/// Which class a query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlayerClass {
    One,
    Two,
}

/// Exact index values and raw swing counts for one game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerProfile {
    pub c1: BigUint,
    pub c2: BigUint,
    pub ss1: BigRational,
    pub ss2: BigRational,
    pub bz1_rel: BigRational,
    pub bz2_rel: BigRational,
    pub bz1_abs: BigRational,
    pub bz2_abs: BigRational,
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn swing_count_1_with(t: &BinomialTable, g: &BipartiteGame) -> BigUint {
    let (n1, n2, a, b) = (g.n1 as usize, g.n2 as usize, g.a as usize, g.b as usize);
    let mut total = BigUint::zero();
    for i in b + 1..=n2 {
        total += t.get(n1 - 1, a - 1) * t.get(n2, i);
    }
    for i in 0..=b.min(n1 - a) {
        total += t.get(n1 - 1, a + i - 1) * t.get(n2, b - i);
    }
    total
}

fn swing_count_2_with(t: &BinomialTable, g: &BipartiteGame) -> BigUint {
    let (n1, n2, a, b) = (g.n1 as usize, g.n2 as usize, g.a as usize, g.b as usize);
    let mut total = BigUint::zero();
    if b == 0 {
        return total;
    }
    for i in 0..=(b - 1).min(n1 - a) {
        total += t.get(n1, a + i) * t.get(n2 - 1, b - i - 1);
    }
    total
}

/// Number of swings of one class-1 player.
pub fn swing_count_1(g: &BipartiteGame) -> BigUint {
    let t = BinomialTable::new(g.num_players() as usize);
    swing_count_1_with(&t, g)
}

/// Number of swings of one class-2 player; zero when `b = 0`.
pub fn swing_count_2(g: &BipartiteGame) -> BigUint {
    let t = BinomialTable::new(g.num_players() as usize);
    swing_count_2_with(&t, g)
}

fn by_size_with(
    t: &BinomialTable,
    g: &BipartiteGame,
    class: PlayerClass,
) -> BTreeMap<u32, BigUint> {
    let (n1, n2, a, b) = (g.n1 as usize, g.n2 as usize, g.a as usize, g.b as usize);
    let mut map = BTreeMap::new();
    match class {
        PlayerClass::One => {
            // swing vectors (a, i) for i > b, plus the diagonal (a+i, b-i)
            // of coalitions of size a + b
            for i in b + 1..=n2 {
                let count = t.get(n1 - 1, a - 1) * t.get(n2, i);
                if !count.is_zero() {
                    *map.entry((a + i) as u32).or_insert_with(BigUint::zero) += count;
                }
            }
            let mut diag = BigUint::zero();
            for i in 0..=b.min(n1 - a) {
                diag += t.get(n1 - 1, a + i - 1) * t.get(n2, b - i);
            }
            if !diag.is_zero() {
                *map.entry((a + b) as u32).or_insert_with(BigUint::zero) += diag;
            }
        }
        PlayerClass::Two => {
            let c2 = swing_count_2_with(t, g);
            if !c2.is_zero() {
                map.insert((a + b) as u32, c2);
            }
        }
    }
    map
}

/// Swing counts grouped by coalition cardinality.
pub fn swing_counts_by_size(g: &BipartiteGame, class: PlayerClass) -> BTreeMap<u32, BigUint> {
    let t = BinomialTable::new(g.num_players() as usize);
    by_size_with(&t, g, class)
}

fn ss_from_sizes(n: usize, fact: &[BigUint], by_size: &BTreeMap<u32, BigUint>) -> BigRational {
    let mut acc = BigRational::zero();
    for (&s, count) in by_size {
        let s = s as usize;
        acc += ratio(&fact[s - 1] * &fact[n - s] * count, fact[n].clone());
    }
    acc
}

/// Exact Shapley-Shubik indices `(ss1, ss2)`; efficiency
/// `n1*ss1 + n2*ss2 = 1` holds exactly.
pub fn shapley_shubik(g: &BipartiteGame) -> (BigRational, BigRational) {
    let n = g.num_players() as usize;
    let table = BinomialTable::new(n);
    let fact = factorials(n);
    let ss1 = ss_from_sizes(n, &fact, &by_size_with(&table, g, PlayerClass::One));
    let ss2 = ss_from_sizes(n, &fact, &by_size_with(&table, g, PlayerClass::Two));
    (ss1, ss2)
}

/// Closed form for `SS_2(a, b) - SS_2(a, b-1)`, strictly positive; requires
/// `b >= 1`.
pub fn ss2_delta_b(g: &BipartiteGame) -> Result<BigRational, PowerError> {
    if g.b < 1 {
        return Err(PowerError::PreconditionViolated(
            "ss2_delta_b requires b >= 1".into(),
        ));
    }
    let n = g.num_players() as usize;
    let (n1, n2, a, b) = (g.n1 as usize, g.n2 as usize, g.a as usize, g.b as usize);
    let table = BinomialTable::new(n);
    let fact = factorials(n);
    let num = &fact[a + b - 2]
        * &fact[n - a - b]
        * BigUint::from(n1)
        * table.get(n1 - 1, a - 1)
        * table.get(n2 - 1, b - 1);
    Ok(ratio(num, fact[n].clone()))
}

/// Closed form for `SS_2(a-1, b) - SS_2(a, b)`; zero iff `b = 0`; requires
/// `a >= 2`.
pub fn ss2_delta_a(g: &BipartiteGame) -> Result<BigRational, PowerError> {
    if g.a < 2 {
        return Err(PowerError::PreconditionViolated(
            "ss2_delta_a requires a >= 2".into(),
        ));
    }
    if g.b == 0 {
        return Ok(BigRational::zero());
    }
    let n = g.num_players() as usize;
    let (n1, n2, a, b) = (g.n1 as usize, g.n2 as usize, g.a as usize, g.b as usize);
    let table = BinomialTable::new(n);
    let fact = factorials(n);
    let num = &fact[a + b - 2]
        * &fact[n - a - b]
        * BigUint::from(n2 - 1)
        * table.get(n1, a - 1)
        * table.get(n2 - 2, b - 1);
    Ok(ratio(num, fact[n].clone()))
}

/// Relative and absolute Banzhaf indices per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BanzhafIndices {
    pub rel1: BigRational,
    pub rel2: BigRational,
    pub abs1: BigRational,
    pub abs2: BigRational,
}

/// `c_i / (n1 c1 + n2 c2)` and `c_i / 2^(n-1)`, exactly.
pub fn banzhaf(g: &BipartiteGame) -> BanzhafIndices {
    let table = BinomialTable::new(g.num_players() as usize);
    let c1 = swing_count_1_with(&table, g);
    let c2 = swing_count_2_with(&table, g);
    banzhaf_from_counts(g, &c1, &c2)
}

fn banzhaf_from_counts(g: &BipartiteGame, c1: &BigUint, c2: &BigUint) -> BanzhafIndices {
    let total = BigUint::from(g.n1) * c1 + BigUint::from(g.n2) * c2;
    let half_space = BigUint::one() << (g.num_players() - 1);
    BanzhafIndices {
        rel1: ratio(c1.clone(), total.clone()),
        rel2: ratio(c2.clone(), total),
        abs1: ratio(c1.clone(), half_space.clone()),
        abs2: ratio(c2.clone(), half_space),
    }
}

/// Everything at once; what the CLI prints.
pub fn power_profile(g: &BipartiteGame) -> PowerProfile {
    let n = g.num_players() as usize;
    let table = BinomialTable::new(n);
    let fact = factorials(n);
    let c1 = swing_count_1_with(&table, g);
    let c2 = swing_count_2_with(&table, g);
    let ss1 = ss_from_sizes(n, &fact, &by_size_with(&table, g, PlayerClass::One));
    let ss2 = ss_from_sizes(n, &fact, &by_size_with(&table, g, PlayerClass::Two));
    let bz = banzhaf_from_counts(g, &c1, &c2);
    PowerProfile {
        c1,
        c2,
        ss1,
        ss2,
        bz1_rel: bz.rel1,
        bz2_rel: bz.rel2,
        bz1_abs: bz.abs1,
        bz2_abs: bz.abs2,
    }
}

/// Semivalue coefficients `p_1, ..., p_n`, indexed by coalition size
/// (including the player): `p_j >= 0` and `sum_j p_j C(n-1, j-1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemivalueWeights {
    p: Vec<BigRational>,
}

impl SemivalueWeights {
    pub fn new(p: Vec<BigRational>) -> Result<Self, PowerError> {
        if p.is_empty() {
            return Err(PowerError::InvalidWeights("empty weight vector".into()));
        }
        if p.iter().any(|w| w.is_negative()) {
            return Err(PowerError::InvalidWeights(
                "weights must be non-negative".into(),
            ));
        }
        let n = p.len();
        let table = BinomialTable::new(n - 1);
        let total: BigRational = p
            .iter()
            .enumerate()
            .map(|(j, w)| w * BigRational::from(BigInt::from(table.get(n - 1, j))))
            .sum();
        if total != BigRational::one() {
            return Err(PowerError::InvalidWeights(format!(
                "sum p_j * C(n-1, j-1) must be 1, got {total}"
            )));
        }
        Ok(SemivalueWeights { p })
    }

    /// Shapley-Shubik coefficients `p_j = 1 / (n C(n-1, j-1))`.
    pub fn shapley(n: u32) -> Self {
        let table = BinomialTable::new(n as usize - 1);
        let p = (1..=n as usize)
            .map(|j| {
                BigRational::new(
                    BigInt::one(),
                    BigInt::from(n) * BigInt::from(table.get(n as usize - 1, j - 1)),
                )
            })
            .collect();
        SemivalueWeights { p }
    }

    /// Absolute-Banzhaf coefficients `p_j = 1 / 2^(n-1)`.
    pub fn banzhaf(n: u32) -> Self {
        let w = BigRational::new(BigInt::one(), BigInt::from(BigUint::one() << (n - 1)));
        SemivalueWeights {
            p: vec![w; n as usize],
        }
    }

    pub fn num_players(&self) -> usize {
        self.p.len()
    }

    /// Coefficient for coalitions of size `s` (1-based).
    pub fn get(&self, s: usize) -> &BigRational {
        &self.p[s - 1]
    }
}

/// Unnormalized semivalue `SV_i = sum_s p_s c_i^s` per class.
pub fn semivalue(
    g: &BipartiteGame,
    weights: &SemivalueWeights,
) -> Result<(BigRational, BigRational), PowerError> {
    let n = g.num_players() as usize;
    if weights.num_players() != n {
        return Err(PowerError::InvalidWeights(format!(
            "game has {n} players but weights cover {}",
            weights.num_players()
        )));
    }
    let table = BinomialTable::new(n);
    let sv = |class| -> BigRational {
        by_size_with(&table, g, class)
            .iter()
            .map(|(&s, count)| {
                weights.get(s as usize) * BigRational::from(BigInt::from(count.clone()))
            })
            .sum()
    };
    Ok((sv(PlayerClass::One), sv(PlayerClass::Two)))
}

/// Index used to rank games on a fixed hierarchy by class-1 value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerIndex {
    ShapleyShubik,
    BanzhafRelative,
    BanzhafAbsolute,
    Semivalue(SemivalueWeights),
}

impl PowerIndex {
    pub fn label(&self) -> &'static str {
        match self {
            PowerIndex::ShapleyShubik => "ss",
            PowerIndex::BanzhafRelative => "bz-rel",
            PowerIndex::BanzhafAbsolute => "bz-abs",
            PowerIndex::Semivalue(_) => "semivalue",
        }
    }

    /// Class-1 value of `g` under this index. Semivalues are normalized by
    /// `n1 SV1 + n2 SV2` so that rankings compare relative shares.
    pub fn class1_value(&self, g: &BipartiteGame) -> Result<BigRational, PowerError> {
        Ok(match self {
            PowerIndex::ShapleyShubik => shapley_shubik(g).0,
            PowerIndex::BanzhafRelative => banzhaf(g).rel1,
            PowerIndex::BanzhafAbsolute => banzhaf(g).abs1,
            PowerIndex::Semivalue(w) => {
                let (sv1, sv2) = semivalue(g, w)?;
                let total = BigRational::from(BigInt::from(g.n1)) * &sv1
                    + BigRational::from(BigInt::from(g.n2)) * &sv2;
                if total.is_zero() {
                    BigRational::zero()
                } else {
                    sv1 / total
                }
            }
        })
    }
}

/// Games on one hierarchy grouped by descending class-1 index value; values
/// are exactly equal within a group and strictly decrease between groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankingReport {
    pub n1: u32,
    pub n2: u32,
    pub index: String,
    pub groups: Vec<RankGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankGroup {
    pub value: BigRational,
    pub games: Vec<(u32, u32)>,
}

impl RankingReport {
    /// The tie-grouped chain, e.g. `(3,0)=(2,0)=(1,0)>(3,1)>...`.
    pub fn chain_string(&self) -> String {
        let mut out = String::new();
        for (gi, group) in self.groups.iter().enumerate() {
            for (i, (a, b)) in group.games.iter().enumerate() {
                if gi > 0 || i > 0 {
                    out.push(if i == 0 { '>' } else { '=' });
                }
                out.push_str(&format!("({a},{b})"));
            }
        }
        out
    }

    fn value_of(&self, game: (u32, u32)) -> Option<&BigRational> {
        self.groups
            .iter()
            .find(|g| g.games.contains(&game))
            .map(|g| &g.value)
    }
}

/// Ranks every `(a, b)` game on hierarchy `(n1, n2)` by descending class-1
/// index value, ties grouped, exact comparisons throughout. Tie groups list
/// games in lex-descending order.
pub fn rank_games(n1: u32, n2: u32, index: &PowerIndex) -> Result<RankingReport, PowerError> {
    let mut valued: Vec<((u32, u32), BigRational)> = Vec::new();
    for a in 1..=n1 {
        for b in 0..n2 {
            let g = BipartiteGame::new(n1, n2, a, b)?;
            valued.push(((a, b), index.class1_value(&g)?));
        }
    }
    valued.sort_by(|(ga, va), (gb, vb)| vb.cmp(va).then(gb.cmp(ga)));
    let mut groups: Vec<RankGroup> = Vec::new();
    for (game, value) in valued {
        match groups.last_mut() {
            Some(last) if last.value == value => last.games.push(game),
            _ => groups.push(RankGroup {
                value,
                games: vec![game],
            }),
        }
    }
    Ok(RankingReport {
        n1,
        n2,
        index: index.label().to_string(),
        groups,
    })
}

/// A pair of games whose ranking contradicts the dominance constraints:
/// with `a >= a'` and `b <= b'`, the first game's class-1 value must strictly
/// exceed the second's unless `b = b' = 0`, where they must be equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderViolation {
    pub dominant: (u32, u32),
    pub dominated: (u32, u32),
    pub dominant_value: BigRational,
    pub dominated_value: BigRational,
}

/// Checks every constrained pair in `report`; empty for the Shapley-Shubik
/// index always, and for the relative Banzhaf index as far as swept.
pub fn check_order_constraints(report: &RankingReport) -> Vec<OrderViolation> {
    let mut games: Vec<(u32, u32)> = Vec::new();
    for a in 1..=report.n1 {
        for b in 0..report.n2 {
            games.push((a, b));
        }
    }
    let mut violations = Vec::new();
    for &(a, b) in &games {
        for &(a2, b2) in &games {
            if (a, b) == (a2, b2) || a < a2 || b > b2 {
                continue;
            }
            let dominant_value = report.value_of((a, b)).expect("report covers all games");
            let dominated_value = report.value_of((a2, b2)).expect("report covers all games");
            let ok = if b == 0 && b2 == 0 {
                dominant_value == dominated_value
            } else {
                dominant_value > dominated_value
            };
            if !ok {
                violations.push(OrderViolation {
                    dominant: (a, b),
                    dominated: (a2, b2),
                    dominant_value: dominant_value.clone(),
                    dominated_value: dominated_value.clone(),
                });
            }
        }
    }
    violations
}

/// One failed conjecture inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub n1: u32,
    pub n2: u32,
    pub a: u32,
    pub b: u32,
    pub kind: ViolationKind,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// `Bz_2(a, b) <= Bz_2(a, b-1)` where strict increase was conjectured.
    DeltaB,
    /// `Bz_2(a-1, b) < Bz_2(a, b)`, or equality with `b >= 1`.
    DeltaA,
}

/// Two games on one hierarchy with exactly equal relative Banzhaf indices
/// (excluding the all-null `b = b' = 0` family, which is always tied).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BanzhafTie {
    pub n1: u32,
    pub n2: u32,
    pub first: (u32, u32),
    pub second: (u32, u32),
    /// `(c1, c2)` of `first`.
    pub first_numerators: (BigUint, BigUint),
    /// `(c1, c2)` of `second`.
    pub second_numerators: (BigUint, BigUint),
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub n_max: u32,
    pub games_checked: u64,
    pub violations: Vec<ConjectureViolation>,
    pub ties: Vec<BanzhafTie>,
}

/// Exhaustively checks both conjectured relative-Banzhaf inequalities over
/// all valid `(n1, n2, a, b)` with `n1 + n2 <= n_max`, in exact arithmetic,
/// and collects every cross-game tie. Cells `(n1, n2)` are independent and
/// evaluated in parallel; results merge in deterministic order.
pub fn verify_banzhaf_conjecture(n_max: u32) -> ConjectureReport {
    let mut cells = Vec::new();
    for n in 2..=n_max {
        for n1 in 1..n {
            cells.push((n1, n - n1));
        }
    }
    let per_cell: Vec<(u64, Vec<ConjectureViolation>, Vec<BanzhafTie>)> = cells
        .par_iter()
        .map(|&(n1, n2)| check_cell(n1, n2))
        .collect();

    let mut report = ConjectureReport {
        n_max,
        games_checked: 0,
        violations: Vec::new(),
        ties: Vec::new(),
    };
    for (count, violations, ties) in per_cell {
        report.games_checked += count;
        report.violations.extend(violations);
        report.ties.extend(ties);
    }
    report
}

fn check_cell(n1: u32, n2: u32) -> (u64, Vec<ConjectureViolation>, Vec<BanzhafTie>) {
    let n = n1 + n2;
    let table = BinomialTable::new(n as usize);
    // swing counts for all (a, b); index [a-1][b]
    let counts: Vec<Vec<(BigUint, BigUint)>> = (1..=n1)
        .map(|a| {
            (0..n2)
                .map(|b| {
                    let g = BipartiteGame { n1, n2, a, b };
                    (
                        swing_count_1_with(&table, &g),
                        swing_count_2_with(&table, &g),
                    )
                })
                .collect()
        })
        .collect();
    let denom = |c: &(BigUint, BigUint)| BigUint::from(n1) * &c.0 + BigUint::from(n2) * &c.1;
    let bz2 = |c: &(BigUint, BigUint)| ratio(c.1.clone(), denom(c));

    let mut violations = Vec::new();
    let mut ties = Vec::new();
    let mut checked = 0u64;
    for a in 1..=n1 {
        for b in 0..n2 {
            checked += 1;
            let here = &counts[(a - 1) as usize][b as usize];
            if b >= 1 {
                // conjecture (1): Bz2 strictly increases in b
                let prev = &counts[(a - 1) as usize][(b - 1) as usize];
                if &here.1 * denom(prev) <= &prev.1 * denom(here) {
                    violations.push(ConjectureViolation {
                        n1,
                        n2,
                        a,
                        b,
                        kind: ViolationKind::DeltaB,
                        lhs: bz2(here),
                        rhs: bz2(prev),
                    });
                }
            }
            if a >= 2 {
                // conjecture (2): Bz2 weakly decreases in a, equality iff b = 0
                let up = &counts[(a - 2) as usize][b as usize];
                let lhs = &up.1 * denom(here);
                let rhs = &here.1 * denom(up);
                let ok = if b == 0 { lhs == rhs } else { lhs > rhs };
                if !ok {
                    violations.push(ConjectureViolation {
                        n1,
                        n2,
                        a,
                        b,
                        kind: ViolationKind::DeltaA,
                        lhs: bz2(up),
                        rhs: bz2(here),
                    });
                }
            }
        }
    }

    // cross-game ties of Bz1 (equivalently Bz2) on this hierarchy
    let mut games: Vec<(u32, u32)> = Vec::new();
    for a in 1..=n1 {
        for b in 0..n2 {
            games.push((a, b));
        }
    }
    for i in 0..games.len() {
        for j in i + 1..games.len() {
            let (ga, gb) = (games[i], games[j]);
            if ga.1 == 0 && gb.1 == 0 {
                continue;
            }
            let ca = &counts[(ga.0 - 1) as usize][ga.1 as usize];
            let cb = &counts[(gb.0 - 1) as usize][gb.1 as usize];
            if &ca.0 * denom(cb) == &cb.0 * denom(ca) {
                ties.push(BanzhafTie {
                    n1,
                    n2,
                    first: ga,
                    second: gb,
                    first_numerators: ca.clone(),
                    second_numerators: cb.clone(),
                });
            }
        }
    }
    (checked, violations, ties)
}

/// The quoted counterexample-existence condition for semivalues on ten
/// players, hierarchy `(7, 3)`, games `(7,1)` vs `(1,2)`:
/// `207 p_3 p_8 + 315 p_3 p_9 + 105 p_3 p_10 - 3 p_4 p_8` (sizes count the
/// player). Negative iff the normalized semivalue ranks `(1,2)` above
/// `(7,1)`, breaking the dominance order.
pub fn semivalue_counterexample_condition(
    weights: &SemivalueWeights,
) -> Result<BigRational, PowerError> {
    if weights.num_players() != 10 {
        return Err(PowerError::InvalidWeights(format!(
            "condition is stated for n = 10, got {}",
            weights.num_players()
        )));
    }
    let p = |s: usize| weights.get(s).clone();
    let term = |k: i64, x: usize, y: usize| BigRational::from(BigInt::from(k)) * p(x) * p(y);
    Ok(term(207, 3, 8) + term(315, 3, 9) + term(105, 3, 10) - term(3, 4, 8))
}

/// Counts the linear extensions of the dominance-constraint poset on the
/// strictly ranked weighted games of hierarchy `(n1, n2)`: the number of
/// class-1 rankings consistent with the order constraints. The always-tied
/// `(c, 0)` top group is excluded.
pub fn constraint_extension_count(n1: u32, n2: u32) -> Result<u64, PowerError> {
    let mut nodes: Vec<(u32, u32)> = Vec::new();
    for a in 1..=n1 {
        for b in 1..n2 {
            let g = BipartiteGame::new(n1, n2, a, b)?;
            let verdict = classify_weighted(&g.invariants())
                .map_err(|e| PowerError::InvalidGame(e.to_string()))?;
            if verdict.is_weighted {
                nodes.push((a, b));
            }
        }
    }
    let k = nodes.len();
    if k > 20 {
        return Err(PowerError::PreconditionViolated(format!(
            "{k} strictly ranked weighted games; extension counting is capped at 20"
        )));
    }
    // predecessors[v]: bitmask of nodes that must rank above v
    let mut predecessors = vec![0u32; k];
    for (v, &(a2, b2)) in nodes.iter().enumerate() {
        for (u, &(a, b)) in nodes.iter().enumerate() {
            if u != v && a >= a2 && b <= b2 {
                predecessors[v] |= 1 << u;
            }
        }
    }
    let full: u32 = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let mut dp = vec![0u64; 1usize << k];
    dp[0] = 1;
    for mask in 0..=full {
        if dp[mask as usize] == 0 {
            continue;
        }
        for v in 0..k {
            if mask & (1 << v) == 0 && predecessors[v] & !mask == 0 {
                dp[(mask | (1 << v)) as usize] += dp[mask as usize];
            }
        }
    }
    Ok(dp[full as usize])
}
