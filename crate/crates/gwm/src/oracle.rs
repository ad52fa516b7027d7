//! Ground-truth engine over explicit coalitions.
//!
//! Materializes a game as a dense winning-set over all `2^n` coalitions and
//! recomputes desirability classes, shift-minimal winning vectors, swings,
//! indices and duals straight from the definitions. The
//! implementation favors being obviously correct over being fast; `n` is
//! capped at [`MAX_PLAYERS`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::factorials;
use crate::error::OracleError;
use crate::game::CompleteGameInvariants;
use crate::vector::{Hierarchy, ProfileVector};

/// Hard cap keeping the dense winning set around 4M entries.
pub const MAX_PLAYERS: usize = 22;

/// A simple game as an explicit set of winning coalitions over players
/// `0..n`, coalitions encoded as n-bit sets.
#[derive(Clone, PartialEq, Eq)]
pub struct ExplicitGame {
    n: usize,
    winning: Vec<u64>,
}

impl ExplicitGame {
    /// Builds a game from a winning test and validates the simple-game
    /// conditions: the empty coalition loses, the grand coalition wins, and
    /// winning is monotone under inclusion.
    pub fn new(n: usize, is_winning: impl FnMut(u32) -> bool) -> Result<Self, OracleError> {
        let game = ExplicitGame::new_unchecked(n, is_winning)?;
        game.validate()?;
        Ok(game)
    }

    /// Builds without the monotonicity sweep; used where winning is monotone
    /// by construction. `validate` re-checks on demand.
    pub(crate) fn new_unchecked(
        n: usize,
        mut is_winning: impl FnMut(u32) -> bool,
    ) -> Result<Self, OracleError> {
        if n == 0 || n > MAX_PLAYERS {
            return Err(OracleError::TooLarge {
                players: n,
                cap: MAX_PLAYERS,
            });
        }
        let cells = 1usize << n;
        let mut winning = vec![0u64; cells.div_ceil(64)];
        for s in 0..cells as u32 {
            if is_winning(s) {
                winning[(s >> 6) as usize] |= 1 << (s & 63);
            }
        }
        Ok(ExplicitGame { n, winning })
    }

    pub fn num_players(&self) -> usize {
        self.n
    }

    pub fn is_winning(&self, coalition: u32) -> bool {
        self.winning[(coalition >> 6) as usize] & (1 << (coalition & 63)) != 0
    }

    fn grand(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    pub fn winning_count(&self) -> u64 {
        self.winning.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Re-checks the simple-game conditions.
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.is_winning(0) {
            return Err(OracleError::EmptyWins);
        }
        if !self.is_winning(self.grand()) {
            return Err(OracleError::GrandLoses);
        }
        for s in 0..=self.grand() {
            if !self.is_winning(s) {
                continue;
            }
            for i in 0..self.n {
                let sup = s | (1 << i);
                if !self.is_winning(sup) {
                    return Err(OracleError::NotMonotone(s));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for ExplicitGame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ExplicitGame(n={}, |W|={})",
            self.n,
            self.winning_count()
        )
    }
}

/// Materializes the unique complete game with the given invariants: players
/// are numbered class by class, strongest class first, and a coalition wins
/// iff its class profile is a winning vector.
pub fn realize(game: &CompleteGameInvariants) -> Result<ExplicitGame, OracleError> {
    let n = game.hierarchy().num_players() as usize;
    if n > MAX_PLAYERS {
        return Err(OracleError::TooLarge {
            players: n,
            cap: MAX_PLAYERS,
        });
    }
    let sizes = game.hierarchy().class_sizes();
    let mut class_masks = Vec::with_capacity(sizes.len());
    let mut offset = 0u32;
    for &size in sizes {
        let mask = (((1u64 << size) - 1) << offset) as u32;
        class_masks.push(mask);
        offset += size;
    }
    let mut profile = vec![0u32; sizes.len()];
    ExplicitGame::new_unchecked(n, |s| {
        for (j, &mask) in class_masks.iter().enumerate() {
            profile[j] = (s & mask).count_ones();
        }
        game.is_winning_entries(&profile)
    })
}

/// Equivalence classes of equally desirable players, strongest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesirabilityPartition {
    classes: Vec<Vec<usize>>,
}

impl DesirabilityPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn hierarchy(&self) -> Hierarchy {
        Hierarchy::new(self.classes.iter().map(|c| c.len() as u32).collect())
            .expect("classes are non-empty")
    }
}

/// Whether player `i` is at least as desirable as `j`: swapping `j` for `i`
/// never turns a winning coalition losing.
fn at_least_as_desirable(game: &ExplicitGame, i: usize, j: usize) -> bool {
    let (bi, bj) = (1u32 << i, 1u32 << j);
    for s in 0..=game.grand() {
        if s & bj != 0 && s & bi == 0 && game.is_winning(s) && !game.is_winning((s ^ bj) | bi) {
            return false;
        }
    }
    true
}

/// Recovers the desirability partition of a complete game; errors with the
/// offending pair when some two players are incomparable.
#[allow(clippy::needless_range_loop)]
pub fn desirability(game: &ExplicitGame) -> Result<DesirabilityPartition, OracleError> {
    let n = game.num_players();
    let mut ge = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            ge[i][j] = i == j || at_least_as_desirable(game, i, j);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if !ge[i][j] && !ge[j][i] {
                return Err(OracleError::NotComplete { i, j });
            }
        }
    }
    let mut players: Vec<usize> = (0..n).collect();
    // total preorder: sort strongest first
    players.sort_by(|&i, &j| match (ge[i][j], ge[j][i]) {
        (true, true) => i.cmp(&j),
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        (false, false) => unreachable!("checked above"),
    });
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for p in players {
        match classes.last_mut() {
            Some(class) if ge[p][class[0]] && ge[class[0]][p] => class.push(p),
            _ => classes.push(vec![p]),
        }
    }
    Ok(DesirabilityPartition { classes })
}

/// Recovers the characteristic invariants from an explicit complete game:
/// desirability classes give the hierarchy, and the shift-minimal winning
/// vectors are the winning profiles whose lower covers all lose.
pub fn extract_invariants(game: &ExplicitGame) -> Result<CompleteGameInvariants, OracleError> {
    let partition = desirability(game)?;
    let hierarchy = partition.hierarchy();
    let sizes = hierarchy.class_sizes().to_vec();
    let t = sizes.len();

    // Representative coalition per profile; all coalitions of one profile
    // agree because players within a class are interchangeable.
    let representative = |profile: &[u32]| -> u32 {
        let mut s = 0u32;
        for (class, &take) in partition.classes().iter().zip(profile) {
            for &p in class.iter().take(take as usize) {
                s |= 1 << p;
            }
        }
        s
    };

    let winning: Vec<ProfileVector> = hierarchy
        .profiles()
        .filter(|p| game.is_winning(representative(p.entries())))
        .collect();
    let winning_set: std::collections::HashSet<&[u32]> =
        winning.iter().map(|p| p.entries()).collect();

    let mut rows: Vec<ProfileVector> = Vec::new();
    'candidates: for w in &winning {
        // lower covers: demote one player a class down, or drop one weakest
        let x = w.entries();
        let mut cover = x.to_vec();
        for k in 0..t - 1 {
            if x[k] > 0 && x[k + 1] < sizes[k + 1] {
                cover[k] -= 1;
                cover[k + 1] += 1;
                let covered_wins = winning_set.contains(&cover[..]);
                cover[k] += 1;
                cover[k + 1] -= 1;
                if covered_wins {
                    continue 'candidates;
                }
            }
        }
        if x[t - 1] > 0 {
            cover[t - 1] -= 1;
            let covered_wins = winning_set.contains(&cover[..]);
            cover[t - 1] += 1;
            if covered_wins {
                continue 'candidates;
            }
        }
        rows.push(w.clone());
    }
    rows.sort_by(|a, b| b.entries().cmp(a.entries()));
    Ok(CompleteGameInvariants::new(hierarchy, rows)?)
}

/// The dual game: `S` wins iff the complement of `S` loses.
pub fn explicit_dual(game: &ExplicitGame) -> ExplicitGame {
    let grand = game.grand();
    ExplicitGame::new_unchecked(game.num_players(), |s| !game.is_winning(grand ^ s))
        .expect("same player count")
}

/// Per-player swing counts and exact indices, straight from the definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerPower {
    pub swings: u64,
    /// Swing counts by coalition cardinality.
    pub swings_by_size: BTreeMap<u32, u64>,
    pub ss: BigRational,
    pub bz_rel: BigRational,
    pub bz_abs: BigRational,
}

/// Swings, swings-by-size, Shapley-Shubik and both Banzhaf indices for every
/// player, by direct enumeration of all coalitions.
#[allow(clippy::needless_range_loop)]
pub fn brute_power(game: &ExplicitGame) -> Vec<PlayerPower> {
    let n = game.num_players();
    let mut by_size: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); n];
    for s in 0..=game.grand() {
        if !game.is_winning(s) {
            continue;
        }
        let size = s.count_ones();
        for i in 0..n {
            let bit = 1u32 << i;
            if s & bit != 0 && !game.is_winning(s ^ bit) {
                *by_size[i].entry(size).or_insert(0) += 1;
            }
        }
    }
    let fact = factorials(n);
    let total_swings: u64 = by_size.iter().map(|m| m.values().sum::<u64>()).sum();
    let half_space = BigUint::from(1u8) << (n - 1);
    by_size
        .into_iter()
        .map(|sizes| {
            let swings: u64 = sizes.values().sum();
            let mut ss = BigRational::zero();
            for (&s, &count) in &sizes {
                let num = &fact[s as usize - 1] * &fact[n - s as usize] * BigUint::from(count);
                ss += BigRational::new(BigInt::from(num), BigInt::from(fact[n].clone()));
            }
            PlayerPower {
                swings,
                swings_by_size: sizes,
                ss,
                bz_rel: BigRational::new(BigInt::from(swings), BigInt::from(total_swings)),
                bz_abs: BigRational::new(BigInt::from(swings), BigInt::from(half_space.clone())),
            }
        })
        .collect()
}

/// Coalitions in which `player` is a swing; the raw sets behind the counts.
pub fn swing_coalitions(game: &ExplicitGame, player: usize) -> Vec<u32> {
    let bit = 1u32 << player;
    (0..=game.grand())
        .filter(|&s| s & bit != 0 && game.is_winning(s) && !game.is_winning(s ^ bit))
        .collect()
}

/// Exhaustively verifies a per-player weighted representation: every
/// coalition wins iff its weight reaches the quota.
pub fn check_weighted_representation(
    game: &ExplicitGame,
    quota: &BigRational,
    player_weights: &[BigRational],
) -> Result<bool, OracleError> {
    let n = game.num_players();
    if player_weights.len() != n {
        return Err(OracleError::WeightCountMismatch {
            players: n,
            weights: player_weights.len(),
        });
    }
    for s in 0..=game.grand() {
        let mut weight = BigRational::zero();
        for (i, w) in player_weights.iter().enumerate() {
            if s & (1 << i) != 0 {
                weight += w;
            }
        }
        if game.is_winning(s) != (&weight >= quota) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn example_one() -> CompleteGameInvariants {
        CompleteGameInvariants::from_raw(&[2, 3], &[&[1, 2]]).unwrap()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn realize_example_one() {
        let e = realize(&example_one()).unwrap();
        // all coalitions of size >= 3 except {3,4,5}: 9 + 5 + 1
        assert_eq!(e.winning_count(), 15);
        assert!(e.is_winning(0b00111)); // {1,2,3}
        assert!(e.is_winning(0b01101)); // {1,3,4}
        assert!(!e.is_winning(0b11100)); // {3,4,5}
        assert!(!e.is_winning(0b00011)); // {1,2}
        e.validate().unwrap();
    }

    #[test]
    fn realize_dictator() {
        let g = CompleteGameInvariants::from_raw(&[1], &[&[1]]).unwrap();
        let e = realize(&g).unwrap();
        assert_eq!(e.winning_count(), 1);
        assert!(e.is_winning(1));
    }

    #[test]
    fn too_large_is_rejected() {
        let g = CompleteGameInvariants::from_raw(&[2, 30], &[&[1, 6]]).unwrap();
        assert!(matches!(
            realize(&g),
            Err(OracleError::TooLarge { players: 32, .. })
        ));
    }

    #[test]
    fn desirability_example_one() {
        let e = realize(&example_one()).unwrap();
        let partition = desirability(&e).unwrap();
        assert_eq!(partition.classes(), &[vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn desirability_symmetric_game() {
        // quota-3 majority of five symmetric players
        let e = ExplicitGame::new(5, |s| s.count_ones() >= 3).unwrap();
        let partition = desirability(&e).unwrap();
        assert_eq!(partition.classes().len(), 1);
    }

    #[test]
    fn desirability_intro_six_player_game() {
        let g = CompleteGameInvariants::from_raw(&[2, 4], &[&[1, 2]]).unwrap();
        let e = realize(&g).unwrap();
        let partition = desirability(&e).unwrap();
        assert_eq!(partition.classes(), &[vec![0, 1], vec![2, 3, 4, 5]]);
    }

    #[test]
    fn incomplete_game_is_detected() {
        // winning iff contains both of {0,1} or both of {2,3}: 0 and 2 are
        // incomparable
        let e = ExplicitGame::new(4, |s| s & 0b0011 == 0b0011 || s & 0b1100 == 0b1100).unwrap();
        assert!(matches!(
            desirability(&e),
            Err(OracleError::NotComplete { .. })
        ));
    }

    #[test]
    fn extract_example_one() {
        let e = realize(&example_one()).unwrap();
        let g = extract_invariants(&e).unwrap();
        assert_eq!(g, example_one());
    }

    #[test]
    fn extract_dictator_with_nulls() {
        let e = ExplicitGame::new(4, |s| s & 1 != 0).unwrap();
        let g = extract_invariants(&e).unwrap();
        assert_eq!(g.hierarchy().class_sizes(), &[1, 3]);
        assert_eq!(g.rows().len(), 1);
        assert_eq!(g.rows()[0].entries(), &[1, 0]);
    }

    #[test]
    fn dual_is_involution_and_matches_invariant_dual() {
        let g = example_one();
        let e = realize(&g).unwrap();
        let d = explicit_dual(&e);
        d.validate().unwrap();
        assert_eq!(explicit_dual(&d), e);
        assert_eq!(extract_invariants(&d).unwrap(), g.dual().unwrap());
    }

    #[test]
    fn brute_power_example_one() {
        let e = realize(&example_one()).unwrap();
        let power = brute_power(&e);
        assert_eq!(power[0].swings, 7);
        assert_eq!(power[0].ss, rat(1, 4));
        assert_eq!(power[2].swings, 5);
        assert_eq!(power[2].ss, rat(1, 6));
        // players of one class have identical power
        assert_eq!(power[0], power[1]);
        assert_eq!(power[2], power[3]);
        assert_eq!(power[3], power[4]);
        // swing sets match the counts
        assert_eq!(swing_coalitions(&e, 0).len() as u64, power[0].swings);
    }

    #[test]
    fn brute_power_dictator() {
        let e = ExplicitGame::new(3, |s| s & 1 != 0).unwrap();
        let power = brute_power(&e);
        assert_eq!(power[0].ss, BigRational::one());
        assert!(power[1].ss.is_zero());
        assert!(power[2].swings == 0);
    }

    #[test]
    fn representation_checks() {
        let e = realize(&example_one()).unwrap();
        let w = |v: (i64, i64)| rat(v.0, v.1);
        let weights = vec![w((1, 1)), w((1, 1)), w((3, 4)), w((3, 4)), w((3, 4))];
        assert!(check_weighted_representation(&e, &rat(5, 2), &weights).unwrap());
        // wrong quota fails
        assert!(!check_weighted_representation(&e, &rat(3, 1), &weights).unwrap());

        // [3; 1,1,1,1,1,1] on its own induced game
        let six = ExplicitGame::new(6, |s| s.count_ones() >= 3).unwrap();
        let ones = vec![BigRational::one(); 6];
        assert!(check_weighted_representation(&six, &rat(3, 1), &ones).unwrap());
    }

    #[test]
    fn integer_representation_dualizes_to_t_minus_q_plus_one() {
        // [q; w] integer representation: the dual is represented by [T-q+1; w]
        let weights: Vec<i64> = vec![3, 2, 1, 1];
        let quota = 4i64;
        let total: i64 = weights.iter().sum();
        let wsum = |s: u32| -> i64 {
            weights
                .iter()
                .enumerate()
                .filter(|(i, _)| s & (1 << i) != 0)
                .map(|(_, w)| w)
                .sum()
        };
        let e = ExplicitGame::new(4, |s| wsum(s) >= quota).unwrap();
        let d = explicit_dual(&e);
        let rep: Vec<BigRational> = weights.iter().map(|&w| rat(w, 1)).collect();
        assert!(check_weighted_representation(&d, &rat(total - quota + 1, 1), &rep).unwrap());
    }
}
