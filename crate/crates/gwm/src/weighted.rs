//! Weightedness of games with minimum: the trivial-class reduction, the
//! classification rule (weighted iff the reduced game has one class, or two
//! classes with `m_2 ∈ {1, n_2 - 1}`), and exact-rational weight synthesis for
//! the weighted ones.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::GameError;
use crate::game::CompleteGameInvariants;
use crate::vector::{Hierarchy, ProfileVector};

/// A quota plus one weight per class, applied to every player of the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedRepresentation {
    quota: BigRational,
    class_weights: Vec<BigRational>,
}

impl WeightedRepresentation {
    pub fn new(quota: BigRational, class_weights: Vec<BigRational>) -> Result<Self, GameError> {
        if !quota.is_positive() {
            return Err(GameError::NonPositiveQuota);
        }
        if class_weights.iter().any(|w| w.is_negative()) {
            return Err(GameError::NegativeWeight);
        }
        Ok(WeightedRepresentation {
            quota,
            class_weights,
        })
    }

    pub fn quota(&self) -> &BigRational {
        &self.quota
    }

    pub fn class_weights(&self) -> &[BigRational] {
        &self.class_weights
    }

    /// Weight of a coalition with the given profile.
    pub fn profile_weight(&self, profile: &ProfileVector) -> Result<BigRational, GameError> {
        if profile.len() != self.class_weights.len() {
            return Err(GameError::LengthMismatch {
                left: profile.len(),
                right: self.class_weights.len(),
            });
        }
        Ok(profile
            .entries()
            .iter()
            .zip(&self.class_weights)
            .map(|(&m, w)| w * BigRational::from(BigInt::from(m)))
            .sum())
    }

    /// Expands class weights into one weight per player of `hierarchy`.
    pub fn player_weights(&self, hierarchy: &Hierarchy) -> Result<Vec<BigRational>, GameError> {
        if hierarchy.num_classes() != self.class_weights.len() {
            return Err(GameError::WeightCountMismatch {
                classes: hierarchy.num_classes(),
                weights: self.class_weights.len(),
            });
        }
        let mut out = Vec::with_capacity(hierarchy.num_players() as usize);
        for (&size, w) in hierarchy.class_sizes().iter().zip(&self.class_weights) {
            for _ in 0..size {
                out.push(w.clone());
            }
        }
        Ok(out)
    }

    /// Exhaustive profile sweep: every bounded profile is winning in `game`
    /// iff its weight reaches the quota.
    pub fn separates(&self, game: &CompleteGameInvariants) -> Result<bool, GameError> {
        for profile in game.hierarchy().profiles() {
            let winning = game.is_winning_entries(profile.entries());
            let weight = self.profile_weight(&profile)?;
            if winning != (weight >= self.quota) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Result of stripping trivial (veto / null) classes from a game with minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// The stripped game; `None` when every player is a veto or null player.
    pub game: Option<CompleteGameInvariants>,
    /// Number of veto players removed.
    pub veto_players: u32,
    /// Number of null players removed.
    pub null_players: u32,
}

/// Strips the veto class (when `m_1 = n_1`) and the null class (when
/// `m_t = 0`) from a game with minimum.
///
/// Valid invariants admit trivial classes only at the two ends: the class
/// separation condition pins every middle class to `1 <= m_h <= n_h - 1`, so
/// one pass suffices.
pub fn canonical_reduction(game: &CompleteGameInvariants) -> Result<Reduction, GameError> {
    let row = game.single_row()?.entries();
    let sizes = game.hierarchy().class_sizes();
    let t = sizes.len();

    let strip_veto = row[0] == sizes[0];
    let strip_null = t >= 2 && row[t - 1] == 0;
    let start = usize::from(strip_veto);
    let end = if strip_null { t - 1 } else { t };

    let veto_players = if strip_veto { sizes[0] } else { 0 };
    let null_players = if strip_null { sizes[t - 1] } else { 0 };

    if start >= end {
        return Ok(Reduction {
            game: None,
            veto_players,
            null_players,
        });
    }
    let reduced = CompleteGameInvariants::from_raw(&sizes[start..end], &[&row[start..end]])
        .expect("stripping trivial classes preserves the invariant conditions");
    Ok(Reduction {
        game: Some(reduced),
        veto_players,
        null_players,
    })
}

/// Outcome of the weightedness test for a game with minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightednessVerdict {
    pub is_weighted: bool,
    /// Number of veto classes stripped by the reduction (0 or 1).
    pub stripped_veto_classes: usize,
    /// Number of null classes stripped by the reduction (0 or 1).
    pub stripped_null_classes: usize,
    /// A separating representation on the original hierarchy; present iff
    /// `is_weighted`.
    pub representation: Option<WeightedRepresentation>,
}

fn big(v: u32) -> BigRational {
    BigRational::from(BigInt::from(v))
}

/// Classifies a game with minimum as weighted or not, synthesizing an exact
/// representation on the original hierarchy when it is.
///
/// After stripping trivial classes: an empty or single-class game is
/// weighted; a two-class game is weighted iff `m_2 ∈ {1, n_2 - 1}` (weights
/// `w_1 = 1`, `w_2` the midpoint of the open interval
/// `(c/(1+c), 1/(n_2 - m_2))` with `c = min(n_1 - m_1, m_2 - 1)`); three or
/// more classes are never weighted. A stripped veto class gets weight
/// exceeding the sum of all other weights, the quota raised accordingly;
/// a stripped null class gets weight zero.
pub fn classify_weighted(game: &CompleteGameInvariants) -> Result<WeightednessVerdict, GameError> {
    let reduction = canonical_reduction(game)?;
    let sizes = game.hierarchy().class_sizes();
    let row = game.single_row()?.entries();
    let t = sizes.len();
    let strip_veto = row[0] == sizes[0];
    let strip_null = t >= 2 && row[t - 1] == 0;
    let start = usize::from(strip_veto);

    // Weights and quota for the reduced part, laid out on the original classes.
    let mut weights = vec![BigRational::zero(); t];
    let mut quota = BigRational::zero();
    let weighted = match &reduction.game {
        None => true,
        Some(reduced) => {
            let rn = reduced.hierarchy().class_sizes();
            let rm = reduced.rows()[0].entries();
            match rn.len() {
                1 => {
                    weights[start] = BigRational::one();
                    quota = big(rm[0]);
                    true
                }
                2 if rm[1] == 1 || rm[1] == rn[1] - 1 => {
                    let c = (rn[0] - rm[0]).min(rm[1] - 1);
                    let lower = big(c) / big(1 + c);
                    let upper = BigRational::one() / big(rn[1] - rm[1]);
                    let w2 = (lower + upper) / big(2);
                    quota = big(rm[0]) + &w2 * big(rm[1]);
                    weights[start] = BigRational::one();
                    weights[start + 1] = w2;
                    true
                }
                _ => false,
            }
        }
    };

    if !weighted {
        return Ok(WeightednessVerdict {
            is_weighted: false,
            stripped_veto_classes: usize::from(strip_veto),
            stripped_null_classes: usize::from(strip_null),
            representation: None,
        });
    }

    if strip_veto {
        let others: BigRational = weights
            .iter()
            .zip(sizes)
            .skip(1)
            .map(|(w, &n)| w * big(n))
            .sum();
        let veto_weight = others + BigRational::one();
        quota += &veto_weight * big(sizes[0]);
        weights[0] = veto_weight;
    }

    let representation = WeightedRepresentation::new(quota, weights)?;
    debug_assert!(
        game.hierarchy().grid_size() > 1 << 16 || representation.separates(game)?,
        "synthesized representation must separate winning from losing"
    );
    Ok(WeightednessVerdict {
        is_weighted: true,
        stripped_veto_classes: usize::from(strip_veto),
        stripped_null_classes: usize::from(strip_null),
        representation: Some(representation),
    })
}

/// The two losing vectors of the non-weightedness argument, stated on the
/// reduced game.
///
/// For a reduced two-class game with `2 <= m_2 <= n_2 - 2` they are
/// `(m_1 - 1, n_2)` and `(m_1 + c, m_2 - 1 - c)`; the induced constraints on
/// `w_2` (with `w_1 = 1`) are contradictory. For three or more classes they
/// are `(m_1 - 1, n_2, ..., n_t)` and `(m_1 + 1, m_2 - 1, m_3 - 1, n_4, ...,
/// n_t)`, forcing both `w_2 + w_3 < 1` and `w_2 + w_3 > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonWeightedWitness {
    /// The reduced game the witness vectors live on.
    pub reduced: CompleteGameInvariants,
    pub losing: [ProfileVector; 2],
}

/// Returns the proof witness for a non-weighted game with minimum, or `None`
/// when the game is weighted.
pub fn unweightedness_witness(
    game: &CompleteGameInvariants,
) -> Result<Option<NonWeightedWitness>, GameError> {
    let reduction = canonical_reduction(game)?;
    let reduced = match reduction.game {
        None => return Ok(None),
        Some(g) => g,
    };
    let rn = reduced.hierarchy().class_sizes().to_vec();
    let rm = reduced.rows()[0].entries().to_vec();
    let t = rn.len();
    let witness = match t {
        1 => None,
        2 if rm[1] == 1 || rm[1] == rn[1] - 1 => None,
        2 => {
            let c = (rn[0] - rm[0]).min(rm[1] - 1);
            let first = ProfileVector::new(vec![rm[0] - 1, rn[1]])?;
            let second = ProfileVector::new(vec![rm[0] + c, rm[1] - 1 - c])?;
            Some([first, second])
        }
        _ => {
            let mut first = rn.clone();
            first[0] = rm[0] - 1;
            let mut second = rn.clone();
            second[0] = rm[0] + 1;
            second[1] = rm[1] - 1;
            second[2] = rm[2] - 1;
            Some([ProfileVector::new(first)?, ProfileVector::new(second)?])
        }
    };
    Ok(witness.map(|losing| NonWeightedWitness { reduced, losing }))
}
