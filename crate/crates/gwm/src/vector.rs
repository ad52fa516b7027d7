//! Profile vectors (coalition types) and the orders used to compare them.
//!
//! A profile `(m_1, ..., m_t)` counts the players taken from each equivalence
//! class, strongest class first. Three orders matter:
//!
//! * componentwise `>=`,
//! * the shift order: prefix-sum dominance (a coalition can trade a weaker
//!   member for a stronger one),
//! * decreasing lexicographic order, used to canonicalize matrices.

use std::cmp::Ordering;
use std::fmt;

use crate::error::GameError;

/// Outcome of comparing two profiles under the shift order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftOrdering {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl ShiftOrdering {
    /// `self` is `Greater` or `Equal`.
    pub fn is_ge(self) -> bool {
        matches!(self, ShiftOrdering::Greater | ShiftOrdering::Equal)
    }

    /// `self` is `Less` or `Equal`.
    pub fn is_le(self) -> bool {
        matches!(self, ShiftOrdering::Less | ShiftOrdering::Equal)
    }
}

/// A coalition type: how many players are taken from each class.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProfileVector {
    entries: Vec<u32>,
}

impl ProfileVector {
    pub fn new(entries: Vec<u32>) -> Result<Self, GameError> {
        if entries.is_empty() {
            return Err(GameError::EmptyProfile);
        }
        Ok(ProfileVector { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of players in a coalition of this type.
    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Shift-order comparison via prefix sums.
    pub fn cmp_shift(&self, other: &Self) -> Result<ShiftOrdering, GameError> {
        if self.len() != other.len() {
            return Err(GameError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(shift_cmp(&self.entries, &other.entries))
    }

    /// Decreasing lexicographic comparison: `Greater` means `self` comes
    /// first in a canonical matrix.
    pub fn cmp_lex(&self, other: &Self) -> Result<Ordering, GameError> {
        if self.len() != other.len() {
            return Err(GameError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.entries.cmp(&other.entries))
    }

    /// Componentwise `>=`.
    pub fn ge_componentwise(&self, other: &Self) -> Result<bool, GameError> {
        if self.len() != other.len() {
            return Err(GameError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b))
    }
}

impl fmt::Debug for ProfileVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ProfileVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shift comparison on raw slices; lengths must already match.
pub(crate) fn shift_cmp(a: &[u32], b: &[u32]) -> ShiftOrdering {
    debug_assert_eq!(a.len(), b.len());
    let (mut ge, mut le) = (true, true);
    let (mut sa, mut sb) = (0u64, 0u64);
    for (x, y) in a.iter().zip(b) {
        sa += u64::from(*x);
        sb += u64::from(*y);
        if sa < sb {
            ge = false;
        } else if sa > sb {
            le = false;
        }
    }
    match (ge, le) {
        (true, true) => ShiftOrdering::Equal,
        (true, false) => ShiftOrdering::Greater,
        (false, true) => ShiftOrdering::Less,
        (false, false) => ShiftOrdering::Incomparable,
    }
}

/// Class sizes `(n_1, ..., n_t)` of a complete game, strongest class first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hierarchy {
    class_sizes: Vec<u32>,
}

impl Hierarchy {
    pub fn new(class_sizes: Vec<u32>) -> Result<Self, GameError> {
        if class_sizes.is_empty() {
            return Err(GameError::EmptyHierarchy);
        }
        if let Some(index) = class_sizes.iter().position(|&n| n == 0) {
            return Err(GameError::EmptyClass { index });
        }
        Ok(Hierarchy { class_sizes })
    }

    pub fn class_sizes(&self) -> &[u32] {
        &self.class_sizes
    }

    /// Number of equivalence classes, `t`.
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    /// Total number of players, `n`.
    pub fn num_players(&self) -> u32 {
        self.class_sizes.iter().sum()
    }

    /// Whether `profile` fits inside this hierarchy (same length, entrywise
    /// within class sizes).
    pub fn contains(&self, profile: &ProfileVector) -> bool {
        profile.len() == self.num_classes()
            && profile
                .entries()
                .iter()
                .zip(&self.class_sizes)
                .all(|(m, n)| m <= n)
    }

    /// Number of profiles bounded by this hierarchy: `prod (n_j + 1)`.
    pub fn grid_size(&self) -> u128 {
        self.class_sizes
            .iter()
            .map(|&n| u128::from(n) + 1)
            .product()
    }

    /// Iterates every bounded profile in ascending lexicographic order.
    pub fn profiles(&self) -> ProfileIter {
        ProfileIter {
            bounds: self.class_sizes.clone(),
            next: Some(vec![0; self.class_sizes.len()]),
        }
    }
}

impl fmt::Debug for Hierarchy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.class_sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Odometer over all profiles bounded by a hierarchy.
pub struct ProfileIter {
    bounds: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for ProfileIter {
    type Item = ProfileVector;

    fn next(&mut self) -> Option<ProfileVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                self.next = None;
                break;
            }
            k -= 1;
            if succ[k] < self.bounds[k] {
                succ[k] += 1;
                for v in &mut succ[k + 1..] {
                    *v = 0;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(ProfileVector { entries: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(e: &[u32]) -> ProfileVector {
        ProfileVector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            pv(&[2, 1]).cmp_shift(&pv(&[1, 2])).unwrap(),
            ShiftOrdering::Greater
        );
        assert_eq!(
            pv(&[2, 0]).cmp_shift(&pv(&[0, 3])).unwrap(),
            ShiftOrdering::Incomparable
        );
        assert_eq!(
            pv(&[1, 2]).cmp_shift(&pv(&[1, 2])).unwrap(),
            ShiftOrdering::Equal
        );
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            pv(&[1, 2, 1]).cmp_lex(&pv(&[1, 1, 3])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(pv(&[0, 3]).cmp_lex(&pv(&[2, 0])).unwrap(), Ordering::Less);
        assert_eq!(pv(&[1, 2]).cmp_lex(&pv(&[1, 2])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(
            pv(&[1, 2]).cmp_shift(&pv(&[1, 2, 3])),
            Err(GameError::LengthMismatch { left: 2, right: 3 })
        ));
        assert!(pv(&[1]).cmp_lex(&pv(&[1, 0])).is_err());
    }

    /// Relations read off the Hasse diagram for hierarchy (2,3).
    #[test]
    fn hasse_2_3_relations() {
        assert!(pv(&[0, 3]).cmp_shift(&pv(&[1, 3])).unwrap().is_le());
        assert!(pv(&[2, 0]).cmp_shift(&pv(&[2, 1])).unwrap().is_le());
        assert_eq!(
            pv(&[2, 0]).cmp_shift(&pv(&[1, 2])).unwrap(),
            ShiftOrdering::Incomparable
        );
        // (1,1) sits below both (2,0) and (1,2)
        assert!(pv(&[1, 1]).cmp_shift(&pv(&[2, 0])).unwrap().is_le());
        assert!(pv(&[1, 1]).cmp_shift(&pv(&[1, 2])).unwrap().is_le());
    }

    /// Relations read off the Hasse diagram for hierarchy (2,2).
    #[test]
    fn hasse_2_2_relations() {
        assert_eq!(
            pv(&[1, 0]).cmp_shift(&pv(&[0, 2])).unwrap(),
            ShiftOrdering::Incomparable
        );
        assert!(pv(&[1, 0]).cmp_shift(&pv(&[1, 1])).unwrap().is_le());
        assert!(pv(&[0, 2]).cmp_shift(&pv(&[1, 1])).unwrap().is_le());
        assert!(pv(&[0, 1]).cmp_shift(&pv(&[1, 0])).unwrap().is_le());
    }

    #[test]
    fn hierarchy_grid() {
        let h = Hierarchy::new(vec![2, 3]).unwrap();
        assert_eq!(h.num_players(), 5);
        assert_eq!(h.grid_size(), 12);
        let all: Vec<_> = h.profiles().collect();
        assert_eq!(all.len(), 12);
        assert_eq!(all[0].entries(), &[0, 0]);
        assert_eq!(all[11].entries(), &[2, 3]);
        assert!(h.contains(&pv(&[2, 3])));
        assert!(!h.contains(&pv(&[3, 0])));
        assert!(!h.contains(&pv(&[1, 1, 1])));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(
            Hierarchy::new(vec![]),
            Err(GameError::EmptyHierarchy)
        ));
        assert!(matches!(
            Hierarchy::new(vec![2, 0]),
            Err(GameError::EmptyClass { index: 1 })
        ));
        assert!(matches!(
            ProfileVector::new(vec![]),
            Err(GameError::EmptyProfile)
        ));
    }
}
