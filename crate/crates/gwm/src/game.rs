//! Characteristic invariants of complete games: validation, the winning-vector
//! test, shift-maximal losing vectors and duals.
//!
//! A pair `(ñ, M)` of class sizes plus a matrix of shift-minimal winning
//! vectors identifies a complete game uniquely once the four matrix
//! conditions hold. The winning vectors are exactly the shift-order up-set of
//! the rows of `M`.

use std::cmp::Ordering;

use crate::error::{GameError, InvariantCondition};
use crate::vector::{shift_cmp, Hierarchy, ProfileVector, ShiftOrdering};

/// Grid-sweep fallbacks refuse hierarchies with more profiles than this.
const GRID_SWEEP_LIMIT: u128 = 1 << 24;

/// A validated pair `(ñ, M)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CompleteGameInvariants {
    hierarchy: Hierarchy,
    rows: Vec<ProfileVector>,
}

impl CompleteGameInvariants {
    /// Validates the four matrix conditions and returns the invariants, or an
    /// error naming the first violated condition.
    pub fn new(hierarchy: Hierarchy, rows: Vec<ProfileVector>) -> Result<Self, GameError> {
        if rows.is_empty() {
            return Err(GameError::EmptyMatrix);
        }
        let t = hierarchy.num_classes();
        for row in &rows {
            if row.len() != t {
                return Err(GameError::LengthMismatch {
                    left: row.len(),
                    right: t,
                });
            }
        }
        let sizes = hierarchy.class_sizes();

        // (i) m_{1,1} > 0 and 0 <= m_{i,j} <= n_j
        if rows[0].entries()[0] == 0 {
            return Err(GameError::ConditionViolation {
                which: InvariantCondition::I,
                detail: "first row must take at least one player from the strongest class"
                    .to_string(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, (&m, &n)) in row.entries().iter().zip(sizes).enumerate() {
                if m > n {
                    return Err(GameError::ConditionViolation {
                        which: InvariantCondition::I,
                        detail: format!("row {i} has m_{{{i},{j}}} = {m} > n_{j} = {n}"),
                    });
                }
            }
        }

        // (ii) rows pairwise incomparable under the shift order
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let rel = shift_cmp(rows[i].entries(), rows[j].entries());
                if rel != ShiftOrdering::Incomparable {
                    return Err(GameError::ConditionViolation {
                        which: InvariantCondition::II,
                        detail: format!(
                            "rows {i} and {j} are comparable: {:?} vs {:?}",
                            rows[i], rows[j]
                        ),
                    });
                }
            }
        }

        // (iii) each adjacent class pair is separated by some row
        for j in 0..t - 1 {
            let ok = rows
                .iter()
                .any(|r| r.entries()[j] > 0 && r.entries()[j + 1] < sizes[j + 1]);
            if !ok {
                return Err(GameError::ConditionViolation {
                    which: InvariantCondition::III,
                    detail: format!(
                        "no row has m_{{i,{j}}} > 0 and m_{{i,{k}}} < n_{k}; classes {j} and {k} \
                         would collapse",
                        k = j + 1
                    ),
                });
            }
        }

        // (iv) rows strictly decreasing lexicographically
        for (i, pair) in rows.windows(2).enumerate() {
            if pair[0].cmp_lex(&pair[1])? != Ordering::Greater {
                return Err(GameError::ConditionViolation {
                    which: InvariantCondition::IV,
                    detail: format!(
                        "rows {i} and {} are not in strictly decreasing lexicographic order",
                        i + 1
                    ),
                });
            }
        }

        Ok(CompleteGameInvariants { hierarchy, rows })
    }

    /// Convenience constructor from raw slices.
    pub fn from_raw(class_sizes: &[u32], rows: &[&[u32]]) -> Result<Self, GameError> {
        let h = Hierarchy::new(class_sizes.to_vec())?;
        let rows = rows
            .iter()
            .map(|r| ProfileVector::new(r.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        CompleteGameInvariants::new(h, rows)
    }

    pub fn hierarchy(&self) -> &Hierarchy {
        &self.hierarchy
    }

    /// Rows of `M`: the shift-minimal winning vectors, lex-decreasing.
    pub fn rows(&self) -> &[ProfileVector] {
        &self.rows
    }

    /// `r`, the number of shift-minimal winning vectors.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// The single row of a game with minimum.
    pub fn single_row(&self) -> Result<&ProfileVector, GameError> {
        if self.rows.len() != 1 {
            return Err(GameError::NotSingleRow {
                rows: self.rows.len(),
            });
        }
        Ok(&self.rows[0])
    }

    /// Whether `x` is a winning vector: `x` shift-dominates some row of `M`.
    pub fn is_winning_vector(&self, x: &ProfileVector) -> Result<bool, GameError> {
        if !self.hierarchy.contains(x) {
            return Err(GameError::ProfileOutOfRange {
                profile: x.entries().to_vec(),
                hierarchy: self.hierarchy.class_sizes().to_vec(),
            });
        }
        Ok(self.is_winning_entries(x.entries()))
    }

    pub(crate) fn is_winning_entries(&self, x: &[u32]) -> bool {
        self.rows
            .iter()
            .any(|row| shift_cmp(x, row.entries()).is_ge())
    }

    /// Shift-maximal losing vectors of a game with minimum, via the closed
    /// form: row i has entries
    /// `a_{i,j} = max(0, min(n_j, -1 + sum_{h<=i} m_h - sum_{h<j} n_h))`
    /// for `j <= i` and `n_j` beyond, with the last row dropped when the game
    /// has null players (`m_t = 0`), then deduplicated and filtered to the
    /// shift-maximal ones.
    pub fn shift_maximal_losing(&self) -> Result<Vec<ProfileVector>, GameError> {
        let m = self.single_row()?.entries();
        let sizes = self.hierarchy.class_sizes();
        let t = sizes.len();

        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(t);
        let mut m_prefix: i64 = 0;
        for i in 0..t {
            m_prefix += i64::from(m[i]);
            let mut row = vec![0u32; t];
            let mut n_prefix: i64 = 0;
            for j in 0..=i {
                let v = (m_prefix - 1 - n_prefix).min(i64::from(sizes[j])).max(0);
                row[j] = v as u32;
                n_prefix += i64::from(sizes[j]);
            }
            row[i + 1..].copy_from_slice(&sizes[i + 1..]);
            rows.push(row);
        }
        if t >= 2 && m[t - 1] == 0 {
            rows.pop();
        }

        rows.sort_by(|a, b| b.cmp(a));
        rows.dedup();
        let maximal: Vec<ProfileVector> = rows
            .iter()
            .filter(|r| {
                !rows
                    .iter()
                    .any(|o| o != *r && shift_cmp(o, r) == ShiftOrdering::Greater)
            })
            .map(|r| ProfileVector::new(r.clone()).expect("t >= 1"))
            .collect();
        Ok(maximal)
    }

    /// Shift-maximal losing vectors of an arbitrary complete game by sweeping
    /// the profile grid. Used where the closed form does not apply (r > 1).
    pub(crate) fn shift_maximal_losing_exhaustive(&self) -> Result<Vec<ProfileVector>, GameError> {
        let cells = self.hierarchy.grid_size();
        if cells > GRID_SWEEP_LIMIT {
            return Err(GameError::GridTooLarge {
                cells,
                limit: GRID_SWEEP_LIMIT,
            });
        }
        let sizes = self.hierarchy.class_sizes();
        let t = sizes.len();
        let mut out = Vec::new();
        'profiles: for p in self.hierarchy.profiles() {
            let x = p.entries();
            if self.is_winning_entries(x) {
                continue;
            }
            // x is shift-maximal losing iff every upper cover is winning.
            // Covers: move one player up one class, or add one weakest player.
            let mut cover = x.to_vec();
            for k in 0..t - 1 {
                if x[k] < sizes[k] && x[k + 1] > 0 {
                    cover[k] += 1;
                    cover[k + 1] -= 1;
                    let winning = self.is_winning_entries(&cover);
                    cover[k] -= 1;
                    cover[k + 1] += 1;
                    if !winning {
                        continue 'profiles;
                    }
                }
            }
            if x[t - 1] < sizes[t - 1] {
                cover[t - 1] += 1;
                let winning = self.is_winning_entries(&cover);
                cover[t - 1] -= 1;
                if !winning {
                    continue 'profiles;
                }
            }
            out.push(p);
        }
        out.sort_by(|a, b| b.entries().cmp(a.entries()));
        Ok(out)
    }

    /// The dual game's invariants: same hierarchy, matrix rows
    /// `ñ - l` for the shift-maximal losing vectors `l`, in reverse order.
    ///
    /// Inputs with a single row use the closed form for the losing vectors;
    /// duals of duals (r > 1) fall back to the grid sweep. The result always
    /// satisfies the invariant conditions; a validation failure here is a
    /// defect, not a caller error.
    pub fn dual(&self) -> Result<CompleteGameInvariants, GameError> {
        let losing = if self.rows.len() == 1 {
            self.shift_maximal_losing()?
        } else {
            self.shift_maximal_losing_exhaustive()?
        };
        let sizes = self.hierarchy.class_sizes();
        let rows: Vec<ProfileVector> = losing
            .iter()
            .rev()
            .map(|l| {
                let entries = sizes
                    .iter()
                    .zip(l.entries())
                    .map(|(&n, &x)| n - x)
                    .collect();
                ProfileVector::new(entries).expect("t >= 1")
            })
            .collect();
        CompleteGameInvariants::new(self.hierarchy.clone(), rows)
    }
}

impl std::fmt::Debug for CompleteGameInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.hierarchy, self.rows)
    }
}
