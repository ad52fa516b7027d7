//! Arbitrary-precision binomial coefficients and factorials.
//!
//! Sweeps up to n = 100 are binomial-dominated, so callers size a
//! [`BinomialTable`] once and share it immutably afterwards.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Pascal-triangle table of binomial coefficients, immutable after `new`.
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    /// Builds the triangle for all `0 <= k <= n <= max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// C(n, k); zero outside the triangle. Panics if `n` exceeds the sized bound.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.rows[n][k].clone()
    }
}

/// One-off C(n, k) without a table.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// `0!, 1!, ..., max!` as exact integers.
pub fn factorials(max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(BigUint::one());
    for k in 1..=max {
        let next = &out[k - 1] * BigUint::from(k);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_direct() {
        let t = BinomialTable::new(30);
        for n in 0..=30u64 {
            for k in 0..=n {
                assert_eq!(t.get(n as usize, k as usize), binomial(n, k));
            }
        }
        assert_eq!(t.get(5, 9), BigUint::zero());
    }

    #[test]
    fn factorial_values() {
        let f = factorials(10);
        assert_eq!(f[0], BigUint::one());
        assert_eq!(f[10], BigUint::from(3_628_800u64));
    }
}
