use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Highest Bernoulli index held by the shared table.
pub const BERNOULLI_MAX_INDEX: usize = 120;

/// Bernoulli numbers `B_0 ..= B_max` with the `B_1 = -1/2` convention,
/// computed exactly in rationals and rounded once to binary64.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<f64>,
}

impl BernoulliTable {
    pub fn new(max_index: usize) -> Self {
        let exact = exact_bernoulli(max_index);
        let values = exact
            .iter()
            .map(|b| b.to_f64().expect("Bernoulli numbers up to the table size fit in f64"))
            .collect();
        BernoulliTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<f64> {
        self.values.get(n).copied().ok_or(Error::TableExhausted {
            index: n,
            max: self.max_index(),
        })
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }
}

/// The process-wide table, built on first use and immutable afterwards.
pub fn bernoulli_table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable::new(BERNOULLI_MAX_INDEX))
}

/// Shorthand for `B_n` from the shared table; panics past the table end.
pub(crate) fn bernoulli(n: usize) -> f64 {
    bernoulli_table().as_slice()[n]
}

fn exact_bernoulli(max_index: usize) -> Vec<BigRational> {
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    let mut b: Vec<BigRational> = Vec::with_capacity(max_index + 1);
    b.push(BigRational::one());
    for m in 1..=max_index {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        let mut binom = BigInt::one(); // C(m+1, 0)
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * bk;
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_values() {
        let t = bernoulli_table();
        assert_eq!(t.get(0).unwrap(), 1.0);
        assert_eq!(t.get(1).unwrap(), -0.5);
        assert_eq!(t.get(2).unwrap(), 1.0 / 6.0);
        assert_eq!(t.get(4).unwrap(), -1.0 / 30.0);
        assert_eq!(t.get(12).unwrap(), -691.0 / 2730.0);
    }

    #[test]
    fn odd_entries_vanish() {
        let t = bernoulli_table();
        for n in (3..=t.max_index()).step_by(2) {
            assert_eq!(t.get(n).unwrap(), 0.0);
        }
    }

    #[test]
    fn exhausted_table() {
        let t = BernoulliTable::new(10);
        assert!(matches!(t.get(11), Err(Error::TableExhausted { index: 11, max: 10 })));
    }
}
