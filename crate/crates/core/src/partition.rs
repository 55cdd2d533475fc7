//! The partition function p(n) and raw partition objects.
//!
//! - [`PartitionTable`]: memoized arbitrary-precision p(0..N) via Euler's
//!   pentagonal number recurrence,
//!     p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ],
//!   the backbone of every exact computation in this crate.
//! - [`Partition`]: a weakly decreasing sequence of positive parts with the
//!   statistics needed for rank and crank.
//! - [`for_each_partition`]: exhaustive generation, used by test oracles.
//!
//! p of a negative argument is 0 everywhere in this crate, and p(0) = 1.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::LazyLock;

static ZERO: LazyLock<BigInt> = LazyLock::new(BigInt::zero);

/// Hard cap on table construction; beyond this the table alone would
/// exhaust memory long before any scan completes.
pub const MAX_TABLE_N: usize = 10_000_000;

/// Exact values p(0), p(1), ..., p(max_n), immutable after construction
/// and safe for unrestricted concurrent reads.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    values: Vec<BigInt>,
}

impl PartitionTable {
    /// Build the table up to p(max_n) with the pentagonal recurrence.
    pub fn new(max_n: usize) -> Result<Self> {
        if max_n > MAX_TABLE_N {
            return Err(Error::Config(format!(
                "partition table size {max_n} exceeds the cap of {MAX_TABLE_N}"
            )));
        }
        let mut values = Vec::with_capacity(max_n + 1);
        values.push(BigInt::one());
        for i in 1..=max_n {
            let mut sum = BigInt::zero();
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if k % 2 == 1 {
                    sum += &values[i - g1];
                    if g2 <= i {
                        sum += &values[i - g2];
                    }
                } else {
                    sum -= &values[i - g1];
                    if g2 <= i {
                        sum -= &values[i - g2];
                    }
                }
                k += 1;
            }
            values.push(sum);
        }
        Ok(Self { values })
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// p(n), with p(negative) = 0. Panics if n exceeds the table; callers
    /// that take user input should check [`Self::max_n`] first.
    pub fn p(&self, n: i64) -> &BigInt {
        if n < 0 {
            &ZERO
        } else {
            &self.values[n as usize]
        }
    }

    /// Bounds-checked access for code paths fed by external arguments.
    pub fn try_p(&self, n: i64) -> Result<&BigInt> {
        if n > self.max_n() as i64 {
            return Err(Error::TableTooSmall {
                needed: n,
                max_n: self.max_n(),
            });
        }
        Ok(self.p(n))
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Construct from parts, which must be weakly decreasing and positive.
    pub fn new(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// |lambda|, the partitioned number.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// l(lambda), the largest part (0 for the empty partition).
    pub fn largest_part(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// #(lambda), the number of parts.
    pub fn num_parts(&self) -> u64 {
        self.parts.len() as u64
    }

    /// omega(lambda), the number of 1's.
    pub fn ones_count(&self) -> u64 {
        self.parts.iter().filter(|&&p| p == 1).count() as u64
    }

    /// mu(lambda), the number of parts strictly larger than omega(lambda).
    pub fn parts_exceeding_ones(&self) -> u64 {
        let omega = self.ones_count();
        self.parts.iter().filter(|&&p| p > omega).count() as u64
    }

    /// Dyson rank: largest part minus number of parts.
    pub fn rank(&self) -> i64 {
        self.largest_part() as i64 - self.num_parts() as i64
    }

    /// Andrews-Garvan crank: l(lambda) when there are no ones, otherwise
    /// mu(lambda) - omega(lambda).
    pub fn crank(&self) -> i64 {
        let omega = self.ones_count();
        if omega == 0 {
            self.largest_part() as i64
        } else {
            self.parts_exceeding_ones() as i64 - omega as i64
        }
    }
}

/// Visit every partition of n (descending part order). The empty
/// partition is visited for n = 0.
pub fn for_each_partition<F: FnMut(&[u64])>(n: u64, mut f: F) {
    let mut parts = Vec::new();
    fn rec<F: FnMut(&[u64])>(remaining: u64, max_part: u64, parts: &mut Vec<u64>, f: &mut F) {
        if remaining == 0 {
            f(parts);
            return;
        }
        let top = remaining.min(max_part);
        for next in (1..=top).rev() {
            parts.push(next);
            rec(remaining - next, next, parts, f);
            parts.pop();
        }
    }
    rec(n, n.max(1), &mut parts, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let t = PartitionTable::new(0).unwrap();
        assert_eq!(t.p(0), &BigInt::from(1));
        assert_eq!(t.max_n(), 0);
    }

    #[test]
    fn small_values_match_enumeration() {
        let t = PartitionTable::new(30).unwrap();
        for n in 0..=30u64 {
            let mut count = 0u64;
            for_each_partition(n, |_| count += 1);
            assert_eq!(t.p(n as i64), &BigInt::from(count), "p({n})");
        }
    }

    #[test]
    fn known_large_values() {
        let t = PartitionTable::new(1000).unwrap();
        assert_eq!(t.p(100), &BigInt::from(190_569_292u64));
        assert_eq!(t.p(200), &BigInt::from(3_972_999_029_388u64));
        assert_eq!(
            t.p(1000).to_string(),
            "24061467864032622473692149727991"
        );
    }

    #[test]
    fn monotone_from_one() {
        let t = PartitionTable::new(200).unwrap();
        for n in 1..200 {
            assert!(t.p(n) <= t.p(n + 1));
        }
    }

    #[test]
    fn negative_arguments_are_zero() {
        let t = PartitionTable::new(5).unwrap();
        assert_eq!(t.p(-1), &BigInt::from(0));
        assert_eq!(t.p(-100), &BigInt::from(0));
    }

    #[test]
    fn rejects_absurd_sizes() {
        assert!(PartitionTable::new(MAX_TABLE_N + 1).is_err());
    }

    #[test]
    fn table_too_small_is_reported() {
        let t = PartitionTable::new(5).unwrap();
        assert!(t.try_p(6).is_err());
        assert!(t.try_p(5).is_ok());
    }

    #[test]
    fn partition_statistics() {
        // cranks of the partitions of 4: 4, 0, 2, -2, -4
        let cases: [(&[u64], i64, i64); 5] = [
            (&[4], 3, 4),
            (&[3, 1], 1, 0),
            (&[2, 2], 0, 2),
            (&[2, 1, 1], -1, -2),
            (&[1, 1, 1, 1], -3, -4),
        ];
        for (parts, rank, crank) in cases {
            let lambda = Partition::new(parts.to_vec());
            assert_eq!(lambda.weight(), 4);
            assert_eq!(lambda.rank(), rank, "rank of {parts:?}");
            assert_eq!(lambda.crank(), crank, "crank of {parts:?}");
        }
    }

    #[test]
    fn empty_partition_conventions() {
        let mut seen = 0;
        for_each_partition(0, |parts| {
            assert!(parts.is_empty());
            seen += 1;
        });
        assert_eq!(seen, 1);
        let empty = Partition::new(vec![]);
        assert_eq!(empty.largest_part(), 0);
        assert_eq!(empty.num_parts(), 0);
    }
}
