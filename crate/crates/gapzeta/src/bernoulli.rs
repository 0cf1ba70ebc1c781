//! Exact Bernoulli numbers, the coefficient source for the Euler-Maclaurin
//! zeta evaluators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Bernoulli numbers B_0 ..= B_{2k} as exact rationals, with B_1 = -1/2.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

/// Compute every Bernoulli number up to index 2*count.
///
/// Uses the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
/// Quadratic in the index, exact throughout; the tables needed here stay
/// under index fifty, where this costs microseconds.
pub fn bernoulli_numbers(count: u32) -> BernoulliTable {
    let top = 2 * count as usize;
    let mut values: Vec<BigRational> = Vec::with_capacity(top + 1);
    values.push(BigRational::one());
    for m in 1..=top {
        // binom holds C(m+1, j), updated in place as j advances.
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, b) in values.iter().enumerate() {
            if !b.is_zero() {
                acc += BigRational::from(binom.clone()) * b;
            }
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        values.push(-acc / BigRational::from(BigInt::from(m + 1)));
    }
    BernoulliTable { values }
}

impl BernoulliTable {
    /// Largest index held, always even.
    pub fn max_index(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// B_m. Panics when m exceeds the table.
    pub fn get(&self, m: u32) -> &BigRational {
        &self.values[m as usize]
    }

    /// B_{2j}, the only values the zeta correction terms use.
    pub fn even(&self, j: u32) -> &BigRational {
        &self.values[2 * j as usize]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn low_index_values() {
        let t = bernoulli_numbers(3);
        assert_eq!(t.max_index(), 6);
        assert_eq!(*t.get(0), rat(1, 1));
        assert_eq!(*t.get(1), rat(-1, 2));
        assert_eq!(*t.get(2), rat(1, 6));
        assert_eq!(*t.get(3), rat(0, 1));
        assert_eq!(*t.get(4), rat(-1, 30));
        assert_eq!(*t.get(5), rat(0, 1));
        assert_eq!(*t.get(6), rat(1, 42));
    }

    #[test]
    fn known_higher_values() {
        let t = bernoulli_numbers(6);
        assert_eq!(*t.even(4), rat(-1, 30)); // B_8
        assert_eq!(*t.even(5), rat(5, 66)); // B_10
        assert_eq!(*t.even(6), rat(-691, 2730)); // B_12
    }

    #[test]
    fn odd_indices_above_one_vanish() {
        let t = bernoulli_numbers(10);
        for m in (3..=t.max_index()).step_by(2) {
            assert!(t.get(m).is_zero(), "B_{m} should vanish");
        }
    }

    #[test]
    fn even_accessor_matches_get() {
        let t = bernoulli_numbers(8);
        for j in 0..=8 {
            assert_eq!(t.even(j), t.get(2 * j));
        }
    }
}
