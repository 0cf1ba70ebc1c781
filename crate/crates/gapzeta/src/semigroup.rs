//! Two-generator numerical semigroups: membership, gap structure, and the
//! generating functions built on them.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{powu, Kahan};

/// The numerical semigroup generated by two coprime integers d1, d2 >= 2:
/// all sums a*d1 + b*d2 with nonnegative a, b.
///
/// Generators are kept in caller order; `swapped` gives the other order.
/// Values are u128 throughout, so no product of u64 generators can overflow.
#[derive(Debug, Clone)]
pub struct Semigroup2 {
    d1: u64,
    d2: u64,
    /// d1^{-1} mod d2, fixed at construction; drives O(1) membership.
    inv_d1: u64,
    gaps: OnceLock<GapSet>,
}

/// The gaps of a semigroup: every positive integer it misses, ascending.
/// Always starts at 1 and ends at the Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet {
    gaps: Vec<u128>,
}

/// A point (k1, k2) of the representative lattice together with its value
/// k1*d1 + k2*d2. The lattice consists of the origin, the row k2 = 0 with
/// 1 <= k1 <= d2 - 1, and the half-strip 0 <= k1 <= d2 - 1, k2 >= 1; its
/// values enumerate each semigroup element exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeNode {
    pub k1: u64,
    pub k2: u64,
    pub value: u128,
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // pre: m >= 2, gcd(a, m) = 1
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m as i128) as u64
}

impl Semigroup2 {
    /// Validates the generator pair: both at least 2 and coprime.
    pub fn new(d1: u64, d2: u64) -> Result<Self> {
        if d1 < 2 {
            return Err(Error::GeneratorTooSmall(d1));
        }
        if d2 < 2 {
            return Err(Error::GeneratorTooSmall(d2));
        }
        if d1.gcd(&d2) != 1 {
            return Err(Error::NotCoprime { d1, d2 });
        }
        Ok(Semigroup2 {
            d1,
            d2,
            inv_d1: mod_inverse(d1, d2),
            gaps: OnceLock::new(),
        })
    }

    pub fn d1(&self) -> u64 {
        self.d1
    }

    pub fn d2(&self) -> u64 {
        self.d2
    }

    pub fn generators(&self) -> (u64, u64) {
        (self.d1, self.d2)
    }

    /// The same semigroup with the generator roles exchanged.
    pub fn swapped(&self) -> Semigroup2 {
        Semigroup2::new(self.d2, self.d1).expect("swap preserves validity")
    }

    /// Largest integer not in the semigroup: d1*d2 - d1 - d2.
    pub fn frobenius(&self) -> u128 {
        let (a, b) = (self.d1 as u128, self.d2 as u128);
        a * b - a - b
    }

    /// First integer from which membership never fails again.
    pub fn conductor(&self) -> u128 {
        self.frobenius() + 1
    }

    /// Number of gaps, by the closed form (d1-1)(d2-1)/2. The enumerated
    /// gap set is checked against this in tests.
    pub fn genus(&self) -> u64 {
        let g = (self.d1 as u128 - 1) * (self.d2 as u128 - 1) / 2;
        g as u64
    }

    /// Least semigroup element congruent to x modulo d2.
    fn least_member_congruent(&self, x: u128) -> u128 {
        let r = (x % self.d2 as u128) as u64;
        let k1 = (r as u128 * self.inv_d1 as u128 % self.d2 as u128) as u64;
        k1 as u128 * self.d1 as u128
    }

    /// Membership in O(1): x is representable iff the least semigroup
    /// element in its residue class mod d2 does not exceed it.
    pub fn is_member(&self, x: u128) -> bool {
        self.least_member_congruent(x) <= x
    }

    /// All gaps, ascending. Materialized on first call and cached; the scan
    /// is O(F) in time and memory, so enormous generator pairs should stick
    /// to `is_member`.
    pub fn gaps(&self) -> &GapSet {
        self.gaps.get_or_init(|| {
            let d1 = self.d1 as u128;
            let d2 = self.d2 as u128;
            // least[r] = least member congruent to r mod d2
            let least: Vec<u128> = (0..self.d2)
                .map(|r| (r as u128 * self.inv_d1 as u128 % d2) * d1)
                .collect();
            let frobenius = self.frobenius();
            let mut gaps = Vec::with_capacity(self.genus() as usize);
            let mut r = 1usize;
            for x in 1..=frobenius {
                if least[r] > x {
                    gaps.push(x);
                }
                r += 1;
                if r == least.len() {
                    r = 0;
                }
            }
            GapSet { gaps }
        })
    }

    /// Exact power sum over the gaps, sum of g^n; n = 0 counts them.
    pub fn gap_power_sum(&self, n: u32) -> BigRational {
        let mut total = BigInt::zero();
        for g in self.gaps().iter() {
            total += BigInt::from(g).pow(n);
        }
        BigRational::from(total)
    }

    /// Every lattice node with value at most `bound`, ascending by value.
    /// Values are pairwise distinct and are exactly the members <= bound.
    pub fn lattice_nodes(&self, bound: u128) -> Vec<LatticeNode> {
        let d1 = self.d1 as u128;
        let d2 = self.d2 as u128;
        let mut nodes = vec![LatticeNode { k1: 0, k2: 0, value: 0 }];
        for k1 in 1..self.d2 {
            let value = k1 as u128 * d1;
            if value > bound {
                break;
            }
            nodes.push(LatticeNode { k1, k2: 0, value });
        }
        for k1 in 0..self.d2 {
            let base = k1 as u128 * d1;
            if base + d2 > bound {
                break;
            }
            let mut k2 = 1u64;
            loop {
                let value = base + k2 as u128 * d2;
                if value > bound {
                    break;
                }
                nodes.push(LatticeNode { k1, k2, value });
                k2 += 1;
            }
        }
        nodes.sort_by_key(|node| node.value);
        nodes
    }

    /// Rational form (1 - z^(d1*d2)) / ((1 - z^d1)(1 - z^d2)) of the member
    /// generating function, valid on 0 <= z < 1.
    pub fn hilbert_series(&self, z: f64) -> Result<f64> {
        check_unit_interval(z, "hilbert series")?;
        let d1 = self.d1 as u128;
        let d2 = self.d2 as u128;
        let numer = 1.0 - powu(z, d1 * d2);
        let denom = (1.0 - powu(z, d1)) * (1.0 - powu(z, d2));
        Ok(numer / denom)
    }

    /// Finite sum of z^g over the gaps, the complement of the Hilbert
    /// series: together they add to 1/(1-z).
    pub fn gap_generating_function(&self, z: f64) -> Result<f64> {
        check_unit_interval(z, "gap generating function")?;
        let mut acc = Kahan::new();
        for g in self.gaps().iter() {
            acc.add(powu(z, g));
        }
        Ok(acc.value())
    }
}

fn check_unit_interval(z: f64, what: &str) -> Result<()> {
    if z >= 0.0 && z < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} needs 0 <= z < 1, got {z}")))
    }
}

impl PartialEq for Semigroup2 {
    fn eq(&self, other: &Self) -> bool {
        (self.d1, self.d2) == (other.d1, other.d2)
    }
}

impl Eq for Semigroup2 {}

impl std::hash::Hash for Semigroup2 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.d1, self.d2).hash(state);
    }
}

impl std::fmt::Display for Semigroup2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{},{}>", self.d1, self.d2)
    }
}

impl GapSet {
    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Largest gap, the Frobenius number. A valid semigroup always has one.
    pub fn max(&self) -> u128 {
        *self.gaps.last().expect("gap set of a valid pair is nonempty")
    }

    pub fn contains(&self, x: u128) -> bool {
        self.gaps.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u128> + '_ {
        self.gaps.iter().copied()
    }

    pub fn as_slice(&self) -> &[u128] {
        &self.gaps
    }
}
