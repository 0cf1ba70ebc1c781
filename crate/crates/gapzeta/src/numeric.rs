//! Small floating-point helpers shared across the crate.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Compensated (Kahan) accumulator. Also tracks the sum of absolute values,
/// which the zeta and identity code uses to budget accumulated rounding.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Kahan {
    sum: f64,
    carry: f64,
    abs: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Kahan::default()
    }

    pub fn add(&mut self, term: f64) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
        self.abs += term.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum
    }

    /// Sum of |term| over everything added so far.
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

/// `base^exp` by binary exponentiation, exact for exp = 0 (gives 1.0).
pub(crate) fn powu(base: f64, mut exp: u128) -> f64 {
    let mut acc = 1.0f64;
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq *= sq;
        }
    }
    acc
}

/// 2^k as an f64, exact over the full finite range, saturating outside it.
fn exp2i(k: i64) -> f64 {
    if k >= 1024 {
        f64::INFINITY
    } else if k < -1074 {
        0.0
    } else if k >= -1022 {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else {
        f64::from_bits(1u64 << (k + 1074) as u64)
    }
}

/// Convert an exact rational to the nearest f64.
///
/// `BigRational::to_f64` converts numerator and denominator separately and
/// returns NaN (inf/inf) once either side outgrows f64 range, which happens
/// routinely for the gap sums here. Instead, take a 57-bit integer quotient,
/// fold the remainder into a sticky bit, and let the single u64 -> f64
/// conversion perform the rounding. Result is correctly rounded (ties to
/// even) for all normal results; subnormal results may be off by one ulp.
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let n: &BigUint = r.numer().magnitude();
    let d: &BigUint = r.denom().magnitude();
    // n/d lies in [2^(e-1), 2^(e+1)); shift so the quotient has 56..=58 bits.
    let e = n.bits() as i64 - d.bits() as i64;
    let shift = 56 - e;
    let (num, den) = if shift >= 0 {
        (n << shift as u64, d.clone())
    } else {
        (n.clone(), d << (-shift) as u64)
    };
    let q = &num / &den;
    let exact = &q * &den == num;
    let mut m = q.to_u64().expect("shifted quotient fits in 64 bits");
    if !exact {
        m |= 1;
    }
    let magnitude = m as f64 * exp2i(-shift);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn powu_matches_powi() {
        for &b in &[0.5f64, 0.9375, 1.0, 2.0, 10.0] {
            for e in 0u128..=40 {
                assert_eq!(powu(b, e), b.powi(e as i32), "b={b} e={e}");
            }
        }
    }

    #[test]
    fn ratio_to_f64_simple_values() {
        assert_eq!(ratio_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(ratio_to_f64(&rat(-3, 4)), -0.75);
        assert_eq!(ratio_to_f64(&rat(1, 3)), 1.0 / 3.0);
        assert_eq!(ratio_to_f64(&rat(17, 10)), 1.7);
        assert_eq!(ratio_to_f64(&BigRational::zero()), 0.0);
        assert_eq!(ratio_to_f64(&BigRational::one()), 1.0);
    }

    #[test]
    fn ratio_to_f64_survives_huge_components() {
        // Both sides far outside f64 range, ratio close to 1.5.
        let big = BigInt::from(3u32).pow(2000);
        let r = BigRational::new(big.clone() * 3, big * 2);
        assert_eq!(ratio_to_f64(&r), 1.5);
    }

    #[test]
    fn ratio_to_f64_rounds_to_nearest() {
        // 1/10 is inexact; nearest double is the parsed literal.
        assert_eq!(ratio_to_f64(&rat(1, 10)), 0.1);
        // Exact tie between 1 and 1 + ulp: 1 + 2^-53 must round to even (1.0).
        let tie = BigRational::one()
            + BigRational::new(BigInt::one(), BigInt::from(2u8).pow(53));
        assert_eq!(ratio_to_f64(&tie), 1.0);
        // Just above the tie must round up.
        let above = BigRational::one()
            + BigRational::new(BigInt::from(3), BigInt::from(2u8).pow(54));
        assert_eq!(ratio_to_f64(&above), 1.0 + f64::EPSILON);
    }

    #[test]
    fn kahan_compensates() {
        let mut k = Kahan::new();
        for _ in 0..10_000_000 {
            k.add(0.1);
        }
        assert!((k.value() - 1.0e6).abs() < 1e-7);
        assert!((k.abs_sum() - 1.0e6).abs() < 1.0);
    }
}
