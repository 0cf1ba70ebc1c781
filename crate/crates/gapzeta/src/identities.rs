//! Verification of the Hurwitz zeta identities a two-generator semigroup
//! induces.
//!
//! Two families:
//!
//! * the dual identity, equating the two generator orders of the lattice
//!   zeta sum: m^(-n) [zeta(n) + sum_{k<m} zeta(n, k*o/m)] is symmetric
//!   under swapping (o, m);
//! * the gap identity, pinning the zeta sum to the exact rational gap
//!   series: sum_{k<d2} zeta(n, k*d1/d2) = (d2^n - 1) zeta(n) - d2^n g,
//!   with g the direct gap sum.
//!
//! The right-hand side of the gap identity subtracts two nearly equal
//! d2^n-sized quantities, which would amplify any floating zeta error by
//! d2^n; it is therefore assembled in exact rational arithmetic and
//! rendered once, so reports stay meaningful at the default tolerance up
//! to n = 10 and beyond.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numeric::{powu, ratio_to_f64, Kahan};
use crate::semigroup::Semigroup2;
use crate::series::g_minus_n_direct;
use crate::zeta::{hurwitz_zeta, riemann_zeta, riemann_zeta_rational, ZetaEval};

/// Relative scale the CLI and tests use when nothing else is configured.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Which identity family a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityKind {
    Dual,
    Gaps,
}

impl std::fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IdentityKind::Dual => "dual",
            IdentityKind::Gaps => "gaps",
        })
    }
}

/// One verified identity instance. `budget` sums the rigorous error
/// bounds of everything that entered `lhs` and `rhs`, so
/// `residual <= budget` must hold whenever the mathematics does;
/// `passed` additionally grants the configured absolute tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub d1: u64,
    pub d2: u64,
    pub n: u32,
    pub kind: IdentityKind,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub budget: f64,
    pub passed: bool,
}

fn finish(
    d1: u64,
    d2: u64,
    n: u32,
    kind: IdentityKind,
    lhs: f64,
    rhs: f64,
    lhs_bound: f64,
    rhs_bound: f64,
    tolerance: f64,
) -> IdentityReport {
    let residual = (lhs - rhs).abs();
    let budget = lhs_bound + rhs_bound + f64::EPSILON * (lhs.abs() + rhs.abs());
    IdentityReport {
        d1,
        d2,
        n,
        kind,
        lhs,
        rhs,
        residual,
        budget,
        passed: residual <= budget.max(tolerance),
    }
}

fn require_exponent(n: u32) -> Result<()> {
    if n < 2 {
        Err(Error::domain(format!(
            "identities are stated for n >= 2, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn zeta_term_bound(ev: &ZetaEval) -> f64 {
    // evaluation bound plus argument-rounding sensitivity; see series.rs
    ev.error_bound + (ev.n as f64 + 1.0) * f64::EPSILON * ev.value.abs()
}

/// One side of the dual identity: m^(-n) [zeta(n) + sum zeta(n, k*o/m)].
fn dual_side(modulus: u64, other: u64, n: u32) -> Result<(f64, f64)> {
    let z = riemann_zeta(n)?;
    let mut sum = Kahan::new();
    sum.add(z.value);
    let mut bound = z.error_bound;
    for k in 1..modulus {
        let q = (k as u128 * other as u128) as f64 / modulus as f64;
        let ev = hurwitz_zeta(n, q)?;
        sum.add(ev.value);
        bound += zeta_term_bound(&ev);
    }
    let weight = powu(modulus as f64, n as u128).recip();
    let value = weight * sum.value();
    let side_bound = weight * (bound + 4.0 * f64::EPSILON * sum.abs_sum())
        + f64::EPSILON * value.abs();
    Ok((value, side_bound))
}

/// Checks the dual identity at (d1, d2, n): both generator orderings of
/// the weighted zeta sum must agree. All terms are positive, so plain
/// floating evaluation loses nothing to cancellation.
pub fn verify_dual_identity(d1: u64, d2: u64, n: u32, tolerance: f64) -> Result<IdentityReport> {
    Semigroup2::new(d1, d2)?;
    require_exponent(n)?;
    let (lhs, lhs_bound) = dual_side(d2, d1, n)?;
    let (rhs, rhs_bound) = dual_side(d1, d2, n)?;
    Ok(finish(
        d1,
        d2,
        n,
        IdentityKind::Dual,
        lhs,
        rhs,
        lhs_bound,
        rhs_bound,
        tolerance,
    ))
}

/// Checks the gap identity for `s` at exponent n. The left side is the
/// floating zeta sum; the right side is assembled exactly (rational
/// zeta(n), exact gap series, exact d2^n) and rendered once, so the check
/// genuinely measures the zeta engine rather than its own cancellation.
pub fn identity_from_gaps(s: &Semigroup2, n: u32, tolerance: f64) -> Result<IdentityReport> {
    require_exponent(n)?;
    let (d1, d2) = s.generators();
    let mut sum = Kahan::new();
    let mut lhs_bound = 0.0f64;
    for k in 1..d2 {
        let q = (k as u128 * d1 as u128) as f64 / d2 as f64;
        let ev = hurwitz_zeta(n, q)?;
        sum.add(ev.value);
        lhs_bound += zeta_term_bound(&ev);
    }
    let lhs = sum.value();
    lhs_bound += 4.0 * f64::EPSILON * sum.abs_sum();

    let zeta = riemann_zeta_rational(n)?;
    let scale = BigRational::from(BigInt::from(d2).pow(n));
    let factor = scale.clone() - BigRational::one();
    let gap_series = g_minus_n_direct(s, n)
        .exact
        .expect("the direct route is always exact");
    let rhs_exact = &factor * zeta.value - scale * gap_series;
    let rhs = ratio_to_f64(&rhs_exact);
    let rhs_bound = ratio_to_f64(&(factor * zeta.truncation)) + f64::EPSILON * rhs.abs();

    Ok(finish(
        d1,
        d2,
        n,
        IdentityKind::Gaps,
        lhs,
        rhs,
        lhs_bound,
        rhs_bound,
        tolerance,
    ))
}

/// Every identity report for coprime pairs 2 <= d1 < d2 <= dmax and each
/// n in range, ordered lexicographically by (d1, d2, n, kind) with the
/// dual identity first. Empty when dmax < 3.
///
/// Panics if the range reaches outside [2, 64].
pub fn scan_identities(
    dmax: u64,
    n_range: std::ops::RangeInclusive<u32>,
    tolerance: f64,
) -> Vec<IdentityReport> {
    assert!(
        n_range.is_empty() || (*n_range.start() >= 2 && *n_range.end() <= 64),
        "scan exponents must lie in [2, 64]"
    );
    let mut reports = Vec::new();
    if dmax < 3 {
        return reports;
    }
    for d1 in 2..dmax {
        for d2 in d1 + 1..=dmax {
            let Ok(s) = Semigroup2::new(d1, d2) else {
                continue;
            };
            for n in n_range.clone() {
                reports.push(
                    verify_dual_identity(d1, d2, n, tolerance)
                        .expect("validated pair and exponent"),
                );
                reports.push(
                    identity_from_gaps(&s, n, tolerance).expect("validated exponent"),
                );
            }
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_identity_spot_checks() {
        let r = verify_dual_identity(2, 3, 2, DEFAULT_TOLERANCE).unwrap();
        assert_eq!((r.d1, r.d2, r.n, r.kind), (2, 3, 2, IdentityKind::Dual));
        assert!(r.residual <= 1e-12 * r.lhs.abs().max(1.0));
        assert!(r.passed);
        assert!(r.residual <= r.budget, "budget must cover a true identity");

        let r = verify_dual_identity(5, 8, 4, DEFAULT_TOLERANCE).unwrap();
        assert!(r.residual <= 1e-12 * r.lhs.abs().max(1.0));
        assert!(r.passed);
    }

    #[test]
    fn dual_identity_validates_input() {
        assert_eq!(
            verify_dual_identity(4, 6, 2, DEFAULT_TOLERANCE),
            Err(Error::NotCoprime { d1: 4, d2: 6 })
        );
        assert_eq!(
            verify_dual_identity(1, 7, 2, DEFAULT_TOLERANCE),
            Err(Error::GeneratorTooSmall(1))
        );
        assert!(matches!(
            verify_dual_identity(2, 3, 1, DEFAULT_TOLERANCE),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dual_identity_swap_symmetry() {
        let fwd = verify_dual_identity(3, 4, 5, DEFAULT_TOLERANCE).unwrap();
        let rev = verify_dual_identity(4, 3, 5, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(fwd.lhs, rev.rhs);
        assert_eq!(fwd.rhs, rev.lhs);
        assert_eq!(fwd.residual, rev.residual);
    }

    #[test]
    fn gap_identity_matches_named_display() {
        // <2,3>: zeta(n, 2/3) + zeta(n, 4/3) = (3^n - 1) zeta(n) - 3^n
        for n in [2u32, 3, 7, 10] {
            let s = Semigroup2::new(2, 3).unwrap();
            let r = identity_from_gaps(&s, n, DEFAULT_TOLERANCE).unwrap();
            let lhs = hurwitz_zeta(n, 2.0 / 3.0).unwrap().value
                + hurwitz_zeta(n, 4.0 / 3.0).unwrap().value;
            assert_eq!(r.lhs, lhs);
            let pow = 3f64.powi(n as i32);
            let rhs = (pow - 1.0) * riemann_zeta(n).unwrap().value - pow;
            assert!((r.rhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0));
            assert!(r.passed);
            assert!(r.residual <= r.budget);
        }
    }

    #[test]
    fn gap_identity_swapped_orientation() {
        // <3,4> both ways; the swapped form uses modulus 3 and gaps {1,2,5}
        let s = Semigroup2::new(3, 4).unwrap();
        for n in 2..=10 {
            let fwd = identity_from_gaps(&s, n, DEFAULT_TOLERANCE).unwrap();
            assert!(fwd.passed, "forward n={n}");
            assert!(fwd.residual <= 1e-12 * fwd.lhs.abs().max(1.0));
        }
        let swapped = s.swapped();
        for n in 2..=10 {
            let rev = identity_from_gaps(&swapped, n, DEFAULT_TOLERANCE).unwrap();
            assert!(rev.passed, "swapped n={n}");
            assert_eq!((rev.d1, rev.d2), (4, 3));
        }
    }

    #[test]
    fn gap_identity_rejects_small_n() {
        let s = Semigroup2::new(2, 3).unwrap();
        assert!(matches!(
            identity_from_gaps(&s, 1, DEFAULT_TOLERANCE),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scan_shape_and_order() {
        let reports = scan_identities(5, 2..=3, 1e-10);
        assert_eq!(reports.len(), 20); // 5 pairs x 2 exponents x 2 kinds
        let keys: Vec<_> = reports
            .iter()
            .map(|r| (r.d1, r.d2, r.n, r.kind))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(reports.iter().all(|r| r.passed));
        let pairs: std::collections::BTreeSet<_> =
            reports.iter().map(|r| (r.d1, r.d2)).collect();
        assert_eq!(
            pairs.into_iter().collect::<Vec<_>>(),
            vec![(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn scan_edges() {
        let only_pair = scan_identities(3, 2..=2, 1e-10);
        assert_eq!(only_pair.len(), 2);
        assert!(only_pair.iter().all(|r| (r.d1, r.d2) == (2, 3)));
        assert!(scan_identities(2, 2..=4, 1e-10).is_empty());
    }

    #[test]
    fn strict_budget_passes_alone() {
        // tolerance 0 forces the budget branch of `passed`
        let r = verify_dual_identity(5, 8, 3, 0.0).unwrap();
        assert!(r.passed);
        let s = Semigroup2::new(5, 8).unwrap();
        let g = identity_from_gaps(&s, 3, 0.0).unwrap();
        assert!(g.passed);
    }
}
