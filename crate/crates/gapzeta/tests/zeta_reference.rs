//! Checks both zeta engines against an externally computed 30-digit
//! reference table (tests/data), then certifies the f64 engine's error
//! bounds against the exact-rational engine across a dyadic grid.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use gapzeta::{hurwitz_zeta, hurwitz_zeta_rational};

/// Exact rational value of a plain or scientific decimal literal.
fn parse_decimal(text: &str) -> BigRational {
    let (mantissa, exp_text) = text.split_once(['e', 'E']).unwrap_or((text, "0"));
    let exp: i64 = exp_text.parse().unwrap();
    let negative = mantissa.starts_with('-');
    let unsigned = mantissa.trim_start_matches('-');
    let (int_part, frac_part) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    let mut numer: BigInt = format!("{int_part}{frac_part}").parse().unwrap();
    if negative {
        numer = -numer;
    }
    let power = frac_part.len() as i64 - exp;
    if power >= 0 {
        BigRational::new(numer, BigInt::from(10u32).pow(power as u32))
    } else {
        BigRational::from(numer * BigInt::from(10u32).pow((-power) as u32))
    }
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn reference_rows() -> Vec<(u32, f64, BigRational)> {
    include_str!("data/hurwitz_reference.tsv")
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| {
            let mut cols = line.split('\t');
            let n = cols.next().unwrap().parse().unwrap();
            let q = cols.next().unwrap().parse().unwrap();
            let value = parse_decimal(cols.next().unwrap());
            (n, q, value)
        })
        .collect()
}

#[test]
fn reference_table_is_wellformed() {
    let rows = reference_rows();
    assert_eq!(rows.len(), 20);
    // q values are dyadic, so f64 parsing was exact and both engines see
    // the same argument
    for (_, q, _) in &rows {
        let denom = exact(*q).denom().clone();
        let mask = &denom & &(&denom - &BigInt::one());
        assert!(num_traits::Zero::is_zero(&mask), "q = {q} must be dyadic");
    }
}

#[test]
fn f64_engine_matches_reference_table() {
    // the table carries 30 digits; grant it a relative 1e-28
    let table_slack = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(28));
    for (n, q, reference) in reference_rows() {
        let ev = hurwitz_zeta(n, q).unwrap();
        let diff = (exact(ev.value) - &reference).abs();
        let allowed = exact(ev.error_bound) + reference.abs() * &table_slack;
        assert!(
            diff <= allowed,
            "n={n} q={q}: value {} drifts past its bound {}",
            ev.value,
            ev.error_bound
        );
        assert!(
            ev.error_bound <= 1e-13 * ev.value.abs().max(1.0),
            "n={n} q={q}: bound {} breaks the precision contract",
            ev.error_bound
        );
    }
}

#[test]
fn rational_engine_matches_reference_table() {
    let table_slack = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(28));
    for (n, q, reference) in reference_rows() {
        let rz = hurwitz_zeta_rational(n, &exact(q)).unwrap();
        let diff = (&rz.value - &reference).abs();
        let allowed = &rz.truncation + reference.abs() * &table_slack;
        assert!(diff <= allowed, "n={n} q={q}");
    }
}

#[test]
fn f64_error_bounds_are_certified_by_the_rational_engine() {
    let qs: [f64; 21] = [
        0.015625, 0.03125, 0.046875, 0.0625, 0.125, 0.25, 0.375, 0.5, 0.75, 1.0, 1.25, 1.5,
        2.0, 3.5, 5.0, 8.0, 13.25, 16.0, 33.5, 64.0, 250.0,
    ];
    let ns: [u32; 16] = [2, 3, 4, 5, 6, 7, 8, 10, 12, 16, 20, 24, 32, 40, 48, 64];
    for n in ns {
        for q in qs {
            let ev = hurwitz_zeta(n, q).unwrap();
            let rz = hurwitz_zeta_rational(n, &exact(q)).unwrap();
            let diff = (exact(ev.value) - &rz.value).abs();
            let allowed = exact(ev.error_bound) + &rz.truncation;
            assert!(
                diff <= allowed,
                "claimed bound violated at n={n} q={q}: |{} - exact| > {}",
                ev.value,
                ev.error_bound
            );
            assert!(
                ev.error_bound <= 1e-13 * ev.value.abs().max(1.0),
                "precision contract violated at n={n} q={q}"
            );
        }
    }
}

#[test]
fn small_q_recurrence_region_is_still_covered_by_bounds() {
    // below the 1/64 pivot the bound inflates with q^(-n) but must stay
    // honest; compare against the rational engine
    for (n, q) in [(2u32, 0.0078125f64), (3, 0.001953125), (6, 0.0078125)] {
        let ev = hurwitz_zeta(n, q).unwrap();
        let rz = hurwitz_zeta_rational(n, &exact(q)).unwrap();
        let diff = (exact(ev.value) - &rz.value).abs();
        assert!(diff <= exact(ev.error_bound) + &rz.truncation, "n={n} q={q}");
    }
}
