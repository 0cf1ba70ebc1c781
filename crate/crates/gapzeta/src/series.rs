//! The inverse-power gap series: for a semigroup with gap set G, the
//! quantity sum_{g in G} g^(-n), reached by independent routes, plus the
//! complementary series over members and the generating function Psi.
//!
//! Routes: `g_minus_n_direct` sums the finite gap set exactly;
//! `g_minus_1_finite` evaluates the harmonic rearrangement that needs no
//! gap enumeration beyond the conductor; `g_minus_n_zeta` uses the Hurwitz
//! zeta closed form in either generator order. Route agreement is the
//! crate's central invariant and the identity module's subject.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{powu, ratio_to_f64, Kahan};
use crate::semigroup::Semigroup2;
use crate::zeta::{hurwitz_zeta, riemann_zeta};

/// Generator-order choice for the zeta closed form: A keeps d2 as the
/// modulus of the zeta sum, B exchanges the roles. Both converge to the
/// same value; comparing them is a free consistency check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaVariant {
    A,
    B,
}

/// How a series value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    FiniteForm,
    ZetaA,
    ZetaB,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::FiniteForm => "finite",
            Method::ZetaA => "zeta-a",
            Method::ZetaB => "zeta-b",
        })
    }
}

/// A computed series value. The rational routes carry `exact` with
/// `error_bound` zero and `value` its float rendering; the zeta routes
/// carry a floating value with an accumulated bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub exact: Option<BigRational>,
    pub method: Method,
    pub error_bound: f64,
}

impl SeriesValue {
    fn from_exact(method: Method, exact: BigRational) -> SeriesValue {
        SeriesValue {
            value: ratio_to_f64(&exact),
            exact: Some(exact),
            method,
            error_bound: 0.0,
        }
    }
}

fn reciprocal_power(value: u128, n: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(value).pow(n))
}

/// Exact sum of g^(-n) over the gaps. The reference route every other one
/// is measured against.
///
/// Panics if n = 0; nonnegative powers live in
/// [`Semigroup2::gap_power_sum`].
pub fn g_minus_n_direct(s: &Semigroup2, n: u32) -> SeriesValue {
    assert!(n >= 1, "g_minus_n_direct needs n >= 1");
    let mut total = BigRational::zero();
    for g in s.gaps().iter() {
        total += reciprocal_power(g, n);
    }
    SeriesValue::from_exact(Method::Direct, total)
}

/// The finite harmonic form of the n = 1 series: harmonic numbers up to
/// the conductor minus the reciprocals of the members up to it,
/// enumerated over the representative lattice. Touches no gap beyond the
/// conductor and must equal the direct route identically.
pub fn g_minus_1_finite(s: &Semigroup2) -> SeriesValue {
    let c = s.conductor();
    let d1 = s.d1() as u128;
    let d2 = s.d2() as u128;
    let mut total = BigRational::zero();
    for k in 1..=c {
        total += reciprocal_power(k, 1);
    }
    // members below the conductor, each hit once: the k2 = 0 lattice row
    // truncated at c, then the k2 >= 1 half-strip truncated at c
    for k1 in 1..d2 {
        let value = k1 * d1;
        if value > c {
            break;
        }
        total -= reciprocal_power(value, 1);
    }
    for k1 in 0..d2 {
        let base = k1 * d1;
        if base + d2 > c {
            break;
        }
        let mut k2 = 1u128;
        loop {
            let value = base + k2 * d2;
            if value > c {
                break;
            }
            total -= reciprocal_power(value, 1);
            k2 += 1;
        }
    }
    SeriesValue::from_exact(Method::FiniteForm, total)
}

/// Render the exact rational k * num / den to the nearest float. Exact
/// until the product reaches 2^53, one extra ulp beyond.
fn lattice_ratio(k: u64, num: u64, den: u64) -> f64 {
    (k as u128 * num as u128) as f64 / den as f64
}

/// Per-term error allowance for a zeta evaluation at a rounded rational
/// argument: the evaluation's own bound plus the argument-rounding
/// sensitivity n * eps * |zeta| (from d/dq zeta(n,q) = -n zeta(n+1,q)).
fn zeta_term_bound(ev: &crate::zeta::ZetaEval) -> f64 {
    ev.error_bound + (ev.n as f64 + 1.0) * f64::EPSILON * ev.value.abs()
}

/// The zeta closed form of the series, valid for n >= 2:
/// (1 - m^(-n)) zeta(n) - m^(-n) sum_{k=1}^{m-1} zeta(n, k*o/m), where
/// (o, m) are the generators in the order picked by `variant`.
pub fn g_minus_n_zeta(s: &Semigroup2, n: u32, variant: ZetaVariant) -> Result<SeriesValue> {
    if n < 2 {
        return Err(Error::domain(format!(
            "the zeta closed form needs n >= 2, got {n}; n = 1 has the finite form"
        )));
    }
    let (other, modulus) = match variant {
        ZetaVariant::A => (s.d1(), s.d2()),
        ZetaVariant::B => (s.d2(), s.d1()),
    };
    let z = riemann_zeta(n)?;
    let mut sum = Kahan::new();
    let mut bound = 0.0f64;
    for k in 1..modulus {
        let ev = hurwitz_zeta(n, lattice_ratio(k, other, modulus))?;
        sum.add(ev.value);
        bound += zeta_term_bound(&ev);
    }
    let weight = powu(modulus as f64, n as u128).recip();
    let value = (1.0 - weight) * z.value - weight * sum.value();
    let abs_scale = (1.0 - weight) * z.value.abs() + weight * sum.abs_sum();
    let error_bound = (1.0 - weight) * z.error_bound
        + weight * bound
        + 4.0 * f64::EPSILON * (abs_scale + value.abs());
    Ok(SeriesValue {
        value,
        exact: None,
        method: match variant {
            ZetaVariant::A => Method::ZetaA,
            ZetaVariant::B => Method::ZetaB,
        },
        error_bound,
    })
}

/// The three-series form of the n >= 2 series before zeta conversion,
/// with every infinite sum cut at `cutoff`: full reciprocal powers minus
/// the lattice half-strip minus the scaled k2 = 0 row. Converges to the
/// direct value as cutoff grows, with error O(cutoff^(1-n)).
pub fn g_minus_n_nonconverted(s: &Semigroup2, n: u32, cutoff: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!(
            "the nonconverted form needs n >= 2, got {n}"
        )));
    }
    if cutoff == 0 {
        return Err(Error::domain("cutoff must be at least 1".to_string()));
    }
    let d1 = s.d1() as u128;
    let d2 = s.d2() as u128;
    let mut full = Kahan::new();
    for k in 1..=cutoff {
        let term = (k as f64).powi(-(n as i32));
        full.add(term);
        if term < 1e-318 {
            break;
        }
    }
    let mut strip = Kahan::new();
    for k1 in 0..d2 {
        let base = k1 * d1;
        for k2 in 1..=cutoff {
            let term = ((base + k2 as u128 * d2) as f64).powi(-(n as i32));
            strip.add(term);
            if term < 1e-318 {
                break;
            }
        }
    }
    let mut row = Kahan::new();
    for k1 in 1..d2 {
        row.add((k1 as f64).powi(-(n as i32)));
    }
    let row_weight = powu(d1 as f64, n as u128).recip();
    Ok(full.value() - strip.value() - row_weight * row.value())
}

/// The complementary series over nonzero members, sum of s^(-n), via
/// zeta(n) minus the variant-A series. Diverges at n = 1, hence n >= 2.
pub fn big_g_minus_n(s: &Semigroup2, n: u32) -> Result<SeriesValue> {
    if n < 2 {
        return Err(Error::domain(format!(
            "the member series diverges for n < 2, got {n}"
        )));
    }
    let g = g_minus_n_zeta(s, n, ZetaVariant::A)?;
    let z = riemann_zeta(n)?;
    let value = z.value - g.value;
    Ok(SeriesValue {
        value,
        exact: None,
        method: Method::ZetaA,
        error_bound: z.error_bound
            + g.error_bound
            + f64::EPSILON * (z.value.abs() + g.value.abs()),
    })
}

fn check_z(z: f64, include_one: bool, what: &str) -> Result<()> {
    let ok = if include_one {
        z >= 0.0 && z <= 1.0
    } else {
        z >= 0.0 && z < 1.0
    };
    if ok {
        Ok(())
    } else {
        let upper = if include_one { "<= 1" } else { "< 1" };
        Err(Error::domain(format!("{what} needs 0 <= z {upper}, got {z}")))
    }
}

/// The generating function over gaps, sum of z^g / g^n, as its defining
/// finite sum. z = 1 is allowed and recovers the n-th series value.
pub fn psi_n(s: &Semigroup2, n: u32, z: f64) -> Result<f64> {
    assert!(n >= 1, "psi_n needs n >= 1");
    check_z(z, true, "psi_n")?;
    let mut acc = Kahan::new();
    for g in s.gaps().iter() {
        acc.add(powu(z, g) * (g as f64).powi(-(n as i32)));
    }
    Ok(acc.value())
}

/// The three-series representation of psi_n with both infinite sums cut
/// at `cutoff`. Diverges term-by-term at z = 1, so the domain is [0, 1);
/// the tail it drops is below z^cutoff / (1 - z) in scale.
pub fn psi_n_series_form(s: &Semigroup2, n: u32, z: f64, cutoff: u64) -> Result<f64> {
    assert!(n >= 1, "psi_n_series_form needs n >= 1");
    check_z(z, false, "psi_n_series_form")?;
    if cutoff == 0 {
        return Err(Error::domain("cutoff must be at least 1".to_string()));
    }
    let d1 = s.d1() as u128;
    let d2 = s.d2() as u128;
    let power = -(n as i32);
    let mut full = Kahan::new();
    let mut zpow = 1.0f64;
    for k in 1..=cutoff {
        zpow *= z;
        full.add(zpow * (k as f64).powi(power));
        if zpow < 1e-320 {
            break;
        }
    }
    let zstep = powu(z, d2);
    let mut strip = Kahan::new();
    for k1 in 0..d2 {
        let base = k1 * d1;
        let mut zcur = powu(z, base) * zstep;
        for k2 in 1..=cutoff {
            let value = base + k2 as u128 * d2;
            strip.add(zcur * (value as f64).powi(power));
            zcur *= zstep;
            if zcur < 1e-320 {
                break;
            }
        }
    }
    let mut row = Kahan::new();
    for k1 in 1..d2 {
        row.add(powu(z, k1 * d1) * (k1 as f64).powi(power));
    }
    let row_weight = powu(d1 as f64, n as u128).recip();
    Ok(full.value() - strip.value() - row_weight * row.value())
}

/// `psi_n_series_form` with the cutoff chosen so the dropped geometric
/// tails stay below 1e-13.
pub fn psi_n_series_form_auto(s: &Semigroup2, n: u32, z: f64) -> Result<f64> {
    assert!(n >= 1, "psi_n_series_form needs n >= 1");
    check_z(z, false, "psi_n_series_form")?;
    let cutoff = if z <= 0.0 {
        1
    } else {
        let target = 1e-13 * (1.0 - z) / (2.0 + s.d2() as f64);
        (target.ln() / z.ln()).ceil().max(16.0).min(5e7) as u64
    };
    psi_n_series_form(s, n, z, cutoff)
}
