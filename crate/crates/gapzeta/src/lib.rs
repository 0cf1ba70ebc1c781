//! Gap structure of two-generator numerical semigroups and the inverse
//! power series over their gaps, with the Hurwitz zeta identities those
//! series induce.
//!
//! For coprime d1, d2 >= 2 the semigroup of all nonnegative combinations
//! a*d1 + b*d2 misses finitely many positive integers, its gaps. This
//! crate computes the gap structure exactly, evaluates the series
//! sum 1/g^n over gaps by independent routes (exact rational summation, a
//! finite harmonic form, and Hurwitz zeta closed forms), and verifies the
//! zeta identities that equate those routes.
//!
//! ```
//! use gapzeta::{Semigroup2, g_minus_n_direct};
//!
//! let s = Semigroup2::new(3, 4)?;
//! assert_eq!(s.frobenius(), 5);
//! assert_eq!(s.gaps().as_slice(), &[1, 2, 5]);
//! let g2 = g_minus_n_direct(&s, 2); // 1 + 1/4 + 1/25
//! assert_eq!(g2.exact.unwrap().to_string(), "129/100");
//! # Ok::<(), gapzeta::Error>(())
//! ```

pub mod bernoulli;
pub mod error;
pub mod identities;
mod numeric;
pub mod output;
pub mod semigroup;
pub mod series;
pub mod zeta;

pub use error::{Error, Result};
pub use identities::{
    identity_from_gaps, scan_identities, verify_dual_identity, IdentityKind, IdentityReport,
    DEFAULT_TOLERANCE,
};
pub use output::{format_float, format_ratio, ratio_to_float};
pub use semigroup::{GapSet, LatticeNode, Semigroup2};
pub use series::{
    big_g_minus_n, g_minus_1_finite, g_minus_n_direct, g_minus_n_nonconverted, g_minus_n_zeta,
    psi_n, psi_n_series_form, psi_n_series_form_auto, Method, SeriesValue, ZetaVariant,
};
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta_rational, riemann_zeta, riemann_zeta_rational, RationalZeta,
    ZetaEval,
};
