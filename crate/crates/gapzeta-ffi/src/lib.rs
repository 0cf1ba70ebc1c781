//! C ABI for the gapzeta library.
//!
//! Semigroups are opaque heap handles created by [`gz_semigroup_new`] and
//! released by [`gz_semigroup_free`]. Every fallible call returns a
//! [`GzStatus`]; results travel through out-pointers that are written only
//! on `Ok`. No call panics across the boundary and no call touches global
//! state, so the interface is thread-safe as long as a handle is not freed
//! while another thread is using it.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gapzeta::{
    big_g_minus_n, g_minus_1_finite, g_minus_n_direct, g_minus_n_zeta, hurwitz_zeta,
    identity_from_gaps, psi_n, psi_n_series_form_auto, riemann_zeta, verify_dual_identity,
    Error, IdentityKind, IdentityReport, Semigroup2, ZetaVariant, DEFAULT_TOLERANCE,
};

/// Outcome of a C ABI call. Everything except `Ok` leaves out-pointers
/// untouched.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GzStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A generator was below 2.
    GeneratorTooSmall = 2,
    /// The generators share a factor.
    NotCoprime = 3,
    /// An argument was outside the supported domain (exponent, z, tolerance).
    Domain = 4,
    /// The result does not fit the fixed-width output type.
    Overflow = 5,
    /// The caller's buffer is shorter than the result.
    BufferTooSmall = 6,
    /// The request would enumerate more gaps than the built-in cap.
    TooLarge = 7,
    /// An internal invariant failed; treat as a bug in this library.
    Internal = 8,
}

/// Generator-order choice for the zeta closed form.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GzVariant {
    A = 0,
    B = 1,
}

/// Which identity a report verifies.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GzIdentityKind {
    Dual = 0,
    Gaps = 1,
}

/// One verified identity instance, mirroring the library report.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct GzIdentityReport {
    pub d1: u64,
    pub d2: u64,
    pub n: u32,
    pub kind: GzIdentityKind,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub budget: f64,
    pub passed: bool,
}

/// Opaque two-generator semigroup handle.
pub struct GzSemigroup {
    inner: Semigroup2,
}

/// Gap enumeration refuses above this genus so a hostile pair cannot make
/// the library allocate without bound.
const GAP_LIMIT: u64 = 100_000_000;

fn status_of(err: &Error) -> GzStatus {
    match err {
        Error::GeneratorTooSmall(_) => GzStatus::GeneratorTooSmall,
        Error::NotCoprime { .. } => GzStatus::NotCoprime,
        Error::Domain(_) => GzStatus::Domain,
    }
}

/// Runs a closure that may touch raw pointers, translating panics into
/// `Internal` instead of undefined unwinding across the boundary.
fn guarded(f: impl FnOnce() -> GzStatus) -> GzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => GzStatus::Internal,
    }
}

/// # Safety
/// `handle` must come from `gz_semigroup_new` and not be freed yet.
unsafe fn deref<'a>(handle: *const GzSemigroup) -> Option<&'a Semigroup2> {
    handle.as_ref().map(|h| &h.inner)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> GzStatus {
    if out.is_null() {
        return GzStatus::NullPointer;
    }
    unsafe { out.write(value) };
    GzStatus::Ok
}

fn effective_tolerance(tolerance: f64) -> Result<f64, GzStatus> {
    if tolerance <= 0.0 {
        Ok(DEFAULT_TOLERANCE)
    } else if tolerance.is_finite() {
        Ok(tolerance)
    } else {
        Err(GzStatus::Domain)
    }
}

fn check_enumerable(s: &Semigroup2) -> Result<(), GzStatus> {
    if s.genus() > GAP_LIMIT {
        Err(GzStatus::TooLarge)
    } else {
        Ok(())
    }
}

fn to_c_report(report: &IdentityReport) -> GzIdentityReport {
    GzIdentityReport {
        d1: report.d1,
        d2: report.d2,
        n: report.n,
        kind: match report.kind {
            IdentityKind::Dual => GzIdentityKind::Dual,
            IdentityKind::Gaps => GzIdentityKind::Gaps,
        },
        lhs: report.lhs,
        rhs: report.rhs,
        residual: report.residual,
        budget: report.budget,
        passed: report.passed,
    }
}

/// Creates a semigroup from two coprime generators, both at least 2.
///
/// # Safety
/// `out` must be a valid pointer. On `Ok` it receives a handle that must
/// eventually be released with `gz_semigroup_free`.
#[no_mangle]
pub unsafe extern "C" fn gz_semigroup_new(
    d1: u64,
    d2: u64,
    out: *mut *mut GzSemigroup,
) -> GzStatus {
    guarded(|| {
        if out.is_null() {
            return GzStatus::NullPointer;
        }
        match Semigroup2::new(d1, d2) {
            Ok(inner) => unsafe {
                write_out(out, Box::into_raw(Box::new(GzSemigroup { inner })))
            },
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a handle. Null is accepted and ignored.
///
/// # Safety
/// `handle` must be null or come from `gz_semigroup_new`, and must not be
/// used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gz_semigroup_free(handle: *mut GzSemigroup) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Writes the Frobenius number (largest gap).
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_frobenius(handle: *const GzSemigroup, out: *mut u64) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        match u64::try_from(s.frobenius()) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(_) => GzStatus::Overflow,
        }
    })
}

/// Writes the conductor (Frobenius number plus one).
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_conductor(handle: *const GzSemigroup, out: *mut u64) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        match u64::try_from(s.conductor()) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(_) => GzStatus::Overflow,
        }
    })
}

/// Writes the genus (number of gaps).
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_genus(handle: *const GzSemigroup, out: *mut u64) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        unsafe { write_out(out, s.genus()) }
    })
}

/// Writes whether `x` belongs to the semigroup.
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_is_member(
    handle: *const GzSemigroup,
    x: u64,
    out: *mut bool,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        unsafe { write_out(out, s.is_member(x as u128)) }
    })
}

/// Writes the number of gaps, i.e. the length `gz_gaps` needs.
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_gap_count(handle: *const GzSemigroup, out: *mut usize) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if let Err(status) = check_enumerable(s) {
            return status;
        }
        unsafe { write_out(out, s.gaps().len()) }
    })
}

/// Copies the sorted gap list into `buffer` and writes the count to
/// `written`. Fails with `BufferTooSmall` when `capacity` is short; query
/// `gz_gap_count` first.
///
/// # Safety
/// `handle` must be a live handle; `buffer` must be valid for `capacity`
/// writes; `written` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_gaps(
    handle: *const GzSemigroup,
    buffer: *mut u64,
    capacity: usize,
    written: *mut usize,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if buffer.is_null() || written.is_null() {
            return GzStatus::NullPointer;
        }
        if let Err(status) = check_enumerable(s) {
            return status;
        }
        let gaps = s.gaps().as_slice();
        if capacity < gaps.len() {
            return GzStatus::BufferTooSmall;
        }
        for (i, &gap) in gaps.iter().enumerate() {
            let Ok(v) = u64::try_from(gap) else {
                return GzStatus::Overflow;
            };
            unsafe { buffer.add(i).write(v) };
        }
        unsafe { write_out(written, gaps.len()) }
    })
}

/// Writes the float rendering of the exact gap sum over 1/g^n (n >= 1).
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_g_minus_n_direct(
    handle: *const GzSemigroup,
    n: u32,
    out: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if n == 0 {
            return GzStatus::Domain;
        }
        if let Err(status) = check_enumerable(s) {
            return status;
        }
        unsafe { write_out(out, g_minus_n_direct(s, n).value) }
    })
}

/// Allocates the exact gap sum over 1/g^n as a NUL-terminated "p/q"
/// string. The caller owns the string and must release it with
/// `gz_string_free`.
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_g_minus_n_exact(
    handle: *const GzSemigroup,
    n: u32,
    out: *mut *mut c_char,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if n == 0 {
            return GzStatus::Domain;
        }
        if let Err(status) = check_enumerable(s) {
            return status;
        }
        let exact = g_minus_n_direct(s, n).exact.expect("direct route is exact");
        let text = gapzeta::format_ratio(&exact);
        let c = CString::new(text).expect("ratio text has no NUL");
        unsafe { write_out(out, c.into_raw()) }
    })
}

/// Writes the n = 1 gap sum evaluated by the closed finite form, which
/// needs no gap enumeration.
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_g_minus_1_finite(
    handle: *const GzSemigroup,
    out: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        unsafe { write_out(out, g_minus_1_finite(s).value) }
    })
}

/// Evaluates the Hurwitz-zeta closed form of the gap sum (n >= 2) and
/// writes the value and its certified absolute error bound.
///
/// # Safety
/// `handle` must be a live handle; `out_value` and `out_bound` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_g_minus_n_zeta(
    handle: *const GzSemigroup,
    n: u32,
    variant: GzVariant,
    out_value: *mut f64,
    out_bound: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if out_value.is_null() || out_bound.is_null() {
            return GzStatus::NullPointer;
        }
        let variant = match variant {
            GzVariant::A => ZetaVariant::A,
            GzVariant::B => ZetaVariant::B,
        };
        match g_minus_n_zeta(s, n, variant) {
            Ok(series) => {
                unsafe { out_value.write(series.value) };
                unsafe { out_bound.write(series.error_bound) };
                GzStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the complementary series over nonzero members, zeta(n) minus the
/// gap sum, with its error bound.
///
/// # Safety
/// `handle` must be a live handle; `out_value` and `out_bound` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_big_g_minus_n(
    handle: *const GzSemigroup,
    n: u32,
    out_value: *mut f64,
    out_bound: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if out_value.is_null() || out_bound.is_null() {
            return GzStatus::NullPointer;
        }
        match big_g_minus_n(s, n) {
            Ok(series) => {
                unsafe { out_value.write(series.value) };
                unsafe { out_bound.write(series.error_bound) };
                GzStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the weighted gap generating function: the sum of z^g / g^n over
/// gaps, for z in [0, 1].
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_psi_n(
    handle: *const GzSemigroup,
    n: u32,
    z: f64,
    out: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if let Err(status) = check_enumerable(s) {
            return status;
        }
        match psi_n(s, n, z) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the same function evaluated by the three-series rearrangement,
/// which needs no gap enumeration; z must lie in [0, 1).
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_psi_n_series_form(
    handle: *const GzSemigroup,
    n: u32,
    z: f64,
    out: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        match psi_n_series_form_auto(s, n, z) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the Hilbert series of the semigroup at z in [0, 1).
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_hilbert_series(
    handle: *const GzSemigroup,
    z: f64,
    out: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        match s.hilbert_series(z) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of(&e),
        }
    })
}

/// Writes the gap generating function, the sum of z^g over gaps, at z in
/// [0, 1].
///
/// # Safety
/// `handle` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_gap_generating_function(
    handle: *const GzSemigroup,
    z: f64,
    out: *mut f64,
) -> GzStatus {
    guarded(|| {
        let Some(s) = (unsafe { deref(handle) }) else {
            return GzStatus::NullPointer;
        };
        if let Err(status) = check_enumerable(s) {
            return status;
        }
        match s.gap_generating_function(z) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of(&e),
        }
    })
}

/// Evaluates the Hurwitz zeta function at integer exponent n >= 2 and
/// q > 0, writing the value and its certified absolute error bound.
///
/// # Safety
/// `out_value` and `out_bound` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_hurwitz_zeta(
    n: u32,
    q: f64,
    out_value: *mut f64,
    out_bound: *mut f64,
) -> GzStatus {
    guarded(|| {
        if out_value.is_null() || out_bound.is_null() {
            return GzStatus::NullPointer;
        }
        match hurwitz_zeta(n, q) {
            Ok(ev) => {
                unsafe { out_value.write(ev.value) };
                unsafe { out_bound.write(ev.error_bound) };
                GzStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Evaluates the Riemann zeta function at integer exponent n >= 2.
///
/// # Safety
/// `out_value` and `out_bound` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_riemann_zeta(
    n: u32,
    out_value: *mut f64,
    out_bound: *mut f64,
) -> GzStatus {
    guarded(|| {
        if out_value.is_null() || out_bound.is_null() {
            return GzStatus::NullPointer;
        }
        match riemann_zeta(n) {
            Ok(ev) => {
                unsafe { out_value.write(ev.value) };
                unsafe { out_bound.write(ev.error_bound) };
                GzStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Verifies the generator-duality identity for the pair at exponent n and
/// fills the report. A non-positive `tolerance` selects the default
/// (1e-12).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_verify_dual(
    d1: u64,
    d2: u64,
    n: u32,
    tolerance: f64,
    out: *mut GzIdentityReport,
) -> GzStatus {
    guarded(|| {
        let tolerance = match effective_tolerance(tolerance) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match verify_dual_identity(d1, d2, n, tolerance) {
            Ok(report) => unsafe { write_out(out, to_c_report(&report)) },
            Err(e) => status_of(&e),
        }
    })
}

/// Verifies the gap-sum zeta identity for the pair at exponent n and fills
/// the report. A non-positive `tolerance` selects the default (1e-12).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gz_verify_gaps(
    d1: u64,
    d2: u64,
    n: u32,
    tolerance: f64,
    out: *mut GzIdentityReport,
) -> GzStatus {
    guarded(|| {
        let tolerance = match effective_tolerance(tolerance) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let s = match Semigroup2::new(d1, d2) {
            Ok(s) => s,
            Err(e) => return status_of(&e),
        };
        if let Err(status) = check_enumerable(&s) {
            return status;
        }
        match identity_from_gaps(&s, n, tolerance) {
            Ok(report) => unsafe { write_out(out, to_c_report(&report)) },
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a string returned by this library. Null is accepted and
/// ignored.
///
/// # Safety
/// `ptr` must be null or a string obtained from this library, and must not
/// be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gz_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(unsafe { CString::from_raw(ptr) });
    }
}

/// Returns the library version as a static NUL-terminated string. Do not
/// free it.
#[no_mangle]
pub extern "C" fn gz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns a static human-readable name for a status code. Do not free it.
#[no_mangle]
pub extern "C" fn gz_status_name(status: GzStatus) -> *const c_char {
    let name: &'static str = match status {
        GzStatus::Ok => "ok\0",
        GzStatus::NullPointer => "null pointer\0",
        GzStatus::GeneratorTooSmall => "generator too small\0",
        GzStatus::NotCoprime => "generators not coprime\0",
        GzStatus::Domain => "argument outside domain\0",
        GzStatus::Overflow => "result does not fit output type\0",
        GzStatus::BufferTooSmall => "buffer too small\0",
        GzStatus::TooLarge => "gap set exceeds enumeration cap\0",
        GzStatus::Internal => "internal error\0",
    };
    name.as_ptr() as *const c_char
}
