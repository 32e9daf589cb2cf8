//! C ABI over the simplex-sampling crate.
//!
//! Callers hold an opaque [`SxsSampler`] handle, draw points into caller
//! owned buffers (row-major, `n` doubles per point) and read the exact draw
//! and fractional-power counters. All functions return an [`SxsStatus`];
//! out-parameters are written only on `SXS_STATUS_OK`.

use std::ffi::c_char;

use simplex_sampling::{
    inverse_cdf, marginal_cdf, marginal_pdf, Error, MarginalModel, SamplerMethod, UniformSource,
    XoshiroSource,
};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SxsStatus {
    Ok = 0,
    NullPointer = 1,
    /// A precondition on the arguments was violated.
    InvalidArgument = 2,
    /// The rejection sampler ran out of trials.
    BudgetExceeded = 3,
    /// The output buffer cannot hold the requested points.
    BufferTooSmall = 4,
}

/// Generator selector; mirrors the library's sampler set.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SxsMethod {
    StickBreaking = 0,
    RejectionCube = 1,
    SortedSpacings = 2,
    ExponentialNormalize = 3,
    /// Negative control; not uniform on the simplex.
    RescaledUniforms = 4,
}

/// Exponent family for the sequential sampler.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SxsModel {
    /// Step-dependent exponents; exactly uniform output.
    Corrected = 0,
    /// Constant-exponent variant kept as a negative control.
    PaperLiteral = 1,
}

impl From<SxsMethod> for SamplerMethod {
    fn from(m: SxsMethod) -> Self {
        match m {
            SxsMethod::StickBreaking => SamplerMethod::StickBreaking,
            SxsMethod::RejectionCube => SamplerMethod::RejectionCube,
            SxsMethod::SortedSpacings => SamplerMethod::SortedSpacings,
            SxsMethod::ExponentialNormalize => SamplerMethod::ExponentialNormalize,
            SxsMethod::RescaledUniforms => SamplerMethod::RescaledUniforms,
        }
    }
}

impl From<SxsModel> for MarginalModel {
    fn from(m: SxsModel) -> Self {
        match m {
            SxsModel::Corrected => MarginalModel::Corrected,
            SxsModel::PaperLiteral => MarginalModel::PaperLiteral,
        }
    }
}

fn status_of(err: &Error) -> SxsStatus {
    match err {
        Error::RejectionBudgetExhausted { .. } => SxsStatus::BudgetExceeded,
        _ => SxsStatus::InvalidArgument,
    }
}

/// Opaque sampler: a method/model/dimension triple bound to a seeded
/// deterministic stream.
pub struct SxsSampler {
    method: SamplerMethod,
    model: MarginalModel,
    n: usize,
    source: XoshiroSource,
    fractional_powers: u64,
}

/// Create a sampler. On success writes the new handle to `out_sampler`;
/// release it with `sxs_sampler_free`.
///
/// # Safety
/// `out_sampler` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn sxs_sampler_new(
    method: SxsMethod,
    model: SxsModel,
    n: usize,
    seed: u64,
    out_sampler: *mut *mut SxsSampler,
) -> SxsStatus {
    if out_sampler.is_null() {
        return SxsStatus::NullPointer;
    }
    if n < 2 {
        return SxsStatus::InvalidArgument;
    }
    let sampler = Box::new(SxsSampler {
        method: method.into(),
        model: model.into(),
        n,
        source: XoshiroSource::new(seed),
        fractional_powers: 0,
    });
    unsafe { out_sampler.write(Box::into_raw(sampler)) };
    SxsStatus::Ok
}

/// Destroy a sampler created by `sxs_sampler_new`. A null handle is a no-op.
///
/// # Safety
/// `sampler` must be null or a handle from `sxs_sampler_new` that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn sxs_sampler_free(sampler: *mut SxsSampler) {
    if !sampler.is_null() {
        drop(unsafe { Box::from_raw(sampler) });
    }
}

/// Dimension of the points this sampler produces; 0 for a null handle.
///
/// # Safety
/// `sampler` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sxs_sampler_dimension(sampler: *const SxsSampler) -> usize {
    unsafe { sampler.as_ref() }.map_or(0, |s| s.n)
}

/// Uniform draws consumed so far; 0 for a null handle.
///
/// # Safety
/// `sampler` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sxs_sampler_draw_count(sampler: *const SxsSampler) -> u64 {
    unsafe { sampler.as_ref() }.map_or(0, |s| s.source.draw_count())
}

/// Fractional-power evaluations performed so far; 0 for a null handle.
///
/// # Safety
/// `sampler` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sxs_sampler_power_count(sampler: *const SxsSampler) -> u64 {
    unsafe { sampler.as_ref() }.map_or(0, |s| s.fractional_powers)
}

/// Draw `n_points` points into `out`, row-major (`n` doubles per point).
/// `out_len` is the capacity of `out` in doubles and must be at least
/// `n_points * n`.
///
/// # Safety
/// `sampler` must be a live handle and `out` must point to at least
/// `out_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sxs_sampler_fill(
    sampler: *mut SxsSampler,
    out: *mut f64,
    out_len: usize,
    n_points: usize,
) -> SxsStatus {
    let Some(s) = (unsafe { sampler.as_mut() }) else {
        return SxsStatus::NullPointer;
    };
    if out.is_null() {
        return SxsStatus::NullPointer;
    }
    let needed = match n_points.checked_mul(s.n) {
        Some(len) => len,
        None => return SxsStatus::BufferTooSmall,
    };
    if out_len < needed {
        return SxsStatus::BufferTooSmall;
    }
    let buffer = unsafe { std::slice::from_raw_parts_mut(out, needed) };
    for (i, chunk) in buffer.chunks_exact_mut(s.n).enumerate() {
        debug_assert!(i < n_points);
        match s
            .method
            .sample_counted(s.n, s.model, &mut s.source, &mut s.fractional_powers)
        {
            Ok(point) => chunk.copy_from_slice(point.coords()),
            Err(err) => return status_of(&err),
        }
    }
    SxsStatus::Ok
}

/// Density of the step-`j` marginal at `x` given remaining mass `r`.
///
/// # Safety
/// `out` must be a valid pointer to a writable double.
#[no_mangle]
pub unsafe extern "C" fn sxs_marginal_pdf(
    model: SxsModel,
    n: usize,
    j: usize,
    r: f64,
    x: f64,
    out: *mut f64,
) -> SxsStatus {
    if out.is_null() {
        return SxsStatus::NullPointer;
    }
    match marginal_pdf(model.into(), n, j, r, x) {
        Ok(v) => {
            unsafe { out.write(v) };
            SxsStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Cumulative distribution of the step-`j` marginal.
///
/// # Safety
/// `out` must be a valid pointer to a writable double.
#[no_mangle]
pub unsafe extern "C" fn sxs_marginal_cdf(
    model: SxsModel,
    n: usize,
    j: usize,
    r: f64,
    x: f64,
    out: *mut f64,
) -> SxsStatus {
    if out.is_null() {
        return SxsStatus::NullPointer;
    }
    match marginal_cdf(model.into(), n, j, r, x) {
        Ok(v) => {
            unsafe { out.write(v) };
            SxsStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Inverse CDF of the step-`j` marginal at `xi` in `[0, 1)`.
///
/// # Safety
/// `out` must be a valid pointer to a writable double.
#[no_mangle]
pub unsafe extern "C" fn sxs_inverse_cdf(
    model: SxsModel,
    n: usize,
    j: usize,
    r: f64,
    xi: f64,
    out: *mut f64,
) -> SxsStatus {
    if out.is_null() {
        return SxsStatus::NullPointer;
    }
    match inverse_cdf(model.into(), n, j, r, xi) {
        Ok(v) => {
            unsafe { out.write(v) };
            SxsStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn sxs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
